#include "hvkit/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hvkit/backend.hpp"
#include "hvkit/dataset.hpp"
#include "hvkit/hv_exact.hpp"
#include "hvkit/moea.hpp"
#include "hvkit/train.hpp"

namespace hvkit {

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(line);
    while (std::getline(ss, cur, ',')) out.push_back(trimmed(cur));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

std::uint64_t derive_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// --threads resolution: flag beats HVKIT_THREADS beats 1. The toolkit runs
// serially; the value is validated and echoed so invocation lines replay.
int threads_fallback() {
    const char* env = std::getenv("HVKIT_THREADS");
    if (!env) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
        throw CliUsageError("HVKIT_THREADS must be a positive integer, got '" +
                            std::string(env) + "'");
    }
    return static_cast<int>(v);
}

Pooling parse_pooling(const std::string& s) {
    if (s == "mean") return Pooling::Mean;
    if (s == "max") return Pooling::Max;
    if (s == "min") return Pooling::Min;
    throw CliUsageError("pooling must be mean, max, or min, got '" + s + "'");
}

NetworkWeights load_model_or_die(const std::string& path, Pooling pooling) {
    if (path.empty()) {
        throw CliUsageError("the deep backend needs --model");
    }
    try {
        NetworkWeights w = load_weights(path);
        w.pooling = pooling;
        return w;
    } catch (const std::exception& e) {
        throw CliUsageError(e.what());
    }
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

struct SeedFlag {
    std::uint64_t value = 0;
    bool given = false;

    // Commands with randomness need a replayable seed: take the flag or
    // derive one; either way it lands in the echoed invocation.
    std::uint64_t resolve() {
        if (!given) value = derive_seed();
        return value;
    }
};

void add_seed(CLI::App* cmd, SeedFlag& seed) {
    cmd->add_option("--seed", seed.value, "rng seed (derived and printed if omitted)")
        ->each([&seed](const std::string&) { seed.given = true; });
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

Dataset load_dataset_input(const std::string& path) {
    try {
        return load_dataset(path);
    } catch (const std::exception& e) {
        throw CliUsageError(e.what());
    }
}

// ---- gen-data ----------------------------------------------------------

struct GenDataOpts {
    int m = 3;
    std::uint64_t count = 0;
    SeedFlag seed;
    std::string out;
    int threads = 1;
};

int run_gen_data(GenDataOpts& o) {
    const std::uint64_t seed = o.seed.resolve();
    std::cout << join({"invocation: hvkit gen-data", "--m", std::to_string(o.m),
                       "--count", std::to_string(o.count), "--seed",
                       std::to_string(seed), "--out", o.out, "--threads",
                       std::to_string(o.threads)})
              << "\n";
    gen_dataset(o.m, o.count, seed, o.out);
    std::cout << "dataset: " << o.out << "\n";
    std::cout << "records: " << o.count << "\n";
    return 0;
}

// ---- train -------------------------------------------------------------

struct TrainOpts {
    std::string data;
    std::string out;
    std::string metrics;
    int channels = 64;
    int epochs = 20;
    int batch = 64;
    double lr = 1e-5;
    std::string pooling = "mean";
    double stop_train_mape = 0.0;
    SeedFlag seed;
    int threads = 1;
};

int run_train(TrainOpts& o) {
    TrainConfig cfg;
    cfg.channels = o.channels;
    cfg.epochs = o.epochs;
    cfg.batch = o.batch;
    cfg.lr = o.lr;
    cfg.pooling = parse_pooling(o.pooling);
    cfg.stop_train_mape = o.stop_train_mape;
    cfg.seed = o.seed.resolve();
    if (o.metrics.empty()) o.metrics = o.out + ".metrics.csv";
    std::cout << join({"invocation: hvkit train", "--data", o.data, "--out", o.out,
                       "--metrics", o.metrics, "--channels",
                       std::to_string(cfg.channels), "--epochs",
                       std::to_string(cfg.epochs), "--batch", std::to_string(cfg.batch),
                       "--lr", g17(cfg.lr), "--pooling", o.pooling,
                       "--stop-train-mape", g17(cfg.stop_train_mape), "--seed",
                       std::to_string(cfg.seed), "--threads", std::to_string(o.threads)})
              << "\n";

    const Dataset ds = load_dataset_input(o.data);
    const TrainResult result = train(cfg, ds.records);
    save_weights(result.best, o.out);
    write_metrics_csv(result.history, o.metrics);

    const SplitIndices split = make_split(ds.records.size(), cfg.seed);
    std::vector<TrainingRecord> test;
    for (int i : split.test) test.push_back(ds.records[i]);

    std::cout << "best-epoch: " << result.best_epoch << "\n";
    std::cout << "val-mape: " << g17(result.history[result.best_epoch - 1].val_mape)
              << "\n";
    std::cout << "test-mape: " << g17(evaluate(result.best, test)) << "\n";
    std::cout << "weights: " << o.out << "\n";
    std::cout << "metrics: " << o.metrics << "\n";
    return 0;
}

// ---- eval --------------------------------------------------------------

struct EvalOpts {
    std::string data;
    std::string model;
    std::string pooling = "mean";
    int threads = 1;
};

int run_eval(EvalOpts& o) {
    std::cout << join({"invocation: hvkit eval", "--data", o.data, "--model", o.model,
                       "--pooling", o.pooling, "--threads", std::to_string(o.threads)})
              << "\n";
    const NetworkWeights w = load_model_or_die(o.model, parse_pooling(o.pooling));
    const Dataset ds = load_dataset_input(o.data);
    if (ds.records.empty()) throw CliUsageError("dataset has no records");
    std::cout << "records: " << ds.records.size() << "\n";
    std::cout << "mape: " << g17(evaluate(w, ds.records)) << "\n";
    return 0;
}

// ---- hv ----------------------------------------------------------------

struct HvOpts {
    std::string input;
    std::string backend = "exact";
    std::string ref;
    std::string model;
    std::string pooling = "mean";
    long mc_samples = 10000;
    SeedFlag seed;
    int threads = 1;
};

int run_hv(HvOpts& o) {
    const SolutionSet set = read_solution_csv(o.input);
    Vec ref(set.m(), 0.0);
    if (!o.ref.empty()) {
        ref = parse_ref(o.ref);
        if (static_cast<int>(ref.size()) != set.m()) {
            throw CliUsageError("--ref has " + std::to_string(ref.size()) +
                                " entries, input has " + std::to_string(set.m()) +
                                " objectives");
        }
    }
    std::string ref_echo = g17(ref[0]);
    for (std::size_t i = 1; i < ref.size(); ++i) ref_echo += "," + g17(ref[i]);

    const bool randomized = o.backend == "mc";
    const std::uint64_t seed = randomized ? o.seed.resolve() : o.seed.value;

    std::vector<std::string> parts = {"invocation: hvkit hv",   o.input,
                                      "--backend",              o.backend,
                                      "--ref",                  ref_echo,
                                      "--mc-samples",           std::to_string(o.mc_samples),
                                      "--pooling",              o.pooling,
                                      "--threads",              std::to_string(o.threads)};
    if (randomized) {
        parts.push_back("--seed");
        parts.push_back(std::to_string(seed));
    }
    if (!o.model.empty()) {
        parts.push_back("--model");
        parts.push_back(o.model);
    }
    std::cout << join(parts) << "\n";

    double value = 0.0;
    if (o.backend == "exact") {
        value = HvBackend::exact(ref).score(set);
    } else if (o.backend == "mc") {
        if (o.mc_samples < 1) throw CliUsageError("--mc-samples must be positive");
        McConfig mc;
        mc.samples = static_cast<std::uint64_t>(o.mc_samples);
        mc.seed = seed;
        value = HvBackend::monte_carlo(ref, mc).score(set);
    } else if (o.backend == "deep") {
        const HvBackend b =
            HvBackend::deep(ref, load_model_or_die(o.model, parse_pooling(o.pooling)));
        value = b.score(set);
    } else {
        throw CliUsageError("backend must be exact, mc, or deep, got '" + o.backend +
                            "'");
    }
    std::cout << "backend: " << o.backend << "\n";
    std::cout << "solutions: " << set.n() << "\n";
    std::cout << "hv: " << g17(value) << "\n";
    return 0;
}

// ---- time-bench --------------------------------------------------------

struct TimeBenchOpts {
    int m = 3;
    int sets = 100;
    std::string backends = "exact,mc,deep";
    long mc_samples = 10000;
    int repeats = 3;
    std::string model;
    std::string pooling = "mean";
    std::string out;
    SeedFlag seed;
    int threads = 1;
};

int run_time_bench(TimeBenchOpts& o) {
    if (o.sets < 1) throw CliUsageError("--sets must be positive");
    if (o.repeats < 1) throw CliUsageError("--repeats must be positive");
    const std::uint64_t seed = o.seed.resolve();

    std::vector<std::string> backends;
    for (const std::string& tok : split_fields(o.backends)) {
        if (tok != "exact" && tok != "mc" && tok != "deep") {
            throw CliUsageError("unknown backend '" + tok + "' in --backends");
        }
        backends.push_back(tok);
    }
    if (backends.empty()) throw CliUsageError("--backends is empty");

    std::vector<std::string> parts = {"invocation: hvkit time-bench",
                                      "--m",
                                      std::to_string(o.m),
                                      "--sets",
                                      std::to_string(o.sets),
                                      "--backends",
                                      o.backends,
                                      "--mc-samples",
                                      std::to_string(o.mc_samples),
                                      "--repeats",
                                      std::to_string(o.repeats),
                                      "--pooling",
                                      o.pooling,
                                      "--out",
                                      o.out,
                                      "--seed",
                                      std::to_string(seed),
                                      "--threads",
                                      std::to_string(o.threads)};
    if (!o.model.empty()) {
        parts.push_back("--model");
        parts.push_back(o.model);
    }
    std::cout << join(parts) << "\n";

    // The benchmark population: generator-distribution sets, unit cube,
    // reference at the origin.
    std::vector<SolutionSet> sets;
    Vec targets;
    sets.reserve(o.sets);
    for (int k = 0; k < o.sets; ++k) {
        Rng rng = Rng::stream(seed, 7000 + static_cast<std::uint64_t>(k));
        TrainingRecord rec = gen_solution_set(o.m, rng);
        targets.push_back(rec.hv);
        sets.push_back(std::move(rec.set));
    }
    const Vec ref(o.m, 0.0);

    std::ofstream os(o.out);
    if (!os) throw std::runtime_error("cannot open " + o.out);
    os << "backend,M,mean_seconds,stderr_seconds,mape_vs_exact\n";

    for (const std::string& name : backends) {
        HvBackend backend = HvBackend::exact(ref);
        if (name == "mc") {
            if (o.mc_samples < 1) throw CliUsageError("--mc-samples must be positive");
            McConfig mc;
            mc.samples = static_cast<std::uint64_t>(o.mc_samples);
            mc.seed = seed;
            backend = HvBackend::monte_carlo(ref, mc);
        } else if (name == "deep") {
            backend = HvBackend::deep(
                ref, load_model_or_die(o.model, parse_pooling(o.pooling)));
        }

        Vec preds(sets.size(), 0.0);
        Vec walls;
        for (int r = 0; r < o.repeats; ++r) {
            Timer t;
            for (std::size_t k = 0; k < sets.size(); ++k) {
                preds[k] = backend.score(sets[k]);
            }
            walls.push_back(t.seconds());
        }
        double mean = 0.0;
        for (double w : walls) mean += w;
        mean /= walls.size();
        double var = 0.0;
        for (double w : walls) var += (w - mean) * (w - mean);
        const double se =
            walls.size() > 1 ? std::sqrt(var / (walls.size() - 1.0)) /
                                   std::sqrt(static_cast<double>(walls.size()))
                             : 0.0;
        os << name << ',' << o.m << ',' << g17(mean) << ',' << g17(se) << ','
           << g17(mape(preds, targets)) << "\n";
        std::cout << "bench " << name << ": mean " << g17(mean) << " s\n";
    }
    if (!os) throw std::runtime_error("write failed for " + o.out);
    std::cout << "table: " << o.out << "\n";
    return 0;
}

// ---- evolve ------------------------------------------------------------

struct EvolveOpts {
    std::string algorithm;
    std::string backend = "exact";
    std::string problem;
    int m = 3;
    int pop = 100;
    int gens = 10;
    int seeds = 5;
    long mc_samples = 10000;
    std::string model;
    std::string pooling = "mean";
    std::string out;
    SeedFlag seed;
    int threads = 1;
};

int run_evolve(EvolveOpts& o) {
    if (o.pop < 2) throw CliUsageError("--pop must be at least 2");
    if (o.gens < 0) throw CliUsageError("--gens must be non-negative");
    if (o.seeds < 1) throw CliUsageError("--seeds must be positive");
    Algorithm alg;
    if (o.algorithm == "sms-emoa") {
        alg = Algorithm::SmsEmoa;
    } else if (o.algorithm == "nsga2") {
        alg = Algorithm::Nsga2;
    } else {
        throw CliUsageError("algorithm must be sms-emoa or nsga2, got '" + o.algorithm +
                            "'");
    }
    Problem problem;
    try {
        problem = make_problem(o.problem, o.m);
    } catch (const std::exception& e) {
        throw CliUsageError(e.what());
    }
    const std::uint64_t seed = o.seed.resolve();

    const Vec ref = maximization_reference(problem);
    HvBackend backend = HvBackend::exact(ref);
    if (o.backend == "mc") {
        if (o.mc_samples < 1) throw CliUsageError("--mc-samples must be positive");
        McConfig mc;
        mc.samples = static_cast<std::uint64_t>(o.mc_samples);
        mc.seed = seed;
        backend = HvBackend::monte_carlo(ref, mc);
    } else if (o.backend == "deep") {
        backend =
            HvBackend::deep(ref, load_model_or_die(o.model, parse_pooling(o.pooling)));
    } else if (o.backend != "exact") {
        throw CliUsageError("backend must be exact, mc, or deep, got '" + o.backend +
                            "'");
    }

    std::vector<std::string> parts = {"invocation: hvkit evolve",
                                      "--algorithm",
                                      o.algorithm,
                                      "--backend",
                                      o.backend,
                                      "--problem",
                                      o.problem,
                                      "--m",
                                      std::to_string(o.m),
                                      "--pop",
                                      std::to_string(o.pop),
                                      "--gens",
                                      std::to_string(o.gens),
                                      "--seeds",
                                      std::to_string(o.seeds),
                                      "--mc-samples",
                                      std::to_string(o.mc_samples),
                                      "--pooling",
                                      o.pooling,
                                      "--out",
                                      o.out,
                                      "--seed",
                                      std::to_string(seed),
                                      "--threads",
                                      std::to_string(o.threads)};
    if (!o.model.empty()) {
        parts.push_back("--model");
        parts.push_back(o.model);
    }
    std::cout << join(parts) << "\n";

    std::ofstream os(o.out);
    if (!os) throw std::runtime_error("cannot open " + o.out);
    os << "algorithm,backend,problem,M,seed,generation,evaluations,exact_hv,"
          "wall_seconds\n";

    Vec finals;
    for (int t = 0; t < o.seeds; ++t) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        const RunResult run = run_ea(alg, problem, backend, o.gens, o.pop, trial_seed);
        for (const GenerationStat& st : run.history) {
            os << o.algorithm << ',' << o.backend << ',' << o.problem << ',' << o.m
               << ',' << trial_seed << ',' << st.generation << ',' << st.evaluations
               << ',' << g17(st.exact_hv) << ',' << g17(st.wall_seconds) << "\n";
        }
        finals.push_back(run.history.back().exact_hv);
        std::cout << "trial " << trial_seed << ": final exact hv "
                  << g17(finals.back()) << "\n";
    }

    double mean = 0.0;
    for (double f : finals) mean += f;
    mean /= finals.size();
    double var = 0.0;
    for (double f : finals) var += (f - mean) * (f - mean);
    const double two_se =
        finals.size() > 1 ? 2.0 * std::sqrt(var / (finals.size() - 1.0)) /
                                std::sqrt(static_cast<double>(finals.size()))
                          : 0.0;
    // Summary as a comment row so the data columns stay rectangular.
    os << "# summary mean_final_hv=" << g17(mean) << " two_stderr=" << g17(two_se)
       << "\n";
    if (!os) throw std::runtime_error("write failed for " + o.out);
    std::cout << "summary: mean_final_hv " << g17(mean) << " two_stderr "
              << g17(two_se) << "\n";
    std::cout << "table: " << o.out << "\n";
    return 0;
}

}  // namespace

SolutionSet read_solution_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw CliUsageError("cannot open " + path);
    SolutionSet out;
    std::string line;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        const std::vector<std::string> fields = split_fields(t);
        Vec row(fields.size());
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (!parse_double(fields[i], row[i])) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (first_content) {  // optional header
                first_content = false;
                continue;
            }
            throw CliUsageError(path + ":" + std::to_string(lineno) +
                                ": not a numeric row: '" + t + "'");
        }
        first_content = false;
        try {
            out.push_column(row);
        } catch (const std::exception& e) {
            throw CliUsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.n() == 0) throw CliUsageError(path + ": no solutions");
    return out;
}

Vec parse_ref(const std::string& spec) {
    Vec out;
    for (const std::string& f : split_fields(spec)) {
        double v;
        if (!parse_double(f, v)) {
            throw CliUsageError("--ref entry '" + f + "' is not a number");
        }
        out.push_back(v);
    }
    if (out.empty()) throw CliUsageError("--ref is empty");
    return out;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"hypervolume toolkit: exact, sampled, and learned scoring plus "
                 "benchmark campaigns"};
    app.require_subcommand(1);

    int threads;
    try {
        threads = threads_fallback();
    } catch (const CliUsageError& e) {
        std::cerr << "hvkit: " << e.what() << "\n";
        return 2;
    }

    GenDataOpts gen;
    gen.threads = threads;
    auto* cgen = app.add_subcommand("gen-data", "generate a training dataset");
    cgen->add_option("--m", gen.m, "objective count")->required()->check(CLI::Range(2, 10));
    cgen->add_option("--count", gen.count, "records to generate")
        ->required()
        ->check(CLI::PositiveNumber);
    cgen->add_option("--out", gen.out, "dataset path")->required();
    cgen->add_option("--threads", gen.threads, "worker cap")->check(CLI::PositiveNumber);
    add_seed(cgen, gen.seed);

    TrainOpts tr;
    tr.threads = threads;
    auto* ctr = app.add_subcommand("train", "fit the surrogate on a dataset");
    ctr->add_option("--data", tr.data, "dataset path")->required();
    ctr->add_option("--out", tr.out, "weights output path")->required();
    ctr->add_option("--metrics", tr.metrics, "metrics CSV path (default <out>.metrics.csv)");
    ctr->add_option("--channels", tr.channels, "hidden width")->check(CLI::PositiveNumber);
    ctr->add_option("--epochs", tr.epochs, "training epochs")->check(CLI::PositiveNumber);
    ctr->add_option("--batch", tr.batch, "mini-batch size")->check(CLI::PositiveNumber);
    ctr->add_option("--lr", tr.lr, "Adam step size");
    ctr->add_option("--pooling", tr.pooling, "mean, max, or min");
    ctr->add_option("--stop-train-mape", tr.stop_train_mape,
                    "stop once the train MAPE falls below this");
    ctr->add_option("--threads", tr.threads, "worker cap")->check(CLI::PositiveNumber);
    add_seed(ctr, tr.seed);

    EvalOpts ev;
    ev.threads = threads;
    auto* cev = app.add_subcommand("eval", "score a weights file on a dataset");
    cev->add_option("--data", ev.data, "dataset path")->required();
    cev->add_option("--model", ev.model, "weights path")->required();
    cev->add_option("--pooling", ev.pooling, "mean, max, or min");
    cev->add_option("--threads", ev.threads, "worker cap")->check(CLI::PositiveNumber);

    HvOpts hv;
    hv.threads = threads;
    auto* chv = app.add_subcommand("hv", "hypervolume of one solution-set file");
    chv->add_option("input", hv.input, "CSV solution set")->required();
    chv->add_option("--backend", hv.backend, "exact, mc, or deep");
    chv->add_option("--ref", hv.ref, "reference point, comma separated (default 0)");
    chv->add_option("--model", hv.model, "weights path for the deep backend");
    chv->add_option("--pooling", hv.pooling, "mean, max, or min");
    chv->add_option("--mc-samples", hv.mc_samples, "Monte Carlo sample count");
    chv->add_option("--threads", hv.threads, "worker cap")->check(CLI::PositiveNumber);
    add_seed(chv, hv.seed);

    TimeBenchOpts tb;
    tb.threads = threads;
    auto* ctb = app.add_subcommand("time-bench", "wall-time table across backends");
    ctb->add_option("--m", tb.m, "objective count")->required()->check(CLI::Range(2, 10));
    ctb->add_option("--sets", tb.sets, "benchmark set count");
    ctb->add_option("--backends", tb.backends, "comma list of exact, mc, deep");
    ctb->add_option("--mc-samples", tb.mc_samples, "Monte Carlo sample count");
    ctb->add_option("--repeats", tb.repeats, "timing repeats");
    ctb->add_option("--model", tb.model, "weights path for the deep backend");
    ctb->add_option("--pooling", tb.pooling, "mean, max, or min");
    ctb->add_option("--out", tb.out, "CSV output path")->required();
    ctb->add_option("--threads", tb.threads, "worker cap")->check(CLI::PositiveNumber);
    add_seed(ctb, tb.seed);

    EvolveOpts evo;
    evo.threads = threads;
    auto* cevo = app.add_subcommand("evolve", "EA campaign with per-generation table");
    cevo->add_option("--algorithm", evo.algorithm, "sms-emoa or nsga2")->required();
    cevo->add_option("--backend", evo.backend, "exact, mc, or deep");
    cevo->add_option("--problem", evo.problem, "dtlz1, dtlz2, convex-dtlz2, dtlz5, dtlz7")
        ->required();
    cevo->add_option("--m", evo.m, "objective count")->required()->check(CLI::Range(2, 10));
    cevo->add_option("--pop", evo.pop, "population size");
    cevo->add_option("--gens", evo.gens, "generations");
    cevo->add_option("--seeds", evo.seeds, "trial count");
    cevo->add_option("--mc-samples", evo.mc_samples, "Monte Carlo sample count");
    cevo->add_option("--model", evo.model, "weights path for the deep backend");
    cevo->add_option("--pooling", evo.pooling, "mean, max, or min");
    cevo->add_option("--out", evo.out, "CSV output path")->required();
    cevo->add_option("--threads", evo.threads, "worker cap")->check(CLI::PositiveNumber);
    add_seed(cevo, evo.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cgen->parsed()) return run_gen_data(gen);
        if (ctr->parsed()) return run_train(tr);
        if (cev->parsed()) return run_eval(ev);
        if (chv->parsed()) return run_hv(hv);
        if (ctb->parsed()) return run_time_bench(tb);
        if (cevo->parsed()) return run_evolve(evo);
    } catch (const CliUsageError& e) {
        std::cerr << "hvkit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "hvkit: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace hvkit
