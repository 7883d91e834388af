#include "hvkit/dataset.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "hvkit/binio.hpp"
#include "hvkit/hv_exact.hpp"

namespace hvkit {

namespace {
constexpr int kCloudSize = 1000;
constexpr int kMaxResampleRounds = 100;
constexpr int kMaxRecordN = 100;
}  // namespace

TrainingRecord gen_solution_set(int m, Rng& rng, int* resample_rounds) {
    if (m < 2 || m > 10) {
        throw std::invalid_argument("gen_solution_set: M must be in [2, 10]");
    }
    const int n = static_cast<int>(rng.uniform_int(1, kMaxRecordN));

    int rounds = 0;
    for (;;) {
        SolutionSet cloud(m, kCloudSize);
        for (int j = 0; j < kCloudSize; ++j) {
            for (int i = 0; i < m; ++i) cloud(i, j) = rng.uniform01();
        }
        const auto fronts = non_dominated_sort(cloud);
        std::vector<int> qualifying;
        for (int f = 0; f < static_cast<int>(fronts.size()); ++f) {
            if (static_cast<int>(fronts[f].size()) >= n) qualifying.push_back(f);
        }
        if (qualifying.empty()) {
            if (++rounds > kMaxResampleRounds) {
                throw std::runtime_error(
                    "gen_solution_set: no front with " + std::to_string(n) +
                    " members after " + std::to_string(kMaxResampleRounds) +
                    " clouds (M=" + std::to_string(m) +
                    "); the recipe assumes such fronts exist");
            }
            continue;
        }
        if (resample_rounds) *resample_rounds = rounds;

        const int f = qualifying[rng.uniform_below(qualifying.size())];
        std::vector<int> members = fronts[f];
        // Partial Fisher-Yates: the first n entries are a uniform
        // without-replacement draw.
        for (int k = 0; k < n; ++k) {
            const std::size_t j = k + rng.uniform_below(members.size() - k);
            std::swap(members[k], members[j]);
        }
        TrainingRecord rec;
        SolutionSet chosen(m, n);
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < m; ++i) chosen(i, k) = cloud(i, members[k]);
        }
        rec.set = std::move(chosen);
        rec.hv = exact_hv(rec.set, Vec(m, 0.0));
        return rec;
    }
}

void save_dataset(const Dataset& ds, const std::string& path,
                  const std::vector<std::string>& manifest_lines) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_dataset: cannot open " + path);
    os.write("DHVD", 4);
    write_u32(os, 1);
    write_u32(os, static_cast<std::uint32_t>(ds.m));
    write_u64(os, ds.records.size());
    for (const TrainingRecord& rec : ds.records) {
        if (rec.set.m() != ds.m) {
            throw std::invalid_argument("save_dataset: record dimension mismatch");
        }
        write_u32(os, static_cast<std::uint32_t>(rec.set.n()));
        for (int j = 0; j < rec.set.n(); ++j) {
            for (int i = 0; i < ds.m; ++i) write_f64(os, rec.set(i, j));
        }
        write_f64(os, rec.hv);
    }
    if (!os) throw std::runtime_error("save_dataset: write failed for " + path);

    std::ofstream man(path + ".manifest");
    if (!man) throw std::runtime_error("save_dataset: cannot open " + path + ".manifest");
    man << "hvkit dataset manifest\n";
    for (const std::string& line : manifest_lines) man << line << "\n";
}

Dataset load_dataset(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_dataset: cannot open " + path);
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "DHVD", 4) != 0) {
        throw std::runtime_error("load_dataset: " + path + " is not a dataset file");
    }
    const std::uint32_t version = read_u32(is, "version");
    if (version != 1) {
        throw std::runtime_error("load_dataset: unsupported version " +
                                 std::to_string(version) + " in " + path);
    }
    Dataset ds;
    const std::uint32_t m = read_u32(is, "M");
    if (m < 1 || m > 32) {
        throw std::runtime_error("load_dataset: implausible M in " + path);
    }
    ds.m = static_cast<int>(m);
    const std::uint64_t count = read_u64(is, "count");
    ds.records.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        const std::uint32_t n = read_u32(is, "record size");
        if (n < 1 || n > 1000000) {
            throw std::runtime_error("load_dataset: implausible record size in " + path);
        }
        TrainingRecord rec;
        SolutionSet set(ds.m, static_cast<int>(n));
        for (std::uint32_t j = 0; j < n; ++j) {
            for (int i = 0; i < ds.m; ++i) {
                set(i, static_cast<int>(j)) = read_f64(is, "objective value");
            }
        }
        rec.set = std::move(set);
        rec.hv = read_f64(is, "hypervolume");
        if (!std::isfinite(rec.hv) || rec.hv < 0.0) {
            throw std::runtime_error("load_dataset: invalid hypervolume in " + path);
        }
        ds.records.push_back(std::move(rec));
    }
    is.peek();
    if (!is.eof()) {
        throw std::runtime_error("load_dataset: trailing bytes in " + path);
    }
    return ds;
}

void gen_dataset(int m, std::uint64_t count, std::uint64_t seed,
                 const std::string& path) {
    Dataset ds;
    ds.m = m;
    ds.records.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        Rng rng = Rng::stream(seed, k);
        ds.records.push_back(gen_solution_set(m, rng));
    }
    save_dataset(ds, path,
                 {"generator=hvkit-1", "m=" + std::to_string(m),
                  "count=" + std::to_string(count), "seed=" + std::to_string(seed)});
}

Dataset pad_dataset(const std::vector<Dataset>& inputs) {
    constexpr int kTarget = 10;
    Dataset out;
    out.m = kTarget;
    for (const Dataset& ds : inputs) {
        if (ds.m < 2 || ds.m > kTarget) {
            throw std::invalid_argument("pad_dataset: inputs must have 2 <= M <= 10");
        }
        for (const TrainingRecord& rec : ds.records) {
            TrainingRecord padded;
            padded.set = pad_to_dim(rec.set, kTarget);
            padded.hv = rec.hv;
            out.records.push_back(std::move(padded));
        }
    }
    return out;
}

}  // namespace hvkit
