#include "hvkit/moea.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hvkit/hv_exact.hpp"

namespace hvkit {

namespace {

constexpr double kSbxEta = 15.0;
constexpr double kSbxPairProb = 0.9;
constexpr double kMutEta = 20.0;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

SolutionSet select_columns(const SolutionSet& s, const std::vector<int>& idx) {
    SolutionSet out(s.m(), static_cast<int>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) {
        for (int i = 0; i < s.m(); ++i) out(i, static_cast<int>(k)) = s(i, idx[k]);
    }
    return out;
}

// Front index of every column, from the fronts partition.
std::vector<int> ranks_of(const std::vector<std::vector<int>>& fronts, int n) {
    std::vector<int> rank(n, -1);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        for (int i : fronts[f]) rank[i] = static_cast<int>(f);
    }
    return rank;
}

int tournament(const std::vector<int>& rank, Rng& rng) {
    const int mu = static_cast<int>(rank.size());
    const int a = static_cast<int>(rng.uniform_below(mu));
    const int b = static_cast<int>(rng.uniform_below(mu));
    if (rank[a] < rank[b]) return a;
    if (rank[b] < rank[a]) return b;
    return rng.uniform_below(2) == 0 ? a : b;
}

// mu offspring from the parent population, evaluated. Draw order per pair:
// two tournaments, crossover, then each child's mutation.
Population make_offspring(const Population& pop, const Problem& problem,
                          const std::vector<int>& rank, Rng& rng) {
    const int mu = pop.size();
    Population off;
    off.objectives = SolutionSet(problem.m, 0);
    auto emit = [&](Vec child) {
        polynomial_mutation(child, rng);
        off.objectives.push_column(dtlz_eval(problem, child));
        off.genomes.push_back(std::move(child));
    };
    while (static_cast<int>(off.genomes.size()) < mu) {
        const Vec& p1 = pop.genomes[tournament(rank, rng)];
        const Vec& p2 = pop.genomes[tournament(rank, rng)];
        auto [c1, c2] = sbx_crossover(p1, p2, rng);
        emit(std::move(c1));
        if (static_cast<int>(off.genomes.size()) < mu) emit(std::move(c2));
    }
    return off;
}

Population take_columns(const Population& a, const Population& b,
                        const std::vector<int>& chosen) {
    Population out;
    out.objectives = SolutionSet(a.objectives.m(), 0);
    const int mu = a.size();
    for (int j : chosen) {
        const Population& src = j < mu ? a : b;
        const int k = j < mu ? j : j - mu;
        out.genomes.push_back(src.genomes[k]);
        out.objectives.push_column(src.objectives.column(k));
    }
    return out;
}

// Shared (mu+mu) survival skeleton: fill front by front, truncate the front
// that overflows with `cut`, which maps (front member indices, keep count)
// to the kept subset.
template <typename Cut>
std::vector<int> survive(const SolutionSet& maxi_union, int mu, Cut cut) {
    const auto fronts = non_dominated_sort(maxi_union);
    std::vector<int> chosen;
    chosen.reserve(mu);
    for (const std::vector<int>& front : fronts) {
        const int room = mu - static_cast<int>(chosen.size());
        if (room <= 0) break;
        if (static_cast<int>(front.size()) <= room) {
            chosen.insert(chosen.end(), front.begin(), front.end());
            continue;
        }
        const std::vector<int> kept = cut(front, room);
        chosen.insert(chosen.end(), kept.begin(), kept.end());
        break;
    }
    return chosen;
}

SolutionSet union_maximization(const Population& pop, const Population& off) {
    SolutionSet union_min = pop.objectives;
    for (int j = 0; j < off.objectives.n(); ++j) {
        union_min.push_column(off.objectives.column(j));
    }
    return negate_columns(union_min);
}

}  // namespace

Population init_population(const Problem& p, int mu, Rng& rng) {
    if (mu < 1) throw std::invalid_argument("init_population: population must be positive");
    Population pop;
    pop.objectives = SolutionSet(p.m, 0);
    for (int j = 0; j < mu; ++j) {
        Vec x(p.d);
        for (double& v : x) v = rng.uniform01();
        pop.objectives.push_column(dtlz_eval(p, x));
        pop.genomes.push_back(std::move(x));
    }
    return pop;
}

std::pair<Vec, Vec> sbx_crossover(const Vec& a, const Vec& b, Rng& rng) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("sbx_crossover: parent length mismatch");
    }
    Vec c1 = a, c2 = b;
    if (rng.uniform01() > kSbxPairProb) return {c1, c2};
    const double exponent = 1.0 / (kSbxEta + 1.0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (rng.uniform01() > 0.5) continue;
        double y1 = a[j], y2 = b[j];
        if (std::abs(y1 - y2) < 1e-14) continue;
        if (y1 > y2) std::swap(y1, y2);
        const double u = rng.uniform01();
        const double span = y2 - y1;

        // Boundary-aware spread factors, one child biased toward each side.
        double beta = 1.0 + 2.0 * y1 / span;
        double alpha = 2.0 - std::pow(beta, -(kSbxEta + 1.0));
        double betaq = u <= 1.0 / alpha ? std::pow(u * alpha, exponent)
                                        : std::pow(1.0 / (2.0 - u * alpha), exponent);
        double lo = clamp01(0.5 * (y1 + y2 - betaq * span));

        beta = 1.0 + 2.0 * (1.0 - y2) / span;
        alpha = 2.0 - std::pow(beta, -(kSbxEta + 1.0));
        betaq = u <= 1.0 / alpha ? std::pow(u * alpha, exponent)
                                 : std::pow(1.0 / (2.0 - u * alpha), exponent);
        double hi = clamp01(0.5 * (y1 + y2 + betaq * span));

        if (rng.uniform01() <= 0.5) std::swap(lo, hi);
        c1[j] = lo;
        c2[j] = hi;
    }
    return {c1, c2};
}

void polynomial_mutation(Vec& x, Rng& rng) {
    if (x.empty()) return;
    const double prob = 1.0 / static_cast<double>(x.size());
    const double mut_pow = 1.0 / (kMutEta + 1.0);
    for (double& yref : x) {
        if (rng.uniform01() > prob) continue;
        const double y = yref;
        const double u = rng.uniform01();
        double deltaq;
        if (u <= 0.5) {
            const double xy = 1.0 - y;
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, kMutEta + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double xy = y;
            const double val =
                2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, kMutEta + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        yref = clamp01(y + deltaq);
    }
}

std::vector<int> truncate_front(const SolutionSet& front, const HvBackend& backend,
                                int keep) {
    if (keep < 0 || keep > front.n()) {
        throw std::invalid_argument("truncate_front: keep out of range");
    }
    std::vector<int> cur(front.n());
    for (int j = 0; j < front.n(); ++j) cur[j] = j;

    while (static_cast<int>(cur.size()) > keep) {
        // The least contributor is the member whose leave-one-out score is
        // largest; the shared minuend score(cur) cancels out of the argmin.
        std::vector<int> rest(cur.size() - 1);
        int worst = 0;
        double worst_score = -std::numeric_limits<double>::infinity();
        for (std::size_t drop = 0; drop < cur.size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t k = 0; k < cur.size(); ++k) {
                if (k != drop) rest[w++] = cur[k];
            }
            const double s = backend.score(select_columns(front, rest));
            if (s > worst_score) {  // strict: ties keep the earliest, lowest index
                worst_score = s;
                worst = static_cast<int>(drop);
            }
        }
        cur.erase(cur.begin() + worst);
    }
    return cur;
}

Vec crowding_distances(const SolutionSet& front) {
    const int n = front.n();
    Vec dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        return dist;
    }
    std::vector<int> order(n);
    for (int i = 0; i < front.m(); ++i) {
        for (int j = 0; j < n; ++j) order[j] = j;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (front(i, a) != front(i, b)) return front(i, a) < front(i, b);
            return a < b;
        });
        dist[order.front()] = std::numeric_limits<double>::infinity();
        dist[order.back()] = std::numeric_limits<double>::infinity();
        const double range = front(i, order.back()) - front(i, order.front());
        if (range <= 0.0) continue;
        for (int k = 1; k < n - 1; ++k) {
            dist[order[k]] += (front(i, order[k + 1]) - front(i, order[k - 1])) / range;
        }
    }
    return dist;
}

std::vector<int> survivors_sms(const SolutionSet& union_maxi, int mu,
                               const HvBackend& backend) {
    return survive(union_maxi, mu, [&](const std::vector<int>& front, int room) {
        const SolutionSet fs = select_columns(union_maxi, front);
        std::vector<int> kept;
        for (int k : truncate_front(fs, backend, room)) kept.push_back(front[k]);
        return kept;
    });
}

std::vector<int> survivors_nsga2(const SolutionSet& union_maxi, int mu) {
    return survive(union_maxi, mu, [&](const std::vector<int>& front, int room) {
        const Vec crowd = crowding_distances(select_columns(union_maxi, front));
        std::vector<int> pos(front.size());
        for (std::size_t k = 0; k < pos.size(); ++k) pos[k] = static_cast<int>(k);
        std::sort(pos.begin(), pos.end(), [&](int a, int b) {
            if (crowd[a] != crowd[b]) return crowd[a] > crowd[b];
            return a < b;
        });
        std::vector<int> kept;
        for (int k = 0; k < room; ++k) kept.push_back(front[pos[k]]);
        std::sort(kept.begin(), kept.end());
        return kept;
    });
}

Population sms_emoa_step(const Population& pop, const Problem& problem,
                         const HvBackend& backend, Rng& rng) {
    const int mu = pop.size();
    if (mu < 1) throw std::invalid_argument("sms_emoa_step: empty population");
    const auto parent_fronts = non_dominated_sort(negate_columns(pop.objectives));
    const Population off =
        make_offspring(pop, problem, ranks_of(parent_fronts, mu), rng);
    const SolutionSet maxi = union_maximization(pop, off);
    return take_columns(pop, off, survivors_sms(maxi, mu, backend));
}

Population nsga2_step(const Population& pop, const Problem& problem, Rng& rng) {
    const int mu = pop.size();
    if (mu < 1) throw std::invalid_argument("nsga2_step: empty population");
    const auto parent_fronts = non_dominated_sort(negate_columns(pop.objectives));
    const Population off =
        make_offspring(pop, problem, ranks_of(parent_fronts, mu), rng);
    const SolutionSet maxi = union_maximization(pop, off);
    return take_columns(pop, off, survivors_nsga2(maxi, mu));
}

RunResult run_ea(Algorithm alg, const Problem& problem, const HvBackend& backend,
                 int generations, int pop_size, std::uint64_t seed) {
    if (pop_size < 2) throw std::invalid_argument("run_ea: population too small");
    if (generations < 0) throw std::invalid_argument("run_ea: negative generations");

    Rng rng = Rng::stream(seed, 0xEA);
    const HvBackend scorer = HvBackend::exact(maximization_reference(problem));

    RunResult result;
    auto record = [&](int gen, double wall) {
        GenerationStat st;
        st.generation = gen;
        st.evaluations = static_cast<long>(pop_size) * (gen + 1);
        st.exact_hv = scorer.score(negate_columns(result.final_pop.objectives));
        st.wall_seconds = wall;
        result.history.push_back(st);
    };

    auto t0 = std::chrono::steady_clock::now();
    result.final_pop = init_population(problem, pop_size, rng);
    record(0, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

    for (int g = 1; g <= generations; ++g) {
        t0 = std::chrono::steady_clock::now();
        try {
            result.final_pop = alg == Algorithm::SmsEmoa
                                   ? sms_emoa_step(result.final_pop, problem, backend, rng)
                                   : nsga2_step(result.final_pop, problem, rng);
        } catch (const std::exception& e) {
            throw std::runtime_error("run_ea: generation " + std::to_string(g) + ": " +
                                     e.what());
        }
        record(g, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count());
    }
    return result;
}

}  // namespace hvkit
