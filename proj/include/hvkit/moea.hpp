#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hvkit/backend.hpp"
#include "hvkit/dtlz.hpp"
#include "hvkit/rng.hpp"

namespace hvkit {

enum class Algorithm { SmsEmoa, Nsga2 };

struct Population {
    std::vector<Vec> genomes;  // each in [0,1]^d
    SolutionSet objectives;    // minimization values, column j belongs to genome j

    int size() const { return static_cast<int>(genomes.size()); }
};

Population init_population(const Problem& p, int mu, Rng& rng);

// Simulated binary crossover, distribution index 15, whole-pair probability
// 0.9, per-variable probability 0.5, bounds [0,1].
std::pair<Vec, Vec> sbx_crossover(const Vec& a, const Vec& b, Rng& rng);

// Polynomial mutation, distribution index 20, per-variable probability 1/d,
// bounds [0,1].
void polynomial_mutation(Vec& x, Rng& rng);

// Greedy front truncation: repeatedly drop the member whose removal costs the
// backend score the least, ties to the lowest column index, until `keep`
// remain. Columns are maximization values. Returns kept indices, ascending.
std::vector<int> truncate_front(const SolutionSet& front, const HvBackend& backend,
                                int keep);

// Canonical crowding distances of one front: per objective, sort, give the
// two extremes infinity and interior members the normalized neighbor gap.
Vec crowding_distances(const SolutionSet& front);

// Survivor column indices of a (mu+mu) union under front-wise fill: whole
// fronts in rank order, then the overflowing front truncated by least
// backend-scored contribution (sms) or by crowding distance (nsga2).
// Columns are maximization values.
std::vector<int> survivors_sms(const SolutionSet& union_maxi, int mu,
                               const HvBackend& backend);
std::vector<int> survivors_nsga2(const SolutionSet& union_maxi, int mu);

// One (mu+mu) generation: binary-tournament parents, SBX + mutation
// offspring, non-dominated sorting of the union, front-wise fill with the
// overflowing front truncated by least backend-scored contribution.
Population sms_emoa_step(const Population& pop, const Problem& problem,
                         const HvBackend& backend, Rng& rng);

// Same variation, survival by front rank then descending crowding distance.
Population nsga2_step(const Population& pop, const Problem& problem, Rng& rng);

struct GenerationStat {
    int generation = 0;     // 0 is the initial population
    long evaluations = 0;   // cumulative objective evaluations
    double exact_hv = 0.0;  // always exact, whatever backend steers selection
    double wall_seconds = 0.0;
};

struct RunResult {
    std::vector<GenerationStat> history;  // length generations + 1
    Population final_pop;
};

// Seeded, deterministic campaign of one algorithm on one problem. The
// backend steers SMS-EMOA truncation only; the history always records the
// exact hypervolume against the problem's reference point.
RunResult run_ea(Algorithm alg, const Problem& problem, const HvBackend& backend,
                 int generations, int pop_size, std::uint64_t seed);

}  // namespace hvkit
