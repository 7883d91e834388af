#pragma once

#include <cstdint>

#include "hvkit/solution_set.hpp"

namespace hvkit {

struct McConfig {
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
};

// Monte Carlo hypervolume estimate. The set is shifted and cleaned against
// ref, a bounding box [0, u] with u_i = max_j y_ij is sampled uniformly, and
// the dominated fraction is scaled by the box volume. Sampling is chunked
// with one derived stream per chunk, so the estimate depends only on
// (set, ref, cfg) and never on scheduling.
double estimate_hv(const SolutionSet& set, const Vec& ref, const McConfig& cfg);

}  // namespace hvkit
