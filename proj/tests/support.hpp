#pragma once

// Shared helpers for the test binaries: independent hypervolume oracles and
// random input generators. The oracles deliberately avoid the algorithms
// under test: one decomposes space into cells via coordinate compression
// (exact), one counts midpoints of a regular grid (approximate, two
// resolutions give a consistency check).

#include <algorithm>
#include <cmath>
#include <vector>

#include "hvkit/rng.hpp"
#include "hvkit/solution_set.hpp"

namespace hvtest {

using hvkit::Rng;
using hvkit::SolutionSet;
using hvkit::Vec;

// Exact union-of-boxes volume by coordinate compression. A cell of the grid
// spanned by the shifted coordinates lies inside the union iff its upper
// corner is weakly dominated by some column. Cost (N+1)^M * N * M; keep N
// and M small.
inline double oracle_hv_cells(const SolutionSet& set, const Vec& ref) {
    const int m = set.m();
    const int n = set.n();
    if (n == 0) return 0.0;

    std::vector<std::vector<double>> cuts(m);
    for (int i = 0; i < m; ++i) {
        cuts[i].push_back(0.0);
        for (int j = 0; j < n; ++j) {
            const double v = set(i, j) - ref[i];
            if (v > 0.0) cuts[i].push_back(v);
        }
        std::sort(cuts[i].begin(), cuts[i].end());
        cuts[i].erase(std::unique(cuts[i].begin(), cuts[i].end()), cuts[i].end());
    }

    std::vector<int> idx(m, 0);
    double total = 0.0;
    for (;;) {
        bool valid = true;
        for (int i = 0; i < m; ++i) {
            if (idx[i] + 1 >= static_cast<int>(cuts[i].size())) {
                valid = false;
                break;
            }
        }
        if (valid) {
            double vol = 1.0;
            for (int i = 0; i < m; ++i) {
                vol *= cuts[i][idx[i] + 1] - cuts[i][idx[i]];
            }
            bool covered = false;
            for (int j = 0; j < n && !covered; ++j) {
                bool inside = true;
                for (int i = 0; i < m; ++i) {
                    if (cuts[i][idx[i] + 1] > set(i, j) - ref[i]) {
                        inside = false;
                        break;
                    }
                }
                covered = inside;
            }
            if (covered) total += vol;
        }
        int d = 0;
        while (d < m) {
            if (++idx[d] + 1 < static_cast<int>(cuts[d].size())) break;
            idx[d] = 0;
            ++d;
        }
        if (d == m) break;
    }
    return total;
}

// Midpoint grid count over the bounding box, `res` cells per axis.
inline double oracle_hv_grid(const SolutionSet& set, const Vec& ref, int res) {
    const int m = set.m();
    const int n = set.n();
    if (n == 0) return 0.0;
    Vec box(m, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) box[i] = std::max(box[i], set(i, j) - ref[i]);
    }
    double cell = 1.0;
    for (int i = 0; i < m; ++i) cell *= box[i] / res;
    if (cell == 0.0) return 0.0;

    std::vector<int> idx(m, 0);
    long covered = 0;
    for (;;) {
        Vec p(m);
        for (int i = 0; i < m; ++i) p[i] = box[i] * (idx[i] + 0.5) / res;
        for (int j = 0; j < n; ++j) {
            bool inside = true;
            for (int i = 0; i < m; ++i) {
                if (p[i] > set(i, j) - ref[i]) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                ++covered;
                break;
            }
        }
        int d = 0;
        while (d < m) {
            if (++idx[d] < res) break;
            idx[d] = 0;
            ++d;
        }
        if (d == m) break;
    }
    return covered * cell;
}

inline SolutionSet random_set(Rng& rng, int m, int n, double lo = 0.0, double hi = 1.0) {
    SolutionSet s(m, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) s(i, j) = rng.uniform_real(lo, hi);
    }
    return s;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    rng.shuffle(p);
    return p;
}

inline hvkit::GroupElement random_group_element(Rng& rng, int m, int n,
                                                double scale_lo = 0.2,
                                                double scale_hi = 5.0) {
    hvkit::GroupElement g;
    g.scale.resize(m);
    for (int i = 0; i < m; ++i) {
        g.scale[i] = std::exp(rng.uniform_real(std::log(scale_lo), std::log(scale_hi)));
    }
    g.tau = random_permutation(rng, m);
    g.sigma = random_permutation(rng, n);
    return g;
}

inline double rel_err(double got, double want) {
    const double denom = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / denom;
}

}  // namespace hvtest
