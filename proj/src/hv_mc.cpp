#include "hvkit/hv_mc.hpp"

#include <algorithm>
#include <stdexcept>

#include "hvkit/hv_exact.hpp"
#include "hvkit/rng.hpp"

namespace hvkit {

namespace {
constexpr std::uint64_t kChunk = 4096;
}

double estimate_hv(const SolutionSet& set, const Vec& ref, const McConfig& cfg) {
    if (cfg.samples == 0) {
        throw std::invalid_argument("estimate_hv: samples must be positive");
    }
    const SolutionSet clean = shift_and_clean(set, ref);
    const int m = clean.m();
    const int n = clean.n();
    if (n == 0) return 0.0;

    Vec box(m, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) box[i] = std::max(box[i], clean(i, j));
    }
    double box_vol = 1.0;
    for (double u : box) box_vol *= u;
    if (box_vol == 0.0) return 0.0;

    std::uint64_t hits = 0;
    Vec p(m);
    const std::uint64_t chunks = (cfg.samples + kChunk - 1) / kChunk;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        Rng rng = Rng::stream(cfg.seed, c);
        const std::uint64_t lo = c * kChunk;
        const std::uint64_t hi = std::min(cfg.samples, lo + kChunk);
        for (std::uint64_t s = lo; s < hi; ++s) {
            for (int i = 0; i < m; ++i) p[i] = box[i] * rng.uniform01();
            for (int j = 0; j < n; ++j) {
                const double* y = clean.col(j);
                bool inside = true;
                for (int i = 0; i < m; ++i) {
                    if (p[i] > y[i]) {
                        inside = false;
                        break;
                    }
                }
                if (inside) {
                    ++hits;
                    break;
                }
            }
        }
    }
    return box_vol * (static_cast<double>(hits) / static_cast<double>(cfg.samples));
}

}  // namespace hvkit
