#include "hvkit/backend.hpp"

#include <cstdio>
#include <stdexcept>

#include "hvkit/hv_exact.hpp"

namespace hvkit {

HvBackend HvBackend::exact(Vec reference) {
    return HvBackend(Kind::Exact, std::move(reference));
}

HvBackend HvBackend::monte_carlo(Vec reference, McConfig cfg) {
    HvBackend b(Kind::MonteCarlo, std::move(reference));
    b.mc_ = cfg;
    return b;
}

HvBackend HvBackend::deep(Vec reference, NetworkWeights weights) {
    HvBackend b(Kind::Deep, std::move(reference));
    b.net_ = std::move(weights);
    return b;
}

double HvBackend::score(const SolutionSet& set) const {
    if (set.m() != static_cast<int>(reference_.size())) {
        throw std::invalid_argument("HvBackend::score: dimension mismatch");
    }
    switch (kind_) {
        case Kind::Exact:
            return exact_hv(set, reference_);
        case Kind::MonteCarlo:
            return estimate_hv(set, reference_, mc_);
        case Kind::Deep: {
            // The model expects the reference at the origin and only
            // non-dominated strictly improving columns.
            const SolutionSet shifted = shift_and_clean(set, reference_);
            ForwardDiag diag;
            const double v = forward(shifted, net_, &diag);
            if (diag.n_cap_exceeded) {
                if (n_cap_breaches_ == 0) {
                    std::fprintf(stderr,
                                 "hvkit: deep backend scoring a set of %d solutions, "
                                 "beyond the trained cap of %d; extrapolating\n",
                                 shifted.n(), kTrainedNCap);
                }
                ++n_cap_breaches_;
            }
            return v;
        }
    }
    throw std::logic_error("HvBackend::score: unreachable");
}

const char* HvBackend::kind_name() const {
    switch (kind_) {
        case Kind::Exact: return "exact";
        case Kind::MonteCarlo: return "mc";
        case Kind::Deep: return "deep";
    }
    return "?";
}

}  // namespace hvkit
