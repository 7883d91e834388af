#pragma once

#include "hvkit/hv_mc.hpp"
#include "hvkit/net.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit {

// A pure scorer for maximization solution sets against a fixed reference
// point. Same set in, same score out, for every kind.
class HvBackend {
public:
    enum class Kind { Exact, MonteCarlo, Deep };

    static HvBackend exact(Vec reference);
    static HvBackend monte_carlo(Vec reference, McConfig cfg);
    static HvBackend deep(Vec reference, NetworkWeights weights);

    double score(const SolutionSet& set) const;

    Kind kind() const { return kind_; }
    const Vec& reference() const { return reference_; }
    const char* kind_name() const;

    // How often the deep scorer saw a set above the trained size cap. The
    // first breach also logs one stderr warning.
    long n_cap_breaches() const { return n_cap_breaches_; }

private:
    explicit HvBackend(Kind kind, Vec reference) : kind_(kind), reference_(std::move(reference)) {}

    Kind kind_;
    Vec reference_;
    McConfig mc_;
    NetworkWeights net_;
    mutable long n_cap_breaches_ = 0;
};

}  // namespace hvkit
