#include "hvkit/solution_set.hpp"

#include <cmath>
#include <stdexcept>

namespace hvkit {

SolutionSet SolutionSet::from_columns(const std::vector<Vec>& cols) {
    SolutionSet s;
    for (const auto& c : cols) s.push_column(c);
    return s;
}

void SolutionSet::push_column(const Vec& y) {
    if (n_ == 0 && m_ == 0) {
        m_ = static_cast<int>(y.size());
    }
    if (static_cast<int>(y.size()) != m_) {
        throw std::invalid_argument("push_column: column has " +
                                    std::to_string(y.size()) + " entries, set has M=" +
                                    std::to_string(m_));
    }
    data_.insert(data_.end(), y.begin(), y.end());
    ++n_;
}

bool SolutionSet::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

namespace {

bool is_permutation_of_iota(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

SolutionSet group_act(const GroupElement& g, const SolutionSet& set) {
    const int m = set.m();
    const int n = set.n();
    if (!is_permutation_of_iota(g.tau, m)) {
        throw std::invalid_argument("group_act: tau is not a permutation of 0.." +
                                    std::to_string(m - 1));
    }
    if (!is_permutation_of_iota(g.sigma, n)) {
        throw std::invalid_argument("group_act: sigma is not a permutation of 0.." +
                                    std::to_string(n - 1));
    }
    if (static_cast<int>(g.scale.size()) != m) {
        throw std::invalid_argument("group_act: scale size mismatch");
    }
    for (double c : g.scale) {
        if (!(c > 0.0)) throw std::invalid_argument("group_act: scales must be positive");
    }
    SolutionSet out(m, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            out(i, j) = g.scale[i] * set(g.tau[i], g.sigma[j]);
        }
    }
    return out;
}

GroupElement group_product(const GroupElement& g2, const GroupElement& g1) {
    const int m = static_cast<int>(g2.tau.size());
    const int n = static_cast<int>(g2.sigma.size());
    if (static_cast<int>(g1.tau.size()) != m || static_cast<int>(g1.sigma.size()) != n) {
        throw std::invalid_argument("group_product: mismatched element sizes");
    }
    GroupElement out;
    out.scale.resize(m);
    out.tau.resize(m);
    out.sigma.resize(n);
    for (int i = 0; i < m; ++i) {
        out.scale[i] = g2.scale[i] * g1.scale[g2.tau[i]];
        out.tau[i] = g1.tau[g2.tau[i]];
    }
    for (int j = 0; j < n; ++j) out.sigma[j] = g1.sigma[g2.sigma[j]];
    return out;
}

SolutionSet pad_to_dim(const SolutionSet& set, int target_m) {
    if (target_m < set.m()) {
        throw std::invalid_argument("pad_to_dim: target " + std::to_string(target_m) +
                                    " below current M=" + std::to_string(set.m()));
    }
    for (double v : set.data()) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("pad_to_dim: entries must lie in [0, 1]");
        }
    }
    SolutionSet out(target_m, set.n());
    for (int j = 0; j < set.n(); ++j) {
        for (int i = 0; i < set.m(); ++i) out(i, j) = set(i, j);
        for (int i = set.m(); i < target_m; ++i) out(i, j) = 1.0;
    }
    return out;
}

}  // namespace hvkit
