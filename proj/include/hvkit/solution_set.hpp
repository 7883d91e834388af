#pragma once

#include <cstddef>
#include <vector>

namespace hvkit {

using Vec = std::vector<double>;

// A set of N solutions in M-objective space, column-major: column j is one
// solution, stored contiguously. Maximization convention throughout; the
// reference point is kept separately by callers.
class SolutionSet {
public:
    SolutionSet() = default;
    SolutionSet(int m, int n) : m_(m), n_(n), data_(static_cast<std::size_t>(m) * n, 0.0) {}

    static SolutionSet from_columns(const std::vector<Vec>& cols);

    int m() const { return m_; }
    int n() const { return n_; }
    bool empty() const { return n_ == 0; }

    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * m_ + i]; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * m_ + i]; }

    const double* col(int j) const { return data_.data() + static_cast<std::size_t>(j) * m_; }
    double* col(int j) { return data_.data() + static_cast<std::size_t>(j) * m_; }

    Vec column(int j) const {
        return Vec(col(j), col(j) + m_);
    }

    // Appends one solution. The first push fixes M.
    void push_column(const Vec& y);

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool all_finite() const;

    bool operator==(const SolutionSet& o) const {
        return m_ == o.m_ && n_ == o.n_ && data_ == o.data_;
    }

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<double> data_;
};

// Element of the symmetry group: positive per-objective scales c, an
// objective permutation tau and a solution permutation sigma. Acting on a
// set: out(i, j) = c[i] * in(tau[i], sigma[j]).
struct GroupElement {
    Vec scale;                 // size M, strictly positive
    std::vector<int> tau;      // size M, permutation of 0..M-1
    std::vector<int> sigma;    // size N, permutation of 0..N-1
};

SolutionSet group_act(const GroupElement& g, const SolutionSet& set);

// Composition satisfying group_act(g2, group_act(g1, y)) == group_act(product, y):
// scale[i] = c2[i] * c1[tau2[i]], tau[i] = tau1[tau2[i]], sigma[j] = sigma1[sigma2[j]].
GroupElement group_product(const GroupElement& g2, const GroupElement& g1);

// Appends rows of ones until the set has target_m objectives. Requires
// target_m >= m and, for the hypervolume to be preserved, entries in [0, 1]
// with reference 0; entries outside [0, 1] are a contract violation.
SolutionSet pad_to_dim(const SolutionSet& set, int target_m);

}  // namespace hvkit
