#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace hvkit {

// Order-canonical reductions. Several invariants in this codebase promise
// bit-identical results under permutations of the input (of solutions, of
// objectives, of inclusion-exclusion terms). Plain left-to-right floating
// point sums break that, so every reduction that must be permutation-proof
// sorts its terms by value first. Equal values are interchangeable, hence
// the sorted sequence, and therefore the rounding, is a function of the
// multiset only.

inline double canonical_sum_inplace(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double acc = 0.0;
    for (double t : terms) acc += t;
    return acc;
}

inline double canonical_sum(const double* data, std::size_t n,
                            std::vector<double>& scratch) {
    scratch.assign(data, data + n);
    return canonical_sum_inplace(scratch);
}

inline double canonical_mean(const double* data, std::size_t n,
                             std::vector<double>& scratch) {
    if (n == 0) return 0.0;
    return canonical_sum(data, n, scratch) / static_cast<double>(n);
}

inline double canonical_prod_inplace(std::vector<double>& factors) {
    std::sort(factors.begin(), factors.end());
    double acc = 1.0;
    for (double f : factors) acc *= f;
    return acc;
}

inline double canonical_prod(const double* data, std::size_t n,
                             std::vector<double>& scratch) {
    scratch.assign(data, data + n);
    return canonical_prod_inplace(scratch);
}

}  // namespace hvkit
