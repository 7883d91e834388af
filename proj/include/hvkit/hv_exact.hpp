#pragma once

#include "hvkit/solution_set.hpp"

namespace hvkit {

// Maximization convention everywhere: larger objective values are better.

// True iff b dominates a: b >= a in every component, b != a.
bool dominates(const Vec& a, const Vec& b);

// Partition into fronts. fronts[0] holds the indices of the maximal columns,
// fronts[1] the maximal columns once fronts[0] is removed, and so on.
// Indices inside a front keep ascending order. Duplicates do not dominate
// each other and land in the same front.
std::vector<std::vector<int>> non_dominated_sort(const SolutionSet& set);

// Shifts every column by -ref, drops columns that do not strictly exceed ref
// in every coordinate, then keeps only the first front of the survivors.
// The result is "clean": strictly positive, mutually non-dominated columns,
// with the reference moved to the origin. Column order is preserved.
SolutionSet shift_and_clean(const SolutionSet& set, const Vec& ref);

// Exact hypervolume of the region dominated by `set` and bounded below by
// `ref`. Dispatches to inclusion-exclusion for small N (<= 12 surviving
// columns) and to the sweep otherwise. Non-finite input throws.
double exact_hv(const SolutionSet& set, const Vec& ref);

// The two underlying algorithms, each usable standalone on any input.
// Inclusion-exclusion is O(2^N) and keeps bit-exact permutation invariance
// by reducing terms in value order; the sweep recurses on slices of the
// last objective and handles large N.
double hv_inclusion_exclusion(const SolutionSet& set, const Vec& ref);
double hv_dimension_sweep(const SolutionSet& set, const Vec& ref);

// Leave-one-out contribution of every column: hv(set) - hv(set minus j).
// Assumes the set is clean; dominated duplicates simply score 0.
Vec hv_contributions(const SolutionSet& set, const Vec& ref);

// Hypervolume improvement of candidate y over the set: hv(set + y) - hv(set),
// clipped at 0.
double hvi(const Vec& y, const SolutionSet& set, const Vec& ref);

}  // namespace hvkit
