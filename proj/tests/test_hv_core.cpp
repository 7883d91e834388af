#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hvkit/hv_exact.hpp"
#include "hvkit/rng.hpp"
#include "hvkit/solution_set.hpp"
#include "support.hpp"

using namespace hvkit;
using namespace hvtest;

namespace {

SolutionSet cols(std::vector<Vec> v) { return SolutionSet::from_columns(v); }

}  // namespace

TEST_CASE("dominates follows the maximization convention") {
    CHECK(dominates({1, 2}, {2, 2}));
    CHECK_FALSE(dominates({2, 2}, {1, 3}));
    CHECK_FALSE(dominates({2, 2}, {2, 2}));
    CHECK_FALSE(dominates({2, 2}, {1, 2}));
    CHECK(dominates({0, 0, 0}, {0, 0, 1}));
    CHECK_THROWS_AS((void)dominates({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("non_dominated_sort peels fronts in index order") {
    // Column 1 dominates column 0; columns 1,2,3 are mutually non-dominated.
    const SolutionSet s = cols({{1, 1}, {2, 2}, {3, 1}, {1, 3}});
    const auto fronts = non_dominated_sort(s);
    REQUIRE(fronts.size() == 2);
    CHECK(fronts[0] == std::vector<int>{1, 2, 3});
    CHECK(fronts[1] == std::vector<int>{0});
}

TEST_CASE("duplicates land in the same front") {
    const SolutionSet s = cols({{2, 2}, {2, 2}, {1, 1}});
    const auto fronts = non_dominated_sort(s);
    REQUIRE(fronts.size() == 2);
    CHECK(fronts[0] == std::vector<int>{0, 1});
    CHECK(fronts[1] == std::vector<int>{2});
}

TEST_CASE("fronts partition the set and respect dominance structure") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 4));
        const int n = static_cast<int>(rng.uniform_int(1, 30));
        const SolutionSet s = random_set(rng, m, n);
        const auto fronts = non_dominated_sort(s);

        std::vector<int> seen(n, 0);
        for (const auto& f : fronts) {
            for (int j : f) ++seen[j];
        }
        for (int j = 0; j < n; ++j) CHECK(seen[j] == 1);

        for (const auto& f : fronts) {
            for (int a : f) {
                for (int b : f) {
                    if (a != b) CHECK_FALSE(dominates(s.column(a), s.column(b)));
                }
            }
        }
        for (std::size_t k = 1; k < fronts.size(); ++k) {
            for (int b : fronts[k]) {
                bool dominated_by_prev = false;
                for (int a : fronts[k - 1]) {
                    if (dominates(s.column(b), s.column(a))) {
                        dominated_by_prev = true;
                        break;
                    }
                }
                CHECK(dominated_by_prev);
            }
        }
    }
}

TEST_CASE("exact_hv on hand-checked sets") {
    const Vec r0{0, 0};
    CHECK(exact_hv(cols({{2, 3}}), r0) == 6.0);
    CHECK(exact_hv(cols({{3, 1}, {1, 3}}), r0) == 5.0);
    CHECK(exact_hv(cols({{3, 1}, {2, 2}, {1, 4}}), r0) == 7.0);
    CHECK(exact_hv(SolutionSet(2, 0), r0) == 0.0);
    // Entirely below the reference.
    CHECK(exact_hv(cols({{1, 1}}), Vec{2, 2}) == 0.0);
    // Dominated column changes nothing.
    CHECK(exact_hv(cols({{3, 1}, {2, 2}, {1, 4}, {1, 1}}), r0) == 7.0);
}

TEST_CASE("hand-checked sets agree with both oracles") {
    const Vec r0{0, 0};
    const SolutionSet s = cols({{3, 1}, {2, 2}, {1, 4}});
    CHECK(oracle_hv_cells(s, r0) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(oracle_hv_grid(s, r0, 200) == doctest::Approx(7.0).epsilon(0.02));
    CHECK(oracle_hv_grid(s, r0, 400) == doctest::Approx(7.0).epsilon(0.01));
}

TEST_CASE("both algorithms match the cell oracle on random sets") {
    Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 4));
        const int n = static_cast<int>(rng.uniform_int(1, 8));
        const SolutionSet s = random_set(rng, m, n);
        Vec ref(m, 0.0);
        const double want = oracle_hv_cells(s, ref);
        CHECK(rel_err(hv_inclusion_exclusion(s, ref), want) < 1e-12);
        CHECK(rel_err(hv_dimension_sweep(s, ref), want) < 1e-12);
    }
}

TEST_CASE("inclusion-exclusion and sweep agree on larger random sets") {
    Rng rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 5));
        const int n = static_cast<int>(rng.uniform_int(1, 14));
        const SolutionSet s = random_set(rng, m, n);
        Vec ref(m, 0.0);
        const double a = hv_inclusion_exclusion(s, ref);
        const double b = hv_dimension_sweep(s, ref);
        CHECK(rel_err(a, b) < 1e-9);
    }
}

TEST_CASE("nonzero reference points are handled") {
    Rng rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 3));
        const int n = static_cast<int>(rng.uniform_int(1, 8));
        const SolutionSet s = random_set(rng, m, n, -1.0, 1.0);
        Vec ref(m);
        for (int i = 0; i < m; ++i) ref[i] = rng.uniform_real(-1.0, 0.5);
        const double want = oracle_hv_cells(s, ref);
        CHECK(rel_err(exact_hv(s, ref), want) < 1e-12);
    }
}

TEST_CASE("hv_contributions on the hand-checked set") {
    const SolutionSet s = cols({{3, 1}, {2, 2}, {1, 4}});
    const Vec got = hv_contributions(s, {0, 0});
    REQUIRE(got.size() == 3);
    CHECK(got[0] == 1.0);
    CHECK(got[1] == 1.0);
    CHECK(got[2] == 2.0);
}

TEST_CASE("contribution of a duplicate column is zero") {
    const SolutionSet s = cols({{2, 2}, {2, 2}, {3, 1}});
    const Vec got = hv_contributions(s, {0, 0});
    CHECK(got[0] == 0.0);
    CHECK(got[1] == 0.0);
    CHECK(got[2] > 0.0);
}

TEST_CASE("hvi matches a direct difference") {
    const SolutionSet s = cols({{3, 1}, {2, 2}});
    CHECK(hvi({1, 4}, s, {0, 0}) == 2.0);
    // Dominated candidate adds nothing.
    CHECK(hvi({1, 1}, s, {0, 0}) == 0.0);
    // Candidate below the reference adds nothing.
    CHECK(hvi({-1, 5}, s, {0, 0}) == 0.0);
}

TEST_CASE("shift_and_clean shifts, drops and filters") {
    const SolutionSet s = cols({{3, 1}, {2, 2}, {1.2, 4}, {0.5, 9}, {1.5, 1.5}});
    const Vec ref{1, 1};
    const SolutionSet c = shift_and_clean(s, ref);
    // (3,1) does not strictly exceed ref; (0.5,9) fails coordinate 0;
    // (1.5,1.5) is dominated by (2,2). Survivors keep order.
    REQUIRE(c.n() == 2);
    CHECK(c.column(0) == Vec{1, 1});
    CHECK(c.column(1)[0] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(c.column(1)[1] == 3.0);
    for (int j = 0; j < c.n(); ++j) {
        for (int i = 0; i < c.m(); ++i) CHECK(c(i, j) > 0.0);
    }
}

TEST_CASE("clean output preserves hypervolume with reference zero") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 5));
        const int n = static_cast<int>(rng.uniform_int(1, 10));
        const SolutionSet s = random_set(rng, m, n, -0.2, 1.0);
        Vec ref(m, 0.1);
        const SolutionSet c = shift_and_clean(s, ref);
        CHECK(rel_err(exact_hv(c, Vec(m, 0.0)), exact_hv(s, ref)) < 1e-12);
    }
}

TEST_CASE("adding a column never decreases hypervolume") {
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 5));
        const int n = static_cast<int>(rng.uniform_int(1, 9));
        SolutionSet s = random_set(rng, m, n);
        Vec ref(m, 0.0);
        const double before = exact_hv(s, ref);
        SolutionSet grown = s;
        grown.push_column(random_set(rng, m, 1).column(0));
        CHECK(exact_hv(grown, ref) >= before - 1e-15);
    }
}

TEST_CASE("scale equivariance of exact_hv") {
    Rng rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 5));
        const int n = static_cast<int>(rng.uniform_int(1, 10));
        const SolutionSet s = random_set(rng, m, n);
        GroupElement g = random_group_element(rng, m, n);
        // Scaling only; keep permutations identity to isolate the property.
        for (int i = 0; i < m; ++i) g.tau[i] = i;
        for (int j = 0; j < n; ++j) g.sigma[j] = j;
        double cprod = 1.0;
        for (double c : g.scale) cprod *= c;
        const double lhs = exact_hv(group_act(g, s), Vec(m, 0.0));
        const double rhs = cprod * exact_hv(s, Vec(m, 0.0));
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("permutation invariance of exact_hv is bit-exact for small N") {
    Rng rng(616);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 5));
        const int n = static_cast<int>(rng.uniform_int(1, 12));
        const SolutionSet s = random_set(rng, m, n);
        GroupElement g;
        g.scale.assign(m, 1.0);
        g.tau = random_permutation(rng, m);
        g.sigma = random_permutation(rng, n);
        const double base = exact_hv(s, Vec(m, 0.0));
        CHECK(exact_hv(group_act(g, s), Vec(m, 0.0)) == base);
    }
}

TEST_CASE("full group equivariance of exact_hv") {
    Rng rng(617);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 5));
        const int n = static_cast<int>(rng.uniform_int(1, 10));
        const SolutionSet s = random_set(rng, m, n);
        const GroupElement g = random_group_element(rng, m, n);
        double cprod = 1.0;
        for (double c : g.scale) cprod *= c;
        const double lhs = exact_hv(group_act(g, s), Vec(m, 0.0));
        const double rhs = cprod * exact_hv(s, Vec(m, 0.0));
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("group composition law") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 5));
        const int n = static_cast<int>(rng.uniform_int(1, 8));
        const SolutionSet s = random_set(rng, m, n);
        const GroupElement g1 = random_group_element(rng, m, n);
        const GroupElement g2 = random_group_element(rng, m, n);
        const SolutionSet two_steps = group_act(g2, group_act(g1, s));
        const SolutionSet one_step = group_act(group_product(g2, g1), s);
        REQUIRE(two_steps.n() == one_step.n());
        for (int j = 0; j < s.n(); ++j) {
            for (int i = 0; i < m; ++i) {
                CHECK(rel_err(one_step(i, j), two_steps(i, j)) < 1e-14);
            }
        }
    }
}

TEST_CASE("padding with unit rows preserves hypervolume") {
    const SolutionSet s = cols({{0.6, 0.2}, {0.2, 0.6}});
    // 0.6*0.2 + 0.2*0.6 - 0.2*0.2 = 0.2
    const double base = exact_hv(s, {0, 0});
    CHECK(base == doctest::Approx(0.2).epsilon(1e-12));
    for (int target = 3; target <= 10; ++target) {
        const SolutionSet p = pad_to_dim(s, target);
        CHECK(rel_err(exact_hv(p, Vec(target, 0.0)), base) < 1e-12);
    }

    Rng rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 4));
        const int n = static_cast<int>(rng.uniform_int(1, 8));
        const SolutionSet t = random_set(rng, m, n);
        const int target = static_cast<int>(rng.uniform_int(m, 10));
        const double want = exact_hv(t, Vec(m, 0.0));
        CHECK(rel_err(exact_hv(pad_to_dim(t, target), Vec(target, 0.0)), want) < 1e-12);
    }
}

TEST_CASE("pad_to_dim contract violations") {
    const SolutionSet s = cols({{0.5, 0.5}});
    CHECK_THROWS_AS((void)pad_to_dim(s, 1), std::invalid_argument);
    const SolutionSet big = cols({{1.5, 0.5}});
    CHECK_THROWS_AS((void)pad_to_dim(big, 3), std::invalid_argument);
}

TEST_CASE("group_act validates its element") {
    const SolutionSet s = cols({{1, 2}, {3, 4}});
    GroupElement g;
    g.scale = {1.0, -1.0};
    g.tau = {0, 1};
    g.sigma = {0, 1};
    CHECK_THROWS_AS((void)group_act(g, s), std::invalid_argument);
    g.scale = {1.0, 1.0};
    g.tau = {0, 0};
    CHECK_THROWS_AS((void)group_act(g, s), std::invalid_argument);
}

TEST_CASE("non-finite input is rejected") {
    SolutionSet s = cols({{1.0, std::numeric_limits<double>::infinity()}});
    CHECK_THROWS_AS((void)exact_hv(s, {0, 0}), std::invalid_argument);
    SolutionSet nanset = cols({{std::nan(""), 1.0}});
    CHECK_THROWS_AS((void)exact_hv(nanset, {0, 0}), std::invalid_argument);
}

TEST_CASE("inclusion-exclusion refuses infeasible N") {
    Rng rng(9);
    // 25 mutually non-dominated 2-D points on a descending staircase.
    SolutionSet s(2, 25);
    for (int j = 0; j < 25; ++j) {
        s(0, j) = j + 1.0;
        s(1, j) = 25.0 - j;
    }
    CHECK_THROWS_AS((void)hv_inclusion_exclusion(s, {0, 0}), std::invalid_argument);
    // The sweep handles it; compare against the cell oracle.
    CHECK(rel_err(hv_dimension_sweep(s, {0, 0}), oracle_hv_cells(s, {0, 0})) < 1e-12);
}
