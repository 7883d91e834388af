#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hvkit/hv_exact.hpp"
#include "hvkit/moea.hpp"
#include "support.hpp"

using namespace hvkit;
using namespace hvtest;

namespace {

SolutionSet cols(std::vector<Vec> v) { return SolutionSet::from_columns(v); }

bool in_unit_box(const Vec& x) {
    for (double v : x) {
        if (!(v >= 0.0 && v <= 1.0)) return false;
    }
    return true;
}

// Survivor lists must take whole fronts in rank order and exactly fill the
// remaining room from the first overflowing front.
void check_front_prefix(const SolutionSet& maxi, const std::vector<int>& chosen,
                        int mu) {
    REQUIRE(static_cast<int>(chosen.size()) == mu);
    std::set<int> picked(chosen.begin(), chosen.end());
    REQUIRE(picked.size() == chosen.size());  // no duplicates
    const auto fronts = non_dominated_sort(maxi);
    std::size_t room = chosen.size();
    for (const auto& front : fronts) {
        std::size_t taken = 0;
        for (int j : front) taken += picked.count(j);
        if (front.size() <= room) {
            CHECK(taken == front.size());  // whole front survives
            room -= front.size();
        } else {
            CHECK(taken == room);  // truncated front fills exactly
            room = 0;
        }
        if (room == 0) break;
    }
}

Population make_pop(const Problem& p, int mu, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, 1);
    return init_population(p, mu, rng);
}

}  // namespace

TEST_CASE("exact truncation drops the least contributor, lowest index first") {
    // Contributions are (1, 1, 2): the first two tie and the lower column
    // index loses.
    const SolutionSet front = cols({{3, 1}, {2, 2}, {1, 4}});
    const HvBackend backend = HvBackend::exact({0.0, 0.0});
    CHECK(truncate_front(front, backend, 2) == std::vector<int>{1, 2});

    // One more greedy round: the survivors contribute 2 each, tie again.
    CHECK(truncate_front(front, backend, 1) == std::vector<int>{2});

    CHECK(truncate_front(front, backend, 3) == std::vector<int>{0, 1, 2});
    CHECK(truncate_front(front, backend, 0).empty());
    CHECK_THROWS_AS(truncate_front(front, backend, 4), std::invalid_argument);
}

TEST_CASE("a duplicate contributes nothing and is removed first") {
    const SolutionSet front = cols({{2, 2}, {2, 2}, {3, 1}});
    const HvBackend backend = HvBackend::exact({0.0, 0.0});
    CHECK(truncate_front(front, backend, 2) == std::vector<int>{1, 2});
}

TEST_CASE("crowding distance favors boundaries and spread") {
    const SolutionSet line = cols({{0, 1}, {0.5, 0.5}, {1, 0}});
    const Vec d = crowding_distances(line);
    CHECK(std::isinf(d[0]));
    CHECK(std::isinf(d[2]));
    CHECK(d[1] == 2.0);  // normalized gap of 1 per objective

    // Two or fewer members are all boundaries.
    for (double v : crowding_distances(cols({{1, 2}, {2, 1}}))) CHECK(std::isinf(v));

    // Identical points: the index extremes act as boundaries, the middle
    // collects no gap, and the zero range contributes nothing.
    const Vec same = crowding_distances(cols({{1, 1}, {1, 1}, {1, 1}, {1, 1}}));
    CHECK(std::isinf(same[0]));
    CHECK(same[1] == 0.0);
    CHECK(same[2] == 0.0);
    CHECK(std::isinf(same[3]));
}

TEST_CASE("survivor selection respects the front prefix rule") {
    // Three non-dominated points, one dominated tail each at rank 2 and 3.
    const SolutionSet maxi = cols({{3, 1}, {2, 2}, {1, 4}, {0.5, 0.5}, {0.25, 0.25}});
    const HvBackend backend = HvBackend::exact({0.0, 0.0});

    // Fits exactly: the first front passes through untouched.
    CHECK(survivors_sms(maxi, 3, backend) == std::vector<int>{0, 1, 2});
    CHECK(survivors_nsga2(maxi, 3) == std::vector<int>{0, 1, 2});

    // Overflow inside front 1: later fronts are never consulted.
    const auto sms2 = survivors_sms(maxi, 2, backend);
    CHECK(sms2 == std::vector<int>{1, 2});
    const auto nsga2 = survivors_nsga2(maxi, 2);
    for (int j : nsga2) CHECK(j < 3);

    // Room for one member of front 2.
    CHECK(survivors_sms(maxi, 4, backend) == std::vector<int>{0, 1, 2, 3});
    CHECK(survivors_nsga2(maxi, 4) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("nsga2 truncation removes the middle of a line") {
    const SolutionSet maxi = cols({{0, 1}, {0.5, 0.5}, {1, 0}});
    CHECK(survivors_nsga2(maxi, 2) == std::vector<int>{0, 2});
}

TEST_CASE("monte carlo and deep backends yield structurally valid survivors") {
    Rng rng = Rng::stream(11, 0);
    const SolutionSet maxi = random_set(rng, 3, 24, 0.05, 1.0);
    const Vec ref(3, 0.0);
    const int mu = 10;

    const auto exact = survivors_sms(maxi, mu, HvBackend::exact(ref));
    check_front_prefix(maxi, exact, mu);

    McConfig mc;
    mc.samples = 2000;
    mc.seed = 7;
    const auto sampled = survivors_sms(maxi, mu, HvBackend::monte_carlo(ref, mc));
    check_front_prefix(maxi, sampled, mu);

    const auto deep =
        survivors_sms(maxi, mu, HvBackend::deep(ref, init_weights(4, 3)));
    check_front_prefix(maxi, deep, mu);

    const auto crowding = survivors_nsga2(maxi, mu);
    check_front_prefix(maxi, crowding, mu);
}

TEST_CASE("backend scores are deterministic and kind-labeled") {
    Rng rng = Rng::stream(12, 0);
    const SolutionSet s = random_set(rng, 3, 12, 0.1, 1.0);
    const Vec ref(3, 0.0);

    const HvBackend exact = HvBackend::exact(ref);
    CHECK(exact.score(s) == exact_hv(s, ref));
    CHECK(std::string(exact.kind_name()) == "exact");

    McConfig mc;
    mc.samples = 5000;
    mc.seed = 3;
    const HvBackend sampled = HvBackend::monte_carlo(ref, mc);
    CHECK(sampled.score(s) == sampled.score(s));
    CHECK(std::string(sampled.kind_name()) == "mc");

    const HvBackend deep = HvBackend::deep(ref, init_weights(4, 9));
    const double v = deep.score(s);
    CHECK(v == deep.score(s));
    CHECK(v > 0.0);
    CHECK(std::string(deep.kind_name()) == "deep");
    CHECK(deep.n_cap_breaches() == 0);

    const HvBackend wrong = HvBackend::exact(Vec(2, 0.0));
    CHECK_THROWS_AS(wrong.score(s), std::invalid_argument);
}

TEST_CASE("the deep backend counts scoring beyond the trained size") {
    // A 2-D antichain with 101 members, all strictly above the origin.
    SolutionSet big(2, 0);
    for (int k = 0; k <= 100; ++k) {
        big.push_column({static_cast<double>(k + 1), static_cast<double>(101 - k)});
    }
    const HvBackend deep = HvBackend::deep(Vec(2, 0.0), init_weights(2, 1));
    deep.score(big);
    CHECK(deep.n_cap_breaches() == 1);
    deep.score(big);
    CHECK(deep.n_cap_breaches() == 2);
}

TEST_CASE("crossover and mutation stay inside the box and replay exactly") {
    Rng rng = Rng::stream(13, 0);
    const int d = 10;
    for (int rep = 0; rep < 100; ++rep) {
        Vec a(d), b(d);
        for (double& v : a) v = rng.uniform01();
        for (double& v : b) v = rng.uniform01();
        Rng op1 = Rng::stream(100 + rep, 0);
        const auto [c1, c2] = sbx_crossover(a, b, op1);
        CHECK(in_unit_box(c1));
        CHECK(in_unit_box(c2));
        Rng op2 = Rng::stream(100 + rep, 0);
        const auto [d1, d2] = sbx_crossover(a, b, op2);
        CHECK(c1 == d1);
        CHECK(c2 == d2);

        Vec m = c1;
        Rng op3 = Rng::stream(200 + rep, 0);
        polynomial_mutation(m, op3);
        CHECK(in_unit_box(m));
        Vec m2 = c1;
        Rng op4 = Rng::stream(200 + rep, 0);
        polynomial_mutation(m2, op4);
        CHECK(m == m2);
    }

    // Identical parents pass through crossover unchanged.
    Rng op = Rng::stream(14, 0);
    const Vec p(d, 0.25);
    const auto [s1, s2] = sbx_crossover(p, p, op);
    CHECK(s1 == p);
    CHECK(s2 == p);

    CHECK_THROWS_AS(sbx_crossover(Vec(3, 0.5), Vec(4, 0.5), op), std::invalid_argument);
}

TEST_CASE("one generation keeps size, bounds, and cache consistency") {
    const Problem p = make_problem("dtlz2", 3);
    const HvBackend backend = HvBackend::exact(maximization_reference(p));
    for (bool sms : {true, false}) {
        Population pop = make_pop(p, 12, 17);
        Rng rng = Rng::stream(18, 2);
        const Population next = sms ? sms_emoa_step(pop, p, backend, rng)
                                    : nsga2_step(pop, p, rng);
        REQUIRE(next.size() == 12);
        REQUIRE(next.objectives.n() == 12);
        for (int j = 0; j < next.size(); ++j) {
            CHECK(in_unit_box(next.genomes[j]));
            CHECK(dtlz_eval(p, next.genomes[j]) == next.objectives.column(j));
        }
    }
}

TEST_CASE("steps replay exactly from the same rng state") {
    const Problem p = make_problem("convex-dtlz2", 3);
    const HvBackend backend = HvBackend::exact(maximization_reference(p));
    const Population pop = make_pop(p, 10, 19);

    Rng r1 = Rng::stream(20, 0);
    Rng r2 = Rng::stream(20, 0);
    const Population a = sms_emoa_step(pop, p, backend, r1);
    const Population b = sms_emoa_step(pop, p, backend, r2);
    CHECK(a.genomes == b.genomes);
    CHECK(a.objectives == b.objectives);
}

TEST_CASE("campaigns are seeded, sized, and reproducible") {
    const Problem p = make_problem("dtlz2", 3);
    const HvBackend backend = HvBackend::exact(maximization_reference(p));

    const RunResult zero = run_ea(Algorithm::SmsEmoa, p, backend, 0, 8, 4);
    REQUIRE(zero.history.size() == 1);
    CHECK(zero.history[0].generation == 0);
    CHECK(zero.history[0].evaluations == 8);
    CHECK(zero.final_pop.size() == 8);

    const RunResult a = run_ea(Algorithm::Nsga2, p, backend, 3, 8, 4);
    const RunResult b = run_ea(Algorithm::Nsga2, p, backend, 3, 8, 4);
    REQUIRE(a.history.size() == 4);
    for (std::size_t g = 0; g < a.history.size(); ++g) {
        CHECK(a.history[g].generation == static_cast<int>(g));
        CHECK(a.history[g].evaluations == 8 * (static_cast<long>(g) + 1));
        CHECK(a.history[g].exact_hv == b.history[g].exact_hv);
        CHECK(a.history[g].exact_hv > 0.0);
    }
    CHECK(a.final_pop.genomes == b.final_pop.genomes);

    CHECK_THROWS_AS(run_ea(Algorithm::Nsga2, p, backend, -1, 8, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_ea(Algorithm::Nsga2, p, backend, 1, 1, 4),
                    std::invalid_argument);
}

TEST_CASE("elitist truncation never loses recorded hypervolume") {
    // Empirical regression over fixed seeds: greedy removal from the worst
    // front keeps the exact history non-decreasing on a smooth problem.
    const Problem p = make_problem("dtlz2", 3);
    const HvBackend backend = HvBackend::exact(maximization_reference(p));
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const RunResult r = run_ea(Algorithm::SmsEmoa, p, backend, 4, 16, seed);
        for (std::size_t g = 1; g < r.history.size(); ++g) {
            CHECK(r.history[g].exact_hv >= r.history[g - 1].exact_hv - 1e-12);
        }
    }
}
