#pragma once

#include <string>

#include "hvkit/solution_set.hpp"

namespace hvkit {

enum class ProblemName { Dtlz1, Dtlz2, ConvexDtlz2, Dtlz5, Dtlz7 };

// A scalable benchmark instance. The objectives are minimized; for
// hypervolume accounting both objectives and reference point are negated so
// the usual maximization convention applies.
struct Problem {
    ProblemName name = ProblemName::Dtlz2;
    int m = 3;        // objectives
    int d = 6;        // decision variables, 2M unless overridden
    Vec reference;    // minimization-space reference point
};

// Accepted names: dtlz1, dtlz2, convex-dtlz2, dtlz5, dtlz7. Picks d = 2M and
// the conventional reference point (400^M for dtlz1, 15^M for dtlz7, 1^M
// otherwise).
Problem make_problem(const std::string& name, int m);

const char* problem_name(const Problem& p);

// Objective values at x, minimization. x must lie in [0,1]^d.
Vec dtlz_eval(const Problem& p, const Vec& x);

// The problem's reference point negated into maximization space.
Vec maximization_reference(const Problem& p);

// Column-wise negation, mapping minimization objectives to maximization.
SolutionSet negate_columns(const SolutionSet& s);

}  // namespace hvkit
