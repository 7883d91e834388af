#include "hvkit/dtlz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hvkit {

namespace {

constexpr double kPi = std::numbers::pi;

// Distance-variable part shared by the sphere-front family.
double squared_g(const Vec& x, int m) {
    double g = 0.0;
    for (std::size_t i = m - 1; i < x.size(); ++i) {
        g += (x[i] - 0.5) * (x[i] - 0.5);
    }
    return g;
}

// f_j = (1+g) * prod of cosines with one trailing sine, the standard
// concentric construction over angles in radians.
Vec angular_objectives(const Vec& theta, double g, int m) {
    Vec f(m);
    for (int j = 0; j < m; ++j) {
        double v = 1.0 + g;
        for (int q = 0; q < m - 1 - j; ++q) v *= std::cos(theta[q]);
        if (j > 0) v *= std::sin(theta[m - 1 - j]);
        f[j] = v;
    }
    return f;
}

}  // namespace

Problem make_problem(const std::string& name, int m) {
    if (m < 2) throw std::invalid_argument("make_problem: need at least 2 objectives");
    Problem p;
    double ref = 1.0;
    if (name == "dtlz1") {
        p.name = ProblemName::Dtlz1;
        ref = 400.0;
    } else if (name == "dtlz2") {
        p.name = ProblemName::Dtlz2;
    } else if (name == "convex-dtlz2") {
        p.name = ProblemName::ConvexDtlz2;
    } else if (name == "dtlz5") {
        p.name = ProblemName::Dtlz5;
    } else if (name == "dtlz7") {
        p.name = ProblemName::Dtlz7;
        ref = 15.0;
    } else {
        throw std::invalid_argument("make_problem: unknown problem '" + name + "'");
    }
    p.m = m;
    p.d = 2 * m;
    p.reference.assign(m, ref);
    return p;
}

const char* problem_name(const Problem& p) {
    switch (p.name) {
        case ProblemName::Dtlz1: return "dtlz1";
        case ProblemName::Dtlz2: return "dtlz2";
        case ProblemName::ConvexDtlz2: return "convex-dtlz2";
        case ProblemName::Dtlz5: return "dtlz5";
        case ProblemName::Dtlz7: return "dtlz7";
    }
    return "?";
}

Vec dtlz_eval(const Problem& p, const Vec& x) {
    if (static_cast<int>(x.size()) != p.d) {
        throw std::invalid_argument("dtlz_eval: expected " + std::to_string(p.d) +
                                    " variables, got " + std::to_string(x.size()));
    }
    for (double v : x) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::domain_error("dtlz_eval: variable outside [0,1]");
        }
    }
    const int m = p.m;
    const int k = p.d - m + 1;

    switch (p.name) {
        case ProblemName::Dtlz1: {
            double g = 0.0;
            for (std::size_t i = m - 1; i < x.size(); ++i) {
                g += (x[i] - 0.5) * (x[i] - 0.5) - std::cos(20.0 * kPi * (x[i] - 0.5));
            }
            g = 100.0 * (k + g);
            Vec f(m);
            for (int j = 0; j < m; ++j) {
                double v = 0.5 * (1.0 + g);
                for (int q = 0; q < m - 1 - j; ++q) v *= x[q];
                if (j > 0) v *= 1.0 - x[m - 1 - j];
                f[j] = v;
            }
            return f;
        }
        case ProblemName::Dtlz2:
        case ProblemName::ConvexDtlz2: {
            const double g = squared_g(x, m);
            Vec theta(m - 1);
            for (int q = 0; q < m - 1; ++q) theta[q] = x[q] * kPi / 2.0;
            Vec f = angular_objectives(theta, g, m);
            if (p.name == ProblemName::ConvexDtlz2) {
                for (int j = 0; j < m - 1; ++j) f[j] = std::pow(f[j], 4.0);
                f[m - 1] = f[m - 1] * f[m - 1];
            }
            return f;
        }
        case ProblemName::Dtlz5: {
            // All angles after the first collapse toward pi/4, degenerating
            // the front into a curve as g goes to 0.
            const double g = squared_g(x, m);
            Vec theta(m - 1);
            if (m >= 2) theta[0] = x[0] * kPi / 2.0;
            for (int q = 1; q < m - 1; ++q) {
                theta[q] = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[q]);
            }
            return angular_objectives(theta, g, m);
        }
        case ProblemName::Dtlz7: {
            double g = 0.0;
            for (std::size_t i = m - 1; i < x.size(); ++i) g += x[i];
            g = 1.0 + 9.0 / k * g;
            Vec f(m);
            double h = static_cast<double>(m);
            for (int j = 0; j < m - 1; ++j) {
                f[j] = x[j];
                h -= f[j] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f[j]));
            }
            f[m - 1] = (1.0 + g) * h;
            return f;
        }
    }
    throw std::logic_error("dtlz_eval: unreachable");
}

Vec maximization_reference(const Problem& p) {
    Vec r(p.reference);
    for (double& v : r) v = -v;
    return r;
}

SolutionSet negate_columns(const SolutionSet& s) {
    SolutionSet out(s.m(), s.n());
    for (int j = 0; j < s.n(); ++j) {
        for (int i = 0; i < s.m(); ++i) out(i, j) = -s(i, j);
    }
    return out;
}

}  // namespace hvkit
