#include "hvkit/hv_exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hvkit/numeric.hpp"

namespace hvkit {

bool dominates(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominates: dimension mismatch");
    }
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] < a[i]) return false;
        if (b[i] > a[i]) strict = true;
    }
    return strict;
}

namespace {

// b >= a componentwise (weak domination, duplicates included).
bool weakly_dominates(const double* a, const double* b, int m) {
    for (int i = 0; i < m; ++i) {
        if (b[i] < a[i]) return false;
    }
    return true;
}

bool strictly_dominates(const double* a, const double* b, int m) {
    bool strict = false;
    for (int i = 0; i < m; ++i) {
        if (b[i] < a[i]) return false;
        if (b[i] > a[i]) strict = true;
    }
    return strict;
}

void check_input(const SolutionSet& set, const Vec& ref, const char* where) {
    if (set.m() == 0 && set.n() > 0) {
        throw std::invalid_argument(std::string(where) + ": M must be >= 1");
    }
    if (set.n() > 0 && static_cast<int>(ref.size()) != set.m()) {
        throw std::invalid_argument(std::string(where) + ": reference has " +
                                    std::to_string(ref.size()) + " entries, set has M=" +
                                    std::to_string(set.m()));
    }
    if (!set.all_finite()) {
        throw std::invalid_argument(std::string(where) + ": non-finite objective value");
    }
    for (double r : ref) {
        if (!std::isfinite(r)) {
            throw std::invalid_argument(std::string(where) + ": non-finite reference");
        }
    }
}

// Shifted positive columns, dominated ones removed, flattened point-major
// (point j occupies out[j*m .. j*m+m)). Order preserved.
std::vector<double> clip_clean_flat(const SolutionSet& set, const Vec& ref, int& count) {
    const int m = set.m();
    const int n = set.n();
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(m) * n);
    for (int j = 0; j < n; ++j) {
        bool alive = true;
        for (int i = 0; i < m; ++i) {
            if (!(set(i, j) > ref[i])) {
                alive = false;
                break;
            }
        }
        if (!alive) continue;
        for (int i = 0; i < m; ++i) pts.push_back(set(i, j) - ref[i]);
    }
    count = static_cast<int>(pts.size() / (m > 0 ? m : 1));
    if (count <= 1) return pts;

    // Keep maximal points; exact duplicates keep their first copy.
    std::vector<char> keep(count, 1);
    for (int a = 0; a < count; ++a) {
        const double* pa = pts.data() + static_cast<std::size_t>(a) * m;
        for (int b = 0; b < count && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            const double* pb = pts.data() + static_cast<std::size_t>(b) * m;
            if (strictly_dominates(pa, pb, m)) {
                keep[a] = 0;
            } else if (b < a && std::equal(pa, pa + m, pb)) {
                keep[a] = 0;
            }
        }
    }
    std::vector<double> out;
    out.reserve(pts.size());
    int kept = 0;
    for (int a = 0; a < count; ++a) {
        if (!keep[a]) continue;
        const double* pa = pts.data() + static_cast<std::size_t>(a) * m;
        out.insert(out.end(), pa, pa + m);
        ++kept;
    }
    count = kept;
    return out;
}

double hv_ie_flat(const double* pts, int count, int m) {
    if (count == 0) return 0.0;
    // mins[mask * m + i] = componentwise min over the subset encoded by mask.
    // min() is exact, so the subset mins do not depend on enumeration order.
    const std::size_t nmask = std::size_t{1} << count;
    std::vector<double> mins(nmask * m);
    std::vector<double> terms;
    terms.reserve(nmask - 1);
    std::vector<double> scratch;
    for (std::size_t mask = 1; mask < nmask; ++mask) {
        const int low = static_cast<int>(__builtin_ctzll(mask));
        const double* point = pts + static_cast<std::size_t>(low) * m;
        double* dst = mins.data() + mask * m;
        const std::size_t rest = mask & (mask - 1);
        if (rest == 0) {
            std::copy(point, point + m, dst);
        } else {
            const double* prev = mins.data() + rest * m;
            for (int i = 0; i < m; ++i) dst[i] = std::min(prev[i], point[i]);
        }
        const double vol = canonical_prod(dst, m, scratch);
        const int bits = __builtin_popcountll(mask);
        terms.push_back((bits % 2 == 1) ? vol : -vol);
    }
    return canonical_sum_inplace(terms);
}

struct SweepWorkspace {
    // One scratch buffer per dimensionality level; level d stores points with
    // stride d.
    std::vector<std::vector<double>> bufs;
};

// Points are maximal, strictly positive, stride == dim. Sorting happens in
// place; callers hand over ownership of the range for the duration.
double hv_sweep_rec(double* pts, int count, int dim, SweepWorkspace& ws) {
    if (count == 0) return 0.0;
    if (dim == 1) {
        double best = pts[0];
        for (int j = 1; j < count; ++j) best = std::max(best, pts[j]);
        return best;
    }
    if (count == 1) {
        double vol = 1.0;
        for (int i = 0; i < dim; ++i) vol *= pts[i];
        return vol;
    }
    if (count == 2) {
        double va = 1.0, vb = 1.0, vab = 1.0;
        for (int i = 0; i < dim; ++i) {
            va *= pts[i];
            vb *= pts[dim + i];
            vab *= std::min(pts[i], pts[dim + i]);
        }
        return va + vb - vab;
    }

    // Sort whole points by value only, so the result is a function of the
    // point multiset, not of input order.
    std::vector<double*> order(count);
    for (int j = 0; j < count; ++j) order[j] = pts + static_cast<std::size_t>(j) * dim;

    if (dim == 2) {
        // Descending x, running max of y.
        std::sort(order.begin(), order.end(), [](double* a, double* b) {
            return a[0] != b[0] ? a[0] > b[0] : a[1] > b[1];
        });
        double hv = 0.0;
        double ymax = 0.0;
        for (double* p : order) {
            if (p[1] > ymax) {
                hv += p[0] * (p[1] - ymax);
                ymax = p[1];
            }
        }
        return hv;
    }

    auto lex_less = [dim](const double* a, const double* b) {
        for (int i = dim - 1; i >= 0; --i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    };
    std::sort(order.begin(), order.end(),
              [&](double* a, double* b) { return lex_less(a, b); });

    // Ascending in the last objective: every componentwise min against a
    // later point keeps this point's last coordinate, so each limit set is a
    // slice of constant height and the recursion drops one dimension.
    double total = 0.0;
    std::vector<double>& child = ws.bufs[dim - 1];
    for (int j = 0; j < count; ++j) {
        const double* pj = order[j];
        double incl = 1.0;
        for (int i = 0; i < dim; ++i) incl *= pj[i];

        child.clear();
        for (int k = j + 1; k < count; ++k) {
            const double* pk = order[k];
            for (int i = 0; i + 1 < dim; ++i) child.push_back(std::min(pj[i], pk[i]));
        }
        int ccount = count - 1 - j;

        // Maximal filter in dim-1 dimensions; duplicates keep one copy.
        const int cm = dim - 1;
        if (ccount > 1) {
            std::vector<char> keep(ccount, 1);
            for (int a = 0; a < ccount; ++a) {
                if (!keep[a]) continue;
                const double* pa = child.data() + static_cast<std::size_t>(a) * cm;
                for (int b = 0; b < ccount; ++b) {
                    if (a == b || !keep[b]) continue;
                    const double* pb = child.data() + static_cast<std::size_t>(b) * cm;
                    if (strictly_dominates(pa, pb, cm) ||
                        (b < a && std::equal(pa, pa + cm, pb))) {
                        keep[a] = 0;
                        break;
                    }
                }
            }
            int w = 0;
            for (int a = 0; a < ccount; ++a) {
                if (!keep[a]) continue;
                if (w != a) {
                    std::copy(child.data() + static_cast<std::size_t>(a) * cm,
                              child.data() + static_cast<std::size_t>(a) * cm + cm,
                              child.data() + static_cast<std::size_t>(w) * cm);
                }
                ++w;
            }
            ccount = w;
        }

        const double below =
            pj[dim - 1] * hv_sweep_rec(child.data(), ccount, cm, ws);
        total += incl - below;
    }
    return total;
}

double hv_sweep_flat(std::vector<double> pts, int count, int m) {
    if (count == 0) return 0.0;
    SweepWorkspace ws;
    ws.bufs.resize(m);
    return hv_sweep_rec(pts.data(), count, m, ws);
}

}  // namespace

std::vector<std::vector<int>> non_dominated_sort(const SolutionSet& set) {
    const int n = set.n();
    const int m = set.m();
    std::vector<std::vector<int>> fronts;
    if (n == 0) return fronts;

    std::vector<int> dom_count(n, 0);
    std::vector<std::vector<int>> dominated_by(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (strictly_dominates(set.col(a), set.col(b), m)) {
                ++dom_count[a];
                dominated_by[b].push_back(a);
            } else if (strictly_dominates(set.col(b), set.col(a), m)) {
                ++dom_count[b];
                dominated_by[a].push_back(b);
            }
        }
    }
    std::vector<int> current;
    for (int j = 0; j < n; ++j) {
        if (dom_count[j] == 0) current.push_back(j);
    }
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<int> next;
        for (int j : current) {
            for (int k : dominated_by[j]) {
                if (--dom_count[k] == 0) next.push_back(k);
            }
        }
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

SolutionSet shift_and_clean(const SolutionSet& set, const Vec& ref) {
    check_input(set, ref, "shift_and_clean");
    const int m = set.m();
    int count = 0;
    std::vector<double> flat = clip_clean_flat(set, ref, count);
    SolutionSet out(m, count);
    for (int j = 0; j < count; ++j) {
        for (int i = 0; i < m; ++i) out(i, j) = flat[static_cast<std::size_t>(j) * m + i];
    }
    return out;
}

double hv_inclusion_exclusion(const SolutionSet& set, const Vec& ref) {
    check_input(set, ref, "hv_inclusion_exclusion");
    int count = 0;
    std::vector<double> flat = clip_clean_flat(set, ref, count);
    if (count > 20) {
        throw std::invalid_argument("hv_inclusion_exclusion: 2^N terms infeasible for N=" +
                                    std::to_string(count));
    }
    return hv_ie_flat(flat.data(), count, set.m());
}

double hv_dimension_sweep(const SolutionSet& set, const Vec& ref) {
    check_input(set, ref, "hv_dimension_sweep");
    int count = 0;
    std::vector<double> flat = clip_clean_flat(set, ref, count);
    return hv_sweep_flat(std::move(flat), count, set.m());
}

double exact_hv(const SolutionSet& set, const Vec& ref) {
    check_input(set, ref, "exact_hv");
    int count = 0;
    std::vector<double> flat = clip_clean_flat(set, ref, count);
    if (count <= 12) return hv_ie_flat(flat.data(), count, set.m());
    return hv_sweep_flat(std::move(flat), count, set.m());
}

Vec hv_contributions(const SolutionSet& set, const Vec& ref) {
    check_input(set, ref, "hv_contributions");
    const int n = set.n();
    const double full = exact_hv(set, ref);
    Vec out(n, 0.0);
    for (int j = 0; j < n; ++j) {
        SolutionSet rest(set.m(), 0);
        for (int k = 0; k < n; ++k) {
            if (k != j) rest.push_column(set.column(k));
        }
        out[j] = std::max(0.0, full - exact_hv(rest, ref));
    }
    return out;
}

double hvi(const Vec& y, const SolutionSet& set, const Vec& ref) {
    if (set.n() > 0 && static_cast<int>(y.size()) != set.m()) {
        throw std::invalid_argument("hvi: candidate dimension mismatch");
    }
    SolutionSet with = set;
    with.push_column(y);
    const double before = exact_hv(set, ref);
    const double after = exact_hv(with, ref);
    return std::max(0.0, after - before);
}

}  // namespace hvkit
