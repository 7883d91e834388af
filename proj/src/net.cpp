#include "hvkit/net.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "hvkit/binio.hpp"
#include "hvkit/numeric.hpp"
#include "hvkit/rng.hpp"

namespace hvkit {

long param_count(int channels) {
    const long c = channels;
    return 12 * c * c + 12 * c + 1;
}

NetworkWeights init_weights(int channels, std::uint64_t seed, double leak) {
    if (channels < 1) {
        throw std::invalid_argument("init_weights: channels must be >= 1");
    }
    NetworkWeights w;
    w.channels = channels;
    w.leak = leak;
    const int widths[6] = {1, channels, channels, channels, channels, 1};
    for (int l = 0; l < 5; ++l) {
        LayerWeights& lw = w.layers[l];
        lw.resize(widths[l], widths[l + 1]);
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(l));
        const double a = std::sqrt(1.0 / (5.0 * lw.in_ch));
        for (auto* block : {&lw.w1, &lw.w2, &lw.w3, &lw.w4, &lw.bias}) {
            for (double& v : *block) v = rng.uniform_real(-a, a);
        }
    }
    return w;
}

Vec row_scale(const SolutionSet& set) {
    Vec s(set.m(), 0.0);
    for (int j = 0; j < set.n(); ++j) {
        for (int i = 0; i < set.m(); ++i) {
            s[i] = std::max(s[i], std::abs(set(i, j)));
        }
    }
    return s;
}

std::pair<SolutionSet, Vec> rescale(const SolutionSet& set) {
    Vec s = row_scale(set);
    for (double v : s) {
        if (v == 0.0) throw std::invalid_argument("rescale: zero row has no scale");
    }
    SolutionSet out = set;
    for (int j = 0; j < set.n(); ++j) {
        for (int i = 0; i < set.m(); ++i) out(i, j) /= s[i];
    }
    return {std::move(out), std::move(s)};
}

namespace {

double leaky(double v, double leak) { return v > 0.0 ? v : leak * v; }

double sigmoid(double t) {
    if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

// Everything the layer needs about its input stack, laid out flat. Channel i
// of the values occupies [i*m*n, (i+1)*m*n), row-major.
struct ChannelStats {
    int ch = 0, m = 0, n = 0;
    std::vector<double> s;      // ch*m       row scales
    std::vector<double> x;      // ch*m*n     rescaled values (0 for zero rows)
    std::vector<double> mr;     // ch*n       pooled over objectives, per solution
    std::vector<double> mc;     // ch*m       pooled over solutions, per objective
    std::vector<double> g;      // ch         pooled over everything
    std::vector<int> amax;      // ch*m       first column attaining the row scale
    std::vector<double> asgn;   // ch*m       sign there (0 for zero rows)
    std::vector<double> smean;  // m          (1/ch) * sum_i s_i
    std::vector<int> mr_arg;    // ch*n       max/min pooling only
    std::vector<int> mc_arg;    // ch*m
    std::vector<int> g_arg;     // ch         flat r*n+q
};

void compute_stats(const double* in, int ch, int m, int n, Pooling pool,
                   ChannelStats& st) {
    const std::size_t mn = static_cast<std::size_t>(m) * n;
    st.ch = ch;
    st.m = m;
    st.n = n;
    st.s.assign(static_cast<std::size_t>(ch) * m, 0.0);
    st.x.assign(static_cast<std::size_t>(ch) * mn, 0.0);
    st.mr.assign(static_cast<std::size_t>(ch) * n, 0.0);
    st.mc.assign(static_cast<std::size_t>(ch) * m, 0.0);
    st.g.assign(ch, 0.0);
    st.amax.assign(static_cast<std::size_t>(ch) * m, 0);
    st.asgn.assign(static_cast<std::size_t>(ch) * m, 0.0);
    st.smean.assign(m, 0.0);
    if (pool != Pooling::Mean) {
        st.mr_arg.assign(static_cast<std::size_t>(ch) * n, 0);
        st.mc_arg.assign(static_cast<std::size_t>(ch) * m, 0);
        st.g_arg.assign(ch, 0);
    }

    for (int i = 0; i < ch; ++i) {
        const double* y = in + i * mn;
        double* x = st.x.data() + i * mn;
        double* s = st.s.data() + static_cast<std::size_t>(i) * m;
        int* amax = st.amax.data() + static_cast<std::size_t>(i) * m;
        double* asgn = st.asgn.data() + static_cast<std::size_t>(i) * m;

        for (int r = 0; r < m; ++r) {
            const double* row = y + static_cast<std::size_t>(r) * n;
            double best = 0.0;
            int arg = 0;
            for (int q = 0; q < n; ++q) {
                const double a = std::abs(row[q]);
                if (a > best) {
                    best = a;
                    arg = q;
                }
            }
            s[r] = best;
            amax[r] = arg;
            if (best > 0.0) {
                asgn[r] = row[arg] > 0.0 ? 1.0 : -1.0;
                double* xr = x + static_cast<std::size_t>(r) * n;
                for (int q = 0; q < n; ++q) xr[q] = row[q] / best;
            }
            // Zero rows keep x = 0 and sign 0: the layer treats them as
            // flat directions.
            st.smean[r] += best;
        }

        double* mr = st.mr.data() + static_cast<std::size_t>(i) * n;
        double* mc = st.mc.data() + static_cast<std::size_t>(i) * m;
        if (pool == Pooling::Mean) {
            for (int q = 0; q < n; ++q) {
                double acc = 0.0;
                for (int r = 0; r < m; ++r) acc += x[static_cast<std::size_t>(r) * n + q];
                mr[q] = acc / m;
            }
            double gacc = 0.0;
            for (int r = 0; r < m; ++r) {
                const double* xr = x + static_cast<std::size_t>(r) * n;
                double acc = 0.0;
                for (int q = 0; q < n; ++q) acc += xr[q];
                mc[r] = acc / n;
                gacc += acc;
            }
            st.g[i] = gacc / static_cast<double>(mn);
        } else {
            const bool want_max = pool == Pooling::Max;
            int* mr_arg = st.mr_arg.data() + static_cast<std::size_t>(i) * n;
            int* mc_arg = st.mc_arg.data() + static_cast<std::size_t>(i) * m;
            for (int q = 0; q < n; ++q) {
                double best = x[q];
                int arg = 0;
                for (int r = 1; r < m; ++r) {
                    const double v = x[static_cast<std::size_t>(r) * n + q];
                    if (want_max ? v > best : v < best) {
                        best = v;
                        arg = r;
                    }
                }
                mr[q] = best;
                mr_arg[q] = arg;
            }
            double gbest = x[0];
            int garg = 0;
            for (int r = 0; r < m; ++r) {
                const double* xr = x + static_cast<std::size_t>(r) * n;
                double best = xr[0];
                int arg = 0;
                for (int q = 1; q < n; ++q) {
                    if (want_max ? xr[q] > best : xr[q] < best) {
                        best = xr[q];
                        arg = q;
                    }
                }
                mc[r] = best;
                mc_arg[r] = arg;
                if (want_max ? best > gbest : best < gbest) {
                    gbest = best;
                    garg = r * n + arg;
                }
            }
            st.g[i] = gbest;
            st.g_arg[i] = garg;
        }
    }
    for (int r = 0; r < m; ++r) st.smean[r] /= ch;
}

// Pre-activation of one layer from its input stats. out holds out_ch
// matrices of m*n. `in` is the raw channel stack: the w1 term multiplies
// s[r] * x[r][q], which is the input value itself.
void layer_apply(const double* in, const ChannelStats& st, const LayerWeights& w,
                 double* out) {
    const int I = st.ch, m = st.m, n = st.n, O = w.out_ch;
    const std::size_t mn = static_cast<std::size_t>(m) * n;
    const double invI = 1.0 / I;
    for (int o = 0; o < O; ++o) {
        double* A = out + o * mn;
        for (int r = 0; r < m; ++r) {
            std::fill(A + static_cast<std::size_t>(r) * n,
                      A + static_cast<std::size_t>(r + 1) * n, w.bias[o] * st.smean[r]);
        }
        const double* w1 = w.w1.data() + static_cast<std::size_t>(o) * I;
        const double* w2 = w.w2.data() + static_cast<std::size_t>(o) * I;
        const double* w3 = w.w3.data() + static_cast<std::size_t>(o) * I;
        const double* w4 = w.w4.data() + static_cast<std::size_t>(o) * I;
        for (int i = 0; i < I; ++i) {
            const double* s = st.s.data() + static_cast<std::size_t>(i) * m;
            const double* mrv = st.mr.data() + static_cast<std::size_t>(i) * n;
            const double* mcv = st.mc.data() + static_cast<std::size_t>(i) * m;
            const double gi = st.g[i];
            for (int r = 0; r < m; ++r) {
                const double si = s[r];
                const double c1 = w1[i] * invI;
                const double c2 = w2[i] * si * invI;
                const double c3 = (w3[i] * mcv[r] + w4[i] * gi) * si * invI;
                const double* yr = in + i * mn + static_cast<std::size_t>(r) * n;
                double* Ar = A + static_cast<std::size_t>(r) * n;
                for (int q = 0; q < n; ++q) Ar[q] += c1 * yr[q] + c2 * mrv[q] + c3;
            }
        }
    }
}

struct LayerCache {
    ChannelStats st;        // stats of this layer's input stack
    std::vector<double> A;  // out_ch * m * n pre-activations
};

struct ForwardState {
    bool degenerate = false;
    double pred = 0.0;
    double t = 0.0;
    double scale_prod = 1.0;  // product of input row scales
};

ForwardState run_forward(const SolutionSet& set, const NetworkWeights& w,
                         std::array<LayerCache, 5>* caches, ForwardDiag* diag) {
    for (int l = 0; l < 5; ++l) {
        if (w.layers[l].in_ch < 1 || w.layers[l].out_ch < 1) {
            throw std::invalid_argument("forward: weights are not initialized");
        }
    }
    if (w.layers[0].in_ch != 1 || w.layers[4].out_ch != 1) {
        throw std::invalid_argument("forward: boundary layers must map 1 channel");
    }
    ForwardState fs;
    const int m = set.m();
    const int n = set.n();
    if (n == 0) {
        fs.degenerate = true;
        return fs;
    }
    if (!set.all_finite()) {
        throw std::invalid_argument("forward: non-finite objective value");
    }
    if (n > kTrainedNCap) {
        if (diag) {
            diag->n_cap_exceeded = true;
        } else {
            std::cerr << "hvkit: forward called with N=" << n << " > " << kTrainedNCap
                      << " solutions; prediction is extrapolation\n";
        }
    }

    const std::size_t mn = static_cast<std::size_t>(m) * n;
    std::vector<double> scratch;

    // Input normalization: unit row maxima, scales factored out of the output.
    Vec s0 = row_scale(set);
    for (double v : s0) {
        if (v == 0.0) {
            fs.degenerate = true;
            return fs;
        }
    }
    fs.scale_prod = canonical_prod(s0.data(), s0.size(), scratch);

    // Layer inputs are kept in reused buffers: training touches millions of
    // records and per-call allocation dominates otherwise.
    thread_local std::vector<double> stack, next;
    thread_local std::array<LayerCache, 5> local;
    std::array<LayerCache, 5>& lc = caches ? *caches : local;

    // Row-major copy of the normalized input, a one-channel stack.
    stack.resize(mn);
    for (int r = 0; r < m; ++r) {
        for (int q = 0; q < n; ++q) stack[static_cast<std::size_t>(r) * n + q] = set(r, q) / s0[r];
    }

    for (int l = 0; l < 5; ++l) {
        const LayerWeights& lw = w.layers[l];
        const int in_ch = static_cast<int>(stack.size() / mn);
        if (in_ch != lw.in_ch) {
            throw std::invalid_argument("forward: channel mismatch at layer " +
                                        std::to_string(l + 1));
        }
        compute_stats(stack.data(), in_ch, m, n, w.pooling, lc[l].st);
        lc[l].A.assign(static_cast<std::size_t>(lw.out_ch) * mn, 0.0);
        layer_apply(stack.data(), lc[l].st, lw, lc[l].A.data());
        next.resize(lc[l].A.size());
        for (std::size_t k = 0; k < next.size(); ++k) next[k] = leaky(lc[l].A[k], w.leak);
        stack.swap(next);
    }

    double tacc = 0.0;
    for (std::size_t k = 0; k < mn; ++k) tacc += stack[k];
    fs.t = tacc / static_cast<double>(mn);
    fs.pred = sigmoid(fs.t) * fs.scale_prod;
    return fs;
}

void unpack_stack(const std::vector<double>& stack, int m, int n,
                  std::vector<SolutionSet>& out) {
    const std::size_t mn = static_cast<std::size_t>(m) * n;
    const int ch = static_cast<int>(stack.size() / mn);
    out.clear();
    for (int i = 0; i < ch; ++i) {
        SolutionSet s(m, n);
        for (int r = 0; r < m; ++r) {
            for (int q = 0; q < n; ++q) {
                s(r, q) = stack[i * mn + static_cast<std::size_t>(r) * n + q];
            }
        }
        out.push_back(std::move(s));
    }
}

}  // namespace

std::vector<SolutionSet> layer_forward(const std::vector<SolutionSet>& inputs,
                                       const LayerWeights& w, double leak_slope,
                                       Pooling pooling) {
    if (inputs.empty()) {
        throw std::invalid_argument("layer_forward: need at least one channel");
    }
    const int m = inputs[0].m();
    const int n = inputs[0].n();
    if (m == 0 || n == 0) {
        throw std::invalid_argument("layer_forward: channels must be non-empty");
    }
    for (const auto& c : inputs) {
        if (c.m() != m || c.n() != n) {
            throw std::invalid_argument("layer_forward: all channels must share one shape");
        }
    }
    if (static_cast<int>(inputs.size()) != w.in_ch) {
        throw std::invalid_argument("layer_forward: got " + std::to_string(inputs.size()) +
                                    " channels, weights expect " + std::to_string(w.in_ch));
    }
    const std::size_t mn = static_cast<std::size_t>(m) * n;
    std::vector<double> stack(inputs.size() * mn);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (int r = 0; r < m; ++r) {
            for (int q = 0; q < n; ++q) {
                stack[i * mn + static_cast<std::size_t>(r) * n + q] = inputs[i](r, q);
            }
        }
    }
    ChannelStats st;
    compute_stats(stack.data(), static_cast<int>(inputs.size()), m, n, pooling, st);
    std::vector<double> A(static_cast<std::size_t>(w.out_ch) * mn, 0.0);
    layer_apply(stack.data(), st, w, A.data());
    for (double& v : A) v = leaky(v, leak_slope);
    std::vector<SolutionSet> out;
    unpack_stack(A, m, n, out);
    return out;
}

double forward(const SolutionSet& set, const NetworkWeights& w, ForwardDiag* diag) {
    return run_forward(set, w, nullptr, diag).pred;
}

BackwardResult backward(const SolutionSet& set, double target_hv,
                        const NetworkWeights& w) {
    if (!(target_hv > 0.0)) {
        throw std::invalid_argument("backward: target hypervolume must be positive");
    }
    BackwardResult res;
    for (int l = 0; l < 5; ++l) {
        res.grads.layers[l].resize(w.layers[l].in_ch, w.layers[l].out_ch);
    }

    thread_local std::array<LayerCache, 5> lc;
    ForwardDiag diag;
    const ForwardState fs = run_forward(set, w, &lc, &diag);
    res.pred = fs.pred;
    res.loss = std::abs(fs.pred - target_hv) / target_hv;
    if (fs.degenerate) {
        // Constant-zero output: no weight influences it.
        return res;
    }

    const int m = set.m();
    const int n = set.n();
    const std::size_t mn = static_cast<std::size_t>(m) * n;

    const double diff = fs.pred - target_hv;
    const double gpred = diff > 0.0 ? 1.0 / target_hv : (diff < 0.0 ? -1.0 / target_hv : 0.0);
    const double sig = sigmoid(fs.t);
    const double gt = gpred * fs.scale_prod * sig * (1.0 - sig);

    // Gradient wrt the current layer's output stack, starting at the top.
    thread_local std::vector<double> gZ, gY, gA, U, gmr, gmc;
    gZ.assign(mn, gt / static_cast<double>(mn));

    for (int l = 4; l >= 0; --l) {
        const LayerWeights& lw = w.layers[l];
        LayerWeights& gw = res.grads.layers[l];
        const ChannelStats& st = lc[l].st;
        const int I = lw.in_ch, O = lw.out_ch;
        const double invI = 1.0 / I;

        gA.resize(static_cast<std::size_t>(O) * mn);
        for (std::size_t k = 0; k < gA.size(); ++k) {
            gA[k] = gZ[k] * (lc[l].A[k] > 0.0 ? 1.0 : w.leak);
        }
        U.assign(static_cast<std::size_t>(O) * m, 0.0);
        for (int o = 0; o < O; ++o) {
            for (int r = 0; r < m; ++r) {
                const double* row = gA.data() + o * mn + static_cast<std::size_t>(r) * n;
                double acc = 0.0;
                for (int q = 0; q < n; ++q) acc += row[q];
                U[static_cast<std::size_t>(o) * m + r] = acc;
            }
        }
        for (int o = 0; o < O; ++o) {
            double acc = 0.0;
            for (int r = 0; r < m; ++r) acc += U[static_cast<std::size_t>(o) * m + r] * st.smean[r];
            gw.bias[o] = acc;
        }

        const bool need_input_grad = l > 0;
        if (need_input_grad) gY.assign(static_cast<std::size_t>(I) * mn, 0.0);

        thread_local std::vector<double> gs, gX;
        gs.resize(m);
        if (need_input_grad) gX.resize(mn);
        gmr.resize(n);
        gmc.resize(m);

        for (int i = 0; i < I; ++i) {
            const double* s = st.s.data() + static_cast<std::size_t>(i) * m;
            const double* x = st.x.data() + i * mn;
            const double* mrv = st.mr.data() + static_cast<std::size_t>(i) * n;
            const double* mcv = st.mc.data() + static_cast<std::size_t>(i) * m;
            const double gi = st.g[i];

            std::fill(gs.begin(), gs.end(), 0.0);
            if (need_input_grad) {
                std::fill(gX.begin(), gX.end(), 0.0);
                std::fill(gmr.begin(), gmr.end(), 0.0);
                std::fill(gmc.begin(), gmc.end(), 0.0);
            }
            double gg = 0.0;

            for (int o = 0; o < O; ++o) {
                const std::size_t oi = static_cast<std::size_t>(o) * I + i;
                const double w1 = lw.w1[oi], w2 = lw.w2[oi], w3 = lw.w3[oi], w4 = lw.w4[oi];
                const double b = lw.bias[o];
                double acc1 = 0.0, acc2 = 0.0, acc3 = 0.0, acc4 = 0.0;
                for (int r = 0; r < m; ++r) {
                    const double si = s[r];
                    const double Uor = U[static_cast<std::size_t>(o) * m + r];
                    const double* tA = gA.data() + o * mn + static_cast<std::size_t>(r) * n;
                    const double* xr = x + static_cast<std::size_t>(r) * n;
                    double rx = 0.0, rmr = 0.0;
                    if (need_input_grad) {
                        const double c1 = w1 * si * invI;
                        const double c2 = w2 * si * invI;
                        double* gXr = gX.data() + static_cast<std::size_t>(r) * n;
                        for (int q = 0; q < n; ++q) {
                            const double t = tA[q];
                            rx += t * xr[q];
                            rmr += t * mrv[q];
                            gXr[q] += c1 * t;
                            gmr[q] += c2 * t;
                        }
                    } else {
                        for (int q = 0; q < n; ++q) {
                            const double t = tA[q];
                            rx += t * xr[q];
                            rmr += t * mrv[q];
                        }
                    }
                    acc1 += si * rx;
                    acc2 += si * rmr;
                    acc3 += Uor * si * mcv[r];
                    acc4 += Uor * si;
                    gs[r] += invI * (w1 * rx + w2 * rmr + (w3 * mcv[r] + w4 * gi + b) * Uor);
                    if (need_input_grad) {
                        gmc[r] += w3 * si * invI * Uor;
                        gg += w4 * si * invI * Uor;
                    }
                }
                gw.w1[oi] = acc1 * invI;
                gw.w2[oi] = acc2 * invI;
                gw.w3[oi] = acc3 * invI;
                gw.w4[oi] = acc4 * invI * gi;
            }

            if (!need_input_grad) continue;

            // Pooled statistics feed back into every element they averaged
            // (mean) or into their argument (max/min).
            if (w.pooling == Pooling::Mean) {
                const double inv_m = 1.0 / m;
                const double inv_n = 1.0 / n;
                const double inv_mn = 1.0 / static_cast<double>(mn);
                for (int r = 0; r < m; ++r) {
                    double* gXr = gX.data() + static_cast<std::size_t>(r) * n;
                    const double add_r = gmc[r] * inv_n + gg * inv_mn;
                    for (int q = 0; q < n; ++q) gXr[q] += gmr[q] * inv_m + add_r;
                }
            } else {
                const int* mr_arg = st.mr_arg.data() + static_cast<std::size_t>(i) * n;
                const int* mc_arg = st.mc_arg.data() + static_cast<std::size_t>(i) * m;
                for (int q = 0; q < n; ++q) {
                    gX[static_cast<std::size_t>(mr_arg[q]) * n + q] += gmr[q];
                }
                for (int r = 0; r < m; ++r) {
                    gX[static_cast<std::size_t>(r) * n + mc_arg[r]] += gmc[r];
                }
                gX[st.g_arg[i]] += gg;
            }

            // From the rescaled values back to the raw input: x = y / s with
            // s the first-attained row maximum.
            double* gYc = gY.data() + i * mn;
            const int* amax = st.amax.data() + static_cast<std::size_t>(i) * m;
            const double* asgn = st.asgn.data() + static_cast<std::size_t>(i) * m;
            for (int r = 0; r < m; ++r) {
                const double si = s[r];
                if (si == 0.0) continue;  // flat direction by convention
                const double* xr = x + static_cast<std::size_t>(r) * n;
                const double* gXr = gX.data() + static_cast<std::size_t>(r) * n;
                double* gYr = gYc + static_cast<std::size_t>(r) * n;
                double dot = 0.0;
                for (int q = 0; q < n; ++q) {
                    gYr[q] = gXr[q] / si;
                    dot += gXr[q] * xr[q];
                }
                const double corr = gs[r] - dot / si;
                gYr[amax[r]] += asgn[r] * corr;
            }
        }

        if (need_input_grad) gZ.swap(gY);
    }
    return res;
}

void save_weights(const NetworkWeights& w, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_weights: cannot open " + path);
    os.write("DHV1", 4);
    write_u32(os, 1);
    write_u32(os, static_cast<std::uint32_t>(w.channels));
    write_f64(os, w.leak);
    for (const LayerWeights& lw : w.layers) {
        write_u32(os, static_cast<std::uint32_t>(lw.in_ch));
        write_u32(os, static_cast<std::uint32_t>(lw.out_ch));
        for (const auto* block : {&lw.w1, &lw.w2, &lw.w3, &lw.w4, &lw.bias}) {
            for (double v : *block) write_f64(os, v);
        }
    }
    if (!os) throw std::runtime_error("save_weights: write failed for " + path);
}

NetworkWeights load_weights(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_weights: cannot open " + path);
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "DHV1", 4) != 0) {
        throw std::runtime_error("load_weights: " + path + " is not a model file");
    }
    const std::uint32_t version = read_u32(is, "version");
    if (version != 1) {
        throw std::runtime_error("load_weights: unsupported version " +
                                 std::to_string(version) + " in " + path);
    }
    NetworkWeights w;
    const std::uint32_t channels = read_u32(is, "channels");
    if (channels < 1 || channels > 65536) {
        throw std::runtime_error("load_weights: implausible channel count in " + path);
    }
    w.channels = static_cast<int>(channels);
    w.leak = read_f64(is, "leak");
    const int widths[6] = {1, w.channels, w.channels, w.channels, w.channels, 1};
    for (int l = 0; l < 5; ++l) {
        LayerWeights& lw = w.layers[l];
        const std::uint32_t in = read_u32(is, "layer in_ch");
        const std::uint32_t out = read_u32(is, "layer out_ch");
        if (static_cast<int>(in) != widths[l] || static_cast<int>(out) != widths[l + 1]) {
            throw std::runtime_error("load_weights: layer " + std::to_string(l + 1) +
                                     " shape mismatch in " + path);
        }
        lw.resize(static_cast<int>(in), static_cast<int>(out));
        for (auto* block : {&lw.w1, &lw.w2, &lw.w3, &lw.w4, &lw.bias}) {
            for (double& v : *block) v = read_f64(is, "layer tensor");
        }
    }
    is.peek();
    if (!is.eof()) {
        throw std::runtime_error("load_weights: trailing bytes in " + path);
    }
    return w;
}

}  // namespace hvkit
