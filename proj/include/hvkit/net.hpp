#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hvkit/solution_set.hpp"

namespace hvkit {

// Surrogate for the hypervolume with reference 0: five layers that commute
// with per-objective scaling, objective permutation and solution permutation,
// so the prediction inherits the same symmetries as the exact indicator.

enum class Pooling { Mean, Max, Min };

struct LayerWeights {
    int in_ch = 0;
    int out_ch = 0;
    // Four mixing weights per (output, input) channel pair, row-major
    // [o * in_ch + i]: w1 scales the element itself, w2 the per-solution mean
    // over objectives, w3 the per-objective mean over solutions, w4 the grand
    // mean. The bias enters inside the per-objective rescaling, one value per
    // output channel, which is what keeps the layer scale-equivariant.
    std::vector<double> w1, w2, w3, w4;
    std::vector<double> bias;

    void resize(int in, int out) {
        in_ch = in;
        out_ch = out;
        const std::size_t k = static_cast<std::size_t>(in) * out;
        w1.assign(k, 0.0);
        w2.assign(k, 0.0);
        w3.assign(k, 0.0);
        w4.assign(k, 0.0);
        bias.assign(out, 0.0);
    }
};

struct NetworkWeights {
    int channels = 0;
    double leak = 0.01;
    // Which statistic the layer pools with. Mean is the default; the switch
    // is runtime-only and not stored in model files.
    Pooling pooling = Pooling::Mean;
    std::array<LayerWeights, 5> layers;  // 1 -> c -> c -> c -> c -> 1
};

// Gradients mirror the weight layout.
struct NetworkGradients {
    std::array<LayerWeights, 5> layers;
};

// 12c^2 + 12c + 1: first layer 5c, three middle layers 4c^2+c each, last 4c+1.
long param_count(int channels);

// Uniform in [-a, a] with a = sqrt(1 / (5 * in_ch)) per layer, biases
// included. One derived stream per layer.
NetworkWeights init_weights(int channels, std::uint64_t seed, double leak = 0.01);

// Per-objective scale s_i = max_j |y_ij|.
Vec row_scale(const SolutionSet& set);

// (set with every row divided by its scale, the scales). A zero row cannot
// be rescaled and throws.
std::pair<SolutionSet, Vec> rescale(const SolutionSet& set);

// One layer applied to a channel list (all channels M x N). Exposed for
// tests; forward() fuses the same computation.
std::vector<SolutionSet> layer_forward(const std::vector<SolutionSet>& inputs,
                                       const LayerWeights& w, double leak,
                                       Pooling pooling = Pooling::Mean);

// Sets with more solutions than the generator ever produces still evaluate,
// but the caller is warned: predictions there are extrapolation.
constexpr int kTrainedNCap = 100;

struct ForwardDiag {
    bool n_cap_exceeded = false;
};

// Prediction: logistic(grand mean of the last layer) times the product of
// the input row scales. Empty sets and sets with a zero row return 0.
// When diag is null an N-cap breach is reported once on stderr instead.
double forward(const SolutionSet& set, const NetworkWeights& w,
               ForwardDiag* diag = nullptr);

struct BackwardResult {
    double pred = 0.0;
    double loss = 0.0;  // |pred - target| / target
    NetworkGradients grads;
};

// Analytic reverse-mode gradient of the relative-error loss for one set.
// Subgradient conventions: sign(0) = 0 at pred == target, the negative-side
// slope at pre-activations exactly 0, first-index argmax through the row
// scales, zero everywhere a row scale vanishes.
BackwardResult backward(const SolutionSet& set, double target_hv,
                        const NetworkWeights& w);

void save_weights(const NetworkWeights& w, const std::string& path);
NetworkWeights load_weights(const std::string& path);

}  // namespace hvkit
