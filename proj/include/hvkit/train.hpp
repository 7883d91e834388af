#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hvkit/dataset.hpp"
#include "hvkit/net.hpp"

namespace hvkit {

struct TrainConfig {
    int channels = 64;
    double leak = 0.01;
    Pooling pooling = Pooling::Mean;
    int epochs = 20;
    int batch = 64;
    double lr = 1e-5;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double adam_eps = 1e-8;
    std::uint64_t seed = 0;
    // Stop once the running train MAPE of an epoch falls below this
    // threshold; 0 disables the early exit.
    double stop_train_mape = 0.0;
};

// Mean absolute percentage error, targets strictly positive.
double mape(const Vec& predictions, const Vec& targets);

struct SplitIndices {
    std::vector<int> train, val, test;
};

// Seeded shuffle, then 80 / 10 / 10 by integer division. The same
// (count, seed) always reproduces the same partition.
SplitIndices make_split(std::size_t count, std::uint64_t seed);

struct EpochMetrics {
    int epoch = 0;  // 1-based
    double train_mape = 0.0;
    double val_mape = 0.0;
    double wall_seconds = 0.0;  // duration of this epoch
};

struct TrainResult {
    NetworkWeights best;  // snapshot from the epoch with the lowest val MAPE
    int best_epoch = 0;   // 1-based
    std::vector<EpochMetrics> history;
};

// MAPE of the forward pass over a record list.
double evaluate(const NetworkWeights& w, const std::vector<TrainingRecord>& records);

// Full pipeline: split, per-epoch shuffled mini-batches, Adam on the
// analytic gradients, model selection on validation MAPE. Same config and
// data give bit-identical weights. A non-finite loss aborts with context.
TrainResult train(const TrainConfig& cfg, const std::vector<TrainingRecord>& records);

void write_metrics_csv(const std::vector<EpochMetrics>& history, const std::string& path);

}  // namespace hvkit
