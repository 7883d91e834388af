#include "hvkit/train.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "hvkit/rng.hpp"

namespace hvkit {

double mape(const Vec& predictions, const Vec& targets) {
    if (predictions.size() != targets.size()) {
        throw std::invalid_argument("mape: size mismatch");
    }
    if (predictions.empty()) {
        throw std::invalid_argument("mape: empty input");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < predictions.size(); ++k) {
        if (!(targets[k] > 0.0)) {
            throw std::invalid_argument("mape: targets must be positive");
        }
        acc += std::abs(predictions[k] - targets[k]) / targets[k];
    }
    return acc / static_cast<double>(predictions.size());
}

SplitIndices make_split(std::size_t count, std::uint64_t seed) {
    std::vector<int> idx(count);
    for (std::size_t k = 0; k < count; ++k) idx[k] = static_cast<int>(k);
    Rng rng = Rng::stream(seed, 0xDA7A);
    rng.shuffle(idx);
    const std::size_t n_train = count * 80 / 100;
    const std::size_t n_val = count * 10 / 100;
    SplitIndices s;
    s.train.assign(idx.begin(), idx.begin() + n_train);
    s.val.assign(idx.begin() + n_train, idx.begin() + n_train + n_val);
    s.test.assign(idx.begin() + n_train + n_val, idx.end());
    return s;
}

double evaluate(const NetworkWeights& w, const std::vector<TrainingRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("evaluate: no records");
    }
    Vec preds, targets;
    preds.reserve(records.size());
    targets.reserve(records.size());
    ForwardDiag diag;
    for (const TrainingRecord& rec : records) {
        preds.push_back(forward(rec.set, w, &diag));
        targets.push_back(rec.hv);
    }
    return mape(preds, targets);
}

namespace {

struct AdamState {
    NetworkGradients m, v;
    long step = 0;

    explicit AdamState(const NetworkWeights& w) {
        for (int l = 0; l < 5; ++l) {
            m.layers[l].resize(w.layers[l].in_ch, w.layers[l].out_ch);
            v.layers[l].resize(w.layers[l].in_ch, w.layers[l].out_ch);
        }
    }
};

void for_each_block(NetworkWeights& w, NetworkGradients& g, AdamState& st,
                    const TrainConfig& cfg) {
    ++st.step;
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(st.step));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(st.step));
    for (int l = 0; l < 5; ++l) {
        LayerWeights& lw = w.layers[l];
        LayerWeights& lg = g.layers[l];
        LayerWeights& lm = st.m.layers[l];
        LayerWeights& lv = st.v.layers[l];
        std::vector<double>* wb[5] = {&lw.w1, &lw.w2, &lw.w3, &lw.w4, &lw.bias};
        std::vector<double>* gb[5] = {&lg.w1, &lg.w2, &lg.w3, &lg.w4, &lg.bias};
        std::vector<double>* mb[5] = {&lm.w1, &lm.w2, &lm.w3, &lm.w4, &lm.bias};
        std::vector<double>* vb[5] = {&lv.w1, &lv.w2, &lv.w3, &lv.w4, &lv.bias};
        for (int b = 0; b < 5; ++b) {
            std::vector<double>& wv = *wb[b];
            std::vector<double>& gv = *gb[b];
            std::vector<double>& mv = *mb[b];
            std::vector<double>& vv = *vb[b];
            for (std::size_t k = 0; k < wv.size(); ++k) {
                mv[k] = cfg.beta1 * mv[k] + (1.0 - cfg.beta1) * gv[k];
                vv[k] = cfg.beta2 * vv[k] + (1.0 - cfg.beta2) * gv[k] * gv[k];
                const double mhat = mv[k] / bc1;
                const double vhat = vv[k] / bc2;
                wv[k] -= cfg.lr * mhat / (std::sqrt(vhat) + cfg.adam_eps);
            }
        }
    }
}

void accumulate(NetworkGradients& into, const NetworkGradients& g) {
    for (int l = 0; l < 5; ++l) {
        LayerWeights& a = into.layers[l];
        const LayerWeights& b = g.layers[l];
        for (std::size_t k = 0; k < a.w1.size(); ++k) {
            a.w1[k] += b.w1[k];
            a.w2[k] += b.w2[k];
            a.w3[k] += b.w3[k];
            a.w4[k] += b.w4[k];
        }
        for (std::size_t k = 0; k < a.bias.size(); ++k) a.bias[k] += b.bias[k];
    }
}

void scale(NetworkGradients& g, double f) {
    for (int l = 0; l < 5; ++l) {
        LayerWeights& a = g.layers[l];
        for (auto* blk : {&a.w1, &a.w2, &a.w3, &a.w4, &a.bias}) {
            for (double& v : *blk) v *= f;
        }
    }
}

void zero(NetworkGradients& g, const NetworkWeights& w) {
    for (int l = 0; l < 5; ++l) {
        g.layers[l].resize(w.layers[l].in_ch, w.layers[l].out_ch);
    }
}

}  // namespace

TrainResult train(const TrainConfig& cfg, const std::vector<TrainingRecord>& records) {
    if (records.size() < 10) {
        throw std::invalid_argument("train: need at least 10 records for a split");
    }
    if (cfg.epochs < 1 || cfg.batch < 1 || cfg.channels < 1 || !(cfg.lr > 0.0)) {
        throw std::invalid_argument("train: invalid configuration");
    }
    for (const TrainingRecord& rec : records) {
        if (!(rec.hv > 0.0)) {
            throw std::invalid_argument("train: record with non-positive hypervolume");
        }
    }

    const SplitIndices split = make_split(records.size(), cfg.seed);
    std::vector<TrainingRecord> val_records;
    for (int k : split.val) val_records.push_back(records[k]);

    NetworkWeights w = init_weights(cfg.channels, cfg.seed, cfg.leak);
    w.pooling = cfg.pooling;
    AdamState adam(w);
    NetworkGradients batch_grad;

    TrainResult result;
    result.best = w;
    double best_val = std::numeric_limits<double>::infinity();

    std::vector<int> order = split.train;
    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        const auto t0 = std::chrono::steady_clock::now();
        Rng erng = Rng::stream(cfg.seed, 0xE70C000 + static_cast<std::uint64_t>(epoch));
        erng.shuffle(order);

        double loss_acc = 0.0;
        std::size_t seen = 0;
        for (std::size_t start = 0; start < order.size(); start += cfg.batch) {
            const std::size_t stop = std::min(order.size(), start + cfg.batch);
            zero(batch_grad, w);
            for (std::size_t k = start; k < stop; ++k) {
                const TrainingRecord& rec = records[order[k]];
                BackwardResult br = backward(rec.set, rec.hv, w);
                loss_acc += br.loss;
                accumulate(batch_grad, br.grads);
            }
            seen += stop - start;
            scale(batch_grad, 1.0 / static_cast<double>(stop - start));
            for_each_block(w, batch_grad, adam, cfg);
        }
        const double train_mape = loss_acc / static_cast<double>(seen);
        const double val_mape = val_records.empty() ? train_mape : evaluate(w, val_records);
        if (!std::isfinite(train_mape) || !std::isfinite(val_mape)) {
            throw std::runtime_error("train: loss diverged at epoch " + std::to_string(epoch) +
                                     " (train MAPE " + std::to_string(train_mape) + ")");
        }
        const auto t1 = std::chrono::steady_clock::now();

        EpochMetrics em;
        em.epoch = epoch;
        em.train_mape = train_mape;
        em.val_mape = val_mape;
        em.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
        result.history.push_back(em);

        if (val_mape < best_val) {
            best_val = val_mape;
            result.best = w;
            result.best_epoch = epoch;
        }
        if (cfg.stop_train_mape > 0.0 && train_mape < cfg.stop_train_mape) break;
    }
    return result;
}

void write_metrics_csv(const std::vector<EpochMetrics>& history, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_metrics_csv: cannot open " + path);
    os << "epoch,train_mape,val_mape,wall_seconds\n";
    char buf[160];
    for (const EpochMetrics& em : history) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.3f\n", em.epoch, em.train_mape,
                      em.val_mape, em.wall_seconds);
        os << buf;
    }
    if (!os) throw std::runtime_error("write_metrics_csv: write failed for " + path);
}

}  // namespace hvkit
