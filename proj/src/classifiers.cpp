#include "cti/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "cti/error.hpp"
#include "cti/rng.hpp"

namespace cti {

const char* algo_name(Algo algo) {
    switch (algo) {
        case Algo::nb: return "nb";
        case Algo::logreg: return "logreg";
        case Algo::dtree: return "dtree";
        case Algo::rforest: return "rforest";
        case Algo::knn: return "knn";
        case Algo::nn_shallow: return "nn-shallow";
        case Algo::nn_deep: return "nn-deep";
    }
    return "?";
}

Algo algo_from_name(const std::string& name) {
    for (Algo a : all_algos())
        if (name == algo_name(a)) return a;
    throw Error("invalid-argument", "unknown classifier algo: " + name);
}

std::vector<Algo> all_algos() {
    return {Algo::nb,  Algo::logreg,     Algo::dtree,  Algo::rforest,
            Algo::knn, Algo::nn_shallow, Algo::nn_deep};
}

TrainConfig TrainConfig::for_algo(Algo algo, std::uint64_t seed) {
    TrainConfig c;
    c.algo = algo;
    c.seed = seed;
    if (algo == Algo::nn_shallow) c.nn_hidden = {128};
    if (algo == Algo::nn_deep) c.nn_hidden = {256, 128, 64};
    return c;
}

namespace {

std::vector<std::size_t> encode_labels(const std::vector<std::string>& y,
                                       const std::vector<std::string>& label_space) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < label_space.size(); ++i) idx.emplace(label_space[i], i);
    std::vector<std::size_t> out;
    out.reserve(y.size());
    for (const auto& label : y) {
        auto it = idx.find(label);
        if (it == idx.end()) throw Error("invalid-argument", "label outside label space: " + label);
        out.push_back(it->second);
    }
    return out;
}

Matrix densify(const FeatureMatrix& X) {
    Matrix m(X.n_docs, X.n_features);
    for (std::size_t r = 0; r < X.n_docs; ++r) X.row_to(r, m.row(r));
    return m;
}

std::size_t argmax_lowest(const std::vector<double>& scores) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] > scores[best]) best = i;
    return best;
}

void softmax_inplace(std::vector<double>& z) {
    double mx = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double& v : z) {
        v = std::exp(v - mx);
        sum += v;
    }
    for (double& v : z) v /= sum;
}

// ---------- naive bayes ----------

NBParams train_nb(const FeatureMatrix& X, const std::vector<std::size_t>& y,
                  std::size_t n_labels, double alpha) {
    if (X.min_value() < 0.0)
        throw Error("nb-incompatible-features",
                    "multinomial naive bayes requires nonnegative features (scheme " +
                        std::string(scheme_name(X.scheme)) + ")");
    std::size_t V = X.n_features;
    NBParams p;
    p.log_prior.assign(n_labels, 0.0);
    p.log_likelihood = Matrix(n_labels, V);
    std::vector<double> class_count(n_labels, 0.0);
    Matrix feature_count(n_labels, V);
    for (std::size_t r = 0; r < X.n_docs; ++r) {
        class_count[y[r]] += 1.0;
        if (X.sparse) {
            for (std::size_t i = X.indptr[r]; i < X.indptr[r + 1]; ++i)
                feature_count(y[r], X.indices[i]) += X.values[i];
        } else {
            for (std::size_t c = 0; c < V; ++c) feature_count(y[r], c) += X.dense[r * V + c];
        }
    }
    double n = static_cast<double>(X.n_docs);
    for (std::size_t l = 0; l < n_labels; ++l) {
        p.log_prior[l] = std::log(class_count[l] / n);
        double total = 0.0;
        for (std::size_t c = 0; c < V; ++c) total += feature_count(l, c);
        double denom = std::log(total + alpha * static_cast<double>(V));
        for (std::size_t c = 0; c < V; ++c)
            p.log_likelihood(l, c) = std::log(feature_count(l, c) + alpha) - denom;
    }
    return p;
}

std::size_t predict_nb_row(const NBParams& p, const FeatureMatrix& X, std::size_t r) {
    std::size_t n_labels = p.log_prior.size();
    std::vector<double> scores = p.log_prior;
    if (X.sparse) {
        for (std::size_t i = X.indptr[r]; i < X.indptr[r + 1]; ++i)
            for (std::size_t l = 0; l < n_labels; ++l)
                scores[l] += X.values[i] * p.log_likelihood(l, X.indices[i]);
    } else {
        for (std::size_t c = 0; c < X.n_features; ++c) {
            double v = X.dense[r * X.n_features + c];
            if (v == 0.0) continue;
            for (std::size_t l = 0; l < n_labels; ++l) scores[l] += v * p.log_likelihood(l, c);
        }
    }
    return argmax_lowest(scores);
}

// ---------- logistic regression ----------

// contribution of one sample to the (unregularized, mean-scaled) gradient
void logreg_row_grad(const LinearParams& p, const double* row, std::size_t n_features,
                     std::size_t label, double scale, Matrix& grad_w,
                     std::vector<double>& grad_b) {
    std::size_t n_labels = p.bias.size();
    std::vector<double> z(n_labels);
    for (std::size_t l = 0; l < n_labels; ++l) {
        double s = p.bias[l];
        const double* w = p.weights.row(l);
        for (std::size_t c = 0; c < n_features; ++c) s += w[c] * row[c];
        z[l] = s;
    }
    softmax_inplace(z);
    for (std::size_t l = 0; l < n_labels; ++l) {
        double g = (z[l] - (l == label ? 1.0 : 0.0)) * scale;
        grad_b[l] += g;
        double* gw = grad_w.row(l);
        for (std::size_t c = 0; c < n_features; ++c) gw[c] += g * row[c];
    }
}

}  // namespace

double logreg_loss(const LinearParams& p, const Matrix& X, const std::vector<std::size_t>& y,
                   double l2) {
    std::size_t n_labels = p.bias.size();
    double loss = 0.0;
    for (std::size_t r = 0; r < X.rows; ++r) {
        std::vector<double> z(n_labels);
        for (std::size_t l = 0; l < n_labels; ++l) {
            double s = p.bias[l];
            const double* w = p.weights.row(l);
            for (std::size_t c = 0; c < X.cols; ++c) s += w[c] * X(r, c);
            z[l] = s;
        }
        softmax_inplace(z);
        loss -= std::log(std::max(z[y[r]], 1e-300));
    }
    loss /= static_cast<double>(X.rows);
    double reg = 0.0;
    for (double w : p.weights.data) reg += w * w;
    return loss + 0.5 * l2 * reg;
}

void logreg_gradient(const LinearParams& p, const Matrix& X, const std::vector<std::size_t>& y,
                     double l2, Matrix& grad_w, std::vector<double>& grad_b) {
    grad_w = Matrix(p.weights.rows, p.weights.cols);
    grad_b.assign(p.bias.size(), 0.0);
    double scale = 1.0 / static_cast<double>(X.rows);
    for (std::size_t r = 0; r < X.rows; ++r)
        logreg_row_grad(p, X.row(r), X.cols, y[r], scale, grad_w, grad_b);
    for (std::size_t i = 0; i < grad_w.data.size(); ++i) grad_w.data[i] += l2 * p.weights.data[i];
}

namespace {

LinearParams train_logreg(const FeatureMatrix& X, const std::vector<std::size_t>& y,
                          std::size_t n_labels, const TrainConfig& cfg) {
    LinearParams p;
    p.weights = Matrix(n_labels, X.n_features);
    p.bias.assign(n_labels, 0.0);
    Matrix grad_w;
    std::vector<double> grad_b;
    std::vector<double> row(X.n_features);
    double scale = 1.0 / static_cast<double>(X.n_docs);
    for (std::size_t iter = 0; iter < cfg.logreg_iters; ++iter) {
        grad_w = Matrix(n_labels, X.n_features);
        grad_b.assign(n_labels, 0.0);
        for (std::size_t r = 0; r < X.n_docs; ++r) {
            X.row_to(r, row.data());  // densified one row at a time
            logreg_row_grad(p, row.data(), X.n_features, y[r], scale, grad_w, grad_b);
        }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < grad_w.data.size(); ++i) {
            grad_w.data[i] += cfg.logreg_l2 * p.weights.data[i];
            norm2 += grad_w.data[i] * grad_w.data[i];
        }
        for (double g : grad_b) norm2 += g * g;
        if (std::sqrt(norm2) < cfg.logreg_tol) break;
        for (std::size_t i = 0; i < p.weights.data.size(); ++i)
            p.weights.data[i] -= cfg.logreg_rate * grad_w.data[i];
        for (std::size_t l = 0; l < n_labels; ++l) p.bias[l] -= cfg.logreg_rate * grad_b[l];
    }
    return p;
}

std::size_t predict_linear_row(const LinearParams& p, const double* row, std::size_t n_features) {
    std::size_t n_labels = p.bias.size();
    std::vector<double> z(n_labels);
    for (std::size_t l = 0; l < n_labels; ++l) {
        double s = p.bias[l];
        const double* w = p.weights.row(l);
        for (std::size_t c = 0; c < n_features; ++c) s += w[c] * row[c];
        z[l] = s;
    }
    return argmax_lowest(z);
}

// ---------- decision tree ----------

double gini(const std::vector<double>& counts, double total) {
    if (total <= 0.0) return 0.0;
    double g = 1.0;
    for (double c : counts) {
        double p = c / total;
        g -= p * p;
    }
    return g;
}

struct TreeBuilder {
    const Matrix& X;
    const std::vector<std::size_t>& y;
    std::size_t n_labels;
    std::size_t features_per_split;  // 0 = all
    Rng* rng;                        // only for rforest feature subsets
    TreeParams tree;

    std::int32_t build(std::vector<std::size_t> samples) {
        TreeNode node;
        node.dist.assign(n_labels, 0.0);
        for (std::size_t s : samples) node.dist[y[s]] += 1.0;
        double total = static_cast<double>(samples.size());
        double node_gini = gini(node.dist, total);

        std::int32_t id = static_cast<std::int32_t>(tree.nodes.size());
        tree.nodes.push_back(node);
        if (samples.size() < 2 || node_gini == 0.0) return id;

        std::vector<std::size_t> candidates(X.cols);
        std::iota(candidates.begin(), candidates.end(), 0);
        if (features_per_split > 0 && features_per_split < X.cols) {
            std::shuffle(candidates.begin(), candidates.end(), *rng);
            candidates.resize(features_per_split);
            std::sort(candidates.begin(), candidates.end());
        }

        // any valid split is taken, even with zero gini gain: zero-gain splits
        // can still enable separating splits deeper down (xor-like data)
        double best_impurity = std::numeric_limits<double>::infinity();
        std::int32_t best_feature = -1;
        double best_threshold = 0.0;
        std::vector<std::pair<double, std::size_t>> order(samples.size());
        for (std::size_t f : candidates) {
            for (std::size_t i = 0; i < samples.size(); ++i)
                order[i] = {X(samples[i], f), y[samples[i]]};
            std::sort(order.begin(), order.end());
            std::vector<double> left(n_labels, 0.0);
            std::vector<double> right = tree.nodes[id].dist;
            for (std::size_t i = 0; i + 1 < order.size(); ++i) {
                left[order[i].second] += 1.0;
                right[order[i].second] -= 1.0;
                if (order[i].first == order[i + 1].first) continue;
                double nl = static_cast<double>(i + 1), nr = total - nl;
                double impurity = (nl * gini(left, nl) + nr * gini(right, nr)) / total;
                if (impurity < best_impurity - 1e-12) {
                    best_impurity = impurity;
                    best_feature = static_cast<std::int32_t>(f);
                    best_threshold = 0.5 * (order[i].first + order[i + 1].first);
                }
            }
        }
        if (best_feature < 0) return id;

        std::vector<std::size_t> left_samples, right_samples;
        for (std::size_t s : samples)
            (X(s, static_cast<std::size_t>(best_feature)) <= best_threshold ? left_samples
                                                                            : right_samples)
                .push_back(s);
        if (left_samples.empty() || right_samples.empty()) return id;
        samples.clear();
        samples.shrink_to_fit();
        tree.nodes[id].feature = best_feature;
        tree.nodes[id].threshold = best_threshold;
        std::int32_t left_id = build(std::move(left_samples));
        tree.nodes[id].left = left_id;
        std::int32_t right_id = build(std::move(right_samples));
        tree.nodes[id].right = right_id;
        return id;
    }
};

TreeParams train_tree(const Matrix& X, const std::vector<std::size_t>& y, std::size_t n_labels,
                      std::size_t features_per_split, Rng* rng,
                      const std::vector<std::size_t>& samples) {
    TreeBuilder builder{X, y, n_labels, features_per_split, rng, {}};
    builder.build(samples);
    return std::move(builder.tree);
}

ForestParams train_forest(const Matrix& X, const std::vector<std::size_t>& y,
                          std::size_t n_labels, const TrainConfig& cfg) {
    ForestParams forest;
    std::size_t mtry = static_cast<std::size_t>(
        std::max(1.0, std::floor(std::sqrt(static_cast<double>(X.cols)))));
    for (std::size_t t = 0; t < cfg.rf_trees; ++t) {
        std::uint64_t tree_seed = derive_seed(cfg.seed, "rf-tree:" + std::to_string(t));
        forest.tree_seeds.push_back(tree_seed);
        Rng rng = make_rng(tree_seed);
        std::vector<std::size_t> bootstrap(X.rows);
        for (auto& s : bootstrap) s = rng() % X.rows;
        std::sort(bootstrap.begin(), bootstrap.end());
        forest.trees.push_back(train_tree(X, y, n_labels, mtry, &rng, bootstrap));
    }
    return forest;
}

// ---------- knn ----------

double cosine_distance(const double* a, const double* b, std::size_t n) {
    double d = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 1.0;  // zero vectors are maximally distant
    return 1.0 - d / std::sqrt(na * nb);
}

std::size_t predict_knn_row(const KnnParams& p, const double* row, std::size_t n_features,
                            std::size_t n_labels) {
    std::vector<std::pair<double, std::size_t>> dists(p.train.rows);
    for (std::size_t r = 0; r < p.train.rows; ++r)
        dists[r] = {cosine_distance(row, p.train.row(r), n_features), r};
    std::size_t k = std::min(p.k, dists.size());
    std::partial_sort(dists.begin(), dists.begin() + k, dists.end());
    std::vector<std::size_t> votes(n_labels, 0);
    for (std::size_t i = 0; i < k; ++i) ++votes[p.labels[dists[i].second]];
    std::size_t best_votes = *std::max_element(votes.begin(), votes.end());
    // vote ties go to the nearest neighbor among the tied labels
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t label = p.labels[dists[i].second];
        if (votes[label] == best_votes) return label;
    }
    return 0;
}

// ---------- neural nets ----------

NNParams init_nn(std::size_t n_features, const std::vector<std::size_t>& hidden,
                 std::size_t n_labels, Rng& rng) {
    std::vector<std::size_t> sizes;
    sizes.push_back(n_features);
    for (std::size_t h : hidden) sizes.push_back(h);
    sizes.push_back(n_labels);
    NNParams p;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        std::size_t fan_in = sizes[l], fan_out = sizes[l + 1];
        double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        Matrix w(fan_out, fan_in);
        for (double& v : w.data) v = (uniform01(rng) * 2.0 - 1.0) * limit;
        p.weights.push_back(std::move(w));
        p.bias.emplace_back(fan_out, 0.0);
    }
    return p;
}

// forward pass; activations[0] = input row copies, ReLU on hidden layers
std::vector<Matrix> nn_forward(const NNParams& p, const Matrix& X) {
    std::vector<Matrix> acts;
    acts.push_back(X);
    for (std::size_t l = 0; l < p.weights.size(); ++l) {
        const Matrix& in = acts.back();
        const Matrix& w = p.weights[l];
        Matrix out(in.rows, w.rows);
        for (std::size_t r = 0; r < in.rows; ++r)
            for (std::size_t o = 0; o < w.rows; ++o) {
                double s = p.bias[l][o];
                const double* wr = w.row(o);
                const double* ir = in.row(r);
                for (std::size_t c = 0; c < w.cols; ++c) s += wr[c] * ir[c];
                out(r, o) = s;
            }
        if (l + 1 < p.weights.size())
            for (double& v : out.data) v = std::max(0.0, v);  // ReLU
        acts.push_back(std::move(out));
    }
    // softmax on the final layer
    Matrix& logits = acts.back();
    for (std::size_t r = 0; r < logits.rows; ++r) {
        std::vector<double> z(logits.row(r), logits.row(r) + logits.cols);
        softmax_inplace(z);
        std::copy(z.begin(), z.end(), logits.row(r));
    }
    return acts;
}

}  // namespace

double nn_loss(const NNParams& p, const Matrix& X, const std::vector<std::size_t>& y) {
    auto acts = nn_forward(p, X);
    const Matrix& probs = acts.back();
    double loss = 0.0;
    for (std::size_t r = 0; r < X.rows; ++r)
        loss -= std::log(std::max(probs(r, y[r]), 1e-300));
    return loss / static_cast<double>(X.rows);
}

NNParams nn_gradient(const NNParams& p, const Matrix& X, const std::vector<std::size_t>& y) {
    auto acts = nn_forward(p, X);
    std::size_t L = p.weights.size();
    NNParams grad;
    for (std::size_t l = 0; l < L; ++l) {
        grad.weights.emplace_back(p.weights[l].rows, p.weights[l].cols);
        grad.bias.emplace_back(p.bias[l].size(), 0.0);
    }
    double scale = 1.0 / static_cast<double>(X.rows);
    // delta at the output: softmax - onehot
    Matrix delta = acts[L];
    for (std::size_t r = 0; r < delta.rows; ++r) delta(r, y[r]) -= 1.0;
    for (double& v : delta.data) v *= scale;

    for (std::size_t l = L; l-- > 0;) {
        const Matrix& in = acts[l];
        for (std::size_t r = 0; r < delta.rows; ++r)
            for (std::size_t o = 0; o < delta.cols; ++o) {
                double d = delta(r, o);
                if (d == 0.0) continue;
                grad.bias[l][o] += d;
                double* gw = grad.weights[l].row(o);
                const double* ir = in.row(r);
                for (std::size_t c = 0; c < in.cols; ++c) gw[c] += d * ir[c];
            }
        if (l == 0) break;
        Matrix prev_delta(delta.rows, p.weights[l].cols);
        for (std::size_t r = 0; r < delta.rows; ++r)
            for (std::size_t c = 0; c < p.weights[l].cols; ++c) {
                if (in(r, c) <= 0.0) continue;  // ReLU derivative
                double s = 0.0;
                for (std::size_t o = 0; o < delta.cols; ++o)
                    s += delta(r, o) * p.weights[l](o, c);
                prev_delta(r, c) = s;
            }
        delta = std::move(prev_delta);
    }
    return grad;
}

namespace {

NNParams train_nn(const FeatureMatrix& X, const std::vector<std::size_t>& y,
                  std::size_t n_labels, const TrainConfig& cfg) {
    Rng rng = make_rng(cfg.seed);
    NNParams p = init_nn(X.n_features, cfg.nn_hidden, n_labels, rng);
    NNParams velocity;
    for (std::size_t l = 0; l < p.weights.size(); ++l) {
        velocity.weights.emplace_back(p.weights[l].rows, p.weights[l].cols);
        velocity.bias.emplace_back(p.bias[l].size(), 0.0);
    }
    std::vector<std::size_t> order(X.n_docs);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t epoch = 0; epoch < cfg.nn_epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t start = 0; start < order.size(); start += cfg.nn_batch) {
            std::size_t end = std::min(order.size(), start + cfg.nn_batch);
            Matrix batch(end - start, X.n_features);  // rows densified per batch
            std::vector<std::size_t> batch_y(end - start);
            for (std::size_t i = start; i < end; ++i) {
                X.row_to(order[i], batch.row(i - start));
                batch_y[i - start] = y[order[i]];
            }
            NNParams grad = nn_gradient(p, batch, batch_y);
            for (std::size_t l = 0; l < p.weights.size(); ++l) {
                for (std::size_t i = 0; i < p.weights[l].data.size(); ++i) {
                    velocity.weights[l].data[i] = cfg.nn_momentum * velocity.weights[l].data[i] -
                                                  cfg.nn_rate * grad.weights[l].data[i];
                    p.weights[l].data[i] += velocity.weights[l].data[i];
                }
                for (std::size_t i = 0; i < p.bias[l].size(); ++i) {
                    velocity.bias[l][i] =
                        cfg.nn_momentum * velocity.bias[l][i] - cfg.nn_rate * grad.bias[l][i];
                    p.bias[l][i] += velocity.bias[l][i];
                }
            }
        }
    }
    return p;
}

std::size_t predict_nn_row(const NNParams& p, const double* row, std::size_t n_features) {
    Matrix x(1, n_features);
    std::copy(row, row + n_features, x.row(0));
    auto acts = nn_forward(p, x);
    const Matrix& probs = acts.back();
    std::vector<double> z(probs.row(0), probs.row(0) + probs.cols);
    return argmax_lowest(z);
}

}  // namespace

std::vector<double> tree_predict_dist(const TreeParams& tree, const double* row) {
    std::size_t node = 0;
    while (tree.nodes[node].feature >= 0) {
        const TreeNode& n = tree.nodes[node];
        node = static_cast<std::size_t>(
            row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right);
    }
    return tree.nodes[node].dist;
}

ClassifierModel train_classifier(const FeatureMatrix& X, const std::vector<std::string>& y,
                                 const TrainConfig& config, std::vector<std::string> label_space) {
    if (X.n_docs != y.size()) throw Error("invalid-argument", "row/label count mismatch");
    if (X.n_docs < 2) throw Error("invalid-argument", "need at least 2 training rows");
    if (label_space.empty()) {
        std::set<std::string> uniq(y.begin(), y.end());
        label_space.assign(uniq.begin(), uniq.end());
    }
    {
        std::set<std::string> seen(y.begin(), y.end());
        if (seen.size() < 2) throw Error("invalid-argument", "need at least 2 distinct labels");
    }
    auto yi = encode_labels(y, label_space);
    std::size_t n_labels = label_space.size();

    ClassifierModel model;
    model.algo = config.algo;
    model.config = config;
    if (model.config.nn_hidden.empty() &&
        (config.algo == Algo::nn_shallow || config.algo == Algo::nn_deep))
        model.config.nn_hidden = TrainConfig::for_algo(config.algo).nn_hidden;
    model.label_space = label_space;
    model.train_scheme = scheme_name(X.scheme);
    model.n_features = X.n_features;

    switch (config.algo) {
        case Algo::nb:
            model.nb = train_nb(X, yi, n_labels, config.nb_alpha);
            break;
        case Algo::logreg:
            model.linear = train_logreg(X, yi, n_labels, config);
            break;
        case Algo::dtree: {
            Matrix dense = densify(X);
            std::vector<std::size_t> all(X.n_docs);
            std::iota(all.begin(), all.end(), 0);
            model.tree = train_tree(dense, yi, n_labels, 0, nullptr, all);
            break;
        }
        case Algo::rforest: {
            Matrix dense = densify(X);
            model.forest = train_forest(dense, yi, n_labels, config);
            break;
        }
        case Algo::knn: {
            KnnParams p;
            p.train = densify(X);
            p.labels = yi;
            p.k = config.knn_k;
            model.knn = std::move(p);
            break;
        }
        case Algo::nn_shallow:
        case Algo::nn_deep:
            model.nn = train_nn(X, yi, n_labels, model.config);
            break;
    }
    return model;
}

std::vector<std::string> predict(const ClassifierModel& model, const FeatureMatrix& X) {
    if (X.n_features != model.n_features || scheme_name(X.scheme) != model.train_scheme)
        throw Error("scheme-mismatch",
                    std::string("model trained on ") + model.train_scheme + "/" +
                        std::to_string(model.n_features) + " features, got " +
                        scheme_name(X.scheme) + "/" + std::to_string(X.n_features));
    std::vector<std::string> out;
    out.reserve(X.n_docs);
    std::vector<double> row(X.n_features);
    std::size_t n_labels = model.label_space.size();
    for (std::size_t r = 0; r < X.n_docs; ++r) {
        std::size_t label = 0;
        switch (model.algo) {
            case Algo::nb:
                label = predict_nb_row(*model.nb, X, r);
                break;
            case Algo::logreg:
                X.row_to(r, row.data());
                label = predict_linear_row(*model.linear, row.data(), X.n_features);
                break;
            case Algo::dtree: {
                X.row_to(r, row.data());
                auto dist = tree_predict_dist(*model.tree, row.data());
                label = argmax_lowest(dist);
                break;
            }
            case Algo::rforest: {
                X.row_to(r, row.data());
                std::vector<double> votes(n_labels, 0.0);
                for (const auto& tree : model.forest->trees) {
                    auto dist = tree_predict_dist(tree, row.data());
                    votes[argmax_lowest(dist)] += 1.0;
                }
                label = argmax_lowest(votes);
                break;
            }
            case Algo::knn:
                X.row_to(r, row.data());
                label = predict_knn_row(*model.knn, row.data(), X.n_features, n_labels);
                break;
            case Algo::nn_shallow:
            case Algo::nn_deep:
                X.row_to(r, row.data());
                label = predict_nn_row(*model.nn, row.data(), X.n_features);
                break;
        }
        out.push_back(model.label_space[label]);
    }
    return out;
}

double accuracy(const std::vector<std::string>& pred, const std::vector<std::string>& truth) {
    if (pred.size() != truth.size())
        throw Error("invalid-argument", "prediction/truth length mismatch");
    if (pred.empty()) throw Error("invalid-argument", "empty prediction list");
    std::size_t matches = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (pred[i] == truth[i]) ++matches;
    return static_cast<double>(matches) / static_cast<double>(pred.size());
}

// ---------- persistence ----------

namespace {

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void save_dense(std::ostream& out, const Matrix& m, const char* name) {
    out << name << " " << m.rows << " " << m.cols << "\n";
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) out << (c ? " " : "") << fmt17(m(r, c));
        out << "\n";
    }
}

Matrix load_dense(std::istream& in, const char* expected) {
    std::string name;
    std::size_t rows = 0, cols = 0;
    in >> name >> rows >> cols;
    if (name != expected) throw Error("bad-artifact", "expected section " + std::string(expected));
    Matrix m(rows, cols);
    for (double& v : m.data) in >> v;
    return m;
}

void save_vector(std::ostream& out, const std::vector<double>& v, const char* name) {
    out << name << " " << v.size() << "\n";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << fmt17(v[i]);
    out << "\n";
}

std::vector<double> load_vector(std::istream& in, const char* expected) {
    std::string name;
    std::size_t n = 0;
    in >> name >> n;
    if (name != expected) throw Error("bad-artifact", "expected section " + std::string(expected));
    std::vector<double> v(n);
    for (double& x : v) in >> x;
    return v;
}

}  // namespace

void ClassifierModel::save(std::ostream& out) const {
    out << "cti-model v1\n";
    out << "algo " << algo_name(algo) << "\n";
    out << "labels";
    for (const auto& label : label_space) out << "\t" << label;
    out << "\n";
    out << "train_scheme " << train_scheme << "\n";
    out << "n_features " << n_features << "\n";
    out << "seed " << config.seed << "\n";
    switch (algo) {
        case Algo::nb:
            out << "nb_alpha " << fmt17(config.nb_alpha) << "\n";
            save_vector(out, nb->log_prior, "log_prior");
            save_dense(out, nb->log_likelihood, "log_likelihood");
            break;
        case Algo::logreg:
            out << "l2 " << fmt17(config.logreg_l2) << " rate " << fmt17(config.logreg_rate)
                << " iters " << config.logreg_iters << "\n";
            save_dense(out, linear->weights, "weights");
            save_vector(out, linear->bias, "bias");
            break;
        case Algo::dtree:
        case Algo::rforest: {
            auto save_tree = [&](const TreeParams& t) {
                out << "tree " << t.nodes.size() << "\n";
                for (const auto& n : t.nodes) {
                    out << n.feature << " " << fmt17(n.threshold) << " " << n.left << " "
                        << n.right;
                    for (double d : n.dist) out << " " << fmt17(d);
                    out << "\n";
                }
            };
            if (algo == Algo::dtree) {
                save_tree(*tree);
            } else {
                out << "n_trees " << forest->trees.size() << "\n";
                for (std::size_t t = 0; t < forest->trees.size(); ++t) {
                    out << "tree_seed " << forest->tree_seeds[t] << "\n";
                    save_tree(forest->trees[t]);
                }
            }
            break;
        }
        case Algo::knn: {
            out << "k " << knn->k << "\n";
            save_dense(out, knn->train, "train");
            out << "train_labels " << knn->labels.size() << "\n";
            for (std::size_t i = 0; i < knn->labels.size(); ++i)
                out << (i ? " " : "") << knn->labels[i];
            out << "\n";
            break;
        }
        case Algo::nn_shallow:
        case Algo::nn_deep: {
            out << "n_layers " << nn->weights.size() << "\n";
            for (std::size_t l = 0; l < nn->weights.size(); ++l) {
                save_dense(out, nn->weights[l], "weights");
                save_vector(out, nn->bias[l], "bias");
            }
            break;
        }
    }
}

ClassifierModel ClassifierModel::load(std::istream& in) {
    std::string header;
    std::getline(in, header);
    if (header != "cti-model v1") throw Error("bad-artifact", "not a cti model file");
    ClassifierModel model;
    std::string key, value, line;
    in >> key >> value;
    model.algo = algo_from_name(value);
    model.config = TrainConfig::for_algo(model.algo);
    in.ignore();
    std::getline(in, line);
    {
        std::istringstream ls(line);
        std::string field;
        std::getline(ls, field, '\t');
        while (std::getline(ls, field, '\t')) model.label_space.push_back(field);
    }
    in >> key >> model.train_scheme;
    in >> key >> model.n_features;
    in >> key >> model.config.seed;
    auto load_tree = [&](TreeParams& t) {
        std::size_t n_nodes = 0;
        in >> key >> n_nodes;
        t.nodes.resize(n_nodes);
        for (auto& n : t.nodes) {
            in >> n.feature >> n.threshold >> n.left >> n.right;
            n.dist.assign(model.label_space.size(), 0.0);
            for (double& d : n.dist) in >> d;
        }
    };
    switch (model.algo) {
        case Algo::nb: {
            in >> key >> model.config.nb_alpha;
            NBParams p;
            p.log_prior = load_vector(in, "log_prior");
            p.log_likelihood = load_dense(in, "log_likelihood");
            model.nb = std::move(p);
            break;
        }
        case Algo::logreg: {
            in >> key >> model.config.logreg_l2 >> key >> model.config.logreg_rate >> key >>
                model.config.logreg_iters;
            LinearParams p;
            p.weights = load_dense(in, "weights");
            p.bias = load_vector(in, "bias");
            model.linear = std::move(p);
            break;
        }
        case Algo::dtree: {
            TreeParams t;
            load_tree(t);
            model.tree = std::move(t);
            break;
        }
        case Algo::rforest: {
            ForestParams f;
            std::size_t n_trees = 0;
            in >> key >> n_trees;
            for (std::size_t t = 0; t < n_trees; ++t) {
                std::uint64_t seed = 0;
                in >> key >> seed;
                f.tree_seeds.push_back(seed);
                TreeParams tp;
                load_tree(tp);
                f.trees.push_back(std::move(tp));
            }
            model.forest = std::move(f);
            break;
        }
        case Algo::knn: {
            KnnParams p;
            in >> key >> p.k;
            model.config.knn_k = p.k;
            p.train = load_dense(in, "train");
            std::size_t n = 0;
            in >> key >> n;
            p.labels.resize(n);
            for (auto& l : p.labels) in >> l;
            model.knn = std::move(p);
            break;
        }
        case Algo::nn_shallow:
        case Algo::nn_deep: {
            NNParams p;
            std::size_t n_layers = 0;
            in >> key >> n_layers;
            for (std::size_t l = 0; l < n_layers; ++l) {
                p.weights.push_back(load_dense(in, "weights"));
                p.bias.push_back(load_vector(in, "bias"));
            }
            model.nn = std::move(p);
            break;
        }
    }
    if (!in) throw Error("bad-artifact", "truncated model file");
    return model;
}

}  // namespace cti
