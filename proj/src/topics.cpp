#include "cti/topics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cti/error.hpp"
#include "cti/features.hpp"
#include "cti/rng.hpp"

namespace cti {

TopicModel fit_lda(const FeatureMatrix& counts, std::size_t k, const LdaConfig& config,
                   const SweepCallback& on_sweep) {
    if (counts.scheme != Scheme::bow_tf)
        throw Error("invalid-argument", "fit_lda requires a bow-tf count matrix");
    if (k < 2) throw Error("invalid-argument", "fit_lda requires k >= 2");
    if (counts.n_docs == 0 || counts.n_features == 0)
        throw Error("invalid-argument", "fit_lda requires a nonempty matrix");

    std::size_t n = counts.n_docs, V = counts.n_features;
    // expand to a token stream per document
    std::vector<std::vector<std::size_t>> doc_tokens(n);
    std::size_t total_tokens = 0;
    for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t i = counts.indptr[d]; i < counts.indptr[d + 1]; ++i) {
            double v = counts.values[i];
            if (v < 0.0 || v != std::floor(v))
                throw Error("invalid-argument", "fit_lda requires nonnegative integer counts");
            for (std::size_t c = 0; c < static_cast<std::size_t>(v); ++c)
                doc_tokens[d].push_back(counts.indices[i]);
        }
        total_tokens += doc_tokens[d].size();
    }
    if (k > total_tokens)
        throw Error("invalid-argument", "fit_lda: k exceeds total token count");

    double alpha = config.alpha > 0.0 ? config.alpha : 50.0 / static_cast<double>(k);
    double beta = config.beta;

    Rng rng = make_rng(config.seed);
    std::vector<std::vector<std::size_t>> z(n);           // topic assignment per token
    std::vector<std::vector<std::size_t>> doc_topic(n, std::vector<std::size_t>(k, 0));
    std::vector<std::vector<std::size_t>> topic_term(k, std::vector<std::size_t>(V, 0));
    std::vector<std::size_t> topic_total(k, 0);

    for (std::size_t d = 0; d < n; ++d) {
        z[d].resize(doc_tokens[d].size());
        for (std::size_t i = 0; i < doc_tokens[d].size(); ++i) {
            std::size_t t = rng() % k;
            z[d][i] = t;
            ++doc_topic[d][t];
            ++topic_term[t][doc_tokens[d][i]];
            ++topic_total[t];
        }
    }

    std::vector<double> p(k);
    double vbeta = static_cast<double>(V) * beta;
    for (std::size_t sweep = 0; sweep < config.sweeps; ++sweep) {
        for (std::size_t d = 0; d < n; ++d) {
            for (std::size_t i = 0; i < doc_tokens[d].size(); ++i) {
                std::size_t w = doc_tokens[d][i];
                std::size_t old = z[d][i];
                --doc_topic[d][old];
                --topic_term[old][w];
                --topic_total[old];
                double cum = 0.0;
                for (std::size_t t = 0; t < k; ++t) {
                    cum += (static_cast<double>(topic_term[t][w]) + beta) /
                           (static_cast<double>(topic_total[t]) + vbeta) *
                           (static_cast<double>(doc_topic[d][t]) + alpha);
                    p[t] = cum;
                }
                double u = uniform01(rng) * cum;
                std::size_t pick = static_cast<std::size_t>(
                    std::lower_bound(p.begin(), p.end(), u) - p.begin());
                if (pick >= k) pick = k - 1;
                z[d][i] = pick;
                ++doc_topic[d][pick];
                ++topic_term[pick][w];
                ++topic_total[pick];
            }
        }
        if (on_sweep) on_sweep(sweep, doc_topic, topic_term);
    }

    TopicModel model;
    model.kind = TopicKind::lda;
    model.k = k;
    model.alpha = alpha;
    model.beta = beta;
    model.sweeps = config.sweeps;
    model.seed = config.seed;
    // single-sample estimates from the final counts
    model.phi = Matrix(k, V);
    for (std::size_t t = 0; t < k; ++t) {
        double denom = static_cast<double>(topic_total[t]) + vbeta;
        for (std::size_t w = 0; w < V; ++w)
            model.phi(t, w) = (static_cast<double>(topic_term[t][w]) + beta) / denom;
    }
    model.theta = Matrix(n, k);
    for (std::size_t d = 0; d < n; ++d) {
        double denom =
            static_cast<double>(doc_tokens[d].size()) + alpha * static_cast<double>(k);
        for (std::size_t t = 0; t < k; ++t)
            model.theta(d, t) = (static_cast<double>(doc_topic[d][t]) + alpha) / denom;
    }
    return model;
}

namespace {

double frobenius_rel_error(const Matrix& X, const Matrix& W, const Matrix& H) {
    double err2 = 0.0, x2 = 0.0;
    std::size_t n = X.rows, V = X.cols, k = W.cols;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < V; ++c) {
            double wh = 0.0;
            for (std::size_t t = 0; t < k; ++t) wh += W(r, t) * H(t, c);
            double d = X(r, c) - wh;
            err2 += d * d;
            x2 += X(r, c) * X(r, c);
        }
    return x2 > 0.0 ? std::sqrt(err2 / x2) : 0.0;
}

}  // namespace

TopicModel fit_nmf(const FeatureMatrix& Xin, std::size_t k, const NmfConfig& config) {
    if (k < 1) throw Error("invalid-argument", "fit_nmf requires k >= 1");
    if (Xin.min_value() < 0.0)
        throw Error("invalid-argument", "fit_nmf requires nonnegative input");
    if (Xin.n_docs == 0 || Xin.n_features == 0)
        throw Error("invalid-argument", "fit_nmf requires a nonempty matrix");

    std::size_t n = Xin.n_docs, V = Xin.n_features;
    Matrix X(n, V);
    for (std::size_t r = 0; r < n; ++r) Xin.row_to(r, X.row(r));

    double mean = 0.0;
    for (double v : X.data) mean += v;
    mean /= static_cast<double>(X.data.size());
    double scale = std::sqrt(std::max(mean, 1e-12) / static_cast<double>(k));

    Rng rng = make_rng(config.seed);
    Matrix W(n, k), H(k, V);
    for (double& v : W.data) v = uniform01(rng) * scale;
    for (double& v : H.data) v = uniform01(rng) * scale;

    const double eps = 1e-12;
    TopicModel model;
    model.kind = TopicKind::nmf;
    model.k = k;
    model.seed = config.seed;

    double prev_err = frobenius_rel_error(X, W, H);
    model.error_history.push_back(prev_err);
    std::size_t iter = 0;
    for (; iter < config.max_iters; ++iter) {
        // H <- H .* (W^T X) ./ (W^T W H)
        Matrix WtX(k, V), WtW(k, k);
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t c = 0; c < V; ++c) {
                double s = 0.0;
                for (std::size_t r = 0; r < n; ++r) s += W(r, t) * X(r, c);
                WtX(t, c) = s;
            }
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                double s = 0.0;
                for (std::size_t r = 0; r < n; ++r) s += W(r, a) * W(r, b);
                WtW(a, b) = s;
            }
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t c = 0; c < V; ++c) {
                double denom = 0.0;
                for (std::size_t a = 0; a < k; ++a) denom += WtW(t, a) * H(a, c);
                H(t, c) *= WtX(t, c) / (denom + eps);
            }
        // W <- W .* (X H^T) ./ (W H H^T)
        Matrix XHt(n, k), HHt(k, k);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t t = 0; t < k; ++t) {
                double s = 0.0;
                for (std::size_t c = 0; c < V; ++c) s += X(r, c) * H(t, c);
                XHt(r, t) = s;
            }
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                double s = 0.0;
                for (std::size_t c = 0; c < V; ++c) s += H(a, c) * H(b, c);
                HHt(a, b) = s;
            }
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t t = 0; t < k; ++t) {
                double denom = 0.0;
                for (std::size_t a = 0; a < k; ++a) denom += W(r, a) * HHt(a, t);
                W(r, t) *= XHt(r, t) / (denom + eps);
            }

        double err = frobenius_rel_error(X, W, H);
        model.error_history.push_back(err);
        double improvement = prev_err - err;
        prev_err = err;
        if (improvement >= 0.0 && improvement < config.rel_tol * std::max(err, eps)) {
            ++iter;
            break;
        }
    }

    // resolve scale indeterminacy: H rows to unit L1, W rescaled inversely
    for (std::size_t t = 0; t < k; ++t) {
        double l1 = 0.0;
        for (std::size_t c = 0; c < V; ++c) l1 += H(t, c);
        if (l1 <= 0.0) continue;
        for (std::size_t c = 0; c < V; ++c) H(t, c) /= l1;
        for (std::size_t r = 0; r < n; ++r) W(r, t) *= l1;
    }
    model.w = std::move(W);
    model.h = std::move(H);
    model.iters = iter;
    model.rel_error = prev_err;
    return model;
}

TopicReport top_terms(const TopicModel& model, const Vocabulary& vocab, std::size_t n_top) {
    if (n_top < 1) throw Error("invalid-argument", "n_top must be >= 1");
    const Matrix& weights = model.kind == TopicKind::lda ? model.phi : model.h;
    if (weights.cols != vocab.size())
        throw Error("invalid-argument", "vocabulary size does not match topic model");
    if (n_top > vocab.size()) {
        std::cerr << "warning: n_top " << n_top << " exceeds vocabulary size " << vocab.size()
                  << "; reporting all terms\n";
        n_top = vocab.size();
    }
    TopicReport report;
    report.kind = model.kind;
    report.k = model.k;
    for (std::size_t t = 0; t < model.k; ++t) {
        std::vector<std::size_t> order(vocab.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return weights(t, a) > weights(t, b);  // ties keep the lower index
        });
        std::vector<std::pair<std::string, double>> ranked;
        for (std::size_t i = 0; i < n_top; ++i)
            ranked.emplace_back(vocab.term(order[i]), weights(t, order[i]));
        report.topics.push_back(std::move(ranked));
    }
    return report;
}

std::vector<TopicReport> run_per_category(const Corpus& corpus, const LabeledDataset& dataset,
                                          const PerCategoryConfig& config) {
    if (dataset.scheme != LabelScheme::multiclass)
        throw Error("invalid-argument", "run_per_category requires a multiclass dataset");
    std::vector<TopicReport> reports;
    for (const auto& category : dataset.label_space) {
        std::unordered_set<std::string> ids;
        for (const auto& [id, label] : dataset.entries)
            if (label == category) ids.insert(id);
        if (ids.size() < config.k) {
            std::cerr << "warning: category '" << category << "' has " << ids.size()
                      << " documents, fewer than k=" << config.k << "; skipped\n";
            continue;
        }
        Corpus sub;
        sub.source = corpus.source;
        for (const auto& doc : corpus.documents)
            if (ids.count(doc.id)) sub.documents.push_back(doc);

        Vocabulary vocab = build_vocabulary(sub, config.min_df);
        TopicModel model;
        if (config.kind == TopicKind::lda) {
            FeatureMatrix counts = vectorize(sub, vocab, Scheme::bow_tf);
            model = fit_lda(counts, config.k, config.lda);
        } else {
            FeatureMatrix tfidf = vectorize(sub, vocab, Scheme::tfidf_1gram);
            model = fit_nmf(tfidf, config.k, config.nmf);
        }
        TopicReport report = top_terms(model, vocab, config.n_top);
        report.dataset = corpus.source;
        report.category = category;
        reports.push_back(std::move(report));
    }
    return reports;
}

// ---------- persistence ----------

namespace {

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void save_matrix(std::ostream& out, const Matrix& m, const char* name) {
    out << name << " " << m.rows << " " << m.cols << "\n";
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) out << (c ? " " : "") << fmt17(m(r, c));
        out << "\n";
    }
}

Matrix load_matrix(std::istream& in, const char* expected) {
    std::string name;
    std::size_t rows = 0, cols = 0;
    in >> name >> rows >> cols;
    if (name != expected) throw Error("bad-artifact", "expected section " + std::string(expected));
    Matrix m(rows, cols);
    for (double& v : m.data) in >> v;
    return m;
}

}  // namespace

void TopicModel::save(std::ostream& out) const {
    out << "cti-topics v1\n";
    out << "kind " << (kind == TopicKind::lda ? "lda" : "nmf") << "\n";
    out << "k " << k << " seed " << seed << "\n";
    if (kind == TopicKind::lda) {
        out << "alpha " << fmt17(alpha) << " beta " << fmt17(beta) << " sweeps " << sweeps
            << "\n";
        save_matrix(out, phi, "phi");
        save_matrix(out, theta, "theta");
    } else {
        out << "rel_error " << fmt17(rel_error) << " iters " << iters << "\n";
        save_matrix(out, w, "w");
        save_matrix(out, h, "h");
    }
}

TopicModel TopicModel::load(std::istream& in) {
    std::string header;
    std::getline(in, header);
    if (header != "cti-topics v1") throw Error("bad-artifact", "not a cti topics file");
    TopicModel model;
    std::string key, value;
    in >> key >> value;
    model.kind = value == "lda" ? TopicKind::lda : TopicKind::nmf;
    in >> key >> model.k >> key >> model.seed;
    if (model.kind == TopicKind::lda) {
        in >> key >> model.alpha >> key >> model.beta >> key >> model.sweeps;
        model.phi = load_matrix(in, "phi");
        model.theta = load_matrix(in, "theta");
    } else {
        in >> key >> model.rel_error >> key >> model.iters;
        model.w = load_matrix(in, "w");
        model.h = load_matrix(in, "h");
    }
    if (!in) throw Error("bad-artifact", "truncated topics file");
    return model;
}

}  // namespace cti
