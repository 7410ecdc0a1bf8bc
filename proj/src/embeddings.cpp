#include "cti/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "cti/error.hpp"
#include "cti/rng.hpp"

namespace cti {

EmbeddingConfig EmbeddingConfig::word2vec_defaults() { return EmbeddingConfig{}; }

EmbeddingConfig EmbeddingConfig::doc2vec_defaults() {
    EmbeddingConfig c;
    c.epochs = 10;
    return c;
}

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

struct TrainingVocab {
    std::vector<std::string> terms;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::size_t> counts;
    std::vector<double> neg_cdf;  // cumulative unigram^0.75 for negative sampling
    std::size_t total_tokens = 0;

    std::size_t sample_negative(Rng& rng) const {
        double u = uniform01(rng) * neg_cdf.back();
        auto it = std::lower_bound(neg_cdf.begin(), neg_cdf.end(), u);
        return static_cast<std::size_t>(it - neg_cdf.begin());
    }
};

TrainingVocab build_training_vocab(const Corpus& corpus, std::size_t min_count) {
    std::map<std::string, std::size_t> counts;  // ordered for determinism
    for (const auto& doc : corpus.documents)
        for (const auto& tok : doc.tokens) ++counts[tok];
    TrainingVocab vocab;
    for (const auto& [term, count] : counts) {
        if (count < min_count) continue;
        vocab.index.emplace(term, vocab.terms.size());
        vocab.terms.push_back(term);
        vocab.counts.push_back(count);
        vocab.total_tokens += count;
    }
    double acc = 0.0;
    vocab.neg_cdf.reserve(vocab.counts.size());
    for (std::size_t c : vocab.counts) {
        acc += std::pow(static_cast<double>(c), 0.75);
        vocab.neg_cdf.push_back(acc);
    }
    return vocab;
}

std::vector<std::vector<std::size_t>> index_documents(const Corpus& corpus,
                                                      const TrainingVocab& vocab) {
    std::vector<std::vector<std::size_t>> docs;
    docs.reserve(corpus.size());
    for (const auto& doc : corpus.documents) {
        std::vector<std::size_t> ids;
        for (const auto& tok : doc.tokens) {
            auto it = vocab.index.find(tok);
            if (it != vocab.index.end()) ids.push_back(it->second);
        }
        docs.push_back(std::move(ids));
    }
    return docs;
}

Matrix random_init(std::size_t rows, std::size_t dim, Rng& rng) {
    Matrix m(rows, dim);
    const double scale = 0.5 / static_cast<double>(dim);
    for (double& v : m.data) v = (uniform01(rng) * 2.0 - 1.0) * scale;
    return m;
}

// One SGD step on the shared negative-sampling objective. in_vec receives the
// accumulated input-side gradient; out rows are updated in place.
void sgns_update(double* in_vec, Matrix& out, std::size_t target, std::size_t dim,
                 const std::vector<std::size_t>& negatives, double lr, double* in_grad_buf) {
    std::fill(in_grad_buf, in_grad_buf + dim, 0.0);
    auto push = [&](std::size_t word, double label) {
        double* u = out.row(word);
        double g = (label - sigmoid(dot(in_vec, u, dim))) * lr;
        for (std::size_t i = 0; i < dim; ++i) {
            in_grad_buf[i] += g * u[i];
            u[i] += g * in_vec[i];
        }
    };
    push(target, 1.0);
    for (std::size_t neg : negatives) push(neg, 0.0);
    for (std::size_t i = 0; i < dim; ++i) in_vec[i] += in_grad_buf[i];
}

}  // namespace

double sgns_loss(const std::vector<double>& v_in, const std::vector<double>& u_ctx,
                 const std::vector<std::vector<double>>& u_negs) {
    std::size_t dim = v_in.size();
    double loss = -std::log(sigmoid(dot(v_in.data(), u_ctx.data(), dim)));
    for (const auto& u : u_negs) loss -= std::log(sigmoid(-dot(v_in.data(), u.data(), dim)));
    return loss;
}

void sgns_gradients(const std::vector<double>& v_in, const std::vector<double>& u_ctx,
                    const std::vector<std::vector<double>>& u_negs,
                    std::vector<double>& grad_in, std::vector<double>& grad_ctx,
                    std::vector<std::vector<double>>& grad_negs) {
    std::size_t dim = v_in.size();
    grad_in.assign(dim, 0.0);
    grad_ctx.assign(dim, 0.0);
    grad_negs.assign(u_negs.size(), std::vector<double>(dim, 0.0));
    double gp = sigmoid(dot(v_in.data(), u_ctx.data(), dim)) - 1.0;  // dL/d(v.u)
    for (std::size_t i = 0; i < dim; ++i) {
        grad_in[i] += gp * u_ctx[i];
        grad_ctx[i] = gp * v_in[i];
    }
    for (std::size_t n = 0; n < u_negs.size(); ++n) {
        double gn = sigmoid(dot(v_in.data(), u_negs[n].data(), dim));
        for (std::size_t i = 0; i < dim; ++i) {
            grad_in[i] += gn * u_negs[n][i];
            grad_negs[n][i] = gn * v_in[i];
        }
    }
}

EmbeddingModel train_word2vec(const Corpus& corpus, const EmbeddingConfig& config) {
    if (corpus.empty()) throw Error("invalid-argument", "cannot train word2vec on empty corpus");
    TrainingVocab vocab = build_training_vocab(corpus, config.min_count);
    if (vocab.terms.empty())
        throw Error("invalid-argument", "no terms reach min_count for word2vec");
    auto docs = index_documents(corpus, vocab);
    if (config.workers > 1)
        std::cerr << "warning: workers > 1 requested; embedding training runs single-worker "
                     "to stay deterministic\n";

    Rng rng = make_rng(config.seed);
    EmbeddingModel model;
    model.kind = EmbeddingKind::word2vec;
    model.config = config;
    model.vocab_terms = vocab.terms;
    model.term_index = vocab.index;
    model.in_vectors = random_init(vocab.terms.size(), config.dim, rng);
    model.out_vectors = Matrix(vocab.terms.size(), config.dim);

    const double total_words =
        static_cast<double>(vocab.total_tokens) * static_cast<double>(config.epochs);
    double processed = 0.0;
    std::vector<double> grad_buf(config.dim);
    std::vector<std::size_t> negatives;

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        for (const auto& words : docs) {
            for (std::size_t t = 0; t < words.size(); ++t) {
                double lr = std::max(
                    config.min_lr, config.initial_lr * (1.0 - processed / (total_words + 1.0)));
                processed += 1.0;
                std::size_t b = 1 + rng() % config.window;  // reduced window
                std::size_t lo = t >= b ? t - b : 0;
                std::size_t hi = std::min(words.size(), t + b + 1);
                for (std::size_t j = lo; j < hi; ++j) {
                    if (j == t) continue;
                    negatives.clear();
                    while (negatives.size() < config.negatives) {
                        std::size_t neg = vocab.sample_negative(rng);
                        if (neg != words[j]) negatives.push_back(neg);
                    }
                    sgns_update(model.in_vectors.row(words[t]), model.out_vectors, words[j],
                                config.dim, negatives, lr, grad_buf.data());
                }
            }
        }
    }
    return model;
}

namespace {

// One PV-DM step at position t of a document: the doc vector averaged with
// the context word vectors predicts the target word.
void pvdm_step(double* doc_vec, Matrix& word_in, Matrix& word_out,
               const std::vector<std::size_t>& words, std::size_t t, std::size_t window,
               std::size_t n_negs, const TrainingVocab& vocab, double lr, Rng& rng,
               std::vector<double>& h, std::vector<double>& grad_buf,
               std::vector<std::size_t>& context, std::vector<std::size_t>& negatives,
               bool freeze_words) {
    std::size_t dim = h.size();
    std::size_t b = 1 + rng() % window;
    std::size_t lo = t >= b ? t - b : 0;
    std::size_t hi = std::min(words.size(), t + b + 1);
    context.clear();
    for (std::size_t j = lo; j < hi; ++j)
        if (j != t) context.push_back(words[j]);

    double denom = static_cast<double>(context.size() + 1);
    for (std::size_t i = 0; i < dim; ++i) h[i] = doc_vec[i];
    for (std::size_t w : context) {
        const double* v = word_in.row(w);
        for (std::size_t i = 0; i < dim; ++i) h[i] += v[i];
    }
    for (std::size_t i = 0; i < dim; ++i) h[i] /= denom;

    negatives.clear();
    while (negatives.size() < n_negs) {
        std::size_t neg = vocab.sample_negative(rng);
        if (neg != words[t]) negatives.push_back(neg);
    }

    std::fill(grad_buf.begin(), grad_buf.end(), 0.0);
    auto push = [&](std::size_t word, double label) {
        double* u = word_out.row(word);
        double g = (label - sigmoid(dot(h.data(), u, dim))) * lr;
        for (std::size_t i = 0; i < dim; ++i) {
            grad_buf[i] += g * u[i];
            if (!freeze_words) u[i] += g * h[i];
        }
    };
    push(words[t], 1.0);
    for (std::size_t neg : negatives) push(neg, 0.0);

    // input-side gradient is shared equally by the averaged inputs
    for (std::size_t i = 0; i < dim; ++i) grad_buf[i] /= denom;
    for (std::size_t i = 0; i < dim; ++i) doc_vec[i] += grad_buf[i];
    if (!freeze_words)
        for (std::size_t w : context) {
            double* v = word_in.row(w);
            for (std::size_t i = 0; i < dim; ++i) v[i] += grad_buf[i];
        }
}

}  // namespace

EmbeddingModel train_doc2vec(const Corpus& corpus, const EmbeddingConfig& config) {
    if (corpus.empty()) throw Error("invalid-argument", "cannot train doc2vec on empty corpus");
    TrainingVocab vocab = build_training_vocab(corpus, config.min_count);
    if (vocab.terms.empty())
        throw Error("invalid-argument", "no terms reach min_count for doc2vec");
    auto docs = index_documents(corpus, vocab);

    Rng rng = make_rng(config.seed);
    EmbeddingModel model;
    model.kind = EmbeddingKind::doc2vec;
    model.config = config;
    model.vocab_terms = vocab.terms;
    model.term_index = vocab.index;
    model.in_vectors = random_init(vocab.terms.size(), config.dim, rng);
    model.out_vectors = Matrix(vocab.terms.size(), config.dim);
    model.doc_vectors = random_init(corpus.size(), config.dim, rng);
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        model.doc_index.emplace(corpus.documents[d].id, d);
        model.doc_ids.push_back(corpus.documents[d].id);
    }

    const double total_words =
        static_cast<double>(vocab.total_tokens) * static_cast<double>(config.epochs);
    double processed = 0.0;
    std::vector<double> h(config.dim), grad_buf(config.dim);
    std::vector<std::size_t> context, negatives;

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        for (std::size_t d = 0; d < docs.size(); ++d) {
            const auto& words = docs[d];
            for (std::size_t t = 0; t < words.size(); ++t) {
                double lr = std::max(
                    config.min_lr, config.initial_lr * (1.0 - processed / (total_words + 1.0)));
                processed += 1.0;
                pvdm_step(model.doc_vectors.row(d), model.in_vectors, model.out_vectors, words,
                          t, config.window, config.negatives, vocab, lr, rng, h, grad_buf,
                          context, negatives, /*freeze_words=*/false);
            }
        }
    }
    return model;
}

const double* EmbeddingModel::word_vector(const std::string& term) const {
    auto it = term_index.find(term);
    return it == term_index.end() ? nullptr : in_vectors.row(it->second);
}

FeatureMatrix average_doc_vectors(const EmbeddingModel& model, const Corpus& corpus) {
    if (model.kind != EmbeddingKind::word2vec)
        throw Error("invalid-argument", "average_doc_vectors requires a word2vec model");
    std::size_t dim = model.config.dim;
    FeatureMatrix m = FeatureMatrix::make_dense(Scheme::w2v_avg, corpus.size(), dim);
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        const auto& doc = corpus.documents[d];
        m.row_ids[d] = doc.id;
        double* row = &m.dense[d * dim];
        std::size_t n = 0;
        for (const auto& tok : doc.tokens) {
            const double* v = model.word_vector(tok);
            if (!v) continue;
            for (std::size_t i = 0; i < dim; ++i) row[i] += v[i];
            ++n;
        }
        if (n > 0) {
            for (std::size_t i = 0; i < dim; ++i) row[i] /= static_cast<double>(n);
        } else {
            std::cerr << "warning: document " << doc.id
                      << " has no in-vocabulary tokens; zero w2v-avg vector\n";
        }
    }
    return m;
}

std::vector<double> infer_doc_vector(const EmbeddingModel& model, const Document& doc) {
    if (model.kind != EmbeddingKind::doc2vec)
        throw Error("invalid-argument", "infer_doc_vector requires a doc2vec model");
    std::size_t dim = model.config.dim;
    std::vector<std::size_t> words;
    for (const auto& tok : doc.tokens) {
        auto it = model.term_index.find(tok);
        if (it != model.term_index.end()) words.push_back(it->second);
    }
    if (words.empty()) {
        std::cerr << "warning: document " << doc.id
                  << " has no in-vocabulary tokens; zero inferred vector\n";
        return std::vector<double>(dim, 0.0);
    }

    // fresh vector, seed derived from the model seed and the document id
    Rng rng = make_rng(derive_seed(model.config.seed, "d2v-infer:" + doc.id));
    std::vector<double> vec(dim);
    const double scale = 0.5 / static_cast<double>(dim);
    for (double& v : vec) v = (uniform01(rng) * 2.0 - 1.0) * scale;

    // frozen word matrices: rebuild the negative-sampling table from the model
    TrainingVocab vocab;
    vocab.terms = model.vocab_terms;
    vocab.index = model.term_index;
    vocab.neg_cdf.resize(model.vocab_terms.size());
    for (std::size_t i = 0; i < vocab.neg_cdf.size(); ++i)
        vocab.neg_cdf[i] = static_cast<double>(i + 1);  // uniform negatives at inference

    Matrix word_in = model.in_vectors;    // frozen: copies never written back
    Matrix word_out = model.out_vectors;
    std::vector<double> h(dim), grad_buf(dim);
    std::vector<std::size_t> context, negatives;
    const double total = static_cast<double>(model.config.infer_steps * words.size());
    double processed = 0.0;
    for (std::size_t step = 0; step < model.config.infer_steps; ++step) {
        for (std::size_t t = 0; t < words.size(); ++t) {
            double lr = std::max(model.config.min_lr,
                                 model.config.initial_lr * (1.0 - processed / (total + 1.0)));
            processed += 1.0;
            pvdm_step(vec.data(), word_in, word_out, words, t, model.config.window,
                      model.config.negatives, vocab, lr, rng, h, grad_buf, context, negatives,
                      /*freeze_words=*/true);
        }
    }
    return vec;
}

FeatureMatrix doc2vec_features(const EmbeddingModel& model, const Corpus& corpus) {
    if (model.kind != EmbeddingKind::doc2vec)
        throw Error("invalid-argument", "doc2vec_features requires a doc2vec model");
    std::size_t dim = model.config.dim;
    FeatureMatrix m = FeatureMatrix::make_dense(Scheme::d2v, corpus.size(), dim);
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        const auto& doc = corpus.documents[d];
        m.row_ids[d] = doc.id;
        auto it = model.doc_index.find(doc.id);
        std::vector<double> vec;
        if (it != model.doc_index.end()) {
            const double* row = model.doc_vectors.row(it->second);
            vec.assign(row, row + dim);
        } else {
            vec = infer_doc_vector(model, doc);
        }
        std::copy(vec.begin(), vec.end(), m.dense.begin() + d * dim);
    }
    return m;
}

namespace {

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void save_matrix_rows(std::ostream& out, const Matrix& m,
                      const std::vector<std::string>& names) {
    for (std::size_t r = 0; r < m.rows; ++r) {
        out << names[r];
        for (std::size_t c = 0; c < m.cols; ++c) out << "\t" << fmt17(m(r, c));
        out << "\n";
    }
}

Matrix load_matrix_rows(std::istream& in, std::size_t rows, std::size_t cols,
                        std::vector<std::string>& names) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        std::getline(in, line);
        std::istringstream ls(line);
        std::string name;
        std::getline(ls, name, '\t');
        names.push_back(name);
        std::string field;
        for (std::size_t c = 0; c < cols; ++c) {
            std::getline(ls, field, '\t');
            m(r, c) = std::stod(field);
        }
    }
    return m;
}

}  // namespace

void EmbeddingModel::save(std::ostream& out) const {
    out << "cti-embedding v1\n";
    out << "kind " << (kind == EmbeddingKind::word2vec ? "word2vec" : "doc2vec") << "\n";
    out << "dim " << config.dim << " window " << config.window << " negatives "
        << config.negatives << " epochs " << config.epochs << " min_count " << config.min_count
        << " infer_steps " << config.infer_steps << "\n";
    out << "initial_lr " << fmt17(config.initial_lr) << " min_lr " << fmt17(config.min_lr)
        << " seed " << config.seed << "\n";
    out << "n_terms " << vocab_terms.size() << "\n";
    out << "section in_vectors\n";
    save_matrix_rows(out, in_vectors, vocab_terms);
    out << "section out_vectors\n";
    save_matrix_rows(out, out_vectors, vocab_terms);
    if (kind == EmbeddingKind::doc2vec) {
        out << "n_docs " << doc_ids.size() << "\n";
        out << "section doc_vectors\n";
        save_matrix_rows(out, doc_vectors, doc_ids);
    }
}

EmbeddingModel EmbeddingModel::load(std::istream& in) {
    std::string header;
    std::getline(in, header);
    if (header != "cti-embedding v1") throw Error("bad-artifact", "not a cti embedding file");
    EmbeddingModel model;
    std::string key, value;
    in >> key >> value;
    model.kind = value == "word2vec" ? EmbeddingKind::word2vec : EmbeddingKind::doc2vec;
    EmbeddingConfig& c = model.config;
    in >> key >> c.dim >> key >> c.window >> key >> c.negatives >> key >> c.epochs >> key >>
        c.min_count >> key >> c.infer_steps;
    in >> key >> c.initial_lr >> key >> c.min_lr >> key >> c.seed;
    std::size_t n_terms = 0;
    in >> key >> n_terms;
    in.ignore();
    std::getline(in, key);  // section in_vectors
    model.in_vectors = load_matrix_rows(in, n_terms, c.dim, model.vocab_terms);
    std::getline(in, key);  // section out_vectors
    {
        std::vector<std::string> again;
        model.out_vectors = load_matrix_rows(in, n_terms, c.dim, again);
    }
    for (std::size_t i = 0; i < model.vocab_terms.size(); ++i)
        model.term_index.emplace(model.vocab_terms[i], i);
    if (model.kind == EmbeddingKind::doc2vec) {
        std::size_t n_docs = 0;
        in >> key >> n_docs;
        in.ignore();
        std::getline(in, key);  // section doc_vectors
        model.doc_vectors = load_matrix_rows(in, n_docs, c.dim, model.doc_ids);
        for (std::size_t i = 0; i < model.doc_ids.size(); ++i)
            model.doc_index.emplace(model.doc_ids[i], i);
    }
    if (!in) throw Error("bad-artifact", "truncated embedding file");
    return model;
}

}  // namespace cti
