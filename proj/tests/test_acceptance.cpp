// Acceptance suite: one pass/fail line per criterion, exit nonzero when any
// criterion fails. Run from the repository root.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cti/classifiers.hpp"
#include "cti/corpus.hpp"
#include "cti/embeddings.hpp"
#include "cti/error.hpp"
#include "cti/features.hpp"
#include "cti/labeler.hpp"
#include "cti/report.hpp"
#include "cti/topics.hpp"

namespace fs = std::filesystem;
using namespace cti;
using Clock = std::chrono::steady_clock;

#ifndef CTI_MINER_PATH
#define CTI_MINER_PATH "./build/cti-miner"
#endif

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, const std::string& name, bool ok, const std::string& detail,
            bool skipped = false) {
    if (skipped) {
        std::cout << "SKIP  criterion " << criterion << " (" << name << "): " << detail << "\n";
        return;
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << " (" << name
              << "): " << detail << "\n";
    if (!ok) ++g_failures;
}

Corpus load_dump(const std::string& path) {
    IngestResult r = ingest_posts(path);
    return build_corpus(r.posts, PreprocessContext::builtin(), path);
}

// --- criterion 2 -----------------------------------------------------------

void criterion_2() {
    auto start = Clock::now();
    Corpus corpus = load_dump("data/fixtures/separable_200.txt");
    LabeledDataset binary = label_binary(corpus, LabelRules::builtin());
    DatasetSplit split = split_dataset(binary, 0.67, 42);
    std::map<std::string, std::string> label_of(binary.entries.begin(), binary.entries.end());
    Corpus train_c = subset_corpus(corpus, split.train_ids);
    Vocabulary vocab = build_vocabulary(train_c);
    FeatureMatrix train_X = vectorize(train_c, vocab, Scheme::bow_binary);
    FeatureMatrix test_X = vectorize(subset_corpus(corpus, split.test_ids), vocab,
                                     Scheme::bow_binary);
    std::vector<std::string> train_y, test_y;
    for (const auto& id : split.train_ids) train_y.push_back(label_of.at(id));
    for (const auto& id : split.test_ids) test_y.push_back(label_of.at(id));

    double acc_lr = 100.0 * accuracy(predict(train_classifier(train_X, train_y,
                                                              TrainConfig::for_algo(Algo::logreg, 1)),
                                             test_X),
                                     test_y);
    double acc_nb = 100.0 * accuracy(predict(train_classifier(train_X, train_y,
                                                              TrainConfig::for_algo(Algo::nb, 1)),
                                             test_X),
                                     test_y);
    double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "corpus 200 docs, logreg " << acc_lr << "%, nb " << acc_nb << "%, " << elapsed << "s";
    report(2, "synthetic separability",
           corpus.size() == 200 && acc_lr >= 95.0 && acc_nb >= 95.0 && elapsed < 10.0, d.str());
}

// --- criterion 3 -----------------------------------------------------------

std::vector<std::string> nb_brute_force(const std::vector<std::vector<double>>& train,
                                        const std::vector<std::string>& y,
                                        const std::vector<std::vector<double>>& test) {
    std::vector<std::string> labels(y.begin(), y.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::size_t V = train[0].size();
    std::vector<std::string> out;
    for (const auto& x : test) {
        std::string best;
        long double best_score = 0;
        for (const auto& label : labels) {
            std::size_t n_c = 0;
            std::vector<long double> tc(V, 0);
            long double total = 0;
            for (std::size_t r = 0; r < train.size(); ++r) {
                if (y[r] != label) continue;
                ++n_c;
                for (std::size_t j = 0; j < V; ++j) {
                    tc[j] += train[r][j];
                    total += train[r][j];
                }
            }
            long double score =
                std::log(static_cast<long double>(n_c) / static_cast<long double>(train.size()));
            for (std::size_t j = 0; j < V; ++j)
                score += static_cast<long double>(x[j]) * std::log((tc[j] + 1.0L) / (total + V));
            if (best.empty() || score > best_score) {
                best = label;
                best_score = score;
            }
        }
        out.push_back(best);
    }
    return out;
}

FeatureMatrix count_matrix(const std::vector<std::vector<double>>& rows,
                           const std::string& prefix) {
    FeatureMatrix m = FeatureMatrix::make_sparse(Scheme::bow_tf, rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::pair<std::size_t, double>> entries;
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0.0) entries.emplace_back(c, rows[r][c]);
        m.append_sparse_row(prefix + std::to_string(r), entries);
    }
    return m;
}

void criterion_3() {
    auto start = Clock::now();
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> n_docs(2, 5), n_terms(2, 6), count(0, 4), coin(0, 1);
    bool all_match = true;
    for (int trial = 0; trial < 100; ++trial) {
        int docs = n_docs(rng), terms = n_terms(rng);
        std::vector<std::vector<double>> X;
        std::vector<std::string> y;
        for (int d = 0; d < docs; ++d) {
            std::vector<double> row(terms);
            double s = 0;
            for (auto& v : row) s += (v = count(rng));
            if (s == 0) row[0] = 1;
            X.push_back(row);
            y.push_back(coin(rng) ? "a" : "b");
        }
        bool has_a = std::find(y.begin(), y.end(), "a") != y.end();
        bool has_b = std::find(y.begin(), y.end(), "b") != y.end();
        if (!has_a) y[0] = "a";
        if (!has_b) y.back() = "b";
        if (y.size() == 1) y.push_back("b"), X.push_back(X[0]);

        ClassifierModel model =
            train_classifier(count_matrix(X, "r"), y, TrainConfig::for_algo(Algo::nb));
        std::vector<std::vector<double>> tests;
        for (int t = 0; t < 4; ++t) {
            std::vector<double> row(terms);
            for (auto& v : row) v = count(rng);
            tests.push_back(row);
        }
        if (predict(model, count_matrix(tests, "t")) != nb_brute_force(X, y, tests))
            all_match = false;
    }
    double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "100 random instances, " << elapsed << "s";
    report(3, "nb oracle equivalence", all_match && elapsed < 5.0, d.str());
}

// --- criterion 4 -----------------------------------------------------------

bool check_close(double got, double want, double tol) {
    double denom = std::max({std::abs(got), std::abs(want), 1e-8});
    return std::abs(got - want) / denom <= tol;
}

bool logreg_fd_check(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> label(0, 2);
    std::size_t n = 5, f = 4, k = 3;
    Matrix X(n, f);
    for (auto& v : X.data) v = gauss(rng);
    std::vector<std::size_t> y(n);
    for (auto& v : y) v = label(rng);
    LinearParams p;
    p.weights = Matrix(k, f);
    for (auto& v : p.weights.data) v = 0.3 * gauss(rng);
    p.bias.assign(k, 0.0);
    Matrix gw;
    std::vector<double> gb;
    logreg_gradient(p, X, y, 1e-2, gw, gb);
    const double h = 1e-6;
    for (std::size_t i = 0; i < p.weights.data.size(); ++i) {
        double orig = p.weights.data[i];
        p.weights.data[i] = orig + h;
        double up = logreg_loss(p, X, y, 1e-2);
        p.weights.data[i] = orig - h;
        double down = logreg_loss(p, X, y, 1e-2);
        p.weights.data[i] = orig;
        if (!check_close(gw.data[i], (up - down) / (2 * h), 1e-5)) return false;
    }
    return true;
}

bool nn_fd_check(std::mt19937_64& rng, const std::vector<std::size_t>& hidden) {
    std::normal_distribution<double> gauss(0.0, 0.3);
    std::uniform_int_distribution<std::size_t> label(0, 1);
    std::size_t f = 4, k = 2, n = 3;
    std::vector<std::size_t> sizes = {f};
    for (std::size_t hsize : hidden) sizes.push_back(hsize);
    sizes.push_back(k);
    NNParams p;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        Matrix w(sizes[l + 1], sizes[l]);
        for (auto& v : w.data) v = gauss(rng);
        p.weights.push_back(std::move(w));
        std::vector<double> b(sizes[l + 1]);
        for (auto& v : b) v = 0.1 * gauss(rng);
        p.bias.push_back(std::move(b));
    }
    Matrix X(n, f);
    for (auto& v : X.data) v = gauss(rng);
    std::vector<std::size_t> y(n);
    for (auto& v : y) v = label(rng);
    NNParams g = nn_gradient(p, X, y);
    const double h = 1e-5;
    // sample coordinates per layer: full sweeps over the production widths
    // would dominate the runtime without adding coverage
    for (std::size_t l = 0; l < p.weights.size(); ++l) {
        std::size_t total = p.weights[l].data.size();
        std::size_t samples = std::min<std::size_t>(total, 40);
        for (std::size_t s = 0; s < samples; ++s) {
            std::size_t i =
                std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
            double orig = p.weights[l].data[i];
            p.weights[l].data[i] = orig + h;
            double up = nn_loss(p, X, y);
            p.weights[l].data[i] = orig - h;
            double down = nn_loss(p, X, y);
            p.weights[l].data[i] = orig;
            if (!check_close(g.weights[l].data[i], (up - down) / (2 * h), 1e-4)) return false;
        }
    }
    return true;
}

bool sgns_fd_check(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 0.5);
    std::size_t dim = 6;
    std::vector<double> v(dim), ctx(dim);
    std::vector<std::vector<double>> negs(3, std::vector<double>(dim));
    for (auto& x : v) x = gauss(rng);
    for (auto& x : ctx) x = gauss(rng);
    for (auto& neg : negs)
        for (auto& x : neg) x = gauss(rng);
    std::vector<double> gv, gc;
    std::vector<std::vector<double>> gn;
    sgns_gradients(v, ctx, negs, gv, gc, gn);
    const double h = 1e-6;
    auto fd = [&](std::vector<double>& param, std::size_t i) {
        double orig = param[i];
        param[i] = orig + h;
        double up = sgns_loss(v, ctx, negs);
        param[i] = orig - h;
        double down = sgns_loss(v, ctx, negs);
        param[i] = orig;
        return (up - down) / (2 * h);
    };
    for (std::size_t i = 0; i < dim; ++i) {
        if (!check_close(gv[i], fd(v, i), 1e-5)) return false;
        if (!check_close(gc[i], fd(ctx, i), 1e-5)) return false;
        for (std::size_t n = 0; n < negs.size(); ++n)
            if (!check_close(gn[n][i], fd(negs[n], i), 1e-5)) return false;
    }
    return true;
}

void criterion_4() {
    auto start = Clock::now();
    std::mt19937_64 rng(314159);
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) ok = logreg_fd_check(rng);
    for (int t = 0; t < 20 && ok; ++t) ok = nn_fd_check(rng, {128});
    for (int t = 0; t < 20 && ok; ++t) ok = nn_fd_check(rng, {256, 128, 64});
    for (int t = 0; t < 20 && ok; ++t) ok = sgns_fd_check(rng);
    double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "logreg, nn-shallow, nn-deep, sgns x20 each, " << elapsed << "s";
    report(4, "gradient checks", ok && elapsed < 30.0, d.str());
}

// --- criterion 5 -----------------------------------------------------------

void criterion_5() {
    std::mt19937_64 rng(1618);
    static const char* kTerms[] = {"ant", "bee", "cat", "dog", "eel", "fox", "gnu", "hen"};
    std::uniform_int_distribution<std::size_t> n_docs(2, 6), n_tokens(1, 9), term(0, 7);
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        Corpus c;
        std::size_t docs = n_docs(rng);
        for (std::size_t d = 0; d < docs; ++d) {
            Document doc;
            doc.id = "r" + std::to_string(d);
            std::size_t n = n_tokens(rng);
            for (std::size_t i = 0; i < n; ++i) doc.tokens.push_back(kTerms[term(rng)]);
            c.documents.push_back(std::move(doc));
        }
        Vocabulary vocab = build_vocabulary(c);
        FeatureMatrix m = vectorize(c, vocab, Scheme::tfidf_1gram);
        for (std::size_t d = 0; d < c.size() && ok; ++d) {
            std::vector<double> expect(vocab.size(), 0.0);
            for (const auto& t : c.documents[d].tokens)
                expect[static_cast<std::size_t>(vocab.index_of(t))] += 1.0;
            double norm = 0.0;
            for (std::size_t t = 0; t < vocab.size(); ++t) {
                expect[t] *= std::log((1.0 + static_cast<double>(vocab.n_docs())) /
                                      (1.0 + static_cast<double>(vocab.doc_freq(t)))) +
                             1.0;
                norm += expect[t] * expect[t];
            }
            norm = std::sqrt(norm);
            for (std::size_t t = 0; t < vocab.size(); ++t)
                if (std::abs(m.at(d, t) - expect[t] / norm) > 1e-12) ok = false;
            if (std::abs(m.row_norm(d) - 1.0) > 1e-9) ok = false;
        }
    }
    report(5, "tf-idf exactness", ok, "50 random corpora vs direct formula");
}

// --- criterion 6 -----------------------------------------------------------

Corpus two_group_corpus() {
    static const std::vector<std::string> kFruit = {"apple", "banana", "cherry", "mango",
                                                    "plum"};
    static const std::vector<std::string> kMetal = {"iron", "copper", "zinc", "nickel",
                                                    "cobalt"};
    std::mt19937_64 rng(404);
    Corpus c;
    for (std::size_t g = 0; g < 2; ++g) {
        const auto& pool = g == 0 ? kFruit : kMetal;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (std::size_t d = 0; d < 10; ++d) {
            Document doc;
            doc.id = (g == 0 ? "f" : "m") + std::to_string(d);
            for (std::size_t t = 0; t < 12; ++t) doc.tokens.push_back(pool[pick(rng)]);
            c.documents.push_back(std::move(doc));
        }
    }
    return c;
}

void criterion_6() {
    auto start = Clock::now();
    Corpus c = two_group_corpus();
    Vocabulary vocab = build_vocabulary(c);
    FeatureMatrix counts = vectorize(c, vocab, Scheme::bow_tf);
    std::vector<std::size_t> doc_len;
    std::size_t total = 0;
    for (const auto& doc : c.documents) {
        doc_len.push_back(doc.tokens.size());
        total += doc.tokens.size();
    }
    bool conserved = true;
    LdaConfig cfg;
    cfg.sweeps = 200;
    cfg.seed = 12;
    fit_lda(counts, 3, cfg,
            [&](std::size_t, const std::vector<std::vector<std::size_t>>& doc_topic,
                const std::vector<std::vector<std::size_t>>& topic_term) {
                for (std::size_t d = 0; d < doc_topic.size(); ++d)
                    if (std::accumulate(doc_topic[d].begin(), doc_topic[d].end(),
                                        std::size_t{0}) != doc_len[d])
                        conserved = false;
                std::size_t grand = 0;
                for (const auto& row : topic_term)
                    grand += std::accumulate(row.begin(), row.end(), std::size_t{0});
                if (grand != total) conserved = false;
            });

    LdaConfig cfg2;
    cfg2.seed = 7;
    TopicModel m = fit_lda(counts, 2, cfg2);
    bool separated = true;
    for (const auto& group : {std::vector<std::string>{"apple", "banana", "cherry", "mango",
                                                       "plum"},
                              std::vector<std::string>{"iron", "copper", "zinc", "nickel",
                                                       "cobalt"}}) {
        double mass[2] = {0.0, 0.0};
        for (const auto& term : group) {
            auto idx = static_cast<std::size_t>(vocab.index_of(term));
            mass[0] += m.phi(0, idx);
            mass[1] += m.phi(1, idx);
        }
        if (std::max(mass[0], mass[1]) / (mass[0] + mass[1]) <= 0.8) separated = false;
    }
    double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "conservation every sweep, two-group separation, " << elapsed << "s";
    report(6, "lda conservation + separation", conserved && separated && elapsed < 60.0,
           d.str());
}

// --- criterion 7 -----------------------------------------------------------

void criterion_7() {
    Corpus c = two_group_corpus();
    FeatureMatrix X = vectorize(c, build_vocabulary(c), Scheme::tfidf_1gram);
    NmfConfig cfg;
    cfg.seed = 21;
    cfg.rel_tol = 0.0;
    TopicModel m = fit_nmf(X, 3, cfg);
    bool monotone = true;
    for (std::size_t i = 1; i < m.error_history.size(); ++i)
        if (m.error_history[i] > m.error_history[i - 1] + 1e-10) monotone = false;

    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::size_t n = 8, v = 6;
    std::vector<double> a(n), b(v);
    for (auto& x : a) x = u(rng);
    for (auto& x : b) x = u(rng);
    FeatureMatrix R = FeatureMatrix::make_dense(Scheme::tfidf_1gram, n, v);
    for (std::size_t i = 0; i < n; ++i) {
        R.row_ids[i] = "d" + std::to_string(i);
        for (std::size_t j = 0; j < v; ++j) R.dense[i * v + j] = a[i] * b[j];
    }
    NmfConfig rcfg;
    rcfg.seed = 2;
    rcfg.rel_tol = 0.0;
    TopicModel r1 = fit_nmf(R, 1, rcfg);
    std::ostringstream d;
    d << "objective monotone, rank-1 rel error " << r1.rel_error;
    report(7, "nmf monotonicity + rank-1 recovery",
           monotone && r1.rel_error < 1e-3 && r1.iters <= 200, d.str());
}

// --- criterion 8 -----------------------------------------------------------

void criterion_8() {
    Corpus corpus = load_dump("data/fixtures/example_posts.txt");
    LabelRules rules = LabelRules::builtin();
    LabeledDataset binary = label_binary(corpus, rules);
    std::map<std::string, std::string> labels(binary.entries.begin(), binary.entries.end());
    bool ok = labels.count("ex-binary-rel") && labels["ex-binary-rel"] == "relevant" &&
              labels.count("ex-binary-irr") && labels["ex-binary-irr"] == "irrelevant";

    LabeledDataset multi = label_multiclass(
        corpus,
        {"ex-cat-cred", "ex-cat-keylog", "ex-cat-ddos", "ex-cat-rat", "ex-cat-crypter",
         "ex-cat-sqli"},
        rules);
    std::map<std::string, std::string> cat(multi.entries.begin(), multi.entries.end());
    auto expect = [&](const char* id, const char* want) {
        if (!cat.count(id) || cat[id] != want) ok = false;
    };
    expect("ex-cat-cred", "Credential Leaks");
    expect("ex-cat-keylog", "Keylogger");
    expect("ex-cat-ddos", "DDoS Attack");
    expect("ex-cat-rat", "Remote Access Trojans");
    expect("ex-cat-crypter", "Crypter");
    expect("ex-cat-sqli", "SQL Injection");
    report(8, "labeling fixtures", ok, "binary pair + six category examples");
}

// --- criterion 9 -----------------------------------------------------------

bool run_cli(const std::string& args) {
    std::string cmd = std::string(CTI_MINER_PATH) + " " + args + " >/dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
}

bool trees_identical(const fs::path& a, const fs::path& b) {
    std::vector<fs::path> rel_a, rel_b;
    for (const auto& e : fs::recursive_directory_iterator(a))
        if (e.is_regular_file()) rel_a.push_back(fs::relative(e.path(), a));
    for (const auto& e : fs::recursive_directory_iterator(b))
        if (e.is_regular_file()) rel_b.push_back(fs::relative(e.path(), b));
    std::sort(rel_a.begin(), rel_a.end());
    std::sort(rel_b.begin(), rel_b.end());
    if (rel_a != rel_b) return false;
    for (const auto& rel : rel_a) {
        std::ifstream fa(a / rel, std::ios::binary), fb(b / rel, std::ios::binary);
        std::ostringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        if (sa.str() != sb.str()) return false;
    }
    return true;
}

void criterion_9() {
    auto start = Clock::now();
    fs::path d1 = fs::temp_directory_path() / "cti-accept-run1";
    fs::path d2 = fs::temp_directory_path() / "cti-accept-run2";
    fs::remove_all(d1);
    fs::remove_all(d2);
    std::string base = "all --dump data/fixtures/posts_300.txt --seed 42 --workers 1 --out ";
    bool ok = run_cli(base + d1.string()) && run_cli(base + d2.string()) &&
              trees_identical(d1, d2);
    double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "two full runs byte-identical, " << elapsed << "s total";
    report(9, "determinism", ok && elapsed < 120.0, d.str());
}

// --- criterion 10 ----------------------------------------------------------

void criterion_10() {
    const char* path = std::getenv("CTI_SENTIMENT_TSV");
    if (!path) {
        report(10, "external sentiment validation", true,
               "set CTI_SENTIMENT_TSV=<label<TAB>text file> to enable", true);
        return;
    }
    auto start = Clock::now();
    std::ifstream in(path);
    if (!in) {
        report(10, "external sentiment validation", false,
               std::string("cannot read ") + path);
        return;
    }
    std::vector<RawPost> posts;
    std::string line;
    std::map<std::string, std::string> label_of;
    std::size_t n = 0;
    while (std::getline(in, line) && posts.size() < 2000) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        RawPost p;
        p.id = "s" + std::to_string(n++);
        p.body = line.substr(tab + 1);
        posts.push_back(p);
        label_of[p.id] = line.substr(0, tab);
    }
    Corpus corpus = build_corpus(posts, PreprocessContext::builtin());
    LabeledDataset dataset;
    dataset.scheme = LabelScheme::binary;
    for (const auto& doc : corpus.documents)
        dataset.entries.emplace_back(doc.id, label_of.at(doc.id));
    std::vector<std::string> space;
    for (const auto& [id, label] : dataset.entries)
        if (std::find(space.begin(), space.end(), label) == space.end())
            space.push_back(label);
    dataset.label_space = space;
    DatasetSplit split = split_dataset(dataset, 0.67, 42);
    std::map<std::string, std::string> lmap(dataset.entries.begin(), dataset.entries.end());
    Corpus train_c = subset_corpus(corpus, split.train_ids);
    Vocabulary vocab = build_vocabulary(train_c);
    FeatureMatrix train_X = vectorize(train_c, vocab, Scheme::tfidf_1gram);
    FeatureMatrix test_X =
        vectorize(subset_corpus(corpus, split.test_ids), vocab, Scheme::tfidf_1gram);
    std::vector<std::string> train_y, test_y;
    for (const auto& id : split.train_ids) train_y.push_back(lmap.at(id));
    for (const auto& id : split.test_ids) test_y.push_back(lmap.at(id));
    ClassifierModel model =
        train_classifier(train_X, train_y, TrainConfig::for_algo(Algo::logreg, 42));
    double acc = accuracy(predict(model, test_X), test_y);
    double elapsed = seconds_since(start);
    std::ostringstream d;
    d << corpus.size() << " docs, logreg tfidf-1gram accuracy " << acc << ", " << elapsed
      << "s";
    report(10, "external sentiment validation",
           acc >= 0.76 && acc <= 0.92 && elapsed < 300.0, d.str());
}

}  // namespace

int main() {
    report(1, "non-reproducibility disclosure", true,
           "published benchmark accuracies (e.g. 93.67, 94.77) are format references "
           "only; the source forum dumps are not distributable, so acceptance rests on "
           "the property suites and bundled synthetic fixtures");
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
