#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "cti/classifiers.hpp"
#include "cti/error.hpp"
#include "cti/matrix.hpp"

using namespace cti;

namespace {

FeatureMatrix dense_matrix(Scheme scheme, const std::vector<std::vector<double>>& rows,
                           const std::string& prefix = "r") {
    FeatureMatrix m = FeatureMatrix::make_dense(scheme, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m.row_ids[r] = prefix + std::to_string(r);
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.dense[r * m.n_features + c] = rows[r][c];
    }
    return m;
}

FeatureMatrix count_matrix(const std::vector<std::vector<double>>& rows,
                           const std::string& prefix = "r") {
    FeatureMatrix m = FeatureMatrix::make_sparse(Scheme::bow_tf, rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::pair<std::size_t, double>> entries;
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0.0) entries.emplace_back(c, rows[r][c]);
        m.append_sparse_row(prefix + std::to_string(r), entries);
    }
    return m;
}

// independent multinomial posterior enumeration in long double straight from
// the raw counts, no shared code with the trained model
std::vector<std::string> nb_brute_force(const std::vector<std::vector<double>>& train,
                                        const std::vector<std::string>& y,
                                        const std::vector<std::vector<double>>& test,
                                        double alpha = 1.0) {
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
            std::vector<long double> term_count(V, 0);
            long double total = 0;
            for (std::size_t r = 0; r < train.size(); ++r) {
                if (y[r] != label) continue;
                ++n_c;
                for (std::size_t j = 0; j < V; ++j) {
                    term_count[j] += train[r][j];
                    total += train[r][j];
                }
            }
            long double score =
                std::log(static_cast<long double>(n_c) / static_cast<long double>(train.size()));
            for (std::size_t j = 0; j < V; ++j)
                score += static_cast<long double>(x[j]) *
                         std::log((term_count[j] + alpha) / (total + alpha * V));
            if (best.empty() || score > best_score) {
                best = label;
                best_score = score;
            }
        }
        out.push_back(best);
    }
    return out;
}

std::vector<std::size_t> to_indices(const std::vector<std::string>& y,
                                    const std::vector<std::string>& space) {
    std::vector<std::size_t> out;
    for (const auto& label : y)
        out.push_back(std::find(space.begin(), space.end(), label) - space.begin());
    return out;
}

}  // namespace

TEST_CASE("nb predictions match brute-force posterior enumeration") {
    std::mt19937_64 rng(91);
    std::uniform_int_distribution<int> n_docs(2, 5), n_terms(2, 6), count(0, 4), coin(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        int docs = n_docs(rng), terms = n_terms(rng);
        std::vector<std::vector<double>> X;
        std::vector<std::string> y;
        bool saw_a = false, saw_b = false;
        for (int d = 0; d < docs; ++d) {
            std::vector<double> row(terms);
            double s = 0;
            for (auto& v : row) s += (v = count(rng));
            if (s == 0) row[0] = 1;  // keep every document non-empty
            X.push_back(row);
            bool a = coin(rng) || d == docs - 1 ? !saw_b || coin(rng) : false;
            std::string label = a && (!saw_a || coin(rng)) ? "a" : "b";
            y.push_back(label);
            (label == "a" ? saw_a : saw_b) = true;
        }
        if (!saw_a || !saw_b) y[0] = saw_a ? "b" : "a";
        ClassifierModel model =
            train_classifier(count_matrix(X), y, TrainConfig::for_algo(Algo::nb));
        std::vector<std::vector<double>> tests;
        for (int t = 0; t < 4; ++t) {
            std::vector<double> row(terms);
            for (auto& v : row) v = count(rng);
            tests.push_back(row);
        }
        CHECK(predict(model, count_matrix(tests, "t")) == nb_brute_force(X, y, tests));
    }
}

TEST_CASE("nb rejects schemes with negative features") {
    FeatureMatrix m = dense_matrix(Scheme::w2v_avg, {{0.5, -0.2}, {0.1, 0.3}});
    try {
        train_classifier(m, {"a", "b"}, TrainConfig::for_algo(Algo::nb));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.code()) == "nb-incompatible-features");
    }
}

TEST_CASE("logreg gradients match central finite differences") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> label(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 5, f = 4, k = 3;
        Matrix X(n, f);
        for (auto& v : X.data) v = gauss(rng);
        std::vector<std::size_t> y(n);
        for (auto& v : y) v = label(rng);
        LinearParams p;
        p.weights = Matrix(k, f);
        for (auto& v : p.weights.data) v = 0.3 * gauss(rng);
        p.bias.assign(k, 0.0);
        for (auto& v : p.bias) v = 0.3 * gauss(rng);
        double l2 = 1e-2;

        Matrix gw;
        std::vector<double> gb;
        logreg_gradient(p, X, y, l2, gw, gb);
        const double h = 1e-6;
        for (std::size_t i = 0; i < p.weights.data.size(); ++i) {
            double orig = p.weights.data[i];
            p.weights.data[i] = orig + h;
            double up = logreg_loss(p, X, y, l2);
            p.weights.data[i] = orig - h;
            double down = logreg_loss(p, X, y, l2);
            p.weights.data[i] = orig;
            double fd = (up - down) / (2 * h);
            CHECK(gw.data[i] == doctest::Approx(fd).epsilon(1e-5));
        }
        for (std::size_t i = 0; i < k; ++i) {
            double orig = p.bias[i];
            p.bias[i] = orig + h;
            double up = logreg_loss(p, X, y, l2);
            p.bias[i] = orig - h;
            double down = logreg_loss(p, X, y, l2);
            p.bias[i] = orig;
            CHECK(gb[i] == doctest::Approx((up - down) / (2 * h)).epsilon(1e-5));
        }
    }
}

TEST_CASE("nn gradients match central finite differences") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> gauss(0.0, 0.7);
    std::uniform_int_distribution<std::size_t> label(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 4, f = 3, k = 2;
        // two hidden layers exercises the full backprop recursion
        std::vector<std::size_t> sizes = {f, 4, 3, k};
        NNParams p;
        for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
            Matrix w(sizes[l + 1], sizes[l]);
            for (auto& v : w.data) v = gauss(rng);
            p.weights.push_back(std::move(w));
            std::vector<double> b(sizes[l + 1]);
            for (auto& v : b) v = 0.2 * gauss(rng);
            p.bias.push_back(std::move(b));
        }
        Matrix X(n, f);
        for (auto& v : X.data) v = gauss(rng);
        std::vector<std::size_t> y(n);
        for (auto& v : y) v = label(rng);

        NNParams g = nn_gradient(p, X, y);
        const double h = 1e-5;
        for (std::size_t l = 0; l < p.weights.size(); ++l) {
            for (std::size_t i = 0; i < p.weights[l].data.size(); ++i) {
                double orig = p.weights[l].data[i];
                p.weights[l].data[i] = orig + h;
                double up = nn_loss(p, X, y);
                p.weights[l].data[i] = orig - h;
                double down = nn_loss(p, X, y);
                p.weights[l].data[i] = orig;
                double fd = (up - down) / (2 * h);
                CHECK(g.weights[l].data[i] == doctest::Approx(fd).epsilon(1e-4));
            }
            for (std::size_t i = 0; i < p.bias[l].size(); ++i) {
                double orig = p.bias[l][i];
                p.bias[l][i] = orig + h;
                double up = nn_loss(p, X, y);
                p.bias[l][i] = orig - h;
                double down = nn_loss(p, X, y);
                p.bias[l][i] = orig;
                CHECK(g.bias[l][i] == doctest::Approx((up - down) / (2 * h)).epsilon(1e-4));
            }
        }
    }
}

TEST_CASE("every classifier separates an easy two-cluster problem") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> noise(0.0, 0.05);
    std::vector<std::vector<double>> rows;
    std::vector<std::string> y;
    for (int i = 0; i < 30; ++i) {
        bool pos = i % 2 == 0;
        rows.push_back({(pos ? 1.0 : 0.0) + noise(rng), (pos ? 0.0 : 1.0) + noise(rng)});
        y.push_back(pos ? "pos" : "neg");
    }
    FeatureMatrix X = dense_matrix(Scheme::w2v_avg, rows);
    for (Algo algo : {Algo::logreg, Algo::dtree, Algo::rforest, Algo::knn, Algo::nn_shallow,
                      Algo::nn_deep}) {
        CAPTURE(algo_name(algo));
        ClassifierModel model = train_classifier(X, y, TrainConfig::for_algo(algo, 42));
        CHECK(accuracy(predict(model, X), y) == doctest::Approx(1.0));
    }
}

TEST_CASE("decision tree fits its training set exactly when labels are consistent") {
    std::vector<std::vector<double>> rows = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}};
    std::vector<std::string> y = {"a", "b", "b", "a", "a", "a"};
    FeatureMatrix X = dense_matrix(Scheme::w2v_avg, rows);
    ClassifierModel model = train_classifier(X, y, TrainConfig::for_algo(Algo::dtree));
    CHECK(predict(model, X) == y);
}

TEST_CASE("knn matches an exhaustive cosine-similarity vote") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> label(0, 2);
    std::vector<std::string> space = {"x", "y", "z"};
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 12, f = 4, k = 5;
        std::vector<std::vector<double>> train(n, std::vector<double>(f));
        std::vector<std::string> y;
        for (auto& row : train)
            for (auto& v : row) v = gauss(rng);
        for (std::size_t i = 0; i < n; ++i) y.push_back(space[label(rng)]);
        FeatureMatrix X = dense_matrix(Scheme::d2v, train);
        ClassifierModel model = train_classifier(X, y, TrainConfig::for_algo(Algo::knn));

        std::vector<std::vector<double>> test(3, std::vector<double>(f));
        for (auto& row : test)
            for (auto& v : row) v = gauss(rng);
        std::vector<std::string> got = predict(model, dense_matrix(Scheme::d2v, test, "t"));

        for (std::size_t t = 0; t < test.size(); ++t) {
            // exhaustive: rank all training rows by cosine similarity
            std::vector<std::pair<double, std::size_t>> sims;
            auto cosine = [&](const std::vector<double>& a, const std::vector<double>& b) {
                double dot = 0, na = 0, nb = 0;
                for (std::size_t j = 0; j < f; ++j) {
                    dot += a[j] * b[j];
                    na += a[j] * a[j];
                    nb += b[j] * b[j];
                }
                return na == 0 || nb == 0 ? 0.0 : dot / std::sqrt(na * nb);
            };
            for (std::size_t i = 0; i < n; ++i) sims.push_back({cosine(test[t], train[i]), i});
            std::stable_sort(sims.begin(), sims.end(), [](const auto& a, const auto& b) {
                return a.first > b.first;
            });
            std::map<std::string, std::size_t> votes;
            for (std::size_t i = 0; i < k; ++i) ++votes[y[sims[i].second]];
            std::size_t best = 0;
            for (const auto& [lbl, c] : votes) best = std::max(best, c);
            std::vector<std::string> winners;
            for (const auto& [lbl, c] : votes)
                if (c == best) winners.push_back(lbl);
            if (winners.size() == 1) {
                CHECK(got[t] == winners[0]);
            } else {
                // ties go to the label of the single nearest neighbor among winners
                for (std::size_t i = 0; i < k; ++i) {
                    const std::string& lbl = y[sims[i].second];
                    if (std::find(winners.begin(), winners.end(), lbl) != winners.end()) {
                        CHECK(got[t] == lbl);
                        break;
                    }
                }
            }
        }
    }
}

TEST_CASE("random forest is deterministic in the seed") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> rows(20, std::vector<double>(5));
    std::vector<std::string> y;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (auto& v : rows[i]) v = gauss(rng);
        y.push_back(i % 2 ? "a" : "b");
    }
    FeatureMatrix X = dense_matrix(Scheme::w2v_avg, rows);
    TrainConfig cfg = TrainConfig::for_algo(Algo::rforest, 77);
    ClassifierModel m1 = train_classifier(X, y, cfg);
    ClassifierModel m2 = train_classifier(X, y, cfg);
    REQUIRE(m1.forest.has_value());
    CHECK(m1.forest->trees.size() == 100);
    CHECK(m1.forest->tree_seeds == m2.forest->tree_seeds);
    CHECK(predict(m1, X) == predict(m2, X));
}

TEST_CASE("prediction is scale-invariant where the decision rule is an argmax of scores") {
    // scaling all logreg weights' inputs identically rescales logits per class:
    // check prediction invariance under a global positive feature scale for knn
    std::vector<std::vector<double>> rows = {{1, 0}, {0, 1}, {0.9, 0.1}, {0.2, 0.8}};
    std::vector<std::string> y = {"a", "b", "a", "b"};
    FeatureMatrix X = dense_matrix(Scheme::d2v, rows);
    ClassifierModel knn = train_classifier(X, y, TrainConfig::for_algo(Algo::knn));
    std::vector<std::vector<double>> test = {{0.7, 0.3}, {0.1, 0.9}};
    std::vector<std::vector<double>> scaled = test;
    for (auto& r : scaled)
        for (auto& v : r) v *= 1000.0;  // cosine similarity ignores magnitude
    CHECK(predict(knn, dense_matrix(Scheme::d2v, test, "t")) ==
          predict(knn, dense_matrix(Scheme::d2v, scaled, "s")));
}

TEST_CASE("predict rejects mismatched schemes and widths") {
    FeatureMatrix X = dense_matrix(Scheme::w2v_avg, {{1, 0}, {0, 1}});
    ClassifierModel model = train_classifier(X, {"a", "b"}, TrainConfig::for_algo(Algo::logreg));
    FeatureMatrix wrong_scheme = dense_matrix(Scheme::d2v, {{1, 0}});
    FeatureMatrix wrong_width = dense_matrix(Scheme::w2v_avg, {{1, 0, 0}});
    try {
        predict(model, wrong_scheme);
        FAIL("expected scheme mismatch");
    } catch (const Error& e) {
        CHECK(std::string(e.code()) == "scheme-mismatch");
    }
    CHECK_THROWS_AS(predict(model, wrong_width), Error);
}

TEST_CASE("accuracy is the fraction of exact matches") {
    CHECK(accuracy({"a", "b", "a"}, {"a", "b", "b"}) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(accuracy({}, {}), Error);
    CHECK_THROWS_AS(accuracy({"a"}, {"a", "b"}), Error);
}

TEST_CASE("models survive a save/load round-trip with identical predictions") {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> rows(16, std::vector<double>(4));
    std::vector<std::string> y;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (auto& v : rows[i]) v = std::abs(gauss(rng));
        y.push_back(i % 2 ? "one" : "two");
    }
    FeatureMatrix X = dense_matrix(Scheme::w2v_avg, rows);
    FeatureMatrix Xc = count_matrix(rows);
    for (Algo algo : all_algos()) {
        CAPTURE(algo_name(algo));
        const FeatureMatrix& M = algo == Algo::nb ? Xc : X;
        ClassifierModel model = train_classifier(M, y, TrainConfig::for_algo(algo, 19));
        std::stringstream buf;
        model.save(buf);
        ClassifierModel back = ClassifierModel::load(buf);
        CHECK(back.algo == model.algo);
        CHECK(back.label_space == model.label_space);
        CHECK(back.train_scheme == model.train_scheme);
        CHECK(predict(back, M) == predict(model, M));
    }
    std::istringstream bad("cti-model v0\n");
    CHECK_THROWS_AS(ClassifierModel::load(bad), Error);
}

TEST_CASE("algo names round-trip and configs carry documented defaults") {
    for (Algo a : all_algos()) CHECK(algo_from_name(algo_name(a)) == a);
    CHECK_THROWS_AS(algo_from_name("svm"), Error);
    TrainConfig shallow = TrainConfig::for_algo(Algo::nn_shallow);
    CHECK(shallow.nn_hidden == std::vector<std::size_t>{128});
    TrainConfig deep = TrainConfig::for_algo(Algo::nn_deep);
    CHECK(deep.nn_hidden == std::vector<std::size_t>{256, 128, 64});
    TrainConfig rf = TrainConfig::for_algo(Algo::rforest);
    CHECK(rf.rf_trees == 100);
    CHECK(TrainConfig::for_algo(Algo::knn).knn_k == 5);
    CHECK(TrainConfig::for_algo(Algo::logreg).logreg_iters == 500);
}
