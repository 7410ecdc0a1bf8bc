#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "cti/corpus.hpp"
#include "cti/embeddings.hpp"
#include "cti/error.hpp"

using namespace cti;

namespace {

Document make_doc(std::string id, std::vector<std::string> tokens) {
    Document d;
    d.id = std::move(id);
    d.tokens = std::move(tokens);
    return d;
}

Corpus small_corpus() {
    Corpus c;
    c.documents.push_back(make_doc("a", {"red", "apple", "red", "fruit", "sweet"}));
    c.documents.push_back(make_doc("b", {"green", "apple", "sour", "fruit", "green"}));
    c.documents.push_back(make_doc("c", {"red", "fruit", "sweet", "apple", "tasty"}));
    c.documents.push_back(make_doc("d", {"green", "fruit", "sour", "apple", "crisp"}));
    return c;
}

double finite_difference(std::vector<double>& param, std::size_t i,
                         const std::function<double()>& loss) {
    const double h = 1e-6;
    double orig = param[i];
    param[i] = orig + h;
    double up = loss();
    param[i] = orig - h;
    double down = loss();
    param[i] = orig;
    return (up - down) / (2 * h);
}

}  // namespace

TEST_CASE("negative-sampling gradients match central finite differences") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss(0.0, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t dim = 6;
        std::vector<double> v(dim), ctx(dim);
        std::vector<std::vector<double>> negs(3, std::vector<double>(dim));
        for (auto& x : v) x = gauss(rng);
        for (auto& x : ctx) x = gauss(rng);
        for (auto& n : negs)
            for (auto& x : n) x = gauss(rng);

        std::vector<double> gv, gc;
        std::vector<std::vector<double>> gn;
        sgns_gradients(v, ctx, negs, gv, gc, gn);
        auto loss = [&] { return sgns_loss(v, ctx, negs); };
        for (std::size_t i = 0; i < dim; ++i) {
            double fd = finite_difference(v, i, loss);
            CHECK(gv[i] == doctest::Approx(fd).epsilon(1e-5));
            fd = finite_difference(ctx, i, loss);
            CHECK(gc[i] == doctest::Approx(fd).epsilon(1e-5));
            for (std::size_t n = 0; n < negs.size(); ++n) {
                fd = finite_difference(negs[n], i, loss);
                CHECK(gn[n][i] == doctest::Approx(fd).epsilon(1e-5));
            }
        }
    }
}

TEST_CASE("word2vec respects min_count and dim") {
    Corpus c = small_corpus();
    EmbeddingConfig cfg = EmbeddingConfig::word2vec_defaults();
    cfg.dim = 16;
    cfg.seed = 3;
    EmbeddingModel m = train_word2vec(c, cfg);
    CHECK(m.kind == EmbeddingKind::word2vec);
    // "tasty" and "crisp" occur once; min_count=2 drops them
    CHECK(m.word_vector("tasty") == nullptr);
    CHECK(m.word_vector("crisp") == nullptr);
    CHECK(m.word_vector("apple") != nullptr);
    CHECK(m.in_vectors.cols == 16);
    for (double x : m.in_vectors.data) CHECK(std::isfinite(x));
}

TEST_CASE("word2vec training is deterministic in the seed") {
    Corpus c = small_corpus();
    EmbeddingConfig cfg = EmbeddingConfig::word2vec_defaults();
    cfg.dim = 12;
    cfg.seed = 5;
    EmbeddingModel a = train_word2vec(c, cfg);
    EmbeddingModel b = train_word2vec(c, cfg);
    CHECK(a.in_vectors.data == b.in_vectors.data);
    CHECK(a.out_vectors.data == b.out_vectors.data);
    cfg.seed = 6;
    EmbeddingModel d = train_word2vec(c, cfg);
    CHECK(a.in_vectors.data != d.in_vectors.data);
}

TEST_CASE("average_doc_vectors is the mean of word vectors with multiplicity") {
    Corpus c = small_corpus();
    EmbeddingConfig cfg = EmbeddingConfig::word2vec_defaults();
    cfg.dim = 8;
    cfg.seed = 9;
    EmbeddingModel m = train_word2vec(c, cfg);
    FeatureMatrix f = average_doc_vectors(m, c);
    CHECK(f.scheme == Scheme::w2v_avg);
    CHECK(f.n_features == 8);
    // doc a = {red, apple, red, fruit, sweet}: "red" counted twice
    const Document& doc = c.documents[0];
    std::vector<double> expect(8, 0.0);
    std::size_t used = 0;
    for (const auto& t : doc.tokens) {
        const double* wv = m.word_vector(t);
        if (!wv) continue;
        ++used;
        for (std::size_t j = 0; j < 8; ++j) expect[j] += wv[j];
    }
    REQUIRE(used > 0);
    for (std::size_t j = 0; j < 8; ++j)
        CHECK(f.at(0, j) == doctest::Approx(expect[j] / used).epsilon(1e-12));
}

TEST_CASE("documents with no in-vocabulary words map to the zero vector") {
    Corpus c = small_corpus();
    EmbeddingConfig cfg = EmbeddingConfig::word2vec_defaults();
    cfg.dim = 8;
    cfg.seed = 1;
    EmbeddingModel m = train_word2vec(c, cfg);
    Corpus oov;
    oov.documents.push_back(make_doc("x", {"zebra", "quagga"}));
    FeatureMatrix f = average_doc_vectors(m, oov);
    CHECK(f.row_norm(0) == 0.0);
}

TEST_CASE("doc2vec stores one vector per training document") {
    Corpus c = small_corpus();
    EmbeddingConfig cfg = EmbeddingConfig::doc2vec_defaults();
    cfg.dim = 10;
    cfg.seed = 2;
    EmbeddingModel m = train_doc2vec(c, cfg);
    CHECK(m.kind == EmbeddingKind::doc2vec);
    CHECK(m.doc_ids.size() == 4);
    CHECK(m.doc_vectors.rows == 4);
    CHECK(m.doc_vectors.cols == 10);
    FeatureMatrix f = doc2vec_features(m, c);
    // training documents reuse the stored vectors verbatim
    for (std::size_t d = 0; d < 4; ++d)
        for (std::size_t j = 0; j < 10; ++j) CHECK(f.at(d, j) == m.doc_vectors(d, j));
}

TEST_CASE("doc2vec inference is deterministic and id-dependent") {
    Corpus c = small_corpus();
    EmbeddingConfig cfg = EmbeddingConfig::doc2vec_defaults();
    cfg.dim = 10;
    cfg.seed = 2;
    EmbeddingModel m = train_doc2vec(c, cfg);
    Document unseen = make_doc("new", {"red", "apple", "sour"});
    std::vector<double> v1 = infer_doc_vector(m, unseen);
    std::vector<double> v2 = infer_doc_vector(m, unseen);
    CHECK(v1 == v2);
    Document renamed = make_doc("new2", unseen.tokens);
    CHECK(infer_doc_vector(m, renamed) != v1);  // per-doc seed derives from the id
    for (double x : v1) CHECK(std::isfinite(x));
}

TEST_CASE("embedding model save/load round-trip is exact") {
    Corpus c = small_corpus();
    EmbeddingConfig cfg = EmbeddingConfig::word2vec_defaults();
    cfg.dim = 8;
    cfg.seed = 4;
    EmbeddingModel m = train_word2vec(c, cfg);
    std::stringstream buf;
    m.save(buf);
    EmbeddingModel back = EmbeddingModel::load(buf);
    CHECK(back.kind == m.kind);
    CHECK(back.vocab_terms == m.vocab_terms);
    CHECK(back.in_vectors.data == m.in_vectors.data);    // %.17g round-trip
    CHECK(back.out_vectors.data == m.out_vectors.data);

    EmbeddingConfig dcfg = EmbeddingConfig::doc2vec_defaults();
    dcfg.dim = 6;
    dcfg.seed = 4;
    EmbeddingModel dm = train_doc2vec(c, dcfg);
    std::stringstream dbuf;
    dm.save(dbuf);
    EmbeddingModel dback = EmbeddingModel::load(dbuf);
    CHECK(dback.doc_ids == dm.doc_ids);
    CHECK(dback.doc_vectors.data == dm.doc_vectors.data);
    // inference must agree exactly after a round-trip
    Document unseen = make_doc("u", {"green", "fruit"});
    CHECK(infer_doc_vector(dback, unseen) == infer_doc_vector(dm, unseen));

    std::istringstream bad("cti-embedding v7\n");
    CHECK_THROWS_AS(EmbeddingModel::load(bad), Error);
}

TEST_CASE("defaults match the documented hyperparameters") {
    EmbeddingConfig w = EmbeddingConfig::word2vec_defaults();
    CHECK(w.dim == 100);
    CHECK(w.window == 5);
    CHECK(w.negatives == 5);
    CHECK(w.epochs == 5);
    CHECK(w.min_count == 2);
    CHECK(w.initial_lr == 0.025);
    EmbeddingConfig d = EmbeddingConfig::doc2vec_defaults();
    CHECK(d.dim == 100);
    CHECK(d.epochs == 10);
    CHECK(d.infer_steps == 50);
}
