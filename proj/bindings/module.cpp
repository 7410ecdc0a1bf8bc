#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <stdexcept>

#include "cti/classifiers.hpp"
#include "cti/corpus.hpp"
#include "cti/error.hpp"
#include "cti/features.hpp"
#include "cti/labeler.hpp"
#include "cti/report.hpp"
#include "cti/text.hpp"
#include "cti/topics.hpp"

namespace py = pybind11;
using namespace cti;

namespace {

const Document& find_doc(const Corpus& corpus, const std::string& id) {
    for (const auto& doc : corpus.documents)
        if (doc.id == id) return doc;
    throw Error("unknown-id", "no document with id " + id);
}

FeatureMatrix rows_to_matrix(const std::vector<std::vector<double>>& rows,
                             const std::string& scheme) {
    if (rows.empty()) throw Error("invalid-argument", "empty feature rows");
    Scheme s = scheme_from_name(scheme);
    FeatureMatrix m = FeatureMatrix::make_dense(s, rows.size(), rows[0].size());
    m.sparse = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw Error("invalid-argument", "ragged feature rows");
        m.row_ids[r] = "r" + std::to_string(r);
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.dense[r * rows[0].size() + c] = rows[r][c];
    }
    return m;
}

std::vector<std::vector<std::pair<std::string, double>>> topics_of(const TopicModel& model,
                                                                   const Vocabulary& vocab,
                                                                   std::size_t n_top) {
    return top_terms(model, vocab, n_top).topics;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "core operations of the cti-miner pipeline";

    py::register_exception<Error>(m, "PipelineError");

    m.def("strip_markup", &strip_markup, py::arg("text"));
    m.def("tokenize", &tokenize, py::arg("text"));
    m.def("lemmatize",
          [](const std::string& token) {
              static const Lemmatizer lemmatizer = Lemmatizer::with_builtin_exceptions();
              return lemmatizer.lemmatize(token);
          },
          py::arg("token"));
    m.def("preprocess",
          [](const std::string& title, const std::string& body) {
              RawPost post;
              post.id = "doc";
              post.title = title;
              post.body = body;
              auto doc = preprocess(post, PreprocessContext::builtin());
              return doc ? doc->tokens : std::vector<std::string>{};
          },
          py::arg("title"), py::arg("body"),
          "full preprocessing of one post: markup removal, lowercasing, "
          "tokenization, stopword removal, lemmatization");

    py::class_<Corpus>(m, "Corpus")
        .def("__len__", &Corpus::size)
        .def_readonly("dropped_count", &Corpus::dropped_count)
        .def("ids",
             [](const Corpus& c) {
                 std::vector<std::string> ids;
                 for (const auto& doc : c.documents) ids.push_back(doc.id);
                 return ids;
             })
        .def("tokens",
             [](const Corpus& c, const std::string& id) { return find_doc(c, id).tokens; },
             py::arg("id"))
        .def("raw_text",
             [](const Corpus& c, const std::string& id) { return find_doc(c, id).raw_text; },
             py::arg("id"));

    m.def("load_dump",
          [](const std::string& path) {
              IngestResult r = ingest_posts(path);
              Corpus c = build_corpus(r.posts, PreprocessContext::builtin(), path);
              return py::make_tuple(std::move(c), r.skipped);
          },
          py::arg("path"), "-> (corpus, skipped_record_count)");

    m.def("label_binary",
          [](const Corpus& corpus) {
              LabeledDataset d = label_binary(corpus, LabelRules::builtin());
              std::map<std::string, std::string> labels(d.entries.begin(), d.entries.end());
              return py::make_tuple(labels, d.excluded_count);
          },
          py::arg("corpus"), "-> ({id: 'relevant'|'irrelevant'}, excluded_count)");

    m.def("label_multiclass",
          [](const Corpus& corpus, const std::vector<std::string>& relevant_ids) {
              LabeledDataset d = label_multiclass(corpus, relevant_ids, LabelRules::builtin());
              std::map<std::string, std::string> labels(d.entries.begin(), d.entries.end());
              return py::make_tuple(labels, d.excluded_count);
          },
          py::arg("corpus"), py::arg("relevant_ids"),
          "-> ({id: category}, excluded_count)");

    m.def("vectorize",
          [](const Corpus& corpus, const std::string& scheme, std::size_t min_df) {
              Vocabulary vocab = build_vocabulary(corpus, min_df);
              FeatureMatrix fm = vectorize(corpus, vocab, scheme_from_name(scheme));
              std::vector<std::vector<double>> rows;
              for (std::size_t r = 0; r < fm.n_docs; ++r) rows.push_back(fm.row_vector(r));
              return py::make_tuple(fm.row_ids, fm.feature_names, rows);
          },
          py::arg("corpus"), py::arg("scheme"), py::arg("min_df") = 1,
          "-> (row_ids, feature_names, rows); term schemes only");

    py::class_<ClassifierModel>(m, "ClassifierModel")
        .def_property_readonly("algo",
                               [](const ClassifierModel& m_) { return std::string(algo_name(m_.algo)); })
        .def("save",
             [](const ClassifierModel& m_) {
                 std::ostringstream out;
                 m_.save(out);
                 return out.str();
             })
        .def_static("load", [](const std::string& text) {
            std::istringstream in(text);
            return ClassifierModel::load(in);
        });

    m.def("train_classifier",
          [](const std::vector<std::vector<double>>& rows, const std::vector<std::string>& labels,
             const std::string& algo, const std::string& scheme, std::uint64_t seed) {
              return train_classifier(rows_to_matrix(rows, scheme), labels,
                                      TrainConfig::for_algo(algo_from_name(algo), seed));
          },
          py::arg("rows"), py::arg("labels"), py::arg("algo"), py::arg("scheme") = "bow-tf",
          py::arg("seed") = 1);

    m.def("predict",
          [](const ClassifierModel& model, const std::vector<std::vector<double>>& rows,
             const std::string& scheme) { return predict(model, rows_to_matrix(rows, scheme)); },
          py::arg("model"), py::arg("rows"), py::arg("scheme") = "bow-tf");

    m.def("accuracy", &accuracy, py::arg("pred"), py::arg("truth"));

    m.def("lda_topics",
          [](const Corpus& corpus, std::size_t k, std::size_t n_top, std::size_t sweeps,
             std::uint64_t seed) {
              Vocabulary vocab = build_vocabulary(corpus);
              FeatureMatrix counts = vectorize(corpus, vocab, Scheme::bow_tf);
              LdaConfig cfg;
              cfg.sweeps = sweeps;
              cfg.seed = seed;
              return topics_of(fit_lda(counts, k, cfg), vocab, n_top);
          },
          py::arg("corpus"), py::arg("k"), py::arg("n_top") = 10, py::arg("sweeps") = 1000,
          py::arg("seed") = 1, "-> list of topics, each a ranked list of (term, weight)");

    m.def("nmf_topics",
          [](const Corpus& corpus, std::size_t k, std::size_t n_top, std::uint64_t seed) {
              Vocabulary vocab = build_vocabulary(corpus);
              FeatureMatrix X = vectorize(corpus, vocab, Scheme::tfidf_1gram);
              NmfConfig cfg;
              cfg.seed = seed;
              return topics_of(fit_nmf(X, k, cfg), vocab, n_top);
          },
          py::arg("corpus"), py::arg("k"), py::arg("n_top") = 10, py::arg("seed") = 1,
          "-> list of topics, each a ranked list of (term, weight)");

    m.def("evaluate_grid",
          [](const Corpus& corpus, std::uint64_t seed, double ratio, std::size_t embed_dim,
             bool published_layout) {
              LabeledDataset binary = label_binary(corpus, LabelRules::builtin());
              std::vector<std::string> relevant;
              for (const auto& [id, label] : binary.entries)
                  if (label == kLabelRelevant) relevant.push_back(id);
              LabeledDataset multi = label_multiclass(corpus, relevant, LabelRules::builtin());
              GridConfig cfg;
              cfg.master_seed = seed;
              cfg.split_ratio = ratio;
              cfg.w2v.dim = embed_dim;
              cfg.d2v.dim = embed_dim;
              EvalReport report = run_grid(
                  corpus, {{"binary", binary}, {"multiclass", multi}}, cfg);
              return emit_accuracy_table(report, TableFormat::csv, published_layout);
          },
          py::arg("corpus"), py::arg("seed") = 42, py::arg("ratio") = 0.67,
          py::arg("embed_dim") = 100, py::arg("published_layout") = false,
          "label, split, featurize, train and score every classifier/scheme "
          "combination; returns the accuracy table as CSV text");

    m.attr("__version__") = kPipelineVersion;
}
