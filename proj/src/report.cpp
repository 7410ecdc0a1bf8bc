#include "cti/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "cti/error.hpp"
#include "cti/features.hpp"
#include "cti/rng.hpp"

namespace cti {

namespace {

struct SchemePair {
    FeatureMatrix train;
    FeatureMatrix test;
};

std::string cell_tag(const std::string& dataset, Algo algo, Scheme scheme) {
    return "cell:" + dataset + ":" + algo_name(algo) + ":" + scheme_name(scheme);
}

}  // namespace

EvalReport run_grid(const Corpus& corpus,
                    const std::vector<std::pair<std::string, LabeledDataset>>& datasets,
                    const GridConfig& config) {
    EvalReport report;
    report.master_seed = config.master_seed;
    report.split_ratio = config.split_ratio;

    for (const auto& [tag, dataset] : datasets) {
        report.dataset_tags.push_back(tag);
        std::unordered_map<std::string, std::string> label_of;
        for (const auto& [id, label] : dataset.entries) label_of[id] = label;

        DatasetSplit split = split_dataset(dataset, config.split_ratio,
                                           derive_seed(config.master_seed, "split:" + tag));
        Corpus train_corpus = subset_corpus(corpus, split.train_ids);
        Corpus test_corpus = subset_corpus(corpus, split.test_ids);
        std::vector<std::string> y_train, y_test;
        for (const auto& id : split.train_ids) y_train.push_back(label_of[id]);
        for (const auto& id : split.test_ids) y_test.push_back(label_of[id]);

        // vocabulary and embedding models come from training documents only
        Vocabulary vocab = build_vocabulary(train_corpus, config.min_df);
        Vocabulary bigram_vocab = build_bigram_vocabulary(train_corpus, config.min_df);

        std::map<Scheme, SchemePair> features;
        for (Scheme scheme : config.schemes) {
            SchemePair pair;
            switch (scheme) {
                case Scheme::bow_binary:
                case Scheme::bow_tf:
                case Scheme::tfidf_1gram:
                    pair.train = vectorize(train_corpus, vocab, scheme);
                    pair.test = vectorize(test_corpus, vocab, scheme);
                    break;
                case Scheme::tfidf_2gram:
                    pair.train = vectorize(train_corpus, bigram_vocab, scheme);
                    pair.test = vectorize(test_corpus, bigram_vocab, scheme);
                    break;
                case Scheme::w2v_avg: {
                    EmbeddingConfig c = config.w2v;
                    c.seed = derive_seed(config.master_seed, "w2v:" + tag);
                    EmbeddingModel model = train_word2vec(train_corpus, c);
                    pair.train = average_doc_vectors(model, train_corpus);
                    pair.test = average_doc_vectors(model, test_corpus);
                    break;
                }
                case Scheme::d2v: {
                    EmbeddingConfig c = config.d2v;
                    c.seed = derive_seed(config.master_seed, "d2v:" + tag);
                    EmbeddingModel model = train_doc2vec(train_corpus, c);
                    pair.train = doc2vec_features(model, train_corpus);
                    pair.test = doc2vec_features(model, test_corpus);
                    break;
                }
            }
            features.emplace(scheme, std::move(pair));
        }

        for (Algo algo : config.algos) {
            for (Scheme scheme : config.schemes) {
                CellKey key{tag, algo_name(algo), scheme_name(scheme)};
                EvalCell cell;
                try {
                    const SchemePair& pair = features.at(scheme);
                    TrainConfig tc = TrainConfig::for_algo(
                        algo, derive_seed(config.master_seed, cell_tag(tag, algo, scheme)));
                    ClassifierModel model =
                        train_classifier(pair.train, y_train, tc, dataset.label_space);
                    cell.ok = true;
                    cell.accuracy = 100.0 * accuracy(predict(model, pair.test), y_test);
                } catch (const Error& e) {
                    cell.ok = false;
                    cell.marker = e.code() == "nb-incompatible-features" ? "-"
                                                                         : "error:" + e.code();
                }
                report.cells.emplace(std::move(key), std::move(cell));
            }
        }
    }
    return report;
}

namespace {

std::string pct2(double percent) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", percent);
    return buf;
}

std::string fmt_exact(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool is_embedding(const std::string& scheme) {
    return scheme == "w2v-avg" || scheme == "d2v";
}

bool is_nn(const std::string& algo) { return algo == "nn-shallow" || algo == "nn-deep"; }

}  // namespace

std::string emit_accuracy_table(const EvalReport& report, TableFormat format,
                                bool published_layout) {
    // preserve insertion structure: datasets in run order, algos/schemes as keyed
    std::vector<std::string> algos, schemes;
    for (const auto& [key, cell] : report.cells) {
        if (std::find(algos.begin(), algos.end(), std::get<1>(key)) == algos.end())
            algos.push_back(std::get<1>(key));
        if (std::find(schemes.begin(), schemes.end(), std::get<2>(key)) == schemes.end())
            schemes.push_back(std::get<2>(key));
    }
    // canonical display order
    auto order_by = [](std::vector<std::string>& items, const std::vector<std::string>& ref) {
        std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
            auto ia = std::find(ref.begin(), ref.end(), a) - ref.begin();
            auto ib = std::find(ref.begin(), ref.end(), b) - ref.begin();
            return ia < ib;
        });
    };
    order_by(algos, {"nb", "logreg", "rforest", "dtree", "knn", "nn-shallow", "nn-deep"});
    order_by(schemes, {"bow-binary", "bow-tf", "tfidf-1gram", "tfidf-2gram", "w2v-avg", "d2v"});

    auto cell_text = [&](const std::string& dataset, const std::string& algo,
                         const std::string& scheme, bool exact) -> std::string {
        if (published_layout && is_nn(algo) && is_embedding(scheme)) return "-";
        auto it = report.cells.find(CellKey{dataset, algo, scheme});
        if (it == report.cells.end()) return "";
        if (!it->second.ok) return it->second.marker;
        return exact ? fmt_exact(it->second.accuracy) : pct2(it->second.accuracy);
    };

    std::ostringstream out;
    if (format == TableFormat::csv) {
        out << "dataset,classifier,scheme,accuracy_percent\n";
        for (const auto& dataset : report.dataset_tags)
            for (const auto& algo : algos) {
                if (published_layout && is_nn(algo) && dataset == "binary") continue;
                for (const auto& scheme : schemes)
                    out << dataset << "," << algo << "," << scheme << ","
                        << cell_text(dataset, algo, scheme, true) << "\n";
            }
        return out.str();
    }

    out << "Classification accuracy (%)  [seed " << report.master_seed << ", split "
        << pct2(report.split_ratio * 100.0) << "% train, " << report.pipeline_version << "]\n";
    std::size_t name_w = 12;
    for (const auto& algo : algos) name_w = std::max(name_w, algo.size() + 2);
    out << std::left << std::setw(12) << "dataset" << std::setw(name_w) << "classifier";
    for (const auto& scheme : schemes) out << std::right << std::setw(13) << scheme;
    out << "\n";
    for (const auto& dataset : report.dataset_tags) {
        for (const auto& algo : algos) {
            if (published_layout && is_nn(algo) && dataset == "binary") continue;
            out << std::left << std::setw(12) << dataset << std::setw(name_w) << algo;
            for (const auto& scheme : schemes)
                out << std::right << std::setw(13) << cell_text(dataset, algo, scheme, false);
            out << "\n";
        }
    }
    return out.str();
}

std::string emit_topic_table(const std::vector<TopicReport>& reports, TableFormat format) {
    std::ostringstream out;
    if (format == TableFormat::csv) {
        out << "dataset,category,method,topic,rank,keyword,weight\n";
        for (const auto& report : reports) {
            const char* method = report.kind == TopicKind::lda ? "LDA" : "NMF";
            for (std::size_t t = 0; t < report.topics.size(); ++t)
                for (std::size_t r = 0; r < report.topics[t].size(); ++r)
                    out << report.dataset << "," << report.category << "," << method << "," << t
                        << "," << r + 1 << "," << report.topics[t][r].first << ","
                        << fmt_exact(report.topics[t][r].second) << "\n";
        }
        return out.str();
    }
    out << "Topic modeling report\n";
    for (const auto& report : reports) {
        out << "Dataset: " << report.dataset << "\n";
        if (!report.category.empty()) out << "Category: '" << report.category << "'\n";
        out << "Topic Modeling Method: " << (report.kind == TopicKind::lda ? "LDA" : "NMF")
            << "\n";
        for (std::size_t t = 0; t < report.topics.size(); ++t) {
            out << t << "\t[";
            for (std::size_t r = 0; r < report.topics[t].size(); ++r)
                out << (r ? " " : "") << "'" << report.topics[t][r].first << "'";
            out << "]\n";
        }
    }
    return out.str();
}

EvalReport parse_accuracy_csv(std::istream& in) {
    EvalReport report;
    std::string line;
    std::getline(in, line);
    if (line != "dataset,classifier,scheme,accuracy_percent")
        throw Error("bad-artifact", "unexpected csv header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string dataset, algo, scheme, value;
        std::getline(ls, dataset, ',');
        std::getline(ls, algo, ',');
        std::getline(ls, scheme, ',');
        std::getline(ls, value);
        EvalCell cell;
        if (value == "-" || value.rfind("error:", 0) == 0) {
            cell.ok = false;
            cell.marker = value;
        } else {
            cell.ok = true;
            cell.accuracy = std::stod(value);
        }
        if (std::find(report.dataset_tags.begin(), report.dataset_tags.end(), dataset) ==
            report.dataset_tags.end())
            report.dataset_tags.push_back(dataset);
        report.cells.emplace(CellKey{dataset, algo, scheme}, cell);
    }
    return report;
}

}  // namespace cti
