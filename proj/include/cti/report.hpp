#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cti/classifiers.hpp"
#include "cti/corpus.hpp"
#include "cti/embeddings.hpp"
#include "cti/labeler.hpp"
#include "cti/topics.hpp"

namespace cti {

inline constexpr const char* kPipelineVersion = "cti-miner 1.0";

struct EvalCell {
    bool ok = false;
    double accuracy = 0.0;   // percent in [0,100]
    std::string marker;      // "-" for incompatible cells, "error:<code>" for failures
};

using CellKey = std::tuple<std::string, std::string, std::string>;  // dataset, algo, scheme

struct EvalReport {
    std::map<CellKey, EvalCell> cells;
    std::vector<std::string> dataset_tags;
    std::uint64_t master_seed = 0;
    double split_ratio = 0.67;
    std::string pipeline_version = kPipelineVersion;
};

struct GridConfig {
    std::uint64_t master_seed = 42;
    double split_ratio = 0.67;
    std::size_t min_df = 1;
    EmbeddingConfig w2v = EmbeddingConfig::word2vec_defaults();
    EmbeddingConfig d2v = EmbeddingConfig::doc2vec_defaults();
    std::vector<Algo> algos = all_algos();
    std::vector<Scheme> schemes = {Scheme::bow_binary,  Scheme::bow_tf, Scheme::tfidf_1gram,
                                   Scheme::tfidf_2gram, Scheme::w2v_avg, Scheme::d2v};
};

// every (dataset, algo, scheme) combination: featurize with a vocabulary
// built from training documents only, train on the train split, score on the
// test split; incompatible or failing cells are recorded in-cell
EvalReport run_grid(const Corpus& corpus,
                    const std::vector<std::pair<std::string, LabeledDataset>>& datasets,
                    const GridConfig& config);

enum class TableFormat { text, csv };

// published_layout drops the NN rows from binary sections and blanks the
// NN x embedding cells, mirroring the published table shape
std::string emit_accuracy_table(const EvalReport& report, TableFormat format,
                                bool published_layout = false);

std::string emit_topic_table(const std::vector<TopicReport>& reports, TableFormat format);

// inverse of the csv emitter, used for round-trip checks and downstream tools
EvalReport parse_accuracy_csv(std::istream& in);

}  // namespace cti
