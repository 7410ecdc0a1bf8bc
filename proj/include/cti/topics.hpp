#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cti/corpus.hpp"
#include "cti/labeler.hpp"
#include "cti/matrix.hpp"

namespace cti {

struct LdaConfig {
    double alpha = 0.0;  // <= 0 means 50/k
    double beta = 0.01;
    std::size_t sweeps = 1000;
    std::uint64_t seed = 1;
};

struct NmfConfig {
    std::size_t max_iters = 200;
    double rel_tol = 1e-4;  // stop when relative error improvement falls below
    std::uint64_t seed = 1;
};

enum class TopicKind { lda, nmf };

struct TopicModel {
    TopicKind kind = TopicKind::lda;
    std::size_t k = 0;

    // lda
    double alpha = 0.0;
    double beta = 0.0;
    std::size_t sweeps = 0;
    Matrix phi;    // k x V topic-term distributions, rows sum to 1
    Matrix theta;  // n x k doc-topic distributions, rows sum to 1

    // nmf
    Matrix w;  // n x k
    Matrix h;  // k x V, rows L1-normalized after convergence
    double rel_error = 0.0;
    std::size_t iters = 0;
    std::vector<double> error_history;  // Frobenius objective per iteration

    std::uint64_t seed = 0;

    void save(std::ostream& out) const;
    static TopicModel load(std::istream& in);
};

struct TopicReport {
    std::vector<std::vector<std::pair<std::string, double>>> topics;  // ranked (term, weight)
    std::string dataset;
    std::string category;  // empty for whole-dataset runs
    TopicKind kind = TopicKind::lda;
    std::size_t k = 0;
};

// invoked after every Gibbs sweep with (sweep, doc_topic counts n x k,
// topic_term counts k x V); used by the conservation tests
using SweepCallback =
    std::function<void(std::size_t, const std::vector<std::vector<std::size_t>>&,
                       const std::vector<std::vector<std::size_t>>&)>;

// counts must be a bow-tf matrix of raw term counts
TopicModel fit_lda(const FeatureMatrix& counts, std::size_t k, const LdaConfig& config,
                   const SweepCallback& on_sweep = nullptr);

// X must be nonnegative (tfidf-1gram in the pipeline)
TopicModel fit_nmf(const FeatureMatrix& X, std::size_t k, const NmfConfig& config);

TopicReport top_terms(const TopicModel& model, const Vocabulary& vocab, std::size_t n_top);

struct PerCategoryConfig {
    TopicKind kind = TopicKind::lda;
    std::size_t k = 5;
    std::size_t n_top = 10;
    std::size_t min_df = 1;
    LdaConfig lda;
    NmfConfig nmf;
};

// restrict corpus per category, rebuild vocabulary, fit, extract top terms;
// categories with fewer than k documents are skipped with a warning
std::vector<TopicReport> run_per_category(const Corpus& corpus, const LabeledDataset& dataset,
                                          const PerCategoryConfig& config);

}  // namespace cti
