#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>

#include "cti/corpus.hpp"
#include "cti/matrix.hpp"

namespace cti {

struct EmbeddingConfig {
    std::size_t dim = 100;
    std::size_t window = 5;
    std::size_t negatives = 5;
    std::size_t epochs = 5;  // doc2vec default is 10, see make_doc2vec_defaults
    double initial_lr = 0.025;
    double min_lr = 1e-4;
    std::size_t min_count = 2;
    std::size_t infer_steps = 50;  // doc2vec inference passes with frozen word matrices
    std::uint64_t seed = 1;
    std::size_t workers = 1;  // >1 permitted but then training is not deterministic

    static EmbeddingConfig word2vec_defaults();
    static EmbeddingConfig doc2vec_defaults();
};

enum class EmbeddingKind { word2vec, doc2vec };

struct EmbeddingModel {
    EmbeddingKind kind = EmbeddingKind::word2vec;
    EmbeddingConfig config;

    std::vector<std::string> vocab_terms;
    std::unordered_map<std::string, std::size_t> term_index;
    Matrix in_vectors;   // V x dim, the word vectors exposed downstream
    Matrix out_vectors;  // V x dim, output (context/target) embeddings

    std::vector<std::string> doc_ids;  // doc2vec only
    std::unordered_map<std::string, std::size_t> doc_index;
    Matrix doc_vectors;  // |docs| x dim

    const double* word_vector(const std::string& term) const;  // nullptr if OOV

    void save(std::ostream& out) const;
    static EmbeddingModel load(std::istream& in);
};

// Loss and analytic gradients of one negative-sampling update:
//   L = -log sigma(u_ctx . v_in) - sum_n log sigma(-u_neg_n . v_in)
// The same routine drives training, so the finite-difference check in the
// test suite covers the production gradient path.
double sgns_loss(const std::vector<double>& v_in, const std::vector<double>& u_ctx,
                 const std::vector<std::vector<double>>& u_negs);
void sgns_gradients(const std::vector<double>& v_in, const std::vector<double>& u_ctx,
                    const std::vector<std::vector<double>>& u_negs,
                    std::vector<double>& grad_in, std::vector<double>& grad_ctx,
                    std::vector<std::vector<double>>& grad_negs);

EmbeddingModel train_word2vec(const Corpus& corpus, const EmbeddingConfig& config);
EmbeddingModel train_doc2vec(const Corpus& corpus, const EmbeddingConfig& config);

// row d = mean of word vectors of in-vocabulary tokens (with multiplicity)
FeatureMatrix average_doc_vectors(const EmbeddingModel& model, const Corpus& corpus);

// frozen word matrices, fresh doc vector optimized for config.infer_steps passes
std::vector<double> infer_doc_vector(const EmbeddingModel& model, const Document& doc);

// stored vectors for training documents, inferred vectors otherwise
FeatureMatrix doc2vec_features(const EmbeddingModel& model, const Corpus& corpus);

}  // namespace cti
