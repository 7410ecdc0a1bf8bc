#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cti/matrix.hpp"

namespace cti {

enum class Algo { nb, logreg, dtree, rforest, knn, nn_shallow, nn_deep };

const char* algo_name(Algo algo);
Algo algo_from_name(const std::string& name);
std::vector<Algo> all_algos();

struct TrainConfig {
    Algo algo = Algo::logreg;
    std::uint64_t seed = 1;

    double nb_alpha = 1.0;  // Laplace smoothing

    double logreg_l2 = 1e-4;
    double logreg_rate = 0.1;
    std::size_t logreg_iters = 500;
    double logreg_tol = 1e-6;  // gradient-norm stop

    std::size_t rf_trees = 100;

    std::size_t knn_k = 5;

    std::vector<std::size_t> nn_hidden;  // filled from algo when empty
    double nn_rate = 0.01;
    double nn_momentum = 0.9;
    std::size_t nn_batch = 32;
    std::size_t nn_epochs = 20;

    static TrainConfig for_algo(Algo algo, std::uint64_t seed = 1);
};

struct NBParams {
    std::vector<double> log_prior;  // per label
    Matrix log_likelihood;          // labels x features
};

struct LinearParams {
    Matrix weights;  // labels x features
    std::vector<double> bias;
};

struct TreeNode {
    std::int32_t feature = -1;  // -1 for leaf
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::vector<double> dist;  // leaf label distribution
};

struct TreeParams {
    std::vector<TreeNode> nodes;  // node 0 is the root
};

struct ForestParams {
    std::vector<TreeParams> trees;
    std::vector<std::uint64_t> tree_seeds;
};

struct KnnParams {
    Matrix train;  // retained training rows
    std::vector<std::size_t> labels;
    std::size_t k = 5;
};

struct NNParams {
    std::vector<Matrix> weights;            // layer l: out x in
    std::vector<std::vector<double>> bias;  // layer l: out
};

struct ClassifierModel {
    Algo algo = Algo::logreg;
    std::vector<std::string> label_space;
    std::string train_scheme;
    std::size_t n_features = 0;
    TrainConfig config;

    std::optional<NBParams> nb;
    std::optional<LinearParams> linear;
    std::optional<TreeParams> tree;
    std::optional<ForestParams> forest;
    std::optional<KnnParams> knn;
    std::optional<NNParams> nn;

    void save(std::ostream& out) const;
    static ClassifierModel load(std::istream& in);
};

// label_space empty: sorted unique labels of y
ClassifierModel train_classifier(const FeatureMatrix& X, const std::vector<std::string>& y,
                                 const TrainConfig& config,
                                 std::vector<std::string> label_space = {});

std::vector<std::string> predict(const ClassifierModel& model, const FeatureMatrix& X);

double accuracy(const std::vector<std::string>& pred, const std::vector<std::string>& truth);

// --- pieces exposed for the gradient / oracle test suites ---

// mean softmax cross-entropy with 0.5*l2*||W||^2
double logreg_loss(const LinearParams& p, const Matrix& X, const std::vector<std::size_t>& y,
                   double l2);
void logreg_gradient(const LinearParams& p, const Matrix& X, const std::vector<std::size_t>& y,
                     double l2, Matrix& grad_w, std::vector<double>& grad_b);

double nn_loss(const NNParams& p, const Matrix& X, const std::vector<std::size_t>& y);
NNParams nn_gradient(const NNParams& p, const Matrix& X, const std::vector<std::size_t>& y);

std::vector<double> tree_predict_dist(const TreeParams& tree, const double* row);

}  // namespace cti
