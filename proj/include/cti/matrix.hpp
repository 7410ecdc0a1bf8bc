#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace cti {

// minimal dense row-major matrix
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
};

enum class Scheme { bow_binary, bow_tf, tfidf_1gram, tfidf_2gram, w2v_avg, d2v };

const char* scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);
bool scheme_is_sparse(Scheme scheme);
bool scheme_is_term_based(Scheme scheme);

// docs x features matrix tagged with its weighting scheme; CSR storage for
// term schemes, dense rows for embedding schemes
struct FeatureMatrix {
    Scheme scheme = Scheme::bow_tf;
    std::size_t n_docs = 0;
    std::size_t n_features = 0;
    bool sparse = true;

    std::vector<std::size_t> indptr;   // size n_docs+1 (sparse)
    std::vector<std::size_t> indices;  // column indices (sparse)
    std::vector<double> values;        // (sparse)
    std::vector<double> dense;         // row-major (dense)

    std::vector<std::string> row_ids;
    std::vector<std::string> feature_names;  // term schemes only

    static FeatureMatrix make_sparse(Scheme scheme, std::size_t n_features);
    static FeatureMatrix make_dense(Scheme scheme, std::size_t n_docs, std::size_t n_features);

    // entries must be sorted by column and unique; zero values allowed but skipped
    void append_sparse_row(const std::string& id,
                           const std::vector<std::pair<std::size_t, double>>& entries);

    double at(std::size_t r, std::size_t c) const;
    void row_to(std::size_t r, double* out) const;  // densify one row into out[n_features]
    std::vector<double> row_vector(std::size_t r) const;
    double row_norm(std::size_t r) const;
    double min_value() const;

    // rows in the given order (ids must all exist)
    FeatureMatrix select_rows(const std::vector<std::string>& ids) const;

    void save(std::ostream& out) const;
    static FeatureMatrix load(std::istream& in);
};

}  // namespace cti
