#include "cti/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cti/error.hpp"

namespace cti {

const char* scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::bow_binary: return "bow-binary";
        case Scheme::bow_tf: return "bow-tf";
        case Scheme::tfidf_1gram: return "tfidf-1gram";
        case Scheme::tfidf_2gram: return "tfidf-2gram";
        case Scheme::w2v_avg: return "w2v-avg";
        case Scheme::d2v: return "d2v";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    for (Scheme s : {Scheme::bow_binary, Scheme::bow_tf, Scheme::tfidf_1gram,
                     Scheme::tfidf_2gram, Scheme::w2v_avg, Scheme::d2v})
        if (name == scheme_name(s)) return s;
    throw Error("invalid-argument", "unknown feature scheme: " + name);
}

bool scheme_is_sparse(Scheme scheme) {
    return scheme != Scheme::w2v_avg && scheme != Scheme::d2v;
}

bool scheme_is_term_based(Scheme scheme) { return scheme_is_sparse(scheme); }

FeatureMatrix FeatureMatrix::make_sparse(Scheme scheme, std::size_t n_features) {
    FeatureMatrix m;
    m.scheme = scheme;
    m.sparse = true;
    m.n_features = n_features;
    m.indptr.push_back(0);
    return m;
}

FeatureMatrix FeatureMatrix::make_dense(Scheme scheme, std::size_t n_docs,
                                        std::size_t n_features) {
    FeatureMatrix m;
    m.scheme = scheme;
    m.sparse = false;
    m.n_docs = n_docs;
    m.n_features = n_features;
    m.dense.assign(n_docs * n_features, 0.0);
    m.row_ids.assign(n_docs, std::string());
    return m;
}

void FeatureMatrix::append_sparse_row(
    const std::string& id, const std::vector<std::pair<std::size_t, double>>& entries) {
    for (const auto& [col, val] : entries) {
        if (col >= n_features) throw Error("invalid-argument", "column out of range");
        if (val != 0.0) {
            indices.push_back(col);
            values.push_back(val);
        }
    }
    indptr.push_back(indices.size());
    row_ids.push_back(id);
    ++n_docs;
}

double FeatureMatrix::at(std::size_t r, std::size_t c) const {
    if (!sparse) return dense[r * n_features + c];
    for (std::size_t i = indptr[r]; i < indptr[r + 1]; ++i)
        if (indices[i] == c) return values[i];
    return 0.0;
}

void FeatureMatrix::row_to(std::size_t r, double* out) const {
    if (sparse) {
        std::fill(out, out + n_features, 0.0);
        for (std::size_t i = indptr[r]; i < indptr[r + 1]; ++i) out[indices[i]] = values[i];
    } else {
        std::copy(dense.begin() + r * n_features, dense.begin() + (r + 1) * n_features, out);
    }
}

std::vector<double> FeatureMatrix::row_vector(std::size_t r) const {
    std::vector<double> out(n_features);
    row_to(r, out.data());
    return out;
}

double FeatureMatrix::row_norm(std::size_t r) const {
    double s = 0.0;
    if (sparse) {
        for (std::size_t i = indptr[r]; i < indptr[r + 1]; ++i) s += values[i] * values[i];
    } else {
        for (std::size_t c = 0; c < n_features; ++c) {
            double v = dense[r * n_features + c];
            s += v * v;
        }
    }
    return std::sqrt(s);
}

double FeatureMatrix::min_value() const {
    double m = 0.0;  // implicit zeros in sparse storage
    const auto& vals = sparse ? values : dense;
    for (double v : vals) m = std::min(m, v);
    return m;
}

FeatureMatrix FeatureMatrix::select_rows(const std::vector<std::string>& ids) const {
    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t r = 0; r < row_ids.size(); ++r) row_of.emplace(row_ids[r], r);
    FeatureMatrix out;
    out.scheme = scheme;
    out.sparse = sparse;
    out.n_features = n_features;
    out.feature_names = feature_names;
    if (sparse) out.indptr.push_back(0);
    else out.dense.reserve(ids.size() * n_features);
    for (const auto& id : ids) {
        auto it = row_of.find(id);
        if (it == row_of.end()) throw Error("unknown-document", "row id not in matrix: " + id);
        std::size_t r = it->second;
        if (sparse) {
            for (std::size_t i = indptr[r]; i < indptr[r + 1]; ++i) {
                out.indices.push_back(indices[i]);
                out.values.push_back(values[i]);
            }
            out.indptr.push_back(out.indices.size());
        } else {
            out.dense.insert(out.dense.end(), dense.begin() + r * n_features,
                             dense.begin() + (r + 1) * n_features);
        }
        out.row_ids.push_back(id);
        ++out.n_docs;
    }
    return out;
}

namespace {

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

void FeatureMatrix::save(std::ostream& out) const {
    out << "cti-matrix v1\n";
    out << "scheme " << scheme_name(scheme) << "\n";
    out << "dims " << n_docs << " " << n_features << "\n";
    out << "storage " << (sparse ? "sparse" : "dense") << "\n";
    out << "row_ids";
    for (const auto& id : row_ids) out << "\t" << id;
    out << "\n";
    out << "feature_names";
    for (const auto& name : feature_names) out << "\t" << name;
    out << "\n";
    if (sparse) {
        out << "nnz " << values.size() << "\n";
        for (std::size_t r = 0; r < n_docs; ++r)
            for (std::size_t i = indptr[r]; i < indptr[r + 1]; ++i)
                out << r << " " << indices[i] << " " << fmt9(values[i]) << "\n";
    } else {
        for (std::size_t r = 0; r < n_docs; ++r) {
            for (std::size_t c = 0; c < n_features; ++c)
                out << (c ? " " : "") << fmt9(dense[r * n_features + c]);
            out << "\n";
        }
    }
}

FeatureMatrix FeatureMatrix::load(std::istream& in) {
    std::string header;
    std::getline(in, header);
    if (header != "cti-matrix v1") throw Error("bad-artifact", "not a cti matrix file");
    FeatureMatrix m;
    std::string key, value;
    in >> key >> value;
    m.scheme = scheme_from_name(value);
    in >> key >> m.n_docs >> m.n_features;
    in >> key >> value;
    m.sparse = (value == "sparse");
    in.ignore();
    auto read_tabbed = [&](std::vector<std::string>& out) {
        std::string line;
        std::getline(in, line);
        std::istringstream ls(line);
        std::string field;
        std::getline(ls, field, '\t');
        while (std::getline(ls, field, '\t')) out.push_back(field);
    };
    read_tabbed(m.row_ids);
    read_tabbed(m.feature_names);
    if (m.sparse) {
        std::size_t nnz = 0;
        in >> key >> nnz;
        m.indptr.assign(m.n_docs + 1, 0);
        std::vector<std::size_t> rows(nnz);
        m.indices.resize(nnz);
        m.values.resize(nnz);
        for (std::size_t i = 0; i < nnz; ++i) in >> rows[i] >> m.indices[i] >> m.values[i];
        std::size_t at = 0;
        for (std::size_t r = 0; r < m.n_docs; ++r) {
            while (at < nnz && rows[at] == r) ++at;
            m.indptr[r + 1] = at;
        }
    } else {
        m.dense.resize(m.n_docs * m.n_features);
        for (double& v : m.dense) in >> v;
    }
    if (!in) throw Error("bad-artifact", "truncated matrix file");
    return m;
}

}  // namespace cti
