#include "cti/features.hpp"

#include <cmath>
#include <iostream>
#include <map>

#include "cti/error.hpp"

namespace cti {

double smoothed_idf(std::size_t n_docs, std::size_t df) {
    return std::log((1.0 + static_cast<double>(n_docs)) / (1.0 + static_cast<double>(df))) + 1.0;
}

std::vector<std::string> document_bigrams(const Document& doc) {
    std::vector<std::string> bigrams;
    if (doc.tokens.size() < 2) return bigrams;
    bigrams.reserve(doc.tokens.size() - 1);
    for (std::size_t i = 0; i + 1 < doc.tokens.size(); ++i)
        bigrams.push_back(doc.tokens[i] + " " + doc.tokens[i + 1]);
    return bigrams;
}

Vocabulary build_bigram_vocabulary(const Corpus& corpus, std::size_t min_df) {
    std::vector<std::vector<std::string>> docs;
    docs.reserve(corpus.size());
    for (const auto& doc : corpus.documents) docs.push_back(document_bigrams(doc));
    return Vocabulary::build(docs, corpus.size(), min_df);
}

FeatureMatrix vectorize(const Corpus& corpus, const Vocabulary& vocab, Scheme scheme) {
    if (!scheme_is_term_based(scheme))
        throw Error("invalid-argument",
                    std::string("vectorize handles term schemes only, got ") + scheme_name(scheme));

    FeatureMatrix m = FeatureMatrix::make_sparse(scheme, vocab.size());
    m.feature_names = vocab.terms();

    for (const auto& doc : corpus.documents) {
        std::map<std::size_t, double> counts;  // ordered: columns ascending
        const std::vector<std::string> grams =
            scheme == Scheme::tfidf_2gram ? document_bigrams(doc) : doc.tokens;
        for (const auto& g : grams) {
            std::int64_t idx = vocab.index_of(g);
            if (idx >= 0) counts[static_cast<std::size_t>(idx)] += 1.0;
        }
        if (counts.empty())
            std::cerr << "warning: document " << doc.id << " has no in-vocabulary terms for "
                      << scheme_name(scheme) << "\n";

        std::vector<std::pair<std::size_t, double>> entries;
        entries.reserve(counts.size());
        switch (scheme) {
            case Scheme::bow_binary:
                for (const auto& [col, cnt] : counts) entries.emplace_back(col, 1.0);
                break;
            case Scheme::bow_tf:
                for (const auto& [col, cnt] : counts) entries.emplace_back(col, cnt);
                break;
            case Scheme::tfidf_1gram:
            case Scheme::tfidf_2gram: {
                double norm2 = 0.0;
                for (const auto& [col, cnt] : counts) {
                    double w = cnt * smoothed_idf(vocab.n_docs(), vocab.doc_freq(col));
                    entries.emplace_back(col, w);
                    norm2 += w * w;
                }
                if (norm2 > 0.0) {
                    double inv = 1.0 / std::sqrt(norm2);
                    for (auto& [col, w] : entries) w *= inv;
                }
                break;
            }
            default: break;
        }
        m.append_sparse_row(doc.id, entries);
    }
    return m;
}

}  // namespace cti
