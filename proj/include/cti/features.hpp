#pragma once

#include "cti/corpus.hpp"
#include "cti/matrix.hpp"

namespace cti {

// idf(t) = ln((1+N)/(1+df(t))) + 1
double smoothed_idf(std::size_t n_docs, std::size_t df);

// contiguous token pairs, feature name "a b"
std::vector<std::string> document_bigrams(const Document& doc);
Vocabulary build_bigram_vocabulary(const Corpus& corpus, std::size_t min_df = 1);

// Produces one of the four term-based schemes. For tfidf-2gram the vocabulary
// must be a bigram vocabulary; for the others a unigram vocabulary. N and df
// for idf come from the vocabulary, so a train-built vocabulary keeps test
// statistics out.
FeatureMatrix vectorize(const Corpus& corpus, const Vocabulary& vocab, Scheme scheme);

}  // namespace cti
