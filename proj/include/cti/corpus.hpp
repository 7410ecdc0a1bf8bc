#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cti/text.hpp"

namespace cti {

struct RawPost {
    std::string id;
    std::string source;
    std::string title;
    std::string body;
    std::optional<std::string> posted_at;
};

struct IngestResult {
    std::vector<RawPost> posts;
    std::size_t skipped = 0;  // malformed records
};

struct Document {
    std::string id;
    std::vector<std::string> tokens;
    // lowercased, whitespace-collapsed, markup-stripped, punctuation intact;
    // the labeler matches keywords against this
    std::string raw_text;
};

struct Corpus {
    std::vector<Document> documents;
    std::size_t dropped_count = 0;  // posts empty after preprocessing
    std::string source;

    std::size_t size() const { return documents.size(); }
    bool empty() const { return documents.empty(); }
};

// term <-> dense index space, indices assigned in lexicographic term order
class Vocabulary {
public:
    Vocabulary() = default;

    static Vocabulary build(const std::vector<std::vector<std::string>>& docs_terms,
                            std::size_t n_docs, std::size_t min_df);

    std::size_t size() const { return terms_.size(); }
    std::size_t n_docs() const { return n_docs_; }
    std::size_t min_df() const { return min_df_; }

    // -1 when absent
    std::int64_t index_of(const std::string& term) const;
    const std::string& term(std::size_t index) const { return terms_[index]; }
    const std::vector<std::string>& terms() const { return terms_; }
    std::size_t doc_freq(std::size_t index) const { return doc_freq_[index]; }

    void save(std::ostream& out) const;
    static Vocabulary load(std::istream& in);

private:
    std::vector<std::string> terms_;
    std::vector<std::size_t> doc_freq_;
    std::map<std::string, std::size_t> index_;
    std::size_t n_docs_ = 0;
    std::size_t min_df_ = 1;
};

// Parses the line-oriented dump format (see README): one record per line,
// tab-separated key=value fields with \t \n \\ escapes in values.
IngestResult ingest_posts(const std::string& dump_path);
IngestResult parse_posts(std::istream& in);
std::string encode_post_record(const RawPost& post);

struct PreprocessContext {
    StopwordSet stopwords;
    Lemmatizer lemmatizer;

    static PreprocessContext builtin();
};

// Returns nullopt when the post is empty after preprocessing (dropped).
std::optional<Document> preprocess(const RawPost& post, const PreprocessContext& ctx);

Corpus build_corpus(const std::vector<RawPost>& posts, const PreprocessContext& ctx,
                    const std::string& source = "");

// unigram vocabulary over corpus tokens
Vocabulary build_vocabulary(const Corpus& corpus, std::size_t min_df = 1);

// documents in the given id order; unknown ids are an error
Corpus subset_corpus(const Corpus& corpus, const std::vector<std::string>& ids);

void save_corpus(const Corpus& corpus, std::ostream& out);
Corpus load_corpus(std::istream& in);

}  // namespace cti
