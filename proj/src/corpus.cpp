#include "cti/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cti/error.hpp"

namespace cti {

namespace {

std::string escape_value(const std::string& v) {
    std::string out;
    out.reserve(v.size());
    for (char c : v) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string unescape_value(const std::string& v) {
    std::string out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == '\\' && i + 1 < v.size()) {
            char n = v[++i];
            if (n == 't') out.push_back('\t');
            else if (n == 'n') out.push_back('\n');
            else out.push_back(n);
        } else {
            out.push_back(v[i]);
        }
    }
    return out;
}

}  // namespace

std::string encode_post_record(const RawPost& post) {
    std::string line = "id=" + escape_value(post.id);
    line += "\tsource=" + escape_value(post.source);
    line += "\ttitle=" + escape_value(post.title);
    line += "\tbody=" + escape_value(post.body);
    if (post.posted_at) line += "\tposted_at=" + escape_value(*post.posted_at);
    return line;
}

IngestResult parse_posts(std::istream& in) {
    IngestResult result;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        RawPost post;
        bool have_id = false, bad = false;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t tab = line.find('\t', pos);
            std::string field = line.substr(pos, tab == std::string::npos ? tab : tab - pos);
            pos = (tab == std::string::npos) ? line.size() + 1 : tab + 1;
            auto eq = field.find('=');
            if (eq == std::string::npos) {
                bad = true;
                break;
            }
            std::string key = field.substr(0, eq);
            std::string value = unescape_value(field.substr(eq + 1));
            if (key == "id") {
                post.id = value;
                have_id = true;
            } else if (key == "source") {
                post.source = value;
            } else if (key == "title") {
                post.title = value;
            } else if (key == "body") {
                post.body = value;
            } else if (key == "posted_at") {
                post.posted_at = value;
            }
            // unknown keys ignored
        }
        if (bad || !have_id || post.id.empty() || !seen_ids.insert(post.id).second ||
            (post.title.empty() && post.body.empty())) {
            std::cerr << "warning: skipping malformed record at line " << lineno << "\n";
            ++result.skipped;
            continue;
        }
        result.posts.push_back(std::move(post));
    }
    return result;
}

IngestResult ingest_posts(const std::string& dump_path) {
    std::ifstream in(dump_path);
    if (!in) throw Error("io", "cannot read dump file: " + dump_path);
    return parse_posts(in);
}

PreprocessContext PreprocessContext::builtin() {
    return PreprocessContext{builtin_stopwords(), Lemmatizer::with_builtin_exceptions()};
}

namespace {

std::string normalize_raw(const std::string& text) {
    return collapse_whitespace(to_lower(strip_markup(text)));
}

void append_tokens(const std::string& lowered, const PreprocessContext& ctx,
                   std::vector<std::string>& out) {
    for (auto& tok : tokenize(lowered)) {
        if (ctx.stopwords.count(tok)) continue;
        if (tok.size() < 2) continue;
        std::string lemma = ctx.lemmatizer.lemmatize(tok);
        if (lemma.size() < 2 || ctx.stopwords.count(lemma)) continue;
        out.push_back(std::move(lemma));
    }
}

}  // namespace

std::optional<Document> preprocess(const RawPost& post, const PreprocessContext& ctx) {
    std::string title = normalize_raw(post.title);
    std::string body = normalize_raw(post.body);

    Document doc;
    doc.id = post.id;
    doc.raw_text = title.empty() ? body : (body.empty() ? title : title + " " + body);
    append_tokens(title, ctx, doc.tokens);
    append_tokens(body, ctx, doc.tokens);
    if (doc.tokens.empty()) return std::nullopt;
    return doc;
}

Corpus build_corpus(const std::vector<RawPost>& posts, const PreprocessContext& ctx,
                    const std::string& source) {
    Corpus corpus;
    corpus.source = source;
    for (const auto& post : posts) {
        if (auto doc = preprocess(post, ctx))
            corpus.documents.push_back(std::move(*doc));
        else
            ++corpus.dropped_count;
    }
    if (corpus.empty() && !posts.empty())
        std::cerr << "warning: all " << posts.size() << " posts dropped by preprocessing\n";
    return corpus;
}

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& docs_terms,
                             std::size_t n_docs, std::size_t min_df) {
    if (min_df < 1) throw Error("invalid-argument", "min_df must be >= 1");
    std::map<std::string, std::size_t> df;  // ordered: lexicographic index assignment
    for (const auto& terms : docs_terms) {
        std::unordered_set<std::string> seen;
        for (const auto& t : terms)
            if (seen.insert(t).second) ++df[t];
    }
    Vocabulary vocab;
    vocab.n_docs_ = n_docs;
    vocab.min_df_ = min_df;
    for (const auto& [term, freq] : df) {
        if (freq < min_df) continue;
        vocab.index_.emplace(term, vocab.terms_.size());
        vocab.terms_.push_back(term);
        vocab.doc_freq_.push_back(freq);
    }
    return vocab;
}

Vocabulary build_vocabulary(const Corpus& corpus, std::size_t min_df) {
    std::vector<std::vector<std::string>> docs;
    docs.reserve(corpus.size());
    for (const auto& doc : corpus.documents) docs.push_back(doc.tokens);
    return Vocabulary::build(docs, corpus.size(), min_df);
}

Corpus subset_corpus(const Corpus& corpus, const std::vector<std::string>& ids) {
    std::unordered_map<std::string, const Document*> by_id;
    for (const auto& doc : corpus.documents) by_id.emplace(doc.id, &doc);
    Corpus sub;
    sub.source = corpus.source;
    for (const auto& id : ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw Error("unknown-document", "id not in corpus: " + id);
        sub.documents.push_back(*it->second);
    }
    return sub;
}

std::int64_t Vocabulary::index_of(const std::string& term) const {
    auto it = index_.find(term);
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

void Vocabulary::save(std::ostream& out) const {
    out << "cti-corpus v1 vocabulary\n";
    out << "n_docs " << n_docs_ << "\n";
    out << "min_df " << min_df_ << "\n";
    out << "n_terms " << terms_.size() << "\n";
    for (std::size_t i = 0; i < terms_.size(); ++i)
        out << terms_[i] << "\t" << doc_freq_[i] << "\n";
}

Vocabulary Vocabulary::load(std::istream& in) {
    std::string header;
    std::getline(in, header);
    if (header != "cti-corpus v1 vocabulary")
        throw Error("bad-artifact", "not a cti vocabulary file");
    Vocabulary vocab;
    std::string key;
    std::size_t n_terms = 0;
    in >> key >> vocab.n_docs_;
    in >> key >> vocab.min_df_;
    in >> key >> n_terms;
    in.ignore();
    for (std::size_t i = 0; i < n_terms; ++i) {
        std::string line;
        std::getline(in, line);
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw Error("bad-artifact", "corrupt vocabulary line");
        std::string term = line.substr(0, tab);
        vocab.index_.emplace(term, vocab.terms_.size());
        vocab.terms_.push_back(term);
        vocab.doc_freq_.push_back(std::stoull(line.substr(tab + 1)));
    }
    return vocab;
}

void save_corpus(const Corpus& corpus, std::ostream& out) {
    out << "cti-corpus v1\n";
    out << "source " << corpus.source << "\n";
    out << "dropped " << corpus.dropped_count << "\n";
    out << "n_docs " << corpus.documents.size() << "\n";
    for (const auto& doc : corpus.documents) {
        out << doc.id << "\n";
        out << doc.raw_text << "\n";
        for (std::size_t i = 0; i < doc.tokens.size(); ++i)
            out << (i ? " " : "") << doc.tokens[i];
        out << "\n";
    }
}

Corpus load_corpus(std::istream& in) {
    std::string header;
    std::getline(in, header);
    if (header != "cti-corpus v1") throw Error("bad-artifact", "not a cti corpus file");
    Corpus corpus;
    std::string key;
    std::size_t n_docs = 0;
    std::getline(in, key);
    if (key.rfind("source ", 0) == 0) corpus.source = key.substr(7);
    in >> key >> corpus.dropped_count;
    in >> key >> n_docs;
    in.ignore();
    for (std::size_t i = 0; i < n_docs; ++i) {
        Document doc;
        std::getline(in, doc.id);
        std::getline(in, doc.raw_text);
        std::string toks;
        std::getline(in, toks);
        std::istringstream ts(toks);
        std::string tok;
        while (ts >> tok) doc.tokens.push_back(tok);
        corpus.documents.push_back(std::move(doc));
    }
    if (!in) throw Error("bad-artifact", "truncated corpus file");
    return corpus;
}

}  // namespace cti
