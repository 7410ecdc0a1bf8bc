#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cti {

using StopwordSet = std::unordered_set<std::string>;

// Removes markup tags and decodes the common HTML entities. Tag content is
// replaced by a space so adjacent words do not merge.
std::string strip_markup(const std::string& text);

std::string to_lower(const std::string& text);

// Collapses runs of whitespace (including newlines) to single spaces and trims.
std::string collapse_whitespace(const std::string& text);

// Splits on non-alphanumeric boundaries. Output tokens are maximal
// alphanumeric runs; caller is expected to have lowercased already.
std::vector<std::string> tokenize(const std::string& text);

// Rule-based English lemmatizer: irregular-form table first, then plural
// (-ies/-es/-s) and inflection (-ing/-ed) suffix stripping with consonant
// de-doubling. Idempotent: lemmatize(lemmatize(t)) == lemmatize(t).
class Lemmatizer {
public:
    Lemmatizer() = default;
    explicit Lemmatizer(std::unordered_map<std::string, std::string> exceptions)
        : exceptions_(std::move(exceptions)) {}

    static Lemmatizer load(const std::string& exceptions_path);
    static Lemmatizer with_builtin_exceptions();

    std::string lemmatize(const std::string& token) const;

private:
    std::unordered_map<std::string, std::string> exceptions_;
};

// One term per line, '#' starts a comment line, blank lines ignored.
StopwordSet load_stopwords(const std::string& path);
StopwordSet builtin_stopwords();

bool is_ascii_alnum(char c);
bool is_purely_numeric(const std::string& token);

}  // namespace cti
