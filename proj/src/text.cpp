#include "cti/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cti/error.hpp"

namespace cti::detail {
extern const char* kBuiltinStopwords;
extern const char* kBuiltinLemmaExceptions;
}  // namespace cti::detail

namespace cti {

bool is_ascii_alnum(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_purely_numeric(const std::string& token) {
    if (token.empty()) return false;
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

namespace {

bool is_ascii_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

const std::pair<const char*, const char*> kEntities[] = {
    {"&amp;", "&"}, {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""},
    {"&apos;", "'"}, {"&#39;", "'"}, {"&nbsp;", " "},
};

}  // namespace

std::string strip_markup(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_tag = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_tag) {
            if (c == '>') in_tag = false;
            continue;
        }
        if (c == '<') {
            // only treat as a tag opener when it plausibly starts one
            if (i + 1 < text.size() &&
                (is_ascii_alpha(text[i + 1]) || text[i + 1] == '/' || text[i + 1] == '!')) {
                in_tag = true;
                out.push_back(' ');
                continue;
            }
        }
        if (c == '&') {
            bool replaced = false;
            for (const auto& [ent, rep] : kEntities) {
                std::size_t n = std::char_traits<char>::length(ent);
                if (text.compare(i, n, ent) == 0) {
                    out.append(rep);
                    i += n - 1;
                    replaced = true;
                    break;
                }
            }
            if (replaced) continue;
        }
        out.push_back(c);
    }
    return out;
}

std::string to_lower(const std::string& text) {
    std::string out = text;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string collapse_whitespace(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (is_ascii_alnum(c)) {
            cur.push_back(c);
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

namespace {

bool has_vowel(const std::string& s) {
    for (char c : s)
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y') return true;
    return false;
}

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Fix up a stem produced by stripping -ing/-ed: undo consonant doubling
// (running -> run) or restore a trailing 'e' after a CVC ending
// (making -> make; final w/x/y excluded).
std::string repair_stem(std::string stem) {
    std::size_t n = stem.size();
    if (n >= 2 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) &&
        stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z') {
        stem.pop_back();
        return stem;
    }
    // stems ending in a bare 's' lost a final 'e' ("releas(ing)" -> "release");
    // restoring it also keeps the result a fixed point of the plural rules
    if (n >= 4 && stem[n - 1] == 's' && stem[n - 2] != 's' && stem[n - 2] != 'u' &&
        stem[n - 2] != 'i') {
        stem.push_back('e');
        return stem;
    }
    // short stems ending consonant-vowel-consonant usually lost a final 'e'
    // ("mak(ing)" -> "make"); longer stems ("discover") did not
    std::size_t measure = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (is_vowel(stem[i - 1]) && !is_vowel(stem[i])) ++measure;
    if (measure == 1 && n >= 3 && !is_vowel(stem[n - 3]) && is_vowel(stem[n - 2]) &&
        !is_vowel(stem[n - 1]) && stem[n - 1] != 'w' && stem[n - 1] != 'x' &&
        stem[n - 1] != 'y') {
        stem.push_back('e');
    }
    return stem;
}

std::string strip_plural(const std::string& t) {
    std::size_t n = t.size();
    if (n >= 5 && ends_with(t, "ies")) return t.substr(0, n - 3) + "y";
    if (ends_with(t, "sses") || ends_with(t, "xes") || ends_with(t, "zes") ||
        ends_with(t, "ches") || ends_with(t, "shes"))
        return t.substr(0, n - 2);
    if (n > 3 && t[n - 1] == 's' && !ends_with(t, "ss") && !ends_with(t, "us") &&
        !ends_with(t, "is"))
        return t.substr(0, n - 1);
    return t;
}

std::string strip_inflection(const std::string& t) {
    std::size_t n = t.size();
    if (n >= 6 && ends_with(t, "ing")) {
        std::string stem = t.substr(0, n - 3);
        if (stem.size() >= 3 && has_vowel(stem)) return repair_stem(std::move(stem));
    }
    if (n >= 5 && ends_with(t, "ied")) return t.substr(0, n - 3) + "y";
    if (n >= 5 && ends_with(t, "ed")) {
        std::string stem = t.substr(0, n - 2);
        if (stem.size() >= 3 && has_vowel(stem)) return repair_stem(std::move(stem));
    }
    return t;
}

std::unordered_map<std::string, std::string> parse_exceptions(std::istream& in) {
    std::unordered_map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        out.emplace(line.substr(0, tab), line.substr(tab + 1));
    }
    return out;
}

}  // namespace

std::string Lemmatizer::lemmatize(const std::string& token) const {
    if (auto it = exceptions_.find(token); it != exceptions_.end()) return it->second;
    for (char c : token)
        if (!is_ascii_alpha(c)) return token;  // leave mixed/numeric tokens alone
    std::string t = strip_plural(token);
    if (auto it = exceptions_.find(t); it != exceptions_.end()) return it->second;
    return strip_inflection(t);
}

Lemmatizer Lemmatizer::load(const std::string& exceptions_path) {
    std::ifstream in(exceptions_path);
    if (!in) throw Error("io", "cannot read lemma exceptions file: " + exceptions_path);
    return Lemmatizer(parse_exceptions(in));
}

Lemmatizer Lemmatizer::with_builtin_exceptions() {
    std::istringstream in(detail::kBuiltinLemmaExceptions);
    return Lemmatizer(parse_exceptions(in));
}

namespace {

StopwordSet parse_stopwords(std::istream& in) {
    StopwordSet out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.insert(to_lower(line));
    }
    return out;
}

}  // namespace

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot read stopword file: " + path);
    return parse_stopwords(in);
}

StopwordSet builtin_stopwords() {
    std::istringstream in(detail::kBuiltinStopwords);
    return parse_stopwords(in);
}

}  // namespace cti
