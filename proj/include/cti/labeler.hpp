#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "cti/corpus.hpp"

namespace cti {

struct CategoryRule {
    std::string name;
    std::vector<std::string> phrases;
};

struct LabelRules {
    std::vector<std::string> relevant_keywords;
    std::vector<std::string> security_blocklist;  // superset of relevant_keywords
    std::vector<CategoryRule> category_rules;     // order is the tie-break order

    static LabelRules builtin();
    static LabelRules load(const std::string& path);
    void validate() const;
};

enum class LabelScheme { binary, multiclass };

struct LabeledDataset {
    LabelScheme scheme = LabelScheme::binary;
    std::vector<std::pair<std::string, std::string>> entries;  // (doc id, label)
    std::vector<std::string> label_space;
    std::size_t excluded_count = 0;
};

struct DatasetSplit {
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
    double ratio = 0.67;
    std::uint64_t seed = 0;
};

// A phrase matches iff it occurs in raw_text bounded on the left by
// start-of-text or a non-alphanumeric character and on the right by
// end-of-text, a non-alphanumeric character, or an inflectional suffix
// ("keyloggers" matches phrase "keylogger").
std::set<std::string> match_keywords(const std::string& raw_text,
                                     const std::vector<std::string>& phrases);
std::set<std::string> match_keywords(const Document& doc,
                                     const std::vector<std::string>& phrases);
// number of boundary-valid occurrences of all phrases
std::size_t count_keyword_matches(const std::string& raw_text,
                                  const std::vector<std::string>& phrases);

inline constexpr const char* kLabelRelevant = "relevant";
inline constexpr const char* kLabelIrrelevant = "irrelevant";

LabeledDataset label_binary(const Corpus& corpus, const LabelRules& rules);
LabeledDataset label_multiclass(const Corpus& corpus,
                                const std::vector<std::string>& relevant_ids,
                                const LabelRules& rules);

DatasetSplit split_dataset(const LabeledDataset& dataset, double ratio, std::uint64_t seed);

void save_labels(const LabeledDataset& dataset, std::ostream& out);
LabeledDataset load_labels(std::istream& in);

}  // namespace cti
