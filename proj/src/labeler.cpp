#include "cti/labeler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cti/error.hpp"
#include "cti/rng.hpp"

namespace cti {

namespace {

const char* kRelevantKeywords[] = {
    "adware", "antivirus", "botnet", "backdoor", "crack", "crimeware", "crypter",
    "ddos", "downloader", "dropper", "exploit", "firewall", "hijack", "infect",
    "keylogger", "malware", "password", "ransomware", "reverse shell", "rootkit",
    "scanner", "shell code", "security", "spam", "spoof", "spyware", "trojan",
    "virus", "vulnerability", "worm", "zero-day", "stealware",
};

// stand-in for the otherwise unbounded "any computer security related
// keywords" condition; posts matching only these are excluded, not irrelevant
const char* kSupplementaryBlocklist[] = {
    "0day", "2fa", "aircrack", "bootkit", "booter", "breach", "brute force",
    "bruteforce", "burp suite", "carder", "carding", "cobalt strike",
    "credential", "csrf", "cve", "cyber attack", "cyberattack", "cybercrime",
    "cybersecurity", "darknet", "dark web", "data breach", "deface",
    "defacement", "denial of service", "dox", "doxing", "emotet", "escalation",
    "exfiltration", "fud", "hacking", "hashcat", "hashdump", "honeypot",
    "infosec", "infostealer", "injection", "jailbreak", "john the ripper",
    "kali", "keygen", "keystroke", "leak", "lfi", "malvertising", "metasploit",
    "meterpreter", "mimikatz", "mirai", "mitm", "nmap", "obfuscation",
    "obfuscator", "opsec", "packet sniffing", "payload", "pentest", "petya",
    "phishing", "phreaking", "privilege escalation", "pwn", "pwned",
    "rainbow table", "rat", "rce", "remote access", "rfi", "shellcode",
    "skimmer", "smishing", "sniffer", "sql injection", "sqli", "sqlmap",
    "ssrf", "stealer", "stresser", "vishing", "wannacry", "warez",
    "wireshark", "wordlist", "xss", "xxe", "zombie",
};

}  // namespace

LabelRules LabelRules::builtin() {
    LabelRules rules;
    for (const char* kw : kRelevantKeywords) rules.relevant_keywords.push_back(kw);
    rules.security_blocklist = rules.relevant_keywords;
    for (const char* kw : kSupplementaryBlocklist) rules.security_blocklist.push_back(kw);
    rules.category_rules = {
        {"Credential Leaks", {"username", "password", "pass list"}},
        {"Keylogger", {"keylogger"}},
        {"DDoS Attack", {"ddos", "denial of service", "server"}},
        {"Remote Access Trojans", {"rat", "trojan", "remote access"}},
        {"Crypter", {"crypter", "fud", "crypt", "stub", "miner"}},
        {"SQL Injection", {"sql", "injection", "id="}},
    };
    rules.validate();
    return rules;
}

LabelRules LabelRules::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot read rules file: " + path);
    LabelRules rules;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw Error("bad-artifact", "rules line missing tab: " + line);
        std::string section = line.substr(0, tab);
        std::string phrase = to_lower(line.substr(tab + 1));
        if (phrase.empty()) throw Error("bad-artifact", "empty keyword phrase");
        if (section == "relevant") {
            rules.relevant_keywords.push_back(phrase);
        } else if (section == "blocklist") {
            rules.security_blocklist.push_back(phrase);
        } else if (section.rfind("category:", 0) == 0) {
            std::string name = section.substr(9);
            auto it = std::find_if(rules.category_rules.begin(), rules.category_rules.end(),
                                   [&](const CategoryRule& c) { return c.name == name; });
            if (it == rules.category_rules.end()) {
                rules.category_rules.push_back({name, {phrase}});
            } else {
                it->phrases.push_back(phrase);
            }
        } else {
            throw Error("bad-artifact", "unknown rules section: " + section);
        }
    }
    // the blocklist is a superset of the relevant list by definition
    std::unordered_set<std::string> block(rules.security_blocklist.begin(),
                                          rules.security_blocklist.end());
    for (const auto& kw : rules.relevant_keywords)
        if (block.insert(kw).second) rules.security_blocklist.push_back(kw);
    rules.validate();
    return rules;
}

void LabelRules::validate() const {
    std::unordered_set<std::string> block(security_blocklist.begin(), security_blocklist.end());
    for (const auto& kw : relevant_keywords)
        if (!block.count(kw))
            throw Error("bad-rules", "relevant keyword missing from blocklist: " + kw);
    std::unordered_set<std::string> names;
    for (const auto& cat : category_rules) {
        if (!names.insert(cat.name).second)
            throw Error("bad-rules", "duplicate category name: " + cat.name);
        if (cat.phrases.empty()) throw Error("bad-rules", "category with no keywords: " + cat.name);
    }
    auto check_lower = [](const std::string& p) {
        if (p.empty()) throw Error("bad-rules", "empty keyword phrase");
        for (char c : p)
            if (c >= 'A' && c <= 'Z') throw Error("bad-rules", "keyword not lowercase: " + p);
    };
    for (const auto& p : relevant_keywords) check_lower(p);
    for (const auto& p : security_blocklist) check_lower(p);
    for (const auto& cat : category_rules)
        for (const auto& p : cat.phrases) check_lower(p);
}

namespace {

bool suffix_boundary(const std::string& text, std::size_t end) {
    std::size_t i = end;
    while (i < text.size() && is_ascii_alnum(text[i])) ++i;
    std::string tail = text.substr(end, i - end);
    return tail == "s" || tail == "es" || tail == "ed" || tail == "ing";
}

// all boundary-valid occurrence positions of phrase in text
std::size_t count_phrase(const std::string& text, const std::string& phrase) {
    if (phrase.empty()) return 0;
    std::size_t count = 0;
    for (std::size_t pos = text.find(phrase); pos != std::string::npos;
         pos = text.find(phrase, pos + 1)) {
        if (pos > 0 && is_ascii_alnum(text[pos - 1])) continue;
        std::size_t end = pos + phrase.size();
        bool right_ok = !is_ascii_alnum(phrase.back()) || end == text.size() ||
                        !is_ascii_alnum(text[end]) || suffix_boundary(text, end);
        if (right_ok) ++count;
    }
    return count;
}

}  // namespace

std::set<std::string> match_keywords(const std::string& raw_text,
                                     const std::vector<std::string>& phrases) {
    std::set<std::string> matched;
    for (const auto& phrase : phrases)
        if (count_phrase(raw_text, phrase) > 0) matched.insert(phrase);
    return matched;
}

std::set<std::string> match_keywords(const Document& doc,
                                     const std::vector<std::string>& phrases) {
    return match_keywords(doc.raw_text, phrases);
}

std::size_t count_keyword_matches(const std::string& raw_text,
                                  const std::vector<std::string>& phrases) {
    std::size_t total = 0;
    for (const auto& phrase : phrases) total += count_phrase(raw_text, phrase);
    return total;
}

LabeledDataset label_binary(const Corpus& corpus, const LabelRules& rules) {
    rules.validate();
    LabeledDataset dataset;
    dataset.scheme = LabelScheme::binary;
    dataset.label_space = {kLabelRelevant, kLabelIrrelevant};
    for (const auto& doc : corpus.documents) {
        if (!match_keywords(doc.raw_text, rules.relevant_keywords).empty()) {
            dataset.entries.emplace_back(doc.id, kLabelRelevant);
        } else if (match_keywords(doc.raw_text, rules.security_blocklist).empty()) {
            dataset.entries.emplace_back(doc.id, kLabelIrrelevant);
        } else {
            ++dataset.excluded_count;  // security-adjacent, neither class
        }
    }
    return dataset;
}

LabeledDataset label_multiclass(const Corpus& corpus,
                                const std::vector<std::string>& relevant_ids,
                                const LabelRules& rules) {
    rules.validate();
    LabeledDataset dataset;
    dataset.scheme = LabelScheme::multiclass;
    for (const auto& cat : rules.category_rules) dataset.label_space.push_back(cat.name);
    if (relevant_ids.empty()) {
        std::cerr << "warning: no relevant documents for multiclass labeling\n";
        return dataset;
    }
    std::unordered_map<std::string, const Document*> by_id;
    for (const auto& doc : corpus.documents) by_id.emplace(doc.id, &doc);
    for (const auto& id : relevant_ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw Error("unknown-document", "id not in corpus: " + id);
        const Document& doc = *it->second;
        std::size_t best = 0, best_count = 0;
        bool found = false;
        for (std::size_t c = 0; c < rules.category_rules.size(); ++c) {
            std::size_t count = count_keyword_matches(doc.raw_text, rules.category_rules[c].phrases);
            if (count > best_count) {  // ties keep the earlier (listing-order) category
                best = c;
                best_count = count;
                found = true;
            }
        }
        if (found)
            dataset.entries.emplace_back(id, rules.category_rules[best].name);
        else
            ++dataset.excluded_count;
    }
    return dataset;
}

DatasetSplit split_dataset(const LabeledDataset& dataset, double ratio, std::uint64_t seed) {
    if (dataset.entries.empty()) throw Error("invalid-argument", "cannot split empty dataset");
    if (!(ratio > 0.0 && ratio < 1.0)) throw Error("invalid-argument", "ratio must be in (0,1)");
    std::vector<std::size_t> order(dataset.entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng = make_rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t n_train = static_cast<std::size_t>(
        std::llround(ratio * static_cast<double>(order.size())));

    DatasetSplit split;
    split.ratio = ratio;
    split.seed = seed;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& id = dataset.entries[order[i]].first;
        (i < n_train ? split.train_ids : split.test_ids).push_back(id);
    }
    std::unordered_map<std::string, std::string> label_of;
    for (const auto& [id, label] : dataset.entries) label_of[id] = label;
    std::unordered_set<std::string> train_labels;
    for (const auto& id : split.train_ids) train_labels.insert(label_of[id]);
    for (const auto& label : dataset.label_space)
        if (!train_labels.count(label))
            std::cerr << "warning: label absent from training split: " << label << "\n";
    return split;
}

void save_labels(const LabeledDataset& dataset, std::ostream& out) {
    out << "cti-labels v1\n";
    out << "scheme " << (dataset.scheme == LabelScheme::binary ? "binary" : "multiclass") << "\n";
    out << "labels";
    for (const auto& label : dataset.label_space) out << "\t" << label;
    out << "\n";
    out << "excluded " << dataset.excluded_count << "\n";
    out << "n_entries " << dataset.entries.size() << "\n";
    for (const auto& [id, label] : dataset.entries) out << id << "\t" << label << "\n";
}

LabeledDataset load_labels(std::istream& in) {
    std::string header;
    std::getline(in, header);
    if (header != "cti-labels v1") throw Error("bad-artifact", "not a cti labels file");
    LabeledDataset dataset;
    std::string line;
    std::getline(in, line);
    if (line == "scheme binary") dataset.scheme = LabelScheme::binary;
    else if (line == "scheme multiclass") dataset.scheme = LabelScheme::multiclass;
    else throw Error("bad-artifact", "bad scheme line");
    std::getline(in, line);
    {
        std::istringstream ls(line);
        std::string field;
        std::getline(ls, field, '\t');  // "labels"
        while (std::getline(ls, field, '\t')) dataset.label_space.push_back(field);
    }
    std::size_t n_entries = 0;
    std::string key;
    in >> key >> dataset.excluded_count;
    in >> key >> n_entries;
    in.ignore();
    for (std::size_t i = 0; i < n_entries; ++i) {
        std::getline(in, line);
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw Error("bad-artifact", "corrupt labels line");
        dataset.entries.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    if (!in) throw Error("bad-artifact", "truncated labels file");
    return dataset;
}

}  // namespace cti
