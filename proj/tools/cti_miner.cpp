#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cti/classifiers.hpp"
#include "cti/corpus.hpp"
#include "cti/embeddings.hpp"
#include "cti/error.hpp"
#include "cti/features.hpp"
#include "cti/labeler.hpp"
#include "cti/report.hpp"
#include "cti/rng.hpp"
#include "cti/topics.hpp"

namespace fs = std::filesystem;
using namespace cti;

namespace {

struct Options {
    std::string config_path;
    std::string dump_path;
    std::string stopwords_path;  // empty = builtin list
    std::string rules_path;      // empty = builtin rules
    std::string lemmas_path;     // empty = builtin exceptions
    std::string out_dir = "out";
    std::uint64_t seed = 42;
    double ratio = 0.67;
    std::size_t min_df = 1;
    std::size_t workers = 1;
    std::size_t k_binary = 10;
    std::size_t k_category = 5;
    std::size_t n_top = 10;
    std::size_t lda_sweeps = 1000;
    // train subcommand
    std::string algo = "logreg";
    std::string scheme = "bow-binary";
    std::string dataset = "binary";
    bool published_layout = false;
};

// line-oriented `key = value` with [section] headers; flags override
std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::map<std::string, std::string> config;
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot read config file: " + path);
    std::string line, section;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw Error("bad-config", "config line missing '=': " + line);
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t");
            auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        config[section.empty() ? key : section + "." + key] = value;
    }
    return config;
}

void apply_config(Options& opt, const std::map<std::string, std::string>& config) {
    auto get = [&](const char* key, auto& target) {
        auto it = config.find(key);
        if (it == config.end()) return;
        std::istringstream ss(it->second);
        ss >> target;
    };
    auto get_str = [&](const char* key, std::string& target) {
        auto it = config.find(key);
        if (it != config.end()) target = it->second;
    };
    get_str("paths.dump", opt.dump_path);
    get_str("paths.stopwords", opt.stopwords_path);
    get_str("paths.rules", opt.rules_path);
    get_str("paths.lemmas", opt.lemmas_path);
    get_str("paths.out", opt.out_dir);
    get("pipeline.seed", opt.seed);
    get("pipeline.ratio", opt.ratio);
    get("pipeline.min_df", opt.min_df);
    get("pipeline.workers", opt.workers);
    get("topics.k_binary", opt.k_binary);
    get("topics.k_category", opt.k_category);
    get("topics.n_top", opt.n_top);
    get("topics.sweeps", opt.lda_sweeps);
}

fs::path artifact(const Options& opt, const std::string& name) {
    return fs::path(opt.out_dir) / name;
}

// missing input artifact: nonzero exit with a message naming the producer
std::ifstream open_artifact(const Options& opt, const std::string& name,
                            const std::string& producer) {
    fs::path path = artifact(opt, name);
    std::ifstream in(path);
    if (!in)
        throw Error("missing-artifact",
                    "missing " + path.string() + "; run `cti-miner " + producer + "` first");
    return in;
}

void write_artifact(const Options& opt, const std::string& name, const std::string& content) {
    fs::create_directories(opt.out_dir);
    std::ofstream out(artifact(opt, name), std::ios::binary);
    if (!out) throw Error("io", "cannot write " + artifact(opt, name).string());
    out << content;
}

template <typename Fn>
void write_artifact_with(const Options& opt, const std::string& name, Fn&& fn) {
    std::ostringstream out;
    fn(out);
    write_artifact(opt, name, out.str());
}

PreprocessContext make_context(const Options& opt) {
    PreprocessContext ctx;
    ctx.stopwords =
        opt.stopwords_path.empty() ? builtin_stopwords() : load_stopwords(opt.stopwords_path);
    ctx.lemmatizer = opt.lemmas_path.empty() ? Lemmatizer::with_builtin_exceptions()
                                             : Lemmatizer::load(opt.lemmas_path);
    return ctx;
}

LabelRules make_rules(const Options& opt) {
    return opt.rules_path.empty() ? LabelRules::builtin() : LabelRules::load(opt.rules_path);
}

// ---------- subcommands ----------

int cmd_ingest(const Options& opt) {
    if (opt.dump_path.empty()) throw Error("invalid-argument", "ingest requires --dump");
    IngestResult ingest = ingest_posts(opt.dump_path);
    Corpus corpus = build_corpus(ingest.posts, make_context(opt), opt.dump_path);
    write_artifact_with(opt, "corpus.txt", [&](std::ostream& o) { save_corpus(corpus, o); });
    std::cout << "ingest: " << corpus.size() << " documents (" << ingest.skipped
              << " records skipped, " << corpus.dropped_count << " posts dropped)\n";
    return 0;
}

int cmd_label(const Options& opt) {
    auto in = open_artifact(opt, "corpus.txt", "ingest");
    Corpus corpus = load_corpus(in);
    LabelRules rules = make_rules(opt);
    LabeledDataset binary = label_binary(corpus, rules);
    std::vector<std::string> relevant_ids;
    for (const auto& [id, label] : binary.entries)
        if (label == kLabelRelevant) relevant_ids.push_back(id);
    LabeledDataset multi = label_multiclass(corpus, relevant_ids, rules);
    write_artifact_with(opt, "labels_binary.txt",
                        [&](std::ostream& o) { save_labels(binary, o); });
    write_artifact_with(opt, "labels_multiclass.txt",
                        [&](std::ostream& o) { save_labels(multi, o); });
    std::cout << "label: " << relevant_ids.size() << " relevant, "
              << binary.entries.size() - relevant_ids.size() << " irrelevant, "
              << binary.excluded_count << " excluded; multiclass " << multi.entries.size()
              << " across " << multi.label_space.size() << " categories\n";
    return 0;
}

int cmd_featurize(const Options& opt) {
    auto in = open_artifact(opt, "corpus.txt", "ingest");
    Corpus corpus = load_corpus(in);
    Vocabulary vocab = build_vocabulary(corpus, opt.min_df);
    Vocabulary bigram_vocab = build_bigram_vocabulary(corpus, opt.min_df);
    write_artifact_with(opt, "vocab.txt", [&](std::ostream& o) { vocab.save(o); });
    write_artifact_with(opt, "bigram_vocab.txt", [&](std::ostream& o) { bigram_vocab.save(o); });

    for (Scheme scheme : {Scheme::bow_binary, Scheme::bow_tf, Scheme::tfidf_1gram}) {
        FeatureMatrix m = vectorize(corpus, vocab, scheme);
        write_artifact_with(opt, std::string("matrix_") + scheme_name(scheme) + ".txt",
                            [&](std::ostream& o) { m.save(o); });
    }
    {
        FeatureMatrix m = vectorize(corpus, bigram_vocab, Scheme::tfidf_2gram);
        write_artifact_with(opt, "matrix_tfidf-2gram.txt", [&](std::ostream& o) { m.save(o); });
    }
    {
        EmbeddingConfig c = EmbeddingConfig::word2vec_defaults();
        c.seed = derive_seed(opt.seed, "w2v:featurize");
        c.workers = opt.workers;
        EmbeddingModel model = train_word2vec(corpus, c);
        write_artifact_with(opt, "w2v_model.txt", [&](std::ostream& o) { model.save(o); });
        FeatureMatrix m = average_doc_vectors(model, corpus);
        write_artifact_with(opt, "matrix_w2v-avg.txt", [&](std::ostream& o) { m.save(o); });
    }
    {
        EmbeddingConfig c = EmbeddingConfig::doc2vec_defaults();
        c.seed = derive_seed(opt.seed, "d2v:featurize");
        c.workers = opt.workers;
        EmbeddingModel model = train_doc2vec(corpus, c);
        write_artifact_with(opt, "d2v_model.txt", [&](std::ostream& o) { model.save(o); });
        FeatureMatrix m = doc2vec_features(model, corpus);
        write_artifact_with(opt, "matrix_d2v.txt", [&](std::ostream& o) { m.save(o); });
    }
    std::cout << "featurize: 6 matrices over " << corpus.size() << " documents ("
              << vocab.size() << " terms, " << bigram_vocab.size() << " bigrams)\n";
    return 0;
}

int cmd_train(const Options& opt) {
    auto min = open_artifact(opt, "matrix_" + opt.scheme + ".txt", "featurize");
    FeatureMatrix X = FeatureMatrix::load(min);
    auto lin = open_artifact(opt, "labels_" + opt.dataset + ".txt", "label");
    LabeledDataset dataset = load_labels(lin);

    std::map<std::string, std::string> label_of(dataset.entries.begin(), dataset.entries.end());
    std::vector<std::string> ids, y;
    for (const auto& [id, label] : dataset.entries) {
        ids.push_back(id);
        y.push_back(label);
    }
    FeatureMatrix Xd = X.select_rows(ids);
    TrainConfig tc = TrainConfig::for_algo(
        algo_from_name(opt.algo),
        derive_seed(opt.seed, "train:" + opt.dataset + ":" + opt.algo + ":" + opt.scheme));
    ClassifierModel model = train_classifier(Xd, y, tc, dataset.label_space);
    double train_acc = accuracy(predict(model, Xd), y);
    std::string name = "model_" + opt.dataset + "_" + opt.algo + "_" + opt.scheme + ".txt";
    write_artifact_with(opt, name, [&](std::ostream& o) { model.save(o); });
    std::cout << "train: " << opt.algo << " on " << opt.scheme << " (" << opt.dataset
              << "), training accuracy " << train_acc << "\n";
    return 0;
}

int cmd_evaluate(const Options& opt) {
    auto in = open_artifact(opt, "corpus.txt", "ingest");
    Corpus corpus = load_corpus(in);
    auto bin = open_artifact(opt, "labels_binary.txt", "label");
    auto min = open_artifact(opt, "labels_multiclass.txt", "label");
    std::vector<std::pair<std::string, LabeledDataset>> datasets;
    datasets.emplace_back("binary", load_labels(bin));
    datasets.emplace_back("multiclass", load_labels(min));

    GridConfig config;
    config.master_seed = opt.seed;
    config.split_ratio = opt.ratio;
    config.min_df = opt.min_df;
    EvalReport report = run_grid(corpus, datasets, config);
    write_artifact(opt, "eval.csv", emit_accuracy_table(report, TableFormat::csv));
    write_artifact(opt, "eval.txt",
                   emit_accuracy_table(report, TableFormat::text, opt.published_layout));
    std::size_t markers = 0;
    for (const auto& [key, cell] : report.cells)
        if (!cell.ok) ++markers;
    std::cout << "evaluate: " << report.cells.size() << " grid cells (" << markers
              << " markers) -> eval.csv\n";
    return 0;
}

int cmd_topics(const Options& opt) {
    auto in = open_artifact(opt, "corpus.txt", "ingest");
    Corpus corpus = load_corpus(in);
    auto bin = open_artifact(opt, "labels_binary.txt", "label");
    LabeledDataset binary = load_labels(bin);
    auto min = open_artifact(opt, "labels_multiclass.txt", "label");
    LabeledDataset multi = load_labels(min);

    std::vector<TopicReport> reports;
    // whole-dataset runs over the binary dataset documents
    std::vector<std::string> ids;
    for (const auto& [id, label] : binary.entries) ids.push_back(id);
    Corpus binary_corpus = subset_corpus(corpus, ids);
    Vocabulary vocab = build_vocabulary(binary_corpus, opt.min_df);

    {
        FeatureMatrix counts = vectorize(binary_corpus, vocab, Scheme::bow_tf);
        LdaConfig lc;
        lc.sweeps = opt.lda_sweeps;
        lc.seed = derive_seed(opt.seed, "lda:binary");
        TopicModel model = fit_lda(counts, opt.k_binary, lc);
        write_artifact_with(opt, "topics_binary_lda.txt",
                            [&](std::ostream& o) { model.save(o); });
        TopicReport report = top_terms(model, vocab, opt.n_top);
        report.dataset = "binary";
        reports.push_back(std::move(report));
    }
    {
        FeatureMatrix tfidf = vectorize(binary_corpus, vocab, Scheme::tfidf_1gram);
        NmfConfig nc;
        nc.seed = derive_seed(opt.seed, "nmf:binary");
        TopicModel model = fit_nmf(tfidf, opt.k_binary, nc);
        write_artifact_with(opt, "topics_binary_nmf.txt",
                            [&](std::ostream& o) { model.save(o); });
        TopicReport report = top_terms(model, vocab, opt.n_top);
        report.dataset = "binary";
        reports.push_back(std::move(report));
    }
    for (TopicKind kind : {TopicKind::lda, TopicKind::nmf}) {
        PerCategoryConfig pc;
        pc.kind = kind;
        pc.k = opt.k_category;
        pc.n_top = opt.n_top;
        pc.min_df = opt.min_df;
        pc.lda.sweeps = opt.lda_sweeps;
        pc.lda.seed = derive_seed(opt.seed, "lda:percat");
        pc.nmf.seed = derive_seed(opt.seed, "nmf:percat");
        Corpus named = corpus;
        named.source = "multiclass";
        auto per_cat = run_per_category(named, multi, pc);
        for (auto& report : per_cat) reports.push_back(std::move(report));
    }
    write_artifact(opt, "topic_tables.txt", emit_topic_table(reports, TableFormat::text));
    write_artifact(opt, "topic_tables.csv", emit_topic_table(reports, TableFormat::csv));
    std::cout << "topics: " << reports.size() << " topic reports -> topic_tables.txt\n";
    return 0;
}

int cmd_report(const Options& opt) {
    auto in = open_artifact(opt, "eval.csv", "evaluate");
    EvalReport report = parse_accuracy_csv(in);
    report.master_seed = opt.seed;
    report.split_ratio = opt.ratio;
    std::string text = emit_accuracy_table(report, TableFormat::text, opt.published_layout);
    write_artifact(opt, "report.txt", text);
    std::cout << text;
    std::cout << "report: eval.csv rendered -> report.txt\n";
    return 0;
}

int cmd_all(const Options& opt) {
    int rc = cmd_ingest(opt);
    if (rc == 0) rc = cmd_label(opt);
    if (rc == 0) rc = cmd_featurize(opt);
    if (rc == 0) rc = cmd_evaluate(opt);
    if (rc == 0) rc = cmd_topics(opt);
    if (rc == 0) rc = cmd_report(opt);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"cti-miner: hacker-forum post classification and topic modeling pipeline"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    // config file (flag or CTI_MINER_CONFIG) provides defaults; flags override
    std::string config_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (config_path.empty())
        if (const char* env = std::getenv("CTI_MINER_CONFIG")) config_path = env;
    try {
        if (!config_path.empty()) apply_config(opt, load_config_file(config_path));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    app.add_option("--config", opt.config_path, "config file (key = value with [sections])");
    app.add_option("--out", opt.out_dir, "output directory");
    app.add_option("--seed", opt.seed, "master seed; stage seeds are derived from it");
    app.add_option("--workers", opt.workers, "concurrency cap (1 = fully deterministic)");
    app.add_option("--stopwords", opt.stopwords_path, "stopword file (default: built-in list)");
    app.add_option("--rules", opt.rules_path, "label rules file (default: built-in rules)");
    app.add_option("--lemmas", opt.lemmas_path, "lemma exception file (default: built-in)");
    app.add_option("--min-df", opt.min_df, "vocabulary document-frequency threshold");
    app.add_option("--ratio", opt.ratio, "train fraction for splits");

    auto* ingest = app.add_subcommand("ingest", "read a post dump, build the corpus");
    ingest->add_option("--dump", opt.dump_path, "post dump file")->required(false);
    auto* label = app.add_subcommand("label", "build binary and multiclass datasets");
    auto* featurize = app.add_subcommand("featurize", "produce the six feature matrices");
    auto* train = app.add_subcommand("train", "train one classifier");
    train->add_option("--algo", opt.algo, "nb|logreg|dtree|rforest|knn|nn-shallow|nn-deep");
    train->add_option("--scheme", opt.scheme, "feature scheme");
    train->add_option("--dataset", opt.dataset, "binary|multiclass");
    auto* evaluate = app.add_subcommand("evaluate", "run the full accuracy grid");
    evaluate->add_flag("--published-layout", opt.published_layout, "mirror the published table shape");
    auto* topics = app.add_subcommand("topics", "fit LDA and NMF topic models");
    auto* report = app.add_subcommand("report", "render tables from saved artifacts");
    report->add_flag("--published-layout", opt.published_layout, "mirror the published table shape");
    auto* all = app.add_subcommand("all", "run the whole pipeline");
    all->add_option("--dump", opt.dump_path, "post dump file");

    for (auto* sub : {ingest, label, featurize, train, evaluate, topics, report, all})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(ingest)) return cmd_ingest(opt);
        if (app.got_subcommand(label)) return cmd_label(opt);
        if (app.got_subcommand(featurize)) return cmd_featurize(opt);
        if (app.got_subcommand(train)) return cmd_train(opt);
        if (app.got_subcommand(evaluate)) return cmd_evaluate(opt);
        if (app.got_subcommand(topics)) return cmd_topics(opt);
        if (app.got_subcommand(report)) return cmd_report(opt);
        if (app.got_subcommand(all)) return cmd_all(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
