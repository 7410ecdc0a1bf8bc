#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

#ifndef CTI_MINER_PATH
#error "CTI_MINER_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string output;  // stdout + stderr interleaved
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CTI_MINER_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("cti-cli-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const char* kDump = "data/fixtures/posts_300.txt";

}  // namespace

TEST_CASE("missing inputs name the producing subcommand and exit nonzero") {
    fs::path dir = fresh_dir("missing");
    RunResult r = run("label --out " + dir.string());
    CHECK(r.status != 0);
    CHECK(r.output.find("ingest") != std::string::npos);

    r = run("evaluate --out " + dir.string());
    CHECK(r.status != 0);
    CHECK(r.output.find("ingest") != std::string::npos);

    r = run("train --out " + dir.string());
    CHECK(r.status != 0);
    CHECK(r.output.find("featurize") != std::string::npos);

    r = run("report --out " + dir.string());
    CHECK(r.status != 0);
    CHECK(r.output.find("evaluate") != std::string::npos);
}

TEST_CASE("stage chain produces the documented artifacts") {
    fs::path dir = fresh_dir("chain");
    CHECK(run("ingest --dump " + std::string(kDump) + " --out " + dir.string()).status == 0);
    CHECK(fs::exists(dir / "corpus.txt"));
    CHECK(run("label --out " + dir.string()).status == 0);
    CHECK(fs::exists(dir / "labels_binary.txt"));
    CHECK(fs::exists(dir / "labels_multiclass.txt"));
    CHECK(run("featurize --out " + dir.string()).status == 0);
    for (const char* scheme : {"bow-binary", "bow-tf", "tfidf-1gram", "tfidf-2gram",
                               "w2v-avg", "d2v"})
        CHECK(fs::exists(dir / ("matrix_" + std::string(scheme) + ".txt")));
    RunResult t = run("train --algo logreg --scheme bow-binary --dataset binary --out " +
                      dir.string());
    CHECK(t.status == 0);
    CHECK(fs::exists(dir / "model_binary_logreg_bow-binary.txt"));
}

TEST_CASE("version-mismatched artifacts are a fatal error") {
    fs::path dir = fresh_dir("vers");
    std::ofstream(dir / "corpus.txt") << "cti-corpus v99\n";
    RunResult r = run("label --out " + dir.string());
    CHECK(r.status != 0);
}

TEST_CASE("unknown flags and missing subcommand fail") {
    CHECK(run("").status != 0);
    CHECK(run("ingest --no-such-flag 1").status != 0);
    CHECK(run("train --algo svm --out /tmp").status != 0);
}

TEST_CASE("config file sets defaults and flags override it") {
    fs::path dir = fresh_dir("config");
    fs::path cfg = dir / "miner.conf";
    {
        std::ofstream out(cfg);
        out << "# pipeline config\n"
            << "[paths]\n"
            << "dump = " << kDump << "\n"
            << "out = " << (dir / "from-config").string() << "\n"
            << "[pipeline]\n"
            << "seed = 7\n";
    }
    CHECK(run("ingest --config " + cfg.string()).status == 0);
    CHECK(fs::exists(dir / "from-config" / "corpus.txt"));

    // the flag wins over the config value
    CHECK(run("ingest --config " + cfg.string() + " --out " + (dir / "flag").string()).status ==
          0);
    CHECK(fs::exists(dir / "flag" / "corpus.txt"));
}

TEST_CASE("CTI_MINER_CONFIG supplies the default config path") {
    fs::path dir = fresh_dir("envcfg");
    fs::path cfg = dir / "env.conf";
    {
        std::ofstream out(cfg);
        out << "[paths]\ndump = " << kDump << "\nout = " << (dir / "envout").string() << "\n";
    }
    std::string cmd = "CTI_MINER_CONFIG=" + cfg.string() + " " + CTI_MINER_PATH + " ingest 2>&1";
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    CHECK(fs::exists(dir / "envout" / "corpus.txt"));
}

TEST_CASE("reruns overwrite outputs with byte-identical content") {
    fs::path dir = fresh_dir("rerun");
    std::string base = "--dump " + std::string(kDump) + " --out " + dir.string();
    CHECK(run("ingest " + base).status == 0);
    CHECK(run("label --out " + dir.string()).status == 0);
    std::string labels1 = read_file(dir / "labels_binary.txt");
    std::string corpus1 = read_file(dir / "corpus.txt");
    CHECK(run("ingest " + base).status == 0);
    CHECK(run("label --out " + dir.string()).status == 0);
    CHECK(read_file(dir / "corpus.txt") == corpus1);
    CHECK(read_file(dir / "labels_binary.txt") == labels1);
}
