#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "isolab/cli.hpp"
#include "isolab/constructions.hpp"

using namespace isolab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "isolation-lab");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("isolab_cli_" + name);
}

}  // namespace

TEST_CASE("solve prints iota and a witness") {
    // C6 labeled around the cycle
    const Run r = run({"solve", "-F", "p3", "EhEG"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "iota=2 witness={0,1}\n");
    CHECK(run({"solve", "-F", "p3", "--oracle", "EhEG"}).out == r.out);
    CHECK(run({"solve", "-F", "p3", "-"}, "EhEG\nD?{\n").out == "iota=2 witness={0,1}\niota=1 witness={0}\n");
    CHECK(run({"solve", "-F", "cycles", "C~"}).out == "iota=1 witness={0}\n");
    CHECK(run({"solve", "-F", "k3", "-F", "k1_3", "D?{"}).out == "iota=1 witness={0}\n");
}

TEST_CASE("generators stream graph6") {
    const Run pure = run({"gen", "special", "-F", "k1_3", "-m", "9", "--pure"});
    CHECK(pure.code == 0);
    CHECK(count_lines(pure.out) == static_cast<int>(enumerate_pure_special(pattern_from_name("k1_3"), 9).size()));
    const Run all = run({"gen", "special", "-F", "k1_3", "-m", "5"});
    CHECK(count_lines(all.out) == static_cast<int>(enumerate_special(pattern_from_name("k1_3"), 5).size()));
    CHECK(count_lines(run({"gen", "fplus", "-F", "k1_3"}).out) == 1);
    CHECK(run({"gen", "fplus", "-F", "k3"}).out.empty());
    CHECK(run({"gen", "special", "-F", "k1_3", "-m", "3", "--pure"}).code == cli::kExitUsage);
}

TEST_CASE("layout sidecar") {
    const auto path = scratch("layout.json");
    const Run r = run({"gen", "special", "-F", "k1_3", "-m", "4", "--pure", "--layout", path.string()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["q"] == 1);
    CHECK(j[0]["connections"].size() == 1);
    CHECK(j[0]["constituents"][0].size() == 4);
    CHECK(j[0]["roles"][0] == "connection");
    std::filesystem::remove(path);
}

TEST_CASE("recognize and enum") {
    const Run r = run({"recognize", "-F", "k1_3"}, "D?{\nEhEG\nC~\n");
    CHECK(r.out == "D?{ pure-special\nEhEG non-extremal\nC~ non-extremal\n");
    CHECK(run({"recognize", "-F", "k1_3", "-"}, "D?{\n").out == "D?{ pure-special\n");
    CHECK(run({"recognize", "-F", "k1_3"}, "C?\n").code == cli::kExitUsage);
    CHECK(count_lines(run({"enum", "--n-max", "5", "--connected"}).out) == 1 + 1 + 2 + 6 + 21);
    CHECK(count_lines(run({"enum", "--n-min", "4", "--n-max", "4"}).out) == 11);
    CHECK(run({"enum", "--n-max", "11"}).code == cli::kExitUsage);
}

TEST_CASE("verify exits zero and writes reports") {
    const auto jsonl = scratch("bound.jsonl");
    const auto summary = scratch("bound.json");
    const Run r = run({"verify", "bound", "-F", "k1_3", "--n-max", "6", "--jsonl", jsonl.string(), "--summary",
                       summary.string(), "--workers", "2"});
    CHECK(r.code == cli::kExitOk);
    const auto s = nlohmann::json::parse(slurp(summary));
    CHECK(s["ok"] == true);
    CHECK(s["checked"] == 1 + 1 + 2 + 6 + 21 + 112);
    CHECK(r.out == slurp(summary));
    CHECK(count_lines(slurp(jsonl)) == 143);
    std::filesystem::remove(jsonl);
    std::filesystem::remove(summary);

    CHECK(run({"verify", "extremal", "-F", "k1_3", "--n-max", "6"}).code == cli::kExitOk);
    CHECK(run({"verify", "two-copies", "-F", "k1_3", "--n-max", "8"}).code == cli::kExitOk);
    CHECK(run({"verify", "special", "-F", "paw", "--q-max", "2"}).code == cli::kExitOk);
    CHECK(run({"verify", "gluing", "-F", "k1_3", "--trials", "10"}).code == cli::kExitOk);
    CHECK(run({"verify", "extremal", "-F", "k1_3", "--input", "-"}, "D?{\nC~\n").code == cli::kExitOk);
}

TEST_CASE("seed comes from the environment when set") {
    const std::vector<std::string> args{"verify", "lemmas", "--trials", "3", "--seed", "1"};
    CHECK(run(args).out.find("seed=1 ") != std::string::npos);
    ::setenv("ISOLATION_LAB_SEED", "77", 1);
    const Run r = run(args);
    ::unsetenv("ISOLATION_LAB_SEED");
    CHECK(r.code == 0);
    CHECK(r.out.find("seed=77 ") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"solve", "C~"}).code == cli::kExitUsage);
    CHECK(run({"solve", "-F", "nonsense!", "C~"}).code == cli::kExitUsage);
    CHECK(run({"solve", "-F", "k2", "C"}).code == cli::kExitUsage);
    CHECK(run({"gen", "special", "-F", "k1_3"}).code == cli::kExitUsage);
    CHECK(run({"recognize", "-F", "k1_3", "-F", "paw"}, "C~\n").code == cli::kExitUsage);
    CHECK(run({"verify", "bound", "-F", "p4"}).code == cli::kExitUsage);
    CHECK(run({"bogus"}).code == cli::kExitUsage);
    const Run r = run({"solve", "-F", "k2", "C"});
    CHECK_FALSE(r.err.empty());
}
