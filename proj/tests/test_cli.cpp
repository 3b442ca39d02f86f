#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "schubert/cli.hpp"
#include "schubert/report.hpp"

using namespace schubert;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

const fs::path& cache_dir()
{
    static const fs::path dir = [] {
        auto p = fs::temp_directory_path() / ("csm-cli-test-" + std::to_string(::getpid()));
        fs::remove_all(p);
        return p;
    }();
    return dir;
}

Run cli(std::vector<std::string> args)
{
    args.push_back("--cache-dir");
    args.push_back(cache_dir().string());
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST_CASE("verify on SL2")
{
    auto r = cli({"verify", "--type", "A", "--rank", "1", "--suite", "all"});
    CHECK(r.code == 0);
    CHECK(r.err.find("conjB: 4/4 pairs pass") != std::string::npos);
    auto j = json::parse(r.out);
    CHECK(j["summary"]["exit_code"] == 0);
    CHECK(j["suites"].size() == 5);
}

TEST_CASE("verify conjB on A2")
{
    auto r = cli({"verify", "--type", "A", "--rank", "2", "--suite", "conjB"});
    CHECK(r.code == 0);
    CHECK(r.err.find("conjB: 36/36 pairs pass") != std::string::npos);
}

TEST_CASE("suite lists, output files and CSV")
{
    const auto path = cache_dir().parent_path() / ("csm-cli-report-" + std::to_string(::getpid()) + ".csv");
    auto r = cli({"verify", "--type", "b", "--rank", "2", "--suite", "conjB,conjC", "--format", "csv", "--output",
                  path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "group,suite,suite_status,check,hard,instances,failures");
    fs::remove(path);
}

TEST_CASE("usage errors exit with 3")
{
    CHECK(cli({"verify", "--type", "X", "--rank", "2"}).code == 3);
    CHECK(cli({"verify", "--type", "A"}).code == 3);
    CHECK(cli({"verify", "--type", "A", "--rank", "0"}).code == 3);
    CHECK(cli({"verify", "--type", "A", "--rank", "2", "--suite", "conjZ"}).code == 3);
    CHECK(cli({"verify", "--type", "A", "--rank", "2", "--format", "xml"}).code == 3);
    CHECK(cli({"verify", "--type", "G", "--rank", "3"}).code == 3);
    CHECK(cli({"verify", "--type", "E", "--rank", "8"}).code == 3); // over the enumeration capacity
    CHECK(cli({"show", "csm", "--type", "A", "--rank", "2", "--u", "s3"}).code == 3);
    CHECK(cli({"frobnicate"}).code == 3);
    CHECK(cli({}).code == 3);
}

TEST_CASE("show prints classes in both bases")
{
    auto csm = cli({"show", "csm", "--type", "A", "--rank", "2", "--u", "s1"});
    CHECK(csm.code == 0);
    CHECK(first_line(csm.out) == "ε^{s1 s2} + ε^{s1 s2 s1}");
    auto box = cli({"show", "box", "--type", "A", "--rank", "1", "--u", "e", "--v", "e"});
    CHECK(box.code == 0);
    CHECK(first_line(box.out) == "ε^e − ε^s");
    CHECK(box.out.find("= −[X_e] + [X_s]") != std::string::npos);
    auto rich = cli({"show", "richardson", "--type", "A", "--rank", "1", "--u", "s", "--v", "e"});
    CHECK(rich.code == 0);
    CHECK(first_line(rich.out) == "ε^e"); // C^* inside P^1
    auto opp = cli({"show", "csm", "--type", "A", "--rank", "1", "--u", "e", "--opposite"});
    CHECK(first_line(opp.out) == "ε^e + ε^s");
}

TEST_CASE("table twice: the second run is a cache hit with the same checksums")
{
    auto a = cli({"table", "--type", "B", "--rank", "2", "--box"});
    auto b = cli({"table", "--type", "B", "--rank", "2", "--box"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    auto lines = [](const std::string& s) {
        std::vector<std::pair<std::string, std::string>> out; // (stem, checksum)
        std::istringstream in(s);
        for (std::string l; std::getline(in, l);)
            if (auto p = l.find(" crc32 "); p != std::string::npos)
                out.emplace_back(l.substr(0, l.find(':')), l.substr(p + 7));
        return out;
    };
    CHECK(lines(a.out).size() == 3);
    CHECK(lines(a.out) == lines(b.out));
    CHECK(b.out.find("B2-structure: hit") != std::string::npos);
    CHECK(b.out.find("B2-csm: hit") != std::string::npos);
    CHECK(b.out.find("B2-box: hit") != std::string::npos);
}

TEST_CASE("identical invocations give identical reports, serial or parallel")
{
    auto a = cli({"verify", "--type", "A", "--rank", "3", "--jobs", "1"});
    auto b = cli({"verify", "--type", "A", "--rank", "3", "--jobs", "1"});
    auto c = cli({"verify", "--type", "A", "--rank", "3", "--jobs", "4"});
    REQUIRE(a.code == 0);
    CHECK(without_timings(json::parse(a.out)) == without_timings(json::parse(b.out)));
    CHECK(without_timings(json::parse(a.out)) == without_timings(json::parse(c.out)));
}

TEST_CASE("an internal failure exits with 2 and names reduced words")
{
    const auto out = cache_dir().parent_path() / ("csm-cli-faulty-" + std::to_string(::getpid()) + ".json");
    const std::string cmd = std::string(CSMVERIFY_FAULTY) + " verify --type A --rank 2 --no-cache --output " +
                            out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 2);
    std::ifstream in(out);
    auto j = json::parse(in);
    fs::remove(out);
    CHECK(j["summary"]["exit_code"] == 2);
    const auto& th = j["suites"][0];
    CHECK(th["status"] == "FAIL");
    REQUIRE(th["hard_failures"].size() == 1);
    CHECK(th["hard_failures"][0]["check"] == "parity");
    CHECK(th["hard_failures"][0]["u"] == "s1 s2 s1");
    CHECK(th["hard_failures"][0]["v"] == "e");
    CHECK(th["hard_failures"][0]["group"] == "A2");
}

TEST_CASE("the real tool passes where the faulty one fails")
{
    const std::string cmd = std::string(CSMVERIFY) + " verify --type A --rank 2 --no-cache >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    fs::remove_all(cache_dir());
}
