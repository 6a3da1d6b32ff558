#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aomoto/cli.hpp"

using aomoto::run_cli;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("h1 subcommand") {
    CliRun r = cli({"h1", "two-conics-tangent", "-p", "2", "--omega", "1,1"});
    CHECK(r.status == 0);
    CHECK(r.out == "1\n");

    r = cli({"h1", "two-conics-tangent", "-p", "3", "--omega", "1,1"});
    CHECK(r.out == "0\n");

    // omega reduced mod p: -1 = 4 mod 5
    r = cli({"h1", "two-conics-tangent", "-p", "5", "--omega", "-1,1"});
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");

    r = cli({"h1", "tcquartic2", "-p", "3", "--omega", "2,1,2",
             "--dump-matrix"});
    CHECK(r.status == 0);
    CHECK(r.out.find("# columns: s_C1 s_C4 s_C3") != std::string::npos);
    CHECK(r.out.back() == '\n');
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli({"h1", "two-conics-tangent", "-p", "4", "--omega", "1,1"}).status ==
          2);
    CHECK(cli({"h1", "two-conics-tangent", "-p", "2", "--omega", "1"}).status ==
          2);
    CHECK(cli({"h1", "two-conics-tangent", "-p", "2", "--omega", "a,b"}).status ==
          2);
    CHECK(cli({"frobnicate"}).status == 2);
    CHECK(cli({}).status == 2);
}

TEST_CASE("validate subcommand") {
    CliRun ok = cli({"validate", "hesse-A"});
    CHECK(ok.status == 0);
    CHECK(ok.out == "valid\n");

    // corrupt curve via a temp file
    std::string path = "/tmp/aomoto_corrupt_curve.json";
    {
        std::ofstream f(path);
        f << R"({"components": [{"id": "C1", "degree": 2},
                                 {"id": "C2", "degree": 2}],
                 "points": [{"id": "P",
                             "branches": [{"id": "a", "component": "C1"},
                                          {"id": "b", "component": "C2"}],
                             "mu": [["a", "b", 3]]}]})";
    }
    CliRun bad = cli({"validate", path});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("Bezout") != std::string::npos);

    CHECK(cli({"validate", "no-such-fixture"}).status == 1);
}

TEST_CASE("fixtures subcommands") {
    CliRun names = cli({"fixtures", "list"});
    CHECK(names.status == 0);
    CHECK(names.out.find("icosidodecahedron\n") != std::string::npos);
    CHECK(names.out.find("two-conics-tangent\n") != std::string::npos);

    CliRun dump = cli({"fixtures", "dump", "two-conics-tangent"});
    CHECK(dump.status == 0);
    CHECK(nlohmann::json::parse(dump.out).contains("components"));

    CliRun pencil = cli({"fixtures", "dump", "hesse-A-pencil"});
    CHECK(pencil.status == 0);
    CHECK(nlohmann::json::parse(pencil.out).contains("fibers"));

    CHECK(cli({"fixtures", "dump", "nope"}).status == 1);
}

TEST_CASE("scan subcommand") {
    CliRun r = cli({"scan", "two-conics-tangent", "-p", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("h1=1: 3 classes") != std::string::npos);
}

TEST_CASE("graph subcommand") {
    CliRun r = cli({"graph", "triangle", "-p", "3"});
    CHECK(r.status == 0);
    CHECK(r.out.find("complete: yes") != std::string::npos);

    CliRun r2 = cli({"graph", "two-conics-tangent", "-p", "2"});
    CHECK(r2.out.find("complete: no") != std::string::npos);
    CHECK(r2.out.find("connected: no") != std::string::npos);
}

TEST_CASE("reduce subcommand") {
    CliRun ok = cli({"reduce", "two-conics-tangent", "-p", "3", "--omega",
                     "1,1"});
    CHECK(ok.status == 0);
    auto doc = nlohmann::json::parse(ok.out);
    CHECK(doc["reduced"] == true);
    CHECK(doc["certificate"]["trace"].size() == 1);

    CliRun stuck = cli({"reduce", "hesse-B", "-p", "2", "--omega",
                        "1,1,1,1,1,1,1,1,1", "--strategy", "greedy"});
    CHECK(stuck.status == 0);
    auto doc2 = nlohmann::json::parse(stuck.out);
    CHECK(doc2["reduced"] == false);
    CHECK(doc2["classes_remaining"] == 3);
}

TEST_CASE("pencil-bounds subcommand") {
    CliRun r = cli({"pencil-bounds", "tcquartic2", "tcquartic2-pencil"});
    CHECK(r.status == 0);
    CHECK(r.out == "N=2: multiplicity >= 0\n"
                   "N=3: multiplicity >= 1\n"
                   "N=6: multiplicity >= 1\n");

    CliRun over = cli({"pencil-bounds", "hesse-conics",
                       "hesse-conics-pencil", "--twists",
                       "1,1,1,1,1,1,1,1,1,1,1,1"});
    CHECK(over.status == 0);
    CHECK(over.out.find("N=8: multiplicity >= 3") != std::string::npos);
}

TEST_CASE("report subcommand output is stable and parses back") {
    CliRun text = cli({"report", "hesse-A", "--pencil", "hesse-A-pencil"});
    CHECK(text.status == 0);
    CHECK(text.out.find("3 | 0 | 0 | yes") != std::string::npos);
    CHECK(text.out.find("7 | 2 | 2 | yes") != std::string::npos);
    CliRun again = cli({"report", "hesse-A", "--pencil", "hesse-A-pencil"});
    CHECK(again.out == text.out);

    CliRun js = cli({"report", "hesse-A", "--pencil", "hesse-A-pencil",
                     "--format", "structured"});
    CHECK(js.status == 0);
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["bounds"].size() == 3);
}
