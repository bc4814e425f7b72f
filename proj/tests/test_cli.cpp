#include "cli.hpp"

#include "grcat/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using grcat::io::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = grcat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("grcat_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("h3") {
    auto r = run({"h3", "--orders", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");
    CHECK(run({"h3", "--orders", "6,4", "--format", "plain"}).out == "48\n");
    r = run({"h3", "--orders", "2,1"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"h3"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"h3", "--orders", "2", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cocycle subcommands") {
    auto r = run({"cocycle", "list", "--orders", "2,2"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).size() == 8);
    r = run({"cocycle", "list", "--orders", "2", "--format", "plain"});
    CHECK(r.out == "0;;\n1;;\n");
    r = run({"cocycle", "eval", "--orders", "2,2", "--params", "0,0;1;", "--x", "0,1", "--y", "1,0", "--z", "1,0"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == "1/2");
    r = run({"cocycle", "table", "--orders", "2", "--params", "1;;"});
    CHECK(json::parse(r.out) == json::parse(R"({"orders":[2],"entries":[{"x":[1],"y":[1],"z":[1],"w":"1/2"}]})"));
    r = run({"cocycle", "table", "--params", R"({"orders":[2],"a":[1]})"});
    CHECK(r.code == 0);
    CHECK(run({"cocycle", "table", "--orders", "128", "--params", ";;"}).code == 2);
    CHECK(run({"cocycle", "table", "--orders", "128", "--params", ";;", "--max-cells", "3000000", "--format", "plain"})
              .code == 0);
    CHECK(run({"cocycle", "table", "--orders", "2", "--params", "2;;"}).code == 2);
}

TEST_CASE("verify subcommands") {
    auto r = run({"verify", "pentagon", "--orders", "2,2", "--params", "1,0;1;"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["verdict"] == "holds");
    CHECK(run({"verify", "pentagon", "--orders", "2,2", "--params", "1,0;1;", "--format", "plain"}).out == "holds\n");
    CHECK(run({"verify", "normalized", "--orders", "4,2", "--params", "3,1;1;"}).code == 0);
    r = run({"verify", "symmetry", "--orders", "2,2,2", "--params", ";;1"});
    CHECK(r.code == 1);
    const auto j = json::parse(r.out);
    CHECK(j["verdict"] == "fails");
    CHECK(j["witness"].size() == 3);
    r = run({"verify", "chain-map", "--orders", "4,3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["squares"][2]["generators"] == 1331);

    const auto bad = temp_file("bad_pentagon.json", R"({"orders":[2],"entries":[{"x":[1],"y":[1],"z":[1],"w":"1/4"}]})");
    r = run({"verify", "pentagon", "--table", bad});
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["witness"] == json::parse("[[1],[1],[1],[1]]"));
    CHECK(run({"verify", "pentagon", "--table", bad, "--params", "1;;", "--orders", "2"}).code == 2);
    CHECK(run({"verify", "pentagon", "--table", "/nonexistent/x.json"}).code == 2);
}

TEST_CASE("verification output is deterministic") {
    const std::vector<std::string> args{"verify", "symmetry", "--orders", "2,2,2", "--params", "1,1,0;1,0,1;1"};
    const auto first = run(args).out;
    for (int k = 0; k < 3; ++k)
        CHECK(run(args).out == first);
}

TEST_CASE("classify round trip") {
    auto list = json::parse(run({"cocycle", "list", "--orders", "2,2"}).out);
    for (const auto& params : list) {
        const auto table = run({"cocycle", "table", "--params", params.dump()});
        REQUIRE(table.code == 0);
        const auto path = temp_file("roundtrip.json", table.out);
        const auto r = run({"classify", "--table", path});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out) == params);
    }
    const auto path = temp_file("unique.json", run({"cocycle", "table", "--orders", "2,2", "--params", "1,1;1;"}).out);
    auto r = run({"classify", "--table", path, "--check-unique"});
    CHECK(json::parse(r.out)["unique"] == true);
    CHECK(run({"classify", "--table", path, "--orders", "4"}).code == 2);
    CHECK(run({"classify", "--table", path, "--max-order", "3"}).code == 2);

    const auto bad = temp_file("bad.json", R"({"orders":[2],"entries":[{"x":[1],"y":[1],"z":[1],"w":"1/3"}]})");
    r = run({"classify", "--orders", "2", "--table", bad});
    CHECK(r.code == 1);
    CHECK(json::parse(r.out).contains("error"));
    CHECK_FALSE(r.err.empty());
    CHECK(run({"classify", "--table", temp_file("garbage.json", "{not json")}).code == 2);
    CHECK(run({"classify", "--orders", "2"}).code == 2);
}

TEST_CASE("braidings and oracles") {
    auto r = run({"braidings", "--orders", "2", "--params", "1;;"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"([[["1/4"]],[["3/4"]]])"));
    CHECK(run({"braidings", "--orders", "2,2", "--params", ";;", "--count"}).out == "16\n");
    CHECK(run({"braidings", "--orders", "3", "--params", "1;;", "--count"}).out == "0\n");
    r = run({"oracle", "braidings", "--orders", "2", "--params", "1;;"});
    CHECK(json::parse(r.out) == json::parse(R"([[["1/4"]],[["3/4"]]])"));
    r = run({"oracle", "full-space", "--orders", "2", "--params", "0;;", "--mu", "8"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).size() == 2);
    CHECK(run({"oracle", "full-space", "--orders", "2", "--params", "1;;", "--count"}).out == "2\n");
    CHECK(run({"oracle", "full-space", "--orders", "4", "--params", ";;", "--max-cells", "10"}).code == 2);
    CHECK(run({"braidings", "--orders", "2,2", "--params", ";;", "--format", "plain"}).out.find("0/1 0/1; 0/1 0/1") !=
          std::string::npos);
}
