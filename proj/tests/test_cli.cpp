#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sqzero/cli.hpp"

using nlohmann::json;

namespace {
struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = sqz::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SQZERO_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("rp enum") {
    const Result r = run({"rp", "enum", "--n", "8", "--format", "json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["count"] == 105);
    CHECK(j["involutions"].size() == 105);
    CHECK(r.out.back() == '\n');
    CHECK(run({"rp", "enum", "--n", "4"}).out == "1-2,3-4\n1-3,2-4\n1-4,2-3\n");
    CHECK(run({"--format", "json", "rp", "enum", "--n", "2"}).out == run({"rp", "enum", "--n", "2", "--format", "json"}).out);
}

TEST_CASE("rp maximal with dual classes") {
    const Result r = run({"rp", "maximal", "--n", "8", "--dual-classes"});
    CHECK(r.code == 0);
    CHECK(r.out.find("14 maximal\n") == 0);
    CHECK(r.out.find("\n10 classes\n") != std::string::npos);
    const json j = json::parse(run({"rp", "maximal", "--n", "8", "--dual-classes", "--format", "json"}).out);
    CHECK(j["count"] == 14);
    CHECK(j["class_count"] == 10);
}

TEST_CASE("rp ancestor, type, dual, levels") {
    const Result a = run({"rp", "ancestor", "--n", "8", "--sigma", "1-3,2-4,5-7,6-8"});
    CHECK(a.code == 0);
    CHECK(a.out == "1-4,2-3,5-8,6-7\n");
    const json path = json::parse(run({"rp", "ancestor", "--n", "8", "--sigma", "1-3,2-4,5-7,6-8", "--format", "json"}).out)["path"];
    REQUIRE(path.size() == 3);
    CHECK(path[0]["level"] == 3);
    CHECK(path[2]["sigma"] == "1-4,2-3,5-8,6-7");

    CHECK(run({"rp", "type", "--sigma", "(12)(38)(47)(56)"}).out == "(1,4,3)\n");
    CHECK(run({"rp", "dual", "--n", "8", "--sigma", "1-6,2-3,4-5,7-8"}).out == "1-2,3-8,4-5,6-7\n");
    const json lv = json::parse(run({"rp", "levels", "--n", "8", "--format", "json"}).out);
    CHECK(lv["sizes"] == json::array({14, 28, 28, 20, 10, 4, 1}));
}

TEST_CASE("rp poset matches the hand-checked DOT file") {
    const Result r = run({"rp", "poset", "--n", "4", "--moves", "iii+v", "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(data("rp4_iii_v.dot")));
    CHECK(run({"rp", "poset", "--n", "4", "--moves", "iii+v"}).out == r.out);

    const auto path = std::filesystem::temp_directory_path() / "sqzero_rp8.json";
    const Result w = run({"rp", "poset", "--n", "8", "--format", "json", "--out", path.string()});
    CHECK(w.code == 0);
    CHECK(json::parse(slurp(path.string()))["nodes"].size() == 105);
    std::filesystem::remove(path);
}

TEST_CASE("verify-figure1") {
    const Result r = run({"rp", "verify-figure1", "--golden", data("figure1_hasse.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("VERIFIED") != std::string::npos);
    CHECK(run({"rp", "verify-figure1", "--golden", data("missing.json")}).code == 2);
}

TEST_CASE("mat verbs") {
    const Result ok = run({"mat", "check", "--file", data("koszul_f101.json"), "--mode", "exhaustive"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("c4 EXHAUSTIVE_PASS (10200 points)") != std::string::npos);

    const Result bad = run({"mat", "check", "--file", data("rank_drop_f5.json"), "--mode", "exhaustive", "--format", "json"});
    CHECK(bad.code == 1);
    const json j = json::parse(bad.out);
    CHECK(j["conditions"]["c4"]["verdict"] == "FAIL");
    CHECK(j["conditions"]["c4"]["point"] == json::array({0, 1}));

    CHECK(run({"mat", "check", "--file", data("koszul_q.json"), "--mode", "exhaustive"}).code == 2);
    CHECK(run({"mat", "check", "--file", data("koszul_q.json")}).code == 0);
    CHECK(run({"mat", "check", "--file", data("bad_field.json")}).code == 2);
    CHECK(run({"mat", "check", "--file", data("truncated.json")}).code == 2);

    CHECK(run({"mat", "orbit-rep", "--file", data("orbit_f5.json")}).out == "1-2\n");
    CHECK(run({"mat", "minor", "--file", data("koszul_q.json"), "--rows", "1,2", "--cols", "2,4"}).out == "x1*x2\n");
    CHECK(run({"mat", "minor", "--file", data("koszul_q.json"), "--rows", "1,2", "--cols", "2"}).code == 2);
}

TEST_CASE("flags compositions") {
    CHECK(run({"flags", "compositions", "--n", "8", "--l", "4"}).out == "(1,2,2,2,1)\n");
    const json j = json::parse(run({"flags", "compositions", "--n", "8", "--l", "3", "--format", "json"}).out);
    CHECK(j["compositions"].size() == 10);
}

TEST_CASE("input errors exit with 2 and one line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"rp"},
             {"rp", "enum"},
             {"rp", "enum", "--n", "7"},
             {"rp", "enum", "--n", "8", "--bogus"},
             {"rp", "enum", "--n", "8", "--format", "xml"},
             {"rp", "enum", "--n", "8", "--format", "dot"},
             {"rp", "poset", "--n", "8", "--moves", "iv"},
             {"rp", "type", "--sigma", "1-2,2-3"},
             {"rp", "enum", "--n", "8", "rp", "levels"},
         }) {
        const Result r = run(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
}

TEST_CASE("identical invocations give identical bytes") {
    const std::vector<std::string> a{"mat", "check", "--file", data("koszul_q.json"), "--format", "json", "--seed", "4"};
    CHECK(run(a).out == run(a).out);
    const std::vector<std::string> b{"rp", "poset", "--n", "8", "--format", "dot"};
    CHECK(run(b).out == run(b).out);
}
