#include <doctest.h>

#include <fstream>

#include "sqzero/error.hpp"
#include "sqzero/serialize.hpp"

using namespace sqz;

namespace {
json load(const std::string& name) {
    std::ifstream in(std::string(SQZERO_TEST_DATA) + "/" + name);
    return json::parse(in);
}
} // namespace

TEST_CASE("partial permutation JSON round trip") {
    const auto p = to_matrix(Involution::parse("1-4,2-3"));
    const json j = to_json(p);
    CHECK(j.dump() == R"({"n":4,"ones":[[1,4],[2,3]]})");
    CHECK(partial_permutation_from_json(j) == p);
    CHECK_THROWS_AS(partial_permutation_from_json(json::parse(R"({"n":4,"ones":[[2,1]]})")), InputError);
    CHECK_THROWS_AS(partial_permutation_from_json(json::parse(R"({"ones":[]})")), InputError);
}

TEST_CASE("matrix files") {
    const MatrixFile mf = matrix_file_from_json(load("koszul_f101.json"));
    CHECK(mf.matrix.n() == 4);
    CHECK(mf.matrix.n_vars() == 2);
    CHECK(mf.matrix.field() == FieldSpec::prime(101));
    CHECK(mf.matrix(3, 4).to_string() == "100*x1");
    CHECK(mf.degrees == std::vector<int>{0, 0, 0, 0});

    const json back = to_json(mf.matrix, mf.degrees);
    const MatrixFile again = matrix_file_from_json(back);
    CHECK(again.matrix == mf.matrix);
    CHECK(again.degrees == mf.degrees);

    CHECK_THROWS_AS(matrix_file_from_json(load("bad_field.json")), InputError);
    CHECK_THROWS_AS(matrix_file_from_json(json::parse(R"({"n":2,"r":1,"field":{"kind":"R"},"entries":[]})")),
                    InputError);
    CHECK_THROWS_AS(matrix_file_from_json(json::parse(
                        R"({"n":2,"r":1,"field":{"kind":"Q"},"entries":[{"row":1,"col":2,"poly":"x2"}]})")),
                    InputError);
    CHECK_THROWS_AS(
        matrix_file_from_json(json::parse(R"({"n":2,"r":1,"field":{"kind":"Q"},"entries":[)"
                                          R"({"row":1,"col":2,"poly":"x1"},{"row":1,"col":2,"poly":"x1"}]})")),
        InputError);
}

TEST_CASE("constant matrices") {
    const MatrixFile mf = matrix_file_from_json(load("orbit_f5.json"));
    const ModMatrix x = constant_mod_matrix(mf.matrix);
    CHECK(x(0, 1) == 1);
    CHECK(x(0, 2) == 1);
    CHECK(x.sum() == 2);
    CHECK_THROWS_AS(constant_mod_matrix(matrix_file_from_json(load("koszul_f101.json")).matrix), InputError);
}

TEST_CASE("report JSON layout") {
    const MatrixFile mf = matrix_file_from_json(load("koszul_f101.json"));
    const ConjectureInstance inst(mf.matrix, mf.degrees);
    const json j = to_json(verify_instance(inst, CheckMode::exhaustive()), inst);
    for (const char* key : {"conditions", "C", "R", "d", "type", "l", "inequality", "classification"})
        CHECK(j.contains(key));
    CHECK(j["conditions"]["c4"]["verdict"] == "EXHAUSTIVE_PASS");
    CHECK(j["conditions"]["c4"]["points"] == 10200);
    CHECK(j["inequality"]["lhs"] == 4);
    CHECK(j["inequality"]["rhs"] == 4);
    CHECK(j["inequality"]["holds"] == true);
    CHECK(j["type"] == json::array({1, 2, 1}));
    CHECK(j["classification"] == "consistent");
    CHECK_FALSE(j.contains("replay"));
    CHECK(dump(j).back() == '\n');
}

TEST_CASE("replay bundle for a counterexample candidate") {
    const MatrixFile mf = matrix_file_from_json(load("koszul_f101.json"));
    const ConjectureInstance inst(mf.matrix, mf.degrees);
    Verification v = verify_instance(inst, CheckMode::sample(5));
    v.report.inequality = evaluate_inequality(4, 5, 1, 1);
    v.report.classification = Classification::CounterexampleCandidate;
    v.has_replay = true;
    const json j = to_json(v, inst);
    CHECK(j["classification"] == "counterexample-candidate");
    REQUIRE(j.contains("replay"));
    CHECK(j["replay"]["inequality"]["rhs"] == 32);
    CHECK(matrix_file_from_json(j["replay"]["instance"]).matrix == inst.matrix());
}

TEST_CASE("huge inequality sides are printed as strings") {
    const json j = to_json(evaluate_inequality(8, 100, 1, 1));
    CHECK(j["rhs"].is_string());
    CHECK(j["rhs"].get<std::string>() == mpz_class(mpz_class(1) << 100).get_str());
}

TEST_CASE("scalars") {
    CHECK(to_json(Scalar(3)) == 3);
    CHECK(to_json(Scalar(-1, 2)) == "-1/2");
}

TEST_CASE("golden Hasse comparison") {
    const GoldenHasse golden = golden_from_json(load("figure1_hasse.json"));
    CHECK(golden.levels.size() == 7);
    const PosetDag dag = build_order(8, {MoveKind::III});
    const GoldenComparison c = compare_with_golden(dag, golden);
    CHECK(c.levels_match);
    CHECK(c.maximal_match);
    CHECK(c.ancestors_unique);
    CHECK(c.hard_pass());
    CHECK(c.golden_not_related.empty());

    // moving one element to the wrong level is caught
    GoldenHasse broken = golden;
    broken.levels[1].push_back(broken.levels[2].back());
    broken.levels[2].pop_back();
    const GoldenComparison b = compare_with_golden(dag, broken);
    CHECK_FALSE(b.levels_match);
    CHECK(b.level_diffs.size() == 2);
    CHECK_FALSE(b.hard_pass());

    // an edge between unrelated elements shows up in the diff only
    GoldenHasse extra = golden;
    extra.edges.emplace_back(Involution::parse("1-2,3-4,5-6,7-8"), Involution::parse("1-5,2-6,3-7,4-8"));
    const GoldenComparison e = compare_with_golden(dag, extra);
    CHECK(e.hard_pass());
    CHECK(e.golden_not_related.size() == 1);
}
