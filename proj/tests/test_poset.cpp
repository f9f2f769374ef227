#include <doctest.h>

#include <json.hpp>
#include <set>

#include "sqzero/error.hpp"
#include "sqzero/poset.hpp"

using namespace sqz;

namespace {
Involution inv(const char* s) { return Involution::parse(s); }

// Order by brute force: closure of single moves, no bitsets.
std::set<std::pair<Involution, Involution>> closure(int n, const MoveSet& kinds) {
    std::set<std::pair<Involution, Involution>> rel;
    for (const auto& s : enumerate_rp(n)) {
        std::vector<Involution> stack{s};
        std::set<Involution> seen;
        while (!stack.empty()) {
            Involution cur = stack.back();
            stack.pop_back();
            for (const auto& m : applicable_moves(cur, kinds))
                if (seen.insert(m.result).second)
                    stack.push_back(m.result);
        }
        for (const auto& t : seen)
            rel.emplace(s, t);
    }
    return rel;
}
} // namespace

TEST_CASE("move set parsing") {
    CHECK(parse_move_set("iii") == MoveSet{MoveKind::III});
    CHECK(parse_move_set("III+v") == MoveSet{MoveKind::III, MoveKind::V});
    CHECK_THROWS_AS(parse_move_set("vi"), InputError);
    CHECK_THROWS_AS(parse_move_set(""), InputError);
}

TEST_CASE("applicable moves") {
    const auto a = applicable_moves(inv("1-2,3-4,5-8,6-7"), {MoveKind::III});
    bool found = false;
    for (const auto& m : a)
        if (m.move == Move{MoveKind::III, 7, 8} && m.result == inv("1-2,3-4,5-7,6-8"))
            found = true;
    CHECK(found);

    const auto v = applicable_moves(inv("1-2,3-4"), {MoveKind::V});
    REQUIRE(v.size() == 1);
    CHECK(v[0].move == Move{MoveKind::V, 1, 4});
    CHECK(v[0].result == inv("1-3,2-4"));

    for (const auto& s : enumerate_rp(8))
        CHECK(applicable_moves(s, {MoveKind::II, MoveKind::IV}).empty());
}

TEST_CASE("apply_move") {
    CHECK(apply_move(inv("1-4,2-3"), {MoveKind::III, 3, 4}) == inv("1-3,2-4"));
    CHECK(apply_move(inv("1-2,3-4"), {MoveKind::V, 1, 4}) == inv("1-3,2-4"));
    try {
        apply_move(inv("1-2,3-4"), {MoveKind::III, 3, 4});
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("sigma(3)=4 < 3 fails") != std::string::npos);
    }
    const auto split = apply_move(inv("1-2,3-4"), {MoveKind::I, 1, 2});
    CHECK(split.rank() == 1);
    CHECK_FALSE(split.is_fixed_point_free());
}

TEST_CASE("III and V keep rank; III keeps boundary counts") {
    for (const auto& s : enumerate_rp(8)) {
        for (const auto& m : applicable_moves(s, {MoveKind::III, MoveKind::V})) {
            CHECK_FALSE(m.rank_dropped);
            CHECK(m.result.rank() == s.rank());
            CHECK(m.result.is_fixed_point_free());
            if (m.move.kind == MoveKind::III)
                CHECK(boundary_counts(m.result) == boundary_counts(s));
        }
    }
    // V can move a column out of the leading zero block
    CHECK(boundary_counts(inv("1-2,3-4")) == BoundaryCounts{1, 1});
    CHECK(boundary_counts(apply_move(inv("1-2,3-4"), {MoveKind::V, 1, 4})) == BoundaryCounts{2, 2});
}

TEST_CASE("build_order small cases") {
    const PosetDag d2 = build_order(2, {MoveKind::III, MoveKind::V});
    CHECK(d2.size() == 1);
    CHECK(d2.covers().empty());

    const PosetDag d4 = build_order(4, {MoveKind::III, MoveKind::V});
    std::set<std::pair<Involution, Involution>> covers;
    for (auto [u, v] : d4.covers())
        covers.emplace(d4.nodes()[u], d4.nodes()[v]);
    CHECK(covers == std::set<std::pair<Involution, Involution>>{{inv("1-2,3-4"), inv("1-3,2-4")},
                                                                  {inv("1-4,2-3"), inv("1-3,2-4")}});
    CHECK(maximal_elements(d4) == std::vector<Involution>{inv("1-2,3-4"), inv("1-4,2-3")});
    CHECK_THROWS_AS(build_order(4, {MoveKind::I}), InputError);
    CHECK_THROWS_AS(build_order(4, {MoveKind::III, MoveKind::IV}), InputError);
}

TEST_CASE("reachability and reduction agree with a brute-force closure") {
    for (int n : {4, 6, 8}) {
        for (const MoveSet& kinds : {MoveSet{MoveKind::III}, MoveSet{MoveKind::III, MoveKind::V}}) {
            const PosetDag dag = build_order(n, kinds);
            const auto rel = closure(n, kinds);
            std::size_t count = 0;
            for (std::size_t u = 0; u < dag.size(); ++u)
                for (std::size_t v = 0; v < dag.size(); ++v)
                    if (dag.above(u, v)) {
                        ++count;
                        CHECK(rel.count({dag.nodes()[u], dag.nodes()[v]}) == 1);
                    }
            CHECK(count == rel.size());
            // acyclic: nothing above itself
            for (std::size_t u = 0; u < dag.size(); ++u)
                CHECK_FALSE(dag.above(u, u));
            // covers are relations with nothing in between
            for (auto [u, v] : dag.covers()) {
                CHECK(dag.above(u, v));
                for (std::size_t w = 0; w < dag.size(); ++w)
                    CHECK_FALSE((dag.above(u, w) && dag.above(w, v)));
            }
            // every parent sits on a strictly smaller level
            for (auto [u, v] : dag.covers())
                CHECK(dag.level(u) < dag.level(v));
        }
    }
}

TEST_CASE("type-III order at N=8") {
    const PosetDag dag = build_order(8, {MoveKind::III});
    std::vector<std::size_t> sizes;
    for (const auto& lv : level_sets(dag))
        sizes.push_back(lv.size());
    CHECK(sizes == std::vector<std::size_t>{14, 28, 28, 20, 10, 4, 1});
    CHECK(level_sets(dag).back() == std::vector<Involution>{inv("1-5,2-6,3-7,4-8")});
    const std::size_t iso = dag.index_of(inv("1-2,3-4,5-6,7-8"));
    CHECK(dag.children(iso).empty());
    CHECK(dag.parents(iso).empty());
    CHECK(maximal_elements(dag) == maximal_elements(build_order(8, {MoveKind::III, MoveKind::V})));
    CHECK(maximal_elements(dag).size() == 14);
}

TEST_CASE("unique maximal ancestor") {
    for (int n : {2, 4, 6, 8}) {
        const PosetDag dag = build_order(n, {MoveKind::III});
        const auto anc = unique_maximal_ancestor(dag);
        CHECK(anc.size() == dag.size());
        for (const auto& m : maximal_elements(dag))
            CHECK(anc.at(m) == m);
    }
    const auto anc8 = unique_maximal_ancestor(build_order(8, {MoveKind::III}));
    CHECK(anc8.at(inv("1-3,2-4,5-7,6-8")) == inv("1-4,2-3,5-8,6-7"));
    CHECK_THROWS_AS(unique_maximal_ancestor(build_order(6, {MoveKind::III, MoveKind::V})), InputError);
}

TEST_CASE("maximal ancestors in the {III,V} order can be several") {
    // (13)(24) lies below both maxima at N=4.
    const auto anc = maximal_ancestors(build_order(4, {MoveKind::III, MoveKind::V}));
    CHECK(anc.at(inv("1-3,2-4")).size() == 2);
}

TEST_CASE("duality classes") {
    const auto maxima = maximal_elements(build_order(8, {MoveKind::III}));
    const auto classes = duality_classes(maxima);
    CHECK(classes.size() == 10);
    bool together = false;
    for (const auto& c : classes)
        if (std::find(c.begin(), c.end(), inv("1-6,2-3,4-5,7-8")) != c.end())
            together = std::find(c.begin(), c.end(), inv("1-2,3-8,4-5,6-7")) != c.end();
    CHECK(together);
    CHECK(duality_classes({inv("1-2,3-4,5-6,7-8")}).size() == 1);
    CHECK(duality_classes({inv("1-6,2-3,4-5,7-8"), inv("1-2,3-8,4-5,6-7")}).size() == 1);
}

TEST_CASE("export_hasse") {
    const std::string dot = export_hasse(build_order(2, {MoveKind::III}), HasseFormat::Dot);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("->") == std::string::npos);

    const auto j8 = nlohmann::json::parse(export_hasse(build_order(8, {MoveKind::III}), HasseFormat::Json));
    CHECK(j8["nodes"].size() == 105);
    CHECK(j8["edges"].size() == 184);

    const auto j4 = nlohmann::json::parse(export_hasse(build_order(4, {MoveKind::III, MoveKind::V}), HasseFormat::Json));
    CHECK(j4["nodes"].size() == 3);
    CHECK(j4["edges"].size() == 2);

    CHECK(parse_hasse_format("dot") == HasseFormat::Dot);
    CHECK_THROWS_AS(parse_hasse_format("svg"), InputError);
    CHECK(export_hasse(build_order(6, {MoveKind::III}), HasseFormat::Dot) ==
          export_hasse(build_order(6, {MoveKind::III}), HasseFormat::Dot));
}
