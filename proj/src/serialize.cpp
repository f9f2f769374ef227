#include "sqzero/serialize.hpp"

#include <algorithm>
#include <set>

#include "sqzero/error.hpp"

namespace sqz {

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad value for '") + key + "': " + e.what());
    }
}

json mpz_json(const mpz_class& z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

FieldSpec field_from_json(const json& j) {
    const auto kind = get_field<std::string>(j, "kind");
    if (kind == "Q")
        return FieldSpec::rationals();
    if (kind == "Fp")
        return FieldSpec::prime(get_field<std::int64_t>(j, "p"));
    throw InputError("unknown field kind '" + kind + "'");
}

json field_json(const FieldSpec& f) {
    if (f.is_prime())
        return {{"kind", "Fp"}, {"p", f.p()}};
    return {{"kind", "Q"}};
}

json pair_list(const std::vector<std::pair<Involution, Involution>>& edges) {
    json out = json::array();
    for (const auto& [a, b] : edges)
        out.push_back({a.to_string(), b.to_string()});
    return out;
}

} // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const PartialPermutationMatrix& p) {
    json ones = json::array();
    for (auto [i, j] : p.ones())
        ones.push_back({i, j});
    return {{"n", p.n()}, {"ones", ones}};
}

PartialPermutationMatrix partial_permutation_from_json(const json& j) {
    const int n = get_field<int>(j, "n");
    std::vector<PartialPermutationMatrix::Entry> ones;
    for (const json& e : get_field<json>(j, "ones")) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("each entry of 'ones' must be [row, col]");
        ones.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return PartialPermutationMatrix(n, std::move(ones));
}

json to_json(const Scalar& s) {
    if (s.get_den() == 1)
        return mpz_json(s.get_num());
    return s.get_str();
}

json to_json(const std::vector<Involution>& list) {
    json out = json::array();
    for (const Involution& s : list)
        out.push_back(s.to_string());
    return out;
}

MatrixFile matrix_file_from_json(const json& j) {
    const int n = get_field<int>(j, "n");
    const int r = get_field<int>(j, "r");
    if (n < 1 || r < 0)
        throw InputError("matrix file needs n >= 1 and r >= 0");
    const FieldSpec field = field_from_json(get_field<json>(j, "field"));
    MatrixFile out{PolyMatrix(n, field, r), std::nullopt};
    for (const json& e : get_field<json>(j, "entries")) {
        const int row = get_field<int>(e, "row");
        const int col = get_field<int>(e, "col");
        const auto text = get_field<std::string>(e, "poly");
        if (!out.matrix(row, col).is_zero())
            throw InputError("duplicate entry (" + std::to_string(row) + "," + std::to_string(col) + ")");
        out.matrix.set(row, col, text);
    }
    if (j.contains("d") && !j.at("d").is_null())
        out.degrees = get_field<std::vector<int>>(j, "d");
    return out;
}

json to_json(const PolyMatrix& m, const std::optional<std::vector<int>>& degrees) {
    json entries = json::array();
    for (const auto& [pos, p] : m.entries())
        entries.push_back({{"row", pos.first}, {"col", pos.second}, {"poly", p.to_string()}});
    json out = {{"n", m.n()}, {"r", m.n_vars()}, {"field", field_json(m.field())}, {"entries", entries}};
    if (degrees)
        out["d"] = *degrees;
    return out;
}

ModMatrix constant_mod_matrix(const PolyMatrix& m) {
    const PrimeField f = m.field().prime_field();
    ModMatrix out = ModMatrix::Zero(m.rows(), m.cols());
    for (const auto& [pos, p] : m.entries()) {
        if (p.total_degree() > 0)
            throw InputError("entry (" + std::to_string(pos.first) + "," + std::to_string(pos.second) +
                             ") is not a constant");
        out(pos.first - 1, pos.second - 1) = f.reduce(m.field().residue(p.constant_term()));
    }
    return out;
}

json to_json(const ConditionResult& c) {
    json out = {{"verdict", to_string(c.verdict)}};
    if (c.verdict == Verdict::ExhaustivePass || c.verdict == Verdict::SampledPass)
        out["points"] = c.points_checked;
    if (!c.witness.empty())
        out["witness"] = c.witness;
    if (c.position)
        out["position"] = {c.position->first, c.position->second};
    if (!c.point.empty()) {
        json pt = json::array();
        for (const Scalar& s : c.point)
            pt.push_back(to_json(s));
        out["point"] = pt;
    }
    if (c.observed_rank)
        out["rank"] = *c.observed_rank;
    return out;
}

json to_json(const InequalityResult& q) {
    return {{"lhs", mpz_json(q.lhs)}, {"rhs", mpz_json(q.rhs)}, {"holds", q.holds},
            {"N", q.n}, {"r", q.r}, {"R", q.row_count}, {"C", q.col_count}};
}

json to_json(const FlagReport& f) {
    json out = {{"type", f.type.parts()},
                {"l", f.l},
                {"bounds_ok", f.bounds_ok()},
                {"checks",
                 {{"first_part", f.first_part_ok},
                  {"last_part", f.last_part_ok},
                  {"interior_parts", f.interior_parts_ok},
                  {"n_ge_2l", f.size_ok},
                  {"adjacent_blocks", f.adjacent_blocks_ok}}}};
    if (f.l_at_least_r)
        out["l_ge_r"] = *f.l_at_least_r;
    return out;
}

json to_json(const ConditionReport& r) {
    json conds = json::object();
    for (std::size_t i = 0; i < r.conditions.size(); ++i)
        conds["c" + std::to_string(i + 1)] = to_json(r.conditions[i]);
    json out = {{"conditions", conds},
                {"C", r.boundary.leading_zero_cols},
                {"R", r.boundary.trailing_zero_rows},
                {"inequality", to_json(r.inequality)},
                {"classification", to_string(r.classification)}};
    out["d"] = r.degrees ? json(*r.degrees) : json(nullptr);
    if (r.user_inequality)
        out["user_inequality"] = to_json(*r.user_inequality);
    return out;
}

json to_json(const Verification& v, const ConjectureInstance& inst) {
    json out = to_json(v.report);
    if (v.flags) {
        out["type"] = v.flags->type.parts();
        out["l"] = v.flags->l;
        out["flag"] = to_json(*v.flags);
    } else {
        out["type"] = nullptr;
        out["l"] = nullptr;
    }
    out["inferred_d"] = v.inferred_degrees ? json(*v.inferred_degrees) : json(nullptr);
    if (v.has_replay) {
        out["replay"] = {{"instance", to_json(inst.matrix(), v.report.degrees)},
                         {"inequality", to_json(v.report.inequality)}};
    }
    return out;
}

GoldenHasse golden_from_json(const json& j) {
    GoldenHasse g;
    for (const json& level : get_field<json>(j, "levels")) {
        std::vector<Involution> row;
        for (const json& s : level)
            row.push_back(Involution::parse(s.get<std::string>()));
        g.levels.push_back(std::move(row));
    }
    for (const json& e : get_field<json>(j, "edges")) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("each golden edge must be [parent, child]");
        g.edges.emplace_back(Involution::parse(e[0].get<std::string>()), Involution::parse(e[1].get<std::string>()));
    }
    return g;
}

GoldenComparison compare_with_golden(const PosetDag& dag, const GoldenHasse& golden) {
    GoldenComparison c;
    const auto computed = level_sets(dag);
    c.levels_match = computed.size() == golden.levels.size();
    if (!c.levels_match)
        c.level_diffs.push_back("level count " + std::to_string(computed.size()) + " vs golden " +
                                std::to_string(golden.levels.size()));
    for (std::size_t k = 0; k < std::min(computed.size(), golden.levels.size()); ++k) {
        const std::set<Involution> a(computed[k].begin(), computed[k].end());
        const std::set<Involution> b(golden.levels[k].begin(), golden.levels[k].end());
        if (a != b || b.size() != golden.levels[k].size()) {
            c.levels_match = false;
            c.level_diffs.push_back("level " + std::to_string(k + 1) + ": computed " + std::to_string(a.size()) +
                                    " elements, golden " + std::to_string(golden.levels[k].size()));
        }
    }

    const auto maxima = maximal_elements(dag);
    const std::set<Involution> computed_max(maxima.begin(), maxima.end());
    const std::set<Involution> golden_max =
        golden.levels.empty() ? std::set<Involution>{}
                              : std::set<Involution>(golden.levels.front().begin(), golden.levels.front().end());
    c.maximal_match = computed_max == golden_max;

    try {
        unique_maximal_ancestor(dag);
        c.ancestors_unique = true;
    } catch (const AncestorViolation& e) {
        c.ancestors_unique = false;
        c.ancestor_violations = e.offenders().size();
    }

    std::set<std::pair<Involution, Involution>> covers;
    for (auto [u, v] : dag.covers())
        covers.emplace(dag.nodes()[u], dag.nodes()[v]);
    const std::set<std::pair<Involution, Involution>> drawn(golden.edges.begin(), golden.edges.end());
    c.golden_edges = drawn.size();
    c.computed_covers = covers.size();
    for (const auto& e : drawn) {
        if (covers.count(e))
            continue;
        c.golden_only.push_back(e);
        bool related = false;
        try {
            related = dag.above(dag.index_of(e.first), dag.index_of(e.second));
        } catch (const InputError&) {
        }
        if (!related)
            c.golden_not_related.push_back(e);
    }
    for (const auto& e : covers)
        if (!drawn.count(e))
            c.computed_only.push_back(e);
    return c;
}

json to_json(const GoldenComparison& c) {
    return {{"levels_match", c.levels_match},
            {"level_diffs", c.level_diffs},
            {"maximal_match", c.maximal_match},
            {"ancestors_unique", c.ancestors_unique},
            {"ancestor_violations", c.ancestor_violations},
            {"verified", c.hard_pass()},
            {"edges",
             {{"golden", c.golden_edges},
              {"computed_covers", c.computed_covers},
              {"golden_only", pair_list(c.golden_only)},
              {"golden_not_related", pair_list(c.golden_not_related)},
              {"computed_only_count", c.computed_only.size()}}}};
}

} // namespace sqz
