#include "sqzero/poset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "sqzero/error.hpp"

namespace sqz {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

std::string chain_term(const std::string& name, int v) {
    const std::string val = std::to_string(v);
    return name == val ? val : name + "=" + val;
}

std::string chain_failure(const std::string& lhs, int a, const std::string& rhs, int b) {
    return chain_term(lhs, a) + " < " + chain_term(rhs, b) + " fails";
}

} // namespace

std::string to_string(MoveKind kind) {
    switch (kind) {
    case MoveKind::I: return "I";
    case MoveKind::II: return "II";
    case MoveKind::III: return "III";
    case MoveKind::IV: return "IV";
    case MoveKind::V: return "V";
    }
    return "?";
}

MoveSet parse_move_set(const std::string& text) {
    MoveSet kinds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, '+')) {
        std::transform(item.begin(), item.end(), item.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (item == "i") kinds.insert(MoveKind::I);
        else if (item == "ii") kinds.insert(MoveKind::II);
        else if (item == "iii") kinds.insert(MoveKind::III);
        else if (item == "iv") kinds.insert(MoveKind::IV);
        else if (item == "v") kinds.insert(MoveKind::V);
        else throw InputError("unknown move kind '" + item + "'");
    }
    if (kinds.empty())
        throw InputError("empty move set");
    return kinds;
}

std::optional<std::string> move_violation(const Involution& s, const Move& m) {
    const int n = s.n_points();
    const int p = m.p;
    const int q = m.q;
    if (p < 1 || q > n || p >= q)
        return "transposition (" + std::to_string(p) + "," + std::to_string(q) +
               ") must satisfy 1 <= p < q <= " + std::to_string(n);
    const std::string sp = "sigma(" + std::to_string(p) + ")";
    const std::string sq = "sigma(" + std::to_string(q) + ")";
    const std::string pp = std::to_string(p);
    const std::string qq = std::to_string(q);
    switch (m.kind) {
    case MoveKind::I:
        if (s(p) != q)
            return "type I needs " + sp + "=" + qq + ", got " + std::to_string(s(p));
        return std::nullopt;
    case MoveKind::II:
        // sigma(p) = p < q < sigma(q)
        if (s(p) != p)
            return "type II needs " + sp + "=" + pp + ", got " + std::to_string(s(p));
        if (!(q < s(q)))
            return "type II: " + chain_failure(qq, q, sq, s(q));
        return std::nullopt;
    case MoveKind::III:
        // sigma(q) < sigma(p) < p < q
        if (!(s(q) < s(p)))
            return "type III: " + chain_failure(sq, s(q), sp, s(p));
        if (!(s(p) < p))
            return "type III: " + chain_failure(sp, s(p), pp, p);
        return std::nullopt;
    case MoveKind::IV:
        // sigma(p) < p < q = sigma(q)
        if (s(q) != q)
            return "type IV needs " + sq + "=" + qq + ", got " + std::to_string(s(q));
        if (!(s(p) < p))
            return "type IV: " + chain_failure(sp, s(p), pp, p);
        return std::nullopt;
    case MoveKind::V:
        // p < sigma(p) < sigma(q) < q
        if (!(p < s(p)))
            return "type V: " + chain_failure(pp, p, sp, s(p));
        if (!(s(p) < s(q)))
            return "type V: " + chain_failure(sp, s(p), sq, s(q));
        if (!(s(q) < q))
            return "type V: " + chain_failure(sq, s(q), qq, q);
        return std::nullopt;
    }
    return "unknown move kind";
}

Involution apply_move(const Involution& sigma, const Move& move) {
    if (auto why = move_violation(sigma, move))
        throw PreconditionError(*why);
    if (move.kind == MoveKind::I)
        return sigma.split_pair(move.p, move.q);
    return sigma.conjugate(move.p, move.q);
}

std::vector<MoveResult> applicable_moves(const Involution& sigma, const MoveSet& kinds) {
    std::vector<MoveResult> out;
    const int n = sigma.n_points();
    for (MoveKind kind : kinds) {
        for (int p = 1; p <= n; ++p) {
            for (int q = p + 1; q <= n; ++q) {
                const Move m{kind, p, q};
                if (move_violation(sigma, m))
                    continue;
                Involution r = apply_move(sigma, m);
                const bool dropped = r.rank() < sigma.rank();
                out.push_back({m, std::move(r), dropped});
            }
        }
    }
    return out;
}

std::size_t PosetDag::index_of(const Involution& sigma) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), sigma);
    if (it == nodes_.end() || !(*it == sigma))
        throw InputError("involution " + sigma.to_string() + " is not a node of RP(" +
                         std::to_string(n_) + ")");
    return static_cast<std::size_t>(it - nodes_.begin());
}

int PosetDag::level_count() const {
    return levels_.empty() ? 0 : *std::max_element(levels_.begin(), levels_.end());
}

PosetDag build_order(int n_points, const MoveSet& kinds) {
    for (MoveKind k : kinds)
        if (k != MoveKind::III && k != MoveKind::V)
            throw InputError("order leaves RP(N): move " + to_string(k) + " is not rank preserving");
    if (kinds.empty())
        throw InputError("empty move set");

    PosetDag dag;
    dag.n_ = n_points;
    dag.kinds_ = kinds;
    dag.nodes_ = enumerate_rp(n_points);
    const std::size_t n = dag.nodes_.size();

    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (const MoveResult& mr : applicable_moves(dag.nodes_[u], kinds)) {
            if (mr.rank_dropped || !mr.result.is_fixed_point_free())
                throw InvariantError("rank-preserving move left RP(N)");
            succ[u].push_back(dag.index_of(mr.result));
        }
        std::sort(succ[u].begin(), succ[u].end());
        succ[u].erase(std::unique(succ[u].begin(), succ[u].end()), succ[u].end());
    }

    // topological order by iterative DFS; a back edge means the moves cycle
    std::vector<int> state(n, 0);
    std::vector<std::size_t> post;
    post.reserve(n);
    for (std::size_t root = 0; root < n; ++root) {
        if (state[root])
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, k] = stack.back();
            if (k < succ[v].size()) {
                const std::size_t w = succ[v][k++];
                if (state[w] == 1)
                    throw InvariantError("move graph has a cycle through " + dag.nodes_[w].to_string());
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                state[v] = 2;
                post.push_back(v);
                stack.pop_back();
            }
        }
    }

    const std::size_t words = (n + 63) / 64;
    dag.reach_.assign(n, Bits(words, 0));
    for (std::size_t v : post) {  // children finish first
        Bits& row = dag.reach_[v];
        for (std::size_t w : succ[v]) {
            set_bit(row, w);
            const Bits& sub = dag.reach_[w];
            for (std::size_t k = 0; k < words; ++k)
                row[k] |= sub[k];
        }
    }

    dag.children_.assign(n, {});
    dag.parents_.assign(n, {});
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v : succ[u]) {
            bool redundant = false;
            for (std::size_t w : succ[u]) {
                if (w != v && test_bit(dag.reach_[w], v)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) {
                dag.covers_.emplace_back(u, v);
                dag.children_[u].push_back(v);
                dag.parents_[v].push_back(u);
            }
        }
    }

    dag.levels_.assign(n, 1);
    for (auto it = post.rbegin(); it != post.rend(); ++it) {
        const std::size_t v = *it;
        for (std::size_t c : dag.children_[v])
            dag.levels_[c] = std::max(dag.levels_[c], dag.levels_[v] + 1);
    }
    return dag;
}

std::vector<Involution> maximal_elements(const PosetDag& dag) {
    std::vector<Involution> out;
    for (std::size_t v = 0; v < dag.size(); ++v)
        if (dag.parents(v).empty())
            out.push_back(dag.nodes()[v]);
    return out;
}

std::vector<std::vector<Involution>> level_sets(const PosetDag& dag) {
    std::vector<std::vector<Involution>> out(static_cast<std::size_t>(dag.level_count()));
    for (std::size_t v = 0; v < dag.size(); ++v)
        out[static_cast<std::size_t>(dag.level(v) - 1)].push_back(dag.nodes()[v]);
    return out;
}

std::map<Involution, std::vector<Involution>> maximal_ancestors(const PosetDag& dag) {
    std::vector<std::size_t> tops;
    for (std::size_t v = 0; v < dag.size(); ++v)
        if (dag.parents(v).empty())
            tops.push_back(v);
    std::map<Involution, std::vector<Involution>> out;
    for (std::size_t v = 0; v < dag.size(); ++v) {
        auto& anc = out[dag.nodes()[v]];
        for (std::size_t m : tops)
            if (m == v || dag.above(m, v))
                anc.push_back(dag.nodes()[m]);
    }
    return out;
}

std::map<Involution, Involution> unique_maximal_ancestor(const PosetDag& dag_iii) {
    if (dag_iii.move_set() != MoveSet{MoveKind::III})
        throw InputError("unique_maximal_ancestor needs the order generated by type III moves only");
    std::map<Involution, Involution> out;
    std::map<Involution, std::vector<Involution>> offenders;
    for (auto& [node, anc] : maximal_ancestors(dag_iii)) {
        if (anc.size() == 1)
            out.emplace(node, anc.front());
        else
            offenders.emplace(node, anc);
    }
    if (!offenders.empty()) {
        std::string what = std::to_string(offenders.size()) + " node(s) without a unique maximal ancestor, first " +
                           offenders.begin()->first.to_string();
        throw AncestorViolation(what, std::move(offenders));
    }
    return out;
}

std::vector<std::vector<Involution>> duality_classes(const std::vector<Involution>& elements) {
    std::set<Involution> remaining(elements.begin(), elements.end());
    std::vector<std::vector<Involution>> out;
    while (!remaining.empty()) {
        Involution s = *remaining.begin();
        remaining.erase(remaining.begin());
        std::vector<Involution> cls{s};
        Involution d = anti_diagonal_dual(s);
        if (!(d == s) && remaining.erase(d))
            cls.push_back(d);
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end());
    return out;
}

HasseFormat parse_hasse_format(const std::string& text) {
    if (text == "dot")
        return HasseFormat::Dot;
    if (text == "json")
        return HasseFormat::Json;
    throw InputError("unknown Hasse format '" + text + "' (expected dot or json)");
}

std::string export_hasse(const PosetDag& dag, HasseFormat format) {
    const auto& nodes = dag.nodes();
    std::vector<std::pair<std::size_t, std::size_t>> edges = dag.covers();
    std::sort(edges.begin(), edges.end());

    if (format == HasseFormat::Json) {
        nlohmann::json j;
        j["n"] = dag.n_points();
        std::string moves;
        for (MoveKind k : dag.move_set())
            moves += (moves.empty() ? "" : "+") + to_string(k);
        j["moves"] = moves;
        j["nodes"] = nlohmann::json::array();
        j["levels"] = nlohmann::json::object();
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            j["nodes"].push_back(nodes[v].to_string());
            j["levels"][nodes[v].to_string()] = dag.level(v);
        }
        j["edges"] = nlohmann::json::array();
        for (auto [u, v] : edges)
            j["edges"].push_back({nodes[u].to_string(), nodes[v].to_string()});
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "digraph RP" << dag.n_points() << " {\n";
    os << "  rankdir=TB;\n";
    for (std::size_t v = 0; v < nodes.size(); ++v)
        os << "  \"" << nodes[v].to_string() << "\" [label=\"" << nodes[v].to_string() << "\\nL"
           << dag.level(v) << "\"];\n";
    for (auto [u, v] : edges)
        os << "  \"" << nodes[u].to_string() << "\" -> \"" << nodes[v].to_string() << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace sqz
