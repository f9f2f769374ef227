#ifndef SQZERO_POSET_HPP
#define SQZERO_POSET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqzero/involution.hpp"

namespace sqz {

enum class MoveKind { I, II, III, IV, V };

using MoveSet = std::set<MoveKind>;

std::string to_string(MoveKind kind);
/// "iii", "iii+v", "i+ii+iii+iv+v" (case-insensitive)
MoveSet parse_move_set(const std::string& text);

/// A single move. (p, q) is the transposition, p < q.
///
///   I   : sigma(p) = q, result sigma * (p q)
///   II  : sigma(p) = p < q < sigma(q)
///   III : sigma(q) < sigma(p) < p < q
///   IV  : sigma(p) < p < q = sigma(q)
///   V   : p < sigma(p) < sigma(q) < q
/// II through V replace sigma by its conjugate under (p q).
struct Move {
    MoveKind kind = MoveKind::III;
    int p = 0;
    int q = 0;
    friend auto operator<=>(const Move&, const Move&) = default;
};

struct MoveResult {
    Move move;
    Involution result;
    bool rank_dropped = false;
};

/// Empty optional when the move applies, otherwise the violated chain.
std::optional<std::string> move_violation(const Involution& sigma, const Move& move);

std::vector<MoveResult> applicable_moves(const Involution& sigma, const MoveSet& kinds);
Involution apply_move(const Involution& sigma, const Move& move);

/// Hasse diagram of the order on RP(N) generated by rank-preserving moves.
class PosetDag {
public:
    int n_points() const { return n_; }
    const MoveSet& move_set() const { return kinds_; }
    /// Sorted ascending.
    const std::vector<Involution>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t index_of(const Involution& sigma) const;

    /// Cover edges (parent, child) by node index; parent is the larger element.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
    const std::vector<std::size_t>& children(std::size_t v) const { return children_[v]; }
    const std::vector<std::size_t>& parents(std::size_t v) const { return parents_[v]; }
    /// 1-based; maximal nodes are level 1.
    int level(std::size_t v) const { return levels_[v]; }
    int level_count() const;
    /// Strict reachability: u > v in the order.
    bool above(std::size_t u, std::size_t v) const { return (reach_[u][v / 64] >> (v % 64)) & 1U; }

    friend PosetDag build_order(int n_points, const MoveSet& kinds);

private:
    int n_ = 0;
    MoveSet kinds_;
    std::vector<Involution> nodes_;
    std::vector<std::vector<std::uint64_t>> reach_;  // bitset rows
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<std::vector<std::size_t>> children_;
    std::vector<std::vector<std::size_t>> parents_;
    std::vector<int> levels_;
};

/// Throws InputError if kinds contains moves that leave RP(N).
PosetDag build_order(int n_points, const MoveSet& kinds);

std::vector<Involution> maximal_elements(const PosetDag& dag);
/// Level sets, index 0 holding level 1.
std::vector<std::vector<Involution>> level_sets(const PosetDag& dag);

/// Maximal elements above (or equal to) each node.
std::map<Involution, std::vector<Involution>> maximal_ancestors(const PosetDag& dag);

/// Thrown when some node lies below zero or several maximal elements.
class AncestorViolation : public std::runtime_error {
public:
    AncestorViolation(std::string what, std::map<Involution, std::vector<Involution>> offenders)
        : std::runtime_error(std::move(what)), offenders_(std::move(offenders)) {}
    const std::map<Involution, std::vector<Involution>>& offenders() const { return offenders_; }

private:
    std::map<Involution, std::vector<Involution>> offenders_;
};

/// Requires a type-III order.
std::map<Involution, Involution> unique_maximal_ancestor(const PosetDag& dag_iii);

/// Orbits of anti_diagonal_dual on the input set; each class sorted, classes sorted.
std::vector<std::vector<Involution>> duality_classes(const std::vector<Involution>& elements);

enum class HasseFormat { Dot, Json };
HasseFormat parse_hasse_format(const std::string& text);
std::string export_hasse(const PosetDag& dag, HasseFormat format);

} // namespace sqz

#endif // SQZERO_POSET_HPP
