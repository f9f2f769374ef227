#ifndef SQZERO_INVOLUTION_HPP
#define SQZERO_INVOLUTION_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace sqz {

/// One transposition (min max) of an involution, 1-based, min < max.
struct Pair {
    int min = 0;
    int max = 0;
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// An involution of {1..N}. Pairs are kept sorted by their minimum.
///
/// Members of RP(N) are fixed-point free. Involutions with fixed points are
/// only produced by rank-dropping moves and are never enumerated.
class Involution {
public:
    Involution() = default;

    /// Fixed-point-free involution; every index in 1..N must be covered once.
    static Involution from_pairs(int n_points, std::span<const Pair> pairs);
    /// Involution that may have fixed points (indices not in any pair).
    static Involution partial_from_pairs(int n_points, std::span<const Pair> pairs);
    /// Parses "1-8,2-7,3-6,4-5" or the compact cycle form "(18)(27)(36)(45)".
    /// With n_points == 0 the size is the largest index mentioned.
    static Involution parse(std::string_view text, int n_points = 0);

    int n_points() const { return n_; }
    /// sigma(i) for 1 <= i <= N.
    int operator()(int i) const { return partner_[static_cast<std::size_t>(i)]; }
    int rank() const { return static_cast<int>(pairs_.size()); }
    bool is_fixed_point_free() const { return 2 * rank() == n_; }
    const std::vector<Pair>& pairs() const { return pairs_; }

    /// Right conjugate by the transposition (a b).
    Involution conjugate(int a, int b) const;
    /// The product sigma * (a b) with sigma(a) == b; both points become fixed.
    Involution split_pair(int a, int b) const;

    /// "1-8,2-7,3-6,4-5"
    std::string to_string() const;
    /// "(18)(27)(36)(45)"; only unambiguous for N <= 9.
    std::string to_cycles() const;

    friend bool operator==(const Involution& a, const Involution& b) {
        return a.n_ == b.n_ && a.pairs_ == b.pairs_;
    }
    friend std::strong_ordering operator<=>(const Involution& a, const Involution& b) {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        return a.pairs_ <=> b.pairs_;
    }

private:
    Involution(int n, std::vector<int> partner);

    int n_ = 0;
    std::vector<int> partner_;  // size N+1, partner_[0] unused
    std::vector<Pair> pairs_;
};

/// 0/1 strictly upper triangular square-zero matrix, stored by its ones.
class PartialPermutationMatrix {
public:
    using Entry = std::pair<int, int>;  // (row, col), 1-based

    PartialPermutationMatrix() = default;
    PartialPermutationMatrix(int n, std::vector<Entry> ones);

    int n() const { return n_; }
    const std::vector<Entry>& ones() const { return ones_; }
    int rank() const { return static_cast<int>(ones_.size()); }
    bool contains(int row, int col) const;
    Eigen::MatrixXi dense() const;

    friend bool operator==(const PartialPermutationMatrix&, const PartialPermutationMatrix&) = default;

private:
    int n_ = 0;
    std::vector<Entry> ones_;  // sorted
};

/// Composition (t_0, ..., t_l) of N recording the zero diagonal block sizes.
class BlockType {
public:
    BlockType() = default;
    explicit BlockType(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int l() const { return static_cast<int>(parts_.size()) - 1; }
    int total() const;
    int first() const { return parts_.front(); }
    int last() const { return parts_.back(); }
    BlockType reversed() const;
    /// t_0 >= 1, t_l >= 1 and every interior part >= 2.
    bool satisfies_part_bounds() const;
    std::string to_string() const;

    friend bool operator==(const BlockType&, const BlockType&) = default;
    friend auto operator<=>(const BlockType&, const BlockType&) = default;

private:
    std::vector<int> parts_;
};

struct BoundaryCounts {
    int leading_zero_cols = 0;  // C
    int trailing_zero_rows = 0; // R
    friend bool operator==(const BoundaryCounts&, const BoundaryCounts&) = default;
};

/// (N-1)!!
long long double_factorial_odd(int n_points);

/// All fixed-point-free involutions of {1..N}, sorted. N even, 2 <= N <= 12.
std::vector<Involution> enumerate_rp(int n_points);

PartialPermutationMatrix to_matrix(const Involution& sigma);
/// Inverse of to_matrix; throws InputError if some index is unmatched.
Involution from_matrix(const PartialPermutationMatrix& p);

/// Minimal prefix-block composition of the partial permutation matrix.
BlockType block_type(const Involution& sigma);
BoundaryCounts boundary_counts(const Involution& sigma);

/// Flip across the anti-diagonal: (a b) -> (N+1-b  N+1-a).
Involution anti_diagonal_dual(const Involution& sigma);

} // namespace sqz

#endif // SQZERO_INVOLUTION_HPP
