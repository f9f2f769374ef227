#ifndef SQZERO_CONJECTURE_HPP
#define SQZERO_CONJECTURE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sqzero/involution.hpp"
#include "sqzero/poly_matrix.hpp"

namespace sqz {

/// An N x N polynomial matrix to be tested against the six conditions.
class ConjectureInstance {
public:
    /// Throws InputError unless D is square of even size and d (when given)
    /// has N nonincreasing entries.
    explicit ConjectureInstance(PolyMatrix d, std::optional<std::vector<int>> degrees = std::nullopt);

    const PolyMatrix& matrix() const { return d_; }
    int n() const { return d_.n(); }
    int n_vars() const { return d_.n_vars(); }
    int rank_target() const { return d_.n() / 2; }
    const std::optional<std::vector<int>>& degrees() const { return degrees_; }

    /// Optional explicit (C, R) for condition 6; maximal counts are used otherwise.
    void set_boundary(int c, int r);
    const std::optional<BoundaryCounts>& user_boundary() const { return user_boundary_; }

private:
    PolyMatrix d_;
    std::optional<std::vector<int>> degrees_;
    std::optional<BoundaryCounts> user_boundary_;
};

struct CheckMode {
    enum class Kind { Exhaustive, Sample };
    Kind kind = Kind::Sample;
    std::size_t samples = 200;
    std::uint64_t seed = 0;

    static CheckMode exhaustive() { return {Kind::Exhaustive, 0, 0}; }
    static CheckMode sample(std::size_t k, std::uint64_t seed = 0) { return {Kind::Sample, k, seed}; }
};

/// Largest p^r accepted by an exhaustive rank scan.
inline constexpr std::int64_t kMaxExhaustivePoints = 10'000'000;

enum class Verdict { Pass, Fail, ExhaustivePass, SampledPass };
std::string to_string(Verdict v);

struct ConditionResult {
    Verdict verdict = Verdict::Pass;
    std::size_t points_checked = 0;             // condition 4
    std::string witness;                        // human-readable, empty on success
    std::optional<PolyMatrix::Position> position;
    std::vector<Scalar> point;                  // condition 4 failure
    std::optional<int> observed_rank;

    bool passed() const { return verdict != Verdict::Fail; }
};

struct InequalityResult {
    int n = 0;
    int r = 0;
    int row_count = 0;  // R
    int col_count = 0;  // C
    mpz_class lhs;
    mpz_class rhs;
    bool holds = false;
};

enum class Classification { Consistent, CounterexampleCandidate, InvalidInstance };
std::string to_string(Classification c);

struct ConditionReport {
    std::array<ConditionResult, 6> conditions;
    /// Maximal identically-zero leading columns and trailing rows.
    BoundaryCounts boundary;
    std::optional<std::vector<int>> degrees;  // supplied or inferred
    InequalityResult inequality;              // at the maximal (C, R)
    std::optional<InequalityResult> user_inequality;
    Classification classification = Classification::InvalidInstance;

    bool all_pass() const;
};

/// Free-flag data read off the zero pattern of a strictly upper triangular matrix.
struct FlagReport {
    BlockType type;
    int l = 0;
    bool first_part_ok = false;     // t_0 >= 1
    bool last_part_ok = false;      // t_l >= 1
    bool interior_parts_ok = false; // t_i >= 2 for 0 < i < l
    bool size_ok = false;           // N >= 2l
    /// Every block after the first has a column with a nonzero entry in a row
    /// of the block just before it, so d(F^i) is not inside F^{i-2}.
    bool adjacent_blocks_ok = false;
    /// l >= r, which holds whenever the homology hypotheses do.
    std::optional<bool> l_at_least_r;

    bool bounds_ok() const {
        return first_part_ok && last_part_ok && interior_parts_ok && size_ok && adjacent_blocks_ok;
    }
};

ConditionReport check_conditions(const ConjectureInstance& inst, const CheckMode& mode);

/// Solves deg p_ij = d_i - d_j + 1 over all nonzero entries together with
/// d_1 >= ... >= d_N, normalized so d_N = 0. Empty when no tuple exists.
/// Throws InputError naming the first inhomogeneous entry.
std::optional<std::vector<int>> infer_degree_tuple(const PolyMatrix& d);

/// Maximal leading zero columns (C) and trailing zero rows (R).
BoundaryCounts matrix_boundary_counts(const PolyMatrix& d);

/// Greedy minimal prefix-block decomposition of the zero pattern.
FlagReport matrix_block_type(const PolyMatrix& d);

/// Compositions (t_0..t_l) of N with t_0, t_l >= 1 and interior parts >= 2, lexicographic.
std::vector<BlockType> compositions_with_bounds(int n, int l);

InequalityResult evaluate_inequality(int n, int r, int row_count, int col_count);
/// N >= 2^(r-1) (R + C)
bool conjecture_inequality(int n, int r, int row_count, int col_count);

struct Verification {
    ConditionReport report;
    std::optional<FlagReport> flags;  // absent when D is not strictly upper triangular
    std::optional<std::vector<int>> inferred_degrees;
    bool has_replay = false;
};

Verification verify_instance(const ConjectureInstance& inst, const CheckMode& mode);

/// Embeds an involution's partial permutation matrix as a constant PolyMatrix.
PolyMatrix to_poly_matrix(const PartialPermutationMatrix& p, const FieldSpec& field, int n_vars);

} // namespace sqz

#endif // SQZERO_CONJECTURE_HPP
