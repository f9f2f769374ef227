#ifndef SQZERO_RANK_PROFILE_HPP
#define SQZERO_RANK_PROFILE_HPP

#include <Eigen/Core>

#include "sqzero/involution.hpp"
#include "sqzero/modp.hpp"

namespace sqz {

/// rho(i, j) = rank of the southwest block rows i..N, columns 1..j.
///
/// Indices are 1-based with i in 1..N+1 and j in 0..N; the empty ranges
/// i = N+1 and j = 0 read as zero. Conjugation by an invertible upper
/// triangular matrix maps the row span of rows i..N and the column span of
/// columns 1..j onto themselves, so rho is constant on Borel orbits.
class RankProfile {
public:
    RankProfile() = default;
    explicit RankProfile(int n) : n_(n), values_(Eigen::MatrixXi::Zero(n + 2, n + 1)) {}

    int n() const { return n_; }
    int operator()(int i, int j) const { return values_(i, j); }
    int& at(int i, int j) { return values_(i, j); }

    /// Nonincreasing in i, nondecreasing in j, 0 <= rho <= min(N-i+1, j).
    bool is_monotone() const;
    /// Pointwise rho <= other.
    bool dominated_by(const RankProfile& other) const;

    friend bool operator==(const RankProfile& a, const RankProfile& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    int n_ = 0;
    Eigen::MatrixXi values_;  // row 0 unused
};

/// Throws InputError unless X is square, strictly upper triangular and X^2 = 0 over F_p.
void require_square_zero_upper(const ModMatrix& x, const PrimeField& f);

RankProfile rank_profile(const ModMatrix& x, const PrimeField& f);
/// Closed form for a partial permutation: count ones (a, b) with a >= i, b <= j.
RankProfile rank_profile(const PartialPermutationMatrix& p);

/// The unique partial permutation matrix in the Borel orbit of X, recovered
/// from the rank profile by inclusion-exclusion.
PartialPermutationMatrix orbit_representative(const ModMatrix& x, const PrimeField& f);

ModMatrix to_mod_matrix(const PartialPermutationMatrix& p);

} // namespace sqz

#endif // SQZERO_RANK_PROFILE_HPP
