#include "sqzero/rank_profile.hpp"

#include <algorithm>
#include <string>

#include "sqzero/error.hpp"

namespace sqz {

bool RankProfile::is_monotone() const {
    for (int i = 1; i <= n_ + 1; ++i) {
        for (int j = 0; j <= n_; ++j) {
            const int v = values_(i, j);
            if (v < 0 || v > std::min(n_ - i + 1, j))
                return false;
            if (i > 1 && values_(i - 1, j) < v)
                return false;
            if (j > 0 && values_(i, j - 1) > v)
                return false;
        }
    }
    return true;
}

bool RankProfile::dominated_by(const RankProfile& other) const {
    return n_ == other.n_ && (values_.array() <= other.values_.array()).all();
}

void require_square_zero_upper(const ModMatrix& x, const PrimeField& f) {
    if (x.rows() != x.cols() || x.rows() < 1)
        throw InputError("matrix must be square and nonempty");
    const ModMatrix r = x.unaryExpr([&f](std::int64_t v) { return f.reduce(v); });
    if (!is_strictly_upper(r))
        throw InputError("matrix is not strictly upper triangular");
    const ModMatrix sq = multiply(r, r, f);
    for (Eigen::Index i = 0; i < sq.rows(); ++i)
        for (Eigen::Index j = 0; j < sq.cols(); ++j)
            if (sq(i, j) != 0)
                throw InputError("matrix does not square to zero over F_" + std::to_string(f.p()) +
                                 ": entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") of X^2 is nonzero");
}

RankProfile rank_profile(const ModMatrix& x, const PrimeField& f) {
    require_square_zero_upper(x, f);
    const int n = static_cast<int>(x.rows());
    RankProfile rho(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            rho.at(i, j) = static_cast<int>(rank(x.block(i - 1, 0, n - i + 1, j), f));
    return rho;
}

RankProfile rank_profile(const PartialPermutationMatrix& p) {
    const int n = p.n();
    RankProfile rho(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int count = 0;
            for (auto [a, b] : p.ones())
                count += (a >= i && b <= j) ? 1 : 0;
            rho.at(i, j) = count;
        }
    return rho;
}

PartialPermutationMatrix orbit_representative(const ModMatrix& x, const PrimeField& f) {
    const RankProfile rho = rank_profile(x, f);
    const int n = rho.n();
    std::vector<PartialPermutationMatrix::Entry> ones;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int v = rho(i, j) - rho(i + 1, j) - rho(i, j - 1) + rho(i + 1, j - 1);
            if (v != 0 && v != 1)
                throw InvariantError("inclusion-exclusion gave " + std::to_string(v) + " at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            if (v == 1)
                ones.emplace_back(i, j);
        }
    }
    try {
        return PartialPermutationMatrix(n, std::move(ones));
    } catch (const InputError& e) {
        throw InvariantError(std::string("orbit representative is not a partial permutation: ") + e.what());
    }
}

ModMatrix to_mod_matrix(const PartialPermutationMatrix& p) {
    return p.dense().cast<std::int64_t>();
}

} // namespace sqz
