#ifndef SQZERO_MODP_HPP
#define SQZERO_MODP_HPP

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace sqz {

bool is_prime(std::int64_t n);

/// The prime field F_p, 2 <= p < 2^31. Elements are residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::int64_t p);

    std::int64_t p() const { return p_; }
    std::int64_t reduce(std::int64_t a) const {
        a %= p_;
        return a < 0 ? a + p_ : a;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return (a - b + p_) % p_; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::int64_t pow(std::int64_t a, std::uint64_t e) const;
    /// Throws on zero.
    std::int64_t inv(std::int64_t a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::int64_t p_;
};

using ModMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank of a residue matrix over F_p by Gaussian elimination.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m, const PrimeField& f) {
    ModMatrix a = m.derived().unaryExpr([&f](std::int64_t x) { return f.reduce(x); });
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = r;
        while (piv < rows && a(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        a.row(r).swap(a.row(piv));
        const std::int64_t inv = f.inv(a(r, c));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0)
                continue;
            const std::int64_t factor = f.mul(a(i, c), inv);
            for (Eigen::Index j = c; j < cols; ++j)
                a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
        }
        ++r;
    }
    return r;
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, const PrimeField& f);
/// Throws InputError when singular.
ModMatrix inverse(const ModMatrix& a, const PrimeField& f);
bool is_strictly_upper(const ModMatrix& a);
/// Uniform invertible upper triangular matrix (nonzero diagonal).
ModMatrix random_borel(Eigen::Index n, const PrimeField& f, std::mt19937_64& rng);

} // namespace sqz

#endif // SQZERO_MODP_HPP
