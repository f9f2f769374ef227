#include "sqzero/modp.hpp"

#include <stdexcept>
#include <string>

#include "sqzero/error.hpp"

namespace sqz {

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw InputError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
}

std::int64_t PrimeField::pow(std::int64_t a, std::uint64_t e) const {
    std::int64_t result = 1 % p_;
    a = reduce(a);
    while (e) {
        if (e & 1U)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return result;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0)
        throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return reduce(t);
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, const PrimeField& f) {
    if (a.cols() != b.rows())
        throw InputError("dimension mismatch in matrix product");
    ModMatrix c = ModMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
        }
    return c;
}

ModMatrix inverse(const ModMatrix& a, const PrimeField& f) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n)
        throw InputError("inverse of a non-square matrix");
    ModMatrix work(n, 2 * n);
    work.leftCols(n) = a;
    work.rightCols(n) = ModMatrix::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = c;
        while (piv < n && work(piv, c) == 0)
            ++piv;
        if (piv == n)
            throw InputError("matrix is singular over F_" + std::to_string(f.p()));
        work.row(c).swap(work.row(piv));
        const std::int64_t s = f.inv(work(c, c));
        for (Eigen::Index j = 0; j < 2 * n; ++j)
            work(c, j) = f.mul(work(c, j), s);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == c || work(i, c) == 0)
                continue;
            const std::int64_t factor = work(i, c);
            for (Eigen::Index j = 0; j < 2 * n; ++j)
                work(i, j) = f.sub(work(i, j), f.mul(factor, work(c, j)));
        }
    }
    return work.rightCols(n);
}

bool is_strictly_upper(const ModMatrix& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j <= i && j < a.cols(); ++j)
            if (a(i, j) != 0)
                return false;
    return true;
}

ModMatrix random_borel(Eigen::Index n, const PrimeField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> any(0, f.p() - 1);
    std::uniform_int_distribution<std::int64_t> unit(1, f.p() - 1);
    ModMatrix b = ModMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        b(i, i) = unit(rng);
        for (Eigen::Index j = i + 1; j < n; ++j)
            b(i, j) = any(rng);
    }
    return b;
}

} // namespace sqz
