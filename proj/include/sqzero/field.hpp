#ifndef SQZERO_FIELD_HPP
#define SQZERO_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sqzero/modp.hpp"

namespace sqz {

/// Exact scalar. Over F_p it always holds an integer residue in [0, p).
using Scalar = mpq_class;

/// Q or F_p. Scalars of a prime field are canonical residues.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(std::int64_t p);

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::PrimeField; }
    /// 0 for Q.
    std::int64_t p() const { return p_; }
    /// Throws Unsupported over Q.
    PrimeField prime_field() const;

    /// Map an arbitrary rational into the field (a/b -> a * b^{-1} mod p).
    Scalar normalize(const Scalar& a) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
    Scalar neg(const Scalar& a) const { return normalize(-a); }
    /// Throws std::domain_error on zero.
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /// Residue as a machine integer; prime fields only.
    std::int64_t residue(const Scalar& a) const;

    /// "Q" or "F101"
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec() = default;
    Kind kind_ = Kind::Rationals;
    std::int64_t p_ = 0;
};

/// Integer or "a/b" literal, reduced into the field.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);
std::string to_string(const Scalar& s);

} // namespace sqz

#endif // SQZERO_FIELD_HPP
