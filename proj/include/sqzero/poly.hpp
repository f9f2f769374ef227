#ifndef SQZERO_POLY_HPP
#define SQZERO_POLY_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqzero/field.hpp"

namespace sqz {

/// Result of a homogeneity test. The zero polynomial is homogeneous of every degree.
struct Homogeneity {
    enum class Kind { AnyDegree, Degree, NotHomogeneous };
    Kind kind = Kind::AnyDegree;
    int degree = 0;  // meaningful for Kind::Degree

    bool homogeneous() const { return kind != Kind::NotHomogeneous; }
    /// True when a polynomial with this homogeneity may have degree d.
    bool admits(int d) const { return kind == Kind::AnyDegree || (kind == Kind::Degree && degree == d); }
    std::string to_string() const;
};

/// Sparse polynomial in x1..xr over Q or F_p.
///
/// Terms are kept in graded lexicographic order, largest first, with x1 > x2 > ... .
/// No stored coefficient is zero; the zero polynomial has no terms.
class Poly {
public:
    using Monomial = std::vector<unsigned>;

    struct GrLexGreater {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };
    using TermMap = std::map<Monomial, Scalar, GrLexGreater>;

    Poly(FieldSpec field, int n_vars);

    static Poly constant(FieldSpec field, int n_vars, const Scalar& c);
    /// x_index, 1-based.
    static Poly variable(FieldSpec field, int n_vars, int index);
    static Poly monomial(FieldSpec field, int n_vars, Monomial exps, const Scalar& c);
    /// Inverse of to_string(); see README for the grammar.
    static Poly parse(std::string_view text, FieldSpec field, int n_vars);

    const FieldSpec& field() const { return field_; }
    int n_vars() const { return n_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const;
    Scalar constant_term() const;
    Homogeneity homogeneity() const;

    /// Largest term in graded-lex order; the polynomial must be nonzero.
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Scalar& leading_coefficient() const { return terms_.begin()->second; }
    /// Scaled so the leading coefficient is 1; zero stays zero.
    Poly monic() const;

    Scalar eval(std::span<const Scalar> point) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly scaled(const Scalar& c) const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

    /// Throws InputError unless both live in the same ring.
    void require_same_ring(const Poly& o) const;

private:
    void add_term(const Monomial& m, const Scalar& c);

    FieldSpec field_;
    int n_vars_ = 0;
    TermMap terms_;
};

/// Quotient f / g when g divides f exactly, otherwise empty.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

/// Monic gcd of two homogeneous polynomials in two variables.
///
/// Strips the largest common power of x2, dehomogenizes at x2 = 1, runs the
/// univariate Euclidean algorithm and rehomogenizes. gcd(f, 0) is monic f.
/// Throws Unsupported for any other variable count or inhomogeneous input.
Poly gcd_homogeneous_bivariate(const Poly& f, const Poly& g);

/// A polynomial over F_p flattened for fast repeated evaluation.
class ModpPoly {
public:
    ModpPoly() = default;
    ModpPoly(const Poly& p, const PrimeField& f);

    std::int64_t eval(std::span<const std::int64_t> point, const PrimeField& f) const;
    bool is_zero() const { return coeffs_.empty(); }

private:
    std::size_t n_vars_ = 0;
    std::vector<std::int64_t> coeffs_;
    std::vector<unsigned> exps_;  // n_vars_ per term
};

} // namespace sqz

#endif // SQZERO_POLY_HPP
