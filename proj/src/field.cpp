#include "sqzero/field.hpp"

#include <stdexcept>

#include "sqzero/error.hpp"

namespace sqz {

FieldSpec FieldSpec::prime(std::int64_t p) {
    PrimeField check(p);  // validates
    FieldSpec f;
    f.kind_ = Kind::PrimeField;
    f.p_ = check.p();
    return f;
}

PrimeField FieldSpec::prime_field() const {
    if (!is_prime())
        throw Unsupported("operation needs a prime field, got Q");
    return PrimeField(p_);
}

Scalar FieldSpec::normalize(const Scalar& a) const {
    if (!is_prime())
        return a;
    const mpz_class p(static_cast<long>(p_));
    mpz_class num = a.get_num() % p;
    mpz_class den = a.get_den() % p;
    if (den == 0)
        throw std::domain_error("denominator divisible by " + std::to_string(p_));
    if (den != 1) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num *= inv;
    }
    num %= p;
    if (num < 0)
        num += p;
    return Scalar(num);
}

Scalar FieldSpec::inv(const Scalar& a) const {
    if (a == 0)
        throw std::domain_error("inverse of zero");
    if (!is_prime())
        return Scalar(1) / a;
    const PrimeField f(p_);
    return Scalar(static_cast<long>(f.inv(residue(a))));
}

std::int64_t FieldSpec::residue(const Scalar& a) const {
    if (!is_prime())
        throw Unsupported("residue requested over Q");
    return static_cast<std::int64_t>(normalize(a).get_num().get_si());
}

std::string FieldSpec::name() const {
    return is_prime() ? "F" + std::to_string(p_) : "Q";
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
    Scalar s;
    const std::string str(text);
    if (str.empty() || s.set_str(str, 10) != 0)
        throw InputError("bad coefficient '" + str + "'");
    if (s.get_den() == 0)
        throw InputError("zero denominator in '" + str + "'");
    s.canonicalize();
    try {
        return field.normalize(s);
    } catch (const std::domain_error&) {
        throw InputError("coefficient '" + str + "' is undefined in " + field.name());
    }
}

std::string to_string(const Scalar& s) {
    Scalar c = s;
    c.canonicalize();
    return c.get_str();
}

} // namespace sqz
