#include "sqzero/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sqzero/error.hpp"

namespace sqz {

namespace {

unsigned degree_of(const Poly::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool divides(const Poly::Monomial& a, const Poly::Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Poly::Monomial mono_quotient(const Poly::Monomial& b, const Poly::Monomial& a) {
    Poly::Monomial q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        q[i] = b[i] - a[i];
    return q;
}

class Parser {
public:
    Parser(std::string_view text, const FieldSpec& field, int n_vars)
        : field_(field), n_vars_(n_vars) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                src_ += c;
    }

    Poly run() {
        Poly out(field_, n_vars_);
        if (src_.empty())
            fail("empty polynomial");
        bool negate = false;
        if (peek() == '+' || peek() == '-')
            negate = src_[pos_++] == '-';
        out += term(negate);
        while (pos_ < src_.size()) {
            const char op = src_[pos_];
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            ++pos_;
            out += term(op == '-');
        }
        return out;
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("cannot parse polynomial '" + src_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return src_.substr(start, pos_ - start);
    }

    Poly term(bool negate) {
        Scalar coeff = 1;
        Poly::Monomial exps(static_cast<std::size_t>(n_vars_), 0);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string lit = digits();
            if (peek() == '/') {
                ++pos_;
                lit += "/" + digits();
            }
            coeff = parse_scalar(lit, field_);
            if (peek() != '*')
                return finish(coeff, exps, negate);
            ++pos_;
        }
        powers(exps);
        return finish(coeff, exps, negate);
    }

    void powers(Poly::Monomial& exps) {
        for (;;) {
            if (peek() != 'x')
                fail("expected variable");
            ++pos_;
            const long idx = std::stol(digits());
            if (idx < 1 || idx > n_vars_)
                fail("variable x" + std::to_string(idx) + " outside x1..x" + std::to_string(n_vars_));
            unsigned e = 1;
            if (peek() == '^') {
                ++pos_;
                e = static_cast<unsigned>(std::stoul(digits()));
            }
            exps[static_cast<std::size_t>(idx - 1)] += e;
            if (peek() != '*')
                return;
            ++pos_;
        }
    }

    Poly finish(const Scalar& c, const Poly::Monomial& exps, bool negate) const {
        return Poly::monomial(field_, n_vars_, exps, negate ? field_.neg(c) : c);
    }

    FieldSpec field_;
    int n_vars_;
    std::string src_;
    std::size_t pos_ = 0;
};

// Univariate helpers over a field; coefficient k multiplies t^k.
using Uni = std::vector<Scalar>;

void trim(Uni& u) {
    while (!u.empty() && u.back() == 0)
        u.pop_back();
}

Uni uni_rem(Uni a, const Uni& b, const FieldSpec& f) {
    const Scalar lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        const Scalar factor = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
        trim(a);
    }
    return a;
}

} // namespace

std::string Homogeneity::to_string() const {
    switch (kind) {
    case Kind::AnyDegree: return "any";
    case Kind::Degree: return std::to_string(degree);
    case Kind::NotHomogeneous: return "not homogeneous";
    }
    return "?";
}

bool Poly::GrLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = degree_of(a);
    const unsigned db = degree_of(b);
    if (da != db)
        return da > db;
    return a > b;
}

Poly::Poly(FieldSpec field, int n_vars) : field_(field), n_vars_(n_vars) {
    if (n_vars < 0)
        throw InputError("negative variable count");
}

Poly Poly::constant(FieldSpec field, int n_vars, const Scalar& c) {
    return monomial(field, n_vars, Monomial(static_cast<std::size_t>(n_vars), 0), c);
}

Poly Poly::variable(FieldSpec field, int n_vars, int index) {
    if (index < 1 || index > n_vars)
        throw InputError("variable index out of range");
    Monomial m(static_cast<std::size_t>(n_vars), 0);
    m[static_cast<std::size_t>(index - 1)] = 1;
    return monomial(field, n_vars, std::move(m), 1);
}

Poly Poly::monomial(FieldSpec field, int n_vars, Monomial exps, const Scalar& c) {
    if (exps.size() != static_cast<std::size_t>(n_vars))
        throw InputError("exponent vector length differs from variable count");
    Poly p(field, n_vars);
    p.add_term(exps, c);
    return p;
}

Poly Poly::parse(std::string_view text, FieldSpec field, int n_vars) {
    if (text == "0")
        return Poly(field, n_vars);
    return Parser(text, field, n_vars).run();
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    const Scalar v = field_.normalize(c);
    if (v == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (!inserted) {
        it->second = field_.add(it->second, v);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Poly::require_same_ring(const Poly& o) const {
    if (!(field_ == o.field_))
        throw InputError("polynomials over different fields (" + field_.name() + " vs " + o.field_.name() + ")");
    if (n_vars_ != o.n_vars_)
        throw InputError("polynomials in different variable counts (" + std::to_string(n_vars_) + " vs " +
                         std::to_string(o.n_vars_) + ")");
}

int Poly::total_degree() const {
    return is_zero() ? -1 : static_cast<int>(degree_of(leading_monomial()));
}

Scalar Poly::constant_term() const {
    auto it = terms_.find(Monomial(static_cast<std::size_t>(n_vars_), 0));
    return it == terms_.end() ? Scalar(0) : it->second;
}

Homogeneity Poly::homogeneity() const {
    if (is_zero())
        return {};
    const unsigned d = degree_of(leading_monomial());
    for (const auto& [m, c] : terms_)
        if (degree_of(m) != d)
            return {Homogeneity::Kind::NotHomogeneous, 0};
    return {Homogeneity::Kind::Degree, static_cast<int>(d)};
}

Poly Poly::monic() const {
    if (is_zero())
        return *this;
    return scaled(field_.inv(leading_coefficient()));
}

Scalar Poly::eval(std::span<const Scalar> point) const {
    if (point.size() != static_cast<std::size_t>(n_vars_))
        throw InputError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(n_vars_));
    Scalar total = 0;
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e)
                t *= point[i];
        total += t;
    }
    return field_.normalize(total);
}

Poly Poly::operator-() const { return scaled(-1); }

Poly& Poly::operator+=(const Poly& o) {
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, field_.neg(c));
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_ring(b);
    Poly out(a.field_, a.n_vars_);
    Poly::Monomial m(static_cast<std::size_t>(a.n_vars_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Scalar& c) const {
    Poly out(field_, n_vars_);
    for (const auto& [m, v] : terms_)
        out.add_term(m, v * c);
    return out;
}

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool is_const = degree_of(m) == 0;
        Scalar mag = c;
        if (c < 0) {
            out += "-";
            mag = -c;
        } else if (!out.empty()) {
            out += "+";
        }
        std::string powers;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!powers.empty())
                powers += "*";
            powers += "x" + std::to_string(i + 1);
            if (m[i] > 1)
                powers += "^" + std::to_string(m[i]);
        }
        if (is_const)
            out += sqz::to_string(mag);
        else if (mag == 1)
            out += powers;
        else
            out += sqz::to_string(mag) + "*" + powers;
    }
    return out;
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
    f.require_same_ring(g);
    if (g.is_zero())
        throw std::domain_error("division by the zero polynomial");
    const FieldSpec& field = f.field();
    Poly quotient(field, f.n_vars());
    Poly rest = f;
    const Scalar lead_inv = field.inv(g.leading_coefficient());
    while (!rest.is_zero()) {
        const Poly::Monomial& lm = rest.leading_monomial();
        if (!divides(g.leading_monomial(), lm))
            return std::nullopt;
        const Poly t = Poly::monomial(field, f.n_vars(), mono_quotient(lm, g.leading_monomial()),
                                      field.mul(rest.leading_coefficient(), lead_inv));
        quotient += t;
        rest -= t * g;
    }
    return quotient;
}

Poly gcd_homogeneous_bivariate(const Poly& f, const Poly& g) {
    f.require_same_ring(g);
    if (f.n_vars() != 2)
        throw Unsupported("general multivariate gcd out of scope: need exactly two variables");
    if (!f.homogeneity().homogeneous() || !g.homogeneity().homogeneous())
        throw Unsupported("bivariate gcd needs homogeneous inputs");
    if (f.is_zero())
        return g.monic();
    if (g.is_zero())
        return f.monic();

    const FieldSpec& field = f.field();
    auto x2_valuation = [](const Poly& p) {
        unsigned v = ~0U;
        for (const auto& [m, c] : p.terms())
            v = std::min(v, m[1]);
        return v;
    };
    auto dehomogenize = [](const Poly& p) {
        Uni u;
        for (const auto& [m, c] : p.terms()) {
            if (u.size() <= m[0])
                u.resize(m[0] + 1, 0);
            u[m[0]] = c;
        }
        trim(u);
        return u;
    };
    const unsigned vf = x2_valuation(f);
    const unsigned vg = x2_valuation(g);
    Uni a = dehomogenize(f);
    Uni b = dehomogenize(g);
    while (!b.empty()) {
        Uni r = uni_rem(a, b, field);
        a = std::move(b);
        b = std::move(r);
    }
    const Scalar lead_inv = field.inv(a.back());
    const unsigned e = static_cast<unsigned>(a.size() - 1);
    const unsigned shift = std::min(vf, vg);
    Poly out(field, 2);
    for (unsigned k = 0; k <= e; ++k)
        if (a[k] != 0)
            out += Poly::monomial(field, 2, {k, e - k + shift}, field.mul(a[k], lead_inv));
    return out;
}

ModpPoly::ModpPoly(const Poly& p, const PrimeField& f) : n_vars_(static_cast<std::size_t>(p.n_vars())) {
    if (!p.field().is_prime() || p.field().p() != f.p())
        throw InputError("ModpPoly needs a polynomial over F_" + std::to_string(f.p()));
    for (const auto& [m, c] : p.terms()) {
        coeffs_.push_back(p.field().residue(c));
        exps_.insert(exps_.end(), m.begin(), m.end());
    }
}

std::int64_t ModpPoly::eval(std::span<const std::int64_t> point, const PrimeField& f) const {
    std::int64_t total = 0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        std::int64_t v = coeffs_[t];
        const unsigned* e = exps_.data() + t * n_vars_;
        for (std::size_t i = 0; i < n_vars_ && v != 0; ++i)
            for (unsigned k = 0; k < e[i]; ++k)
                v = f.mul(v, point[i]);
        total = f.add(total, v);
    }
    return total;
}

} // namespace sqz
