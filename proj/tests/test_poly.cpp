#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sqzero/error.hpp"
#include "sqzero/poly.hpp"
#include "sqzero/projective.hpp"

using namespace sqz;

namespace {
const FieldSpec Q = FieldSpec::rationals();
Poly P(const char* s, int r = 2, FieldSpec f = FieldSpec::rationals()) { return Poly::parse(s, f, r); }
} // namespace

TEST_CASE("field specs and scalars") {
    const FieldSpec f7 = FieldSpec::prime(7);
    CHECK(f7.name() == "F7");
    CHECK(Q.name() == "Q");
    CHECK(f7.normalize(-1) == 6);
    CHECK(f7.inv(3) == 5);
    CHECK(parse_scalar("-3/4", Q) == Scalar(-3, 4));
    CHECK(parse_scalar("1/2", f7) == 4);
    CHECK_THROWS_AS(parse_scalar("1/0", Q), InputError);
    CHECK_THROWS_AS(parse_scalar("1/7", f7), InputError);
    CHECK_THROWS_AS(FieldSpec::prime(9), InputError);
    CHECK(to_string(Scalar(3, 6)) == "1/2");
}

TEST_CASE("parse and print round trip") {
    CHECK(P("x1*x2+x1^2").to_string() == "x1^2+x1*x2");
    CHECK(P("-x2 + 3/2*x1").to_string() == "3/2*x1-x2");
    CHECK(P("0").to_string() == "0");
    CHECK(P("2*x1^0").to_string() == "2");
    CHECK(P("x1-x1").is_zero());
    CHECK(P("x1+x2", 2, FieldSpec::prime(5)).scaled(-1).to_string() == "4*x1+4*x2");
    CHECK_THROWS_AS(P("x3"), InputError);
    CHECK_THROWS_AS(P("x0"), InputError);
    CHECK_THROWS_AS(P("x1+"), InputError);
    CHECK_THROWS_AS(P("y"), InputError);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const Poly p = oracle::random_poly(Q, 3, 4, 5, rng);
        CHECK(Poly::parse(p.to_string(), Q, 3) == p);
    }
}

TEST_CASE("basic operations") {
    CHECK((P("x1+x2") * P("x1-x2")) == P("x1^2-x2^2"));
    CHECK(P("x1^2+x1*x2").homogeneity().degree == 2);
    CHECK(P("x1^2+x1*x2").homogeneity().kind == Homogeneity::Kind::Degree);
    CHECK_FALSE(P("x1^2+x2").homogeneity().homogeneous());
    CHECK(P("0").homogeneity().kind == Homogeneity::Kind::AnyDegree);
    const FieldSpec f7 = FieldSpec::prime(7);
    const std::vector<Scalar> pt{2, 3};
    CHECK(P("x1*x2+x2^2", 2, f7).eval(pt) == 1);
    CHECK(P("x1^3+1").total_degree() == 3);
    CHECK(P("0").total_degree() == -1);
    CHECK(P("x1^3+5").constant_term() == 5);
    CHECK(P("2*x1+4*x2").monic() == P("x1+2*x2"));
    CHECK_THROWS_AS(P("x1") + P("x1", 3), InputError);
    CHECK_THROWS_AS(P("x1") * P("x1", 2, f7), InputError);
}

TEST_CASE("graded lex order puts x1 first") {
    const Poly p = P("x2^3+x1*x2+x1^2*x2");
    CHECK(p.leading_monomial() == Poly::Monomial{2, 1});
    CHECK(p.to_string() == "x1^2*x2+x2^3+x1*x2");
}

TEST_CASE("ring axioms on random triples, with evaluation as a homomorphism") {
    std::mt19937_64 rng(11);
    for (const FieldSpec& f : {Q, FieldSpec::prime(101)}) {
        for (int k = 0; k < 500; ++k) {
            const int r = 1 + k % 3;
            const Poly a = oracle::random_poly(f, r, 3, 4, rng);
            const Poly b = oracle::random_poly(f, r, 3, 4, rng);
            const Poly c = oracle::random_poly(f, r, 3, 4, rng);
            const Poly zero(f, r);
            const Poly one = Poly::constant(f, r, 1);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK((a - a).is_zero());
            CHECK((a + (-a)).is_zero());

            std::vector<Scalar> pt;
            std::uniform_int_distribution<int> coord(-5, 5);
            for (int v = 0; v < r; ++v)
                pt.push_back(f.normalize(coord(rng)));
            CHECK((a * b).eval(pt) == f.mul(a.eval(pt), b.eval(pt)));
            CHECK((a + b).eval(pt) == f.add(a.eval(pt), b.eval(pt)));
            if (!a.is_zero() && !b.is_zero())
                CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
        }
    }
}

TEST_CASE("homogeneous polynomials scale by lambda^d") {
    std::mt19937_64 rng(5);
    for (const FieldSpec& f : {Q, FieldSpec::prime(31)}) {
        for (int k = 0; k < 200; ++k) {
            const int r = 2 + k % 2;
            const int d = k % 4;
            const Poly p = oracle::random_homogeneous(f, r, d, 3, rng);
            if (p.is_zero())
                continue;
            CHECK(p.homogeneity().admits(d));
            const Scalar lambda = f.normalize(2 + k % 5);
            std::vector<Scalar> x, lx;
            for (int v = 0; v < r; ++v) {
                x.push_back(f.normalize(v + 1));
                lx.push_back(f.mul(lambda, x.back()));
            }
            Scalar ld = 1;
            for (int e = 0; e < d; ++e)
                ld = f.mul(ld, lambda);
            CHECK(p.eval(lx) == f.mul(ld, p.eval(x)));
        }
    }
}

TEST_CASE("exact division") {
    const Poly f = P("x1^2-x2^2");
    CHECK(divide_exact(f, P("x1+x2")) == P("x1-x2"));
    CHECK_FALSE(divide_exact(f, P("x1+2*x2")).has_value());
    CHECK(divide_exact(P("0"), P("x1")) == P("0"));
    CHECK_THROWS(divide_exact(f, P("0")));
    std::mt19937_64 rng(9);
    for (int k = 0; k < 200; ++k) {
        const Poly a = oracle::random_poly(Q, 3, 3, 3, rng);
        const Poly b = oracle::random_poly(Q, 3, 3, 3, rng);
        if (b.is_zero())
            continue;
        CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("bivariate homogeneous gcd") {
    CHECK(gcd_homogeneous_bivariate(P("x1^2-x2^2"), P("x1^2+2*x1*x2+x2^2")) == P("x1+x2"));
    CHECK(gcd_homogeneous_bivariate(P("3*x1+6*x2"), P("0")) == P("x1+2*x2"));
    CHECK(gcd_homogeneous_bivariate(P("x1*x2"), P("x2^2")) == P("x2"));
    CHECK(gcd_homogeneous_bivariate(P("x1^3"), P("x2^3")) == P("1"));
    CHECK_THROWS_AS(gcd_homogeneous_bivariate(P("x1", 3), P("x2", 3)), Unsupported);
    CHECK_THROWS_AS(gcd_homogeneous_bivariate(P("x1+1"), P("x2")), Unsupported);

    std::mt19937_64 rng(13);
    for (const FieldSpec& f : {Q, FieldSpec::prime(101)}) {
        for (int k = 0; k < 100; ++k) {
            const Poly a = oracle::random_homogeneous(f, 2, 1 + k % 3, 3, rng);
            const Poly b = oracle::random_homogeneous(f, 2, 1 + k % 2, 3, rng);
            const Poly c = oracle::random_homogeneous(f, 2, 1 + k % 2, 2, rng);
            if (a.is_zero() || b.is_zero() || c.is_zero())
                continue;
            const Poly g = gcd_homogeneous_bivariate(a * c, b * c);
            CHECK(g.leading_coefficient() == 1);
            CHECK(divide_exact(a * c, g).has_value());
            CHECK(divide_exact(b * c, g).has_value());
            CHECK(divide_exact(g, c).has_value());
        }
    }
}

TEST_CASE("ModpPoly evaluation matches Poly::eval") {
    const FieldSpec f = FieldSpec::prime(101);
    const PrimeField pf = f.prime_field();
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
        const Poly p = oracle::random_poly(f, 3, 4, 4, rng);
        const ModpPoly m(p, pf);
        const std::vector<std::int64_t> pt{k % 101, (3 * k) % 101, (7 * k + 1) % 101};
        const std::vector<Scalar> spt{pt[0], pt[1], pt[2]};
        CHECK(Scalar(m.eval(pt, pf)) == p.eval(spt));
    }
}

TEST_CASE("projective points and root scans") {
    const FieldSpec f3 = FieldSpec::prime(3);
    const FieldSpec f5 = FieldSpec::prime(5);
    CHECK(ProjectivePoint({2, 4}, f5).to_string() == "(1:2)");
    CHECK(ProjectivePoint({0, 3}, f5).to_string() == "(0:1)");
    CHECK_THROWS_AS(ProjectivePoint({0, 0}, f5), InputError);

    const std::vector<Poly> a{P("x1", 2, f3)};
    CHECK(find_common_projective_root(a, f3)->to_string() == "(0:1)");
    const std::vector<Poly> b{P("x1-x2", 3, f5), P("x1-x3", 3, f5)};
    CHECK(find_common_projective_root(b, f5)->to_string() == "(1:1:1)");
    const std::vector<Poly> c{P("x1^2+x2^2", 2, f3)};
    CHECK_FALSE(find_common_projective_root(c, f3).has_value());

    const std::vector<Poly> q{P("x1")};
    CHECK_THROWS_AS(find_common_projective_root(q, Q), Unsupported);
    const std::vector<Poly> inh{P("x1+x2^2", 2, f5)};
    CHECK_THROWS_AS(find_common_projective_root(inh, f5), InputError);
    const std::vector<Poly> cst{P("3", 2, f5)};
    CHECK_THROWS_AS(find_common_projective_root(cst, f5), InputError);
}

TEST_CASE("root scan agrees with brute force over affine points") {
    const FieldSpec f = FieldSpec::prime(7);
    std::mt19937_64 rng(21);
    for (int k = 0; k < 60; ++k) {
        const int r = 2 + k % 2;
        std::vector<Poly> fs;
        for (int t = 0; t < 2; ++t) {
            Poly p = oracle::random_homogeneous(f, r, 1 + (k + t) % 3, 3, rng);
            if (p.is_zero())
                p = Poly::variable(f, r, 1);
            fs.push_back(p);
        }
        bool any = false;
        std::vector<Scalar> pt(static_cast<std::size_t>(r));
        const int total = r == 2 ? 49 : 343;
        for (int idx = 1; idx < total && !any; ++idx) {
            int v = idx;
            for (int c = r - 1; c >= 0; --c) {
                pt[static_cast<std::size_t>(c)] = v % 7;
                v /= 7;
            }
            any = std::all_of(fs.begin(), fs.end(), [&](const Poly& p) { return p.eval(pt) == 0; });
        }
        const auto root = find_common_projective_root(fs, f);
        CHECK(root.has_value() == any);
        if (root)
            for (const Poly& p : fs)
                CHECK(p.eval(root->coords()) == 0);
    }
}
