#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cluq/qcoeff.hpp"
#include "cluq/ratexpr.hpp"

#include <random>

using namespace cluq;

namespace {

ZPoly zp(std::initializer_list<long> coeffs_low_to_high) {
    ZPoly p;
    int i = 0;
    for (long c : coeffs_low_to_high) p = p + ZPoly::monomial(Integer(c), i++);
    return p;
}

QCoeff random_qcoeff(std::mt19937_64& rng, int root) {
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto poly = [&] {
        ZPoly p;
        const int d = deg(rng);
        for (int i = 0; i <= d; ++i) p = p + ZPoly::monomial(Integer(c(rng)), i);
        return p;
    };
    ZPoly den;
    while (den.is_zero()) den = poly();
    return QCoeff(root, poly(), den);
}

RatExpr random_ratexpr(std::mt19937_64& rng, int nvars) {
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<int> e(0, 2);
    auto poly = [&] {
        MPoly p(nvars);
        for (int t = 0; t < 4; ++t) {
            Expt ex(static_cast<size_t>(nvars), 0);
            for (auto& v : ex) v = e(rng);
            p = p + MPoly::monomial(nvars, ex, Rational(c(rng)));
        }
        return p;
    };
    MPoly den(nvars);
    while (den.is_zero()) den = poly();
    return RatExpr(poly(), den);
}

} // namespace

TEST_CASE("zpoly gcd and exact division") {
    ZPoly a = zp({-1, 0, 1}); // u^2 - 1
    ZPoly b = zp({-1, 1});    // u - 1
    CHECK(ZPoly::div_exact(a, b) == zp({1, 1}));
    CHECK(ZPoly::gcd(a, b) == b);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int iter = 0; iter < 200; ++iter) {
        auto rnd = [&](int maxdeg) {
            ZPoly p;
            for (int i = 0; i <= maxdeg; ++i) p = p + ZPoly::monomial(Integer(c(rng)), i);
            return p;
        };
        ZPoly f = rnd(4), g = rnd(3), h = rnd(2);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        ZPoly gg = ZPoly::gcd(f * h, g * h);
        // h divides gcd(fh, gh)
        CHECK_NOTHROW(ZPoly::div_exact(gg, ZPoly::gcd(gg, h)));
        CHECK(ZPoly::gcd(gg, h.primitive_part()) == h.primitive_part());
    }
}

TEST_CASE("qcoeff normalizes (u^2-1)/(u-1) to u+1") {
    QCoeff q(1, zp({-1, 0, 1}), zp({-1, 1}));
    CHECK(q.numerator() == zp({1, 1}));
    CHECK(q.denominator() == ZPoly(Integer(1)));
}

TEST_CASE("qcoeff arithmetic: q/(1-q^2) doubles") {
    // root order 1: u = q
    const QCoeff q = QCoeff::upow(1, 1);
    const QCoeff one = QCoeff::one(1);
    QCoeff t = q / (one - q * q);
    QCoeff sum = t + t;
    QCoeff expect = QCoeff(1, zp({0, 2}), zp({1, 0, -1}));
    CHECK(sum == expect);
}

TEST_CASE("qcoeff q_i at root order 2 with d_i = 1 is u^2") {
    // u = q^(1/2); q_i = (q^(1/N))^(N/d_i) = u^2
    const QCoeff qi = QCoeff::upow(2, 2);
    CHECK(qi == QCoeff(2, zp({0, 0, 1}), ZPoly(Integer(1))));
}

TEST_CASE("qcoeff division by zero is an error") {
    CHECK_THROWS_AS(QCoeff::one(1) / QCoeff::zero(1), std::invalid_argument);
}

TEST_CASE("qcoeff root-order mixing is an error") {
    CHECK_THROWS_AS(QCoeff::one(1) + QCoeff::one(2), std::invalid_argument);
}

TEST_CASE("qcoeff bar involution") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        QCoeff a = random_qcoeff(rng, 3);
        CHECK(a.bar().bar() == a);
    }
    // bar(u) = 1/u
    CHECK(QCoeff::upow(2, 1).bar() == QCoeff::upow(2, -1));
}

TEST_CASE("qcoeff field axioms on random samples") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 120; ++i) {
        QCoeff a = random_qcoeff(rng, 2), b = random_qcoeff(rng, 2), c = random_qcoeff(rng, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == QCoeff::one(2));
    }
}

TEST_CASE("ratexpr simplifies (X1 X2 + X2)/X2") {
    const int n = 2;
    RatExpr x1 = RatExpr::variable(n, 0), x2 = RatExpr::variable(n, 1);
    RatExpr e = (x1 * x2 + x2) / x2;
    CHECK(e == x1 + RatExpr::one(n));
}

TEST_CASE("ratexpr zero over nonzero is zero") {
    const int n = 2;
    RatExpr x1 = RatExpr::variable(n, 0);
    RatExpr z = RatExpr(n) / (x1 + RatExpr::one(n));
    CHECK(z.is_zero());
    CHECK(z == RatExpr(n));
}

TEST_CASE("ratexpr canonicalization is idempotent and respects a*b/b = a") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        RatExpr a = random_ratexpr(rng, 3), b = random_ratexpr(rng, 3);
        if (b.is_zero()) continue;
        CHECK(a * b / b == a);
    }
}

TEST_CASE("ratexpr field axioms on random samples") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
        RatExpr a = random_ratexpr(rng, 2), b = random_ratexpr(rng, 2), c = random_ratexpr(rng, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("ratexpr partial derivative quotient rule") {
    const int n = 2;
    RatExpr x = RatExpr::variable(n, 0), y = RatExpr::variable(n, 1);
    // d/dx [ x^2 y / (x + 1) ] = (x^2 + 2x) y / (x+1)^2
    RatExpr f = x.pow(2) * y / (x + RatExpr::one(n));
    RatExpr expect = (x.pow(2) + RatExpr::constant(n, Rational(2)) * x) * y /
                     (x + RatExpr::one(n)).pow(2);
    CHECK(f.partial(0) == expect);
}
