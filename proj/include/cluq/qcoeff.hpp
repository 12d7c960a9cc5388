#pragma once

#include "cluq/zpoly.hpp"

namespace cluq {

// Element of the fraction field Q(u), where u stands for q^(1/root) for
// the root order of the ambient computation context. Canonical form:
// gcd(num, den) = 1 in Z[u] (contents included), den has positive leading
// coefficient. Equality is therefore syntactic.
//
// Mixing different root orders is an error, not a coercion.
class QCoeff {
public:
    QCoeff() : root_(1), num_(), den_(Integer(1)) {}
    QCoeff(int root, ZPoly num, ZPoly den);
    static QCoeff zero(int root) { return QCoeff(root, ZPoly(), ZPoly(Integer(1))); }
    static QCoeff one(int root) { return QCoeff(root, ZPoly(Integer(1)), ZPoly(Integer(1))); }
    static QCoeff from_rational(int root, const Rational& r);
    // c * u^e, e may be negative.
    static QCoeff upow(int root, long e, const Integer& c = Integer(1));

    int root() const { return root_; }
    const ZPoly& numerator() const { return num_; }
    const ZPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == ZPoly(Integer(1)) && den_ == ZPoly(Integer(1)); }

    friend QCoeff operator+(const QCoeff& a, const QCoeff& b);
    friend QCoeff operator-(const QCoeff& a, const QCoeff& b);
    friend QCoeff operator*(const QCoeff& a, const QCoeff& b);
    friend QCoeff operator/(const QCoeff& a, const QCoeff& b);
    QCoeff operator-() const;
    bool operator==(const QCoeff& o) const {
        return root_ == o.root_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const QCoeff& o) const { return !(*this == o); }

    QCoeff inverse() const;
    // The bar involution u -> u^(-1).
    QCoeff bar() const;
    // Value at u = x; throws if x is a pole.
    Rational eval(const Rational& x) const;

    std::string str() const;

private:
    void reduce();
    static void check_same_root(const QCoeff& a, const QCoeff& b);
    int root_;
    ZPoly num_, den_;
};

} // namespace cluq
