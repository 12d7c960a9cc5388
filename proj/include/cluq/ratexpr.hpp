#pragma once

#include "cluq/mpoly.hpp"

namespace cluq {

// Element of the field Q(x_1,...,x_n) of rational functions in commuting
// indeterminates. Canonical form: lowest terms, denominator's tdeg-lex
// leading coefficient equal to 1, so equality is syntactic.
class RatExpr {
public:
    explicit RatExpr(int nvars = 0)
        : num_(MPoly(nvars)), den_(MPoly::constant(nvars, Rational(1))) {}
    RatExpr(MPoly num, MPoly den);

    static RatExpr variable(int nvars, int i) {
        return RatExpr(MPoly::variable(nvars, i), MPoly::constant(nvars, Rational(1)));
    }
    static RatExpr constant(int nvars, const Rational& c) {
        return RatExpr(MPoly::constant(nvars, c), MPoly::constant(nvars, Rational(1)));
    }
    static RatExpr one(int nvars) { return constant(nvars, Rational(1)); }

    int nvars() const { return num_.nvars(); }
    const MPoly& numerator() const { return num_; }
    const MPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
    RatExpr operator-() const;
    bool operator==(const RatExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatExpr& o) const { return !(*this == o); }

    RatExpr inverse() const;
    RatExpr pow(long e) const;
    RatExpr partial(int var) const; // formal partial derivative

    std::string str(const std::vector<std::string>& names) const;

private:
    void reduce();
    MPoly num_, den_;
};

} // namespace cluq
