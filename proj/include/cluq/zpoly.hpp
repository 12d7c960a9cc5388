#pragma once

#include "cluq/rational.hpp"

#include <vector>

namespace cluq {

// Dense univariate polynomial over Z. Coefficient i belongs to u^i; the
// vector never carries a zero leading coefficient.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(Integer c) { if (c != 0) coeffs_.push_back(std::move(c)); }
    explicit ZPoly(long c) : ZPoly(Integer(c)) {}
    static ZPoly monomial(const Integer& c, int deg);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const Integer& leading() const;
    const Integer& coeff(int i) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly operator-() const;
    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

    ZPoly pow(unsigned e) const;
    Integer content() const;                  // gcd of coefficients, >= 0
    ZPoly primitive_part() const;             // content and leading sign removed
    Rational eval(const Rational& x) const;
    ZPoly reversed() const;                   // u^deg * p(1/u)

    std::string str(const std::string& var = "u") const;

    // Exact division; throws if the remainder is nonzero.
    static ZPoly div_exact(const ZPoly& a, const ZPoly& b);
    // gcd via subresultant PRS, primitive with positive leading coefficient.
    static ZPoly gcd(const ZPoly& a, const ZPoly& b);

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

} // namespace cluq
