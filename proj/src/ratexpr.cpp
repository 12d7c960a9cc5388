#include "cluq/ratexpr.hpp"

#include <sstream>

namespace cluq {

RatExpr::RatExpr(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw std::invalid_argument("RatExpr: variable-set mismatch");
    if (den_.is_zero()) throw std::invalid_argument("RatExpr: zero denominator");
    reduce();
}

void RatExpr::reduce() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(den_.nvars(), Rational(1));
        return;
    }
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = MPoly::div_exact(num_, g);
        den_ = MPoly::div_exact(den_, g);
    }
    const Rational lc = den_.leading_coeff();
    if (lc != 1) {
        const Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool RatExpr::is_one() const {
    return num_ == MPoly::constant(num_.nvars(), Rational(1)) &&
           den_ == MPoly::constant(num_.nvars(), Rational(1));
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
    return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) {
    return RatExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
    return RatExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) {
    if (b.is_zero()) throw std::invalid_argument("RatExpr: division by zero");
    return RatExpr(a.num_ * b.den_, a.den_ * b.num_);
}

RatExpr RatExpr::operator-() const {
    RatExpr r(*this);
    r.num_ = -r.num_;
    return r;
}

RatExpr RatExpr::inverse() const {
    if (is_zero()) throw std::invalid_argument("RatExpr: inverse of zero");
    return RatExpr(den_, num_);
}

RatExpr RatExpr::pow(long e) const {
    if (e == 0) return RatExpr::one(nvars());
    const RatExpr base = e > 0 ? *this : inverse();
    const unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    return RatExpr(base.num_.pow(n), base.den_.pow(n));
}

RatExpr RatExpr::partial(int var) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatExpr(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::string RatExpr::str(const std::vector<std::string>& names) const {
    if (den_ == MPoly::constant(nvars(), Rational(1))) return num_.str(names);
    std::ostringstream os;
    os << "(" << num_.str(names) << ")/(" << den_.str(names) << ")";
    return os.str();
}

} // namespace cluq
