#include "cluq/qcoeff.hpp"

#include <sstream>

namespace cluq {

QCoeff::QCoeff(int root, ZPoly num, ZPoly den)
    : root_(root), num_(std::move(num)), den_(std::move(den)) {
    if (root_ < 1) throw std::invalid_argument("QCoeff: root order must be positive");
    if (den_.is_zero()) throw std::invalid_argument("QCoeff: zero denominator");
    reduce();
}

QCoeff QCoeff::from_rational(int root, const Rational& r) {
    return QCoeff(root, ZPoly(Integer(r.get_num())), ZPoly(Integer(r.get_den())));
}

QCoeff QCoeff::upow(int root, long e, const Integer& c) {
    if (e >= 0) return QCoeff(root, ZPoly::monomial(c, static_cast<int>(e)), ZPoly(Integer(1)));
    return QCoeff(root, ZPoly(c), ZPoly::monomial(Integer(1), static_cast<int>(-e)));
}

void QCoeff::reduce() {
    if (num_.is_zero()) {
        den_ = ZPoly(Integer(1));
        return;
    }
    ZPoly g = ZPoly::gcd(num_, den_);
    if (!(g == ZPoly(Integer(1)))) {
        num_ = ZPoly::div_exact(num_, g);
        den_ = ZPoly::div_exact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

void QCoeff::check_same_root(const QCoeff& a, const QCoeff& b) {
    if (a.root_ != b.root_)
        throw std::invalid_argument("QCoeff: mixed root orders " + std::to_string(a.root_) +
                                    " and " + std::to_string(b.root_));
}

QCoeff operator+(const QCoeff& a, const QCoeff& b) {
    QCoeff::check_same_root(a, b);
    return QCoeff(a.root_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QCoeff operator-(const QCoeff& a, const QCoeff& b) {
    QCoeff::check_same_root(a, b);
    return QCoeff(a.root_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QCoeff operator*(const QCoeff& a, const QCoeff& b) {
    QCoeff::check_same_root(a, b);
    return QCoeff(a.root_, a.num_ * b.num_, a.den_ * b.den_);
}

QCoeff operator/(const QCoeff& a, const QCoeff& b) {
    QCoeff::check_same_root(a, b);
    if (b.is_zero()) throw std::invalid_argument("QCoeff: division by zero");
    return QCoeff(a.root_, a.num_ * b.den_, a.den_ * b.num_);
}

QCoeff QCoeff::operator-() const {
    QCoeff r(*this);
    r.num_ = -r.num_;
    return r;
}

QCoeff QCoeff::inverse() const {
    if (is_zero()) throw std::invalid_argument("QCoeff: inverse of zero");
    return QCoeff(root_, den_, num_);
}

QCoeff QCoeff::bar() const {
    if (is_zero()) return *this;
    const int dn = num_.degree(), dd = den_.degree();
    // num(1/u)/den(1/u) = rev(num) * u^dd / (rev(den) * u^dn)
    return QCoeff(root_, num_.reversed() * ZPoly::monomial(Integer(1), dd),
                  den_.reversed() * ZPoly::monomial(Integer(1), dn));
}

Rational QCoeff::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("QCoeff: evaluation at a pole");
    return num_.eval(x) / d;
}

std::string QCoeff::str() const {
    if (den_ == ZPoly(Integer(1))) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

} // namespace cluq
