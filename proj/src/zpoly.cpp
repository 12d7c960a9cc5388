#include "cluq/zpoly.hpp"

#include <algorithm>
#include <sstream>

namespace cluq {

void ZPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly ZPoly::monomial(const Integer& c, int deg) {
    ZPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<size_t>(deg) + 1, Integer(0));
    p.coeffs_.back() = c;
    return p;
}

const Integer& ZPoly::leading() const {
    static const Integer zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

const Integer& ZPoly::coeff(int i) const {
    static const Integer zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.normalize();
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly ZPoly::operator-() const {
    ZPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

ZPoly ZPoly::pow(unsigned e) const {
    ZPoly r(Integer(1)), base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Integer ZPoly::content() const {
    Integer g(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return *this;
    Integer c = content();
    if (leading() < 0) c = -c;
    ZPoly r(*this);
    for (auto& x : r.coeffs_) x /= c;
    return r;
}

Rational ZPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

ZPoly ZPoly::reversed() const {
    ZPoly r(*this);
    std::reverse(r.coeffs_.begin(), r.coeffs_.end());
    r.normalize();
    return r;
}

ZPoly ZPoly::div_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("ZPoly: division by zero");
    if (a.is_zero()) return ZPoly();
    if (a.degree() < b.degree()) throw std::invalid_argument("ZPoly: inexact division");
    std::vector<Integer> rem = a.coeffs_;
    ZPoly q;
    q.coeffs_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Integer(0));
    for (int d = a.degree(); d >= b.degree(); --d) {
        Integer& top = rem[static_cast<size_t>(d)];
        if (top == 0) continue;
        Integer qc = top / b.leading();
        if (qc * b.leading() != top) throw std::invalid_argument("ZPoly: inexact division");
        int shift = d - b.degree();
        q.coeffs_[static_cast<size_t>(shift)] = qc;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(i + shift)] -= qc * b.coeff(i);
    }
    for (const auto& c : rem)
        if (c != 0) throw std::invalid_argument("ZPoly: inexact division");
    q.normalize();
    return q;
}

namespace {

// Pseudo-remainder of f by g: remainder of lc(g)^(deg f - deg g + 1) * f.
ZPoly prem(const ZPoly& f, const ZPoly& g) {
    std::vector<Integer> rem(f.coeffs().begin(), f.coeffs().end());
    const Integer lg = g.leading();
    int d = static_cast<int>(rem.size()) - 1;
    while (d >= g.degree()) {
        if (rem[static_cast<size_t>(d)] != 0) {
            Integer top = rem[static_cast<size_t>(d)];
            for (auto& c : rem) c *= lg;
            int shift = d - g.degree();
            for (int i = 0; i <= g.degree(); ++i)
                rem[static_cast<size_t>(i + shift)] -= top * g.coeff(i);
        }
        --d;
    }
    ZPoly out;
    for (int i = 0; i <= d; ++i)
        if (rem[static_cast<size_t>(i)] != 0) out = out + ZPoly::monomial(rem[static_cast<size_t>(i)], i);
    return out;
}

} // namespace

// Primitive PRS: pseudo-remainders with a primitive-part reduction at
// each step. Degrees in this project stay small, so the extra content
// gcds are affordable.
ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.primitive_part() * ZPoly(b.content());
    if (b.is_zero()) return a.primitive_part() * ZPoly(a.content());
    Integer cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    ZPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        ZPoly r = prem(f, g).primitive_part();
        f = g;
        g = r;
    }
    return f.primitive_part() * ZPoly(cont);
}

std::string ZPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Integer ac = abs(c);
        if (i == 0 || ac != 1) os << ac.get_str();
        if (i > 0) {
            if (ac != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace cluq
