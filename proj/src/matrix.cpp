#include "cluq/matrix.hpp"

#include <sstream>

namespace cluq {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("IntMatrix: ragged rows");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) r.at(i, j) = Rational(m.at(i, j));
    return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("RatMatrix: size mismatch");
    RatMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

bool RatMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Rational RatMatrix::det() const {
    RatMatrix m(*this);
    Rational d(1);
    for (int c = 0; c < n_; ++c) {
        int p = -1;
        for (int r = c; r < n_; ++r)
            if (m.at(r, c) != 0) { p = r; break; }
        if (p < 0) return Rational(0);
        if (p != c) {
            for (int j = 0; j < n_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        const Rational inv = Rational(1) / m.at(c, c);
        for (int r = c + 1; r < n_; ++r) {
            const Rational f = m.at(r, c) * inv;
            if (f == 0) continue;
            for (int j = c; j < n_; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::inverse() const {
    RatMatrix m(*this), inv = identity(n_);
    for (int c = 0; c < n_; ++c) {
        int p = -1;
        for (int r = c; r < n_; ++r)
            if (m.at(r, c) != 0) { p = r; break; }
        if (p < 0) throw std::invalid_argument("RatMatrix: singular matrix");
        if (p != c)
            for (int j = 0; j < n_; ++j) {
                std::swap(m.at(p, j), m.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        const Rational piv = Rational(1) / m.at(c, c);
        for (int j = 0; j < n_; ++j) {
            m.at(c, j) *= piv;
            inv.at(c, j) *= piv;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c) continue;
            const Rational f = m.at(r, c);
            if (f == 0) continue;
            for (int j = 0; j < n_; ++j) {
                m.at(r, j) -= f * m.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::vector<Rational> RatMatrix::row_apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("RatMatrix: vector size mismatch");
    std::vector<Rational> out(static_cast<size_t>(n_), Rational(0));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) out[static_cast<size_t>(j)] += v[static_cast<size_t>(i)] * at(i, j);
    return out;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? "," : "") << to_string(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace cluq
