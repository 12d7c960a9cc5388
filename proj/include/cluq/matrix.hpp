#pragma once

#include "cluq/rational.hpp"

#include <vector>

namespace cluq {

// Small dense square matrices with exact entries, row-major.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n, long fill = 0) : n_(n), a_(static_cast<size_t>(n) * n, Integer(fill)) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int n() const { return n_; }
    Integer& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    std::string str() const;

private:
    int n_;
    std::vector<Integer> a_;
};

class RatMatrix {
public:
    RatMatrix() : n_(0) {}
    explicit RatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rational(0)) {}
    static RatMatrix identity(int n);
    static RatMatrix from_int(const IntMatrix& m);

    int n() const { return n_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }
    bool is_identity() const;

    Rational det() const;
    RatMatrix inverse() const; // throws if singular

    // Row-vector action v -> v * M.
    std::vector<Rational> row_apply(const std::vector<Rational>& v) const;

    std::string str() const;

private:
    int n_;
    std::vector<Rational> a_;
};

} // namespace cluq
