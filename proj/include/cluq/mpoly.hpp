#pragma once

#include "cluq/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cluq {

using Expt = std::vector<int32_t>;

// total-degree-then-lex monomial order
struct TdegLexLess {
    bool operator()(const Expt& a, const Expt& b) const {
        long ta = 0, tb = 0;
        for (auto v : a) ta += v;
        for (auto v : b) tb += v;
        if (ta != tb) return ta < tb;
        return a < b;
    }
};

// Sparse multivariate polynomial over Q with nonnegative exponents.
class MPoly {
public:
    using TermMap = std::map<Expt, Rational, TdegLexLess>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}
    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int i, int exp = 1);
    static MPoly monomial(int nvars, const Expt& e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    Rational constant_value() const; // requires is_constant()

    int degree(int var) const;
    long total_degree() const;

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    MPoly operator*(const Rational& c) const;
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(unsigned e) const;
    MPoly derivative(int var) const;
    const Rational& leading_coeff() const;   // wrt tdeg-lex order
    const Expt& leading_expt() const;

    // Exact division; throws std::invalid_argument when not divisible.
    static MPoly div_exact(const MPoly& a, const MPoly& b);
    static MPoly gcd(const MPoly& a, const MPoly& b);

    std::string str(const std::vector<std::string>& names) const;

private:
    void add_term(const Expt& e, const Rational& c);
    static void check_compat(const MPoly& a, const MPoly& b);

    int nvars_;
    TermMap terms_;

    friend struct MPolyInternals;
};

} // namespace cluq
