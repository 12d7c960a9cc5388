#include "cluq/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace cluq {

MPoly MPoly::constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.emplace(Expt(static_cast<size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int i, int exp) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("MPoly: variable index out of range");
    if (exp < 0) throw std::invalid_argument("MPoly: negative exponent");
    MPoly p(nvars);
    Expt e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = exp;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MPoly MPoly::monomial(int nvars, const Expt& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("MPoly: bad exponent size");
    MPoly p(nvars);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expt& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int32_t v) { return v == 0; });
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("MPoly: not a constant");
    return terms_.begin()->second;
}

int MPoly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<size_t>(var)]));
    return d;
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (auto v : e) t += v;
        d = std::max(d, t);
    }
    return d;
}

void MPoly::add_term(const Expt& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::check_compat(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: variable-set mismatch");
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly::check_compat(a, b);
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly::check_compat(a, b);
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::operator*(const Rational& c) const {
    MPoly r(nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly::check_compat(a, b);
    MPoly r(a.nvars_);
    Expt e(static_cast<size_t>(a.nvars_), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = MPoly::constant(nvars_, Rational(1));
    MPoly base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1u) base = base * base;
    }
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(nvars_);
    const auto v = static_cast<size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Expt d = e;
        d[v] -= 1;
        r.add_term(d, c * Rational(e[v]));
    }
    return r;
}

const Rational& MPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
    return terms_.rbegin()->second;
}

const Expt& MPoly::leading_expt() const {
    if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
    return terms_.rbegin()->first;
}

// ---------------------------------------------------------------------------
// Exact division and gcd. Both are recursive over the last active variable,
// viewing the polynomial as univariate with polynomial coefficients.

struct MPolyInternals {
    // Highest variable index occurring in p, or -1.
    static int top_var(const MPoly& p) {
        int tv = -1;
        for (const auto& [e, c] : p.terms_)
            for (int i = static_cast<int>(e.size()) - 1; i > tv; --i)
                if (e[static_cast<size_t>(i)] > 0) { tv = i; break; }
        return tv;
    }

    // Coefficients of p viewed as univariate in `var`; entry d has the
    // var-exponent stripped to zero.
    static std::vector<MPoly> coeffs_in(const MPoly& p, int var) {
        std::vector<MPoly> out(static_cast<size_t>(std::max(0, p.degree(var)) + 1), MPoly(p.nvars()));
        if (p.is_zero()) return out;
        const auto v = static_cast<size_t>(var);
        for (const auto& [e, c] : p.terms_) {
            Expt stripped = e;
            int d = stripped[v];
            stripped[v] = 0;
            out[static_cast<size_t>(d)].add_term(stripped, c);
        }
        return out;
    }

    static MPoly from_coeffs(const std::vector<MPoly>& cs, int var, int nvars) {
        MPoly r(nvars);
        const auto v = static_cast<size_t>(var);
        for (size_t d = 0; d < cs.size(); ++d) {
            for (const auto& [e, c] : cs[d].terms()) {
                Expt shifted = e;
                shifted[v] = static_cast<int32_t>(d);
                r.add_term(shifted, c);
            }
        }
        return r;
    }

    static int deg(const std::vector<MPoly>& cs) {
        for (int d = static_cast<int>(cs.size()) - 1; d >= 0; --d)
            if (!cs[static_cast<size_t>(d)].is_zero()) return d;
        return -1;
    }
};

using MI = MPolyInternals;

MPoly MPoly::div_exact(const MPoly& a, const MPoly& b) {
    check_compat(a, b);
    if (b.is_zero()) throw std::invalid_argument("MPoly: division by zero");
    if (a.is_zero()) return MPoly(a.nvars_);
    if (b.is_constant()) return a * (Rational(1) / b.constant_value());
    // single-monomial divisor fast path
    if (b.terms_.size() == 1) {
        const auto& [be, bc] = *b.terms_.begin();
        MPoly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) {
            Expt q = e;
            for (size_t i = 0; i < q.size(); ++i) {
                q[i] -= be[i];
                if (q[i] < 0) throw std::invalid_argument("MPoly: inexact division");
            }
            r.add_term(q, c / bc);
        }
        return r;
    }
    const int var = MI::top_var(b);
    auto ra = MI::coeffs_in(a, var);
    auto rb = MI::coeffs_in(b, var);
    const int db = MI::deg(rb);
    int da = MI::deg(ra);
    if (da < db) throw std::invalid_argument("MPoly: inexact division");
    std::vector<MPoly> q(static_cast<size_t>(da - db) + 1, MPoly(a.nvars_));
    while (da >= db) {
        MPoly qc = div_exact(ra[static_cast<size_t>(da)], rb[static_cast<size_t>(db)]);
        const int shift = da - db;
        q[static_cast<size_t>(shift)] = qc;
        for (int i = 0; i <= db; ++i)
            ra[static_cast<size_t>(i + shift)] =
                ra[static_cast<size_t>(i + shift)] - qc * rb[static_cast<size_t>(i)];
        int nda = -1;
        for (int d = da; d >= 0; --d)
            if (!ra[static_cast<size_t>(d)].is_zero()) { nda = d; break; }
        if (nda == da) throw std::logic_error("MPoly: division failed to reduce degree");
        da = nda;
    }
    for (const auto& rc : ra)
        if (!rc.is_zero()) throw std::invalid_argument("MPoly: inexact division");
    return MI::from_coeffs(q, var, a.nvars_);
}

namespace {

// Strips the rational content: returns an integer-coefficient polynomial
// with coefficient gcd 1 and positive tdeg-lex leading coefficient.
MPoly integer_primitive(const MPoly& p) {
    if (p.is_zero()) return p;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    MPoly out = p * scale;
    if (out.leading_coeff() < 0) out = -out;
    return out;
}

Integer coeff_height(const MPoly& p) {
    Integer h(0);
    for (const auto& [e, c] : p.terms()) {
        Integer a = abs(c.get_num());
        if (a > h) h = a;
    }
    return h;
}

MPoly eval_var(const MPoly& p, int var, const Integer& xi) {
    MPoly out(p.nvars());
    const auto v = static_cast<size_t>(var);
    for (const auto& [e, c] : p.terms()) {
        Integer pw(1);
        for (int t = 0; t < e[v]; ++t) pw *= xi;
        Expt stripped = e;
        stripped[v] = 0;
        out = out + MPoly::monomial(p.nvars(), stripped, c * Rational(pw));
    }
    return out;
}

// Generalized base-xi expansion of gamma as a polynomial in `var`, applied
// coefficient-wise with symmetric remainders in (-xi/2, xi/2].
MPoly reconstruct_base_xi(MPoly gamma, int var, const Integer& xi) {
    MPoly g(gamma.nvars());
    int d = 0;
    const Integer half = xi / 2;
    while (!gamma.is_zero()) {
        MPoly digit(gamma.nvars());
        for (const auto& [e, c] : gamma.terms()) {
            Integer r = c.get_num() % xi; // c is integral here
            if (r > half) r -= xi;
            if (r <= -half) r += xi;
            if (r != 0) digit = digit + MPoly::monomial(gamma.nvars(), e, Rational(r));
        }
        if (!digit.is_zero()) {
            Expt shift(static_cast<size_t>(gamma.nvars()), 0);
            shift[static_cast<size_t>(var)] = d;
            g = g + digit * MPoly::monomial(gamma.nvars(), shift, Rational(1));
        }
        gamma = (gamma - digit) * make_rational(Integer(1), xi);
        ++d;
        if (d > 512) throw std::logic_error("MPoly: base-xi reconstruction ran away");
    }
    return g;
}

bool divides(const MPoly& a, const MPoly& b) {
    try {
        MPoly::div_exact(a, b);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// Heuristic gcd by integer substitution, with verification and retry.
// Inputs are integer-primitive; the result is integer-primitive.
MPoly heugcd(const MPoly& a, const MPoly& b, int depth) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), coeff_height(a).get_mpz_t(), coeff_height(b).get_mpz_t());
        return MPoly::constant(a.nvars(), Rational(g == 0 ? 1 : g));
    }
    if (depth > 16) throw std::logic_error("MPoly: heuristic gcd recursion ran away");
    const int var = std::max(MI::top_var(a), MI::top_var(b));
    Integer xi = 2 * std::min(coeff_height(a), coeff_height(b)) + 29;
    for (int tries = 0; tries < 8; ++tries) {
        MPoly ea = eval_var(a, var, xi);
        MPoly eb = eval_var(b, var, xi);
        if (!ea.is_zero() && !eb.is_zero()) {
            MPoly gamma = heugcd(integer_primitive(ea), integer_primitive(eb), depth + 1);
            MPoly cand = integer_primitive(reconstruct_base_xi(gamma, var, xi));
            if (!cand.is_zero() && divides(a, cand) && divides(b, cand)) return cand;
        }
        xi = xi * 73794 / 27011 + 7; // known HEUGCD growth schedule
    }
    throw std::domain_error("MPoly: heuristic gcd did not converge");
}

// Primitive PRS fallback for the rare case heugcd gives up.
MPoly coeff_content(const std::vector<MPoly>& cs, int nvars) {
    MPoly g(nvars);
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : MPoly::gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

MPoly prs_gcd(const MPoly& a, const MPoly& b) {
    const int var = std::max(MI::top_var(a), MI::top_var(b));
    auto fa = MI::coeffs_in(a, var);
    auto fb = MI::coeffs_in(b, var);
    const MPoly ca = coeff_content(fa, a.nvars());
    const MPoly cb = coeff_content(fb, a.nvars());
    const MPoly cont = MPoly::gcd(ca, cb);
    MPoly f = MPoly::div_exact(a, ca);
    MPoly g = MPoly::div_exact(b, cb);
    if (f.degree(var) < g.degree(var)) std::swap(f, g);
    while (!g.is_zero()) {
        auto rf = MI::coeffs_in(f, var);
        auto rg = MI::coeffs_in(g, var);
        int df = MI::deg(rf), dg = MI::deg(rg);
        const MPoly lg = rg[static_cast<size_t>(dg)];
        while (df >= dg) {
            MPoly top = rf[static_cast<size_t>(df)];
            for (auto& c : rf) c = c * lg;
            const int shift = df - dg;
            for (int i = 0; i <= dg; ++i)
                rf[static_cast<size_t>(i + shift)] =
                    rf[static_cast<size_t>(i + shift)] - top * rg[static_cast<size_t>(i)];
            int ndf = -1;
            for (int d = df - 1; d >= 0; --d)
                if (!rf[static_cast<size_t>(d)].is_zero()) { ndf = d; break; }
            df = ndf;
        }
        MPoly r = MI::from_coeffs(rf, var, a.nvars());
        if (!r.is_zero()) {
            auto rc = MI::coeffs_in(r, var);
            r = MPoly::div_exact(r, coeff_content(rc, a.nvars()));
        }
        f = g;
        g = r;
    }
    return cont * f;
}

} // namespace

// Returned gcd is correct up to a rational unit, which is all fraction
// reduction needs.
MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    check_compat(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return MPoly::constant(a.nvars_, Rational(1));
    const MPoly pa = integer_primitive(a), pb = integer_primitive(b);
    if (pa == pb) return pa;
    // divisibility fast paths cover most simplifications from mutation formulas
    if (pb.terms_.size() <= pa.terms_.size() && divides(pa, pb)) return pb;
    if (pa.terms_.size() < pb.terms_.size() && divides(pb, pa)) return pa;
    try {
        return heugcd(pa, pb, 0);
    } catch (const std::domain_error&) {
        return prs_gcd(pa, pb);
    }
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        const bool hasvar = std::any_of(e.begin(), e.end(), [](int32_t v) { return v != 0; });
        bool printed = false;
        if (!hasvar || ac != 1) {
            os << to_string(ac);
            printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            printed = true;
            os << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

} // namespace cluq
