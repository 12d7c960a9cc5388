#include "cluq/classical.hpp"

#include <json.hpp>

#include <sstream>

namespace cluq {

std::string var_kind_name(VarKind k) {
    switch (k) {
        case VarKind::A: return "A";
        case VarKind::X: return "X";
        case VarKind::D: return "D";
    }
    return "?";
}

ClassicalVars ClassicalVars::initial(VarKind kind, int n) {
    ClassicalVars v;
    v.kind = kind;
    v.n = n;
    const int m = v.field_vars();
    for (int i = 0; i < m; ++i) v.vars.push_back(RatExpr::variable(m, i));
    return v;
}

std::vector<std::string> ClassicalVars::names() const {
    std::vector<std::string> out;
    if (kind == VarKind::D) {
        for (int i = 0; i < n; ++i) out.push_back("B" + std::to_string(i + 1));
        for (int i = 0; i < n; ++i) out.push_back("X" + std::to_string(i + 1));
    } else {
        const char* base = kind == VarKind::A ? "A" : "X";
        for (int i = 0; i < n; ++i) out.push_back(base + std::to_string(i + 1));
    }
    return out;
}

const RatExpr& ClassicalVars::b(int i) const {
    if (kind != VarKind::D) throw std::logic_error("ClassicalVars: B variables exist only for D-seeds");
    return vars[static_cast<size_t>(i)];
}

const RatExpr& ClassicalVars::x(int i) const {
    if (kind == VarKind::A) throw std::logic_error("ClassicalVars: no X variables on A-seeds");
    return vars[static_cast<size_t>(kind == VarKind::D ? n + i : i)];
}

RatExpr ClassicalVars::x_tilde(const Seed& s, int i) const {
    RatExpr out = x(i);
    for (int j = 0; j < n; ++j) out = out * b(j).pow(s.eps(i, j));
    return out;
}

namespace {

// X-mutation: X'_k = X_k^{-1}, X'_i = X_i (1 + X_k^{sgn(-eps_ik)})^{-eps_ik}
RatExpr x_image(const std::vector<RatExpr>& xs, const Seed& s, int k, int i, int nfield) {
    if (i == k) return xs[static_cast<size_t>(k)].inverse();
    const long e = s.eps(i, k);
    const long sgn = -e >= 0 ? 1 : -1;
    RatExpr base = RatExpr::one(nfield) + xs[static_cast<size_t>(k)].pow(sgn);
    return xs[static_cast<size_t>(i)] * base.pow(-e);
}

} // namespace

ClassicalVars mutate_classical(const ClassicalVars& v, const Seed& s, int k) {
    if (k < 0 || k >= v.n) throw std::out_of_range("mutate_classical: index out of range");
    const int m = v.field_vars();
    ClassicalVars out = v;
    switch (v.kind) {
        case VarKind::A: {
            RatExpr plus = RatExpr::one(m), minus = RatExpr::one(m);
            for (int j = 0; j < v.n; ++j) {
                const long e = s.eps(k, j);
                if (e > 0) plus = plus * v.vars[static_cast<size_t>(j)].pow(e);
                if (e < 0) minus = minus * v.vars[static_cast<size_t>(j)].pow(-e);
            }
            out.vars[static_cast<size_t>(k)] = (plus + minus) / v.vars[static_cast<size_t>(k)];
            break;
        }
        case VarKind::X: {
            std::vector<RatExpr> nx;
            for (int i = 0; i < v.n; ++i) nx.push_back(x_image(v.vars, s, k, i, m));
            out.vars = std::move(nx);
            break;
        }
        case VarKind::D: {
            std::vector<RatExpr> xs(v.vars.begin() + v.n, v.vars.end());
            // B'_k = (Bminus + X_k Bplus) / (B_k (1 + X_k))
            RatExpr bplus = RatExpr::one(m), bminus = RatExpr::one(m);
            for (int j = 0; j < v.n; ++j) {
                const long e = s.eps(k, j);
                if (e > 0) bplus = bplus * v.b(j).pow(e);
                if (e < 0) bminus = bminus * v.b(j).pow(-e);
            }
            const RatExpr& xk = v.x(k);
            out.vars[static_cast<size_t>(k)] =
                (bminus + xk * bplus) / (v.b(k) * (RatExpr::one(m) + xk));
            for (int i = 0; i < v.n; ++i)
                out.vars[static_cast<size_t>(v.n + i)] = x_image(xs, s, k, i, m);
            break;
        }
    }
    return out;
}

ClassicalVars permute_classical(const ClassicalVars& v, const std::vector<int>& sigma) {
    ClassicalVars out = v;
    for (int i = 0; i < v.n; ++i) {
        const int si = sigma[static_cast<size_t>(i)];
        if (v.kind == VarKind::D) {
            out.vars[static_cast<size_t>(si)] = v.vars[static_cast<size_t>(i)];
            out.vars[static_cast<size_t>(v.n + si)] = v.vars[static_cast<size_t>(v.n + i)];
        } else {
            out.vars[static_cast<size_t>(si)] = v.vars[static_cast<size_t>(i)];
        }
    }
    return out;
}

TrivialityReport verify_trivial(const Seed& s, const std::vector<ElemStep>& word, VarKind kind) {
    Seed cur = s;
    ClassicalVars vars = ClassicalVars::initial(kind, s.n());
    for (const auto& step : word) {
        if (step.kind == ElemStep::Kind::Mutate) {
            vars = mutate_classical(vars, cur, step.k);
            cur = mutate_exchange(cur, step.k);
        } else {
            vars = permute_classical(vars, step.sigma);
            cur = permute_seed(cur, step.sigma);
        }
    }
    TrivialityReport rep;
    rep.is_trivial = cur == s;
    if (!rep.is_trivial) rep.witness = "exchange data";
    const ClassicalVars init = ClassicalVars::initial(kind, s.n());
    const auto names = init.names();
    for (size_t i = 0; i < vars.vars.size(); ++i) {
        const bool ok = vars.vars[i] == init.vars[i];
        rep.per_variable.emplace_back(names[i], ok);
        if (!ok && rep.witness.empty()) rep.witness = names[i];
    }
    rep.is_trivial = rep.witness.empty();
    return rep;
}

std::vector<ElemStep> parse_word(const std::vector<std::string>& steps, int n) {
    std::vector<ElemStep> out;
    for (const auto& s : steps) {
        if (s.rfind("mu:", 0) == 0) {
            const int k = std::stoi(s.substr(3));
            if (k < 1 || k > n) throw std::invalid_argument("word: mutation index out of range: " + s);
            out.push_back(ElemStep::mutate(k - 1));
        } else if (s.rfind("perm:", 0) == 0) {
            std::vector<int> sigma;
            std::stringstream ss(s.substr(5));
            std::string tok;
            while (std::getline(ss, tok, ',')) sigma.push_back(std::stoi(tok) - 1);
            if (static_cast<int>(sigma.size()) != n)
                throw std::invalid_argument("word: permutation length mismatch: " + s);
            out.push_back(ElemStep::permute(std::move(sigma)));
        } else {
            throw std::invalid_argument("word: unknown step '" + s + "'");
        }
    }
    return out;
}

std::string triviality_report_json(const TrivialityReport& r) {
    nlohmann::json j;
    j["is_trivial"] = r.is_trivial;
    j["witness"] = r.witness;
    auto& pv = j["per_variable"] = nlohmann::json::object();
    for (const auto& [name, ok] : r.per_variable) pv[name] = ok;
    return j.dump(2);
}

RatExpr poisson_bracket(const RatExpr& f, const RatExpr& g, const Seed& s, VarKind kind) {
    if (kind == VarKind::A) throw std::invalid_argument("poisson_bracket: A-tori carry a 2-form, not a bracket");
    const int n = s.n();
    const int m = kind == VarKind::D ? 2 * n : n;
    if (f.nvars() != m || g.nvars() != m)
        throw std::invalid_argument("poisson_bracket: expression lives in the wrong coordinate field");
    // Coordinate order: X_1..X_n for X-kind; B_1..B_n, X_1..X_n for D-kind.
    auto coord = [&](int u) { return RatExpr::variable(m, u); };
    auto pair_bracket = [&](int u, int v) -> RatExpr {
        const bool ub = kind == VarKind::D && u < n, vb = kind == VarKind::D && v < n;
        const int ui = kind == VarKind::D ? (ub ? u : u - n) : u;
        const int vi = kind == VarKind::D ? (vb ? v : v - n) : v;
        if (ub && vb) return RatExpr(m); // {B,B} = 0
        if (!ub && !vb) {
            const Rational w = s.eps_hat(ui, vi);
            return RatExpr::constant(m, w) * coord(u) * coord(v);
        }
        // mixed: {X_i, B_j} = d_i^{-1} delta_ij X_i B_j
        const int xi = ub ? vi : ui, bj = ub ? ui : vi;
        if (xi != bj) return RatExpr(m);
        RatExpr val = RatExpr::constant(m, make_rational(1, s.d()[static_cast<size_t>(xi)])) *
                      coord(u) * coord(v);
        return ub ? -val : val; // {B_j, X_i} = -{X_i, B_j}
    };
    RatExpr acc(m);
    for (int u = 0; u < m; ++u) {
        RatExpr fu = f.partial(u);
        if (fu.is_zero()) continue;
        for (int v = 0; v < m; ++v) {
            if (u == v) continue;
            RatExpr gv = g.partial(v);
            if (gv.is_zero()) continue;
            RatExpr pb = pair_bracket(u, v);
            if (pb.is_zero()) continue;
            acc = acc + fu * gv * pb;
        }
    }
    return acc;
}

bool verify_poisson_preserved(const Seed& s, int k, VarKind kind) {
    if (kind == VarKind::A) throw std::invalid_argument("verify_poisson_preserved: X or D kind only");
    const Seed t = mutate_exchange(s, k);
    const ClassicalVars img = mutate_classical(ClassicalVars::initial(kind, s.n()), s, k);
    const int n = s.n();
    const int m = img.field_vars();
    // {mu* u', mu* v'} must equal mu* of {u', v'} for all coordinate pairs.
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            const RatExpr lhs = poisson_bracket(img.vars[static_cast<size_t>(u)],
                                                img.vars[static_cast<size_t>(v)], s, kind);
            RatExpr rhs(m);
            const bool ub = kind == VarKind::D && u < n, vb = kind == VarKind::D && v < n;
            const int ui = kind == VarKind::D ? (ub ? u : u - n) : u;
            const int vi = kind == VarKind::D ? (vb ? v : v - n) : v;
            if (ub && vb) {
                rhs = RatExpr(m);
            } else if (!ub && !vb) {
                rhs = RatExpr::constant(m, t.eps_hat(ui, vi)) * img.vars[static_cast<size_t>(u)] *
                      img.vars[static_cast<size_t>(v)];
            } else {
                const int xi = ub ? vi : ui;
                const int bj = ub ? ui : vi;
                if (xi == bj) {
                    rhs = RatExpr::constant(m, make_rational(1, t.d()[static_cast<size_t>(xi)])) *
                          img.vars[static_cast<size_t>(u)] * img.vars[static_cast<size_t>(v)];
                    if (ub) rhs = -rhs;
                }
            }
            if (lhs != rhs) return false;
        }
    return true;
}

bool has_monomial_denominator(const RatExpr& e) {
    return e.denominator().terms().size() <= 1;
}

} // namespace cluq
