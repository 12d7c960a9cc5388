#pragma once

#include "cluq/ratexpr.hpp"
#include "cluq/seed.hpp"

namespace cluq {

enum class VarKind { A, X, D };

std::string var_kind_name(VarKind k);

// Cluster variables of one seed, expressed as rational functions in the
// INITIAL seed's variables (the pullback convention: the assignment for a
// mutated seed records mu* of its coordinates).
struct ClassicalVars {
    VarKind kind;
    int n;
    // A/X kind: n entries. D kind: B_1..B_n then X_1..X_n (2n entries).
    std::vector<RatExpr> vars;

    static ClassicalVars initial(VarKind kind, int n);
    std::vector<std::string> names() const;
    int field_vars() const { return kind == VarKind::D ? 2 * n : n; }

    const RatExpr& b(int i) const;      // D kind only
    const RatExpr& x(int i) const;      // X or D kind
    RatExpr x_tilde(const Seed& s, int i) const; // D kind: X_i * prod B_j^eps_ij
};

ClassicalVars mutate_classical(const ClassicalVars& v, const Seed& s, int k);
ClassicalVars permute_classical(const ClassicalVars& v, const std::vector<int>& sigma);

struct TrivialityReport {
    bool is_trivial = false;
    std::string witness; // first mismatching variable, empty when trivial
    std::vector<std::pair<std::string, bool>> per_variable;
};

// Applies the word to the initial assignment of the given kind and decides
// whether the composite is the identity cluster transformation.
TrivialityReport verify_trivial(const Seed& s, const std::vector<ElemStep>& word, VarKind kind);

// Word format: ["mu:1", "perm:2,1", ...] with 1-based indices.
std::vector<ElemStep> parse_word(const std::vector<std::string>& steps, int n);
std::string triviality_report_json(const TrivialityReport& r);

// Poisson bracket of the X- or D-torus determined by the seed, extended to
// rational functions by formal partial derivatives.
RatExpr poisson_bracket(const RatExpr& f, const RatExpr& g, const Seed& s, VarKind kind);

// Checks that mu_k intertwines the Poisson structures of s and mu_k(s).
bool verify_poisson_preserved(const Seed& s, int k, VarKind kind);

// Monomial-denominator test for the Laurent phenomenon spot check.
bool has_monomial_denominator(const RatExpr& e);

} // namespace cluq
