#pragma once

#include "cluq/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cluq {

// Combinatorial seed: integer exchange matrix with a positive integer
// skew-symmetrizer. Indices are 0-based internally; all user-facing
// formats are 1-based.
class Seed {
public:
    Seed(IntMatrix epsilon, std::vector<long> d);

    int n() const { return epsilon_.n(); }
    const IntMatrix& epsilon() const { return epsilon_; }
    const std::vector<long>& d() const { return d_; }
    long eps(int i, int j) const { return epsilon_.at(i, j).get_si(); }

    // smallest positive N with eps_ij / d_j in (1/N)Z for all i, j
    int root_order() const { return N_; }
    long lcm_d() const;

    Rational eps_hat(int i, int j) const;   // eps_ij / d_j
    Integer eps_tilde(int i, int j) const;  // d_i * eps_ij

    bool operator==(const Seed& o) const { return epsilon_ == o.epsilon_ && d_ == o.d_; }
    bool operator!=(const Seed& o) const { return !(*this == o); }

    std::string str() const;
    std::string to_json() const;
    static Seed from_json(const std::string& text);

private:
    IntMatrix epsilon_;
    std::vector<long> d_;
    int N_;
};

struct DualSeed {
    IntMatrix epsilon_vee;
    std::vector<Rational> d_vee;
};

// Mutation of the exchange matrix in direction k (0-based); d is unchanged.
Seed mutate_exchange(const Seed& s, int k);

// Seed automorphism: eps'_{sigma(i) sigma(j)} = eps_{ij}, d'_{sigma(i)} = d_i.
// sigma[i] is the image of i (0-based).
Seed permute_seed(const Seed& s, const std::vector<int>& sigma);

DualSeed langlands_dual(const Seed& s);
IntMatrix mutate_matrix(const IntMatrix& eps, int k); // bare matrix mutation rule

enum class RelationKind { A1, A1xA1, A2, B2, G2 };

std::string relation_name(RelationKind k);
std::optional<RelationKind> relation_from_name(const std::string& name);

struct RelationSpec {
    RelationKind kind;
    int i = 0;       // mutation direction (A1: the only index)
    int j = -1;      // second index, unused for A1
    int p = 0;       // 0,1,2,3 for A1xA1, A2, B2, G2; -1 for A1
    int h = 0;       // Coxeter number 2,3,4,6 (A1: 0)
    // Length of the seed chain Gamma^(0..len-1) produced by relation_sequence.
    int chain_length() const;
};

// Classifies the (i,j) pair of s against the rank-2 relation hypotheses:
// eps_ij = -p * eps_ji and |eps_ij| = p for p in {0,1,2,3}. Returns nothing
// when no hypothesis matches.
std::optional<RelationSpec> detect_relation(const Seed& s, int i, int j);

RelationSpec a1_relation(const Seed& s, int k);

// One elementary step of a transformation word.
struct ElemStep {
    enum class Kind { Mutate, Permute } kind;
    int k = -1;                  // Mutate
    std::vector<int> sigma;      // Permute
    static ElemStep mutate(int k) { return {Kind::Mutate, k, {}}; }
    static ElemStep permute(std::vector<int> s) { return {Kind::Permute, -1, std::move(s)}; }
};

Seed apply_step(const Seed& s, const ElemStep& e);

struct RelationSequence {
    std::vector<Seed> seeds;       // Gamma^(0), Gamma^(1), ...
    bool closed = false;           // closure rule held at exchange-matrix level
    std::string closure_note;
    // The two branches as seed-index chains and the loop word whose
    // composite is the trivial transformation.
    std::vector<ElemStep> lhs_branch, rhs_branch, loop_word;
};

// Runs both mutation branches of the relation and checks the closure rule
// (A2: Gamma(3) = P_(ij) Gamma(5); B2: Gamma(3) = mu_j Gamma(5);
//  G2: Gamma(4) = mu_i Gamma(7)). Throws on closure failure.
RelationSequence relation_sequence(const Seed& s, const RelationSpec& r);

// Random skew-symmetrizable seed, |eps_ij| <= max_abs, d_i <= max_d.
Seed random_seed(int n, unsigned long rng_seed, long max_abs = 2, long max_d = 3);

// Canonical rank-2 seeds of the five relations, positively oriented.
Seed canonical_seed(RelationKind k);

// Embeds the canonical rank-2 block at indices (0,1) of an n x n seed and
// fills spectator entries randomly while keeping skew-symmetrizability.
Seed spectator_extended_seed(RelationKind k, int n, unsigned long rng_seed);

} // namespace cluq
