#include "cluq/seed.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace cluq {

namespace {

int compute_root_order(const IntMatrix& eps, const std::vector<long>& d) {
    long N = 1;
    for (int i = 0; i < eps.n(); ++i)
        for (int j = 0; j < eps.n(); ++j) {
            const long e = eps.at(i, j).get_si();
            if (e == 0) continue;
            const long dj = d[static_cast<size_t>(j)];
            N = std::lcm(N, dj / std::gcd(std::abs(e), dj)); // denominator of e/d_j
        }
    return static_cast<int>(N);
}

} // namespace

Seed::Seed(IntMatrix epsilon, std::vector<long> d) : epsilon_(std::move(epsilon)), d_(std::move(d)) {
    const int n = epsilon_.n();
    if (n < 1) throw std::invalid_argument("seed: rank must be at least 1");
    if (static_cast<int>(d_.size()) != n)
        throw std::invalid_argument("seed: skew-symmetrizer length differs from rank");
    for (int i = 0; i < n; ++i)
        if (d_[static_cast<size_t>(i)] <= 0)
            throw std::invalid_argument("seed: skew-symmetrizer entries must be positive (d_" +
                                        std::to_string(i + 1) + " = " +
                                        std::to_string(d_[static_cast<size_t>(i)]) + ")");
    for (int i = 0; i < n; ++i) {
        if (epsilon_.at(i, i) != 0)
            throw std::invalid_argument("seed: skew-symmetrizability violated: epsilon_" +
                                        std::to_string(i + 1) + std::to_string(i + 1) + " != 0");
        for (int j = 0; j < n; ++j) {
            // eps_ij / d_j = -eps_ji / d_i  <=>  d_i eps_ij = -d_j eps_ji
            if (Integer(d_[static_cast<size_t>(i)]) * epsilon_.at(i, j) !=
                -Integer(d_[static_cast<size_t>(j)]) * epsilon_.at(j, i))
                throw std::invalid_argument(
                    "seed: skew-symmetrizability violated at (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + "): epsilon_ij/d_j != -epsilon_ji/d_i");
        }
    }
    N_ = compute_root_order(epsilon_, d_);
}

long Seed::lcm_d() const {
    long m = 1;
    for (long di : d_) m = std::lcm(m, di);
    return m;
}

Rational Seed::eps_hat(int i, int j) const {
    return make_rational(epsilon_.at(i, j), Integer(d_[static_cast<size_t>(j)]));
}

Integer Seed::eps_tilde(int i, int j) const {
    return Integer(d_[static_cast<size_t>(i)]) * epsilon_.at(i, j);
}

std::string Seed::str() const {
    std::ostringstream os;
    os << "epsilon=" << epsilon_.str() << " d=[";
    for (size_t i = 0; i < d_.size(); ++i) os << (i ? "," : "") << d_[i];
    os << "]";
    return os.str();
}

std::string Seed::to_json() const {
    nlohmann::json j;
    j["n"] = n();
    auto& eps = j["epsilon"] = nlohmann::json::array();
    for (int i = 0; i < n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < n(); ++k) row.push_back(epsilon_.at(i, k).get_si());
        eps.push_back(row);
    }
    j["d"] = d_;
    return j.dump();
}

Seed Seed::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("seed: invalid JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("seed: missing integer field 'n'");
    if (!j.contains("epsilon") || !j["epsilon"].is_array())
        throw std::invalid_argument("seed: missing array field 'epsilon'");
    if (!j.contains("d") || !j["d"].is_array())
        throw std::invalid_argument("seed: missing array field 'd'");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("seed: rank must be at least 1");
    if (static_cast<int>(j["epsilon"].size()) != n)
        throw std::invalid_argument("seed: epsilon has " + std::to_string(j["epsilon"].size()) +
                                    " rows, expected " + std::to_string(n));
    IntMatrix eps(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = j["epsilon"][static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("seed: epsilon row " + std::to_string(i + 1) +
                                        " is not an array of length " + std::to_string(n));
        for (int k = 0; k < n; ++k) {
            if (!row[static_cast<size_t>(k)].is_number_integer())
                throw std::invalid_argument("seed: epsilon entries must be integers");
            eps.at(i, k) = row[static_cast<size_t>(k)].get<long>();
        }
    }
    if (static_cast<int>(j["d"].size()) != n)
        throw std::invalid_argument("seed: d has " + std::to_string(j["d"].size()) +
                                    " entries, expected " + std::to_string(n));
    std::vector<long> d;
    for (const auto& v : j["d"]) {
        if (!v.is_number_integer())
            throw std::invalid_argument("seed: d entries must be integers");
        d.push_back(v.get<long>());
    }
    return Seed(eps, d); // constructor reports skew-symmetrizability violations
}

IntMatrix mutate_matrix(const IntMatrix& eps, int k) {
    const int n = eps.n();
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out.at(i, j) = -eps.at(i, j);
            } else {
                const Integer &eik = eps.at(i, k), &ekj = eps.at(k, j);
                out.at(i, j) = eps.at(i, j) + (abs(eik) * ekj + eik * abs(ekj)) / 2;
            }
        }
    return out;
}

Seed mutate_exchange(const Seed& s, int k) {
    if (k < 0 || k >= s.n()) throw std::out_of_range("mutate_exchange: index out of range");
    Seed out(mutate_matrix(s.epsilon(), k), s.d());
    if (out.root_order() != s.root_order())
        throw std::logic_error("mutate_exchange: root order changed along mutation");
    return out;
}

Seed permute_seed(const Seed& s, const std::vector<int>& sigma) {
    const int n = s.n();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("permute_seed: permutation length differs from rank");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("permute_seed: not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
    IntMatrix eps(n);
    std::vector<long> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        d[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = s.d()[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j)
            eps.at(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]) = s.epsilon().at(i, j);
    }
    return Seed(eps, d);
}

DualSeed langlands_dual(const Seed& s) {
    const int n = s.n();
    DualSeed out;
    out.epsilon_vee = IntMatrix(n);
    out.d_vee.assign(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        out.d_vee[static_cast<size_t>(i)] = make_rational(1, s.d()[static_cast<size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            // eps^vee_ij = d_i d_j^{-1} eps_ij, equal to -eps_ji
            Rational v = Rational(s.d()[static_cast<size_t>(i)]) * Rational(s.epsilon().at(i, j)) /
                         Rational(s.d()[static_cast<size_t>(j)]);
            if (!is_integer(v)) throw std::logic_error("langlands_dual: non-integer dual entry");
            if (v != -Rational(s.epsilon().at(j, i)))
                throw std::logic_error("langlands_dual: characterizations disagree");
            out.epsilon_vee.at(i, j) = num(v);
        }
    }
    return out;
}

std::string relation_name(RelationKind k) {
    switch (k) {
        case RelationKind::A1: return "A1";
        case RelationKind::A1xA1: return "A1xA1";
        case RelationKind::A2: return "A2";
        case RelationKind::B2: return "B2";
        case RelationKind::G2: return "G2";
    }
    return "?";
}

std::optional<RelationKind> relation_from_name(const std::string& name) {
    if (name == "A1") return RelationKind::A1;
    if (name == "A1xA1" || name == "A1XA1" || name == "a1xa1") return RelationKind::A1xA1;
    if (name == "A2") return RelationKind::A2;
    if (name == "B2") return RelationKind::B2;
    if (name == "G2") return RelationKind::G2;
    return std::nullopt;
}

int RelationSpec::chain_length() const {
    switch (kind) {
        case RelationKind::A1: return 2;
        case RelationKind::A1xA1: return 4;
        case RelationKind::A2: return 6;
        case RelationKind::B2: return 6;
        case RelationKind::G2: return 8;
    }
    return 0;
}

std::optional<RelationSpec> detect_relation(const Seed& s, int i, int j) {
    if (i == j) throw std::invalid_argument("detect_relation: indices must differ");
    const long eij = s.eps(i, j), eji = s.eps(j, i);
    const long p = std::abs(eij);
    if (p > 3) return std::nullopt;
    if (eij != -p * eji) return std::nullopt;
    RelationSpec r;
    r.i = i;
    r.j = j;
    r.p = static_cast<int>(p);
    switch (p) {
        case 0: r.kind = RelationKind::A1xA1; r.h = 2; break;
        case 1: r.kind = RelationKind::A2; r.h = 3; break;
        case 2: r.kind = RelationKind::B2; r.h = 4; break;
        case 3: r.kind = RelationKind::G2; r.h = 6; break;
        default: return std::nullopt;
    }
    return r;
}

RelationSpec a1_relation(const Seed& s, int k) {
    if (k < 0 || k >= s.n()) throw std::out_of_range("a1_relation: index out of range");
    RelationSpec r;
    r.kind = RelationKind::A1;
    r.i = k;
    r.j = -1;
    r.p = -1;
    r.h = 0;
    return r;
}

Seed apply_step(const Seed& s, const ElemStep& e) {
    if (e.kind == ElemStep::Kind::Mutate) return mutate_exchange(s, e.k);
    return permute_seed(s, e.sigma);
}

namespace {

std::vector<int> transposition(int n, int a, int b) {
    std::vector<int> sigma(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) sigma[static_cast<size_t>(t)] = t;
    std::swap(sigma[static_cast<size_t>(a)], sigma[static_cast<size_t>(b)]);
    return sigma;
}

} // namespace

RelationSequence relation_sequence(const Seed& s, const RelationSpec& r) {
    RelationSequence out;
    const int i = r.i, j = r.j;
    auto push_chain = [&](const std::vector<int>& dirs) {
        for (int k : dirs) out.seeds.push_back(mutate_exchange(out.seeds.back(), k));
    };
    out.seeds.push_back(s);
    switch (r.kind) {
        case RelationKind::A1: {
            push_chain({i});
            Seed back = mutate_exchange(out.seeds[1], i);
            out.closed = back == s;
            out.closure_note = "mu_k(mu_k(Gamma)) = Gamma";
            out.lhs_branch = {ElemStep::mutate(i)};
            out.rhs_branch = {};
            out.loop_word = {ElemStep::mutate(i), ElemStep::mutate(i)};
            break;
        }
        case RelationKind::A1xA1: {
            push_chain({i, j});                        // Gamma1, Gamma2
            out.seeds.push_back(mutate_exchange(s, j)); // Gamma3
            Seed other = mutate_exchange(out.seeds[3], i);
            out.closed = other == out.seeds[2];
            out.closure_note = "mu_i(Gamma3) = Gamma2";
            out.lhs_branch = {ElemStep::mutate(i), ElemStep::mutate(j)};
            out.rhs_branch = {ElemStep::mutate(j), ElemStep::mutate(i)};
            out.loop_word = {ElemStep::mutate(i), ElemStep::mutate(j), ElemStep::mutate(i),
                             ElemStep::mutate(j)};
            break;
        }
        case RelationKind::A2: {
            push_chain({i, j, i});                      // Gamma1..3
            out.seeds.push_back(mutate_exchange(s, j)); // Gamma4
            out.seeds.push_back(mutate_exchange(out.seeds[4], i)); // Gamma5
            Seed permuted = permute_seed(out.seeds[5], transposition(s.n(), i, j));
            out.closed = permuted == out.seeds[3];
            out.closure_note = "P_(i j)(Gamma5) = Gamma3";
            const auto P = ElemStep::permute(transposition(s.n(), i, j));
            out.lhs_branch = {ElemStep::mutate(i), ElemStep::mutate(j), ElemStep::mutate(i)};
            out.rhs_branch = {ElemStep::mutate(j), ElemStep::mutate(i), P};
            out.loop_word = {ElemStep::mutate(i), ElemStep::mutate(j), ElemStep::mutate(i), P,
                             ElemStep::mutate(i), ElemStep::mutate(j)};
            break;
        }
        case RelationKind::B2: {
            push_chain({i, j, i});                      // Gamma1..3
            out.seeds.push_back(mutate_exchange(s, j)); // Gamma4
            out.seeds.push_back(mutate_exchange(out.seeds[4], i)); // Gamma5
            Seed closed = mutate_exchange(out.seeds[5], j);
            out.closed = closed == out.seeds[3];
            out.closure_note = "mu_j(Gamma5) = Gamma3";
            out.lhs_branch = {ElemStep::mutate(i), ElemStep::mutate(j), ElemStep::mutate(i)};
            out.rhs_branch = {ElemStep::mutate(j), ElemStep::mutate(i), ElemStep::mutate(j)};
            out.loop_word = {ElemStep::mutate(i), ElemStep::mutate(j), ElemStep::mutate(i),
                             ElemStep::mutate(j), ElemStep::mutate(i), ElemStep::mutate(j)};
            break;
        }
        case RelationKind::G2: {
            push_chain({i, j, i, j});                   // Gamma1..4
            out.seeds.push_back(mutate_exchange(s, j)); // Gamma5
            out.seeds.push_back(mutate_exchange(out.seeds[5], i)); // Gamma6
            out.seeds.push_back(mutate_exchange(out.seeds[6], j)); // Gamma7
            Seed closed = mutate_exchange(out.seeds[7], i);
            out.closed = closed == out.seeds[4];
            out.closure_note = "mu_i(Gamma7) = Gamma4";
            out.lhs_branch = {ElemStep::mutate(i), ElemStep::mutate(j), ElemStep::mutate(i),
                              ElemStep::mutate(j)};
            out.rhs_branch = {ElemStep::mutate(j), ElemStep::mutate(i), ElemStep::mutate(j),
                              ElemStep::mutate(i)};
            out.loop_word = {ElemStep::mutate(i), ElemStep::mutate(j), ElemStep::mutate(i),
                             ElemStep::mutate(j), ElemStep::mutate(i), ElemStep::mutate(j),
                             ElemStep::mutate(i), ElemStep::mutate(j)};
            break;
        }
    }
    if (!out.closed)
        throw std::logic_error("relation_sequence: closure failed (" + out.closure_note + ")");
    return out;
}

Seed random_seed(int n, unsigned long rng_seed, long max_abs, long max_d) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<long> dd(1, max_d);
    std::uniform_int_distribution<long> tt(-max_abs, max_abs);
    std::vector<long> d(static_cast<size_t>(n));
    for (auto& v : d) v = dd(rng);
    IntMatrix eps(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const long t = tt(rng);
            const long g = std::gcd(d[static_cast<size_t>(i)], d[static_cast<size_t>(j)]);
            eps.at(i, j) = t * (d[static_cast<size_t>(j)] / g);
            eps.at(j, i) = -t * (d[static_cast<size_t>(i)] / g);
        }
    return Seed(eps, d);
}

Seed canonical_seed(RelationKind k) {
    switch (k) {
        case RelationKind::A1:
        case RelationKind::A2:
            return Seed(IntMatrix::from_rows({{0, 1}, {-1, 0}}), {1, 1});
        case RelationKind::A1xA1:
            return Seed(IntMatrix::from_rows({{0, 0}, {0, 0}}), {1, 1});
        case RelationKind::B2:
            return Seed(IntMatrix::from_rows({{0, 2}, {-1, 0}}), {1, 2});
        case RelationKind::G2:
            return Seed(IntMatrix::from_rows({{0, 3}, {-1, 0}}), {1, 3});
    }
    throw std::logic_error("canonical_seed: bad kind");
}

Seed spectator_extended_seed(RelationKind k, int n, unsigned long rng_seed) {
    const Seed base = canonical_seed(k);
    if (n < 2) throw std::invalid_argument("spectator_extended_seed: rank must be >= 2");
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<long> dd(1, 2);
    std::uniform_int_distribution<long> tt(-2, 2);
    std::vector<long> d(static_cast<size_t>(n), 1);
    d[0] = base.d()[0];
    d[1] = base.d()[1];
    for (int i = 2; i < n; ++i) d[static_cast<size_t>(i)] = dd(rng);
    IntMatrix eps(n);
    eps.at(0, 1) = base.epsilon().at(0, 1);
    eps.at(1, 0) = base.epsilon().at(1, 0);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(2, i + 1); j < n; ++j) {
            // keep spectator entries within {-2..2}
            long a = 0, b = 0;
            for (int tries = 0; tries < 16; ++tries) {
                const long t = tt(rng);
                const long g = std::gcd(d[static_cast<size_t>(i)], d[static_cast<size_t>(j)]);
                a = t * (d[static_cast<size_t>(j)] / g);
                b = -t * (d[static_cast<size_t>(i)] / g);
                if (std::abs(a) <= 2 && std::abs(b) <= 2) break;
                a = b = 0;
            }
            eps.at(i, j) = a;
            eps.at(j, i) = b;
        }
    return Seed(eps, d);
}

} // namespace cluq
