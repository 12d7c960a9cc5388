#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cluq/classical.hpp"

using namespace cluq;

namespace {

Seed a2() { return canonical_seed(RelationKind::A2); }

std::vector<ElemStep> pentagon_word(const Seed& s, int i, int j) {
    std::vector<ElemStep> w;
    std::vector<int> sigma(static_cast<size_t>(s.n()));
    for (int t = 0; t < s.n(); ++t) sigma[static_cast<size_t>(t)] = t;
    std::swap(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]);
    for (int r = 0; r < 5; ++r) {
        w.push_back(ElemStep::mutate(i));
        w.push_back(ElemStep::permute(sigma));
    }
    return w;
}

std::vector<ElemStep> hgon_word(const Seed& s, int i, int j, int reps) {
    std::vector<ElemStep> w;
    std::vector<int> sigma(static_cast<size_t>(s.n()));
    for (int t = 0; t < s.n(); ++t) sigma[static_cast<size_t>(t)] = t;
    std::swap(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]);
    for (int r = 0; r < reps; ++r) {
        w.push_back(ElemStep::mutate(i));
        w.push_back(ElemStep::permute(sigma));
    }
    return w;
}

} // namespace

TEST_CASE("X-mutation on the A2 seed") {
    ClassicalVars v = mutate_classical(ClassicalVars::initial(VarKind::X, 2), a2(), 0);
    RatExpr x1 = RatExpr::variable(2, 0), x2 = RatExpr::variable(2, 1);
    CHECK(v.vars[0] == x1.inverse());
    CHECK(v.vars[1] == x2 * (RatExpr::one(2) + x1));
}

TEST_CASE("A-mutation on the A2 seed and back") {
    ClassicalVars v0 = ClassicalVars::initial(VarKind::A, 2);
    ClassicalVars v1 = mutate_classical(v0, a2(), 0);
    RatExpr a1 = RatExpr::variable(2, 0), a2v = RatExpr::variable(2, 1);
    CHECK(v1.vars[0] == (a2v + RatExpr::one(2)) / a1);
    CHECK(v1.vars[1] == a2v);
    // mutating back recovers A_1
    ClassicalVars v2 = mutate_classical(v1, mutate_exchange(a2(), 0), 0);
    CHECK(v2.vars[0] == a1);
}

TEST_CASE("D-mutation B formula on the A2 seed") {
    ClassicalVars v = mutate_classical(ClassicalVars::initial(VarKind::D, 2), a2(), 0);
    const int m = 4;
    RatExpr b1 = RatExpr::variable(m, 0), b2 = RatExpr::variable(m, 1);
    RatExpr x1 = RatExpr::variable(m, 2);
    CHECK(v.vars[0] == (RatExpr::one(m) + x1 * b2) / (b1 * (RatExpr::one(m) + x1)));
    CHECK(v.vars[1] == b2);
}

TEST_CASE("tilde variables multiply B powers into X") {
    ClassicalVars v = ClassicalVars::initial(VarKind::D, 2);
    RatExpr xt = v.x_tilde(a2(), 0); // X_1 * B_2
    CHECK(xt == RatExpr::variable(4, 2) * RatExpr::variable(4, 1));
}

TEST_CASE("twice-flip is trivial for all kinds") {
    for (unsigned long sd = 0; sd < 12; ++sd) {
        Seed s = random_seed(3, sd);
        for (int k = 0; k < 3; ++k) {
            std::vector<ElemStep> w = {ElemStep::mutate(k), ElemStep::mutate(k)};
            for (VarKind kind : {VarKind::A, VarKind::X, VarKind::D}) {
                auto rep = verify_trivial(s, w, kind);
                CHECK(rep.is_trivial);
            }
        }
    }
}

TEST_CASE("pentagon word is trivial on the A2 seed for all kinds") {
    for (VarKind kind : {VarKind::A, VarKind::X, VarKind::D}) {
        auto rep = verify_trivial(a2(), pentagon_word(a2(), 0, 1), kind);
        CHECK(rep.is_trivial);
    }
}

TEST_CASE("single mutation is not trivial and names a witness") {
    auto rep = verify_trivial(a2(), {ElemStep::mutate(0)}, VarKind::A);
    CHECK(!rep.is_trivial);
    CHECK(rep.witness == "A1");
}

TEST_CASE("(h+2)-gon words on canonical rank-2 seeds, all kinds") {
    struct Row { RelationKind k; int reps; };
    for (const Row& row : {Row{RelationKind::A1xA1, 4}, Row{RelationKind::A2, 5},
                           Row{RelationKind::B2, 6}, Row{RelationKind::G2, 8}}) {
        Seed s = canonical_seed(row.k);
        for (VarKind kind : {VarKind::A, VarKind::X, VarKind::D}) {
            auto rep = verify_trivial(s, hgon_word(s, 0, 1, row.reps), kind);
            INFO(relation_name(row.k), " kind ", var_kind_name(kind));
            CHECK(rep.is_trivial);
        }
    }
}

TEST_CASE("Laurent property along short A-words") {
    Seed s = a2();
    ClassicalVars v = ClassicalVars::initial(VarKind::A, 2);
    Seed cur = s;
    for (int step = 0; step < 8; ++step) {
        const int k = step % 2;
        v = mutate_classical(v, cur, k);
        cur = mutate_exchange(cur, k);
        for (const auto& e : v.vars) CHECK(has_monomial_denominator(e));
    }
}

TEST_CASE("poisson bracket basics") {
    Seed s = a2();
    RatExpr x1 = RatExpr::variable(2, 0), x2 = RatExpr::variable(2, 1);
    CHECK(poisson_bracket(x1, x2, s, VarKind::X) == x1 * x2); // eps_hat_12 = 1
    CHECK(poisson_bracket(x1, x1, s, VarKind::X).is_zero());

    RatExpr b1 = RatExpr::variable(4, 0), b2 = RatExpr::variable(4, 1);
    CHECK(poisson_bracket(b1, b2, s, VarKind::D).is_zero());
    RatExpr xx1 = RatExpr::variable(4, 2);
    CHECK(poisson_bracket(xx1, b1, s, VarKind::D) == xx1 * b1); // d_1 = 1
}

TEST_CASE("poisson bracket antisymmetry and Leibniz on random expressions") {
    Seed s = canonical_seed(RelationKind::B2);
    RatExpr x1 = RatExpr::variable(2, 0), x2 = RatExpr::variable(2, 1);
    RatExpr f = x1 * x2 + x1, g = x2.pow(2) + RatExpr::one(2), h = x1 + x2;
    CHECK(poisson_bracket(f, g, s, VarKind::X) == -poisson_bracket(g, f, s, VarKind::X));
    CHECK(poisson_bracket(f, g * h, s, VarKind::X) ==
          poisson_bracket(f, g, s, VarKind::X) * h + g * poisson_bracket(f, h, s, VarKind::X));
}

TEST_CASE("mutation preserves the Poisson structure") {
    CHECK(verify_poisson_preserved(a2(), 0, VarKind::X));
    CHECK(verify_poisson_preserved(canonical_seed(RelationKind::B2), 0, VarKind::X));
    CHECK(verify_poisson_preserved(canonical_seed(RelationKind::B2), 1, VarKind::D));
    for (unsigned long sd = 0; sd < 6; ++sd) {
        Seed s = random_seed(3, sd);
        for (int k = 0; k < 3; ++k) {
            CHECK(verify_poisson_preserved(s, k, VarKind::X));
            CHECK(verify_poisson_preserved(s, k, VarKind::D));
        }
    }
}

TEST_CASE("word parser") {
    auto w = parse_word({"mu:1", "perm:2,1"}, 2);
    REQUIRE(w.size() == 2);
    CHECK(w[0].kind == ElemStep::Kind::Mutate);
    CHECK(w[0].k == 0);
    CHECK(w[1].sigma == std::vector<int>{1, 0});
    CHECK_THROWS(parse_word({"mu:3"}, 2));
    CHECK_THROWS(parse_word({"rot:1"}, 2));
}
