#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cluq/seed.hpp"

using namespace cluq;

namespace {
Seed a2() { return canonical_seed(RelationKind::A2); }
Seed b2() { return canonical_seed(RelationKind::B2); }
Seed g2() { return canonical_seed(RelationKind::G2); }
} // namespace

TEST_CASE("mutate_exchange on the A2 seed") {
    Seed s = a2();
    Seed m = mutate_exchange(s, 0);
    CHECK(m.epsilon() == IntMatrix::from_rows({{0, -1}, {1, 0}}));
    CHECK(m.d() == s.d());
}

TEST_CASE("mutate_exchange B2 sign flip") {
    Seed s = b2();
    Seed m = mutate_exchange(s, 0);
    CHECK(m.eps(0, 1) == -2);
}

TEST_CASE("mutate_exchange rank-3 off-direction entries") {
    Seed s(IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), {1, 1, 1});
    Seed m = mutate_exchange(s, 1);
    CHECK(m.epsilon() == IntMatrix::from_rows({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST_CASE("mutation is an involution on exchange matrices") {
    for (unsigned long sd = 0; sd < 40; ++sd) {
        Seed s = random_seed(4, sd);
        for (int k = 0; k < 4; ++k) {
            CHECK(mutate_exchange(mutate_exchange(s, k), k) == s);
        }
    }
}

TEST_CASE("mutation preserves skew-symmetrizability, d and root order") {
    for (unsigned long sd = 100; sd < 140; ++sd) {
        Seed s = random_seed(3, sd, 3, 4);
        Seed cur = s;
        for (int step = 0; step < 6; ++step) {
            cur = mutate_exchange(cur, step % 3); // constructor asserts invariants
            CHECK(cur.d() == s.d());
            CHECK(cur.root_order() == s.root_order());
            for (int i = 0; i < 3; ++i) CHECK(cur.eps(i, i) == 0);
        }
    }
}

TEST_CASE("permute_seed identity and transposition") {
    Seed s = a2();
    CHECK(permute_seed(s, {0, 1}) == s);
    Seed t = permute_seed(s, {1, 0});
    CHECK(t.epsilon() == IntMatrix::from_rows({{0, -1}, {1, 0}}));
    CHECK_THROWS_AS(permute_seed(s, {0, 0}), std::invalid_argument);
}

TEST_CASE("permutations compose") {
    Seed s = random_seed(3, 5);
    std::vector<int> sig = {1, 2, 0}, gam = {2, 0, 1};
    std::vector<int> comp(3);
    for (int i = 0; i < 3; ++i) comp[static_cast<size_t>(i)] = sig[static_cast<size_t>(gam[static_cast<size_t>(i)])];
    CHECK(permute_seed(permute_seed(s, gam), sig) == permute_seed(s, comp));
}

TEST_CASE("langlands dual of the B2 seed") {
    DualSeed d = langlands_dual(b2());
    CHECK(d.epsilon_vee == IntMatrix::from_rows({{0, 1}, {-2, 0}}));
    CHECK(d.d_vee[0] == Rational(1));
    CHECK(d.d_vee[1] == make_rational(1, 2));
}

TEST_CASE("langlands dual fixes skew-symmetric seeds and is involutive") {
    Seed s = a2();
    DualSeed d = langlands_dual(s);
    CHECK(d.epsilon_vee == s.epsilon());
    // dual of dual returns the original data
    for (unsigned long sd = 0; sd < 30; ++sd) {
        Seed r = random_seed(3, sd, 2, 3);
        DualSeed dual = langlands_dual(r);
        // build the double dual by hand: (eps^vee)^vee_ij = d^vee_i (d^vee_j)^-1 eps^vee_ij
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rational dd = dual.d_vee[static_cast<size_t>(i)] / dual.d_vee[static_cast<size_t>(j)] *
                              Rational(dual.epsilon_vee.at(i, j));
                CHECK(dd == Rational(r.epsilon().at(i, j)));
            }
    }
}

TEST_CASE("duality commutes with mutation") {
    for (unsigned long sd = 50; sd < 80; ++sd) {
        Seed s = random_seed(3, sd, 2, 3);
        for (int k = 0; k < 3; ++k) {
            DualSeed dual_then_mut = langlands_dual(s);
            IntMatrix lhs = mutate_matrix(dual_then_mut.epsilon_vee, k);
            IntMatrix rhs = langlands_dual(mutate_exchange(s, k)).epsilon_vee;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("detect_relation classifies the paper hypotheses") {
    Seed z(IntMatrix::from_rows({{0, 0}, {0, 0}}), {1, 1});
    auto r0 = detect_relation(z, 0, 1);
    REQUIRE(r0.has_value());
    CHECK(r0->kind == RelationKind::A1xA1);

    auto rb = detect_relation(b2(), 0, 1);
    REQUIRE(rb.has_value());
    CHECK(rb->kind == RelationKind::B2);
    CHECK(rb->h == 4);

    Seed bad(IntMatrix::from_rows({{0, 2}, {-3, 0}}), {3, 2});
    CHECK(!detect_relation(bad, 0, 1).has_value());
}

TEST_CASE("relation_sequence A2 matches the sign chain of the proof") {
    auto r = detect_relation(a2(), 0, 1);
    REQUIRE(r.has_value());
    RelationSequence seq = relation_sequence(a2(), *r);
    REQUIRE(seq.seeds.size() == 6);
    CHECK(seq.closed);
    const long expect[] = {1, -1, 1, -1, -1, 1};
    for (int t = 0; t < 6; ++t) CHECK(seq.seeds[static_cast<size_t>(t)].eps(0, 1) == expect[t]);
}

TEST_CASE("relation_sequence closures for A1 and G2") {
    RelationSequence a1 = relation_sequence(a2(), a1_relation(a2(), 0));
    CHECK(a1.seeds.size() == 2);
    CHECK(a1.closed);

    auto rg = detect_relation(g2(), 0, 1);
    REQUIRE(rg.has_value());
    RelationSequence seq = relation_sequence(g2(), *rg);
    CHECK(seq.seeds.size() == 8);
    CHECK(seq.closed);
    CHECK(seq.loop_word.size() == 8);
}

TEST_CASE("seed json round trip and validation messages") {
    Seed s = b2();
    Seed t = Seed::from_json(s.to_json());
    CHECK(t == s);

    CHECK_THROWS_WITH_AS(Seed::from_json(R"({"n":2,"epsilon":[[0,1],[-1,0]],"d":[1,2]})"),
                         doctest::Contains("skew-symmetrizability"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Seed::from_json(R"({"n":2,"epsilon":[[0,1]],"d":[1,1]})"),
                         doctest::Contains("epsilon"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Seed::from_json(R"({"n":2,"epsilon":[[0,1],[-1,0]],"d":[1,0]})"),
                         doctest::Contains("positive"), std::invalid_argument);
}

TEST_CASE("root order examples") {
    CHECK(a2().root_order() == 1);
    CHECK(b2().root_order() == 1);  // eps_12/d_2 = 1, eps_21/d_1 = -1
    Seed s(IntMatrix::from_rows({{0, 1}, {-2, 0}}), {2, 1});
    CHECK(s.root_order() == 1);
    Seed t(IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -3, 0}}), {3, 3, 1});
    CHECK(t.root_order() == 3); // eps_12/d_2 = 1/3
    // N divides lcm(d)
    for (unsigned long sd = 0; sd < 50; ++sd) {
        Seed r = random_seed(4, sd, 3, 4);
        CHECK(r.lcm_d() % r.root_order() == 0);
    }
}

TEST_CASE("spectator extension keeps the canonical block") {
    for (unsigned long sd = 0; sd < 20; ++sd) {
        Seed s = spectator_extended_seed(RelationKind::G2, 3, sd);
        CHECK(s.n() == 3);
        CHECK(s.eps(0, 1) == 3);
        CHECK(s.eps(1, 0) == -1);
        CHECK(s.d()[0] == 1);
        CHECK(s.d()[1] == 3);
        auto r = detect_relation(s, 0, 1);
        REQUIRE(r.has_value());
        CHECK(r->kind == RelationKind::G2);
    }
}
