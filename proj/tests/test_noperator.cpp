#include "doctest.h"

#include "cutjoin/noperator.hpp"
#include "oracles.hpp"

using namespace cutjoin;

namespace {
SymFun p(std::initializer_list<int> parts) { return SymFun::monomial(Partition(parts)); }
SymFun v(std::initializer_list<int> parts) {
    Partition l(parts);
    return SymFun::monomial(l, Rational(1) / Rational(z_factor(l)));
}
}  // namespace

TEST_CASE("apply: frozen rows checked against the single-step oracle") {
    NOOperator w2 = build_W2();
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            SymFun f = SymFun::monomial(lambda);
            CHECK(w2.apply(f) == oracles::apply_terms(w2.instantiate(n), f));
        }

    CHECK(w2.apply(p({4})) == SymFun::monomial(Partition({3, 1}), 4) +
                                  SymFun::monomial(Partition({2, 2}), 2));
    CHECK(build_E1().apply(p({3})) == SymFun::monomial(Partition({4}), 3));
    CHECK(w2.apply(p({1})).is_zero());
    CHECK(w2.apply(p({2})) == p({1, 1}));
    CHECK(w2.apply(p({1, 1})) == p({2}));
}

TEST_CASE("builder examples") {
    CHECK(build_cut().apply(p({3})) == SymFun::monomial(Partition({2, 1}), 3));
    CHECK(build_join().apply(p({2, 1})) == SymFun::monomial(Partition({3}), 2));
    CHECK(build_join().apply(p({1})).is_zero());
    CHECK(build_D().apply(p({3})) == SymFun::monomial(Partition({3}), 6));
    CHECK(build_E().apply(p({2, 1})) == SymFun::monomial(Partition({2, 1}), 3));
    CHECK(build_D().apply(p({1, 1, 1})).is_zero());
    CHECK(build_E1().apply(p({1})) == p({2}));
    CHECK(build_E1().apply(p({2, 1})) ==
          SymFun::monomial(Partition({3, 1}), 2) + SymFun::monomial(Partition({2, 2}), 1));
}

TEST_CASE("W2 on v[2,1,1] reproduces the degree-4 row") {
    SymFun image = build_W2().apply(v({2, 1, 1}));
    SymFun expected = v({3, 1}) * 3 + v({2, 2}) * 2 + v({1, 1, 1, 1}) * 6;
    CHECK(image == expected);
}

TEST_CASE("compose: one contraction") {
    NOOperator d2 = NOOperator::finite({{Rational(1), Partition{}, Partition({2})}});
    NOOperator m2 = build_p_mult(2);
    NOOperator c = compose(d2, m2, 8);
    std::vector<NOTerm> expected{{Rational(1), Partition{}, Partition{}},
                                 {Rational(1), Partition({2}), Partition({2})}};
    CHECK(c.instantiate(8) == normalize_terms(expected));
}

TEST_CASE("compose: [E1, p_1] = p_2 as operators") {
    NOOperator lhs = commutator(build_E1(), build_p_mult(1), 8);
    CHECK(lhs.instantiate(8) == build_p_mult(2).instantiate(8));
}

TEST_CASE("compose: diagonal operators commute") {
    NOOperator c = commutator(build_D(), build_E(), 8);
    CHECK(c.instantiate(8).empty());
}

TEST_CASE("compose window validation") {
    NOOperator w1 = hierarchy(1, 6);
    CHECK_THROWS_AS(compose(build_W2(), w1, 8), std::invalid_argument);
    CHECK_THROWS_AS(w1.apply(p({3, 2, 2})), std::invalid_argument);  // degree 7 > window
}

TEST_CASE("compose associativity via application, degree <= 6") {
    NOOperator a = build_W2(), b = build_E1(), c = build_cut();
    int w = 8;
    NOOperator ab_c = compose(compose(a, b, w + 1), c, w);
    NOOperator a_bc = compose(a, compose(b, c, w), w);
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            SymFun f = SymFun::monomial(lambda);
            CHECK(ab_c.apply(f) == a_bc.apply(f));
        }
}

TEST_CASE("commutator: [W2, p_1] = E1 and [E, A] = deg(A) A") {
    NOOperator e1 = commutator(build_W2(), build_p_mult(1), 10);
    CHECK(e1.instantiate(10) == build_E1().instantiate(10));

    // grading: [E, W2] = 0, [E, E1] = E1 on inputs of degree <= 8
    NOOperator ew = commutator(build_E(), build_W2(), 8);
    NOOperator ee1 = commutator(build_E(), build_E1(), 8);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            SymFun f = SymFun::monomial(lambda);
            CHECK(ew.apply(f).is_zero());
            CHECK(ee1.apply(f) == build_E1().apply(f));
        }
}

TEST_CASE("W0beta reductions and the extra diagonal") {
    NOOperator w2 = build_W2();
    NOOperator w010 = build_W0_beta(1, 0);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            SymFun f = SymFun::monomial(lambda);
            CHECK(w010.apply(f) == w2.apply(f));
        }
    // beta = 1: W0 - W2 = N * E; on p[2,1] the extra term is 3N p[2,1]
    Rational N(2);
    NOOperator w01N = build_W0_beta(1, N);
    CHECK(w01N.apply(p({2, 1})) - w2.apply(p({2, 1})) ==
          SymFun::monomial(Partition({2, 1}), 3 * N));
    // beta = 2, N = 0 on p[2]: termwise oracle value 2 p[1,1] - p[2]
    NOOperator w020 = build_W0_beta(2, 0);
    SymFun expected = SymFun::monomial(Partition({1, 1}), 2) + SymFun::monomial(Partition({2}), -1);
    CHECK(w020.apply(p({2})) == expected);
    CHECK(oracles::apply_terms(w020.instantiate(2), p({2})) == expected);
}

TEST_CASE("Ln_beta: structure and edge cases") {
    // L1 shifted contains -d_{t_3} = -3 d_{p_3} and the k=1 term
    // t_1 d_{t_2} = 2 p_1 d_{p_2}
    NOOperator l1 = build_Ln_beta(1, Rational(1, 2), Rational(3), true);
    auto terms = l1.instantiate(3);
    bool has_gaussian = false, has_k1 = false;
    for (const auto& t : terms) {
        if (t.create == Partition{} && t.annihilate == Partition({3}) && t.coeff == -3)
            has_gaussian = true;
        if (t.create == Partition({1}) && t.annihilate == Partition({2}) && t.coeff == 2)
            has_k1 = true;
    }
    CHECK(has_gaussian);
    CHECK(has_k1);

    // L_{-1} unshifted annihilates constants (every kept index >= 1)
    CHECK(build_Ln_beta(-1, 2, 3, false).apply(SymFun::one()).is_zero());
    // shifted L_{-1} picks up the zero mode N t_1
    CHECK(build_Ln_beta(-1, 2, 3, true).apply(SymFun::one()) ==
          SymFun::monomial(Partition({1}), 3));
    CHECK_THROWS_AS(build_Ln_beta(-2, 1, 1, false), std::invalid_argument);

    // oracle cross-check on all p_lambda of degree <= 6
    for (int n : {-1, 0, 1, 2, 3}) {
        NOOperator ln = build_Ln_beta(n, Rational(2, 3), Rational(1, 2), true);
        for (int deg = 0; deg <= 6; ++deg)
            for (const auto& lambda : enumerate_partitions(deg)) {
                SymFun f = SymFun::monomial(lambda);
                CHECK(ln.apply(f) == oracles::apply_terms(ln.instantiate(deg), f));
            }
    }
}

TEST_CASE("hierarchy: first levels") {
    NOOperator w1 = hierarchy(1, 10);
    CHECK(w1.instantiate(10) == w1_closed_form(10));
    CHECK(w1.apply(p({1})) == p({1, 1}));
    CHECK(w1.apply(p({2})) == SymFun::monomial(Partition({2, 1}), 4));

    for (int n = 1; n <= 4; ++n) {
        NOOperator wn = hierarchy(n, 6);
        auto shift = wn.degree_shift();
        REQUIRE(shift.has_value());
        CHECK(*shift == n);
    }
    CHECK_THROWS_AS(hierarchy(0, 5), std::invalid_argument);

    // level 2 on p[2,1], worked out by hand through
    // [W1, E1] = W1(E1 p) - E1(W1 p)
    NOOperator w2nd = hierarchy(2, 8);
    SymFun expected = SymFun::monomial(Partition({5}), 4) +
                      SymFun::monomial(Partition({3, 1, 1}), 4) +
                      SymFun::monomial(Partition({2, 2, 1}), 4);
    CHECK(w2nd.apply(p({2, 1})) == expected);
}

TEST_CASE("ladder is parameter-free at N = 0 across beta") {
    // [W0^beta, p_1] = E1 for every beta when N = 0; with N it gains beta N p_1
    for (const Rational& beta : {Rational(1), Rational(2), Rational(1, 2), Rational(3)}) {
        NOOperator lhs = commutator(build_W0_beta(beta, 0), build_p_mult(1), 8);
        CHECK(lhs.instantiate(8) == build_E1().instantiate(8));
        Rational N(3, 2);
        NOOperator withn = commutator(build_W0_beta(beta, N), build_p_mult(1), 8);
        auto diff = withn.instantiate(8);
        for (auto& t : build_E1().instantiate(8)) {
            NOTerm neg = t;
            neg.coeff = -neg.coeff;
            diff.push_back(neg);
        }
        std::vector<NOTerm> expected{{beta * N, Partition({1}), Partition{}}};
        CHECK(normalize_terms(diff) == expected);
    }
}

TEST_CASE("homogeneous inputs map to homogeneous outputs with the reported shift") {
    std::vector<NOOperator> ops{build_cut(),    build_join(), build_W2(),
                                build_D(),      build_E(),    build_E1(),
                                build_W0_beta(Rational(2), Rational(1)),
                                build_Ln_beta(2, Rational(1, 2), Rational(1), false)};
    for (const auto& op : ops) {
        auto shift = op.degree_shift();
        REQUIRE(shift.has_value());
        for (int n = 0; n <= 7; ++n)
            for (const auto& lambda : enumerate_partitions(n)) {
                SymFun image = op.apply(SymFun::monomial(lambda));
                if (image.is_zero()) continue;
                CHECK(image.degrees() == std::set<int>{n + *shift});
            }
    }
    // the shifted Ln mixes -n and -(n+2): no uniform shift is reported
    CHECK_FALSE(build_Ln_beta(1, Rational(1), Rational(1), true).degree_shift().has_value());
}

TEST_CASE("schema instantiation consistency") {
    for (const NOOperator& op : {build_W2(), build_E1(), build_W0_beta(Rational(2), Rational(1)),
                                 build_Ln_beta(2, Rational(1, 2), Rational(1), true)}) {
        for (int n = 0; n <= 7; ++n)
            for (const auto& lambda : enumerate_partitions(n)) {
                SymFun f = SymFun::monomial(lambda);
                NOOperator finite = NOOperator::finite(op.instantiate(n));
                CHECK(op.apply(f) == finite.apply(f));
            }
    }
}

TEST_CASE("adjointness of cut and join under the classical Hall pairing") {
    NOOperator c = build_cut(), j = build_join();
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& mu : enumerate_partitions(n)) {
                SymFun f = SymFun::monomial(lambda), g = SymFun::monomial(mu);
                CHECK(hall_inner(c.apply(f), g, 1) == hall_inner(f, j.apply(g), 1));
            }
}

TEST_CASE("matrix_in_basis: the degree-4 normalized matrix") {
    OpMatrix m = matrix_in_basis(build_W2(), 4, MatrixBasis::NormalizedV);
    std::vector<std::vector<long>> expected{{0, 3, 4, 0, 0},
                                            {4, 0, 0, 4, 0},
                                            {2, 0, 0, 1, 0},
                                            {0, 3, 2, 0, 6},
                                            {0, 0, 0, 1, 0}};
    REQUIRE(m.entries.size() == 5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) CHECK(m.entries[i][j] == expected[i][j]);
}

TEST_CASE("matrix_in_basis: grading operator and rectangular shift") {
    OpMatrix e = matrix_in_basis(build_E(), 3, MatrixBasis::PowerSum);
    for (size_t i = 0; i < e.entries.size(); ++i)
        for (size_t j = 0; j < e.entries[i].size(); ++j)
            CHECK(e.entries[i][j] == (i == j ? Rational(3) : Rational(0)));

    OpMatrix r = matrix_in_basis(build_E1(), 2, MatrixBasis::PowerSum);
    CHECK(r.entries.size() == 2);
    CHECK(r.entries[0].size() == 3);
}

TEST_CASE("spectrum of the degree-4 matrix via the characteristic polynomial") {
    OpMatrix m = matrix_in_basis(build_W2(), 4, MatrixBasis::NormalizedV);
    RVector roots{Rational(6), Rational(2), Rational(0), Rational(-2), Rational(-6)};
    CHECK(charpoly(m.entries) == poly_from_roots(roots));
    // the spectrum equals the content sums over partitions of 4
    RVector contents;
    for (const auto& lambda : enumerate_partitions(4))
        contents.push_back(Rational(content_sum(lambda)));
    CHECK(charpoly(m.entries) == poly_from_roots(contents));
}
