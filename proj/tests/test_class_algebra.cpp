#include "doctest.h"

#include "cutjoin/class_algebra.hpp"
#include "cutjoin/noperator.hpp"

using namespace cutjoin;

namespace {
CentralElement K(int n, std::initializer_list<int> parts) {
    return class_sum(n, Partition(parts));
}
}  // namespace

TEST_CASE("permutation plumbing") {
    Perm a = transposition(3, 0, 1);  // (12)
    Perm b{1, 2, 0};                  // (123)
    CHECK(cycle_type(b) == Partition({3}));
    CHECK(cycle_type(compose_perm(a, b)) == Partition({2, 1}));
    CHECK(compose_perm(a, inverse_perm(a)) == identity_perm(3));
}

TEST_CASE("context class sizes") {
    const auto& ctx = PermGroupContext::get(5);
    for (size_t i = 0; i < ctx.classes().size(); ++i)
        CHECK(ctx.class_size(static_cast<int>(i)) ==
              factorial(5) / z_factor(ctx.classes()[i]));
    CHECK_THROWS_AS(PermGroupContext(9), std::invalid_argument);
}

TEST_CASE("class_multiply examples") {
    CHECK(class_multiply(transposition_class_sum(3), K(3, {3})) ==
          ce_scale(K(3, {2, 1}), 2));
    CHECK(class_multiply(transposition_class_sum(2), K(2, {1, 1})) == K(2, {2}));
    CHECK(class_multiply(transposition_class_sum(3), K(3, {2, 1})) ==
          ce_add(ce_scale(K(3, {1, 1, 1}), 3), ce_scale(K(3, {3}), 3)));
    CHECK_THROWS_AS(class_multiply(K(2, {2}), K(3, {3})), std::invalid_argument);
}

TEST_CASE("class_multiply is commutative and associative, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        auto parts = enumerate_partitions(n);
        // spot-check a few triples rather than the full cube
        CentralElement a = class_sum(n, parts[0]);
        CentralElement b = class_sum(n, parts[parts.size() / 2]);
        CentralElement c = class_sum(n, parts.back());
        CHECK(class_multiply(a, b) == class_multiply(b, a));
        CHECK(class_multiply(class_multiply(a, b), c) ==
              class_multiply(a, class_multiply(b, c)));
    }
}

TEST_CASE("characteristic map") {
    CHECK(characteristic_map(K(3, {2, 1}), false) == SymFun::monomial(Partition({2, 1})));
    CHECK(characteristic_map(K(3, {2, 1}), true) ==
          SymFun::monomial(Partition({2, 1}), Rational(1, 2)));
    CentralElement zero;
    zero.n = 3;
    CHECK(characteristic_map(zero, true).is_zero());
}

TEST_CASE("normalized cut-join intertwining, n <= 6, with the n=3 unnormalized witness") {
    NOOperator w2 = build_W2();
    for (int n = 2; n <= 6; ++n) {
        CentralElement k2 = transposition_class_sum(n);
        for (const auto& lambda : enumerate_partitions(n)) {
            SymFun lhs = characteristic_map(class_multiply(k2, class_sum(n, lambda)), true);
            SymFun rhs = w2.apply(characteristic_map(class_sum(n, lambda), true));
            CHECK(lhs == rhs);
        }
    }
    // unnormalized fails at n=3, lambda=(3): 2 p[2,1] vs 3 p[2,1]
    SymFun lhs = characteristic_map(class_multiply(transposition_class_sum(3), K(3, {3})), false);
    SymFun rhs = w2.apply(characteristic_map(K(3, {3}), false));
    CHECK(lhs == SymFun::monomial(Partition({2, 1}), 2));
    CHECK(rhs == SymFun::monomial(Partition({2, 1}), 3));
}

TEST_CASE("normalized matrix at n=4 equals the degree-4 golden matrix") {
    // entries of K_[2] multiplication in the normalized class basis match
    // matrix_in_basis(W2, 4, v) row by row
    OpMatrix m = matrix_in_basis(build_W2(), 4, MatrixBasis::NormalizedV);
    auto parts = enumerate_partitions(4);
    CentralElement k2 = transposition_class_sum(4);
    for (size_t i = 0; i < parts.size(); ++i) {
        CentralElement prod = class_multiply(k2, class_sum(4, parts[i]));
        // v-coordinates of Phi'(K_[2] K_lambda) are the class coefficients
        auto coords = normalized_basis_coords(characteristic_map(prod, true));
        for (size_t j = 0; j < parts.size(); ++j) {
            auto it = coords.find(parts[j]);
            Rational got = it == coords.end() ? Rational(0) : it->second;
            CHECK(got == m.entries[i][j]);
        }
    }
}

TEST_CASE("raising map: scaled class-average") {
    // raw average of l(K_(1)) is K_(1,1); the (n+1) scale doubles it
    CHECK(raising_map(K(1, {1})) == ce_scale(K(2, {1, 1}), 2));
    // general coefficient (m_1(lambda) + 1) on K_{lambda u (1)}
    CHECK(raising_map(K(2, {2})) == K(3, {2, 1}));
    CHECK(raising_map(K(2, {1, 1})) == ce_scale(K(3, {1, 1, 1}), 3));
    CentralElement zero;
    zero.n = 2;
    CHECK(raising_map(zero).is_zero());
}

TEST_CASE("centered ladder: oracle-frozen values") {
    // scaled-average coefficients (m+1)(m_{m+1}(lambda)+1), computed by
    // S_{n+1} enumeration
    CHECK(centered_ladder(K(1, {1})) == ce_scale(K(2, {2}), 2));
    CHECK(centered_ladder(K(2, {1, 1})) == ce_scale(K(3, {2, 1}), 2));
    CHECK(centered_ladder(K(2, {2})) == ce_scale(K(3, {3}), 3));
}

TEST_CASE("centered_ladder equals jm_lifting on all class sums, n <= 6") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            CentralElement z = class_sum(n, lambda);
            CHECK(centered_ladder(z) == jm_lifting(z));
        }
}

TEST_CASE("ladder intertwines with E1 in the normalized basis, n <= 6") {
    NOOperator e1 = build_E1();
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            CentralElement z = class_sum(n, lambda);
            CHECK(characteristic_map(centered_ladder(z), true) ==
                  e1.apply(characteristic_map(z, true)));
        }
}

TEST_CASE("class-sum formula variant intertwines unnormalized and matches the bump expansion") {
    NOOperator e1 = build_E1();
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            CentralElement z = class_sum(n, lambda);
            CentralElement f = ladder_class_formula(z);
            CHECK(characteristic_map(f, false) == e1.apply(characteristic_map(z, false)));
            for (const auto& [mu, c] : f.coeffs) {
                // each target is a single-part bump of lambda
                bool found = false;
                for (int m = 1; m <= n && !found; ++m)
                    if (lambda.multiplicity(m) > 0 && bump(lambda, m) == mu) {
                        CHECK(c == Rational(m) * lambda.multiplicity(m));
                        found = true;
                    }
                CHECK(found);
            }
        }
}

TEST_CASE("raising and ladder caps") {
    auto full = enumerate_partitions(8);
    CHECK_THROWS_AS(raising_map(class_sum(8, full.front())), std::invalid_argument);
    CHECK_THROWS_AS(centered_ladder(class_sum(8, full.front())), std::invalid_argument);
    CHECK_THROWS_AS(jm_lifting(class_sum(8, full.front())), std::invalid_argument);
}

TEST_CASE("count_factorizations examples") {
    CHECK(count_factorizations(Partition({3}), 2) == 6);
    CHECK(count_factorizations(Partition({1, 1}), 0) == 1);
    CHECK(count_factorizations(Partition({2, 1}), 1) == 3);
    CHECK(count_factorizations(Partition({2}), 1) == 1);
    CHECK_THROWS_AS(count_factorizations(Partition({3, 2, 1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(count_factorizations(Partition({2}), 7), std::invalid_argument);
}

TEST_CASE("Hurwitz consistency: operator powers against enumeration, n <= 5, r <= 6") {
    NOOperator w2 = build_W2();
    for (int n = 1; n <= 5; ++n) {
        Partition ones(std::vector<int>(n, 1));
        const auto& ctx = PermGroupContext::get(n);
        SymFun v = SymFun::monomial(ones, Rational(1) / Rational(z_factor(ones)));
        for (int r = 0; r <= 6; ++r) {
            auto coords = normalized_basis_coords(v);
            for (const auto& mu : enumerate_partitions(n)) {
                auto it = coords.find(mu);
                Rational coeff = it == coords.end() ? Rational(0) : it->second;
                CHECK(coeff * Rational(ctx.class_size(ctx.class_index(mu))) ==
                      Rational(count_factorizations(mu, r)));
            }
            v = w2.apply(v);
        }
    }
}
