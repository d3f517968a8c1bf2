#include "test_support.hpp"

#include "superbranch/supercharacter.hpp"

using namespace superbranch;

TEST_CASE("character values") {
    const int n = 3;
    CHECK(char_value(parse_partition("1-3", n), parse_partition("1-2", n)).is_zero());
    CHECK(char_value(parse_partition("1-3", n), parse_partition("2-3", n)).is_zero());
    CHECK(char_value(parse_partition("1-3", n), parse_partition("1-3", n)) == QMonomial{-1, 1, 0});
    for (const auto& m : enumerate_partitions(4)) CHECK(char_value(SetPartition::empty(4), m) == QMonomial::one());
    CHECK_THROWS_AS(char_value(SetPartition::empty(3), SetPartition::empty(4)), DomainError);
}

TEST_CASE("degrees") {
    CHECK(degree(SetPartition::empty(5)) == QMonomial::one());
    const SetPartition lam = parse_partition("1-4,2-6,3-5", 6);
    CHECK(degree(lam) == QMonomial{1, 6, 3});
    for (const auto& l : enumerate_partitions(5)) {
        CHECK(degree(l) == char_value(l, SetPartition::empty(5)));
        CHECK(eval_exact(degree(l), 2) >= 1);
    }
}

TEST_CASE("inner product formula") {
    const SetPartition lam = parse_partition("1-4,2-6,3-5", 6);
    CHECK(inner_product_formula(lam, lam) == QMonomial{1, 2, 3});
    CHECK(inner_product_formula(lam, SetPartition::empty(6)).is_zero());
    CHECK(inner_product_formula(SetPartition::empty(6), SetPartition::empty(6)) == QMonomial::one());
}

TEST_CASE("arc factorization agrees with the closed form") {
    for (int n = 0; n <= 5; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& l : all)
            for (const auto& m : all) CHECK(char_value_by_arcs(l, m) == char_value(l, m));
    }
    const SetPartition lam = parse_partition("1-4,2-6,3-5", 6);
    CHECK(char_value_by_arcs(lam, lam) == char_value(lam, lam));
}

TEST_CASE("values are polynomials in q") {
    for (int n = 0; n <= 6; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& l : all)
            for (const auto& m : all) {
                const QMonomial v = char_value(l, m);
                CHECK((v.is_zero() || v.eq >= 0));
            }
    }
}

// The supercharacters, scaled by degree over norm, sum to the regular
// character: Σ_λ deg(λ)² / ⟨χ^λ,χ^λ⟩ = |U_n| = q^{n(n−1)/2}.
TEST_CASE("degrees account for the regular character") {
    for (int n = 1; n <= 6; ++n)
        for (int q : {2, 3, 5}) {
            BigRational sum = 0;
            for (const auto& l : enumerate_partitions(n))
                sum += eval_exact(degree(l) * degree(l), q) / eval_exact(inner_product_formula(l, l), q);
            CHECK(sum == BigRational(boost::multiprecision::pow(BigInt(q), n * (n - 1) / 2)));
        }
}

TEST_CASE("superclass representatives") {
    const auto m = superclass_matrix(parse_partition("1-3,2-4", 4));
    CHECK(m == std::vector<int>{1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1});
}
