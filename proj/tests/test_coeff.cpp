#include "test_support.hpp"

#include <random>

#include "superbranch/coeff.hpp"

using namespace superbranch;

TEST_CASE("monomial multiplication") {
    CHECK(mono_mul({1, 1, 1}, {1, 0, 1}) == QMonomial{1, 1, 2});
    CHECK(mono_mul(QMonomial::zero(), {1, 3, 2}).is_zero());
    CHECK(mono_mul({1, 3, 2}, QMonomial::zero()) == QMonomial::zero());
    CHECK(mono_mul({-1, 2, 0}, {-1, 0, 1}) == QMonomial{1, 2, 1});
}

TEST_CASE("exact evaluation") {
    CHECK(eval_exact(QMonomial{1, 2, 1}, 2) == 4);
    CHECK(eval_exact(QMonomial{1, 2, 3}, 3) == 72);
    CHECK(eval_exact(QMonomial{-1, 0, 0}, 7) == -1);
    CHECK(eval_exact(QMonomial{1, -2, 1}, 2) == BigRational(1, 4));
    CHECK(eval_integer(QMonomial{1, 1, 1}, 2) == 2);
    CHECK_THROWS_AS(eval_integer(QMonomial{1, -1, 0}, 2), IntegralityError);
    // Large exponents stay exact.
    CHECK(eval_exact(QMonomial{1, 100, 0}, 2) == BigRational(BigInt(1) << 100));
}

TEST_CASE("canonical forms") {
    CHECK(to_string(canonicalize(mono_pow_t(1))) == "q - 1");
    CHECK(to_string(canonicalize(mono_pow_t(2))) == "q^2 - 2*q + 1");
    CHECK(QPolynomial{mono_pow_t(1), QMonomial::one()} == QPolynomial{mono_pow_q(1)});
    const QMonomial tq{1, 1, 1};
    CHECK(to_string(QPolynomial{tq, tq}.canonical()) == "2*q^2 - 2*q");
    CHECK(QPolynomial{}.canonical().is_zero());
    CHECK(QPolynomial{QMonomial{1, 0, 1}, QMonomial{-1, 0, 1}}.canonical().is_zero());
}

TEST_CASE("canonical form agrees with direct evaluation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        QPolynomial p;
        const int terms = static_cast<int>(rng() % 6);
        for (int i = 0; i < terms; ++i)
            p.add(QMonomial::make(rng() % 2 ? 1 : -1, static_cast<int>(rng() % 9) - 3, static_cast<int>(rng() % 7)));
        for (int q : {2, 3, 5}) CHECK(eval_exact(canonicalize(p), q) == eval_exact(p, q));
    }
}

TEST_CASE("multiplication laws") {
    std::mt19937 rng(11);
    auto draw = [&] {
        if (rng() % 7 == 0) return QMonomial::zero();
        return QMonomial::make(rng() % 2 ? 1 : -1, static_cast<int>(rng() % 7) - 2, static_cast<int>(rng() % 5));
    };
    for (int trial = 0; trial < 200; ++trial) {
        const QMonomial a = draw(), b = draw(), c = draw();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * QMonomial::zero()).is_zero());
        CHECK(a * QMonomial::one() == a);
    }
}

TEST_CASE("text rendering") {
    CHECK(to_string(QMonomial{1, 1, 2}) == "t^2*q");
    CHECK(to_string(QMonomial{1, 1, 1}) == "t*q");
    CHECK(to_string(QMonomial::one()) == "1");
    CHECK(to_string(QMonomial{-1, 1, 0}) == "-q");
    CHECK(to_string(QMonomial{1, 0, 3}) == "t^3");
    CHECK(to_string(QMonomial{1, 3, 0}) == "q^3");
    CHECK(to_string(QMonomial::zero()) == "0");
}

TEST_CASE("integrality guard") {
    CHECK_NOTHROW(require_integral(QMonomial{1, 0, 2}, "x"));
    CHECK_THROWS_AS(require_integral(QMonomial{1, -1, 2}, "x"), IntegralityError);
}

TEST_CASE("character combinations") {
    CharCombination c(3);
    c.insert(SetPartition::empty(3), QMonomial{1, 0, 1});
    c.insert(parse_partition("1-2", 3), QMonomial::zero());
    CHECK(c.size() == 1);
    CHECK(c.at(parse_partition("1-3", 3)).is_zero());
    CHECK_THROWS_AS(c.insert(SetPartition::empty(4), QMonomial::one()), DomainError);
    CHECK_THROWS(c.insert(SetPartition::empty(3), QMonomial::one()));
}
