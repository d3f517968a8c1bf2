#include "test_support.hpp"

#include "superbranch/branching.hpp"
#include "superbranch/supercharacter.hpp"

using namespace superbranch;

namespace {

SetPartition P(const char* s, int n) { return parse_partition(s, n); }

bool same_poly(const QMonomial& a, const QMonomial& b) { return QPolynomial{a} == QPolynomial{b}; }

// Every admissible anchor (i, l) for λ.
template <class F> void for_each_anchor(const SetPartition& lambda, F&& fn) {
    for (int i = 1; i <= lambda.n(); ++i) {
        if (lambda.has_left(i)) continue;
        for (int l = i + 1; l <= lambda.n(); ++l) fn(i, l);
    }
}

} // namespace

TEST_CASE("shell recognition") {
    auto a = is_shell({{2, 6}}, {}, 6);
    REQUIRE(a);
    CHECK(a->s == 1);
    CHECK(a->s_prime == 1);
    CHECK(a->width() == 4);
    CHECK(whorl_count(*a) == 1);

    auto b = is_shell({{2, 6}, {3, 5}}, {{2, 5}, {3, 4}}, 6);
    REQUIRE(b);
    CHECK(b->s == 2);
    CHECK(b->s_prime == 3);
    CHECK(b->anchor == Arc{2, 6});

    CHECK_FALSE(is_shell({{2, 6}}, {{3, 5}}, 6));
    CHECK_FALSE(is_shell({}, {}, 6));

    auto c = is_shell({{1, 5}, {2, 4}}, {{1, 4}, {2, 3}}, 5);
    REQUIRE(c);
    CHECK(whorl_count(*c) == 2);
    auto d = is_shell({{1, 5}, {2, 4}}, {{1, 4}}, 5);
    REQUIRE(d);
    CHECK(d->s == 2);
    CHECK(d->s_prime == 2);
    CHECK(whorl_count(*d) == 2);
}

TEST_CASE("shell set examples") {
    CHECK(shell_set(P("1-4,3-5", 6), 2, 6) ==
          std::vector<SetPartition>{P("1-4,2-3,3-5", 6), P("1-4,2-5", 6), P("1-4,3-5", 6)});
    CHECK(shell_set(SetPartition::empty(4), 2, 3) == std::vector<SetPartition>{SetPartition::empty(4)});
    CHECK(shell_set(P("2-3", 4), 1, 4) == std::vector<SetPartition>{P("1-2,2-3", 4), P("1-3", 4), P("2-3", 4)});
    CHECK_THROWS_AS(shell_set(P("1-3", 4), 1, 4), DomainError);
    CHECK_THROWS_AS(shell_set(P("2-3", 4), 3, 3), DomainError);
}

TEST_CASE("shell set recursion agrees with brute force") {
    for (int n = 2; n <= 6; ++n)
        for_each_partition(n, [](const SetPartition& lambda) {
            for_each_anchor(lambda, [&](int i, int l) {
                CHECK(shell_set(lambda, i, l) == shell_set_bruteforce(lambda, i, l));
            });
        });
}

TEST_CASE("shell coefficients") {
    const SetPartition lam = P("1-4,3-5", 6);
    CHECK(shell_coefficient(lam, 2, 6, P("1-4,2-3,3-5", 6)) == QMonomial{1, 1, 1});
    CHECK(shell_coefficient(lam, 2, 6, P("1-4,2-5", 6)) == QMonomial{1, 1, 2});
    CHECK(shell_coefficient(SetPartition::empty(4), 2, 3, SetPartition::empty(4)) == QMonomial{1, 0, 1});
    // Nested under the anchor: no crossing, so no power of q.
    CHECK(shell_coefficient(P("3-5", 6), 2, 6, P("3-5", 6)) == QMonomial{1, 0, 1});
    CHECK(shell_coefficient(P("1-4", 6), 2, 6, P("1-4", 6)) == QMonomial{1, 1, 1});
    CHECK_THROWS_AS(shell_coefficient(lam, 2, 6, P("2-6", 6)), DomainError);
}

TEST_CASE("tensor expansion by one arc") {
    CharCombination base = tensor_expand_arc(SetPartition::empty(3), 1, 2);
    CHECK(base.size() == 1);
    CHECK(base.at(SetPartition::empty(3)) == mono_pow_t(1));

    const SetPartition lam = P("1-4,3-5", 6);
    const CharCombination c = tensor_expand_arc(lam, 2, 6);
    CHECK(c.size() == 3);
    CHECK(c.at(lam) == QMonomial{1, 1, 1});
    CHECK(c.at(P("1-4,2-3,3-5", 6)) == QMonomial{1, 1, 1});
    CHECK(c.at(P("1-4,2-5", 6)) == QMonomial{1, 1, 2});

    // The coefficient of λ itself is t·q^{crs(λ, i⌢l)}.
    for (int n = 2; n <= 6; ++n)
        for_each_partition(n, [](const SetPartition& lambda) {
            for_each_anchor(lambda, [&](int i, int l) {
                const QMonomial want = QMonomial::make(1, crossing_number(lambda.arcs(), ArcSet{{i, l}}), 1);
                CHECK(tensor_expand_arc(lambda, i, l).at(lambda) == want);
            });
        });
}

TEST_CASE("coefficients factor through the recursion") {
    for (int n = 3; n <= 6; ++n)
        for_each_partition(n, [](const SetPartition& lambda) {
            for_each_anchor(lambda, [&](int i, int l) {
                const ArcSet big = with_arc(lambda.arcs(), {i, l});
                for (const Arc& a : lambda.arcs()) {
                    if (!(i < a.left && a.right < l)) continue;
                    ArcSet moved = lambda.arcs();
                    std::erase(moved, a);
                    const SetPartition replaced(lambda.n(), with_arc(moved, {i, a.right}));
                    const ArcSet inner_big = with_arc(replaced.arcs(), a);
                    const QMonomial head = shell_coefficient_raw(big, with_arc(lambda.arcs(), {i, a.right}));
                    for (const SetPartition& mu : shell_set(replaced, a.left, a.right)) {
                        const QMonomial whole = shell_coefficient_raw(big, mu.arcs());
                        INFO(format_partition(lambda), " ", i, "-", l, " via ", a.left, "-", a.right, " mu=", format_partition(mu));
                        CHECK(whole == head * shell_coefficient_raw(inner_big, mu.arcs()));
                    }
                }
            });
        });
}

TEST_CASE("pairwise arc tensor cases") {
    auto a = tensor_pair({1, 3}, {2, 4}, 4);
    CHECK(a.kind == TensorPairResult::Kind::NonConflicting);
    REQUIRE(a.expansion);
    CHECK(a.expansion->size() == 1);
    CHECK(a.expansion->at(P("1-3,2-4", 4)) == QMonomial::one());

    auto b = tensor_pair({1, 4}, {2, 4}, 4);
    CHECK(b.kind == TensorPairResult::Kind::SharedRight);
    CHECK(b.kept == Arc{1, 4});
    CHECK(b.deferred == Arc{2, 4});

    auto c = tensor_pair({1, 4}, {1, 3}, 4);
    CHECK(c.kind == TensorPairResult::Kind::SharedLeft);
    CHECK(c.kept == Arc{1, 4});
    CHECK(c.deferred == Arc{1, 3});

    CHECK_THROWS(tensor_pair({1, 3}, {1, 3}, 4));
}

TEST_CASE("restriction of one arc") {
    const CharCombination a = restrict_arc(2, 6, 6);
    const QMonomial t = mono_pow_t(1);
    CHECK(a.size() == 4);
    CHECK(a.at(SetPartition::empty(5)) == t);
    for (int k : {3, 4, 5}) CHECK(a.at(SetPartition(5, {{2, k}})) == t);

    const CharCombination b = restrict_arc(1, 3, 6);
    CHECK(b.size() == 1);
    CHECK(b.at(P("1-3", 5)) == QMonomial::one());

    const CharCombination c = restrict_arc(5, 6, 6);
    CHECK(c.size() == 1);
    CHECK(c.at(SetPartition::empty(5)) == t);
}

TEST_CASE("restriction examples") {
    const CharCombination r = restrict(P("1-4,2-6,3-5", 6));
    CHECK(r.n() == 5);
    CHECK(r.size() == 3);
    CHECK(r.at(P("1-4,3-5", 5)) == QMonomial{1, 1, 1});
    CHECK(r.at(P("1-4,2-3,3-5", 5)) == QMonomial{1, 1, 1});
    CHECK(r.at(P("1-4,2-5", 5)) == QMonomial{1, 1, 2});

    const CharCombination e = restrict(SetPartition::empty(6));
    CHECK(e.size() == 1);
    CHECK(e.at(SetPartition::empty(5)) == QMonomial::one());

    const CharCombination f = restrict(P("5-6", 6));
    CHECK(f.size() == 1);
    CHECK(f.at(SetPartition::empty(5)) == mono_pow_t(1));
}

// Res χ^λ evaluated on u_ν for ν ⊢ [n−1] must equal χ^λ(u_ν) with ν viewed
// inside [n]. Uses only character values, not shells.
TEST_CASE("restriction agrees with character values") {
    for (int n = 1; n <= 6; ++n) {
        const auto small = enumerate_partitions(n - 1);
        for_each_partition(n, [&](const SetPartition& lambda) {
            const CharCombination r = restrict(lambda);
            for (const SetPartition& nu : small) {
                QPolynomial lhs;
                for (const auto& [mu, c] : r.terms()) lhs.add(c * char_value(mu, nu));
                CHECK(lhs == QPolynomial{char_value(lambda, SetPartition(n, nu.arcs()))});
            }
        });
    }
}

TEST_CASE("restriction coefficients are divisible by t") {
    for (int n = 1; n <= 7; ++n)
        for_each_partition(n, [&](const SetPartition& lambda) {
            const CharCombination r = restrict(lambda);
            const bool attached = lambda.has_right(n);
            for (const auto& [mu, c] : r.terms()) {
                CHECK(c.sign == 1);
                CHECK(c.eq >= 0);
                if (attached) CHECK(c.et >= 1);
            }
        });
}

TEST_CASE("induction examples") {
    for (int n = 2; n <= 6; ++n) {
        const CharCombination ind = induce(SetPartition::empty(n - 1), n);
        CHECK(ind.size() == static_cast<std::size_t>(n));
        CHECK(ind.at(SetPartition::empty(n)) == QMonomial::one());
        for (int i = 1; i < n; ++i) CHECK(ind.at(SetPartition(n, {{i, n}})) == QMonomial::one());
    }
    const CharCombination ind = induce(P("1-3", 4), 5);
    CHECK(ind.at(P("1-3", 5)) == QMonomial::one());
    CHECK_THROWS_AS(induce(P("1-3", 4), 6), DomainError);
}

TEST_CASE("reverse shell walk matches the Bell scan") {
    for (int n = 1; n <= 6; ++n)
        for_each_partition(n - 1, [&](const SetPartition& mu) {
            CHECK(induce(mu, n) == induce(mu, n, InduceMethod::BellScan));
        });
}

TEST_CASE("Frobenius relation between restriction and induction") {
    for (int n = 1; n <= 6; ++n) {
        const auto big = enumerate_partitions(n);
        const auto small = enumerate_partitions(n - 1);
        for (const auto& lambda : big) {
            const CharCombination r = restrict(lambda);
            for (const auto& mu : small) {
                const QMonomial d = induction_coefficient(mu, lambda);
                const QMonomial lhs = QMonomial::make(1, crossing_number(lambda, lambda), static_cast<int>(lambda.size())) * d;
                const QMonomial rhs = QMonomial::make(1, crossing_number(mu, mu), static_cast<int>(mu.size())) * r.at(mu);
                CHECK(same_poly(lhs, rhs));
            }
        }
    }
}

TEST_CASE("degree is conserved") {
    for (int n = 1; n <= 6; ++n) {
        for_each_partition(n, [](const SetPartition& lambda) {
            QPolynomial sum;
            const CharCombination r = restrict(lambda);
            for (const auto& [mu, c] : r.terms()) sum.add(c * degree(mu));
            CHECK(sum == QPolynomial{degree(lambda)});
        });
        for_each_partition(n - 1, [n](const SetPartition& mu) {
            QPolynomial sum;
            const CharCombination ind = induce(mu, n);
            for (const auto& [lambda, d] : ind.terms()) {
                CHECK(d.et >= 0);
                sum.add(d * degree(lambda));
            }
            CHECK(sum == QPolynomial{mono_pow_q(n - 1) * degree(mu)});
        });
    }
}

TEST_CASE("q-analog crossing identity") {
    CHECK(q_crossing_identity_check(SetPartition::empty(4), 1, 4));
    CHECK(q_crossing_identity_check(P("1-4,3-5", 6), 2, 6));
    for (int n = 2; n <= 7; ++n)
        for_each_partition(n, [](const SetPartition& lambda) {
            for_each_anchor(lambda, [&](int j, int l) { CHECK(q_crossing_identity_check(lambda, j, l)); });
        });
}

TEST_CASE("branching cache returns stable results") {
    BranchingCache cache;
    const SetPartition lam = P("1-4,2-6,3-5", 6);
    const CharCombination& a = cache.restricted(lam);
    const CharCombination& b = cache.restricted(lam);
    CHECK(&a == &b);
    CHECK(a == restrict(lam));
    CHECK(cache.induced(P("1-3", 4), 5) == induce(P("1-3", 4), 5));
}
