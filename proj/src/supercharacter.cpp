#include "superbranch/supercharacter.hpp"

namespace superbranch {

static void check_ground(const SetPartition& a, const SetPartition& b) {
    if (a.n() != b.n())
        throw DomainError("partitions over different ground sets [" + std::to_string(a.n()) + "] and [" +
                          std::to_string(b.n()) + "]");
}

static QMonomial value_on_arcs(const ArcSet& lambda, const SetPartition& mu) {
    for (const Arc& a : lambda)
        for (int j = a.left + 1; j < a.right; ++j)
            if (mu.contains({a.left, j}) || mu.contains({j, a.right})) return QMonomial::zero();
    const ArcSet common = arc_intersection(lambda, mu.arcs());
    const int sign = common.size() % 2 ? -1 : 1;
    const int et = static_cast<int>(lambda.size() - common.size());
    QMonomial v = QMonomial::make(sign, dim(lambda) - nesting_number(lambda, mu.arcs()), et);
    return require_integral(v, "character value");
}

QMonomial char_value(const SetPartition& lambda, const SetPartition& mu) {
    check_ground(lambda, mu);
    return value_on_arcs(lambda.arcs(), mu);
}

QMonomial char_value_by_arcs(const SetPartition& lambda, const SetPartition& mu) {
    check_ground(lambda, mu);
    QMonomial v = QMonomial::one();
    for (const Arc& a : lambda.arcs()) v = v * value_on_arcs({a}, mu);
    return v;
}

QMonomial degree(const SetPartition& lambda) {
    return QMonomial::make(1, dim(lambda), static_cast<int>(lambda.size()));
}

QMonomial inner_product_formula(const SetPartition& lambda, const SetPartition& mu) {
    check_ground(lambda, mu);
    if (lambda != mu) return QMonomial::zero();
    return QMonomial::make(1, crossing_number(lambda, lambda), static_cast<int>(lambda.size()));
}

std::vector<int> superclass_matrix(const SetPartition& lambda) {
    const int n = lambda.n();
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    for (const Arc& a : lambda.arcs()) m[(a.left - 1) * n + (a.right - 1)] = 1;
    return m;
}

} // namespace superbranch
