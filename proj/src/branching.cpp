#include "superbranch/branching.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace superbranch {

std::vector<OrientedArc> Shell::oriented() const {
    std::vector<OrientedArc> out;
    for (const Arc& a : frowns) out.push_back({a.left, a.right, Orientation::Frown});
    for (const Arc& a : smiles) out.push_back({a.left, a.right, Orientation::Smile});
    return out;
}

std::optional<Shell> is_shell(const ArcSet& frowns_in, const ArcSet& smiles_in, int n) {
    ArcSet frowns = frowns_in, smiles = smiles_in;
    std::sort(frowns.begin(), frowns.end());
    std::sort(smiles.begin(), smiles.end());
    if (frowns.empty()) return std::nullopt;
    for (const ArcSet* set : {&frowns, &smiles})
        for (std::size_t k = 0; k < set->size(); ++k) {
            const Arc& a = (*set)[k];
            if (a.left < 1 || a.right > n || a.left >= a.right) return std::nullopt;
            if (k > 0 && (*set)[k - 1].left == a.left) return std::nullopt;
        }
    auto smile_from = [&](int i) {
        for (const Arc& a : smiles)
            if (a.left == i) return a.right;
        return 0;
    };

    Shell sh;
    sh.n = n;
    sh.anchor = frowns.front();
    std::vector<int> I{sh.anchor.left}, L{sh.anchor.right};
    sh.frowns.push_back(sh.anchor);
    while (true) {
        const int i = I.back();
        const int l = smile_from(i);
        if (l == 0) {
            sh.s_prime = static_cast<int>(I.size());
            break;
        }
        if (l >= L.back()) return std::nullopt;
        L.push_back(l);
        sh.smiles.push_back({i, l});
        std::vector<int> into;
        for (const Arc& a : frowns)
            if (a.right == l) into.push_back(a.left);
        if (into.empty()) {
            sh.s_prime = static_cast<int>(I.size()) + 1;
            break;
        }
        if (into.size() != 1 || into[0] <= i) return std::nullopt;
        I.push_back(into[0]);
        sh.frowns.push_back({into[0], l});
    }
    sh.s = static_cast<int>(I.size());
    if (sh.frowns.size() != frowns.size() || sh.smiles.size() != smiles.size()) return std::nullopt;
    if (I.back() > L.back()) return std::nullopt;
    return sh;
}

// ⌈(s + s′ − 1) / 2⌉
int whorl_count(const Shell& sh) { return (sh.s + sh.s_prime) / 2; }

static void check_anchor(const SetPartition& lambda, int i, int l) {
    if (i < 1 || l > lambda.n() || i >= l)
        throw DomainError("anchor " + std::to_string(i) + "-" + std::to_string(l) + " needs 1 <= i < l <= n");
    if (lambda.has_left(i))
        throw DomainError("anchor left endpoint " + std::to_string(i) + " is already a left endpoint of " +
                          format_partition(lambda));
}

static void shell_set_rec(const SetPartition& lambda, int i, int l, std::set<SetPartition>& out) {
    out.insert(lambda);
    for (int k = i + 1; k < l; ++k)
        if (!lambda.has_right(k)) out.insert(SetPartition(lambda.n(), with_arc(lambda.arcs(), {i, k})));
    for (const Arc& a : lambda.arcs()) {
        if (!(i < a.left && a.right < l)) continue;
        ArcSet moved = lambda.arcs();
        std::erase(moved, a);
        shell_set_rec(SetPartition(lambda.n(), with_arc(std::move(moved), {i, a.right})), a.left, a.right, out);
    }
}

std::vector<SetPartition> shell_set(const SetPartition& lambda, int i, int l) {
    check_anchor(lambda, i, l);
    std::set<SetPartition> out;
    shell_set_rec(lambda, i, l, out);
    return {out.begin(), out.end()};
}

bool in_shell_set(const SetPartition& lambda, int i, int l, const SetPartition& mu) {
    if (mu.n() != lambda.n()) return false;
    const ArcSet big = with_arc(lambda.arcs(), {i, l});
    auto sh = is_shell(arc_difference(big, mu.arcs()), arc_difference(mu.arcs(), big), lambda.n());
    return sh && sh->anchor == Arc{i, l};
}

std::vector<SetPartition> shell_set_bruteforce(const SetPartition& lambda, int i, int l) {
    check_anchor(lambda, i, l);
    std::vector<SetPartition> out;
    for_each_partition(lambda.n(), [&](const SetPartition& mu) {
        if (in_shell_set(lambda, i, l, mu)) out.push_back(mu);
    });
    std::sort(out.begin(), out.end());
    return out;
}

QMonomial shell_coefficient_raw(const ArcSet& big, const ArcSet& mu) {
    const ArcSet common = arc_intersection(big, mu);
    const ArcSet lost = arc_difference(big, mu);
    const ArcSet gained = arc_difference(mu, big);
    return QMonomial::make(1, crossing_number(common, lost) - crossing_number(common, gained),
                           static_cast<int>(lost.size()));
}

QMonomial shell_coefficient(const SetPartition& lambda, int i, int l, const SetPartition& mu) {
    check_anchor(lambda, i, l);
    if (!in_shell_set(lambda, i, l, mu))
        throw DomainError(format_partition(mu) + " is not in the shell set of " + format_partition(lambda) +
                          " with anchor " + std::to_string(i) + "-" + std::to_string(l));
    QMonomial c = shell_coefficient_raw(with_arc(lambda.arcs(), {i, l}), mu.arcs());
    return require_integral(c, "shell coefficient");
}

CharCombination tensor_expand_arc(const SetPartition& lambda, int i, int l) {
    CharCombination out(lambda.n());
    const ArcSet big = with_arc(lambda.arcs(), {i, l});
    for (const SetPartition& mu : shell_set(lambda, i, l))
        out.insert(mu, require_integral(shell_coefficient_raw(big, mu.arcs()), "shell coefficient"));
    return out;
}

TensorPairResult tensor_pair(Arc a, Arc b, int n) {
    if (a == b) throw DomainError("tensor_pair needs two distinct arcs");
    for (Arc x : {a, b}) SetPartition(n, {x}); // range checks
    TensorPairResult r;
    if (a.left != b.left && a.right != b.right) {
        r.kind = TensorPairResult::Kind::NonConflicting;
        r.kept = std::min(a, b);
        r.deferred = std::max(a, b);
        CharCombination c(n);
        c.insert(SetPartition(n, {a, b}), QMonomial::one());
        r.expansion = std::move(c);
        return r;
    }
    if (a.right == b.right) {
        r.kind = TensorPairResult::Kind::SharedRight;
        r.kept = a.left < b.left ? a : b;
        r.deferred = a.left < b.left ? b : a;
        r.expansion = tensor_expand_arc(SetPartition(n, {r.kept}), r.deferred.left, r.deferred.right);
        return r;
    }
    r.kind = TensorPairResult::Kind::SharedLeft;
    r.kept = a.right > b.right ? a : b;
    r.deferred = a.right > b.right ? b : a;
    return r;
}

CharCombination restrict_arc(int i, int l, int n) {
    if (i < 1 || i >= l || l > n)
        throw DomainError("restrict_arc needs 1 <= i < l <= n");
    CharCombination out(n - 1);
    if (l != n) {
        out.insert(SetPartition(n - 1, {{i, l}}), QMonomial::one());
        return out;
    }
    const QMonomial t = mono_pow_t(1);
    out.insert(SetPartition::empty(n - 1), t);
    for (int k = i + 1; k < l; ++k) out.insert(SetPartition(n - 1, {{i, k}}), t);
    return out;
}

CharCombination restrict(const SetPartition& lambda) {
    const int n = lambda.n();
    if (n < 1) throw DomainError("restriction needs n >= 1");
    CharCombination out(n - 1);
    const int i = lambda.left_of(n);
    if (i == 0) {
        out.insert(lambda.regrounded(n - 1), QMonomial::one());
        return out;
    }
    ArcSet rest = lambda.arcs();
    std::erase(rest, Arc{i, n});
    const SetPartition base(n, rest);
    for (const SetPartition& mu : shell_set(base, i, n)) {
        QMonomial c = require_integral(shell_coefficient_raw(lambda.arcs(), mu.arcs()), "restriction coefficient");
        if (c.et < 1) throw IntegralityError("restriction coefficient without a factor of t");
        out.insert(mu.regrounded(n - 1), c);
    }
    return out;
}

QMonomial induction_coefficient(const SetPartition& mu, const SetPartition& lambda) {
    if (mu.n() + 1 != lambda.n()) throw DomainError("induction needs mu over [n-1] and lambda over [n]");
    const int n = lambda.n();
    if (!lambda.has_right(n))
        return lambda.regrounded(n - 1) == mu ? QMonomial::one() : QMonomial::zero();
    const int i = lambda.left_of(n);
    ArcSet rest = lambda.arcs();
    std::erase(rest, Arc{i, n});
    const SetPartition mu_n = mu.regrounded(n);
    if (!in_shell_set(SetPartition(n, rest), i, n, mu_n)) return QMonomial::zero();
    const ArcSet common = arc_intersection(lambda.arcs(), mu.arcs());
    const ArcSet gained = arc_difference(mu.arcs(), lambda.arcs());
    const ArcSet lost = arc_difference(lambda.arcs(), mu.arcs());
    QMonomial d = QMonomial::make(1, crossing_number(gained, common) - crossing_number(lost, common),
                                  static_cast<int>(gained.size()));
    return require_integral(d, "induction coefficient");
}

namespace {

// Candidates λ ∋ i⌢n whose symmetric difference with μ is a shell anchored at
// i⌢n: walk the spiral inward, taking smiles from μ and choosing new frowns.
struct ReverseShellWalk {
    const SetPartition& mu; // over [n], node n isolated
    int n;
    std::set<SetPartition>& out;

    void emit(const ArcSet& frowns, const ArcSet& smiles) {
        ArcSet arcs = arc_difference(mu.arcs(), smiles);
        for (const Arc& f : frowns) {
            if (mu.contains(f)) return;
            arcs = with_arc(std::move(arcs), f);
        }
        std::vector<char> l(n + 1, 0), r(n + 1, 0);
        for (const Arc& a : arcs)
            if (l[a.left]++ || r[a.right]++) return;
        out.insert(SetPartition(n, std::move(arcs)));
    }

    void walk(ArcSet& frowns, ArcSet& smiles, int cur_i, int cur_l) {
        emit(frowns, smiles);
        const int m = mu.right_of(cur_i);
        if (m == 0 || m >= cur_l) return;
        smiles.push_back({cur_i, m});
        emit(frowns, smiles);
        for (int j = cur_i + 1; j < m; ++j) {
            frowns.push_back({j, m});
            walk(frowns, smiles, j, m);
            frowns.pop_back();
        }
        smiles.pop_back();
    }
};

} // namespace

CharCombination induce(const SetPartition& mu, int n, InduceMethod method) {
    if (n < 1 || mu.n() != n - 1)
        throw DomainError("induction needs a partition over [" + std::to_string(n - 1) + "]");
    CharCombination out(n);
    if (method == InduceMethod::BellScan) {
        for_each_partition(n, [&](const SetPartition& lambda) {
            out.insert(lambda, induction_coefficient(mu, lambda));
        });
        return out;
    }
    const SetPartition mu_n = mu.regrounded(n);
    std::set<SetPartition> candidates{mu_n};
    ReverseShellWalk w{mu_n, n, candidates};
    for (int i = 1; i < n; ++i) {
        ArcSet frowns{{i, n}}, smiles;
        w.walk(frowns, smiles, i, n);
    }
    for (const SetPartition& lambda : candidates) out.insert(lambda, induction_coefficient(mu, lambda));
    return out;
}

bool q_crossing_identity_check(const SetPartition& lambda, int j, int l) {
    if (j < 1 || j >= l || l > lambda.n() || lambda.has_left(j))
        throw DomainError("q-crossing identity needs j < l <= n and j not a left endpoint");
    QPolynomial lhs;
    for (const Arc& a : lambda.arcs())
        if (a.left < j && j < a.right && a.right < l)
            lhs.add(mono_pow_q(crossing_number(lambda.arcs(), ArcSet{{j, a.right}})));
    // [c]_q = 1 + q + … + q^{c−1}
    const int c = crossing_number(lambda.arcs(), ArcSet{{j, l}});
    QPolynomial rhs;
    for (int e = 0; e < c; ++e) rhs.add(mono_pow_q(e));
    return lhs == rhs;
}

const CharCombination& BranchingCache::restricted(const SetPartition& lambda) {
    {
        std::shared_lock lock(mtx_);
        auto it = res_.find(lambda);
        if (it != res_.end()) return *it->second;
    }
    auto value = std::make_unique<CharCombination>(restrict(lambda));
    std::unique_lock lock(mtx_);
    auto [it, fresh] = res_.try_emplace(lambda, std::move(value));
    return *it->second;
}

const CharCombination& BranchingCache::induced(const SetPartition& mu, int n) {
    if (mu.n() != n - 1) throw DomainError("induction needs a partition over [n-1]");
    {
        std::shared_lock lock(mtx_);
        auto it = ind_.find(mu);
        if (it != ind_.end()) return *it->second;
    }
    auto value = std::make_unique<CharCombination>(induce(mu, n));
    std::unique_lock lock(mtx_);
    auto [it, fresh] = ind_.try_emplace(mu, std::move(value));
    return *it->second;
}

} // namespace superbranch
