#include "superbranch/oracle.hpp"

#include <deque>

#include "superbranch/branching.hpp"
#include "superbranch/supercharacter.hpp"

namespace superbranch {

FqMatrix FqMatrix::identity(int n, int q) {
    FqMatrix m{n, q, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool FqMatrix::is_upper_unitriangular() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool FqMatrix::is_upper_invertible() const {
    for (int i = 0; i < n; ++i) {
        if (at(i, i) == 0) return false;
        for (int j = 0; j < i; ++j)
            if (at(i, j) != 0) return false;
    }
    return true;
}

FqMatrix operator*(const FqMatrix& x, const FqMatrix& y) {
    FqMatrix z{x.n, x.q, std::vector<int>(x.a.size(), 0)};
    for (int i = 0; i < x.n; ++i)
        for (int k = i; k < x.n; ++k) {
            const int v = x.at(i, k);
            if (!v) continue;
            for (int j = k; j < x.n; ++j) z.at(i, j) = (z.at(i, j) + v * y.at(k, j)) % x.q;
        }
    return z;
}

FqMatrix unitriangular_inverse(const FqMatrix& u) {
    // u = 1 + X with X nilpotent: u⁻¹ = Σ (−X)^k.
    FqMatrix neg_x = u;
    for (int i = 0; i < u.n; ++i) {
        neg_x.at(i, i) = 0;
        for (int j = i + 1; j < u.n; ++j) neg_x.at(i, j) = (u.q - u.at(i, j)) % u.q;
    }
    FqMatrix sum = FqMatrix::identity(u.n, u.q), power = sum;
    for (int k = 1; k < u.n; ++k) {
        power = power * neg_x;
        for (std::size_t e = 0; e < sum.a.size(); ++e) sum.a[e] = (sum.a[e] + power.a[e]) % u.q;
    }
    return sum;
}

int oracle_max_n(int q) {
    if (q == 2) return 5;
    if (q == 3) return 3;
    return 0;
}

void check_oracle_guard(int n, int q, int max_n_override) {
    if (q != 2 && q != 3) throw DomainError("oracle supports q = 2 or q = 3, got q = " + std::to_string(q));
    const int limit = max_n_override > 0 ? max_n_override : oracle_max_n(q);
    if (n < 0 || n > limit)
        throw DomainError("oracle size guard: n = " + std::to_string(n) + " exceeds n <= " + std::to_string(limit) +
                          " at q = " + std::to_string(q));
}

std::uint64_t encode_unitriangular(const FqMatrix& u) {
    std::uint64_t code = 0, place = 1;
    for (int i = 0; i < u.n; ++i)
        for (int j = i + 1; j < u.n; ++j) {
            code += place * static_cast<std::uint64_t>(u.at(i, j));
            place *= static_cast<std::uint64_t>(u.q);
        }
    return code;
}

FqMatrix decode_unitriangular(std::uint64_t code, int n, int q) {
    FqMatrix u = FqMatrix::identity(n, q);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            u.at(i, j) = static_cast<int>(code % static_cast<std::uint64_t>(q));
            code /= static_cast<std::uint64_t>(q);
        }
    return u;
}

static std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<FqMatrix> enumerate_group(int n, int q, GroupKind kind) {
    check_oracle_guard(n, q);
    const std::uint64_t count = upow(q, n * (n - 1) / 2);
    std::vector<FqMatrix> out;
    for (std::uint64_t c = 0; c < count; ++c) out.push_back(decode_unitriangular(c, n, q));
    if (kind == GroupKind::U) return out;
    // B_n = T·U_n with T the diagonal torus.
    std::vector<FqMatrix> b;
    const std::uint64_t diag = upow(q - 1, n);
    for (std::uint64_t d = 0; d < diag; ++d)
        for (const auto& u : out) {
            FqMatrix m = u;
            std::uint64_t rest = d;
            for (int i = 0; i < n; ++i) {
                const int s = static_cast<int>(rest % (q - 1)) + 1;
                rest /= (q - 1);
                for (int j = i; j < n; ++j) m.at(i, j) = (m.at(i, j) * s) % q;
            }
            b.push_back(std::move(m));
        }
    return b;
}

int SuperclassTable::class_of_partition(const SetPartition& lambda) const {
    if (lambda.n() != n) throw DomainError("partition over the wrong ground set");
    FqMatrix u{n, q, superclass_matrix(lambda)};
    return class_of.at(encode_unitriangular(u));
}

static int primitive_root(int q) { return q == 3 ? 2 : 1; }

SuperclassTable superclasses(int n, int q, int max_n_override) {
    check_oracle_guard(n, q, max_n_override);
    SuperclassTable t;
    t.n = n;
    t.q = q;
    const std::uint64_t count = upow(q, n * (n - 1) / 2);
    t.class_of.assign(count, -1);

    auto neighbours = [&](const FqMatrix& x, std::vector<FqMatrix>& out) {
        out.clear();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                FqMatrix l = x, r = x; // (1+E_ij)X: row i += row j;  X(1+E_ij): col j += col i
                for (int c = 0; c < n; ++c) l.at(i, c) = (l.at(i, c) + x.at(j, c)) % q;
                for (int c = 0; c < n; ++c) r.at(c, j) = (r.at(c, j) + x.at(c, i)) % q;
                out.push_back(std::move(l));
                out.push_back(std::move(r));
            }
        if (q > 2) {
            const int g = primitive_root(q);
            for (int i = 0; i < n; ++i) {
                FqMatrix l = x, r = x;
                for (int c = 0; c < n; ++c) l.at(i, c) = (l.at(i, c) * g) % q;
                for (int c = 0; c < n; ++c) r.at(c, i) = (r.at(c, i) * g) % q;
                out.push_back(std::move(l));
                out.push_back(std::move(r));
            }
        }
    };
    auto to_unipotent = [&](FqMatrix x) {
        for (int i = 0; i < n; ++i) x.at(i, i) = 1;
        return x;
    };

    std::vector<FqMatrix> nb;
    for (std::uint64_t start = 0; start < count; ++start) {
        if (t.class_of[start] >= 0) continue;
        const int id = static_cast<int>(t.reps.size());
        std::vector<std::uint64_t> members{start};
        std::deque<std::uint64_t> queue{start};
        t.class_of[start] = id;
        while (!queue.empty()) {
            FqMatrix x = decode_unitriangular(queue.front(), n, q);
            queue.pop_front();
            for (int i = 0; i < n; ++i) x.at(i, i) = 0;
            neighbours(x, nb);
            for (const auto& y : nb) {
                const std::uint64_t c = encode_unitriangular(to_unipotent(y));
                if (t.class_of[c] >= 0) continue;
                t.class_of[c] = id;
                members.push_back(c);
                queue.push_back(c);
            }
        }
        std::sort(members.begin(), members.end());
        // The representative has at most one nonzero per row and column, all equal to 1.
        std::vector<SetPartition> found;
        for (std::uint64_t c : members) {
            FqMatrix u = decode_unitriangular(c, n, q);
            ArcSet arcs;
            bool ok = true;
            std::vector<int> rows(n, 0), cols(n, 0);
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j) {
                    if (!u.at(i, j)) continue;
                    ok = u.at(i, j) == 1 && !rows[i]++ && !cols[j]++;
                    arcs.push_back({i + 1, j + 1});
                }
            if (ok) found.emplace_back(n, std::move(arcs));
        }
        if (found.size() != 1)
            throw std::logic_error("superclass without a unique representative (" + std::to_string(found.size()) + ")");
        t.reps.push_back(found[0]);
        t.sizes.push_back(members.size());
        t.members.push_back(std::move(members));
    }
    return t;
}

ClassFunction char_function(const SetPartition& lambda, const SuperclassTable& table) {
    ClassFunction f(table.order());
    for (std::size_t c = 0; c < table.reps.size(); ++c) {
        const BigRational v = eval_exact(char_value(lambda, table.reps[c]), table.q);
        for (std::uint64_t g : table.members[c]) f[g] = v;
    }
    return f;
}

BigRational group_inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.size() != g.size() || f.empty()) throw DomainError("class functions on different groups");
    BigRational sum = 0;
    for (std::size_t e = 0; e < f.size(); ++e) sum += f[e] * g[e];
    return sum / BigRational(static_cast<long long>(f.size()));
}

OracleDecomposition decompose(const ClassFunction& f, const SuperclassTable& table) {
    OracleDecomposition out;
    for_each_partition(table.n, [&](const SetPartition& mu) {
        const ClassFunction chi = char_function(mu, table);
        const BigRational c = group_inner_product(f, chi) / group_inner_product(chi, chi);
        if (c != 0) out.emplace(mu, c);
    });
    return out;
}

static std::uint64_t embed_code(std::uint64_t h_code, int n, int q) {
    const FqMatrix h = decode_unitriangular(h_code, n - 1, q);
    FqMatrix g = FqMatrix::identity(n, q);
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) g.at(i, j) = h.at(i, j);
    return encode_unitriangular(g);
}

// χ̇: the H-character extended by zero off the last-column subgroup.
struct ExtendedByZero {
    const ClassFunction& chi_h;
    int n, q;

    const BigRational* operator()(const FqMatrix& y) const {
        for (int i = 0; i + 1 < n; ++i)
            if (y.at(i, n - 1)) return nullptr;
        FqMatrix h = FqMatrix::identity(n - 1, q);
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j) h.at(i, j) = y.at(i, j);
        return &chi_h[encode_unitriangular(h)];
    }
};

OracleDecomposition restrict_oracle(const SetPartition& lambda, int q, int max_n_override) {
    const int n = lambda.n();
    if (n < 2) throw DomainError("oracle restriction needs n >= 2");
    const SuperclassTable g = superclasses(n, q, max_n_override);
    const SuperclassTable h = superclasses(n - 1, q, max_n_override);
    const ClassFunction chi = char_function(lambda, g);
    ClassFunction res(h.order());
    for (std::uint64_t c = 0; c < h.order(); ++c) res[c] = chi[embed_code(c, n, q)];
    return decompose(res, h);
}

ClassFunction induced_function(const SetPartition& mu, int n, int q, InduceMode mode) {
    if (mu.n() != n - 1 || n < 2) throw DomainError("induction needs mu over [n-1], n >= 2");
    if (mode == InduceMode::Full && n > 4) throw DomainError("oracle size guard: full induction sums need n <= 4");
    const SuperclassTable g = superclasses(n, q);
    const SuperclassTable h = superclasses(n - 1, q);
    const ClassFunction chi_h = char_function(mu, h);
    const ExtendedByZero dot{chi_h, n, q};
    std::vector<FqMatrix> elems, inverses;
    for (std::uint64_t c = 0; c < g.order(); ++c) {
        elems.push_back(decode_unitriangular(c, n, q));
        inverses.push_back(unitriangular_inverse(elems.back()));
    }
    const BigRational h_order(static_cast<long long>(h.order()));
    auto value_at = [&](std::uint64_t code) {
        BigRational sum = 0;
        for (std::size_t x = 0; x < elems.size(); ++x)
            if (const BigRational* v = dot(elems[x] * elems[code] * inverses[x])) sum += *v;
        return sum / h_order;
    };
    ClassFunction f(g.order());
    if (mode == InduceMode::Full) {
        for (std::uint64_t c = 0; c < g.order(); ++c) f[c] = value_at(c);
    } else {
        for (std::size_t k = 0; k < g.reps.size(); ++k) {
            const BigRational v = value_at(g.members[k].front());
            for (std::uint64_t c : g.members[k]) f[c] = v;
        }
    }
    return f;
}

ClassFunction superinduced_function(const SetPartition& mu, int n, int q) {
    if (mu.n() != n - 1 || n < 2) throw DomainError("superinduction needs mu over [n-1], n >= 2");
    const SuperclassTable g = superclasses(n, q);
    const SuperclassTable h = superclasses(n - 1, q);
    const ClassFunction chi_h = char_function(mu, h);
    const ExtendedByZero dot{chi_h, n, q};
    const BigRational index(static_cast<long long>(g.order() / h.order()));
    ClassFunction f(g.order());
    for (std::size_t k = 0; k < g.reps.size(); ++k) {
        BigRational sum = 0;
        for (std::uint64_t c : g.members[k])
            if (const BigRational* v = dot(decode_unitriangular(c, n, q))) sum += *v;
        const BigRational val = index * sum / BigRational(static_cast<long long>(g.sizes[k]));
        for (std::uint64_t c : g.members[k]) f[c] = val;
    }
    return f;
}

OracleDecomposition induce_oracle(const SetPartition& mu, int n, int q, InduceMode mode) {
    return decompose(induced_function(mu, n, q, mode), superclasses(n, q));
}

OracleDecomposition superinduce_oracle(const SetPartition& mu, int n, int q) {
    return decompose(superinduced_function(mu, n, q), superclasses(n, q));
}

OracleDecomposition evaluate(const CharCombination& c, int q) {
    OracleDecomposition out;
    for (const auto& [p, m] : c.terms()) {
        BigRational v = eval_exact(m, q);
        if (v != 0) out.emplace(p, v);
    }
    return out;
}

std::string to_string(const OracleDecomposition& d) {
    std::string out = "{";
    bool first = true;
    for (const auto& [p, v] : d) {
        out += first ? "" : ", ";
        first = false;
        std::string s = format_partition(p);
        out += "\"" + s + "\": " + v.str();
    }
    return out + "}";
}

namespace {

void orthogonality_suite(int n, int q, std::vector<CheckResult>& out) {
    const SuperclassTable t = superclasses(n, q);
    std::uint64_t total = 0;
    for (auto s : t.sizes) total += s;
    out.push_back({"orthogonality", "superclass count", t.reps.size() == bell_number(n),
                   std::to_string(bell_number(n)), std::to_string(t.reps.size())});
    out.push_back({"orthogonality", "superclass sizes sum", total == t.order(), std::to_string(t.order()),
                   std::to_string(total)});
    const auto parts = enumerate_partitions(n);
    std::vector<ClassFunction> chars;
    for (const auto& p : parts) chars.push_back(char_function(p, t));
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = 0; b < parts.size(); ++b) {
            const BigRational expected = eval_exact(inner_product_formula(parts[a], parts[b]), q);
            const BigRational actual = group_inner_product(chars[a], chars[b]);
            out.push_back({"orthogonality",
                           "<" + format_partition(parts[a]) + "|" + format_partition(parts[b]) + ">",
                           expected == actual, expected.str(), actual.str()});
        }
}

void restriction_suite(int n, int q, std::vector<CheckResult>& out) {
    for_each_partition(n, [&](const SetPartition& lambda) {
        const auto expected = evaluate(restrict(lambda), q);
        const auto actual = restrict_oracle(lambda, q);
        out.push_back({"restriction", format_partition(lambda), expected == actual, to_string(expected),
                       to_string(actual)});
    });
}

InduceMode mode_for(int n) { return n <= 4 ? InduceMode::Full : InduceMode::Representatives; }

void induction_suite(int n, int q, std::vector<CheckResult>& out) {
    for_each_partition(n - 1, [&](const SetPartition& mu) {
        const auto expected = evaluate(induce(mu, n), q);
        const auto actual = induce_oracle(mu, n, q, mode_for(n));
        out.push_back({"induction", format_partition(mu), expected == actual, to_string(expected), to_string(actual)});
    });
}

void superinduction_suite(int n, int q, std::vector<CheckResult>& out) {
    for_each_partition(n - 1, [&](const SetPartition& mu) {
        const auto expected = induce_oracle(mu, n, q, mode_for(n));
        const auto actual = superinduce_oracle(mu, n, q);
        out.push_back(
            {"superinduction", format_partition(mu), expected == actual, to_string(expected), to_string(actual)});
    });
}

void frobenius_suite(int n, int q, std::vector<CheckResult>& out) {
    const SuperclassTable g = superclasses(n, q);
    const SuperclassTable h = superclasses(n - 1, q);
    const auto big = enumerate_partitions(n);
    const auto small = enumerate_partitions(n - 1);
    std::vector<ClassFunction> chi_g, res_g;
    for (const auto& lambda : big) {
        chi_g.push_back(char_function(lambda, g));
        ClassFunction r(h.order());
        for (std::uint64_t c = 0; c < h.order(); ++c) r[c] = chi_g.back()[embed_code(c, n, q)];
        res_g.push_back(std::move(r));
    }
    for (const auto& mu : small) {
        const ClassFunction ind = induced_function(mu, n, q, mode_for(n));
        const ClassFunction chi_mu = char_function(mu, h);
        for (std::size_t l = 0; l < big.size(); ++l) {
            const BigRational lhs = group_inner_product(ind, chi_g[l]);
            const BigRational rhs = group_inner_product(chi_mu, res_g[l]);
            out.push_back({"frobenius", format_partition(mu) + " -> " + format_partition(big[l]), lhs == rhs,
                           rhs.str(), lhs.str()});
        }
    }
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int n, int q) {
    check_oracle_guard(n, q);
    const bool all = suite == "all";
    const bool known = all || suite == "orthogonality" || suite == "restriction" || suite == "induction" ||
                       suite == "superinduction" || suite == "frobenius";
    if (!known) throw DomainError("unknown suite '" + suite + "'");
    const bool needs_induction = all || suite == "induction" || suite == "superinduction" || suite == "frobenius";
    if (n < 2 && (all || suite != "orthogonality")) throw DomainError("branching suites need n >= 2");
    if (needs_induction && n > 5) throw DomainError("oracle size guard: induction suites need n <= 5");
    std::vector<CheckResult> out;
    if (all || suite == "orthogonality") orthogonality_suite(n, q, out);
    if (all || suite == "restriction") restriction_suite(n, q, out);
    if (all || suite == "induction") induction_suite(n, q, out);
    if (all || suite == "superinduction") superinduction_suite(n, q, out);
    if (all || suite == "frobenius") frobenius_suite(n, q, out);
    return out;
}

} // namespace superbranch
