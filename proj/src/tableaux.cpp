#include "superbranch/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace superbranch {

int ShellTableau::total_labels() const {
    int total = 0;
    for (const auto& s : shells) total += static_cast<int>(s.arcs.size());
    return total;
}

std::string format_tableau(const ShellTableau& t) {
    std::string out;
    for (std::size_t r = 0; r < t.shells.size(); ++r) {
        out += r ? " | " : "";
        bool first = true;
        for (const auto& a : t.shells[r].arcs) {
            out += first ? "" : " ";
            first = false;
            const char* sym = a.kind == ArcKind::Frown ? "^" : a.kind == ArcKind::Smile ? "v" : "o";
            out += "(" + std::to_string(a.left) + sym + std::to_string(a.right) + ";" + std::to_string(a.label) + ")";
        }
    }
    return out;
}

bool is_generalized_shell(const std::vector<OrientedArc>& arcs, int n) {
    std::vector<OrientedArc> frowns, smiles;
    for (const auto& a : arcs) {
        if (a.left < 1 || a.right > n || a.left > a.right) return false;
        (a.orientation == Orientation::Frown ? frowns : smiles).push_back(a);
    }
    if (frowns.empty()) return false;
    std::set<std::pair<int, int>> fset, sset;
    for (const auto& a : frowns)
        if (!fset.emplace(a.left, a.right).second) return false;
    for (const auto& a : smiles)
        if (!sset.emplace(a.left, a.right).second) return false;

    // The outer frown starts at the smallest left endpoint.
    int i = n + 1;
    for (const auto& a : arcs) i = std::min(i, a.left);
    std::vector<std::vector<int>> I, L;
    int outer_right = 0;
    for (const auto& a : frowns)
        if (a.left == i) {
            if (outer_right) return false;
            outer_right = a.right;
        }
    if (!outer_right) return false;
    I.push_back({i});
    L.push_back({outer_right});
    std::size_t used_f = 1, used_s = 0;
    while (true) {
        const int top = I.back().back();
        std::vector<int> next_l;
        for (const auto& a : smiles)
            if (a.left == top) next_l.push_back(a.right);
        if (next_l.empty()) break;
        std::sort(next_l.begin(), next_l.end());
        used_s += next_l.size();
        L.push_back(next_l);
        std::vector<int> next_i;
        for (const auto& a : frowns)
            if (a.right == next_l.front() && !(I.size() == 1 && a.left == i)) next_i.push_back(a.left);
        if (next_i.empty()) break;
        std::sort(next_i.begin(), next_i.end());
        used_f += next_i.size();
        I.push_back(next_i);
    }
    if (used_f != frowns.size() || used_s != smiles.size()) return false;
    for (std::size_t r = 1; r < I.size(); ++r)
        if (!(I[r - 1].back() < I[r].front())) return false;
    for (std::size_t r = 1; r < L.size(); ++r)
        if (!(L[r].back() < L[r - 1].front())) return false;
    // Frowns of I_r each end at min L_r; guard against frowns we attributed twice.
    for (std::size_t r = 0; r < I.size(); ++r)
        for (int j : I[r])
            if (!fset.count({j, L[r].front()})) return false;
    return I.back().back() <= L.back().front();
}

static bool strict_impl(const LabeledShell& s, bool semi) {
    for (const auto& x : s.arcs) {
        if (x.is_loop()) continue;
        for (const auto& y : s.arcs) {
            if (&x == &y || y.is_loop()) continue;
            if (x.dimension() > y.dimension() && !(x.label < y.label)) return false;
            if (semi) continue;
            const bool conflict = x.left == y.left || x.right == y.right;
            if (conflict && x.kind == y.kind && !x.is_degenerate() && !y.is_degenerate() && y.label == x.label + 1)
                return false;
        }
    }
    return true;
}

bool is_strict(const LabeledShell& s) { return strict_impl(s, false); }
bool is_semi_strict(const LabeledShell& s) { return strict_impl(s, true); }

bool is_semi_strict(const ShellTableau& t) { return static_cast<bool>(is_shell_tableau(t, true)); }

static TableauCheck fail(std::string why) { return {false, std::move(why)}; }

static TableauCheck check_conditions(const ShellTableau& t, bool semi_strict) {
    const int n = t.n;
    const int k = t.length();
    if (n < 1) return fail("ground set must be nonempty");
    if (k == 0) return fail("empty tableau");
    for (int r = 0; r < k; ++r) {
        const auto& s = t.shells[r];
        if (s.arcs.empty()) return fail("shell " + std::to_string(r + 1) + " is empty");
        for (std::size_t a = 0; a < s.arcs.size(); ++a) {
            const auto& x = s.arcs[a];
            if (a && s.arcs[a - 1].label >= x.label) return fail("shell arcs not sorted by label");
            if (x.is_loop()) {
                if (x.left != n || x.right != n) return fail("loop must be (n,n)");
                if (s.arcs.size() != 1) return fail("loop outside a singleton shell");
            } else if (x.left < 1 || x.right > n || x.left > x.right || (x.left == x.right && x.left == n)) {
                return fail("arc out of range");
            }
        }
        std::vector<OrientedArc> plain;
        for (const auto& x : s.arcs)
            if (!x.is_loop())
                plain.push_back({x.left, x.right, x.kind == ArcKind::Frown ? Orientation::Frown : Orientation::Smile});
        if (!plain.empty() && !is_generalized_shell(plain, n))
            return fail("shell " + std::to_string(r + 1) + " is not a generalized shell");
    }

    // Condition 1
    for (int r = 0; r + 1 < k; ++r) {
        const auto& s = t.shells[r];
        if (!((s.arcs.size() == 1 && s.arcs[0].is_loop()) || s.arcs.size() >= 2))
            return fail("condition 1: shell " + std::to_string(r + 1) + " is a lone arc");
    }
    {
        const auto& last = t.shells.back();
        if (last.arcs.size() != 1 || last.arcs[0].right != n || last.arcs[0].kind == ArcKind::Smile)
            return fail("condition 1: last shell must be a single arc ending at n");
    }

    // Condition 2
    const int total = t.total_labels();
    std::vector<const LabeledArc*> by_label(total + 2, nullptr);
    std::vector<int> where(total + 2, -1);
    for (int r = 0; r < k; ++r)
        for (const auto& x : t.shells[r].arcs) {
            if (x.label < 1 || x.label > total || by_label[x.label])
                return fail("condition 2: labels are not exactly 1.." + std::to_string(total));
            by_label[x.label] = &x;
            where[x.label] = r;
        }

    // Condition 3
    for (int r = 0; r + 1 < k; ++r) {
        const auto& s = t.shells[r];
        const int second = s.arcs.size() >= 2 ? s.arcs[1].label : s.arcs[0].label;
        if (!(second < t.shells[r + 1].min_label()))
            return fail("condition 3: shell " + std::to_string(r + 1) + " starts too late");
    }

    for (int r = 0; r < k; ++r)
        if (!strict_impl(t.shells[r], semi_strict))
            return fail(std::string(semi_strict ? "semi-strict" : "strict") + " labelling violated in shell " +
                        std::to_string(r + 1));

    // Conditions 4 and 5: conflicting outer arcs from different shells force
    // the next label onto the inner whorl of the shell that owns the shorter side.
    auto top_upto = [&](int r, int a) -> const LabeledArc* {
        const LabeledArc* best = nullptr;
        for (const auto& x : t.shells[r].arcs)
            if (x.label <= a) best = &x;
        return best;
    };
    for (int side = 0; side < 2; ++side) {
        std::map<int, std::vector<const LabeledArc*>> groups;
        for (const auto& s : t.shells)
            for (const auto& x : s.arcs)
                if (!x.is_loop() && !x.is_degenerate()) groups[side == 0 ? x.left : x.right].push_back(&x);
        for (auto& [node, g] : groups) {
            std::sort(g.begin(), g.end(), [](auto* a, auto* b) { return a->label < b->label; });
            for (std::size_t u = 0; u + 1 < g.size(); ++u) {
                const LabeledArc& x = *g[u];
                const LabeledArc& y = *g[u + 1];
                if (where[x.label] == where[y.label]) continue;
                if ((side == 0 ? x.right == y.right : x.left == y.left)) continue;
                if (top_upto(where[x.label], y.label - 1) != &x) continue;
                const int b = y.label;
                if (b + 1 > total) return fail(side == 0 ? "condition 4: missing inner arc" : "condition 5: missing inner arc");
                const LabeledArc& z = *by_label[b + 1];
                if (side == 0) {
                    const int i = x.left, mn = std::min(x.right, y.right);
                    const LabeledArc& src = x.right == mn ? x : y;
                    if (!(z.right == mn && i < z.left && z.left <= mn && where[z.label] == where[src.label]))
                        return fail("condition 4 violated at label " + std::to_string(b + 1));
                } else {
                    const int m = x.right, mx = std::max(x.left, y.left);
                    const LabeledArc& src = x.left == mx ? x : y;
                    if (!(z.left == mx && mx <= z.right && z.right < m && where[z.label] == where[src.label]))
                        return fail("condition 5 violated at label " + std::to_string(b + 1));
                }
            }
        }
    }
    return {};
}

SetPartition shape_at(int a, const ShellTableau& t) {
    ArcSet arcs;
    for (const auto& s : t.shells) {
        const LabeledArc* best = nullptr;
        for (const auto& x : s.arcs)
            if (x.label <= a) best = &x;
        if (best && !best->is_loop() && !best->is_degenerate()) arcs.push_back({best->left, best->right});
    }
    return SetPartition(t.n, std::move(arcs));
}

SetPartition shape(const ShellTableau& t) { return shape_at(t.total_labels(), t); }

namespace {

struct RestrictionSlot {
    int shell;        // shell receiving the step's smile for this frown
    int smile_label;  // label of that smile
    int i_s;
    std::vector<int> y; // candidate extra smile endpoints, descending
};

struct Chain {
    std::vector<int> I, L; // frowns (I[r], L[r]), smiles (I[r], L[r+1])
};

Chain chain_of(const ArcSet& frowns, const ArcSet& smiles, int n) {
    auto sh = is_shell(frowns, smiles, n);
    if (!sh) throw std::logic_error("symmetric difference of consecutive path entries is not a shell");
    Chain c;
    for (const Arc& f : sh->frowns) c.I.push_back(f.left);
    c.L.push_back(sh->anchor.right);
    for (const Arc& s : sh->smiles) c.L.push_back(s.right);
    return c;
}

void validate_path(const Path& p, int n, BranchingCache& cache) {
    if (p.steps.empty() || p.steps.size() % 2 == 0) throw DomainError("a path has 2k+1 entries");
    if (p.steps[0] != SetPartition::empty(n)) throw DomainError("a path starts at the empty partition of [n]");
    for (std::size_t h = 1; h < p.steps.size(); ++h) {
        const auto& prev = p.steps[h - 1];
        const auto& cur = p.steps[h];
        if (cur.n() != (h % 2 ? n - 1 : n)) throw DomainError("path entries alternate between [n] and [n-1]");
        const bool edge = h % 2 ? cache.restricted(prev).contains(cur) : !induction_coefficient(prev, cur).is_zero();
        if (!edge) throw DomainError("path step " + std::to_string(h) + " is not an edge of the diagram");
    }
}

int shell_with_top(const std::vector<std::vector<LabeledArc>>& T, int left, int right) {
    for (std::size_t r = 0; r < T.size(); ++r) {
        const auto& x = T[r].back();
        if (!x.is_loop() && !x.is_degenerate() && x.left == left && x.right == right) return static_cast<int>(r);
    }
    throw std::logic_error("no shell ends with arc " + std::to_string(left) + "-" + std::to_string(right));
}

ShellTableau construct(const Path& p, int n, BranchingCache* cache, std::vector<RestrictionSlot>* slots) {
    BranchingCache local;
    BranchingCache& bc = cache ? *cache : local;
    validate_path(p, n, bc);

    std::vector<std::vector<LabeledArc>> T;
    int N = 0;
    for (std::size_t h = 1; h < p.steps.size(); ++h) {
        const ArcSet& prev = p.steps[h - 1].arcs();
        const ArcSet& cur = p.steps[h].arcs();
        if (h % 2 == 1) {
            if (prev != cur) {
                const Chain c = chain_of(arc_difference(prev, cur), arc_difference(cur, prev), n);
                const ArcSet common = arc_intersection(prev, cur);
                for (std::size_t s = 0; s < c.I.size(); ++s) {
                    const int r = shell_with_top(T, c.I[s], c.L[s]);
                    const int target = s + 1 < c.L.size() ? c.L[s + 1] : c.I[s];
                    const int label = N + static_cast<int>(s) + 1;
                    T[r].push_back({c.I[s], target, label, ArcKind::Smile});
                    if (slots) {
                        RestrictionSlot slot{r, label, c.I[s], {}};
                        for (const Arc& a : common)
                            if (a.left < c.I[s] && c.I[s] < a.right && target <= a.right && a.right < c.L[s])
                                slot.y.push_back(a.right);
                        std::sort(slot.y.rbegin(), slot.y.rend());
                        slots->push_back(std::move(slot));
                    }
                }
                N += static_cast<int>(c.I.size());
            }
            T.push_back({{n, n, ++N, ArcKind::Loop}});
        } else if (prev != cur) {
            const Chain c = chain_of(arc_difference(cur, prev), arc_difference(prev, cur), n);
            if (T.empty() || T.back().size() != 1 || !T.back()[0].is_loop())
                throw std::logic_error("induction step without a placeholder loop");
            const int lab = T.back()[0].label;
            const std::size_t smiles = c.L.size() - 1;
            std::vector<int> owners;
            for (std::size_t s = 0; s < smiles; ++s) owners.push_back(shell_with_top(T, c.I[s], c.L[s + 1]));
            T.back() = {{c.I[0], c.L[0], lab, ArcKind::Frown}};
            for (std::size_t s = 0; s < smiles; ++s) {
                const int left = s + 1 < c.I.size() ? c.I[s + 1] : c.L[s + 1];
                T[owners[s]].push_back({left, c.L[s + 1], lab + static_cast<int>(s) + 1, ArcKind::Frown});
            }
            N += static_cast<int>(smiles);
        }
    }
    ShellTableau out;
    out.n = n;
    for (auto& s : T) out.shells.push_back({std::move(s)});
    if (shape(out).arcs() != p.steps.back().arcs())
        throw std::logic_error("constructed tableau has the wrong shape");
    return out;
}

} // namespace

ShellTableau path_to_tableau(const Path& p, int n, BranchingCache* cache) {
    return construct(p, n, cache, nullptr);
}

// Path read off by label thresholds; assumes conditions 1-5 hold.
static Path threshold_path(const ShellTableau& t) {
    const int k = t.length();
    const int total = t.total_labels();
    std::vector<const LabeledArc*> by_label(total + 1, nullptr);
    for (const auto& s : t.shells)
        for (const auto& x : s.arcs) by_label[x.label] = &x;

    Path p;
    p.steps.push_back(SetPartition::empty(t.n));
    for (int r = 0; r < k; ++r) {
        const int m = t.shells[r].min_label();
        p.steps.push_back(shape_at(m - 1, t).regrounded(t.n - 1));
        int e = total;
        if (r + 1 < k) {
            const int next_min = t.shells[r + 1].min_label();
            e = m;
            for (int a = m + 1; a < next_min && by_label[a]->kind == ArcKind::Frown; ++a) e = a;
        }
        p.steps.push_back(shape_at(e, t));
    }
    return p;
}

TableauCheck is_shell_tableau(const ShellTableau& t, bool semi_strict) {
    if (auto chk = check_conditions(t, semi_strict); !chk) return chk;
    // The conditions as read still admit a few relabelings inside one
    // restriction block. Rebuilding from the threshold path rules them out.
    try {
        const Path p = threshold_path(t);
        if (!semi_strict) {
            if (path_to_tableau(p, t.n) != t) return fail("labels differ from the tableau of its own path");
        } else {
            const auto all = semistrict_expansions(p, t.n);
            if (std::find(all.begin(), all.end(), t) == all.end())
                return fail("not a semi-strict expansion of its own path");
        }
    } catch (const DomainError& e) {
        return fail(std::string("shapes do not form a path: ") + e.what());
    }
    return {};
}

Path tableau_to_path(const ShellTableau& t) {
    if (auto chk = is_shell_tableau(t, true); !chk) throw DomainError("not a shell tableau: " + chk.violation);
    return threshold_path(t);
}

std::vector<ShellTableau> semistrict_expansions(const Path& p, int n, BranchingCache* cache) {
    std::vector<RestrictionSlot> slots;
    const ShellTableau base = construct(p, n, cache, &slots);

    // Every slot contributes one subset of its Y; iterate the product as a mixed-radix bitmask.
    std::size_t bits = 0;
    for (const auto& s : slots) bits += s.y.size();
    if (bits > 20) throw DomainError("too many semi-strict expansions to enumerate");

    struct Keyed {
        int shell;
        LabeledArc arc;
        std::pair<int, int> key;
    };
    std::vector<ShellTableau> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
        std::vector<Keyed> all;
        for (int r = 0; r < base.length(); ++r)
            for (const auto& x : base.shells[r].arcs) all.push_back({r, x, {x.label, 0}});
        std::size_t bit = 0;
        for (const auto& s : slots)
            for (int m : s.y)
                if (mask >> bit++ & 1) all.push_back({s.shell, {s.i_s, m, 0, ArcKind::Smile}, {s.smile_label, -m}});
        std::sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
        ShellTableau t;
        t.n = n;
        t.shells.resize(base.shells.size());
        for (std::size_t idx = 0; idx < all.size(); ++idx) {
            LabeledArc x = all[idx].arc;
            x.label = static_cast<int>(idx) + 1;
            t.shells[all[idx].shell].arcs.push_back(x);
        }
        out.push_back(std::move(t));
    }
    return out;
}

BigInt count_semistrict(const BratteliDiagram& d, const SetPartition& lambda, int k) {
    if (d.index_of(2 * k, lambda) < 0) return 0;
    BranchingCache cache;
    BigInt total = 0;
    PathStream stream(d, lambda, 2 * k);
    Path p;
    while (stream.next(p)) {
        if (k == 0) {
            total += 1;
            continue;
        }
        std::vector<RestrictionSlot> slots;
        construct(p, d.n, &cache, &slots);
        std::size_t bits = 0;
        for (const auto& s : slots) bits += s.y.size();
        total += BigInt(1) << bits;
    }
    return total;
}

} // namespace superbranch
