#pragma once

#include <string>
#include <vector>

#include "superbranch/branching.hpp"
#include "superbranch/bratteli.hpp"
#include "superbranch/setpartition.hpp"

namespace superbranch {

enum class ArcKind { Frown, Smile, Loop };

/// (i, l; label). Loops are (n, n). A frown or smile with left == right < n
/// is degenerate: it marks an arc that was removed, has dimension −1, and
/// never appears in a shape.
struct LabeledArc {
    int left = 0;
    int right = 0;
    int label = 0;
    ArcKind kind = ArcKind::Frown;

    bool is_loop() const { return kind == ArcKind::Loop; }
    bool is_degenerate() const { return !is_loop() && left == right; }
    int dimension() const { return right - left - 1; }

    friend auto operator<=>(const LabeledArc&, const LabeledArc&) = default;
};

/// Arcs sorted by label.
struct LabeledShell {
    std::vector<LabeledArc> arcs;

    int min_label() const { return arcs.front().label; }
    const LabeledArc& top() const { return arcs.back(); }
    friend auto operator<=>(const LabeledShell&, const LabeledShell&) = default;
};

struct ShellTableau {
    int n = 0;
    std::vector<LabeledShell> shells;

    int length() const { return static_cast<int>(shells.size()); }
    int total_labels() const;
    friend auto operator<=>(const ShellTableau&, const ShellTableau&) = default;
};

std::string format_tableau(const ShellTableau& t);

/// Arcs of the form {j⌢min L_r : j ∈ I_r} ∪ {max I_r ⌣ m : m ∈ L_{r+1}} with
/// {i} = I_1 < … < I_s ≤ L_{s′} < … < L_1 = {l}. Degenerate arcs are allowed.
bool is_generalized_shell(const std::vector<OrientedArc>& arcs, int n);

bool is_strict(const LabeledShell& s);
bool is_semi_strict(const LabeledShell& s);
bool is_semi_strict(const ShellTableau& t);

struct TableauCheck {
    bool ok = true;
    std::string violation; // empty when ok

    explicit operator bool() const { return ok; }
};

/// Conditions 1–5 plus strictness (or semi-strictness) of every shell.
TableauCheck is_shell_tableau(const ShellTableau& t, bool semi_strict = false);

/// For each shell, the non-loop, non-degenerate arc with the largest label ≤ a.
SetPartition shape_at(int a, const ShellTableau& t);
SetPartition shape(const ShellTableau& t);

/// Throws DomainError when P is not a path of Λ(n).
ShellTableau path_to_tableau(const Path& p, int n, BranchingCache* cache = nullptr);

/// Inverse of path_to_tableau; accepts semi-strict tableaux too.
/// Throws DomainError when t is not a (semi-strict) shell tableau.
Path tableau_to_path(const ShellTableau& t);

/// The 2^{Σ|Y_s|} semi-strict tableaux attached to P at q = 2. The first
/// member (all X_s empty) is path_to_tableau(P).
std::vector<ShellTableau> semistrict_expansions(const Path& p, int n, BranchingCache* cache = nullptr);

/// Σ over paths to (λ, k) of the number of semi-strict expansions.
BigInt count_semistrict(const BratteliDiagram& d, const SetPartition& lambda, int k);

} // namespace superbranch
