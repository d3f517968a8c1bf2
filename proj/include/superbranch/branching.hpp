#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "superbranch/coeff.hpp"
#include "superbranch/setpartition.hpp"

namespace superbranch {

enum class Orientation { Frown, Smile };

struct OrientedArc {
    int left = 0;
    int right = 0;
    Orientation orientation = Orientation::Frown;

    friend auto operator<=>(const OrientedArc&, const OrientedArc&) = default;
};

/// Frowns i_r⌢l_r (r=1..s) and smiles i_r⌣l_{r+1} (r=1..s'−1), listed outermost first.
struct Shell {
    int n = 0;
    ArcSet frowns;
    ArcSet smiles;
    int s = 0;
    int s_prime = 0;
    Arc anchor;

    int width() const { return anchor.right - anchor.left; }
    std::vector<OrientedArc> oriented() const;
};

/// Decomposes frowns ∪ smiles as a shell, or returns nullopt.
std::optional<Shell> is_shell(const ArcSet& frowns, const ArcSet& smiles, int n);

int whorl_count(const Shell& sh);

/// C^{λ, i⌢l} by the recursive description. Members are over [λ.n()]; node l
/// is isolated in every member when l = n. Sorted.
std::vector<SetPartition> shell_set(const SetPartition& lambda, int i, int l);

/// Same set by scanning every partition of [n]; a test oracle.
std::vector<SetPartition> shell_set_bruteforce(const SetPartition& lambda, int i, int l);

/// True iff the symmetric difference of λ∪{i⌢l} and μ is a shell whose outer frown is i⌢l.
bool in_shell_set(const SetPartition& lambda, int i, int l, const SetPartition& mu);

/// The shell coefficient on raw arc sets: t^{|B−M|} q^{crs(B∩M, B−M)} / q^{crs(B∩M, M−B)}.
/// No membership check and no integrality check.
QMonomial shell_coefficient_raw(const ArcSet& big, const ArcSet& mu);

/// c_μ^{λ,i⌢l}. Throws DomainError if μ is not in the shell set.
QMonomial shell_coefficient(const SetPartition& lambda, int i, int l, const SetPartition& mu);

/// χ^λ ⊙ χ^{i⌢×l} as a combination over [λ.n()].
CharCombination tensor_expand_arc(const SetPartition& lambda, int i, int l);

struct TensorPairResult {
    enum class Kind { NonConflicting, SharedRight, SharedLeft };
    Kind kind;
    /// The arc that survives unchanged (the longer one when they conflict).
    Arc kept;
    /// The shorter arc, rewritten as χ^{j⌢×k} (SharedRight) or χ^{j×⌢k} (SharedLeft).
    Arc deferred;
    /// Closed-form expansion when one exists: NonConflicting and SharedRight.
    std::optional<CharCombination> expansion;
};

/// χ^{a} ⊙ χ^{b} for two distinct arcs over [n].
TensorPairResult tensor_pair(Arc a, Arc b, int n);

/// Res χ^{i⌢l} from U_n to U_{n−1}, over [n−1].
CharCombination restrict_arc(int i, int l, int n);

/// Res χ^λ from U_n to U_{n−1}, over [n−1].
CharCombination restrict(const SetPartition& lambda);

enum class InduceMethod { ReverseShell, BellScan };

/// Ind χ^μ from U_{n−1} to U_n, over [n]. μ must be over [n−1].
CharCombination induce(const SetPartition& mu, int n, InduceMethod method = InduceMethod::ReverseShell);

/// The induction coefficient d_μ^λ, zero when μ is not in the restriction support of λ.
QMonomial induction_coefficient(const SetPartition& mu, const SetPartition& lambda);

/// Σ_{i⌢k∈λ, i<j<k<l} q^{crs(λ, j⌢k)} = [crs(λ, j⌢l)]_q, compared canonically.
bool q_crossing_identity_check(const SetPartition& lambda, int j, int l);

/// Thread-safe memo of restrict/induce keyed by partition. Results are
/// deterministic, so concurrent duplicate work is harmless.
class BranchingCache {
public:
    const CharCombination& restricted(const SetPartition& lambda);
    const CharCombination& induced(const SetPartition& mu, int n);

private:
    std::shared_mutex mtx_;
    std::map<SetPartition, std::unique_ptr<CharCombination>> res_;
    std::map<SetPartition, std::unique_ptr<CharCombination>> ind_;
};

} // namespace superbranch
