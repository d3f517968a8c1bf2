#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superbranch {

/// Raised for malformed input and violated preconditions. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Arc {
    int left = 0;
    int right = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Sorted arc list. Not necessarily conflict-free: branching formulas apply
/// the statistics to differences such as λ−μ.
using ArcSet = std::vector<Arc>;

/// A set partition of [n] in arc form, with arcs sorted by (left, right).
class SetPartition {
public:
    SetPartition() = default;
    /// Validates and sorts. Throws DomainError on conflicts or bad endpoints.
    SetPartition(int n, ArcSet arcs);

    static SetPartition empty(int n) { return SetPartition(n, {}); }

    int n() const { return n_; }
    const ArcSet& arcs() const { return arcs_; }
    std::size_t size() const { return arcs_.size(); }
    bool is_empty() const { return arcs_.empty(); }

    bool contains(Arc a) const;
    bool has_left(int i) const;
    bool has_right(int j) const;
    /// Right endpoint of the arc starting at i, or 0.
    int right_of(int i) const;
    /// Left endpoint of the arc ending at j, or 0.
    int left_of(int j) const;

    /// Same arcs over a different ground set. Throws if an arc leaves [m].
    SetPartition regrounded(int m) const;

    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    int n_ = 0;
    ArcSet arcs_;
};

SetPartition parse_partition(std::string_view text, int n);
std::string format_partition(const SetPartition& sp);
std::string format_arcs(const ArcSet& arcs);

std::vector<std::vector<int>> parts(const SetPartition& sp);

int dim(const SetPartition& sp);
int dim(const ArcSet& arcs);

using ArcPair = std::pair<Arc, Arc>;

std::vector<ArcPair> crossing_set(const ArcSet& a, const ArcSet& b);
int crossing_number(const ArcSet& a, const ArcSet& b);
int crossing_number(const SetPartition& a, const SetPartition& b);

/// Pairs ((i,l),(j,k)) in a×b with i<j<k<l: arcs of b nested under arcs of a.
/// Written nst^λ_μ elsewhere; that is nesting_number(λ, μ).
std::vector<ArcPair> nesting_set(const ArcSet& a, const ArcSet& b);
int nesting_number(const ArcSet& a, const ArcSet& b);
int nesting_number(const SetPartition& a, const SetPartition& b);

// Sorted-set algebra on arc lists.
ArcSet arc_union(const ArcSet& a, const ArcSet& b);
ArcSet arc_intersection(const ArcSet& a, const ArcSet& b);
ArcSet arc_difference(const ArcSet& a, const ArcSet& b);
ArcSet with_arc(ArcSet a, Arc x);

/// Calls fn on every set partition of [n], in restricted-growth-string order.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn);
std::vector<SetPartition> enumerate_partitions(int n);

/// Bell numbers by the Bell triangle; fits in 64 bits for n ≤ 25.
std::uint64_t bell_number(int n);

} // namespace superbranch
