#pragma once

#include <string>
#include <vector>

#include "superbranch/branching.hpp"
#include "superbranch/coeff.hpp"
#include "superbranch/setpartition.hpp"

namespace superbranch {

/// Λ(n) through level k. Half-step h = 0..2k: even h are over [n] (level h/2),
/// odd h over [n−1] (level h/2 + ½). Vertices of each half-step are sorted by
/// their canonical partition string.
struct BratteliDiagram {
    struct Edge {
        int half_step = 0; // source half-step; target is half_step + 1
        int from = 0;
        int to = 0;
        QMonomial label;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    int n = 0;
    int k = 0;
    std::vector<std::vector<SetPartition>> levels;
    /// Sorted by (half_step, from, to).
    std::vector<Edge> edges;

    /// Index of p within half-step h, or -1.
    int index_of(int h, const SetPartition& p) const;
    /// Edges leaving vertex `from` of half-step h, in target order.
    std::pair<std::size_t, std::size_t> out_edges(int h, int from) const;
    /// The label on the edge, or zero when absent.
    QMonomial label(int h, int from, int to) const;

    friend bool operator==(const BratteliDiagram&, const BratteliDiagram&) = default;
};

BratteliDiagram build(int n, int k, BranchingCache* cache = nullptr);

/// λ⁰, λ^½, …, λ^k with alternating ground sets.
struct Path {
    std::vector<SetPartition> steps;

    int length() const { return static_cast<int>(steps.size() / 2); }
    friend auto operator<=>(const Path&, const Path&) = default;
};

std::string format_path(const Path& p);

/// Depth-first enumeration of every path from ∅ to one vertex. Children are
/// visited in vertex order, so output order is deterministic. Each stream owns
/// its state; several may walk the same diagram concurrently.
class PathStream {
public:
    /// Throws DomainError if (λ, half_step) is not a vertex.
    PathStream(const BratteliDiagram& d, const SetPartition& lambda, int half_step);
    bool next(Path& out);

private:
    const BratteliDiagram& d_;
    int target_h_;
    int target_idx_;
    std::vector<std::vector<char>> reaches_; // reaches_[h][v]: v has a path to the target
    std::vector<int> stack_;                 // vertex index per half-step
    std::vector<std::size_t> cursor_;        // next edge to try per depth
    bool done_ = false;
    bool started_ = false;
};

/// All paths to (λ, k) where k counts full levels.
std::vector<Path> paths_to(const BratteliDiagram& d, const SetPartition& lambda, int k);

/// Product of all 2k edge labels. Throws DomainError if a step is not an edge.
QMonomial path_weight(const BratteliDiagram& d, const Path& p);

/// Σ of path weights into (λ, k), by dynamic programming. Zero if absent.
LaurentPoly multiplicity(const BratteliDiagram& d, const SetPartition& lambda, int k);

/// Number of paths into each vertex of half-step h, in vertex order.
std::vector<BigInt> path_counts(const BratteliDiagram& d, int h);

std::string export_dot(const BratteliDiagram& d);

std::string diagram_to_json(const BratteliDiagram& d);
/// Throws DomainError on a malformed document or version mismatch.
BratteliDiagram diagram_from_json(const std::string& text);

} // namespace superbranch
