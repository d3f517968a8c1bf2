#include "superbranch/setpartition.hpp"

#include <algorithm>
#include <charconv>

namespace superbranch {

SetPartition::SetPartition(int n, ArcSet arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw DomainError("ground-set size must be nonnegative");
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<char> seen_left(n + 1, 0), seen_right(n + 1, 0);
    for (const Arc& a : arcs_) {
        if (a.left < 1 || a.right > n)
            throw DomainError("arc " + std::to_string(a.left) + "-" + std::to_string(a.right) +
                              " out of range for n=" + std::to_string(n));
        if (a.left >= a.right)
            throw DomainError("arc " + std::to_string(a.left) + "-" + std::to_string(a.right) +
                              " must have left < right");
        if (seen_left[a.left]++)
            throw DomainError("conflicting arcs: left endpoint " + std::to_string(a.left) + " repeated");
        if (seen_right[a.right]++)
            throw DomainError("conflicting arcs: right endpoint " + std::to_string(a.right) + " repeated");
    }
}

bool SetPartition::contains(Arc a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

bool SetPartition::has_left(int i) const { return right_of(i) != 0; }
bool SetPartition::has_right(int j) const { return left_of(j) != 0; }

int SetPartition::right_of(int i) const {
    for (const Arc& a : arcs_)
        if (a.left == i) return a.right;
    return 0;
}

int SetPartition::left_of(int j) const {
    for (const Arc& a : arcs_)
        if (a.right == j) return a.left;
    return 0;
}

SetPartition SetPartition::regrounded(int m) const { return SetPartition(m, arcs_); }

static int parse_int(std::string_view s, std::string_view token) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw DomainError("malformed arc token '" + std::string(token) + "'");
    return v;
}

SetPartition parse_partition(std::string_view text, int n) {
    ArcSet arcs;
    if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
            std::size_t dash = tok.find('-');
            if (dash == std::string_view::npos)
                throw DomainError("malformed arc token '" + std::string(tok) + "', expected i-j");
            arcs.push_back({parse_int(tok.substr(0, dash), tok), parse_int(tok.substr(dash + 1), tok)});
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return SetPartition(n, std::move(arcs));
}

std::string format_arcs(const ArcSet& arcs) {
    std::string out;
    for (const Arc& a : arcs) {
        if (!out.empty()) out += ',';
        out += std::to_string(a.left);
        out += '-';
        out += std::to_string(a.right);
    }
    return out;
}

std::string format_partition(const SetPartition& sp) { return format_arcs(sp.arcs()); }

std::vector<std::vector<int>> parts(const SetPartition& sp) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= sp.n(); ++i) {
        if (sp.has_right(i)) continue; // not the first node of its block
        std::vector<int> b{i};
        for (int j = sp.right_of(i); j != 0; j = sp.right_of(j)) b.push_back(j);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

int dim(const ArcSet& arcs) {
    int d = 0;
    for (const Arc& a : arcs) d += a.right - a.left - 1;
    return d;
}

int dim(const SetPartition& sp) { return dim(sp.arcs()); }

std::vector<ArcPair> crossing_set(const ArcSet& a, const ArcSet& b) {
    std::vector<ArcPair> out;
    for (const Arc& x : a)
        for (const Arc& y : b)
            if (x.left < y.left && y.left < x.right && x.right < y.right) out.emplace_back(x, y);
    return out;
}

int crossing_number(const ArcSet& a, const ArcSet& b) {
    int c = 0;
    for (const Arc& x : a)
        for (const Arc& y : b)
            c += (x.left < y.left && y.left < x.right && x.right < y.right);
    return c;
}

int crossing_number(const SetPartition& a, const SetPartition& b) {
    return crossing_number(a.arcs(), b.arcs());
}

std::vector<ArcPair> nesting_set(const ArcSet& a, const ArcSet& b) {
    std::vector<ArcPair> out;
    for (const Arc& x : a)
        for (const Arc& y : b)
            if (x.left < y.left && y.left < y.right && y.right < x.right) out.emplace_back(x, y);
    return out;
}

int nesting_number(const ArcSet& a, const ArcSet& b) {
    int c = 0;
    for (const Arc& x : a)
        for (const Arc& y : b)
            c += (x.left < y.left && y.left < y.right && y.right < x.right);
    return c;
}

int nesting_number(const SetPartition& a, const SetPartition& b) {
    return nesting_number(a.arcs(), b.arcs());
}

ArcSet arc_union(const ArcSet& a, const ArcSet& b) {
    ArcSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ArcSet arc_intersection(const ArcSet& a, const ArcSet& b) {
    ArcSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ArcSet arc_difference(const ArcSet& a, const ArcSet& b) {
    ArcSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ArcSet with_arc(ArcSet a, Arc x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it == a.end() || *it != x) a.insert(it, x);
    return a;
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn) {
    if (n < 0) throw DomainError("n must be nonnegative");
    // last[b] is the largest node placed so far in block b.
    std::vector<int> last(n + 1, 0);
    ArcSet arcs;
    arcs.reserve(n);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == n) {
            fn(SetPartition(n, arcs));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            int prev = b < blocks ? last[b] : 0;
            if (prev) arcs.push_back({prev, i + 1});
            last[b] = i + 1;
            self(self, i + 1, b == blocks ? blocks + 1 : blocks);
            last[b] = prev;
            if (prev) arcs.pop_back();
        }
    };
    rec(rec, 0, 0);
}

std::vector<SetPartition> enumerate_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::uint64_t bell_number(int n) {
    if (n < 0) throw DomainError("n must be nonnegative");
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

} // namespace superbranch
