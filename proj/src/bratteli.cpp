#include "superbranch/bratteli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace superbranch {

int BratteliDiagram::index_of(int h, const SetPartition& p) const {
    if (h < 0 || h >= static_cast<int>(levels.size())) return -1;
    const auto& lv = levels[h];
    auto it = std::find(lv.begin(), lv.end(), p);
    return it == lv.end() ? -1 : static_cast<int>(it - lv.begin());
}

std::pair<std::size_t, std::size_t> BratteliDiagram::out_edges(int h, int from) const {
    auto key = [](const Edge& e) { return std::pair(e.half_step, e.from); };
    auto lo = std::lower_bound(edges.begin(), edges.end(), std::pair(h, from),
                               [&](const Edge& e, const std::pair<int, int>& k) { return key(e) < k; });
    auto hi = std::upper_bound(edges.begin(), edges.end(), std::pair(h, from),
                               [&](const std::pair<int, int>& k, const Edge& e) { return k < key(e); });
    return {static_cast<std::size_t>(lo - edges.begin()), static_cast<std::size_t>(hi - edges.begin())};
}

QMonomial BratteliDiagram::label(int h, int from, int to) const {
    auto [lo, hi] = out_edges(h, from);
    for (std::size_t e = lo; e < hi; ++e)
        if (edges[e].to == to) return edges[e].label;
    return QMonomial::zero();
}

static void sort_level(std::vector<SetPartition>& lv) {
    std::vector<std::pair<std::string, SetPartition>> keyed;
    for (auto& p : lv) keyed.emplace_back(format_partition(p), p);
    std::sort(keyed.begin(), keyed.end());
    lv.clear();
    for (auto& [s, p] : keyed) lv.push_back(std::move(p));
}

BratteliDiagram build(int n, int k, BranchingCache* cache) {
    if (n < 2) throw DomainError("Bratteli diagram needs n >= 2");
    if (k < 0) throw DomainError("Bratteli diagram needs k >= 0");
    BranchingCache local;
    BranchingCache& bc = cache ? *cache : local;

    BratteliDiagram d;
    d.n = n;
    d.k = k;
    d.levels.push_back({SetPartition::empty(n)});
    for (int h = 0; h < 2 * k; ++h) {
        const auto& src = d.levels[h];
        std::vector<const CharCombination*> outs;
        std::map<SetPartition, char> seen;
        for (const SetPartition& v : src) {
            const CharCombination& c = (h % 2 == 0) ? bc.restricted(v) : bc.induced(v, n);
            outs.push_back(&c);
            for (const auto& [w, coeff] : c.terms()) seen.emplace(w, 1);
        }
        std::vector<SetPartition> next;
        for (const auto& [w, unused] : seen) next.push_back(w);
        sort_level(next);
        std::map<SetPartition, int> pos;
        for (int j = 0; j < static_cast<int>(next.size()); ++j) pos.emplace(next[j], j);
        for (int v = 0; v < static_cast<int>(src.size()); ++v) {
            std::vector<BratteliDiagram::Edge> es;
            for (const auto& [w, coeff] : outs[v]->terms()) es.push_back({h, v, pos.at(w), coeff});
            std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) { return a.to < b.to; });
            d.edges.insert(d.edges.end(), es.begin(), es.end());
        }
        d.levels.push_back(std::move(next));
    }
    return d;
}

std::string format_path(const Path& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (i) out += "; ";
        std::string s = format_partition(p.steps[i]);
        out += s.empty() ? "∅" : s;
    }
    return out + ")";
}

PathStream::PathStream(const BratteliDiagram& d, const SetPartition& lambda, int half_step)
    : d_(d), target_h_(half_step), target_idx_(d.index_of(half_step, lambda)) {
    if (target_idx_ < 0)
        throw DomainError("(" + format_partition(lambda) + ", half-step " + std::to_string(half_step) +
                          ") is not a vertex of the diagram");
    reaches_.resize(target_h_ + 1);
    for (int h = 0; h <= target_h_; ++h) reaches_[h].assign(d_.levels[h].size(), 0);
    reaches_[target_h_][target_idx_] = 1;
    for (int h = target_h_ - 1; h >= 0; --h)
        for (int v = 0; v < static_cast<int>(d_.levels[h].size()); ++v) {
            auto [lo, hi] = d_.out_edges(h, v);
            for (std::size_t e = lo; e < hi && !reaches_[h][v]; ++e) reaches_[h][v] = reaches_[h + 1][d_.edges[e].to];
        }
}

bool PathStream::next(Path& out) {
    if (done_) return false;
    auto emit = [&] {
        out.steps.clear();
        for (int h = 0; h < static_cast<int>(stack_.size()); ++h) {
            SetPartition p = d_.levels[h][stack_[h]];
            out.steps.push_back(std::move(p));
        }
    };
    if (!started_) {
        started_ = true;
        if (!reaches_[0][0]) {
            done_ = true;
            return false;
        }
        stack_ = {0};
        cursor_ = {d_.out_edges(0, 0).first};
        if (target_h_ == 0) {
            emit();
            done_ = true;
            return true;
        }
    }
    while (!stack_.empty()) {
        const int depth = static_cast<int>(stack_.size()) - 1;
        if (depth == target_h_) {
            stack_.pop_back();
            cursor_.pop_back();
            continue;
        }
        const std::size_t end = d_.out_edges(depth, stack_[depth]).second;
        if (cursor_[depth] >= end) {
            stack_.pop_back();
            cursor_.pop_back();
            continue;
        }
        const auto& e = d_.edges[cursor_[depth]++];
        if (!reaches_[depth + 1][e.to]) continue;
        stack_.push_back(e.to);
        cursor_.push_back(d_.out_edges(depth + 1, e.to).first);
        if (depth + 1 == target_h_) {
            emit();
            return true;
        }
    }
    done_ = true;
    return false;
}

std::vector<Path> paths_to(const BratteliDiagram& d, const SetPartition& lambda, int k) {
    PathStream s(d, lambda, 2 * k);
    std::vector<Path> out;
    Path p;
    while (s.next(p)) out.push_back(p);
    return out;
}

QMonomial path_weight(const BratteliDiagram& d, const Path& p) {
    if (p.steps.empty()) throw DomainError("empty path");
    if (static_cast<int>(p.steps.size()) > static_cast<int>(d.levels.size()))
        throw DomainError("path longer than the diagram");
    int v = d.index_of(0, p.steps[0]);
    if (v < 0) throw DomainError("path does not start at the root");
    QMonomial w = QMonomial::one();
    for (std::size_t h = 1; h < p.steps.size(); ++h) {
        const int u = d.index_of(static_cast<int>(h), p.steps[h]);
        QMonomial c = u < 0 ? QMonomial::zero() : d.label(static_cast<int>(h) - 1, v, u);
        if (c.is_zero()) throw DomainError("step " + std::to_string(h) + " of the path is not an edge");
        w = w * c;
        v = u;
    }
    return w;
}

LaurentPoly multiplicity(const BratteliDiagram& d, const SetPartition& lambda, int k) {
    const int target_h = 2 * k;
    const int idx = d.index_of(target_h, lambda);
    if (idx < 0) return {};
    std::vector<LaurentPoly> cur{LaurentPoly::constant(1)};
    for (int h = 0; h < target_h; ++h) {
        std::vector<LaurentPoly> nxt(d.levels[h + 1].size());
        for (int v = 0; v < static_cast<int>(cur.size()); ++v) {
            auto [lo, hi] = d.out_edges(h, v);
            for (std::size_t e = lo; e < hi; ++e)
                nxt[d.edges[e].to] += canonicalize(d.edges[e].label) * cur[v];
        }
        cur = std::move(nxt);
    }
    return cur[idx];
}

std::vector<BigInt> path_counts(const BratteliDiagram& d, int h_target) {
    std::vector<BigInt> cur{1};
    for (int h = 0; h < h_target; ++h) {
        std::vector<BigInt> nxt(d.levels[h + 1].size(), 0);
        for (int v = 0; v < static_cast<int>(cur.size()); ++v) {
            auto [lo, hi] = d.out_edges(h, v);
            for (std::size_t e = lo; e < hi; ++e) nxt[d.edges[e].to] += cur[v];
        }
        cur = std::move(nxt);
    }
    return cur;
}

static std::string level_name(int h) {
    return h % 2 == 0 ? std::to_string(h / 2) : std::to_string(h / 2) + "+1/2";
}

std::string export_dot(const BratteliDiagram& d) {
    std::ostringstream os;
    os << "digraph bratteli {\n";
    os << "  label=\"n=" << d.n << ", k=" << d.k << "\";\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (int h = 0; h < static_cast<int>(d.levels.size()); ++h) {
        os << "  { rank=same; level" << h << " [shape=plaintext, label=\"" << level_name(h) << "\"];";
        for (std::size_t v = 0; v < d.levels[h].size(); ++v) os << " v" << h << "_" << v << ";";
        os << " }\n";
        for (std::size_t v = 0; v < d.levels[h].size(); ++v) {
            std::string s = format_partition(d.levels[h][v]);
            os << "  v" << h << "_" << v << " [label=\"" << (s.empty() ? "∅" : s) << "\"];\n";
        }
    }
    for (int h = 0; h + 1 < static_cast<int>(d.levels.size()); ++h)
        os << "  level" << h << " -> level" << h + 1 << " [style=invis];\n";
    for (const auto& e : d.edges) {
        os << "  v" << e.half_step << "_" << e.from << " -> v" << e.half_step + 1 << "_" << e.to;
        if (!(e.label == QMonomial::one())) os << " [label=\"" << to_string(e.label) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

using ojson = nlohmann::ordered_json;

std::string diagram_to_json(const BratteliDiagram& d) {
    ojson doc;
    doc["version"] = 1;
    doc["n"] = d.n;
    doc["k"] = d.k;
    ojson verts = ojson::array();
    for (int h = 0; h < static_cast<int>(d.levels.size()); ++h)
        for (const auto& p : d.levels[h]) verts.push_back({{"level", h}, {"partition", format_partition(p)}});
    doc["vertices"] = std::move(verts);
    ojson edges = ojson::array();
    for (const auto& e : d.edges) {
        edges.push_back({{"level", e.half_step},
                         {"from", format_partition(d.levels[e.half_step][e.from])},
                         {"to", format_partition(d.levels[e.half_step + 1][e.to])},
                         {"coeff", {{"sign", e.label.sign}, {"eq", e.label.eq}, {"et", e.label.et}}}});
    }
    doc["edges"] = std::move(edges);
    return doc.dump(1) + "\n";
}

BratteliDiagram diagram_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        if (doc.at("version").get<int>() != 1) throw DomainError("unsupported diagram cache version");
        BratteliDiagram d;
        d.n = doc.at("n").get<int>();
        d.k = doc.at("k").get<int>();
        d.levels.resize(2 * d.k + 1);
        for (const auto& v : doc.at("vertices")) {
            const int h = v.at("level").get<int>();
            if (h < 0 || h > 2 * d.k) throw DomainError("vertex level out of range");
            d.levels[h].push_back(parse_partition(v.at("partition").get<std::string>(), h % 2 ? d.n - 1 : d.n));
        }
        for (const auto& e : doc.at("edges")) {
            const int h = e.at("level").get<int>();
            if (h < 0 || h >= 2 * d.k) throw DomainError("edge level out of range");
            const int from = d.index_of(h, parse_partition(e.at("from").get<std::string>(), h % 2 ? d.n - 1 : d.n));
            const int to = d.index_of(h + 1, parse_partition(e.at("to").get<std::string>(), h % 2 ? d.n : d.n - 1));
            if (from < 0 || to < 0) throw DomainError("edge refers to an unknown vertex");
            const auto& c = e.at("coeff");
            d.edges.push_back(
                {h, from, to, QMonomial::make(c.at("sign").get<int>(), c.at("eq").get<int>(), c.at("et").get<int>())});
        }
        return d;
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("malformed diagram JSON: ") + ex.what());
    }
}

} // namespace superbranch
