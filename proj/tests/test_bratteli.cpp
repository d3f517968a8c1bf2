#include "test_support.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "superbranch/bratteli.hpp"
#include "superbranch/supercharacter.hpp"

using namespace superbranch;

namespace {

SetPartition P(const char* s, int n) { return parse_partition(s, n); }

Path make_path(std::initializer_list<const char*> steps, int n) {
    Path p;
    int h = 0;
    for (const char* s : steps) p.steps.push_back(parse_partition(s, h++ % 2 ? n - 1 : n));
    return p;
}

// Rebuilt from restrict / Bell-scan induce without the diagram code.
struct Reference {
    std::vector<std::set<SetPartition>> levels;
    std::map<std::tuple<int, SetPartition, SetPartition>, QMonomial> edges;
};

Reference reference(int n, int k) {
    Reference r;
    r.levels.push_back({SetPartition::empty(n)});
    for (int h = 0; h < 2 * k; ++h) {
        std::set<SetPartition> next;
        for (const SetPartition& v : r.levels[h]) {
            const CharCombination c = h % 2 == 0 ? restrict(v) : induce(v, n, InduceMethod::BellScan);
            for (const auto& [w, m] : c.terms()) {
                next.insert(w);
                r.edges[{h, v, w}] = m;
            }
        }
        r.levels.push_back(std::move(next));
    }
    return r;
}

// Transfer-matrix path counts: number of paths from the root to each vertex of
// level h, by repeated vector-matrix products over the reference edges.
std::map<SetPartition, BigInt> transfer_counts(const Reference& r, int h) {
    std::map<SetPartition, BigInt> cur{{*r.levels[0].begin(), 1}};
    for (int s = 0; s < h; ++s) {
        std::map<SetPartition, BigInt> next;
        for (const auto& [key, label] : r.edges)
            if (std::get<0>(key) == s) {
                auto it = cur.find(std::get<1>(key));
                if (it != cur.end()) next[std::get<2>(key)] += it->second;
            }
        cur = std::move(next);
    }
    return cur;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("first levels of the n=3 diagram") {
    const BratteliDiagram d = build(3, 3);
    REQUIRE(d.levels.size() == 7);
    CHECK(d.levels[0] == std::vector<SetPartition>{SetPartition::empty(3)});
    CHECK(d.levels[1] == std::vector<SetPartition>{SetPartition::empty(2)});
    CHECK(d.levels[2] == std::vector<SetPartition>{SetPartition::empty(3), P("1-3", 3), P("2-3", 3)});
    std::vector<std::size_t> sizes;
    for (const auto& l : d.levels) sizes.push_back(l.size());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 3, 2, 5, 2, 5});
}

TEST_CASE("edge labels of the n=3 figure") {
    const BratteliDiagram d = build(3, 3);
    CHECK(d.edges.size() == 26);
    int labeled_t = 0;
    for (const auto& e : d.edges) {
        CHECK_FALSE(e.label.is_zero());
        if (e.label == mono_pow_t(1)) ++labeled_t;
    }
    CHECK(labeled_t == 9);
}

TEST_CASE("diagram matches an independent rebuild") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k) {
            if (n == 5 && k > 3) continue;
            const BratteliDiagram d = build(n, k);
            const Reference r = reference(n, k);
            REQUIRE(d.levels.size() == r.levels.size());
            for (std::size_t h = 0; h < r.levels.size(); ++h)
                CHECK(std::set<SetPartition>(d.levels[h].begin(), d.levels[h].end()) == r.levels[h]);
            CHECK(d.edges.size() == r.edges.size());
            for (const auto& e : d.edges) {
                auto it = r.edges.find({e.half_step, d.levels[e.half_step][e.from], d.levels[e.half_step + 1][e.to]});
                REQUIRE(it != r.edges.end());
                CHECK(it->second == e.label);
            }
        }
}

TEST_CASE("levels grow and every vertex is reachable") {
    for (int n = 2; n <= 4; ++n) {
        const BratteliDiagram d = build(n, 4);
        for (int h = 1; h <= 8; ++h) {
            std::vector<char> hit(d.levels[h].size(), 0);
            for (const auto& e : d.edges)
                if (e.half_step == h - 1) hit[e.to] = 1;
            for (char c : hit) CHECK(c);
        }
        for (int h = 2; h + 2 <= 8; h += 2)
            for (const auto& v : d.levels[h]) CHECK(d.index_of(h + 2, v) >= 0);
    }
}

TEST_CASE("path counts agree with transfer matrices") {
    for (int n = 2; n <= 4; ++n) {
        const BratteliDiagram d = build(n, 4);
        const Reference r = reference(n, 4);
        for (int h = 0; h <= 8; ++h) {
            const auto want = transfer_counts(r, h);
            const auto got = path_counts(d, h);
            for (std::size_t v = 0; v < d.levels[h].size(); ++v) {
                CHECK(got[v] == want.at(d.levels[h][v]));
                if (h % 2 == 0) {
                    BigInt streamed = 0;
                    PathStream s(d, d.levels[h][v], h);
                    Path p;
                    while (s.next(p)) ++streamed;
                    CHECK(streamed == got[v]);
                }
            }
        }
    }
}

TEST_CASE("total path counts") {
    auto totals = [](int n) {
        const BratteliDiagram d = build(n, 4);
        std::vector<BigInt> out;
        for (int k = 1; k <= 4; ++k) {
            BigInt s = 0;
            for (const BigInt& c : path_counts(d, 2 * k)) s += c;
            out.push_back(s);
        }
        return out;
    };
    CHECK(totals(3) == std::vector<BigInt>{3, 12, 48, 192});
    CHECK(totals(4) == std::vector<BigInt>{4, 29, 215, 1611});
}

TEST_CASE("paths are distinct, ordered and valid") {
    const BratteliDiagram d = build(4, 3);
    for (const auto& lam : d.levels[6]) {
        const auto paths = paths_to(d, lam, 3);
        CHECK(std::is_sorted(paths.begin(), paths.end()));
        CHECK(std::adjacent_find(paths.begin(), paths.end()) == paths.end());
        for (const auto& p : paths) {
            CHECK(p.length() == 3);
            CHECK(p.steps.front() == SetPartition::empty(4));
            CHECK(p.steps.back() == lam);
            CHECK_FALSE(path_weight(d, p).is_zero());
        }
    }
    const auto zero = paths_to(d, SetPartition::empty(4), 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].steps == std::vector<SetPartition>{SetPartition::empty(4)});
    CHECK_THROWS_AS(paths_to(d, P("1-4,2-3", 4), 1), DomainError);
}

TEST_CASE("path weights") {
    const BratteliDiagram d3 = build(3, 3);
    const Path shown = make_path({"", "", "1-3", "1-2", "1-2,2-3", "1-2", "1-2"}, 3);
    const auto paths = paths_to(d3, P("1-2", 3), 3);
    CHECK(std::find(paths.begin(), paths.end(), shown) != paths.end());
    CHECK(path_weight(d3, shown) == mono_pow_t(2));
    CHECK(format_path(shown) == "(∅; ∅; 1-3; 1-2; 1-2,2-3; 1-2; 1-2)");

    CHECK(path_weight(d3, make_path({"", "", "", "", "", "", ""}, 3)) == QMonomial::one());
    CHECK_THROWS_AS(path_weight(d3, make_path({"", "", "1-2"}, 3)), DomainError);

    const BratteliDiagram d6 = build(6, 4);
    const Path ex = make_path({"", "", "1-6", "1-4", "1-4,2-6", "1-4,2-5", "1-4,2-6,3-5", "1-4,2-3,3-5",
                               "1-4,2-3,3-5"},
                              6);
    const QMonomial w = path_weight(d6, ex);
    CHECK(w == QMonomial{1, 1, 4});
    CHECK(eval_integer(w, 2) == 2);
}

TEST_CASE("multiplicities") {
    const BratteliDiagram d3 = build(3, 1);
    CHECK(multiplicity(d3, SetPartition::empty(3), 1) == LaurentPoly::constant(1));
    CHECK(multiplicity(d3, P("1-2", 3), 1).is_zero());

    const BratteliDiagram shown = build(3, 3);
    LaurentPoly q3_minus_q = LaurentPoly::monomial(3, 1) - LaurentPoly::monomial(1, 1);
    CHECK(multiplicity(shown, P("1-2", 3), 3) == q3_minus_q);

    for (int n = 2; n <= 4; ++n) {
        const BratteliDiagram d = build(n, 4);
        for (int k = 0; k <= 4; ++k) {
            LaurentPoly total;
            for (const auto& lam : d.levels[2 * k]) {
                const LaurentPoly m = multiplicity(d, lam, k);
                total += m * canonicalize(degree(lam));
                const BigRational at2 = m.eval(2);
                CHECK(at2 >= 1);
                CHECK(denominator(at2) == 1);

                QPolynomial by_paths;
                for (const auto& p : paths_to(d, lam, k)) by_paths.add(path_weight(d, p));
                CHECK(by_paths.canonical() == m);
            }
            CHECK(total == LaurentPoly::monomial(k * (n - 1), 1));
        }
    }
}

TEST_CASE("concurrent path streams are independent") {
    const BratteliDiagram d = build(4, 3);
    const SetPartition lam = P("1-3,2-4", 4);
    auto collect = [&] {
        std::vector<Path> out;
        PathStream s(d, lam, 6);
        Path p;
        while (s.next(p)) out.push_back(p);
        return out;
    };
    std::vector<Path> a, b;
    std::thread ta([&] { a = collect(); });
    std::thread tb([&] { b = collect(); });
    ta.join();
    tb.join();
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(a == paths_to(d, lam, 3));
}

TEST_CASE("DOT export") {
    const BratteliDiagram d = build(3, 1);
    const std::string dot = export_dot(d);
    CHECK(dot == read_file(std::string(SUPERBRANCH_TEST_DATA) + "/lambda3_k1.dot"));
    CHECK(dot == export_dot(build(3, 1)));
    CHECK(std::count(dot.begin(), dot.end(), '\n') > 0);

    const std::string zero = export_dot(build(3, 0));
    CHECK(zero.find("->") == std::string::npos);
    CHECK(zero.find("v0_0") != std::string::npos);
}

TEST_CASE("JSON round trip") {
    const BratteliDiagram d = build(4, 2);
    const std::string text = diagram_to_json(d);
    const BratteliDiagram back = diagram_from_json(text);
    CHECK(back == d);
    CHECK(diagram_to_json(back) == text);
    CHECK_THROWS(diagram_from_json("{\"version\":2}"));
}
