#include "superbranch/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "superbranch/branching.hpp"
#include "superbranch/oracle.hpp"

namespace superbranch::cli {

using ojson = nlohmann::ordered_json;

ojson monomial_json(const QMonomial& m) { return {{"sign", m.sign}, {"eq", m.eq}, {"et", m.et}}; }

ojson combination_json(const CharCombination& c) {
    ojson terms = ojson::array();
    for (const auto& [p, m] : c.terms()) terms.push_back({{"partition", format_partition(p)}, {"coeff", monomial_json(m)}});
    return terms;
}

static const char* kind_name(ArcKind k) {
    switch (k) {
    case ArcKind::Frown: return "frown";
    case ArcKind::Smile: return "smile";
    case ArcKind::Loop: return "loop";
    }
    return "?";
}

ojson tableau_json(const ShellTableau& t) {
    ojson shells = ojson::array();
    for (const auto& s : t.shells) {
        ojson arcs = ojson::array();
        for (const auto& a : s.arcs)
            arcs.push_back({{"i", a.left}, {"l", a.right}, {"label", a.label}, {"orient", kind_name(a.kind)}});
        shells.push_back(std::move(arcs));
    }
    return shells;
}

BratteliDiagram load_or_build(int n, int k) {
    const char* dir = std::getenv("SUPERBRANCH_CACHE");
    if (!dir || !*dir) return build(n, k);
    namespace fs = std::filesystem;
    const fs::path file = fs::path(dir) / ("lambda-n" + std::to_string(n) + "-k" + std::to_string(k) + ".json");
    if (fs::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            BratteliDiagram d = diagram_from_json(ss.str());
            if (d.n == n && d.k == k) return d;
        } catch (const DomainError&) {
            // Stale or corrupt entry; rebuild below.
        }
    }
    BratteliDiagram d = build(n, k);
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        os << diagram_to_json(d);
    }
    fs::rename(tmp, file, ec);
    return d;
}

namespace {

struct Options {
    int n = 0;
    int k = 0;
    std::optional<int> q;
    std::string partition;
    std::string arc;
    std::string shape;
    std::string format = "text";
    std::string dot_file;
    std::string json_file;
    std::string suite = "all";
    std::string report;
    bool weights = false;
    bool semi_strict = false;
};

std::string show(const SetPartition& p) {
    std::string s = format_partition(p);
    return s.empty() ? "∅" : s;
}

std::string coeff_text(const QMonomial& m, const Options& o) {
    return o.q ? eval_integer(m, *o.q).str() : to_string(m);
}

ojson coeff_value(const QMonomial& m, const Options& o) {
    if (!o.q) return monomial_json(m);
    const BigInt v = eval_integer(m, *o.q);
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Arc parse_arc(const std::string& text, int n) {
    SetPartition p = parse_partition(text, n);
    if (p.size() != 1) throw DomainError("--arc expects a single arc i-l");
    return p.arcs()[0];
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    auto display_len = [](const std::string& s) {
        std::size_t n = 0;
        for (unsigned char c : s) n += (c & 0xC0) != 0x80; // count UTF-8 code points
        return n;
    };
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], display_len(r[c]));
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(width[c] - display_len(r[c]) + 2, ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << "\n";
    }
}

void emit_combination(std::ostream& out, const CharCombination& c, const Options& o) {
    if (o.format == "json") {
        ojson terms = ojson::array();
        for (const auto& [p, m] : c.terms())
            terms.push_back({{"partition", format_partition(p)}, {"coeff", coeff_value(m, o)}});
        out << ojson{{"n", c.n()}, {"terms", terms}}.dump(2) << "\n";
        return;
    }
    std::vector<std::vector<std::string>> rows{{"partition", "coefficient"}};
    for (const auto& [p, m] : c.terms()) rows.push_back({show(p), coeff_text(m, o)});
    print_table(out, rows);
}

int cmd_restrict(const Options& o, std::ostream& out) {
    emit_combination(out, restrict(parse_partition(o.partition, o.n)), o);
    return kOk;
}

int cmd_induce(const Options& o, std::ostream& out) {
    if (o.n < 1) throw DomainError("--n must be at least 1");
    emit_combination(out, induce(parse_partition(o.partition, o.n - 1), o.n), o);
    return kOk;
}

int cmd_tensor(const Options& o, std::ostream& out) {
    const Arc a = parse_arc(o.arc, o.n);
    emit_combination(out, tensor_expand_arc(parse_partition(o.partition, o.n), a.left, a.right), o);
    return kOk;
}

int cmd_shells(const Options& o, std::ostream& out) {
    const SetPartition lambda = parse_partition(o.partition, o.n);
    const Arc a = parse_arc(o.arc, o.n);
    const ArcSet big = with_arc(lambda.arcs(), a);
    ojson items = ojson::array();
    std::vector<std::vector<std::string>> rows{{"partition", "coefficient", "s", "s'", "whorls", "frowns", "smiles"}};
    for (const SetPartition& mu : shell_set(lambda, a.left, a.right)) {
        const auto sh = is_shell(arc_difference(big, mu.arcs()), arc_difference(mu.arcs(), big), o.n);
        if (!sh) throw std::logic_error("shell set member without a shell");
        const QMonomial c = shell_coefficient(lambda, a.left, a.right, mu);
        rows.push_back({show(mu), coeff_text(c, o), std::to_string(sh->s), std::to_string(sh->s_prime),
                        std::to_string(whorl_count(*sh)), format_arcs(sh->frowns), format_arcs(sh->smiles)});
        items.push_back({{"partition", format_partition(mu)},
                         {"coeff", coeff_value(c, o)},
                         {"s", sh->s},
                         {"s_prime", sh->s_prime},
                         {"whorls", whorl_count(*sh)},
                         {"frowns", format_arcs(sh->frowns)},
                         {"smiles", format_arcs(sh->smiles)}});
    }
    if (o.format == "json")
        out << ojson{{"n", o.n}, {"shells", items}}.dump(2) << "\n";
    else
        print_table(out, rows);
    return kOk;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DomainError("cannot write " + path);
    os << text;
}

int cmd_bratteli(const Options& o, std::ostream& out) {
    const BratteliDiagram d = load_or_build(o.n, o.k);
    if (!o.dot_file.empty()) write_file(o.dot_file, export_dot(d));
    if (!o.json_file.empty()) write_file(o.json_file, diagram_to_json(d));
    if (o.format == "json") {
        out << diagram_to_json(d);
        return kOk;
    }
    if (o.format == "dot") {
        out << export_dot(d);
        return kOk;
    }
    std::vector<std::vector<std::string>> rows{{"level", "vertices", "partitions"}};
    for (int h = 0; h < static_cast<int>(d.levels.size()); ++h) {
        std::string names;
        for (const auto& p : d.levels[h]) names += (names.empty() ? "" : " ") + show(p);
        rows.push_back({h % 2 ? std::to_string(h / 2) + "+1/2" : std::to_string(h / 2),
                        std::to_string(d.levels[h].size()), names});
    }
    print_table(out, rows);
    out << "edges: " << d.edges.size() << "\n";
    return kOk;
}

int cmd_paths(const Options& o, std::ostream& out) {
    const BratteliDiagram d = load_or_build(o.n, o.k);
    const SetPartition lambda = parse_partition(o.shape, o.n);
    PathStream stream(d, lambda, 2 * o.k);
    Path p;
    ojson items = ojson::array();
    std::size_t count = 0;
    while (stream.next(p)) {
        ++count;
        const QMonomial w = path_weight(d, p);
        if (o.format == "json") {
            ojson steps = ojson::array();
            for (const auto& s : p.steps) steps.push_back(format_partition(s));
            ojson item{{"path", steps}};
            if (o.weights) item["weight"] = coeff_value(w, o);
            items.push_back(std::move(item));
        } else {
            out << format_path(p);
            if (o.weights) out << "  " << coeff_text(w, o);
            out << "\n";
        }
    }
    const LaurentPoly mult = multiplicity(d, lambda, o.k);
    const std::string mult_text = o.q ? mult.eval(*o.q).str() : to_string(mult);
    if (o.format == "json")
        out << ojson{{"n", o.n}, {"k", o.k}, {"shape", o.shape}, {"paths", items}, {"multiplicity", mult_text}}.dump(2)
            << "\n";
    else
        out << "paths: " << count << "\nmultiplicity: " << mult_text << "\n";
    return kOk;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
    if (o.semi_strict && o.q.value_or(2) != 2) throw DomainError("semi-strict tableaux are defined at q = 2 only");
    const BratteliDiagram d = load_or_build(o.n, o.k);
    const SetPartition lambda = parse_partition(o.shape, o.n);
    if (o.k < 1) throw DomainError("tableaux need k >= 1");
    BranchingCache cache;
    PathStream stream(d, lambda, 2 * o.k);
    Path p;
    ojson items = ojson::array();
    std::size_t count = 0;
    while (stream.next(p)) {
        std::vector<ShellTableau> ts = o.semi_strict ? semistrict_expansions(p, o.n, &cache)
                                                     : std::vector<ShellTableau>{path_to_tableau(p, o.n, &cache)};
        count += ts.size();
        if (o.format == "json") {
            ojson steps = ojson::array(), tabs = ojson::array();
            for (const auto& s : p.steps) steps.push_back(format_partition(s));
            for (const auto& t : ts) tabs.push_back(tableau_json(t));
            items.push_back({{"path", steps}, {"tableaux", tabs}});
        } else {
            out << format_path(p) << "\n";
            for (const auto& t : ts) out << "  " << format_tableau(t) << "\n";
        }
    }
    if (o.format == "json")
        out << ojson{{"n", o.n}, {"k", o.k}, {"shape", o.shape}, {"semi_strict", o.semi_strict}, {"items", items},
                     {"count", count}}
                   .dump(2)
            << "\n";
    else
        out << "tableaux: " << count << "\n";
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const int q = o.q.value_or(2);
    const auto results = run_suite(o.suite, o.n, q);
    std::map<std::string, std::pair<int, int>> tally; // suite -> (passed, total)
    std::vector<std::string> order;
    bool all_pass = true;
    ojson checks = ojson::array();
    for (const auto& r : results) {
        if (!tally.count(r.suite)) order.push_back(r.suite);
        auto& [passed, total] = tally[r.suite];
        passed += r.pass;
        ++total;
        all_pass = all_pass && r.pass;
        checks.push_back({{"suite", r.suite},
                          {"item", r.item},
                          {"pass", r.pass},
                          {"expected", r.expected},
                          {"actual", r.actual}});
    }
    ojson report{{"n", o.n}, {"q", q}, {"suite", o.suite}, {"pass", all_pass}, {"checks", checks}};
    if (!o.report.empty()) write_file(o.report, report.dump(2) + "\n");
    if (o.format == "json") {
        out << report.dump(2) << "\n";
    } else {
        for (const auto& s : order)
            out << s << ": " << tally[s].first << "/" << tally[s].second << " pass\n";
        for (const auto& r : results)
            if (!r.pass) out << "FAIL " << r.suite << " " << r.item << ": expected " << r.expected << ", got " << r.actual << "\n";
        out << (all_pass ? "all checks passed" : "verification failed") << "\n";
    }
    return all_pass ? kOk : kVerificationFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Supercharacter branching rules, Bratteli diagrams and shell tableaux for U_n(F_q)", "superbranch"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
    };
    auto add_q = [&](CLI::App* sub) { sub->add_option("--q", o.q, "Evaluate coefficients at this integer q")->check(CLI::Range(2, 1 << 20)); };

    auto* res = app.add_subcommand("restrict", "Restrict a supercharacter from U_n to U_{n-1}");
    res->add_option("--n", o.n, "Ground-set size")->required()->check(CLI::Range(1, 64));
    res->add_option("--partition", o.partition, "Partition of [n], e.g. 1-4,2-6,3-5")->required();
    add_q(res);
    add_format(res, {"text", "json"});

    auto* ind = app.add_subcommand("induce", "Induce a supercharacter of U_{n-1} (partition of [n-1]) to U_n");
    ind->add_option("--n", o.n, "Target ground-set size")->required()->check(CLI::Range(1, 64));
    ind->add_option("--partition", o.partition, "Partition of [n-1]")->required();
    add_q(ind);
    add_format(ind, {"text", "json"});

    auto* ten = app.add_subcommand("tensor", "Expand the product with the arc character i-l with node l crossed");
    ten->add_option("--n", o.n, "Ground-set size")->required()->check(CLI::Range(1, 64));
    ten->add_option("--partition", o.partition, "Partition of [n]")->required();
    ten->add_option("--arc", o.arc, "Arc i-l")->required();
    add_q(ten);
    add_format(ten, {"text", "json"});

    auto* sh = app.add_subcommand("shells", "List a shell set with coefficients and shell structure");
    sh->add_option("--n", o.n, "Ground-set size")->required()->check(CLI::Range(1, 64));
    sh->add_option("--partition", o.partition, "Partition of [n]")->required();
    sh->add_option("--arc", o.arc, "Anchor arc i-l")->required();
    add_q(sh);
    add_format(sh, {"text", "json"});

    auto* br = app.add_subcommand("bratteli", "Build the Bratteli diagram through level k");
    br->add_option("--n", o.n, "Ground-set size")->required()->check(CLI::Range(2, 64));
    br->add_option("--k", o.k, "Number of levels")->required()->check(CLI::Range(0, 64));
    br->add_option("--dot", o.dot_file, "Write DOT to this file");
    br->add_option("--json", o.json_file, "Write JSON to this file");
    add_format(br, {"text", "json", "dot"});

    auto* pa = app.add_subcommand("paths", "Enumerate paths to a vertex at level k");
    pa->add_option("--n", o.n, "Ground-set size")->required()->check(CLI::Range(2, 64));
    pa->add_option("--k", o.k, "Level")->required()->check(CLI::Range(0, 64));
    pa->add_option("--shape", o.shape, "Partition of [n] at level k")->required();
    pa->add_flag("--weights", o.weights, "Print path weights");
    add_q(pa);
    add_format(pa, {"text", "json"});

    auto* tb = app.add_subcommand("tableaux", "Shell tableaux for every path to a vertex");
    tb->add_option("--n", o.n, "Ground-set size")->required()->check(CLI::Range(2, 64));
    tb->add_option("--k", o.k, "Level")->required()->check(CLI::Range(1, 64));
    tb->add_option("--shape", o.shape, "Partition of [n] at level k")->required();
    tb->add_flag("--semi-strict", o.semi_strict, "List semi-strict tableaux (q = 2)");
    add_q(tb);
    add_format(tb, {"text", "json"});

    auto* ve = app.add_subcommand("verify", "Check the closed forms against brute-force group sums");
    ve->add_option("--suite", o.suite, "Suite to run")
        ->check(CLI::IsMember({"orthogonality", "restriction", "induction", "superinduction", "frobenius", "all"}));
    ve->add_option("--n", o.n, "Ground-set size")->required()->check(CLI::Range(1, 64));
    add_q(ve);
    ve->add_option("--report", o.report, "Write a JSON report to this file");
    add_format(ve, {"text", "json"});

    if (!args.empty() && !args[0].starts_with("-") && !app.get_subcommand_no_throw(args[0])) {
        err << "error: unknown subcommand '" << args[0] << "' (try --help)\n";
        return kDomainError;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }

    try {
        if (res->parsed()) return cmd_restrict(o, out);
        if (ind->parsed()) return cmd_induce(o, out);
        if (ten->parsed()) return cmd_tensor(o, out);
        if (sh->parsed()) return cmd_shells(o, out);
        if (br->parsed()) return cmd_bratteli(o, out);
        if (pa->parsed()) return cmd_paths(o, out);
        if (tb->parsed()) return cmd_tableaux(o, out);
        if (ve->parsed()) return cmd_verify(o, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const IntegralityError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kDomainError;
}

} // namespace superbranch::cli
