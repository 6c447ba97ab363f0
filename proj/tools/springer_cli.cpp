// springer — command-line front end for the Springer-fiber component
// toolkit: smoothness classification, singular-locus computation (direct
// algorithm and orbit-graph oracle), graph and diagram export, family
// enumeration and the exhaustive agreement sweep.
//
// Exit codes: 0 success, 2 parse error, 3 scope error, 4 size-guard error,
// 5 mismatch (internal cross-check or crosscheck disagreement).  CLI usage
// errors (unknown flags and the like) use the CLI11 defaults.

#include "springer/crosscheck.hpp"
#include "springer/errors.hpp"
#include "springer/link_pattern.hpp"
#include "springer/orbit_graph.hpp"
#include "springer/render.hpp"
#include "springer/singular.hpp"
#include "springer/tableau.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace springer;
using nlohmann::json;

[[nodiscard]] std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot write file: " + out_path);
    f << text;
}

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt == a) return;
    std::string msg = "unsupported --format \"" + fmt + "\" (expected one of:";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw ParseError(msg + ")");
}

/// Pattern input shared by classify/sing/graph/render: exactly one of an
/// inline pattern string or a tableau file.
struct PatternInput {
    std::string lp_text;
    std::string tableau_file;
    CLI::Option* lp_opt = nullptr;
    CLI::Option* tb_opt = nullptr;

    void attach(CLI::App* cmd) {
        lp_opt = cmd->add_option("--lp", lp_text,
                                 "Inline link pattern, e.g. \"n=6 (2,3)(4,5)\"");
        tb_opt = cmd->add_option("--tableau", tableau_file,
                                 "File with a two-column standard tableau, one row per line");
    }

    struct Resolved {
        LinkPattern pattern;
        std::optional<TwoColumnTableau> tableau;
    };

    [[nodiscard]] Resolved resolve() const {
        const bool have_lp = lp_opt->count() > 0;
        const bool have_tb = tb_opt->count() > 0;
        if (have_lp == have_tb)
            throw ParseError("exactly one of --lp and --tableau is required");
        if (have_lp) return {parse_link_pattern(lp_text), std::nullopt};
        TwoColumnTableau t = parse_tableau(read_file(tableau_file));
        LinkPattern p = tableau_to_linkpattern(t);
        return {std::move(p), std::move(t)};
    }
};

/// Tableau rows as a single line, "1 3 / 2 5 / 4".
[[nodiscard]] std::string tableau_inline(const TwoColumnTableau& t) {
    std::string s;
    for (std::size_t i = 0; i < t.col1().size(); ++i) {
        if (i > 0) s += " / ";
        s += std::to_string(t.col1()[i]);
        if (i < t.col2().size()) s += ' ' + std::to_string(t.col2()[i]);
    }
    return s;
}

[[nodiscard]] json tableau_rows(const TwoColumnTableau& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.col1().size(); ++i) {
        json row = json::array();
        row.push_back(t.col1()[i]);
        if (i < t.col2().size()) row.push_back(t.col2()[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

void run_classify(const PatternInput& input, const std::string& format,
                  const std::string& out_path) {
    check_format(format, {"text", "json"});
    auto [sigma, tableau_in] = input.resolve();
    const bool maximal = is_maximal(sigma);
    std::optional<TwoColumnTableau> tableau = tableau_in;
    if (!tableau && maximal) tableau = linkpattern_to_tableau(sigma);
    std::optional<int> rho_value;
    if (maximal) rho_value = rho(sigma);

    // Smoothness: via rho for maximal patterns, via graph regularity
    // otherwise (when the pattern fits under the size guard).
    std::optional<bool> smooth;
    std::string smooth_method;
    if (maximal) {
        smooth = *rho_value <= 3;
        smooth_method = "rho";
    } else if (sigma.n() <= size_guard()) {
        smooth = smooth_by_graph(sigma);
        smooth_method = "graph";
    }

    const auto ts = tau_star(sigma);
    const long long dim = fiber_dim(sigma);
    const long long dz = d0(sigma.n(), sigma.k());
    const long long p = p_value(sigma);
    const int br = bridges(sigma);
    const int cr = crossings(sigma);

    if (format == "json") {
        json j;
        j["pattern"] = format_link_pattern(sigma);
        j["n"] = sigma.n();
        j["k"] = sigma.k();
        j["maximal"] = maximal;
        j["tableau"] = tableau ? tableau_rows(*tableau) : json(nullptr);
        j["tau_star"] = ts;
        j["rho"] = rho_value ? json(*rho_value) : json(nullptr);
        j["smooth"] = smooth ? json(*smooth) : json(nullptr);
        j["smooth_method"] = smooth ? json(smooth_method) : json(nullptr);
        j["dim"] = dim;
        j["d0"] = dz;
        j["p"] = p;
        j["bridges"] = br;
        j["crossings"] = cr;
        emit(j.dump(2) + "\n", out_path);
        return;
    }

    std::string s;
    s += "pattern  : " + format_link_pattern(sigma) + "\n";
    s += "tableau  : " + (tableau ? tableau_inline(*tableau)
                                  : std::string("n/a (maximal patterns only)")) + "\n";
    s += "n        : " + std::to_string(sigma.n()) + "\n";
    s += "k        : " + std::to_string(sigma.k()) + "\n";
    s += "maximal  : " + std::string(maximal ? "yes" : "no") + "\n";
    s += "tau*     :";
    for (int i : ts) s += ' ' + std::to_string(i);
    if (ts.empty()) s += " (empty)";
    s += "\n";
    s += "rho      : " + (rho_value ? std::to_string(*rho_value)
                                    : std::string("n/a (maximal patterns only)")) + "\n";
    if (smooth)
        s += "smooth   : " + std::string(*smooth ? "yes" : "no") + " (by " + smooth_method +
             ")\n";
    else
        s += "smooth   : unknown (n=" + std::to_string(sigma.n()) +
             " exceeds the size guard " + std::to_string(size_guard()) + ")\n";
    s += "dim F    : " + std::to_string(dim) + "\n";
    s += "d0       : " + std::to_string(dz) + "\n";
    s += "p        : " + std::to_string(p) + "\n";
    s += "bridges  : " + std::to_string(br) + "\n";
    s += "crossings: " + std::to_string(cr) + "\n";
    emit(s, out_path);
}

// ---------------------------------------------------------------------------
// sing
// ---------------------------------------------------------------------------

[[nodiscard]] bool reports_agree(const SingReport& a, const SingReport& b) {
    if (a.smooth != b.smooth) return false;
    if (a.components.size() != b.components.size()) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        const auto& x = a.components[i];
        const auto& y = b.components[i];
        if (!(x.pattern == y.pattern) || x.codim != y.codim || x.tangent_dim != y.tangent_dim)
            return false;
    }
    return true;
}

void run_sing(const PatternInput& input, const std::string& method, const std::string& format,
              const std::string& out_path) {
    check_format(format, {"text", "json"});
    if (method != "direct" && method != "graph" && method != "both")
        throw ParseError("unsupported --method \"" + method +
                         "\" (expected one of: direct graph both)");
    auto [sigma, tableau_in] = input.resolve();

    if ((method == "direct" || method == "both") && !is_maximal(sigma))
        throw ScopeError("the direct algorithm handles maximal patterns only; " +
                         format_link_pattern(sigma) +
                         " has bridges or crossings — use --method graph");

    if (method == "both") {
        const SingReport direct = sing_any(sigma);
        const SingReport oracle = sing_graph(sigma);
        const bool agree = reports_agree(direct, oracle);
        if (format == "json") {
            json j = json::parse(to_json(direct));
            j["oracle_agreement"] = agree;
            emit(j.dump(2) + "\n", out_path);
        } else {
            std::string s = to_text(direct);
            s += agree ? "oracle agreement: yes (components and tangent dimensions match)\n"
                       : "oracle agreement: NO\n";
            emit(s, out_path);
        }
        if (!agree)
            throw MismatchError("direct and orbit-graph singular loci disagree for " +
                                format_link_pattern(sigma));
        return;
    }

    const SingReport report = method == "direct" ? sing_any(sigma) : sing_graph(sigma);
    emit(format == "json" ? to_json(report) + "\n" : to_text(report), out_path);
}

// ---------------------------------------------------------------------------
// graph
// ---------------------------------------------------------------------------

void run_graph(const PatternInput& input, const std::string& format, int max_codim,
               const std::string& out_path) {
    check_format(format, {"dot", "text", "json"});
    auto [sigma, tableau_in] = input.resolve();
    const OrbitGraph g = build_graph(sigma);
    std::string s;
    if (format == "dot") s = to_dot(g, max_codim);
    else if (format == "text") s = to_text(g);
    else s = graph_report_json(g) + "\n";
    emit(s, out_path);
}

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

void run_render(const PatternInput& input, const std::string& format,
                const std::string& out_path) {
    check_format(format, {"svg", "ascii"});
    auto [sigma, tableau_in] = input.resolve();
    emit(format == "svg" ? render_svg(sigma) : render_ascii(sigma), out_path);
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

void run_enumerate(int n, int k, bool maximal_only, const std::string& format,
                   const std::string& out_path) {
    check_format(format, {"text", "json"});
    if (n > size_guard())
        throw SizeLimitError("n=" + std::to_string(n) + " exceeds the size guard " +
                             std::to_string(size_guard()) +
                             " (set SPRINGER_SING_MAX_N to raise it)");
    const auto family = enumerate_patterns(n, k, maximal_only);
    if (format == "json") {
        json j;
        j["n"] = n;
        j["k"] = k;
        j["maximal_only"] = maximal_only;
        j["count"] = family.size();
        j["patterns"] = json::array();
        for (const auto& p : family) j["patterns"].push_back(format_link_pattern(p));
        emit(j.dump(2) + "\n", out_path);
        return;
    }
    std::string s;
    for (const auto& p : family) s += format_link_pattern(p) + "\n";
    emit(s, out_path);
}

// ---------------------------------------------------------------------------
// crosscheck
// ---------------------------------------------------------------------------

void run_crosscheck_cmd(int max_n, const std::string& format, const std::string& out_path) {
    check_format(format, {"text", "json"});
    const CrosscheckSummary summary = run_crosscheck(max_n);
    if (format == "json") {
        json j;
        j["max_n"] = summary.max_n;
        j["rows"] = json::array();
        for (const auto& row : summary.rows) {
            j["rows"].push_back({{"n", row.n},
                                 {"k", row.k},
                                 {"maximal", row.maximal},
                                 {"smooth", row.smooth},
                                 {"singular", row.singular},
                                 {"components", row.components}});
        }
        j["regularity_mismatches"] = summary.regularity_mismatches;
        j["component_mismatches"] = summary.component_mismatches;
        j["details"] = summary.details;
        j["ok"] = summary.ok();
        emit(j.dump(2) + "\n", out_path);
    } else {
        emit(to_text(summary), out_path);
    }
    if (!summary.ok())
        throw MismatchError("crosscheck found " +
                            std::to_string(summary.regularity_mismatches +
                                           summary.component_mismatches) +
                            " disagreement(s)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Springer-fiber components over a square-zero nilpotent: smoothness "
                 "classification and singular-locus computation"};
    app.require_subcommand(1);

    std::string format_classify = "text";
    std::string format_sing = "text";
    std::string format_graph = "dot";
    std::string format_render = "svg";
    std::string format_enum = "text";
    std::string format_cross = "text";
    std::string out_path;
    std::string method = "direct";
    int max_codim = -1;
    int n = 0;
    int k = 0;
    bool maximal_only = false;
    int max_n = 10;

    PatternInput in_classify, in_sing, in_graph, in_render;

    CLI::App* classify = app.add_subcommand(
        "classify", "Classify a component: invariants and smoothness");
    in_classify.attach(classify);
    classify->add_option("--format", format_classify, "text|json (default text)");
    classify->add_option("--out", out_path, "Write output to a file instead of stdout");

    CLI::App* sing = app.add_subcommand(
        "sing", "Compute the components of the singular locus");
    in_sing.attach(sing);
    sing->add_option("--method", method, "direct|graph|both (default direct)");
    sing->add_option("--format", format_sing, "text|json (default text)");
    sing->add_option("--out", out_path, "Write output to a file instead of stdout");

    CLI::App* graph = app.add_subcommand(
        "graph", "Build the orbit graph below the pattern and export it");
    in_graph.attach(graph);
    graph->add_option("--format", format_graph, "dot|text|json (default dot)");
    graph->add_option("--max-codim", max_codim,
                      "Keep only vertices of codim <= this in the DOT export");
    graph->add_option("--out", out_path, "Write output to a file instead of stdout");

    CLI::App* render = app.add_subcommand("render", "Draw the chord diagram of a pattern");
    in_render.attach(render);
    render->add_option("--format", format_render, "svg|ascii (default svg)");
    render->add_option("--out", out_path, "Write output to a file instead of stdout");

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "List all link patterns of a family (n, k)");
    enumerate->add_option("--n", n, "Number of points")->required();
    enumerate->add_option("--k", k, "Number of arcs")->required();
    enumerate->add_flag("--maximal-only", maximal_only, "Only maximal patterns");
    enumerate->add_option("--format", format_enum, "text|json (default text)");
    enumerate->add_option("--out", out_path, "Write output to a file instead of stdout");

    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "Exhaustively compare the direct algorithm against the orbit-graph "
                      "oracle for every maximal pattern up to --max-n");
    crosscheck->add_option("--max-n", max_n, "Largest n to sweep (default 10)");
    crosscheck->add_option("--format", format_cross, "text|json (default text)");
    crosscheck->add_option("--out", out_path, "Write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
        if (classify->parsed()) run_classify(in_classify, format_classify, out_path);
        else if (sing->parsed()) run_sing(in_sing, method, format_sing, out_path);
        else if (graph->parsed()) run_graph(in_graph, format_graph, max_codim, out_path);
        else if (render->parsed()) run_render(in_render, format_render, out_path);
        else if (enumerate->parsed()) run_enumerate(n, k, maximal_only, format_enum, out_path);
        else if (crosscheck->parsed()) run_crosscheck_cmd(max_n, format_cross, out_path);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ScopeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
