// Tests for the orbit graph and the graph-regularity oracle: dimension
// formulas, elementary moves and their pairing, the graph itself on a fully
// worked six-point example, the degree laws (lower bound, downward identity,
// sibling predecessors, the irregularity criterion, low-codimension
// regularity), the smoothness test, the exports, and the size guard.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "springer/orbit_graph.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace springer;

namespace {

LinkPattern lp(const std::string& text) { return parse_link_pattern(text); }

std::vector<std::pair<int, int>> families(int max_n) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; 2 * k <= n; ++k) out.emplace_back(n, k);
    return out;
}

/// b(u) + c(u); the grading the elementary moves walk along.
int moves_of(const LinkPattern& u) { return bridges(u) + crossings(u); }

/// The sibling pairs of elementary moves out of u: for every arc over a
/// fixed point the two splittings, for every crossing the two resolutions.
/// Flattening the pairs gives exactly predecessors(u).
std::vector<std::pair<LinkPattern, LinkPattern>> move_pairs(const LinkPattern& u) {
    std::vector<std::pair<LinkPattern, LinkPattern>> out;
    for (const auto& a : u.arcs())
        for (int f = a.lo + 1; f < a.hi; ++f) {
            if (!u.is_fixed(f)) continue;
            const auto base = delete_arcs(u, {a});
            out.emplace_back(add_arc(base, a.lo, f), add_arc(base, f, a.hi));
        }
    const auto& arcs = u.arcs();
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y) {
            const Arc a = arcs[x], b = arcs[y];
            if (!(b.lo < a.hi && a.hi < b.hi)) continue; // arcs are lo-sorted
            const auto base = delete_arcs(u, {a, b});
            out.emplace_back(add_arc(add_arc(base, a.lo, b.hi), b.lo, a.hi),
                             add_arc(add_arc(base, a.lo, b.lo), a.hi, b.hi));
        }
    return out;
}

} // namespace

TEST_CASE("dimension formulas on worked examples") {
    CHECK(fiber_dim(lp("n=6 (2,3)(4,5)")) == 7);
    CHECK(d0(6, 2) == 2);
    CHECK(p_value(lp("n=6 (2,3)(4,5)")) == 5);
    CHECK(fiber_dim(lp("(1,4)(2,5)")) == 1); // 4 minus two bridges and a crossing
    CHECK(fiber_dim(omega_min(5, 2)) == d0(5, 2));
    CHECK(fiber_dim(lp("n=12 (2,9)(3,6)(4,5)(7,8)(10,11)")) == 31);
    CHECK(p_value(lp("n=12 (2,9)(3,6)(4,5)(7,8)(10,11)")) == 20);
    for (auto [n, k] : families(8))
        for (const auto& p : enumerate_patterns(n, k)) {
            CHECK(fiber_dim(p) - d0(n, k) == p_value(p));
            CHECK(fiber_dim(p) >= d0(n, k));
        }
}

TEST_CASE("codim is the move-count difference, defined only below sigma") {
    const auto sigma = lp("n=6 (2,3)(4,5)");
    CHECK(codim(sigma, sigma) == 0);
    CHECK(codim(sigma, lp("n=6 (1,6)(2,5)")) == 4);
    CHECK(codim(sigma, omega_min(6, 2)) == 5);
    CHECK_THROWS_AS((void)codim(sigma, lp("n=6 (1,2)(3,4)")), ScopeError); // incomparable
    CHECK_THROWS_AS((void)codim(lp("n=6 (1,6)(2,5)"), sigma), ScopeError); // wrong way round
}

TEST_CASE("predecessors: two per bridge or crossing, all one step up") {
    CHECK(predecessors(lp("n=6 (2,3)(4,5)")).empty());
    for (auto [n, k] : families(8))
        for (const auto& u : enumerate_patterns(n, k)) {
            const auto preds = predecessors(u);
            CHECK(static_cast<int>(preds.size()) == 2 * moves_of(u));
            CHECK(std::is_sorted(preds.begin(), preds.end()));
            CHECK(std::adjacent_find(preds.begin(), preds.end()) == preds.end());
            for (const auto& w : preds) {
                // A split may shed several bridges at once, so the dimension
                // rises by at least one, not always exactly one.
                CHECK(fiber_dim(w) > fiber_dim(u));
                CHECK(leq(u, w));
                CHECK(u != w);
            }
            // The sibling pairs flatten to exactly the predecessor list.
            std::vector<LinkPattern> flat;
            for (const auto& [w1, w2] : move_pairs(u)) {
                flat.push_back(w1);
                flat.push_back(w2);
            }
            std::sort(flat.begin(), flat.end());
            CHECK(flat == preds);
        }
}

TEST_CASE("successors are the inverse moves") {
    for (auto [n, k] : families(7)) {
        const auto all = enumerate_patterns(n, k);
        std::set<std::pair<LinkPattern, LinkPattern>> down, up;
        for (const auto& u : all) {
            const auto succ = successors(u);
            CHECK(std::is_sorted(succ.begin(), succ.end()));
            CHECK(std::adjacent_find(succ.begin(), succ.end()) == succ.end());
            for (const auto& v : succ) {
                CHECK(fiber_dim(v) < fiber_dim(u));
                CHECK(leq(v, u));
                down.emplace(u, v);
            }
            for (const auto& w : predecessors(u)) up.emplace(w, u);
        }
        CHECK(down == up);
    }
}

TEST_CASE("downward degree equals dim minus d0 for every pattern up to n=10") {
    for (auto [n, k] : families(10))
        for (const auto& u : enumerate_patterns(n, k))
            CHECK(static_cast<long long>(successors(u).size()) == fiber_dim(u) - d0(n, k));
}

TEST_CASE("covers are the codim-one slice of the order") {
    CHECK(covers(omega_min(7, 3)).empty());
    CHECK(covers(lp("n=6 (2,3)(4,5)")).size() == 5);
    for (auto [n, k] : families(7)) {
        const auto all = enumerate_patterns(n, k);
        for (const auto& sigma : all) {
            // Covers are the successors exactly one move level down; a single
            // backward move can drop further, so the containment is strict in
            // general.
            std::vector<LinkPattern> one_level;
            for (const auto& v : successors(sigma))
                if (moves_of(v) == moves_of(sigma) + 1) one_level.push_back(v);
            CHECK(covers(sigma) == one_level);
            std::vector<LinkPattern> slice;
            for (const auto& u : all)
                if (leq(u, sigma) && moves_of(u) - moves_of(sigma) == 1) slice.push_back(u);
            CHECK(covers(sigma) == slice);
        }
    }
}

TEST_CASE("the graph below (2,3)(4,5) reproduces the worked numbers") {
    const auto sigma = lp("n=6 (2,3)(4,5)");
    const auto g = build_graph(sigma);

    CHECK(g.p_sigma == 5);
    CHECK(g.d_zero == 2);
    CHECK(g.vertices.size() == 26);
    CHECK(g.edges.size() == 69);
    CHECK(g.index_of(sigma) >= 0);
    CHECK(g.index_of(lp("n=6 (1,2)(3,4)")) == -1); // incomparable, not a vertex

    CHECK(g.degree[static_cast<std::size_t>(g.index_of(sigma))] == 5);
    CHECK(g.degree[static_cast<std::size_t>(g.index_of(lp("n=6 (1,5)(2,6)")))] == 9);
    CHECK(g.degree[static_cast<std::size_t>(g.index_of(lp("n=6 (1,6)(2,5)")))] == 9);

    CHECK(singular_set(sigma) ==
          std::vector<LinkPattern>{lp("n=6 (1,5)(2,6)"), lp("n=6 (1,6)(2,5)")});
    CHECK(sing_components_oracle(sigma) == std::vector<LinkPattern>{lp("n=6 (1,6)(2,5)")});
    CHECK_FALSE(smooth_by_graph(sigma));

    CHECK(tangent_dim(sigma, lp("n=6 (1,6)(2,5)")) == 11);
    CHECK(tangent_dim(sigma, lp("n=6 (1,5)(2,6)")) == 11);
    CHECK(tangent_dim(sigma, sigma) == 7);
    CHECK_THROWS_AS((void)tangent_dim(sigma, lp("n=6 (1,2)(3,4)")), ScopeError);

    // Structural invariants of the built graph.
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        CHECK(leq(g.vertices[i], sigma));
        CHECK(g.codim_of[i] == codim(sigma, g.vertices[i]));
        CHECK(g.degree[i] >= g.p_sigma);
    }
    std::vector<int> incidence(g.vertices.size(), 0);
    for (const auto& [a, b] : g.edges) {
        CHECK(a < b);
        const int da = std::abs(g.codim_of[static_cast<std::size_t>(a)] -
                                g.codim_of[static_cast<std::size_t>(b)]);
        CHECK(da >= 1);
        ++incidence[static_cast<std::size_t>(a)];
        ++incidence[static_cast<std::size_t>(b)];
    }
    CHECK(incidence == g.degree);
    CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
}

TEST_CASE("degrees never fall below p and tangent dims never below dim") {
    for (auto [n, k] : families(8)) {
        for (const auto& sigma : enumerate_patterns(n, k, true)) {
            const auto g = build_graph(sigma);
            const long long dim = fiber_dim(sigma);
            for (std::size_t i = 0; i < g.vertices.size(); ++i) {
                CHECK(g.degree[i] >= g.p_sigma);
                const long long tangent = g.degree[i] + g.d_zero;
                CHECK(tangent >= dim);
                CHECK((tangent == dim) == (g.degree[i] == g.p_sigma));
            }
        }
    }
}

TEST_CASE("sibling predecessors and the irregularity criterion up to n=9") {
    for (auto [n, k] : families(9)) {
        for (const auto& sigma : enumerate_patterns(n, k, true)) {
            const auto g = build_graph(sigma);
            for (std::size_t i = 0; i < g.vertices.size(); ++i) {
                const auto& omega = g.vertices[i];
                bool any_full = false;
                for (const auto& [w1, w2] : move_pairs(omega)) {
                    const bool in1 = g.index_of(w1) >= 0;
                    const bool in2 = g.index_of(w2) >= 0;
                    CHECK((in1 || in2)); // at least one sibling stays below sigma
                    any_full = any_full || (in1 && in2);
                }
                // Irregular exactly when some sibling pair survives whole.
                CHECK((g.degree[i] > g.p_sigma) == any_full);
            }
        }
    }
}

TEST_CASE("vertices of codimension at most two are regular, any base, n<=10") {
    // degree(u) == p_sigma is equivalent to: the number of predecessors of u
    // below sigma equals codim(sigma, u).  The order is graded by the move
    // count, so the codim-1 bases of u are its one-move-up predecessors and
    // the codim-2 bases are reached by two such steps.
    const auto one_up = [](const LinkPattern& v) {
        std::vector<LinkPattern> out;
        for (const auto& w : predecessors(v))
            if (moves_of(w) + 1 == moves_of(v)) out.push_back(w);
        return out;
    };
    for (auto [n, k] : families(10)) {
        if (k == 0) continue;
        for (const auto& u : enumerate_patterns(n, k)) {
            const auto preds = predecessors(u);
            const auto count_below = [&preds](const LinkPattern& sigma) {
                const RankMatrix bound(sigma);
                int c = 0;
                for (const auto& w : preds)
                    if (leq_under(w, bound)) ++c;
                return c;
            };
            std::vector<LinkPattern> second;
            for (const auto& sigma : one_up(u)) {
                CHECK(count_below(sigma) == 1);
                for (const auto& tau : one_up(sigma)) second.push_back(tau);
            }
            std::sort(second.begin(), second.end());
            second.erase(std::unique(second.begin(), second.end()), second.end());
            for (const auto& sigma : second) CHECK(count_below(sigma) == 2);
        }
    }
}

TEST_CASE("graph regularity matches the rho criterion for maximal bases") {
    for (auto [n, k] : families(9))
        for (const auto& sigma : enumerate_patterns(n, k, true))
            CHECK(smooth_by_graph(sigma) == (rho(sigma) <= 3));
}

TEST_CASE("singular components are the maximal irregular vertices") {
    for (auto [n, k] : families(8)) {
        for (const auto& sigma : enumerate_patterns(n, k, true)) {
            const auto irregular = singular_set(sigma);
            CHECK(smooth_by_graph(sigma) == irregular.empty());
            const auto components = sing_components_oracle(sigma);
            for (const auto& c : components) {
                CHECK(std::binary_search(irregular.begin(), irregular.end(), c));
                for (const auto& v : irregular)
                    if (v != c) CHECK_FALSE(leq(c, v)); // nothing irregular above
            }
            // Every irregular vertex sits below some component.
            for (const auto& v : irregular) {
                bool dominated = false;
                for (const auto& c : components) dominated = dominated || leq(v, c);
                CHECK(dominated);
            }
            // Components are sorted by codim, then by arc list.
            for (std::size_t i = 1; i < components.size(); ++i) {
                const int ca = codim(sigma, components[i - 1]);
                const int cb = codim(sigma, components[i]);
                CHECK(ca <= cb);
                if (ca == cb) CHECK(components[i - 1] < components[i]);
            }
        }
    }
}

TEST_CASE("dot export groups ranks and marks irregular vertices") {
    const auto g = build_graph(lp("n=6 (2,3)(4,5)"));
    const auto dot = to_dot(g);
    CHECK(dot.rfind("graph orbit {", 0) == 0);
    CHECK(dot.find("p=5") != std::string::npos);
    CHECK(dot.find("d0=2") != std::string::npos);
    CHECK(dot.find("\"n=6 (1,6)(2,5)\" [label=\"n=6 (1,6)(2,5)\\na=9 codim=4\" style=filled") !=
          std::string::npos);
    CHECK(dot.find("\"n=6 (1,5)(2,6)\" [label=\"n=6 (1,5)(2,6)\\na=9 codim=5\" style=filled") !=
          std::string::npos);
    CHECK(to_dot(g) == dot); // deterministic

    // Truncation to codim 0 keeps only the base vertex and no edges.
    const auto top = to_dot(g, 0);
    CHECK(top.find("\"n=6 (2,3)(4,5)\"") != std::string::npos);
    CHECK(top.find("(1,6)(2,5)") == std::string::npos);
    CHECK(top.find(" -- ") == std::string::npos);
}

TEST_CASE("text export carries the adjacency structure") {
    const auto g = build_graph(lp("n=6 (2,3)(4,5)"));
    const auto text = to_text(g);
    CHECK(text.find("sigma: n=6 (2,3)(4,5)") != std::string::npos);
    CHECK(text.find("p=5 d0=2 vertices=26 edges=69") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 26); // header + one per vertex
}

TEST_CASE("json export validates against the documented shape") {
    const auto g = build_graph(lp("n=6 (2,3)(4,5)"));
    const auto parsed = nlohmann::json::parse(graph_report_json(g));
    CHECK(parsed["sigma"] == "n=6 (2,3)(4,5)");
    CHECK(parsed["n"] == 6);
    CHECK(parsed["k"] == 2);
    CHECK(parsed["p_sigma"] == 5);
    CHECK(parsed["vertices"].size() == 26);
    CHECK(parsed["degrees"].size() == 26);
    CHECK(parsed["singular_set"] ==
          nlohmann::json::array({"n=6 (1,5)(2,6)", "n=6 (1,6)(2,5)"}));
    CHECK(parsed["components"] == nlohmann::json::array({"n=6 (1,6)(2,5)"}));
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        CHECK(parsed["vertices"][i] == format_link_pattern(g.vertices[i]));
}

TEST_CASE("size guard reads the environment and gates the oracle") {
    CHECK(size_guard() == 14); // default
    REQUIRE(setenv("SPRINGER_SING_MAX_N", "4", 1) == 0);
    CHECK(size_guard() == 4);
    CHECK_THROWS_AS((void)build_graph(lp("n=6 (2,3)(4,5)")), SizeLimitError);
    CHECK_THROWS_AS((void)smooth_by_graph(lp("n=6 (2,3)(4,5)")), SizeLimitError);
    CHECK_THROWS_AS((void)sing_components_oracle(lp("n=6 (2,3)(4,5)")), SizeLimitError);
    CHECK_NOTHROW((void)build_graph(lp("n=4 (2,3)")));
    REQUIRE(unsetenv("SPRINGER_SING_MAX_N") == 0);
    CHECK(size_guard() == 14);
    CHECK_NOTHROW((void)build_graph(lp("n=6 (2,3)(4,5)")));
}

TEST_CASE("the pattern universe is shared and consistent") {
    const auto& a = PatternUniverse::get(6, 2);
    const auto& b = PatternUniverse::get(6, 2);
    CHECK(&a == &b);
    CHECK(a.patterns == enumerate_patterns(6, 2));
    CHECK(a.ranks.size() == a.patterns.size());
    for (std::size_t i = 0; i < a.patterns.size(); ++i) {
        CHECK(a.ranks[i] == RankMatrix(a.patterns[i]));
        for (std::size_t j = 0; j < a.patterns.size(); ++j)
            CHECK(leq_under(a.patterns[i], a.ranks[j]) == leq(a.patterns[i], a.patterns[j]));
    }
}
