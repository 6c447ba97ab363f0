// Orbit-graph construction, the lean degree scan behind the regularity
// test, singular-set extraction, and the graph exports.

#include "springer/orbit_graph.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

namespace springer {

namespace {

long long binom2(long long m) { return m < 2 ? 0 : m * (m - 1) / 2; }

int moves(const LinkPattern& p) { return bridges(p) + crossings(p); }

/// Invokes f(arcs) for the arc list of every pattern one move above u.
/// The scratch vector is reused across calls; f must not retain it.
template <class F>
void for_each_predecessor(const LinkPattern& u, F&& f) {
    const auto& arcs = u.arcs();
    const auto fixed = u.fixed_points();
    std::vector<Arc> scratch;
    scratch.reserve(arcs.size());
    auto emit = [&](const Arc& drop1, const Arc& drop2, Arc put1, Arc put2, bool two) {
        scratch.clear();
        for (const auto& a : arcs)
            if (a != drop1 && (!two || a != drop2)) scratch.push_back(a);
        scratch.push_back(put1);
        if (two) scratch.push_back(put2);
        std::sort(scratch.begin(), scratch.end());
        f(scratch);
    };
    // An arc over a fixed point splits at the fixed point, two ways.
    for (const auto& a : arcs)
        for (int g : fixed) {
            if (g < a.lo || g > a.hi) continue;
            emit(a, a, {a.lo, g}, {}, false);
            emit(a, a, {g, a.hi}, {}, false);
        }
    // A crossing resolves into nested or disjoint arcs, one way each.
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y) {
            const Arc& ax = arcs[x];
            const Arc& ay = arcs[y];
            if (!(ax.lo < ay.lo && ay.lo < ax.hi && ax.hi < ay.hi)) continue;
            emit(ax, ay, {ax.lo, ay.lo}, {ax.hi, ay.hi}, true);
            emit(ax, ay, {ax.lo, ay.hi}, {ay.lo, ax.hi}, true);
        }
}

/// Invokes f(arcs) for the arc list of every pattern one move below u.
template <class F>
void for_each_successor(const LinkPattern& u, F&& f) {
    const auto& arcs = u.arcs();
    const auto fixed = u.fixed_points();
    std::vector<Arc> scratch;
    scratch.reserve(arcs.size());
    auto emit = [&](const Arc& drop1, const Arc& drop2, Arc put1, Arc put2, bool two) {
        scratch.clear();
        for (const auto& a : arcs)
            if (a != drop1 && (!two || a != drop2)) scratch.push_back(a);
        scratch.push_back(put1);
        if (two) scratch.push_back(put2);
        std::sort(scratch.begin(), scratch.end());
        f(scratch);
    };
    // An arc extends over a fixed point outside it (the inverse split).
    for (const auto& a : arcs)
        for (int g : fixed) {
            if (g > a.hi) emit(a, a, {a.lo, g}, {}, false);
            if (g < a.lo) emit(a, a, {g, a.hi}, {}, false);
        }
    // Disjoint or nested arcs recombine into a crossing (inverse resolution).
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y) {
            const Arc& ax = arcs[x];
            const Arc& ay = arcs[y];
            if (ax.hi < ay.lo) {
                emit(ax, ay, {ax.lo, ay.lo}, {ax.hi, ay.hi}, true);
            } else if (ay.hi < ax.hi) {
                // ay nested inside ax (arc sorting gives ax.lo < ay.lo).
                emit(ax, ay, {ax.lo, ay.hi}, {ay.lo, ax.hi}, true);
            }
        }
}

/// Number of one-move-below patterns, counted without materialising them.
int count_down_moves(const LinkPattern& u) {
    const auto& arcs = u.arcs();
    const auto fixed = u.fixed_points();
    int count = 0;
    for (const auto& a : arcs)
        for (int g : fixed)
            if (g < a.lo || g > a.hi) ++count;
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y) {
            const Arc& ax = arcs[x];
            const Arc& ay = arcs[y];
            if (ax.hi < ay.lo || ay.hi < ax.hi) ++count;
        }
    return count;
}

bool leq_arcs_under(const std::vector<Arc>& sorted_arcs, int n, const RankMatrix& bound) {
    // cnt[j] accumulates the number of arcs with lo >= i and hi <= j while i
    // descends; each row is then compared entrywise with early exit.
    constexpr int kStack = 128;
    std::array<int, kStack + 1> stack_cnt{};
    std::vector<int> heap_cnt;
    int* cnt = stack_cnt.data();
    if (n > kStack) {
        heap_cnt.assign(static_cast<std::size_t>(n) + 1, 0);
        cnt = heap_cnt.data();
    } else {
        std::fill(stack_cnt.begin(), stack_cnt.begin() + n + 1, 0);
    }
    auto next = static_cast<int>(sorted_arcs.size()) - 1;
    for (int i = n; i >= 1; --i) {
        while (next >= 0 && sorted_arcs[next].lo == i) {
            for (int j = sorted_arcs[next].hi; j <= n; ++j) ++cnt[j];
            --next;
        }
        for (int j = i + 1; j <= n; ++j)
            if (cnt[j] > bound.entry(i, j)) return false;
    }
    return true;
}

/// Degree of u inside the graph below the pattern whose rank matrix is
/// bound: down-moves (always inside) plus up-moves staying under bound.
int lean_degree(const LinkPattern& u, const RankMatrix& bound) {
    int degree = count_down_moves(u);
    for_each_predecessor(u, [&](const std::vector<Arc>& arcs) {
        if (leq_arcs_under(arcs, u.n(), bound)) ++degree;
    });
    return degree;
}

void check_guard(const LinkPattern& sigma) {
    if (sigma.n() > size_guard())
        throw SizeLimitError("pattern universe for n=" + std::to_string(sigma.n()) +
                             " exceeds the size guard (" + std::to_string(size_guard()) +
                             "); raise SPRINGER_SING_MAX_N to override");
}

/// Maximal elements of a set of patterns under the closure order.  Sorted
/// by rising codim relative to sigma; an element is dominated iff it is
/// dominated by an already-accepted maximal element.
std::vector<LinkPattern> maximal_filter(const LinkPattern& sigma, std::vector<LinkPattern> set) {
    const int base = moves(sigma);
    std::stable_sort(set.begin(), set.end(), [base](const LinkPattern& a, const LinkPattern& b) {
        const int ca = moves(a) - base;
        const int cb = moves(b) - base;
        if (ca != cb) return ca < cb;
        return a.arcs() < b.arcs();
    });
    std::vector<LinkPattern> maximal;
    std::vector<RankMatrix> maximal_ranks;
    for (const auto& v : set) {
        RankMatrix rv(v);
        bool dominated = false;
        for (const auto& rm : maximal_ranks)
            if (rv.leq(rm)) {
                dominated = true;
                break;
            }
        if (!dominated) {
            maximal.push_back(v);
            maximal_ranks.push_back(std::move(rv));
        }
    }
    return maximal;
}

} // namespace

// ---------------------------------------------------------------------------
// Dimension theory
// ---------------------------------------------------------------------------

long long fiber_dim(const LinkPattern& p) {
    return binom2(p.n() - p.k()) + binom2(p.k()) - bridges(p) - crossings(p);
}

long long d0(int n, int k) { return binom2(n - 2 * k) + binom2(k); }

long long p_value(const LinkPattern& p) {
    return binom2(p.n() - p.k()) - binom2(p.n() - 2 * p.k()) - bridges(p) - crossings(p);
}

int codim(const LinkPattern& sigma, const LinkPattern& u) {
    if (!leq(u, sigma))
        throw ScopeError("codim: " + format_link_pattern(u) + " is not below " +
                         format_link_pattern(sigma));
    return moves(u) - moves(sigma);
}

// ---------------------------------------------------------------------------
// Elementary moves
// ---------------------------------------------------------------------------

std::vector<LinkPattern> predecessors(const LinkPattern& u) {
    std::vector<LinkPattern> out;
    for_each_predecessor(u, [&](const std::vector<Arc>& arcs) { out.emplace_back(u.n(), arcs); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LinkPattern> successors(const LinkPattern& u) {
    std::vector<LinkPattern> out;
    for_each_successor(u, [&](const std::vector<Arc>& arcs) { out.emplace_back(u.n(), arcs); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LinkPattern> covers(const LinkPattern& sigma) {
    // A single backward move can drop the move count by more than one (an
    // arc extending over a far-away fixed point may pick up several bridges
    // at once); such results are below sigma but not covered by it.  The
    // covers are exactly the one-move-below patterns one move level down.
    const int base = moves(sigma);
    auto out = successors(sigma);
    std::erase_if(out, [base](const LinkPattern& v) { return moves(v) != base + 1; });
    return out;
}

// ---------------------------------------------------------------------------
// The graph
// ---------------------------------------------------------------------------

int OrbitGraph::index_of(const LinkPattern& v) const {
    auto it = std::lower_bound(
        vertices.begin(), vertices.end(), v,
        [](const LinkPattern& a, const LinkPattern& b) { return a.arcs() < b.arcs(); });
    if (it == vertices.end() || !(*it == v)) return -1;
    return static_cast<int>(it - vertices.begin());
}

int size_guard() {
    if (const char* env = std::getenv("SPRINGER_SING_MAX_N")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 14;
}

OrbitGraph build_graph(const LinkPattern& sigma) {
    check_guard(sigma);
    const auto& family = PatternUniverse::get(sigma.n(), sigma.k());
    const RankMatrix bound(sigma);

    OrbitGraph g;
    g.sigma = sigma;
    g.p_sigma = p_value(sigma);
    g.d_zero = d0(sigma.n(), sigma.k());
    for (std::size_t i = 0; i < family.patterns.size(); ++i)
        if (family.ranks[i].leq(bound)) g.vertices.push_back(family.patterns[i]);

    const int base = moves(sigma);
    g.degree.assign(g.vertices.size(), 0);
    g.codim_of.assign(g.vertices.size(), 0);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        g.codim_of[i] = moves(v) - base;
        int up = 0;
        for_each_predecessor(v, [&](const std::vector<Arc>& arcs) {
            if (leq_arcs_under(arcs, v.n(), bound)) ++up;
        });
        const auto down = successors(v);
        g.degree[i] = up + static_cast<int>(down.size());
        for (const auto& s : down) {
            const int j = g.index_of(s);
            // Every one-move-below pattern stays below sigma.
            if (j < 0)
                throw MismatchError("internal invariant broken: one-move-below pattern " +
                                    format_link_pattern(s) + " escaped the vertex set of " +
                                    format_link_pattern(sigma));
            g.edges.emplace_back(std::min<int>(static_cast<int>(i), j),
                                 std::max<int>(static_cast<int>(i), j));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool smooth_by_graph(const LinkPattern& sigma) {
    check_guard(sigma);
    const auto& family = PatternUniverse::get(sigma.n(), sigma.k());
    const RankMatrix bound(sigma);
    const long long p = p_value(sigma);
    for (std::size_t i = 0; i < family.patterns.size(); ++i) {
        if (!family.ranks[i].leq(bound)) continue;
        if (lean_degree(family.patterns[i], bound) != p) return false;
    }
    return true;
}

std::vector<LinkPattern> singular_set(const LinkPattern& sigma) {
    check_guard(sigma);
    const auto& family = PatternUniverse::get(sigma.n(), sigma.k());
    const RankMatrix bound(sigma);
    const long long p = p_value(sigma);
    std::vector<LinkPattern> out;
    for (std::size_t i = 0; i < family.patterns.size(); ++i) {
        if (!family.ranks[i].leq(bound)) continue;
        if (lean_degree(family.patterns[i], bound) > p) out.push_back(family.patterns[i]);
    }
    return out;
}

std::vector<LinkPattern> sing_components_oracle(const LinkPattern& sigma) {
    return maximal_filter(sigma, singular_set(sigma));
}

long long tangent_dim(const LinkPattern& sigma, const LinkPattern& u) {
    if (!leq(u, sigma))
        throw ScopeError("tangent_dim: " + format_link_pattern(u) + " is not below " +
                         format_link_pattern(sigma));
    return lean_degree(u, RankMatrix(sigma)) + d0(sigma.n(), sigma.k());
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

std::string to_dot(const OrbitGraph& g, int max_codim) {
    auto kept = [&](std::size_t i) { return max_codim < 0 || g.codim_of[i] <= max_codim; };
    std::string s = "graph orbit {\n";
    s += "  labelloc=\"t\";\n";
    s += "  label=\"" + format_link_pattern(g.sigma) + "   p=" + std::to_string(g.p_sigma) +
         "  d0=" + std::to_string(g.d_zero) + "\";\n";
    s += "  rankdir=BT;\n";
    s += "  node [shape=box fontname=\"monospace\"];\n";
    int max_level = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (kept(i)) max_level = std::max(max_level, g.codim_of[i]);
    for (int level = 0; level <= max_level; ++level) {
        std::string group;
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            if (kept(i) && g.codim_of[i] == level)
                group += " \"" + format_link_pattern(g.vertices[i]) + "\";";
        if (!group.empty()) s += "  { rank=same;" + group + " }\n";
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (!kept(i)) continue;
        const std::string id = format_link_pattern(g.vertices[i]);
        s += "  \"" + id + "\" [label=\"" + id + "\\na=" + std::to_string(g.degree[i]) +
             " codim=" + std::to_string(g.codim_of[i]) + "\"";
        if (g.degree[i] > g.p_sigma) s += " style=filled fillcolor=\"#f6c9c9\"";
        s += "];\n";
    }
    for (const auto& [a, b] : g.edges) {
        if (!kept(static_cast<std::size_t>(a)) || !kept(static_cast<std::size_t>(b))) continue;
        s += "  \"" + format_link_pattern(g.vertices[static_cast<std::size_t>(a)]) + "\" -- \"" +
             format_link_pattern(g.vertices[static_cast<std::size_t>(b)]) + "\";\n";
    }
    s += "}\n";
    return s;
}

std::string to_text(const OrbitGraph& g) {
    std::string s = "sigma: " + format_link_pattern(g.sigma) + "\n";
    s += "p=" + std::to_string(g.p_sigma) + " d0=" + std::to_string(g.d_zero) +
         " vertices=" + std::to_string(g.vertices.size()) +
         " edges=" + std::to_string(g.edges.size()) + "\n";
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (const auto& [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        std::sort(adj[i].begin(), adj[i].end());
        s += std::to_string(i) + ": " + format_link_pattern(g.vertices[i]) +
             " codim=" + std::to_string(g.codim_of[i]) +
             " degree=" + std::to_string(g.degree[i]);
        if (g.degree[i] > g.p_sigma) s += " singular";
        s += " --";
        for (int j : adj[i]) s += ' ' + std::to_string(j);
        s += '\n';
    }
    return s;
}

std::string graph_report_json(const OrbitGraph& g) {
    nlohmann::json j;
    j["sigma"] = format_link_pattern(g.sigma);
    j["n"] = g.sigma.n();
    j["k"] = g.sigma.k();
    j["p_sigma"] = g.p_sigma;
    j["vertices"] = nlohmann::json::array();
    j["degrees"] = nlohmann::json::array();
    std::vector<LinkPattern> irregular;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        j["vertices"].push_back(format_link_pattern(g.vertices[i]));
        j["degrees"].push_back(g.degree[i]);
        if (g.degree[i] > g.p_sigma) irregular.push_back(g.vertices[i]);
    }
    j["singular_set"] = nlohmann::json::array();
    for (const auto& v : irregular) j["singular_set"].push_back(format_link_pattern(v));
    j["components"] = nlohmann::json::array();
    for (const auto& v : maximal_filter(g.sigma, irregular))
        j["components"].push_back(format_link_pattern(v));
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Shared enumeration cache
// ---------------------------------------------------------------------------

const PatternUniverse::Family& PatternUniverse::get(int n, int k) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<Family>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{n, k}];
    if (!slot) {
        auto family = std::make_unique<Family>();
        family->patterns = enumerate_patterns(n, k);
        family->ranks.reserve(family->patterns.size());
        for (const auto& p : family->patterns) family->ranks.emplace_back(p);
        slot = std::move(family);
    }
    return *slot;
}

bool leq_under(const LinkPattern& u, const RankMatrix& bound) {
    if (u.n() != bound.n()) throw ScopeError("leq_under: mismatched n");
    return leq_arcs_under(u.arcs(), u.n(), bound);
}

} // namespace springer
