// Admissible tuples, the interval search that finds all of them for a
// maximal pattern, the steal-repair assembly of singular-locus components,
// and the report plumbing.

#include "springer/singular.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace springer {

namespace {

int moves(const LinkPattern& p) { return bridges(p) + crossings(p); }

enum class Relation { inside, outside, over, crossing };

/// Position of x relative to a; endpoints are pairwise distinct.
Relation relate(const Arc& x, const Arc& a) {
    if (x.lo > a.lo && x.hi < a.hi) return Relation::inside;
    if (x.lo < a.lo && x.hi > a.hi) return Relation::over;
    if (x.hi < a.lo || x.lo > a.hi) return Relation::outside;
    return Relation::crossing;
}

/// Arcs of p fully inside [s,t] plus a membership mask of their endpoints;
/// window points outside the mask are fixed in the projection.
struct WindowView {
    std::vector<Arc> arcs;
    std::vector<bool> endpoint;

    WindowView(const LinkPattern& p, int s, int t) : endpoint(p.n() + 1, false) {
        for (const auto& a : p.arcs())
            if (s <= a.lo && a.hi <= t) {
                arcs.push_back(a);
                endpoint[a.lo] = endpoint[a.hi] = true;
            }
    }

    [[nodiscard]] bool fixed(int x) const { return !endpoint[x]; }

    [[nodiscard]] bool any_fixed_in(int lo, int hi) const {
        for (int x = lo; x <= hi; ++x)
            if (fixed(x)) return true;
        return false;
    }

    [[nodiscard]] int count_fixed_in(int lo, int hi) const {
        int c = 0;
        for (int x = lo; x <= hi; ++x)
            if (fixed(x)) ++c;
        return c;
    }
};

/// Evaluates the six conditions; fills kappa and over_arcs into *out when
/// admissible and out is non-null.
bool admissibility_check(const LinkPattern& p, Arc a1, Arc a2, int s, int t,
                         AdmissiblePair* out) {
    if (a1.lo > a1.hi) std::swap(a1.lo, a1.hi);
    if (a2.lo > a2.hi) std::swap(a2.lo, a2.hi);
    if (a1.lo > a2.lo) std::swap(a1, a2);
    if (a1 == a2) throw ScopeError("is_admissible: the two arcs must be distinct");
    if (!p.has_arc(a1.lo, a1.hi) || !p.has_arc(a2.lo, a2.hi))
        throw ScopeError("is_admissible: both arcs must belong to the pattern");
    if (s < 1 || t > p.n() || s >= t)
        throw ScopeError("is_admissible: invalid window [" + std::to_string(s) + "," +
                         std::to_string(t) + "]");

    // (1) s < i < j < i' < j' < t.
    if (!(s < a1.lo && a1.hi < a2.lo && a2.hi < t)) return false;

    const WindowView w(p, s, t);

    // (2) window ends fixed in the projection.
    if (!w.fixed(s) || !w.fixed(t)) return false;

    // (3) no projection fixed point strictly inside (s,j) or (i',t).
    if (w.any_fixed_in(s + 1, a1.hi - 1)) return false;
    if (w.any_fixed_in(a2.lo + 1, t - 1)) return false;

    // (4) no projection arc crosses either pair arc; over one means over
    // both.  (5) the over-arcs are pairwise nested.
    std::vector<Arc> over;
    for (const auto& x : w.arcs) {
        if (x == a1 || x == a2) continue;
        const Relation r1 = relate(x, a1);
        const Relation r2 = relate(x, a2);
        if (r1 == Relation::crossing || r2 == Relation::crossing) return false;
        if ((r1 == Relation::over) != (r2 == Relation::over)) return false;
        if (r1 == Relation::over) over.push_back(x);
    }
    for (std::size_t x = 0; x < over.size(); ++x)
        for (std::size_t y = x + 1; y < over.size(); ++y) {
            const Relation r = relate(over[x], over[y]);
            if (r != Relation::inside && r != Relation::over) return false;
        }

    // (6) middle fixed points and over-arcs are mutually exclusive.
    const int kappa = w.count_fixed_in(a1.hi + 1, a2.lo - 1);
    if (kappa > 0 && !over.empty()) return false;

    if (out) {
        out->arc1 = a1;
        out->arc2 = a2;
        out->s = s;
        out->t = t;
        out->kappa = kappa;
        std::sort(over.begin(), over.end());
        out->over_arcs = std::move(over);
    }
    return true;
}

} // namespace

bool is_admissible(const LinkPattern& p, Arc arc1, Arc arc2, int s, int t) {
    return admissibility_check(p, arc1, arc2, s, t, nullptr);
}

AdmissiblePair make_admissible_pair(const LinkPattern& p, Arc arc1, Arc arc2, int s, int t) {
    AdmissiblePair pair;
    if (!admissibility_check(p, arc1, arc2, s, t, &pair))
        throw ScopeError("make_admissible_pair: tuple ((" + std::to_string(arc1.lo) + "," +
                         std::to_string(arc1.hi) + "),(" + std::to_string(arc2.lo) + "," +
                         std::to_string(arc2.hi) + "),[" + std::to_string(s) + "," +
                         std::to_string(t) + "]) of " + format_link_pattern(p) +
                         " is not admissible");
    return pair;
}

int pair_codim(const AdmissiblePair& pair) { return 4 + 2 * (pair.kappa + pair.r()); }

long long basic_pair_tangent(const LinkPattern& p, const AdmissiblePair& pair) {
    return fiber_dim(p) + (pair.kappa + 1) * (2 * pair.r() + 2) + 2;
}

LinkPattern component_from_pair(const LinkPattern& p, const AdmissiblePair& pair) {
    std::vector<Arc> arcs = p.arcs();
    auto remove = [&arcs, &p](const Arc& a) {
        auto it = std::find(arcs.begin(), arcs.end(), a);
        if (it == arcs.end())
            throw MismatchError("internal: arc (" + std::to_string(a.lo) + "," +
                                std::to_string(a.hi) + ") missing from " +
                                format_link_pattern(p));
        arcs.erase(it);
    };
    remove(pair.arc1);
    remove(pair.arc2);

    // Window ends that are arc endpoints get detached; the partner lies
    // outside the window (otherwise the end would not project to a fixed
    // point) and is re-attached below.
    std::vector<int> west, east;
    for (int e : {pair.s, pair.t}) {
        const int v = p.partner(e);
        if (v == 0) continue;
        if (v >= pair.s && v <= pair.t)
            throw MismatchError("internal: window end " + std::to_string(e) +
                                " is paired inside the window of " + format_link_pattern(p));
        remove({std::min(e, v), std::max(e, v)});
        (v < pair.s ? west : east).push_back(v);
    }

    arcs.push_back({pair.arc1.lo, pair.arc2.hi});
    arcs.push_back({pair.s, pair.t});

    // Free points of [j,i'] after deletion: the pair's inner endpoints plus
    // any genuinely unpaired middle points.
    std::vector<bool> used(p.n() + 1, false);
    for (const auto& a : arcs) used[a.lo] = used[a.hi] = true;
    std::vector<int> pool;
    for (int x = pair.arc1.hi; x <= pair.arc2.lo; ++x)
        if (!used[x]) pool.push_back(x);
    if (pool.size() < west.size() + east.size())
        throw MismatchError("internal: repair pool exhausted for " + format_link_pattern(p));

    // West partners reconnect to the smallest free points (innermost
    // partner first), east partners to the largest; nesting is preserved.
    std::sort(west.begin(), west.end(), std::greater<int>());
    std::sort(east.begin(), east.end());
    std::size_t lo_slot = 0;
    std::size_t hi_slot = pool.size();
    for (int v : west) arcs.push_back({v, pool[lo_slot++]});
    for (int v : east) arcs.push_back({pool[--hi_slot], v});

    LinkPattern result(p.n(), std::move(arcs));
    if (!leq(result, p) || result == p)
        throw MismatchError("internal: assembled component " + format_link_pattern(result) +
                            " is not strictly below " + format_link_pattern(p));
    const int expected = pair_codim(pair);
    const int actual = moves(result) - moves(p);
    if (actual != expected)
        throw MismatchError("internal: component " + format_link_pattern(result) + " has codim " +
                            std::to_string(actual) + ", expected " + std::to_string(expected));
    return result;
}

LinkPattern basic_sing_element(const LinkPattern& p, Arc arc1, Arc arc2) {
    return component_from_pair(p, make_admissible_pair(p, arc1, arc2, 1, p.n()));
}

// ---------------------------------------------------------------------------
// Interval search
// ---------------------------------------------------------------------------

namespace {

/// Arcs of the (maximal) pattern containing [l, l+1], innermost first.
std::vector<Arc> chain_over(const LinkPattern& p, int l) {
    std::vector<Arc> chain;
    for (const auto& a : p.arcs())
        if (a.lo <= l && l + 1 <= a.hi) chain.push_back(a);
    std::sort(chain.begin(), chain.end(),
              [](const Arc& a, const Arc& b) { return a.lo > b.lo; });
    return chain;
}

bool tau_in(const std::vector<int>& tau, int lo, int hi) {
    auto it = std::lower_bound(tau.begin(), tau.end(), lo);
    return it != tau.end() && *it <= hi;
}

} // namespace

std::vector<AdmissiblePair> find_admissible_pairs(const LinkPattern& sigma) {
    if (!is_maximal(sigma))
        throw ScopeError("find_admissible_pairs: " + format_link_pattern(sigma) +
                         " is not maximal");
    std::vector<AdmissiblePair> out;
    const int n = sigma.n();
    const auto tau = tau_star(sigma);
    if (tau.empty()) return out;

    // Trim to the window whose ends project to fixed points: fixed ambient
    // ends stay; a non-fixed end retreats to the outermost minimal arc
    // (whose near endpoint is then stranded, hence fixed in the projection).
    int w_lo = 1;
    int w_hi = n;
    const bool first_fixed = sigma.is_fixed(1);
    const bool last_fixed = sigma.is_fixed(n);
    if (first_fixed && last_fixed) {
        // full window
    } else if (first_fixed) {
        w_hi = tau.back();
    } else if (last_fixed) {
        w_lo = tau.front() + 1;
    } else if (sigma.has_arc(1, n)) {
        w_hi = tau.back();
    } else {
        w_lo = tau.front() + 1;
        w_hi = tau.back();
    }
    if (w_lo >= w_hi) return out;

    const auto [hat, offset] = projection(sigma, w_lo, w_hi);
    const auto tau_hat = tau_star(hat);
    const auto fixed_hat = hat.fixed_points();
    if (tau_hat.size() < 2) return out;

    auto internal_error = [&sigma](const std::string& what) -> MismatchError {
        return MismatchError("find_admissible_pairs: internal invariant broken (" + what +
                             ") for " + format_link_pattern(sigma));
    };

    for (std::size_t xi = 0; xi < tau_hat.size(); ++xi)
        for (std::size_t xj = xi + 1; xj < tau_hat.size(); ++xj) {
            const int i = tau_hat[xi];
            const int j = tau_hat[xj];

            // Left configuration: outermost arc over (i,i+1) ending before
            // the right minimal arc with no other minimal arc beneath its
            // left overhang.  Both constraints fail monotonically outward.
            Arc left{i, i + 1};
            for (const auto& a : chain_over(hat, i)) {
                if (a.hi >= j) break;
                if (a.lo < i && tau_in(tau_hat, a.lo, i - 1)) break;
                left = a;
            }
            // Right configuration, mirrored.
            Arc right{j, j + 1};
            for (const auto& a : chain_over(hat, j)) {
                if (a.lo <= i) break;
                if (a.hi > j + 1 && tau_in(tau_hat, j + 1, a.hi)) break;
                right = a;
            }
            if (!(left.hi < right.lo)) throw internal_error("configurations overlap");

            // Nearest fixed points flanking the two configurations.
            auto m1_it = std::lower_bound(fixed_hat.begin(), fixed_hat.end(), left.lo);
            if (m1_it == fixed_hat.begin()) throw internal_error("no fixed point left");
            const int m1 = *std::prev(m1_it);
            auto m2_it = std::upper_bound(fixed_hat.begin(), fixed_hat.end(), right.hi);
            if (m2_it == fixed_hat.end()) throw internal_error("no fixed point right");
            const int m2 = *m2_it;

            // Window-end candidates.  A window end is either a flanking
            // fixed point, or a point whose partner the window cuts off:
            // the left end is m1, the right endpoint of an arc ending
            // strictly between m1 and the left configuration (partner to
            // the west), or the left endpoint of an arc spanning both
            // configurations (partner beyond the right end); mirrored on
            // the right.  No arc spans a fixed point of a maximal pattern,
            // so this list is complete.  Which combinations actually work
            // depends on both ends at once, so the product is filtered
            // through the full admissibility check.
            std::vector<int> lefts{m1};
            std::vector<int> rights{m2};
            for (const auto& a : hat.arcs()) {
                if (a.hi > m1 && a.hi < left.lo) lefts.push_back(a.hi);
                if (a.lo > right.hi && a.lo < m2) rights.push_back(a.lo);
                if (a.lo < left.lo && a.hi > right.hi) {
                    lefts.push_back(a.lo);
                    rights.push_back(a.hi);
                }
            }

            for (int ws : lefts)
                for (int wt : rights) {
                    AdmissiblePair pair;
                    const Arc a1{left.lo + offset, left.hi + offset};
                    const Arc a2{right.lo + offset, right.hi + offset};
                    if (admissibility_check(sigma, a1, a2, ws + offset, wt + offset, &pair))
                        out.push_back(std::move(pair));
                }
        }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<AdmissiblePair> find_admissible_pairs_naive(const LinkPattern& p) {
    std::vector<AdmissiblePair> out;
    const auto& arcs = p.arcs();
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y)
            for (int s = 1; s < p.n(); ++s)
                for (int t = s + 1; t <= p.n(); ++t) {
                    AdmissiblePair pair;
                    if (admissibility_check(p, arcs[x], arcs[y], s, t, &pair))
                        out.push_back(std::move(pair));
                }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

SingReport sing_direct(const LinkPattern& sigma) {
    if (!is_maximal(sigma))
        throw ScopeError("sing_direct: " + format_link_pattern(sigma) + " is not maximal");
    const int r = rho(sigma);
    if (r < 4)
        throw ScopeError("sing_direct: rho=" + std::to_string(r) +
                         " < 4, the component is smooth (use sing_any)");

    SingReport report;
    report.sigma = sigma;
    report.rho_value = r;
    report.method = SingMethod::direct;

    std::map<LinkPattern, AdmissiblePair> by_component;
    for (const auto& pair : find_admissible_pairs(sigma))
        by_component.try_emplace(component_from_pair(sigma, pair), pair);

    const long long dim = fiber_dim(sigma);
    const int base = moves(sigma);
    for (auto& [pattern, pair] : by_component) {
        SingComponent c;
        c.pattern = pattern;
        c.pair = pair;
        c.codim = moves(pattern) - base;
        c.tangent_dim = dim + c.codim;
        if (c.codim < 4)
            throw MismatchError("internal: direct component " + format_link_pattern(pattern) +
                                " has codim " + std::to_string(c.codim) + " < 4");
        report.components.push_back(std::move(c));
    }
    std::sort(report.components.begin(), report.components.end(),
              [](const SingComponent& a, const SingComponent& b) {
                  if (a.codim != b.codim) return a.codim < b.codim;
                  return a.pattern.arcs() < b.pattern.arcs();
              });
    for (std::size_t x = 0; x < report.components.size(); ++x)
        for (std::size_t y = x + 1; y < report.components.size(); ++y) {
            const auto& px = report.components[x].pattern;
            const auto& py = report.components[y].pattern;
            if (leq(px, py) || leq(py, px))
                throw MismatchError("internal: direct components " + format_link_pattern(px) +
                                    " and " + format_link_pattern(py) + " are comparable");
        }
    report.smooth = report.components.empty();
    return report;
}

SingReport sing_graph(const LinkPattern& sigma) {
    SingReport report;
    report.sigma = sigma;
    if (is_maximal(sigma)) report.rho_value = rho(sigma);
    report.method = SingMethod::graph;
    const int base = moves(sigma);
    for (const auto& pattern : sing_components_oracle(sigma)) {
        SingComponent c;
        c.pattern = pattern;
        c.codim = moves(pattern) - base;
        c.tangent_dim = tangent_dim(sigma, pattern);
        report.components.push_back(std::move(c));
    }
    report.smooth = report.components.empty();
    return report;
}

SingReport sing_any(const LinkPattern& sigma) {
    if (is_maximal(sigma)) {
        const int r = rho(sigma);
        if (r >= 4) return sing_direct(sigma);
        SingReport report;
        report.sigma = sigma;
        report.rho_value = r;
        report.smooth = true;
        report.method = SingMethod::direct;
        return report;
    }
    return sing_graph(sigma);
}

namespace {

std::string pair_text(const AdmissiblePair& pair) {
    return "((" + std::to_string(pair.arc1.lo) + "," + std::to_string(pair.arc1.hi) + "),(" +
           std::to_string(pair.arc2.lo) + "," + std::to_string(pair.arc2.hi) + "))@[" +
           std::to_string(pair.s) + "," + std::to_string(pair.t) + "]";
}

} // namespace

std::string to_text(const SingReport& report) {
    std::string s = "sigma: " + format_link_pattern(report.sigma) + "\n";
    s += "n=" + std::to_string(report.sigma.n()) + " k=" + std::to_string(report.sigma.k());
    s += " dim=" + std::to_string(fiber_dim(report.sigma));
    if (report.rho_value) s += " rho=" + std::to_string(*report.rho_value);
    s += " method=";
    s += (report.method == SingMethod::direct ? "direct" : "graph");
    s += '\n';
    if (report.smooth) {
        s += "smooth: singular locus empty\n";
        return s;
    }
    s += "singular: " + std::to_string(report.components.size()) + " component" +
         (report.components.size() == 1 ? "" : "s") + "\n";
    for (const auto& c : report.components) {
        s += "  " + format_link_pattern(c.pattern) + "  codim=" + std::to_string(c.codim) +
             " tangent=" + std::to_string(c.tangent_dim);
        if (c.pair) s += "  pair=" + pair_text(*c.pair);
        s += '\n';
    }
    return s;
}

std::string to_json(const SingReport& report) {
    nlohmann::json j;
    j["sigma"] = format_link_pattern(report.sigma);
    j["n"] = report.sigma.n();
    j["k"] = report.sigma.k();
    if (report.rho_value) j["rho"] = *report.rho_value;
    else j["rho"] = nullptr;
    j["smooth"] = report.smooth;
    j["method"] = report.method == SingMethod::direct ? "direct" : "graph";
    j["components"] = nlohmann::json::array();
    for (const auto& c : report.components) {
        nlohmann::json jc;
        jc["pattern"] = format_link_pattern(c.pattern);
        if (c.pair) {
            jc["pair"] = {{"arc1", {c.pair->arc1.lo, c.pair->arc1.hi}},
                          {"arc2", {c.pair->arc2.lo, c.pair->arc2.hi}},
                          {"interval", {c.pair->s, c.pair->t}}};
        } else {
            jc["pair"] = nullptr;
        }
        jc["codim"] = c.codim;
        jc["tangent_dim"] = c.tangent_dim;
        j["components"].push_back(std::move(jc));
    }
    return j.dump(2);
}

} // namespace springer
