// Direct computation of the singular-locus components of a component
// indexed by a maximal link pattern, without building the orbit graph.
//
// A pair of arcs together with a window [s,t] is admissible when six
// combinatorial conditions hold on the projection of the pattern onto the
// window.  Every admissible tuple assembles into one singular-locus
// component by deleting the pair, joining the outer endpoints of the pair
// and the window ends, and re-attaching any arcs the window ends were
// stolen from; distinct tuples may assemble to the same component.  The
// components found this way are exactly the maximal irregular vertices the
// orbit-graph oracle reports, which the test-suite verifies exhaustively.

#pragma once

#include "springer/link_pattern.hpp"
#include "springer/orbit_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace springer {

/// An admissible tuple: arcs (i,j) = arc1 and (i',j') = arc2 with j < i',
/// inside the window [s,t].  kappa counts the fixed points of the window
/// projection strictly between j and i' (endpoints of arcs leaving the
/// window count as fixed); over_arcs holds the projection arcs spanning
/// both pair arcs, in ambient coordinates.
struct AdmissiblePair {
    Arc arc1;
    Arc arc2;
    int s = 0;
    int t = 0;
    int kappa = 0;
    std::vector<Arc> over_arcs;

    [[nodiscard]] int r() const { return static_cast<int>(over_arcs.size()); }

    friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// The six conditions, evaluated on the projection of p onto [s,t]:
///   (1) s < i < j < i' < j' < t with both arcs inside the window,
///   (2) s and t are fixed in the projection,
///   (3) the projection has no fixed point strictly inside (s,j) or (i',t),
///   (4) no projection arc crosses either pair arc, and an arc over one
///       pair arc is over both,
///   (5) the arcs over both (the set R) are pairwise nested,
///   (6) kappa * |R| = 0.
/// Both arcs must belong to p and the window must be a valid interval
/// (ScopeError otherwise).
[[nodiscard]] bool is_admissible(const LinkPattern& p, Arc arc1, Arc arc2, int s, int t);

/// As is_admissible, but returns the tuple with kappa and R computed;
/// throws ScopeError when the tuple is not admissible.
[[nodiscard]] AdmissiblePair make_admissible_pair(const LinkPattern& p, Arc arc1, Arc arc2,
                                                  int s, int t);

/// codim of the component assembled from an admissible tuple: 4 + 2(kappa+r).
[[nodiscard]] int pair_codim(const AdmissiblePair& pair);

/// Tangent dimension at the assembled component of a pair admissible at
/// [1,n] of a maximal pattern: dim F_p + (kappa+1)(2r+2) + 2.
[[nodiscard]] long long basic_pair_tangent(const LinkPattern& p, const AdmissiblePair& pair);

/// The singular-locus component assembled from a tuple: delete the pair
/// arcs; if a window end is not fixed in p, detach it from its arc (the
/// partner lies outside the window); add (i,j') and (s,t); reconnect each
/// detached partner to a free point of [j,i'] — partners west of the window
/// take the smallest free points (innermost partner first), partners east
/// the largest.  All untouched arcs are kept.  The result is checked to lie
/// strictly below p with codim 4 + 2(kappa+r).
[[nodiscard]] LinkPattern component_from_pair(const LinkPattern& p, const AdmissiblePair& pair);

/// Assembled component of a pair admissible at the full window [1,n]
/// (both window ends are then genuinely fixed, so no re-attachment
/// happens).  Throws ScopeError when the pair is not admissible there.
[[nodiscard]] LinkPattern basic_sing_element(const LinkPattern& p, Arc arc1, Arc arc2);

/// All admissible tuples of a maximal pattern, found by the interval
/// search: trim the ambient line to the window between the outermost
/// minimal arcs (adjusted for fixed ends and a full-span arc), then for
/// each pair of minimal arcs of the trimmed pattern grow the two arc
/// configurations outward, collect the candidate window ends (flanking
/// fixed points, cut points of arcs beside the configurations, endpoints
/// of arcs spanning both) and keep every candidate interval that passes
/// is_admissible.  Requires a maximal pattern (ScopeError otherwise);
/// sorted and deduplicated.
[[nodiscard]] std::vector<AdmissiblePair> find_admissible_pairs(const LinkPattern& p);

/// Reference route: every unordered pair of arcs against every window,
/// filtered by is_admissible.  Defined for any pattern; sorted.  The tuple
/// set can strictly contain the procedural one, but both routes assemble
/// to the same component set for maximal patterns.
[[nodiscard]] std::vector<AdmissiblePair> find_admissible_pairs_naive(const LinkPattern& p);

enum class SingMethod { direct, graph };

struct SingComponent {
    LinkPattern pattern;
    /// One generating tuple (the first in tuple order) for the direct
    /// method; absent for the graph method.
    std::optional<AdmissiblePair> pair;
    int codim = 0;
    long long tangent_dim = 0;
};

struct SingReport {
    LinkPattern sigma;
    /// Present for maximal patterns only.
    std::optional<int> rho_value;
    bool smooth = true;
    SingMethod method = SingMethod::direct;
    /// Sorted by (codim, arc list); pairwise incomparable.
    std::vector<SingComponent> components;
};

/// Direct algorithm; requires a maximal pattern with rho >= 4 (ScopeError
/// otherwise).  Components carry codim = bridges+crossings of the component
/// and tangent_dim = dim F_sigma + codim.
[[nodiscard]] SingReport sing_direct(const LinkPattern& sigma);

/// Orbit-graph route for any pattern (subject to the size guard):
/// components from the oracle, codim from the bridge+crossing difference,
/// tangent dimensions from vertex degrees.  rho is filled when sigma is
/// maximal.  Can return components of any codim.
[[nodiscard]] SingReport sing_graph(const LinkPattern& sigma);

/// Dispatch: maximal with rho <= 3 — smooth report (direct method);
/// maximal with rho >= 4 — sing_direct; otherwise sing_graph.
[[nodiscard]] SingReport sing_any(const LinkPattern& sigma);

[[nodiscard]] std::string to_text(const SingReport& report);
[[nodiscard]] std::string to_json(const SingReport& report);

} // namespace springer
