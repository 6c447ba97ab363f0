// The orbit graph of a component and the graph-regularity smoothness test.
//
// For a link pattern sigma, the vertices are all patterns below sigma in the
// closure order; edges join patterns related by an elementary move.  The
// component indexed by sigma is smooth iff the graph is p-regular, where
// p = dim F_sigma - d0; the vertices of degree exceeding p form the singular
// locus, and its maximal elements are the components of that locus.  This
// module is the oracle against which the direct singular-locus algorithm is
// verified.

#pragma once

#include "springer/link_pattern.hpp"

#include <string>
#include <utility>
#include <vector>

namespace springer {

// ---------------------------------------------------------------------------
// Dimension theory
// ---------------------------------------------------------------------------

/// dim F_sigma = C(n-k,2) + C(k,2) - bridges - crossings.
[[nodiscard]] long long fiber_dim(const LinkPattern& p);

/// Dimension of the orbit of the base point: C(n-2k,2) + C(k,2).
[[nodiscard]] long long d0(int n, int k);

/// p_sigma = dim F_sigma - d0 = C(n-k,2) - C(n-2k,2) - bridges - crossings.
[[nodiscard]] long long p_value(const LinkPattern& p);

/// codim of F_u inside F_sigma for u <= sigma: difference of bridge+crossing
/// counts.  Throws ScopeError if u is not below sigma.
[[nodiscard]] int codim(const LinkPattern& sigma, const LinkPattern& u);

// ---------------------------------------------------------------------------
// Elementary moves
// ---------------------------------------------------------------------------

/// Patterns one move above u (strictly greater in the order): an arc and a
/// fixed point under it split two ways, a crossing resolves two ways.
/// Exactly 2*(bridges+crossings) results, pairwise distinct; sorted.  A
/// single move can raise the dimension by more than one.
[[nodiscard]] std::vector<LinkPattern> predecessors(const LinkPattern& u);

/// Patterns one move below u (strictly smaller): inverse moves — an arc
/// extends over an outside fixed point, or two nested/disjoint arcs
/// recombine into a crossing.  Always exactly dim F_u - d0 of them; sorted.
[[nodiscard]] std::vector<LinkPattern> successors(const LinkPattern& u);

/// The patterns u covers in the closure order: the successors whose
/// bridge+crossing count exceeds u's by exactly one.  The order is graded,
/// so these are also the elements below u of codimension one.
[[nodiscard]] std::vector<LinkPattern> covers(const LinkPattern& sigma);

// ---------------------------------------------------------------------------
// The graph
// ---------------------------------------------------------------------------

struct OrbitGraph {
    LinkPattern sigma;
    /// All patterns <= sigma, sorted lexicographically by arc list.
    std::vector<LinkPattern> vertices;
    /// Degree of each vertex inside the graph.
    std::vector<int> degree;
    /// codim(sigma, v) per vertex.
    std::vector<int> codim_of;
    /// Move edges as vertex-index pairs (i, j), i < j, sorted.
    std::vector<std::pair<int, int>> edges;
    long long p_sigma = 0;
    long long d_zero = 0;

    /// Index of a pattern among the vertices, or -1.
    [[nodiscard]] int index_of(const LinkPattern& v) const;
};

/// Maximum n for which pattern universes will be enumerated; default 14,
/// overridable via the SPRINGER_SING_MAX_N environment variable.
[[nodiscard]] int size_guard();

/// Builds the full graph below sigma.  Throws SizeLimitError beyond the
/// size guard.
[[nodiscard]] OrbitGraph build_graph(const LinkPattern& sigma);

/// True iff every vertex below sigma has degree exactly p_sigma.  Uses a
/// lean scan (no edge materialisation) with early exit.
[[nodiscard]] bool smooth_by_graph(const LinkPattern& sigma);

/// Vertices of degree exceeding p_sigma (the singular locus), sorted.
[[nodiscard]] std::vector<LinkPattern> singular_set(const LinkPattern& sigma);

/// Maximal elements of the singular set under the closure order: the
/// components of the singular locus.  Sorted by (codim, arc list).
[[nodiscard]] std::vector<LinkPattern> sing_components_oracle(const LinkPattern& sigma);

/// Tangent-space dimension of F_sigma at the base point of u's orbit:
/// degree of u in the graph plus d0.  Requires u <= sigma.
[[nodiscard]] long long tangent_dim(const LinkPattern& sigma, const LinkPattern& u);

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

/// Graphviz form: vertices grouped rank-wise by codim, labels carry the
/// pattern and its degree, singular vertices filled.  max_codim >= 0 keeps
/// only vertices of codim <= max_codim.
[[nodiscard]] std::string to_dot(const OrbitGraph& g, int max_codim = -1);

/// Plain-text adjacency dump (one vertex per line with degree, codim and
/// neighbour indices).
[[nodiscard]] std::string to_text(const OrbitGraph& g);

/// JSON object with sigma, n, k, p_sigma, vertices, degrees, singular_set
/// and components.
[[nodiscard]] std::string graph_report_json(const OrbitGraph& g);

// ---------------------------------------------------------------------------
// Shared enumeration cache
// ---------------------------------------------------------------------------

/// Per-(n,k) cache of the full pattern family with precomputed rank
/// matrices, shared by sweeps; thread-safe, read-only after construction.
class PatternUniverse {
public:
    struct Family {
        std::vector<LinkPattern> patterns;
        std::vector<RankMatrix> ranks;
    };

    static const Family& get(int n, int k);
};

/// Entrywise test that u's rank matrix is bounded by an already-computed
/// rank matrix, without allocating; the workhorse of the lean degree scan.
[[nodiscard]] bool leq_under(const LinkPattern& u, const RankMatrix& bound);

} // namespace springer
