// Link patterns: involutions on {1..n} with k disjoint 2-cycles, drawn as
// chord diagrams with arcs above a baseline of n points.
//
// A link pattern indexes an irreducible component of the Springer fiber over
// a square-zero nilpotent (Jordan type (2^k, 1^(n-2k))).  This header carries
// the combinatorial core: the type itself, parsing/formatting, the crossing
// and bridge statistics, the rank-matrix partial order, surgery operations
// (projection, arc deletion/insertion, shifting, concatenation, completion,
// contraction), the tau*/rho invariants of maximal patterns, and exhaustive
// enumeration.

#pragma once

#include "springer/errors.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

/// One arc (i,j) of a chord diagram, 1-based, with lo < hi.
struct Arc {
    int lo = 0;
    int hi = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// An involution on {1..n} whose 2-cycles are the arcs.  Arcs are kept
/// sorted by left endpoint and have pairwise distinct endpoints; both are
/// enforced at construction.  Points not on any arc are fixed points.
class LinkPattern {
public:
    /// The empty pattern on zero points.
    LinkPattern() = default;

    /// Validates endpoints (range, distinctness, lo != hi) and sorts arcs.
    /// Throws ParseError on violation so that construction failures surface
    /// uniformly whether the arcs came from text or from code.
    LinkPattern(int n, std::vector<Arc> arcs);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int k() const { return static_cast<int>(arcs_.size()); }
    [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }

    /// Partner of point i under the involution, or 0 if i is fixed.
    [[nodiscard]] int partner(int i) const;
    [[nodiscard]] bool is_fixed(int i) const { return partner(i) == 0; }
    [[nodiscard]] bool has_arc(int i, int j) const;

    /// Fixed points in increasing order.
    [[nodiscard]] std::vector<int> fixed_points() const;

    friend bool operator==(const LinkPattern&, const LinkPattern&) = default;

    /// Lexicographic on (n, arc list); used for deterministic ordering of
    /// pattern collections.
    friend std::strong_ordering operator<=>(const LinkPattern& a, const LinkPattern& b);

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

/// Hash functor so pattern sets/maps can be unordered containers.
struct LinkPatternHash {
    [[nodiscard]] std::size_t operator()(const LinkPattern& p) const noexcept;
};

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

/// Grammar: an optional "n=INT" plus a sequence of "(i,j)" arcs, whitespace
/// permitted between tokens.  "n=" may precede or follow the arcs; when
/// absent, n defaults to the largest endpoint mentioned.  Throws ParseError
/// with a specific message for duplicate endpoints, out-of-range endpoints,
/// i = j, and malformed text.
[[nodiscard]] LinkPattern parse_link_pattern(std::string_view text);

/// Canonical form: "n=N (a,b)(c,d)..." with arcs sorted by left endpoint and
/// no whitespace inside or between arcs.  parse_link_pattern(format(p)) == p.
[[nodiscard]] std::string format_link_pattern(const LinkPattern& p);

std::ostream& operator<<(std::ostream& os, const LinkPattern& p);

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

/// Number of crossing pairs: arcs (i,j), (i',j') with i < i' < j < j'.
[[nodiscard]] int crossings(const LinkPattern& p);

/// Sum over arcs (i,j) of the number of fixed points inside (i,j).
[[nodiscard]] int bridges(const LinkPattern& p);

/// Per-arc and per-fixed-point refinements of the two statistics.  Indexing
/// is parallel to p.arcs() resp. p.fixed_points().  c_right[a] counts
/// crossings in which arc a is the right (larger-left-endpoint) partner,
/// c_left[a] those in which it is the left partner; b_arc[a] counts fixed
/// points under arc a; b_fixed[f] counts arcs over fixed point f.  Totals:
/// sum(c_right) = sum(c_left) = crossings, sum(b_arc) = sum(b_fixed) =
/// bridges.
struct ArcStatistics {
    std::vector<int> c_right;
    std::vector<int> c_left;
    std::vector<int> b_arc;
    std::vector<int> b_fixed;
    int crossings = 0;
    int bridges = 0;
};

[[nodiscard]] ArcStatistics arc_statistics(const LinkPattern& p);

// ---------------------------------------------------------------------------
// Rank matrix and the closure partial order
// ---------------------------------------------------------------------------

/// entry(i,j) = number of arcs contained in [i,j] for i < j, and 0 otherwise.
/// Stored densely (n*n bytes) so that entrywise comparison is a tight loop;
/// entries never exceed n/2 so uint8 suffices for any feasible n.
class RankMatrix {
public:
    explicit RankMatrix(const LinkPattern& p);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int entry(int i, int j) const {
        return (i < 1 || j > n_ || i >= j) ? 0 : data_[idx(i, j)];
    }

    /// Entrywise <=; both matrices must share n.
    [[nodiscard]] bool leq(const RankMatrix& other) const;

    friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

private:
    [[nodiscard]] std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int n_ = 0;
    std::vector<std::uint8_t> data_;
};

[[nodiscard]] RankMatrix rank_matrix(const LinkPattern& p);

/// Closure order: u <= s iff the rank matrices compare entrywise.  Defined
/// for patterns with equal n and k (throws ScopeError otherwise).
[[nodiscard]] bool leq(const LinkPattern& u, const LinkPattern& s);

// ---------------------------------------------------------------------------
// Surgery
// ---------------------------------------------------------------------------

/// Restriction of p to window [a,b], re-indexed to {1..b-a+1}.  Arcs with
/// exactly one endpoint inside the window are dropped (that endpoint becomes
/// a fixed point of the projection).  offset converts local back to ambient
/// coordinates: ambient = local + offset.
struct ProjectionResult {
    LinkPattern pattern;
    int offset = 0;
};

[[nodiscard]] ProjectionResult projection(const LinkPattern& p, int a, int b);

/// Removes the listed arcs (each must be present), keeping n.
[[nodiscard]] LinkPattern delete_arcs(const LinkPattern& p, std::span<const Arc> arcs);
[[nodiscard]] LinkPattern delete_arcs(const LinkPattern& p, std::initializer_list<Arc> arcs);

/// Adds arc (i,j); both endpoints must currently be fixed.
[[nodiscard]] LinkPattern add_arc(const LinkPattern& p, int i, int j);

/// Re-embeds p shifted right by a into an ambient line of new_n points
/// (new_n >= a + p.n()); the new points are fixed.
[[nodiscard]] LinkPattern shift(const LinkPattern& p, int a, int new_n);

/// Places q after p on a line of p.n() + q.n() points.  The empty pattern is
/// a two-sided identity, so any pattern factors into concatenations of
/// shifted blocks separated by empty gaps.
[[nodiscard]] LinkPattern concatenate(const LinkPattern& p, const LinkPattern& q);

enum class Side { left, right };

/// Adds one point on the chosen side and joins it by an arc to the nearest
/// fixed point on that side (the minimal fixed point for left, maximal for
/// right).  Requires at least one fixed point.  Completions on opposite
/// sides commute.
[[nodiscard]] LinkPattern maximal_completion(const LinkPattern& p, Side side);

/// Removes arc (i,j) of p and closes the gap: surviving endpoints d map to
/// d, d-1, or d-2 according to their position relative to i and j.  The
/// result lives on n-2 points.
[[nodiscard]] LinkPattern contract_arc(const LinkPattern& p, Arc arc);

// ---------------------------------------------------------------------------
// Maximality and the rho invariant
// ---------------------------------------------------------------------------

/// A pattern is maximal in its (n,k) family iff it has no bridges and no
/// crossings: fixed points lie outside every arc and arcs are pairwise
/// nested or disjoint.
[[nodiscard]] bool is_maximal(const LinkPattern& p);

/// Points i with (i,i+1) an arc of p, increasing.
[[nodiscard]] std::vector<int> tau_star(const LinkPattern& p);

/// Smoothness invariant of a maximal pattern (throws ScopeError otherwise):
/// |tau*| plus 2 if both 1 and n are fixed, plus 1 if exactly one of them is
/// fixed or (1,n) is an arc, plus 0 otherwise.  The component is smooth iff
/// rho <= 3.
[[nodiscard]] int rho(const LinkPattern& p);

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// All patterns with k arcs on n points (or only the maximal ones), sorted
/// lexicographically by arc list.
[[nodiscard]] std::vector<LinkPattern> enumerate_patterns(int n, int k,
                                                          bool maximal_only = false);

/// Number of patterns enumerate_patterns(n, k) returns:
/// C(n, 2k) * (2k-1)!! in general, C(n,k) - C(n,k-1) for maximal only.
[[nodiscard]] long long count_patterns(int n, int k, bool maximal_only = false);

/// Fully concentric pattern (1,2k)(2,2k-1)...(k,k+1) on 2k points.
[[nodiscard]] LinkPattern con(int k);

/// The unique minimum of the closure order on the (n,k) family:
/// (1,n-k+1)(2,n-k+2)...(k,n).
[[nodiscard]] LinkPattern omega_min(int n, int k);

} // namespace springer
