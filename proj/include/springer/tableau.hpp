// Standard Young tableaux of two-column shape (2^k, 1^(n-2k)) and the
// smoothness classification of the components they index.
//
// Maximal link patterns on n points with k arcs are in bijection with these
// tableaux; the rho invariant can be read off either side, and a component
// is smooth precisely when rho <= 3.

#pragma once

#include "springer/link_pattern.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace springer {

/// A standard filling of the two-column shape: col1 has n-k entries, col2
/// has k, columns strictly increase, rows strictly increase, and the entries
/// are exactly {1..n}.  Validated at construction (throws ParseError).
class TwoColumnTableau {
public:
    TwoColumnTableau() = default;
    TwoColumnTableau(std::vector<int> col1, std::vector<int> col2);

    [[nodiscard]] int n() const { return static_cast<int>(col1_.size() + col2_.size()); }
    [[nodiscard]] int k() const { return static_cast<int>(col2_.size()); }
    [[nodiscard]] const std::vector<int>& col1() const { return col1_; }
    [[nodiscard]] const std::vector<int>& col2() const { return col2_; }

    friend bool operator==(const TwoColumnTableau&, const TwoColumnTableau&) = default;

private:
    std::vector<int> col1_;
    std::vector<int> col2_;
};

/// One row per line, entries space-separated, two-entry rows first.
/// Blank lines are ignored.  Throws ParseError on malformed rows, shape
/// violations, or non-standard fillings.
[[nodiscard]] TwoColumnTableau parse_tableau(std::string_view text);

/// Inverse of parse_tableau: rows joined by newlines, trailing newline.
[[nodiscard]] std::string format_tableau(const TwoColumnTableau& t);

/// Entries i with i in column 1 and i+1 in column 2; equals tau_star of the
/// associated link pattern.
[[nodiscard]] std::vector<int> tau_star(const TwoColumnTableau& t);

/// Smoothness invariant read from the tableau: with column-2 entries
/// b_1 < ... < b_k and column-1 entries a_1 < ... < a_{n-k},
///   |tau*| + 2  if a_{n-k} = n and b_i > 2i for all i,
///   |tau*| + 1  if a_{n-k} = n and b_i = 2i for some i,
///               or b_k = n and b_i > 2i for all i <= k-1,
///   |tau*| + 0  if b_k = n and b_i = 2i for some i <= k-1.
/// Agrees with rho of the associated link pattern.
[[nodiscard]] int rho(const TwoColumnTableau& t);

/// True iff rho(t) <= 3.
[[nodiscard]] bool is_smooth(const TwoColumnTableau& t);

/// The maximal link pattern associated to t: processing column-2 entries in
/// increasing order, each b is joined to the largest not-yet-used column-1
/// entry below it.
[[nodiscard]] LinkPattern tableau_to_linkpattern(const TwoColumnTableau& t);

/// Inverse bijection; requires a maximal pattern (throws ScopeError
/// otherwise).  Column 2 holds the right endpoints of the arcs, column 1
/// the remaining values.
[[nodiscard]] TwoColumnTableau linkpattern_to_tableau(const LinkPattern& p);

/// Dimension of the full Springer fiber for nilpotent Jordan type lambda
/// (a partition, weakly decreasing positive parts): sum of C(m,2) over the
/// parts m of the conjugate partition.  For lambda = (2^k, 1^(n-2k)) this is
/// C(n-k,2) + C(k,2).
[[nodiscard]] long long dim_springer_fiber(const std::vector<int>& lambda);

} // namespace springer
