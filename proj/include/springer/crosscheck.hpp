// Exhaustive agreement sweep: for every maximal pattern up to a given n,
// the rho-based smoothness classification is compared against graph
// regularity, and for rho >= 4 the direct singular-locus components are
// compared against the orbit-graph oracle.

#pragma once

#include <string>
#include <vector>

namespace springer {

struct CrosscheckRow {
    int n = 0;
    int k = 0;
    long long maximal = 0;
    long long smooth = 0;
    long long singular = 0;
    /// Total direct components verified against the oracle.
    long long components = 0;
};

struct CrosscheckSummary {
    int max_n = 0;
    std::vector<CrosscheckRow> rows;
    /// rho <= 3 vs p-regularity disagreements.
    long long regularity_mismatches = 0;
    /// sing_direct vs oracle component-set disagreements (including any
    /// internal assertion failure of the direct algorithm).
    long long component_mismatches = 0;
    /// Capped human-readable descriptions of the first few mismatches.
    std::vector<std::string> details;

    [[nodiscard]] bool ok() const {
        return regularity_mismatches == 0 && component_mismatches == 0;
    }
};

/// Runs the sweep over all (n,k) with n <= max_n, parallelised over the
/// patterns of each family with a worker pool (threads = 0 picks the
/// hardware concurrency).  Throws SizeLimitError when max_n exceeds the
/// size guard.
[[nodiscard]] CrosscheckSummary run_crosscheck(int max_n, unsigned threads = 0);

[[nodiscard]] std::string to_text(const CrosscheckSummary& summary);

} // namespace springer
