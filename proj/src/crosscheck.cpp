// Parallel agreement sweep between the rho classification, graph
// regularity, and the two singular-locus computations.

#include "springer/crosscheck.hpp"

#include "springer/link_pattern.hpp"
#include "springer/orbit_graph.hpp"
#include "springer/singular.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace springer {

namespace {

constexpr std::size_t kMaxDetails = 20;

std::vector<LinkPattern> direct_patterns(const LinkPattern& sigma) {
    std::vector<LinkPattern> out;
    for (const auto& c : sing_direct(sigma).components) out.push_back(c.pattern);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CrosscheckSummary run_crosscheck(int max_n, unsigned threads) {
    if (max_n > size_guard())
        throw SizeLimitError("crosscheck up to n=" + std::to_string(max_n) +
                             " exceeds the size guard (" + std::to_string(size_guard()) + ")");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    CrosscheckSummary summary;
    summary.max_n = max_n;
    std::mutex details_mutex;

    auto add_detail = [&](const std::string& text) {
        std::lock_guard<std::mutex> lock(details_mutex);
        if (summary.details.size() < kMaxDetails) summary.details.push_back(text);
    };

    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            // Warm the shared family cache before spawning workers.
            const auto& family = PatternUniverse::get(n, k);
            std::vector<const LinkPattern*> maximal;
            for (const auto& p : family.patterns)
                if (is_maximal(p)) maximal.push_back(&p);

            std::atomic<std::size_t> next{0};
            std::atomic<long long> smooth_count{0};
            std::atomic<long long> singular_count{0};
            std::atomic<long long> component_count{0};
            std::atomic<long long> regularity_bad{0};
            std::atomic<long long> component_bad{0};

            auto worker = [&] {
                for (std::size_t idx = next.fetch_add(1); idx < maximal.size();
                     idx = next.fetch_add(1)) {
                    const LinkPattern& sigma = *maximal[idx];
                    const bool smooth_rho = rho(sigma) <= 3;
                    const bool smooth_graph = smooth_by_graph(sigma);
                    if (smooth_rho != smooth_graph) {
                        regularity_bad.fetch_add(1);
                        add_detail("regularity mismatch at " + format_link_pattern(sigma) +
                                   ": rho says " + (smooth_rho ? "smooth" : "singular") +
                                   ", graph says " + (smooth_graph ? "smooth" : "singular"));
                    }
                    if (smooth_rho) {
                        smooth_count.fetch_add(1);
                        continue;
                    }
                    singular_count.fetch_add(1);
                    try {
                        const auto direct = direct_patterns(sigma);
                        auto oracle = sing_components_oracle(sigma);
                        std::sort(oracle.begin(), oracle.end());
                        if (direct != oracle) {
                            component_bad.fetch_add(1);
                            std::string detail = "component mismatch at " +
                                                 format_link_pattern(sigma) + ": direct={";
                            for (const auto& p : direct) detail += format_link_pattern(p) + "; ";
                            detail += "} oracle={";
                            for (const auto& p : oracle) detail += format_link_pattern(p) + "; ";
                            detail += "}";
                            add_detail(detail);
                        } else {
                            component_count.fetch_add(static_cast<long long>(direct.size()));
                        }
                    } catch (const std::exception& e) {
                        component_bad.fetch_add(1);
                        add_detail("direct algorithm failed at " + format_link_pattern(sigma) +
                                   ": " + e.what());
                    }
                }
            };

            std::vector<std::thread> pool;
            const unsigned spawn =
                std::min<unsigned>(threads, std::max<std::size_t>(1, maximal.size()));
            pool.reserve(spawn);
            for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();

            CrosscheckRow row;
            row.n = n;
            row.k = k;
            row.maximal = static_cast<long long>(maximal.size());
            row.smooth = smooth_count.load();
            row.singular = singular_count.load();
            row.components = component_count.load();
            summary.rows.push_back(row);
            summary.regularity_mismatches += regularity_bad.load();
            summary.component_mismatches += component_bad.load();
        }
    return summary;
}

std::string to_text(const CrosscheckSummary& summary) {
    std::string s = "crosscheck up to n=" + std::to_string(summary.max_n) + "\n";
    s += "  n  k    maximal     smooth   singular components\n";
    auto pad = [](long long v, int width) {
        std::string t = std::to_string(v);
        while (static_cast<int>(t.size()) < width) t.insert(t.begin(), ' ');
        return t;
    };
    for (const auto& row : summary.rows) {
        s += pad(row.n, 3) + pad(row.k, 3) + pad(row.maximal, 11) + pad(row.smooth, 11) +
             pad(row.singular, 11) + pad(row.components, 11) + "\n";
    }
    s += "regularity mismatches: " + std::to_string(summary.regularity_mismatches) + "\n";
    s += "component mismatches:  " + std::to_string(summary.component_mismatches) + "\n";
    for (const auto& d : summary.details) s += "  " + d + "\n";
    s += summary.ok() ? "all methods agree\n" : "METHODS DISAGREE\n";
    return s;
}

} // namespace springer
