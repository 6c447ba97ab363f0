// SVG and ASCII chord-diagram rendering with fully deterministic output.

#include "springer/render.hpp"

#include <algorithm>
#include <vector>

namespace springer {

std::string render_svg(const LinkPattern& p) {
    const int n = p.n();
    const int spacing = 40;
    const int margin = 30;
    auto x_of = [&](int i) { return margin + (i - 1) * spacing; };
    int max_r = 0;
    for (const auto& a : p.arcs()) max_r = std::max(max_r, (a.hi - a.lo) * spacing / 2);
    const int baseline = margin + max_r;
    const int width = n > 0 ? 2 * margin + (n - 1) * spacing : 2 * margin;
    const int height = baseline + 30;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
    if (n > 0)
        s += "  <line x1=\"" + std::to_string(margin - 12) + "\" y1=\"" +
             std::to_string(baseline) + "\" x2=\"" + std::to_string(x_of(n) + 12) + "\" y2=\"" +
             std::to_string(baseline) + "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    for (const auto& a : p.arcs()) {
        const int x1 = x_of(a.lo);
        const int x2 = x_of(a.hi);
        const int r = (x2 - x1) / 2;
        s += "  <path d=\"M " + std::to_string(x1) + " " + std::to_string(baseline) + " A " +
             std::to_string(r) + " " + std::to_string(r) + " 0 0 1 " + std::to_string(x2) + " " +
             std::to_string(baseline) + "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
    }
    for (int i = 1; i <= n; ++i) {
        const bool fixed = p.is_fixed(i);
        s += "  <circle cx=\"" + std::to_string(x_of(i)) + "\" cy=\"" + std::to_string(baseline) +
             "\" r=\"4\" fill=\"" + (fixed ? std::string("#ffffff") : std::string("#222222")) +
             "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        s += "  <text x=\"" + std::to_string(x_of(i)) + "\" y=\"" + std::to_string(baseline + 20) +
             "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" +
             std::to_string(i) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string render_ascii(const LinkPattern& p) {
    const int n = p.n();
    if (n == 0) return "(empty pattern)\n";
    const int spacing = n >= 10 ? 3 : 2;
    auto col = [&](int i) { return (i - 1) * spacing; };
    const auto& arcs = p.arcs();

    // Height of an arc: one above every arc that starts strictly inside it
    // (covers both nesting and crossings).  Arcs are sorted by left
    // endpoint, so a reverse pass sees all inner starters first.
    std::vector<int> h(arcs.size(), 0);
    for (int idx = static_cast<int>(arcs.size()) - 1; idx >= 0; --idx) {
        int best = 0;
        for (std::size_t other = idx + 1; other < arcs.size(); ++other)
            if (arcs[other].lo < arcs[idx].hi) best = std::max(best, h[other]);
        h[idx] = best + 1;
    }
    const int max_h = arcs.empty() ? 0 : *std::max_element(h.begin(), h.end());

    const std::string last_label = std::to_string(n);
    const int width = col(n) + static_cast<int>(last_label.size());
    std::vector<std::string> grid(max_h + 1, std::string(width, ' '));

    for (std::size_t idx = 0; idx < arcs.size(); ++idx) {
        const int row = max_h - h[idx];
        const int c1 = col(arcs[idx].lo);
        const int c2 = col(arcs[idx].hi);
        grid[row][c1] = '/';
        grid[row][c2] = '\\';
        for (int c = c1 + 1; c < c2; ++c) grid[row][c] = '_';
    }
    for (std::size_t idx = 0; idx < arcs.size(); ++idx)
        for (int row = max_h - h[idx] + 1; row < max_h; ++row) {
            grid[row][col(arcs[idx].lo)] = '|';
            grid[row][col(arcs[idx].hi)] = '|';
        }
    for (int i = 1; i <= n; ++i) {
        const std::string label = std::to_string(i);
        for (std::size_t c = 0; c < label.size(); ++c) grid[max_h][col(i) + c] = label[c];
    }

    std::string out;
    for (auto& row : grid) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row + '\n';
    }
    return out;
}

} // namespace springer
