// Two-column tableau validation, text form, the rho reading, and the
// bijection with maximal link patterns.

#include "springer/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace springer {

namespace {

[[noreturn]] void throw_parse(const std::string& msg) {
    throw ParseError("tableau: " + msg);
}

} // namespace

TwoColumnTableau::TwoColumnTableau(std::vector<int> col1, std::vector<int> col2)
    : col1_(std::move(col1)), col2_(std::move(col2)) {
    if (col2_.size() > col1_.size())
        throw_parse("column 2 longer than column 1 (shape must be (2^k,1^(n-2k)))");
    for (const auto* col : {&col1_, &col2_})
        for (std::size_t i = 1; i < col->size(); ++i)
            if ((*col)[i - 1] >= (*col)[i]) throw_parse("columns must strictly increase");
    for (std::size_t i = 0; i < col2_.size(); ++i)
        if (col1_[i] >= col2_[i]) throw_parse("rows must strictly increase");
    std::vector<int> all = col1_;
    all.insert(all.end(), col2_.begin(), col2_.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1]) throw_parse("duplicate entry " + std::to_string(all[i]));
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1)
            throw_parse("entries must be exactly 1.." + std::to_string(all.size()));
}

TwoColumnTableau parse_tableau(std::string_view text) {
    std::vector<int> col1, col2;
    bool single_seen = false;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream row(line);
        std::vector<int> entries;
        int v = 0;
        while (row >> v) entries.push_back(v);
        std::string trailing;
        if (row.clear(), row >> trailing)
            throw_parse("non-numeric token '" + trailing + "' in row \"" + line + "\"");
        if (entries.empty()) continue;
        if (entries.size() > 2) throw_parse("row \"" + line + "\" has more than two entries");
        if (entries.size() == 2) {
            if (single_seen) throw_parse("two-entry rows must precede single-entry rows");
            col1.push_back(entries[0]);
            col2.push_back(entries[1]);
        } else {
            single_seen = true;
            col1.push_back(entries[0]);
        }
    }
    return TwoColumnTableau(std::move(col1), std::move(col2));
}

std::string format_tableau(const TwoColumnTableau& t) {
    std::string out;
    for (std::size_t i = 0; i < t.col1().size(); ++i) {
        out += std::to_string(t.col1()[i]);
        if (i < t.col2().size()) out += ' ' + std::to_string(t.col2()[i]);
        out += '\n';
    }
    return out;
}

std::vector<int> tau_star(const TwoColumnTableau& t) {
    std::vector<int> out;
    for (int a : t.col1())
        if (std::binary_search(t.col2().begin(), t.col2().end(), a + 1)) out.push_back(a);
    return out;
}

int rho(const TwoColumnTableau& t) {
    const int n = t.n();
    const int base = static_cast<int>(tau_star(t).size());
    if (n == 0) return 2;
    const auto& b = t.col2();
    const int k = t.k();
    auto tight_below = [&b](int upto) {
        for (int i = 1; i <= upto; ++i)
            if (b[i - 1] == 2 * i) return true;
        return false;
    };
    const bool col1_ends_n = !t.col1().empty() && t.col1().back() == n;
    if (col1_ends_n) return base + (tight_below(k) ? 1 : 2);
    // Otherwise n is the last entry of column 2.
    return base + (tight_below(k - 1) ? 0 : 1);
}

bool is_smooth(const TwoColumnTableau& t) { return rho(t) <= 3; }

LinkPattern tableau_to_linkpattern(const TwoColumnTableau& t) {
    std::vector<int> available = t.col1();
    std::vector<Arc> arcs;
    for (int b : t.col2()) {
        // Largest unused column-1 entry below b; standardness guarantees one.
        auto it = std::lower_bound(available.begin(), available.end(), b);
        --it;
        arcs.push_back({*it, b});
        available.erase(it);
    }
    return LinkPattern(t.n(), std::move(arcs));
}

TwoColumnTableau linkpattern_to_tableau(const LinkPattern& p) {
    if (!is_maximal(p))
        throw ScopeError("linkpattern_to_tableau: " + format_link_pattern(p) + " is not maximal");
    std::vector<int> col2;
    col2.reserve(p.arcs().size());
    for (const auto& a : p.arcs()) col2.push_back(a.hi);
    std::sort(col2.begin(), col2.end());
    std::vector<int> col1;
    col1.reserve(p.n() - col2.size());
    for (int i = 1; i <= p.n(); ++i)
        if (!std::binary_search(col2.begin(), col2.end(), i)) col1.push_back(i);
    return TwoColumnTableau(std::move(col1), std::move(col2));
}

long long dim_springer_fiber(const std::vector<int>& lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] <= 0) throw ScopeError("dim_springer_fiber: parts must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw ScopeError("dim_springer_fiber: parts must be weakly decreasing");
    }
    long long dim = 0;
    // Conjugate part j is the number of parts >= j.
    const int width = lambda.empty() ? 0 : lambda.front();
    for (int j = 1; j <= width; ++j) {
        long long m = static_cast<long long>(
            std::count_if(lambda.begin(), lambda.end(), [j](int part) { return part >= j; }));
        dim += m * (m - 1) / 2;
    }
    return dim;
}

} // namespace springer
