// Implementation of the link-pattern core: validation, text form, crossing
// and bridge statistics, rank matrices, surgery, and enumeration.

#include "springer/link_pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

namespace springer {

namespace {

[[noreturn]] void throw_parse(const std::string& msg) {
    throw ParseError("link pattern: " + msg);
}

} // namespace

// ---------------------------------------------------------------------------
// LinkPattern
// ---------------------------------------------------------------------------

LinkPattern::LinkPattern(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw_parse("n must be nonnegative, got " + std::to_string(n_));
    for (auto& a : arcs_) {
        if (a.lo == a.hi) throw_parse("degenerate arc (" + std::to_string(a.lo) + "," + std::to_string(a.hi) + ")");
        if (a.lo > a.hi) std::swap(a.lo, a.hi);
        if (a.lo < 1 || a.hi > n_)
            throw_parse("endpoint " + std::to_string(a.lo < 1 ? a.lo : a.hi) +
                        " out of range for n=" + std::to_string(n_));
    }
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<int> ends;
    ends.reserve(arcs_.size() * 2);
    for (const auto& a : arcs_) {
        ends.push_back(a.lo);
        ends.push_back(a.hi);
    }
    std::sort(ends.begin(), ends.end());
    if (auto it = std::adjacent_find(ends.begin(), ends.end()); it != ends.end())
        throw_parse("duplicate endpoint " + std::to_string(*it));
}

int LinkPattern::partner(int i) const {
    for (const auto& a : arcs_) {
        if (a.lo == i) return a.hi;
        if (a.hi == i) return a.lo;
    }
    return 0;
}

bool LinkPattern::has_arc(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{i, j});
}

std::vector<int> LinkPattern::fixed_points() const {
    std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
    for (const auto& a : arcs_) used[a.lo] = used[a.hi] = true;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_) - 2 * arcs_.size());
    for (int i = 1; i <= n_; ++i)
        if (!used[i]) out.push_back(i);
    return out;
}

std::strong_ordering operator<=>(const LinkPattern& a, const LinkPattern& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.arcs_ <=> b.arcs_;
}

std::size_t LinkPatternHash::operator()(const LinkPattern& p) const noexcept {
    // FNV-1a over the endpoint sequence; endpoints are small so bytes suffice.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    mix(static_cast<unsigned char>(p.n()));
    for (const auto& a : p.arcs()) {
        mix(static_cast<unsigned char>(a.lo));
        mix(static_cast<unsigned char>(a.hi));
    }
    return h;
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

LinkPattern parse_link_pattern(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&](const char* what) -> int {
        skip_ws();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{})
            throw_parse(std::string("expected ") + what + " near position " + std::to_string(pos));
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };

    bool n_seen = false;
    int n = 0;
    std::vector<Arc> arcs;

    skip_ws();
    while (pos < text.size()) {
        char c = text[pos];
        if (c == 'n') {
            if (n_seen) throw_parse("n= given twice");
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != '=')
                throw_parse("expected '=' after 'n' at position " + std::to_string(pos));
            ++pos;
            skip_ws();
            n = parse_int("integer after n=");
            n_seen = true;
        } else if (c == '(') {
            ++pos;
            skip_ws();
            int i = parse_int("arc endpoint");
            skip_ws();
            if (pos >= text.size() || text[pos] != ',')
                throw_parse("expected ',' in arc at position " + std::to_string(pos));
            ++pos;
            skip_ws();
            int j = parse_int("arc endpoint");
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw_parse("expected ')' in arc at position " + std::to_string(pos));
            ++pos;
            if (i == j)
                throw_parse("degenerate arc (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (i < 1 || j < 1)
                throw_parse("endpoint " + std::to_string(std::min(i, j)) + " out of range (must be >= 1)");
            arcs.push_back({std::min(i, j), std::max(i, j)});
        } else {
            throw_parse(std::string("unexpected character '") + c + "' at position " + std::to_string(pos));
        }
        skip_ws();
    }

    int max_end = 0;
    for (const auto& a : arcs) max_end = std::max(max_end, a.hi);
    if (!n_seen) n = max_end;
    if (max_end > n)
        throw_parse("endpoint " + std::to_string(max_end) + " out of range for n=" + std::to_string(n));
    return LinkPattern(n, std::move(arcs));
}

std::string format_link_pattern(const LinkPattern& p) {
    std::string out = "n=" + std::to_string(p.n());
    if (!p.arcs().empty()) {
        out += ' ';
        for (const auto& a : p.arcs())
            out += "(" + std::to_string(a.lo) + "," + std::to_string(a.hi) + ")";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LinkPattern& p) {
    return os << format_link_pattern(p);
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

int crossings(const LinkPattern& p) {
    const auto& arcs = p.arcs();
    int c = 0;
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y)
            if (arcs[x].lo < arcs[y].lo && arcs[y].lo < arcs[x].hi && arcs[x].hi < arcs[y].hi) ++c;
    return c;
}

int bridges(const LinkPattern& p) {
    const auto fixed = p.fixed_points();
    int b = 0;
    for (const auto& a : p.arcs())
        for (int f : fixed)
            if (a.lo < f && f < a.hi) ++b;
    return b;
}

ArcStatistics arc_statistics(const LinkPattern& p) {
    const auto& arcs = p.arcs();
    const auto fixed = p.fixed_points();
    ArcStatistics st;
    st.c_right.assign(arcs.size(), 0);
    st.c_left.assign(arcs.size(), 0);
    st.b_arc.assign(arcs.size(), 0);
    st.b_fixed.assign(fixed.size(), 0);
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y)
            if (arcs[x].lo < arcs[y].lo && arcs[y].lo < arcs[x].hi && arcs[x].hi < arcs[y].hi) {
                ++st.c_left[x];
                ++st.c_right[y];
                ++st.crossings;
            }
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t f = 0; f < fixed.size(); ++f)
            if (arcs[x].lo < fixed[f] && fixed[f] < arcs[x].hi) {
                ++st.b_arc[x];
                ++st.b_fixed[f];
                ++st.bridges;
            }
    return st;
}

// ---------------------------------------------------------------------------
// Rank matrix and order
// ---------------------------------------------------------------------------

RankMatrix::RankMatrix(const LinkPattern& p) : n_(p.n()) {
    const std::size_t nn = static_cast<std::size_t>(n_) * n_;
    data_.assign(nn, 0);
    if (n_ == 0) return;
    // entry(i,j) = #{arcs with i <= lo < hi <= j}.  Seed a point mass at
    // (lo,hi) per arc, then accumulate: down columns (decreasing i) and
    // along rows (increasing j).
    std::vector<int> acc(nn, 0);
    for (const auto& a : p.arcs()) acc[static_cast<std::size_t>(a.lo - 1) * n_ + (a.hi - 1)] += 1;
    for (int i = n_ - 1; i >= 1; --i)
        for (int j = 1; j <= n_; ++j)
            acc[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] +=
                acc[static_cast<std::size_t>(i) * n_ + (j - 1)];
    for (int i = 1; i <= n_; ++i)
        for (int j = 2; j <= n_; ++j)
            acc[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] +=
                acc[static_cast<std::size_t>(i - 1) * n_ + (j - 2)];
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (i < j)
                data_[idx(i, j)] = static_cast<std::uint8_t>(acc[idx(i, j)]);
}

bool RankMatrix::leq(const RankMatrix& other) const {
    if (n_ != other.n_) throw ScopeError("rank matrices compare only at equal n");
    for (std::size_t t = 0; t < data_.size(); ++t)
        if (data_[t] > other.data_[t]) return false;
    return true;
}

RankMatrix rank_matrix(const LinkPattern& p) { return RankMatrix(p); }

bool leq(const LinkPattern& u, const LinkPattern& s) {
    if (u.n() != s.n() || u.k() != s.k())
        throw ScopeError("closure order defined within one (n,k) family; got n=" +
                         std::to_string(u.n()) + ",k=" + std::to_string(u.k()) + " vs n=" +
                         std::to_string(s.n()) + ",k=" + std::to_string(s.k()));
    return RankMatrix(u).leq(RankMatrix(s));
}

// ---------------------------------------------------------------------------
// Surgery
// ---------------------------------------------------------------------------

ProjectionResult projection(const LinkPattern& p, int a, int b) {
    if (a < 1 || b > p.n() || a > b)
        throw ScopeError("projection window [" + std::to_string(a) + "," + std::to_string(b) +
                         "] invalid for n=" + std::to_string(p.n()));
    std::vector<Arc> arcs;
    for (const auto& arc : p.arcs())
        if (a <= arc.lo && arc.hi <= b) arcs.push_back({arc.lo - a + 1, arc.hi - a + 1});
    return {LinkPattern(b - a + 1, std::move(arcs)), a - 1};
}

LinkPattern delete_arcs(const LinkPattern& p, std::span<const Arc> arcs) {
    std::vector<Arc> rest = p.arcs();
    for (Arc a : arcs) {
        if (a.lo > a.hi) std::swap(a.lo, a.hi);
        auto it = std::find(rest.begin(), rest.end(), a);
        if (it == rest.end())
            throw ScopeError("delete_arcs: (" + std::to_string(a.lo) + "," + std::to_string(a.hi) +
                             ") is not an arc of " + format_link_pattern(p));
        rest.erase(it);
    }
    return LinkPattern(p.n(), std::move(rest));
}

LinkPattern delete_arcs(const LinkPattern& p, std::initializer_list<Arc> arcs) {
    return delete_arcs(p, std::span<const Arc>(arcs.begin(), arcs.size()));
}

LinkPattern add_arc(const LinkPattern& p, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > p.n() || i == j)
        throw ScopeError("add_arc: (" + std::to_string(i) + "," + std::to_string(j) +
                         ") invalid for n=" + std::to_string(p.n()));
    if (!p.is_fixed(i) || !p.is_fixed(j))
        throw ScopeError("add_arc: endpoint of (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not fixed in " + format_link_pattern(p));
    std::vector<Arc> arcs = p.arcs();
    arcs.push_back({i, j});
    return LinkPattern(p.n(), std::move(arcs));
}

LinkPattern shift(const LinkPattern& p, int a, int new_n) {
    if (a < 0 || new_n < a + p.n())
        throw ScopeError("shift: need 0 <= a and a + n <= new_n");
    std::vector<Arc> arcs;
    arcs.reserve(p.arcs().size());
    for (const auto& arc : p.arcs()) arcs.push_back({arc.lo + a, arc.hi + a});
    return LinkPattern(new_n, std::move(arcs));
}

LinkPattern concatenate(const LinkPattern& p, const LinkPattern& q) {
    std::vector<Arc> arcs = p.arcs();
    for (const auto& arc : q.arcs()) arcs.push_back({arc.lo + p.n(), arc.hi + p.n()});
    return LinkPattern(p.n() + q.n(), std::move(arcs));
}

LinkPattern maximal_completion(const LinkPattern& p, Side side) {
    const auto fixed = p.fixed_points();
    if (fixed.empty())
        throw ScopeError("maximal_completion: " + format_link_pattern(p) + " has no fixed point");
    if (side == Side::left) {
        LinkPattern shifted = shift(p, 1, p.n() + 1);
        return add_arc(shifted, 1, fixed.front() + 1);
    }
    LinkPattern widened = shift(p, 0, p.n() + 1);
    return add_arc(widened, fixed.back(), p.n() + 1);
}

LinkPattern contract_arc(const LinkPattern& p, Arc arc) {
    if (arc.lo > arc.hi) std::swap(arc.lo, arc.hi);
    if (!p.has_arc(arc.lo, arc.hi))
        throw ScopeError("contract_arc: (" + std::to_string(arc.lo) + "," + std::to_string(arc.hi) +
                         ") is not an arc of " + format_link_pattern(p));
    auto remap = [&arc](int d) {
        if (d < arc.lo) return d;
        if (d < arc.hi) return d - 1;
        return d - 2;
    };
    std::vector<Arc> arcs;
    for (const auto& a : p.arcs()) {
        if (a == arc) continue;
        arcs.push_back({remap(a.lo), remap(a.hi)});
    }
    return LinkPattern(p.n() - 2, std::move(arcs));
}

// ---------------------------------------------------------------------------
// Maximality and rho
// ---------------------------------------------------------------------------

bool is_maximal(const LinkPattern& p) { return bridges(p) == 0 && crossings(p) == 0; }

std::vector<int> tau_star(const LinkPattern& p) {
    std::vector<int> out;
    for (const auto& a : p.arcs())
        if (a.hi == a.lo + 1) out.push_back(a.lo);
    std::sort(out.begin(), out.end());
    return out;
}

int rho(const LinkPattern& p) {
    if (!is_maximal(p))
        throw ScopeError("rho is defined for maximal patterns; " + format_link_pattern(p) +
                         " has bridges or crossings");
    const int base = static_cast<int>(tau_star(p).size());
    if (p.n() == 0) return 2;
    const bool first_fixed = p.is_fixed(1);
    const bool last_fixed = p.is_fixed(p.n());
    if (first_fixed && last_fixed) return base + 2;
    if (first_fixed || last_fixed || p.has_arc(1, p.n())) return base + 1;
    return base;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

namespace {

void enumerate_rec(int n, int k, std::vector<bool>& used, int built, std::vector<Arc>& acc,
                   bool maximal_only, std::vector<LinkPattern>& out) {
    int p = 0;
    int unused = 0;
    for (int i = 1; i <= n; ++i)
        if (!used[i]) {
            if (p == 0) p = i;
            ++unused;
        }
    if (built == k) {
        LinkPattern cand(n, acc);
        if (!maximal_only || is_maximal(cand)) out.push_back(std::move(cand));
        return;
    }
    if (p == 0) return;
    // Decide the smallest unassigned point: keep it fixed, or start an arc.
    if (unused - 1 >= 2 * (k - built)) {
        used[p] = true;
        enumerate_rec(n, k, used, built, acc, maximal_only, out);
        used[p] = false;
    }
    for (int q = p + 1; q <= n; ++q) {
        if (used[q]) continue;
        used[p] = used[q] = true;
        acc.push_back({p, q});
        enumerate_rec(n, k, used, built + 1, acc, maximal_only, out);
        acc.pop_back();
        used[p] = used[q] = false;
    }
}

} // namespace

std::vector<LinkPattern> enumerate_patterns(int n, int k, bool maximal_only) {
    if (n < 0 || k < 0 || 2 * k > n)
        throw ScopeError("enumerate_patterns: need 0 <= 2k <= n, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
    std::vector<LinkPattern> out;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<Arc> acc;
    enumerate_rec(n, k, used, 0, acc, maximal_only, out);
    std::sort(out.begin(), out.end(),
              [](const LinkPattern& a, const LinkPattern& b) { return a.arcs() < b.arcs(); });
    return out;
}

long long count_patterns(int n, int k, bool maximal_only) {
    if (n < 0 || k < 0 || 2 * k > n)
        throw ScopeError("count_patterns: need 0 <= 2k <= n");
    auto binom = [](long long m, long long r) {
        if (r < 0 || r > m) return 0ll;
        long long v = 1;
        for (long long t = 1; t <= r; ++t) v = v * (m - r + t) / t;
        return v;
    };
    if (maximal_only) return binom(n, k) - binom(n, k - 1);
    long long v = binom(n, 2 * k);
    for (long long t = 2 * k - 1; t >= 1; t -= 2) v *= t;
    return v;
}

LinkPattern con(int k) {
    std::vector<Arc> arcs;
    for (int i = 1; i <= k; ++i) arcs.push_back({i, 2 * k + 1 - i});
    return LinkPattern(2 * k, std::move(arcs));
}

LinkPattern omega_min(int n, int k) {
    if (n < 0 || k < 0 || 2 * k > n)
        throw ScopeError("omega_min: need 0 <= 2k <= n");
    std::vector<Arc> arcs;
    for (int i = 1; i <= k; ++i) arcs.push_back({i, n - k + i});
    return LinkPattern(n, std::move(arcs));
}

} // namespace springer
