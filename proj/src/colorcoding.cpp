#include "colorcoding.hpp"
#include <array>

#include <cmath>
#include <random>
#include <unordered_set>

namespace {

// family over the ground interval [lo, lo+n) shattering every subset of size
// <= k; masks are absolute (bit lo+i for the i-th interval element)
std::vector<uint64_t> univ_rec(int lo, int n, int k) {
    k = std::min(k, n);
    if (k <= 0) return {0};
    if (n <= k || n <= 2) {
        std::vector<uint64_t> all;
        for (uint64_t m = 0; m < (uint64_t(1) << n); m++) all.push_back(m << lo);
        return all;
    }
    int nl = n / 2, nr = n - nl;
    std::unordered_set<uint64_t> out;
    for (int i = 0; i <= k; i++) {
        auto left = univ_rec(lo, nl, std::min(i, nl));
        auto right = univ_rec(lo + nl, nr, std::min(k - i, nr));
        for (uint64_t a : left)
            for (uint64_t b : right) out.insert(a | b);
    }
    return {out.begin(), out.end()};
}

}  // namespace

universal_family build_universal(int n, int k) {
    if (n < 1 || k < 1 || k > n) fail("PreconditionViolated", "need 1 <= k <= n");
    if (n > 62) fail("UnsupportedScale", "universal families limited to n <= 62");
    universal_family f;
    f.n = n;
    f.k = k;
    f.sets = univ_rec(0, n, k);
    std::sort(f.sets.begin(), f.sets.end());
    return f;
}

bool validate_universal(const universal_family &f) {
    if (f.n > 24) fail("UnsupportedScale", "validator limited to n <= 24");
    // iterate all k-subsets S of the ground set
    std::vector<int> idx(f.k);
    for (int i = 0; i < f.k; i++) idx[i] = i;
    for (;;) {
        uint64_t smask = 0;
        for (int i : idx) smask |= uint64_t(1) << i;
        std::unordered_set<uint64_t> traces;
        for (uint64_t a : f.sets) traces.insert(a & smask);
        if ((int)traces.size() != 1 << f.k) return false;
        // next combination
        int i = f.k - 1;
        while (i >= 0 && idx[i] == f.n - f.k + i) i--;
        if (i < 0) break;
        idx[i]++;
        for (int j = i + 1; j < f.k; j++) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

separation_family3 build_separation3(int n, int k) {
    if (n < 1 || k < 1) fail("PreconditionViolated", "need n >= 1, k >= 1");
    separation_family3 f;
    f.n = n;
    f.k = k;
    std::unordered_set<std::string> seen;
    auto push = [&](const std::vector<uint8_t> &fn) {
        std::string key(fn.begin(), fn.end());
        if (seen.insert(key).second) f.functions.push_back(fn);
    };
    if (n <= 3 * k) {
        std::vector<uint8_t> fn(n, 1);
        for (;;) {
            push(fn);
            int i = 0;
            while (i < n && fn[i] == 3) fn[i++] = 1;
            if (i == n) break;
            fn[i]++;
        }
        return f;
    }
    universal_family u1 = build_universal(n, 3 * k);
    // per-cardinality inner families, built on demand
    std::vector<universal_family> inner(n + 1);
    for (uint64_t u : u1.sets) {
        std::vector<int> members;
        for (int i = 0; i < n; i++)
            if (u >> i & 1) members.push_back(i);
        int p = (int)members.size();
        if (p == 0) {
            push(std::vector<uint8_t>(n, 3));
            continue;
        }
        if (inner[p].n == 0) inner[p] = build_universal(p, std::min(2 * k, p));
        for (uint64_t w : inner[p].sets) {
            std::vector<uint8_t> fn(n, 3);
            for (int j = 0; j < p; j++) fn[members[j]] = (w >> j & 1) ? 1 : 2;
            push(fn);
        }
    }
    return f;
}

bool validate_separation3(const separation_family3 &f) {
    if (f.n > 20) fail("UnsupportedScale", "validator limited to n <= 20");
    int n = f.n, k = f.k;
    // For every ground subset S admitting a partition into three nonempty
    // parts of size <= k, a member must induce every such partition as its
    // value classes on S (each part constant, values pairwise distinct).
    // Since parts cover S, the parts must equal the classes exactly, so we
    // collect each member's class partition per S and compare.
    std::vector<std::array<uint64_t, 3>> classes;
    classes.reserve(f.functions.size());
    for (auto &fn : f.functions) {
        std::array<uint64_t, 3> c{0, 0, 0};
        for (int i = 0; i < n; i++) c[fn[i] - 1] |= uint64_t(1) << i;
        classes.push_back(c);
    }
    for (uint64_t smask = 1; smask < (uint64_t(1) << n); smask++) {
        int m = __builtin_popcountll(smask);
        if (m < 3 || m > 3 * k) continue;
        std::unordered_set<uint64_t> have;  // sorted (c1,c2,c3) packed 3x20 bits
        for (auto &cls : classes) {
            uint64_t c[3] = {cls[0] & smask, cls[1] & smask, cls[2] & smask};
            if (c[0] > c[1]) std::swap(c[0], c[1]);
            if (c[1] > c[2]) std::swap(c[1], c[2]);
            if (c[0] > c[1]) std::swap(c[0], c[1]);
            have.insert(c[0] << 40 | c[1] << 20 | c[2]);
        }
        // enumerate partitions of S into (a1,a2,a3), canonical: the element
        // lowest in S sits in a1, the lowest outside a1 sits in a2
        std::vector<int> elems;
        for (int i = 0; i < n; i++)
            if (smask >> i & 1) elems.push_back(i);
        for (uint64_t assign = 0; assign < uint64_t(std::pow(3, m)) + 0.5; assign++) {
            uint64_t a[3] = {0, 0, 0};
            uint64_t t = assign;
            for (int i = 0; i < m; i++, t /= 3) a[t % 3] |= uint64_t(1) << elems[i];
            if (!a[0] || !a[1] || !a[2]) continue;
            bool size_ok = true;
            for (uint64_t x : a)
                if (__builtin_popcountll(x) > k) size_ok = false;
            if (!size_ok) continue;
            if (a[0] > a[1]) std::swap(a[0], a[1]);
            if (a[1] > a[2]) std::swap(a[1], a[2]);
            if (a[0] > a[1]) std::swap(a[0], a[1]);
            if (!have.count(a[0] << 40 | a[1] << 20 | a[2])) return false;
        }
    }
    return true;
}

long long trial_count(double success_prob_denominator) {
    if (success_prob_denominator < 1) success_prob_denominator = 1;
    return (long long)std::ceil(success_prob_denominator - 1e-12);
}

std::vector<int> draw_coloring(int n, int palette, uint32_t seed, long long trial) {
    if (palette < 1) fail("PreconditionViolated", "palette must be positive");
    std::mt19937 rng(seed + 0x9e3779b9u * (uint32_t)(trial + 1));
    std::uniform_int_distribution<int> die(0, palette - 1);
    std::vector<int> c(n);
    for (int &x : c) x = die(rng);
    return c;
}

std::vector<uint64_t> colorful_path_table(const graph &g, int s,
                                          const std::vector<int> &color, int palette,
                                          const std::vector<char> &allowed) {
    if (g.n > 64) fail("UnsupportedScale", "colorful DP limited to n <= 64");
    if (palette > 24) fail("UnsupportedScale", "colorful DP limited to palettes <= 24");
    if ((int)color.size() != g.n) fail("PreconditionViolated", "coloring size mismatch");
    auto ok = [&](int v) { return allowed.empty() || allowed[v]; };
    if (!ok(s)) fail("PreconditionViolated", "start vertex not allowed");
    std::vector<uint64_t> table(size_t(1) << palette, 0);
    table[uint32_t(1) << color[s]] = uint64_t(1) << s;
    for (size_t X = 1; X < table.size(); X++) {
        uint64_t verts = table[X];
        if (!verts) continue;
        while (verts) {
            int v = __builtin_ctzll(verts);
            verts &= verts - 1;
            for (int u : g.adj[v]) {
                if (!ok(u)) continue;
                uint32_t cu = uint32_t(1) << color[u];
                if (X & cu) continue;
                table[X | cu] |= uint64_t(1) << u;
            }
        }
    }
    return table;
}

certificate colorful_path_extract(const graph &g, int s, const std::vector<int> &color,
                                  const std::vector<uint64_t> &table, int x, uint32_t colors_used) {
    std::vector<int> rev{x};
    uint32_t X = colors_used;
    int cur = x;
    while (cur != s || __builtin_popcount(X) > 1) {
        uint32_t prevX = X & ~(uint32_t(1) << color[cur]);
        int nxt = -1;
        for (int u : g.adj[cur]) {
            if (prevX >> color[u] & 1 && table[prevX] >> u & 1) { nxt = u; break; }
        }
        if (nxt < 0) fail("InvariantViolated", "colorful table backtrack dead end");
        rev.push_back(nxt);
        X = prevX;
        cur = nxt;
        if ((int)rev.size() > g.n + 1) fail("InvariantViolated", "colorful backtrack loop");
    }
    std::reverse(rev.begin(), rev.end());
    return certificate::make_path(rev);
}

std::optional<certificate> colorful_longest_st_path(const graph &g, int s, int t,
                                                    const std::vector<int> &color, int palette,
                                                    const std::vector<char> &allowed) {
    auto table = colorful_path_table(g, s, color, palette, allowed);
    int best = -1;
    uint32_t bestX = 0;
    for (size_t X = 1; X < table.size(); X++) {
        if (!(table[X] >> t & 1)) continue;
        int sz = __builtin_popcountll(X);
        if (sz > best) { best = sz; bestX = (uint32_t)X; }
    }
    if (best < 0) return std::nullopt;
    if (s == t && best != 1) fail("InvariantViolated", "trivial path expected for s == t");
    return colorful_path_extract(g, s, color, table, t, bestX);
}
