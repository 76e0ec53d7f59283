#include "stcycle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace {

void check_instance(const st_cycle_instance &inst) {
    if (inst.s < 0 || inst.s >= inst.g.n || inst.t < 0 || inst.t >= inst.g.n)
        fail("PreconditionViolated", "terminals out of range");
}

// any cycle through s: two neighbors of s connected in g - s
std::optional<certificate> cycle_through(const graph &g, int s) {
    std::vector<char> nbr(g.n, 0);
    for (int u : g.adj[s]) nbr[u] = 1;
    // BFS in g - s from each neighbor until another neighbor is reached
    for (int a : g.adj[s]) {
        std::vector<int> par(g.n, -1);
        par[a] = a;
        par[s] = -2;
        std::deque<int> q{a};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (v != a && nbr[v]) {
                std::vector<int> seq;
                for (int x = v; x != a; x = par[x]) seq.push_back(x);
                seq.push_back(a);
                std::reverse(seq.begin(), seq.end());
                seq.insert(seq.begin(), s);
                return certificate::make_cycle(seq);
            }
            for (int u : g.adj[v])
                if (par[u] == -1) {
                    par[u] = v;
                    q.push_back(u);
                }
        }
    }
    return std::nullopt;
}

// combine two internally disjoint (s,t)-paths into the cycle they bound
certificate paths_to_cycle(const std::vector<int> &p1, const std::vector<int> &p2) {
    std::vector<int> seq = p1;
    for (int i = (int)p2.size() - 2; i >= 1; i--) seq.push_back(p2[i]);
    return certificate::make_cycle(seq);
}

// one colorful attempt of the two-path search
std::optional<certificate> colorful_attempt(const graph &g, int s, int t, int k,
                                            const std::vector<int> &color, int palette) {
    if (color[s] == color[t]) return std::nullopt;
    auto table = colorful_path_table(g, s, color, palette);
    uint32_t full = (uint32_t(1) << palette) - 1;
    uint32_t pqm = (uint32_t(1) << color[s]) | (uint32_t(1) << color[t]);
    // best[M] = max |Y| over Y subseteq M with an (s,t)-path colored exactly Y
    std::vector<int> best(size_t(1) << palette, -1);
    for (size_t X = 1; X <= full; X++)
        if (table[X] >> t & 1) best[X] = __builtin_popcountll(X);
    for (int b = 0; b < palette; b++)
        for (uint32_t M = 0; M <= full; M++)
            if (M >> b & 1) best[M] = std::max(best[M], best[M ^ (uint32_t(1) << b)]);
    for (uint32_t X = 1; X <= full; X++) {
        if (!(table[X] >> t & 1)) continue;
        uint32_t M = (~X & full) | pqm;
        int need = std::max(k + 2 - __builtin_popcount(X), 2);  // {p,q} is the smallest witness
        if (best[M] < need) continue;
        // descend from M to a witness color set of the recorded size
        int bv = best[M];
        uint32_t Y = M;
        while (!(__builtin_popcount(Y) == bv && (table[Y] >> t & 1))) {
            bool moved = false;
            for (int b = 0; b < palette && !moved; b++) {
                uint32_t bit = uint32_t(1) << b;
                if ((Y & bit) && best[Y ^ bit] == bv) {
                    Y ^= bit;
                    moved = true;
                }
            }
            if (!moved) fail("InvariantViolated", "subset maximum lost its witness");
        }
        certificate p1 = colorful_path_extract(g, s, color, table, t, X);
        certificate p2 = colorful_path_extract(g, s, color, table, t, Y);
        certificate cyc = paths_to_cycle(p1.seq, p2.seq);
        std::string why;
        if (!verify_certificate(g, cyc, &why) || cyc.length() < k)
            fail("InvariantViolated", "combined colorful cycle invalid: " + why);
        return cyc;
    }
    return std::nullopt;
}

// one separation attempt: col[v] in {1,2,3} for v outside {s,t}
std::optional<certificate> separation_attempt(const graph &g, int s, int t, int k,
                                              const std::vector<int> &col) {
    for (int cls = 1; cls <= 3; cls++) {
        std::vector<char> in(g.n, 0);
        for (int v = 0; v < g.n; v++)
            if (v != s && v != t && col[v] == cls) in[v] = 1;
        in[t] = 1;
        // BFS distances from t inside the class
        std::vector<int> dist(g.n, -1), par(g.n, -1);
        dist[t] = 0;
        std::deque<int> q{t};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.adj[v])
                if (in[u] && dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    par[u] = v;
                    q.push_back(u);
                }
        }
        for (int v = 0; v < g.n; v++) {
            if (v == t || dist[v] != k) continue;
            std::vector<int> p{v};  // shortest (v,t)-path in the class
            for (int x = par[v]; x != -1; x = par[x]) p.push_back(x);
            // connectors from s to v and to t avoiding the interior of p; a
            // twin of s lets one flow produce two paths sharing only s
            graph g3 = add_vertex(g, g.adj[s]);
            std::vector<char> forb(g3.n, 0);
            for (size_t i = 1; i + 1 < p.size(); i++) forb[p[i]] = 1;
            auto ps = disjoint_paths(g3, normalize_set({s, g.n}), normalize_set({v, t}), 2, forb);
            if (ps.size() < 2) continue;
            std::vector<int> pv, pt;
            for (auto &c : ps) {
                std::vector<int> seq = c.seq;
                if (seq.front() == g.n) seq.front() = s;
                (seq.back() == v ? pv : pt) = seq;
            }
            if (pv.empty() || pt.empty()) fail("InvariantViolated", "connector endpoints broken");
            std::vector<int> long_side = pv;  // s .. v .. t
            long_side.insert(long_side.end(), p.begin() + 1, p.end());
            certificate cyc = paths_to_cycle(long_side, pt);
            std::string why;
            if (!verify_certificate(g, cyc, &why) || cyc.length() < k)
                fail("InvariantViolated", "separation cycle invalid: " + why);
            return cyc;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<certificate> stage1_short_solution(const st_cycle_instance &inst,
                                                 const coloring_source &src) {
    check_instance(inst);
    if (inst.k < 4 || inst.s == inst.t) fail("PreconditionViolated", "need k >= 4 and s != t");
    const graph &g = inst.g;
    if (src.mode == coloring_source::deterministic) {
        if (g.n > 3 * inst.k)
            fail("UnsupportedScale",
                 "deterministic mode needs n <= 3k (injective coloring); no hash family built");
        if (g.n > 24) fail("UnsupportedScale", "palette limited to 24 colors");
        std::vector<int> ident(g.n);
        for (int i = 0; i < g.n; i++) ident[i] = i;
        return colorful_attempt(g, inst.s, inst.t, inst.k, ident, g.n);
    }
    int palette = 3 * inst.k;
    if (palette > 24) fail("UnsupportedScale", "palette limited to 24 colors");
    long long trials = src.trials > 0 ? src.trials : trial_count(std::exp(3.0 * inst.k));
    for (long long trial = 0; trial < trials; trial++) {
        auto color = draw_coloring(g.n, palette, src.seed, trial);
        if (auto r = colorful_attempt(g, inst.s, inst.t, inst.k, color, palette)) return r;
    }
    return std::nullopt;
}

std::optional<certificate> stage2_long_solution(const st_cycle_instance &inst,
                                                const coloring_source &src) {
    check_instance(inst);
    if (inst.k < 4 || inst.s == inst.t) fail("PreconditionViolated", "need k >= 4 and s != t");
    const graph &g = inst.g;
    std::vector<int> others;
    for (int v = 0; v < g.n; v++)
        if (v != inst.s && v != inst.t) others.push_back(v);
    if (src.mode == coloring_source::deterministic) {
        if (others.empty()) return std::nullopt;
        auto family = build_separation3((int)others.size(), inst.k);
        for (auto &fn : family.functions) {
            std::vector<int> col(g.n, 0);
            for (size_t i = 0; i < others.size(); i++) col[others[i]] = fn[i];
            if (auto r = separation_attempt(g, inst.s, inst.t, inst.k, col)) return r;
        }
        return std::nullopt;
    }
    long long trials =
        src.trials > 0 ? src.trials : trial_count(std::pow(3.0, 3 * inst.k - 1) / 2.0);
    for (long long trial = 0; trial < trials; trial++) {
        auto raw = draw_coloring(g.n, 3, src.seed, trial);
        std::vector<int> col(g.n, 0);
        for (int v : others) col[v] = raw[v] + 1;
        if (auto r = separation_attempt(g, inst.s, inst.t, inst.k, col)) return r;
    }
    return std::nullopt;
}

std::optional<certificate> solve_st_cycle(const st_cycle_instance &inst,
                                          const coloring_source &src) {
    check_instance(inst);
    const graph &g = inst.g;
    if (inst.k > g.n) return std::nullopt;  // simple cycles cannot exceed n
    if (inst.s == inst.t) {
        if (inst.k <= 3) return cycle_through(g, inst.s);
        // a long cycle through s passes through some neighbor of s
        for (int x : g.adj[inst.s]) {
            st_cycle_instance sub{g, inst.s, x, inst.k};
            if (auto r = solve_st_cycle(sub, src)) return r;
        }
        return std::nullopt;
    }
    if (inst.k <= 3) {
        auto ps = disjoint_paths(g, {inst.s}, {inst.t}, 2);
        if (ps.size() < 2) return std::nullopt;
        return paths_to_cycle(ps[0].seq, ps[1].seq);
    }
    if (auto r = stage1_short_solution(inst, src)) return r;
    // with an injective coloring the first stage saw every solution length
    if (src.mode == coloring_source::deterministic && g.n <= 3 * inst.k) return std::nullopt;
    return stage2_long_solution(inst, src);
}
