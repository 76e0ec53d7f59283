#include "vcad.hpp"

#include "oracle.hpp"
#include "stcycle.hpp"

#include <algorithm>
#include <bit>

namespace {

int popcnt(int mask) { return std::popcount((unsigned)mask); }

vset complement_of(const graph &g, const vset &s) {
    vset out;
    for (int v = 0; v < g.n; v++)
        if (!set_contains(s, v)) out.push_back(v);
    return out;
}

void check_cover(const graph &g, const vset &s) {
    for (auto [u, v] : g.edges())
        if (!set_contains(s, u) && !set_contains(s, v))
            fail("PreconditionViolated", "s_cover is not a vertex cover");
}

void check_partition(const vset &a, const vset &z, const vset &s) {
    if (set_union(a, z) != s || set_minus(a, z) != a)
        fail("PreconditionViolated", "a and z must partition s_cover");
}

void check_independent(const graph &g, const vset &s, const vset &x, const char *name) {
    for (int v : x) {
        if (v < 0 || v >= g.n) fail("PreconditionViolated", std::string(name) + " out of range");
        if (set_contains(s, v))
            fail("PreconditionViolated", std::string(name) + " must avoid the cover");
    }
}

int set_to_bits(const vset &s) {
    int m = 0;
    for (int v : s) m |= 1 << v;
    return m;
}

certificate map_cert(const certificate &c, const std::vector<int> &to_orig) {
    std::vector<int> seq;
    for (int v : c.seq) seq.push_back(to_orig[v]);
    return c.kind == certificate::cycle ? certificate::make_cycle(seq)
                                        : certificate::make_path(seq);
}

// cycle of length >= want: per-anchor cycle solver when the scale admits it,
// exhaustive threshold search otherwise
std::optional<certificate> direct_decide(const graph &g, int want) {
    if (want < 3) want = 3;
    if (g.n <= 14) {
        coloring_source det;
        det.mode = coloring_source::deterministic;
        bool scale_ok = true;
        for (int v = 0; v < g.n && scale_ok; v++) {
            try {
                if (auto c = solve_st_cycle({g, v, v, want}, det)) return c;
            } catch (const solver_error &e) {
                if (e.code != "UnsupportedScale") throw;
                scale_ok = false;
            }
        }
        if (scale_ok) return std::nullopt;
    }
    certificate w;
    oracle_budget bud;
    bud.max_vertices = 80;
    if (oracle_cycle_at_least(g, want, &w, bud)) return w;
    return std::nullopt;
}

// cover vertices alternating with independent vertices; valid because at
// surplus zero every independent vertex is adjacent to the whole cover
std::optional<certificate> alternating_cycle(const graph &g, const vset &s, const vset &i) {
    if ((int)s.size() < 2 || i.size() < s.size()) return std::nullopt;
    std::vector<int> seq;
    for (size_t j = 0; j < s.size(); j++) {
        seq.push_back(s[j]);
        seq.push_back(i[j]);
    }
    certificate out = certificate::make_cycle(seq);
    std::string why;
    if (!verify_certificate(g, out, &why))
        fail("InvariantViolated", "alternating cycle invalid: " + why);
    return out;
}

// removes the listed synthetic edges from adjm one at a time; whenever the
// spanning cycle uses the removed edge, it is reopened into a path and
// reclosed on a crossing pair, which the degree sums of the auxiliary graph
// guarantee to exist
std::vector<int> exchange_out(std::vector<std::vector<char>> &adjm, std::vector<int> cyc,
                              const std::vector<std::pair<int, int>> &added) {
    int n = (int)cyc.size();
    for (int idx = (int)added.size() - 1; idx >= 0; idx--) {
        auto [u, v] = added[idx];
        adjm[u][v] = adjm[v][u] = 0;
        int iu = -1;
        for (int i = 0; i < n; i++)
            if (cyc[i] == u) iu = i;
        bool fwd = cyc[(iu + 1) % n] == v, bwd = cyc[(iu - 1 + n) % n] == v;
        if (!fwd && !bwd) continue;
        std::vector<int> x(n);
        for (int j = 0; j < n; j++) x[j] = fwd ? cyc[(iu - j + n) % n] : cyc[(iu + j) % n];
        int hit = -1;
        for (int i = 1; i <= n - 3 && hit < 0; i++)
            if (adjm[x[0]][x[i + 1]] && adjm[x[n - 1]][x[i]]) hit = i;
        if (hit < 0) fail("InvariantViolated", "crossing exchange missing");
        std::vector<int> nc(x.begin(), x.begin() + hit + 1);
        for (int j = n - 1; j >= hit + 1; j--) nc.push_back(x[j]);
        cyc = nc;
    }
    return cyc;
}

}  // namespace

multi_path_table build_multi_path_table(const graph &g, const vset &a, const vset &x,
                                        int levels, int max_verts) {
    if (g.n > 18) fail("UnsupportedScale", "path-cover tables need at most 18 vertices");
    if (levels < 1 || max_verts < 2)
        fail("PreconditionViolated", "need at least one path on two vertices");
    multi_path_table t;
    t.n = g.n;
    t.max_verts = max_verts;
    int full = 1 << g.n;
    std::vector<int> w(g.n, 0);
    for (int v : x) w[v] = 1;
    t.dp.assign((size_t)full * g.n, -1);
    for (int v : a) t.dp[((size_t)(1 << v)) * g.n + v] = (int16_t)w[v];
    for (int mask = 1; mask < full; mask++) {
        if (popcnt(mask) >= max_verts) continue;
        for (int v = 0; v < g.n; v++) {
            if (!(mask >> v & 1)) continue;
            int16_t cur = t.dp[(size_t)mask * g.n + v];
            if (cur < 0) continue;
            for (int u : g.adj[v]) {
                if (mask >> u & 1) continue;
                int16_t &slot = t.dp[(size_t)(mask | 1 << u) * g.n + u];
                if (slot < cur + w[u]) slot = (int16_t)(cur + w[u]);
            }
        }
    }
    t.alpha.assign(full, multi_path_table::none);
    for (int mask = 1; mask < full; mask++) {
        int pc = popcnt(mask);
        if (pc < 2 || pc > max_verts) continue;
        int best = multi_path_table::none;
        for (int v : a)
            if (mask >> v & 1) best = std::max(best, (int)t.dp[(size_t)mask * g.n + v]);
        if (best >= 0) t.alpha[mask] = best;
    }
    t.beta.assign(levels + 1, {});
    t.beta[1] = t.alpha;
    for (int l = 2; l <= levels; l++) {
        t.beta[l].assign(full, multi_path_table::none);
        for (int mask = 1; mask < full; mask++) {
            int pc = popcnt(mask);
            if (pc < 2 * l || pc > max_verts) continue;
            int low = mask & -mask, rest = mask ^ low;
            int best = multi_path_table::none;
            // the part containing the lowest vertex is the single-path part
            for (int s = rest;; s = (s - 1) & rest) {
                int rp = s | low;
                if (popcnt(rp) >= 2 && t.alpha[rp] != multi_path_table::none) {
                    int bv = t.beta[l - 1][mask ^ rp];
                    if (bv != multi_path_table::none) best = std::max(best, t.alpha[rp] + bv);
                }
                if (!s) break;
            }
            t.beta[l][mask] = best;
        }
    }
    return t;
}

namespace {

std::vector<int> extract_alpha_path(const multi_path_table &t, const graph &g, const vset &a,
                                    const vset &x, int mask) {
    std::vector<int> w(g.n, 0);
    for (int v : x) w[v] = 1;
    int v = -1;
    for (int c : a)
        if ((mask >> c & 1) && (int)t.dp[(size_t)mask * g.n + c] == t.alpha[mask]) v = c;
    if (v < 0) fail("InvariantViolated", "path table endpoint missing");
    std::vector<int> seq{v};
    int cur = mask;
    while (popcnt(cur) > 1) {
        int pm = cur ^ (1 << v), nxt = -1;
        for (int u : g.adj[v]) {
            if (!(pm >> u & 1)) continue;
            if ((int)t.dp[(size_t)pm * g.n + u] ==
                (int)t.dp[(size_t)cur * g.n + v] - w[v]) {
                nxt = u;
                break;
            }
        }
        if (nxt < 0) fail("InvariantViolated", "path table backtrack stuck");
        cur = pm;
        v = nxt;
        seq.push_back(v);
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace

std::vector<std::vector<int>> extract_cover_paths(const multi_path_table &t, const graph &g,
                                                  const vset &a, const vset &x, int mask,
                                                  int level) {
    if (level < 1 || level >= (int)t.beta.size())
        fail("PreconditionViolated", "level outside the built tables");
    if (t.beta[level][mask] == multi_path_table::none)
        fail("PreconditionViolated", "no path system for this mask");
    if (level == 1) return {extract_alpha_path(t, g, a, x, mask)};
    int low = mask & -mask, rest = mask ^ low;
    for (int s = rest;; s = (s - 1) & rest) {
        int rp = s | low;
        if (popcnt(rp) >= 2 && t.alpha[rp] != multi_path_table::none) {
            int bv = t.beta[level - 1][mask ^ rp];
            if (bv != multi_path_table::none && t.alpha[rp] + bv == t.beta[level][mask]) {
                auto out = extract_cover_paths(t, g, a, x, mask ^ rp, level - 1);
                out.push_back(extract_alpha_path(t, g, a, x, rp));
                return out;
            }
        }
        if (!s) break;
    }
    fail("InvariantViolated", "path system split missing");
}

certificate reroute_through_x(const graph &g, const vset &b, const vset &s_cover,
                              const certificate &cycle, const vset &x) {
    (void)b;
    std::string why;
    if (cycle.kind != certificate::cycle || !verify_certificate(g, cycle, &why))
        fail("PreconditionViolated", "input cycle invalid: " + why);
    vset S = normalize_set(s_cover);
    check_cover(g, S);
    check_independent(g, S, x, "x");
    auto seq = cycle.seq;
    int L = (int)seq.size();
    std::vector<char> on(g.n, 0);
    for (int v : seq) on[v] = 1;
    auto inS = to_mask(g.n, S), inX = to_mask(g.n, x);
    for (int guard = 0; guard <= (int)x.size(); guard++) {
        int x0 = -1;
        for (int v : x)
            if (!on[v]) {
                x0 = v;
                break;
            }
        if (x0 < 0) break;
        bool done = false;
        for (int i = 0; i < L && !done; i++) {
            int u = seq[i];
            if (inS[u] || inX[u]) continue;  // only spare independent vertices leave
            if (g.has_edge(seq[(i + L - 1) % L], x0) && g.has_edge(seq[(i + 1) % L], x0)) {
                on[u] = 0;
                on[x0] = 1;
                seq[i] = x0;
                done = true;
            }
        }
        if (!done) fail("GuaranteeViolated", "no exchange position for a missing x-vertex");
    }
    certificate out = certificate::make_cycle(seq);
    if (!verify_certificate(g, out, &why))
        fail("InvariantViolated", "rerouted cycle invalid: " + why);
    // length and cover intersection are untouched: swaps replace independent
    // vertices one for one
    return out;
}

std::pair<vset, vset> split_a_z(const graph &g, const vset &b, const vset &s_cover,
                                const vset &x, int p) {
    vset S = normalize_set(s_cover);
    check_cover(g, S);
    check_independent(g, S, x, "x");
    int delta = min_degree_outside(g, b);
    if (p < 0 || 8 * p >= delta)
        fail("PreconditionViolated", "needs 8p < delta(g-b)");
    if ((int)x.size() < delta - 3 * p)
        fail("PreconditionViolated", "x smaller than delta(g-b)-3p");
    auto inX = to_mask(g.n, x);
    vset a, z;
    for (int v : S) {
        int cnt = 0;
        for (int u : g.adj[v])
            if (inX[u]) cnt++;
        (cnt >= p + 1 ? a : z).push_back(v);
    }
    if ((int)z.size() >= 2 * p)
        fail("BoundViolated", "poorly-connected cover side too large");
    return {a, z};
}

std::optional<path_cover_spec> path_cover_exists(const graph &g, const vset &b,
                                                 const vset &s_cover, int k, const vset &x,
                                                 const vset &a, const vset &z) {
    if (g.n > 18) fail("UnsupportedScale", "path-cover tables need at most 18 vertices");
    if (k < 0) fail("PreconditionViolated", "negative length surplus");
    vset S = normalize_set(s_cover);
    check_cover(g, S);
    vset A = normalize_set(a), Z = normalize_set(z), X = normalize_set(x);
    check_partition(A, Z, S);
    check_independent(g, S, X, "x");
    int delta = min_degree_outside(g, b);
    int p = (int)S.size() - delta;
    vset I = complement_of(g, S);
    int nA = (int)A.size(), nZ = (int)Z.size(), nI = (int)I.size(), nX = (int)X.size();
    int abits = set_to_bits(A), zbits = set_to_bits(Z), ibits = set_to_bits(I);

    struct cell {
        int q, r, t, scov, total;
    };
    std::vector<cell> cells;
    int levels = 0, mv = 0;
    for (int q = std::max((k + 1) / 2, 0); q <= p; q++) {
        if (nI < delta + k - q) continue;
        for (int r = 0; r <= std::min(2 * nZ, nI); r++) {
            for (int t = 0;; t++) {
                int scov = r + t + 2 * q - k - nZ;
                if (scov > nA) break;
                int trivial = nA - scov;  // == |S|+k-2q-r-t singleton paths
                if (trivial < std::max(p - q, 0)) break;
                if (t == 0) {
                    // only an all-singleton cover: nothing to ride, nothing to hide
                    if (r == 0 && nZ == 0 && scov == 0) cells.push_back({q, r, t, 0, 0});
                    continue;
                }
                if (scov < 2 * t) {
                    if (scov + 1 < 2 * t) break;  // deficit only grows with t
                    continue;
                }
                int total = scov + r + nZ;
                if (total > g.n) break;
                cells.push_back({q, r, t, scov, total});
                levels = std::max(levels, t);
                mv = std::max(mv, total);
            }
        }
    }
    std::optional<multi_path_table> table;
    for (const cell &c : cells) {
        if (c.t == 0) {
            if (nX > delta + k - c.q) continue;
            path_cover_spec spec;
            spec.x = X;
            spec.a = A;
            spec.z = Z;
            spec.q = c.q;
            for (int v : A) spec.cover.push_back({v});
            return spec;
        }
        if (!table) table = build_multi_path_table(g, A, X, levels, mv);
        int best = multi_path_table::none, bestmask = -1;
        for (int mask = 0; mask < (1 << g.n); mask++) {
            if (popcnt(mask) != c.total) continue;
            if ((mask & zbits) != zbits) continue;
            if (popcnt(mask & ibits) != c.r) continue;
            if (popcnt(mask & abits) != c.scov) continue;
            int val = table->beta[c.t][mask];
            if (val > best) {
                best = val;
                bestmask = mask;
            }
        }
        if (best == multi_path_table::none) continue;
        // ridden vertices outside x count against the selection budget
        if (nX + c.r - best > delta + k - c.q) continue;
        path_cover_spec spec;
        spec.x = X;
        spec.a = A;
        spec.z = Z;
        spec.q = c.q;
        for (int v : I)
            if (bestmask >> v & 1) spec.y.push_back(v);
        spec.cover = extract_cover_paths(*table, g, A, X, bestmask, c.t);
        for (int v : A)
            if (!(bestmask >> v & 1)) spec.cover.push_back({v});
        return spec;
    }
    return std::nullopt;
}

certificate reconstruct_cycle(const path_cover_spec &spec, const graph &g, const vset &b,
                              const vset &s_cover, int k) {
    vset S = normalize_set(s_cover);
    check_cover(g, S);
    int delta = min_degree_outside(g, b);
    int p = (int)S.size() - delta;
    int N = 2 * delta + k;
    if (N < 3) fail("PreconditionViolated", "target cycle shorter than a triangle");
    int q = spec.q;
    if (2 * q < k || q > p) fail("PreconditionViolated", "surplus q out of range");
    vset A = normalize_set(spec.a), Z = normalize_set(spec.z);
    vset Y = normalize_set(spec.y), X = normalize_set(spec.x);
    check_partition(A, Z, S);
    check_independent(g, S, X, "x");
    check_independent(g, S, Y, "y");

    vset want = set_union(set_union(A, Z), Y);
    auto inWant = to_mask(g.n, want), inA = to_mask(g.n, A);
    std::vector<char> seen(g.n, 0);
    std::vector<std::vector<int>> nontrivial, singles;
    for (const auto &pa : spec.cover) {
        if (pa.empty()) fail("PreconditionViolated", "empty cover path");
        for (size_t i = 0; i < pa.size(); i++) {
            int v = pa[i];
            if (v < 0 || v >= g.n || !inWant[v])
                fail("PreconditionViolated", "cover path leaves its ground set");
            if (seen[v]) fail("PreconditionViolated", "cover paths overlap");
            seen[v] = 1;
            if (i && !g.has_edge(pa[i - 1], v))
                fail("PreconditionViolated", "cover path uses a non-edge");
        }
        if (!inA[pa.front()] || !inA[pa.back()])
            fail("PreconditionViolated", "cover path endpoint outside a");
        (pa.size() == 1 ? singles : nontrivial).push_back(pa);
    }
    for (int v : want)
        if (!seen[v]) fail("PreconditionViolated", "cover misses a vertex");
    if ((int)spec.cover.size() != (int)S.size() + k - 2 * q - (int)Y.size())
        fail("PreconditionViolated", "cover path count mismatch");
    int drop = p - q;
    if ((int)singles.size() < drop)
        fail("PreconditionViolated", "not enough singleton paths to drop");
    std::sort(singles.begin(), singles.end());
    vset dropped;
    for (int i = 0; i < drop; i++) dropped.push_back(singles[i][0]);
    std::vector<std::vector<int>> paths = nontrivial;
    for (size_t i = drop; i < singles.size(); i++) paths.push_back(singles[i]);
    vset Sp = set_minus(S, normalize_set(dropped));

    vset I = complement_of(g, S);
    int need = delta + k - q;
    vset base = set_union(X, Y);
    if ((int)base.size() > need)
        fail("PreconditionViolated", "x and y exceed the selection size");
    if ((int)I.size() < need)
        fail("PreconditionViolated", "independent side smaller than the selection");
    vset Ip = base;
    for (int v : I) {
        if ((int)Ip.size() >= need) break;
        if (!set_contains(base, v)) Ip.push_back(v);
    }
    Ip = normalize_set(Ip);
    vset freev = set_minus(Ip, Y);
    if (freev.size() != paths.size())
        fail("InvariantViolated", "path and connector counts differ");

    vset verts = set_union(Sp, Ip);
    if ((int)verts.size() != N) fail("InvariantViolated", "selection size mismatch");
    std::vector<int> to_orig;
    graph sub = induced_subgraph(g, verts, &to_orig);
    std::vector<int> sid(g.n, -1);
    for (int i = 0; i < N; i++) sid[to_orig[i]] = i;

    // auxiliary graph: cover-side edges survive only along the paths; the
    // selection is made into a clique (exchange material the final cycle
    // provably avoids) and joined completely to the well-connected side
    std::vector<std::vector<char>> adjm(N, std::vector<char>(N, 0));
    std::vector<std::vector<char>> pathedge(N, std::vector<char>(N, 0));
    for (const auto &pa : paths)
        for (size_t i = 0; i + 1 < pa.size(); i++) {
            int u = sid[pa[i]], v = sid[pa[i + 1]];
            pathedge[u][v] = pathedge[v][u] = 1;
        }
    auto inSp = to_mask(g.n, Sp);
    for (auto [u, v] : sub.edges()) {
        if (inSp[to_orig[u]] && inSp[to_orig[v]] && !pathedge[u][v]) continue;
        adjm[u][v] = adjm[v][u] = 1;
    }
    std::vector<int> ip, asub;
    for (int v : Ip) ip.push_back(sid[v]);
    for (int v : Sp)
        if (inA[v]) asub.push_back(sid[v]);
    for (size_t i = 0; i < ip.size(); i++)
        for (size_t j = i + 1; j < ip.size(); j++) adjm[ip[i]][ip[j]] = adjm[ip[j]][ip[i]] = 1;
    std::vector<std::pair<int, int>> added;
    for (int u : ip)
        for (int v : asub)
            if (!adjm[u][v]) {
                adjm[u][v] = adjm[v][u] = 1;
                added.push_back({u, v});
            }

    // stitch: paths (smaller endpoint first) alternating with spare selection
    // vertices
    for (auto &pa : paths)
        if (pa.back() < pa.front()) std::reverse(pa.begin(), pa.end());
    std::sort(paths.begin(), paths.end());
    std::vector<int> cyc;
    for (size_t i = 0; i < paths.size(); i++) {
        for (int v : paths[i]) cyc.push_back(sid[v]);
        cyc.push_back(sid[freev[i]]);
    }
    for (int i = 0; i < N; i++)
        if (!adjm[cyc[i]][cyc[(i + 1) % N]])
            fail("InvariantViolated", "stitched cycle leaves the auxiliary graph");

    cyc = exchange_out(adjm, cyc, added);
    std::vector<int> seq;
    for (int v : cyc) seq.push_back(to_orig[v]);
    certificate out = certificate::make_cycle(seq);
    std::string why;
    if (!verify_certificate(g, out, &why))
        fail("InvariantViolated", "reconstructed cycle invalid: " + why);
    if (out.length() != N) fail("InvariantViolated", "reconstructed cycle length drifted");
    auto on = to_mask(g.n, normalize_set(seq));
    for (int v : set_union(X, Z))
        if (!on[v]) fail("InvariantViolated", "reconstructed cycle misses a required vertex");
    return out;
}

std::optional<certificate> solve_vcad(const vcad_instance &inst) {
    const graph &g = inst.g;
    vset b = normalize_set(inst.b);
    for (int v : b)
        if (v < 0 || v >= g.n) fail("PreconditionViolated", "b out of range");
    vset S = set_union(normalize_set(inst.s_cover), b);
    check_cover(g, S);
    int delta = min_degree_outside(g, b);
    int p = (int)S.size() - delta;
    if (inst.p != p) fail("PreconditionViolated", "declared surplus p disagrees with the cover");
    int k = inst.k;
    if (k < 0) fail("PreconditionViolated", "negative k");
    if (k > 2 * p) return std::nullopt;  // a cycle never holds more than |s_cover| cover vertices

    if (delta <= 8 * p) return direct_decide(g, std::max(2 * delta + k, 3));

    vset I = complement_of(g, S);
    if (p == 0) return alternating_cycle(g, S, I);  // here b is empty and I is complete to S

    if ((int)I.size() < delta + k - p) return std::nullopt;

    std::string why;
    for (int kk = k; kk <= 2 * p; kk++) {
        if ((int)I.size() < delta + kk - p) continue;
        vset X(I.begin(), I.begin() + (delta - 3 * p));
        auto [a, z] = split_a_z(g, b, S, X, p);
        for (int wm = 0; wm < (1 << (int)z.size()); wm++) {
            vset D;
            for (size_t i = 0; i < z.size(); i++)
                if (!(wm >> i & 1)) D.push_back(z[i]);
            std::vector<int> to2;
            graph g2 = remove_vertices(g, D, &to2);
            std::vector<int> o2n(g.n, -1);
            for (int i = 0; i < g2.n; i++) o2n[to2[i]] = i;
            auto image = [&](const vset &s) {
                vset out;
                for (int v : s)
                    if (o2n[v] >= 0) out.push_back(v >= 0 ? o2n[v] : -1);
                return out;
            };
            vset b2 = image(b), S2 = image(S);
            int d2 = min_degree_outside(g2, b2);
            int p2 = (int)S2.size() - d2;
            int kk2 = kk + 2 * (delta - d2);
            if (kk2 < 0 || kk2 > 2 * p2) continue;
            std::optional<certificate> got;
            if (d2 <= 8 * p2) {
                got = direct_decide(g2, std::max(2 * d2 + kk2, 3));
            } else if (p2 == 0) {
                if (kk2 == 0) got = alternating_cycle(g2, S2, complement_of(g2, S2));
            } else {
                vset I2 = complement_of(g2, S2);
                if ((int)I2.size() < d2 + kk2 - p2) continue;
                vset X2 = image(X), fill;
                for (int v : I2) {
                    if ((int)X2.size() + (int)fill.size() >= d2 - 3 * p2) break;
                    if (!set_contains(X2, v)) fill.push_back(v);
                }
                X2 = set_union(X2, fill);
                auto [a2, z2] = split_a_z(g2, b2, S2, X2, p2);
                if (auto spec = path_cover_exists(g2, b2, S2, kk2, X2, a2, z2))
                    got = reconstruct_cycle(*spec, g2, b2, S2, kk2);
            }
            if (!got) continue;
            certificate lifted = map_cert(*got, to2);
            if (!verify_certificate(g, lifted, &why))
                fail("InvariantViolated", "branch cycle invalid in the host graph: " + why);
            if (lifted.length() < 2 * delta + k)
                fail("InvariantViolated", "branch cycle shorter than the target");
            return lifted;
        }
    }
    return std::nullopt;
}
