#include "almostham.hpp"

#include "classic.hpp"
#include "oracle.hpp"
#include "vcad.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace {

certificate exact_longest(const graph &g) {
    oracle_budget bud;
    bud.max_vertices = 20;
    auto r = oracle_longest_cycle(g, bud);
    if (!r.found) fail("GuaranteeViolated", "2-connected graph without any cycle");
    return r.cert;
}

// ---- good path cover DP ----------------------------------------------------

struct cover_dp {
    const graph &g;
    vset b;
    bool sep;
    int n, bn, r;
    std::vector<char> inb;
    std::vector<int> side;  // component index outside b (0/1), 0 elsewhere
    // sparse per-trial state store: id -> parent id (-2 marks a root); the
    // current-path length dimension is capped at 3 ("one, two, enough")
    std::unordered_map<int64_t, int64_t> parent;
    std::vector<std::vector<int64_t>> layers;  // reached ids by colors used

    cover_dp(const graph &g_, vset b_, bool sep_) : g(g_), b(std::move(b_)), sep(sep_) {
        n = g.n;
        bn = (int)b.size();
        r = 3 * bn;
        inb = to_mask(n, b);
        side.assign(n, 0);
        if (sep) {
            std::vector<char> alive(n, 1);
            for (int v : b) alive[v] = 0;
            auto comps = connected_components(g, alive);
            if (comps.size() != 2)
                fail("PreconditionViolated",
                     "separator cover search needs exactly two residual components, got " +
                         std::to_string(comps.size()));
            for (int v : comps[1]) side[v] = 1;
        }
        layers.assign(r + 1, {});
    }

    int64_t idx(int mask, int v, int i, int l, int p) const {
        return ((((int64_t)mask * n + v) * 2 + i) * 4 + std::min(l, 3)) * (bn + 1) + p;
    }
    void decode(int64_t id, int &mask, int &v, int &i, int &l, int &p) const {
        p = (int)(id % (bn + 1));
        id /= bn + 1;
        l = (int)(id % 4);
        id /= 4;
        i = (int)(id % 2);
        id /= 2;
        v = (int)(id % n);
        mask = (int)(id / n);
    }

    // first writer wins; scan order makes the choice deterministic
    void reach(int64_t id, int64_t par, int layer) {
        if (!parent.emplace(id, par).second) return;
        if (parent.size() > (1u << 22))
            fail("UnsupportedScale", "path cover DP state space too large");
        layers[layer].push_back(id);
    }

    // extracts the path system behind an accepted state
    good_path_cover backtrack(int64_t id) const {
        std::vector<std::vector<int>> paths;
        std::vector<int> cur;
        while (true) {
            int mask, v, i, l, p;
            decode(id, mask, v, i, l, p);
            cur.push_back(v);
            int64_t par = parent.at(id);
            if (l == 1) {
                std::reverse(cur.begin(), cur.end());
                paths.push_back(cur);
                cur.clear();
            }
            if (par == -2) break;
            id = par;
        }
        good_path_cover out;
        vset covered;
        for (auto &pa : paths) {
            for (int v : pa)
                if (inb[v]) covered.push_back(v);
            out.paths.push_back(certificate::make_path(pa));
        }
        out.covered_b = normalize_set(covered);
        return out;
    }

    // runs one coloring; updates (best_score, best) when improved
    void run(const std::vector<int> &color, int &best_score, good_path_cover &best) {
        parent.clear();
        for (auto &layer : layers) layer.clear();
        int bmask_lo = (1 << bn) - 1;
        for (int v = 0; v < n; v++) {
            if (inb[v]) continue;
            reach(idx(1 << color[v], v, side[v], 1, 0), -2, 1);
        }
        for (int layer = 1; layer <= r; layer++) {
            auto &bucket = layers[layer];
            for (size_t bi = 0; bi < bucket.size(); bi++) {
                int64_t id = bucket[bi];
                int mask, v, i, l, p;
                decode(id, mask, v, i, l, p);
                // acceptance: the current path can be declared finished here
                if (!inb[v] && l >= 3) {
                    int pfin = p + (sep && side[v] != i ? 1 : 0);
                    if (!sep || (pfin >= 2 && pfin % 2 == 0)) {
                        int score = std::popcount((unsigned)(mask & bmask_lo));
                        if (score > best_score) {
                            best_score = score;
                            best = backtrack(id);
                        }
                    }
                }
                // extend the current path by a neighbor
                for (int u : g.adj[v]) {
                    if (mask >> color[u] & 1) continue;
                    if (!inb[v] && !inb[u]) continue;
                    reach(idx(mask | 1 << color[u], u, i, l + 1, p), id, layer + 1);
                }
                // finish the path and start a new one
                if (inb[v] || l < 3) continue;
                int p2 = p + (sep && side[v] != i ? 1 : 0);
                if (p2 > bn) continue;
                for (int u = 0; u < n; u++) {
                    if (inb[u] || (mask >> color[u] & 1)) continue;
                    reach(idx(mask | 1 << color[u], u, side[u], 1, p2), id, layer + 1);
                }
            }
        }
    }
};

bool verify_cover(const graph &g, const vset &b, bool sep, const good_path_cover &c) {
    auto inb = to_mask(g.n, b);
    std::vector<char> used(g.n, 0);
    int totalv = 0;
    for (auto &pc : c.paths) {
        auto &s = pc.seq;
        if (s.size() < 3 || inb[s.front()] || inb[s.back()]) return false;
        for (size_t j = 0; j < s.size(); j++) {
            if (used[s[j]]) return false;
            used[s[j]] = 1;
            if (j && !g.has_edge(s[j - 1], s[j])) return false;
            if (j && !inb[s[j - 1]] && !inb[s[j]]) return false;
        }
        totalv += (int)s.size();
    }
    if (totalv > 3 * (int)b.size()) return false;
    if (sep) {
        std::vector<char> alive(g.n, 1);
        for (int v : b) alive[v] = 0;
        auto comps = connected_components(g, alive);
        if (comps.size() != 2) return false;
        auto c1 = to_mask(g.n, comps[0]);
        int crossing = 0;
        for (auto &pc : c.paths)
            if (c1[pc.seq.front()] != c1[pc.seq.back()]) crossing++;
        if (crossing < 2 || crossing % 2 != 0) return false;
    }
    return true;
}

// ---- separator reconstruction ---------------------------------------------

// joins paths sharing endpoints into one cycle; every endpoint vertex must be
// shared by exactly two paths
std::vector<int> stitch_cycle(const std::vector<std::vector<int>> &paths) {
    std::unordered_map<int, std::vector<std::pair<int, bool>>> at;  // v -> (path, front)
    for (int i = 0; i < (int)paths.size(); i++) {
        at[paths[i].front()].push_back({i, true});
        at[paths[i].back()].push_back({i, false});
    }
    for (auto &[v, occ] : at)
        if (occ.size() != 2)
            fail("InvariantViolated", "path endpoint " + std::to_string(v) +
                                          " shared by " + std::to_string(occ.size()) +
                                          " paths");
    std::vector<char> used(paths.size(), 0);
    std::vector<int> seq = paths[0];
    used[0] = 1;
    int start = seq.front();
    while (seq.back() != start) {
        int v = seq.back();
        int pi = -1;
        bool front = false;
        for (auto &[q, f] : at[v])
            if (!used[q]) {
                pi = q;
                front = f;
            }
        if (pi < 0) fail("InvariantViolated", "path stitching stalled");
        used[pi] = 1;
        auto pa = paths[pi];
        if (!front) std::reverse(pa.begin(), pa.end());
        seq.insert(seq.end(), pa.begin() + 1, pa.end());
    }
    seq.pop_back();  // closing vertex equals the start
    for (char u : used)
        if (!u) fail("InvariantViolated", "path stitching left a path unused");
    return seq;
}

}  // namespace

// ---- many_paths_cover ------------------------------------------------------

std::vector<certificate> many_paths_cover(const graph &g,
                                          const std::vector<std::pair<int, int>> &pairs,
                                          int p) {
    int n = g.n;
    int r = (int)pairs.size();
    if (p < 1 || r < 1 || r > p)
        fail("PreconditionViolated", "need 1 <= |pairs| <= p");
    std::vector<char> endp(n, 0);
    bool some_proper = false;
    for (auto &[s, t] : pairs) {
        if (s < 0 || s >= n || t < 0 || t >= n)
            fail("PreconditionViolated", "pair endpoint out of range");
        if (s != t) some_proper = true;
        if (endp[s] || (s != t && endp[t]))
            fail("PreconditionViolated", "pair endpoints must be distinct across pairs");
        endp[s] = endp[t] = 1;
    }
    if (!some_proper)
        fail("PreconditionViolated", "at least one pair must have distinct endpoints");

    std::vector<char> used = endp;
    std::vector<std::vector<int>> paths(r);
    for (int i = 0; i < r; i++) {
        auto [s, t] = pairs[i];
        if (s == t)
            paths[i] = {s};
        else if (g.has_edge(s, t))
            paths[i] = {s, t};
    }
    for (int i = 0; i < r; i++) {
        auto [s, t] = pairs[i];
        if (!paths[i].empty()) continue;
        int w = -1;
        for (int u : g.adj[s])
            if (!used[u] && g.has_edge(u, t)) {
                w = u;
                break;
            }
        if (w < 0) fail("GuaranteeViolated", "no free common neighbor to connect a pair");
        used[w] = 1;
        paths[i] = {s, w, t};
    }
    std::vector<int> uncovered;
    for (int v = 0; v < n; v++)
        if (!used[v]) uncovered.push_back(v);
    while (!uncovered.empty()) {
        bool done = false;
        for (size_t ui = 0; ui < uncovered.size() && !done; ui++) {
            int v = uncovered[ui];
            for (auto &pa : paths) {
                if (pa.size() < 2) continue;
                for (size_t j = 0; j + 1 < pa.size(); j++)
                    if (g.has_edge(v, pa[j]) && g.has_edge(v, pa[j + 1])) {
                        pa.insert(pa.begin() + j + 1, v);
                        uncovered.erase(uncovered.begin() + ui);
                        done = true;
                        break;
                    }
                if (done) break;
            }
        }
        if (!done) fail("GuaranteeViolated", "absorption stalled with vertices uncovered");
    }
    std::vector<certificate> out;
    for (auto &pa : paths) out.push_back(certificate::make_path(pa));
    return out;
}

// ---- good_path_cover_search ------------------------------------------------

std::optional<good_path_cover> good_path_cover_search(const graph &g, const vset &b,
                                                      bool separator_mode,
                                                      const coloring_source &src) {
    vset bs = normalize_set(b);
    int bn = (int)bs.size();
    if (bn == 0) {
        if (separator_mode) return std::nullopt;
        return good_path_cover{};
    }
    cover_dp dp(g, bs, separator_mode);
    int best_score = separator_mode ? -1 : 0;
    good_path_cover best;  // the empty cover (admissible in non-separator mode)

    std::vector<int> bidx(g.n, -1);
    for (int j = 0; j < bn; j++) bidx[bs[j]] = j;
    auto colored = [&](const std::vector<int> &raw) {
        std::vector<int> color(g.n);
        for (int v = 0; v < g.n; v++) color[v] = bidx[v] >= 0 ? bidx[v] : bn + raw[v];
        return color;
    };

    if (src.mode == coloring_source::deterministic) {
        if (g.n - bn > 2 * bn)
            fail("UnsupportedScale",
                 "deterministic mode needs n - |b| <= 2|b| (injective coloring)");
        std::vector<int> raw(g.n, 0);
        int next = 0;
        for (int v = 0; v < g.n; v++)
            if (bidx[v] < 0) raw[v] = next++;
        dp.run(colored(raw), best_score, best);
    } else {
        long long trials =
            src.trials > 0 ? src.trials : trial_count(std::exp(2.0 * bn));
        for (long long trial = 0; trial < trials && best_score < bn; trial++)
            dp.run(colored(draw_coloring(g.n, 2 * bn, src.seed, trial)), best_score, best);
    }
    if (best_score < 0) return std::nullopt;
    if (!verify_cover(g, bs, separator_mode, best))
        fail("InvariantViolated", "DP produced an invalid path cover");
    return best;
}

// ---- separator_solve -------------------------------------------------------

certificate separator_solve(const graph &g, const vset &b, const coloring_source &src) {
    if (!is_two_connected(g)) fail("PreconditionViolated", "graph must be 2-connected");
    vset bs = normalize_set(b);
    int n = g.n;
    int delta = min_degree_outside(g, bs);
    std::vector<char> alive(n, 1);
    for (int v : bs) alive[v] = 0;
    auto comps = connected_components(g, alive);
    if (comps.size() < 2)
        fail("PreconditionViolated", "removing b must disconnect the graph");
    int k = std::max((int)bs.size(), std::max(0, (n - 2 * delta + 1) / 2));
    if (n <= 12 * k) return exact_longest(g);
    if (comps.size() != 2)
        fail("InvariantViolated", "three residual components despite the degree bound");

    auto cover = good_path_cover_search(g, bs, true, src);
    if (!cover) fail("GuaranteeViolated", "no admissible separator path cover found");

    auto c1 = to_mask(n, comps[0]);
    std::vector<std::vector<int>> crossing, in1, in2;
    for (auto &pc : cover->paths) {
        auto s = pc.seq;
        bool f1 = c1[s.front()], b1 = c1[s.back()];
        if (f1 && b1)
            in1.push_back(s);
        else if (!f1 && !b1)
            in2.push_back(s);
        else {
            if (!f1) std::reverse(s.begin(), s.end());  // orient component-0 end first
            crossing.push_back(s);
        }
    }
    int a = (int)crossing.size();
    if (a < 2 || a % 2 != 0)
        fail("InvariantViolated", "crossing path count must be even and >= 2");

    // ordered cover: crossing, component-0 internal, component-1 internal
    std::vector<std::vector<int>> ordered = crossing;
    ordered.insert(ordered.end(), in1.begin(), in1.end());
    ordered.insert(ordered.end(), in2.begin(), in2.end());
    int bcnt = a + (int)in1.size(), rcnt = (int)ordered.size();
    auto sv = [&](int i) { return ordered[i - 1].front(); };  // 1-based endpoints
    auto tv = [&](int i) { return ordered[i - 1].back(); };

    vset interior;
    for (auto &pa : ordered)
        for (size_t j = 1; j + 1 < pa.size(); j++) interior.push_back(pa[j]);
    interior = normalize_set(interior);

    // shifted endpoint pairings on the two sides
    std::vector<std::pair<int, int>> t1, t2;
    if (bcnt == a) {
        for (int i = 1; i <= a - 1; i += 2) t1.push_back({sv(i), sv(i + 1)});
    } else {
        for (int i = 1; i < a / 2; i++) t1.push_back({sv(2 * i - 1), sv(2 * i)});
        t1.push_back({sv(a - 1), sv(a + 1)});
        for (int j = a + 1; j < bcnt; j++) t1.push_back({tv(j), sv(j + 1)});
        t1.push_back({tv(bcnt), sv(a)});
    }
    if (bcnt == rcnt) {
        for (int i = 2; i + 1 <= a - 1; i += 2) t2.push_back({tv(i), tv(i + 1)});
        t2.push_back({tv(1), tv(a)});
    } else {
        for (int i = 1; i < a / 2; i++) t2.push_back({tv(2 * i), tv(2 * i + 1)});
        t2.push_back({tv(a), sv(bcnt + 1)});
        for (int j = bcnt + 1; j < rcnt; j++) t2.push_back({tv(j), sv(j + 1)});
        t2.push_back({tv(1), tv(rcnt)});
    }

    auto span_side = [&](const vset &comp, const std::vector<std::pair<int, int>> &pairs) {
        vset keep = set_minus(comp, interior);
        std::vector<int> to_orig;
        graph h = induced_subgraph(g, keep, &to_orig);
        std::vector<int> o2n(n, -1);
        for (int i = 0; i < (int)to_orig.size(); i++) o2n[to_orig[i]] = i;
        std::vector<std::pair<int, int>> local;
        for (auto &[x, y] : pairs) {
            if (o2n[x] < 0 || o2n[y] < 0)
                fail("InvariantViolated", "pairing endpoint missing from the side graph");
            local.push_back({o2n[x], o2n[y]});
        }
        int dh = h.n;
        for (int v = 0; v < h.n; v++) dh = std::min(dh, h.degree(v));
        int pp = std::max((int)local.size(), h.n - dh);
        auto qs = many_paths_cover(h, local, pp);
        std::vector<std::vector<int>> out;
        for (auto &q : qs) {
            std::vector<int> m;
            for (int v : q.seq) m.push_back(to_orig[v]);
            out.push_back(m);
        }
        return out;
    };
    auto all = ordered;
    for (auto &q : span_side(comps[0], t1)) all.push_back(q);
    for (auto &q : span_side(comps[1], t2)) all.push_back(q);

    certificate cyc = certificate::make_cycle(stitch_cycle(all));
    std::string why;
    if (!verify_certificate(g, cyc, &why))
        fail("InvariantViolated", "reconstructed separator cycle invalid: " + why);
    int want = n - ((int)bs.size() - (int)cover->covered_b.size());
    if (cyc.length() != want)
        fail("InvariantViolated", "separator cycle misses covered vertices");
    return cyc;
}

// ---- almost_ham_solve ------------------------------------------------------

namespace {

// longest cycle via the vertex-cover-regime solver, after padding b so the
// longest cycle length is expressible as 2*delta + k'
certificate vcad_handoff(const graph &g, const vset &bs, int k, const vset &cover) {
    int n = g.n;
    int delta0 = min_degree_outside(g, bs);
    auto inb = to_mask(n, bs);
    int vmin = -1;
    for (int v = 0; v < n && vmin < 0; v++) {
        if (inb[v]) continue;
        int d = 0;
        for (int u : g.adj[v])
            if (!inb[u]) d++;
        if (d == delta0) vmin = v;
    }
    vset pad;
    for (int u : g.adj[vmin]) {
        if (inb[u]) continue;
        pad.push_back(u);
        if ((int)pad.size() == 19 * k) break;
    }
    vset b2 = set_union(bs, pad);
    int delta2 = min_degree_outside(g, b2);
    vset s2 = set_union(normalize_set(cover), b2);
    int p2 = (int)s2.size() - delta2;
    if (p2 < 0) fail("InvariantViolated", "cover smaller than the residual degree");
    for (int kk = std::max(0, n - 2 * delta2); kk >= 0; kk--) {
        vcad_instance inst{g, b2, s2, p2, kk};
        if (auto c = solve_vcad(inst)) return *c;
    }
    fail("GuaranteeViolated", "cover-regime solver found no cycle at target zero");
}

// reinserts c into the cycle; on failure returns the blocking independent set
struct reinsert_result {
    std::vector<int> cyc;  // nonempty on success
    vset indep;
};

reinsert_result reinsert_vertex(const graph &g, const std::vector<int> &cyc, int c) {
    int m = (int)cyc.size();
    auto at = [&](int i) { return cyc[((i % m) + m) % m]; };
    for (int i = 0; i < m; i++)
        if (g.has_edge(c, at(i)) && g.has_edge(c, at(i + 1))) {
            std::vector<int> out(cyc.begin(), cyc.begin() + i + 1);
            out.push_back(c);
            out.insert(out.end(), cyc.begin() + i + 1, cyc.end());
            return {out, {}};
        }
    std::vector<int> gap_pos;  // single non-neighbors between two neighbors of c
    for (int i = 0; i < m; i++)
        if (!g.has_edge(c, at(i)) && g.has_edge(c, at(i - 1)) && g.has_edge(c, at(i + 1)))
            gap_pos.push_back(i);
    for (int pi : gap_pos)
        for (int pj : gap_pos) {
            if (pi == pj || !g.has_edge(at(pi), at(pj))) continue;
            // c, arc after pi, then the pj-pi chord, backward arc, back to c
            std::vector<int> out{c};
            for (int q = pi + 1; q % m != ((pj - 1 % m) + m) % m; q++) out.push_back(at(q));
            out.push_back(at(pj - 1));
            out.push_back(at(pj));
            out.push_back(at(pi));
            for (int q = pi - 1; ((q % m) + m) % m != (pj + 1) % m; q--) out.push_back(at(q));
            out.push_back(at(pj + 1));
            return {out, {}};
        }
    vset indep;
    for (int pi : gap_pos) indep.push_back(at(pi));
    return {{}, normalize_set(indep)};
}

}  // namespace

certificate almost_ham_solve(const graph &g, const vset &b, int k,
                             const coloring_source &src) {
    vset bs = normalize_set(b);
    int n = g.n;
    if ((int)bs.size() > k) fail("PreconditionViolated", "|b| must be at most k");
    if (!is_two_connected(g)) fail("PreconditionViolated", "graph must be 2-connected");
    int delta = min_degree_outside(g, bs);
    if (2 * delta < n - 2 * k)
        fail("PreconditionViolated", "residual minimum degree below n/2 - k");
    if (n <= 40 * k) return exact_longest(g);

    auto cover = good_path_cover_search(g, bs, false, src);
    if (!cover) fail("InvariantViolated", "non-separator cover search returned nothing");
    vset bprime = bs;
    for (auto &pc : cover->paths)
        for (int v : pc.seq) bprime.push_back(v);
    bprime = normalize_set(bprime);

    std::vector<char> alive(n, 1);
    for (int v : bprime) alive[v] = 0;
    if (connected_components(g, alive).size() >= 2) return separator_solve(g, bprime, src);
    std::vector<int> to_orig;
    vset rest;
    for (int v = 0; v < n; v++)
        if (alive[v]) rest.push_back(v);
    graph sub = induced_subgraph(g, rest, &to_orig);
    if (!is_two_connected(sub)) {
        auto bt = block_decomposition(sub);
        if (bt.cut_vertices.empty())
            fail("InvariantViolated", "residual graph disconnected without a cut vertex");
        return separator_solve(g, set_union(bprime, {to_orig[bt.cut_vertices.front()]}),
                               src);
    }
    int dsub = sub.n;
    for (int v = 0; v < sub.n; v++) dsub = std::min(dsub, sub.degree(v));
    if (3 * dsub < sub.n + 2)
        fail("GuaranteeViolated", "residual graph too sparse for the dichotomy");
    auto nw = nash_williams(sub);
    if (!nw.ham) {
        vset is_orig;
        for (int v : nw.independent) is_orig.push_back(to_orig[v]);
        is_orig = normalize_set(is_orig);
        vset s;
        for (int v = 0; v < n; v++)
            if (!set_contains(is_orig, v)) s.push_back(v);
        return vcad_handoff(g, bs, k, s);
    }
    std::vector<int> cyc;
    for (int v : nw.ham->seq) cyc.push_back(to_orig[v]);

    auto inb = to_mask(n, bs);
    for (auto &pc : cover->paths) {
        std::vector<int> pa = pc.seq;
        int s = pa.front(), t = pa.back();
        int m = (int)cyc.size();
        auto at = [&](int i) { return cyc[((i % m) + m) % m]; };
        std::vector<char> cs(n, 0), ct(n, 0);
        for (int v : cyc) {
            cs[v] = g.has_edge(s, v);
            ct[v] = g.has_edge(t, v);
        }
        auto splice = [&](int i, bool fwd) {
            // insert the path between positions i and i+1
            std::vector<int> out(cyc.begin(), cyc.begin() + i + 1);
            if (fwd)
                out.insert(out.end(), pa.begin(), pa.end());
            else
                out.insert(out.end(), pa.rbegin(), pa.rend());
            out.insert(out.end(), cyc.begin() + i + 1, cyc.end());
            cyc = out;
        };
        bool done = false;
        for (int i = 0; i < m && !done; i++) {
            int u = at(i), w = at(i + 1);
            if (cs[u] && ct[w]) {
                splice(i, true);
                done = true;
            } else if (ct[u] && cs[w]) {
                splice(i, false);
                done = true;
            }
        }
        if (done) continue;
        // distance-two insertion dropping a high-degree middle vertex
        for (int i = 0; i < m && !done; i++) {
            int u = at(i), c = at(i + 1), w = at(i + 2);
            if (inb[c]) continue;
            bool fwd = cs[u] && ct[w], rev = ct[u] && cs[w];
            if (!fwd && !rev) continue;
            std::vector<int> trimmed;
            for (int q = i + 2; q < i + 2 + m - 1; q++) trimmed.push_back(at(q));
            // trimmed starts at w and ends at u; close through the path
            std::vector<int> next = trimmed;
            if (fwd)
                next.insert(next.end(), pa.begin(), pa.end());
            else
                next.insert(next.end(), pa.rbegin(), pa.rend());
            auto back = reinsert_vertex(g, next, c);
            if (back.cyc.empty()) {
                vset cov;
                for (int v = 0; v < n; v++)
                    if (!set_contains(back.indep, v)) cov.push_back(v);
                return vcad_handoff(g, bs, k, cov);
            }
            cyc = back.cyc;
            done = true;
        }
        if (done) continue;
        // internal-chunk insertion or a small separator
        std::vector<int> pos(n, -1);
        for (int i = 0; i < m; i++) pos[cyc[i]] = i;
        vset is_set, it_set;
        for (int i = 0; i < m; i++) {
            int v = at(i);
            if (cs[v] && cs[at(i - 1)] && cs[at(i + 1)]) is_set.push_back(v);
            if (ct[v] && ct[at(i - 1)] && ct[at(i + 1)]) it_set.push_back(v);
        }
        for (int x : is_set) {
            if (done) break;
            for (int y : it_set) {
                if (x == y || !g.has_edge(x, y)) continue;
                int px = pos[x], py = pos[y];
                std::vector<int> out = pa;  // s .. t
                for (int q = py + 1; q % m != ((px - 1) % m + m) % m; q++) out.push_back(at(q));
                out.push_back(at(px - 1));
                out.push_back(x);
                out.push_back(y);
                for (int q = py - 1; ((q % m) + m) % m != (px + 1) % m; q--) out.push_back(at(q));
                out.push_back(at(px + 1));
                cyc = out;
                done = true;
                break;
            }
        }
        if (done) continue;
        vset isn = normalize_set(is_set), itn = normalize_set(it_set);
        vset chunk = set_union(isn, itn);
        vset bsep = bs;
        for (int v = 0; v < n; v++)
            if (!set_contains(chunk, v)) bsep.push_back(v);
        bsep = normalize_set(bsep);
        vset r1 = set_minus(isn, bs), r2 = set_minus(itn, bs);
        if (r1.empty() || r2.empty())
            fail("GuaranteeViolated", "internal chunk swallowed by the exception set");
        return separator_solve(g, bsep, src);
    }
    certificate out = certificate::make_cycle(cyc);
    std::string why;
    if (!verify_certificate(g, out, &why))
        fail("InvariantViolated", "insertion loop produced an invalid cycle: " + why);
    int want = n - ((int)bs.size() - (int)cover->covered_b.size());
    if (out.length() != want)
        fail("InvariantViolated", "final cycle does not cover everything it should");
    return out;
}
