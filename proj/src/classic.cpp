#include "classic.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace {

int min_degree(const graph &g) {
    int d = g.n;
    for (int v = 0; v < g.n; v++) d = std::min(d, g.degree(v));
    return d;
}

std::vector<char> path_mask(int n, const std::vector<int> &p) {
    std::vector<char> on(n, 0);
    for (int v : p) on[v] = 1;
    return on;
}

// grow a path at both ends until both endpoints have all neighbors on it
void maximalize(const graph &g, std::vector<int> &p, std::vector<char> &on) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u : g.adj[p.back()])
            if (!on[u]) {
                p.push_back(u);
                on[u] = 1;
                grew = true;
                break;
            }
        for (int u : g.adj[p.front()])
            if (!on[u]) {
                p.insert(p.begin(), u);
                on[u] = 1;
                grew = true;
                break;
            }
    }
}

// cycle on all of V(p) via the closing edge or a crossing pair
// (front ~ p[i+1] and back ~ p[i])
std::optional<certificate> close_crossing(const graph &g, const std::vector<int> &p) {
    int m = (int)p.size() - 1;
    if (m < 2) return std::nullopt;
    if (g.has_edge(p.front(), p.back())) return certificate::make_cycle(p);
    std::vector<char> nf(g.n, 0), nb(g.n, 0);
    for (int u : g.adj[p.front()]) nf[u] = 1;
    for (int u : g.adj[p.back()]) nb[u] = 1;
    for (int i = 0; i + 1 < m; i++) {
        if (nf[p[i + 1]] && nb[p[i]]) {
            std::vector<int> seq(p.begin(), p.begin() + i + 1);
            for (int j = m; j >= i + 1; j--) seq.push_back(p[j]);
            return certificate::make_cycle(seq);
        }
    }
    return std::nullopt;
}

// a cycle spanning z plus an adjacent outside vertex reopens into a path one
// vertex longer
std::optional<std::vector<int>> reopen(const graph &g, const std::vector<int> &z) {
    std::vector<char> on = path_mask(g.n, z);
    int L = (int)z.size();
    for (int pos = 0; pos < L; pos++)
        for (int x : g.adj[z[pos]])
            if (!on[x]) {
                std::vector<int> p{x};
                for (int j = 0; j < L; j++) p.push_back(z[(pos - j + L) % L]);
                return p;
            }
    return std::nullopt;
}

// farthest-neighbor cycle at the front endpoint of a maximal path
certificate end_cycle(const graph &g, const std::vector<int> &p) {
    std::vector<char> nf(g.n, 0);
    for (int u : g.adj[p.front()]) nf[u] = 1;
    int far = -1;
    for (int i = 1; i < (int)p.size(); i++)
        if (nf[p[i]]) far = i;
    if (far < 2) fail("InvariantViolated", "maximal path endpoint admits no cycle");
    return certificate::make_cycle(std::vector<int>(p.begin(), p.begin() + far + 1));
}

// Rotations keep the vertex set and one anchored endpoint; look for a derived
// path that extends past its new endpoint or admits a crossing. Replaces
// `path` and returns true on success.
bool rotate_search(const graph &g, std::vector<int> &path) {
    for (int side = 0; side < 2; side++) {
        std::vector<int> base = path;
        if (side) std::reverse(base.begin(), base.end());
        std::vector<char> on = path_mask(g.n, base);
        std::vector<char> seen_end(g.n, 0);
        seen_end[base.back()] = 1;
        std::deque<std::vector<int>> queue{base};
        while (!queue.empty()) {
            std::vector<int> p = std::move(queue.front());
            queue.pop_front();
            int m = (int)p.size() - 1;
            std::vector<int> pos(g.n, -1);
            for (int i = 0; i <= m; i++) pos[p[i]] = i;
            for (int u : g.adj[p[m]]) {
                int i = pos[u];
                if (i < 0 || i >= m - 1) continue;
                std::vector<int> q(p.begin(), p.begin() + i + 1);
                for (int j = m; j >= i + 1; j--) q.push_back(p[j]);
                int e = q.back();
                if (seen_end[e]) continue;
                seen_end[e] = 1;
                for (int w : g.adj[e])
                    if (!on[w]) {
                        path = q;
                        return true;
                    }
                if (close_crossing(g, q)) {
                    path = q;
                    return true;
                }
                queue.push_back(std::move(q));
            }
        }
    }
    return false;
}

// splice detours through outside vertices into cycle edges until the target
// length is reached or no edge admits one
certificate grow_cycle(const graph &g, certificate cyc, int target) {
    while (cyc.length() < target && !cyc.seq.empty()) {
        std::vector<int> &c = cyc.seq;
        int L = (int)c.size();
        std::vector<char> on = path_mask(g.n, c);
        bool improved = false;
        for (int i = 0; i < L && !improved; i++) {
            int a = c[i], b = c[(i + 1) % L];
            std::vector<int> par(g.n, -1);
            std::deque<int> bfs;
            for (int u : g.adj[a])
                if (!on[u]) {
                    par[u] = a;
                    bfs.push_back(u);
                }
            int hit = -1;
            while (!bfs.empty() && hit < 0) {
                int v = bfs.front();
                bfs.pop_front();
                for (int u : g.adj[v]) {
                    if (u == b) {
                        hit = v;
                        break;
                    }
                    if (!on[u] && par[u] < 0) {
                        par[u] = v;
                        bfs.push_back(u);
                    }
                }
            }
            if (hit < 0) continue;
            std::vector<int> detour;
            for (int v = hit; v != a; v = par[v]) detour.push_back(v);
            std::reverse(detour.begin(), detour.end());
            std::vector<int> seq(c.begin(), c.begin() + i + 1);
            for (int v : detour) seq.push_back(v);
            for (int j = i + 1; j < L; j++) seq.push_back(c[j]);
            cyc = certificate::make_cycle(seq);
            improved = true;
        }
        if (!improved) break;
    }
    return cyc;
}

// same splicing between consecutive path vertices (endpoints fixed)
std::vector<int> grow_path(const graph &g, std::vector<int> p, int target) {
    while ((int)p.size() - 1 < target) {
        std::vector<char> on = path_mask(g.n, p);
        bool improved = false;
        for (int i = 0; i + 1 < (int)p.size() && !improved; i++) {
            int a = p[i], b = p[i + 1];
            std::vector<int> par(g.n, -1);
            std::deque<int> bfs;
            for (int u : g.adj[a])
                if (!on[u]) {
                    par[u] = a;
                    bfs.push_back(u);
                }
            int hit = -1;
            while (!bfs.empty() && hit < 0) {
                int v = bfs.front();
                bfs.pop_front();
                for (int u : g.adj[v]) {
                    if (u == b) {
                        hit = v;
                        break;
                    }
                    if (!on[u] && par[u] < 0) {
                        par[u] = v;
                        bfs.push_back(u);
                    }
                }
            }
            if (hit < 0) continue;
            std::vector<int> detour;
            for (int v = hit; v != a; v = par[v]) detour.push_back(v);
            std::reverse(detour.begin(), detour.end());
            std::vector<int> seq(p.begin(), p.begin() + i + 1);
            for (int v : detour) seq.push_back(v);
            seq.insert(seq.end(), p.begin() + i + 1, p.end());
            p = seq;
            improved = true;
        }
        if (!improved) break;
    }
    return p;
}

std::vector<int> bfs_path(const graph &g, int s, int t) {
    std::vector<int> par(g.n, -1);
    par[s] = s;
    std::deque<int> q{s};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == t) break;
        for (int u : g.adj[v])
            if (par[u] < 0) {
                par[u] = v;
                q.push_back(u);
            }
    }
    if (par[t] < 0) return {};
    std::vector<int> seq;
    for (int v = t; v != s; v = par[v]) seq.push_back(v);
    seq.push_back(s);
    std::reverse(seq.begin(), seq.end());
    return seq;
}

vset validated_b(const graph &g, const vset &b_in) {
    vset b = normalize_set(b_in);
    for (int v : b)
        if (v < 0 || v >= g.n) fail("PreconditionViolated", "exception set vertex out of range");
    return b;
}

// path along the cycle from a to b taking the direction with more edges
std::vector<int> longer_arc(const std::vector<int> &cyc, int a, int b) {
    int L = (int)cyc.size(), ia = -1, ib = -1;
    for (int i = 0; i < L; i++) {
        if (cyc[i] == a) ia = i;
        if (cyc[i] == b) ib = i;
    }
    if (ia < 0 || ib < 0 || ia == ib) fail("InvariantViolated", "arc endpoints not on cycle");
    int fwd = (ib - ia + L) % L;
    std::vector<int> seq;
    if (fwd >= L - fwd)
        for (int j = 0; j <= fwd; j++) seq.push_back(cyc[(ia + j) % L]);
    else
        for (int j = 0; j <= L - fwd; j++) seq.push_back(cyc[(ia - j + L) % L]);
    return seq;
}

// two vertex-disjoint paths from s and t to distinct vertices of `target`,
// trivial when an endpoint already lies in the target set
std::pair<std::vector<int>, std::vector<int>> attach_two(const graph &g, int s, int t,
                                                         const vset &target) {
    bool si = set_contains(target, s), ti = set_contains(target, t);
    if (si && ti) return {{s}, {t}};
    if (si || ti) {
        int in = si ? s : t, out = si ? t : s;
        std::vector<char> forb(g.n, 0);
        forb[in] = 1;
        auto ps = disjoint_paths(g, {out}, set_minus(target, {in}), 1, forb);
        if (ps.empty()) fail("InvariantViolated", "attachment path missing in a 2-connected graph");
        if (si) return {{s}, ps[0].seq};
        return {ps[0].seq, {t}};
    }
    auto ps = disjoint_paths(g, normalize_set({s, t}), target, 2);
    if (ps.size() < 2) fail("InvariantViolated", "two attachment paths missing in a 2-connected graph");
    if (ps[0].seq.front() == s) return {ps[0].seq, ps[1].seq};
    return {ps[1].seq, ps[0].seq};
}

certificate cycle_at_least_4(const graph &g) {
    certificate c = cycle_min_degree_plus_one(g);
    if (c.length() >= 4) return c;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++) {
            if (g.has_edge(u, v)) continue;
            auto ps = disjoint_paths(g, {u}, {v}, 2);
            if (ps.size() < 2) fail("InvariantViolated", "2-connected graph lost a disjoint pair");
            std::vector<int> seq = ps[0].seq;
            for (int i = (int)ps[1].seq.size() - 2; i >= 1; i--) seq.push_back(ps[1].seq[i]);
            return certificate::make_cycle(seq);
        }
    if (g.n >= 4) return certificate::make_cycle({0, 1, 2, 3});  // complete graph
    fail("InvariantViolated", "no cycle of length 4 available");
}

}  // namespace

certificate cycle_min_degree_plus_one(const graph &g) {
    if (g.n == 0 || min_degree(g) < 2) fail("DegreeTooSmall", "minimum degree below 2");
    std::vector<int> path{0};
    auto on = path_mask(g.n, path);
    maximalize(g, path, on);
    return end_cycle(g, path);
}

certificate dirac_two_delta_cycle(const graph &g) {
    if (!is_two_connected(g)) fail("NotTwoConnected", "input must be 2-connected");
    int target = std::min(g.n, 2 * min_degree(g));
    std::vector<int> path{0};
    auto on = path_mask(g.n, path);
    certificate best;
    auto keep = [&](const certificate &c) {
        if (c.length() > best.length()) best = c;
    };
    int guard = 4 * g.n + 16;
    while (guard-- > 0) {
        maximalize(g, path, on);
        if (auto z = close_crossing(g, path)) {
            keep(*z);
            if (z->length() >= target) return *z;
            auto re = reopen(g, z->seq);
            if (!re) fail("InvariantViolated", "short spanning cycle with no attachment");
            path = *re;
            on = path_mask(g.n, path);
            continue;
        }
        keep(end_cycle(g, path));
        std::vector<int> rev(path.rbegin(), path.rend());
        keep(end_cycle(g, rev));
        if (best.length() >= target) return best;
        if (rotate_search(g, path)) {
            on = path_mask(g.n, path);
            continue;
        }
        break;
    }
    best = grow_cycle(g, best, target);
    if (best.length() >= target) return best;
    if (g.n <= 20) {
        certificate w;
        if (oracle_cycle_at_least(g, target, &w)) return w;
        fail("InvariantViolated", "exhaustive search contradicts the degree bound");
    }
    fail("GuaranteeViolated", "cycle search stalled below min(n, 2*min-degree)");
}

certificate egl_long_st_path(const graph &g, int s, int t, int d) {
    if (s == t) fail("PreconditionViolated", "distinct endpoints required");
    if (!is_two_connected(g)) fail("NotTwoConnected", "input must be 2-connected");
    if (g.n < 4) fail("PreconditionViolated", "need at least 4 vertices");
    std::vector<int> p = bfs_path(g, s, t);
    if (p.empty()) fail("InvariantViolated", "endpoints disconnected in a 2-connected graph");
    p = grow_path(g, p, d);
    if ((int)p.size() - 1 >= d) return certificate::make_path(p);
    if (g.n <= 20) {
        certificate w;
        if (oracle_path_at_least(g, s, t, d, &w)) return w;
        fail("GuaranteeViolated", "input violates the degree guarantee");
    }
    fail("GuaranteeViolated", "path search stalled below the degree bound");
}

certificate generalized_dirac_cycle(const graph &g, const vset &b_in) {
    if (!is_two_connected(g)) fail("NotTwoConnected", "input must be 2-connected");
    vset b = validated_b(g, b_in);
    int r = g.n - (int)b.size();
    int delta = r > 0 ? min_degree_outside(g, b) : 0;
    int bound = std::min(r, 2 * delta);
    if (bound <= 3) return cycle_min_degree_plus_one(g);
    if (bound == 4) return cycle_at_least_4(g);
    // bound >= 5, hence delta >= 3 and every residual component has >= 4 vertices
    vset cur_b = b;
    int cur_delta = delta;
    std::vector<char> alive(g.n, 1);
    for (int v : cur_b) alive[v] = 0;
    auto comps = connected_components(g, alive);
    // a 2-connected component of size >= 2*delta (or the only component, of
    // any size) carries the whole bound by the crossing/rotation engine
    for (auto &comp : comps) {
        if (comps.size() > 1 && (int)comp.size() < 2 * delta) continue;
        std::vector<int> to_orig;
        graph sub = induced_subgraph(g, comp, &to_orig);
        if (!is_two_connected(sub)) continue;
        certificate c = dirac_two_delta_cycle(sub);
        for (int &v : c.seq) v = to_orig[v];
        return c;
    }
    if (comps.size() == 1) {
        // single separable component: move one of its cut vertices into b,
        // which splits it and lowers the degree floor by at most one
        std::vector<int> to_orig;
        graph sub = induced_subgraph(g, comps[0], &to_orig);
        block_tree bt = block_decomposition(sub);
        if (bt.cut_vertices.empty()) fail("InvariantViolated", "separable component without cut vertex");
        int cut = to_orig[bt.cut_vertices[0]];
        cur_b = set_union(cur_b, {cut});
        alive[cut] = 0;
        comps = connected_components(g, alive);
        cur_delta = min_degree_outside(g, cur_b);
        if (comps.size() < 2 || cur_delta < 2)
            fail("InvariantViolated", "cut vertex did not split the component as expected");
    }
    // two components; route a long path through a 2-connected span of each and
    // join them with two vertex-disjoint connectors
    auto pick_span = [&](const vset &comp) -> vset {
        std::vector<int> to_orig;
        graph sub = induced_subgraph(g, comp, &to_orig);
        if (is_two_connected(sub)) return comp;
        block_tree bt = block_decomposition(sub);
        for (size_t i = 0; i < bt.blocks.size(); i++)
            if (bt.is_leaf(i) && bt.blocks[i].size() >= 3) {
                vset out;
                for (int v : bt.blocks[i]) out.push_back(to_orig[v]);
                return normalize_set(out);
            }
        fail("InvariantViolated", "no usable leaf block despite the degree floor");
    };
    vset s1 = pick_span(comps[0]), s2 = pick_span(comps[1]);
    auto menger = disjoint_paths(g, s1, s2, 2);
    if (menger.size() < 2) fail("InvariantViolated", "missing disjoint connectors in a 2-connected graph");
    for (auto &mp : menger)
        if (!set_contains(s1, mp.seq.front()) || !set_contains(s2, mp.seq.back()))
            fail("InvariantViolated", "connector orientation broken");
    int u1 = menger[0].seq.front(), u2 = menger[0].seq.back();
    int v1 = menger[1].seq.front(), v2 = menger[1].seq.back();
    auto inner = [&](const vset &span, int from, int to) -> std::vector<int> {
        std::vector<int> to_orig;
        graph sub = induced_subgraph(g, span, &to_orig);
        std::vector<int> inv(g.n, -1);
        for (int i = 0; i < sub.n; i++) inv[to_orig[i]] = i;
        if (sub.n == 3) {  // triangle span; the degree floor is <= 2 here
            int third = -1;
            for (int v : span)
                if (v != from && v != to) third = v;
            return {from, third, to};
        }
        certificate c = egl_long_st_path(sub, inv[from], inv[to], cur_delta);
        std::vector<int> seq;
        for (int v : c.seq) seq.push_back(to_orig[v]);
        return seq;
    };
    std::vector<int> in1 = inner(s1, u1, v1), in2 = inner(s2, u2, v2);
    std::vector<int> seq = in1;  // u1 .. v1
    for (size_t i = 1; i < menger[1].seq.size(); i++) seq.push_back(menger[1].seq[i]);  // -> v2
    for (int i = (int)in2.size() - 2; i >= 0; i--) seq.push_back(in2[i]);               // -> u2
    for (int i = (int)menger[0].seq.size() - 2; i >= 1; i--) seq.push_back(menger[0].seq[i]);
    certificate out = certificate::make_cycle(seq);
    std::string why;
    if (!verify_certificate(g, out, &why)) fail("InvariantViolated", "assembled cycle invalid: " + why);
    if (out.length() < bound) fail("InvariantViolated", "assembled cycle below the bound");
    return out;
}

certificate generalized_dirac_path(const graph &g, const vset &b_in) {
    if (g.n == 0) fail("PreconditionViolated", "empty graph");
    if (!is_connected(g)) fail("Disconnected", "input must be connected");
    vset b = validated_b(g, b_in);
    if (g.n == 1) return certificate::make_path({0});
    if (g.n == 2) return certificate::make_path({0, 1});
    if ((int)b.size() >= g.n) return certificate::make_path({0});
    vset all(g.n);
    std::iota(all.begin(), all.end(), 0);
    graph g2 = add_vertex(g, all);  // universal apex, id g.n
    certificate cyc = generalized_dirac_cycle(g2, b);
    std::vector<int> seq;
    auto it = std::find(cyc.seq.begin(), cyc.seq.end(), g.n);
    if (it == cyc.seq.end()) {
        seq = cyc.seq;  // drop the implied closing edge
    } else {
        int pos = (int)(it - cyc.seq.begin()), L = (int)cyc.seq.size();
        for (int j = 1; j < L; j++) seq.push_back(cyc.seq[(pos + j) % L]);
    }
    certificate out = certificate::make_path(seq);
    std::string why;
    if (!verify_certificate(g, out, &why)) fail("InvariantViolated", "apex surgery broke the path: " + why);
    int delta = min_degree_outside(g, b);
    if (out.length() < std::min(g.n - (int)b.size() - 1, 2 * delta))
        fail("InvariantViolated", "apex surgery landed below the bound");
    return out;
}

certificate generalized_eg_st_path(const graph &g, const vset &b_in, int s, int t) {
    if (!is_two_connected(g)) fail("NotTwoConnected", "input must be 2-connected");
    if (s < 0 || t < 0 || s >= g.n || t >= g.n || s == t)
        fail("PreconditionViolated", "need two distinct endpoints in range");
    vset b = validated_b(g, b_in);
    int r = g.n - (int)b.size();
    if (r == 0) fail("EmptyResidual", "exception set covers every vertex");
    int delta = min_degree_outside(g, b);
    auto finish = [&](std::vector<int> seq) {
        if (seq.front() != s) std::reverse(seq.begin(), seq.end());
        certificate c = certificate::make_path(seq);
        std::string why;
        if (!verify_certificate(g, c, &why)) fail("InvariantViolated", "assembled path invalid: " + why);
        if (c.seq.front() != s || c.seq.back() != t || c.length() < delta)
            fail("InvariantViolated", "assembled path misses the guarantee");
        return c;
    };
    if (delta <= 1) return finish(bfs_path(g, s, t));
    if (r >= 2 * delta) {
        // hook both endpoints onto a long cycle and take the longer arc
        certificate cyc = generalized_dirac_cycle(g, b);  // length >= 2*delta
        vset cs = normalize_set(cyc.seq);
        auto [sp, tp] = attach_two(g, s, t, cs);
        auto arc = longer_arc(cyc.seq, sp.back(), tp.back());
        std::vector<int> seq = sp;
        for (size_t i = 1; i < arc.size(); i++) seq.push_back(arc[i]);
        for (int i = (int)tp.size() - 2; i >= 0; i--) seq.push_back(tp[i]);
        return finish(seq);
    }
    // dense residual: delta >= (r+1)/2, so g - b is Hamiltonian-dense
    if (r <= 3) {  // delta <= 2: the longer of two internally disjoint routes
        auto ps = disjoint_paths(g, {s}, {t}, 2);
        if (ps.size() < 2) fail("InvariantViolated", "missing disjoint endpoint routes");
        return finish(ps[0].length() >= ps[1].length() ? ps[0].seq : ps[1].seq);
    }
    vset resid;
    {
        auto mask = to_mask(g.n, b);
        for (int v = 0; v < g.n; v++)
            if (!mask[v]) resid.push_back(v);
    }
    auto [sp, tp] = attach_two(g, s, t, resid);
    std::vector<int> to_orig;
    graph sub = induced_subgraph(g, resid, &to_orig);
    if (!is_two_connected(sub)) fail("InvariantViolated", "dense residual must be 2-connected");
    std::vector<int> inv(g.n, -1);
    for (int i = 0; i < sub.n; i++) inv[to_orig[i]] = i;
    certificate innerp = egl_long_st_path(sub, inv[sp.back()], inv[tp.back()], delta);
    std::vector<int> seq = sp;
    for (size_t i = 1; i < innerp.seq.size(); i++) seq.push_back(to_orig[innerp.seq[i]]);
    for (int i = (int)tp.size() - 2; i >= 0; i--) seq.push_back(tp[i]);
    return finish(seq);
}

closure_trace bondy_chvatal_closure(const graph &g) {
    closure_trace tr;
    tr.base = g;
    graph cur = g;
    bool again = true;
    while (again) {
        again = false;
        for (int u = 0; u < g.n && !again; u++)
            for (int v = u + 1; v < g.n && !again; v++) {
                if (cur.has_edge(u, v)) continue;
                int du = cur.degree(u), dv = cur.degree(v);
                if (du + dv < g.n) continue;
                tr.added.push_back({u, v, du, dv});
                cur.adj[u].insert(std::lower_bound(cur.adj[u].begin(), cur.adj[u].end(), v), v);
                cur.adj[v].insert(std::lower_bound(cur.adj[v].begin(), cur.adj[v].end(), u), u);
                cur.m++;
                again = true;
            }
    }
    tr.closed = cur;
    return tr;
}

std::optional<certificate> bondy_chvatal_lift(const graph &g) {
    if (g.n < 3) fail("PreconditionViolated", "need at least 3 vertices");
    int n = g.n;
    closure_trace tr = bondy_chvatal_closure(g);
    if (tr.closed.m != (long long)n * (n - 1) / 2) return std::nullopt;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);
    for (auto [u, v] : tr.closed.edges()) {
        adj[u][v] = adj[v][u] = 1;
        deg[u]++;
        deg[v]++;
    }
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    for (int k = (int)tr.added.size() - 1; k >= 0; k--) {
        auto &ad = tr.added[k];
        adj[ad.u][ad.v] = adj[ad.v][ad.u] = 0;
        deg[ad.u]--;
        deg[ad.v]--;
        if (deg[ad.u] != ad.du || deg[ad.v] != ad.dv || ad.du + ad.dv < n)
            fail("InvariantViolated", "closure degree witness broken");
        int iu = -1;
        for (int i = 0; i < n; i++)
            if (cyc[i] == ad.u) iu = i;
        bool fwd = cyc[(iu + 1) % n] == ad.v, bwd = cyc[(iu - 1 + n) % n] == ad.v;
        if (!fwd && !bwd) continue;  // cycle does not use the removed edge
        // open into a path u = x0 ... x_{n-1} = v, then reclose on a crossing
        // pair, which the degree sum forces to exist
        std::vector<int> x(n);
        for (int j = 0; j < n; j++) x[j] = fwd ? cyc[(iu - j + n) % n] : cyc[(iu + j) % n];
        int hit = -1;
        for (int i = 1; i <= n - 3 && hit < 0; i++)
            if (adj[x[0]][x[i + 1]] && adj[x[n - 1]][x[i]]) hit = i;
        if (hit < 0) fail("InvariantViolated", "degree-sum crossing missing");
        std::vector<int> nc(x.begin(), x.begin() + hit + 1);
        for (int j = n - 1; j >= hit + 1; j--) nc.push_back(x[j]);
        cyc = nc;
    }
    certificate out = certificate::make_cycle(cyc);
    std::string why;
    if (!verify_certificate(g, out, &why)) fail("InvariantViolated", "lifted cycle invalid: " + why);
    return out;
}

namespace {

std::optional<vset> find_independent(const graph &g, int want) {
    int n = g.n;
    if (want <= 0) return vset{};
    std::vector<uint32_t> nb(n, 0);
    for (int v = 0; v < n; v++)
        for (int u : g.adj[v]) nb[v] |= uint32_t(1) << u;
    vset pick;
    std::function<bool(int, uint32_t)> rec = [&](int i, uint32_t blocked) -> bool {
        if ((int)pick.size() == want) return true;
        if (n - i < want - (int)pick.size()) return false;
        if (!(blocked >> i & 1)) {
            pick.push_back(i);
            if (rec(i + 1, blocked | nb[i])) return true;
            pick.pop_back();
        }
        return rec(i + 1, blocked);
    };
    if (rec(0, 0)) return pick;
    return std::nullopt;
}

}  // namespace

nw_outcome nash_williams(const graph &g) {
    if (!is_two_connected(g)) fail("NotTwoConnected", "input must be 2-connected");
    int delta = min_degree(g);
    if (3 * delta < g.n + 2) fail("PreconditionViolated", "need 3*min-degree >= n+2");
    nw_outcome out;
    if (g.n <= 20) {
        if (auto is = find_independent(g, delta + 1)) {
            out.independent = *is;
            return out;
        }
        certificate w;
        if (oracle_cycle_at_least(g, g.n, &w)) {
            out.ham = w;
            return out;
        }
        fail("GuaranteeViolated", "neither outcome found exhaustively");
    }
    if (auto h = bondy_chvatal_lift(g)) {
        out.ham = *h;
        return out;
    }
    certificate cyc = grow_cycle(g, dirac_two_delta_cycle(g), g.n);
    for (int rounds = 0; rounds <= g.n + 1; rounds++) {
        if (cyc.length() == g.n) {
            out.ham = cyc;
            return out;
        }
        auto &c = cyc.seq;
        int L = (int)c.size();
        std::vector<int> pos(g.n, -1);
        for (int i = 0; i < L; i++) pos[c[i]] = i;
        bool moved = false;
        for (int v = 0; v < g.n && !moved; v++) {
            if (pos[v] >= 0) continue;
            std::vector<char> isnb(g.n, 0);
            std::vector<int> nbrpos;
            for (int u : g.adj[v]) {
                isnb[u] = 1;
                if (pos[u] >= 0) nbrpos.push_back(pos[u]);
            }
            std::sort(nbrpos.begin(), nbrpos.end());
            // insertion between consecutive cycle neighbors
            for (int p : nbrpos) {
                if (!isnb[c[(p + 1) % L]]) continue;
                std::vector<int> seq(c.begin(), c.begin() + p + 1);
                seq.push_back(v);
                seq.insert(seq.end(), c.begin() + p + 1, c.end());
                cyc = certificate::make_cycle(seq);
                moved = true;
                break;
            }
            if (moved) break;
            // exchange: neighbors whose cycle successors are adjacent
            for (size_t a = 0; a < nbrpos.size() && !moved; a++)
                for (size_t bidx = a + 1; bidx < nbrpos.size() && !moved; bidx++) {
                    int pi = nbrpos[a], pj = nbrpos[bidx];
                    if (!g.has_edge(c[(pi + 1) % L], c[(pj + 1) % L])) continue;
                    std::vector<int> seq{v};
                    for (int j = pi; j != (pj + 1) % L; j = (j - 1 + L) % L) seq.push_back(c[j]);
                    seq.push_back(c[(pj + 1) % L]);
                    for (int j = (pi + 1) % L; j != pj; j = (j + 1) % L) seq.push_back(c[j]);
                    seq.push_back(c[pj]);
                    cyc = certificate::make_cycle(seq);
                    moved = true;
                }
        }
        if (moved) {
            cyc = grow_cycle(g, cyc, g.n);
            continue;
        }
        // stalled: a vertex with every neighbor on the cycle yields an
        // independent set from the neighbors' successors
        for (int v = 0; v < g.n; v++) {
            if (pos[v] >= 0) continue;
            bool allon = true;
            for (int u : g.adj[v])
                if (pos[u] < 0) allon = false;
            if (!allon) continue;
            vset is{v};
            for (int u : g.adj[v]) is.push_back(c[(pos[u] + 1) % L]);
            is = normalize_set(is);
            for (size_t a = 0; a < is.size(); a++)
                for (size_t bidx = a + 1; bidx < is.size(); bidx++)
                    if (g.has_edge(is[a], is[bidx]))
                        fail("InvariantViolated", "stalled configuration is not independent");
            if ((int)is.size() < delta + 1) fail("InvariantViolated", "independent set too small");
            vset trimmed{v};
            for (int u : is)
                if (u != v && (int)trimmed.size() < delta + 1) trimmed.push_back(u);
            out.independent = normalize_set(trimmed);
            return out;
        }
        fail("GuaranteeViolated", "stalled without an extractable independent set");
    }
    fail("GuaranteeViolated", "cycle improvement failed to converge");
}
