#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

bool graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n) return false;
    const auto &a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve((size_t)m);
    for (int u = 0; u < n; u++)
        for (int v : adj[u])
            if (u < v) e.push_back({u, v});
    return e;
}

graph make_graph(int n, const std::vector<std::pair<int, int>> &edges) {
    graph g(n);
    for (auto [u, v] : edges) {
        if (u == v) fail("FormatError", "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail("FormatError", "edge endpoint out of range");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto &a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m += (long long)a.size();
    }
    g.m /= 2;
    return g;
}

// ---- vertex sets -----------------------------------------------------------

vset normalize_set(vset s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<char> to_mask(int n, const vset &s) {
    std::vector<char> m(n, 0);
    for (int v : s) m[v] = 1;
    return m;
}

bool set_contains(const vset &s, int v) { return std::binary_search(s.begin(), s.end(), v); }

vset set_union(const vset &a, const vset &b) {
    vset r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

vset set_minus(const vset &a, const vset &b) {
    vset r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

// ---- certificates ----------------------------------------------------------

certificate certificate::make_path(std::vector<int> s) {
    certificate c;
    c.kind = path;
    c.declared_length = (int)s.size() - 1;
    c.seq = std::move(s);
    return c;
}

certificate certificate::make_cycle(std::vector<int> s) {
    certificate c;
    c.kind = cycle;
    c.declared_length = (int)s.size();
    c.seq = std::move(s);
    return c;
}

bool verify_certificate(const graph &g, const certificate &c, std::string *why) {
    auto bad = [&](const std::string &msg) {
        if (why) *why = msg;
        return false;
    };
    if (c.seq.empty()) return bad("empty vertex sequence");
    if (c.kind == certificate::cycle && c.seq.size() < 3) return bad("cycle shorter than 3");
    for (int v : c.seq)
        if (v < 0 || v >= g.n) return bad("vertex out of range: " + std::to_string(v));
    std::vector<char> seen(g.n, 0);
    for (int v : c.seq) {
        if (seen[v]) return bad("repeated vertex: " + std::to_string(v));
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < c.seq.size(); i++)
        if (!g.has_edge(c.seq[i], c.seq[i + 1]))
            return bad("missing edge " + std::to_string(c.seq[i]) + "-" +
                       std::to_string(c.seq[i + 1]));
    if (c.kind == certificate::cycle && !g.has_edge(c.seq.back(), c.seq.front()))
        return bad("missing closing edge " + std::to_string(c.seq.back()) + "-" +
                   std::to_string(c.seq.front()));
    int expect = (c.kind == certificate::cycle) ? (int)c.seq.size() : (int)c.seq.size() - 1;
    if (c.declared_length != expect)
        return bad("declared length " + std::to_string(c.declared_length) + " != " +
                   std::to_string(expect));
    return true;
}

// ---- basic structure -------------------------------------------------------

int min_degree_outside(const graph &g, const vset &b) {
    auto mask = to_mask(g.n, b);
    int best = -1;
    for (int v = 0; v < g.n; v++) {
        if (mask[v]) continue;
        int d = 0;
        for (int w : g.adj[v])
            if (!mask[w]) d++;
        if (best < 0 || d < best) best = d;
    }
    if (best < 0) fail("EmptyResidual", "B covers all vertices");
    return best;
}

std::vector<vset> connected_components(const graph &g, const std::vector<char> &alive) {
    std::vector<char> ok = alive.empty() ? std::vector<char>(g.n, 1) : alive;
    std::vector<char> vis(g.n, 0);
    std::vector<vset> comps;
    for (int s = 0; s < g.n; s++) {
        if (!ok[s] || vis[s]) continue;
        vset comp;
        std::vector<int> stack{s};
        vis[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (ok[w] && !vis[w]) {
                    vis[w] = 1;
                    stack.push_back(w);
                }
        }
        comps.push_back(normalize_set(std::move(comp)));
    }
    return comps;
}

bool is_connected(const graph &g) { return connected_components(g).size() <= 1; }

block_tree block_decomposition(const graph &g) {
    // Iterative lowpoint computation with an edge stack.
    block_tree bt;
    std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1), child_cnt(g.n, 0);
    std::vector<char> is_cut(g.n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    struct frame {
        int v;
        size_t ei;
    };
    for (int root = 0; root < g.n; root++) {
        if (num[root] != -1) continue;
        std::vector<frame> st{{root, 0}};
        num[root] = low[root] = timer++;
        while (!st.empty()) {
            auto &[v, ei] = st.back();
            if (ei < g.adj[v].size()) {
                int w = g.adj[v][ei++];
                if (w == parent[v]) continue;
                if (num[w] == -1) {
                    estack.push_back({v, w});
                    parent[w] = v;
                    child_cnt[v]++;
                    num[w] = low[w] = timer++;
                    st.push_back({w, 0});
                } else if (num[w] < num[v]) {
                    estack.push_back({v, w});
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                st.pop_back();
                if (st.empty()) break;
                int p = st.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= num[p]) {
                    // p closes a block; pop edges down to (p, v)
                    if (parent[p] != -1 || child_cnt[p] >= 2) is_cut[p] = 1;
                    vset blk;
                    while (true) {
                        auto [x, y] = estack.back();
                        estack.pop_back();
                        blk.push_back(x);
                        blk.push_back(y);
                        if (x == p && y == v) break;
                    }
                    bt.blocks.push_back(normalize_set(std::move(blk)));
                }
            }
        }
    }
    for (int v = 0; v < g.n; v++)
        if (is_cut[v]) bt.cut_vertices.push_back(v);
    bt.block_cuts.resize(bt.blocks.size());
    for (size_t i = 0; i < bt.blocks.size(); i++)
        for (int v : bt.blocks[i])
            if (is_cut[v]) bt.block_cuts[i].push_back(v);
    return bt;
}

bool is_two_connected(const graph &g) {
    if (g.n < 3) return false;
    if (!is_connected(g)) return false;
    auto bt = block_decomposition(g);
    return bt.blocks.size() == 1 && (int)bt.blocks[0].size() == g.n;
}

// ---- disjoint paths --------------------------------------------------------

namespace {

struct flow_net {
    // in(v)=2v, out(v)=2v+1, source=2n, sink=2n+1
    struct arc {
        int to, cap, orig, rev;
    };
    std::vector<std::vector<arc>> arcs;
    explicit flow_net(int nodes) : arcs(nodes) {}
    void add(int u, int v, int cap) {
        arcs[u].push_back({v, cap, cap, (int)arcs[v].size()});
        arcs[v].push_back({u, 0, 0, (int)arcs[u].size() - 1});
    }
};

}  // namespace

std::vector<certificate> disjoint_paths(const graph &g, const vset &a, const vset &b,
                                        int want, const std::vector<char> &forbidden) {
    auto amask = to_mask(g.n, a), bmask = to_mask(g.n, b);
    std::vector<char> ban = forbidden.empty() ? std::vector<char>(g.n, 0) : forbidden;
    for (int v : a)
        if (bmask[v]) fail("PreconditionViolated", "terminal sets intersect");
    int S = 2 * g.n, T = 2 * g.n + 1;
    flow_net net(2 * g.n + 2);
    // Vertex capacities: 1 in general; a singleton terminal set carries `want`
    // so internally-disjoint paths from a single vertex are expressible.
    for (int v = 0; v < g.n; v++) {
        if (ban[v]) continue;
        int cap = 1;
        if ((amask[v] && (int)a.size() == 1) || (bmask[v] && (int)b.size() == 1)) cap = want;
        net.add(2 * v, 2 * v + 1, cap);
    }
    for (int v : a)
        if (!ban[v]) net.add(S, 2 * v, want);
    for (int v : b)
        if (!ban[v]) net.add(2 * v + 1, T, want);
    for (int u = 0; u < g.n; u++) {
        if (ban[u] || bmask[u]) continue;  // b-vertices are sinks only
        for (int v : g.adj[u]) {
            if (ban[v] || amask[v]) continue;  // a-vertices are sources only
            net.add(2 * u + 1, 2 * v, 1);
        }
    }
    // BFS augmentation (arcs were added in sorted order -> deterministic).
    int flow = 0;
    while (flow < want) {
        std::vector<int> pre_node(net.arcs.size(), -1), pre_arc(net.arcs.size(), -1);
        std::deque<int> q{S};
        pre_node[S] = S;
        while (!q.empty() && pre_node[T] == -1) {
            int u = q.front();
            q.pop_front();
            for (size_t i = 0; i < net.arcs[u].size(); i++) {
                auto &e = net.arcs[u][i];
                if (e.cap > 0 && pre_node[e.to] == -1) {
                    pre_node[e.to] = u;
                    pre_arc[e.to] = (int)i;
                    q.push_back(e.to);
                }
            }
        }
        if (pre_node[T] == -1) break;
        for (int v = T; v != S; v = pre_node[v]) {
            auto &e = net.arcs[pre_node[v]][pre_arc[v]];
            e.cap--;
            net.arcs[v][e.rev].cap++;
        }
        flow++;
    }
    // Decompose the flow into vertex sequences: walk forward arcs with
    // remaining flow (orig - cap), consuming one unit per step.
    std::vector<certificate> out;
    auto take = [&](int node) -> int {
        // consume one unit out of `node`; returns target node or -1
        for (auto &f : net.arcs[node]) {
            if (f.orig == 0) continue;  // reverse arc
            if (f.orig - f.cap > 0) {
                f.cap++;
                return f.to;
            }
        }
        return -1;
    };
    for (auto &e : net.arcs[S]) {
        while (e.orig - e.cap > 0) {
            e.cap++;
            std::vector<int> seq{e.to / 2};
            int node = e.to;  // in(v)
            while (true) {
                node = take(node);  // in(v) -> out(v)
                if (node == -1 || node == T) break;
                node = take(node);  // out(v) -> in(w) or T
                if (node == -1 || node == T) break;
                seq.push_back(node / 2);
            }
            out.push_back(certificate::make_path(std::move(seq)));
        }
    }
    return out;
}

std::pair<certificate, certificate> two_disjoint_paths(const graph &g, const vset &a,
                                                       const vset &b) {
    auto paths = disjoint_paths(g, a, b, 2);
    if (paths.size() < 2)
        fail("NotTwoConnected", "no two vertex-disjoint paths between the terminal sets");
    return {paths[0], paths[1]};
}

// ---- contraction / B-refinement --------------------------------------------

bool contraction_map::identity() const {
    for (size_t i = 0; i < image.size(); i++)
        if (image[i] != (int)i) return false;
    return true;
}

namespace {

contraction_map identity_map(int n) {
    contraction_map cm;
    cm.image.resize(n);
    std::iota(cm.image.begin(), cm.image.end(), 0);
    cm.group.resize(n);
    cm.rep.resize(n);
    for (int i = 0; i < n; i++) {
        cm.group[i] = {i};
        cm.rep[i] = i;
    }
    return cm;
}

// Merge `absorb` (current-graph ids) into vertex c of cur; rebuild dense graph
// and compose the provenance map (orig -> new ids).
void contract_into(graph &cur, contraction_map &cm, const vset &absorb, int c) {
    int n = cur.n;
    std::vector<int> newid(n, -1);
    auto gone = to_mask(n, absorb);
    gone[c] = 0;
    int nn = 0;
    for (int v = 0; v < n; v++)
        if (!gone[v]) newid[v] = nn++;
    for (int v = 0; v < n; v++)
        if (gone[v]) newid[v] = newid[c];
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : cur.edges()) {
        int a = newid[u], b = newid[v];
        if (a != b) es.push_back({std::min(a, b), std::max(a, b)});
    }
    cur = make_graph(nn, es);
    contraction_map next;
    next.image.resize(cm.image.size());
    next.group.assign(nn, {});
    next.rep.assign(nn, -1);
    for (size_t o = 0; o < cm.image.size(); o++) {
        next.image[o] = newid[cm.image[o]];
        next.group[next.image[o]].push_back((int)o);
    }
    for (int v = 0; v < n; v++)
        if (!gone[v] && (v == c || newid[v] != newid[c])) next.rep[newid[v]] = cm.rep[v];
    // merged vertices keep the cut vertex as representative
    next.rep[newid[c]] = cm.rep[c];
    for (auto &grp : next.group) grp = normalize_set(std::move(grp));
    cm = std::move(next);
}

// One refinement pass over component `comp` (current ids): find a leaf-block
// whose inner vertices all lie in bmask and contract it. Returns true if a
// contraction happened.
bool refine_step(graph &cur, contraction_map &cm, const vset &comp,
                 const std::vector<char> &bmask) {
    std::vector<int> to_orig;
    graph sub = induced_subgraph(cur, comp, &to_orig);
    auto bt = block_decomposition(sub);
    if (bt.blocks.size() <= 1) return false;  // 2-connected or trivial
    for (size_t i = 0; i < bt.blocks.size(); i++) {
        if (!bt.is_leaf(i) || bt.block_cuts[i].empty()) continue;
        int c = bt.block_cuts[i][0];
        bool all_b = true;
        for (int v : bt.blocks[i])
            if (v != c && !bmask[to_orig[v]]) {
                all_b = false;
                break;
            }
        if (!all_b) continue;
        vset absorb;
        for (int v : bt.blocks[i])
            if (v != c) absorb.push_back(to_orig[v]);
        contract_into(cur, cm, normalize_set(std::move(absorb)), to_orig[c]);
        return true;
    }
    return false;
}

}  // namespace

std::pair<graph, contraction_map> b_refinement(const graph &g, const vset &h, const vset &b) {
    for (int v : h)
        if (v < 0 || v >= g.n) fail("PreconditionViolated", "h out of range");
    {
        graph sub = induced_subgraph(g, h);
        if (!is_connected(sub)) fail("NotConnected", "g[h] is disconnected");
    }
    if (set_minus(h, b).empty()) fail("PreconditionViolated", "h is contained in b");
    graph cur = g;
    contraction_map cm = identity_map(g.n);
    while (true) {
        vset himg;
        for (int v : h) himg.push_back(cm.image[v]);
        himg = normalize_set(std::move(himg));
        // membership of a refined vertex in B follows its surviving original
        std::vector<char> bmask(cur.n, 0);
        for (int v = 0; v < cur.n; v++) bmask[v] = set_contains(b, cm.rep[v]) ? 1 : 0;
        if (!refine_step(cur, cm, himg, bmask)) break;
    }
    return {cur, cm};
}

std::pair<graph, contraction_map> b_refine_all(const graph &g, const vset &minus,
                                               const vset &b) {
    graph cur = g;
    contraction_map cm = identity_map(g.n);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> bmask(cur.n, 0);
        for (int v = 0; v < cur.n; v++) bmask[v] = set_contains(b, cm.rep[v]) ? 1 : 0;
        std::vector<char> alive(cur.n, 1);
        for (int v : minus) alive[cm.image[v]] = 0;
        for (auto &comp : connected_components(cur, alive)) {
            bool all_b = true;
            for (int v : comp)
                if (!bmask[v]) all_b = false;
            if (all_b) continue;
            if (refine_step(cur, cm, comp, bmask)) {
                changed = true;
                break;  // graph changed; recompute everything
            }
        }
    }
    return {cur, cm};
}

vset map_set(const contraction_map &cm, const vset &s) {
    vset r;
    for (int v : s) r.push_back(cm.image[v]);
    return normalize_set(std::move(r));
}

namespace {

// BFS route between two originals inside one group.
std::vector<int> group_route(const graph &orig, const vset &grp, int from, int to) {
    if (from == to) return {from};
    auto ing = to_mask(orig.n, grp);
    std::vector<int> par(orig.n, -1);
    std::deque<int> q{from};
    par[from] = from;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : orig.adj[v]) {
            if (!ing[w] || par[w] != -1) continue;
            par[w] = v;
            if (w == to) {
                std::vector<int> route{to};
                while (route.back() != from) route.push_back(par[route.back()]);
                std::reverse(route.begin(), route.end());
                return route;
            }
            q.push_back(w);
        }
    }
    return {};
}

}  // namespace

certificate lift_certificate(const graph &orig, const contraction_map &cm,
                             const certificate &c) {
    size_t k = c.seq.size();
    // choose, per refined vertex, an (entry, exit) pair by backtracking
    std::vector<std::pair<int, int>> choice(k);
    std::function<bool(size_t, int, int)> go = [&](size_t i, int prev_exit,
                                                   int first_entry) -> bool {
        if (i == k) {
            if (c.kind == certificate::cycle) return orig.has_edge(prev_exit, first_entry);
            return true;
        }
        const vset &grp = cm.group[c.seq[i]];
        for (int x : grp) {
            if (prev_exit != -1 && !orig.has_edge(prev_exit, x)) continue;
            for (int y : grp) {
                if (group_route(orig, grp, x, y).empty()) continue;
                choice[i] = {x, y};
                if (go(i + 1, y, i == 0 ? x : first_entry)) return true;
            }
        }
        return false;
    };
    if (!go(0, -1, -1)) fail("GuaranteeViolated", "certificate lift failed");
    std::vector<int> seq;
    for (size_t i = 0; i < k; i++) {
        auto route = group_route(orig, cm.group[c.seq[i]], choice[i].first, choice[i].second);
        seq.insert(seq.end(), route.begin(), route.end());
    }
    return c.kind == certificate::cycle ? certificate::make_cycle(std::move(seq))
                                        : certificate::make_path(std::move(seq));
}

// ---- misc ------------------------------------------------------------------

graph induced_subgraph(const graph &g, const vset &verts, std::vector<int> *to_orig) {
    std::vector<int> back(verts.begin(), verts.end());
    std::vector<int> fwd(g.n, -1);
    for (size_t i = 0; i < back.size(); i++) fwd[back[i]] = (int)i;
    std::vector<std::pair<int, int>> es;
    for (int u : verts)
        for (int v : g.adj[u])
            if (u < v && fwd[v] != -1) es.push_back({fwd[u], fwd[v]});
    if (to_orig) *to_orig = back;
    return make_graph((int)back.size(), es);
}

graph remove_vertices(const graph &g, const vset &kill, std::vector<int> *to_orig) {
    vset keep;
    auto bad = to_mask(g.n, kill);
    for (int v = 0; v < g.n; v++)
        if (!bad[v]) keep.push_back(v);
    return induced_subgraph(g, keep, to_orig);
}

graph add_vertex(const graph &g, const vset &nbrs) {
    auto es = g.edges();
    for (int v : nbrs) es.push_back({v, g.n});
    return make_graph(g.n + 1, es);
}
