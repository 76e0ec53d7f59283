#include "diracdec.hpp"

#include "classic.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace {

// ---- cycle arithmetic ------------------------------------------------------

struct cyc_view {
    std::vector<int> seq;
    std::vector<int> pos;  // vertex -> index, -1 off cycle

    cyc_view(int n, std::vector<int> s) : seq(std::move(s)), pos(n, -1) {
        for (int i = 0; i < (int)seq.size(); i++) pos[seq[i]] = i;
    }
    int len() const { return (int)seq.size(); }
    int norm(int i) const { int m = len(); return ((i % m) + m) % m; }
    int at(int i) const { return seq[norm(i)]; }
    int fwd_len(int i, int j) const { return norm(j - i); }
    // forward walk from index i to index j, both inclusive
    std::vector<int> walk(int i, int j) const {
        std::vector<int> out;
        i = norm(i);
        j = norm(j);
        for (int t = i;; t = norm(t + 1)) {
            out.push_back(seq[t]);
            if (t == j) break;
        }
        return out;
    }
};

std::optional<certificate> checked_cycle(const graph &g, std::vector<int> seq, int min_len) {
    if ((int)seq.size() < 3) return std::nullopt;
    certificate c = certificate::make_cycle(std::move(seq));
    if (c.length() < min_len) return std::nullopt;
    if (!verify_certificate(g, c)) return std::nullopt;
    return c;
}

std::optional<certificate> checked_path(const graph &g, std::vector<int> seq) {
    if (seq.empty()) return std::nullopt;
    certificate c = certificate::make_path(std::move(seq));
    if (!verify_certificate(g, c)) return std::nullopt;
    return c;
}

vset vset_of(const std::vector<int> &seq) { return normalize_set(seq); }

// ---- long paths inside a vertex set ----------------------------------------

std::optional<std::vector<int>> bfs_route(const graph &g, const std::vector<char> &alive,
                                          int s, int t) {
    if (!alive[s] || !alive[t]) return std::nullopt;
    std::vector<int> par(g.n, -2);
    std::queue<int> q;
    par[s] = -1;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == t) break;
        for (int w : g.adj[u])
            if (alive[w] && par[w] == -2) {
                par[w] = u;
                q.push(w);
            }
    }
    if (par[t] == -2) return std::nullopt;
    std::vector<int> out;
    for (int v = t; v != -1; v = par[v]) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
}

// Longest-ish (s,t)-path in a small or 2-connected graph (local ids).
std::vector<int> dense_long_path(const graph &sub, const vset &bl, int s, int t) {
    if (s == t) return {s};
    std::vector<int> best;
    if (sub.n <= 14) {
        // exact: subset-DP length, witness rebuilt by the threshold search
        int want = dp_longest_st_path(sub, s, t);
        certificate w;
        if (want >= 1 && oracle_path_at_least(sub, s, t, want, &w)) return w.seq;
    }
    if (sub.n >= 3 && is_two_connected(sub)) {
        try {
            vset b2 = normalize_set(set_union(bl, {s, t}));
            certificate c = generalized_eg_st_path(sub, b2, s, t);
            if (verify_certificate(sub, c)) best = c.seq;
        } catch (const solver_error &) {
        }
    }
    if (best.empty()) {
        auto r = bfs_route(sub, std::vector<char>(sub.n, 1), s, t);
        if (r) best = *r;
    }
    if (best.empty()) fail("InvariantViolated", "no route between attachment feet");
    if (best.front() != s) std::reverse(best.begin(), best.end());
    if (best.front() != s || best.back() != t)
        fail("InvariantViolated", "route misses its endpoints");
    return best;
}

// Long (s,t)-path inside g[h]: exact for tiny pieces, degree-driven for
// 2-connected pieces, composed block-by-block along the block-cut tree
// otherwise. Always returns a valid path of g.
certificate long_inside_path(const graph &g, const vset &h, const vset &b, int s, int t) {
    std::vector<int> to_orig;
    graph sub = induced_subgraph(g, h, &to_orig);
    std::vector<int> loc(g.n, -1);
    for (int i = 0; i < (int)to_orig.size(); i++) loc[to_orig[i]] = i;
    int sl = loc[s], tl = loc[t];
    if (sl < 0 || tl < 0) fail("PreconditionViolated", "path endpoints outside the piece");
    vset bl;
    for (int v : b)
        if (v < g.n && loc[v] >= 0) bl.push_back(loc[v]);
    bl = normalize_set(bl);

    std::vector<int> res;
    if (sl == tl) {
        res = {sl};
    } else if (sub.n <= 14 || is_two_connected(sub)) {
        res = dense_long_path(sub, bl, sl, tl);
    } else {
        // chain through the block-cut tree: BFS over (block, entry vertex)
        block_tree bt = block_decomposition(sub);
        int nb = (int)bt.blocks.size();
        std::vector<std::vector<int>> by_vertex(sub.n);
        for (int i = 0; i < nb; i++)
            for (int v : bt.blocks[i]) by_vertex[v].push_back(i);
        struct state {
            int block, entry, parent;
        };
        std::vector<state> states;
        std::vector<char> seen(nb, 0);
        for (int bi : by_vertex[sl]) {
            states.push_back({bi, sl, -1});
            seen[bi] = 1;
        }
        int goal = -1;
        for (size_t qi = 0; qi < states.size() && goal < 0; qi++) {
            auto st = states[qi];
            if (set_contains(bt.blocks[st.block], tl)) {
                goal = (int)qi;
                break;
            }
            for (int c : bt.block_cuts[st.block]) {
                if (c == st.entry) continue;
                for (int bj : by_vertex[c])
                    if (!seen[bj]) {
                        seen[bj] = 1;
                        states.push_back({bj, c, (int)qi});
                    }
            }
        }
        if (goal < 0) fail("Disconnected", "piece does not connect the endpoints");
        std::vector<std::pair<int, int>> chain;  // (block, entry); exit = next entry
        for (int qi = goal; qi >= 0; qi = states[qi].parent)
            chain.push_back({states[qi].block, states[qi].entry});
        std::reverse(chain.begin(), chain.end());
        for (size_t ci = 0; ci < chain.size(); ci++) {
            int bi = chain[ci].first;
            int entry = chain[ci].second;
            int exit = (ci + 1 < chain.size()) ? chain[ci + 1].second : tl;
            std::vector<int> bto;
            graph bsub = induced_subgraph(sub, bt.blocks[bi], &bto);
            std::vector<int> bloc(sub.n, -1);
            for (int i = 0; i < (int)bto.size(); i++) bloc[bto[i]] = i;
            vset bbl;
            for (int v : bl)
                if (bloc[v] >= 0) bbl.push_back(bloc[v]);
            std::vector<int> seg;
            if (entry == exit) {
                seg = {entry};
            } else {
                auto local = dense_long_path(bsub, normalize_set(bbl), bloc[entry], bloc[exit]);
                for (int v : local) seg.push_back(bto[v]);
            }
            if (res.empty())
                res = seg;
            else
                res.insert(res.end(), seg.begin() + 1, seg.end());
        }
    }
    std::vector<int> out;
    for (int v : res) out.push_back(to_orig[v]);
    auto c = checked_path(g, out);
    if (!c) fail("InvariantViolated", "composed inside path is not simple");
    return *c;
}

// ---- enlargement primitives ------------------------------------------------

// Single off-cycle vertex adjacent to two consecutive cycle vertices.
std::optional<certificate> try_insert(const graph &g, const cyc_view &C) {
    int m = C.len();
    for (int i = 0; i < m; i++) {
        int u = C.seq[i], v = C.at(i + 1);
        for (int w : g.adj[u]) {
            if (C.pos[w] >= 0) continue;
            if (!g.has_edge(w, v)) continue;
            std::vector<int> seq;
            seq.reserve(m + 1);
            for (int t = 0; t <= i; t++) seq.push_back(C.seq[t]);
            seq.push_back(w);
            for (int t = i + 1; t < m; t++) seq.push_back(C.seq[t]);
            if (auto c = checked_cycle(g, std::move(seq), m + 1)) return c;
        }
    }
    return std::nullopt;
}

// Replace one of the two (chord.front, chord.back) arcs by the chord when the
// chord has more edges; internals of the chord must avoid the cycle.
std::optional<certificate> splice_chord(const graph &g, const cyc_view &C,
                                        const std::vector<int> &chord, int min_total) {
    if (chord.size() < 2) return std::nullopt;
    int u = chord.front(), v = chord.back();
    int i = C.pos[u], j = C.pos[v];
    if (i < 0 || j < 0 || u == v) return std::nullopt;
    int clen = (int)chord.size() - 1;
    int a1 = C.fwd_len(i, j), a2 = C.len() - a1;
    std::optional<certificate> best;
    auto consider = [&](bool fwd_replaced) {
        // fwd_replaced: drop the i->j forward arc, keep j->i
        std::vector<int> seq = chord;  // u .. v
        auto kept = fwd_replaced ? C.walk(j, i) : C.walk(C.norm(i), C.norm(j));
        if (fwd_replaced) {
            // kept runs v .. u; chord already ends at v, so append kept interior
            seq.insert(seq.end(), kept.begin() + 1, kept.end() - 1);
        } else {
            // kept runs u .. v; reverse its interior to continue from v back to u
            for (int t = (int)kept.size() - 2; t >= 1; t--) seq.push_back(kept[t]);
        }
        auto c = checked_cycle(g, std::move(seq), std::max(min_total, C.len() + 1));
        if (c && (!best || c->length() > best->length())) best = c;
    };
    if (clen > a1) consider(true);
    if (clen > a2) consider(false);
    return best;
}

// Two internally disjoint chords whose endpoints interleave on the cycle:
// stitch the two chords with the two opposite arcs.
std::optional<certificate> two_chord_cycle(const graph &g, const cyc_view &C,
                                           const std::vector<int> &c1,
                                           const std::vector<int> &c2, int min_total) {
    if (c1.size() < 2 || c2.size() < 2) return std::nullopt;
    int p[4] = {C.pos[c1.front()], C.pos[c1.back()], C.pos[c2.front()], C.pos[c2.back()]};
    for (int x : p)
        if (x < 0) return std::nullopt;
    // interleaving: exactly one of c2's endpoints inside the forward (c1f,c1b) arc
    auto inside = [&](int a, int bq, int x) { return C.fwd_len(a, x) < C.fwd_len(a, bq); };
    bool i2 = inside(p[0], p[1], p[2]) != inside(p[0], p[1], p[3]);
    if (!i2) return std::nullopt;
    std::optional<certificate> best;
    for (int flip = 0; flip < 2; flip++) {
        std::vector<int> a = c1, bqq = c2;
        if (flip) std::reverse(bqq.begin(), bqq.end());
        // candidate: a (u1..v1), arc v1 -> u2 avoiding {u1, v2}, b (u2..v2), arc v2 -> u1
        int u1 = a.front(), v1 = a.back(), u2 = bqq.front(), v2 = bqq.back();
        int pv1 = C.pos[v1], pu2 = C.pos[u2], pv2 = C.pos[v2], pu1 = C.pos[u1];
        if (C.fwd_len(pv1, pu2) + C.fwd_len(pv2, pu1) >= C.len()) continue;
        auto arc1 = C.walk(pv1, pu2);
        auto arc2 = C.walk(pv2, pu1);
        std::vector<int> seq = a;
        seq.insert(seq.end(), arc1.begin() + 1, arc1.end());  // .. u2
        seq.insert(seq.end(), bqq.begin() + 1, bqq.end());    // .. v2
        seq.insert(seq.end(), arc2.begin() + 1, arc2.end() - 1);
        auto c = checked_cycle(g, std::move(seq), std::max(min_total, C.len() + 1));
        if (c && (!best || c->length() > best->length())) best = c;
    }
    return best;
}

// Insert the path inner (h1..h2, off-cycle) replacing a cycle arc of length
// one or two whose ends see h1 and h2.
std::optional<certificate> splice_pair(const graph &g, const cyc_view &C,
                                       const std::vector<int> &inner) {
    int h1 = inner.front(), h2 = inner.back();
    for (int gap = 1; gap <= 2; gap++) {
        if ((int)inner.size() + 1 <= gap) continue;  // not longer
        for (int i = 0; i < C.len(); i++) {
            int u = C.seq[i], v = C.at(i + gap);
            for (int dir = 0; dir < 2; dir++) {
                int a = dir ? h2 : h1, bq = dir ? h1 : h2;
                if (!g.has_edge(u, a) || !g.has_edge(v, bq)) continue;
                // kept arc v .. u, then u - a .. bq, closing bq - v
                std::vector<int> seq = C.walk(C.norm(i + gap), i);
                if (dir) {
                    for (int t = (int)inner.size() - 1; t >= 0; t--) seq.push_back(inner[t]);
                } else {
                    seq.insert(seq.end(), inner.begin(), inner.end());
                }
                if (auto c = checked_cycle(g, std::move(seq), C.len() + 1)) return c;
            }
        }
    }
    return std::nullopt;
}

// Rerouting an isolated off-cycle vertex h around a component chord: walk one
// arc into the chord, come back along the other arc, and close through h.
std::optional<certificate> chord_isolated_reroute(const graph &g, const cyc_view &C, int h,
                                                  const std::vector<int> &chord) {
    if (chord.size() < 2) return std::nullopt;
    int c1 = chord.front(), c2 = chord.back();
    int p1 = C.pos[c1], p2 = C.pos[c2];
    if (p1 < 0 || p2 < 0) return std::nullopt;
    for (int flip = 0; flip < 2; flip++) {
        int a = flip ? c2 : c1, bq = flip ? c1 : c2;
        int pa = C.pos[a], pb = C.pos[bq];
        // v1: neighbor of h on the forward (a,b) arc closest to a, not b
        int v1 = -1, v2 = -1;
        for (int t = C.norm(pa + 1); t != pb; t = C.norm(t + 1))
            if (g.has_edge(h, C.seq[t])) {
                v1 = t;
                break;
            }
        // v2: neighbor of h on the other arc closest to b, not b
        for (int t = C.norm(pb + 1); t != pa; t = C.norm(t + 1))
            if (g.has_edge(h, C.seq[t])) {
                v2 = t;
                break;
            }
        if (v1 < 0 || v2 < 0) continue;
        // h, v1, forward .. b, chord back to a, backward from a .. v2, close v2-h? No:
        // path: v1 -> b along the arc, chord b -> a, then from a walk backward
        // (into the second arc) down to v2, then v2 - h - v1 closes.
        std::vector<int> seq = {h};
        auto seg1 = C.walk(v1, pb);
        seq.insert(seq.end(), seg1.begin(), seg1.end());
        if (flip) {
            seq.insert(seq.end(), chord.begin() + 1, chord.end());
        } else {
            for (int t = (int)chord.size() - 2; t >= 0; t--) seq.push_back(chord[t]);
        }
        // from a, backward along the cycle to v2 (staying inside the second arc)
        for (int t = C.norm(pa - 1);; t = C.norm(t - 1)) {
            seq.push_back(C.seq[t]);
            if (t == v2) break;
        }
        if (auto c = checked_cycle(g, std::move(seq), C.len() + 1)) return c;
    }
    return std::nullopt;
}

// Moves built from the "both cycle neighbors are seen" vertices of an isolated
// off-cycle vertex h. Returns a longer cycle or the list of such vertices.
std::optional<certificate> try_101_moves(const graph &g, const vset &b, const cyc_view &C,
                                         int h, vset *out_101) {
    std::vector<int> idx;
    for (int i = 0; i < C.len(); i++) {
        int v = C.seq[i];
        if (g.has_edge(h, v)) continue;
        if (g.has_edge(h, C.at(i - 1)) && g.has_edge(h, C.at(i + 1))) idx.push_back(i);
    }
    if (out_101) {
        out_101->clear();
        for (int i : idx) out_101->push_back(C.seq[i]);
        *out_101 = normalize_set(*out_101);
    }
    // adjacent pair of such vertices
    for (size_t a = 0; a < idx.size(); a++)
        for (size_t bq = a + 1; bq < idx.size(); bq++) {
            int i = idx[a], j = idx[bq];
            if (!g.has_edge(C.seq[i], C.seq[j])) continue;
            // u1 v1 w1 ... u2 v2 w2 along C; new: u1 v1 v2 u2 .. w1 h w2 .. u1
            std::vector<int> seq = {C.seq[i], C.seq[j]};
            for (int t = C.norm(j - 1);; t = C.norm(t - 1)) {
                seq.push_back(C.seq[t]);
                if (t == C.norm(i + 1)) break;
            }
            seq.push_back(h);
            for (int t = C.norm(j + 1);; t = C.norm(t + 1)) {
                seq.push_back(C.seq[t]);
                if (t == C.norm(i - 1)) break;
            }
            if (auto c = checked_cycle(g, std::move(seq), C.len() + 1)) return c;
        }
    // such a vertex with its own off-cycle neighbor: swap it against h, then
    // splice the freed pair back in
    for (int i : idx) {
        int v = C.seq[i];
        if (set_contains(b, v)) continue;
        for (int w : g.adj[v]) {
            if (C.pos[w] >= 0 || w == h) continue;
            std::vector<int> swapped = C.seq;
            swapped[i] = h;
            cyc_view C2((int)C.pos.size(), swapped);
            if (!checked_cycle(g, swapped, C.len())) break;
            if (auto c = splice_pair(g, C2, {v, w})) return c;
            break;
        }
    }
    return std::nullopt;
}

// ---- matching --------------------------------------------------------------

int bipartite_matching(const graph &g, const vset &left, const vset &right) {
    std::vector<int> ridx(g.n, -1);
    for (int i = 0; i < (int)right.size(); i++) ridx[right[i]] = i;
    std::vector<int> match(right.size(), -1);
    std::vector<char> used;
    std::function<bool(int)> try_kuhn = [&](int u) -> bool {
        for (int w : g.adj[u]) {
            int ri = ridx[w];
            if (ri < 0 || used[ri]) continue;
            used[ri] = 1;
            if (match[ri] < 0 || try_kuhn(match[ri])) {
                match[ri] = u;
                return true;
            }
        }
        return false;
    };
    int total = 0;
    for (int u : left) {
        used.assign(right.size(), 0);
        if (try_kuhn(u)) total++;
    }
    return total;
}

// ---- classification --------------------------------------------------------

using dcomp = dirac_decomposition::comp;

struct classification {
    std::vector<dcomp> comps;
    std::vector<vset> cores;
};

// Classifies the components of gr minus the windows; nullopt (with why) when
// some component fits no kind.
std::optional<classification> classify_components(const graph &gr, const contraction_map &cm,
                                                  const vset &b, const vset &p1v,
                                                  const vset &p2v, std::string *why) {
    auto set_why = [&](const std::string &s) {
        if (why) *why = s;
    };
    vset p1r = map_set(cm, p1v), p2r = map_set(cm, p2v);
    std::vector<char> alive(gr.n, 1);
    for (int v : p1r) alive[v] = 0;
    for (int v : p2r) alive[v] = 0;
    classification out;
    for (const vset &cr : connected_components(gr, alive)) {
        bool allb = true;
        for (int w : cr)
            for (int o : cm.group[w])
                if (!set_contains(b, o)) allb = false;
        if (allb) {
            out.comps.push_back({cr, dirac_decomposition::all_b});
            continue;
        }
        std::vector<int> to_orig;
        graph sub = induced_subgraph(gr, cr, &to_orig);
        if ((int)cr.size() >= 3 && is_two_connected(sub)) {
            int m1 = bipartite_matching(gr, cr, p1r);
            int m2 = bipartite_matching(gr, cr, p2r);
            if (m1 == 1 && m2 == 1) {
                out.comps.push_back({cr, dirac_decomposition::bic});
                out.cores.push_back(cr);
                continue;
            }
            set_why("2-connected component with window matchings " + std::to_string(m1) +
                    "," + std::to_string(m2));
            return std::nullopt;
        }
        // separable component: single window attachment on one side, leaf-block
        // inner vertices blind to the other side
        vset n1, n2;
        for (int w : cr)
            for (int x : gr.adj[w]) {
                if (set_contains(p1r, x)) n1.push_back(x);
                if (set_contains(p2r, x)) n2.push_back(x);
            }
        n1 = normalize_set(n1);
        n2 = normalize_set(n2);
        block_tree bt = block_decomposition(sub);
        vset inner;  // gr ids
        for (size_t i = 0; i < bt.blocks.size(); i++) {
            if (!bt.is_leaf(i)) continue;
            for (int v : bt.blocks[i])
                if (!set_contains(bt.block_cuts[i], v)) inner.push_back(to_orig[v]);
        }
        inner = normalize_set(inner);
        auto inner_touches = [&](const vset &side) {
            for (int w : inner)
                for (int x : gr.adj[w])
                    if (set_contains(side, x)) return true;
            return false;
        };
        dirac_decomposition::comp_kind kind;
        if (n1.size() == 1 && !inner_touches(p2r))
            kind = dirac_decomposition::left_cut;
        else if (n2.size() == 1 && !inner_touches(p1r))
            kind = dirac_decomposition::right_cut;
        else {
            set_why("separable component pinned to neither window");
            return std::nullopt;
        }
        out.comps.push_back({cr, kind});
        for (size_t i = 0; i < bt.blocks.size(); i++) {
            if (!bt.is_leaf(i)) continue;
            vset blk;
            for (int v : bt.blocks[i]) blk.push_back(to_orig[v]);
            out.cores.push_back(normalize_set(blk));
        }
    }
    return out;
}

// Exactly one component of g minus the windows realizes each free arc.
bool free_arc_components_ok(const graph &g, const vset &b, const vset &wverts,
                            const certificate &pprime, const certificate &pdprime,
                            std::string *why) {
    std::vector<char> alive(g.n, 1);
    for (int v : wverts) alive[v] = 0;
    auto comps = connected_components(g, alive);
    for (const certificate *arc : {&pprime, &pdprime}) {
        std::vector<int> inner(arc->seq.begin() + 1, arc->seq.end() - 1);
        vset target = set_minus(vset_of(inner), b);
        if (target.empty()) {
            if (why) *why = "free arc fully inside b";
            return false;
        }
        int hits = 0;
        for (const vset &h : comps)
            if (set_minus(h, b) == target) hits++;
        if (hits != 1) {
            if (why) *why = "free arc realized by " + std::to_string(hits) + " components";
            return false;
        }
    }
    return true;
}

std::vector<int> combined_cycle_seq(const dirac_decomposition &d) {
    // shared endpoints: p1.back==p_prime.front, p_prime.back==p2.front,
    // p2.back==p_dprime.front, p_dprime.back==p1.front
    std::vector<int> seq = d.p1.seq;
    seq.insert(seq.end(), d.p_prime.seq.begin() + 1, d.p_prime.seq.end());
    seq.insert(seq.end(), d.p2.seq.begin() + 1, d.p2.seq.end());
    seq.insert(seq.end(), d.p_dprime.seq.begin() + 1, d.p_dprime.seq.end() - 1);
    return seq;
}

bool same_graph(const graph &a, const graph &b) { return a.n == b.n && a.edges() == b.edges(); }

bool same_comp_lists(std::vector<dcomp> a, std::vector<dcomp> b) {
    auto key = [](const dcomp &c) { return std::make_pair(c.verts, (int)c.kind); };
    std::sort(a.begin(), a.end(), [&](const dcomp &x, const dcomp &y) { return key(x) < key(y); });
    std::sort(b.begin(), b.end(), [&](const dcomp &x, const dcomp &y) { return key(x) < key(y); });
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); i++)
        if (key(a[i]) != key(b[i])) return false;
    return true;
}

}  // namespace

// ---- enlarge_or_decompose --------------------------------------------------

enlarge_outcome enlarge_or_decompose(const graph &g, const vset &b, int k,
                                     const certificate &cycle) {
    vset bn = normalize_set(b);
    int delta = min_degree_outside(g, bn);
    if (!is_two_connected(g)) fail("PreconditionViolated", "graph is not 2-connected");
    if (delta < 12) fail("PreconditionViolated", "residual minimum degree below 12");
    if (k <= 0 || 24 * k > delta) fail("PreconditionViolated", "k outside (0, delta/24]");
    if (2 * k + 2 * (int)bn.size() + 12 > delta)
        fail("PreconditionViolated", "2k+2|b|+12 exceeds residual degree");
    if (2 * delta + (int)bn.size() + k >= g.n)
        fail("PreconditionViolated", "residual degree not below n/2 - (|b|+k)/2");
    std::string why;
    if (cycle.kind != certificate::cycle || !verify_certificate(g, cycle, &why))
        fail("PreconditionViolated", "invalid cycle: " + why);
    if (cycle.length() < 2 * delta || cycle.length() >= 2 * delta + k)
        fail("PreconditionViolated", "cycle length outside [2delta, 2delta+k)");
    {
        auto [gr0, cm0] = b_refine_all(g, vset_of(cycle.seq), bn);
        (void)gr0;
        if (!cm0.identity())
            fail("PreconditionViolated", "b-refinements relative to the cycle not applied");
    }

    cyc_view C(g.n, cycle.seq);
    enlarge_outcome out;

    // 1. cheap insertion
    if (auto c = try_insert(g, C)) {
        out.longer_cycle = *c;
        return out;
    }

    // leftover components
    std::vector<char> alive(g.n, 1);
    for (int v : C.seq) alive[v] = 0;
    auto all_comps = connected_components(g, alive);
    std::vector<vset> comps;   // components with a vertex outside b
    std::vector<vset> bcomps;  // fully inside b
    std::vector<int> singles;  // isolated leftover vertices outside b
    for (auto &h : all_comps) {
        bool allb = true;
        for (int v : h)
            if (!set_contains(bn, v)) allb = false;
        if (allb) {
            bcomps.push_back(h);
            continue;
        }
        comps.push_back(h);
        if (h.size() == 1) singles.push_back(h[0]);
    }

    // 2. chord splices through components
    std::vector<std::vector<int>> best_chords;  // longest chord found per component
    for (const vset &h : comps) {
        vset attach;
        for (int v : h)
            for (int w : g.adj[v])
                if (C.pos[w] >= 0) attach.push_back(w);
        attach = normalize_set(attach);
        std::vector<int> best;
        int tried = 0;
        std::map<std::pair<int, int>, certificate> memo;
        for (size_t ai = 0; ai < attach.size() && tried < 400; ai++)
            for (size_t aj = ai + 1; aj < attach.size() && tried < 400; aj++) {
                int u = attach[ai], v = attach[aj];
                vset fu, fv;
                for (int w : g.adj[u])
                    if (set_contains(h, w)) fu.push_back(w);
                for (int w : g.adj[v])
                    if (set_contains(h, w)) fv.push_back(w);
                for (size_t x = 0; x < fu.size() && x < 2; x++)
                    for (size_t y = 0; y < fv.size() && y < 2; y++) {
                        int h1 = fu[x], h2 = fv[y];
                        tried++;
                        std::vector<int> chord;
                        if (h1 == h2) {
                            chord = {u, h1, v};
                        } else {
                            auto key = std::minmax(h1, h2);
                            auto it = memo.find(key);
                            if (it == memo.end())
                                it = memo.emplace(key, long_inside_path(g, h, bn, key.first,
                                                                        key.second))
                                         .first;
                            std::vector<int> inner = it->second.seq;
                            if (inner.front() != h1) std::reverse(inner.begin(), inner.end());
                            if (inner.front() != h1 || inner.back() != h2) continue;
                            chord = {u};
                            chord.insert(chord.end(), inner.begin(), inner.end());
                            chord.push_back(v);
                        }
                        if (auto c = splice_chord(g, C, chord, 0)) {
                            out.longer_cycle = *c;
                            return out;
                        }
                        if (chord.size() > best.size()) best = chord;
                    }
            }
        best_chords.push_back(best);
    }

    // rerouting isolated vertices around component chords
    for (int h : singles)
        for (const auto &chord : best_chords)
            if (auto c = chord_isolated_reroute(g, C, h, chord)) {
                out.longer_cycle = *c;
                return out;
            }

    // moves through "both cycle neighbors seen" vertices
    std::vector<std::pair<int, vset>> iso_101;
    for (int h : singles) {
        vset s101;
        if (auto c = try_101_moves(g, bn, C, h, &s101)) {
            out.longer_cycle = *c;
            return out;
        }
        iso_101.push_back({h, s101});
    }

    // 3. isolated leftover vertex: extract the vertex cover
    if (!singles.empty()) {
        const auto &[h, s101] = iso_101.front();
        vset cover = set_minus(set_minus(vset_of(C.seq), s101), bn);
        if ((int)cover.size() > delta + 2 * k)
            fail("GuaranteeViolated", "vertex cover larger than delta+2k");
        std::vector<char> cm_(g.n, 0);
        for (int v : cover) cm_[v] = 1;
        for (auto [u, v] : g.edges())
            if (!set_contains(bn, u) && !set_contains(bn, v) && !cm_[u] && !cm_[v])
                fail("GuaranteeViolated", "leftover vertex yields no cover of g-b, vertex " +
                                              std::to_string(h));
        out.vertex_cover = cover;
        return out;
    }

    // 4. decomposition assembly
    vset attach_all;
    for (const vset &h : comps)
        for (int v : h)
            for (int w : g.adj[v])
                if (C.pos[w] >= 0) attach_all.push_back(w);
    attach_all = normalize_set(attach_all);
    if (comps.empty()) fail("GuaranteeViolated", "no leftover component outside b");
    std::vector<int> tp;
    for (int v : attach_all) tp.push_back(C.pos[v]);
    std::sort(tp.begin(), tp.end());
    int ts = (int)tp.size();
    auto gap_after = [&](int i) { return C.fwd_len(tp[i], tp[(i + 1) % ts]); };
    int g1 = -1, g2 = -1;
    for (int i = 0; i < ts; i++) {
        if (g1 < 0 || gap_after(i) > gap_after(g1)) {
            g2 = g1;
            g1 = i;
        } else if (g2 < 0 || gap_after(i) > gap_after(g2)) {
            g2 = i;
        }
    }
    auto try_cross_enlarge = [&]() -> std::optional<certificate> {
        for (size_t i = 0; i < best_chords.size(); i++)
            for (size_t j = i + 1; j < best_chords.size(); j++)
                if (auto c = two_chord_cycle(g, C, best_chords[i], best_chords[j], 0)) return c;
        return std::nullopt;
    };
    if (ts < 2 || g2 < 0 || gap_after(g2) < delta) {
        if (auto c = try_cross_enlarge()) {
            out.longer_cycle = *c;
            return out;
        }
        fail("GuaranteeViolated", "window layout violated and no crossing enlargement found");
    }
    int lo = std::min(g1, g2), hi = std::max(g1, g2);
    // window 1: attachments after gap lo up to gap hi; window 2: the rest
    int a1 = tp[(lo + 1) % ts], b1 = tp[hi];
    int a2 = tp[(hi + 1) % ts], b2 = tp[lo];

    // cross chords between the free arc interiors force a window expansion or
    // an enlargement
    bool s_trig = false, t_trig = false;
    for (int round = 0; round < 2; round++) {
        auto pp = C.walk(b1, a2);  // free arc 1: s' .. t'
        auto pd = C.walk(b2, a1);  // free arc 2: t'' .. s''
        std::vector<char> in_pp(g.n, 0), in_pd(g.n, 0);
        for (size_t i = 1; i + 1 < pp.size(); i++) in_pp[pp[i]] = 1;
        for (size_t i = 1; i + 1 < pd.size(); i++) in_pd[pd[i]] = 1;
        std::vector<std::pair<int, int>> cross;  // (u in pp interior, v in pd interior)
        for (auto [u, v] : g.edges()) {
            if (in_pp[u] && in_pd[v]) cross.push_back({u, v});
            if (in_pd[u] && in_pp[v]) cross.push_back({v, u});
        }
        for (const vset &q : bcomps) {
            int u = -1, v = -1;
            for (int x : q)
                for (int w : g.adj[x]) {
                    if (in_pp[w] && u < 0) u = w;
                    if (in_pd[w] && v < 0) v = w;
                }
            if (u >= 0 && v >= 0) cross.push_back({u, v});
        }
        bool bad = false;
        for (auto [u, v] : cross) {
            bool s_side = (pp.size() >= 2 && u == pp[1]) && (pd.size() >= 2 && v == pd[pd.size() - 2]);
            bool t_side = (pp.size() >= 2 && u == pp[pp.size() - 2]) && (pd.size() >= 2 && v == pd[1]);
            if (round == 0 && s_side) {
                s_trig = true;
            } else if (round == 0 && t_side) {
                t_trig = true;
            } else {
                if (auto c = splice_chord(g, C, {u, v}, 0)) {
                    out.longer_cycle = *c;
                    return out;
                }
                for (const auto &ch : best_chords)
                    if (auto c = two_chord_cycle(g, C, {u, v}, ch, 0)) {
                        out.longer_cycle = *c;
                        return out;
                    }
                bad = true;
            }
        }
        if (bad) fail("GuaranteeViolated", "free-arc chord admits no enlargement");
        if (round == 0) {
            if (!s_trig && !t_trig) break;
            // s-trigger widens window 1 by one edge into each free arc;
            // t-trigger widens window 2 likewise
            if (s_trig) {
                b1 = C.norm(b1 + 1);
                a1 = C.norm(a1 - 1);
            }
            if (t_trig) {
                a2 = C.norm(a2 - 1);
                b2 = C.norm(b2 + 1);
            }
        }
    }

    dirac_decomposition d;
    d.p1 = certificate::make_path(C.walk(a1, b1));
    d.p_prime = certificate::make_path(C.walk(b1, a2));
    d.p2 = certificate::make_path(C.walk(a2, b2));
    d.p_dprime = certificate::make_path(C.walk(b2, a1));
    if (d.p_prime.length() < delta - 2 || d.p_dprime.length() < delta - 2)
        fail("GuaranteeViolated", "free arc shorter than delta-2 after expansion");
    vset wverts = set_union(vset_of(d.p1.seq), vset_of(d.p2.seq));
    auto [gr, cm] = b_refine_all(g, wverts, bn);
    d.refined = gr;
    d.rmap = cm;
    auto cls = classify_components(gr, cm, bn, vset_of(d.p1.seq), vset_of(d.p2.seq), &why);
    if (!cls) fail("GuaranteeViolated", "component classification failed: " + why);
    d.components = cls->comps;
    d.dirac_components = cls->cores;
    if (!free_arc_components_ok(g, bn, wverts, d.p_prime, d.p_dprime, &why))
        fail("GuaranteeViolated", "free arc components: " + why);
    if (!validate_dirac_decomposition(d, g, bn, &why))
        fail("InvariantViolated", "assembled decomposition invalid: " + why);
    out.decomposition = std::move(d);
    return out;
}

// ---- validate --------------------------------------------------------------

bool validate_dirac_decomposition(const dirac_decomposition &d, const graph &g, const vset &b,
                                  std::string *why) {
    auto bad = [&](const std::string &s) {
        if (why) *why = s;
        return false;
    };
    try {
        vset bn = normalize_set(b);
        int delta = min_degree_outside(g, bn);
        for (const certificate *p : {&d.p1, &d.p2, &d.p_prime, &d.p_dprime}) {
            std::string w;
            if (p->kind != certificate::path || !verify_certificate(g, *p, &w))
                return bad("window/arc path invalid: " + w);
        }
        if (d.p1.seq.back() != d.p_prime.seq.front() || d.p_prime.seq.back() != d.p2.seq.front() ||
            d.p2.seq.back() != d.p_dprime.seq.front() ||
            d.p_dprime.seq.back() != d.p1.seq.front())
            return bad("paths do not chain into a cycle");
        auto seq = combined_cycle_seq(d);
        auto cyc = checked_cycle(g, seq, 0);
        if (!cyc) return bad("chained paths are not a simple cycle");
        if (d.p_prime.length() < delta - 2 || d.p_dprime.length() < delta - 2)
            return bad("free arc shorter than delta-2");
        vset wverts = set_union(vset_of(d.p1.seq), vset_of(d.p2.seq));
        auto [gr, cm] = b_refine_all(g, wverts, bn);
        if (!same_graph(gr, d.refined)) return bad("refined graph mismatch");
        if (cm.image != d.rmap.image) return bad("refinement map mismatch");
        std::string w;
        auto cls = classify_components(gr, cm, bn, vset_of(d.p1.seq), vset_of(d.p2.seq), &w);
        if (!cls) return bad("component classification failed: " + w);
        if (!same_comp_lists(cls->comps, d.components)) return bad("component list mismatch");
        auto cores = cls->cores;
        auto claimed = d.dirac_components;
        std::sort(cores.begin(), cores.end());
        std::sort(claimed.begin(), claimed.end());
        if (cores != claimed) return bad("core component list mismatch");
        if (!free_arc_components_ok(g, bn, wverts, d.p_prime, d.p_dprime, &w))
            return bad("free arc components: " + w);
        return true;
    } catch (const solver_error &e) {
        return bad(std::string("error during validation: ") + e.what());
    }
}

// ---- solve_with_decomposition ----------------------------------------------

decomposition_verdict solve_with_decomposition(const graph &g, const vset &b, int k,
                                               const certificate &cycle,
                                               const dirac_decomposition &d) {
    vset bn = normalize_set(b);
    int delta = min_degree_outside(g, bn);
    int L = 2 * delta + k;
    decomposition_verdict out;
    if (cycle.length() >= L) {
        out.solved = true;
        out.witness = cycle;
        return out;
    }
    if (6 * k + 4 * (int)bn.size() + 6 >= delta) {
        // parameters too large relative to the degree: the window structure no
        // longer pins solutions, but the instance is small enough to decide
        // exhaustively
        certificate w;
        oracle_budget budget;
        budget.max_vertices = 80;
        if (oracle_cycle_at_least(g, L, &w, budget)) {
            out.solved = true;
            out.witness = w;
        } else {
            out.solved = true;
        }
        return out;
    }

    bool ident = d.rmap.identity();
    const graph &gr = d.refined;
    vset br = ident ? bn : map_set(d.rmap, bn);
    std::vector<int> cseq;
    for (int v : cycle.seq) {
        int w = d.rmap.image[v];
        if (cseq.empty() || cseq.back() != w) cseq.push_back(w);
    }
    while (cseq.size() > 1 && cseq.front() == cseq.back()) cseq.pop_back();
    cyc_view C(gr.n, cseq);
    if (!checked_cycle(gr, cseq, 0))
        fail("GuaranteeViolated", "cycle does not survive the refinement");
    int CR = (int)cseq.size();

    auto deliver = [&](std::vector<int> seq) -> bool {
        auto c = checked_cycle(gr, std::move(seq), 0);
        if (!c) return false;
        certificate lifted = ident ? *c : lift_certificate(g, d.rmap, *c);
        if (!verify_certificate(g, lifted)) return false;
        if (lifted.length() >= L) {
            out.solved = true;
            out.witness = lifted;
            return true;
        }
        if (lifted.length() > cycle.length()) {
            out.solved = false;
            out.longer_cycle = lifted;
            return true;
        }
        return false;
    };

    vset p1r = map_set(d.rmap, vset_of(d.p1.seq));
    vset p2r = map_set(d.rmap, vset_of(d.p2.seq));

    // components crossed between the two windows: replace the matching arc by
    // a long (s,t)-path through the component
    for (const auto &comp : d.components) {
        if (comp.kind == dirac_decomposition::all_b) continue;
        vset ns, nt;
        for (int v : comp.verts)
            for (int w : gr.adj[v]) {
                if (set_contains(p1r, w)) ns.push_back(w);
                if (set_contains(p2r, w)) nt.push_back(w);
            }
        ns = normalize_set(ns);
        nt = normalize_set(nt);
        std::vector<char> in_comp(gr.n, 0);
        for (int v : comp.verts) in_comp[v] = 1;
        for (int s : ns)
            for (int t : nt) {
                if (s == t) continue;
                vset wrap = set_union(comp.verts, normalize_set({s, t}));
                std::vector<int> to;
                graph sub = induced_subgraph(gr, wrap, &to);
                if (!is_two_connected(sub)) continue;
                std::vector<int> loc(gr.n, -1);
                for (int i = 0; i < (int)to.size(); i++) loc[to[i]] = i;
                vset bl = {loc[s], loc[t]};
                for (int v : br)
                    if (loc[v] >= 0) bl.push_back(loc[v]);
                bl = normalize_set(bl);
                // replace the arc whose interior runs through the component;
                // otherwise the shorter one
                int i = C.pos[s], j = C.pos[t];
                if (i < 0 || j < 0) continue;
                bool fwd_hits = false, bwd_hits = false;
                for (int x = C.norm(i + 1); x != j; x = C.norm(x + 1))
                    if (in_comp[C.seq[x]]) fwd_hits = true;
                for (int x = C.norm(j + 1); x != i; x = C.norm(x + 1))
                    if (in_comp[C.seq[x]]) bwd_hits = true;
                if (fwd_hits && bwd_hits) continue;
                int afwd = C.fwd_len(i, j);
                bool replace_fwd = fwd_hits || (!bwd_hits && afwd <= CR - afwd);
                int replaced = replace_fwd ? afwd : CR - afwd;
                int target = L - (CR - replaced);
                int ds;
                try {
                    ds = min_degree_outside(sub, bl);
                } catch (const solver_error &) {
                    continue;
                }
                eg_instance inst{sub, bl, loc[s], loc[t], std::max(0, target - ds)};
                eg_answer ans;
                try {
                    ans = solve_eg_path(inst);
                } catch (const solver_error &) {
                    continue;
                }
                if (ans.witness.length() <= replaced) continue;
                std::vector<int> path;
                for (int v : ans.witness.seq) path.push_back(to[v]);
                if (path.front() != s) std::reverse(path.begin(), path.end());
                if (path.front() != s || path.back() != t) continue;
                auto kept = replace_fwd ? C.walk(j, i) : C.walk(i, j);  // t..s or s..t
                std::vector<int> seq2;
                if (replace_fwd) {
                    seq2 = path;  // s..t
                    seq2.insert(seq2.end(), kept.begin() + 1, kept.end() - 1);
                } else {
                    seq2 = kept;  // s..t
                    for (int x = (int)path.size() - 2; x >= 1; x--) seq2.push_back(path[x]);
                }
                if (deliver(std::move(seq2))) return out;
            }
    }

    // solutions funneled through one core component: a long inside (u,v)-path
    // matched with a long outside (u,v)-path in the graph with the rest of the
    // component removed and a direct u-v edge added
    for (const vset &M : d.dirac_components) {
        std::vector<int> toM;
        graph subM = induced_subgraph(gr, M, &toM);
        std::vector<int> locM(gr.n, -1);
        for (int i = 0; i < (int)toM.size(); i++) locM[toM[i]] = i;
        vset bM;
        for (int v : br)
            if (locM[v] >= 0) bM.push_back(locM[v]);
        bM = normalize_set(bM);
        for (size_t ui = 0; ui < M.size(); ui++)
            for (size_t vi = ui + 1; vi < M.size(); vi++) {
                int u = M[ui], v = M[vi];
                // inside path
                std::vector<int> inner;
                if ((int)M.size() <= 14) {
                    int want = dp_longest_st_path(subM, locM[u], locM[v]);
                    certificate w;
                    if (want < 1 || !oracle_path_at_least(subM, locM[u], locM[v], want, &w))
                        continue;
                    inner = w.seq;
                } else {
                    vset bl = normalize_set(set_union(bM, {locM[u], locM[v]}));
                    int dm;
                    try {
                        dm = min_degree_outside(subM, bl);
                    } catch (const solver_error &) {
                        continue;
                    }
                    if (!is_two_connected(subM)) continue;
                    eg_instance inst{subM, bl, locM[u], locM[v],
                                     std::max(0, (int)M.size() - 1 - dm)};
                    try {
                        inner = solve_eg_path(inst).witness.seq;
                    } catch (const solver_error &) {
                        continue;
                    }
                }
                std::vector<int> ipath;
                for (int x : inner) ipath.push_back(toM[x]);
                if (ipath.front() != u) std::reverse(ipath.begin(), ipath.end());
                if (ipath.front() != u || ipath.back() != v) continue;
                int ilen = (int)ipath.size() - 1;
                // outside path in gr - (M \ {u,v}) + uv
                vset kill = set_minus(M, {u, v});
                std::vector<int> toO;
                graph mod = remove_vertices(gr, kill, &toO);
                std::vector<int> locO(gr.n, -1);
                for (int i = 0; i < (int)toO.size(); i++) locO[toO[i]] = i;
                int uo = locO[u], vo = locO[v];
                if (uo < 0 || vo < 0) continue;
                if (!mod.has_edge(uo, vo)) {
                    mod.adj[uo].insert(
                        std::lower_bound(mod.adj[uo].begin(), mod.adj[uo].end(), vo), vo);
                    mod.adj[vo].insert(
                        std::lower_bound(mod.adj[vo].begin(), mod.adj[vo].end(), uo), uo);
                    mod.m++;
                }
                if (!is_two_connected(mod)) continue;
                vset blO = {uo, vo};
                for (int x : br)
                    if (locO[x] >= 0) blO.push_back(locO[x]);
                blO = normalize_set(blO);
                int dout;
                try {
                    dout = min_degree_outside(mod, blO);
                } catch (const solver_error &) {
                    continue;
                }
                eg_instance inst{mod, blO, uo, vo, std::max(0, (L - ilen) - dout)};
                eg_answer ans;
                try {
                    ans = solve_eg_path(inst);
                } catch (const solver_error &) {
                    continue;
                }
                std::vector<int> opath;
                for (int x : ans.witness.seq) opath.push_back(toO[x]);
                if (opath.front() != u) std::reverse(opath.begin(), opath.end());
                if (opath.front() != u || opath.back() != v) continue;
                if ((int)opath.size() - 1 + ilen <= std::max(CR, 2)) continue;
                std::vector<int> seq2 = opath;  // u .. v
                for (int x = (int)ipath.size() - 2; x >= 1; x--) seq2.push_back(ipath[x]);
                if (deliver(std::move(seq2))) return out;
            }
    }

    out.solved = true;  // exhausted every normalized solution shape: no
    return out;
}

// ---- b_leaf_block_cycle ----------------------------------------------------

certificate b_leaf_block_cycle(const graph &g, const vset &b, int k,
                               const dirac_decomposition &d, const vset &component,
                               const vset &separator) {
    vset bn = normalize_set(b);
    int delta = min_degree_outside(g, bn);
    const graph &gr = d.refined;
    bool ident = d.rmap.identity();

    vset comp = normalize_set(component);
    const dcomp *rec = nullptr;
    for (const auto &c : d.components)
        if (c.verts == comp) rec = &c;
    if (!rec || (rec->kind != dirac_decomposition::left_cut &&
                 rec->kind != dirac_decomposition::right_cut))
        fail("PreconditionViolated", "component is not a separable piece of the decomposition");

    std::vector<int> to;
    graph sub = induced_subgraph(gr, comp, &to);
    std::vector<int> loc(gr.n, -1);
    for (int i = 0; i < (int)to.size(); i++) loc[to[i]] = i;
    block_tree bt = block_decomposition(sub);
    vset inner;  // gr ids
    for (size_t i = 0; i < bt.blocks.size(); i++) {
        if (!bt.is_leaf(i)) continue;
        for (int v : bt.blocks[i])
            if (!set_contains(bt.block_cuts[i], v)) inner.push_back(to[v]);
    }
    inner = normalize_set(inner);

    vset sep = normalize_set(separator);
    for (int v : sep)
        if (!set_contains(comp, v) || set_contains(inner, v))
            fail("PreconditionViolated", "separator vertex not a non-inner component vertex");
    if (!sep.empty()) {
        std::vector<char> alive(sub.n, 1);
        for (int v : sep) alive[loc[v]] = 0;
        auto parts = connected_components(sub, alive);
        bool separated = false;
        for (const vset &p : parts) {
            bool has_free = false, has_inner = false;
            for (int x : p) {
                int o = to[x];
                if (set_contains(inner, o)) has_inner = true;
                else if (!set_contains(bn, o)) has_free = true;
            }
            if (has_free && !has_inner) separated = true;
        }
        if (!separated)
            fail("PreconditionViolated",
                 "separator does not cut any non-inner vertex off the leaf blocks");
    }

    bool left = rec->kind == dirac_decomposition::left_cut;
    vset near_w = map_set(d.rmap, vset_of(left ? d.p1.seq : d.p2.seq));
    vset far_w = map_set(d.rmap, vset_of(left ? d.p2.seq : d.p1.seq));
    int s = -1;
    for (int v : comp)
        for (int w : gr.adj[v])
            if (set_contains(near_w, w) && (s < 0 || w < s)) s = w;
    if (s < 0) fail("InvariantViolated", "separable component without window attachment");

    auto cyc_seq = combined_cycle_seq(d);
    if (!ident) {
        std::vector<int> mapped;
        for (int v : cyc_seq) {
            int w = d.rmap.image[v];
            if (mapped.empty() || mapped.back() != w) mapped.push_back(w);
        }
        while (mapped.size() > 1 && mapped.front() == mapped.back()) mapped.pop_back();
        cyc_seq = mapped;
    }
    cyc_view C(gr.n, cyc_seq);

    std::optional<certificate> best;
    for (size_t li = 0; li < bt.blocks.size(); li++) {
        if (!bt.is_leaf(li)) continue;
        vset blk;  // gr ids
        for (int v : bt.blocks[li]) blk.push_back(to[v]);
        blk = normalize_set(blk);
        int cut = bt.block_cuts[li].empty() ? -1 : to[bt.block_cuts[li][0]];
        if (cut < 0) continue;
        int u = -1;
        for (int v : blk) {
            if (v == cut) continue;
            if (gr.has_edge(v, s) && (u < 0 || v < u)) u = v;
        }
        if (u < 0) continue;
        certificate pu = long_inside_path(gr, blk, bn, u, cut);
        for (int v : comp) {
            if (set_contains(inner, v)) continue;
            int t = -1;
            for (int w : gr.adj[v])
                if (set_contains(far_w, w) && (t < 0 || w < t)) t = w;
            if (t < 0) continue;
            std::vector<int> chord = {s};
            std::vector<int> useq = pu.seq;
            if (useq.front() != u) std::reverse(useq.begin(), useq.end());
            chord.insert(chord.end(), useq.begin(), useq.end());
            if (v != cut) {
                vset rest = set_minus(comp, set_minus(blk, {cut}));
                certificate pv;
                try {
                    pv = long_inside_path(gr, rest, bn, cut, v);
                } catch (const solver_error &) {
                    continue;
                }
                std::vector<int> vseq = pv.seq;
                if (vseq.front() != cut) std::reverse(vseq.begin(), vseq.end());
                chord.insert(chord.end(), vseq.begin() + 1, vseq.end());
            }
            chord.push_back(t);
            // close through the longer (s,t)-arc of the cycle
            int i = C.pos[s], j = C.pos[t];
            if (i < 0 || j < 0) continue;
            for (int fwd = 0; fwd < 2; fwd++) {
                std::vector<int> seq = chord;  // s .. t
                if (fwd) {
                    auto arc = C.walk(j, i);  // t .. s
                    seq.insert(seq.end(), arc.begin() + 1, arc.end() - 1);
                } else {
                    auto arc = C.walk(i, j);  // s .. t
                    for (int x = (int)arc.size() - 2; x >= 1; x--) seq.push_back(arc[x]);
                }
                auto c = checked_cycle(gr, std::move(seq), 0);
                if (!c) continue;
                certificate lifted = ident ? *c : lift_certificate(g, d.rmap, *c);
                if (!verify_certificate(g, lifted)) continue;
                if (!best || lifted.length() > best->length()) best = lifted;
            }
        }
    }
    if (!best) fail("GuaranteeViolated", "no leaf-block route closed into a cycle");
    if (2 * best->length() < 5 * delta - (int)sep.size() - (k + 5))
        fail("GuaranteeViolated", "leaf-block cycle below the promised length");
    return *best;
}
