#include "egpath.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace {

// maximum matching between `left` and `right` along edges of g (Kuhn)
int max_matching(const graph &g, const vset &left, const vset &right) {
    std::vector<char> inr = to_mask(g.n, right);
    std::vector<int> match(g.n, -1);  // right vertex -> left vertex
    std::vector<char> seen;
    std::function<bool(int)> try_aug = [&](int u) -> bool {
        for (int v : g.adj[u]) {
            if (!inr[v] || seen[v]) continue;
            seen[v] = 1;
            if (match[v] < 0 || try_aug(match[v])) {
                match[v] = u;
                return true;
            }
        }
        return false;
    };
    int total = 0;
    for (int u : left) {
        seen.assign(g.n, 0);
        if (try_aug(u)) total++;
    }
    return total;
}

vset orig_of(const contraction_map &cm, const vset &refined) {
    vset out;
    for (int r : refined)
        for (int v : cm.group[r]) out.push_back(v);
    return normalize_set(out);
}

// long (u,v)-path inside a small subgraph: exact for n <= 16, otherwise a
// growth search asked to reach `want`; absent when neither engine delivers
std::optional<certificate> inner_long_path(const graph &sub, int u, int v, int want) {
    if (u == v) return std::nullopt;
    if (sub.n <= 16) {
        auto res = oracle_longest_st_path(sub, u, v);
        if (!res.found || res.length == 0) return std::nullopt;
        return res.cert;
    }
    if (!is_two_connected(sub) || sub.n < 4) return std::nullopt;
    try {
        return egl_long_st_path(sub, u, v, std::max(want, 1));
    } catch (const solver_error &) {
        return std::nullopt;
    }
}

std::optional<certificate> st_path_at_least(const graph &g, int s, int t, int want) {
    if (g.n > 44) fail("UnsupportedScale", "exact threshold path search capped at 44 vertices");
    certificate w;
    if (oracle_path_at_least(g, s, t, want, &w)) return w;
    return std::nullopt;
}

// Hamiltonian (s,t)-path: dense closure attempt first, exact search after
std::optional<certificate> ham_st_path(const graph &g, int s, int t) {
    if (g.n < 2 || s == t) return std::nullopt;
    {
        // pendant vertices pin the endpoints; their closing edge makes a
        // Hamiltonian cycle equivalent to the wanted path
        graph gp(g.n + 2);
        std::vector<std::pair<int, int>> es = g.edges();
        es.push_back({g.n, s});
        es.push_back({g.n + 1, t});
        es.push_back({g.n, g.n + 1});
        gp = make_graph(g.n + 2, es);
        if (auto cyc = bondy_chvatal_lift(gp)) {
            std::vector<int> seq = cyc->seq;
            auto it = std::find(seq.begin(), seq.end(), g.n);
            std::rotate(seq.begin(), it, seq.end());
            if (seq[1] == g.n + 1) std::reverse(seq.begin() + 1, seq.end());
            std::vector<int> inner(seq.begin() + 1, seq.end() - 1);
            if ((int)inner.size() == g.n && inner.front() == s && inner.back() == t) {
                certificate p = certificate::make_path(inner);
                if (verify_certificate(g, p)) return p;
            }
        }
    }
    if (g.n <= 32) {
        certificate w;
        if (oracle_path_at_least(g, s, t, g.n - 1, &w)) return w;
        return std::nullopt;
    }
    fail("UnsupportedScale", "spanning path search capped at 32 vertices");
}

// ---- stalled-path bookkeeping ----------------------------------------------

struct refined_view {
    graph gr;
    contraction_map cm;
    std::vector<int> pp;   // the host path in refined ids
    std::vector<int> pos;  // refined id -> path position, -1 off path
    std::vector<vset> comps;
    std::vector<char> rb;  // refined id represents a b vertex
};

refined_view make_view(const graph &g, const vset &b, const certificate &p) {
    refined_view v;
    auto pr = b_refine_all(g, normalize_set(p.seq), b);
    v.gr = pr.first;
    v.cm = pr.second;
    for (int x : p.seq) v.pp.push_back(v.cm.image[x]);
    v.pos.assign(v.gr.n, -1);
    std::vector<char> alive(v.gr.n, 1);
    for (size_t i = 0; i < v.pp.size(); i++) {
        v.pos[v.pp[i]] = (int)i;
        alive[v.pp[i]] = 0;
    }
    v.comps = connected_components(v.gr, alive);
    v.rb.assign(v.gr.n, 0);
    for (int r = 0; r < v.gr.n; r++) v.rb[r] = set_contains(b, v.cm.rep[r]);
    return v;
}

bool comp_all_b(const refined_view &v, const vset &c) {
    for (int x : c)
        if (!v.rb[x]) return false;
    return true;
}

std::vector<std::pair<int, int>> comp_contacts(const refined_view &v, const vset &c) {
    std::vector<std::pair<int, int>> out;  // (path position, component vertex)
    for (int u : c)
        for (int w : v.gr.adj[u])
            if (v.pos[w] >= 0) out.push_back({v.pos[w], u});
    std::sort(out.begin(), out.end());
    return out;
}

// one strictly-lengthening replacement on the refined path, if any exists:
// insertion of an outside vertex between two consecutive neighbors, or
// replacement of a path segment by a longer detour through one component
std::optional<std::vector<int>> enlarge_once(const refined_view &v) {
    const graph &gr = v.gr;
    int m = (int)v.pp.size();
    for (const vset &c : v.comps) {
        for (int u : c) {
            std::vector<char> at(m, 0);
            for (int w : gr.adj[u])
                if (v.pos[w] >= 0) at[v.pos[w]] = 1;
            for (int i = 0; i + 1 < m; i++)
                if (at[i] && at[i + 1]) {
                    std::vector<int> np(v.pp.begin(), v.pp.begin() + i + 1);
                    np.push_back(u);
                    np.insert(np.end(), v.pp.begin() + i + 1, v.pp.end());
                    return np;
                }
        }
    }
    std::vector<vset> order = v.comps;
    std::sort(order.begin(), order.end(),
              [](const vset &a, const vset &b) { return a.size() < b.size(); });
    for (const vset &c : order) {
        auto contacts = comp_contacts(v, c);
        std::vector<int> to_sub;
        graph sub = induced_subgraph(gr, c, &to_sub);
        std::vector<int> sid(gr.n, -1);
        for (int i = 0; i < sub.n; i++) sid[to_sub[i]] = i;
        for (size_t a = 0; a < contacts.size(); a++)
            for (size_t bq = a + 1; bq < contacts.size(); bq++) {
                auto [i, u] = contacts[a];
                auto [j, w] = contacts[bq];
                if (i == j || u == w) continue;
                int gap = j - i;
                if (2 + (int)c.size() - 1 <= gap) continue;  // cannot beat the segment
                auto pth = inner_long_path(sub, sid[u], sid[w], gap - 1);
                if (!pth || 2 + pth->length() <= gap) continue;
                std::vector<int> np(v.pp.begin(), v.pp.begin() + i + 1);
                for (int x : pth->seq) np.push_back(to_sub[x]);
                np.insert(np.end(), v.pp.begin() + j, v.pp.end());
                return np;
            }
    }
    return std::nullopt;
}

// ---- stall-time long-path constructions -------------------------------------

// path shape: prefix of the path, a reversed middle segment, then a long
// detour through a component hanging off the segment boundary, then the tail
std::optional<certificate> rescue_long_path(const graph &g, const vset &b,
                                            const refined_view &v, int start_max,
                                            int end_min, int target) {
    (void)b;
    const graph &gr = v.gr;
    int m = (int)v.pp.size();
    // tails: s-side boundary vertex -> component -> t-side path vertex -> t
    struct tail_t {
        std::vector<int> seq;  // from the boundary vertex (exclusive) to t
        int len = -1;
    };
    auto make_tail = [&](int boundary_pos, bool from_start) -> tail_t {
        tail_t best;
        for (const vset &c : v.comps) {
            if (comp_all_b(v, c)) continue;
            auto contacts = comp_contacts(v, c);
            std::vector<int> to_sub;
            graph sub = induced_subgraph(gr, c, &to_sub);
            std::vector<int> sid(gr.n, -1);
            for (int i = 0; i < sub.n; i++) sid[to_sub[i]] = i;
            for (auto [i, x] : contacts) {
                if (i != boundary_pos) continue;
                for (auto [j, y] : contacts) {
                    bool far_side = from_start ? j >= end_min : j <= start_max;
                    if (!far_side || x == y) continue;
                    auto pth = inner_long_path(sub, sid[x], sid[y], (int)c.size() - 1);
                    if (!pth) continue;
                    std::vector<int> seq;
                    for (int z : pth->seq) seq.push_back(to_sub[z]);
                    if (from_start)
                        for (int q = j; q < m; q++) seq.push_back(v.pp[q]);
                    else
                        for (int q = j; q >= 0; q--) seq.push_back(v.pp[q]);
                    int len = 1 + pth->length() + 1 + (from_start ? m - 1 - j : j);
                    if (len > best.len) best = {seq, len};
                }
            }
        }
        return best;
    };
    tail_t tail_s = make_tail(start_max, true);
    tail_t tail_t2 = make_tail(end_min, false);
    auto finish = [&](std::vector<int> seq) -> std::optional<certificate> {
        certificate cand = certificate::make_path(seq);
        std::string why;
        if (!verify_certificate(gr, cand, &why)) return std::nullopt;
        certificate lifted = lift_certificate(g, v.cm, cand);
        if (lifted.length() < target) return std::nullopt;
        if (!verify_certificate(g, lifted)) return std::nullopt;
        return lifted;
    };
    // reversed-segment shape: a middle vertex with a second neighbor deep in
    // the prefix (or suffix) lets the segment be traversed backwards
    for (int pos = start_max + 1; pos < end_min; pos++) {
        int vv = v.pp[pos];
        if (v.rb[vv]) continue;
        for (int w : gr.adj[vv]) {
            int wp = v.pos[w];
            if (wp < 0) continue;
            if (wp < start_max && tail_s.len > 0) {
                std::vector<int> seq(v.pp.begin(), v.pp.begin() + wp + 1);
                for (int q = pos; q >= start_max; q--) seq.push_back(v.pp[q]);
                seq.insert(seq.end(), tail_s.seq.begin(), tail_s.seq.end());
                if (auto r = finish(seq)) return r;
            }
            if (wp > end_min && tail_t2.len > 0) {
                std::vector<int> seq(v.pp.rbegin(), v.pp.rbegin() + (m - wp));
                for (int q = pos; q <= end_min; q++) seq.push_back(v.pp[q]);
                seq.insert(seq.end(), tail_t2.seq.begin(), tail_t2.seq.end());
                std::reverse(seq.begin(), seq.end());
                if (auto r = finish(seq)) return r;
            }
        }
    }
    // strip-detour shape: two prefix vertices matched into the middle strip
    // allow rerouting through the strip before taking the s-side tail
    if (tail_s.len > 0 && start_max >= 1) {
        vset strip;
        for (int q = start_max + 1; q < end_min; q++) strip.push_back(v.pp[q]);
        strip = normalize_set(strip);
        std::vector<int> to_sub;
        graph sub = induced_subgraph(gr, strip, &to_sub);
        std::vector<int> sid(gr.n, -1);
        for (int i = 0; i < sub.n; i++) sid[to_sub[i]] = i;
        for (int p1 = 0; p1 < start_max; p1++)
            for (int p2 = p1 + 1; p2 <= start_max; p2++)
                for (int h1 : gr.adj[v.pp[p1]]) {
                    if (sid[h1] < 0) continue;
                    for (int h2 : gr.adj[v.pp[p2]]) {
                        if (sid[h2] < 0 || h1 == h2) continue;
                        auto pth = inner_long_path(sub, sid[h1], sid[h2],
                                                   (int)strip.size() - 1);
                        if (!pth) continue;
                        std::vector<int> seq(v.pp.begin(), v.pp.begin() + p1 + 1);
                        for (int z : pth->seq) seq.push_back(to_sub[z]);
                        for (int q = p2; q <= start_max; q++) seq.push_back(v.pp[q]);
                        seq.insert(seq.end(), tail_s.seq.begin(), tail_s.seq.end());
                        if (auto r = finish(seq)) return r;
                    }
                }
    }
    return std::nullopt;
}

// ---- component classification ------------------------------------------------

bool derive_components(const graph &g, const vset &b, const certificate &p1,
                       const certificate &p2, const graph &g2, const contraction_map &cm,
                       std::vector<eg_decomposition::comp> &out, std::vector<vset> &egc,
                       std::string *why) {
    (void)g;
    auto blame = [&](const std::string &msg) {
        if (why) *why = msg;
        return false;
    };
    vset path1r, path2r;
    for (int x : p1.seq) path1r.push_back(cm.image[x]);
    for (int x : p2.seq) path2r.push_back(cm.image[x]);
    path1r = normalize_set(path1r);
    path2r = normalize_set(path2r);
    std::vector<char> alive(g2.n, 1);
    for (int x : path1r) alive[x] = 0;
    for (int x : path2r) alive[x] = 0;
    out.clear();
    egc.clear();
    for (const vset &c : connected_components(g2, alive)) {
        bool allb = true;
        for (int r : c)
            for (int v : cm.group[r])
                if (!set_contains(b, v)) allb = false;
        if (allb) {
            out.push_back({c, eg_decomposition::all_b});
            continue;
        }
        std::vector<int> to_sub;
        graph sub = induced_subgraph(g2, c, &to_sub);
        int m1 = max_matching(g2, c, path1r);
        int m2 = max_matching(g2, c, path2r);
        if (is_two_connected(sub)) {
            if (m1 != 1 || m2 != 1)
                return blame("a 2-connected leftover component has end-segment matching " +
                             std::to_string(m1) + "/" + std::to_string(m2));
            out.push_back({c, eg_decomposition::R1});
            egc.push_back(c);
            continue;
        }
        // separable: count distinct end-segment vertices adjacent to the
        // component and scan leaf-block inner vertices
        auto side_nbrs = [&](const vset &side) {
            vset got;
            for (int u : c)
                for (int w : g2.adj[u])
                    if (set_contains(side, w)) got.push_back(w);
            return normalize_set(got);
        };
        vset n1 = side_nbrs(path1r), n2 = side_nbrs(path2r);
        block_tree bt = block_decomposition(sub);
        if (bt.blocks.size() < 2)
            return blame("a separable leftover component has no real leaf block");
        vset inner_leaf;  // g2 ids of inner leaf-block vertices
        std::vector<vset> leaf_blocks;
        for (size_t i = 0; i < bt.blocks.size(); i++) {
            if (!bt.is_leaf((int)i)) continue;
            vset blk;
            for (int x : bt.blocks[i]) blk.push_back(to_sub[x]);
            leaf_blocks.push_back(normalize_set(blk));
            for (int x : bt.blocks[i])
                if (!set_contains(bt.cut_vertices, x)) inner_leaf.push_back(to_sub[x]);
        }
        inner_leaf = normalize_set(inner_leaf);
        auto inner_touches = [&](const vset &side) {
            for (int u : inner_leaf)
                for (int w : g2.adj[u])
                    if (set_contains(side, w)) return true;
            return false;
        };
        if (n1.size() == 1 && !inner_touches(path2r)) {
            out.push_back({c, eg_decomposition::R2});
        } else if (n2.size() == 1 && !inner_touches(path1r)) {
            out.push_back({c, eg_decomposition::R3});
        } else {
            return blame("a separable leftover component fits neither one-sided pattern");
        }
        for (auto &blk : leaf_blocks) egc.push_back(blk);
    }
    return true;
}

// DFS for two vertex-disjoint connector paths pairing {s,t} with {sp,tp},
// total length >= need; s/t/sp/tp occur only as endpoints
struct connector_search {
    const graph *g = nullptr;
    int s = 0, t = 0, sp = 0, tp = 0, need = 0;
    std::vector<char> used;
    std::vector<int> p1, p2;
    long long steps = 0;

    void tick() {
        if (++steps > 20000000) fail("BudgetExceeded", "connector search exhausted its budget");
    }
    int total() const { return (int)p1.size() - 1 + (int)p2.size() - 1; }

    // try `v` as the next vertex of the second connector (goal fixed by p1)
    bool go2(int v) {
        tick();
        int goal = (p1.back() == s) ? t : s;
        if (v == goal) {
            p2.push_back(v);
            if (total() >= need) return true;
            p2.pop_back();
            return false;
        }
        if (v == s || v == t || v == sp || v == tp) return false;
        p2.push_back(v);
        used[v] = 1;
        for (int w : g->adj[v])
            if (!used[w] && go2(w)) return true;
        used[v] = 0;
        p2.pop_back();
        return false;
    }

    bool start2() {
        if (used[tp]) return false;
        p2 = {tp};
        used[tp] = 1;
        int goal = (p1.back() == s) ? t : s;
        if (tp == goal) {
            if (total() >= need) return true;
        } else {
            for (int w : g->adj[tp])
                if (!used[w] && go2(w)) return true;
        }
        used[tp] = 0;
        p2.clear();
        return false;
    }

    // try `v` as the next vertex of the first connector
    bool go1(int v) {
        tick();
        if (v == s || v == t) {
            p1.push_back(v);
            used[v] = 1;
            if (start2()) return true;
            used[v] = 0;
            p1.pop_back();
            return false;
        }
        if (v == sp || v == tp) return false;
        p1.push_back(v);
        used[v] = 1;
        for (int w : g->adj[v])
            if (!used[w] && go1(w)) return true;
        used[v] = 0;
        p1.pop_back();
        return false;
    }
};

// two connector paths (first starts at sp, second at tp, each ending at s or
// t) with total length >= need, or absent after exhaustive search
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_connectors(
    const graph &g, int s, int t, int sp, int tp, int need) {
    if (sp == tp) fail("PreconditionViolated", "connector start vertices must differ");
    connector_search cs;
    cs.g = &g;
    cs.s = s;
    cs.t = t;
    cs.sp = sp;
    cs.tp = tp;
    cs.need = std::max(need, 0);
    cs.used.assign(g.n, 0);
    cs.p1 = {sp};
    cs.used[sp] = 1;
    bool ok = false;
    if (sp == s || sp == t) {
        ok = cs.start2();
    } else {
        for (int w : g.adj[sp])
            if (!cs.used[w] && cs.go1(w)) {
                ok = true;
                break;
            }
    }
    if (!ok) return std::nullopt;
    return std::make_pair(cs.p1, cs.p2);
}

}  // namespace

// ---- public operations -------------------------------------------------------

eg_build_result build_eg_decomposition(const eg_instance &inst) {
    const graph &g = inst.g;
    const vset &b = inst.b;
    if (!is_two_connected(g)) fail("NotTwoConnected", "host graph must be 2-connected");
    if (!set_contains(b, inst.s) || !set_contains(b, inst.t) || inst.s == inst.t)
        fail("PreconditionViolated", "distinct terminals inside the excluded set required");
    int del = min_degree_outside(g, b);
    if (del < 8) fail("PreconditionViolated", "residual minimum degree below 8");
    if (4 * inst.k + 2 * (int)b.size() + 4 > del)
        fail("PreconditionViolated", "parameters too large for the residual degree");
    int target = del + inst.k;

    certificate p = generalized_eg_st_path(g, b, inst.s, inst.t);
    for (int guard = 0; guard <= g.n + 2; guard++) {
        if (p.length() >= target) return {p, std::nullopt};
        refined_view v = make_view(g, b, p);
        auto np = enlarge_once(v);
        if (!np) break;
        certificate rp = certificate::make_path(*np);
        std::string why;
        if (!verify_certificate(v.gr, rp, &why))
            fail("InvariantViolated", "broken enlargement: " + why);
        certificate lifted = lift_certificate(g, v.cm, rp);
        if (lifted.length() <= p.length())
            fail("InvariantViolated", "enlargement did not lengthen the path");
        p = lifted;
    }
    if (p.length() >= target) return {p, std::nullopt};

    refined_view v = make_view(g, b, p);
    int m = (int)v.pp.size();
    int start_max = 0, end_min = m - 1;
    for (const vset &c : v.comps) {
        if (comp_all_b(v, c)) continue;
        for (auto [i, u] : comp_contacts(v, c)) {
            (void)u;
            if (i <= m - 1 - i)
                start_max = std::max(start_max, i);
            else
                end_min = std::min(end_min, i);
        }
    }
    if (start_max >= end_min) {
        if (auto r = rescue_long_path(g, b, v, start_max, end_min, target)) return {*r, std::nullopt};
        fail("GuaranteeViolated", "stalled path has overlapping end segments");
    }
    if (end_min - start_max < del) {
        if (auto r = rescue_long_path(g, b, v, start_max, end_min, target)) return {*r, std::nullopt};
        fail("GuaranteeViolated", "stalled path has a short middle and no rescue applied");
    }

    eg_decomposition d;
    d.host = p;
    d.p1 = certificate::make_path({p.seq.begin(), p.seq.begin() + start_max + 1});
    d.p2 = certificate::make_path({p.seq.begin() + end_min, p.seq.end()});
    auto pr2 = b_refine_all(g, set_union(normalize_set(d.p1.seq), normalize_set(d.p2.seq)), b);
    d.refined = pr2.first;
    d.rmap = pr2.second;
    std::string why;
    if (!derive_components(g, b, d.p1, d.p2, d.refined, d.rmap, d.components,
                           d.eg_components, &why)) {
        if (auto r = rescue_long_path(g, b, v, start_max, end_min, target)) return {*r, std::nullopt};
        fail("GuaranteeViolated", "stalled without a certified decomposition: " + why);
    }
    if (!validate_eg_decomposition(d, g, b, &why))
        fail("InvariantViolated", "constructed decomposition rejected: " + why);
    return {std::nullopt, d};
}

bool validate_eg_decomposition(const eg_decomposition &d, const graph &g, const vset &b,
                               std::string *why) {
    auto blame = [&](const std::string &msg) {
        if (why) *why = msg;
        return false;
    };
    std::string vcwhy;
    if (!verify_certificate(g, d.host, &vcwhy)) return blame("host path invalid: " + vcwhy);
    if (d.p1.seq.empty() || d.p2.seq.empty()) return blame("empty end segment");
    size_t l1 = d.p1.seq.size(), l2 = d.p2.seq.size();
    if (l1 + l2 > d.host.seq.size()) return blame("end segments overlap");
    if (!std::equal(d.p1.seq.begin(), d.p1.seq.end(), d.host.seq.begin()))
        return blame("first segment is not a host prefix");
    if (!std::equal(d.p2.seq.rbegin(), d.p2.seq.rend(), d.host.seq.rbegin()))
        return blame("second segment is not a host suffix");
    int del = min_degree_outside(g, b);
    int middle = d.host.length() - d.p1.length() - d.p2.length();
    if (middle < del) return blame("middle segment shorter than the residual degree");
    auto pr = b_refine_all(g, set_union(normalize_set(d.p1.seq), normalize_set(d.p2.seq)), b);
    std::vector<eg_decomposition::comp> comps;
    std::vector<vset> egc;
    std::string dwhy;
    if (!derive_components(g, b, d.p1, d.p2, pr.first, pr.second, comps, egc, &dwhy))
        return blame(dwhy);
    auto canon = [](std::vector<eg_decomposition::comp> cs) {
        std::vector<std::pair<vset, int>> out;
        for (auto &c : cs) out.push_back({c.verts, (int)c.kind});
        std::sort(out.begin(), out.end());
        return out;
    };
    if (!d.components.empty() && canon(d.components) != canon(comps))
        return blame("claimed component classification disagrees with the derived one");
    if (!d.eg_components.empty()) {
        auto a = d.eg_components, c = egc;
        std::sort(a.begin(), a.end());
        std::sort(c.begin(), c.end());
        if (a != c) return blame("claimed component list disagrees with the derived one");
    }
    return true;
}

component_frame extract_component_frame(const eg_decomposition &d, const graph &g,
                                        const vset &b, const vset &m) {
    const graph &g2 = d.refined;
    const contraction_map &cm = d.rmap;
    const eg_decomposition::comp *host = nullptr;
    for (const auto &c : d.components) {
        bool sub = true;
        for (int x : m)
            if (!set_contains(c.verts, x)) sub = false;
        if (sub && c.kind != eg_decomposition::all_b) {
            host = &c;
            break;
        }
    }
    if (!host) fail("PreconditionViolated", "not a component of this decomposition");
    vset path1r, path2r;
    for (int x : d.p1.seq) path1r.push_back(cm.image[x]);
    for (int x : d.p2.seq) path2r.push_back(cm.image[x]);
    path1r = normalize_set(path1r);
    path2r = normalize_set(path2r);

    auto build = [&](vset kv, int sp_orig, int tp_orig) {
        component_frame fr;
        kv = normalize_set(kv);
        fr.sub = induced_subgraph(g, kv, &fr.to_orig);
        fr.s_prime = fr.t_prime = -1;
        for (int i = 0; i < fr.sub.n; i++) {
            if (fr.to_orig[i] == sp_orig) fr.s_prime = i;
            if (fr.to_orig[i] == tp_orig) fr.t_prime = i;
        }
        if (fr.s_prime < 0 || fr.t_prime < 0 || fr.s_prime == fr.t_prime)
            fail("InvariantViolated", "frame terminals missing");
        return fr;
    };

    if (host->kind == eg_decomposition::R1) {
        auto side_info = [&](const vset &side, vset &mv, vset &pv) {
            for (int u : m)
                for (int w : g2.adj[u])
                    if (set_contains(side, w)) {
                        mv.push_back(u);
                        pv.push_back(w);
                    }
            mv = normalize_set(mv);
            pv = normalize_set(pv);
        };
        vset mv1, pv1, mv2, pv2;
        side_info(path1r, mv1, pv1);
        side_info(path2r, mv2, pv2);
        if (mv1.empty() || mv2.empty())
            fail("InvariantViolated", "frame component misses an end segment");
        bool v1 = mv1.size() == 1, v2 = mv2.size() == 1;
        if (v1 && v2) return build(orig_of(cm, m), cm.rep[mv1[0]], cm.rep[mv2[0]]);
        if (!v1 && !v2) {
            if (pv1.size() != 1 || pv2.size() != 1)
                fail("InvariantViolated", "end-segment matching above one");
            vset kv = orig_of(cm, m);
            kv.push_back(cm.rep[pv1[0]]);
            kv.push_back(cm.rep[pv2[0]]);
            return build(kv, cm.rep[pv1[0]], cm.rep[pv2[0]]);
        }
        // one pinched component vertex, one pinched segment vertex
        int w1 = v1 ? pv2[0] : pv1[0];  // segment vertex with several component neighbors
        int vv = v1 ? mv1[0] : mv2[0];  // unique component vertex on the other side
        vset bprime(cm.group[vv]);
        bprime = set_minus(bprime, {cm.rep[vv]});
        vset kv = set_minus(orig_of(cm, m), bprime);
        kv.push_back(cm.rep[w1]);
        if (!g2.has_edge(w1, vv)) return build(kv, cm.rep[w1], cm.rep[vv]);
        {
            std::vector<int> to_k;
            graph ktry = induced_subgraph(g, normalize_set(kv), &to_k);
            if (is_two_connected(ktry)) return build(kv, cm.rep[w1], cm.rep[vv]);
        }
        vset wn;  // neighbors of the pinch vertex inside the component
        for (int u : g2.adj[w1])
            if (set_contains(m, u)) wn.push_back(u);
        wn = normalize_set(wn);
        if (wn.size() != 2)
            fail("InvariantViolated", "pinch vertex degree into the component is not two");
        int other = wn[0] == vv ? wn[1] : wn[0];
        return build(orig_of(cm, m), cm.rep[other], cm.rep[vv]);
    }

    // separable: m is a leaf block of the host component
    const vset &side = host->kind == eg_decomposition::R2 ? path1r : path2r;
    vset wv;
    for (int u : host->verts)
        for (int w : g2.adj[u])
            if (set_contains(side, w)) wv.push_back(w);
    wv = normalize_set(wv);
    if (wv.size() != 1) fail("InvariantViolated", "separable component without a single anchor");
    int w = wv[0];
    std::vector<int> to_sub;
    graph sub = induced_subgraph(g2, host->verts, &to_sub);
    block_tree bt = block_decomposition(sub);
    int c = -1;
    for (size_t i = 0; i < bt.blocks.size(); i++) {
        vset blk;
        for (int x : bt.blocks[i]) blk.push_back(to_sub[x]);
        if (normalize_set(blk) == m) {
            if (bt.block_cuts[i].size() != 1)
                fail("PreconditionViolated", "chosen block is not a leaf block");
            c = to_sub[bt.block_cuts[i][0]];
        }
    }
    if (c < 0) fail("PreconditionViolated", "chosen set is not a leaf block");
    vset inner_adj_w;
    for (int u : g2.adj[w])
        if (set_contains(m, u) && u != c) inner_adj_w.push_back(u);
    inner_adj_w = normalize_set(inner_adj_w);
    if (inner_adj_w.empty())
        fail("InvariantViolated", "leaf block has no inner contact with its anchor");
    if (inner_adj_w.size() == 1)
        return build(orig_of(cm, m), cm.rep[inner_adj_w[0]], cm.rep[c]);
    // several inner contacts: anchor joins the frame, with the b vertices
    // reachable from the block interior once the cut vertex is removed
    vset horig = orig_of(cm, host->verts);
    vset minus_c = set_minus(horig, {cm.rep[c]});
    std::vector<int> to_h;
    graph hsub = induced_subgraph(g, minus_c, &to_h);
    std::vector<char> alive(hsub.n, 1);
    auto hcomps = connected_components(hsub, alive);
    vset morig = orig_of(cm, m);
    vset reach;
    for (const vset &cc : hcomps) {
        bool touches = false;
        for (int x : cc)
            if (set_contains(morig, to_h[x])) touches = true;
        if (touches)
            for (int x : cc) reach.push_back(to_h[x]);
    }
    reach = normalize_set(reach);
    vset bprime;
    for (int x : reach)
        if (set_contains(b, x) && !set_contains(morig, x)) bprime.push_back(x);
    vset kv = set_union(morig, normalize_set(bprime));
    kv.push_back(cm.rep[w]);
    return build(kv, cm.rep[w], cm.rep[c]);
}

int almost_ham_path_branch(const graph &g, const vset &b, int s, int t,
                           certificate *witness) {
    int del = min_degree_outside(g, b);
    if (6 * del < 5 * g.n || del < 4 * (int)b.size())
        fail("PreconditionViolated", "outside degree too small for the spanning-path regime");
    vset innerb = set_minus(b, normalize_set({s, t}));
    if (innerb.size() > 20) fail("UnsupportedScale", "too many excluded vertices to branch on");
    int best = -1;
    certificate bw;
    for (uint32_t mask = 0; mask < (1u << innerb.size()); mask++) {
        vset bp;
        for (size_t i = 0; i < innerb.size(); i++)
            if (mask >> i & 1) bp.push_back(innerb[i]);
        std::vector<int> to;
        graph g2 = remove_vertices(g, bp, &to);
        int s2 = -1, t2 = -1;
        for (int i = 0; i < g2.n; i++) {
            if (to[i] == s) s2 = i;
            if (to[i] == t) t2 = i;
        }
        auto hp = ham_st_path(g2, s2, t2);
        if (!hp) continue;
        if (hp->length() - del > best) {
            best = hp->length() - del;
            std::vector<int> seq;
            for (int x : hp->seq) seq.push_back(to[x]);
            bw = certificate::make_path(seq);
        }
    }
    if (best < 0) fail("GuaranteeViolated", "no spanning path for any exclusion subset");
    if (witness) {
        std::string why;
        if (!verify_certificate(g, bw, &why)) fail("InvariantViolated", "spanning witness: " + why);
        *witness = bw;
    }
    return best;
}

eg_answer solve_eg_path(const eg_instance &inst) {
    const graph &g = inst.g;
    if (!is_two_connected(g)) fail("NotTwoConnected", "2-connected host required");
    if (inst.s == inst.t) fail("PreconditionViolated", "distinct terminals required");
    if (!set_contains(inst.b, inst.s) || !set_contains(inst.b, inst.t))
        fail("PreconditionViolated", "terminals must be in the excluded set");
    int del = min_degree_outside(g, inst.b);
    if (inst.k <= 0) return {0, generalized_eg_st_path(g, inst.b, inst.s, inst.t)};
    if (5 * inst.k + 5 * (int)inst.b.size() + 6 >= del) {
        for (int x = inst.k; x >= 0; x--)
            if (auto w = st_path_at_least(g, inst.s, inst.t, del + x)) return {x, *w};
        fail("InvariantViolated", "no path of the guaranteed base length");
    }
    auto built = build_eg_decomposition({g, inst.b, inst.s, inst.t, inst.k});
    if (built.long_path) return {inst.k, *built.long_path};
    const eg_decomposition &d = *built.dec;

    if ((int)set_union(normalize_set(d.host.seq), inst.b).size() == g.n) {
        certificate w;
        int x = almost_ham_path_branch(g, inst.b, inst.s, inst.t, &w);
        return {std::min(x, inst.k), w};
    }

    int x = 0;
    certificate best = d.host;  // length >= del by construction
    for (const vset &m : d.eg_components) {
        component_frame fr = extract_component_frame(d, g, inst.b, m);
        vset bsub;
        for (int i = 0; i < fr.sub.n; i++)
            if (set_contains(inst.b, fr.to_orig[i])) bsub.push_back(i);
        bsub = set_union(normalize_set(bsub), normalize_set({fr.s_prime, fr.t_prime}));
        certificate kp;
        try {
            eg_answer ra = solve_eg_path({fr.sub, bsub, fr.s_prime, fr.t_prime, inst.k});
            kp = ra.witness;
        } catch (const solver_error &e) {
            if (e.code == "EmptyResidual" && fr.sub.n <= 16) {
                auto orc = oracle_longest_st_path(fr.sub, fr.s_prime, fr.t_prime);
                if (!orc.found || orc.length == 0) continue;
                kp = orc.cert;
            } else {
                throw;
            }
        }
        int pathlen = kp.length();
        std::vector<int> kseq;
        for (int v : kp.seq) kseq.push_back(fr.to_orig[v]);
        int sO = fr.to_orig[fr.s_prime], tO = fr.to_orig[fr.t_prime];
        vset kverts = normalize_set(fr.to_orig);
        vset interior = set_minus(kverts, normalize_set({sO, tO}));
        // connector host: the graph without the frame interior and without
        // the direct edge between the frame terminals
        std::vector<int> hmap;
        graph h = remove_vertices(g, interior, &hmap);
        int hs = -1, ht = -1, hsp = -1, htp = -1;
        for (int i = 0; i < h.n; i++) {
            if (hmap[i] == inst.s) hs = i;
            if (hmap[i] == inst.t) ht = i;
            if (hmap[i] == sO) hsp = i;
            if (hmap[i] == tO) htp = i;
        }
        if (h.has_edge(hsp, htp)) {
            auto es = h.edges();
            es.erase(std::remove(es.begin(), es.end(),
                                 std::make_pair(std::min(hsp, htp), std::max(hsp, htp))),
                     es.end());
            h = make_graph(h.n, es);
        }
        int r0 = std::max(del + inst.k - pathlen, 0);
        for (int r = r0; r >= 0; r--) {
            auto con = find_connectors(h, hs, ht, hsp, htp, r);
            if (!con) continue;
            auto [c1, c2] = *con;  // c1 from hsp, c2 from htp, ends in {hs,ht}
            auto to_orig_seq = [&](const std::vector<int> &sq) {
                std::vector<int> out;
                for (int v : sq) out.push_back(hmap[v]);
                return out;
            };
            std::vector<int> a1 = to_orig_seq(c1), a2 = to_orig_seq(c2);
            // orient: start arc ends at s, tail arc ends at t
            if (a1.back() == inst.t) std::swap(a1, a2);
            std::reverse(a1.begin(), a1.end());  // s .. frame terminal
            std::vector<int> kmid = kseq;
            if (a1.back() != kmid.front()) std::reverse(kmid.begin(), kmid.end());
            std::vector<int> full = a1;
            full.insert(full.end(), kmid.begin() + 1, kmid.end());
            if (a2.front() != full.back()) continue;
            full.insert(full.end(), a2.begin() + 1, a2.end());
            certificate cand = certificate::make_path(full);
            std::string why;
            if (!verify_certificate(g, cand, &why))
                fail("InvariantViolated", "stitched path invalid: " + why);
            if (cand.length() > best.length()) best = cand;
            x = std::max(x, cand.length() - del);
            break;
        }
    }
    x = std::min(x, inst.k);
    if (best.length() < del + x) fail("InvariantViolated", "witness shorter than the reported bound");
    return {x, best};
}
