#include "gen.hpp"

#include <random>

graph gen_two_connected(int n, double density, uint32_t seed) {
    if (n < 3) fail("PreconditionViolated", "gen_two_connected needs n >= 3");
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (coin(rng)) es.push_back({i, j});
    graph g = make_graph(n, es);

    auto pick = [&](const vset &s) { return s[std::uniform_int_distribution<int>(0, (int)s.size() - 1)(rng)]; };
    for (;;) {
        auto comps = connected_components(g);
        if (comps.size() > 1) {
            // join two components; always a new edge
            es.push_back({pick(comps[0]), pick(comps[1])});
            g = make_graph(n, es);
            continue;
        }
        auto bt = block_decomposition(g);
        if (bt.blocks.size() <= 1 && g.n >= 3 && g.m >= 3) break;
        if (bt.blocks.size() <= 1) {
            // n==3 with fewer than 3 edges can only repair to the triangle
            es.push_back({0, 1});
            es.push_back({1, 2});
            es.push_back({0, 2});
            g = make_graph(n, es);
            continue;
        }
        // bridge two blocks sharing a cut vertex; such an edge cannot already
        // exist (it would put both endpoints in one block), so blocks merge
        int c = bt.cut_vertices[0];
        std::vector<int> touching;
        for (size_t i = 0; i < bt.blocks.size(); i++)
            if (set_contains(bt.blocks[i], c)) touching.push_back((int)i);
        vset a = set_minus(bt.blocks[touching[0]], {c});
        vset b = set_minus(bt.blocks[touching[1]], {c});
        es.push_back({pick(a), pick(b)});
        g = make_graph(n, es);
    }
    return g;
}

graph make_split_graph(int ns, int ni, const std::vector<vset> &nbrs_of_i) {
    if ((int)nbrs_of_i.size() != ni)
        fail("PreconditionViolated", "need one clique-neighborhood per independent vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < ns; i++)
        for (int j = i + 1; j < ns; j++) es.push_back({i, j});
    for (int i = 0; i < ni; i++)
        for (int x : nbrs_of_i[i]) {
            if (x < 0 || x >= ns) fail("PreconditionViolated", "neighbor outside the clique");
            es.push_back({x, ns + i});
        }
    return make_graph(ns + ni, es);
}

graph complete_split_graph(int ns, int ni) {
    vset all;
    for (int i = 0; i < ns; i++) all.push_back(i);
    return make_split_graph(ns, ni, std::vector<vset>(ni, all));
}

graph random_split_graph(int ns, int ni, double density, uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(density);
    std::vector<vset> nbrs(ni);
    for (int i = 0; i < ni; i++)
        for (int x = 0; x < ns; x++)
            if (coin(rng)) nbrs[i].push_back(x);
    return make_split_graph(ns, ni, nbrs);
}

gadget build_gadget(const gadget_spec &spec) {
    const graph &base = spec.base;
    int n = base.n;
    if (n < 1) fail("PreconditionViolated", "empty base graph");
    if (spec.eps_num <= 0 || spec.eps_num >= spec.eps_den)
        fail("PreconditionViolated", "epsilon must lie strictly between 0 and 1");
    bool with_apex = spec.variant == gadget_spec::path_gadget;
    int want = with_apex ? n : n - 1;
    if (want < 1) fail("PreconditionViolated", "cycle variant needs a base with n >= 2");

    auto ceil_eps = [&](int p) {
        long long x = (long long)spec.eps_num * (p + 1);
        return (int)((x + spec.eps_den - 1) / spec.eps_den);
    };
    int p = -1;
    for (int cand = 1; cand <= (want + 1) * spec.eps_den; cand++)
        if (ceil_eps(cand) == want) { p = cand; break; }
    if (p < 0) fail("InvariantViolated", "no clique size satisfies the ceiling equation");

    // layout: base 0..n-1, [apex t], s, then one p-clique per anchored vertex
    std::vector<std::pair<int, int>> es = base.edges();
    int t = -1;
    int next = n;
    if (with_apex) {
        t = next++;
        for (int v = 0; v < n; v++) es.push_back({v, t});
    }
    int s = next++;
    std::vector<int> anchors;
    for (int v = 0; v < n; v++) anchors.push_back(v);
    if (with_apex) anchors.push_back(t);
    for (int v : anchors) {
        int q0 = next;
        next += p;
        for (int i = 0; i < p; i++) {
            for (int j = i + 1; j < p; j++) es.push_back({q0 + i, q0 + j});
            es.push_back({q0 + i, v});
            es.push_back({q0 + i, s});
        }
    }
    gadget out;
    out.g = make_graph(next, es);
    out.s = s;
    out.t = t;
    out.p = p;
    out.threshold = (with_apex ? 1 : 2) * (p + 1) + want;

    int mindeg = out.g.n ? out.g.degree(0) : 0;
    for (int v = 0; v < out.g.n; v++) mindeg = std::min(mindeg, out.g.degree(v));
    if (mindeg != p + 1)
        fail("InvariantViolated", "gadget minimum degree " + std::to_string(mindeg) +
                                      " != " + std::to_string(p + 1));
    return out;
}
