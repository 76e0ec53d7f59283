// Acceptance harness: ten independent criteria, one pass/fail line each.
// Exits nonzero if any criterion fails. Every check is anchored either on an
// exhaustive oracle or on a definitional validator; domains beyond exhaustive
// reach use fixed seeded enumerations.

#include "almostham.hpp"
#include "classic.hpp"
#include "colorcoding.hpp"
#include "driver.hpp"
#include "egpath.hpp"
#include "gen.hpp"
#include "oracle.hpp"
#include "stcycle.hpp"
#include "vcad.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

namespace {

using clk = std::chrono::steady_clock;

double secs_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

int pc(int m) { return std::popcount((unsigned)m); }

int bits_of(const vset &s) {
    int m = 0;
    for (int v : s) m |= 1 << v;
    return m;
}

coloring_source det_src() {
    coloring_source src;
    src.mode = coloring_source::deterministic;
    return src;
}

graph graph_from_mask(int n, long long mask) {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++, bit++)
            if (mask >> bit & 1) es.push_back({i, j});
    return make_graph(n, es);
}

// every labeled graph on n vertices passing `keep`
void for_each_graph(int n, const std::function<bool(const graph &)> &keep,
                    const std::function<void(const graph &)> &fn) {
    long long total = 1LL << (n * (n - 1) / 2);
    for (long long mask = 0; mask < total; mask++) {
        graph g = graph_from_mask(n, mask);
        if (keep(g)) fn(g);
    }
}

graph random_labeled(int n, double dens, std::mt19937 &rng) {
    std::bernoulli_distribution coin(dens);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (coin(rng)) es.push_back({i, j});
    return make_graph(n, es);
}

bool ham_path_exists(const graph &g) {
    if (g.n == 0) return false;
    if (g.n == 1) return true;
    std::vector<std::vector<char>> dp(1 << g.n, std::vector<char>(g.n, 0));
    for (int v = 0; v < g.n; v++) dp[1 << v][v] = 1;
    for (int mask = 1; mask < (1 << g.n); mask++)
        for (int v = 0; v < g.n; v++) {
            if (!dp[mask][v]) continue;
            if (mask == (1 << g.n) - 1) return true;
            for (int u : g.adj[v])
                if (!(mask >> u & 1)) dp[mask | 1 << u][u] = 1;
        }
    return false;
}

// simple cycle on exactly L vertices containing all of req
bool exact_cycle_with(const graph &g, int L, const vset &req) {
    if (L < 3 || L > g.n) return false;
    int reqb = bits_of(req);
    int amax = g.n - 1;
    for (int v : req) amax = std::min(amax, v);
    for (int a = 0; a <= amax; a++) {
        std::vector<int> ends(1 << g.n, 0);
        ends[1 << a] = 1 << a;
        for (int mask = 1 << a; mask < (1 << g.n); mask++) {
            if (mask & ((1 << (a + 1)) - 1) & ~(1 << a)) continue;
            if (!(mask >> a & 1)) continue;
            int e = ends[mask];
            if (!e) continue;
            if (pc(mask) == L) {
                if ((mask & reqb) == reqb)
                    for (int v = a + 1; v < g.n; v++)
                        if ((e >> v & 1) && g.has_edge(v, a)) return true;
                continue;
            }
            for (int v = 0; v < g.n; v++) {
                if (!(e >> v & 1)) continue;
                for (int u : g.adj[v])
                    if (u > a && !(mask >> u & 1)) ends[mask | 1 << u] |= 1 << u;
            }
        }
    }
    return false;
}

graph random_split_local(int ns, int ni, double dens, std::mt19937 &rng) {
    std::bernoulli_distribution coin(dens);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < ns; i++)
        for (int j = i + 1; j < ns; j++) es.push_back({i, j});
    for (int i = 0; i < ns; i++)
        for (int j = 0; j < ni; j++)
            if (coin(rng)) es.push_back({i, ns + j});
    return make_graph(ns + ni, es);
}

std::pair<vset, vset> threshold_split(const graph &g, const vset &s, const vset &x, int p) {
    auto inx = to_mask(g.n, x);
    vset a, z;
    for (int v : s) {
        int cnt = 0;
        for (int u : g.adj[v])
            if (inx[u]) cnt++;
        (cnt >= p + 1 ? a : z).push_back(v);
    }
    return {a, z};
}

// ---- criteria --------------------------------------------------------------

bool crit1_constructive_bound(std::string &d) {
    auto t0 = clk::now();
    std::mt19937 rng(11);
    int fails = 0;
    for (int i = 0; i < 500; i++) {
        int n = 8 + (int)(rng() % 53);
        double dens = 0.15 + (rng() % 60) / 100.0;
        graph g = gen_two_connected(n, dens, (uint32_t)(1000 + i));
        vset b;
        int bs = (int)(rng() % 6);
        while ((int)b.size() < bs) {
            int v = (int)(rng() % n);
            if (!set_contains(b, v)) b = set_union(b, {v});
        }
        int delta = min_degree_outside(g, b);
        int bound = std::min(n - (int)b.size(), 2 * delta);
        try {
            certificate c = generalized_dirac_cycle(g, b);
            if (!verify_certificate(g, c) || c.length() < bound) fails++;
        } catch (const solver_error &) {
            fails++;
        }
    }
    double el = secs_since(t0);
    d = "500 instances, " + std::to_string(fails) + " failures, " +
        std::to_string((int)(el * 1000)) + " ms";
    return fails == 0 && el < 60.0;
}

bool crit2_stcycle_exact(std::string &d) {
    auto t0 = clk::now();
    long long checked = 0, dis = 0;
    auto probe = [&](const graph &g) {
        for (int s = 0; s < g.n; s++)
            for (int t = s + 1; t < g.n; t++) {
                oracle_result r = oracle_st_cycle(g, s, t);
                for (int k = 0; k <= g.n; k++) {
                    bool exp = r.found && r.length >= k;
                    std::optional<certificate> got;
                    try {
                        got = solve_st_cycle({g, s, t, k}, det_src());
                    } catch (const solver_error &) {
                        dis++;
                        continue;
                    }
                    checked++;
                    if ((bool)got != exp) {
                        dis++;
                    } else if (got) {
                        bool on_s = set_contains(normalize_set(got->seq), s);
                        bool on_t = set_contains(normalize_set(got->seq), t);
                        if (!verify_certificate(g, *got) || got->length() < std::max(k, 3) ||
                            !on_s || !on_t)
                            dis++;
                    }
                }
            }
    };
    for (int n = 4; n <= 5; n++) for_each_graph(n, is_connected, probe);
    for (int n = 6; n <= 8; n++) {
        std::mt19937 rng(100 + n);
        int taken = 0;
        while (taken < 40) {
            graph g = random_labeled(n, 0.3 + (rng() % 50) / 100.0, rng);
            if (!is_connected(g)) continue;
            probe(g);
            taken++;
        }
    }
    d = std::to_string(checked) + " cases, " + std::to_string(dis) + " disagreements, " +
        std::to_string((int)(secs_since(t0) * 1000)) + " ms";
    return dis == 0;
}

bool crit3_egpath_exact(std::string &d) {
    auto t0 = clk::now();
    long long checked = 0, dis = 0;
    auto probe = [&](const graph &g, int s, int t) {
        vset b = normalize_set({s, t});
        int delta = min_degree_outside(g, b);
        int longest = dp_longest_st_path(g, s, t);
        for (int k = 0; k <= 4; k++) {
            try {
                eg_answer a = solve_eg_path({g, b, s, t, k});
                checked++;
                bool ok = a.x == std::min(k, longest - delta) &&
                          verify_certificate(g, a.witness) && a.witness.seq.front() == s &&
                          a.witness.seq.back() == t && a.witness.length() >= delta + a.x;
                if (!ok) dis++;
            } catch (const solver_error &) {
                dis++;
            }
        }
    };
    auto all_pairs = [&](const graph &g) {
        for (int s = 0; s < g.n; s++)
            for (int t = s + 1; t < g.n; t++) probe(g, s, t);
    };
    for (int n = 4; n <= 5; n++) for_each_graph(n, is_two_connected, all_pairs);
    std::mt19937 rng(211);
    for (int n = 6; n <= 12; n++) {
        int count = n <= 9 ? 20 : 8;
        for (int i = 0; i < count; i++) {
            graph g = gen_two_connected(n, 0.3 + (rng() % 55) / 100.0, rng());
            for (int rep = 0; rep < 4; rep++) {
                int s = (int)(rng() % n), t = (int)(rng() % n);
                if (s != t) probe(g, s, t);
            }
        }
    }
    d = std::to_string(checked) + " cases, " + std::to_string(dis) + " disagreements, " +
        std::to_string((int)(secs_since(t0) * 1000)) + " ms";
    return dis == 0;
}

bool crit4_path_cover_characterization(std::string &d) {
    auto t0 = clk::now();
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> dens(0.65, 1.0);
    int yes = 0, no = 0, dis = 0;
    for (int iter = 0; iter < 600; iter++) {
        int ns = 3 + iter % 3, ni = ns + (iter / 3) % 3;
        graph g = random_split_local(ns, ni, dens(rng), rng);
        vset s;
        for (int v = 0; v < ns; v++) s.push_back(v);
        vset b;
        if (iter % 4 == 0) b.push_back((int)(rng() % ns));
        int delta = min_degree_outside(g, b);
        int p = ns - delta;
        if (p < 0 || p > 2) continue;
        vset i;
        for (int v = ns; v < g.n; v++) i.push_back(v);
        int want_x = std::max(delta - 3 * p, 0);
        vset x(i.begin(), i.begin() + std::min((size_t)want_x, i.size()));
        auto [a, z] = threshold_split(g, s, x, p);
        for (int k = 0; k <= 2 * p; k++) {
            int target = 2 * delta + k;
            if (target < 3) continue;
            bool cyc = exact_cycle_with(g, target, set_union(x, z));
            std::optional<path_cover_spec> spec;
            try {
                spec = path_cover_exists(g, b, s, k, x, a, z);
            } catch (const solver_error &) {
                dis++;
                continue;
            }
            if (spec && !cyc) dis++;  // backward: a witness must yield a cycle
            // forward direction, under the guard that the independent share of
            // the cycle exceeds what can ride next to the weak cover side
            if (cyc && delta + k - p > 2 * (int)z.size() && !spec) dis++;
            if (spec) {
                try {
                    certificate c = reconstruct_cycle(*spec, g, b, s, k);
                    auto on = to_mask(g.n, normalize_set(c.seq));
                    bool all_on = true;
                    for (int v : set_union(x, z))
                        if (!on[v]) all_on = false;
                    if (!verify_certificate(g, c) || c.length() != target || !all_on) dis++;
                } catch (const solver_error &) {
                    dis++;
                }
                yes++;
            } else {
                no++;
            }
        }
    }
    d = std::to_string(yes) + " yes / " + std::to_string(no) + " no, " + std::to_string(dis) +
        " failures, " + std::to_string((int)(secs_since(t0) * 1000)) + " ms";
    return dis == 0 && yes > 20 && no > 20;
}

bool crit5_ldc_end_to_end(std::string &d) {
    auto t0 = clk::now();
    long long checked = 0, dis = 0;
    std::mt19937 brng(31);
    auto probe = [&](const graph &g) {
        int longest = oracle_longest_cycle(g).length;
        for (int bs = 0; bs <= 2; bs++) {
            vset b;
            while ((int)b.size() < bs) {
                int v = (int)(brng() % g.n);
                if (!set_contains(b, v)) b = set_union(b, {v});
            }
            if ((int)b.size() >= g.n) continue;
            for (int k = 0; k <= 4; k++) {
                try {
                    ldc_verdict v = solve_ldc({g, b, k}, det_src());
                    checked++;
                    bool exp = longest >= v.threshold;
                    if (v.yes != exp) dis++;
                    else if (v.yes && (!verify_certificate(g, *v.cert) ||
                                       v.cert->length() < v.threshold))
                        dis++;
                } catch (const solver_error &) {
                    dis++;
                }
            }
        }
    };
    for (int n = 4; n <= 5; n++) for_each_graph(n, is_two_connected, probe);
    std::mt19937 rng(312);
    for (int n = 6; n <= 10; n++)
        for (int i = 0; i < 12; i++)
            probe(gen_two_connected(n, 0.3 + (rng() % 55) / 100.0, rng()));
    // the boundary instance: threshold 6+k, longest cycle 9
    std::vector<std::pair<int, int>> pe;
    for (int i = 0; i < 5; i++) {
        pe.push_back({i, (i + 1) % 5});
        pe.push_back({i, 5 + i});
        pe.push_back({5 + i, 5 + (i + 2) % 5});
    }
    graph petersen = make_graph(10, pe);
    for (int k = 0; k <= 4; k++) {
        ldc_verdict v = solve_ldc({petersen, {}, k}, det_src());
        checked++;
        if (v.yes != (k <= 3)) dis++;
    }
    d = std::to_string(checked) + " cases, " + std::to_string(dis) + " disagreements, " +
        std::to_string((int)(secs_since(t0) * 1000)) + " ms";
    return dis == 0;
}

bool crit6_almost_ham(std::string &d) {
    auto t0 = clk::now();
    long long checked = 0, dis = 0;
    auto probe = [&](const graph &g, const vset &b, int k) {
        int delta = min_degree_outside(g, b);
        if (!is_two_connected(g) || (int)b.size() > k || 2 * delta < g.n - 2 * k) return;
        try {
            certificate c = almost_ham_solve(g, b, k, det_src());
            checked++;
            if (!verify_certificate(g, c) || c.length() != oracle_longest_cycle(g).length)
                dis++;
        } catch (const solver_error &) {
            dis++;
        }
    };
    std::mt19937 rng(71);
    for (int n = 6; n <= 12; n++)
        for (int i = 0; i < 15; i++) {
            graph g = random_labeled(n, 0.55 + (rng() % 40) / 100.0, rng);
            for (int k = 1; k <= 2; k++) {
                probe(g, {}, k);
                vset b{(int)(rng() % n)};
                if (k == 2) b = set_union(b, {(int)(rng() % n)});
                probe(g, b, k);
            }
        }
    int attempts = 0;
    while (attempts < 500) {
        int n = 8 + (int)(rng() % 7);
        graph g = random_labeled(n, 0.6 + (rng() % 35) / 100.0, rng);
        attempts++;
        probe(g, {}, 1 + (int)(rng() % 2));
    }
    d = std::to_string(checked) + " valid instances, " + std::to_string(dis) +
        " disagreements, " + std::to_string((int)(secs_since(t0) * 1000)) + " ms";
    return dis == 0 && checked > 100;
}

bool crit7_gadgets(std::string &d) {
    auto t0 = clk::now();
    long long ran = 0, dis = 0, skipped = 0;
    auto probe = [&](const graph &base) {
        bool ham = ham_path_exists(base);
        for (int variant = 0; variant < 2; variant++) {
            gadget_spec sp;
            sp.base = base;
            sp.eps_num = 3;
            sp.eps_den = 4;
            sp.variant = variant ? gadget_spec::cycle_gadget : gadget_spec::path_gadget;
            gadget gd;
            try {
                gd = build_gadget(sp);
            } catch (const solver_error &e) {
                // the cycle variant legitimately rejects bases whose isolated
                // vertices break the uniform-degree requirement, and bases too
                // small for any clique size to satisfy the ceiling equation
                bool isolated = base.n < 3;
                for (int v = 0; v < base.n; v++)
                    if (base.adj[v].empty()) isolated = true;
                if (variant == 1 && isolated && e.code == std::string("InvariantViolated"))
                    skipped++;
                else
                    dis++;
                continue;
            }
            oracle_budget bud;
            bud.max_vertices = 200;
            bud.max_millis = 120000;
            bool hy = variant == 0
                          ? oracle_path_at_least(gd.g, gd.s, gd.t, gd.threshold, nullptr, bud)
                          : oracle_cycle_at_least(gd.g, gd.threshold, nullptr, bud);
            ran++;
            if (hy != ham) dis++;
        }
    };
    for (int n = 2; n <= 5; n++)
        for_each_graph(n, [](const graph &) { return true; }, probe);
    for (int n = 6; n <= 7; n++) {
        std::mt19937 rng(500 + n);
        for (int i = 0; i < 200; i++) probe(random_labeled(n, 0.15 + (rng() % 70) / 100.0, rng));
    }
    d = std::to_string(ran) + " gadgets, " + std::to_string(skipped) + " degenerate bases, " +
        std::to_string(dis) + " failures, " + std::to_string((int)(secs_since(t0) * 1000)) +
        " ms";
    return dis == 0;
}

bool crit8_derandomization(std::string &d) {
    auto t0 = clk::now();
    int bad = 0;
    for (int n = 1; n <= 10; n++)
        for (int k = 1; k <= std::min(n, 3); k++)
            if (!validate_universal(build_universal(n, k))) bad++;
    for (int n = 3; n <= 10; n++)
        for (int k = 1; k <= 3; k++)
            if (!validate_separation3(build_separation3(n, k))) bad++;
    // randomized mode on seeded yes-instances: a ring with chords always has a
    // cycle of length n >= k through any terminal pair
    int misses = 0;
    for (int i = 0; i < 100; i++) {
        int n = 10 + i % 4;
        std::mt19937 rng(900 + i);
        std::vector<std::pair<int, int>> es;
        for (int v = 0; v < n; v++) es.push_back({v, (v + 1) % n});
        for (int c = 0; c < 3; c++) {
            int u = (int)(rng() % n), w = (int)(rng() % n);
            if (u != w) es.push_back({std::min(u, w), std::max(u, w)});
        }
        graph g = make_graph(n, es);
        int s = 0, t = 1 + (int)(rng() % (n - 1));
        coloring_source src;
        src.seed = 900 + i;
        auto got = solve_st_cycle({g, s, t, 5 + i % 2}, src);
        if (!got) misses++;
    }
    d = std::to_string(bad) + " invalid families, " + std::to_string(misses) +
        "/100 randomized misses, " + std::to_string((int)(secs_since(t0) * 1000)) + " ms";
    return bad == 0 && misses <= 50;
}

bool crit9_certificates(std::string &d) {
    auto t0 = clk::now();
    std::vector<std::pair<graph, certificate>> corpus;
    std::mt19937 rng(91);
    for (int i = 0; i < 12; i++) {
        int n = 8 + (int)(rng() % 10);
        graph g = gen_two_connected(n, 0.4 + (rng() % 40) / 100.0, rng());
        corpus.push_back({g, generalized_dirac_cycle(g, {})});
        oracle_result r = oracle_longest_cycle(g);
        if (r.found) corpus.push_back({g, r.cert});
        int s = 0, t = 1 + (int)(rng() % (n - 1));
        corpus.push_back({g, solve_eg_path({g, normalize_set({s, t}), s, t, 2}).witness});
        ldc_verdict v = solve_ldc({g, {}, 0}, det_src());
        if (v.yes) corpus.push_back({g, *v.cert});
    }
    int emitted_bad = 0;
    for (auto &[g, c] : corpus)
        if (!verify_certificate(g, c)) emitted_bad++;
    int accepted_mutants = 0;
    for (int i = 0; i < 1000; i++) {
        auto [g, c] = corpus[i % corpus.size()];
        switch (i % 5) {
            case 0: c.declared_length += 1; break;
            case 1: c.declared_length -= 1; break;
            case 2:
                if (c.seq.size() >= 2) {
                    c.seq.push_back(c.seq[c.seq.size() / 2]);
                    c.declared_length += 1;
                } else {
                    c.declared_length += 3;
                }
                break;
            case 3: c.seq[i % c.seq.size()] = g.n + 5; break;
            case 4:
                if (c.seq.size() >= 3) c.seq.erase(c.seq.begin() + (int)c.seq.size() / 2);
                else c.seq.clear();
                break;
        }
        if (verify_certificate(g, c)) accepted_mutants++;
    }
    d = std::to_string(corpus.size()) + " emitted certificates (" +
        std::to_string(emitted_bad) + " bad), " + std::to_string(accepted_mutants) +
        "/1000 mutants accepted, " + std::to_string((int)(secs_since(t0) * 1000)) + " ms";
    return emitted_bad == 0 && accepted_mutants == 0;
}

bool crit10_scale(std::string &d) {
    int n = 200, fails = 0;
    double worst = 0;
    for (int i = 0; i < 5; i++) {
        std::mt19937 rng(700 + i);
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        std::bernoulli_distribution coin(0.55);
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (coin(rng)) adj[u][v] = adj[v][u] = 1;
        // repair to the degree condition delta >= n/2
        for (int u = 0; u < n; u++) {
            int deg = 0;
            for (int v = 0; v < n; v++) deg += adj[u][v];
            for (int v = 0; deg < n / 2 && v < n; v++)
                if (v != u && !adj[u][v]) {
                    adj[u][v] = adj[v][u] = 1;
                    deg++;
                }
        }
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (adj[u][v]) es.push_back({u, v});
        graph g = make_graph(n, es);
        if (min_degree_outside(g, {}) < n / 2) {
            fails++;
            continue;
        }
        auto t0 = clk::now();
        ldc_verdict v = solve_ldc({g, {}, 0}, det_src());
        double el = secs_since(t0);
        worst = std::max(worst, el);
        if (!v.yes || v.cert->length() != n || !verify_certificate(g, *v.cert) || el >= 5.0)
            fails++;
    }
    d = "5 instances, " + std::to_string(fails) + " failures, worst " +
        std::to_string((int)(worst * 1000)) + " ms";
    return fails == 0;
}

}  // namespace

int main() {
    struct entry {
        const char *name;
        bool (*fn)(std::string &);
    };
    entry table[] = {
        {"1 constructive bound suite", crit1_constructive_bound},
        {"2 long (s,t)-cycle exactness", crit2_stcycle_exact},
        {"3 long (s,t)-path exactness", crit3_egpath_exact},
        {"4 path-cover characterization", crit4_path_cover_characterization},
        {"5 end-to-end long-cycle decision", crit5_ldc_end_to_end},
        {"6 almost-hamiltonian exactness", crit6_almost_ham},
        {"7 tightness gadgets", crit7_gadgets},
        {"8 derandomization validity", crit8_derandomization},
        {"9 certificate discipline", crit9_certificates},
        {"10 scale smoke test", crit10_scale},
    };
    int failed = 0;
    for (auto &e : table) {
        std::string detail;
        bool ok = false;
        try {
            ok = e.fn(detail);
        } catch (const std::exception &ex) {
            detail = std::string("exception: ") + ex.what();
        }
        std::printf("criterion %s: %s (%s)\n", e.name, ok ? "PASS" : "FAIL", detail.c_str());
        std::fflush(stdout);
        if (!ok) failed++;
    }
    return failed == 0 ? 0 : 1;
}
