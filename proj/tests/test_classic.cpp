#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classic.hpp"
#include "gen.hpp"
#include "oracle.hpp"

#include <random>

namespace {

graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; i++) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return make_graph(10, es);
}

graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; i++) es.push_back({i, (i + 1) % n});
    return make_graph(n, es);
}

graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) es.push_back({i, j});
    return make_graph(n, es);
}

graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; i++)
        for (int j = 0; j < b; j++) es.push_back({i, a + j});
    return make_graph(a + b, es);
}

int min_deg(const graph &g) {
    int d = g.n;
    for (int v = 0; v < g.n; v++) d = std::min(d, g.degree(v));
    return d;
}

vset random_subset(int n, int maxsz, std::mt19937 &rng) {
    std::uniform_int_distribution<int> szd(0, maxsz);
    int sz = szd(rng);
    vset b;
    std::uniform_int_distribution<int> vd(0, n - 1);
    for (int i = 0; i < sz; i++) b.push_back(vd(rng));
    return normalize_set(b);
}

}  // namespace

TEST_CASE("minimum degree plus one cycle") {
    auto c = cycle_min_degree_plus_one(petersen());
    CHECK(verify_certificate(petersen(), c));
    CHECK(c.length() >= 4);
    CHECK(cycle_min_degree_plus_one(complete_graph(5)).length() >= 5);
    CHECK_THROWS_WITH_AS(cycle_min_degree_plus_one(make_graph(3, {{0, 1}, {1, 2}})),
                         doctest::Contains("DegreeTooSmall"), solver_error);
    std::mt19937 rng(3);
    for (int iter = 0; iter < 60; iter++) {
        graph g = gen_two_connected(5 + iter % 20, 0.25 + 0.5 * (iter % 3), iter);
        auto cc = cycle_min_degree_plus_one(g);
        CHECK(verify_certificate(g, cc));
        CHECK(cc.length() >= min_deg(g) + 1);
    }
}

TEST_CASE("two-delta cycle bound") {
    auto p = dirac_two_delta_cycle(petersen());
    CHECK(verify_certificate(petersen(), p));
    CHECK(p.length() >= 6);
    auto cn = dirac_two_delta_cycle(cycle_graph(9));
    CHECK(verify_certificate(cycle_graph(9), cn));
    CHECK(cn.length() >= 4);
    CHECK_THROWS_WITH_AS(dirac_two_delta_cycle(make_graph(4, {{0, 1}, {1, 2}, {2, 3}})),
                         doctest::Contains("NotTwoConnected"), solver_error);
    for (int iter = 0; iter < 150; iter++) {
        int n = 4 + iter % 27;
        graph g = gen_two_connected(n, 0.15 + 0.06 * (iter % 12), 1000 + iter);
        auto c = dirac_two_delta_cycle(g);
        CHECK(verify_certificate(g, c));
        CHECK(c.length() >= std::min(g.n, 2 * min_deg(g)));
    }
}

TEST_CASE("two-delta cycle on dense graphs is Hamiltonian") {
    for (int iter = 0; iter < 8; iter++) {
        int n = 40 + 10 * iter;
        graph g = gen_two_connected(n, 0.6, 77 + iter);
        if (2 * min_deg(g) < n) continue;
        auto c = dirac_two_delta_cycle(g);
        CHECK(verify_certificate(g, c));
        CHECK(c.length() == n);
    }
    // guaranteed-dense instance
    graph k = complete_bipartite(30, 30);
    auto c = dirac_two_delta_cycle(k);
    CHECK(verify_certificate(k, c));
    CHECK(c.length() == 60);
}

TEST_CASE("long (s,t)-path under a degree floor") {
    std::mt19937 rng(9);
    for (int iter = 0; iter < 120; iter++) {
        int n = 5 + iter % 16;
        graph g = gen_two_connected(n, 0.3 + 0.05 * (iter % 8), 500 + iter);
        int d = min_deg(g);
        std::uniform_int_distribution<int> vd(0, n - 1);
        int s = vd(rng), t = vd(rng);
        if (s == t) continue;
        auto c = egl_long_st_path(g, s, t, d);
        CHECK(verify_certificate(g, c));
        CHECK(c.seq.front() == s);
        CHECK(c.seq.back() == t);
        CHECK(c.length() >= d);
    }
    CHECK_THROWS_AS(egl_long_st_path(complete_graph(5), 2, 2, 1), solver_error);
}

TEST_CASE("generalized cycle bound with an exception set") {
    // complete bipartite 2+3: bound min{5-0, 2*2} = 4
    auto k23 = complete_bipartite(2, 3);
    auto c = generalized_dirac_cycle(k23, {});
    CHECK(verify_certificate(k23, c));
    CHECK(c.length() >= 4);
    // one excepted vertex of a 3-regular graph: bound min{9, 4} = 4
    auto pt = petersen();
    auto cp = generalized_dirac_cycle(pt, {0});
    CHECK(verify_certificate(pt, cp));
    CHECK(cp.length() >= 4);
    CHECK_THROWS_WITH_AS(generalized_dirac_cycle(make_graph(3, {{0, 1}, {1, 2}}), {}),
                         doctest::Contains("NotTwoConnected"), solver_error);

    std::mt19937 rng(21);
    for (int iter = 0; iter < 200; iter++) {
        int n = 5 + iter % 26;
        graph g = gen_two_connected(n, 0.15 + 0.07 * (iter % 10), 9000 + iter);
        vset b = random_subset(n, 4, rng);
        int r = n - (int)b.size();
        int delta = r > 0 ? min_degree_outside(g, b) : 0;
        auto cc = generalized_dirac_cycle(g, b);
        CHECK(verify_certificate(g, cc));
        CHECK(cc.length() >= std::min(r, 2 * delta));
    }
}

TEST_CASE("generalized path bound with an exception set") {
    graph p5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto c = generalized_dirac_path(p5, {});
    CHECK(verify_certificate(p5, c));
    CHECK(c.length() >= 2);
    CHECK_THROWS_WITH_AS(generalized_dirac_path(make_graph(4, {{0, 1}, {2, 3}}), {}),
                         doctest::Contains("Disconnected"), solver_error);

    std::mt19937 rng(33);
    for (int iter = 0; iter < 150; iter++) {
        int n = 3 + iter % 24;
        graph g = gen_two_connected(n, 0.15 + 0.07 * (iter % 10), 4000 + iter);
        vset b = random_subset(n, 4, rng);
        int r = n - (int)b.size();
        int delta = r > 0 ? min_degree_outside(g, b) : 0;
        auto cc = generalized_dirac_path(g, b);
        CHECK(verify_certificate(g, cc));
        if (r > 0) CHECK(cc.length() >= std::min(r - 1, 2 * delta));
    }
}

TEST_CASE("generalized (s,t)-path meets the residual degree bound") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 200; iter++) {
        int n = 5 + iter % 22;
        graph g = gen_two_connected(n, 0.2 + 0.06 * (iter % 9), 7000 + iter);
        vset b = random_subset(n, 3, rng);
        if ((int)b.size() >= n) continue;
        std::uniform_int_distribution<int> vd(0, n - 1);
        int s = vd(rng), t = vd(rng);
        if (s == t) continue;
        int delta = min_degree_outside(g, b);
        auto c = generalized_eg_st_path(g, b, s, t);
        CHECK(verify_certificate(g, c));
        CHECK(c.seq.front() == s);
        CHECK(c.seq.back() == t);
        CHECK(c.length() >= delta);
    }
}

TEST_CASE("closure lifting") {
    // complete graph minus one edge closes and lifts
    graph k4m = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto tr = bondy_chvatal_closure(k4m);
    REQUIRE(tr.added.size() == 1);
    CHECK(tr.added[0].du + tr.added[0].dv >= 4);
    auto h = bondy_chvatal_lift(k4m);
    REQUIRE(h.has_value());
    CHECK(verify_certificate(k4m, *h));
    CHECK(h->length() == 4);
    // sparse cycles close to themselves
    CHECK(!bondy_chvatal_lift(cycle_graph(5)).has_value());
    CHECK(bondy_chvatal_closure(cycle_graph(5)).added.empty());

    std::mt19937 rng(55);
    std::bernoulli_distribution coin(0.8);
    int lifted = 0;
    for (int iter = 0; iter < 40; iter++) {
        int n = 6 + iter % 9;
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                if (coin(rng)) es.push_back({i, j});
        graph g = make_graph(n, es);
        auto trace = bondy_chvatal_closure(g);
        for (auto &ad : trace.added) CHECK(ad.du + ad.dv >= n);
        auto ham = bondy_chvatal_lift(g);
        if (ham) {
            lifted++;
            CHECK(verify_certificate(g, *ham));
            CHECK(ham->length() == n);
        }
    }
    CHECK(lifted > 10);
}

TEST_CASE("Hamiltonian cycle or independent set") {
    // unbalanced complete bipartite: no Hamiltonian cycle, big independent side
    graph k34 = complete_bipartite(3, 4);
    auto out = nash_williams(k34);
    CHECK(!out.ham.has_value());
    REQUIRE(out.independent.size() == 4);
    for (size_t i = 0; i < out.independent.size(); i++)
        for (size_t j = i + 1; j < out.independent.size(); j++)
            CHECK(!k34.has_edge(out.independent[i], out.independent[j]));

    CHECK_THROWS_AS(nash_williams(petersen()), solver_error);  // degree too low
    CHECK_THROWS_AS(nash_williams(cycle_graph(5)), solver_error);

    std::mt19937 rng(66);
    std::uniform_real_distribution<double> dens(0.55, 0.9);
    int checked = 0;
    for (int iter = 0; iter < 200 && checked < 60; iter++) {
        int n = 7 + iter % 12;
        graph g = gen_two_connected(n, dens(rng), 300 + iter);
        int d = min_deg(g);
        if (3 * d < n + 2) continue;
        checked++;
        auto o = nash_williams(g);
        if (o.ham) {
            CHECK(verify_certificate(g, *o.ham));
            CHECK(o.ham->length() == n);
        } else {
            REQUIRE((int)o.independent.size() == d + 1);
            for (size_t i = 0; i < o.independent.size(); i++)
                for (size_t j = i + 1; j < o.independent.size(); j++)
                    CHECK(!g.has_edge(o.independent[i], o.independent[j]));
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("Hamiltonian-or-independent on larger dense graphs") {
    for (int iter = 0; iter < 6; iter++) {
        int n = 24 + 4 * iter;
        graph g = gen_two_connected(n, 0.75, 42 + iter);
        int d = min_deg(g);
        if (3 * d < n + 2) continue;
        auto o = nash_williams(g);
        if (o.ham) {
            CHECK(verify_certificate(g, *o.ham));
            CHECK(o.ham->length() == n);
        } else {
            CHECK((int)o.independent.size() == d + 1);
        }
    }
}
