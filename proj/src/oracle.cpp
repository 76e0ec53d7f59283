#include "oracle.hpp"

#include <chrono>
#include <cstdint>

namespace {

using clock_t_ = std::chrono::steady_clock;

struct deadline {
    clock_t_::time_point end;
    long long ticks = 0;
    explicit deadline(long long millis) : end(clock_t_::now() + std::chrono::milliseconds(millis)) {}
    void check() {
        if ((++ticks & 0xffff) == 0 && clock_t_::now() > end)
            fail("BudgetExceeded", "oracle time budget exhausted");
    }
};

void check_budget(const graph &g, const oracle_budget &b) {
    if (g.n > b.max_vertices)
        fail("BudgetExceeded", "oracle vertex budget: n=" + std::to_string(g.n) +
                                   " > " + std::to_string(b.max_vertices));
}

// Pruned DFS for the longest cycle whose minimum vertex is `start`: only
// vertices > start may be visited, so each cycle is enumerated from a canonical
// anchor. Prunes when even using every unvisited vertex cannot beat `best`.
struct cycle_dfs {
    const graph &g;
    deadline &dl;
    int start;
    std::vector<char> visited;
    std::vector<int> seq;
    int best = 0;
    std::vector<int> best_seq;
    int free_cnt;  // unvisited vertices still allowed on this walk

    cycle_dfs(const graph &g_, deadline &dl_, int start_, int allowed)
        : g(g_), dl(dl_), start(start_), visited(g_.n, 0), free_cnt(allowed) {}

    void run(int bound_hint) {
        best = bound_hint;
        visited[start] = 1;
        seq.push_back(start);
        go(start);
    }

    void go(int v) {
        dl.check();
        if ((int)seq.size() + free_cnt <= best) return;
        for (int u : g.adj[v]) {
            if (u == start && seq.size() >= 3) {
                if ((int)seq.size() > best) { best = (int)seq.size(); best_seq = seq; }
                continue;
            }
            if (u <= start || visited[u]) continue;
            visited[u] = 1;
            seq.push_back(u);
            free_cnt--;
            go(u);
            free_cnt++;
            seq.pop_back();
            visited[u] = 0;
        }
    }
};

// Pruned DFS for the longest (s,t)-path, optionally requiring a vertex `must`
// (beyond t) on the path; `close_to` >= 0 instead asks for cycles: the walk
// must end on a neighbor of close_to (used for cycles through fixed vertices).
struct path_dfs {
    const graph &g;
    deadline &dl;
    int target;
    std::vector<char> visited;
    std::vector<int> seq;
    int best = -1;
    std::vector<int> best_seq;

    path_dfs(const graph &g_, deadline &dl_, int target_)
        : g(g_), dl(dl_), target(target_), visited(g_.n, 0) {}

    int unvisited() const {
        int c = 0;
        for (char x : visited) c += !x;
        return c;
    }

    void run(int s) {
        visited[s] = 1;
        seq.push_back(s);
        go(s, unvisited());
    }

    void go(int v, int free_cnt) {
        dl.check();
        if (v == target) {
            if ((int)seq.size() - 1 > best) { best = (int)seq.size() - 1; best_seq = seq; }
        }
        if ((int)seq.size() - 1 + free_cnt <= best) return;
        for (int u : g.adj[v]) {
            if (visited[u]) continue;
            visited[u] = 1;
            seq.push_back(u);
            go(u, free_cnt - 1);
            seq.pop_back();
            visited[u] = 0;
        }
    }
};

void check_vertex(const graph &g, int v, const char *what) {
    if (v < 0 || v >= g.n) fail("PreconditionViolated", std::string(what) + " out of range");
}

}  // namespace

oracle_result oracle_longest_cycle(const graph &g, const oracle_budget &budget) {
    check_budget(g, budget);
    deadline dl(budget.max_millis);
    oracle_result r;
    for (int start = 0; start < g.n; start++) {
        int allowed = g.n - start - 1;  // vertices > start
        if (allowed + 1 <= r.length) break;
        cycle_dfs d(g, dl, start, allowed);
        d.run(r.length);
        if (d.best > r.length && !d.best_seq.empty()) {
            r.length = d.best;
            r.cert = certificate::make_cycle(d.best_seq);
            r.found = true;
        }
    }
    return r;
}

oracle_result oracle_longest_st_path(const graph &g, int s, int t,
                                     const oracle_budget &budget) {
    check_budget(g, budget);
    check_vertex(g, s, "s");
    check_vertex(g, t, "t");
    oracle_result r;
    if (s == t) {
        r.cert = certificate::make_path({s});
        r.found = true;
        return r;
    }
    deadline dl(budget.max_millis);
    path_dfs d(g, dl, t);
    d.run(s);
    if (d.best >= 1) {
        r.length = d.best;
        r.cert = certificate::make_path(d.best_seq);
        r.found = true;
    }
    return r;
}

oracle_result oracle_st_cycle(const graph &g, int s, int t,
                              const oracle_budget &budget) {
    check_budget(g, budget);
    check_vertex(g, s, "s");
    check_vertex(g, t, "t");
    deadline dl(budget.max_millis);
    oracle_result r;
    // Walks start at s; a cycle closes on any neighbor of s once t was seen.
    struct dfs {
        const graph &g;
        deadline &dl;
        int s, t;
        std::vector<char> visited;
        std::vector<int> seq;
        int best = 0;
        std::vector<int> best_seq;

        void go(int v, int free_cnt) {
            dl.check();
            if ((int)seq.size() + free_cnt <= best) return;
            for (int u : g.adj[v]) {
                if (u == s && seq.size() >= 3 && visited[t]) {
                    if ((int)seq.size() > best) { best = (int)seq.size(); best_seq = seq; }
                    continue;
                }
                if (visited[u]) continue;
                visited[u] = 1;
                seq.push_back(u);
                go(u, free_cnt - 1);
                seq.pop_back();
                visited[u] = 0;
            }
        }
    } d{g, dl, s, t, std::vector<char>(g.n, 0), {}, 0, {}};
    d.visited[s] = 1;
    d.seq.push_back(s);
    d.go(s, g.n - 1);
    if (d.best >= 3) {
        r.length = d.best;
        r.cert = certificate::make_cycle(d.best_seq);
        r.found = true;
    }
    return r;
}

// ---- threshold decisions ---------------------------------------------------

namespace {

// twins[u][v] != 0 iff swapping u and v (fixing everything else) is a graph
// automorphism: equal neighborhoods (non-adjacent) or equal closed
// neighborhoods (adjacent). Used to explore only the smallest unvisited member
// of an interchangeable set, which collapses factorial blowup inside cliques.
std::vector<std::vector<char>> twin_matrix(const graph &g) {
    std::vector<std::vector<char>> tw(g.n, std::vector<char>(g.n, 0));
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++) {
            bool twin;
            if (g.has_edge(u, v)) {
                vset cu = set_union(g.adj[u], {u}), cv = set_union(g.adj[v], {v});
                twin = cu == cv;
            } else {
                twin = g.adj[u] == g.adj[v];
            }
            tw[u][v] = tw[v][u] = twin;
        }
    return tw;
}

struct decision_dfs {
    const graph &g;
    deadline &dl;
    std::vector<std::vector<char>> tw;
    std::vector<char> visited;
    std::vector<int> seq;
    int want;
    int target;   // path: t; cycle: the anchor
    int floor_id; // cycle: only vertices > floor_id allowed (-1 for paths)
    bool is_cycle;
    std::vector<int> witness;

    decision_dfs(const graph &g_, deadline &dl_, int want_, int target_, int floor_id_,
                 bool is_cycle_)
        : g(g_), dl(dl_), tw(twin_matrix(g_)), visited(g_.n, 0), want(want_),
          target(target_), floor_id(floor_id_), is_cycle(is_cycle_) {}

    // vertices reachable from v through unvisited allowed vertices (target
    // counts as reachable even though it is visited when it is the anchor)
    int reach_count(int v, bool &target_seen) {
        std::vector<char> seen(g.n, 0);
        std::vector<int> q{v};
        seen[v] = 1;
        int cnt = 1;
        target_seen = false;
        while (!q.empty()) {
            int x = q.back();
            q.pop_back();
            for (int u : g.adj[x]) {
                if (u == target) {
                    target_seen = true;
                    if (!seen[u]) { seen[u] = 1; cnt++; }
                    continue;
                }
                if (seen[u] || u <= floor_id || visited[u]) continue;
                seen[u] = 1;
                cnt++;
                q.push_back(u);
            }
        }
        return cnt;
    }

    bool go(int v, int len) {
        dl.check();
        for (int u : g.adj[v]) {
            if (u != target) continue;
            int closed = len + 1;
            if (closed >= want && (!is_cycle || len >= 2)) {
                witness = seq;
                if (!is_cycle) witness.push_back(target);
                return true;
            }
        }
        bool t_ok;
        int r = reach_count(v, t_ok);
        if (!t_ok) return false;
        // remaining edges <= vertices on the rest of the walk minus one; at the
        // cycle root v == target is one vertex but contributes the closing edge
        int extra = (v == target) ? r : r - 1;
        if (len + extra < want) return false;
        for (int u : g.adj[v]) {
            if (u == target || u <= floor_id || visited[u]) continue;
            bool skip = false;
            for (int w = floor_id + 1; w < u && !skip; w++)
                if (tw[u][w] && !visited[w] && w != target) skip = true;
            if (skip) continue;
            visited[u] = 1;
            seq.push_back(u);
            if (go(u, len + 1)) return true;
            seq.pop_back();
            visited[u] = 0;
        }
        return false;
    }
};

void check_decision_budget(const graph &g, const oracle_budget &b) {
    if (g.n > std::max(b.max_vertices, 80))
        fail("BudgetExceeded", "decision oracle vertex budget exceeded");
}

}  // namespace

bool oracle_path_at_least(const graph &g, int s, int t, int want,
                          certificate *witness, const oracle_budget &budget) {
    check_decision_budget(g, budget);
    check_vertex(g, s, "s");
    check_vertex(g, t, "t");
    if (s == t) return false;  // distinct endpoints only
    want = std::max(want, 1);
    deadline dl(budget.max_millis);
    decision_dfs d(g, dl, want, t, -1, false);
    d.visited[s] = 1;
    d.seq.push_back(s);
    if (!d.go(s, 0)) return false;
    if (witness) *witness = certificate::make_path(d.witness);
    return true;
}

bool oracle_cycle_at_least(const graph &g, int want,
                           certificate *witness, const oracle_budget &budget) {
    check_decision_budget(g, budget);
    want = std::max(want, 3);
    if (g.n < want) return false;
    deadline dl(budget.max_millis);
    for (int a = 0; a + want <= g.n; a++) {
        decision_dfs d(g, dl, want, a, a, true);
        d.visited[a] = 1;
        d.seq.push_back(a);
        if (d.go(a, 0)) {
            if (witness) *witness = certificate::make_cycle(d.witness);
            return true;
        }
    }
    return false;
}

// ---- subset-DP engines -----------------------------------------------------

namespace {

// Endpoint masks of simple paths that start at the lowest set bit of each
// subset. endpoints[S] bit v set iff a path from lowbit(S) through exactly S
// ends at v.
std::vector<uint32_t> anchored_paths(const graph &g) {
    std::vector<uint32_t> nbr(g.n, 0);
    for (int v = 0; v < g.n; v++)
        for (int u : g.adj[v]) nbr[v] |= 1u << u;
    std::vector<uint32_t> ep(size_t(1) << g.n, 0);
    for (int v = 0; v < g.n; v++) ep[size_t(1) << v] = 1u << v;
    for (size_t S = 1; S < ep.size(); S++) {
        uint32_t e = ep[S];
        if (!e) continue;
        int lo = __builtin_ctzll(S);
        while (e) {
            int v = __builtin_ctz(e);
            e &= e - 1;
            uint32_t ext = nbr[v] & ~uint32_t(S);
            ext &= ~((1u << lo) - 1);  // keep the anchor canonical: only higher ids
            while (ext) {
                int u = __builtin_ctz(ext);
                ext &= ext - 1;
                ep[S | (size_t(1) << u)] |= 1u << u;
            }
        }
    }
    return ep;
}

// Endpoint masks of simple paths starting at a fixed vertex s.
std::vector<uint32_t> rooted_paths(const graph &g, int s) {
    std::vector<uint32_t> nbr(g.n, 0);
    for (int v = 0; v < g.n; v++)
        for (int u : g.adj[v]) nbr[v] |= 1u << u;
    std::vector<uint32_t> ep(size_t(1) << g.n, 0);
    ep[size_t(1) << s] = 1u << s;
    for (size_t S = 1; S < ep.size(); S++) {
        if (!(S >> s & 1)) continue;
        uint32_t e = ep[S];
        while (e) {
            int v = __builtin_ctz(e);
            e &= e - 1;
            uint32_t ext = nbr[v] & ~uint32_t(S);
            while (ext) {
                int u = __builtin_ctz(ext);
                ext &= ext - 1;
                ep[S | (size_t(1) << u)] |= 1u << u;
            }
        }
    }
    return ep;
}

}  // namespace

int dp_longest_cycle(const graph &g, const oracle_budget &budget) {
    check_budget(g, budget);
    auto ep = anchored_paths(g);
    std::vector<uint32_t> nbr(g.n, 0);
    for (int v = 0; v < g.n; v++)
        for (int u : g.adj[v]) nbr[v] |= 1u << u;
    int best = 0;
    for (size_t S = 1; S < ep.size(); S++) {
        if (!ep[S]) continue;
        int sz = __builtin_popcountll(S);
        if (sz < 3 || sz <= best) continue;
        int lo = __builtin_ctzll(S);
        if (ep[S] & nbr[lo] & ~(1u << lo)) best = sz;
    }
    return best;
}

int dp_longest_st_path(const graph &g, int s, int t, const oracle_budget &budget) {
    check_budget(g, budget);
    check_vertex(g, s, "s");
    check_vertex(g, t, "t");
    if (s == t) return 0;
    auto ep = rooted_paths(g, s);
    int best = 0;
    for (size_t S = 1; S < ep.size(); S++)
        if (ep[S] >> t & 1) best = std::max(best, __builtin_popcountll(S) - 1);
    return best;
}

int dp_st_cycle(const graph &g, int s, int t, const oracle_budget &budget) {
    check_budget(g, budget);
    check_vertex(g, s, "s");
    check_vertex(g, t, "t");
    auto ep = rooted_paths(g, s);
    std::vector<uint32_t> nbr(g.n, 0);
    for (int v = 0; v < g.n; v++)
        for (int u : g.adj[v]) nbr[v] |= 1u << u;
    int best = 0;
    for (size_t S = 1; S < ep.size(); S++) {
        if (!(S >> t & 1) || !ep[S]) continue;
        int sz = __builtin_popcountll(S);
        if (sz < 3 || sz <= best) continue;
        if (ep[S] & nbr[s] & ~(1u << s)) best = sz;
    }
    return best;
}
