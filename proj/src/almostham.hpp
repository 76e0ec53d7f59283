#pragma once

// Longest-cycle search in the near-spanning regime: |b| <= k and
// delta(g-b) >= n/2 - k, so the longest cycle misses only O(k) vertices.
// The engine covers b by a small system of short paths (color-coded DP),
// removes the covered vertices, closes the dense remainder into a cycle, and
// inserts the paths back one by one. Every dead end of the insertion loop is
// a terminal hand-off: a small separator (dense two-component solver below)
// or a large independent set (vertex-cover-regime solver).

#include "colorcoding.hpp"
#include "graph.hpp"

#include <optional>
#include <utility>
#include <vector>

// A system of vertex-disjoint paths covering part of b: every path starts and
// ends outside b, touches b, and never has two consecutive vertices outside
// b (so at most 3|b| vertices in total). In separator mode the number of
// paths whose endpoints lie in different components of g-b is even and >= 2.
struct good_path_cover {
    std::vector<certificate> paths;
    vset covered_b;
};

// Vertex-disjoint paths with prescribed endpoints covering every vertex of g.
// Takes at most p pairs with pairwise distinct endpoints across pairs
// (s_i == t_i allowed inside a pair, yielding the one-vertex path) and at
// least one pair with s_i != t_i. Greedy insertion: connect each pair
// directly or through a fresh common neighbor, then absorb uncovered
// vertices between consecutive path vertices adjacent to both. Success is
// guaranteed when delta(g) >= max(5p-3, n-p); the search runs best-effort
// below that bound and throws GuaranteeViolated when the absorption stalls.
std::vector<certificate> many_paths_cover(const graph &g,
                                          const std::vector<std::pair<int, int>> &pairs,
                                          int p);

// Best good path cover of b in g under color coding: 3|b| colors (b vertices
// pre-colored, the rest drawn), a feasible-state DP over (colors, endpoint,
// start side, current length, crossing count), maximizing |covered_b| over
// the trials. In separator mode g-b must have exactly two components and the
// crossing-path rule applies; absent only when not even one admissible cover
// was found (non-separator mode always admits the empty cover).
std::optional<good_path_cover> good_path_cover_search(const graph &g, const vset &b,
                                                      bool separator_mode,
                                                      const coloring_source &src = {});

// Longest cycle of a 2-connected g whose removal of b leaves exactly two
// dense components (delta(g-b) >= n/2 - k for k = max(|b|, (n-2delta)/2)).
// Finds the b-coverage-maximizing good path cover, pairs the path endpoints
// across the two components with a shifted matching, spans each component
// with many_paths_cover, and concatenates everything into one cycle missing
// only the uncovered b vertices. n <= 12k falls back to the exhaustive
// longest-cycle search.
certificate separator_solve(const graph &g, const vset &b, const coloring_source &src = {});

// Longest cycle of a 2-connected g with |b| <= k and delta(g-b) >= n/2 - k.
// Path-cover + Hamiltonian base cycle + iterative path insertion; dead ends
// dispatch to separator_solve (small separator found) or to the
// vertex-cover-regime solver (large independent set found). n <= 40k falls
// back to the exhaustive longest-cycle search.
certificate almost_ham_solve(const graph &g, const vset &b, int k,
                             const coloring_source &src = {});
