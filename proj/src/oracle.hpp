#pragma once

// Exhaustive ground-truth engines for small instances. Two independent
// implementations (pruned DFS with witnesses, subset DP lengths-only) so they
// can cross-check each other in tests.

#include "graph.hpp"

struct oracle_budget {
    int max_vertices = 16;
    long long max_millis = 60000;
};

struct oracle_result {
    int length = 0;           // 0 means "no such cycle/path beyond the trivial"
    certificate cert;         // valid witness when length > 0
    bool found = false;
};

// Longest simple cycle; length 0 and found=false if the graph is acyclic.
oracle_result oracle_longest_cycle(const graph &g, const oracle_budget &budget = {});

// Longest simple (s,t)-path (number of edges). s == t yields the trivial path.
oracle_result oracle_longest_st_path(const graph &g, int s, int t,
                                     const oracle_budget &budget = {});

// Longest cycle visiting both s and t (s == t: longest cycle through s).
oracle_result oracle_st_cycle(const graph &g, int s, int t,
                              const oracle_budget &budget = {});

// Exhaustive threshold decisions: is there an (s,t)-path with >= want edges /
// a cycle with >= want edges? Early exit on success; prunes branches by
// target-reachability, by remaining-component size, and by canonical ordering
// of twin vertices (same neighborhoods => interchangeable by automorphism).
// Handles larger structured graphs than the longest-* oracles, so the vertex
// budget for these is max_vertices rounded up to 80. A returned certificate
// witnesses yes; a false return is an exhaustive no.
bool oracle_path_at_least(const graph &g, int s, int t, int want,
                          certificate *witness = nullptr, const oracle_budget &budget = {});
bool oracle_cycle_at_least(const graph &g, int want,
                           certificate *witness = nullptr, const oracle_budget &budget = {});

// Independent subset-DP engines (lengths only, no witness).
int dp_longest_cycle(const graph &g, const oracle_budget &budget = {});
int dp_longest_st_path(const graph &g, int s, int t, const oracle_budget &budget = {});
int dp_st_cycle(const graph &g, int s, int t, const oracle_budget &budget = {});
