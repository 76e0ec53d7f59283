#pragma once

// Color-coding machinery: random colorings and their deterministic
// replacements (universal set families and 3-way separation families), plus
// the shared colorful-path dynamic program used by the long path/cycle
// solvers.

#include "graph.hpp"

#include <cstdint>

// ---- deterministic families ------------------------------------------------

struct universal_family {
    int n = 0, k = 0;
    std::vector<uint64_t> sets;  // subsets of {0..n-1} as bitmasks
};

// (n,k)-universal family: for every k-subset S of the ground set, the traces
// {A ∩ S : A in family} are all 2^|S| patterns. Built by recursive halving:
// split the ground set, build sub-families for every split of the strength,
// and take all unions; small/base cases enumerate all subsets. Valid though
// larger than the optimal constructions.
universal_family build_universal(int n, int k);

// Exhaustive check of the defining property (n <= 24 or so).
bool validate_universal(const universal_family &f);

struct separation_family3 {
    int n = 0, k = 0;
    std::vector<std::vector<uint8_t>> functions;  // maps {0..n-1} -> {1,2,3}
};

// For every three disjoint nonempty sets A1,A2,A3 of size <= k some member is
// constant on each A_i with three pairwise distinct values. n <= 3k falls back
// to all 3^n functions; otherwise composes an (n, 3k)-universal family (which
// fixes A1 ∪ A2) with per-size (p, 2k)-universal families (which split A1
// from A2 inside the selected set), everything else mapping to 3.
separation_family3 build_separation3(int n, int k);

// Exhaustive check of the defining property.
bool validate_separation3(const separation_family3 &f);

// Number of trials for a per-trial success probability >= 1/denominator so
// that the overall failure probability per amplification block is <= 1/e.
long long trial_count(double success_prob_denominator);

// ---- colorings -------------------------------------------------------------

struct coloring_source {
    enum mode_t { randomized, deterministic } mode = randomized;
    int palette = 0;
    uint32_t seed = 0;
    long long trials = 0;  // randomized mode; 0 means "caller computes"
};

// The i.i.d. uniform coloring for one randomized trial (stable in seed/trial).
std::vector<int> draw_coloring(int n, int palette, uint32_t seed, long long trial);

// ---- colorful path DP ------------------------------------------------------

// table[X] = bitmask of vertices x such that some (s,x)-path uses exactly the
// colors X, one vertex per color (so its length is |X|-1). Only vertices with
// allowed[v] != 0 participate (empty = all). Requires n <= 64 and
// palette <= 24 (table has 2^palette entries).
std::vector<uint64_t> colorful_path_table(const graph &g, int s,
                                          const std::vector<int> &color, int palette,
                                          const std::vector<char> &allowed = {});

// Recovers a witness path for x in table[X] by walking the table backwards.
certificate colorful_path_extract(const graph &g, int s, const std::vector<int> &color,
                                  const std::vector<uint64_t> &table, int x, uint32_t colors_used);

// Longest colorful (s,t)-path under this coloring (absent if none).
std::optional<certificate> colorful_longest_st_path(const graph &g, int s, int t,
                                                    const std::vector<int> &color, int palette,
                                                    const std::vector<char> &allowed = {});
