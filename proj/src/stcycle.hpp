#pragma once

// Solver for "is there a cycle of length >= k through both s and t":
// flow for k <= 3, a colorful two-path dynamic program for solutions of
// bounded total length, and a random-separation search (three color classes,
// distance-k anchors, disjoint connectors via flow) for the long ones.

#include "colorcoding.hpp"
#include "graph.hpp"

#include <optional>

struct st_cycle_instance {
    graph g;
    int s = 0, t = 0;
    int k = 0;
};

// Full dispatch: k <= 3 via two internally disjoint (s,t)-paths; s == t via an
// ear search (k <= 3) or by trying every neighbor of s as the second terminal
// (a long cycle through s must visit one); otherwise the two search stages.
// Absent answers are exact in deterministic mode (which requires n <= 3k, the
// regime where an injective coloring makes the first stage exhaustive) and
// hold with failure probability <= 1/e per amplification block in randomized
// mode.
std::optional<certificate> solve_st_cycle(const st_cycle_instance &inst,
                                          const coloring_source &src);

// Colorful two-path search: color with 3k colors, build the reachable
// (vertex, color-set) table from s, and combine two table entries at t whose
// color sets meet exactly in {c(s), c(t)} with |X|+|Y| >= k+2. Requires
// k >= 4 and s != t.
std::optional<certificate> stage1_short_solution(const st_cycle_instance &inst,
                                                 const coloring_source &src);

// Random-separation search for solutions the first stage cannot see: 3-color
// the non-terminals; for each class and each vertex v at distance exactly k
// from t inside the class, fix a shortest (v,t)-path there and look for
// internally disjoint (s,v)- and (s,t)-connectors avoiding its interior via
// flow. Deterministic mode iterates a three-way separation family instead of
// random colorings. Requires k >= 4 and s != t.
std::optional<certificate> stage2_long_solution(const st_cycle_instance &inst,
                                                const coloring_source &src);
