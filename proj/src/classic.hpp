#pragma once

// Constructive classical long-cycle/path theorems: the minimum-degree cycle
// bounds, the two-set generalizations that tolerate an exception set b, long
// (s,t)-paths under degree conditions, closure-based Hamiltonicity with cycle
// lifting, and the Hamiltonian-cycle-or-independent-set subroutine.

#include "graph.hpp"

#include <optional>

// Cycle of length >= δ(g)+1 (maximal path + farthest-neighbor closure).
// Throws DegreeTooSmall if δ(g) < 2.
certificate cycle_min_degree_plus_one(const graph &g);

// 2-connected g: cycle of length >= min(n, 2δ(g)). Crossing/extension loop
// with rotation search; exhaustive fallback for n <= 20; GuaranteeViolated if
// the search stalls on a larger input (loud failure, never a weak answer).
certificate dirac_two_delta_cycle(const graph &g);

// 2-connected g, >= 4 vertices, all degrees >= d except s, t and at most one
// more vertex: an (s,t)-path of length >= d. Local-search (detour splicing)
// plus an exhaustive fallback for n <= 20; otherwise GuaranteeViolated.
certificate egl_long_st_path(const graph &g, int s, int t, int d);

// 2-connected g: cycle of length >= min{n-|b|, 2δ(g-b)}.
certificate generalized_dirac_cycle(const graph &g, const vset &b);

// connected g: path of length >= min{n-|b|-1, 2δ(g-b)} (apex reduction).
certificate generalized_dirac_path(const graph &g, const vset &b);

// 2-connected g, s != t: (s,t)-path of length >= δ(g-b).
certificate generalized_eg_st_path(const graph &g, const vset &b, int s, int t);

// ---- closure ---------------------------------------------------------------

struct closure_trace {
    struct addition {
        int u, v;
        int du, dv;  // degrees at insertion time (du + dv >= n witnesses)
    };
    graph base;
    std::vector<addition> added;
    graph closed;
};

closure_trace bondy_chvatal_closure(const graph &g);

// If the closure is complete, builds its Hamiltonian cycle and removes the
// added edges in reverse order (degree-sum crossing rotation), returning a
// Hamiltonian cycle of g itself. Absent if the closure is not complete.
std::optional<certificate> bondy_chvatal_lift(const graph &g);

// ---- Hamiltonian cycle or large independent set ----------------------------

struct nw_outcome {
    std::optional<certificate> ham;  // Hamiltonian cycle, or
    vset independent;                // independent set of size exactly δ(g)+1
};

// 2-connected g with 3δ(g) >= n+2: one of the two outcomes.
nw_outcome nash_williams(const graph &g);
