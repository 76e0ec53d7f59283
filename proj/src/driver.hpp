#pragma once

// Top-level deciders for "cycle of length >= min{2*delta(g-b), n-|b|} + k"
// and the path variant: threshold computation, extremal-regime dispatch
// (exhaustive search for tiny residual degree or out-of-proportion k, the
// almost-hamiltonian solver for dense residuals), and the main loop that
// alternates constructive seeding, cycle enlargement, the vertex-cover-regime
// solver, and the decomposition-based case analysis.

#include "colorcoding.hpp"
#include "graph.hpp"

#include <optional>
#include <string>
#include <vector>

struct ldc_instance {
    graph g;
    vset b;
    int k = 0;
};

struct ldc_verdict {
    bool yes = false;
    std::optional<certificate> cert;  // present iff yes; verified, length >= threshold
    int threshold = 0;                // fixed once on the input graph
    std::vector<std::string> trace;   // dispatch decisions, in order
};

// Decides whether g has a cycle of length >= min{2*delta(g-b), n-|b|} + k.
// The cycle may use b vertices; only the threshold discounts them.
// Deterministic mode is exact; randomized mode may miss a witness with the
// per-block probability of the underlying searches. g must be 2-connected
// (NotTwoConnected otherwise).
ldc_verdict solve_ldc(const ldc_instance &inst, const coloring_source &src = {});

// Decides whether g has a path of length >= min{2*delta(g-b), n-|b|-1} + k,
// by adding an apex vertex adjacent to everything: g has a path of length
// >= t iff the apexed graph has a cycle of length >= t+2. g must be
// connected (Disconnected otherwise).
ldc_verdict solve_ldp(const graph &g, const vset &b, int k,
                      const coloring_source &src = {});
