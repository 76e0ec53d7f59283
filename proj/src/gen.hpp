#pragma once

// Instance generators: seed-reproducible random 2-connected graphs, split
// graphs, and the hardness gadgets reducing Hamiltonian Path to the long
// (s,t)-path / long cycle threshold questions.

#include "graph.hpp"

#include <cstdint>

// Random simple graph with edge probability `density`, repaired to
// 2-connectivity by adding edges across blocks/components. Same seed, same
// graph. Requires n >= 3.
graph gen_two_connected(int n, double density, uint32_t seed);

// Split graph: clique vertices 0..ns-1, independent vertices ns..ns+ni-1,
// independent vertex i adjacent to exactly nbrs_of_i[i] (subset of the clique).
graph make_split_graph(int ns, int ni, const std::vector<vset> &nbrs_of_i);
graph complete_split_graph(int ns, int ni);
graph random_split_graph(int ns, int ni, double density, uint32_t seed);

struct gadget_spec {
    graph base;
    int eps_num = 1, eps_den = 2;  // epsilon in (0,1) as a rational
    enum variant_t { path_gadget, cycle_gadget } variant = path_gadget;
};

struct gadget {
    graph g;
    int s = -1;
    int t = -1;         // -1 for the cycle variant (no apex)
    int p = 0;          // clique size chosen for the spec's ceiling equation
    int threshold = 0;  // required path/cycle length for a yes answer
};

// Builds the reduction gadget on top of spec.base with the smallest positive
// clique size p satisfying ceil(eps*(p+1)) = n (path variant) or n-1 (cycle
// variant). Path variant: base + apex t adjacent to all of base + s + a
// p-clique Q_v per v in base+{t}, each Q_v joined to v and s; a (s,t)-path of
// length >= threshold exists iff base has a Hamiltonian path. Cycle variant
// drops t and Q_t; a cycle of length >= threshold exists iff base has a
// Hamiltonian path. Throws InvariantViolated if the built graph's minimum
// degree is not p+1 (cycle variant with an isolated base vertex).
gadget build_gadget(const gadget_spec &spec);
