#pragma once

// Solver for "is there an (s,t)-path of length >= delta(G-B)+k" on 2-connected
// graphs with s,t in B. The engine alternates path enlargement with a
// structural decomposition: when a host path stalls, the leftover components
// are classified (2-connected pendants with matching one to each end segment,
// or separable pendants hanging off a single end-segment vertex), and the
// search recurses into each pendant wrapped in a 2-connected frame, completing
// the path with a pair of disjoint connectors found through an apex graph.

#include "classic.hpp"
#include "graph.hpp"
#include "oracle.hpp"

#include <optional>

struct eg_instance {
    graph g;
    vset b;  // must contain s and t
    int s = 0, t = 0;
    int k = 0;
};

struct eg_decomposition {
    enum comp_kind { R1, R2, R3, all_b };
    struct comp {
        vset verts;  // refined ids
        comp_kind kind = all_b;
    };

    certificate host;  // the stalled (s,t)-path, in original ids
    certificate p1;    // prefix of host holding all s-side component contacts
    certificate p2;    // suffix of host holding all t-side component contacts
    graph refined;     // leaf-blocks of all-b inner vertices contracted
    contraction_map rmap;
    std::vector<comp> components;        // components of refined - (p1 u p2)
    std::vector<vset> eg_components;     // R1 comps plus leaf blocks of R2/R3
};

struct eg_build_result {
    std::optional<certificate> long_path;   // length >= delta(g-b)+k
    std::optional<eg_decomposition> dec;    // otherwise: validated decomposition
};

// Either finds a path of length >= delta(g-b)+k directly (by repeated
// insertion/splice enlargement through leftover components) or returns the
// decomposition the stalled path induces. Preconditions: g 2-connected,
// s,t in b, delta(g-b) >= 8 and 4k+2|b|+4 <= delta(g-b).
eg_build_result build_eg_decomposition(const eg_instance &inst);

// Checks the definitional conditions from scratch (host factors as
// p1 . P' . p2 with the middle >= delta(g-b) edges; every leftover component
// of the recomputed refinement is of one of the three kinds; the claimed
// component lists, when present, agree with the derived ones).
bool validate_eg_decomposition(const eg_decomposition &d, const graph &g, const vset &b,
                               std::string *why = nullptr);

struct component_frame {
    graph sub;                 // 2-connected wrapper around the component
    std::vector<int> to_orig;  // sub id -> original id
    int s_prime = 0, t_prime = 0;  // ids in sub
};

// Wraps the chosen component m (one entry of d.eg_components) into a
// 2-connected subgraph K with terminals s',t' such that every solution path
// entering m crosses K exactly as one (s',t')-subpath, and the residual
// minimum degree of K does not drop below the host's.
component_frame extract_component_frame(const eg_decomposition &d, const graph &g,
                                        const vset &b, const vset &m);

// Maximum x over subsets B' of b\{s,t} such that g-B' has a Hamiltonian
// (s,t)-path, reported as (path length) - delta(g-b). Preconditions:
// (6/5)delta(g-b) >= n and delta(g-b) >= 4|b| (the regime where the longest
// (s,t)-path provably covers every vertex outside b).
int almost_ham_path_branch(const graph &g, const vset &b, int s, int t,
                           certificate *witness = nullptr);

struct eg_answer {
    int x = 0;             // min(k, longest (s,t)-path - delta(g-b))
    certificate witness;   // (s,t)-path of length >= delta(g-b)+x
};

// Exact recursive solver. Preconditions: g 2-connected, s != t, s,t in b.
eg_answer solve_eg_path(const eg_instance &inst);
