#pragma once

// Decomposition-driven long-cycle engine for the mid-density regime. Given a
// cycle C shorter than the target 2*delta(g-b)+k, the enlargement pass either
// makes C strictly longer, or extracts a small vertex cover of g-b (when the
// leftover of g-V(C) is an independent set), or certifies that every leftover
// component hangs off two short windows P1, P2 of C. The resulting structure
// (C = P1.P'.P2.P'' with both free arcs long, and every component of the
// refined graph minus the windows either a 2-connected piece matched once to
// each window or a separable piece pinned to a single window vertex) is then
// strong enough to decide the instance exactly: a long cycle, if one exists,
// can be normalized to cross the structure in one of a few ways, each of
// which reduces to long (s,t)-path searches.

#include "egpath.hpp"
#include "graph.hpp"

#include <optional>
#include <string>
#include <vector>

struct dirac_decomposition {
    enum comp_kind {
        bic,        // 2-connected, matching exactly one to each window
        left_cut,   // separable, pinned to one vertex of p1; leaf-block inner
                    // vertices see nothing of p2
        right_cut,  // mirror image with p2
        all_b       // component fully inside b
    };
    struct comp {
        vset verts;  // refined ids
        comp_kind kind = all_b;
    };

    certificate p1, p2;             // the two windows of C (paths, original ids)
    certificate p_prime, p_dprime;  // the free arcs: C = p1 . p_prime . p2 . p_dprime
    graph refined;                  // g with b-inner leaf-blocks contracted
    contraction_map rmap;
    std::vector<comp> components;         // components of refined - (p1 u p2)
    std::vector<vset> dirac_components;   // bic comps plus leaf-blocks of cut
                                          // comps (refined ids)
};

struct enlarge_outcome {
    std::optional<certificate> longer_cycle;          // strictly longer than input
    std::optional<vset> vertex_cover;                 // of g-b, size <= delta(g-b)+2k
    std::optional<dirac_decomposition> decomposition; // validated structure
};

// One of the three outcomes. Preconditions: g 2-connected,
// delta(g-b) >= 12, 0 < k <= delta(g-b)/24,
// 2k+2|b|+12 <= delta(g-b) < n/2 - (|b|+k)/2, the cycle is valid with
// 2*delta(g-b) <= length < 2*delta(g-b)+k, and all b-refinements of the
// components of g - V(cycle) are already applied (the refinement of g
// relative to the cycle is the identity).
enlarge_outcome enlarge_or_decompose(const graph &g, const vset &b, int k,
                                     const certificate &cycle);

// Recomputes every definitional condition from scratch: the four paths chain
// into the cycle, both free arcs have >= delta(g-b)-2 edges, the refinement
// matches, every leftover component classifies as claimed, exactly one
// component realizes each free arc, and the listed core components agree.
bool validate_dirac_decomposition(const dirac_decomposition &d, const graph &g,
                                  const vset &b, std::string *why = nullptr);

struct decomposition_verdict {
    bool solved = false;
    std::optional<certificate> witness;       // solved: cycle of length >= 2*delta(g-b)+k
    std::optional<certificate> longer_cycle;  // !solved: strictly longer than the input
};

// Decides "is there a cycle of length >= 2*delta(g-b)+k" exactly, or finds a
// cycle strictly longer than the given one. Preconditions: d valid for the
// cycle and b; cycle length in [2*delta(g-b), 2*delta(g-b)+k). When
// 6k+4|b|+6 >= delta(g-b) the question is small enough to hand to the
// exhaustive search instead of the case analysis.
decomposition_verdict solve_with_decomposition(const graph &g, const vset &b, int k,
                                               const certificate &cycle,
                                               const dirac_decomposition &d);

// For a separable (left_cut/right_cut) component and a leaf-block separator of
// it, builds a cycle of length >= (5*delta(g-b) - |separator| - (k+5)) / 2
// that runs through a leaf-block of the component: a long path through the
// pinned leaf-block, continued to a window-adjacent vertex outside it, closed
// through the longer window-to-window arc of the cycle.
// separator must consist of non-inner vertices of the component and, when
// nonempty, must separate some non-inner vertex outside b from the leaf-block
// inner vertices.
certificate b_leaf_block_cycle(const graph &g, const vset &b, int k,
                               const dirac_decomposition &d, const vset &component,
                               const vset &separator);
