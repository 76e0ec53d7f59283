#pragma once

// Exact-length cycle search in the vertex-cover regime: s_cover is a vertex
// cover of g whose size exceeds the residual minimum degree delta(g-b) by p,
// and the question is whether g has a cycle of length at least
// 2*delta(g-b)+k. The engine pins a large subset x of the independent side,
// splits the cover into well-connected (a) and poorly-connected (z) halves
// with respect to x, branches over the z-subset a solution cycle meets, and
// reduces each branch to a disjoint-path-cover search answered by
// subset-indexed max-coverage tables. A found cover is stitched back into a
// cycle of the exact target length.

#include "graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

struct vcad_instance {
    graph g;
    vset b;        // contained in s_cover
    vset s_cover;  // vertex cover of g; |s_cover| = delta(g-b) + p
    int p = 0;
    int k = 0;     // target cycle length 2*delta(g-b) + k
};

// Witness description of a cycle of length exactly 2*delta(g-b)+k through
// x and z: q is the cover surplus spent on the cycle, y the independent-side
// vertices riding inside the paths, and cover a system of vertex-disjoint
// paths (singletons allowed) on a+z+y covering it exactly, every endpoint
// in a, with |cover| = |s_cover|+k-2q-|y| and at least p-q singletons.
struct path_cover_spec {
    vset x, a, z, y;
    int q = 0;
    std::vector<std::vector<int>> cover;
};

// Max-coverage tables for vertex-disjoint path systems with all endpoints in
// a: alpha[mask] is the largest number of x-vertices on a single path (two or
// more vertices) whose vertex set is exactly mask; beta[l][mask] the largest
// total over l disjoint such paths partitioning mask; beta[1] == alpha.
// Entries are `none` when no such system exists. Masks beyond max_verts
// vertices are not filled in. The endpoint table dp backs path extraction.
struct multi_path_table {
    static constexpr int none = -(1 << 28);
    int n = 0;
    int max_verts = 0;
    std::vector<int> alpha;
    std::vector<std::vector<int>> beta;  // beta[l], l = 0..levels (0 unused)
    std::vector<int16_t> dp;             // mask*n+v -> best weight, -1 absent
};

// Builds the tables on g (at most 18 vertices) for endpoint set a and weight
// set x, filling beta up to `levels` paths over masks of at most max_verts
// vertices.
multi_path_table build_multi_path_table(const graph &g, const vset &a, const vset &x,
                                        int levels, int max_verts);

// Recovers `level` vertex-disjoint paths partitioning mask whose total
// x-coverage equals beta[level][mask]. Throws if the entry is `none`.
std::vector<std::vector<int>> extract_cover_paths(const multi_path_table &t, const graph &g,
                                                  const vset &a, const vset &x, int mask,
                                                  int level);

// Swaps independent-side cycle vertices outside x for missing x-vertices until
// the cycle contains all of x. The result has the same length and the same
// intersection with s_cover as the input. Throws GuaranteeViolated when no
// swap position exists for some missing vertex.
certificate reroute_through_x(const graph &g, const vset &b, const vset &s_cover,
                              const certificate &cycle, const vset &x);

// Splits the cover: a = vertices of s_cover with at least p+1 neighbors in x,
// z = the rest. Preconditions: 8p < delta(g-b) and |x| >= delta(g-b)-3p,
// which force |z| < 2p (BoundViolated otherwise).
std::pair<vset, vset> split_a_z(const graph &g, const vset &b, const vset &s_cover,
                                const vset &x, int p);

// Searches for a path-cover witness of a cycle of length exactly
// 2*delta(g-b)+k through x and z: iterates the surplus q, the number r of
// ridden independent vertices, and the number t of non-singleton paths, and
// answers each cell from the max-coverage tables. Exact on graphs of at most
// 18 vertices (UnsupportedScale beyond).
std::optional<path_cover_spec> path_cover_exists(const graph &g, const vset &b,
                                                 const vset &s_cover, int k, const vset &x,
                                                 const vset &a, const vset &z);

// Turns a valid spec into a verified cycle of length exactly 2*delta(g-b)+k
// containing x and z: drops p-q singletons, completes x+y to an
// independent-side selection of size delta(g-b)+k-q, stitches paths and spare
// selection vertices into a cycle of an edge-augmented auxiliary graph, and
// removes the synthetic edges by crossing exchanges.
certificate reconstruct_cycle(const path_cover_spec &spec, const graph &g, const vset &b,
                              const vset &s_cover, int k);

// Full dispatch. Returns a verified cycle of length at least
// 2*delta(g-b)+k, or nothing when provably absent: k > 2p is always absent;
// delta(g-b) <= 8p is decided directly (cycle solver, exhaustive fallback);
// p = 0 reduces to an alternating cycle; otherwise the target length is swept
// and each z-subset branch is answered through path_cover_exists on the
// branch graph.
std::optional<certificate> solve_vcad(const vcad_instance &inst);
