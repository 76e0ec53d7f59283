#pragma once

// Core graph machinery: simple undirected graphs on dense integer ids,
// block/cut-vertex decomposition, vertex-disjoint path search, leaf-block
// contraction with provenance, and certificate verification.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// All solver-visible failures carry a short stable code (e.g. "NotTwoConnected",
// "GuaranteeViolated") so callers and the CLI can dispatch on them.
struct solver_error : std::runtime_error {
    std::string code;
    solver_error(std::string c, const std::string &msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const char *code, const std::string &msg) {
    throw solver_error(code, msg);
}

struct graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;  // sorted, duplicate-free neighbor lists

    graph() = default;
    explicit graph(int n_) : n(n_), adj(n_) {}

    bool has_edge(int u, int v) const;
    int degree(int v) const { return (int)adj[v].size(); }
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
};

// Builds a graph from an edge list; rejects self-loops, ignores duplicates.
graph make_graph(int n, const std::vector<std::pair<int, int>> &edges);

// ---- vertex sets -----------------------------------------------------------
// Vertex sets are sorted duplicate-free int vectors; masks are used internally.

using vset = std::vector<int>;

vset normalize_set(vset s);                       // sort + unique
std::vector<char> to_mask(int n, const vset &s);  // membership mask
bool set_contains(const vset &s, int v);          // binary search
vset set_union(const vset &a, const vset &b);
vset set_minus(const vset &a, const vset &b);

// ---- certificates ----------------------------------------------------------

struct certificate {
    enum kind_t { cycle, path };
    kind_t kind = path;
    std::vector<int> seq;     // cycle: closing edge seq.back()-seq.front() implied
    int declared_length = 0;  // edges: |seq|-1 for paths, |seq| for cycles

    static certificate make_path(std::vector<int> s);
    static certificate make_cycle(std::vector<int> s);
    int length() const { return declared_length; }
};

// True iff c is a valid simple path/cycle of g matching its declared length.
// On failure, *why (if given) receives a first-violation diagnostic.
bool verify_certificate(const graph &g, const certificate &c, std::string *why = nullptr);

// ---- basic structure -------------------------------------------------------

// δ(G−B): minimum over v outside b of the number of neighbors outside b.
// Throws EmptyResidual if b covers all vertices.
int min_degree_outside(const graph &g, const vset &b);

// Connected components of g restricted to vertices with alive[v] != 0
// (alive empty means "all"). Each component is sorted.
std::vector<vset> connected_components(const graph &g, const std::vector<char> &alive = {});
bool is_connected(const graph &g);

struct block_tree {
    std::vector<vset> blocks;  // 2-connected pieces (or single edges); sorted
    vset cut_vertices;
    std::vector<vset> block_cuts;  // per block: its cut vertices

    // A leaf block contains at most one cut vertex.
    bool is_leaf(int i) const { return block_cuts[i].size() <= 1; }
};

block_tree block_decomposition(const graph &g);
bool is_two_connected(const graph &g);  // connected, n >= 3, no cut vertex

// ---- disjoint paths (Menger) -----------------------------------------------

// Up to `want` pairwise vertex-disjoint paths, each from a vertex of `a` to a
// vertex of `b`, with no internal vertex in a∪b and no vertex with
// forbidden[v] != 0. Unit-vertex-capacity flow with in/out splitting;
// augmentation scans neighbors in increasing id order so results are
// deterministic. Returns as many paths as the flow admits (possibly < want).
std::vector<certificate> disjoint_paths(const graph &g, const vset &a, const vset &b,
                                        int want, const std::vector<char> &forbidden = {});

// Exactly two vertex-disjoint (a,b)-paths; throws NotTwoConnected if only one
// exists. Spec'd entry point built on disjoint_paths.
std::pair<certificate, certificate> two_disjoint_paths(const graph &g, const vset &a,
                                                       const vset &b);

// ---- contraction / B-refinement --------------------------------------------

struct contraction_map {
    std::vector<int> image;        // original id -> refined id
    std::vector<vset> group;       // refined id -> original ids merged into it
    std::vector<int> rep;          // refined id -> surviving original vertex
    bool identity() const;
};

// B-refinement of the component g[h]: while g[h] has a leaf-block all of whose
// inner vertices lie in b, contract that leaf-block onto its cut vertex.
// Returns the refined whole graph (dense ids) and the provenance map.
std::pair<graph, contraction_map> b_refinement(const graph &g, const vset &h, const vset &b);

// Applies b_refinement to every component of g - minus that is not fully
// inside b; `minus` vertices are untouched (their edges are preserved).
std::pair<graph, contraction_map> b_refine_all(const graph &g, const vset &minus, const vset &b);

// Lifts a certificate of the refined graph back to the original graph by
// expanding contracted groups with BFS routes inside each group. The lifted
// walk is at least as long as the refined one.
certificate lift_certificate(const graph &orig, const contraction_map &cm,
                             const certificate &c);

// Set image of a vset under the map (sorted refined ids).
vset map_set(const contraction_map &cm, const vset &s);

// ---- misc ------------------------------------------------------------------

graph induced_subgraph(const graph &g, const vset &verts, std::vector<int> *to_orig = nullptr);
graph remove_vertices(const graph &g, const vset &kill, std::vector<int> *to_orig = nullptr);

// Distinct id space helpers for gadget builds: returns g plus one new vertex
// adjacent to `nbrs` (new vertex id = g.n).
graph add_vertex(const graph &g, const vset &nbrs);
