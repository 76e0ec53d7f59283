#include "driver.hpp"

#include "almostham.hpp"
#include "classic.hpp"
#include "diracdec.hpp"
#include "oracle.hpp"
#include "vcad.hpp"

#include <algorithm>
#include <numeric>

namespace {

// exhaustive long-cycle decision for the extremal regimes; the
// single-exponential alternative only matters beyond desk scale
std::optional<certificate> cycle_at_least(const graph &g, int want) {
    oracle_budget budget;
    budget.max_vertices = 80;
    certificate w;
    if (oracle_cycle_at_least(g, want, &w, budget)) return w;
    return std::nullopt;
}

}  // namespace

ldc_verdict solve_ldc(const ldc_instance &inst, const coloring_source &src) {
    const graph &g = inst.g;
    int n = g.n, k = inst.k;
    if (k < 0) fail("FormatError", "negative k");
    vset b = normalize_set(inst.b);
    for (int v : b)
        if (v < 0 || v >= n) fail("FormatError", "b vertex out of range");
    if (!is_two_connected(g)) fail("NotTwoConnected", "cycle solver needs a 2-connected graph");

    int delta = min_degree_outside(g, b);
    ldc_verdict out;
    out.threshold = std::min(2 * delta, n - (int)b.size()) + k;
    auto say = [&](std::string s) { out.trace.push_back(std::move(s)); };
    auto accept = [&](certificate c) {
        if (!verify_certificate(g, c) || c.length() < out.threshold)
            fail("InvariantViolated", "yes-certificate below the threshold");
        out.yes = true;
        out.cert = std::move(c);
    };

    if (out.threshold <= 3) {
        // every 2-connected graph has a cycle, and every cycle has length >= 3
        say("threshold <= 3: any cycle suffices");
        accept(cycle_min_degree_plus_one(g));
        return out;
    }
    if (out.threshold > n) {
        say("threshold exceeds the vertex count: no");
        return out;
    }
    if (k == 0) {
        say("k = 0: the constructive bound meets the threshold");
        accept(generalized_dirac_cycle(g, b));
        return out;
    }
    if (delta < 12 || 24 * k > delta || 2 * k + 2 * (int)b.size() + 12 > delta) {
        say("extremal parameters (delta " + std::to_string(delta) + ", k " + std::to_string(k) +
            ", |b| " + std::to_string(b.size()) + "): direct long-cycle search");
        if (auto c = cycle_at_least(g, out.threshold)) accept(std::move(*c));
        return out;
    }
    if (2 * delta >= n - (int)b.size() - k) {
        int kp = std::max((int)b.size(), ((int)b.size() + k + 1) / 2);
        say("dense residual: almost-hamiltonian solver with k' = " + std::to_string(kp));
        certificate c = almost_ham_solve(g, b, kp, src);
        say("longest cycle found: " + std::to_string(c.length()));
        if (c.length() >= out.threshold) accept(std::move(c));
        return out;
    }

    // main regime: 2*delta < n - |b|, so the threshold is 2*delta + k
    certificate cyc = generalized_dirac_cycle(g, b);
    say("seed cycle of length " + std::to_string(cyc.length()));
    for (int round = 0; round <= n + 1; round++) {
        if (cyc.length() >= out.threshold) {
            say("cycle meets the threshold");
            accept(std::move(cyc));
            return out;
        }
        // work relative to the current cycle with all b-refinements applied
        auto [gr, cm] = b_refine_all(g, normalize_set(cyc.seq), b);
        bool ident = cm.identity();
        const graph &wg = ident ? g : gr;
        vset wb = ident ? b : map_set(cm, b);
        certificate wc = cyc;
        if (!ident) {
            std::vector<int> cs;
            for (int v : cyc.seq) cs.push_back(cm.image[v]);
            wc = certificate::make_cycle(cs);
            say("b-refinement contracted " + std::to_string(n - wg.n) + " vertices");
        }
        auto lift = [&](const certificate &c) {
            return ident ? c : lift_certificate(g, cm, c);
        };

        enlarge_outcome eo = enlarge_or_decompose(wg, wb, k, wc);
        if (eo.longer_cycle) {
            certificate longer = lift(*eo.longer_cycle);
            if (longer.length() <= cyc.length())
                fail("InvariantViolated", "enlargement did not gain length");
            say("enlarged cycle to length " + std::to_string(longer.length()));
            cyc = std::move(longer);
            continue;
        }
        if (eo.vertex_cover) {
            vset cov;
            for (int r : *eo.vertex_cover) cov.push_back(ident ? r : cm.rep[r]);
            vset s = set_union(normalize_set(cov), b);
            for (auto [u, v] : g.edges())
                if (!set_contains(s, u) && !set_contains(s, v))
                    fail("GuaranteeViolated", "extracted set is not a vertex cover");
            say("vertex cover regime: |S| = " + std::to_string(s.size()));
            vcad_instance vi;
            vi.g = g;
            vi.b = b;
            vi.s_cover = s;
            vi.p = (int)s.size() - delta;
            vi.k = k;
            if (auto c = solve_vcad(vi)) accept(std::move(*c));
            return out;
        }
        say("dirac decomposition extracted");
        decomposition_verdict dv = solve_with_decomposition(wg, wb, k, wc, *eo.decomposition);
        if (dv.solved) {
            say(dv.witness ? "decomposition case analysis: yes" : "decomposition case analysis: no");
            if (dv.witness) accept(lift(*dv.witness));
            return out;
        }
        certificate longer = lift(*dv.longer_cycle);
        if (longer.length() <= cyc.length())
            fail("InvariantViolated", "decomposition rerouting did not gain length");
        say("decomposition rerouting enlarged cycle to " + std::to_string(longer.length()));
        cyc = std::move(longer);
    }
    fail("InvariantViolated", "enlargement loop exceeded the vertex count");
}

ldc_verdict solve_ldp(const graph &g, const vset &b, int k, const coloring_source &src) {
    if (k < 0) fail("FormatError", "negative k");
    if (g.n == 0) fail("FormatError", "empty graph");
    std::vector<char> alive(g.n, 1);
    if (connected_components(g, alive).size() != 1)
        fail("Disconnected", "path solver needs a connected graph");
    vset bn = normalize_set(b);
    for (int v : bn)
        if (v < 0 || v >= g.n) fail("FormatError", "b vertex out of range");

    int delta = min_degree_outside(g, bn);
    ldc_verdict out;
    out.threshold = std::min(2 * delta, g.n - (int)bn.size() - 1) + k;
    if (out.threshold <= 0) {
        out.trace.push_back("trivial threshold: single-vertex path");
        out.yes = true;
        out.cert = certificate::make_path({0});
        return out;
    }
    if (g.n == 1) {
        out.trace.push_back("single vertex cannot carry a positive-length path");
        return out;
    }

    // apex vertex adjacent to everything: paths of length t correspond to
    // cycles of length t+2 through the apex, and any apex-free cycle of
    // length t+2 contains a path of length t+1 anyway
    int apex = g.n;
    vset everyone(g.n);
    std::iota(everyone.begin(), everyone.end(), 0);
    graph ga = add_vertex(g, everyone);
    ldc_instance ci;
    ci.g = ga;
    ci.b = bn;
    ci.k = k;
    ldc_verdict inner = solve_ldc(ci, src);
    if (inner.threshold != out.threshold + 2)
        fail("InvariantViolated", "apex threshold mismatch");
    out.trace.push_back("apex construction: cycle threshold " +
                        std::to_string(inner.threshold));
    for (auto &s : inner.trace) out.trace.push_back(std::move(s));
    if (!inner.yes) return out;

    std::vector<int> seq = inner.cert->seq;
    auto it = std::find(seq.begin(), seq.end(), apex);
    std::vector<int> path;
    if (it != seq.end()) {
        // rotate the cycle so the apex is first, then drop it
        std::rotate(seq.begin(), it, seq.end());
        path.assign(seq.begin() + 1, seq.end());
    } else {
        // cycle entirely inside g: drop the closing edge
        path = seq;
    }
    certificate pc = certificate::make_path(path);
    if (!verify_certificate(g, pc) || pc.length() < out.threshold)
        fail("InvariantViolated", "lifted path below the threshold");
    out.yes = true;
    out.cert = std::move(pc);
    return out;
}
