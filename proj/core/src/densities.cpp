#include <rcl/densities.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace rcl {

namespace {

// d_k over an explicit (vertex count, edge count) pair
Rat d_k_counts(int k, long v, long e)
{
    if (e == 0)
        return 0;
    if (v == k && e == 1)
        return frac(1, k);
    if (v == k)
        throw HypergraphError("d_k: multiple edges on exactly k vertices (corrupt input)");
    if (v < k)
        throw HypergraphError("d_k: edge spans more vertices than available");
    return frac(e - 1, v - k);
}

// count edges inside a vertex mask
long edges_inside(const KHypergraph & h, std::uint64_t mask)
{
    long e = 0;
    for (const auto & edge : h.edges) {
        bool in = true;
        for (int v : edge)
            if (! ((mask >> v) & 1)) {
                in = false;
                break;
            }
        if (in)
            ++e;
    }
    return e;
}

} // namespace

Rat d_k(const KHypergraph & h, bool strip_isolated_vertices)
{
    const KHypergraph * use = &h;
    KHypergraph stripped;
    if (strip_isolated_vertices) {
        stripped = strip_isolated(h);
        use = &stripped;
    }
    return d_k_counts(use->k, use->n, use->edge_count());
}

DensityReport m_k(const KHypergraph & h)
{
    if (h.n > 20)
        throw HypergraphError("m_k: exhaustive subset enumeration supports n <= 20");
    DensityReport rep;
    rep.d_k = d_k(h);
    rep.m_k = 0;
    rep.witness = {};
    bool have = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.n); ++mask) {
        std::uint64_t vmask = mask << 1;
        int v = __builtin_popcountll(mask);
        if (v < h.k)
            continue;
        long e = edges_inside(h, vmask);
        if (v == h.k && e > 1)
            continue; // impossible for simple hypergraphs
        Rat d = d_k_counts(h.k, v, e);
        std::vector<int> verts;
        for (int x = 1; x <= h.n; ++x)
            if ((vmask >> x) & 1)
                verts.push_back(x);
        if (! have || d > rep.m_k ||
            (d == rep.m_k && (verts.size() < rep.witness.size() ||
                              (verts.size() == rep.witness.size() && verts < rep.witness)))) {
            rep.m_k = d;
            rep.witness = verts;
            have = true;
        }
    }
    if (! have) {
        // no subset of size >= k: edgeless by validity
        rep.m_k = 0;
        rep.witness = {};
    }
    return rep;
}

AsymmetricDensity asymmetric_m_k(const KHypergraph & h1, const KHypergraph & h2)
{
    if (h1.edge_count() == 0 || h2.edge_count() == 0)
        throw HypergraphError("asymmetric_m_k: both patterns need at least one edge");
    if (h1.k != h2.k)
        throw HypergraphError("asymmetric_m_k: uniformity mismatch");
    Rat m2 = m_k(h2).m_k;
    Rat m1 = m_k(h1).m_k;
    if (m1 < m2)
        throw HypergraphError("asymmetric_m_k: requires m_k(H1) >= m_k(H2); swap the arguments");
    Rat inv_m2 = Rat(1) / m2;

    AsymmetricDensity out;
    out.value = 0;
    bool have = false;
    int maximizer_count = 0;
    bool full_is_max = false;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << h1.n); ++mask) {
        std::uint64_t vmask = mask << 1;
        int v = __builtin_popcountll(mask);
        if (v < h1.k)
            continue;
        long e = edges_inside(h1, vmask);
        if (e < 1)
            continue;
        Rat denom = Rat(v - h1.k) + inv_m2;
        Rat val = Rat(e) / denom;
        if (! have || val > out.value) {
            out.value = val;
            out.maximizer.clear();
            for (int x = 1; x <= h1.n; ++x)
                if ((vmask >> x) & 1)
                    out.maximizer.push_back(x);
            maximizer_count = 1;
            full_is_max = (v == h1.n);
            have = true;
        }
        else if (val == out.value) {
            ++maximizer_count;
            if (v == h1.n)
                full_is_max = true;
            // keep the reported maximizer deterministic: prefer larger vertex
            // sets so the full pattern is reported when it attains the max
            std::vector<int> verts;
            for (int x = 1; x <= h1.n; ++x)
                if ((vmask >> x) & 1)
                    verts.push_back(x);
            if (verts.size() > out.maximizer.size() ||
                (verts.size() == out.maximizer.size() && verts < out.maximizer))
                out.maximizer = verts;
        }
    }
    out.strictly_balanced = full_is_max && maximizer_count == 1;
    return out;
}

namespace {

bool colourable(const std::vector<std::uint64_t> & adj, int n, int colours)
{
    std::vector<int> col(n + 1, 0);
    auto rec = [&](auto && self, int v) -> bool {
        if (v > n)
            return true;
        int cap = 0;
        for (int u = 1; u < v; ++u)
            cap = std::max(cap, col[u]);
        for (int c = 1; c <= std::min(colours, cap + 1); ++c) {
            bool ok = true;
            for (int u = 1; u < v; ++u)
                if (((adj[v] >> u) & 1) && col[u] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                col[v] = c;
                if (self(self, v + 1))
                    return true;
                col[v] = 0;
            }
        }
        return false;
    };
    return rec(rec, 1);
}

} // namespace

int chromatic_number(const KHypergraph & g)
{
    if (g.k != 2)
        throw HypergraphError("chromatic_number: unsupported uniformity (k = 2 only)");
    if (g.n == 0)
        return 0;
    auto adj = g.adjacency();
    for (int c = 1; c <= g.n; ++c)
        if (colourable(adj, g.n, c))
            return c;
    return g.n;
}

long delta_ell(const KHypergraph & h, int ell)
{
    if (ell < 1 || ell > h.k)
        throw HypergraphError("delta_ell: ell must lie in 1..k");
    std::map<std::vector<int>, long> deg;
    std::vector<int> pick(ell);
    for (const auto & e : h.edges) {
        auto rec = [&](auto && self, int start, int depth) -> void {
            if (depth == ell) {
                ++deg[pick];
                return;
            }
            for (int i = start; i < static_cast<int>(e.size()); ++i) {
                pick[depth] = e[i];
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    long best = 0;
    for (const auto & [t, d] : deg)
        best = std::max(best, d);
    return best;
}

} // namespace rcl
