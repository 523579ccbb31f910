#include <rcl/copies.hpp>
#include <rcl/errors.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace rcl {

namespace {

std::vector<std::vector<int>> all_k_subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    auto rec = [&](auto && self, int start, int depth) -> void {
        if (depth == k) {
            out.push_back(pick);
            return;
        }
        for (int v = start; v <= n; ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    if (n >= k && k >= 1)
        rec(rec, 1, 0);
    return out;
}

struct EmbeddingEnumerator
{
    const KHypergraph & host;
    const KHypergraph & pattern;
    bool host_complete;
    long nodes = 0;
    long node_budget;

    std::vector<int> image;      // pattern vertex -> host vertex (0 = unset)
    std::vector<char> used;      // host vertex used

    // edges of the pattern whose max vertex is v, checked as soon as v maps
    std::vector<std::vector<const std::vector<int> *>> closing;

    template <typename F>
    void run(F && on_copy)
    {
        image.assign(pattern.n + 1, 0);
        used.assign(host.n + 1, 0);
        closing.assign(pattern.n + 1, {});
        for (const auto & e : pattern.edges)
            closing[e.back()].push_back(&e);
        rec(1, on_copy);
    }

    template <typename F>
    void rec(int pv, F && on_copy)
    {
        if (++nodes > node_budget)
            throw BudgetExceeded("embedding enumeration budget exceeded");
        if (pv > pattern.n) {
            on_copy(image);
            return;
        }
        for (int hv = 1; hv <= host.n; ++hv) {
            if (used[hv])
                continue;
            image[pv] = hv;
            bool ok = true;
            if (! host_complete) {
                for (const auto * e : closing[pv]) {
                    std::vector<int> img;
                    img.reserve(e->size());
                    for (int x : *e)
                        img.push_back(image[x]);
                    std::sort(img.begin(), img.end());
                    if (! host.has_edge(img)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                used[hv] = 1;
                rec(pv + 1, on_copy);
                used[hv] = 0;
            }
            image[pv] = 0;
        }
    }
};

} // namespace

CopiesHypergraph build_copies_hypergraph(const KHypergraph & pattern, int n, CopiesBudget budget)
{
    if (n < pattern.n)
        throw HypergraphError("build_copies_hypergraph: ground set smaller than the pattern");
    KHypergraph base = strip_isolated(pattern);
    if (base.edge_count() == 0)
        throw HypergraphError("build_copies_hypergraph: pattern has no edges");

    Int projected_vertices = binomial(n, base.k);
    Int projected_edges = factorial(base.n) / automorphism_count(base) * binomial(n, base.n);
    if (projected_vertices > budget.max_vertices || projected_edges > budget.max_edges)
        throw CopiesBudgetError("build_copies_hypergraph: projected size exceeds budget (" +
                                    projected_vertices.get_str() + " vertices, " +
                                    projected_edges.get_str() + " edges)",
                                projected_vertices, projected_edges);

    CopiesHypergraph out;
    out.base = base;
    out.ground_n = n;
    out.subset_of_vertex = all_k_subsets(n, base.k);

    std::map<std::vector<int>, int> id_of_subset;
    for (std::size_t i = 0; i < out.subset_of_vertex.size(); ++i)
        id_of_subset[out.subset_of_vertex[i]] = static_cast<int>(i) + 1;

    // host edges are irrelevant when embedding into the complete k-graph
    KHypergraph host = KHypergraph::make(base.k, n, {});
    std::set<std::vector<int>> derived_edges;
    EmbeddingEnumerator en{.host = host, .pattern = base, .host_complete = true,
                           .node_budget = 200'000'000};
    en.run([&](const std::vector<int> & image) {
        std::vector<int> ids;
        ids.reserve(base.edges.size());
        for (const auto & e : base.edges) {
            std::vector<int> img;
            img.reserve(e.size());
            for (int x : e)
                img.push_back(image[x]);
            std::sort(img.begin(), img.end());
            ids.push_back(id_of_subset.at(img));
        }
        std::sort(ids.begin(), ids.end());
        derived_edges.insert(std::move(ids));
    });

    std::vector<std::vector<int>> edges(derived_edges.begin(), derived_edges.end());
    out.derived = KHypergraph::make(base.edge_count(), static_cast<int>(out.subset_of_vertex.size()),
                                    std::move(edges));
    return out;
}

long count_copies(const KHypergraph & g, const KHypergraph & h, long node_budget)
{
    KHypergraph pattern = strip_isolated(h);
    if (pattern.edge_count() == 0) {
        // a pattern with no edges embeds as a vertex choice only
        return (g.n >= h.n) ? binomial(g.n, h.n).get_si() : 0;
    }
    if (pattern.k != g.k)
        throw HypergraphError("count_copies: uniformity mismatch");
    std::set<std::pair<std::vector<int>, std::vector<std::vector<int>>>> copies;
    EmbeddingEnumerator en{.host = g, .pattern = pattern, .host_complete = false, .node_budget = node_budget};
    en.run([&](const std::vector<int> & image) {
        std::vector<int> vs(image.begin() + 1, image.end());
        std::sort(vs.begin(), vs.end());
        std::vector<std::vector<int>> es;
        es.reserve(pattern.edges.size());
        for (const auto & e : pattern.edges) {
            std::vector<int> img;
            for (int x : e)
                img.push_back(image[x]);
            std::sort(img.begin(), img.end());
            es.push_back(std::move(img));
        }
        std::sort(es.begin(), es.end());
        copies.insert({std::move(vs), std::move(es)});
    });
    // isolated vertices of h multiply the count by the ways to place them
    long iso = h.n - pattern.n;
    long total = static_cast<long>(copies.size());
    if (iso > 0)
        total *= binomial(std::max(0, g.n - pattern.n), iso).get_si();
    return total;
}

std::vector<std::vector<std::uint64_t>> copy_edge_masks(const KHypergraph & g, const KHypergraph & h,
                                                        long node_budget)
{
    KHypergraph pattern = strip_isolated(h);
    if (pattern.edge_count() == 0)
        throw HypergraphError("copy_edge_masks: pattern has no edges");
    std::map<std::vector<int>, int> edge_index;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        edge_index[g.edges[i]] = static_cast<int>(i);
    std::set<std::vector<std::uint64_t>> masks;
    std::size_t words = (g.edges.size() + 63) / 64;
    EmbeddingEnumerator en{.host = g, .pattern = pattern, .host_complete = false, .node_budget = node_budget};
    en.run([&](const std::vector<int> & image) {
        std::vector<std::uint64_t> mask(words, 0);
        for (const auto & e : pattern.edges) {
            std::vector<int> img;
            for (int x : e)
                img.push_back(image[x]);
            std::sort(img.begin(), img.end());
            int idx = edge_index.at(img);
            mask[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        }
        masks.insert(std::move(mask));
    });
    return {masks.begin(), masks.end()};
}

BoundednessReport check_boundedness(const CopiesHypergraph & ch, const Rat & p, const Rat & c)
{
    if (p <= 0 || p > 1)
        throw HypergraphError("check_boundedness: p must lie in (0,1]");
    BoundednessReport rep;
    rep.min_c = 0;
    rep.all_hold = true;
    Rat e_over_v = frac(ch.derived.edge_count(), ch.derived.vertex_count());
    for (int ell = 1; ell <= ch.base.edge_count(); ++ell) {
        BoundednessRow row;
        row.ell = ell;
        row.delta_ell_value = delta_ell(ch.derived, ell);
        Rat scale = rat_pow(p, ell - 1) * e_over_v;
        row.rhs = c * scale;
        row.tight_c = scale == 0 ? Rat(0) : Rat(row.delta_ell_value) / scale;
        row.holds = Rat(row.delta_ell_value) <= row.rhs;
        rep.all_hold = rep.all_hold && row.holds;
        rep.min_c = std::max(rep.min_c, row.tight_c);
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace rcl
