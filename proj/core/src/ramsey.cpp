#include <rcl/errors.hpp>
#include <rcl/ramsey.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rcl {

namespace {

Bits to_bits(const std::vector<std::uint64_t> & words, int items)
{
    Bits b(items);
    for (std::size_t i = 0; i < words.size() && i < b.w.size(); ++i)
        b.w[i] = words[i];
    return b;
}

ColoringProblem edge_colouring_problem(const KHypergraph & g,
                                       const std::vector<std::vector<KHypergraph>> & families)
{
    ColoringProblem prob;
    prob.items = g.edge_count();
    prob.colours = static_cast<int>(families.size());
    prob.families.resize(prob.colours);
    for (int c = 0; c < prob.colours; ++c) {
        std::set<std::vector<std::uint64_t>> seen;
        for (const auto & h : families[c]) {
            if (h.edge_count() == 0)
                throw HypergraphError("Ramsey oracle: edgeless pattern");
            if (h.k != g.k)
                throw HypergraphError("Ramsey oracle: pattern uniformity mismatch");
            for (auto & m : copy_edge_masks(g, h))
                seen.insert(std::move(m));
        }
        for (const auto & m : seen)
            prob.families[c].push_back(to_bits(m, prob.items));
    }
    return prob;
}

ColoringAssignment assignment_from(const KHypergraph & g, const std::vector<int> & colouring)
{
    return ColoringAssignment{g, colouring};
}

} // namespace

RamseyVerdict is_ramsey_families(const KHypergraph & g,
                                 const std::vector<std::vector<KHypergraph>> & families,
                                 long node_budget)
{
    if (families.empty())
        throw HypergraphError("Ramsey oracle: at least one colour required");
    auto prob = edge_colouring_problem(g, families);
    auto res = decide_colouring(prob, node_budget);
    RamseyVerdict out;
    out.nodes = res.nodes;
    if (res.satisfiable) {
        out.is_ramsey = Verdict::No;
        out.free_colouring = assignment_from(g, res.colouring);
    }
    else if (res.status == SearchStatus::Complete)
        out.is_ramsey = Verdict::Yes;
    else
        out.is_ramsey = Verdict::Unknown;
    return out;
}

RamseyVerdict is_ramsey(const KHypergraph & g, const std::vector<KHypergraph> & patterns, long node_budget)
{
    std::vector<std::vector<KHypergraph>> families;
    families.reserve(patterns.size());
    for (const auto & p : patterns)
        families.push_back({p});
    return is_ramsey_families(g, families, node_budget);
}

EpsWeakResult eps_weak_ramsey(const KHypergraph & g, const std::vector<KHypergraph> & patterns,
                              const Rat & eps, long node_budget)
{
    std::vector<std::vector<KHypergraph>> families;
    for (const auto & p : patterns)
        families.push_back({p});
    auto prob = edge_colouring_problem(g, families);
    std::vector<Rat> weights;
    for (const auto & p : patterns)
        weights.push_back(Rat(1) / Rat(binomial(g.n, p.n)));
    auto res = min_max_normalised(prob, weights, node_budget);
    EpsWeakResult out;
    out.nodes = res.nodes;
    if (res.status == SearchStatus::BudgetExhausted) {
        out.weakly_ramsey = Verdict::Unknown;
        return out;
    }
    out.best_value = res.value;
    out.copies_per_colour = res.violations;
    out.best_colouring = assignment_from(g, res.colouring);
    out.weakly_ramsey = (res.value < eps) ? Verdict::Yes : Verdict::No;
    return out;
}

MinMonoResult min_mono_copies(const KHypergraph & g, const std::vector<KHypergraph> & patterns,
                              long node_budget)
{
    std::vector<std::vector<KHypergraph>> families;
    for (const auto & p : patterns)
        families.push_back({p});
    auto prob = edge_colouring_problem(g, families);
    auto res = min_total_violations(prob, node_budget);
    MinMonoResult out;
    out.nodes = res.nodes;
    if (res.status == SearchStatus::BudgetExhausted) {
        out.exact = Verdict::Unknown;
        return out;
    }
    out.exact = Verdict::Yes;
    out.minimum = res.total;
    out.colouring = assignment_from(g, res.colouring);
    return out;
}

ExtremalRecord ex_r(int n, const std::vector<KHypergraph> & patterns, long node_budget)
{
    if (patterns.empty())
        throw HypergraphError("ex_r: at least one pattern required");
    int k = patterns.front().k;
    for (const auto & p : patterns)
        if (p.k != k)
            throw HypergraphError("ex_r: pattern uniformity mismatch");
    KHypergraph complete = complete_khypergraph(k, n);
    std::vector<std::vector<KHypergraph>> families;
    for (const auto & p : patterns)
        families.push_back({p});
    auto prob = edge_colouring_problem(complete, families);
    auto res = max_in_colouring(prob, node_budget);
    if (res.status == SearchStatus::BudgetExhausted)
        throw BudgetExceeded("ex_r: search budget exhausted at n = " + std::to_string(n));

    ExtremalRecord rec;
    rec.n = n;
    rec.k = k;
    rec.ex_value = res.best;
    rec.nodes = res.nodes;
    std::vector<std::vector<int>> kept;
    std::vector<int> colours;
    for (int i = 0; i < complete.edge_count(); ++i)
        if (res.assignment[i] != 0) {
            kept.push_back(complete.edges[i]);
            colours.push_back(res.assignment[i]);
        }
    rec.extremal_graph = KHypergraph::make(k, n, kept);
    // edges stay sorted under make since kept is already lex-sorted
    rec.free_colouring = ColoringAssignment{rec.extremal_graph, colours};
    return rec;
}

KHypergraph turan_graph(int s, int n)
{
    if (s < 1 || s > n)
        throw HypergraphError("turan_graph: requires 1 <= s <= n");
    // vertex v (1-based) goes to part (v-1) % s
    std::vector<std::vector<int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if ((u - 1) % s != (v - 1) % s)
                edges.push_back({u, v});
    return KHypergraph::make(2, n, std::move(edges));
}

long turan_number(int s, int n)
{
    return turan_graph(s, n).edge_count();
}

RamseyNumberResult ramsey_number(const std::vector<int> & clique_sizes, long node_budget)
{
    if (clique_sizes.empty())
        throw HypergraphError("ramsey_number: at least one clique size required");
    for (int ell : clique_sizes)
        if (ell < 1)
            throw HypergraphError("ramsey_number: clique sizes must be positive");
    RamseyNumberResult out;
    // K_1 has no edges; (K_1, ...) is forced by any single vertex
    for (int ell : clique_sizes)
        if (ell == 1) {
            out.exact = Verdict::Yes;
            out.value = 1;
            return out;
        }
    std::vector<KHypergraph> patterns;
    for (int ell : clique_sizes)
        patterns.push_back(complete_graph(ell));
    long budget_left = node_budget;
    for (int m = 1;; ++m) {
        auto verdict = is_ramsey(complete_graph(m), patterns, budget_left);
        budget_left -= verdict.nodes;
        out.nodes += verdict.nodes;
        if (verdict.is_ramsey == Verdict::Yes) {
            out.exact = Verdict::Yes;
            out.value = m;
            return out;
        }
        if (verdict.is_ramsey == Verdict::Unknown || budget_left <= 0) {
            out.exact = Verdict::Unknown;
            out.lower_bound = m; // every m' < m was exhaustively refuted
            return out;
        }
        out.lower_bound = m + 1;
    }
}

std::vector<KHypergraph> hom_images(const KHypergraph & h, int v_max)
{
    if (h.k != 2)
        throw HypergraphError("hom_images: k = 2 only");
    auto adj = h.adjacency();
    std::vector<int> cls(h.n + 1, 0);
    std::set<std::vector<std::vector<int>>> canon_seen;
    std::vector<KHypergraph> out;

    // restricted-growth enumeration of partitions into independent classes
    auto rec = [&](auto && self, int v, int used) -> void {
        if (v > h.n) {
            if (used > v_max)
                return;
            std::vector<std::vector<int>> qedges;
            for (const auto & e : h.edges) {
                int a = cls[e[0]], b = cls[e[1]];
                if (a != b)
                    qedges.push_back({std::min(a, b), std::max(a, b)});
            }
            std::sort(qedges.begin(), qedges.end());
            qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
            auto q = KHypergraph::make(2, used, std::move(qedges));
            auto canon = canonical_form(q);
            if (canon_seen.insert(canon.edges).second)
                out.push_back(canon);
            return;
        }
        for (int c = 1; c <= std::min(used + 1, v_max); ++c) {
            bool independent = true;
            for (int u = 1; u < v; ++u)
                if (cls[u] == c && ((adj[v] >> u) & 1)) {
                    independent = false;
                    break;
                }
            if (! independent)
                continue;
            cls[v] = c;
            self(self, v + 1, std::max(used, c));
            cls[v] = 0;
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end(), [](const KHypergraph & a, const KHypergraph & b) {
        return std::tie(a.n, a.edges) < std::tie(b.n, b.edges);
    });
    return out;
}

ChromaticRamseyProbe chromatic_ramsey_probe(const std::vector<KHypergraph> & patterns, int v_max,
                                            long node_budget)
{
    ChromaticRamseyProbe out;
    std::vector<std::vector<KHypergraph>> families;
    bool complete_hom = true;
    for (const auto & p : patterns) {
        if (p.k != 2)
            throw HypergraphError("chromatic_ramsey_probe: k = 2 only");
        if (p.edge_count() == 0)
            throw HypergraphError("chromatic_ramsey_probe: edgeless pattern");
        families.push_back(hom_images(p, v_max));
        if (p.n > v_max)
            complete_hom = false;
        out.family_sizes.push_back(families.back().size());
    }
    out.hom_complete = complete_hom;

    long budget_left = node_budget;
    std::optional<ColoringAssignment> last_free;
    for (int m = 1;; ++m) {
        auto verdict = is_ramsey_families(complete_graph(m), families, budget_left);
        budget_left -= verdict.nodes;
        out.nodes += verdict.nodes;
        if (verdict.is_ramsey == Verdict::Yes) {
            out.upper = m;
            out.lower = complete_hom ? m : 1;
            out.lower_certificate = last_free;
            return out;
        }
        if (verdict.is_ramsey == Verdict::Unknown || budget_left <= 0) {
            out.upper.reset();
            out.lower = complete_hom ? m : 1;
            out.lower_certificate = last_free;
            return out;
        }
        last_free = verdict.free_colouring;
    }
}

ResilienceResult resilience_exact(const KHypergraph & g, const std::vector<KHypergraph> & patterns,
                                  long node_budget)
{
    std::vector<std::vector<KHypergraph>> families;
    for (const auto & p : patterns)
        families.push_back({p});
    auto prob = edge_colouring_problem(g, families);
    auto res = max_in_colouring(prob, node_budget);
    ResilienceResult out;
    out.nodes = res.nodes;
    long e = g.edge_count();
    if (res.status == SearchStatus::Complete) {
        out.exact = Verdict::Yes;
        out.lower = out.upper = e - res.best;
    }
    else {
        out.exact = Verdict::Unknown;
        out.lower = e - res.upper; // optimum free subgraph is at most res.upper
        out.upper = e - res.best;
    }
    std::vector<std::vector<int>> kept;
    std::vector<int> colours;
    for (int i = 0; i < g.edge_count(); ++i)
        if (res.assignment[i] != 0) {
            kept.push_back(g.edges[i]);
            colours.push_back(res.assignment[i]);
        }
    out.survivor = KHypergraph::make(g.k, g.n, kept);
    out.survivor_colouring = ColoringAssignment{*out.survivor, colours};
    return out;
}

std::vector<Rat> pi_sequence(const std::vector<KHypergraph> & patterns, int n_lo, int n_hi,
                             long node_budget)
{
    if (n_lo > n_hi)
        throw HypergraphError("pi_sequence: empty range");
    std::vector<Rat> out;
    Rat prev;
    bool have_prev = false;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto rec = ex_r(n, patterns, node_budget);
        Rat val = Rat(rec.ex_value) / Rat(binomial(n, rec.k));
        if (have_prev && val > prev)
            throw std::logic_error("pi_sequence: ex^r(n)/binom(n,k) increased, search bug");
        out.push_back(val);
        prev = val;
        have_prev = true;
    }
    return out;
}

Rat de_caen_bound(int s, int k)
{
    Int b = binomial(s - 1, k - 1);
    if (b == 0)
        throw HypergraphError("de_caen_bound: binomial(s-1, k-1) is zero");
    return Rat(1) - Rat(1) / Rat(b);
}

} // namespace rcl
