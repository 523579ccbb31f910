#pragma once

#include <rcl/densities.hpp>
#include <rcl/hypergraph.hpp>

#include <cstdint>
#include <vector>

namespace rcl {

// The hypergraph of copies of a pattern H inside the complete k-graph on
// [n]: vertices are the k-subsets of [n], edges are the edge-set images of
// H. Uniformity of the derived hypergraph is e(H).
struct CopiesHypergraph
{
    KHypergraph base;   // pattern, isolated vertices stripped
    int ground_n = 0;
    KHypergraph derived;
    std::vector<std::vector<int>> subset_of_vertex; // derived vertex id -> k-subset of [n]
};

struct CopiesBudget
{
    long max_vertices = 1'000'000;
    long max_edges = 5'000'000;
};

struct CopiesBudgetError : HypergraphError
{
    Int projected_vertices;
    Int projected_edges;
    CopiesBudgetError(std::string msg, Int pv, Int pe)
        : HypergraphError(std::move(msg)), projected_vertices(std::move(pv)), projected_edges(std::move(pe)) {}
};

CopiesHypergraph build_copies_hypergraph(const KHypergraph & pattern, int n, CopiesBudget budget = {});

// number of distinct copies (vertex-set + edge-set images) of H in G
long count_copies(const KHypergraph & g, const KHypergraph & h, long node_budget = 50'000'000);

// edge masks over a fixed edge indexing of g (the position of each edge in
// g.edges); one mask per copy of h in g
std::vector<std::vector<std::uint64_t>> copy_edge_masks(const KHypergraph & g, const KHypergraph & h,
                                                        long node_budget = 50'000'000);

struct BoundednessRow
{
    int ell;
    long delta_ell_value;
    Rat rhs;       // c * p^(ell-1) * e/v
    Rat tight_c;   // minimal c making this row hold
    bool holds;
};

struct BoundednessReport
{
    std::vector<BoundednessRow> rows;
    Rat min_c; // minimal c making every row hold
    bool all_hold;
};

BoundednessReport check_boundedness(const CopiesHypergraph & ch, const Rat & p, const Rat & c);

} // namespace rcl
