#pragma once

#include <rcl/rational.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcl {

struct HypergraphError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// k-uniform hypergraph on vertices 1..n. Edges are sorted k-sets kept in
// lexicographic order, so equal inputs always produce identical objects.
struct KHypergraph
{
    int k = 2;
    int n = 0;
    std::vector<std::vector<int>> edges;

    static KHypergraph make(int k, int n, std::vector<std::vector<int>> edges);

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(const std::vector<int> & sorted_edge) const;

    // adjacency masks, k = 2 only
    std::vector<std::uint64_t> adjacency() const;

    friend bool operator==(const KHypergraph & a, const KHypergraph & b) = default;
};

KHypergraph parse_hypergraph_text(std::istream & in);
KHypergraph parse_hypergraph_file(const std::string & path);
std::string format_hypergraph_text(const KHypergraph & h);

KHypergraph strip_isolated(const KHypergraph & h);

// vertices of the induced sub-hypergraph are relabelled 1..|verts|
KHypergraph induced_subhypergraph(const KHypergraph & h, const std::vector<int> & verts);

// lexicographically minimal edge list over all vertex relabellings;
// exponential, desk scale only (v <= ~9)
KHypergraph canonical_form(const KHypergraph & h);

long automorphism_count(const KHypergraph & h);

std::vector<int> degrees(const KHypergraph & h);
int max_degree(const KHypergraph & h);

KHypergraph complete_graph(int n);
KHypergraph complete_khypergraph(int k, int n);
KHypergraph cycle_graph(int n);
KHypergraph path_graph(int n); // n vertices, n-1 edges
KHypergraph single_edge(int k);
KHypergraph empty_graph(int n);

} // namespace rcl
