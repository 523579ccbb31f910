#pragma once

#include <rcl/hypergraph.hpp>
#include <rcl/rational.hpp>

#include <vector>

namespace rcl {

struct DensityReport
{
    Rat d_k;
    Rat m_k;
    std::vector<int> witness; // vertex subset realising m_k
};

struct AsymmetricDensity
{
    Rat value;
    std::vector<int> maximizer;     // vertex set of the maximizing H1'
    bool strictly_balanced = false; // H1' = H1 is the unique maximizer
};

// Three-case density: 0 when edgeless, 1/k for exactly one edge on k
// vertices, (e-1)/(v-k) otherwise. With strip_isolated_vertices the span of
// non-isolated vertices replaces the stored vertex count.
Rat d_k(const KHypergraph & h, bool strip_isolated_vertices = false);

// max of d_k over vertex subsets with all induced edges (equivalent to the
// max over all subgraphs; more edges on a fixed vertex set never lower d_k)
DensityReport m_k(const KHypergraph & h);

// max over subgraphs H1' with e(H1') >= 1 of e(H1') / (v(H1') - k + 1/m_k(H2)).
// Requires m_k(h1) >= m_k(h2) and both nonempty.
AsymmetricDensity asymmetric_m_k(const KHypergraph & h1, const KHypergraph & h2);

int chromatic_number(const KHypergraph & g); // k = 2 only, exact

// max co-degree over ell-subsets lying in at least one edge; 0 if none
long delta_ell(const KHypergraph & h, int ell);

} // namespace rcl
