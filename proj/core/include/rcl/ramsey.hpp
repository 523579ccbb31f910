#pragma once

#include <rcl/coloring_search.hpp>
#include <rcl/copies.hpp>
#include <rcl/hypergraph.hpp>

#include <optional>
#include <vector>

namespace rcl {

struct ColoringAssignment
{
    KHypergraph target;
    std::vector<int> colours; // parallel to target.edges, values in 1..r
};

struct RamseyVerdict
{
    Verdict is_ramsey = Verdict::Unknown;
    std::optional<ColoringAssignment> free_colouring; // when No
    long nodes = 0;
};

// Every r-colouring of g yields a colour-i copy of patterns[i] for some i?
// Exact via propagating backtracking over edge colourings; Unknown only on
// budget exhaustion.
RamseyVerdict is_ramsey(const KHypergraph & g, const std::vector<KHypergraph> & patterns,
                        long node_budget = 50'000'000);

// family version: a colour-i copy of any member of families[i] counts
RamseyVerdict is_ramsey_families(const KHypergraph & g,
                                 const std::vector<std::vector<KHypergraph>> & families,
                                 long node_budget = 50'000'000);

struct EpsWeakResult
{
    Verdict weakly_ramsey = Verdict::Unknown; // Yes = eps-weakly, No = eps-strongly
    Rat best_value;                           // min over colourings of max_i copies_i / binom(n, v_i)
    std::vector<long> copies_per_colour;
    std::optional<ColoringAssignment> best_colouring;
    long nodes = 0;
};

EpsWeakResult eps_weak_ramsey(const KHypergraph & g, const std::vector<KHypergraph> & patterns,
                              const Rat & eps, long node_budget = 50'000'000);

// minimum over r-colourings of the total number of monochromatic copies
struct MinMonoResult
{
    Verdict exact = Verdict::Unknown;
    long minimum = 0;
    std::optional<ColoringAssignment> colouring;
    long nodes = 0;
};

MinMonoResult min_mono_copies(const KHypergraph & g, const std::vector<KHypergraph> & patterns,
                              long node_budget = 50'000'000);

struct ExtremalRecord
{
    int n = 0;
    int k = 2;
    long ex_value = 0;
    KHypergraph extremal_graph;
    ColoringAssignment free_colouring;
    long nodes = 0;
};

// maximum size of an n-vertex k-graph that is not (patterns)-Ramsey, by
// branch-and-bound over tuples of edge-disjoint pattern-free graphs
ExtremalRecord ex_r(int n, const std::vector<KHypergraph> & patterns, long node_budget = 400'000'000);

KHypergraph turan_graph(int s, int n);
long turan_number(int s, int n); // t_s(n)

struct RamseyNumberResult
{
    Verdict exact = Verdict::Unknown;
    int value = 0;       // the Ramsey number when exact == Yes
    int lower_bound = 0; // best proven lower bound otherwise
    long nodes = 0;
};

RamseyNumberResult ramsey_number(const std::vector<int> & clique_sizes, long node_budget = 200'000'000);

// all homomorphic images of h (quotients by partitions into independent
// sets) with at most v_max vertices, deduplicated up to isomorphism
std::vector<KHypergraph> hom_images(const KHypergraph & h, int v_max);

struct ChromaticRamseyProbe
{
    int lower = 1;
    std::optional<int> upper; // empty on budget exhaustion
    bool hom_complete = false;
    std::vector<std::size_t> family_sizes;
    std::optional<ColoringAssignment> lower_certificate; // free colouring of K_{upper-1}
    long nodes = 0;
};

ChromaticRamseyProbe chromatic_ramsey_probe(const std::vector<KHypergraph> & patterns, int v_max = 8,
                                            long node_budget = 200'000'000);

struct ResilienceResult
{
    Verdict exact = Verdict::Unknown;
    long lower = 0; // res is in [lower, upper]
    long upper = 0;
    std::optional<KHypergraph> survivor; // max non-Ramsey subgraph found
    std::optional<ColoringAssignment> survivor_colouring;
    long nodes = 0;
};

ResilienceResult resilience_exact(const KHypergraph & g, const std::vector<KHypergraph> & patterns,
                                  long node_budget = 400'000'000);

std::vector<Rat> pi_sequence(const std::vector<KHypergraph> & patterns, int n_lo, int n_hi,
                             long node_budget = 400'000'000);

Rat de_caen_bound(int s, int k); // 1 - 1/binom(s-1, k-1)

} // namespace rcl
