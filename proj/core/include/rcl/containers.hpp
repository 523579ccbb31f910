#pragma once

#include <rcl/bitset.hpp>
#include <rcl/copies.hpp>
#include <rcl/freeness.hpp>
#include <rcl/hypergraph.hpp>
#include <rcl/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rcl {

struct ContainerParams
{
    Rat density_ceiling = frac(1, 2); // containers must induce < ceiling * e(base) edges
    int fingerprint_budget = 1 << 20;
    int refine_depth = 0;            // extra take-steps allowed past the budget while dense
    Rat p = 0;                       // recorded for reporting only
    Rat eps = 0;
    long product_budget = 2'000'000; // max materialised fingerprint tuples for r >= 2
};

// Container family for one hypergraph: for every independent set I the
// deterministic degree-greedy walk yields a fingerprint g(I) with
// g(I) subseteq I subseteq container(g(I)), and container(S) is a function
// of S alone (the walk replayed from S makes identical decisions).
struct SingleFamily
{
    KHypergraph base;
    ContainerParams params;
    std::vector<Bits> fingerprints; // sorted
    std::vector<Bits> containers;   // parallel; container includes its fingerprint
    std::vector<char> flags;        // 0 ok, 1 fingerprint over budget, 2 over-dense
    bool certified = false;
    std::optional<Bits> violating_independent_set;

    int index_of(const Bits & fingerprint) const; // -1 when absent
};

SingleFamily build_single(const KHypergraph & base, const ContainerParams & params);

// run the walk on an independent set; returns (fingerprint, container)
std::pair<Bits, Bits> assign_single(const SingleFamily & family, const Bits & independent_set);

struct ContainerFamily
{
    int r = 1;
    ContainerParams params;
    std::vector<SingleFamily> coords;
    bool certified = false;
    bool materialised = false;
    std::vector<std::vector<int>> tuples; // r fingerprint indices each, disjoint coordinates
};

// product construction with the disjointness filter; all bases must share
// one vertex count
ContainerFamily lift_tuple(const std::vector<KHypergraph> & bases, const ContainerParams & params);

std::vector<std::pair<Bits, Bits>> assign_tuple(const ContainerFamily & family,
                                                const std::vector<Bits> & independent_tuple);

std::string family_to_json(const ContainerFamily & family);
ContainerFamily family_from_json(const std::string & text);

// all independent vertex sets of h (including the empty set)
std::vector<Bits> enumerate_independent_sets(const KHypergraph & h);

struct ClauseCheck
{
    std::string name;
    bool holds = false;
    std::string detail;
};

struct VerifyReport
{
    bool all_hold = false;
    std::vector<ClauseCheck> clauses;
    long independent_sets_checked = 0;
    long tuples_counted = 0;
    double fitted_D = 0.0;
    long max_fingerprint_sum = 0;
    long max_union_size = 0;
    long mu_or_ex_value = 0; // exact mu (rado) or ex^r (ramsey)
};

// Check the matrix-container conclusions against a built family at desk
// scale: full capture, fingerprint independence, per-container solution
// counts <= delta n^{k_i - ell_i}, and union size <= mu + delta n.
VerifyReport verify_matcontainer(const std::vector<LinearSystem> & systems, int n, const Rat & delta,
                                 const ContainerFamily & family, SolutionMode mode = SolutionMode::KDistinct);

// Graph-side analogue: capture of all tuples of edge-disjoint pattern-free
// graphs, per-container copy counts < delta binom(n, v_i) (the canonical
// colouring certifies delta-weak Ramsey), and union edge count
// <= ex^r + delta binom(n, k).
VerifyReport verify_ramseycont(const std::vector<KHypergraph> & patterns, int n, const Rat & delta,
                               const ContainerFamily & family);

} // namespace rcl
