#pragma once

#include <rcl/coloring_search.hpp>
#include <rcl/hypergraph.hpp>
#include <rcl/linear_system.hpp>

#include <optional>
#include <vector>

namespace rcl {

// Deduplicated value sets of solutions to Ax = 0 inside S. KDistinct yields
// sets of size exactly k; Strong also yields the smaller sets coming from
// repeated coordinates.
std::vector<std::vector<long>> solution_value_sets(const LinearSystem & a, const std::vector<long> & s,
                                                   SolutionMode mode);

// k-uniform hypergraph on [n] whose edges are the k-distinct solution sets
// (the container-method hypergraph for L(A))
KHypergraph solution_khypergraph(const LinearSystem & a, int n);

struct FreenessCertificate
{
    std::vector<long> elements;
    int r = 1;
    SolutionMode mode = SolutionMode::KDistinct;
    std::vector<int> colouring; // parallel to elements, 1..r
};

struct FreenessResult
{
    Verdict free = Verdict::Unknown;
    std::optional<FreenessCertificate> certificate;
    long nodes = 0;
};

FreenessResult is_free(const std::vector<long> & s, const std::vector<LinearSystem> & systems,
                       SolutionMode mode, long node_budget = 100'000'000);

struct MuResult
{
    Verdict exact = Verdict::Unknown;
    long lower = 0; // mu lies in [lower, upper]
    long upper = 0;
    std::optional<FreenessCertificate> certificate;
    long nodes = 0;
};

// largest (L_1,...,L_r)-free subset of S (elements keep their colour witness)
MuResult mu_of_set(const std::vector<long> & s, const std::vector<LinearSystem> & systems,
                   SolutionMode mode, long node_budget = 400'000'000);

MuResult mu(int n, const std::vector<LinearSystem> & systems, SolutionMode mode,
            long node_budget = 400'000'000);

LinearSystem schur_system(); // (1 1 -1)

// largest m admitting a partition of [m] into r sum-free sets
long schur_f(int r, long node_budget = 400'000'000);
// modular variant: classes sum-free modulo m+1
long schur_h(int r, long node_budget = 400'000'000);

Int ell_sequence(int i);          // floor(i! e) via ell(i) = i*ell(i-1) + 1
long mu_upper_bound(long n, int r);  // n - floor(n / ell(r))

struct AbbottWangReport
{
    long lower = 0;        // n - floor(n / (h(r)+1))
    long recurrence_upper = 0;  // n - floor(n / ell(r))
    long aw_upper = 0;     // n - floor(c n / ((f(r)+1) log(f(r)+1))), c = 5615/10000
    long min_upper = 0;
    long f_r = 0;
    long h_r = 0;
};

AbbottWangReport abbott_wang_bounds(long n, int r, long node_budget = 400'000'000);

// exists x in S with x + T inside S
bool difference_set_check(const std::vector<long> & s, const std::vector<long> & t);

bool is_sum_free(const std::vector<long> & s, bool strong);

} // namespace rcl
