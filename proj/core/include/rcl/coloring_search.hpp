#pragma once

#include <rcl/bitset.hpp>
#include <rcl/rational.hpp>

#include <vector>

namespace rcl {

// Shared search core for the exact oracles. A problem is a set of items and,
// per colour, a family of item masks that must not become monochromatic in
// that colour. Ramsey checks instantiate items = edges and masks = pattern
// copies; Rado checks instantiate items = integers and masks = solution
// sets.
struct ColoringProblem
{
    int items = 0;
    int colours = 1;
    std::vector<std::vector<Bits>> families;     // [colour-1] -> masks
    std::vector<std::uint32_t> initial_domains;  // optional; bit c-1 = colour c allowed
    std::vector<int> branch_order;               // optional static order; empty = dynamic
};

enum class SearchStatus { Complete, BudgetExhausted };

// Three-valued oracle verdict. Budget exhaustion surfaces as Unknown, never
// as a silent boolean.
enum class Verdict { Yes, No, Unknown };

struct DecideResult
{
    SearchStatus status = SearchStatus::Complete;
    bool satisfiable = false;
    std::vector<int> colouring; // item -> colour, only when satisfiable
    long nodes = 0;
};

// Exists a total colouring avoiding every mask? First witness returned.
DecideResult decide_colouring(const ColoringProblem & prob, long node_budget);

struct MaxInResult
{
    SearchStatus status = SearchStatus::Complete;
    int best = 0;  // largest number of coloured items found
    int upper = 0; // proven upper bound (== best when Complete)
    std::vector<int> assignment; // item -> colour in 1..r, or 0 = left out
    long nodes = 0;
};

// Items may also be left out; maximise the number of coloured items subject
// to avoiding every mask.
MaxInResult max_in_colouring(const ColoringProblem & prob, long node_budget);

struct CountResult
{
    SearchStatus status = SearchStatus::Complete;
    bool found = false;
    std::vector<long> violations; // per colour, for the reported colouring
    long total = 0;
    std::vector<int> colouring;
    long nodes = 0;
};

// Exists a total colouring with at most caps[i] monochromatic masks per
// colour? (Counts every violated mask.)
CountResult decide_with_caps(const ColoringProblem & prob, const std::vector<long> & caps, long node_budget);

// Minimum total number of monochromatic masks over all total colourings.
CountResult min_total_violations(const ColoringProblem & prob, long node_budget);

// Minimise max_i weights[i] * violations_i over all total colourings.
struct MinMaxResult
{
    SearchStatus status = SearchStatus::Complete;
    Rat value;
    std::vector<long> violations;
    std::vector<int> colouring;
    long nodes = 0;
};

MinMaxResult min_max_normalised(const ColoringProblem & prob, const std::vector<Rat> & weights, long node_budget);

} // namespace rcl
