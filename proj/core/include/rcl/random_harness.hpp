#pragma once

#include <rcl/freeness.hpp>
#include <rcl/hypergraph.hpp>
#include <rcl/linear_system.hpp>
#include <rcl/ramsey.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rcl {

enum class RandomModel { GnpK, NpSet };

struct RandomModelConfig
{
    RandomModel model = RandomModel::NpSet;
    int n = 0;
    int k = 2;              // edge size for GnpK
    Rat p = 0;              // inclusion probability, exact rational in [0,1]
    std::uint64_t seed = 0;
    long trials = 0;
};

// p = C * n^(-1/m) resolved to an exact rational (64-bit dyadic root), then
// clipped into [0,1]
Rat threshold_p(const Rat & c, const Rat & m, int n);

// counter-based per-trial stream: (seed, trial) -> independent decisions
std::vector<long> sample_np_set(const RandomModelConfig & config, long trial_index);
KHypergraph sample_gnp_k(const RandomModelConfig & config, long trial_index);

struct RamseyProperty
{
    std::vector<KHypergraph> patterns;
};

struct RadoProperty
{
    std::vector<LinearSystem> systems;
    SolutionMode mode = SolutionMode::KDistinct;
};

using HarnessProperty = std::variant<RamseyProperty, RadoProperty>;

struct TrialRecord
{
    long trial = 0;
    long sample_size = 0;     // edge count (graphs) or element count (sets)
    Verdict property_holds = Verdict::Unknown;
    long res_lower = -1;      // resilience bracket when computed, -1 otherwise
    long res_upper = -1;
    bool res_exact = false;
    double wall_ms = 0.0;
};

struct McEstimate
{
    long true_count = 0;
    long false_count = 0;
    long unknown_count = 0;
    double estimate = 0.0; // true / (true + false)
    double ci_low = 0.0;   // Wilson 95%
    double ci_high = 0.0;
    std::vector<TrialRecord> records;
};

McEstimate mc_probability(const RandomModelConfig & config, const HarnessProperty & property,
                          long node_budget = 20'000'000, int workers = 1);

struct ResilienceMcReport
{
    std::vector<TrialRecord> records;
    long exact_trials = 0;
    long bracket_trials = 0;
    long empty_samples = 0;
    Rat mean_ratio = 0;           // mean res/|sample| over exact nonempty trials
    Rat predicted_center = 0;     // 1 - mu(n)/n (rado) or 1 - ex^r(n)/binom(n,k) proxy (ramsey)
    bool predicted_available = false;
};

// center_budget caps the exact mu / ex^r reference computation; when it is
// out of reach the report flags the centre as unavailable instead of
// stalling the harness
ResilienceMcReport resilience_mc(const RandomModelConfig & config, const HarnessProperty & property,
                                 long node_budget = 50'000'000, int workers = 1,
                                 bool compute_center = true, long center_budget = 10'000'000);

struct ScanPoint
{
    Rat p;
    McEstimate estimate;
};

struct ScanReport
{
    std::vector<ScanPoint> points;
    std::optional<double> crossing_p;  // linear interpolation at estimate 0.5
    std::optional<double> crossing_C;  // crossing_p * n^(1/m)
    Rat density_m = 0;                 // exponent source m
};

ScanReport threshold_scan(const RandomModelConfig & config, const HarnessProperty & property,
                          const std::vector<Rat> & p_grid, const Rat & density_m,
                          long node_budget = 20'000'000, int workers = 1);

double chernoff_bound(double expectation, double lambda);
double chernoff_two_sided(double expectation, double eps);

} // namespace rcl
