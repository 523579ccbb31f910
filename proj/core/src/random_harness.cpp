#include <rcl/errors.hpp>
#include <rcl/random_harness.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

namespace rcl {

namespace {

std::uint64_t splitmix64(std::uint64_t & state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, long trial)
{
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
    return splitmix64(s);
}

// exact comparison u < p * 2^64 over rationals
bool bernoulli(const Rat & p, std::uint64_t u)
{
    Int lhs = Int(u) * p.get_den();
    Int rhs;
    mpz_mul_2exp(rhs.get_mpz_t(), p.get_num().get_mpz_t(), 64);
    return lhs < rhs;
}

} // namespace

Rat threshold_p(const Rat & c, const Rat & m, int n)
{
    if (m <= 0)
        throw std::invalid_argument("threshold_p: density exponent must be positive");
    // n^(1/m) = n^(den/num) scaled by 2^64
    unsigned long num = m.get_num().get_ui();
    unsigned long den = m.get_den().get_ui();
    Int root = floor_pow_scaled(static_cast<unsigned long>(n), den, num, 64);
    Rat scale;
    {
        Int one_shifted;
        mpz_ui_pow_ui(one_shifted.get_mpz_t(), 2, 64);
        scale = frac(one_shifted, root); // ~ n^(-1/m)
    }
    Rat p = c * scale;
    if (p < 0)
        p = 0;
    if (p > 1)
        p = 1;
    return p;
}

std::vector<long> sample_np_set(const RandomModelConfig & config, long trial_index)
{
    std::uint64_t s = stream_seed(config.seed, trial_index);
    std::vector<long> out;
    for (long v = 1; v <= config.n; ++v)
        if (bernoulli(config.p, splitmix64(s)))
            out.push_back(v);
    return out;
}

KHypergraph sample_gnp_k(const RandomModelConfig & config, long trial_index)
{
    std::uint64_t s = stream_seed(config.seed, trial_index);
    auto slots = complete_khypergraph(config.k, config.n);
    std::vector<std::vector<int>> edges;
    for (const auto & e : slots.edges)
        if (bernoulli(config.p, splitmix64(s)))
            edges.push_back(e);
    return KHypergraph::make(config.k, config.n, std::move(edges));
}

namespace {

// Ramsey verdict with a dense-core shortcut: if the peeled 8-vertex core is
// already Ramsey, so is the sample (free colourings restrict to subgraphs).
Verdict ramsey_verdict(const KHypergraph & g, const RamseyProperty & prop, long node_budget)
{
    if (g.k == 2 && g.n > 8) {
        std::vector<char> alive(g.n + 1, 1);
        std::vector<int> deg(g.n + 1, 0);
        for (const auto & e : g.edges)
            for (int v : e)
                ++deg[v];
        int left = g.n;
        while (left > 8) {
            int pick = -1;
            for (int v = 1; v <= g.n; ++v)
                if (alive[v] && (pick < 0 || deg[v] < deg[pick]))
                    pick = v;
            alive[pick] = 0;
            --left;
            for (const auto & e : g.edges)
                if (e[0] == pick || e[1] == pick) {
                    --deg[e[0]];
                    --deg[e[1]];
                }
        }
        std::vector<int> core;
        for (int v = 1; v <= g.n; ++v)
            if (alive[v])
                core.push_back(v);
        auto sub = induced_subhypergraph(g, core);
        auto quick = is_ramsey(sub, prop.patterns, node_budget / 4);
        if (quick.is_ramsey == Verdict::Yes)
            return Verdict::Yes;
    }
    return is_ramsey(g, prop.patterns, node_budget).is_ramsey;
}

struct TrialOutcome
{
    TrialRecord record;
};

template <typename F>
std::vector<TrialRecord> run_trials(long trials, int workers, F && one_trial)
{
    std::vector<TrialRecord> records(trials);
    if (workers <= 1) {
        for (long t = 0; t < trials; ++t)
            records[t] = one_trial(t);
        return records;
    }
    std::atomic<long> next{0};
    auto body = [&]() {
        for (;;) {
            long t = next.fetch_add(1);
            if (t >= trials)
                return;
            records[t] = one_trial(t);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back(body);
    for (auto & th : pool)
        th.join();
    return records;
}

void wilson_interval(long successes, long total, double & lo, double & hi)
{
    if (total == 0) {
        lo = 0;
        hi = 1;
        return;
    }
    const double z = 1.959963984540054; // 95%
    double phat = static_cast<double>(successes) / static_cast<double>(total);
    double nn = static_cast<double>(total);
    double denom = 1 + z * z / nn;
    double center = phat + z * z / (2 * nn);
    double margin = z * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn));
    lo = std::max(0.0, (center - margin) / denom);
    hi = std::min(1.0, (center + margin) / denom);
}

} // namespace

namespace {

void check_model_matches(const RandomModelConfig & config, const HarnessProperty & property)
{
    bool ramsey = std::holds_alternative<RamseyProperty>(property);
    if (ramsey && config.model != RandomModel::GnpK)
        throw std::invalid_argument("Ramsey properties sample the gnp_k model");
    if (! ramsey && config.model != RandomModel::NpSet)
        throw std::invalid_argument("Rado properties sample the np_set model");
}

} // namespace

McEstimate mc_probability(const RandomModelConfig & config, const HarnessProperty & property,
                          long node_budget, int workers)
{
    if (config.trials < 1)
        throw std::invalid_argument("mc_probability: trials must be positive");
    check_model_matches(config, property);
    auto one = [&](long t) {
        TrialRecord rec;
        rec.trial = t;
        auto start = std::chrono::steady_clock::now();
        if (std::holds_alternative<RamseyProperty>(property)) {
            auto g = sample_gnp_k(config, t);
            rec.sample_size = g.edge_count();
            rec.property_holds = ramsey_verdict(g, std::get<RamseyProperty>(property), node_budget);
        }
        else {
            const auto & prop = std::get<RadoProperty>(property);
            auto s = sample_np_set(config, t);
            rec.sample_size = static_cast<long>(s.size());
            auto free = is_free(s, prop.systems, prop.mode, node_budget);
            // the property is "sample is Rado", the negation of freeness
            if (free.free == Verdict::Yes)
                rec.property_holds = Verdict::No;
            else if (free.free == Verdict::No)
                rec.property_holds = Verdict::Yes;
            else
                rec.property_holds = Verdict::Unknown;
        }
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return rec;
    };
    McEstimate out;
    out.records = run_trials(config.trials, workers, one);
    for (const auto & r : out.records) {
        if (r.property_holds == Verdict::Yes)
            ++out.true_count;
        else if (r.property_holds == Verdict::No)
            ++out.false_count;
        else
            ++out.unknown_count;
    }
    long decided = out.true_count + out.false_count;
    if (decided == 0)
        throw BudgetExceeded("mc_probability: every trial returned UNKNOWN");
    out.estimate = static_cast<double>(out.true_count) / static_cast<double>(decided);
    wilson_interval(out.true_count, decided, out.ci_low, out.ci_high);
    return out;
}

ResilienceMcReport resilience_mc(const RandomModelConfig & config, const HarnessProperty & property,
                                 long node_budget, int workers, bool compute_center, long center_budget)
{
    if (config.trials < 1)
        throw std::invalid_argument("resilience_mc: trials must be positive");
    check_model_matches(config, property);
    auto one = [&](long t) {
        TrialRecord rec;
        rec.trial = t;
        auto start = std::chrono::steady_clock::now();
        if (std::holds_alternative<RamseyProperty>(property)) {
            const auto & prop = std::get<RamseyProperty>(property);
            auto g = sample_gnp_k(config, t);
            rec.sample_size = g.edge_count();
            auto res = resilience_exact(g, prop.patterns, node_budget);
            rec.res_lower = res.lower;
            rec.res_upper = res.upper;
            rec.res_exact = (res.exact == Verdict::Yes);
            if (res.lower >= 1)
                rec.property_holds = Verdict::Yes;
            else if (res.upper == 0)
                rec.property_holds = Verdict::No;
            else
                rec.property_holds = Verdict::Unknown;
        }
        else {
            const auto & prop = std::get<RadoProperty>(property);
            auto s = sample_np_set(config, t);
            rec.sample_size = static_cast<long>(s.size());
            auto m = mu_of_set(s, prop.systems, prop.mode, node_budget);
            rec.res_lower = rec.sample_size - m.upper;
            rec.res_upper = rec.sample_size - m.lower;
            rec.res_exact = (m.exact == Verdict::Yes);
            if (rec.res_lower >= 1)
                rec.property_holds = Verdict::Yes;
            else if (rec.res_upper == 0)
                rec.property_holds = Verdict::No;
            else
                rec.property_holds = Verdict::Unknown;
        }
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return rec;
    };
    ResilienceMcReport out;
    out.records = run_trials(config.trials, workers, one);
    Rat sum = 0;
    long counted = 0;
    for (const auto & r : out.records) {
        if (r.sample_size == 0) {
            ++out.empty_samples;
            continue;
        }
        if (r.res_exact) {
            ++out.exact_trials;
            sum += frac(r.res_lower, r.sample_size);
            ++counted;
        }
        else
            ++out.bracket_trials;
    }
    if (counted > 0)
        out.mean_ratio = sum / counted;
    if (compute_center) {
        if (std::holds_alternative<RadoProperty>(property)) {
            const auto & prop = std::get<RadoProperty>(property);
            auto m = mu(config.n, prop.systems, prop.mode, center_budget);
            if (m.exact == Verdict::Yes) {
                out.predicted_center = Rat(1) - frac(m.lower, config.n);
                out.predicted_available = true;
            }
        }
        else {
            const auto & prop = std::get<RamseyProperty>(property);
            try {
                auto ex = ex_r(config.n, prop.patterns, center_budget);
                out.predicted_center = Rat(1) - Rat(ex.ex_value) / Rat(binomial(config.n, config.k));
                out.predicted_available = true;
            }
            catch (const BudgetExceeded &) {
                out.predicted_available = false;
            }
        }
    }
    return out;
}

ScanReport threshold_scan(const RandomModelConfig & config, const HarnessProperty & property,
                          const std::vector<Rat> & p_grid, const Rat & density_m,
                          long node_budget, int workers)
{
    ScanReport out;
    out.density_m = density_m;
    for (const auto & p : p_grid) {
        RandomModelConfig point = config;
        point.p = p;
        ScanPoint sp;
        sp.p = p;
        sp.estimate = mc_probability(point, property, node_budget, workers);
        out.points.push_back(std::move(sp));
    }
    // first 0.5 crossing by linear interpolation
    for (std::size_t i = 1; i < out.points.size(); ++i) {
        double a = out.points[i - 1].estimate.estimate;
        double b = out.points[i].estimate.estimate;
        if (a < 0.5 && b >= 0.5) {
            double pa = rat_to_double(out.points[i - 1].p);
            double pb = rat_to_double(out.points[i].p);
            double frac = (0.5 - a) / (b - a);
            out.crossing_p = pa + frac * (pb - pa);
            break;
        }
    }
    if (out.crossing_p) {
        double m = rat_to_double(density_m);
        out.crossing_C = *out.crossing_p * std::pow(static_cast<double>(config.n), 1.0 / m);
    }
    return out;
}

double chernoff_bound(double expectation, double lambda)
{
    if (lambda < 0)
        throw std::invalid_argument("chernoff_bound: lambda must be >= 0");
    if (expectation < 0)
        throw std::invalid_argument("chernoff_bound: expectation must be >= 0");
    if (expectation == 0 && lambda == 0)
        return 1.0;
    return std::exp(-(lambda * lambda) / (2 * (expectation + lambda / 3)));
}

double chernoff_two_sided(double expectation, double eps)
{
    if (eps <= 0 || eps > 1.5)
        throw std::invalid_argument("chernoff_two_sided: eps must lie in (0, 3/2]");
    if (expectation < 0)
        throw std::invalid_argument("chernoff_two_sided: expectation must be >= 0");
    return 2 * std::exp(-(eps * eps / 3) * expectation);
}

} // namespace rcl
