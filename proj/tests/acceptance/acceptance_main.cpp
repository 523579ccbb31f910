// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <rcl/containers.hpp>
#include <rcl/copies.hpp>
#include <rcl/densities.hpp>
#include <rcl/driver.hpp>
#include <rcl/freeness.hpp>
#include <rcl/random_harness.hpp>
#include <rcl/ramsey.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

using namespace rcl;

namespace {

struct Gate
{
    int failures = 0;
    int index = 0;

    void criterion(const std::string & name, const std::function<bool(std::string &)> & body)
    {
        ++index;
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        }
        catch (const std::exception & e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": " << name;
        if (! detail.empty())
            line << " (" << detail << ")";
        line.setf(std::ios::fixed);
        line.precision(1);
        line << " [" << secs << "s]";
        std::cout << line.str() << std::endl;
        if (! ok)
            ++failures;
    }
};

struct TestRng
{
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
    bool coin(double p) { return (next() >> 11) * 0x1.0p-53 < p; }
};

KHypergraph random_graph(TestRng & rng, int n, double p)
{
    std::vector<std::vector<int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.coin(p))
                edges.push_back({u, v});
    return KHypergraph::make(2, n, std::move(edges));
}

} // namespace

int main()
{
    Gate gate;
    auto k3 = complete_graph(3);
    auto schur = schur_system();

    gate.criterion("exact densities and the asymmetric sandwich", [&](std::string & detail) {
        if (m_k(complete_graph(3)).m_k != Rat(2))
            return false;
        if (m_k(complete_graph(4)).m_k != frac(5, 2))
            return false;
        if (m_k(cycle_graph(4)).m_k != frac(3, 2))
            return false;
        if (d_k(single_edge(2)) != frac(1, 2))
            return false;
        if (asymmetric_m_k(k3, k3).value != Rat(2))
            return false;
        TestRng rng(1001);
        int pairs = 0, violations = 0;
        while (pairs < 200) {
            auto h1 = random_graph(rng, 3 + static_cast<int>(rng.below(4)), 0.55);
            auto h2 = random_graph(rng, 3 + static_cast<int>(rng.below(4)), 0.55);
            if (h1.edge_count() == 0 || h2.edge_count() == 0)
                continue;
            if (m_k(h1).m_k < m_k(h2).m_k)
                std::swap(h1, h2);
            Rat m1 = m_k(h1).m_k, m2 = m_k(h2).m_k;
            Rat mid = asymmetric_m_k(h1, h2).value;
            if (! (m1 >= mid && mid >= m2))
                ++violations;
            if ((mid == m1) != (m1 == m2))
                ++violations;
            ++pairs;
        }
        detail = "200 sandwich pairs, " + std::to_string(violations) + " violations";
        return violations == 0;
    });

    gate.criterion("matrix side: m(A), (*) vs columns property, five-fact corpus", [&](std::string & detail) {
        if (m_A(schur).value != Rat(2))
            return false;
        auto aw = LinearSystem::make(1, 3, {{2, 2, -1}});
        if (! satisfies_star(aw) || columns_property(aw).has_property)
            return false;
        if (! satisfies_star(schur) || ! columns_property(schur).has_property)
            return false;
        TestRng rng(2002);
        int corpus = 0, violations = 0;
        while (corpus < 50) {
            int rows = 1 + static_cast<int>(rng.below(2));
            int cols = rows + 2 + static_cast<int>(rng.below(8 - rows - 1));
            std::vector<std::vector<long>> entries(rows, std::vector<long>(cols));
            for (auto & row : entries)
                for (auto & x : row)
                    x = rng.below(7) - 3;
            LinearSystem a = LinearSystem::make(rows, cols, entries);
            if (rank_and_echelon(a).rank != rows)
                continue;
            if (! satisfies_star(a))
                continue;
            if (is_irredundant(a, 12, 300'000).verdict != TriState::True)
                continue;
            ++corpus;
            auto rep = matrix_fact_checks(a, true);
            if (! rep.all_hold)
                ++violations;
        }
        // Rado's implication on an unfiltered corpus: irredundant partition
        // regular matrices satisfy (*)
        TestRng rng2(2003);
        int scanned = 0, implication_violations = 0;
        while (scanned < 120) {
            int rows = 1 + static_cast<int>(rng2.below(2));
            int cols = rows + 1 + static_cast<int>(rng2.below(6 - rows));
            std::vector<std::vector<long>> entries(rows, std::vector<long>(cols));
            for (auto & row : entries)
                for (auto & x : row)
                    x = rng2.below(7) - 3;
            LinearSystem a = LinearSystem::make(rows, cols, entries);
            if (rank_and_echelon(a).rank != rows)
                continue;
            if (is_irredundant(a, 10, 300'000).verdict != TriState::True)
                continue;
            ++scanned;
            if (columns_property(a).has_property && ! satisfies_star(a))
                ++implication_violations;
        }
        detail = "50 irredundant (*) matrices, " + std::to_string(violations) +
                 " clause violations; implication violations " + std::to_string(implication_violations);
        return violations == 0 && implication_violations == 0;
    });

    gate.criterion("solution counts never exceed the rank bounds (500 instances)", [&](std::string & detail) {
        TestRng rng(3003);
        int done = 0, violations = 0;
        while (done < 500) {
            int rows = 1 + static_cast<int>(rng.below(2));
            int cols = rows + 1 + static_cast<int>(rng.below(4 - rows));
            std::vector<std::vector<long>> entries(rows, std::vector<long>(cols));
            for (auto & row : entries)
                for (auto & x : row)
                    x = rng.below(7) - 3;
            auto a = LinearSystem::make(rows, cols, entries);
            std::vector<long> s;
            for (long v = 1; v <= 10; ++v)
                if (rng.coin(0.6))
                    s.push_back(v);
            if (s.empty())
                continue;
            auto sols = enumerate_solutions(a, s, SolutionMode::Strong);
            if (Int(sols.size()) > lemma_solution_bound(a, s.size()))
                ++violations;
            int t = 1 + static_cast<int>(rng.below(std::min(2L, static_cast<long>(cols))));
            std::vector<int> positions;
            std::map<int, long> fixed;
            while (static_cast<int>(positions.size()) < t) {
                int pos = 1 + static_cast<int>(rng.below(cols));
                if (! fixed.count(pos)) {
                    positions.push_back(pos);
                    fixed[pos] = s[rng.below(static_cast<long>(s.size()))];
                }
            }
            auto pinned = enumerate_solutions(a, s, SolutionMode::Strong, fixed);
            if (Int(pinned.size()) > corollary_solution_bound(a, positions, s.size()))
                ++violations;
            ++done;
        }
        detail = "500 instances, " + std::to_string(violations) + " bound violations";
        return violations == 0;
    });

    gate.criterion("mu golden values and the recurrence upper bound", [&](std::string & detail) {
        for (int n = 1; n <= 20; ++n) {
            auto m = mu(n, {schur}, SolutionMode::Strong);
            if (m.exact != Verdict::Yes || m.lower != (n + 1) / 2)
                return false;
        }
        for (int n = 5; n <= 15; ++n) {
            auto m = mu(n, {schur, schur}, SolutionMode::Strong);
            if (m.exact != Verdict::Yes || m.lower != n - n / 5) {
                detail = "mu(" + std::to_string(n) + ", 2) mismatch";
                return false;
            }
            if (m.lower > mu_upper_bound(n, 2))
                return false;
        }
        for (int n = 1; n <= 20; ++n)
            if (mu(n, {schur}, SolutionMode::Strong).lower > mu_upper_bound(n, 1))
                return false;
        std::vector<long> expect{1, 2, 5, 16, 65, 326, 1957};
        for (int i = 0; i <= 6; ++i)
            if (ell_sequence(i) != expect[i])
                return false;
        detail = "mu(n,1)=ceil(n/2) to n=20; mu(n,2)=n-floor(n/5) to n=15; ell(0..6) exact";
        return true;
    });

    gate.criterion("Schur numbers by exhaustive search", [&](std::string & detail) {
        if (schur_f(1) != 1 || schur_f(2) != 4 || schur_f(3) != 13 || schur_h(2) != 4)
            return false;
        for (int n = 1; n <= 15; ++n) {
            long lower = n - n / (schur_h(2) + 1);
            auto m = mu(n, {schur, schur}, SolutionMode::Strong);
            if (lower != m.lower) {
                detail = "Abbott-Wang lower != Hu exact at n=" + std::to_string(n);
                return false;
            }
        }
        detail = "f(1)=1 f(2)=4 f(3)=13 h(2)=4; lower bound tight to n=15";
        return true;
    });

    gate.criterion("Ramsey golden values", [&](std::string & detail) {
        if (is_ramsey(complete_graph(5), {k3, k3}).is_ramsey != Verdict::No)
            return false;
        if (is_ramsey(complete_graph(6), {k3, k3}).is_ramsey != Verdict::Yes)
            return false;
        auto r33 = ramsey_number({3, 3});
        if (r33.exact != Verdict::Yes || r33.value != 6)
            return false;
        if (ex_r(6, {k3, k3}).ex_value != 14 || turan_number(5, 6) != 14)
            return false;
        for (int n = 3; n <= 7; ++n)
            if (ex_r(n, {k3}).ex_value != (n * n) / 4)
                return false;
        auto res = resilience_exact(complete_graph(6), {k3, k3});
        if (res.exact != Verdict::Yes || res.lower != 1)
            return false;
        auto goodman = min_mono_copies(complete_graph(6), {k3, k3});
        if (goodman.exact != Verdict::Yes || goodman.minimum != 2)
            return false;
        detail = "R(3,3)=6; ex^2(6)=14=t_5(6); ex(n;K3)=floor(n^2/4) to n=7; res(K_6)=1; Goodman=2";
        return true;
    });

    gate.criterion("container contract: exhaustive capture and union bounds", [&](std::string & detail) {
        ContainerParams params;
        params.density_ceiling = frac(1, 2);
        params.fingerprint_budget = 10;
        long checked = 0;
        for (int n : {9, 12, 15}) {
            auto base = solution_khypergraph(schur, n);
            for (int r = 1; r <= 2; ++r) {
                std::vector<KHypergraph> bases(r, base);
                auto fam = lift_tuple(bases, params);
                if (! fam.certified) {
                    detail = "schur[" + std::to_string(n) + "] r=" + std::to_string(r) + " uncertified";
                    return false;
                }
                auto rep = verify_matcontainer(std::vector<LinearSystem>(r, schur), n, frac(1, 2), fam);
                if (! rep.all_hold) {
                    detail = "schur[" + std::to_string(n) + "] r=" + std::to_string(r) + " clause failed";
                    return false;
                }
                checked += rep.independent_sets_checked;
            }
        }
        for (int n : {5, 6}) {
            auto derived = build_copies_hypergraph(k3, n).derived;
            for (int r = 1; r <= 2; ++r) {
                std::vector<KHypergraph> bases(r, derived);
                auto fam = lift_tuple(bases, params);
                if (! fam.certified)
                    return false;
                auto rep = verify_ramseycont(std::vector<KHypergraph>(r, k3), n, frac(1, 2), fam);
                if (! rep.all_hold) {
                    detail = "K3 copies n=" + std::to_string(n) + " r=" + std::to_string(r) + " clause failed";
                    return false;
                }
                checked += rep.independent_sets_checked;
            }
        }
        detail = "100% capture over " + std::to_string(checked) + " independent sets";
        return true;
    });

    gate.criterion("pi-sequence monotonicity", [&](std::string & detail) {
        auto seq = pi_sequence({k3}, 3, 7);
        for (std::size_t i = 1; i < seq.size(); ++i)
            if (seq[i] > seq[i - 1])
                return false;
        auto seq2 = pi_sequence({k3, k3}, 4, 6);
        for (std::size_t i = 1; i < seq2.size(); ++i)
            if (seq2[i] > seq2[i - 1])
                return false;
        detail = "ex(n;K3)/binom and ex^2(n;K3,K3)/binom non-increasing";
        return true;
    });

    gate.criterion("Monte Carlo sanity (seeded)", [&](std::string & detail) {
        // (a) mean sample size within five standard errors of pn
        {
            RandomModelConfig cfg;
            cfg.model = RandomModel::NpSet;
            cfg.n = 50;
            cfg.seed = 90001;
            cfg.p = frac(1, 2);
            long total = 0;
            const long trials = 1000;
            for (long t = 0; t < trials; ++t)
                total += static_cast<long>(sample_np_set(cfg, t).size());
            double mean = static_cast<double>(total) / trials;
            double sigma = std::sqrt(50.0 * 0.25 / trials);
            if (std::abs(mean - 25.0) >= 5 * sigma) {
                detail = "sample-size mean drifted";
                return false;
            }
        }
        // (b) threshold scan for (K_3, r = 2) at n = 14 is CI-monotone
        {
            RandomModelConfig cfg;
            cfg.model = RandomModel::GnpK;
            cfg.k = 2;
            cfg.n = 14;
            cfg.seed = 90002;
            cfg.trials = 30;
            std::vector<Rat> grid;
            for (int i = 1; i <= 9; ++i)
                grid.push_back(frac(i, 10));
            auto scan = threshold_scan(cfg, RamseyProperty{{k3, k3}}, grid, Rat(2), 50'000'000, 2);
            for (std::size_t i = 1; i < scan.points.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (scan.points[j].estimate.ci_low > scan.points[i].estimate.ci_high) {
                        detail = "disjoint confidence intervals inverted in the scan";
                        return false;
                    }
        }
        // (c) Schur r = 1 resilience at n = 60, p = 1/2
        {
            RandomModelConfig cfg;
            cfg.model = RandomModel::NpSet;
            cfg.n = 60;
            cfg.seed = 90003;
            cfg.trials = 20;
            cfg.p = frac(1, 2);
            auto rep = resilience_mc(cfg, RadoProperty{{schur}, SolutionMode::KDistinct},
                                     200'000'000, 2, false);
            if (rep.exact_trials < 20)
                return false;
            double mean = rat_to_double(rep.mean_ratio);
            if (! (mean >= 0.35 && mean <= 0.65)) {
                detail = "mean res/|S| = " + std::to_string(mean);
                return false;
            }
            detail = "res/|S| mean = " + std::to_string(mean);
        }
        // (d) sparse regime: p <= 0.2 n^{-1/2} keeps res/e below 0.05
        {
            RandomModelConfig cfg;
            cfg.model = RandomModel::NpSet;
            cfg.n = 60;
            cfg.seed = 90004;
            cfg.trials = 40;
            cfg.p = frac(1, 40); // 0.025 <= 0.2 * 60^{-1/2}
            auto rep = resilience_mc(cfg, RadoProperty{{schur}, SolutionMode::KDistinct},
                                     50'000'000, 2, false);
            Rat ratio_sum = 0;
            long counted = 0;
            for (const auto & rec : rep.records)
                if (rec.sample_size > 0) {
                    ratio_sum += frac(rec.res_lower, rec.sample_size);
                    ++counted;
                }
            if (counted > 0 && rat_to_double(ratio_sum) / counted >= 0.05)
                return false;

            RandomModelConfig g;
            g.model = RandomModel::GnpK;
            g.k = 2;
            g.n = 14;
            g.seed = 90005;
            g.trials = 40;
            g.p = frac(1, 20); // 0.05 <= 0.2 * 14^{-1/2}
            auto grep = resilience_mc(g, RamseyProperty{{k3, k3}}, 50'000'000, 2, false);
            Rat gsum = 0;
            long gcount = 0;
            for (const auto & rec : grep.records)
                if (rec.sample_size > 0) {
                    gsum += frac(rec.res_lower, rec.sample_size);
                    ++gcount;
                }
            if (gcount > 0 && rat_to_double(gsum) / gcount >= 0.05)
                return false;
        }
        return true;
    });

    gate.criterion("determinism: byte-identical seeded payloads across workers", [&](std::string & detail) {
        std::ostringstream mat;
        mat << format_matrix_text(schur);
        std::string path = "/tmp/rcl_acceptance_schur.mat";
        {
            std::ofstream f(path);
            f << mat.str();
        }
        RunConfig cfg{"mc",
                      {{"model", "np_set"}, {"n", "30"}, {"p", "1/2"}, {"rado", path}, {"r", "2"},
                       {"mode", "strong"}, {"trials", "16"}, {"seed", "12345"}}};
        auto a = rcl::run(cfg);
        auto b = rcl::run(cfg);
        auto workers = cfg;
        workers.options["workers"] = "4";
        auto c = rcl::run(workers);
        if (a.result_json != b.result_json || a.result_json != c.result_json)
            return false;

        RunConfig scan{"scan",
                       {{"model", "gnp_k"}, {"n", "8"}, {"k", "2"}, {"p-grid", "1/10,1/2,9/10"},
                        {"ramsey", "/tmp/rcl_acceptance_k3.hg"}, {"trials", "10"}, {"seed", "777"}}};
        {
            std::ofstream f("/tmp/rcl_acceptance_k3.hg");
            f << format_hypergraph_text(k3);
        }
        auto s1 = rcl::run(scan);
        auto s2 = rcl::run(scan);
        auto sw = scan;
        sw.options["workers"] = "2";
        auto s3 = rcl::run(sw);
        if (s1.result_json != s2.result_json || s1.result_json != s3.result_json)
            return false;
        detail = "mc and scan payloads identical across repeats and worker counts";
        return true;
    });

    std::cout << (gate.failures == 0 ? "ACCEPTANCE: all criteria passed"
                                     : "ACCEPTANCE: " + std::to_string(gate.failures) + " criterion(s) failed")
              << std::endl;
    return gate.failures == 0 ? 0 : 1;
}
