#include <doctest.h>

#include "oracles.hpp"

#include <rcl/errors.hpp>
#include <rcl/ramsey.hpp>

using namespace rcl;

namespace {

// recheck a free colouring independently: zero colour-i copies of H_i
bool free_colouring_sound(const ColoringAssignment & a, const std::vector<KHypergraph> & patterns)
{
    for (std::size_t c = 1; c <= patterns.size(); ++c) {
        std::vector<std::vector<int>> es;
        for (std::size_t i = 0; i < a.colours.size(); ++i)
            if (a.colours[i] == static_cast<int>(c))
                es.push_back(a.target.edges[i]);
        auto gc = KHypergraph::make(a.target.k, a.target.n, es);
        if (count_copies(gc, patterns[c - 1]) != 0)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("is_ramsey around R(3,3)")
{
    auto k3 = complete_graph(3);
    auto yes = is_ramsey(complete_graph(6), {k3, k3});
    CHECK(yes.is_ramsey == Verdict::Yes);
    auto no = is_ramsey(complete_graph(5), {k3, k3});
    CHECK(no.is_ramsey == Verdict::No);
    REQUIRE(no.free_colouring);
    CHECK(free_colouring_sound(*no.free_colouring, {k3, k3}));
}

TEST_CASE("r = 1 reduces to containment")
{
    auto k3 = complete_graph(3);
    CHECK(is_ramsey(cycle_graph(6), {k3}).is_ramsey == Verdict::No);
    CHECK(is_ramsey(complete_graph(3), {k3}).is_ramsey == Verdict::Yes);
    CHECK(is_ramsey(cycle_graph(6), {path_graph(3)}).is_ramsey == Verdict::Yes);
}

TEST_CASE("budget exhaustion yields Unknown with a node count")
{
    auto k3 = complete_graph(3);
    auto v = is_ramsey(complete_graph(6), {k3, k3}, 3);
    CHECK(v.is_ramsey == Verdict::Unknown);
    CHECK(v.nodes >= 3);
}

TEST_CASE("witness soundness on random graphs")
{
    testing::TestRng rng(93);
    auto k3 = complete_graph(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testing::random_graph(rng, 6, 0.55);
        auto v = is_ramsey(g, {k3, k3});
        REQUIRE(v.is_ramsey != Verdict::Unknown);
        if (v.is_ramsey == Verdict::No)
            CHECK(free_colouring_sound(*v.free_colouring, {k3, k3}));
    }
}

TEST_CASE("deletion monotonicity: free colourings restrict to subgraphs")
{
    testing::TestRng rng(95);
    auto k3 = complete_graph(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = testing::random_graph(rng, 6, 0.5);
        if (is_ramsey(g, {k3, k3}).is_ramsey != Verdict::No)
            continue;
        std::vector<std::vector<int>> sub;
        for (const auto & e : g.edges)
            if (rng.coin(0.7))
                sub.push_back(e);
        auto h = KHypergraph::make(2, 6, sub);
        CHECK(is_ramsey(h, {k3, k3}).is_ramsey == Verdict::No);
    }
}

TEST_CASE("eps-weak and eps-strong verdicts")
{
    auto k3 = complete_graph(3);
    auto k6 = complete_graph(6);

    auto relaxed = eps_weak_ramsey(k6, {k3, k3}, Rat(2));
    CHECK(relaxed.weakly_ramsey == Verdict::Yes);

    // eps with eps * binom(6,3) = 1: some colour class always has a triangle
    auto tight = eps_weak_ramsey(k6, {k3, k3}, frac(1, 20));
    CHECK(tight.weakly_ramsey == Verdict::No);
    CHECK(tight.best_value >= frac(1, 20));

    auto free = eps_weak_ramsey(cycle_graph(6), {k3}, frac(1, 100));
    CHECK(free.weakly_ramsey == Verdict::Yes);
    CHECK(free.best_value == 0);
}

TEST_CASE("minimum monochromatic triangle count of K_6 is two")
{
    auto k3 = complete_graph(3);
    auto res = min_mono_copies(complete_graph(6), {k3, k3});
    CHECK(res.exact == Verdict::Yes);
    CHECK(res.minimum == 2);
}

TEST_CASE("Turan graphs")
{
    CHECK(turan_number(2, 4) == 4);
    CHECK(turan_number(5, 6) == 14);
    CHECK(turan_number(6, 6) == 15);
    CHECK(turan_number(3, 9) == 27);
    CHECK_THROWS_AS(turan_graph(7, 6), HypergraphError);
    // balanced parts: no K_{s+1}
    CHECK(count_copies(turan_graph(3, 7), complete_graph(4)) == 0);
}

TEST_CASE("extremal numbers")
{
    auto k3 = complete_graph(3);
    CHECK(ex_r(5, {k3}).ex_value == 6);
    CHECK(ex_r(6, {k3, k3}).ex_value == 14);
    CHECK(ex_r(3, {single_edge(2)}).ex_value == 0);

    auto rec = ex_r(6, {k3, k3});
    CHECK(rec.extremal_graph.edge_count() == 14);
    CHECK(free_colouring_sound(rec.free_colouring, {k3, k3}));
    CHECK(is_ramsey(rec.extremal_graph, {k3, k3}).is_ramsey == Verdict::No);
}

TEST_CASE("Ramsey numbers")
{
    for (int ell = 2; ell <= 5; ++ell) {
        auto r = ramsey_number({2, ell});
        CHECK(r.exact == Verdict::Yes);
        CHECK(r.value == ell);
    }
    auto r1 = ramsey_number({3});
    CHECK(r1.value == 3);
    auto r33 = ramsey_number({3, 3});
    CHECK(r33.value == 6);
}

TEST_CASE("ramsey_number reports the proven lower bound on exhaustion")
{
    auto res = ramsey_number({3, 3}, 40);
    CHECK(res.exact == Verdict::Unknown);
    CHECK(res.lower_bound >= 1);
    CHECK(res.lower_bound <= 6);
}

TEST_CASE("hom images and the chromatic Ramsey probe")
{
    auto homs_k3 = hom_images(complete_graph(3), 8);
    REQUIRE(homs_k3.size() == 1);
    CHECK(homs_k3[0] == canonical_form(complete_graph(3)));

    auto homs_c5 = hom_images(cycle_graph(5), 8);
    CHECK(homs_c5.size() == 3); // C_5, the 4-vertex quotient, K_3

    auto probe33 = chromatic_ramsey_probe({complete_graph(3), complete_graph(3)});
    CHECK(probe33.lower == 6);
    REQUIRE(probe33.upper);
    CHECK(*probe33.upper == 6);

    auto probe55 = chromatic_ramsey_probe({cycle_graph(5), cycle_graph(5)});
    REQUIRE(probe55.upper);
    CHECK(*probe55.upper == 5);
    CHECK(probe55.lower == 5);

    // r = 1: the probe computes the chromatic number
    auto probek4 = chromatic_ramsey_probe({complete_graph(4)});
    REQUIRE(probek4.upper);
    CHECK(*probek4.upper == 4);
}

TEST_CASE("exact resilience golden values")
{
    auto k3 = complete_graph(3);
    auto res = resilience_exact(complete_graph(6), {k3, k3});
    CHECK(res.exact == Verdict::Yes);
    CHECK(res.lower == 1);
    auto tf = resilience_exact(cycle_graph(6), {k3});
    CHECK(tf.lower == 0);
    auto turan = resilience_exact(complete_graph(5), {k3});
    CHECK(turan.lower == 4); // 10 - 6
}

TEST_CASE("resilience brackets on budget exhaustion")
{
    auto k3 = complete_graph(3);
    auto res = resilience_exact(complete_graph(6), {k3, k3}, 5);
    CHECK(res.exact == Verdict::Unknown);
    CHECK(res.lower <= res.upper);
    CHECK(res.lower <= 1);
    CHECK(res.upper >= 1);
}

TEST_CASE("resilience agrees with the definition on small graphs")
{
    testing::TestRng rng(97);
    auto k3 = complete_graph(3);
    int done = 0;
    while (done < 10) {
        auto g = testing::random_graph(rng, 5, 0.6);
        if (g.edge_count() > 8)
            continue;
        auto fast = resilience_exact(g, {k3});
        CHECK(fast.exact == Verdict::Yes);
        CHECK(fast.lower == testing::resilience_by_definition(g, {k3}));
        ++done;
    }
}

TEST_CASE("pi sequence values and monotonicity")
{
    auto k3 = complete_graph(3);
    auto seq = pi_sequence({k3}, 3, 6);
    REQUIRE(seq.size() == 4);
    CHECK(seq[0] == frac(2, 3));
    CHECK(seq[1] == frac(2, 3));
    CHECK(seq[2] == frac(3, 5));
    CHECK(seq[3] == frac(3, 5));

    auto seq2 = pi_sequence({k3, k3}, 6, 6);
    CHECK(seq2[0] == frac(14, 15));
}

TEST_CASE("ex^r sandwich against the chromatic Ramsey certificate")
{
    auto k3 = complete_graph(3);
    auto probe = chromatic_ramsey_probe({k3, k3});
    REQUIRE(probe.upper);
    for (int n = 5; n <= 6; ++n) {
        long lower = turan_number(*probe.upper - 1, n);
        CHECK(lower <= ex_r(n, {k3, k3}).ex_value);
    }
}

TEST_CASE("three-uniform oracles work through the same machinery")
{
    auto k43 = complete_khypergraph(3, 4); // K_4^(3)
    CHECK(is_ramsey(complete_khypergraph(3, 4), {k43}).is_ramsey == Verdict::Yes);
    CHECK(is_ramsey(complete_khypergraph(3, 5), {k43, k43}).is_ramsey == Verdict::No);

    // ex(5; K_4^(3)) against a direct enumeration oracle over all 2^10
    // sub-3-graphs of K_5^(3)
    auto host = complete_khypergraph(3, 5);
    long best = 0;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        std::vector<std::vector<int>> edges;
        for (int i = 0; i < 10; ++i)
            if ((mask >> i) & 1)
                edges.push_back(host.edges[i]);
        auto g = KHypergraph::make(3, 5, edges);
        if (count_copies(g, k43) == 0)
            best = std::max(best, static_cast<long>(g.edge_count()));
    }
    CHECK(ex_r(5, {k43}).ex_value == best);
}

TEST_CASE("eps_weak_ramsey reports Unknown on an exhausted budget")
{
    auto k3 = complete_graph(3);
    auto res = eps_weak_ramsey(complete_graph(6), {k3, k3}, frac(1, 20), 3);
    CHECK(res.weakly_ramsey == Verdict::Unknown);
}

TEST_CASE("de Caen reference bound is a formula only")
{
    CHECK(de_caen_bound(3, 2) == frac(1, 2));
    CHECK(de_caen_bound(6, 2) == frac(4, 5));
    CHECK(de_caen_bound(4, 3) == frac(2, 3));
}
