#include <rcl/freeness.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace rcl {

std::vector<std::vector<long>> solution_value_sets(const LinearSystem & a, const std::vector<long> & s,
                                                   SolutionMode mode)
{
    auto sols = enumerate_solutions(a, s, mode);
    std::set<std::vector<long>> sets;
    for (const auto & t : sols) {
        std::vector<long> vals = t.values;
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        sets.insert(std::move(vals));
    }
    return {sets.begin(), sets.end()};
}

KHypergraph solution_khypergraph(const LinearSystem & a, int n)
{
    std::vector<long> s;
    for (long v = 1; v <= n; ++v)
        s.push_back(v);
    auto sets = solution_value_sets(a, s, SolutionMode::KDistinct);
    std::vector<std::vector<int>> edges;
    for (const auto & vals : sets)
        edges.emplace_back(vals.begin(), vals.end());
    return KHypergraph::make(a.cols, n, std::move(edges));
}

namespace {

ColoringProblem element_problem(const std::vector<long> & s, const std::vector<LinearSystem> & systems,
                                SolutionMode mode, bool degree_order)
{
    ColoringProblem prob;
    prob.items = static_cast<int>(s.size());
    prob.colours = static_cast<int>(systems.size());
    std::map<long, int> index;
    for (int i = 0; i < prob.items; ++i)
        index[s[i]] = i;
    prob.families.resize(prob.colours);
    for (int c = 0; c < prob.colours; ++c) {
        for (const auto & vals : solution_value_sets(systems[c], s, mode)) {
            Bits m(prob.items);
            for (long v : vals)
                m.set(index.at(v));
            prob.families[c].push_back(std::move(m));
        }
    }
    if (degree_order) {
        // branch on high solution-degree elements first, ties by value
        std::vector<long> deg(prob.items, 0);
        for (const auto & fam : prob.families)
            for (const auto & m : fam)
                m.for_each([&](int i) { ++deg[i]; });
        std::vector<int> order(prob.items);
        for (int i = 0; i < prob.items; ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return deg[x] > deg[y]; });
        prob.branch_order = std::move(order);
    }
    return prob;
}

FreenessCertificate certificate_from(const std::vector<long> & s, int r, SolutionMode mode,
                                     const std::vector<int> & colouring)
{
    return FreenessCertificate{s, r, mode, colouring};
}

} // namespace

FreenessResult is_free(const std::vector<long> & s, const std::vector<LinearSystem> & systems,
                       SolutionMode mode, long node_budget)
{
    auto prob = element_problem(s, systems, mode, false);
    auto res = decide_colouring(prob, node_budget);
    FreenessResult out;
    out.nodes = res.nodes;
    if (res.satisfiable) {
        out.free = Verdict::Yes;
        out.certificate = certificate_from(s, prob.colours, mode, res.colouring);
    }
    else
        out.free = (res.status == SearchStatus::Complete) ? Verdict::No : Verdict::Unknown;
    return out;
}

MuResult mu_of_set(const std::vector<long> & s, const std::vector<LinearSystem> & systems,
                   SolutionMode mode, long node_budget)
{
    auto prob = element_problem(s, systems, mode, true);
    auto res = max_in_colouring(prob, node_budget);
    MuResult out;
    out.nodes = res.nodes;
    out.lower = res.best;
    out.upper = res.upper;
    out.exact = (res.status == SearchStatus::Complete) ? Verdict::Yes : Verdict::Unknown;
    std::vector<long> kept;
    std::vector<int> colours;
    for (int i = 0; i < prob.items; ++i)
        if (res.assignment[i] != 0) {
            kept.push_back(s[i]);
            colours.push_back(res.assignment[i]);
        }
    out.certificate = FreenessCertificate{kept, prob.colours, mode, colours};
    return out;
}

MuResult mu(int n, const std::vector<LinearSystem> & systems, SolutionMode mode, long node_budget)
{
    std::vector<long> s;
    for (long v = 1; v <= n; ++v)
        s.push_back(v);
    return mu_of_set(s, systems, mode, node_budget);
}

LinearSystem schur_system()
{
    return LinearSystem::make(1, 3, {{1, 1, -1}});
}

namespace {

// strong sum-free value sets within [m], optionally modulo q
std::vector<std::vector<long>> sum_sets(long m, long modulus)
{
    std::set<std::vector<long>> sets;
    for (long x = 1; x <= m; ++x)
        for (long y = x; y <= m; ++y) {
            long z = x + y;
            if (modulus > 0)
                z %= modulus;
            if (z < 1 || z > m)
                continue;
            std::vector<long> vals{x, y, z};
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            sets.insert(std::move(vals));
        }
    return {sets.begin(), sets.end()};
}

// largest m whose [m] splits into r classes avoiding the given constraint
// generator; generator(m) returns the forbidden value sets
template <typename Gen>
long largest_partitionable(int r, long node_budget, Gen && gen)
{
    long budget_left = node_budget;
    for (long m = 1;; ++m) {
        ColoringProblem prob;
        prob.items = static_cast<int>(m);
        prob.colours = r;
        prob.families.assign(r, {});
        for (const auto & vals : gen(m)) {
            Bits mask(prob.items);
            for (long v : vals)
                mask.set(static_cast<int>(v - 1));
            for (int c = 0; c < r; ++c)
                prob.families[c].push_back(mask);
        }
        // colour classes are interchangeable: pin 1, half-pin 2
        prob.initial_domains.assign(prob.items, (r >= 32) ? ~0u : ((1u << r) - 1));
        prob.initial_domains[0] = 1u;
        if (m >= 2 && r >= 2)
            prob.initial_domains[1] = 3u;
        auto res = decide_colouring(prob, budget_left);
        budget_left -= res.nodes;
        if (res.satisfiable) {
            if (budget_left <= 0)
                throw BudgetExceeded("schur partition search: node budget exhausted");
            continue;
        }
        if (res.status == SearchStatus::BudgetExhausted)
            throw BudgetExceeded("schur partition search: node budget exhausted at m = " + std::to_string(m));
        return m - 1;
    }
}

} // namespace

long schur_f(int r, long node_budget)
{
    if (r < 1)
        throw MatrixError("schur_f: r must be positive");
    if (r > 3)
        throw BudgetExceeded("schur_f: exact search supported for r <= 3");
    return largest_partitionable(r, node_budget, [](long m) { return sum_sets(m, 0); });
}

long schur_h(int r, long node_budget)
{
    if (r < 1)
        throw MatrixError("schur_h: r must be positive");
    if (r > 3)
        throw BudgetExceeded("schur_h: exact search supported for r <= 3");
    return largest_partitionable(r, node_budget, [](long m) { return sum_sets(m, m + 1); });
}

Int ell_sequence(int i)
{
    if (i < 0)
        throw MatrixError("ell_sequence: index must be >= 0");
    Int ell = 1;
    for (int t = 1; t <= i; ++t)
        ell = t * ell + 1;
    return ell;
}

long mu_upper_bound(long n, int r)
{
    Int ell = ell_sequence(r);
    Int q = Int(n) / ell;
    return n - q.get_si();
}

AbbottWangReport abbott_wang_bounds(long n, int r, long node_budget)
{
    AbbottWangReport rep;
    rep.f_r = schur_f(r, node_budget);
    rep.h_r = schur_h(r, node_budget);
    rep.lower = n - n / (rep.h_r + 1);
    rep.recurrence_upper = mu_upper_bound(n, r);
    // c frozen as 5615/10000 (a rounded-down rational for e^{-gamma})
    double c = 0.5615;
    double denom = static_cast<double>(rep.f_r + 1) * std::log(static_cast<double>(rep.f_r + 1));
    rep.aw_upper = n - static_cast<long>(std::floor(c * static_cast<double>(n) / denom));
    rep.min_upper = std::min(rep.recurrence_upper, rep.aw_upper);
    return rep;
}

bool difference_set_check(const std::vector<long> & s, const std::vector<long> & t)
{
    std::set<long> sset(s.begin(), s.end());
    for (long x : s) {
        bool ok = true;
        for (long y : t)
            if (! sset.count(x + y)) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    }
    return false;
}

bool is_sum_free(const std::vector<long> & s, bool strong)
{
    std::set<long> sset(s.begin(), s.end());
    for (long x : s)
        for (long y : s) {
            if (! strong && x == y)
                continue;
            if (sset.count(x + y))
                return false;
        }
    return true;
}

} // namespace rcl
