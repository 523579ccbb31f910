#include <rcl/containers.hpp>
#include <rcl/errors.hpp>
#include <rcl/ramsey.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

using nlohmann::json;

namespace rcl {

namespace {

// Walk state shared by the family enumeration and the per-set replay. The
// walk looks at the live sub-hypergraph induced by C union S, repeatedly
// picks the maximum-degree vertex of C (ties to the smallest id) and either
// promotes it into the fingerprint or deletes it.
struct Walk
{
    const KHypergraph & base;
    std::vector<Bits> edge_masks; // over 0-based vertices
    std::vector<std::vector<int>> edges_at;
    Rat stop_below; // ceiling * e(base)
    int hard_cap;

    explicit Walk(const KHypergraph & b, const ContainerParams & params) : base(b)
    {
        edge_masks.reserve(base.edges.size());
        edges_at.assign(base.n, {});
        for (std::size_t ei = 0; ei < base.edges.size(); ++ei) {
            Bits m(base.n);
            for (int v : base.edges[ei]) {
                m.set(v - 1);
                edges_at[v - 1].push_back(static_cast<int>(ei));
            }
            edge_masks.push_back(std::move(m));
        }
        stop_below = params.density_ceiling * Rat(base.edge_count());
        hard_cap = params.fingerprint_budget + params.refine_depth;
    }

    struct State
    {
        Bits in_c;
        Bits s;
        std::vector<int> removed_of_edge;
        std::vector<int> deg;
        long alive = 0;
        int s_size = 0;
    };

    State initial() const
    {
        State st;
        st.in_c = Bits(base.n);
        for (int v = 0; v < base.n; ++v)
            st.in_c.set(v);
        st.s = Bits(base.n);
        st.removed_of_edge.assign(base.edges.size(), 0);
        st.deg.assign(base.n, 0);
        st.alive = base.edge_count();
        for (std::size_t ei = 0; ei < base.edges.size(); ++ei)
            for (int v : base.edges[ei])
                ++st.deg[v - 1];
        return st;
    }

    // 0 = keep walking, 1 = done (certified density), 2 = done (over-dense)
    int stopped(const State & st) const
    {
        if (Rat(st.alive) < stop_below)
            return 1;
        if (st.s_size >= hard_cap)
            return 2;
        if (! st.in_c.any())
            return 1; // alive is zero here since S is independent
        return 0;
    }

    int select(const State & st) const
    {
        int best = -1, best_deg = -1;
        for (int v = 0; v < base.n; ++v)
            if (st.in_c.test(v) && st.deg[v] > best_deg) {
                best_deg = st.deg[v];
                best = v;
            }
        return best;
    }

    void remove_vertex(State & st, int v) const
    {
        st.in_c.reset(v);
        for (int ei : edges_at[v])
            if (st.removed_of_edge[ei]++ == 0) {
                --st.alive;
                edge_masks[ei].for_each([&](int u) { --st.deg[u]; });
            }
    }

    void promote_vertex(State & st, int v) const
    {
        st.in_c.reset(v);
        st.s.set(v);
        ++st.s_size;
    }

    bool take_keeps_independent(const State & st, int v) const
    {
        for (int ei : edges_at[v]) {
            if (st.removed_of_edge[ei] != 0)
                continue;
            bool inside = true;
            edge_masks[ei].for_each([&](int u) {
                if (u != v && ! st.s.test(u))
                    inside = false;
            });
            if (inside)
                return false;
        }
        return true;
    }
};

} // namespace

int SingleFamily::index_of(const Bits & fingerprint) const
{
    auto it = std::lower_bound(fingerprints.begin(), fingerprints.end(), fingerprint);
    if (it == fingerprints.end() || ! (*it == fingerprint))
        return -1;
    return static_cast<int>(it - fingerprints.begin());
}

SingleFamily build_single(const KHypergraph & base, const ContainerParams & params)
{
    if (params.density_ceiling <= 0 || params.density_ceiling > 1)
        throw HypergraphError("build_single: density ceiling must lie in (0,1]");
    if (base.n < 1)
        throw HypergraphError("build_single: base needs a nonempty vertex set");

    SingleFamily fam;
    fam.base = base;
    fam.params = params;

    if (base.edge_count() == 0) {
        Bits full(base.n);
        for (int v = 0; v < base.n; ++v)
            full.set(v);
        fam.fingerprints.push_back(Bits(base.n));
        fam.containers.push_back(full);
        fam.flags.push_back(0);
        fam.certified = true;
        return fam;
    }

    Walk walk(base, params);
    std::map<Bits, std::pair<Bits, char>> leaves;

    auto rec = [&](auto && self, Walk::State st) -> void {
        for (;;) {
            int stop = walk.stopped(st);
            if (stop) {
                char flag = 0;
                if (stop == 2)
                    flag = 2;
                else if (st.s_size > params.fingerprint_budget)
                    flag = 1;
                leaves.emplace(st.s, std::make_pair(st.in_c | st.s, flag));
                return;
            }
            int v = walk.select(st);
            if (walk.take_keeps_independent(st, v)) {
                Walk::State taken = st;
                walk.promote_vertex(taken, v);
                self(self, std::move(taken));
            }
            walk.remove_vertex(st, v);
        }
    };
    rec(rec, walk.initial());

    fam.certified = true;
    for (auto & [s, cf] : leaves) {
        fam.fingerprints.push_back(s);
        fam.containers.push_back(cf.first);
        fam.flags.push_back(cf.second);
        if (cf.second != 0) {
            fam.certified = false;
            if (! fam.violating_independent_set)
                fam.violating_independent_set = s;
        }
    }
    return fam;
}

std::pair<Bits, Bits> assign_single(const SingleFamily & family, const Bits & independent_set)
{
    const auto & base = family.base;
    if (base.edge_count() == 0) {
        Bits full(base.n);
        for (int v = 0; v < base.n; ++v)
            full.set(v);
        return {Bits(base.n), full};
    }
    for (const auto & e : base.edges) {
        bool inside = true;
        for (int v : e)
            if (! independent_set.test(v - 1)) {
                inside = false;
                break;
            }
        if (inside)
            throw HypergraphError("assign_single: the given set is not independent");
    }
    Walk walk(base, family.params);
    auto st = walk.initial();
    while (! walk.stopped(st)) {
        int v = walk.select(st);
        if (independent_set.test(v))
            walk.promote_vertex(st, v);
        else
            walk.remove_vertex(st, v);
    }
    return {st.s, st.in_c | st.s};
}

ContainerFamily lift_tuple(const std::vector<KHypergraph> & bases, const ContainerParams & params)
{
    if (bases.empty())
        throw HypergraphError("lift_tuple: at least one base required");
    for (const auto & b : bases)
        if (b.n != bases.front().n)
            throw HypergraphError("lift_tuple: bases must share one vertex set");

    ContainerFamily fam;
    fam.r = static_cast<int>(bases.size());
    fam.params = params;
    for (const auto & b : bases)
        fam.coords.push_back(build_single(b, params));
    fam.certified = true;
    for (const auto & c : fam.coords)
        fam.certified = fam.certified && c.certified;

    // materialise the disjoint product when it stays small
    long upper = 1;
    bool overflow = false;
    for (const auto & c : fam.coords) {
        upper *= static_cast<long>(c.fingerprints.size());
        if (upper > params.product_budget) {
            overflow = true;
            break;
        }
    }
    if (! overflow) {
        std::vector<int> idx(fam.r, 0);
        std::vector<int> chosen(fam.r, 0);
        auto rec = [&](auto && self, int coord, Bits used) -> void {
            if (coord == fam.r) {
                fam.tuples.push_back(chosen);
                return;
            }
            const auto & fps = fam.coords[coord].fingerprints;
            for (int i = 0; i < static_cast<int>(fps.size()); ++i) {
                if (fps[i].intersects(used))
                    continue;
                chosen[coord] = i;
                self(self, coord + 1, used | fps[i]);
            }
        };
        rec(rec, 0, Bits(bases.front().n));
        fam.materialised = true;
    }
    return fam;
}

std::vector<std::pair<Bits, Bits>> assign_tuple(const ContainerFamily & family,
                                                const std::vector<Bits> & independent_tuple)
{
    if (static_cast<int>(independent_tuple.size()) != family.r)
        throw HypergraphError("assign_tuple: tuple arity mismatch");
    for (std::size_t i = 0; i < independent_tuple.size(); ++i)
        for (std::size_t j = i + 1; j < independent_tuple.size(); ++j)
            if (independent_tuple[i].intersects(independent_tuple[j]))
                throw HypergraphError("assign_tuple: tuple coordinates must be disjoint");
    std::vector<std::pair<Bits, Bits>> out;
    for (int c = 0; c < family.r; ++c)
        out.push_back(assign_single(family.coords[c], independent_tuple[c]));
    return out;
}

namespace {

json bits_to_json(const Bits & b)
{
    json arr = json::array();
    b.for_each([&](int v) { arr.push_back(v + 1); });
    return arr;
}

Bits bits_from_json(const json & arr, int n)
{
    Bits b(n);
    for (const auto & v : arr)
        b.set(v.get<int>() - 1);
    return b;
}

} // namespace

std::string family_to_json(const ContainerFamily & family)
{
    json doc;
    doc["schema_version"] = 1;
    doc["r"] = family.r;
    doc["certified"] = family.certified;
    doc["materialised"] = family.materialised;
    doc["params"] = {
        {"density_ceiling", rat_to_string(family.params.density_ceiling)},
        {"fingerprint_budget", family.params.fingerprint_budget},
        {"refine_depth", family.params.refine_depth},
        {"p", rat_to_string(family.params.p)},
        {"eps", rat_to_string(family.params.eps)},
        {"product_budget", family.params.product_budget},
    };
    doc["coords"] = json::array();
    for (const auto & c : family.coords) {
        json jc;
        jc["base"] = format_hypergraph_text(c.base);
        jc["certified"] = c.certified;
        jc["fingerprints"] = json::array();
        jc["containers"] = json::array();
        jc["flags"] = json::array();
        for (std::size_t i = 0; i < c.fingerprints.size(); ++i) {
            jc["fingerprints"].push_back(bits_to_json(c.fingerprints[i]));
            jc["containers"].push_back(bits_to_json(c.containers[i]));
            jc["flags"].push_back(static_cast<int>(c.flags[i]));
        }
        doc["coords"].push_back(std::move(jc));
    }
    doc["tuples"] = family.tuples;
    return doc.dump(2);
}

ContainerFamily family_from_json(const std::string & text)
{
    json doc = json::parse(text);
    ContainerFamily fam;
    fam.r = doc.at("r").get<int>();
    fam.certified = doc.at("certified").get<bool>();
    fam.materialised = doc.at("materialised").get<bool>();
    const auto & jp = doc.at("params");
    fam.params.density_ceiling = rat_from_string(jp.at("density_ceiling").get<std::string>());
    fam.params.fingerprint_budget = jp.at("fingerprint_budget").get<int>();
    fam.params.refine_depth = jp.at("refine_depth").get<int>();
    fam.params.p = rat_from_string(jp.at("p").get<std::string>());
    fam.params.eps = rat_from_string(jp.at("eps").get<std::string>());
    fam.params.product_budget = jp.at("product_budget").get<long>();
    for (const auto & jc : doc.at("coords")) {
        SingleFamily c;
        std::istringstream in(jc.at("base").get<std::string>());
        c.base = parse_hypergraph_text(in);
        c.params = fam.params;
        c.certified = jc.at("certified").get<bool>();
        for (const auto & f : jc.at("fingerprints"))
            c.fingerprints.push_back(bits_from_json(f, c.base.n));
        for (const auto & f : jc.at("containers"))
            c.containers.push_back(bits_from_json(f, c.base.n));
        for (const auto & f : jc.at("flags"))
            c.flags.push_back(static_cast<char>(f.get<int>()));
        fam.coords.push_back(std::move(c));
    }
    for (const auto & t : doc.at("tuples"))
        fam.tuples.push_back(t.get<std::vector<int>>());
    return fam;
}

std::vector<Bits> enumerate_independent_sets(const KHypergraph & h)
{
    std::vector<Bits> edge_masks;
    for (const auto & e : h.edges) {
        Bits m(h.n);
        for (int v : e)
            m.set(v - 1);
        edge_masks.push_back(std::move(m));
    }
    std::vector<Bits> out;
    Bits cur(h.n);
    auto rec = [&](auto && self, int v) -> void {
        if (v == h.n) {
            out.push_back(cur);
            return;
        }
        self(self, v + 1);
        cur.set(v);
        bool ok = true;
        for (const auto & m : edge_masks)
            if (m.test(v) && m.subset_of(cur)) {
                ok = false;
                break;
            }
        if (ok)
            self(self, v + 1);
        cur.reset(v);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct CaptureStats
{
    long checked = 0;
    bool ok = true;
    std::string detail;
};

CaptureStats check_capture(const SingleFamily & fam, const std::vector<Bits> & independents)
{
    CaptureStats st;
    for (const auto & i : independents) {
        auto [s, container] = assign_single(fam, i);
        ++st.checked;
        if (! s.subset_of(i) || ! i.subset_of(container)) {
            st.ok = false;
            st.detail = "capture failed for an independent set of size " + std::to_string(i.count());
            return st;
        }
        if (fam.index_of(s) < 0) {
            st.ok = false;
            st.detail = "assigned fingerprint missing from the family";
            return st;
        }
    }
    return st;
}

// visit every r-tuple of pairwise-disjoint sets drawn per coordinate
template <typename F>
void for_each_disjoint_tuple(const std::vector<std::vector<Bits>> & per_coord, F && visit)
{
    int r = static_cast<int>(per_coord.size());
    std::vector<int> chosen(r, 0);
    int n = per_coord.empty() || per_coord[0].empty() ? 0 : per_coord[0][0].n;
    auto rec = [&](auto && self, int coord, const Bits & used) -> void {
        if (coord == r) {
            visit(chosen);
            return;
        }
        for (int i = 0; i < static_cast<int>(per_coord[coord].size()); ++i) {
            if (per_coord[coord][i].intersects(used))
                continue;
            chosen[coord] = i;
            self(self, coord + 1, used | per_coord[coord][i]);
        }
    };
    rec(rec, 0, Bits(n));
}

} // namespace

VerifyReport verify_matcontainer(const std::vector<LinearSystem> & systems, int n, const Rat & delta,
                                 const ContainerFamily & family, SolutionMode mode)
{
    if (static_cast<int>(systems.size()) != family.r)
        throw MatrixError("verify_matcontainer: system count must match family arity");
    VerifyReport rep;

    // exact mu for the union-size check
    auto mu_res = mu(n, systems, mode);
    if (mu_res.exact != Verdict::Yes)
        throw BudgetExceeded("verify_matcontainer: exact mu unavailable at this n");
    rep.mu_or_ex_value = mu_res.lower;

    // (i) capture, coordinate by coordinate (fingerprints of disjoint tuples
    // are automatically disjoint since each fingerprint sits inside its set)
    ClauseCheck capture{"capture: every independent tuple lands in its container", true, ""};
    std::vector<std::vector<Bits>> independents;
    for (int c = 0; c < family.r; ++c) {
        if (family.coords[c].base.n != n)
            throw MatrixError("verify_matcontainer: family base does not live on [n]");
        independents.push_back(enumerate_independent_sets(family.coords[c].base));
        auto st = check_capture(family.coords[c], independents.back());
        rep.independent_sets_checked += st.checked;
        if (! st.ok) {
            capture.holds = false;
            capture.detail = st.detail;
        }
    }
    if (capture.holds)
        for_each_disjoint_tuple(independents, [&](const std::vector<int> &) { ++rep.tuples_counted; });
    rep.clauses.push_back(capture);

    // fingerprint size sums; D fitted against n^((m-1)/m)
    auto ma = m_A(systems.front());
    ClauseCheck sizes{"fingerprint sums bounded (fitted D reported)", true, ""};
    std::vector<std::vector<Bits>> fps;
    for (const auto & c : family.coords)
        fps.push_back(c.fingerprints);
    long max_sum = 0;
    for_each_disjoint_tuple(fps, [&](const std::vector<int> & chosen) {
        long sum = 0;
        for (int c = 0; c < family.r; ++c)
            sum += fps[c][chosen[c]].count();
        max_sum = std::max(max_sum, sum);
    });
    rep.max_fingerprint_sum = max_sum;
    double scale = std::pow(static_cast<double>(n),
                            rat_to_double((ma.value - 1) / ma.value));
    rep.fitted_D = scale > 0 ? static_cast<double>(max_sum) / scale : 0.0;
    sizes.detail = "max sum " + std::to_string(max_sum);
    rep.clauses.push_back(sizes);

    // fingerprints are themselves independent tuples
    ClauseCheck indep{"fingerprints independent per coordinate", true, ""};
    for (int c = 0; c < family.r; ++c) {
        const auto & base = family.coords[c].base;
        for (const auto & s : family.coords[c].fingerprints)
            for (const auto & e : base.edges) {
                bool inside = true;
                for (int v : e)
                    if (! s.test(v - 1)) {
                        inside = false;
                        break;
                    }
                if (inside) {
                    indep.holds = false;
                    indep.detail = "a fingerprint spans a solution set";
                }
            }
    }
    rep.clauses.push_back(indep);

    // per-container solution counts
    ClauseCheck counts{"container solution counts <= delta n^(k-ell)", true, ""};
    for (int c = 0; c < family.r; ++c) {
        const auto & sys = systems[c];
        int rank = rank_and_echelon(sys).rank;
        Rat cap = delta * rat_pow(Rat(n), sys.cols - rank);
        for (const auto & cont : family.coords[c].containers) {
            std::vector<long> vals;
            cont.for_each([&](int v) { vals.push_back(v + 1); });
            long count = static_cast<long>(enumerate_solutions(sys, vals, mode).size());
            if (Rat(count) > cap) {
                counts.holds = false;
                counts.detail = "container with " + std::to_string(count) + " solutions exceeds cap " +
                             rat_to_string(cap);
            }
        }
    }
    rep.clauses.push_back(counts);

    // union sizes against mu + delta n
    ClauseCheck unions{"union size <= mu + delta n", true, ""};
    Rat union_cap = Rat(rep.mu_or_ex_value) + delta * Rat(n);
    long max_union = 0;
    for_each_disjoint_tuple(fps, [&](const std::vector<int> & chosen) {
        Bits u(n);
        for (int c = 0; c < family.r; ++c)
            u |= family.coords[c].containers[chosen[c]];
        max_union = std::max(max_union, static_cast<long>(u.count()));
    });
    rep.max_union_size = max_union;
    if (Rat(max_union) > union_cap) {
        unions.holds = false;
        unions.detail = "largest union " + std::to_string(max_union) + " exceeds " + rat_to_string(union_cap);
    }
    rep.clauses.push_back(unions);

    rep.all_hold = true;
    for (const auto & c : rep.clauses)
        rep.all_hold = rep.all_hold && c.holds;
    return rep;
}

VerifyReport verify_ramseycont(const std::vector<KHypergraph> & patterns, int n, const Rat & delta,
                               const ContainerFamily & family)
{
    if (static_cast<int>(patterns.size()) != family.r)
        throw HypergraphError("verify_ramseycont: pattern count must match family arity");
    VerifyReport rep;

    std::vector<CopiesHypergraph> copies;
    for (int c = 0; c < family.r; ++c) {
        copies.push_back(build_copies_hypergraph(patterns[c], n));
        if (! (copies.back().derived == family.coords[c].base))
            throw HypergraphError("verify_ramseycont: family base is not the copies hypergraph");
    }
    int kk = copies.front().base.k;

    auto ex = ex_r(n, patterns);
    rep.mu_or_ex_value = ex.ex_value;

    ClauseCheck capture{"capture: every pattern-free tuple lands in its container", true, ""};
    std::vector<std::vector<Bits>> independents;
    for (int c = 0; c < family.r; ++c) {
        independents.push_back(enumerate_independent_sets(family.coords[c].base));
        auto st = check_capture(family.coords[c], independents.back());
        rep.independent_sets_checked += st.checked;
        if (! st.ok) {
            capture.holds = false;
            capture.detail = st.detail;
        }
    }
    if (capture.holds)
        for_each_disjoint_tuple(independents, [&](const std::vector<int> &) { ++rep.tuples_counted; });
    rep.clauses.push_back(capture);

    auto mk = m_k(patterns.front());
    ClauseCheck sizes{"fingerprint edge sums bounded (fitted D reported)", true, ""};
    std::vector<std::vector<Bits>> fps;
    for (const auto & c : family.coords)
        fps.push_back(c.fingerprints);
    long max_sum = 0;
    for_each_disjoint_tuple(fps, [&](const std::vector<int> & chosen) {
        long sum = 0;
        for (int c = 0; c < family.r; ++c)
            sum += fps[c][chosen[c]].count();
        max_sum = std::max(max_sum, sum);
    });
    rep.max_fingerprint_sum = max_sum;
    double scale = std::pow(static_cast<double>(n),
                            static_cast<double>(kk) - 1.0 / rat_to_double(mk.m_k));
    rep.fitted_D = scale > 0 ? static_cast<double>(max_sum) / scale : 0.0;
    sizes.detail = "max edge sum " + std::to_string(max_sum);
    rep.clauses.push_back(sizes);

    ClauseCheck indep{"fingerprints pattern-free per coordinate", true, ""};
    for (int c = 0; c < family.r; ++c)
        for (const auto & s : family.coords[c].fingerprints)
            for (const auto & e : family.coords[c].base.edges) {
                bool inside = true;
                for (int v : e)
                    if (! s.test(v - 1)) {
                        inside = false;
                        break;
                    }
                if (inside) {
                    indep.holds = false;
                    indep.detail = "a fingerprint graph contains a pattern copy";
                }
            }
    rep.clauses.push_back(indep);

    // the canonical least-index colouring keeps colour-i copies below
    // delta binom(n, v_i) provided each container does
    ClauseCheck counts{"containers delta-weakly Ramsey (per-coordinate copy counts)", true, ""};
    for (int c = 0; c < family.r; ++c) {
        Rat cap = delta * Rat(binomial(n, patterns[c].n));
        for (const auto & cont : family.coords[c].containers) {
            long inside_copies = 0;
            for (const auto & e : family.coords[c].base.edges) {
                bool inside = true;
                for (int v : e)
                    if (! cont.test(v - 1)) {
                        inside = false;
                        break;
                    }
                if (inside)
                    ++inside_copies;
            }
            if (Rat(inside_copies) >= cap) {
                counts.holds = false;
                counts.detail = "container with " + std::to_string(inside_copies) + " copies reaches cap " +
                             rat_to_string(cap);
            }
        }
    }
    rep.clauses.push_back(counts);

    ClauseCheck unions{"union edge count <= ex^r + delta binom(n,k)", true, ""};
    Rat union_cap = Rat(rep.mu_or_ex_value) + delta * Rat(binomial(n, kk));
    long max_union = 0;
    for_each_disjoint_tuple(fps, [&](const std::vector<int> & chosen) {
        Bits u(family.coords[0].base.n);
        for (int c = 0; c < family.r; ++c)
            u |= family.coords[c].containers[chosen[c]];
        max_union = std::max(max_union, static_cast<long>(u.count()));
    });
    rep.max_union_size = max_union;
    if (Rat(max_union) > union_cap) {
        unions.holds = false;
        unions.detail = "largest union " + std::to_string(max_union) + " exceeds " + rat_to_string(union_cap);
    }
    rep.clauses.push_back(unions);

    rep.all_hold = true;
    for (const auto & c : rep.clauses)
        rep.all_hold = rep.all_hold && c.holds;
    return rep;
}

} // namespace rcl
