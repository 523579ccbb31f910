#include <rcl/coloring_search.hpp>

#include <algorithm>
#include <stdexcept>

namespace rcl {

namespace {

constexpr int UNASSIGNED = -1;
constexpr int OUT = 0;

// Propagating DFS used by decide_colouring and max_in_colouring. Keeps, per
// (colour, mask), the count of items assigned that colour and the count of
// items assigned anything else; a mask with same == size is monochromatic,
// and with diff == 0, same == size-1 the last free item loses that colour.
struct ForbidEngine
{
    const ColoringProblem & prob;
    bool allow_out;
    long node_budget;

    struct Constraint
    {
        Bits mask;
        int size;
        int colour;
        int same = 0;
        int diff = 0;
    };

    std::vector<Constraint> cons;
    std::vector<std::vector<std::vector<int>>> at; // [colour-1][item] -> constraint ids
    std::vector<int> val;
    std::vector<std::uint32_t> dom;
    std::vector<int> order;
    long nodes = 0;
    bool budget_hit = false;

    // max mode state
    int coloured = 0;
    int assigned_count = 0;
    int best = -1;
    int open_upper = 0;
    std::vector<int> best_assignment;

    // decide mode state
    bool found = false;
    std::vector<int> witness;

    explicit ForbidEngine(const ColoringProblem & p, bool out_allowed, long budget)
        : prob(p), allow_out(out_allowed), node_budget(budget)
    {
        const int r = prob.colours;
        at.assign(r, std::vector<std::vector<int>>(prob.items));
        for (int c = 0; c < r; ++c)
            for (const auto & m : prob.families[c]) {
                int id = static_cast<int>(cons.size());
                cons.push_back({m, m.count(), c, 0, 0});
                m.for_each([&](int item) { at[c][item].push_back(id); });
            }
        val.assign(prob.items, UNASSIGNED);
        std::uint32_t all = (r >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << r) - 1);
        if (prob.initial_domains.empty())
            dom.assign(prob.items, all);
        else
            dom = prob.initial_domains;
        order = prob.branch_order;
    }

    struct TrailEntry
    {
        enum Kind { Assign, Domain } kind;
        int item;
        std::uint32_t saved_dom;
    };
    std::vector<TrailEntry> trail;

    bool remove_colour(int item, int c, std::vector<int> & forced_out)
    {
        std::uint32_t bit = std::uint32_t{1} << c;
        if (! (dom[item] & bit))
            return true;
        trail.push_back({TrailEntry::Domain, item, dom[item]});
        dom[item] &= ~bit;
        if (dom[item] == 0) {
            if (! allow_out)
                return false;
            if (val[item] == UNASSIGNED)
                forced_out.push_back(item);
        }
        return true;
    }

    // Returns false on conflict. The counter sweep always completes so that
    // undo_to can blindly reverse every constraint containing the item;
    // domain removals are trailed individually.
    bool assign(int item, int colour_value)
    {
        trail.push_back({TrailEntry::Assign, item, 0});
        val[item] = colour_value;
        ++assigned_count;
        if (colour_value != OUT)
            ++coloured;
        bool ok = true;
        std::vector<int> units; // constraint ids that became same == size-1
        const int r = prob.colours;
        for (int c = 0; c < r; ++c) {
            const bool is_same = (colour_value == c + 1);
            for (int id : at[c][item]) {
                auto & cn = cons[id];
                if (is_same) {
                    ++cn.same;
                    if (cn.same == cn.size)
                        ok = false;
                    else if (cn.diff == 0 && cn.same == cn.size - 1)
                        units.push_back(id);
                }
                else
                    ++cn.diff;
            }
        }
        if (! ok)
            return false;
        std::vector<int> forced_out;
        for (int id : units) {
            const auto & cn = cons[id];
            if (cn.diff != 0)
                continue; // a later counter update killed the constraint
            int free_item = -1;
            cn.mask.for_each([&](int x) {
                if (val[x] == UNASSIGNED)
                    free_item = x;
            });
            if (free_item >= 0 && ! remove_colour(free_item, cn.colour, forced_out))
                return false;
        }
        for (int out_item : forced_out)
            if (val[out_item] == UNASSIGNED && ! assign(out_item, OUT))
                return false;
        return true;
    }

    void undo_to(std::size_t mark)
    {
        while (trail.size() > mark) {
            auto e = trail.back();
            trail.pop_back();
            if (e.kind == TrailEntry::Domain)
                dom[e.item] = e.saved_dom;
            else {
                int cv = val[e.item];
                --assigned_count;
                if (cv != OUT)
                    --coloured;
                const int r = prob.colours;
                for (int c = 0; c < r; ++c) {
                    const bool is_same = (cv == c + 1);
                    for (int id : at[c][e.item]) {
                        if (is_same)
                            --cons[id].same;
                        else
                            --cons[id].diff;
                    }
                }
                val[e.item] = UNASSIGNED;
            }
        }
    }

    int pick_item() const
    {
        if (! order.empty()) {
            for (int item : order)
                if (val[item] == UNASSIGNED)
                    return item;
            return -1;
        }
        int best_item = -1, best_dom = 1 << 30;
        for (int i = 0; i < prob.items; ++i) {
            if (val[i] != UNASSIGNED)
                continue;
            int d = __builtin_popcount(dom[i]);
            if (d < best_dom) {
                best_dom = d;
                best_item = i;
            }
        }
        return best_item;
    }

    // decision search: stop at first full colouring
    bool decide()
    {
        if (++nodes > node_budget) {
            budget_hit = true;
            return false;
        }
        if (assigned_count == prob.items) {
            found = true;
            witness = val;
            return true;
        }
        int item = pick_item();
        if (dom[item] == 0)
            return false;
        for (int c = 1; c <= prob.colours; ++c) {
            if (! (dom[item] & (std::uint32_t{1} << (c - 1))))
                continue;
            std::size_t mark = trail.size();
            if (assign(item, c) && decide())
                return true;
            undo_to(mark);
            if (budget_hit)
                return false;
        }
        return false;
    }

    void maximise()
    {
        if (++nodes > node_budget) {
            budget_hit = true;
            open_upper = std::max(open_upper, coloured + (prob.items - assigned_count));
            return;
        }
        int bound = coloured + (prob.items - assigned_count);
        if (bound <= best)
            return;
        if (assigned_count == prob.items) {
            if (coloured > best) {
                best = coloured;
                best_assignment = val;
            }
            return;
        }
        int item = pick_item();
        for (int c = 1; c <= prob.colours; ++c) {
            if (! (dom[item] & (std::uint32_t{1} << (c - 1))))
                continue;
            std::size_t mark = trail.size();
            if (assign(item, c))
                maximise();
            undo_to(mark);
            if (budget_hit && coloured + (prob.items - assigned_count) > best)
                open_upper = std::max(open_upper, coloured + (prob.items - assigned_count));
            if (budget_hit)
                return;
        }
        {
            std::size_t mark = trail.size();
            if (assign(item, OUT))
                maximise();
            undo_to(mark);
        }
    }

    // strip colours from singleton masks before any branching
    bool initial_propagation()
    {
        std::vector<int> forced_out;
        for (const auto & cn : cons)
            if (cn.size == 1) {
                int item = -1;
                cn.mask.for_each([&](int x) { item = x; });
                if (! remove_colour(item, cn.colour, forced_out))
                    return false;
            }
        for (int item : forced_out)
            if (val[item] == UNASSIGNED && ! assign(item, OUT))
                return false;
        if (! allow_out)
            for (int i = 0; i < prob.items; ++i)
                if (dom[i] == 0)
                    return false;
        return true;
    }
};

void validate(const ColoringProblem & prob)
{
    if (prob.colours < 1 || prob.colours > 31)
        throw std::invalid_argument("colouring search: colours must lie in 1..31");
    if (static_cast<int>(prob.families.size()) != prob.colours)
        throw std::invalid_argument("colouring search: one mask family per colour required");
}

} // namespace

DecideResult decide_colouring(const ColoringProblem & prob, long node_budget)
{
    validate(prob);
    ForbidEngine eng(prob, false, node_budget);
    DecideResult out;
    if (! eng.initial_propagation()) {
        out.satisfiable = false;
        out.nodes = eng.nodes;
        return out;
    }
    bool sat = eng.decide();
    out.nodes = eng.nodes;
    if (sat) {
        out.satisfiable = true;
        out.colouring = eng.witness;
        out.status = SearchStatus::Complete;
    }
    else {
        out.satisfiable = false;
        out.status = eng.budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::Complete;
    }
    return out;
}

MaxInResult max_in_colouring(const ColoringProblem & prob, long node_budget)
{
    validate(prob);
    ForbidEngine eng(prob, true, node_budget);
    MaxInResult out;
    if (! eng.initial_propagation())
        throw std::logic_error("max_in_colouring: initial propagation cannot fail with out allowed");
    eng.best = -1;
    eng.maximise();
    out.nodes = eng.nodes;
    out.best = std::max(eng.best, 0);
    out.assignment = eng.best_assignment;
    if (eng.best < 0)
        out.assignment.assign(prob.items, OUT);
    if (eng.budget_hit) {
        out.status = SearchStatus::BudgetExhausted;
        out.upper = std::max(out.best, eng.open_upper);
    }
    else {
        out.status = SearchStatus::Complete;
        out.upper = out.best;
    }
    return out;
}

namespace {

// Plain counting DFS for the violation-tolerant modes; used at small scale
// only (tens of items).
struct CountEngine
{
    const ColoringProblem & prob;
    long node_budget;

    enum class Mode { Caps, MinTotal, MinMax };
    Mode mode;
    const std::vector<long> * caps = nullptr;
    const std::vector<Rat> * weights = nullptr;

    struct Constraint
    {
        Bits mask;
        int size;
        int same = 0;
        int diff = 0;
    };
    std::vector<std::vector<Constraint>> cons; // per colour
    std::vector<std::vector<std::vector<int>>> at;
    std::vector<int> val;
    std::vector<int> order;
    std::vector<long> viol;
    long nodes = 0;
    bool budget_hit = false;

    bool found = false;
    long best_total = 0;
    Rat best_value;
    std::vector<long> best_viol;
    std::vector<int> best_colouring;

    CountEngine(const ColoringProblem & p, long budget) : prob(p), node_budget(budget)
    {
        const int r = prob.colours;
        cons.resize(r);
        at.assign(r, std::vector<std::vector<int>>(prob.items));
        for (int c = 0; c < r; ++c)
            for (const auto & m : prob.families[c]) {
                int id = static_cast<int>(cons[c].size());
                cons[c].push_back({m, m.count(), 0, 0});
                m.for_each([&](int item) { at[c][item].push_back(id); });
            }
        val.assign(prob.items, UNASSIGNED);
        viol.assign(r, 0);
        if (prob.branch_order.empty()) {
            order.resize(prob.items);
            for (int i = 0; i < prob.items; ++i)
                order[i] = i;
        }
        else
            order = prob.branch_order;
    }

    long total() const
    {
        long t = 0;
        for (long v : viol)
            t += v;
        return t;
    }

    Rat normalised() const
    {
        Rat m = 0;
        for (int c = 0; c < prob.colours; ++c) {
            Rat w = Rat(viol[c]) * (*weights)[c];
            if (w > m)
                m = w;
        }
        return m;
    }

    bool prune() const
    {
        switch (mode) {
            case Mode::Caps:
                for (int c = 0; c < prob.colours; ++c)
                    if (viol[c] > (*caps)[c])
                        return true;
                return false;
            case Mode::MinTotal:
                return found && total() >= best_total;
            case Mode::MinMax:
                return found && normalised() >= best_value;
        }
        return false;
    }

    void record()
    {
        switch (mode) {
            case Mode::Caps:
                found = true;
                best_viol = viol;
                best_colouring = val;
                break;
            case Mode::MinTotal:
                if (! found || total() < best_total) {
                    found = true;
                    best_total = total();
                    best_viol = viol;
                    best_colouring = val;
                }
                break;
            case Mode::MinMax:
                if (! found || normalised() < best_value) {
                    found = true;
                    best_value = normalised();
                    best_viol = viol;
                    best_colouring = val;
                }
                break;
        }
    }

    bool dfs(int depth)
    {
        if (++nodes > node_budget) {
            budget_hit = true;
            return false;
        }
        if (prune())
            return false;
        if (depth == prob.items) {
            record();
            return mode == Mode::Caps; // caps mode stops at the first witness
        }
        int item = order[depth];
        for (int c = 1; c <= prob.colours; ++c) {
            if (! prob.initial_domains.empty() &&
                ! (prob.initial_domains[item] & (std::uint32_t{1} << (c - 1))))
                continue;
            val[item] = c;
            int delta = 0;
            for (int id : at[c - 1][item]) {
                auto & cn = cons[c - 1][id];
                ++cn.same;
                if (cn.same == cn.size && cn.diff == 0)
                    ++delta;
            }
            viol[c - 1] += delta;
            for (int c2 = 0; c2 < prob.colours; ++c2)
                if (c2 != c - 1)
                    for (int id : at[c2][item])
                        ++cons[c2][id].diff;

            if (dfs(depth + 1))
                return true;

            viol[c - 1] -= delta;
            for (int id : at[c - 1][item])
                --cons[c - 1][id].same;
            for (int c2 = 0; c2 < prob.colours; ++c2)
                if (c2 != c - 1)
                    for (int id : at[c2][item])
                        --cons[c2][id].diff;
            val[item] = UNASSIGNED;
            if (budget_hit)
                return false;
        }
        return false;
    }
};

} // namespace

CountResult decide_with_caps(const ColoringProblem & prob, const std::vector<long> & caps, long node_budget)
{
    validate(prob);
    CountEngine eng(prob, node_budget);
    eng.mode = CountEngine::Mode::Caps;
    eng.caps = &caps;
    eng.dfs(0);
    CountResult out;
    out.nodes = eng.nodes;
    out.found = eng.found;
    out.status = (eng.budget_hit && ! eng.found) ? SearchStatus::BudgetExhausted : SearchStatus::Complete;
    if (eng.found) {
        out.violations = eng.best_viol;
        out.colouring = eng.best_colouring;
        out.total = 0;
        for (long v : eng.best_viol)
            out.total += v;
    }
    return out;
}

CountResult min_total_violations(const ColoringProblem & prob, long node_budget)
{
    validate(prob);
    CountEngine eng(prob, node_budget);
    eng.mode = CountEngine::Mode::MinTotal;
    eng.dfs(0);
    CountResult out;
    out.nodes = eng.nodes;
    out.found = eng.found;
    out.status = eng.budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::Complete;
    if (eng.found) {
        out.violations = eng.best_viol;
        out.colouring = eng.best_colouring;
        out.total = eng.best_total;
    }
    return out;
}

MinMaxResult min_max_normalised(const ColoringProblem & prob, const std::vector<Rat> & weights, long node_budget)
{
    validate(prob);
    if (static_cast<int>(weights.size()) != prob.colours)
        throw std::invalid_argument("min_max_normalised: one weight per colour required");
    CountEngine eng(prob, node_budget);
    eng.mode = CountEngine::Mode::MinMax;
    eng.weights = &weights;
    eng.dfs(0);
    MinMaxResult out;
    out.nodes = eng.nodes;
    out.status = eng.budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::Complete;
    if (eng.found) {
        out.value = eng.best_value;
        out.violations = eng.best_viol;
        out.colouring = eng.best_colouring;
    }
    return out;
}

} // namespace rcl
