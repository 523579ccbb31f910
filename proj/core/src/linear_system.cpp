#include <rcl/linear_system.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace rcl {

LinearSystem LinearSystem::make(int rows, int cols, std::vector<std::vector<long>> entries)
{
    if (rows < 1 || cols < 1)
        throw MatrixError("matrix dimensions must be positive");
    if (static_cast<int>(entries.size()) != rows)
        throw MatrixError("row count mismatch: got " + std::to_string(entries.size()) +
                          ", expected " + std::to_string(rows));
    for (const auto & row : entries)
        if (static_cast<int>(row.size()) != cols)
            throw MatrixError("row length mismatch: got " + std::to_string(row.size()) +
                              ", expected " + std::to_string(cols));
    return LinearSystem{rows, cols, std::move(entries)};
}

std::vector<Rat> LinearSystem::column(int j) const
{
    std::vector<Rat> out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i)
        out.emplace_back(entries[i][j - 1]);
    return out;
}

LinearSystem parse_matrix_text(std::istream & in)
{
    std::string line;
    int lineno = 0;
    int rows = -1, cols = -1;
    std::vector<std::vector<long>> entries;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<long> nums;
        long x;
        while (ls >> x)
            nums.push_back(x);
        if (! ls.eof()) {
            std::string tok;
            ls.clear();
            ls >> tok;
            throw MatrixError("line " + std::to_string(lineno) + ": non-integer token '" + tok + "'");
        }
        if (nums.empty())
            continue;
        if (rows < 0) {
            if (nums.size() != 2)
                throw MatrixError("line " + std::to_string(lineno) + ": header must be 'rows cols'");
            rows = static_cast<int>(nums[0]);
            cols = static_cast<int>(nums[1]);
            continue;
        }
        entries.push_back(std::move(nums));
    }
    if (rows < 0)
        throw MatrixError("missing 'rows cols' header");
    return LinearSystem::make(rows, cols, std::move(entries));
}

LinearSystem parse_matrix_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw MatrixError("cannot open matrix file " + path);
    try {
        return parse_matrix_text(in);
    }
    catch (const MatrixError & e) {
        throw MatrixError(path + ": " + e.what());
    }
}

std::string format_matrix_text(const LinearSystem & a)
{
    std::ostringstream out;
    out << a.rows << ' ' << a.cols << '\n';
    for (const auto & row : a.entries) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << '\n';
    }
    return out.str();
}

namespace {

EchelonForm echelon_of(std::vector<std::vector<Rat>> m, int rows, int cols)
{
    EchelonForm ef;
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < rows; ++r)
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(m[pivot_row], m[sel]);
        Rat inv = Rat(1) / m[pivot_row][col];
        for (int c = col; c < cols; ++c)
            m[pivot_row][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col] == 0)
                continue;
            Rat factor = m[r][col];
            for (int c = col; c < cols; ++c)
                m[r][c] -= factor * m[pivot_row][c];
        }
        ef.pivot_cols.push_back(col);
        ++pivot_row;
    }
    ef.rank = pivot_row;
    ef.mat = std::move(m);
    return ef;
}

std::vector<std::vector<Rat>> to_rat(const LinearSystem & a)
{
    std::vector<std::vector<Rat>> m(a.rows, std::vector<Rat>(a.cols));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            m[i][j] = a.entries[i][j];
    return m;
}

} // namespace

EchelonForm rank_and_echelon(const LinearSystem & a)
{
    return echelon_of(to_rat(a), a.rows, a.cols);
}

int rank_of_columns(const LinearSystem & a, const std::vector<int> & cols)
{
    if (cols.empty())
        return 0;
    std::vector<std::vector<Rat>> m(a.rows, std::vector<Rat>(cols.size()));
    for (int i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m[i][j] = a.entries[i][cols[j] - 1];
    return echelon_of(std::move(m), a.rows, static_cast<int>(cols.size())).rank;
}

bool satisfies_star(const LinearSystem & a)
{
    auto ef = rank_and_echelon(a);
    for (const auto & row : ef.mat) {
        int nz = 0;
        for (const auto & x : row)
            if (x != 0)
                ++nz;
        if (nz == 2)
            return false;
    }
    return true;
}

namespace {

// rank of the columns selected by mask, memoised
struct ColumnRankCache
{
    const LinearSystem & a;
    std::unordered_map<std::uint32_t, int> cache;

    int rank(std::uint32_t mask)
    {
        auto it = cache.find(mask);
        if (it != cache.end())
            return it->second;
        std::vector<int> cols;
        for (int j = 0; j < a.cols; ++j)
            if ((mask >> j) & 1)
                cols.push_back(j + 1);
        int r = rank_of_columns(a, cols);
        cache.emplace(mask, r);
        return r;
    }
};

} // namespace

ColumnsPropertyResult columns_property(const LinearSystem & a)
{
    const int k = a.cols;
    if (k > 14)
        throw BudgetExceeded("columns_property: column partition enumeration supports k <= 14");

    // column sums per subset, computed over rationals (integers here)
    std::vector<std::vector<Rat>> colv(k);
    for (int j = 0; j < k; ++j)
        colv[j] = a.column(j + 1);

    ColumnRankCache ranks{a, {}};
    const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);

    // sum(B) lies in span(cols(C)) iff appending it to A_C leaves the rank alone
    auto in_span = [&](std::uint32_t cmask, const std::vector<Rat> & v) {
        std::vector<std::vector<Rat>> m(a.rows);
        for (int i = 0; i < a.rows; ++i) {
            for (int j = 0; j < k; ++j)
                if ((cmask >> j) & 1)
                    m[i].push_back(a.entries[i][j]);
            m[i].push_back(v[i]);
        }
        int cols_count = static_cast<int>(m[0].size());
        return echelon_of(std::move(m), a.rows, cols_count).rank == ranks.rank(cmask);
    };

    // f(remaining) with complement-driven spans; 0 unknown, 1 true, 2 false
    std::unordered_map<std::uint32_t, char> memo;
    std::unordered_map<std::uint32_t, std::uint32_t> choice;
    auto rec = [&](auto && self, std::uint32_t remaining) -> bool {
        if (remaining == 0)
            return true;
        auto it = memo.find(remaining);
        if (it != memo.end())
            return it->second == 1;
        std::uint32_t cmask = full & ~remaining;
        bool ok = false;
        // iterate nonempty submasks of remaining
        for (std::uint32_t b = remaining; b; b = (b - 1) & remaining) {
            std::vector<Rat> sum(a.rows, 0);
            for (int j = 0; j < k; ++j)
                if ((b >> j) & 1)
                    for (int i = 0; i < a.rows; ++i)
                        sum[i] += colv[j][i];
            if (in_span(cmask, sum) && self(self, remaining & ~b)) {
                choice[remaining] = b;
                ok = true;
                break;
            }
        }
        memo[remaining] = ok ? 1 : 2;
        return ok;
    };

    ColumnsPropertyResult out;
    out.has_property = rec(rec, full);
    if (out.has_property) {
        std::uint32_t remaining = full;
        while (remaining) {
            std::uint32_t b = choice.at(remaining);
            std::vector<int> block;
            for (int j = 0; j < k; ++j)
                if ((b >> j) & 1)
                    block.push_back(j + 1);
            out.blocks.push_back(std::move(block));
            remaining &= ~b;
        }
    }
    return out;
}

IrredundanceResult is_irredundant(const LinearSystem & a, long search_bound, long enumeration_budget)
{
    IrredundanceResult out;
    std::vector<long> s;
    for (long v = 1; v <= search_bound; ++v)
        s.push_back(v);
    std::vector<SolutionTuple> sols;
    try {
        sols = enumerate_solutions(a, s, SolutionMode::KDistinct, {}, enumeration_budget);
    }
    catch (const BudgetExceeded &) {
        return out; // Unknown
    }
    if (! sols.empty()) {
        out.verdict = TriState::True;
        out.witness = sols.front().values;
        for (const auto & t : sols)
            if (t.values < out.witness)
                out.witness = t.values;
    }
    return out;
}

MAResult m_A(const LinearSystem & a)
{
    const int k = a.cols;
    if (k > 20)
        throw BudgetExceeded("m_A: subset enumeration supports k <= 20");
    int rank_a = rank_and_echelon(a).rank;
    ColumnRankCache ranks{a, {}};
    const std::uint32_t full = (1u << k) - 1;
    MAResult out;
    bool have = false;
    for (std::uint32_t w = 1; w <= full; ++w) {
        int wsize = __builtin_popcount(w);
        if (wsize < 2)
            continue;
        int rank_rest = ranks.rank(full & ~w);
        long denom = (wsize - 1) + rank_rest - rank_a;
        if (denom <= 0) {
            std::string ws;
            for (int j = 0; j < k; ++j)
                if ((w >> j) & 1)
                    ws += (ws.empty() ? "" : ",") + std::to_string(j + 1);
            throw MatrixError("m_A: nonpositive denominator at W = {" + ws +
                              "} (matrix violates the irredundant-(*) preconditions)");
        }
        Rat val = frac(wsize - 1, denom);
        std::vector<int> wcols;
        for (int j = 0; j < k; ++j)
            if ((w >> j) & 1)
                wcols.push_back(j + 1);
        if (! have || val > out.value ||
            (val == out.value && (wcols.size() < out.witness.size() ||
                                  (wcols.size() == out.witness.size() && wcols < out.witness)))) {
            out.value = val;
            out.witness = wcols;
            have = true;
        }
    }
    if (! have)
        throw MatrixError("m_A: no column subset of size >= 2 (k < 2)");
    return out;
}

MatrixFactReport matrix_fact_checks(const LinearSystem & a, bool irredundant_verified)
{
    if (! satisfies_star(a))
        throw MatrixError("matrix_fact_checks: matrix does not satisfy (*)");
    if (! irredundant_verified)
        throw MatrixError("matrix_fact_checks: irredundancy not verified by caller");
    const int k = a.cols;
    const int ell = rank_and_echelon(a).rank;
    MatrixFactReport rep;
    rep.clauses.resize(5);
    rep.clauses[0].name = "(i) rank drops by zero when one column is removed";
    rep.clauses[1].name = "(ii) ell - rank(A_Wbar) + 2 <= |W| for |W| >= 2";
    rep.clauses[2].name = "(iii) -|W| - rank(A_Wbar) <= -ell - 1 - (|W|-1)/m(A)";
    rep.clauses[3].name = "(iv) k >= ell + 2";
    rep.clauses[4].name = "(v) m(A) > 1";
    for (auto & c : rep.clauses)
        c.holds = true;

    Rat ma = m_A(a).value;
    ColumnRankCache ranks{a, {}};
    const std::uint32_t full = (1u << k) - 1;

    auto wcols_of = [&](std::uint32_t w) {
        std::vector<int> cols;
        for (int j = 0; j < k; ++j)
            if ((w >> j) & 1)
                cols.push_back(j + 1);
        return cols;
    };

    for (std::uint32_t w = 1; w <= full; ++w) {
        int wsize = __builtin_popcount(w);
        int rank_rest = ranks.rank(full & ~w);
        if (wsize == 1 && rank_rest != ell && rep.clauses[0].holds) {
            rep.clauses[0].holds = false;
            rep.clauses[0].witness_w = wcols_of(w);
        }
        if (wsize >= 2) {
            if (ell - rank_rest + 2 > wsize && rep.clauses[1].holds) {
                rep.clauses[1].holds = false;
                rep.clauses[1].witness_w = wcols_of(w);
            }
            Rat lhs = Rat(-wsize - rank_rest);
            Rat rhs = Rat(-ell - 1) - Rat(wsize - 1) / ma;
            if (lhs > rhs && rep.clauses[2].holds) {
                rep.clauses[2].holds = false;
                rep.clauses[2].witness_w = wcols_of(w);
            }
        }
    }
    rep.clauses[3].holds = (k >= ell + 2);
    rep.clauses[4].holds = (ma > 1);
    rep.all_hold = true;
    for (const auto & c : rep.clauses)
        rep.all_hold = rep.all_hold && c.holds;
    return rep;
}

std::vector<SolutionTuple> enumerate_solutions(const LinearSystem & a, const std::vector<long> & s,
                                               SolutionMode mode, const std::map<int, long> & fixed,
                                               long budget)
{
    auto ef = rank_and_echelon(a);
    const int k = a.cols;
    std::vector<char> is_pivot(k, 0);
    for (int c : ef.pivot_cols)
        is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < k; ++c)
        if (! is_pivot[c])
            free_cols.push_back(c);

    for (const auto & [pos, val] : fixed) {
        if (pos < 1 || pos > k)
            throw MatrixError("enumerate_solutions: fixed position out of range");
        (void) val;
    }

    std::set<long> s_set(s.begin(), s.end());
    // iteration domain per free column
    std::vector<std::vector<long>> domain(free_cols.size());
    double log_cost = 0;
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        auto it = fixed.find(free_cols[i] + 1);
        if (it != fixed.end()) {
            if (s_set.count(it->second))
                domain[i] = {it->second};
        }
        else
            domain[i] = s;
        if (domain[i].empty())
            return {};
        log_cost += std::log(static_cast<double>(domain[i].size()));
    }
    if (log_cost > std::log(static_cast<double>(budget)))
        throw BudgetExceeded("enumerate_solutions: |S|^(free variables) exceeds budget");

    std::vector<SolutionTuple> out;
    std::vector<long> x(k, 0);
    auto rec = [&](auto && self, std::size_t fi) -> void {
        if (fi == free_cols.size()) {
            // pivot variables are forced: row r gives x[pivot_r] = -sum over free cols
            for (int r = 0; r < ef.rank; ++r) {
                Rat v = 0;
                for (int c : free_cols)
                    v -= ef.mat[r][c] * Rat(x[c]);
                if (v.get_den() != 1)
                    return;
                if (! v.get_num().fits_slong_p())
                    return;
                long xv = v.get_num().get_si();
                int pc = ef.pivot_cols[r];
                if (! s_set.count(xv))
                    return;
                auto it = fixed.find(pc + 1);
                if (it != fixed.end() && it->second != xv)
                    return;
                x[pc] = xv;
            }
            SolutionTuple t;
            t.values.assign(x.begin(), x.end());
            std::vector<long> sorted = t.values;
            std::sort(sorted.begin(), sorted.end());
            t.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
            if (mode == SolutionMode::KDistinct && ! t.distinct)
                return;
            out.push_back(std::move(t));
            return;
        }
        for (long v : domain[fi]) {
            x[free_cols[fi]] = v;
            self(self, fi + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Int lemma_solution_bound(const LinearSystem & a, std::size_t set_size)
{
    int rank = rank_and_echelon(a).rank;
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), set_size, a.cols - rank);
    return out;
}

Int corollary_solution_bound(const LinearSystem & a, const std::vector<int> & fixed_positions,
                             std::size_t set_size)
{
    std::vector<int> rest;
    std::set<int> w(fixed_positions.begin(), fixed_positions.end());
    for (int c = 1; c <= a.cols; ++c)
        if (! w.count(c))
            rest.push_back(c);
    int rank_rest = rank_of_columns(a, rest);
    long exp = a.cols - static_cast<long>(fixed_positions.size()) - rank_rest;
    if (exp < 0)
        return 1; // at most one solution once everything is pinned
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), set_size, exp);
    return out;
}

} // namespace rcl
