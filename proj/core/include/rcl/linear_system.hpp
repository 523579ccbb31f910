#pragma once

#include <rcl/errors.hpp>
#include <rcl/rational.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rcl {

struct MatrixError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// ell x k integer matrix A, the system L(A): Ax = 0. Entries are small
// exact integers; all elimination runs over rationals.
struct LinearSystem
{
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<long>> entries;

    static LinearSystem make(int rows, int cols, std::vector<std::vector<long>> entries);
    std::vector<Rat> column(int j) const; // 1-based
};

LinearSystem parse_matrix_text(std::istream & in);
LinearSystem parse_matrix_file(const std::string & path);
std::string format_matrix_text(const LinearSystem & a);

struct EchelonForm
{
    std::vector<std::vector<Rat>> mat; // reduced row echelon form
    int rank = 0;
    std::vector<int> pivot_cols; // 0-based, one per pivot row
};

// Deterministic reduced row echelon form: leftmost pivot column, smallest
// available row, pivots normalised to 1.
EchelonForm rank_and_echelon(const LinearSystem & a);

// rank of the column-submatrix indexed by cols (1-based ids)
int rank_of_columns(const LinearSystem & a, const std::vector<int> & cols);

// no echelon row with exactly two nonzero entries
bool satisfies_star(const LinearSystem & a);

struct ColumnsPropertyResult
{
    bool has_property = false;
    std::vector<std::vector<int>> blocks; // ordered partition D_1, D_2, ... (1-based column ids)
};

// Rado's columns property, decided by subset dynamic programming; equivalent
// to partition regularity.
ColumnsPropertyResult columns_property(const LinearSystem & a);
inline bool is_partition_regular(const LinearSystem & a) { return columns_property(a).has_property; }

enum class TriState { True, False, Unknown };

struct IrredundanceResult
{
    TriState verdict = TriState::Unknown; // never False: absence is not decidable by bounded search
    std::vector<long> witness;            // a k-distinct positive solution when True
};

IrredundanceResult is_irredundant(const LinearSystem & a, long search_bound,
                                  long enumeration_budget = 20'000'000);

struct MAResult
{
    Rat value;
    std::vector<int> witness; // maximizing W (1-based column ids)
};

// m(A): max over |W| >= 2 of (|W|-1) / (|W|-1 + rank(A_{complement W}) - rank(A)).
// Throws naming the offending W when a denominator fails to be positive.
MAResult m_A(const LinearSystem & a);

struct MatrixFactClause
{
    std::string name;
    bool holds = false;
    std::vector<int> witness_w; // violating W if any
};

struct MatrixFactReport
{
    std::vector<MatrixFactClause> clauses; // (i)..(v)
    bool all_hold = false;
};

// The five matrix facts for irredundant matrices with property (*), checked
// by direct enumeration over column subsets. Requires satisfies_star;
// irredundancy must have been established by the caller.
MatrixFactReport matrix_fact_checks(const LinearSystem & a, bool irredundant_verified);

enum class SolutionMode { KDistinct, Strong };

struct SolutionTuple
{
    std::vector<long> values;
    bool distinct = false;
};

// All solutions of Ax = 0 with every coordinate in S, honouring fixed
// coordinates (1-based position -> value). Mode Strong enumerates every
// solution; KDistinct keeps only pairwise-distinct tuples.
std::vector<SolutionTuple> enumerate_solutions(const LinearSystem & a, const std::vector<long> & s,
                                               SolutionMode mode,
                                               const std::map<int, long> & fixed = {},
                                               long budget = 20'000'000);

Int lemma_solution_bound(const LinearSystem & a, std::size_t set_size);
Int corollary_solution_bound(const LinearSystem & a, const std::vector<int> & fixed_positions,
                             std::size_t set_size);

} // namespace rcl
