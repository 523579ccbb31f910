#pragma once

// Exact rational arithmetic for all density computations. Everything that
// feeds a verdict or a tie-break is a Rat; floating point only appears in
// statistical reporting (confidence intervals, Chernoff evaluations).

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rcl {

using Int = mpz_class;
using Rat = mpq_class;

Rat rat_from_string(const std::string & s);
std::string rat_to_string(const Rat & q);

// mpq_class's two-integer constructor skips canonicalisation, which poisons
// later comparisons; every ratio is built through here instead.
template <typename N, typename D>
Rat frac(const N & num, const D & den)
{
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat & base, unsigned long exp);

// Largest integer strictly below q (used for "< threshold" integer caps).
Int int_below(const Rat & q);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// floor(n^(num/den) * 2^shift) as an integer, exact (via mpz root).
Int floor_pow_scaled(unsigned long n, unsigned long num, unsigned long den, unsigned shift);

double rat_to_double(const Rat & q);

} // namespace rcl
