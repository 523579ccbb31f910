#include <rcl/rational.hpp>

#include <stdexcept>

namespace rcl {

Rat rat_from_string(const std::string & s)
{
    auto base10 = [](const std::string & digits) { return Int(digits, 10); };
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat q(base10(s.substr(0, slash)), base10(s.substr(slash + 1)));
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal, e.g. 0.5 -> 5/10
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t places = s.size() - dot - 1;
        Int den = 1;
        for (std::size_t i = 0; i < places; ++i)
            den *= 10;
        Rat q(base10(digits), den);
        q.canonicalize();
        return q;
    }
    return Rat(base10(s));
}

std::string rat_to_string(const Rat & q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_pow(const Rat & base, unsigned long exp)
{
    Rat out = 1;
    Rat b = base;
    unsigned long e = exp;
    while (e != 0) {
        if (e & 1)
            out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

Int int_below(const Rat & q)
{
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (Rat(fl) == q)
        return fl - 1;
    return fl;
}

Int binomial(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int factorial(unsigned long n)
{
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Int floor_pow_scaled(unsigned long n, unsigned long num, unsigned long den, unsigned shift)
{
    if (den == 0)
        throw std::invalid_argument("floor_pow_scaled: zero root degree");
    // floor((n^num * 2^(shift*den))^(1/den))
    Int base(static_cast<unsigned long>(n));
    Int powed;
    mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), num);
    mpz_mul_2exp(powed.get_mpz_t(), powed.get_mpz_t(), static_cast<mp_bitcnt_t>(shift) * den);
    Int root;
    mpz_root(root.get_mpz_t(), powed.get_mpz_t(), den);
    return root;
}

double rat_to_double(const Rat & q)
{
    return q.get_d();
}

} // namespace rcl
