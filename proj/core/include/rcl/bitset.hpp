#pragma once

#include <cstdint>
#include <vector>

namespace rcl {

// Fixed-universe bitset over word vectors; universe size chosen at
// construction. All search hot loops run on these.
struct Bits
{
    std::vector<std::uint64_t> w;
    int n = 0;

    Bits() = default;
    explicit Bits(int universe) : w((universe + 63) / 64, 0), n(universe) {}

    void set(int i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    int count() const
    {
        int c = 0;
        for (auto x : w)
            c += __builtin_popcountll(x);
        return c;
    }

    bool any() const
    {
        for (auto x : w)
            if (x)
                return true;
        return false;
    }

    bool intersects(const Bits & o) const
    {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i])
                return true;
        return false;
    }

    bool subset_of(const Bits & o) const
    {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i])
                return false;
        return true;
    }

    Bits & operator|=(const Bits & o)
    {
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] |= o.w[i];
        return *this;
    }

    Bits & operator&=(const Bits & o)
    {
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] &= o.w[i];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits & b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits & b) { return a &= b; }

    friend bool operator==(const Bits & a, const Bits & b) { return a.w == b.w; }
    friend auto operator<=>(const Bits & a, const Bits & b) { return a.w <=> b.w; }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < w.size(); ++wi) {
            std::uint64_t x = w[wi];
            while (x) {
                int b = __builtin_ctzll(x);
                f(static_cast<int>(wi * 64 + b));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }
};

} // namespace rcl
