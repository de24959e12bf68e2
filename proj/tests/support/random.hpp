#pragma once

// Seeded generators for property tests.

#include <kmo/octonion.hpp>
#include <kmo/quad.hpp>
#include <kmo/rational.hpp>

#include <cstdint>
#include <random>

namespace kmo::test {

class Gen {
public:
    explicit Gen(std::uint64_t seed = 0x6b6d6fULL) : rng_(seed) {}

    long int_in(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 9, long max_den = 6)
    {
        return Rational(BigInt(int_in(-bound, bound)), BigInt(int_in(1, max_den)));
    }

    QuadElem quad(std::int64_t k) { return {k, rational(), rational()}; }

    Octonion<Rational> integer_octonion(long bound = 9)
    {
        return Octonion<Rational>::from_fn([&](std::size_t) { return Rational(int_in(-bound, bound)); });
    }

    Octonion<Rational> rational_octonion()
    {
        return Octonion<Rational>::from_fn([&](std::size_t) { return rational(); });
    }

    Octonion<QuadElem> quad_octonion(std::int64_t k)
    {
        return Octonion<QuadElem>::from_fn([&](std::size_t) { return quad(k); });
    }

private:
    std::mt19937_64 rng_;
};

} // namespace kmo::test
