#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <random>
#include <string>

namespace qkforms {

// All arithmetic in the engine is exact. Every identity is asserted as
// equality of rationals, never as a tolerance.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

inline Integer numerator(const Rational& q)   { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) { return q.str(); }

/// Deterministic stream of small rationals (seed is recorded in reports).
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    /// Nonzero rational with numerator in [-9,9] and denominator in [1,4].
    Rational next_nonzero() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        for (;;) {
            int p = num(rng_);
            if (p == 0) continue;
            return Rational(p, den(rng_));
        }
    }

    /// Rational in the same range, possibly zero.
    Rational next() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        return Rational(num(rng_), den(rng_));
    }

    std::uint64_t next_index(std::uint64_t bound) {
        std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
        return d(rng_);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace qkforms
