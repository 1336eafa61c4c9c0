#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkforms {

// A blade is a subset of {0,..,n-1} stored as a bit mask, oriented so that
// its factors appear with strictly increasing index.  All sign bookkeeping
// happens at construction time via transposition parity.
using BladeMask = std::uint32_t;

inline constexpr int kMaxDim = 31;

inline int blade_degree(BladeMask b) { return std::popcount(b); }

/// Parity sign (+1/-1) of moving every factor of `b` past the factors of `a`
/// into one sorted product; 0 when the supports overlap.
inline int wedge_sign(BladeMask a, BladeMask b) {
    if (a & b) return 0;
    // Count inversions: pairs (i in a, j in b) with i > j.
    int inversions = 0;
    BladeMask bb = b;
    while (bb) {
        BladeMask low = bb & (~bb + 1); // lowest set bit of b
        BladeMask above = a & ~(low - 1) & ~low;
        inversions += std::popcount(above);
        bb ^= low;
    }
    return (inversions & 1) ? -1 : +1;
}

/// Sign of e_i -| e_S (zero if i not in S): (-1)^(number of factors before i).
inline int contraction_sign(int i, BladeMask s) {
    BladeMask bit = BladeMask(1) << i;
    if (!(s & bit)) return 0;
    int before = std::popcount(s & (bit - 1));
    return (before & 1) ? -1 : +1;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
    }
    return r;
}

/// Canonical blade ordering of fixed degree = increasing bit pattern
/// (colexicographic on index sets).  rank/unrank use the combinatorial
/// number system so matrices over a blade basis are reproducible.
inline std::uint64_t blade_rank(BladeMask b) {
    std::uint64_t r = 0;
    int seen = 0;
    for (int i = 0; i < kMaxDim; ++i) {
        if (b & (BladeMask(1) << i)) {
            ++seen;
            r += binomial(i, seen);
        }
    }
    return r;
}

inline BladeMask blade_unrank(int n, int p, std::uint64_t rank) {
    BladeMask b = 0;
    for (int slot = p; slot >= 1; --slot) {
        int i = slot - 1;
        while (i + 1 < n && binomial(i + 1, slot) <= rank) ++i;
        b |= BladeMask(1) << i;
        rank -= binomial(i, slot);
    }
    return b;
}

/// All degree-p blades in canonical order.
inline std::vector<BladeMask> blades_of_degree(int n, int p) {
    if (n < 0 || n > kMaxDim) throw std::invalid_argument("blades_of_degree: dimension out of range");
    std::vector<BladeMask> out;
    if (p < 0 || p > n) return out;
    out.reserve(binomial(n, p));
    if (p == 0) {
        out.push_back(0);
        return out;
    }
    BladeMask b = (BladeMask(1) << p) - 1;
    BladeMask limit = BladeMask(1) << n;
    while (b < limit) {
        out.push_back(b);
        // Gosper's hack: next bit pattern with the same popcount.
        BladeMask c = b & (~b + 1);
        BladeMask r = b + c;
        b = (((r ^ b) >> 2) / c) | r;
    }
    return out;
}

inline std::string blade_to_string(BladeMask b) {
    if (b == 0) return "1";
    std::string s;
    for (int i = 0; i < kMaxDim; ++i) {
        if (b & (BladeMask(1) << i)) {
            if (!s.empty()) s += "^";
            s += "e" + std::to_string(i + 1);
        }
    }
    return s;
}

} // namespace qkforms
