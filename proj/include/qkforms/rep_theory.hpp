#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkforms/rational.hpp"

namespace qkforms {

/// Dominant weight of sp(m): non-increasing non-negative integer entries.
struct HighestWeight {
    std::vector<int> entries;

    explicit HighestWeight(std::vector<int> e) : entries(std::move(e)) {
        int prev = entries.empty() ? 0 : entries.front();
        for (int v : entries) {
            if (v < 0 || v > prev)
                throw std::invalid_argument("HighestWeight: entries must be non-increasing and >= 0");
            prev = v;
        }
    }
};

/// Half sum of positive roots of sp(m): rho = (m, m-1, ..., 1).
inline HighestWeight rho(int m) {
    if (m < 1) throw std::invalid_argument("rho: m must be >= 1");
    std::vector<int> e(m);
    for (int i = 0; i < m; ++i) e[i] = m - i;
    return HighestWeight(std::move(e));
}

/// Casimir eigenvalue c_pi with Cas = -c_pi id, in the normalization induced
/// by the negative Killing form of sp(m):
///   c_pi = ((lam,lam) + (lam,2 rho)) / (4(m+1))
/// with the standard scalar product on R^m.
inline Rational casimir_spm_killing(const HighestWeight& lam, int m) {
    if (int(lam.entries.size()) > m)
        throw std::invalid_argument("casimir_spm_killing: weight longer than rank");
    long long quad = 0, lin = 0;
    for (std::size_t i = 0; i < lam.entries.size(); ++i) {
        long long v = lam.entries[i];
        quad += v * v;
        lin += 2 * v * (m - (long long)i); // rho_i = m + 1 - (i+1)
    }
    return Rational(quad + lin) / Rational(4 * (m + 1));
}

/// sp(1) Casimir eigenvalue on Sym^k H (Killing normalization): k(k+2)/8.
inline Rational casimir_sp1_symH(int k) {
    if (k < 0) throw std::invalid_argument("casimir_sp1_symH: k must be >= 0");
    return Rational(k) * Rational(k + 2) / Rational(8);
}

/// Closed forms from the eigenvalue table; each one cross-checks against
/// casimir_spm_killing on the corresponding weight.
inline Rational casimir_symk_E(int k, int m) {
    if (k < 0) throw std::invalid_argument("casimir_symk_E: k must be >= 0");
    Rational v = Rational(k) * Rational(k + 2 * m) / Rational(4 * (m + 1));
    std::vector<int> w(m, 0);
    if (m >= 1) w[0] = k;
    if (v != casimir_spm_killing(HighestWeight(w), m))
        throw std::logic_error("casimir_symk_E: closed form disagrees with weight formula");
    return v;
}

inline std::vector<int> label_weight(int a, int b, int m) {
    std::vector<int> w(m, 0);
    for (int i = 0; i < b; ++i) w[i] = 2;
    for (int i = b; i < a; ++i) w[i] = 1;
    return w;
}

inline Rational casimir_lambda_a(int a, int m) {
    if (a < 0 || a > m) throw std::invalid_argument("casimir_lambda_a: need 0 <= a <= m");
    Rational v = Rational(a) * Rational(2 - a + 2 * m) / Rational(4 * (m + 1));
    if (v != casimir_spm_killing(HighestWeight(label_weight(a, 0, m)), m))
        throw std::logic_error("casimir_lambda_a: closed form disagrees with weight formula");
    return v;
}

inline Rational casimir_lambda_ab(int a, int b, int m) {
    if (b < 0 || b > a || a > m) throw std::invalid_argument("casimir_lambda_ab: need 0 <= b <= a <= m");
    Rational v = Rational(2 * b - a * a - b * b + 2 * (a + b) * (m + 1)) / Rational(4 * (m + 1));
    if (v != casimir_spm_killing(HighestWeight(label_weight(a, b, m)), m))
        throw std::logic_error("casimir_lambda_ab: closed form disagrees with weight formula");
    return v;
}

/// J eigenvalue on the Sym^k H factor: -k(k+2).
inline Rational eigenvalue_J(int k) {
    if (k < 0) throw std::invalid_argument("eigenvalue_J: k must be >= 0");
    return Rational(-k) * Rational(k + 2);
}

/// C eigenvalue P(k,a,b,p) on Sym^k H x Lam^{a,b}_0 E inside p-forms:
///   P = ( p(4m-p+6) - k(k+2) - 4b + 2a^2 + 2b^2 - 4(a+b)(m+1) ) / 4.
inline Rational eigenvalue_C(int k, int a, int b, int p, int m) {
    long long t = (long long)p * (4LL * m - p + 6) - (long long)k * (k + 2)
                - 4LL * b + 2LL * a * a + 2LL * b * b - 4LL * (a + b) * (m + 1);
    return Rational(t) / Rational(4);
}

/// Weyl dimension formula for sp(m); positive roots e_i - e_j, e_i + e_j
/// (i < j) and 2 e_i.
inline long long weyl_dimension(const HighestWeight& lam, int m) {
    if (int(lam.entries.size()) > m)
        throw std::invalid_argument("weyl_dimension: weight longer than rank");
    std::vector<long long> l(m), r(m);
    for (int i = 0; i < m; ++i) {
        long long li = (i < int(lam.entries.size())) ? lam.entries[i] : 0;
        l[i] = li + (m - i); // lambda + rho
        r[i] = m - i;        // rho
    }
    Rational dim(1);
    for (int i = 0; i < m; ++i) {
        dim *= Rational(l[i]) / Rational(r[i]); // root 2 e_i
        for (int j = i + 1; j < m; ++j) {
            dim *= Rational(l[i] - l[j]) / Rational(r[i] - r[j]);
            dim *= Rational(l[i] + l[j]) / Rational(r[i] + r[j]);
        }
    }
    if (denominator(dim) != 1 || dim <= 0)
        throw std::logic_error("weyl_dimension: non-integral result");
    return numerator(dim).convert_to<long long>();
}

/// Label (k,a,b) of a candidate summand Sym^k H x Lam^{a,b}_0 E.
struct RepLabel {
    int k = 0, a = 0, b = 0;

    bool operator==(const RepLabel& o) const { return k == o.k && a == o.a && b == o.b; }
    bool operator<(const RepLabel& o) const {
        if (k != o.k) return k < o.k;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }

    HighestWeight weight(int m) const { return HighestWeight(label_weight(a, b, m)); }

    /// Complex dimension (k+1) * dim Lam^{a,b}_0 E.
    long long dim(int m) const { return (k + 1) * weyl_dimension(weight(m), m); }

    std::string str() const {
        return "(" + std::to_string(k) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

/// J/C eigenvalue pair attached to a label at degree p.
struct EigenPair {
    Rational j, c;
    bool operator==(const EigenPair& o) const { return j == o.j && c == o.c; }
    bool operator<(const EigenPair& o) const { return j != o.j ? j < o.j : c < o.c; }
};

inline EigenPair eigenpair(const RepLabel& l, int p, int m) {
    return {eigenvalue_J(l.k), eigenvalue_C(l.k, l.a, l.b, p, m)};
}

/// Necessary admissibility conditions for Sym^k H x Lam^{a,b}_0 E to occur
/// in degree-p forms.  This is a candidate superset: actual multiplicities
/// (possibly zero) come from the decomposition engine.
inline bool admissible(int k, int a, int b, int p, int m) {
    if (k < 0 || b < 0 || b > a || a > m) return false;
    if (2 * b > std::min(p - k, 4 * m - p - k)) return false;
    if (2 * a > std::min(p + k, 4 * m - p + k)) return false;
    if (((k ^ p) & 1) || ((k ^ (a + b)) & 1)) return false; // same parity
    return true;
}

inline std::vector<RepLabel> admissible_labels(int p, int m) {
    if (p < 0 || p > 4 * m) throw std::invalid_argument("admissible_labels: need 0 <= p <= 4m");
    std::vector<RepLabel> out;
    int kmax = std::min(p, 4 * m - p);
    for (int k = 0; k <= kmax; ++k)
        for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= a; ++b)
                if (admissible(k, a, b, p, m)) out.push_back({k, a, b});
    return out;
}

/// Adjacency rule for d and delta: |k-k'| = 1 and |a-a'| + |b-b'| = 1.
inline bool adjacent(const RepLabel& A, const RepLabel& B) {
    return std::abs(A.k - B.k) == 1 && std::abs(A.a - B.a) + std::abs(A.b - B.b) == 1;
}

} // namespace qkforms
