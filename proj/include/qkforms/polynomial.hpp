#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "qkforms/rational.hpp"

namespace qkforms {

// Monomial in up to 16 variables, exponents packed one nibble per variable.
using Monomial = std::uint64_t;

inline constexpr int kMaxVars = 16;

inline int monomial_exponent(Monomial m, int var) { return int((m >> (4 * var)) & 0xF); }

inline Monomial monomial_var(int var, int exp = 1) {
    if (var < 0 || var >= kMaxVars) throw std::invalid_argument("monomial_var: variable out of range");
    return Monomial(exp) << (4 * var);
}

inline int monomial_degree(Monomial m) {
    int d = 0;
    while (m) { d += int(m & 0xF); m >>= 4; }
    return d;
}

inline Monomial monomial_mul(Monomial a, Monomial b) {
    for (int v = 0; v < kMaxVars; ++v)
        if (monomial_exponent(a, v) + monomial_exponent(b, v) > 15)
            throw std::overflow_error("monomial_mul: exponent overflow");
    return a + b;
}

inline std::string monomial_to_string(Monomial m) {
    if (m == 0) return "1";
    std::string s;
    for (int v = 0; v < kMaxVars; ++v) {
        int e = monomial_exponent(m, v);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(v + 1);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

/// Multivariate polynomial with exact rational coefficients; canonical
/// monomial ordering, no zero terms stored.
class Polynomial {
public:
    using Map = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(Rational c) { add_term(0, std::move(c)); }

    static Polynomial variable(int v) {
        Polynomial p;
        p.add_term(monomial_var(v), Rational(1));
        return p;
    }
    static Polynomial constant(Rational c) { return Polynomial(std::move(c)); }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(Monomial m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, monomial_degree(m));
        return d;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) { t_.clear(); return *this; }
        for (auto& [m, c] : t_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { a *= s; return a; }
    friend Polynomial operator-(Polynomial a) { a *= Rational(-1); return a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_)
                r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }

    bool operator==(const Polynomial& o) const { return t_ == o.t_; }

    /// Partial derivative with respect to variable v.
    Polynomial derivative(int v) const {
        Polynomial r;
        for (const auto& [m, c] : t_) {
            int e = monomial_exponent(m, v);
            if (e == 0) continue;
            r.add_term(m - monomial_var(v), Rational(e) * c);
        }
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + monomial_to_string(m);
        }
        return s;
    }

private:
    Map t_;
};

} // namespace qkforms
