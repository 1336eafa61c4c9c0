#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qkforms/blade.hpp"
#include "qkforms/rational.hpp"

namespace qkforms {

/// Sparse multivector over R^n with exact rational coefficients.
/// Zero coefficients are never stored; blades carry canonical orientation.
class Form {
public:
    using Map = std::map<BladeMask, Rational>;

    explicit Form(int n) : n_(n) {
        if (n < 0 || n > kMaxDim) throw std::invalid_argument("Form: dimension out of range");
    }

    static Form zero(int n) { return Form(n); }

    static Form blade(int n, BladeMask b, Rational c = Rational(1)) {
        Form f(n);
        f.add_term(b, std::move(c));
        return f;
    }

    /// Basis one-form e_i (0-based index).
    static Form basis(int n, int i) {
        if (i < 0 || i >= n) throw std::invalid_argument("Form::basis: index out of range");
        return blade(n, BladeMask(1) << i);
    }

    static Form scalar(int n, Rational c) { return blade(n, 0, std::move(c)); }

    int dimension() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    const Map& terms() const { return c_; }
    std::size_t term_count() const { return c_.size(); }

    void add_term(BladeMask b, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = c_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    Rational coefficient(BladeMask b) const {
        auto it = c_.find(b);
        return it == c_.end() ? Rational(0) : it->second;
    }

    Form& operator+=(const Form& o) {
        check_same_dim(o);
        for (const auto& [b, c] : o.c_) add_term(b, c);
        return *this;
    }
    Form& operator-=(const Form& o) {
        check_same_dim(o);
        for (const auto& [b, c] : o.c_) add_term(b, -c);
        return *this;
    }
    Form& operator*=(const Rational& s) {
        if (s == 0) { c_.clear(); return *this; }
        for (auto& [b, c] : c_) c *= s;
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { a += b; return a; }
    friend Form operator-(Form a, const Form& b) { a -= b; return a; }
    friend Form operator*(const Rational& s, Form a) { a *= s; return a; }
    friend Form operator-(Form a) { a *= Rational(-1); return a; }

    bool operator==(const Form& o) const { return n_ == o.n_ && c_ == o.c_; }

    /// Degree when homogeneous, std::nullopt otherwise (zero counts as any degree).
    std::optional<int> homogeneous_degree() const {
        std::optional<int> deg;
        for (const auto& [b, c] : c_) {
            int d = blade_degree(b);
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
        return deg;
    }

    bool is_homogeneous(int p) const {
        for (const auto& [b, c] : c_)
            if (blade_degree(b) != p) return false;
        return true;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [b, c] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + blade_to_string(b);
        }
        return s;
    }

private:
    void check_same_dim(const Form& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Form: ambient dimension mismatch");
    }

    int n_;
    Map c_;
};

/// Exterior product.  Bilinear, sign-correct under canonical orientation.
inline Form wedge(const Form& u, const Form& v) {
    if (u.dimension() != v.dimension())
        throw std::invalid_argument("wedge: ambient dimension mismatch");
    Form out(u.dimension());
    for (const auto& [a, ca] : u.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            int s = wedge_sign(a, b);
            if (s == 0) continue;
            out.add_term(a | b, Rational(s) * ca * cb);
        }
    }
    return out;
}

/// Interior product x -| u with a one-form x (vectors and one-forms are
/// identified through the metric).  Graded anti-derivation of degree -1.
inline Form contract(const Form& x, const Form& u) {
    if (x.dimension() != u.dimension())
        throw std::invalid_argument("contract: ambient dimension mismatch");
    if (!x.is_homogeneous(1))
        throw std::invalid_argument("contract: contractor must be a one-form");
    Form out(u.dimension());
    for (const auto& [xb, xc] : x.terms()) {
        int i = std::countr_zero(xb);
        for (const auto& [b, c] : u.terms()) {
            int s = contraction_sign(i, b);
            if (s == 0) continue;
            out.add_term(b & ~xb, Rational(s) * xc * c);
        }
    }
    return out;
}

/// Inner product making canonical blades orthonormal (determinant convention).
inline Rational inner(const Form& u, const Form& v) {
    if (u.dimension() != v.dimension())
        throw std::invalid_argument("inner: ambient dimension mismatch");
    auto du = u.homogeneous_degree();
    auto dv = v.homogeneous_degree();
    if (du && dv && !u.is_zero() && !v.is_zero() && *du != *dv)
        throw std::invalid_argument("inner: degree mismatch");
    Rational r(0);
    const auto& small = u.term_count() <= v.term_count() ? u : v;
    const auto& big   = u.term_count() <= v.term_count() ? v : u;
    for (const auto& [b, c] : small.terms()) r += c * big.coefficient(b);
    return r;
}

/// Standard so(n) action of a 2-form w on forms:
/// (X^Y) . u = Y^(X -| u) - X^(Y -| u), extended bilinearly in w.
inline Form so_action(const Form& w, const Form& u) {
    if (w.dimension() != u.dimension())
        throw std::invalid_argument("so_action: ambient dimension mismatch");
    if (!w.is_homogeneous(2))
        throw std::invalid_argument("so_action: actor must be a 2-form");
    const int n = u.dimension();
    Form out(n);
    for (const auto& [wb, wc] : w.terms()) {
        int i = std::countr_zero(wb);                  // lower index of the 2-blade
        int j = std::countr_zero(wb & (wb - 1));       // upper index
        BladeMask bi = BladeMask(1) << i, bj = BladeMask(1) << j;
        for (const auto& [b, c] : u.terms()) {
            // e_j ^ (e_i -| b)
            int si = contraction_sign(i, b);
            if (si != 0) {
                BladeMask rest = b & ~bi;
                int sw = wedge_sign(bj, rest);
                if (sw != 0) out.add_term(bj | rest, Rational(si * sw) * wc * c);
            }
            // - e_i ^ (e_j -| b)
            int sj = contraction_sign(j, b);
            if (sj != 0) {
                BladeMask rest = b & ~bj;
                int sw = wedge_sign(bi, rest);
                if (sw != 0) out.add_term(bi | rest, Rational(-sj * sw) * wc * c);
            }
        }
    }
    return out;
}

} // namespace qkforms
