#pragma once

#include <string>
#include <vector>

#include "qkforms/matrix.hpp"
#include "qkforms/quaternionic.hpp"
#include "qkforms/rep_theory.hpp"
#include "qkforms/report.hpp"

namespace qkforms {

/// Basis of a Lie subalgebra of so(n) realized as 2-forms, together with its
/// exact Gram matrix under the blade inner product and that matrix's inverse.
/// The dual-basis Casimir below needs no orthonormalization, so everything
/// stays rational.
struct SubalgebraBasis {
    std::vector<Form> elements;
    Matrix gram;
    Matrix gram_inv;

    std::size_t size() const { return elements.size(); }
};

inline SubalgebraBasis make_subalgebra_basis(std::vector<Form> elements) {
    SubalgebraBasis basis;
    basis.elements = std::move(elements);
    const std::size_t d = basis.elements.size();
    basis.gram = Matrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            basis.gram.at(i, j) = inner(basis.elements[i], basis.elements[j]);
    basis.gram_inv = inverse(basis.gram); // throws on singular gram
    return basis;
}

/// sp(1) inside so(4m): exactly the three fundamental forms.
inline SubalgebraBasis sp1_basis(const OperatorFamily& fam) {
    return make_subalgebra_basis({fam.omega[0], fam.omega[1], fam.omega[2]});
}

/// so(n) itself: canonical 2-blades (orthonormal, gram = id).
inline SubalgebraBasis so_basis(int n) {
    std::vector<Form> el;
    for (BladeMask b : blades_of_degree(n, 2)) el.push_back(Form::blade(n, b));
    return make_subalgebra_basis(std::move(el));
}

namespace detail {

/// Matrix of the endomorphism so_action(w, .) restricted to one-forms.
inline Matrix endo_of_two_form(const Form& w) {
    const int n = w.dimension();
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) {
        Form img = so_action(w, Form::basis(n, k));
        for (const auto& [b, c] : img.terms()) m.at(std::countr_zero(b), k) = c;
    }
    return m;
}

/// Inverse of endo_of_two_form: skew matrix back to a 2-form.
inline Form two_form_of_endo(const Matrix& a) {
    const int n = int(a.rows());
    Form w(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            // so_action(e_i ^ e_j, e_i) = e_j, so the (j,i) entry carries the coefficient
            w.add_term((BladeMask(1) << i) | (BladeMask(1) << j), a.at(j, i));
    return w;
}

} // namespace detail

/// sp(m) inside so(4m): the commutant of {J1, J2, J3} among skew
/// endomorphisms, computed as an exact nullspace over the 2-form coordinates.
inline SubalgebraBasis spm_basis(const QuaternionicFrame& f) {
    const int n = f.n;
    auto two_blades = blades_of_degree(n, 2);
    const std::size_t cols = two_blades.size();
    // rows: for each alpha and each basis vector e_k, the n components of
    // A(J_a e_k) - J_a(A e_k) must vanish.
    Matrix sys(3 * n * n, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        Form w = Form::blade(n, two_blades[c]);
        for (int a = 0; a < 3; ++a) {
            for (int k = 0; k < n; ++k) {
                Form lhs = so_action(w, f.J[a].apply(Form::basis(n, k)))
                         - f.J[a].apply(so_action(w, Form::basis(n, k)));
                for (const auto& [b, coeff] : lhs.terms()) {
                    int row = (a * n + k) * n + std::countr_zero(b);
                    sys.at(row, c) = coeff;
                }
            }
        }
    }
    auto null = nullspace(sys);
    const long long expected = (long long)f.m * (2 * f.m + 1);
    if ((long long)null.size() != expected)
        throw std::logic_error("spm_basis: commutant dimension is not m(2m+1); broken frame");
    std::vector<Form> el;
    for (const auto& v : null) {
        Form w(n);
        for (std::size_t c = 0; c < cols; ++c)
            if (v[c] != 0) w.add_term(two_blades[c], v[c]);
        el.push_back(std::move(w));
    }
    return make_subalgebra_basis(std::move(el));
}

/// Lie bracket of two 2-forms through their skew endomorphisms.
inline Form bracket_two_forms(const Form& u, const Form& v) {
    Matrix a = detail::endo_of_two_form(u), b = detail::endo_of_two_form(v);
    return detail::two_form_of_endo(a * b - b * a);
}

/// Closure of the span under the Lie bracket, checked exactly: appending any
/// bracket to the coordinate matrix of the basis must not raise its rank.
inline bool closed_under_bracket(const SubalgebraBasis& basis, int n) {
    auto two_blades = blades_of_degree(n, 2);
    const std::size_t rows = two_blades.size();
    const std::size_t d = basis.size();
    Matrix coords(rows, d + 1);
    for (std::size_t j = 0; j < d; ++j)
        for (const auto& [b, c] : basis.elements[j].terms())
            coords.at(blade_rank(b), j) = c;
    std::size_t base_rank = d; // gram is invertible, so the elements are independent
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Form br = bracket_two_forms(basis.elements[i], basis.elements[j]);
            for (std::size_t r = 0; r < rows; ++r) coords.at(r, d) = 0;
            for (const auto& [b, c] : br.terms()) coords.at(blade_rank(b), d) = c;
            if (rank(coords) != base_rank) return false;
        }
    return true;
}

/// Dual-basis Casimir sum_{i,j} G^{ij} X_i . X_j . acting on forms, with
/// G the Gram matrix under the blade inner product (the Lambda^2
/// normalization).  Independent of the chosen basis of the subalgebra.
inline Form apply_dual_basis_casimir(const SubalgebraBasis& basis, const Form& u) {
    Form out(u.dimension());
    const std::size_t d = basis.size();
    for (std::size_t j = 0; j < d; ++j) {
        Form xj = so_action(basis.elements[j], u);
        for (std::size_t i = 0; i < d; ++i) {
            const Rational& g = basis.gram_inv.at(i, j);
            if (g == 0) continue;
            out += g * so_action(basis.elements[i], xj);
        }
    }
    return out;
}

inline FormOp dual_basis_casimir(const SubalgebraBasis& basis) {
    return [&basis](const Form& u) { return apply_dual_basis_casimir(basis, u); };
}

inline LinearOperator dual_basis_casimir_matrix(const SubalgebraBasis& basis, int n, int p) {
    return materialize(dual_basis_casimir(basis), n, p, p);
}

/// pr(X^Y) = 1/4 (X^Y + sum_a J_a X ^ J_a Y): projection of 2-forms onto the
/// sp(m) summand.
inline Form apply_projection_pr(const QuaternionicFrame& f, const Form& u) {
    if (!u.is_homogeneous(2)) throw std::invalid_argument("projection_pr: expected a 2-form");
    Form out(f.n);
    for (const auto& [b, c] : u.terms()) {
        int i = std::countr_zero(b);
        int j = std::countr_zero(b & (b - 1));
        Form acc = Form::blade(f.n, b);
        for (int a = 0; a < 3; ++a)
            acc += wedge(f.J[a].apply(Form::basis(f.n, i)), f.J[a].apply(Form::basis(f.n, j)));
        acc *= c * Rational(1, 4);
        out += acc;
    }
    return out;
}

inline LinearOperator projection_pr(const QuaternionicFrame& f) {
    return materialize([&f](const Form& u) { return apply_projection_pr(f, u); }, f.n, 2, 2);
}

/// Symmetric element of Sym^2(Lambda^2), given over the canonical 2-blade
/// ordering.
struct CurvatureElement {
    int n = 0;
    Matrix coeff; // square of size C(n,2)

    explicit CurvatureElement(int n_) : n(n_) {
        auto d = binomial(n_, 2);
        coeff = Matrix(d, d);
    }

    static CurvatureElement identity_element(int n_) {
        CurvatureElement r(n_);
        r.coeff = Matrix::identity(binomial(n_, 2));
        return r;
    }

    bool symmetric() const { return coeff.transpose() == coeff; }

    /// R applied to a 2-form.
    Form apply(const Form& w) const {
        if (!w.is_homogeneous(2)) throw std::invalid_argument("CurvatureElement: expected a 2-form");
        auto blades = blades_of_degree(n, 2);
        Form out(n);
        for (const auto& [b, c] : w.terms()) {
            std::size_t col = blade_rank(b);
            for (std::size_t r = 0; r < blades.size(); ++r) {
                const Rational& v = coeff.at(r, col);
                if (v != 0) out.add_term(blades[r], v * c);
            }
        }
        return out;
    }
};

/// q(R) in coordinates: sum over ordered pairs (i,j) of
/// e_j ^ e_i -| (R(e_i ^ e_j)) .
inline Form apply_qR_coordinate(const CurvatureElement& R, const Form& u) {
    const int n = R.n;
    Form out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Form eij = wedge(Form::basis(n, i), Form::basis(n, j)); // signed 2-blade
            Form rot = so_action(R.apply(eij), u);
            out += wedge(Form::basis(n, j), contract(Form::basis(n, i), rot));
        }
    return out;
}

/// q(R) rewritten over unordered pairs: sum_{i<j} (e_i^e_j) . R(e_i^e_j) .
inline Form apply_qR_so_pairs(const CurvatureElement& R, const Form& u) {
    const int n = R.n;
    Form out(n);
    for (BladeMask b : blades_of_degree(n, 2)) {
        Form w = Form::blade(n, b);
        out += so_action(w, so_action(R.apply(w), u));
    }
    return out;
}

/// q(R) with the built-in cross-check of the two displayed expressions.
inline LinearOperator q_R(const CurvatureElement& R, int p) {
    if (!R.symmetric()) throw std::invalid_argument("q_R: curvature element must be symmetric");
    auto a = materialize([&R](const Form& u) { return apply_qR_coordinate(R, u); }, R.n, p, p);
    auto b = materialize([&R](const Form& u) { return apply_qR_so_pairs(R, u); }, R.n, p, p);
    if (!(a.matrix == b.matrix))
        throw std::logic_error("q_R: the two defining expressions disagree");
    return a;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

/// C = Cas_{sp(m)} + 1/4 p(4m-p) + 1/4 J + 3/2 p on every requested degree,
/// with the Casimir in the Lambda^2 normalization.  Checked blade by blade.
inline Report verify_C_decomposition(const OperatorFamily& fam, const SubalgebraBasis& spm,
                                     const std::vector<int>& degrees) {
    const auto& f = fam.frame;
    Report rep("C-decomposition");
    for (int p : degrees) {
        Rational c1 = Rational(p) * Rational(4 * f.m - p) / Rational(4);
        Rational c2 = Rational(3 * p) / Rational(2);
        std::string res;
        for (BladeMask b : blades_of_degree(f.n, p)) {
            Form x = Form::blade(f.n, b);
            Form d = fam.C(x) - apply_dual_basis_casimir(spm, x)
                   - c1 * x - Rational(1, 4) * fam.J(x) - c2 * x;
            if (!d.is_zero()) { res = "on " + blade_to_string(b) + ": " + d.str(); break; }
        }
        rep.add({"C = Cas_spm + p(4m-p)/4 + J/4 + 3p/2 @p=" + std::to_string(p),
                 "Casimir decomposition of C", res.empty(), res.empty() ? "0" : res, ""});
    }
    return rep;
}

/// so(4m) Casimir acts as -p(4m-p) id.
inline Report verify_so_casimir(const OperatorFamily& fam, const SubalgebraBasis& so,
                                const std::vector<int>& degrees) {
    const auto& f = fam.frame;
    Report rep("so-casimir");
    for (int p : degrees) {
        Rational want = Rational(-p) * Rational(4 * f.m - p);
        std::string res;
        for (BladeMask b : blades_of_degree(f.n, p)) {
            Form x = Form::blade(f.n, b);
            Form d = apply_dual_basis_casimir(so, x) - want * x;
            if (!d.is_zero()) { res = "on " + blade_to_string(b) + ": " + d.str(); break; }
        }
        rep.add({"Cas_so(4m) = -p(4m-p) id @p=" + std::to_string(p),
                 "full orthogonal Casimir on p-forms", res.empty(), res.empty() ? "0" : res, ""});
    }
    return rep;
}

/// J = 2m Cas_{sp(1)} (Lambda^2 normalization) on every requested degree.
inline Report verify_J_is_sp1_casimir(const OperatorFamily& fam, const SubalgebraBasis& sp1,
                                      const std::vector<int>& degrees) {
    const auto& f = fam.frame;
    Report rep("J-vs-sp1-casimir");
    for (int p : degrees) {
        std::string res;
        for (BladeMask b : blades_of_degree(f.n, p)) {
            Form x = Form::blade(f.n, b);
            Form d = fam.J(x) - Rational(2 * f.m) * apply_dual_basis_casimir(sp1, x);
            if (!d.is_zero()) { res = "on " + blade_to_string(b) + ": " + d.str(); break; }
        }
        rep.add({"J = 2m Cas_sp1 @p=" + std::to_string(p), "J as rescaled sp(1) Casimir",
                 res.empty(), res.empty() ? "0" : res, ""});
    }
    return rep;
}

} // namespace qkforms
