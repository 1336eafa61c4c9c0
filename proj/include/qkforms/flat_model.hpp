#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkforms/form.hpp"
#include "qkforms/polynomial.hpp"
#include "qkforms/quaternionic.hpp"
#include "qkforms/rational.hpp"
#include "qkforms/report.hpp"

namespace qkforms {

/// Differential form on flat R^{4m} with polynomial coefficients and
/// constant J_a.  The covariant derivative is plain partial differentiation.
class PolyForm {
public:
    using Map = std::map<BladeMask, Polynomial>;

    explicit PolyForm(int n) : n_(n) {
        if (n < 0 || n > kMaxVars) throw std::invalid_argument("PolyForm: dimension out of range");
    }

    static PolyForm from_form(const Form& f) {
        PolyForm r(f.dimension());
        for (const auto& [b, c] : f.terms()) r.add_term(b, Polynomial::constant(c));
        return r;
    }

    static PolyForm term(int n, const Polynomial& coeff, BladeMask b) {
        PolyForm r(n);
        r.add_term(b, coeff);
        return r;
    }

    int dimension() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    const Map& terms() const { return c_; }

    void add_term(BladeMask b, const Polynomial& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(b, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    PolyForm& operator+=(const PolyForm& o) {
        check(o);
        for (const auto& [b, p] : o.c_) add_term(b, p);
        return *this;
    }
    PolyForm& operator-=(const PolyForm& o) {
        check(o);
        for (const auto& [b, p] : o.c_) add_term(b, -p);
        return *this;
    }
    PolyForm& operator*=(const Rational& s) {
        if (s == 0) { c_.clear(); return *this; }
        for (auto& [b, p] : c_) p *= s;
        return *this;
    }

    friend PolyForm operator+(PolyForm a, const PolyForm& b) { a += b; return a; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { a -= b; return a; }
    friend PolyForm operator*(const Rational& s, PolyForm a) { a *= s; return a; }
    friend PolyForm operator-(PolyForm a) { a *= Rational(-1); return a; }

    bool operator==(const PolyForm& o) const { return n_ == o.n_ && c_ == o.c_; }

    bool is_homogeneous(int p) const {
        for (const auto& [b, c] : c_)
            if (blade_degree(b) != p) return false;
        return true;
    }

    std::optional<int> homogeneous_degree() const {
        std::optional<int> deg;
        for (const auto& [b, c] : c_) {
            int d = blade_degree(b);
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
        return deg;
    }

    int max_poly_degree() const {
        int d = 0;
        for (const auto& [b, p] : c_) d = std::max(d, p.total_degree());
        return d;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [b, p] : c_) {
            if (!s.empty()) s += " + ";
            s += "[" + p.str() + "] " + blade_to_string(b);
        }
        return s;
    }

private:
    void check(const PolyForm& o) const {
        if (n_ != o.n_) throw std::invalid_argument("PolyForm: ambient dimension mismatch");
    }

    int n_;
    Map c_;
};

/// Lift a constant-coefficient form operator to polynomial coefficients.
inline PolyForm lift(const FormOp& op, const PolyForm& u) {
    PolyForm out(u.dimension());
    for (const auto& [b, poly] : u.terms()) {
        Form img = op(Form::blade(u.dimension(), b));
        for (const auto& [bb, cc] : img.terms()) out.add_term(bb, cc * poly);
    }
    return out;
}

/// nabla_{e_i} on the flat model: differentiate every coefficient.
inline PolyForm partial(const PolyForm& u, int i) {
    PolyForm out(u.dimension());
    for (const auto& [b, poly] : u.terms()) {
        Polynomial d = poly.derivative(i);
        if (!d.is_zero()) out.add_term(b, d);
    }
    return out;
}

/// Directional derivative along a constant vector X.
inline PolyForm nabla(const Form& X, const PolyForm& u) {
    PolyForm out(u.dimension());
    for (const auto& [xb, xc] : X.terms())
        out += xc * partial(u, std::countr_zero(xb));
    return out;
}

/// Wedge with a constant one-form.
inline PolyForm wedge_const(const Form& x, const PolyForm& u) {
    PolyForm out(u.dimension());
    for (const auto& [xb, xc] : x.terms())
        for (const auto& [b, poly] : u.terms()) {
            int s = wedge_sign(xb, b);
            if (s == 0) continue;
            out.add_term(xb | b, (Rational(s) * xc) * poly);
        }
    return out;
}

/// Contraction with a constant one-form.
inline PolyForm contract_const(const Form& x, const PolyForm& u) {
    PolyForm out(u.dimension());
    for (const auto& [xb, xc] : x.terms()) {
        int i = std::countr_zero(xb);
        for (const auto& [b, poly] : u.terms()) {
            int s = contraction_sign(i, b);
            if (s == 0) continue;
            out.add_term(b & ~xb, (Rational(s) * xc) * poly);
        }
    }
    return out;
}

/// Exterior derivative d = sum_i e_i ^ d/dx_i;  d o d = 0.
inline PolyForm d(const PolyForm& u) {
    PolyForm out(u.dimension());
    for (int i = 0; i < u.dimension(); ++i)
        out += wedge_const(Form::basis(u.dimension(), i), partial(u, i));
    return out;
}

/// Co-differential delta = - sum_i e_i -| d/dx_i (formal adjoint of d on the
/// flat model; this sign makes the commutator suite close exactly).
inline PolyForm delta(const PolyForm& u) {
    PolyForm out(u.dimension());
    for (int i = 0; i < u.dimension(); ++i)
        out -= contract_const(Form::basis(u.dimension(), i), partial(u, i));
    return out;
}

/// The six natural first order operators.  Degree shifts:
/// d+: +3, d-: -1, dc: +1, del+: +1, del-: -3, delc: -1.
struct FlatOperators {
    const OperatorFamily* fam;

    PolyForm dplus(const PolyForm& u) const  { return build(u, /*wedge*/ true,  OpKind::L,   +1); }
    PolyForm dminus(const PolyForm& u) const { return build(u, /*wedge*/ true,  OpKind::Lam, +1); }
    PolyForm dc(const PolyForm& u) const     { return build(u, /*wedge*/ true,  OpKind::Jd,  +1); }
    PolyForm delplus(const PolyForm& u) const  { return build(u, /*wedge*/ false, OpKind::L,   -1); }
    PolyForm delminus(const PolyForm& u) const { return build(u, /*wedge*/ false, OpKind::Lam, -1); }
    PolyForm delc(const PolyForm& u) const     { return build(u, /*wedge*/ false, OpKind::Jd,  -1); }

private:
    enum class OpKind { L, Lam, Jd };

    PolyForm build(const PolyForm& u, bool use_wedge, OpKind kind, int sign) const {
        const auto& f = fam->frame;
        PolyForm out(f.n);
        for (int a = 0; a < 3; ++a) {
            FormOp alg = [this, a, kind](const Form& v) {
                switch (kind) {
                    case OpKind::L:   return fam->L_alpha(a, v);
                    case OpKind::Lam: return fam->Lambda_alpha(a, v);
                    default:          return fam->J_alpha(a, v);
                }
            };
            for (int i = 0; i < f.n; ++i) {
                Form Jei = f.J[a].apply(Form::basis(f.n, i));
                PolyForm du = partial(u, i);
                if (du.is_zero()) continue;
                PolyForm inner_term = use_wedge ? wedge_const(Jei, du) : contract_const(Jei, du);
                out += lift(alg, inner_term);
            }
        }
        if (sign < 0) out *= Rational(-1);
        return out;
    }
};

// ---------------------------------------------------------------------------
// Twistor / Killing predicates
// ---------------------------------------------------------------------------

/// [T u](X) = nabla_X u - 1/(p+1) X -| du + 1/(n-p+1) X ^ delta u
/// for a constant vector X and homogeneous u of degree p.
inline PolyForm twistor_apply(const PolyForm& u, const Form& X) {
    auto deg = u.homogeneous_degree();
    if (!deg) throw std::invalid_argument("twistor_apply: form must be homogeneous");
    const int p = *deg, n = u.dimension();
    PolyForm r = nabla(X, u);
    r -= Rational(1, p + 1) * contract_const(X, d(u));
    r += Rational(1, n - p + 1) * wedge_const(X, delta(u));
    return r;
}

/// Twistor predicate: T u = 0, checked on all basis directions (sufficient
/// by linearity of T u in X).
inline bool is_twistor(const PolyForm& u) {
    for (int i = 0; i < u.dimension(); ++i)
        if (!twistor_apply(u, Form::basis(u.dimension(), i)).is_zero()) return false;
    return true;
}

/// Killing predicate, route one: nabla_X u = 1/(p+1) X -| du on all basis
/// directions.
inline bool is_killing_direct(const PolyForm& u) {
    auto deg = u.homogeneous_degree();
    if (!deg) throw std::invalid_argument("is_killing: form must be homogeneous");
    const int p = *deg, n = u.dimension();
    PolyForm du = d(u);
    for (int i = 0; i < n; ++i) {
        Form X = Form::basis(n, i);
        PolyForm diff = nabla(X, u) - Rational(1, p + 1) * contract_const(X, du);
        if (!diff.is_zero()) return false;
    }
    return true;
}

/// Killing predicate, route two: co-closed and in the kernel of T.
inline bool is_killing_via_twistor(const PolyForm& u) {
    return delta(u).is_zero() && is_twistor(u);
}

/// Both routes, compared; they must agree.
inline bool is_killing(const PolyForm& u) {
    bool a = is_killing_direct(u);
    bool b = is_killing_via_twistor(u);
    if (a != b) throw std::logic_error("is_killing: defining equation and co-closed+twistor route disagree");
    return a;
}

/// X -| nabla_X u for a vector field X with polynomial coefficients.
inline PolyForm killing_quadratic(const std::vector<Polynomial>& X_coeffs, const PolyForm& u) {
    const int n = u.dimension();
    if (int(X_coeffs.size()) != n) throw std::invalid_argument("killing_quadratic: bad vector field");
    // nabla_X u = sum_i f_i d_i u; then X -| (...)
    PolyForm nab(n);
    for (int i = 0; i < n; ++i) {
        PolyForm du = partial(u, i);
        for (const auto& [b, poly] : du.terms()) nab.add_term(b, X_coeffs[i] * poly);
    }
    PolyForm out(n);
    for (int j = 0; j < n; ++j) {
        PolyForm c = contract_const(Form::basis(n, j), nab);
        for (const auto& [b, poly] : c.terms()) out.add_term(b, X_coeffs[j] * poly);
    }
    return out;
}

/// The characterization "X -| nabla_X u = 0 for all vector fields X",
/// checked over a polarizing family: basis fields, pair sums, and linear
/// coefficient fields x_k e_i.  Quadratic dependence on X makes this family
/// sufficient for polynomial coefficients.
inline bool killing_characterization(const PolyForm& u) {
    const int n = u.dimension();
    auto field_basis = [n](int i) {
        std::vector<Polynomial> f(n);
        f[i] = Polynomial::constant(Rational(1));
        return f;
    };
    for (int i = 0; i < n; ++i)
        if (!killing_quadratic(field_basis(i), u).is_zero()) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Polynomial> f(n);
            f[i] = Polynomial::constant(Rational(1));
            f[j] = Polynomial::constant(Rational(1));
            if (!killing_quadratic(f, u).is_zero()) return false;
        }
    // spot samples with linear coefficients
    for (int i = 0; i < n; ++i) {
        std::vector<Polynomial> f(n);
        f[i] = Polynomial::variable((i + 1) % n);
        if (!killing_quadratic(f, u).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Commutator suite
// ---------------------------------------------------------------------------

/// Monomial samples x_j * blade for every blade of degree p and every
/// variable, plus seeded random samples of polynomial degree <= degree_cap.
/// Identities between first order constant-symbol operators are determined
/// by their action on the x_j * blade family, so that part of the sweep is
/// complete; the random samples add redundancy at higher degree.
inline std::vector<PolyForm> comfor_samples(int n, int p, int degree_cap,
                                            std::uint64_t seed, int random_count) {
    std::vector<PolyForm> out;
    for (BladeMask b : blades_of_degree(n, p)) {
        out.push_back(PolyForm::term(n, Polynomial::constant(Rational(1)), b));
        for (int j = 0; j < n; ++j)
            out.push_back(PolyForm::term(n, Polynomial::variable(j), b));
    }
    RationalSampler sampler(seed);
    auto blades = blades_of_degree(n, p);
    for (int s = 0; s < random_count && !blades.empty(); ++s) {
        PolyForm u(n);
        for (int t = 0; t < 3; ++t) {
            Monomial m = 0;
            int deg = int(sampler.next_index(std::uint64_t(degree_cap) + 1));
            for (int q = 0; q < deg; ++q)
                m = monomial_mul(m, monomial_var(int(sampler.next_index(n))));
            Polynomial poly;
            poly.add_term(m, sampler.next_nonzero());
            u.add_term(blades[sampler.next_index(blades.size())], poly);
        }
        if (!u.is_zero()) out.push_back(u);
    }
    return out;
}

/// The ten commutators between {d, delta} and the algebraic operators.
inline Report verify_comfor(const OperatorFamily& fam, int p, int degree_cap,
                            std::uint64_t seed, int random_count = 5) {
    const auto& f = fam.frame;
    FlatOperators ops{&fam};
    Report rep("comfor");

    auto opL    = fam.op_L();
    auto opLam  = fam.op_Lambda();
    auto opLm   = fam.op_Lminus();
    auto opLamP = fam.op_LambdaPlus();
    auto opJ    = fam.op_J();
    auto opC    = fam.op_C();

    struct Item {
        std::string id;
        std::function<PolyForm(const PolyForm&)> lhs_minus_rhs;
    };
    auto comm_d = [](const FormOp& A, const PolyForm& u) {
        return d(lift(A, u)) - lift(A, d(u));
    };
    auto comm_del = [](const FormOp& A, const PolyForm& u) {
        return delta(lift(A, u)) - lift(A, delta(u));
    };

    std::vector<Item> items = {
        {"[d,Lam] = 2 del-", [&](const PolyForm& u) { return comm_d(opLam, u) - Rational(2) * ops.delminus(u); }},
        {"[del,L] = -2 d+", [&](const PolyForm& u) { return comm_del(opL, u) + Rational(2) * ops.dplus(u); }},
        {"[d,L-] = -d+", [&](const PolyForm& u) { return comm_d(opLm, u) + ops.dplus(u); }},
        {"[del,L-] = -del+ - dc - 3 d", [&](const PolyForm& u) {
             return comm_del(opLm, u) + ops.delplus(u) + ops.dc(u) + Rational(3) * d(u); }},
        {"[d,Lam+] = -d- + delc + 3 del", [&](const PolyForm& u) {
             return comm_d(opLamP, u) + ops.dminus(u) - ops.delc(u) - Rational(3) * delta(u); }},
        // Sign corrected: the commutator [e_i -|, Lam+] carries a minus sign
        // (see the algebraic suite), so the displayed "+del-" variant fails.
        {"[del,Lam+] = -del- (sign-corrected)", [&](const PolyForm& u) {
             return comm_del(opLamP, u) + ops.delminus(u); }},
        {"[d,J] = -2 dc - 3 d", [&](const PolyForm& u) {
             return comm_d(opJ, u) + Rational(2) * ops.dc(u) + Rational(3) * d(u); }},
        {"[del,J] = -2 delc - 3 del", [&](const PolyForm& u) {
             return comm_del(opJ, u) + Rational(2) * ops.delc(u) + Rational(3) * delta(u); }},
        {"[d,C] = del+", [&](const PolyForm& u) { return comm_d(opC, u) - ops.delplus(u); }},
        {"[del,C] = -d- + 3 del", [&](const PolyForm& u) {
             return comm_del(opC, u) + ops.dminus(u) - Rational(3) * delta(u); }},
    };

    auto samples = comfor_samples(f.n, p, degree_cap, seed, random_count);
    for (const auto& item : items) {
        std::string res;
        for (std::size_t s = 0; s < samples.size(); ++s) {
            PolyForm diff = item.lhs_minus_rhs(samples[s]);
            if (!diff.is_zero()) {
                res = "sample #" + std::to_string(s) + ": " + diff.str();
                break;
            }
        }
        rep.add({item.id + " @p=" + std::to_string(p), "first order commutator " + item.id,
                 res.empty(), res.empty() ? "0" : res, ""});
    }

    // displayed variant [del,Lam+] = +del-, refuted exactly on any sample
    // where both sides are nonzero
    for (const auto& u : samples) {
        PolyForm diff = comm_del(opLamP, u) - ops.delminus(u);
        if (!diff.is_zero()) {
            rep.flag("displayed variant [del,Lam+] = +del- is refuted at p=" + std::to_string(p)
                     + "; the certified identity is [del,Lam+] = -del-");
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Killing projection identities
// ---------------------------------------------------------------------------

/// The six projection identities produced by the defining equation of a
/// Killing p-form, verified as algebraic identities in an arbitrary
/// (p+1)-form v standing for du (substitute nabla_{e_i} u -> 1/(p+1) e_i -| v),
/// plus the two operator identities that drive the reduction.
inline Report verify_killing_projections(const OperatorFamily& fam, int p) {
    const auto& f = fam.frame;
    const int n = f.n;
    Report rep("killing-projections");

    struct Item {
        std::string id;
        // substituted left side built from v, and the right side operator on v
        std::function<Form(const Form&)> lhs, rhs;
    };

    // generic substituted operator: sum_{i,a} alg_a( J_a(e_i) [^ or -|] (e_i -| v) )
    auto subst = [&fam, n](bool use_wedge, int kind /*0=L,1=Lam,2=J*/, int sign, const Form& v) {
        const auto& fr = fam.frame;
        Form out(n);
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < n; ++i) {
                Form Jei = fr.J[a].apply(Form::basis(n, i));
                Form inner_part = contract(Form::basis(n, i), v);
                Form t = use_wedge ? wedge(Jei, inner_part) : contract(Jei, inner_part);
                switch (kind) {
                    case 0: out += fam.L_alpha(a, t); break;
                    case 1: out += fam.Lambda_alpha(a, t); break;
                    default: out += fam.J_alpha(a, t); break;
                }
            }
        if (sign < 0) out *= Rational(-1);
        return out;
    };

    std::vector<Item> items = {
        {"(p+1) d+ u = L- du",   [&](const Form& v) { return subst(true, 0, +1, v); },
                                 [&](const Form& v) { return fam.Lminus(v); }},
        {"(p+1) dc u = J du",    [&](const Form& v) { return subst(true, 2, +1, v); },
                                 [&](const Form& v) { return fam.J(v); }},
        {"(p+1) d- u = Lam+ du", [&](const Form& v) { return subst(true, 1, +1, v); },
                                 [&](const Form& v) { return fam.LambdaPlus(v); }},
        {"(p+1) del+ u = -2 C du",   [&](const Form& v) { return subst(false, 0, -1, v); },
                                     [&](const Form& v) { return Rational(-2) * fam.C(v); }},
        {"(p+1) delc u = -2 Lam+ du", [&](const Form& v) { return subst(false, 2, -1, v); },
                                      [&](const Form& v) { return Rational(-2) * fam.LambdaPlus(v); }},
        {"(p+1) del- u = -2 Lam du",  [&](const Form& v) { return subst(false, 1, -1, v); },
                                      [&](const Form& v) { return Rational(-2) * fam.Lambda(v); }},
    };

    for (const auto& item : items) {
        std::string res;
        for (BladeMask b : blades_of_degree(n, p + 1)) {
            Form v = Form::blade(n, b);
            Form diff = item.lhs(v) - item.rhs(v);
            if (!diff.is_zero()) {
                res = "on v=" + blade_to_string(b) + ": " + diff.str();
                break;
            }
        }
        rep.add({item.id + " @p=" + std::to_string(p), "Killing projection identity",
                 res.empty(), res.empty() ? "0" : res, ""});
    }

    // the contraction reindexing identity sum_i (J_a e_i) -| e_i -| = 2 Lam_a
    for (int a = 0; a < 3; ++a) {
        FormOp lhs = [&fam, a, n](const Form& u) {
            Form out(n);
            for (int i = 0; i < n; ++i)
                out += contract(fam.frame.J[a].apply(Form::basis(n, i)),
                                contract(Form::basis(n, i), u));
            return out;
        };
        FormOp rhs = [&fam, a](const Form& u) { return Rational(2) * fam.Lambda_alpha(a, u); };
        std::string res = first_residual_on_degree(lhs, rhs, n, p + 1);
        rep.add({"sum_i (J_" + std::to_string(a + 1) + " e_i)-| e_i-| = 2 Lam_" + std::to_string(a + 1)
                     + " @p=" + std::to_string(p + 1),
                 "contraction reindexing identity", res.empty(), res.empty() ? "0" : res, ""});
    }
    // [J_a, Lam_a] = 0
    for (int a = 0; a < 3; ++a) {
        FormOp lhs = [&fam, a](const Form& u) { return fam.J_alpha(a, fam.Lambda_alpha(a, u)); };
        FormOp rhs = [&fam, a](const Form& u) { return fam.Lambda_alpha(a, fam.J_alpha(a, u)); };
        std::string res = first_residual_on_degree(lhs, rhs, n, p + 1);
        rep.add({"[J_" + std::to_string(a + 1) + ",Lam_" + std::to_string(a + 1) + "] = 0 @p="
                     + std::to_string(p + 1),
                 "same-index derivation commutes with contraction operator",
                 res.empty(), res.empty() ? "0" : res, ""});
    }
    return rep;
}

} // namespace qkforms
