#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qkforms/casimir_matrix.hpp"

using namespace qkforms;

namespace {

const OperatorFamily& fam2() {
    static OperatorFamily fam = operator_family(build_frame(2));
    return fam;
}

const SubalgebraBasis& spm2() {
    static SubalgebraBasis b = spm_basis(fam2().frame);
    return b;
}

} // namespace

TEST_CASE("sp(m) commutant basis has dimension m(2m+1) and commutes with the J_a") {
    const auto& basis = spm2();
    CHECK(basis.size() == 10);
    const auto& f = fam2().frame;
    for (const auto& w : basis.elements)
        for (int a = 0; a < 3; ++a)
            for (int k = 0; k < f.n; ++k) {
                Form lhs = so_action(w, f.J[a].apply(Form::basis(f.n, k)));
                Form rhs = f.J[a].apply(so_action(w, Form::basis(f.n, k)));
                CHECK(lhs == rhs);
            }
    CHECK(spm_basis(build_frame(3)).size() == 21);
}

TEST_CASE("sp(m) basis is closed under the Lie bracket") {
    CHECK(closed_under_bracket(spm2(), 8));
}

TEST_CASE("dual-basis Casimir is basis independent") {
    const auto& basis = spm2();
    // second basis: shuffled and mixed by an invertible rational recombination
    std::vector<Form> mixed;
    std::mt19937_64 rng(99);
    std::vector<std::size_t> perm(basis.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Form w = basis.elements[perm[i]];
        w += Rational(i % 3 == 0 ? 1 : 2, 3) * basis.elements[perm[(i + 1) % basis.size()]];
        mixed.push_back(w);
    }
    auto second = make_subalgebra_basis(std::move(mixed));
    for (int p : {1, 2}) {
        auto a = dual_basis_casimir_matrix(basis, 8, p);
        auto b = dual_basis_casimir_matrix(second, 8, p);
        CHECK(a.matrix == b.matrix);
    }
}

TEST_CASE("sp(1) Casimir: gram is 2m id, value on one-forms is -3/(2m)") {
    auto sp1 = sp1_basis(fam2());
    CHECK(sp1.gram == Matrix::identity(3) * Rational(4));
    auto c1 = dual_basis_casimir_matrix(sp1, 8, 1);
    CHECK(c1.matrix == Matrix::identity(8) * Rational(-3, 4));
    // any basis kills scalars
    auto c0 = dual_basis_casimir_matrix(sp1, 8, 0);
    CHECK(c0.matrix.is_zero());
}

TEST_CASE("J equals 2m times the sp(1) Casimir on every degree") {
    auto sp1 = sp1_basis(fam2());
    auto rep = verify_J_is_sp1_casimir(fam2(), sp1, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    for (const auto& r : rep.records) {
        INFO(r.id, " -> ", r.residual);
        CHECK(r.pass);
    }
}

TEST_CASE("so(4m) Casimir acts as -p(4m-p) id") {
    auto so = so_basis(8);
    auto rep = verify_so_casimir(fam2(), so, {0, 1, 2, 3, 4});
    for (const auto& r : rep.records) {
        INFO(r.id, " -> ", r.residual);
        CHECK(r.pass);
    }
}

TEST_CASE("projection pr: idempotent, self-adjoint, rank m(2m+1), image = sp(m)") {
    auto pr = projection_pr(fam2().frame);
    CHECK(pr.matrix * pr.matrix == pr.matrix);
    CHECK(pr.matrix.transpose() == pr.matrix);
    CHECK(rank(pr.matrix) == 10);
    // pr fixes every sp(m) element and kills the omega_a
    const auto& f = fam2().frame;
    for (const auto& w : spm2().elements)
        CHECK(apply_projection_pr(f, w) == w);
    for (int a = 0; a < 3; ++a)
        CHECK(apply_projection_pr(f, fam2().omega[a]).is_zero());
}

TEST_CASE("q(R): zero, identity, and symmetry") {
    CurvatureElement zero(8);
    auto qz = q_R(zero, 2);
    CHECK(qz.matrix.is_zero());

    // q(id) is the so(4m) dual-basis Casimir
    auto so = so_basis(8);
    auto id = CurvatureElement::identity_element(8);
    for (int p : {1, 2}) {
        auto q = q_R(id, p);
        auto cas = dual_basis_casimir_matrix(so, 8, p);
        CHECK(q.matrix == cas.matrix);
        CHECK(q.matrix == Matrix::identity(binomial(8, p)) * Rational(-p * (32 - 4 * p)) * Rational(1, 4));
    }

    // q(R) is self-adjoint for random symmetric rational R
    RationalSampler s(31);
    CurvatureElement R(8);
    for (std::size_t i = 0; i < 28; ++i)
        for (std::size_t j = i; j < 28; ++j) {
            Rational v = s.next();
            R.coeff.at(i, j) = v;
            R.coeff.at(j, i) = v;
        }
    auto q = q_R(R, 2);
    CHECK(q.matrix.transpose() == q.matrix);

    // asymmetric input is rejected
    CurvatureElement bad(8);
    bad.coeff.at(0, 1) = 1;
    CHECK_THROWS_AS(q_R(bad, 2), std::invalid_argument);
}

TEST_CASE("C decomposes as Cas_spm + p(4m-p)/4 + J/4 + 3p/2 (m=2)") {
    auto rep = verify_C_decomposition(fam2(), spm2(), {0, 1, 2, 3, 4, 5, 6, 7, 8});
    for (const auto& r : rep.records) {
        INFO(r.id, " -> ", r.residual);
        CHECK(r.pass);
    }
}

TEST_CASE("singular gram is rejected") {
    auto w = fam2().omega[0];
    CHECK_THROWS_AS(make_subalgebra_basis({w, w}), std::invalid_argument);
}
