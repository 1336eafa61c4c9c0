#include <doctest.h>

#include "qkforms/flat_model.hpp"

using namespace qkforms;

namespace {

const OperatorFamily& fam2() {
    static OperatorFamily fam = operator_family(build_frame(2));
    return fam;
}

// x_i (1-based), dx_i (1-based) shorthand
Polynomial x(int i) { return Polynomial::variable(i - 1); }
BladeMask dx(std::initializer_list<int> idx) {
    BladeMask b = 0;
    for (int i : idx) b |= BladeMask(1) << (i - 1);
    return b;
}

} // namespace

TEST_CASE("polynomial arithmetic and derivatives") {
    Polynomial p = x(1) * x(2) + Rational(3) * x(1);
    CHECK(p.derivative(0) == x(2) + Polynomial::constant(Rational(3)));
    CHECK(p.derivative(1) == x(1));
    CHECK(p.derivative(4).is_zero());
    CHECK((x(1) * x(1)).total_degree() == 2);
}

TEST_CASE("d of a basic sample and d^2 = 0") {
    // d(x1 dx2) = dx1 ^ dx2
    PolyForm u = PolyForm::term(8, x(1), dx({2}));
    PolyForm du = d(u);
    PolyForm want(8);
    want.add_term(dx({1, 2}), Polynomial::constant(Rational(1)));
    CHECK(du == want);

    RationalSampler s(41);
    for (int p = 0; p <= 3; ++p) {
        auto samples = comfor_samples(8, p, 3, 77 + p, 6);
        for (const auto& v : samples) {
            CHECK(d(d(v)).is_zero());
            CHECK(delta(delta(v)).is_zero());
        }
    }
}

TEST_CASE("delta sign convention: delta(x1 dx1) = -1") {
    PolyForm u = PolyForm::term(8, x(1), dx({1}));
    PolyForm want(8);
    want.add_term(0, Polynomial::constant(Rational(-1)));
    CHECK(delta(u) == want);
}

TEST_CASE("first order operators: degree shifts and basic vanishing") {
    FlatOperators ops{&fam2()};
    // constant forms are killed by every derivative-based operator
    PolyForm c = PolyForm::term(8, Polynomial::constant(Rational(2)), dx({1, 3}));
    CHECK(ops.dplus(c).is_zero());
    CHECK(ops.delminus(c).is_zero());
    // del- kills every form of degree < 3 because Lam_a needs two slots
    for (int p = 0; p <= 2; ++p)
        for (BladeMask b : blades_of_degree(8, p))
            for (int v = 0; v < 8; ++v)
                CHECK(FlatOperators{&fam2()}.delminus(
                          PolyForm::term(8, Polynomial::variable(v), b)).is_zero());
    // degree shifts on a generic sample
    PolyForm u = PolyForm::term(8, x(3), dx({1, 2, 5}));
    CHECK(ops.dplus(u).is_homogeneous(6));
    CHECK(ops.dminus(u).is_homogeneous(2));
    CHECK(ops.dc(u).is_homogeneous(4));
    CHECK(ops.delplus(u).is_homogeneous(4));
    CHECK(ops.delminus(u).is_homogeneous(0));
    CHECK(ops.delc(u).is_homogeneous(2));
}

TEST_CASE("dc matches its direct expansion on x1 dx2") {
    FlatOperators ops{&fam2()};
    PolyForm u = PolyForm::term(8, x(1), dx({2}));
    // only the x1-derivative survives: sum_a J_a(J_a e_1 ^ dx2)
    Form direct(8);
    for (int a = 0; a < 3; ++a)
        direct += fam2().J_alpha(a, wedge(fam2().frame.J[a].apply(Form::basis(8, 0)), Form::basis(8, 1)));
    CHECK(ops.dc(u) == PolyForm::from_form(direct));
}

TEST_CASE("comfor commutators close exactly for p = 0..4 (m=2)") {
    for (int p = 0; p <= 4; ++p) {
        auto rep = verify_comfor(fam2(), p, 3, 20240501, 4);
        for (const auto& r : rep.records) {
            INFO(r.id, " -> ", r.residual);
            CHECK(r.pass);
        }
        if (p >= 3) CHECK(!rep.flags.empty()); // displayed [del,Lam+] variant refuted
    }
}

TEST_CASE("Killing projection identities for p = 1..4 (m=2)") {
    for (int p = 1; p <= 4; ++p) {
        auto rep = verify_killing_projections(fam2(), p);
        for (const auto& r : rep.records) {
            INFO(r.id, " -> ", r.residual);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("constant forms are Killing") {
    for (int p = 0; p <= 3; ++p)
        for (BladeMask b : blades_of_degree(8, p)) {
            PolyForm u = PolyForm::term(8, Polynomial::constant(Rational(1)), b);
            CHECK(is_killing(u));
            CHECK(killing_characterization(u));
        }
}

TEST_CASE("rotation form x1 dx2 - x2 dx1 is Killing") {
    PolyForm u(8);
    u.add_term(dx({2}), x(1));
    u.add_term(dx({1}), -x(2));
    CHECK(is_killing(u));
    CHECK(is_killing_via_twistor(u));
    CHECK(killing_characterization(u));
}

TEST_CASE("x1 dx1: not Killing, and not a twistor form either") {
    PolyForm u = PolyForm::term(8, x(1), dx({1}));
    CHECK_FALSE(is_killing(u));
    // delta u = -1 as claimed upstream ...
    PolyForm want(8);
    want.add_term(0, Polynomial::constant(Rational(-1)));
    CHECK(delta(u) == want);
    // ... but the twistor claim fails: [T u](e1) = (7/8) dx1 exactly.
    PolyForm t1 = twistor_apply(u, Form::basis(8, 0));
    PolyForm residual(8);
    residual.add_term(dx({1}), Polynomial::constant(Rational(7, 8)));
    CHECK(t1 == residual);
    CHECK_FALSE(is_twistor(u));
}

TEST_CASE("dilation form sum x_i dx_i is twistor but not Killing") {
    PolyForm u(8);
    for (int i = 1; i <= 8; ++i) u.add_term(dx({i}), x(i));
    CHECK(is_twistor(u));
    CHECK_FALSE(is_killing(u));
    // delta u = -n
    PolyForm want(8);
    want.add_term(0, Polynomial::constant(Rational(-8)));
    CHECK(delta(u) == want);
}

TEST_CASE("killing characterization agrees with the defining equation on samples") {
    auto samples = comfor_samples(8, 1, 2, 505, 6);
    for (const auto& u : samples)
        CHECK(is_killing_direct(u) == killing_characterization(u));
}

TEST_CASE("twistor and Killing predicates reject non-homogeneous input") {
    PolyForm mixed(8);
    mixed.add_term(0, Polynomial::constant(Rational(1)));
    mixed.add_term(dx({1}), Polynomial::constant(Rational(1)));
    CHECK_THROWS_AS(twistor_apply(mixed, Form::basis(8, 0)), std::invalid_argument);
    CHECK_THROWS_AS(is_killing_direct(mixed), std::invalid_argument);
}
