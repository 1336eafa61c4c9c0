#include <doctest.h>

#include "qkforms/form.hpp"
#include "qkforms/matrix.hpp"

using namespace qkforms;

namespace {

// 0-based basis one-form shorthand for an 8-dimensional model.
Form e(int i, int n = 8) { return Form::basis(n, i - 1); }

Form blade_of(int n, std::initializer_list<int> idx, Rational c = Rational(1)) {
    BladeMask b = 0;
    for (int i : idx) b |= BladeMask(1) << (i - 1);
    return Form::blade(n, b, c);
}

Form random_form(int n, int p, RationalSampler& s, int terms = 4) {
    auto blades = blades_of_degree(n, p);
    Form f(n);
    for (int t = 0; t < terms; ++t)
        f.add_term(blades[s.next_index(blades.size())], s.next_nonzero());
    return f;
}

} // namespace

TEST_CASE("blade rank and unrank are inverse over the canonical order") {
    for (int n : {4, 8, 12}) {
        for (int p = 0; p <= n; ++p) {
            auto blades = blades_of_degree(n, p);
            CHECK(blades.size() == binomial(n, p));
            for (std::size_t i = 0; i < blades.size(); ++i) {
                CHECK(blade_rank(blades[i]) == i);
                CHECK(blade_unrank(n, p, i) == blades[i]);
            }
        }
    }
}

TEST_CASE("wedge basis cases") {
    Form w = wedge(e(1), e(2));
    CHECK(w == blade_of(8, {1, 2}));
    CHECK(wedge(e(1), e(1)).is_zero());
    // sign from moving e2 past e1 into increasing order
    CHECK(wedge(e(2), blade_of(8, {1, 3})) == blade_of(8, {1, 2, 3}, Rational(-1)));
}

TEST_CASE("wedge is bilinear and associative") {
    RationalSampler s(11);
    for (int rep = 0; rep < 8; ++rep) {
        Form a = random_form(8, 1, s), b = random_form(8, 2, s), c = random_form(8, 1, s);
        Rational t = s.next_nonzero();
        CHECK(wedge(a + c, b) == wedge(a, b) + wedge(c, b));
        CHECK(wedge(t * a, b) == t * wedge(a, b));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("contract basis cases") {
    CHECK(contract(e(1), blade_of(8, {1, 2})) == e(2));
    CHECK(contract(e(3), blade_of(8, {1, 2})).is_zero());
    // anti-derivation sign rule
    CHECK(contract(e(2), blade_of(8, {1, 2, 3})) == blade_of(8, {1, 3}, Rational(-1)));
    CHECK(contract(e(1), Form::scalar(8, Rational(5))).is_zero());
}

TEST_CASE("Cartan identity: x -| (y ^ u) + y ^ (x -| u) = <x,y> u") {
    RationalSampler s(12);
    for (int p = 0; p <= 4; ++p) {
        for (int rep = 0; rep < 6; ++rep) {
            Form x = random_form(8, 1, s), y = random_form(8, 1, s), u = random_form(8, p, s);
            Form lhs = contract(x, wedge(y, u)) + wedge(y, contract(x, u));
            CHECK(lhs == inner(x, y) * u);
        }
    }
}

TEST_CASE("inner product: canonical blades are orthonormal") {
    CHECK(inner(blade_of(8, {1, 2}), blade_of(8, {1, 2})) == 1);
    CHECK(inner(blade_of(8, {1, 2}), blade_of(8, {1, 3})) == 0);
    CHECK_THROWS_AS((void)inner(e(1), blade_of(8, {1, 2})), std::invalid_argument);
}

TEST_CASE("inner is the adjoint pairing for wedge and contraction") {
    RationalSampler s(13);
    for (int p = 0; p <= 4; ++p) {
        for (int rep = 0; rep < 6; ++rep) {
            Form x = random_form(8, 1, s), u = random_form(8, p, s), v = random_form(8, p + 1, s);
            CHECK(inner(wedge(x, u), v) == inner(u, contract(x, v)));
        }
    }
}

TEST_CASE("so_action basis cases and Leibniz rule") {
    CHECK(so_action(blade_of(8, {1, 2}), e(1)) == e(2));
    CHECK(so_action(blade_of(8, {1, 2}), e(3)).is_zero());
    RationalSampler s(14);
    for (int rep = 0; rep < 8; ++rep) {
        Form w = random_form(8, 2, s), u = random_form(8, 1, s), v = random_form(8, 2, s);
        CHECK(so_action(w, wedge(u, v)) == wedge(so_action(w, u), v) + wedge(u, so_action(w, v)));
    }
}

TEST_CASE("so_action is skew-adjoint for the blade inner product") {
    RationalSampler s(15);
    for (int p = 1; p <= 4; ++p) {
        for (int rep = 0; rep < 6; ++rep) {
            Form w = random_form(8, 2, s), u = random_form(8, p, s), v = random_form(8, p, s);
            CHECK(inner(so_action(w, u), v) == -inner(u, so_action(w, v)));
        }
    }
}

TEST_CASE("materialize identities") {
    auto id = materialize([](const Form& u) { return u; }, 8, 2, 2);
    CHECK(id.matrix == Matrix::identity(28));

    Form x = e(1);
    auto col = materialize([&x](const Form& u) { return wedge(x, u); }, 8, 0, 1);
    CHECK(col.matrix.rows() == 8);
    CHECK(col.matrix.cols() == 1);
    CHECK(col.matrix.at(0, 0) == 1);
    for (int i = 1; i < 8; ++i) CHECK(col.matrix.at(i, 0) == 0);
}

TEST_CASE("materialize then apply equals direct application") {
    RationalSampler s(16);
    Form x = random_form(8, 1, s);
    FormOp op = [&x](const Form& u) { return wedge(x, u); };
    auto lin = materialize(op, 8, 2, 3);
    for (BladeMask b : blades_of_degree(8, 2)) {
        Form u = Form::blade(8, b);
        CHECK(apply(lin, u, 8) == op(u));
    }
}

TEST_CASE("materialize rejects non-homogeneous operators") {
    FormOp bad = [](const Form& u) { return u + wedge(Form::basis(8, 0), u); };
    CHECK_THROWS_AS(materialize(bad, 8, 1, 1), std::invalid_argument);
}

TEST_CASE("rank and kernel dimensions on exact matrices") {
    auto id = Matrix::identity(28);
    CHECK(rank(id) == 28);
    CHECK(kernel_dim(id) == 0);
    Matrix zero(28, 28);
    CHECK(rank(zero) == 0);
    CHECK(kernel_dim(zero) == 28);
}

TEST_CASE("rank + nullity = columns, nullspace annihilates, bareiss agrees with rref") {
    RationalSampler s(17);
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t rows = 3 + s.next_index(5), cols = 3 + s.next_index(5);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (s.next_index(3) != 0) m.at(i, j) = s.next();
        auto r = rank(m);
        auto null = nullspace(m);
        CHECK(r + null.size() == cols); // also: fraction-free rank equals rref rank
        for (const auto& v : null) {
            for (std::size_t i = 0; i < rows; ++i) {
                Rational acc(0);
                for (std::size_t j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("inverse of an exact matrix") {
    RationalSampler s(18);
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = s.next();
        m.at(i, i) += 20; // diagonally dominant, hence invertible
    }
    CHECK(m * inverse(m) == Matrix::identity(4));
}

TEST_CASE("dimension mismatch raises") {
    CHECK_THROWS_AS(wedge(Form::basis(8, 0), Form::basis(4, 0)), std::invalid_argument);
}
