#include <doctest.h>

#include <algorithm>
#include <set>

#include "qkforms/rep_theory.hpp"

using namespace qkforms;

TEST_CASE("rho") {
    CHECK(rho(1).entries == std::vector<int>{1});
    CHECK(rho(2).entries == std::vector<int>{2, 1});
    CHECK(rho(4).entries == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("highest weight dominance is enforced") {
    CHECK_THROWS_AS(HighestWeight({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(HighestWeight({2, -1}), std::invalid_argument);
}

TEST_CASE("Killing-normalized Casimir closed forms, m in [1,8]") {
    for (int m = 1; m <= 8; ++m) {
        // adjoint = Sym^2 E has eigenvalue exactly one
        std::vector<int> adj(m, 0);
        adj[0] = 2;
        CHECK(casimir_spm_killing(HighestWeight(adj), m) == 1);
        // standard representation E
        std::vector<int> e1(m, 0);
        e1[0] = 1;
        CHECK(casimir_spm_killing(HighestWeight(e1), m) == Rational(2 * m + 1) / Rational(4 * (m + 1)));
        // trivial representation
        CHECK(casimir_spm_killing(HighestWeight(std::vector<int>(m, 0)), m) == 0);
        // the three table entries against the weight formula, on a grid
        for (int k = 0; k <= 6; ++k) CHECK(casimir_symk_E(k, m) == Rational(k) * Rational(k + 2 * m) / Rational(4 * (m + 1)));
        for (int a = 0; a <= m; ++a) {
            CHECK(casimir_lambda_a(a, m) == Rational(a) * Rational(2 - a + 2 * m) / Rational(4 * (m + 1)));
            for (int b = 0; b <= a; ++b) {
                Rational v = casimir_lambda_ab(a, b, m);
                CHECK(v == Rational(2 * b - a * a - b * b + 2 * (a + b) * (m + 1)) / Rational(4 * (m + 1)));
                if (b == 0) CHECK(v == casimir_lambda_a(a, m)); // special case collapses
            }
        }
    }
}

TEST_CASE("sp(1) Casimir on Sym^k H") {
    CHECK(casimir_sp1_symH(0) == 0);
    CHECK(casimir_sp1_symH(1) == Rational(3, 8));
    CHECK(casimir_sp1_symH(2) == 1);
    // m = 1 weight formula agrees
    for (int k = 0; k <= 6; ++k)
        CHECK(casimir_sp1_symH(k) == casimir_spm_killing(HighestWeight({k}), 1));
}

TEST_CASE("Lambda^{1,1}_0 E at m=2 is the adjoint") {
    CHECK(casimir_lambda_ab(1, 1, 2) == 1);
}

TEST_CASE("J eigenvalue") {
    CHECK(eigenvalue_J(0) == 0);
    CHECK(eigenvalue_J(1) == -3);
    CHECK(eigenvalue_J(4) == -24);
}

TEST_CASE("C eigenvalue values and the b=0 simplification") {
    CHECK(eigenvalue_C(0, 0, 0, 0, 2) == 0);
    CHECK(eigenvalue_C(2, 0, 0, 2, 2) == 4);
    CHECK(eigenvalue_C(0, 1, 1, 2, 2) == 0);
    // P(p,a,0,p) = (p-a)(2m+2-p-a)/2 on a grid, exact
    for (int m = 1; m <= 8; ++m)
        for (int p = 0; p <= 4 * m; ++p)
            for (int a = 0; a <= m; ++a)
                CHECK(eigenvalue_C(p, a, 0, p, m)
                      == Rational(p - a) * Rational(2 * m + 2 - p - a) / Rational(2));
}

TEST_CASE("Weyl dimension for sp(m)") {
    CHECK(weyl_dimension(HighestWeight({0, 0}), 2) == 1);
    CHECK(weyl_dimension(HighestWeight({1, 0}), 2) == 4);   // E
    CHECK(weyl_dimension(HighestWeight({1, 1}), 2) == 5);   // Lambda^2_0 E
    CHECK(weyl_dimension(HighestWeight({2, 0}), 2) == 10);  // adjoint
    CHECK(weyl_dimension(HighestWeight({2, 1}), 2) == 16);
    CHECK(weyl_dimension(HighestWeight({2, 2}), 2) == 14);
    // adjoint dimension m(2m+1) for a range of ranks
    for (int m = 1; m <= 8; ++m) {
        std::vector<int> adj(m, 0);
        adj[0] = 2;
        CHECK(weyl_dimension(HighestWeight(adj), m) == (long long)m * (2 * m + 1));
        // standard representation has dimension 2m
        std::vector<int> e1(m, 0);
        e1[0] = 1;
        CHECK(weyl_dimension(HighestWeight(e1), m) == 2 * m);
    }
}

TEST_CASE("admissible labels: frozen small cases") {
    auto l0 = admissible_labels(0, 2);
    CHECK(l0 == std::vector<RepLabel>{{0, 0, 0}});

    auto l2 = admissible_labels(2, 2);
    std::set<RepLabel> got(l2.begin(), l2.end());
    std::set<RepLabel> want{{0, 0, 0}, {0, 1, 1}, {2, 0, 0}, {2, 2, 0}};
    CHECK(got == want);

    auto l3 = admissible_labels(3, 2);
    std::set<RepLabel> got3(l3.begin(), l3.end());
    CHECK(got3.count({1, 2, 1}) == 1);
    CHECK(got3.count({3, 1, 0}) == 1);
    for (const auto& l : l3) CHECK(l.a <= 2); // a <= m excludes a = 3
}

TEST_CASE("admissibility is symmetric under p -> 4m-p") {
    for (int m = 2; m <= 4; ++m)
        for (int p = 0; p <= 4 * m; ++p) {
            auto a = admissible_labels(p, m);
            auto b = admissible_labels(4 * m - p, m);
            CHECK(a == b);
        }
}

TEST_CASE("parity constraint holds on every admissible label") {
    for (int m = 2; m <= 3; ++m)
        for (int p = 0; p <= 4 * m; ++p)
            for (const auto& l : admissible_labels(p, m)) {
                CHECK(((l.k ^ p) & 1) == 0);
                CHECK(((l.k ^ (l.a + l.b)) & 1) == 0);
                CHECK(2 * l.b <= std::min(p - l.k, 4 * m - p - l.k));
                CHECK(2 * l.a <= std::min(p + l.k, 4 * m - p + l.k));
            }
}

TEST_CASE("adjacency predicate") {
    CHECK(adjacent({1, 1, 0}, {0, 1, 1}));       // |k-k'|=1, |a-a'|+|b-b'|=1
    CHECK_FALSE(adjacent({1, 1, 0}, {1, 2, 0})); // k equal
    CHECK(adjacent({2, 2, 0}, {1, 1, 0}));
    CHECK_FALSE(adjacent({2, 2, 0}, {1, 1, 1})); // taxicab distance 2
    CHECK_FALSE(adjacent({3, 1, 0}, {1, 1, 1})); // k distance 2
}

TEST_CASE("label dimension and eigenpair") {
    RepLabel l{1, 2, 1};
    CHECK(l.dim(2) == 32); // (k+1) * 16
    auto ep = eigenpair(l, 3, 2);
    CHECK(ep.j == -3);
    CHECK(ep.c == 0);
}
