#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qkforms/form.hpp"

namespace qkforms {

/// Dense matrix of exact rationals.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& v = at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j) == 0) continue;
                    r.at(i, j) += v * o.at(k, j);
                }
            }
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in difference");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in sum");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Matrix operator*(const Rational& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a_) if (v != 0) return false;
        return true;
    }

    /// Stack vertically: [this; below].
    Matrix stack(const Matrix& below) const {
        if (cols_ != below.cols_) throw std::invalid_argument("Matrix: stack width mismatch");
        Matrix r(rows_ + below.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < below.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Exact rank by fraction-free (Bareiss) elimination with partial pivoting.
/// Rows are first scaled to integers; intermediates stay integral.
inline std::size_t rank(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < C; ++j)
            l = boost::multiprecision::lcm(l, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < C; ++j)
            a[i][j] = numerator(m.at(i, j)) * (l / denominator(m.at(i, j)));
    }
    Integer prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        // partial pivoting: largest magnitude entry in the column
        std::size_t piv = r;
        Integer best(0);
        for (std::size_t i = r; i < R; ++i) {
            Integer v = abs(a[i][c]);
            if (v > best) { best = v; piv = i; }
        }
        if (best == 0) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

inline std::size_t kernel_dim(const Matrix& m) { return m.cols() - rank(m); }

/// Exact nullspace basis via rational Gauss-Jordan reduction.
/// One vector per free column; entries are exact rationals.
inline std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m.at(i, j);

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && a[piv][c] == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[r], a[piv]);
        Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < C; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < C; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(C, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(C, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact inverse (throws on singular input).
inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t N = m.rows();
    std::vector<std::vector<Rational>> a(N, std::vector<Rational>(2 * N));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) a[i][j] = m.at(i, j);
        a[i][N + i] = 1;
    }
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t piv = c;
        while (piv < N && a[piv][c] == 0) ++piv;
        if (piv == N) throw std::invalid_argument("inverse: singular matrix");
        std::swap(a[c], a[piv]);
        Rational inv = Rational(1) / a[c][c];
        for (std::size_t j = 0; j < 2 * N; ++j) a[c][j] *= inv;
        for (std::size_t i = 0; i < N; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * N; ++j) a[i][j] -= f * a[c][j];
        }
    }
    Matrix r(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r.at(i, j) = a[i][N + j];
    return r;
}

/// Degree-homogeneous linear map on form spaces, materialized over the
/// canonical blade ordering: column i is the image of the i-th blade.
struct LinearOperator {
    int source_degree = 0;
    int target_degree = 0;
    Matrix matrix;
};

using FormOp = std::function<Form(const Form&)>;

/// Materialize an abstract operator mapping degree p to degree q on R^n.
/// Throws when the image of a basis blade is not homogeneous of degree q.
inline LinearOperator materialize(const FormOp& op, int n, int p, int q) {
    auto source = blades_of_degree(n, p);
    auto n_rows = binomial(n, q < 0 || q > n ? 0 : q);
    if (q < 0 || q > n) n_rows = 0;
    LinearOperator lin{p, q, Matrix(n_rows, source.size())};
    for (std::size_t col = 0; col < source.size(); ++col) {
        Form img = op(Form::blade(n, source[col]));
        if (!img.is_homogeneous(q))
            throw std::invalid_argument("materialize: operator image not homogeneous of expected degree");
        for (const auto& [b, c] : img.terms())
            lin.matrix.at(blade_rank(b), col) = c;
    }
    return lin;
}

/// Apply a materialized operator to the coefficient vector of a form.
inline Form apply(const LinearOperator& lin, const Form& u, int n) {
    if (!u.is_homogeneous(lin.source_degree))
        throw std::invalid_argument("apply: form degree does not match operator source");
    Form out(n);
    auto target = blades_of_degree(n, lin.target_degree);
    for (const auto& [b, c] : u.terms()) {
        std::size_t col = blade_rank(b);
        for (std::size_t i = 0; i < target.size(); ++i) {
            const Rational& v = lin.matrix.at(i, col);
            if (v != 0) out.add_term(target[i], v * c);
        }
    }
    return out;
}

} // namespace qkforms
