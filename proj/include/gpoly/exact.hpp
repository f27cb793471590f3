#pragma once

// Exact rational scalars, vectors and matrices, plus the Gaussian-elimination
// kernels (rank, kernel, particular solutions) the geometry is built on.
//
// Every value is canonical: GMP keeps fractions in lowest terms with a
// positive denominator, so equality of vectors is plain element equality.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpoly/errors.hpp"

namespace gpoly {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Rational text form

/// Parses "p", "p/q" or "-p/q" (base 10). Rejects a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                           : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    std::string num_str(num);
    if (num_str[0] == '+') num_str.erase(0, 1);
    mpz_class p(num_str, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

// ---------------------------------------------------------------------------
// Vectors

inline Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zeros(n);
    v[i] = 1;
    return v;
}

inline Vector make_vector(std::initializer_list<long> values) {
    Vector v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* where) {
    if (a != b)
        throw DimensionMismatch(std::string(where) + " (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    require_same_dim(a.size(), b.size(), "dot");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

inline Vector operator+(const Vector& a, const Vector& b) {
    require_same_dim(a.size(), b.size(), "vector add");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
    require_same_dim(a.size(), b.size(), "vector sub");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vector operator*(const Rational& s, const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

/// (1 - t) a + t b
inline Vector lerp(const Vector& a, const Vector& b, const Rational& t) {
    require_same_dim(a.size(), b.size(), "lerp");
    Vector r(a.size());
    const Rational s = 1 - t;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] + t * b[i];
    return r;
}

/// Positive rescaling so that the first nonzero coordinate is +1 or -1.
inline Vector normalize_direction(Vector v) {
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (it == v.end()) return v;
    const Rational scale = abs(*it);
    for (auto& x : v) x /= scale;
    return v;
}

inline void sort_unique(std::vector<Vector>& vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// ---------------------------------------------------------------------------
// Matrices

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    /// Builds a matrix from row vectors; `cols` is needed when `rows` is empty.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require_same_dim(rows[i].size(), cols, "matrix row");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() +
                      static_cast<std::ptrdiff_t>(i * cols));
        }
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
        std::vector<Vector> vs;
        for (auto r : rows) vs.push_back(make_vector(r));
        return from_rows(vs, cols);
    }

    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
        return from_rows(cols, rows).transpose();
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vector row_vector(std::size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }
    std::vector<Vector> row_vectors() const {
        std::vector<Vector> out;
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Vector operator*(std::span<const Rational> x) const {
        require_same_dim(x.size(), cols_, "matrix-vector product");
        Vector y = zeros(rows_);
        for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
        return y;
    }

    Matrix operator*(const Matrix& b) const {
        require_same_dim(cols_, b.rows_, "matrix product");
        Matrix p(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (sgn(a) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a * b(k, j);
            }
        return p;
    }

    void append_row(std::span<const Rational> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        require_same_dim(r.size(), cols_, "append_row");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Stacks two matrices with equal column counts.
inline Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_dim(a.cols(), b.cols(), "vstack");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
    return m;
}

// ---------------------------------------------------------------------------
// Elimination kernels

struct EchelonForm {
    Matrix reduced;                    // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Exact Gauss-Jordan elimination. Pivots are chosen left to right, first
/// nonzero row, so the output is a deterministic function of the input.
inline EchelonForm reduced_row_echelon(Matrix m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline EchelonForm reduced_row_echelon(const Matrix& m) {
    return reduced_row_echelon(m, m.cols());
}

inline std::size_t rank(const Matrix& a) { return reduced_row_echelon(a).pivots.size(); }

inline std::size_t rank(const std::vector<Vector>& rows, std::size_t dim) {
    return rank(Matrix::from_rows(rows, dim));
}

/// Basis of {x : Ax = 0}. Each vector sets one free variable to 1, the other
/// free variables to 0, and back-substitutes the pivots.
inline std::vector<Vector> kernel_basis(const Matrix& a) {
    const auto ech = reduced_row_echelon(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v = zeros(n);
        v[f] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with Ax = b (free variables zero), or nullopt if inconsistent.
inline std::optional<Vector> solve_linear(const Matrix& a, std::span<const Rational> b) {
    require_same_dim(b.size(), a.rows(), "solve_linear rhs");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto ech = reduced_row_echelon(aug, a.cols());
    for (std::size_t r = ech.pivots.size(); r < aug.rows(); ++r)
        if (sgn(ech.reduced(r, a.cols())) != 0) return std::nullopt;
    Vector x = zeros(a.cols());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, a.cols());
    return x;
}

/// Canonical basis of span(vs): the nonzero rows of its reduced echelon form.
inline std::vector<Vector> canonical_basis(const std::vector<Vector>& vs, std::size_t dim) {
    if (vs.empty()) return {};
    const auto ech = reduced_row_echelon(Matrix::from_rows(vs, dim));
    std::vector<Vector> out;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) out.push_back(ech.reduced.row_vector(i));
    return out;
}

/// Orthogonal complement of span(vs) in Q^dim.
inline std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vs, std::size_t dim) {
    if (vs.empty()) {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < dim; ++i) out.push_back(unit_vector(dim, i));
        return out;
    }
    return kernel_basis(Matrix::from_rows(vs, dim));
}

inline bool in_span(const std::vector<Vector>& basis, const Vector& v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    return solve_linear(Matrix::from_columns(basis, v.size()), v).has_value();
}

/// Matrix of the projection onto span(keep) along span(kill). The two spans
/// must be complementary.
inline Matrix projection_matrix(const std::vector<Vector>& keep, const std::vector<Vector>& kill,
                                std::size_t dim) {
    if (kill.empty()) return Matrix::identity(dim);
    if (keep.empty()) return Matrix(dim, dim);
    std::vector<Vector> all = keep;
    all.insert(all.end(), kill.begin(), kill.end());
    const Matrix basis = Matrix::from_columns(all, dim);
    Matrix proj(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
        auto coords = solve_linear(basis, unit_vector(dim, c));
        if (!coords) throw InvariantViolation("projection bases are not complementary");
        for (std::size_t k = 0; k < keep.size(); ++k) {
            const Rational& w = (*coords)[k];
            if (sgn(w) == 0) continue;
            for (std::size_t r = 0; r < dim; ++r) proj(r, c) += w * keep[k][r];
        }
    }
    return proj;
}

}  // namespace gpoly
