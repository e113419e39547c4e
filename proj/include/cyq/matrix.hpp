#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cyq/errors.hpp"
#include "cyq/multirat.hpp"
#include "cyq/rational.hpp"

namespace cyq {

/// Dense rows × cols matrix over an exact ring (Rational, MultiPoly or MultiRat).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows * cols), T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        r_ = static_cast<int>(rows.size());
        c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
        for (const auto &row : rows) {
            if (static_cast<int>(row.size()) != c_)
                throw DimensionMismatch("ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }
    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T &operator()(int i, int j) { return a_[static_cast<std::size_t>(i * c_ + j)]; }
    const T &operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * c_ + j)]; }

    bool is_zero() const
    {
        for (const auto &x : a_)
            if (!x.is_zero())
                return false;
        return true;
    }

    template <class F>
    auto map(F f) const
    {
        Matrix<decltype(f(std::declval<const T &>()))> m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                m(i, j) = f((*this)(i, j));
        return m;
    }

    Matrix transpose() const
    {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                m(j, i) = (*this)(i, j);
        return m;
    }

    friend Matrix operator+(const Matrix &a, const Matrix &b)
    {
        a.check_same(b);
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k)
            m.a_[k] = m.a_[k] + b.a_[k];
        return m;
    }
    friend Matrix operator-(const Matrix &a, const Matrix &b)
    {
        a.check_same(b);
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k)
            m.a_[k] = m.a_[k] - b.a_[k];
        return m;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.c_ != b.r_)
            throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int j = 0; j < b.c_; ++j) {
                T s(0);
                for (int k = 0; k < a.c_; ++k)
                    if (!a(i, k).is_zero() && !b(k, j).is_zero())
                        s = s + a(i, k) * b(k, j);
                m(i, j) = std::move(s);
            }
        return m;
    }
    friend Matrix operator*(const T &s, const Matrix &a)
    {
        Matrix m = a;
        for (auto &x : m.a_)
            x = s * x;
        return m;
    }
    Matrix operator-() const
    {
        Matrix m = *this;
        for (auto &x : m.a_)
            x = -x;
        return m;
    }
    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_)
            return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!(a.a_[k] == b.a_[k]))
                return false;
        return true;
    }

    std::string shape() const { return std::to_string(r_) + "x" + std::to_string(c_); }

private:
    void check_same(const Matrix &b) const
    {
        if (r_ != b.r_ || c_ != b.c_)
            throw DimensionMismatch(shape() + " vs " + b.shape());
    }
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using RatMatrix = Matrix<MultiRat>;
using QMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<MultiPoly>;

inline Rational exact_quotient(const Rational &a, const Rational &b) { return a / b; }
inline MultiRat exact_quotient(const MultiRat &a, const MultiRat &b) { return a / b; }
MultiPoly exact_quotient(const MultiPoly &a, const MultiPoly &b);

/// Fraction-free forward elimination (Bareiss) on `m` in place, with row swaps.
/// Returns the sign of the permutation, or 0 when the leading square block is singular.
template <class T>
int bareiss_forward(Matrix<T> &m)
{
    int n = m.rows(), sign = 1;
    T prev(1);
    for (int k = 0; k < n - 1 && k < m.cols(); ++k) {
        if (m(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && m(p, k).is_zero())
                ++p;
            if (p == n)
                return 0;
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < m.cols(); ++j)
                m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    if (m(n - 1, n - 1).is_zero())
        return 0;
    return sign;
}

/// Determinant of a square matrix by Bareiss elimination (exact divisions only).
template <class T>
T det(Matrix<T> m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("det of " + m.shape());
    if (m.rows() == 0)
        return T(1);
    int sign = bareiss_forward(m);
    if (sign == 0)
        return T(0);
    T d = m(m.rows() - 1, m.rows() - 1);
    return sign > 0 ? d : -d;
}

/// Adjugate and determinant: adj(m)·m = det(m)·I. Throws SingularMatrix when det = 0.
template <class T>
std::pair<Matrix<T>, T> adjugate_det(const Matrix<T> &m)
{
    int n = m.rows();
    if (n != m.cols())
        throw DimensionMismatch("inverse of " + m.shape());
    Matrix<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    int sign = bareiss_forward(aug);
    if (sign == 0)
        throw SingularMatrix("determinant is zero");
    T d = aug(n - 1, n - 1);
    // back substitution for det·m⁻¹; every quotient is an adjugate entry
    Matrix<T> adj(n, n);
    for (int c = 0; c < n; ++c)
        for (int i = n - 1; i >= 0; --i) {
            T s = d * aug(i, n + c);
            for (int j = i + 1; j < n; ++j)
                s = s - aug(i, j) * adj(j, c);
            adj(i, c) = exact_quotient(s, aug(i, i));
        }
    if (sign < 0) {
        adj = -adj;
        d = -d;
    }
    return {adj, d};
}

inline QMatrix inverse(const QMatrix &m)
{
    auto [adj, d] = adjugate_det(m);
    return d.inverse() * adj;
}

/// Reduced row echelon form over ℚ and the pivot column of each nonzero row.
struct Rref {
    QMatrix m;
    std::vector<int> pivots;
};
Rref rref(QMatrix m);

/// Inverse over ℚ(t): each row is cleared to polynomials by its denominator lcm,
/// the polynomial matrix is inverted through its adjugate, and the row scalings are
/// reapplied as column scalings.
RatMatrix inverse(const RatMatrix &m);

RatMatrix derivative(const RatMatrix &m, int v);
RatMatrix to_rat(const QMatrix &m);
RatMatrix to_rat(const PolyMatrix &m);
/// Evaluates every entry at a point of ℚ^8.
QMatrix evaluate(const RatMatrix &m, std::span<const Rational> point);

template <class T>
std::string to_string(const Matrix<T> &m)
{
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j)
                s += ", ";
            s += m(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

} // namespace cyq
