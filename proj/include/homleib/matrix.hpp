#pragma once

#include "homleib/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homleib {

template <class T> using Vec = std::vector<T>;

template <class T> struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

    T &at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const T &at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = T(1);
        return m;
    }

    bool isZero() const {
        for (const auto &x : a)
            if (!(x == T(0)))
                return false;
        return true;
    }

    bool isSquare() const { return rows == cols; }

    Vec<T> apply(const Vec<T> &x) const {
        Vec<T> y(rows, T(0));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                y[r] = y[r] + at(r, c) * x[c];
        return y;
    }

    Vec<T> column(std::size_t c) const {
        Vec<T> y(rows, T(0));
        for (std::size_t r = 0; r < rows; ++r)
            y[r] = at(r, c);
        return y;
    }

    Matrix operator*(const Matrix &o) const {
        Matrix m(rows, o.cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t k = 0; k < cols; ++k) {
                const T &x = at(r, k);
                if (x == T(0))
                    continue;
                for (std::size_t c = 0; c < o.cols; ++c)
                    m.at(r, c) = m.at(r, c) + x * o.at(k, c);
            }
        return m;
    }

    Matrix operator+(const Matrix &o) const {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i)
            m.a[i] = a[i] + o.a[i];
        return m;
    }

    Matrix operator-(const Matrix &o) const {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i)
            m.a[i] = a[i] - o.a[i];
        return m;
    }

    Matrix operator-() const {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i)
            m.a[i] = -a[i];
        return m;
    }

    bool operator==(const Matrix &o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    Matrix transposed() const {
        Matrix m(cols, rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.at(c, r) = at(r, c);
        return m;
    }

    // Block-diagonal direct sum.
    static Matrix blockDiag(const Matrix &a, const Matrix &b) {
        Matrix m(a.rows + b.rows, a.cols + b.cols);
        for (std::size_t r = 0; r < a.rows; ++r)
            for (std::size_t c = 0; c < a.cols; ++c)
                m.at(r, c) = a.at(r, c);
        for (std::size_t r = 0; r < b.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c)
                m.at(a.rows + r, a.cols + c) = b.at(r, c);
        return m;
    }
};

// Structure constants of a bilinear map A x B -> C, stored as
// t(i, j, k) = coefficient of the k-th basis vector of C in e_i * e_j.
template <class T> struct Tensor3 {
    std::size_t d0 = 0, d1 = 0, d2 = 0;
    std::vector<T> a;

    Tensor3() = default;
    Tensor3(std::size_t n0, std::size_t n1, std::size_t n2)
        : d0(n0), d1(n1), d2(n2), a(n0 * n1 * n2, T(0)) {}

    T &at(std::size_t i, std::size_t j, std::size_t k) {
        return a[(i * d1 + j) * d2 + k];
    }
    const T &at(std::size_t i, std::size_t j, std::size_t k) const {
        return a[(i * d1 + j) * d2 + k];
    }

    bool isZero() const {
        for (const auto &x : a)
            if (!(x == T(0)))
                return false;
        return true;
    }

    Vec<T> apply(const Vec<T> &u, const Vec<T> &v) const {
        Vec<T> w(d2, T(0));
        for (std::size_t i = 0; i < d0; ++i) {
            if (u[i] == T(0))
                continue;
            for (std::size_t j = 0; j < d1; ++j) {
                if (v[j] == T(0))
                    continue;
                T c = u[i] * v[j];
                for (std::size_t k = 0; k < d2; ++k)
                    w[k] = w[k] + c * at(i, j, k);
            }
        }
        return w;
    }

    Tensor3 operator+(const Tensor3 &o) const {
        Tensor3 t(d0, d1, d2);
        for (std::size_t i = 0; i < a.size(); ++i)
            t.a[i] = a[i] + o.a[i];
        return t;
    }

    Tensor3 operator-(const Tensor3 &o) const {
        Tensor3 t(d0, d1, d2);
        for (std::size_t i = 0; i < a.size(); ++i)
            t.a[i] = a[i] - o.a[i];
        return t;
    }

    bool operator==(const Tensor3 &o) const {
        return d0 == o.d0 && d1 == o.d1 && d2 == o.d2 && a == o.a;
    }

    // Swap the two argument slots: t'(i,j,k) = t(j,i,k).
    Tensor3 swappedArgs() const {
        Tensor3 t(d1, d0, d2);
        for (std::size_t i = 0; i < d0; ++i)
            for (std::size_t j = 0; j < d1; ++j)
                for (std::size_t k = 0; k < d2; ++k)
                    t.at(j, i, k) = at(i, j, k);
        return t;
    }
};

// Trilinear map A x B x C -> D, same storage convention as Tensor3.
template <class T> struct Tensor4 {
    std::size_t d0 = 0, d1 = 0, d2 = 0, d3 = 0;
    std::vector<T> a;

    Tensor4() = default;
    Tensor4(std::size_t n0, std::size_t n1, std::size_t n2, std::size_t n3)
        : d0(n0), d1(n1), d2(n2), d3(n3), a(n0 * n1 * n2 * n3, T(0)) {}

    T &at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return a[((i * d1 + j) * d2 + k) * d3 + l];
    }
    const T &at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return a[((i * d1 + j) * d2 + k) * d3 + l];
    }

    bool isZero() const {
        for (const auto &x : a)
            if (!(x == T(0)))
                return false;
        return true;
    }

    bool operator==(const Tensor4 &o) const {
        return d0 == o.d0 && d1 == o.d1 && d2 == o.d2 && d3 == o.d3 && a == o.a;
    }
};

template <class T> Vec<T> basisVec(std::size_t dim, std::size_t i) {
    Vec<T> v(dim, T(0));
    v[i] = T(1);
    return v;
}

template <class T> Vec<T> vecAdd(const Vec<T> &x, const Vec<T> &y) {
    Vec<T> z(x.size(), T(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = x[i] + y[i];
    return z;
}

template <class T> Vec<T> vecSub(const Vec<T> &x, const Vec<T> &y) {
    Vec<T> z(x.size(), T(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = x[i] - y[i];
    return z;
}

template <class T> bool vecIsZero(const Vec<T> &x) {
    for (const auto &v : x)
        if (!(v == T(0)))
            return false;
    return true;
}

inline std::string scalarToString(const Rational &r) { return rationalToString(r); }

template <class T> std::string vecToString(const Vec<T> &x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            s += ", ";
        s += scalarToString(x[i]);
    }
    return s + "]";
}

} // namespace homleib
