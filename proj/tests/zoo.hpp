#pragma once

// Shared fixture instances and independent oracles for the test suites.

#include "homleib/cohomology.hpp"
#include "homleib/deform.hpp"
#include "homleib/lmcat.hpp"

#include <random>
#include <vector>

namespace homleib::zoo {

// Two-dimensional algebra with e1*e1 = e2, everything else zero, identity
// twist. The smallest non-abelian Leibniz algebra.
inline HomAlgebra<Rational> l2Algebra() {
    HomAlgebra<Rational> a;
    a.space = {2, {"e1", "e2"}, QMatrix::identity(2)};
    a.product = Tensor3<Rational>(2, 2, 2);
    a.product.at(0, 0, 1) = 1;
    a.handedness = Handedness::Left;
    return a;
}

inline QLMObject zeroObject(std::size_t n, std::size_t m) {
    QLMObject o;
    o.algebra.space = {n, {}, QMatrix::identity(n)};
    o.algebra.product = Tensor3<Rational>(n, n, n);
    o.algebra.handedness = Handedness::Left;
    o.module.space = {m, {}, QMatrix::identity(m)};
    o.module.left = Tensor3<Rational>(n, m, m);
    o.module.right = Tensor3<Rational>(m, n, m);
    o.anchor = QMatrix(n, m);
    return o;
}

inline QLMObject adjointObject(const HomAlgebra<Rational> &a) {
    QLMObject o;
    o.algebra = a;
    o.module = adjointBimodule(a);
    o.anchor = QMatrix::identity(a.dim());
    return o;
}

inline QLMObject l2Adjoint() { return adjointObject(l2Algebra()); }

// Algebra endomorphisms of l2Algebra are exactly e1 -> a e1 + b e2,
// e2 -> a^2 e2.
inline QMatrix l2Endo(const Rational &a, const Rational &b) {
    QMatrix e(2, 2);
    e.at(0, 0) = a;
    e.at(1, 0) = b;
    e.at(1, 1) = a * a;
    return e;
}

inline QLMObject l2YauAdjoint(const Rational &a = 2, const Rational &b = 0) {
    return adjointObject(yauTwist(l2Algebra(), l2Endo(a, b)));
}

// Adjoint-shaped representation read straight off the object data, without
// the validity gate of adjointRepresentation. Needed to probe structures
// that are not valid LM objects.
inline QLMRepresentation adjointRepUnchecked(const QLMObject &o) {
    QLMRepresentation r;
    r.vSpace = o.module.space;
    r.wSpace = o.algebra.space;
    r.phi = o.anchor;
    r.vLeft = o.module.left;
    r.vRight = o.module.right;
    r.wLeft = o.algebra.product;
    r.wRight = o.algebra.product;
    r.crossR = o.module.left;
    r.crossL = o.module.right;
    return r;
}

using Rng = std::mt19937;

inline Rational randScalar(Rng &rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    return Rational(num(rng));
}

inline Rational randNonzero(Rng &rng) {
    Rational r = 0;
    while (r == 0)
        r = randScalar(rng);
    return r;
}

inline QLMObject randomYauAdjoint(Rng &rng) {
    return l2YauAdjoint(randNonzero(rng), randScalar(rng));
}

// N0 = N1 = [[a,0],[b,a]] on the L2 adjoint object.
inline NijenhuisPair l2NijPair(const Rational &a, const Rational &b) {
    QMatrix n(2, 2);
    n.at(0, 0) = a;
    n.at(1, 0) = b;
    n.at(1, 1) = a;
    return {n, n};
}

inline NijenhuisPair randomNijPair(Rng &rng) {
    return l2NijPair(randScalar(rng), randScalar(rng));
}

inline QMatrix randMatrix(std::size_t rows, std::size_t cols, Rng &rng) {
    QMatrix m(rows, cols);
    for (auto &x : m.a)
        x = randScalar(rng);
    return m;
}

inline Tensor3<Rational> randTensor3(std::size_t d0, std::size_t d1, std::size_t d2,
                                     Rng &rng) {
    Tensor3<Rational> t(d0, d1, d2);
    for (auto &x : t.a)
        x = randScalar(rng);
    return t;
}

inline Cochain1 randCochain1(const QLMObject &o, const QLMRepresentation &r, Rng &rng) {
    return {randMatrix(r.dimW(), o.dimG(), rng), randMatrix(r.dimV(), o.dimM(), rng)};
}

inline Cochain2 randCochain2(const QLMObject &o, const QLMRepresentation &r, Rng &rng) {
    const std::size_t n = o.dimG(), m = o.dimM(), v = r.dimV(), w = r.dimW();
    return {randTensor3(n, n, w, rng), randTensor3(n, m, v, rng),
            randTensor3(m, n, v, rng), randMatrix(w, m, rng)};
}

// ---- oracles ----------------------------------------------------------

// Rank by fraction-free Bareiss elimination with full column scan; shares
// no code with rref().
inline std::size_t bareissRank(QMatrix m) {
    std::size_t rank = 0;
    Rational prev = 1;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0)
            ++piv;
        if (piv == m.rows)
            continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(rank, j));
        for (std::size_t i = rank + 1; i < m.rows; ++i)
            for (std::size_t j = col + 1; j < m.cols; ++j)
                m.at(i, j) = (m.at(rank, col) * m.at(i, j) -
                              m.at(i, col) * m.at(rank, j)) /
                             prev;
        for (std::size_t i = rank + 1; i < m.rows; ++i)
            m.at(i, col) = 0;
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

// Cohomology dimensions from the coboundary matrices using only the
// Bareiss rank: dim ker dK - rank d(K-1).
struct OracleDims {
    std::size_t zDim, bDim, hDim;
};

inline OracleDims rankOracleDims(const QMatrix &dIn, const QMatrix &dOut) {
    std::size_t z = dOut.cols - bareissRank(dOut);
    std::size_t b = bareissRank(dIn);
    return {z, b, z - b};
}

// Coefficient of lambda^k recovered by evaluating the polynomial at
// 0, 1, ..., order and solving the Vandermonde system by Lagrange
// interpolation; does not read the coefficient array directly.
inline Rational polyCoeffByInterpolation(const TruncPoly &p, std::size_t k) {
    const std::size_t d = p.order();
    std::vector<Rational> val(d + 1, Rational(0));
    for (std::size_t t = 0; t <= d; ++t) {
        Rational x(static_cast<int>(t)), pw = 1, acc = 0;
        for (std::size_t i = 0; i <= d; ++i) {
            acc += p.coeff(i) * pw;
            pw *= x;
        }
        val[t] = acc;
    }
    // Newton's divided differences, then expand to the monomial basis.
    std::vector<Rational> dd = val;
    for (std::size_t lvl = 1; lvl <= d; ++lvl)
        for (std::size_t i = d; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<int>(lvl));
    // poly = sum_i dd[i] * prod_{j<i} (x - j); collect the x^k coefficient.
    std::vector<Rational> mono(d + 1, Rational(0));
    std::vector<Rational> basis{Rational(1)}; // prod_{j<i} (x - j)
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j)
            mono[j] += dd[i] * basis[j];
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            next[j + 1] += basis[j];
            next[j] -= Rational(static_cast<int>(i)) * basis[j];
        }
        basis = std::move(next);
    }
    return k <= d ? mono[k] : Rational(0);
}

// Direct evaluation of the left Hom-Leibniz defect on basis triples, by
// structure-constant sums rather than Tensor3::apply.
inline bool bruteForceLeftLeibniz(const HomAlgebra<Rational> &a) {
    const std::size_t n = a.dim();
    auto mul = [&](std::size_t i, std::size_t j, std::size_t k) {
        return a.product.at(i, j, k);
    };
    auto al = [&](std::size_t i, std::size_t j) { return a.space.twist.at(i, j); };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t t = 0; t < n; ++t) {
                    Rational lhs = 0, rhs = 0;
                    for (std::size_t u = 0; u < n; ++u)
                        for (std::size_t s = 0; s < n; ++s) {
                            lhs += al(u, x) * mul(y, z, s) * mul(u, s, t);
                            rhs += mul(x, y, s) * al(u, z) * mul(s, u, t) +
                                   al(u, y) * mul(x, z, s) * mul(u, s, t);
                        }
                    if (lhs != rhs)
                        return false;
                }
    return true;
}

} // namespace homleib::zoo
