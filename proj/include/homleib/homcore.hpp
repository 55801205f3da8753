#pragma once

#include "homleib/matrix.hpp"
#include "homleib/report.hpp"

#include <string>

namespace homleib {

enum class Handedness { Left, Right };

template <class T> struct HomVectorSpace {
    std::size_t dim = 0;
    std::vector<std::string> labels; // optional basis names
    Matrix<T> twist;                 // dim x dim

    std::string label(std::size_t i) const {
        if (i < labels.size())
            return labels[i];
        return "e" + std::to_string(i + 1);
    }

    Vec<T> alpha(const Vec<T> &v) const { return twist.apply(v); }
};

template <class T> struct HomAlgebra {
    HomVectorSpace<T> space;
    Tensor3<T> product; // (dim, dim, dim): e_i e_j = sum_k c(i,j,k) e_k
    Handedness handedness = Handedness::Left;

    std::size_t dim() const { return space.dim; }
    Vec<T> mul(const Vec<T> &x, const Vec<T> &y) const { return product.apply(x, y); }
    Vec<T> alpha(const Vec<T> &x) const { return space.alpha(x); }
};

template <class T> struct Bimodule {
    HomVectorSpace<T> space;
    Tensor3<T> left;  // (dim g, dim M, dim M): x . m
    Tensor3<T> right; // (dim M, dim g, dim M): m . x

    std::size_t dim() const { return space.dim; }
};

namespace detail {

template <class T>
std::string witness2(const HomVectorSpace<T> &a, std::size_t i,
                     const HomVectorSpace<T> &b, std::size_t j, const Vec<T> &defect) {
    return "(" + a.label(i) + "," + b.label(j) + "): defect " + vecToString(defect);
}

template <class T>
std::string witness3(const HomVectorSpace<T> &a, std::size_t i,
                     const HomVectorSpace<T> &b, std::size_t j,
                     const HomVectorSpace<T> &c, std::size_t k, const Vec<T> &defect) {
    return "(" + a.label(i) + "," + b.label(j) + "," + c.label(k) + "): defect " +
           vecToString(defect);
}

} // namespace detail

// alpha(x)(yz) - (xy)alpha(z) - alpha(y)(xz) over all basis triples.
template <class T> CheckReport checkLeftHomLeibniz(const HomAlgebra<T> &a) {
    CheckReport rep;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<T> x = basisVec<T>(n, i), y = basisVec<T>(n, j), z = basisVec<T>(n, k);
                Vec<T> d = vecSub(a.mul(a.alpha(x), a.mul(y, z)),
                                  vecAdd(a.mul(a.mul(x, y), a.alpha(z)),
                                         a.mul(a.alpha(y), a.mul(x, z))));
                if (!vecIsZero(d)) {
                    rep.add("leftHomLeibniz", false,
                            detail::witness3(a.space, i, a.space, j, a.space, k, d));
                    return rep;
                }
            }
    rep.add("leftHomLeibniz", true);
    return rep;
}

// (xy)alpha(z) - (xz)alpha(y) - alpha(x)(yz) over all basis triples.
template <class T> CheckReport checkRightHomLeibniz(const HomAlgebra<T> &a) {
    CheckReport rep;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<T> x = basisVec<T>(n, i), y = basisVec<T>(n, j), z = basisVec<T>(n, k);
                Vec<T> d = vecSub(a.mul(a.mul(x, y), a.alpha(z)),
                                  vecAdd(a.mul(a.mul(x, z), a.alpha(y)),
                                         a.mul(a.alpha(x), a.mul(y, z))));
                if (!vecIsZero(d)) {
                    rep.add("rightHomLeibniz", false,
                            detail::witness3(a.space, i, a.space, j, a.space, k, d));
                    return rep;
                }
            }
    rep.add("rightHomLeibniz", true);
    return rep;
}

template <class T> CheckReport checkHomLeibniz(const HomAlgebra<T> &a) {
    return a.handedness == Handedness::Left ? checkLeftHomLeibniz(a)
                                            : checkRightHomLeibniz(a);
}

// alpha(e_i e_j) = alpha(e_i) alpha(e_j).
template <class T> CheckReport checkMultiplicativity(const HomAlgebra<T> &a) {
    CheckReport rep;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<T> x = basisVec<T>(n, i), y = basisVec<T>(n, j);
            Vec<T> d = vecSub(a.alpha(a.mul(x, y)), a.mul(a.alpha(x), a.alpha(y)));
            if (!vecIsZero(d)) {
                rep.add("multiplicativity", false,
                        detail::witness2(a.space, i, a.space, j, d));
                return rep;
            }
        }
    rep.add("multiplicativity", true);
    return rep;
}

template <class T>
CheckReport checkBimodule(const HomAlgebra<T> &a, const Bimodule<T> &b) {
    CheckReport rep;
    const std::size_t n = a.dim(), m = b.dim();
    auto L = [&](const Vec<T> &x, const Vec<T> &mm) { return b.left.apply(x, mm); };
    auto R = [&](const Vec<T> &mm, const Vec<T> &x) { return b.right.apply(mm, x); };
    auto alM = [&](const Vec<T> &mm) { return b.space.alpha(mm); };
    auto al = [&](const Vec<T> &x) { return a.alpha(x); };

    // alpha_M(x.m) = alpha(x).alpha_M(m) and alpha_M(m.x) = alpha_M(m).alpha(x)
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t p = 0; p < m && ok; ++p) {
            Vec<T> x = basisVec<T>(n, i), mm = basisVec<T>(m, p);
            Vec<T> d1 = vecSub(alM(L(x, mm)), L(al(x), alM(mm)));
            Vec<T> d2 = vecSub(alM(R(mm, x)), R(alM(mm), al(x)));
            if (!vecIsZero(d1)) {
                rep.add("twistAction", false, detail::witness2(a.space, i, b.space, p, d1));
                ok = false;
            } else if (!vecIsZero(d2)) {
                rep.add("twistAction", false, detail::witness2(b.space, p, a.space, i, d2));
                ok = false;
            }
        }
    if (ok)
        rep.add("twistAction", true);

    auto evalOne = [&](int which, const Vec<T> &x, const Vec<T> &y, const Vec<T> &mm) {
        switch (which) {
        case 0: // (L1) alpha(x).(y.m) - (xy).alpha_M(m) - alpha(y).(x.m)
            return vecSub(L(al(x), L(y, mm)),
                          vecAdd(L(a.mul(x, y), alM(mm)), L(al(y), L(x, mm))));
        case 1: // (L2) alpha_M(m).(xy) - (m.x).alpha(y) - alpha(x).(m.y)
            return vecSub(R(alM(mm), a.mul(x, y)),
                          vecAdd(R(R(mm, x), al(y)), L(al(x), R(mm, y))));
        case 2: // (L3) alpha(x).(m.y) - (x.m).alpha(y) - alpha_M(m).(xy)
            return vecSub(L(al(x), R(mm, y)),
                          vecAdd(R(L(x, mm), al(y)), R(alM(mm), a.mul(x, y))));
        case 3: // (R1) (m.x).alpha(y) - alpha_M(m).(xy) - (m.y).alpha(x)
            return vecSub(R(R(mm, x), al(y)),
                          vecAdd(R(alM(mm), a.mul(x, y)), R(R(mm, y), al(x))));
        case 4: // (R2) (x.m).alpha(y) - alpha(x).(m.y) - (xy).alpha_M(m)
            return vecSub(R(L(x, mm), al(y)),
                          vecAdd(L(al(x), R(mm, y)), L(a.mul(x, y), alM(mm))));
        default: // (R3) (xy).alpha_M(m) - alpha(x).(y.m) - (x.m).alpha(y)
            return vecSub(L(a.mul(x, y), alM(mm)),
                          vecAdd(L(al(x), L(y, mm)), R(L(x, mm), al(y))));
        }
    };
    const bool leftCase = (a.handedness == Handedness::Left);
    const char *names[3] = {leftCase ? "L1" : "R1", leftCase ? "L2" : "R2",
                            leftCase ? "L3" : "R3"};
    for (int c = 0; c < 3; ++c) {
        int which = leftCase ? c : c + 3;
        bool pass = true;
        for (std::size_t i = 0; i < n && pass; ++i)
            for (std::size_t j = 0; j < n && pass; ++j)
                for (std::size_t p = 0; p < m && pass; ++p) {
                    Vec<T> d = evalOne(which, basisVec<T>(n, i), basisVec<T>(n, j),
                                       basisVec<T>(m, p));
                    if (!vecIsZero(d)) {
                        std::string w = "(" + a.space.label(i) + "," + a.space.label(j) +
                                        "," + b.space.label(p) + "): defect " +
                                        vecToString(d);
                        rep.add(names[c], false, w);
                        pass = false;
                    }
                }
        if (pass)
            rep.add(names[c], true);
    }
    return rep;
}

// Algebra on g + M with (x,m)(y,n) = (xy, x.n + m.y) and twist alpha + alpha_M.
// Basis order: g-part first, then M-part.
template <class T>
HomAlgebra<T> semidirectProductUnchecked(const HomAlgebra<T> &a, const Bimodule<T> &b) {
    const std::size_t n = a.dim(), m = b.dim(), d = n + m;
    HomAlgebra<T> out;
    out.handedness = a.handedness;
    out.space.dim = d;
    out.space.twist = Matrix<T>::blockDiag(a.space.twist, b.space.twist);
    out.product = Tensor3<T>(d, d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out.product.at(i, j, k) = a.product.at(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
                out.product.at(i, n + p, n + q) = b.left.at(i, p, q);  // x . n
                out.product.at(n + p, i, n + q) = b.right.at(p, i, q); // m . y
            }
    return out;
}

template <class T>
HomAlgebra<T> semidirectProduct(const HomAlgebra<T> &a, const Bimodule<T> &b) {
    CheckReport inner = checkBimodule(a, b);
    if (!inner.passed())
        throw PreconditionError("semidirectProduct: bimodule check failed", inner);
    return semidirectProductUnchecked(a, b);
}

// Transpose the product in its argument slots and flip handedness.
template <class T> HomAlgebra<T> oppositeHandedness(const HomAlgebra<T> &a) {
    HomAlgebra<T> out = a;
    out.product = a.product.swappedArgs();
    out.handedness =
        a.handedness == Handedness::Left ? Handedness::Right : Handedness::Left;
    return out;
}

// Yau twist of an untwisted algebra by an algebra endomorphism:
// product' = endo o product, twist' = endo.
template <class T>
HomAlgebra<T> yauTwist(const HomAlgebra<T> &a, const Matrix<T> &endo) {
    const std::size_t n = a.dim();
    if (!(a.space.twist == Matrix<T>::identity(n)))
        throw InputError("yauTwist: input twist must be the identity");
    if (endo.rows != n || endo.cols != n)
        throw InputError("yauTwist: endomorphism shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<T> lhs = endo.apply(a.mul(basisVec<T>(n, i), basisVec<T>(n, j)));
            Vec<T> rhs = a.mul(endo.column(i), endo.column(j));
            if (!vecIsZero(vecSub(lhs, rhs)))
                throw InputError("yauTwist: map is not an algebra endomorphism");
        }
    HomAlgebra<T> out = a;
    out.space.twist = endo;
    out.product = Tensor3<T>(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<T> v = endo.apply(a.mul(basisVec<T>(n, i), basisVec<T>(n, j)));
            for (std::size_t k = 0; k < n; ++k)
                out.product.at(i, j, k) = v[k];
        }
    return out;
}

// M = g acting on itself by the product.
template <class T> Bimodule<T> adjointBimodule(const HomAlgebra<T> &a) {
    Bimodule<T> b;
    b.space = a.space;
    b.left = a.product;
    b.right = a.product;
    return b;
}

} // namespace homleib
