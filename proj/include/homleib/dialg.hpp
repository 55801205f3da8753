#pragma once

#include "homleib/lmcat.hpp"

namespace homleib {

// One space, two products: left is x -| y, right is x |- y.
template <class T> struct Dialgebra {
    HomVectorSpace<T> space;
    Tensor3<T> left;  // -|
    Tensor3<T> right; // |-

    std::size_t dim() const { return space.dim; }
    Vec<T> dashv(const Vec<T> &x, const Vec<T> &y) const { return left.apply(x, y); }
    Vec<T> vdash(const Vec<T> &x, const Vec<T> &y) const { return right.apply(x, y); }
    Vec<T> alpha(const Vec<T> &x) const { return space.alpha(x); }
};

namespace detail {

// Shared equation evaluators: (D1) is (DL1) and (D2) is (DR1).
template <class T>
Vec<T> dialgDefect(const Dialgebra<T> &d, int eq, const Vec<T> &x, const Vec<T> &y,
                   const Vec<T> &z) {
    auto al = [&](const Vec<T> &u) { return d.alpha(u); };
    auto dv = [&](const Vec<T> &u, const Vec<T> &v) { return d.dashv(u, v); };
    auto vd = [&](const Vec<T> &u, const Vec<T> &v) { return d.vdash(u, v); };
    switch (eq) {
    case 1: // alpha(x)|-(y-|z) = (x|-y)-|alpha(z) + alpha(y)-|(x|-z)
        return vecSub(vd(al(x), dv(y, z)),
                      vecAdd(dv(vd(x, y), al(z)), dv(al(y), vd(x, z))));
    case 2: // (x|-y)-|alpha(z) = alpha(x)|-(y-|z) + (x-|z)|-alpha(y)
        return vecSub(dv(vd(x, y), al(z)),
                      vecAdd(vd(al(x), dv(y, z)), vd(dv(x, z), al(y))));
    case 3: // (DL2) alpha(x)|-(y|-z) = (x-|y)|-alpha(z) + alpha(y)|-(x|-z)
        return vecSub(vd(al(x), vd(y, z)),
                      vecAdd(vd(dv(x, y), al(z)), vd(al(y), vd(x, z))));
    case 4: // (DL3) alpha(x)-|(y|-z) = (x-|y)-|alpha(z) + alpha(y)|-(x-|z)
        return vecSub(dv(al(x), vd(y, z)),
                      vecAdd(dv(dv(x, y), al(z)), vd(al(y), dv(x, z))));
    case 5: // (DR2) (x-|y)-|alpha(z) = alpha(x)-|(y|-z) + (x-|z)-|alpha(y)
        return vecSub(dv(dv(x, y), al(z)),
                      vecAdd(dv(al(x), vd(y, z)), dv(dv(x, z), al(y))));
    default: // (DR3) (x-|y)|-alpha(z) = alpha(x)|-(y|-z) + (x|-z)-|alpha(y)
        return vecSub(vd(dv(x, y), al(z)),
                      vecAdd(vd(al(x), vd(y, z)), dv(vd(x, z), al(y))));
    }
}

template <class T>
void dialgCheckEq(CheckReport &rep, const Dialgebra<T> &d, int eq,
                  const std::string &name) {
    const std::size_t n = d.dim();
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j)
            for (std::size_t k = 0; k < n && ok; ++k) {
                Vec<T> dv = dialgDefect(d, eq, basisVec<T>(n, i), basisVec<T>(n, j),
                                        basisVec<T>(n, k));
                if (!vecIsZero(dv)) {
                    ok = false;
                    w = witness3(d.space, i, d.space, j, d.space, k, dv);
                }
            }
    rep.add(name, ok, w);
}

} // namespace detail

template <class T> CheckReport checkAdmissible(const Dialgebra<T> &d) {
    CheckReport rep;
    HomAlgebra<T> vd{d.space, d.right, Handedness::Left};
    HomAlgebra<T> dv{d.space, d.left, Handedness::Right};
    rep.merge(checkLeftHomLeibniz(vd), "vdash.");
    rep.merge(checkRightHomLeibniz(dv), "dashv.");
    detail::dialgCheckEq(rep, d, 1, "D1");
    detail::dialgCheckEq(rep, d, 2, "D2");
    return rep;
}

template <class T> CheckReport checkLeftDialgebra(const Dialgebra<T> &d) {
    CheckReport rep;
    HomAlgebra<T> vd{d.space, d.right, Handedness::Left};
    rep.merge(checkLeftHomLeibniz(vd), "vdash.");
    detail::dialgCheckEq(rep, d, 1, "DL1");
    detail::dialgCheckEq(rep, d, 3, "DL2");
    detail::dialgCheckEq(rep, d, 4, "DL3");
    return rep;
}

template <class T> CheckReport checkRightDialgebra(const Dialgebra<T> &d) {
    CheckReport rep;
    HomAlgebra<T> dv{d.space, d.left, Handedness::Right};
    rep.merge(checkRightHomLeibniz(dv), "dashv.");
    detail::dialgCheckEq(rep, d, 2, "DR1");
    detail::dialgCheckEq(rep, d, 5, "DR2");
    detail::dialgCheckEq(rep, d, 6, "DR3");
    return rep;
}

// alpha multiplicative over both products; kept separate from the axiom
// verdicts since the defining conditions do not include it.
template <class T> CheckReport checkDialgebraTwistMultiplicativity(const Dialgebra<T> &d) {
    CheckReport rep;
    HomAlgebra<T> vd{d.space, d.right, Handedness::Left};
    HomAlgebra<T> dv{d.space, d.left, Handedness::Right};
    rep.merge(checkMultiplicativity(vd), "vdash.");
    rep.merge(checkMultiplicativity(dv), "dashv.");
    return rep;
}

// xy := x|-y - y-|x (left Hom-Leibniz), x.y := x-|y - y|-x (right Hom-Leibniz).
template <class T>
std::pair<HomAlgebra<T>, HomAlgebra<T>> leibnizFromAdmissible(const Dialgebra<T> &d) {
    {
        CheckReport c = checkAdmissible(d);
        if (!c.passed())
            throw PreconditionError("leibnizFromAdmissible: dialgebra not admissible", c);
    }
    const std::size_t n = d.dim();
    HomAlgebra<T> lft{d.space, Tensor3<T>(n, n, n), Handedness::Left};
    HomAlgebra<T> rgt{d.space, Tensor3<T>(n, n, n), Handedness::Right};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                lft.product.at(i, j, k) = d.right.at(i, j, k) - d.left.at(j, i, k);
                rgt.product.at(i, j, k) = d.left.at(i, j, k) - d.right.at(j, i, k);
            }
    return {lft, rgt};
}

// Dialgebra on (M, alpha_M): m -| n := m.f(n), m |- n := f(m).n.
template <class T> Dialgebra<T> dialgebraFromLM(const LMObject<T> &o) {
    {
        CheckReport c = checkLMObject(o);
        if (!c.passed())
            throw PreconditionError("dialgebraFromLM: invalid LM object", c);
    }
    const std::size_t m = o.dimM();
    Dialgebra<T> d{o.module.space, Tensor3<T>(m, m, m), Tensor3<T>(m, m, m)};
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Vec<T> dv = o.module.right.apply(basisVec<T>(m, p), o.f(basisVec<T>(m, q)));
            Vec<T> vd = o.module.left.apply(o.f(basisVec<T>(m, p)), basisVec<T>(m, q));
            for (std::size_t k = 0; k < m; ++k) {
                d.left.at(p, q, k) = dv[k];
                d.right.at(p, q, k) = vd[k];
            }
        }
    return d;
}

// For an object valid with either handedness: mn := f(m).n - n.f(m) (left
// Hom-Leibniz) and m*n := f(n).m - m.f(n) (right Hom-Leibniz).
template <class T>
std::pair<HomAlgebra<T>, HomAlgebra<T>> symmetricLMProducts(const LMObject<T> &o) {
    {
        CheckReport cl = checkLMObject(o);
        LMObject<T> flipped = o;
        flipped.algebra.handedness = o.algebra.handedness == Handedness::Left
                                         ? Handedness::Right
                                         : Handedness::Left;
        CheckReport cr = checkLMObject(flipped);
        if (!cl.passed())
            throw PreconditionError("symmetricLMProducts: fails primary handedness", cl);
        if (!cr.passed())
            throw PreconditionError("symmetricLMProducts: fails opposite handedness", cr);
    }
    const std::size_t m = o.dimM();
    HomAlgebra<T> lft{o.module.space, Tensor3<T>(m, m, m), Handedness::Left};
    HomAlgebra<T> rgt{o.module.space, Tensor3<T>(m, m, m), Handedness::Right};
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Vec<T> mp = basisVec<T>(m, p), mq = basisVec<T>(m, q);
            Vec<T> l = vecSub(o.module.left.apply(o.f(mp), mq),
                              o.module.right.apply(mq, o.f(mp)));
            Vec<T> r = vecSub(o.module.left.apply(o.f(mq), mp),
                              o.module.right.apply(mp, o.f(mq)));
            for (std::size_t k = 0; k < m; ++k) {
                lft.product.at(p, q, k) = l[k];
                rgt.product.at(p, q, k) = r[k];
            }
        }
    return {lft, rgt};
}

} // namespace homleib
