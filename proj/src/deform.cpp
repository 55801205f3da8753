#include "homleib/deform.hpp"

namespace homleib {

namespace {

TruncPoly monomial(const Rational &c, std::size_t k, std::size_t order) {
    std::vector<Rational> v(order + 1, Rational(0));
    if (k <= order)
        v[k] = c;
    return TruncPoly(std::move(v));
}

Matrix<TruncPoly> widen(const QMatrix &m, std::size_t order) {
    Matrix<TruncPoly> out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i)
        out.a[i] = TruncPoly::constant(m.a[i], order);
    return out;
}

Tensor3<TruncPoly> widen(const Tensor3<Rational> &t, std::size_t order) {
    Tensor3<TruncPoly> out(t.d0, t.d1, t.d2);
    for (std::size_t i = 0; i < t.a.size(); ++i)
        out.a[i] = TruncPoly::constant(t.a[i], order);
    return out;
}

void addTerm(Matrix<TruncPoly> &m, const QMatrix &c, std::size_t k, std::size_t order) {
    for (std::size_t i = 0; i < m.a.size(); ++i)
        m.a[i] = m.a[i] + monomial(c.a[i], k, order);
}

void addTerm(Tensor3<TruncPoly> &t, const Tensor3<Rational> &c, std::size_t k,
             std::size_t order) {
    for (std::size_t i = 0; i < t.a.size(); ++i)
        t.a[i] = t.a[i] + monomial(c.a[i], k, order);
}

Cochain2 termOrZero(const DeformationData &d, std::size_t i) {
    if (i < d.terms.size())
        return d.terms[i];
    const std::size_t n = d.base.dimG(), m = d.base.dimM();
    return {Tensor3<Rational>(n, n, n), Tensor3<Rational>(n, m, m),
            Tensor3<Rational>(m, n, m), QMatrix(n, m)};
}

} // namespace

PolyObject toPolyObject(const QLMObject &o, std::size_t order) {
    PolyObject p;
    p.algebra.handedness = o.algebra.handedness;
    p.algebra.space.dim = o.dimG();
    p.algebra.space.labels = o.algebra.space.labels;
    p.algebra.space.twist = widen(o.algebra.space.twist, order);
    p.algebra.product = widen(o.algebra.product, order);
    p.module.space.dim = o.dimM();
    p.module.space.labels = o.module.space.labels;
    p.module.space.twist = widen(o.module.space.twist, order);
    p.module.left = widen(o.module.left, order);
    p.module.right = widen(o.module.right, order);
    p.anchor = widen(o.anchor, order);
    return p;
}

PolyObject deformedStructure(const DeformationData &d, std::size_t order) {
    PolyObject p = toPolyObject(d.base, order);
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
        const Cochain2 &c = d.terms[i];
        const std::size_t k = i + 1;
        addTerm(p.algebra.product, c.omega, k, order);
        addTerm(p.module.left, c.mu, k, order);
        addTerm(p.module.right, c.nu, k, order);
        addTerm(p.anchor, c.theta, k, order);
    }
    return p;
}

InfinitesimalVerdict checkInfinitesimalDeformation(const DeformationData &d) {
    InfinitesimalVerdict out;
    QLMRepresentation adj = adjointRepresentation(d.base); // validates the base
    Cochain2 c = termOrZero(d, 0);
    out.cocycle = check2Cocycle(d.base, adj, c);
    out.cocycleOK = out.cocycle.passed();
    // (omega, mu, nu, theta) as a structure on the same twisted spaces
    QLMObject st;
    st.algebra.handedness = d.base.algebra.handedness;
    st.algebra.space = d.base.algebra.space;
    st.algebra.product = c.omega;
    st.module.space = d.base.module.space;
    st.module.left = c.mu;
    st.module.right = c.nu;
    st.anchor = c.theta;
    out.structure = checkLMObject(st);
    out.structureOK = out.structure.passed();
    DeformationData first{d.base, {c}};
    out.deformation = checkLMObject(deformedStructure(first, 2));
    out.deformationOK = out.deformation.passed();
    return out;
}

CheckReport isNijenhuis(const QLMObject &o, const NijenhuisPair &p) {
    CheckReport rep;
    const std::size_t n = o.dimG(), m = o.dimM();
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    auto mx = [&](std::size_t q) { return basisVec<Rational>(m, q); };
    auto N0 = [&](const QVec &x) { return p.n0.apply(x); };
    auto N1 = [&](const QVec &x) { return p.n1.apply(x); };
    auto mul = [&](const QVec &x, const QVec &y) { return o.algebra.mul(x, y); };
    auto ml = [&](const QVec &x, const QVec &mm) { return o.module.left.apply(x, mm); };
    auto mr = [&](const QVec &mm, const QVec &x) { return o.module.right.apply(mm, x); };
    // once-deformed products
    auto mulN = [&](const QVec &x, const QVec &y) {
        return vecSub(vecAdd(mul(N0(x), y), mul(x, N0(y))), N0(mul(x, y)));
    };
    auto mlN = [&](const QVec &x, const QVec &mm) {
        return vecSub(vecAdd(ml(N0(x), mm), ml(x, N1(mm))), N1(ml(x, mm)));
    };
    auto mrN = [&](const QVec &mm, const QVec &x) {
        return vecSub(vecAdd(mr(N1(mm), x), mr(mm, N0(x))), N1(mr(mm, x)));
    };
    // (i) Im(f N1 - N0 f) in Ker N0
    rep.add("kernel", (p.n0 * (o.anchor * p.n1 - p.n0 * o.anchor)).isZero());
    // (ii) N0(x .N y) = N0(x) N0(y)
    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                QVec d = vecSub(N0(mulN(gx(i), gx(j))), mul(N0(gx(i)), N0(gx(j))));
                if (!vecIsZero(d)) {
                    ok = false;
                    w = detail::witness2(o.algebra.space, i, o.algebra.space, j, d);
                }
            }
        rep.add("product", ok, w);
    }
    // (iii) N1(x .N m) = N0(x) . N1(m) and (iv) N1(m .N x) = N1(m) . N0(x)
    {
        bool ok3 = true, ok4 = true;
        std::string w3, w4;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t q = 0; q < m; ++q) {
                QVec d3 = vecSub(N1(mlN(gx(i), mx(q))), ml(N0(gx(i)), N1(mx(q))));
                QVec d4 = vecSub(N1(mrN(mx(q), gx(i))), mr(N1(mx(q)), N0(gx(i))));
                if (ok3 && !vecIsZero(d3)) {
                    ok3 = false;
                    w3 = detail::witness2(o.algebra.space, i, o.module.space, q, d3);
                }
                if (ok4 && !vecIsZero(d4)) {
                    ok4 = false;
                    w4 = detail::witness2(o.module.space, q, o.algebra.space, i, d4);
                }
            }
        rep.add("leftAction", ok3, w3);
        rep.add("rightAction", ok4, w4);
    }
    return rep;
}

CheckReport nijenhuisTwistCommutation(const QLMObject &o, const NijenhuisPair &p) {
    CheckReport rep;
    rep.add("n0.twist", p.n0 * o.algebra.space.twist == o.algebra.space.twist * p.n0);
    rep.add("n1.twist", p.n1 * o.module.space.twist == o.module.space.twist * p.n1);
    return rep;
}

DeformationData deformationFromNijenhuis(const QLMObject &o, const NijenhuisPair &p) {
    {
        CheckReport c = isNijenhuis(o, p);
        if (!c.passed())
            throw PreconditionError("deformationFromNijenhuis: pair is not Nijenhuis", c);
    }
    const std::size_t n = o.dimG(), m = o.dimM();
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    auto mx = [&](std::size_t q) { return basisVec<Rational>(m, q); };
    Cochain2 c{Tensor3<Rational>(n, n, n), Tensor3<Rational>(n, m, m),
               Tensor3<Rational>(m, n, m), QMatrix(n, m)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec v = vecSub(vecAdd(o.algebra.mul(p.n0.column(i), gx(j)),
                                   o.algebra.mul(gx(i), p.n0.column(j))),
                            p.n0.apply(o.algebra.mul(gx(i), gx(j))));
            for (std::size_t t = 0; t < n; ++t)
                c.omega.at(i, j, t) = v[t];
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < m; ++q) {
            QVec v1 = vecSub(vecAdd(o.module.left.apply(p.n0.column(i), mx(q)),
                                    o.module.left.apply(gx(i), p.n1.column(q))),
                             p.n1.apply(o.module.left.apply(gx(i), mx(q))));
            QVec v2 = vecSub(vecAdd(o.module.right.apply(p.n1.column(q), gx(i)),
                                    o.module.right.apply(mx(q), p.n0.column(i))),
                             p.n1.apply(o.module.right.apply(mx(q), gx(i))));
            for (std::size_t t = 0; t < m; ++t) {
                c.mu.at(i, q, t) = v1[t];
                c.nu.at(q, i, t) = v2[t];
            }
        }
    c.theta = o.anchor * p.n1 - p.n0 * o.anchor;
    return {o, {c}};
}

CheckReport isTrivialDeformation(const DeformationData &d, const NijenhuisPair &p) {
    constexpr std::size_t order = 2;
    PolyObject def = deformedStructure(d, order);
    PolyObject base = toPolyObject(d.base, order);
    const std::size_t n = d.base.dimG(), m = d.base.dimM();
    // T0 = id + lambda N0, T1 = id + lambda N1
    Matrix<TruncPoly> t0(n, n), t1(m, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t0.at(i, j) = monomial(Rational(i == j ? 1 : 0), 0, order) +
                          monomial(p.n0.at(i, j), 1, order);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            t1.at(i, j) = monomial(Rational(i == j ? 1 : 0), 0, order) +
                          monomial(p.n1.at(i, j), 1, order);

    CheckReport rep;
    auto gx = [&](std::size_t i) { return basisVec<TruncPoly>(n, i); };
    auto mx = [&](std::size_t q) { return basisVec<TruncPoly>(m, q); };
    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                Vec<TruncPoly> dv =
                    vecSub(t0.apply(def.algebra.mul(gx(i), gx(j))),
                           base.algebra.mul(t0.column(i), t0.column(j)));
                if (!vecIsZero(dv)) {
                    ok = false;
                    w = detail::witness2(def.algebra.space, i, def.algebra.space, j, dv);
                }
            }
        rep.add("product", ok, w);
    }
    {
        bool okL = true, okR = true;
        std::string wL, wR;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t q = 0; q < m; ++q) {
                Vec<TruncPoly> dL =
                    vecSub(t1.apply(def.module.left.apply(gx(i), mx(q))),
                           base.module.left.apply(t0.column(i), t1.column(q)));
                Vec<TruncPoly> dR =
                    vecSub(t1.apply(def.module.right.apply(mx(q), gx(i))),
                           base.module.right.apply(t1.column(q), t0.column(i)));
                if (okL && !vecIsZero(dL)) {
                    okL = false;
                    wL = detail::witness2(def.algebra.space, i, def.module.space, q, dL);
                }
                if (okR && !vecIsZero(dR)) {
                    okR = false;
                    wR = detail::witness2(def.module.space, q, def.algebra.space, i, dR);
                }
            }
        rep.add("leftAction", okL, wL);
        rep.add("rightAction", okR, wR);
    }
    rep.add("anchor", base.anchor * t1 == t0 * def.anchor);
    return rep;
}

CheckReport checkFormalDeformation(const DeformationData &d, std::size_t order) {
    CheckReport rep;
    const std::size_t n = d.base.dimG(), m = d.base.dimM();
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    auto mx = [&](std::size_t q) { return basisVec<Rational>(m, q); };
    auto al = [&](const QVec &x) { return d.base.algebra.alpha(x); };
    auto alM = [&](const QVec &x) { return d.base.module.space.alpha(x); };
    // series accessors; index 0 is the base structure
    auto om = [&](std::size_t i, const QVec &x, const QVec &y) {
        return i == 0 ? d.base.algebra.mul(x, y) : termOrZero(d, i - 1).omega.apply(x, y);
    };
    auto mu = [&](std::size_t i, const QVec &x, const QVec &mm) {
        return i == 0 ? d.base.module.left.apply(x, mm)
                      : termOrZero(d, i - 1).mu.apply(x, mm);
    };
    auto nu = [&](std::size_t i, const QVec &mm, const QVec &x) {
        return i == 0 ? d.base.module.right.apply(mm, x)
                      : termOrZero(d, i - 1).nu.apply(mm, x);
    };
    auto fa = [&](std::size_t i, const QVec &mm) {
        return i == 0 ? d.base.f(mm) : termOrZero(d, i - 1).theta.apply(mm);
    };
    for (std::size_t k = 0; k <= order; ++k) {
        std::string pre = "order" + std::to_string(k) + ".";
        bool okA0 = true, okA1 = true, okP = true, okL1 = true, okL2 = true,
             okL3 = true;
        std::string wA0, wA1, wP, wL1, wL2, wL3;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t q = 0; q < m; ++q) {
                QVec x = gx(i), mm = mx(q);
                QVec s0(n, Rational(0)), s1(n, Rational(0));
                for (std::size_t a = 0; a <= k; ++a) {
                    std::size_t b = k - a;
                    s0 = vecAdd(s0, vecSub(fa(a, mu(b, x, mm)), om(a, x, fa(b, mm))));
                    s1 = vecAdd(s1, vecSub(fa(a, nu(b, mm, x)), om(a, fa(b, mm), x)));
                }
                if (okA0 && !vecIsZero(s0)) {
                    okA0 = false;
                    wA0 = detail::witness2(d.base.algebra.space, i, d.base.module.space,
                                           q, s0);
                }
                if (okA1 && !vecIsZero(s1)) {
                    okA1 = false;
                    wA1 = detail::witness2(d.base.module.space, q, d.base.algebra.space,
                                           i, s1);
                }
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                QVec x = gx(i), y = gx(j);
                for (std::size_t l = 0; l < n && okP; ++l) {
                    QVec z = gx(l);
                    QVec s(n, Rational(0));
                    for (std::size_t a = 0; a <= k; ++a) {
                        std::size_t b = k - a;
                        s = vecAdd(s, om(a, al(x), om(b, y, z)));
                        s = vecSub(s, om(a, om(b, x, y), al(z)));
                        s = vecSub(s, om(a, al(y), om(b, x, z)));
                    }
                    if (!vecIsZero(s)) {
                        okP = false;
                        wP = detail::witness3(d.base.algebra.space, i,
                                              d.base.algebra.space, j,
                                              d.base.algebra.space, l, s);
                    }
                }
                for (std::size_t q = 0; q < m; ++q) {
                    QVec mm = mx(q);
                    QVec s1(m, Rational(0)), s2(m, Rational(0)), s3(m, Rational(0));
                    for (std::size_t a = 0; a <= k; ++a) {
                        std::size_t b = k - a;
                        s1 = vecAdd(s1, mu(a, al(x), mu(b, y, mm)));
                        s1 = vecSub(s1, mu(a, om(b, x, y), alM(mm)));
                        s1 = vecSub(s1, mu(a, al(y), mu(b, x, mm)));
                        s2 = vecAdd(s2, nu(a, alM(mm), om(b, x, y)));
                        s2 = vecSub(s2, nu(a, nu(b, mm, x), al(y)));
                        s2 = vecSub(s2, mu(a, al(x), nu(b, mm, y)));
                        s3 = vecAdd(s3, mu(a, al(x), nu(b, mm, y)));
                        s3 = vecSub(s3, nu(a, mu(b, x, mm), al(y)));
                        s3 = vecSub(s3, nu(a, alM(mm), om(b, x, y)));
                    }
                    auto wit = [&](const QVec &s) {
                        return "(" + d.base.algebra.space.label(i) + "," +
                               d.base.algebra.space.label(j) + "," +
                               d.base.module.space.label(q) + "): defect " +
                               vecToString(s);
                    };
                    if (okL1 && !vecIsZero(s1)) {
                        okL1 = false;
                        wL1 = wit(s1);
                    }
                    if (okL2 && !vecIsZero(s2)) {
                        okL2 = false;
                        wL2 = wit(s2);
                    }
                    if (okL3 && !vecIsZero(s3)) {
                        okL3 = false;
                        wL3 = wit(s3);
                    }
                }
            }
        rep.add(pre + "anchorLeft", okA0, wA0);
        rep.add(pre + "anchorRight", okA1, wA1);
        rep.add(pre + "product", okP, wP);
        rep.add(pre + "actionL1", okL1, wL1);
        rep.add(pre + "actionL2", okL2, wL2);
        rep.add(pre + "actionL3", okL3, wL3);
    }
    return rep;
}

std::optional<Cochain1> deformationsEquivalentFirstOrder(const DeformationData &a,
                                                         const DeformationData &b,
                                                         bool raw) {
    QLMRepresentation adj = adjointRepresentation(a.base);
    CochainSpace s1 = cochainSpace(1, a.base, adj, !raw);
    CochainSpace s2 = cochainSpace(2, a.base, adj, !raw);
    Cochain2 ca = termOrZero(a, 0), cb = termOrZero(b, 0);
    QVec diff = vecSub(flatten(s2, ca), flatten(s2, cb));
    std::optional<QVec> coords;
    if (raw) {
        coords = solve(d1Matrix(a.base, adj, false), diff);
        if (!coords)
            return std::nullopt;
        Cochain1 c = unflatten1(s1, *coords);
        // re-verify the residual exactly
        if (flatten(s2, applyD1(a.base, adj, c)) != diff)
            return std::nullopt;
        return c;
    }
    std::optional<QVec> target = solve(s2.compat.basis, diff);
    if (!target)
        return std::nullopt; // the difference is not twist-compatible
    coords = solve(d1Matrix(a.base, adj, true), *target);
    if (!coords)
        return std::nullopt;
    Cochain1 c = unflatten1(s1, s1.compat.basis.apply(*coords));
    if (flatten(s2, applyD1(a.base, adj, c)) != diff)
        return std::nullopt;
    return c;
}

RigidityVerdict isRigid(const QLMObject &o) {
    RigidityVerdict out;
    QLMRepresentation adj = adjointRepresentation(o);
    out.h2 = cohomologyDim(o, adj, 2, true);
    out.rigidByCriterion = out.h2.hDim == 0;
    return out;
}

} // namespace homleib
