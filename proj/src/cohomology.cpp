#include "homleib/cohomology.hpp"

#include <stdexcept>

namespace homleib {

std::size_t CochainSpace::rawDim() const {
    switch (degree) {
    case 1:
        return n * w + m * v;
    case 2:
        return n * n * w + 2 * n * m * v + m * w;
    default:
        return n * n * n * w + 3 * n * n * m * v + 2 * n * m * w;
    }
}

namespace {

Cochain1 zeroCochain1(const CochainSpace &s) {
    return {QMatrix(s.w, s.n), QMatrix(s.v, s.m)};
}

Cochain2 zeroCochain2(const CochainSpace &s) {
    return {Tensor3<Rational>(s.n, s.n, s.w), Tensor3<Rational>(s.n, s.m, s.v),
            Tensor3<Rational>(s.m, s.n, s.v), QMatrix(s.w, s.m)};
}

Cochain3 zeroCochain3(const CochainSpace &s) {
    return {Tensor4<Rational>(s.n, s.n, s.n, s.w), Tensor4<Rational>(s.n, s.n, s.m, s.v),
            Tensor4<Rational>(s.n, s.m, s.n, s.v), Tensor4<Rational>(s.m, s.n, s.n, s.v),
            Tensor3<Rational>(s.n, s.m, s.w), Tensor3<Rational>(s.m, s.n, s.w)};
}

// alpha_target . c - c . (twists on the argument slots), one tensor slot of
// alpha / alpha_M per g / M argument.
Cochain1 compatDefect(const QLMObject &o, const QLMRepresentation &r, const Cochain1 &c) {
    Cochain1 d;
    d.n0 = r.wSpace.twist * c.n0 - c.n0 * o.algebra.space.twist;
    d.n1 = r.vSpace.twist * c.n1 - c.n1 * o.module.space.twist;
    return d;
}

Cochain2 compatDefect(const QLMObject &o, const QLMRepresentation &r, const Cochain2 &c) {
    const std::size_t n = o.dimG(), m = o.dimM();
    const QMatrix &al = o.algebra.space.twist, &alM = o.module.space.twist;
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    auto mx = [&](std::size_t p) { return basisVec<Rational>(m, p); };
    CochainSpace s{2, n, m, r.dimV(), r.dimW()};
    Cochain2 d = zeroCochain2(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec dv = vecSub(r.wSpace.alpha(c.omega.apply(gx(i), gx(j))),
                             c.omega.apply(al.column(i), al.column(j)));
            for (std::size_t t = 0; t < s.w; ++t)
                d.omega.at(i, j, t) = dv[t];
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
            QVec dv = vecSub(r.vSpace.alpha(c.mu.apply(gx(i), mx(p))),
                             c.mu.apply(al.column(i), alM.column(p)));
            QVec dw = vecSub(r.vSpace.alpha(c.nu.apply(mx(p), gx(i))),
                             c.nu.apply(alM.column(p), al.column(i)));
            for (std::size_t t = 0; t < s.v; ++t) {
                d.mu.at(i, p, t) = dv[t];
                d.nu.at(p, i, t) = dw[t];
            }
        }
    d.theta = r.wSpace.twist * c.theta - c.theta * alM;
    return d;
}

Cochain3 compatDefect(const QLMObject &o, const QLMRepresentation &r, const Cochain3 &c) {
    const std::size_t n = o.dimG(), m = o.dimM(), v = r.dimV(), w = r.dimW();
    const QMatrix &al = o.algebra.space.twist, &alM = o.module.space.twist;
    CochainSpace s{3, n, m, v, w};
    Cochain3 d = zeroCochain3(s);
    // Trilinear pieces expanded by hand: value at twisted basis columns.
    auto tri = [&](const Tensor4<Rational> &t, const QVec &x, const QVec &y,
                   const QVec &z) {
        QVec out(t.d3, Rational(0));
        for (std::size_t i = 0; i < t.d0; ++i)
            for (std::size_t j = 0; j < t.d1; ++j)
                for (std::size_t k = 0; k < t.d2; ++k) {
                    Rational cf = x[i] * y[j] * z[k];
                    if (cf == 0)
                        continue;
                    for (std::size_t l = 0; l < t.d3; ++l)
                        out[l] += cf * t.at(i, j, k, l);
                }
        return out;
    };
    auto base = [&](const Tensor4<Rational> &t, std::size_t i, std::size_t j,
                    std::size_t k) {
        QVec out(t.d3, Rational(0));
        for (std::size_t l = 0; l < t.d3; ++l)
            out[l] = t.at(i, j, k, l);
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                QVec dv = vecSub(r.wSpace.alpha(base(c.www, i, j, k)),
                                 tri(c.www, al.column(i), al.column(j), al.column(k)));
                for (std::size_t t = 0; t < w; ++t)
                    d.www.at(i, j, k, t) = dv[t];
            }
            for (std::size_t p = 0; p < m; ++p) {
                QVec d1 = vecSub(r.vSpace.alpha(base(c.xym, i, j, p)),
                                 tri(c.xym, al.column(i), al.column(j), alM.column(p)));
                QVec d2 = vecSub(r.vSpace.alpha(base(c.xmy, i, p, j)),
                                 tri(c.xmy, al.column(i), alM.column(p), al.column(j)));
                QVec d3 = vecSub(r.vSpace.alpha(base(c.mxy, p, i, j)),
                                 tri(c.mxy, alM.column(p), al.column(i), al.column(j)));
                for (std::size_t t = 0; t < v; ++t) {
                    d.xym.at(i, j, p, t) = d1[t];
                    d.xmy.at(i, p, j, t) = d2[t];
                    d.mxy.at(p, i, j, t) = d3[t];
                }
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
            QVec d1 = vecSub(r.wSpace.alpha(c.xmW.apply(basisVec<Rational>(n, i),
                                                        basisVec<Rational>(m, p))),
                             c.xmW.apply(al.column(i), alM.column(p)));
            QVec d2 = vecSub(r.wSpace.alpha(c.mxW.apply(basisVec<Rational>(m, p),
                                                        basisVec<Rational>(n, i))),
                             c.mxW.apply(alM.column(p), al.column(i)));
            for (std::size_t t = 0; t < w; ++t) {
                d.xmW.at(i, p, t) = d1[t];
                d.mxW.at(p, i, t) = d2[t];
            }
        }
    return d;
}

QMatrix compatOperator(const CochainSpace &s, const QLMObject &o,
                       const QLMRepresentation &r) {
    const std::size_t dim = s.rawDim();
    QMatrix k(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
        QVec e(dim, Rational(0));
        e[c] = 1;
        QVec img;
        if (s.degree == 1)
            img = flatten(s, compatDefect(o, r, unflatten1(s, e)));
        else if (s.degree == 2)
            img = flatten(s, compatDefect(o, r, unflatten2(s, e)));
        else
            img = flatten(s, compatDefect(o, r, unflatten3(s, e)));
        for (std::size_t t = 0; t < dim; ++t)
            k.at(t, c) = img[t];
    }
    return k;
}

Subspace fullSpace(std::size_t dim) {
    return Subspace{dim, QMatrix::identity(dim)};
}

} // namespace

CochainSpace cochainSpace(int k, const QLMObject &o, const QLMRepresentation &r,
                          bool compatFlag) {
    if (k < 1 || k > 3)
        throw InputError("cochainSpace: degree must be 1, 2 or 3");
    {
        CheckReport c = checkMultiplicativity(o.algebra);
        if (!c.passed())
            throw PreconditionError("cochainSpace: twist is not multiplicative", c);
    }
    CochainSpace s{k, o.dimG(), o.dimM(), r.dimV(), r.dimW()};
    s.compatRestricted = compatFlag;
    s.compat = compatFlag ? nullspaceBasis(compatOperator(s, o, r))
                          : fullSpace(s.rawDim());
    return s;
}

QVec flatten(const CochainSpace &s, const Cochain1 &c) {
    QVec x(s.rawDim(), Rational(0));
    std::size_t off = 0;
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t t = 0; t < s.w; ++t)
            x[off + i * s.w + t] = c.n0.at(t, i);
    off += s.n * s.w;
    for (std::size_t p = 0; p < s.m; ++p)
        for (std::size_t t = 0; t < s.v; ++t)
            x[off + p * s.v + t] = c.n1.at(t, p);
    return x;
}

Cochain1 unflatten1(const CochainSpace &s, const QVec &x) {
    Cochain1 c = zeroCochain1(s);
    std::size_t off = 0;
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t t = 0; t < s.w; ++t)
            c.n0.at(t, i) = x[off + i * s.w + t];
    off += s.n * s.w;
    for (std::size_t p = 0; p < s.m; ++p)
        for (std::size_t t = 0; t < s.v; ++t)
            c.n1.at(t, p) = x[off + p * s.v + t];
    return c;
}

QVec flatten(const CochainSpace &s, const Cochain2 &c) {
    QVec x(s.rawDim(), Rational(0));
    std::size_t off = 0;
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = 0; j < s.n; ++j)
            for (std::size_t t = 0; t < s.w; ++t)
                x[off + (i * s.n + j) * s.w + t] = c.omega.at(i, j, t);
    off += s.n * s.n * s.w;
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t p = 0; p < s.m; ++p)
            for (std::size_t t = 0; t < s.v; ++t)
                x[off + (i * s.m + p) * s.v + t] = c.mu.at(i, p, t);
    off += s.n * s.m * s.v;
    for (std::size_t p = 0; p < s.m; ++p)
        for (std::size_t i = 0; i < s.n; ++i)
            for (std::size_t t = 0; t < s.v; ++t)
                x[off + (p * s.n + i) * s.v + t] = c.nu.at(p, i, t);
    off += s.m * s.n * s.v;
    for (std::size_t p = 0; p < s.m; ++p)
        for (std::size_t t = 0; t < s.w; ++t)
            x[off + p * s.w + t] = c.theta.at(t, p);
    return x;
}

Cochain2 unflatten2(const CochainSpace &s, const QVec &x) {
    Cochain2 c = zeroCochain2(s);
    std::size_t off = 0;
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = 0; j < s.n; ++j)
            for (std::size_t t = 0; t < s.w; ++t)
                c.omega.at(i, j, t) = x[off + (i * s.n + j) * s.w + t];
    off += s.n * s.n * s.w;
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t p = 0; p < s.m; ++p)
            for (std::size_t t = 0; t < s.v; ++t)
                c.mu.at(i, p, t) = x[off + (i * s.m + p) * s.v + t];
    off += s.n * s.m * s.v;
    for (std::size_t p = 0; p < s.m; ++p)
        for (std::size_t i = 0; i < s.n; ++i)
            for (std::size_t t = 0; t < s.v; ++t)
                c.nu.at(p, i, t) = x[off + (p * s.n + i) * s.v + t];
    off += s.m * s.n * s.v;
    for (std::size_t p = 0; p < s.m; ++p)
        for (std::size_t t = 0; t < s.w; ++t)
            c.theta.at(t, p) = x[off + p * s.w + t];
    return c;
}

QVec flatten(const CochainSpace &s, const Cochain3 &c) {
    QVec x(s.rawDim(), Rational(0));
    std::size_t off = 0;
    const std::size_t n = s.n, m = s.m, v = s.v, w = s.w;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t t = 0; t < w; ++t)
                    x[off + ((i * n + j) * n + k) * w + t] = c.www.at(i, j, k, t);
    off += n * n * n * w;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t t = 0; t < v; ++t)
                    x[off + ((i * n + j) * m + p) * v + t] = c.xym.at(i, j, p, t);
    off += n * n * m * v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < v; ++t)
                    x[off + ((i * m + p) * n + j) * v + t] = c.xmy.at(i, p, j, t);
    off += n * m * n * v;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < v; ++t)
                    x[off + ((p * n + i) * n + j) * v + t] = c.mxy.at(p, i, j, t);
    off += m * n * n * v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t t = 0; t < w; ++t)
                x[off + (i * m + p) * w + t] = c.xmW.at(i, p, t);
    off += n * m * w;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < w; ++t)
                x[off + (p * n + i) * w + t] = c.mxW.at(p, i, t);
    return x;
}

Cochain3 unflatten3(const CochainSpace &s, const QVec &x) {
    Cochain3 c = zeroCochain3(s);
    std::size_t off = 0;
    const std::size_t n = s.n, m = s.m, v = s.v, w = s.w;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t t = 0; t < w; ++t)
                    c.www.at(i, j, k, t) = x[off + ((i * n + j) * n + k) * w + t];
    off += n * n * n * w;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t t = 0; t < v; ++t)
                    c.xym.at(i, j, p, t) = x[off + ((i * n + j) * m + p) * v + t];
    off += n * n * m * v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < v; ++t)
                    c.xmy.at(i, p, j, t) = x[off + ((i * m + p) * n + j) * v + t];
    off += n * m * n * v;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < v; ++t)
                    c.mxy.at(p, i, j, t) = x[off + ((p * n + i) * n + j) * v + t];
    off += m * n * n * v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t t = 0; t < w; ++t)
                c.xmW.at(i, p, t) = x[off + (i * m + p) * w + t];
    off += n * m * w;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < w; ++t)
                c.mxW.at(p, i, t) = x[off + (p * n + i) * w + t];
    return c;
}

Cochain2 applyD1(const QLMObject &o, const QLMRepresentation &r, const Cochain1 &c) {
    const std::size_t n = o.dimG(), m = o.dimM();
    CochainSpace s{2, n, m, r.dimV(), r.dimW()};
    Cochain2 out = zeroCochain2(s);
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    auto mx = [&](std::size_t p) { return basisVec<Rational>(m, p); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // omega(x,y) = N0(x).y + x.N0(y) - N0(xy)
            QVec val = vecSub(vecAdd(r.wRight.apply(c.n0.column(i), gx(j)),
                                     r.wLeft.apply(gx(i), c.n0.column(j))),
                              c.n0.apply(o.algebra.mul(gx(i), gx(j))));
            for (std::size_t t = 0; t < s.w; ++t)
                out.omega.at(i, j, t) = val[t];
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
            // mu(x,m) = N0(x)|>m + x.N1(m) - N1(x.m)
            QVec val = vecSub(vecAdd(r.crossR.apply(c.n0.column(i), mx(p)),
                                     r.vLeft.apply(gx(i), c.n1.column(p))),
                              c.n1.apply(o.module.left.apply(gx(i), mx(p))));
            for (std::size_t t = 0; t < s.v; ++t)
                out.mu.at(i, p, t) = val[t];
            // nu(m,x) = N1(m).x + m<|N0(x) - N1(m.x)
            QVec vbl = vecSub(vecAdd(r.vRight.apply(c.n1.column(p), gx(i)),
                                     r.crossL.apply(mx(p), c.n0.column(i))),
                              c.n1.apply(o.module.right.apply(mx(p), gx(i))));
            for (std::size_t t = 0; t < s.v; ++t)
                out.nu.at(p, i, t) = vbl[t];
        }
    // theta(m) = phi(N1(m)) - N0(f(m))
    out.theta = r.phi * c.n1 - c.n0 * o.anchor;
    return out;
}

Cochain3 applyD2(const QLMObject &o, const QLMRepresentation &r, const Cochain2 &c) {
    const std::size_t n = o.dimG(), m = o.dimM();
    CochainSpace s{3, n, m, r.dimV(), r.dimW()};
    Cochain3 out = zeroCochain3(s);
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    auto mx = [&](std::size_t p) { return basisVec<Rational>(m, p); };
    auto al = [&](const QVec &x) { return o.algebra.alpha(x); };
    auto alM = [&](const QVec &x) { return o.module.space.alpha(x); };
    auto mul = [&](const QVec &x, const QVec &y) { return o.algebra.mul(x, y); };
    auto ml = [&](const QVec &x, const QVec &mm) { return o.module.left.apply(x, mm); };
    auto mr = [&](const QVec &mm, const QVec &x) { return o.module.right.apply(mm, x); };
    auto om = [&](const QVec &x, const QVec &y) { return c.omega.apply(x, y); };
    auto mu = [&](const QVec &x, const QVec &mm) { return c.mu.apply(x, mm); };
    auto nu = [&](const QVec &mm, const QVec &x) { return c.nu.apply(mm, x); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec x = gx(i), y = gx(j);
            for (std::size_t k = 0; k < n; ++k) {
                QVec z = gx(k);
                // x.omega(y,z) + omega(alpha x, yz) - omega(xy, alpha z)
                // - omega(x,y).z - y.omega(x,z) - omega(alpha y, xz), all
                // free slots alpha-twisted.
                QVec val = r.wLeft.apply(al(x), om(y, z));
                val = vecAdd(val, om(al(x), mul(y, z)));
                val = vecSub(val, om(mul(x, y), al(z)));
                val = vecSub(val, r.wRight.apply(om(x, y), al(z)));
                val = vecSub(val, r.wLeft.apply(al(y), om(x, z)));
                val = vecSub(val, om(al(y), mul(x, z)));
                for (std::size_t t = 0; t < s.w; ++t)
                    out.www.at(i, j, k, t) = val[t];
            }
            for (std::size_t p = 0; p < m; ++p) {
                QVec mm = mx(p);
                // signature (x, y, m) -> V
                QVec v1 = r.vLeft.apply(al(x), mu(y, mm));
                v1 = vecAdd(v1, mu(al(x), ml(y, mm)));
                v1 = vecSub(v1, r.crossR.apply(om(x, y), alM(mm)));
                v1 = vecSub(v1, mu(mul(x, y), alM(mm)));
                v1 = vecSub(v1, r.vLeft.apply(al(y), mu(x, mm)));
                v1 = vecSub(v1, mu(al(y), ml(x, mm)));
                // signature (x, m, y) -> V
                QVec v2 = r.vLeft.apply(al(x), nu(mm, y));
                v2 = vecAdd(v2, mu(al(x), mr(mm, y)));
                v2 = vecSub(v2, nu(ml(x, mm), al(y)));
                v2 = vecSub(v2, r.vRight.apply(mu(x, mm), al(y)));
                v2 = vecSub(v2, r.crossL.apply(alM(mm), om(x, y)));
                v2 = vecSub(v2, nu(alM(mm), mul(x, y)));
                // signature (m, x, y) -> V
                QVec v3 = r.crossL.apply(alM(mm), om(x, y));
                v3 = vecAdd(v3, nu(alM(mm), mul(x, y)));
                v3 = vecSub(v3, r.vRight.apply(nu(mm, x), al(y)));
                v3 = vecSub(v3, nu(mr(mm, x), al(y)));
                v3 = vecSub(v3, r.vLeft.apply(al(x), nu(mm, y)));
                v3 = vecSub(v3, mu(al(x), mr(mm, y)));
                for (std::size_t t = 0; t < s.v; ++t) {
                    out.xym.at(i, j, p, t) = v1[t];
                    out.xmy.at(i, p, j, t) = v2[t];
                    out.mxy.at(p, i, j, t) = v3[t];
                }
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
            QVec x = gx(i), mm = mx(p);
            // theta(x.m) + phi(mu(x,m)) - omega(x, f(m)) - x.theta(m)
            QVec w1 = c.theta.apply(ml(x, mm));
            w1 = vecAdd(w1, r.phi.apply(mu(x, mm)));
            w1 = vecSub(w1, om(x, o.f(mm)));
            w1 = vecSub(w1, r.wLeft.apply(x, c.theta.apply(mm)));
            // theta(m.x) + phi(nu(m,x)) - omega(f(m), x) - theta(m).x
            QVec w2 = c.theta.apply(mr(mm, x));
            w2 = vecAdd(w2, r.phi.apply(nu(mm, x)));
            w2 = vecSub(w2, om(o.f(mm), x));
            w2 = vecSub(w2, r.wRight.apply(c.theta.apply(mm), x));
            for (std::size_t t = 0; t < s.w; ++t) {
                out.xmW.at(i, p, t) = w1[t];
                out.mxW.at(p, i, t) = w2[t];
            }
        }
    return out;
}

CheckReport check1Cocycle(const QLMObject &o, const QLMRepresentation &r,
                          const Cochain1 &c) {
    CheckReport rep;
    const std::size_t n = o.dimG(), m = o.dimM();
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    auto mx = [&](std::size_t p) { return basisVec<Rational>(m, p); };
    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                QVec lhs = vecAdd(r.wRight.apply(c.n0.column(i), gx(j)),
                                  r.wLeft.apply(gx(i), c.n0.column(j)));
                QVec rhs = c.n0.apply(o.algebra.mul(gx(i), gx(j)));
                QVec d = vecSub(lhs, rhs);
                if (!vecIsZero(d)) {
                    ok = false;
                    w = detail::witness2(o.algebra.space, i, o.algebra.space, j, d);
                }
            }
        rep.add("cocycle1.xy", ok, w);
    }
    {
        bool ok1 = true, ok2 = true;
        std::string w1, w2;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < m; ++p) {
                QVec d1 = vecSub(vecAdd(r.crossR.apply(c.n0.column(i), mx(p)),
                                        r.vLeft.apply(gx(i), c.n1.column(p))),
                                 c.n1.apply(o.module.left.apply(gx(i), mx(p))));
                QVec d2 = vecSub(vecAdd(r.vRight.apply(c.n1.column(p), gx(i)),
                                        r.crossL.apply(mx(p), c.n0.column(i))),
                                 c.n1.apply(o.module.right.apply(mx(p), gx(i))));
                if (ok1 && !vecIsZero(d1)) {
                    ok1 = false;
                    w1 = detail::witness2(o.algebra.space, i, o.module.space, p, d1);
                }
                if (ok2 && !vecIsZero(d2)) {
                    ok2 = false;
                    w2 = detail::witness2(o.module.space, p, o.algebra.space, i, d2);
                }
            }
        rep.add("cocycle1.xm", ok1, w1);
        rep.add("cocycle1.mx", ok2, w2);
    }
    rep.add("cocycle1.anchor", (r.phi * c.n1 - c.n0 * o.anchor).isZero());
    return rep;
}

CheckReport check2Cocycle(const QLMObject &o, const QLMRepresentation &r,
                          const Cochain2 &c) {
    CheckReport rep;
    const std::size_t n = o.dimG(), m = o.dimM();
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    auto mx = [&](std::size_t p) { return basisVec<Rational>(m, p); };
    auto al = [&](const QVec &x) { return o.algebra.alpha(x); };
    auto alM = [&](const QVec &x) { return o.module.space.alpha(x); };
    auto mul = [&](const QVec &x, const QVec &y) { return o.algebra.mul(x, y); };
    auto ml = [&](const QVec &x, const QVec &mm) { return o.module.left.apply(x, mm); };
    auto mr = [&](const QVec &mm, const QVec &x) { return o.module.right.apply(mm, x); };
    auto om = [&](const QVec &x, const QVec &y) { return c.omega.apply(x, y); };
    auto mu = [&](const QVec &x, const QVec &mm) { return c.mu.apply(x, mm); };
    auto nu = [&](const QVec &mm, const QVec &x) { return c.nu.apply(mm, x); };

    bool ok[6] = {true, true, true, true, true, true};
    std::string wit[6];
    auto record = [&](int which, const QVec &lhs, const QVec &rhs, std::size_t a,
                      std::size_t b, std::size_t cc, bool three) {
        if (!ok[which])
            return;
        QVec d = vecSub(lhs, rhs);
        if (vecIsZero(d))
            return;
        ok[which] = false;
        wit[which] = "(" + std::to_string(a) + "," + std::to_string(b) +
                     (three ? "," + std::to_string(cc) : std::string()) +
                     "): defect " + vecToString(d);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec x = gx(i), y = gx(j);
            for (std::size_t k = 0; k < n; ++k) {
                QVec z = gx(k);
                record(0,
                       vecAdd(r.wLeft.apply(al(x), om(y, z)), om(al(x), mul(y, z))),
                       vecAdd(vecAdd(om(mul(x, y), al(z)),
                                     r.wRight.apply(om(x, y), al(z))),
                              vecAdd(r.wLeft.apply(al(y), om(x, z)),
                                     om(al(y), mul(x, z)))),
                       i, j, k, true);
            }
            for (std::size_t p = 0; p < m; ++p) {
                QVec mm = mx(p);
                record(1,
                       vecAdd(r.vLeft.apply(al(x), mu(y, mm)), mu(al(x), ml(y, mm))),
                       vecAdd(vecAdd(r.crossR.apply(om(x, y), alM(mm)),
                                     mu(mul(x, y), alM(mm))),
                              vecAdd(r.vLeft.apply(al(y), mu(x, mm)),
                                     mu(al(y), ml(x, mm)))),
                       i, j, p, true);
                record(2,
                       vecAdd(r.vLeft.apply(al(x), nu(mm, y)), mu(al(x), mr(mm, y))),
                       vecAdd(vecAdd(nu(ml(x, mm), al(y)),
                                     r.vRight.apply(mu(x, mm), al(y))),
                              vecAdd(r.crossL.apply(alM(mm), om(x, y)),
                                     nu(alM(mm), mul(x, y)))),
                       i, p, j, true);
                record(3,
                       vecAdd(r.crossL.apply(alM(mm), om(x, y)),
                              nu(alM(mm), mul(x, y))),
                       vecAdd(vecAdd(r.vRight.apply(nu(mm, x), al(y)),
                                     nu(mr(mm, x), al(y))),
                              vecAdd(r.vLeft.apply(al(x), nu(mm, y)),
                                     mu(al(x), mr(mm, y)))),
                       p, i, j, true);
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
            QVec x = gx(i), mm = mx(p);
            record(4,
                   vecAdd(c.theta.apply(ml(x, mm)), r.phi.apply(mu(x, mm))),
                   vecAdd(om(x, o.f(mm)), r.wLeft.apply(x, c.theta.apply(mm))),
                   i, p, 0, false);
            record(5,
                   vecAdd(c.theta.apply(mr(mm, x)), r.phi.apply(nu(mm, x))),
                   vecAdd(om(o.f(mm), x), r.wRight.apply(c.theta.apply(mm), x)),
                   p, i, 0, false);
        }
    static const char *names[6] = {"cocycle2.xyz", "cocycle2.xym", "cocycle2.xmy",
                                   "cocycle2.mxy", "cocycle2.xm", "cocycle2.mx"};
    for (int q = 0; q < 6; ++q)
        rep.add(names[q], ok[q], wit[q]);
    return rep;
}

namespace {

QMatrix rawD1Matrix(const QLMObject &o, const QLMRepresentation &r) {
    CochainSpace s1 = cochainSpace(1, o, r, false);
    CochainSpace s2{2, s1.n, s1.m, s1.v, s1.w};
    QMatrix d(s2.rawDim(), s1.rawDim());
    for (std::size_t c = 0; c < s1.rawDim(); ++c) {
        QVec e(s1.rawDim(), Rational(0));
        e[c] = 1;
        QVec img = flatten(s2, applyD1(o, r, unflatten1(s1, e)));
        for (std::size_t t = 0; t < img.size(); ++t)
            d.at(t, c) = img[t];
    }
    return d;
}

QMatrix rawD2Matrix(const QLMObject &o, const QLMRepresentation &r) {
    CochainSpace s2 = cochainSpace(2, o, r, false);
    CochainSpace s3{3, s2.n, s2.m, s2.v, s2.w};
    QMatrix d(s3.rawDim(), s2.rawDim());
    for (std::size_t c = 0; c < s2.rawDim(); ++c) {
        QVec e(s2.rawDim(), Rational(0));
        e[c] = 1;
        QVec img = flatten(s3, applyD2(o, r, unflatten2(s2, e)));
        for (std::size_t t = 0; t < img.size(); ++t)
            d.at(t, c) = img[t];
    }
    return d;
}

QMatrix restrict(const QMatrix &raw, const Subspace &src, const Subspace &dst,
                 const char *what) {
    auto m = solveMulti(dst.basis, raw * src.basis);
    if (!m)
        throw std::logic_error(std::string(what) +
                               ": image leaves the compatible subspace");
    return *m;
}

} // namespace

QMatrix d1Matrix(const QLMObject &o, const QLMRepresentation &r, bool compatFlag) {
    QMatrix raw = rawD1Matrix(o, r);
    if (!compatFlag)
        return raw;
    CochainSpace s1 = cochainSpace(1, o, r, true);
    CochainSpace s2 = cochainSpace(2, o, r, true);
    return restrict(raw, s1.compat, s2.compat, "d1Matrix");
}

QMatrix d2Matrix(const QLMObject &o, const QLMRepresentation &r, bool compatFlag) {
    QMatrix raw = rawD2Matrix(o, r);
    if (!compatFlag)
        return raw;
    CochainSpace s2 = cochainSpace(2, o, r, true);
    CochainSpace s3 = cochainSpace(3, o, r, true);
    return restrict(raw, s2.compat, s3.compat, "d2Matrix");
}

QMatrix d0Matrix(const QLMObject &o, const QLMRepresentation &r, D0Strategy strategy,
                 bool compatFlag) {
    CochainSpace s1 = cochainSpace(1, o, r, compatFlag);
    const std::size_t w = r.dimW();
    if (strategy == D0Strategy::Zero)
        return QMatrix(compatFlag ? s1.compat.dim() : s1.rawDim(), w);
    // WAction: D0(w) = (x -> -w.x, m -> -w|>m)
    QMatrix raw(s1.rawDim(), w);
    for (std::size_t b = 0; b < w; ++b) {
        Cochain1 c = zeroCochain1(s1);
        QVec wb = basisVec<Rational>(w, b);
        for (std::size_t i = 0; i < s1.n; ++i) {
            QVec val = r.wRight.apply(wb, basisVec<Rational>(s1.n, i));
            for (std::size_t t = 0; t < s1.w; ++t)
                c.n0.at(t, i) = -val[t];
        }
        for (std::size_t p = 0; p < s1.m; ++p) {
            QVec val = r.crossR.apply(wb, basisVec<Rational>(s1.m, p));
            for (std::size_t t = 0; t < s1.v; ++t)
                c.n1.at(t, p) = -val[t];
        }
        QVec img = flatten(s1, c);
        for (std::size_t t = 0; t < img.size(); ++t)
            raw.at(t, b) = img[t];
    }
    if (!(rawD1Matrix(o, r) * raw).isZero()) {
        CheckReport rep;
        rep.add("d1.d0", false, "D1 . D0 != 0 on this instance");
        throw PreconditionError("d0Matrix: WAction strategy rejected", rep);
    }
    if (!compatFlag)
        return raw;
    return restrict(raw, fullSpace(w), s1.compat, "d0Matrix");
}

CohomologyDims cohomologyDim(const QLMObject &o, const QLMRepresentation &r, int k,
                             bool compatFlag, D0Strategy d0) {
    if (k != 1 && k != 2)
        throw InputError("cohomologyDim: degree must be 1 or 2");
    CohomologyDims out;
    out.d0 = d0;
    Subspace z, b;
    if (k == 2) {
        z = nullspaceBasis(d2Matrix(o, r, compatFlag));
        b = columnSpace(d1Matrix(o, r, compatFlag));
    } else {
        z = nullspaceBasis(d1Matrix(o, r, compatFlag));
        b = columnSpace(d0Matrix(o, r, d0, compatFlag));
    }
    out.zDim = z.dim();
    out.bDim = b.dim();
    out.hDim = quotientDim(z, b); // throws when B is not inside Z
    return out;
}

MultiTensor::MultiTensor(std::size_t k, std::size_t n, std::size_t out)
    : arity(k), argDim(n), outDim(out) {
    std::size_t sz = out;
    for (std::size_t i = 0; i < k; ++i)
        sz *= n;
    a.assign(sz, Rational(0));
}

std::size_t MultiTensor::flatIndex(const std::vector<std::size_t> &idx,
                                   std::size_t t) const {
    std::size_t f = 0;
    for (std::size_t s = 0; s < arity; ++s)
        f = f * argDim + idx[s];
    return f * outDim + t;
}

Rational &MultiTensor::at(const std::vector<std::size_t> &idx, std::size_t t) {
    return a[flatIndex(idx, t)];
}

const Rational &MultiTensor::at(const std::vector<std::size_t> &idx,
                                std::size_t t) const {
    return a[flatIndex(idx, t)];
}

QVec MultiTensor::apply(const std::vector<QVec> &args) const {
    QVec out(outDim, Rational(0));
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
        Rational cf(1);
        for (std::size_t s = 0; s < arity; ++s)
            cf *= args[s][idx[s]];
        if (cf != 0)
            for (std::size_t t = 0; t < outDim; ++t)
                out[t] += cf * at(idx, t);
        // increment the multi-index
        std::size_t s = arity;
        while (s > 0) {
            --s;
            if (++idx[s] < argDim)
                break;
            idx[s] = 0;
            if (s == 0)
                return out;
        }
        if (arity == 0)
            return out;
    }
}

bool MultiTensor::isZero() const {
    for (const auto &x : a)
        if (x != 0)
            return false;
    return true;
}

MultiTensor csCoboundary(const HomAlgebra<Rational> &a, const Bimodule<Rational> &b,
                         std::size_t k, const MultiTensor &omega) {
    const std::size_t n = a.dim();
    MultiTensor delta(k + 1, n, b.dim());
    // alpha^{k-1}
    QMatrix alPow = QMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < k; ++i)
        alPow = a.space.twist * alPow;

    std::vector<std::size_t> idx(k + 1, 0);
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    while (true) {
        QVec val(b.dim(), Rational(0));
        // sum_i (-1)^{i+1} alpha^{k-1}(u_i) . omega(..., no u_i, ...)
        for (std::size_t i = 1; i <= k; ++i) {
            std::vector<QVec> args;
            for (std::size_t p = 1; p <= k + 1; ++p)
                if (p != i)
                    args.push_back(gx(idx[p - 1]));
            QVec term = b.left.apply(alPow.column(idx[i - 1]), omega.apply(args));
            val = (i % 2 == 1) ? vecAdd(val, term) : vecSub(val, term);
        }
        // (-1)^{k+1} omega(u_1..u_k) . alpha^{k-1}(u_{k+1})
        {
            std::vector<QVec> args;
            for (std::size_t p = 1; p <= k; ++p)
                args.push_back(gx(idx[p - 1]));
            QVec term = b.right.apply(omega.apply(args), alPow.column(idx[k]));
            val = ((k + 1) % 2 == 0) ? vecAdd(val, term) : vecSub(val, term);
        }
        // sum_{i<j} (-1)^i omega(alpha u_1, ..., no u_i, ..., u_i u_j at
        // slot j, ..., alpha u_{k+1})
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = i + 1; j <= k + 1; ++j) {
                std::vector<QVec> args;
                for (std::size_t p = 1; p <= k + 1; ++p) {
                    if (p == i)
                        continue;
                    if (p == j)
                        args.push_back(a.mul(gx(idx[i - 1]), gx(idx[j - 1])));
                    else
                        args.push_back(a.alpha(gx(idx[p - 1])));
                }
                QVec term = omega.apply(args);
                val = (i % 2 == 1) ? vecSub(val, term) : vecAdd(val, term);
            }
        for (std::size_t t = 0; t < b.dim(); ++t)
            delta.at(idx, t) = val[t];
        // increment
        std::size_t s = k + 1;
        bool done = false;
        while (s > 0) {
            --s;
            if (++idx[s] < n)
                break;
            idx[s] = 0;
            if (s == 0)
                done = true;
        }
        if (done)
            break;
    }
    return delta;
}

} // namespace homleib
