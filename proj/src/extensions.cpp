#include "homleib/extensions.hpp"
#include "homleib/linalg.hpp"

namespace homleib {

namespace {

// Solve i x = val; throws when val is not in the image.
QVec fiberCoords(const QMatrix &inc, const QVec &val, const char *what) {
    auto x = solve(inc, val);
    if (!x)
        throw PreconditionError(std::string(what) + ": value does not land in the fiber",
                                CheckReport{});
    return *x;
}

} // namespace

AbelianExtension extensionFromCocycle(const QLMObject &o, const QLMRepresentation &r,
                                      const Cochain2 &c) {
    {
        CheckReport cc = check2Cocycle(o, r, c);
        if (!cc.passed()) {
            const CheckItem *f = cc.firstFailure();
            throw PreconditionError("extensionFromCocycle: not a 2-cocycle, fails " +
                                        (f ? f->name : std::string("?")),
                                    cc);
        }
    }
    AbelianExtension e;
    e.base = o;
    e.fiber = r;
    e.total = lmSemidirect(o, r); // also validates o and r
    const std::size_t n = o.dimG(), m = o.dimM(), v = r.dimV(), w = r.dimW();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < w; ++t)
                e.total.algebra.product.at(i, j, n + t) += c.omega.at(i, j, t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t t = 0; t < v; ++t) {
                e.total.module.left.at(i, p, m + t) += c.mu.at(i, p, t);
                e.total.module.right.at(p, i, m + t) += c.nu.at(p, i, t);
            }
    for (std::size_t t = 0; t < w; ++t)
        for (std::size_t p = 0; p < m; ++p)
            e.total.anchor.at(n + t, p) += c.theta.at(t, p);
    e.i0 = QMatrix(n + w, w);
    for (std::size_t t = 0; t < w; ++t)
        e.i0.at(n + t, t) = 1;
    e.i1 = QMatrix(m + v, v);
    for (std::size_t t = 0; t < v; ++t)
        e.i1.at(m + t, t) = 1;
    e.p0 = QMatrix(n, n + w);
    for (std::size_t i = 0; i < n; ++i)
        e.p0.at(i, i) = 1;
    e.p1 = QMatrix(m, m + v);
    for (std::size_t p = 0; p < m; ++p)
        e.p1.at(p, p) = 1;
    return e;
}

Splitting canonicalSplitting(const AbelianExtension &e) {
    const std::size_t n = e.base.dimG(), m = e.base.dimM();
    Splitting s;
    s.s0 = QMatrix(e.total.dimG(), n);
    for (std::size_t i = 0; i < n; ++i)
        s.s0.at(i, i) = 1;
    s.s1 = QMatrix(e.total.dimM(), m);
    for (std::size_t p = 0; p < m; ++p)
        s.s1.at(p, p) = 1;
    return s;
}

CheckReport checkExtension(const AbelianExtension &e) {
    CheckReport rep;
    rep.merge(checkLMObject(e.total), "total.");
    const std::size_t n = e.base.dimG(), m = e.base.dimM();
    const std::size_t v = e.fiber.dimV(), w = e.fiber.dimW();
    // exact rows: p injectivity fails iff rank < full; Im i = Ker p via
    // composite zero + rank counting
    rep.add("exact.p0i0", (e.p0 * e.i0).isZero());
    rep.add("exact.p1i1", (e.p1 * e.i1).isZero());
    rep.add("exact.rank.i0", rref(e.i0).rank == w);
    rep.add("exact.rank.i1", rref(e.i1).rank == v);
    rep.add("exact.rank.p0", rref(e.p0).rank == n);
    rep.add("exact.rank.p1", rref(e.p1).rank == m);
    rep.add("exact.dim.g", e.total.dimG() == n + w);
    rep.add("exact.dim.m", e.total.dimM() == m + v);
    // commuting squares with the anchors
    rep.add("square.p", e.p0 * e.total.anchor == e.base.anchor * e.p1);
    rep.add("square.i", e.total.anchor * e.i1 == e.i0 * e.fiber.phi);
    // abelian: products and actions vanish on the fiber
    {
        bool ok = true;
        for (std::size_t a = 0; a < w && ok; ++a)
            for (std::size_t b = 0; b < w && ok; ++b)
                if (!vecIsZero(e.total.algebra.mul(e.i0.column(a), e.i0.column(b))))
                    ok = false;
        rep.add("abelian.product", ok);
    }
    {
        bool ok = true;
        for (std::size_t a = 0; a < w && ok; ++a)
            for (std::size_t b = 0; b < v && ok; ++b)
                if (!vecIsZero(e.total.module.left.apply(e.i0.column(a),
                                                         e.i1.column(b))) ||
                    !vecIsZero(e.total.module.right.apply(e.i1.column(b),
                                                          e.i0.column(a))))
                    ok = false;
        rep.add("abelian.action", ok);
    }
    return rep;
}

CheckReport checkSplitting(const AbelianExtension &e, const Splitting &s) {
    CheckReport rep;
    rep.add("section.p0", e.p0 * s.s0 == QMatrix::identity(e.base.dimG()));
    rep.add("section.p1", e.p1 * s.s1 == QMatrix::identity(e.base.dimM()));
    // the anchor defect fhat s1 - s0 f measures the degree-1 part of the
    // extension class; a splitting only requires it to land in the fiber
    QMatrix defect = e.total.anchor * s.s1 - s.s0 * e.base.anchor;
    rep.add("section.anchor", (e.p0 * defect).isZero());
    return rep;
}

std::optional<Splitting> findSplitting(const AbelianExtension &e) {
    const std::size_t n = e.base.dimG(), m = e.base.dimM();
    const std::size_t tg = e.total.dimG(), tm = e.total.dimM();
    // unknowns: s0 (tg x n) then s1 (tm x m), row-major
    const std::size_t nUnk = tg * n + tm * m;
    const std::size_t nEq = n * n + m * m + n * m;
    QMatrix a(nEq, nUnk);
    QVec rhs(nEq, Rational(0));
    std::size_t eq = 0;
    auto s0idx = [&](std::size_t r, std::size_t c) { return r * n + c; };
    auto s1idx = [&](std::size_t r, std::size_t c) { return tg * n + r * m + c; };
    // p0 s0 = id
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c, ++eq) {
            for (std::size_t r = 0; r < tg; ++r)
                a.at(eq, s0idx(r, c)) = e.p0.at(i, r);
            rhs[eq] = Rational(i == c ? 1 : 0);
        }
    // p1 s1 = id
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < m; ++c, ++eq) {
            for (std::size_t r = 0; r < tm; ++r)
                a.at(eq, s1idx(r, c)) = e.p1.at(i, r);
            rhs[eq] = Rational(i == c ? 1 : 0);
        }
    // p0 (fhat s1 - s0 f) = 0: the anchor defect must land in the fiber
    QMatrix pf = e.p0 * e.total.anchor;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < m; ++c, ++eq) {
            for (std::size_t r = 0; r < tm; ++r)
                a.at(eq, s1idx(r, c)) = pf.at(i, r);
            for (std::size_t r = 0; r < tg; ++r)
                for (std::size_t k = 0; k < n; ++k)
                    a.at(eq, s0idx(r, k)) = a.at(eq, s0idx(r, k)) -
                                            e.p0.at(i, r) * e.base.anchor.at(k, c);
        }
    auto x = solve(a, rhs);
    if (!x)
        return std::nullopt;
    Splitting s{QMatrix(tg, n), QMatrix(tm, m)};
    for (std::size_t r = 0; r < tg; ++r)
        for (std::size_t c = 0; c < n; ++c)
            s.s0.at(r, c) = (*x)[s0idx(r, c)];
    for (std::size_t r = 0; r < tm; ++r)
        for (std::size_t c = 0; c < m; ++c)
            s.s1.at(r, c) = (*x)[s1idx(r, c)];
    return s;
}

Cochain2 extractCocycle(const AbelianExtension &e, const Splitting &s) {
    {
        CheckReport c = checkSplitting(e, s);
        if (!c.passed())
            throw PreconditionError("extractCocycle: invalid splitting", c);
    }
    const std::size_t n = e.base.dimG(), m = e.base.dimM();
    const std::size_t v = e.fiber.dimV(), w = e.fiber.dimW();
    auto gx = [&](std::size_t i) { return basisVec<Rational>(n, i); };
    auto mx = [&](std::size_t p) { return basisVec<Rational>(m, p); };
    Cochain2 c{Tensor3<Rational>(n, n, w), Tensor3<Rational>(n, m, v),
               Tensor3<Rational>(m, n, v), QMatrix(w, m)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec val = vecSub(e.total.algebra.mul(s.s0.column(i), s.s0.column(j)),
                              s.s0.apply(e.base.algebra.mul(gx(i), gx(j))));
            if (!vecIsZero(e.p0.apply(val)))
                throw PreconditionError("extractCocycle: omega misses the fiber",
                                        CheckReport{});
            QVec f = fiberCoords(e.i0, val, "extractCocycle.omega");
            for (std::size_t t = 0; t < w; ++t)
                c.omega.at(i, j, t) = f[t];
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
            QVec valMu = vecSub(e.total.module.left.apply(s.s0.column(i), s.s1.column(p)),
                                s.s1.apply(e.base.module.left.apply(gx(i), mx(p))));
            QVec valNu =
                vecSub(e.total.module.right.apply(s.s1.column(p), s.s0.column(i)),
                       s.s1.apply(e.base.module.right.apply(mx(p), gx(i))));
            if (!vecIsZero(e.p1.apply(valMu)) || !vecIsZero(e.p1.apply(valNu)))
                throw PreconditionError("extractCocycle: mu/nu miss the fiber",
                                        CheckReport{});
            QVec fMu = fiberCoords(e.i1, valMu, "extractCocycle.mu");
            QVec fNu = fiberCoords(e.i1, valNu, "extractCocycle.nu");
            for (std::size_t t = 0; t < v; ++t) {
                c.mu.at(i, p, t) = fMu[t];
                c.nu.at(p, i, t) = fNu[t];
            }
        }
    for (std::size_t p = 0; p < m; ++p) {
        QVec val = vecSub(e.total.anchor.apply(s.s1.column(p)),
                          s.s0.apply(e.base.f(mx(p))));
        if (!vecIsZero(e.p0.apply(val)))
            throw PreconditionError("extractCocycle: theta misses the fiber",
                                    CheckReport{});
        QVec f = fiberCoords(e.i0, val, "extractCocycle.theta");
        for (std::size_t t = 0; t < w; ++t)
            c.theta.at(t, p) = f[t];
    }
    return c;
}

QLMRepresentation inducedBimodule(const AbelianExtension &e, const Splitting &s) {
    {
        CheckReport c = checkSplitting(e, s);
        if (!c.passed())
            throw PreconditionError("inducedBimodule: invalid splitting", c);
    }
    const std::size_t n = e.base.dimG(), m = e.base.dimM();
    const std::size_t v = e.fiber.dimV(), w = e.fiber.dimW();
    QLMRepresentation r;
    r.vSpace = e.fiber.vSpace;
    r.wSpace = e.fiber.wSpace;
    r.phi = e.fiber.phi;
    r.vLeft = Tensor3<Rational>(n, v, v);
    r.vRight = Tensor3<Rational>(v, n, v);
    r.wLeft = Tensor3<Rational>(n, w, w);
    r.wRight = Tensor3<Rational>(w, n, w);
    r.crossR = Tensor3<Rational>(w, m, v);
    r.crossL = Tensor3<Rational>(m, w, v);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < v; ++b) {
            QVec lv = fiberCoords(
                e.i1, e.total.module.left.apply(s.s0.column(i), e.i1.column(b)),
                "inducedBimodule.vLeft");
            QVec rv = fiberCoords(
                e.i1, e.total.module.right.apply(e.i1.column(b), s.s0.column(i)),
                "inducedBimodule.vRight");
            for (std::size_t t = 0; t < v; ++t) {
                r.vLeft.at(i, b, t) = lv[t];
                r.vRight.at(b, i, t) = rv[t];
            }
        }
        for (std::size_t b = 0; b < w; ++b) {
            QVec lw = fiberCoords(e.i0,
                                  e.total.algebra.mul(s.s0.column(i), e.i0.column(b)),
                                  "inducedBimodule.wLeft");
            QVec rw = fiberCoords(e.i0,
                                  e.total.algebra.mul(e.i0.column(b), s.s0.column(i)),
                                  "inducedBimodule.wRight");
            for (std::size_t t = 0; t < w; ++t) {
                r.wLeft.at(i, b, t) = lw[t];
                r.wRight.at(b, i, t) = rw[t];
            }
        }
    }
    for (std::size_t b = 0; b < w; ++b)
        for (std::size_t p = 0; p < m; ++p) {
            QVec cr = fiberCoords(
                e.i1, e.total.module.left.apply(e.i0.column(b), s.s1.column(p)),
                "inducedBimodule.crossR");
            QVec cl = fiberCoords(
                e.i1, e.total.module.right.apply(s.s1.column(p), e.i0.column(b)),
                "inducedBimodule.crossL");
            for (std::size_t t = 0; t < v; ++t) {
                r.crossR.at(b, p, t) = cr[t];
                r.crossL.at(p, b, t) = cl[t];
            }
        }
    return r;
}

std::optional<LMMorphism<Rational>> areEquivalent(const AbelianExtension &e,
                                                  const AbelianExtension &f,
                                                  bool raw) {
    auto sameObject = [](const QLMObject &a, const QLMObject &b) {
        return a.algebra.product == b.algebra.product &&
               a.algebra.space.twist == b.algebra.space.twist &&
               a.module.left == b.module.left && a.module.right == b.module.right &&
               a.module.space.twist == b.module.space.twist && a.anchor == b.anchor;
    };
    auto sameRep = [](const QLMRepresentation &a, const QLMRepresentation &b) {
        return a.phi == b.phi && a.vLeft == b.vLeft && a.vRight == b.vRight &&
               a.wLeft == b.wLeft && a.wRight == b.wRight && a.crossR == b.crossR &&
               a.crossL == b.crossL && a.vSpace.twist == b.vSpace.twist &&
               a.wSpace.twist == b.wSpace.twist;
    };
    if (!sameObject(e.base, f.base) || !sameRep(e.fiber, f.fiber))
        throw InputError("areEquivalent: extensions have different base or fiber");

    auto splittingOf = [](const AbelianExtension &x) -> std::optional<Splitting> {
        Splitting s = canonicalSplitting(x);
        if (checkSplitting(x, s).passed())
            return s;
        return findSplitting(x);
    };
    auto se = splittingOf(e), sf = splittingOf(f);
    if (!se || !sf)
        return std::nullopt;
    Cochain2 ce = extractCocycle(e, *se), cf = extractCocycle(f, *sf);

    CochainSpace s1 = cochainSpace(1, e.base, e.fiber, !raw);
    CochainSpace s2 = cochainSpace(2, e.base, e.fiber, !raw);
    QVec diff = vecSub(flatten(s2, ce), flatten(s2, cf));
    std::optional<Cochain1> b;
    if (raw) {
        auto coords = solve(d1Matrix(e.base, e.fiber, false), diff);
        if (coords)
            b = unflatten1(s1, *coords);
    } else {
        auto target = solve(s2.compat.basis, diff);
        if (target) {
            auto coords = solve(d1Matrix(e.base, e.fiber, true), *target);
            if (coords)
                b = unflatten1(s1, s1.compat.basis.apply(*coords));
        }
    }
    if (!b)
        return std::nullopt;
    if (flatten(s2, applyD1(e.base, e.fiber, *b)) != diff)
        return std::nullopt;

    // F = id + i0 b0 p0 on the algebra side, id + i1 b1 p1 on the module side
    LMMorphism<Rational> mor;
    mor.phi0 = QMatrix::identity(e.total.dimG()) + e.i0 * b->n0 * e.p0;
    mor.phi1 = QMatrix::identity(e.total.dimM()) + e.i1 * b->n1 * e.p1;
    if (!checkLMMorphism(e.total, f.total, mor).passed())
        return std::nullopt;
    if (!(mor.phi0 * e.i0 == f.i0) || !(mor.phi1 * e.i1 == f.i1) ||
        !(f.p0 * mor.phi0 == e.p0) || !(f.p1 * mor.phi1 == e.p1))
        return std::nullopt;
    return mor;
}

} // namespace homleib
