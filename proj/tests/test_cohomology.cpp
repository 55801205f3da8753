#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homleib/cohomology.hpp"
#include "zoo.hpp"

using namespace homleib;

namespace {

struct Inst {
    const char *name;
    QLMObject o;
    QLMRepresentation r;
};

std::vector<Inst> validZoo() {
    std::vector<Inst> out;
    for (auto [name, o] : {std::pair<const char *, QLMObject>{"zero11", zoo::zeroObject(1, 1)},
                           {"zero21", zoo::zeroObject(2, 1)},
                           {"l2adjoint", zoo::l2Adjoint()},
                           {"l2yau", zoo::l2YauAdjoint(2, 1)}})
        out.push_back({name, o, adjointRepresentation(o)});
    return out;
}

} // namespace

TEST_CASE("cochain space dimensions follow the counting formulas") {
    for (const auto &inst : validZoo()) {
        CAPTURE(inst.name);
        const std::size_t n = inst.o.dimG(), m = inst.o.dimM();
        const std::size_t v = inst.r.dimV(), w = inst.r.dimW();
        CHECK(cochainSpace(1, inst.o, inst.r).rawDim() == n * w + m * v);
        CHECK(cochainSpace(2, inst.o, inst.r).rawDim() ==
              n * n * w + 2 * n * m * v + m * w);
        CHECK(cochainSpace(3, inst.o, inst.r).rawDim() ==
              n * n * n * w + 3 * n * n * m * v + 2 * n * m * w);
    }
}

TEST_CASE("flatten and unflatten are mutually inverse") {
    auto o = zoo::l2YauAdjoint(2, 1);
    auto r = adjointRepresentation(o);
    zoo::Rng rng(33);
    for (int t = 0; t < 5; ++t) {
        auto s1 = cochainSpace(1, o, r, false);
        auto c1 = zoo::randCochain1(o, r, rng);
        auto f1 = flatten(s1, c1);
        CHECK(flatten(s1, unflatten1(s1, f1)) == f1);
        auto s2 = cochainSpace(2, o, r, false);
        auto c2 = zoo::randCochain2(o, r, rng);
        auto f2 = flatten(s2, c2);
        CHECK(flatten(s2, unflatten2(s2, f2)) == f2);
    }
}

TEST_CASE("the composite coboundary vanishes on the compatible subspace") {
    for (const auto &inst : validZoo()) {
        CAPTURE(inst.name);
        CHECK((d2Matrix(inst.o, inst.r) * d1Matrix(inst.o, inst.r)).isZero());
    }
}

TEST_CASE("cocycle checkers agree with the coboundary application") {
    zoo::Rng rng(20240401);
    for (const auto &inst : validZoo()) {
        CAPTURE(inst.name);
        auto s2 = cochainSpace(2, inst.o, inst.r, false);
        auto s3 = cochainSpace(3, inst.o, inst.r, false);
        for (int t = 0; t < 30; ++t) {
            auto c1 = zoo::randCochain1(inst.o, inst.r, rng);
            auto d = applyD1(inst.o, inst.r, c1);
            CHECK(check1Cocycle(inst.o, inst.r, c1).passed() ==
                  vecIsZero(flatten(s2, d)));
            auto c2 = zoo::randCochain2(inst.o, inst.r, rng);
            auto d2 = applyD2(inst.o, inst.r, c2);
            CHECK(check2Cocycle(inst.o, inst.r, c2).passed() ==
                  vecIsZero(flatten(s3, d2)));
            // coboundaries are cocycles
            CHECK(check2Cocycle(inst.o, inst.r, d).passed());
        }
    }
}

TEST_CASE("zero-structure second cohomology matches the rank oracle") {
    auto check = [](std::size_t n, std::size_t m, std::size_t expected) {
        auto o = zoo::zeroObject(n, m);
        auto r = adjointRepresentation(o);
        auto dims = cohomologyDim(o, r, 2);
        auto oracle = zoo::rankOracleDims(d1Matrix(o, r), d2Matrix(o, r));
        CHECK(dims.zDim == oracle.zDim);
        CHECK(dims.bDim == oracle.bDim);
        CHECK(dims.hDim == oracle.hDim);
        CHECK(dims.hDim == expected);
    };
    check(1, 1, 4);
    check(2, 1, 14);
}

TEST_CASE("adjoint l2 cohomology dimensions, frozen against the rank oracle") {
    auto o = zoo::l2Adjoint();
    auto r = adjointRepresentation(o);

    auto h1 = cohomologyDim(o, r, 1);
    auto or1 = zoo::rankOracleDims(QMatrix(cochainSpace(1, o, r).compat.dim(), 0),
                                   d1Matrix(o, r));
    CHECK(h1.zDim == or1.zDim);
    CHECK(h1.zDim == 2);
    CHECK(h1.bDim == 0);
    CHECK(h1.hDim == 2);

    auto h2 = cohomologyDim(o, r, 2);
    auto or2 = zoo::rankOracleDims(d1Matrix(o, r), d2Matrix(o, r));
    CHECK(h2.zDim == or2.zDim);
    CHECK(h2.bDim == or2.bDim);
    CHECK(h2.hDim == or2.hDim);
    CHECK(h2.zDim == 7);
    CHECK(h2.bDim == 6);
    CHECK(h2.hDim == 1);
}

TEST_CASE("twist compatibility cuts the cochain space on twisted instances") {
    auto o = zoo::l2YauAdjoint(2, 0);
    auto r = adjointRepresentation(o);
    auto restricted = cochainSpace(2, o, r, true);
    auto full = cochainSpace(2, o, r, false);
    CHECK(full.compat.dim() == full.rawDim());
    CHECK(restricted.compat.dim() < restricted.rawDim());
    // untwisted instances restrict to nothing
    auto u = zoo::l2Adjoint();
    auto ur = adjointRepresentation(u);
    CHECK(cochainSpace(2, u, ur, true).compat.dim() ==
          cochainSpace(2, u, ur, true).rawDim());
}

TEST_CASE("degree-zero strategies") {
    auto o = zoo::l2Adjoint();
    auto r = adjointRepresentation(o);
    CHECK(d0Matrix(o, r, D0Strategy::Zero).isZero());
    auto d0 = d0Matrix(o, r, D0Strategy::WAction);
    CHECK((d1Matrix(o, r) * d0).isZero());
    auto h1z = cohomologyDim(o, r, 1, true, D0Strategy::Zero);
    auto h1w = cohomologyDim(o, r, 1, true, D0Strategy::WAction);
    CHECK(h1z.bDim == 0);
    CHECK(h1w.hDim + h1w.bDim == h1z.hDim);
}

TEST_CASE("one-algebra coboundary squares to zero and extends D1") {
    auto a = zoo::l2Algebra();
    auto b = adjointBimodule(a);
    zoo::Rng rng(555);
    for (int t = 0; t < 10; ++t) {
        MultiTensor om(1, 2, 2);
        for (auto &x : om.a)
            x = zoo::randScalar(rng);
        auto d1 = csCoboundary(a, b, 1, om);
        CHECK(csCoboundary(a, b, 2, d1).isZero());

        // degree 1 agrees with the omega block of the full coboundary
        auto o = zoo::l2Adjoint();
        auto r = adjointRepresentation(o);
        Cochain1 c{QMatrix(2, 2), QMatrix(2, 2)};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t tt = 0; tt < 2; ++tt)
                c.n0.at(tt, i) = om.at({i}, tt);
        auto full = applyD1(o, r, c);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t tt = 0; tt < 2; ++tt)
                    CHECK(full.omega.at(i, j, tt) == d1.at({i, j}, tt));
    }
}

TEST_CASE("higher-degree one-algebra coboundary also squares to zero") {
    auto a = yauTwist(zoo::l2Algebra(), zoo::l2Endo(2, 1));
    auto b = adjointBimodule(a);
    zoo::Rng rng(556);
    MultiTensor om(2, 2, 2);
    for (auto &x : om.a)
        x = zoo::randScalar(rng);
    CHECK(csCoboundary(a, b, 3, csCoboundary(a, b, 2, om)).isZero());
}

TEST_CASE("lambda-coefficient interpolation oracle recovers coefficients") {
    TruncPoly p(std::vector<Rational>{Rational(3), Rational(-1, 2), Rational(7)});
    CHECK(zoo::polyCoeffByInterpolation(p, 0) == Rational(3));
    CHECK(zoo::polyCoeffByInterpolation(p, 1) == Rational(-1, 2));
    CHECK(zoo::polyCoeffByInterpolation(p, 2) == Rational(7));
    CHECK(zoo::polyCoeffByInterpolation(p, 5) == 0);
}
