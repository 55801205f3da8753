#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homleib/lmcat.hpp"
#include "zoo.hpp"

using namespace homleib;

namespace {

bool equivarianceOK(const CheckReport &rep) {
    bool ok = true;
    for (const auto &it : rep.items)
        if (it.name == "cm01" || it.name == "cm02")
            ok = ok && it.passed;
    return ok;
}

LMRepresentation<Rational> zeroRep(const QLMObject &o, std::size_t v, std::size_t w) {
    LMRepresentation<Rational> r;
    r.vSpace = {v, {}, QMatrix::identity(v)};
    r.wSpace = {w, {}, QMatrix::identity(w)};
    r.phi = QMatrix(w, v);
    r.vLeft = Tensor3<Rational>(o.dimG(), v, v);
    r.vRight = Tensor3<Rational>(v, o.dimG(), v);
    r.wLeft = Tensor3<Rational>(o.dimG(), w, w);
    r.wRight = Tensor3<Rational>(w, o.dimG(), w);
    r.crossR = Tensor3<Rational>(w, o.dimM(), v);
    r.crossL = Tensor3<Rational>(o.dimM(), w, v);
    return r;
}

} // namespace

TEST_CASE("adjoint objects over valid algebras pass checkLMObject") {
    CHECK(checkLMObject(zoo::l2Adjoint()).passed());
    CHECK(checkLMObject(zoo::zeroObject(1, 1)).passed());
    CHECK(checkLMObject(zoo::zeroObject(2, 1)).passed());
    CHECK(checkLMObject(zoo::l2YauAdjoint(2, 0)).passed());
    CHECK(checkLMObject(zoo::l2YauAdjoint(3, 5)).passed());
}

TEST_CASE("anchor conditions match the semidirect homomorphism criterion") {
    auto agree = [](const QLMObject &o) {
        return equivarianceOK(checkLMObject(o)) == checkViaSemidirectHom(o).passed();
    };
    CHECK(agree(zoo::l2Adjoint()));
    CHECK(agree(zoo::zeroObject(2, 1)));
    CHECK(agree(zoo::l2YauAdjoint(2, 3)));

    // broken anchors: both sides must flip together
    auto bad1 = zoo::l2Adjoint();
    bad1.anchor.at(0, 1) = 1; // f(e2) = e1 breaks equivariance
    CHECK(!equivarianceOK(checkLMObject(bad1)));
    CHECK(!checkViaSemidirectHom(bad1).passed());
    CHECK(agree(bad1));

    auto bad2 = zoo::l2Adjoint();
    bad2.anchor.at(1, 1) = 0; // f = diag(1, 0)
    CHECK(agree(bad2));
    CHECK(!checkViaSemidirectHom(bad2).passed());
}

TEST_CASE("identity is an LM morphism, a broken phi0 is not") {
    auto o = zoo::l2Adjoint();
    LMMorphism<Rational> id{QMatrix::identity(2), QMatrix::identity(2)};
    CHECK(checkLMMorphism(o, o, id).passed());

    LMMorphism<Rational> bad{zoo::l2Endo(1, 1), QMatrix::identity(2)};
    auto rep = checkLMMorphism(o, o, bad);
    CHECK(!rep.passed());
}

TEST_CASE("scaling endomorphisms give LM endomorphisms of the adjoint object") {
    auto o = zoo::l2Adjoint();
    auto e = zoo::l2Endo(3, 2);
    LMMorphism<Rational> mor{e, e};
    CHECK(checkLMMorphism(o, o, mor).passed());
}

TEST_CASE("adjoint representation satisfies the representation equations") {
    CHECK(checkLMRepresentation(zoo::l2Adjoint(),
                                adjointRepresentation(zoo::l2Adjoint()))
              .passed());
    CHECK(checkLMRepresentation(zoo::zeroObject(2, 1),
                                adjointRepresentation(zoo::zeroObject(2, 1)))
              .passed());
    CHECK(checkLMRepresentation(zoo::l2YauAdjoint(2, 1),
                                adjointRepresentation(zoo::l2YauAdjoint(2, 1)))
              .passed());
}

TEST_CASE("adjointRepresentation refuses invalid objects") {
    auto bad = zoo::l2Adjoint();
    bad.anchor.at(0, 1) = 7;
    CHECK_THROWS_AS(adjointRepresentation(bad), PreconditionError);
}

TEST_CASE("lmSemidirect with the adjoint representation is a valid object") {
    auto o = zoo::l2Adjoint();
    auto s = lmSemidirect(o, adjointRepresentation(o));
    CHECK(s.dimG() == 4);
    CHECK(s.dimM() == 4);
    CHECK(checkLMObject(s).passed());
}

TEST_CASE("lmSemidirect with a zero representation pads the object with zeros") {
    auto o = zoo::l2Adjoint();
    auto s = lmSemidirect(o, zeroRep(o, 2, 3));
    CHECK(s.dimG() == 5);
    CHECK(s.dimM() == 4);
    CHECK(checkLMObject(s).passed());
    for (std::size_t k = 0; k < 5; ++k)
        CHECK(s.algebra.product.at(2, 3, k) == 0); // W block is abelian
}

TEST_CASE("zero object with zero representation stays zero") {
    auto o = zoo::zeroObject(1, 1);
    auto s = lmSemidirect(o, zeroRep(o, 1, 1));
    CHECK(s.algebra.product.isZero());
    CHECK(s.module.left.isZero());
    CHECK(s.anchor.isZero());
}

TEST_CASE("tensor square of a one-dimensional abelian algebra is valid") {
    HomAlgebra<Rational> a;
    a.space = {1, {}, QMatrix::identity(1)};
    a.product = Tensor3<Rational>(1, 1, 1);
    auto o = tensorSquareLM(a);
    CHECK(o.dimM() == 1);
    CHECK(o.anchor.isZero());
    CHECK(checkLMObject(o).passed());
}

TEST_CASE("tensor square of l2: anchor and twist data") {
    auto o = tensorSquareLM(zoo::l2Algebra());
    CHECK(o.dimM() == 4);
    // f(e1 x e1) = e2, zero on the other basis tensors
    CHECK(o.anchor.at(1, 0) == 1);
    for (std::size_t p = 1; p < 4; ++p) {
        CHECK(o.anchor.at(0, p) == 0);
        CHECK(o.anchor.at(1, p) == 0);
    }
    CHECK(o.anchor.at(0, 0) == 0);

    // anchor conditions hold...
    auto rep = checkLMObject(o);
    CHECK(equivarianceOK(rep));
    CHECK(checkViaSemidirectHom(o).passed());

    // ...but the module action violates the middle bimodule axiom: at
    // (m, x, y) = (e1 x e1, e1, e1) the defect is e2 x e2 (brute-force
    // verified). The construction does not yield a bimodule here.
    CHECK(!rep.passed());
    REQUIRE(rep.firstFailure() != nullptr);
    CHECK(rep.firstFailure()->name == "bimodule.L2");
}

TEST_CASE("tensor square twist is the square of the algebra twist") {
    auto tw = yauTwist(zoo::l2Algebra(), zoo::l2Endo(2, 0)); // alpha = diag(2,4)
    auto o = tensorSquareLM(tw);
    QMatrix expect(4, 4);
    expect.at(0, 0) = 4;
    expect.at(1, 1) = 8;
    expect.at(2, 2) = 8;
    expect.at(3, 3) = 16;
    CHECK(o.module.space.twist == expect);
    CHECK(equivarianceOK(checkLMObject(o)));
}

TEST_CASE("tensorSquareLM refuses a non-Leibniz input") {
    auto a = zoo::l2Algebra();
    a.product.at(1, 0, 0) = 1;
    CHECK_THROWS_AS(tensorSquareLM(a), PreconditionError);
}
