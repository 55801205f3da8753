// Acceptance suite: one verdict line per criterion. Usage:
//   acceptance <path-to-cli> <fixtures-dir>

#include "homleib/deform.hpp"
#include "homleib/dialg.hpp"
#include "homleib/extensions.hpp"
#include "zoo.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace homleib;

namespace {

std::string cliPath, fixturesDir;

struct ZooEntry {
    std::string name;
    QLMObject o;
    QLMRepresentation r; // adjoint-shaped, built without a validity gate
};

std::vector<ZooEntry> theZoo() {
    std::vector<ZooEntry> z;
    auto add = [&](const std::string &name, const QLMObject &o) {
        z.push_back({name, o, zoo::adjointRepUnchecked(o)});
    };
    add("zero(1,1)", zoo::zeroObject(1, 1));
    add("zero(2,1)", zoo::zeroObject(2, 1));
    add("l2-adjoint", zoo::l2Adjoint());
    add("l2-yau-adjoint", zoo::l2YauAdjoint(2, 1));
    add("l2-tensor-square", tensorSquareLM(zoo::l2Algebra()));
    return z;
}

struct Criterion {
    int id;
    std::string what;
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &why) {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
    }
};

bool cochainsEqual(const Cochain2 &a, const Cochain2 &b) {
    return a.omega == b.omega && a.mu == b.mu && a.nu == b.nu && a.theta == b.theta;
}

Cochain2 zeroCochain2(const QLMObject &o, const QLMRepresentation &r) {
    return {Tensor3<Rational>(o.dimG(), o.dimG(), r.dimW()),
            Tensor3<Rational>(o.dimG(), o.dimM(), r.dimV()),
            Tensor3<Rational>(o.dimM(), o.dimG(), r.dimV()),
            QMatrix(r.dimW(), o.dimM())};
}

bool equivarianceOnly(const CheckReport &rep) {
    bool ok = true;
    for (const auto &it : rep.items)
        if (it.name == "cm01" || it.name == "cm02")
            ok = ok && it.passed;
    return ok;
}

struct RunResult {
    int exitCode;
    std::string out;
};

RunResult runCli(const std::string &args) {
    std::string cmd = cliPath + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 1. D2 . D1 = 0 on the twist-compatible subspace: zoo + 50 random Yau twists,
//    under 10 seconds.
Criterion crit1() {
    Criterion c{1, "D2.D1 = 0 on the compatible subspace (zoo + 50 random)"};
    auto start = std::chrono::steady_clock::now();
    for (const auto &e : theZoo()) {
        bool zero = (d2Matrix(e.o, e.r) * d1Matrix(e.o, e.r)).isZero();
        c.require(zero, e.name + ": composite coboundary nonzero");
    }
    zoo::Rng rng(20250601);
    for (int t = 0; t < 50; ++t) {
        auto o = zoo::randomYauAdjoint(rng);
        auto r = adjointRepresentation(o);
        c.require((d2Matrix(o, r) * d1Matrix(o, r)).isZero(),
                  "random Yau instance " + std::to_string(t));
    }
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                       .count();
    c.require(seconds < 10.0, "runtime " + std::to_string(seconds) + "s >= 10s");
    return c;
}

// 2. Cochain dimension formulas everywhere; zero-structure H^2 goldens against
//    the independent elimination oracle.
Criterion crit2() {
    Criterion c{2, "dimension formulas and zero-structure H^2 = 4 / 14 vs oracle"};
    for (const auto &e : theZoo()) {
        const std::size_t n = e.o.dimG(), m = e.o.dimM(), v = e.r.dimV(),
                          w = e.r.dimW();
        c.require(cochainSpace(2, e.o, e.r, false).rawDim() ==
                      n * n * w + 2 * n * m * v + m * w,
                  e.name + ": C^2 dimension formula");
        c.require(cochainSpace(3, e.o, e.r, false).rawDim() ==
                      n * n * n * w + 3 * n * n * m * v + 2 * n * m * w,
                  e.name + ": C^3 dimension formula");
    }
    auto gold = [&](std::size_t n, std::size_t m, std::size_t expected) {
        auto o = zoo::zeroObject(n, m);
        auto r = adjointRepresentation(o);
        auto dims = cohomologyDim(o, r, 2);
        auto oracle = zoo::rankOracleDims(d1Matrix(o, r), d2Matrix(o, r));
        c.require(dims.zDim == oracle.zDim && dims.bDim == oracle.bDim &&
                      dims.hDim == oracle.hDim,
                  "oracle disagreement on zero structure");
        c.require(dims.hDim == expected, "H^2 golden mismatch");
    };
    gold(1, 1, 4);
    gold(2, 1, 14);
    return c;
}

// 3. Constructions preserve the axioms on every zoo instance.
Criterion crit3() {
    Criterion c{3, "constructors pass the full checkers on the zoo"};
    for (const auto &e : theZoo()) {
        try {
            c.require(checkHomLeibniz(semidirectProductUnchecked(e.o.algebra, e.o.module))
                          .passed(),
                      e.name + ": semidirect algebra fails Hom-Leibniz");
            c.require(checkLMObject(lmSemidirect(e.o, adjointRepresentation(e.o))).passed(),
                      e.name + ": LM semidirect object invalid");
            auto d = dialgebraFromLM(e.o);
            c.require(checkLeftDialgebra(d).passed(),
                      e.name + ": derived dialgebra fails the left checks");
            auto [lft, rgt] = leibnizFromAdmissible(d);
            c.require(checkLeftHomLeibniz(lft).passed() &&
                          checkRightHomLeibniz(rgt).passed(),
                      e.name + ": admissible-derived algebras fail");
            auto [sl, sr] = symmetricLMProducts(e.o);
            c.require(sl.product == lft.product && sr.product == rgt.product,
                      e.name + ": symmetric products disagree with dialgebra route");
        } catch (const PreconditionError &err) {
            c.require(false, e.name + ": constructor refused (" +
                                 std::string(err.what()) + ")");
        }
        c.require(checkLMObject(tensorSquareLM(e.o.algebra)).passed(),
                  e.name + ": tensor-square object fails checkLMObject");
    }
    return c;
}

// 4. Object checker and semidirect-homomorphism route agree, including broken
//    anchors.
Criterion crit4() {
    Criterion c{4, "checkLMObject anchor part == checkViaSemidirectHom"};
    auto agree = [&](const QLMObject &o, const std::string &name) {
        c.require(equivarianceOnly(checkLMObject(o)) == checkViaSemidirectHom(o).passed(),
                  name + ": routes disagree");
    };
    for (const auto &e : theZoo())
        agree(e.o, e.name);
    auto bad1 = zoo::l2Adjoint();
    bad1.anchor.at(0, 1) = 1;
    agree(bad1, "broken anchor #1");
    c.require(!checkViaSemidirectHom(bad1).passed(), "broken anchor #1 not detected");
    auto bad2 = zoo::l2Adjoint();
    bad2.anchor.at(1, 1) = 0;
    agree(bad2, "broken anchor #2");
    c.require(!checkViaSemidirectHom(bad2).passed(), "broken anchor #2 not detected");
    return c;
}

// 5. Cocycle checkers match the coboundary application on random cochains.
Criterion crit5() {
    Criterion c{5, "check1/2Cocycle <=> applyD1/D2 = 0 on 100 random cochains each"};
    zoo::Rng rng(777);
    for (const auto &e : theZoo()) {
        auto s2 = cochainSpace(2, e.o, e.r, false);
        auto s3 = cochainSpace(3, e.o, e.r, false);
        for (int t = 0; t < 100; ++t) {
            auto c1 = zoo::randCochain1(e.o, e.r, rng);
            bool viaCheck = check1Cocycle(e.o, e.r, c1).passed();
            bool viaApply = vecIsZero(flatten(s2, applyD1(e.o, e.r, c1)));
            c.require(viaCheck == viaApply, e.name + ": degree 1 mismatch");
            auto c2 = zoo::randCochain2(e.o, e.r, rng);
            bool v2Check = check2Cocycle(e.o, e.r, c2).passed();
            bool v2Apply = vecIsZero(flatten(s3, applyD2(e.o, e.r, c2)));
            c.require(v2Check == v2Apply, e.name + ": degree 2 mismatch");
        }
    }
    return c;
}

// 6. Infinitesimal deformation verdict is the conjunction of the cocycle and
//    structure conditions; failing witnesses confirmed by coefficient
//    extraction through interpolation.
Criterion crit6() {
    Criterion c{6, "deformationOK = cocycleOK and structureOK, witnesses confirmed"};
    zoo::Rng rng(31337);
    for (const auto &name : {"l2-adjoint", "zero(2,1)"}) {
        QLMObject o = std::string(name) == "l2-adjoint" ? zoo::l2Adjoint()
                                                        : zoo::zeroObject(2, 1);
        auto r = adjointRepresentation(o);
        for (int t = 0; t < 40; ++t) {
            auto cc = zoo::randCochain2(o, r, rng);
            auto v = checkInfinitesimalDeformation({o, {cc}});
            c.require(v.deformationOK == (v.cocycleOK && v.structureOK),
                      std::string(name) + ": biconditional broken");
        }
        auto cb = applyD1(o, r, zoo::randCochain1(o, r, rng));
        auto v = checkInfinitesimalDeformation({o, {cb}});
        c.require(v.cocycleOK, std::string(name) + ": coboundary does not close");
        c.require(v.deformationOK == (v.cocycleOK && v.structureOK),
                  std::string(name) + ": biconditional broken on a coboundary");
    }
    // crafted cochain closing but not an LM structure
    auto o = zoo::zeroObject(1, 1);
    auto r = adjointRepresentation(o);
    auto craft = zeroCochain2(o, r);
    craft.omega.at(0, 0, 0) = 1;
    auto v = checkInfinitesimalDeformation({o, {craft}});
    c.require(v.cocycleOK && !v.structureOK && !v.deformationOK,
              "crafted cochain verdicts off");
    auto def = deformedStructure({o, {craft}}, 2);
    auto x = basisVec<TruncPoly>(1, 0);
    auto defect = vecSub(
        def.algebra.mul(def.algebra.alpha(x), def.algebra.mul(x, x)),
        vecAdd(def.algebra.mul(def.algebra.mul(x, x), def.algebra.alpha(x)),
               def.algebra.mul(def.algebra.alpha(x), def.algebra.mul(x, x))))[0];
    c.require(zoo::polyCoeffByInterpolation(defect, 0) == 0 &&
                  zoo::polyCoeffByInterpolation(defect, 1) == 0 &&
                  zoo::polyCoeffByInterpolation(defect, 2) != 0,
              "lambda-coefficient oracle does not confirm the witness");
    return c;
}

// 7. Nijenhuis pairs give exact coboundary deformations that are trivial.
Criterion crit7() {
    Criterion c{7, "Nijenhuis pairs: cochain = D1(pair), deformation trivial"};
    auto o = zoo::l2Adjoint();
    auto r = adjointRepresentation(o);
    std::vector<NijenhuisPair> pairs{
        {QMatrix(2, 2), QMatrix(2, 2)},
        {QMatrix::identity(2), QMatrix::identity(2)},
        zoo::l2NijPair(Rational(7, 3), 0)}; // zero, id, (7/3).id
    zoo::Rng rng(9001);
    for (int t = 0; t < 20; ++t)
        pairs.push_back(zoo::randomNijPair(rng));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto &p = pairs[i];
        if (!isNijenhuis(o, p).passed()) {
            c.require(false, "pair " + std::to_string(i) + " rejected");
            continue;
        }
        auto d = deformationFromNijenhuis(o, p);
        c.require(d.terms.size() == 1 &&
                      cochainsEqual(d.terms[0], applyD1(o, r, {p.n0, p.n1})),
                  "pair " + std::to_string(i) + ": cochain != D1(pair)");
        c.require(isTrivialDeformation(d, p).passed(),
                  "pair " + std::to_string(i) + ": deformation not trivial");
    }
    return c;
}

// 8. Extension round trips and the equivalence criterion.
Criterion crit8() {
    Criterion c{8, "extension round trips, splitting shifts, equivalence classes"};
    zoo::Rng rng(616);
    for (auto o : {zoo::l2Adjoint(), zoo::zeroObject(2, 1)}) {
        auto r = adjointRepresentation(o);
        auto cc = applyD1(o, r, zoo::randCochain1(o, r, rng));
        auto e = extensionFromCocycle(o, r, cc);
        c.require(checkExtension(e).passed(), "built extension invalid");
        auto s = canonicalSplitting(e);
        c.require(cochainsEqual(extractCocycle(e, s), cc), "round trip not exact");

        Cochain1 b = zoo::randCochain1(o, r, rng);
        // the perturbed maps stay a splitting when phi b1 = b0 f
        if (r.phi.rows == r.phi.cols && r.phi == QMatrix::identity(r.phi.rows))
            b.n1 = b.n0;
        Splitting s2{s.s0 + e.i0 * b.n0, s.s1 + e.i1 * b.n1};
        if (checkSplitting(e, s2).passed()) {
            auto c1 = extractCocycle(e, s);
            auto c2 = extractCocycle(e, s2);
            auto shift = applyD1(o, r, b);
            Cochain2 diff{c2.omega - c1.omega, c2.mu - c1.mu, c2.nu - c1.nu,
                          c2.theta - c1.theta};
            c.require(cochainsEqual(diff, shift),
                      "perturbed splitting shift is not D1(b)");
        } else {
            c.require(false, "perturbed splitting rejected");
        }
    }
    // positive and negative equivalence on the zero structure
    auto o = zoo::zeroObject(1, 1);
    auto r = adjointRepresentation(o);
    auto nontrivial = zeroCochain2(o, r);
    nontrivial.omega.at(0, 0, 0) = 1;
    auto e1 = extensionFromCocycle(o, r, nontrivial);
    auto e2 = extensionFromCocycle(o, r, zeroCochain2(o, r));
    c.require(areEquivalent(e1, e1).has_value(), "self-equivalence missing");
    c.require(!areEquivalent(e1, e2).has_value(),
              "distinct classes reported equivalent");
    auto mor = areEquivalent(e1, e1);
    if (mor)
        c.require(checkLMMorphism(e1.total, e1.total, *mor).passed(),
                  "equivalence witness not a verified morphism");
    return c;
}

// 9. CLI determinism and the exit code contract.
Criterion crit9() {
    Criterion c{9, "CLI reports byte-identical; exit codes 0/1/2"};
    const std::vector<std::string> fixtures = {
        "zero.json",       "zerocochain.json", "zero21.json",
        "l2adjoint.json",  "idpair.json",      "l2yau.json",
        "l2tensorsquare.json", "brokenanchor.json", "badrational.json"};
    for (const auto &f : fixtures) {
        auto a = runCli("check --json " + fixturesDir + "/" + f);
        auto b = runCli("check --json " + fixturesDir + "/" + f);
        c.require(a.out == b.out && a.exitCode == b.exitCode,
                  f + ": non-deterministic report");
    }
    c.require(runCli("check " + fixturesDir + "/zerocochain.json").exitCode == 0,
              "pass fixture exit code != 0");
    c.require(runCli("check " + fixturesDir + "/brokenanchor.json").exitCode == 1,
              "failing fixture exit code != 1");
    c.require(runCli("check " + fixturesDir + "/badrational.json").exitCode == 2,
              "malformed fixture exit code != 2");
    return c;
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-path> <fixtures-dir>\n";
        return 2;
    }
    cliPath = argv[1];
    fixturesDir = argv[2];

    std::vector<Criterion> results{crit1(), crit2(), crit3(), crit4(), crit5(),
                                   crit6(), crit7(), crit8(), crit9()};
    int failures = 0;
    for (const auto &c : results) {
        std::cout << "criterion " << c.id << ": " << (c.ok ? "PASS" : "FAIL") << " — "
                  << c.what;
        if (!c.ok)
            std::cout << " [" << c.detail << "]";
        std::cout << "\n";
        failures += c.ok ? 0 : 1;
    }
    if (failures)
        std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
