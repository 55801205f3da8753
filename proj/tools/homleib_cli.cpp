#include "homleib/dialg.hpp"
#include "homleib/deform.hpp"
#include "homleib/extensions.hpp"
#include "homleib/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace homleib;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

struct Options {
    std::string file;
    std::string cochainFile;
    std::string cochain2File;
    std::string pairFile;
    int degree = 2;
    std::size_t order = 2;
    bool noCompat = false;
    bool jsonOut = false;
};

struct Outcome {
    CheckReport checks;
    ordered_json numbers = ordered_json::object();
};

Cochain2 requireCochain(const Instance &inst, const Options &opt) {
    if (!opt.cochainFile.empty()) {
        Instance other = parseInstance(opt.cochainFile);
        if (!other.cochain)
            throw InputError(opt.cochainFile + ": no cochain section");
        return *other.cochain;
    }
    if (!inst.cochain)
        throw InputError(opt.file + ": no cochain section (or pass --cochain FILE)");
    return *inst.cochain;
}

NijenhuisPair requirePair(const Instance &inst, const Options &opt) {
    if (!opt.pairFile.empty()) {
        Instance other = parseInstance(opt.pairFile);
        if (!other.pair)
            throw InputError(opt.pairFile + ": no pair section");
        return *other.pair;
    }
    if (!inst.pair)
        throw InputError(opt.file + ": no pair section (or pass --pair FILE)");
    return *inst.pair;
}

Outcome runCheck(const Instance &inst) {
    Outcome out;
    out.checks.merge(checkLMObject(inst.object), "object.");
    out.checks.merge(checkMultiplicativity(inst.object.algebra), "twist.");
    if (inst.rep)
        out.checks.merge(checkLMRepresentation(inst.object, *inst.rep), "rep.");
    return out;
}

Outcome runCohomology(const Instance &inst, const Options &opt) {
    Outcome out;
    QLMRepresentation rep = effectiveRep(inst);
    CohomologyDims h = cohomologyDim(inst.object, rep, opt.degree, !opt.noCompat);
    out.checks.add("containment", true); // cohomologyDim throws otherwise
    out.numbers["dims"] = {{"n", inst.object.dimG()},
                           {"m", inst.object.dimM()},
                           {"v", rep.dimV()},
                           {"w", rep.dimW()}};
    CochainSpace s = cochainSpace(opt.degree, inst.object, rep, !opt.noCompat);
    out.numbers["rawDim"] = s.rawDim();
    out.numbers["compatDim"] = s.compat.dim();
    out.numbers["zDims"] = {{std::to_string(opt.degree), h.zDim}};
    out.numbers["bDims"] = {{std::to_string(opt.degree), h.bDim}};
    out.numbers["hDims"] = {{std::to_string(opt.degree), h.hDim}};
    return out;
}

Outcome runCocycle(const Instance &inst, const Options &opt) {
    Outcome out;
    QLMRepresentation rep = effectiveRep(inst);
    out.checks = check2Cocycle(inst.object, rep, requireCochain(inst, opt));
    return out;
}

Outcome runDeform(const Instance &inst, const Options &opt) {
    Outcome out;
    DeformationData d{inst.object, {requireCochain(inst, opt)}};
    InfinitesimalVerdict v = checkInfinitesimalDeformation(d);
    out.checks.add("cocycle", v.cocycleOK,
                   v.cocycleOK ? "" : v.cocycle.firstFailure()->name);
    out.checks.add("structure", v.structureOK,
                   v.structureOK ? "" : v.structure.firstFailure()->name);
    out.checks.add("deformation", v.deformationOK,
                   v.deformationOK ? "" : v.deformation.firstFailure()->name);
    out.checks.merge(checkFormalDeformation(d, opt.order), "formal.");
    RigidityVerdict rg = isRigid(inst.object);
    out.numbers["hDims"] = {{"2", rg.h2.hDim}};
    out.numbers["rigidByCriterion"] = rg.rigidByCriterion;
    return out;
}

Outcome runNijenhuis(const Instance &inst, const Options &opt) {
    Outcome out;
    NijenhuisPair p = requirePair(inst, opt);
    out.checks = isNijenhuis(inst.object, p);
    // informational: twist commutation is not part of the verdict
    CheckReport tc = nijenhuisTwistCommutation(inst.object, p);
    out.numbers["twistCommutes"] = tc.passed();
    if (out.checks.passed()) {
        DeformationData d = deformationFromNijenhuis(inst.object, p);
        out.checks.merge(isTrivialDeformation(d, p), "trivial.");
    }
    return out;
}

Outcome runDialgebra(const Instance &inst) {
    Outcome out;
    Dialgebra<Rational> d = dialgebraFromLM(inst.object);
    if (inst.object.algebra.handedness == Handedness::Left)
        out.checks.merge(checkLeftDialgebra(d), "left.");
    else
        out.checks.merge(checkRightDialgebra(d), "right.");
    // reported separately from the handed verdicts
    out.numbers["twistMultiplicative"] = checkDialgebraTwistMultiplicativity(d).passed();
    return out;
}

Outcome runTensorSquare(const Instance &inst) {
    Outcome out;
    LMObject<Rational> t = tensorSquareLM(inst.object.algebra);
    out.checks.merge(checkLMObject(t), "tensorSquare.");
    out.numbers["dims"] = {{"n", t.dimG()}, {"m", t.dimM()}};
    return out;
}

Outcome runExtend(const Instance &inst, const Options &opt) {
    Outcome out;
    QLMRepresentation rep = effectiveRep(inst);
    AbelianExtension e = extensionFromCocycle(inst.object, rep, requireCochain(inst, opt));
    out.checks = checkExtension(e);
    Cochain2 back = extractCocycle(e, canonicalSplitting(e));
    Cochain2 c = requireCochain(inst, opt);
    out.checks.add("roundTrip", back.omega == c.omega && back.mu == c.mu &&
                                    back.nu == c.nu && back.theta == c.theta);
    return out;
}

Outcome runEquivalent(const Instance &inst, const Options &opt) {
    Outcome out;
    if (opt.cochain2File.empty())
        throw InputError("equivalent: --cochain2 FILE is required");
    QLMRepresentation rep = effectiveRep(inst);
    AbelianExtension e1 =
        extensionFromCocycle(inst.object, rep, requireCochain(inst, opt));
    Options o2 = opt;
    o2.cochainFile = opt.cochain2File;
    AbelianExtension e2 =
        extensionFromCocycle(inst.object, rep, requireCochain(inst, o2));
    auto mor = areEquivalent(e1, e2, opt.noCompat);
    out.checks.add("equivalent", mor.has_value(),
                   mor ? "" : "cocycle difference is not a coboundary");
    return out;
}

int emit(const std::string &command, const Instance &inst, const Outcome &out,
         bool jsonOut) {
    if (jsonOut) {
        ordered_json doc;
        doc["formatVersion"] = kFormatVersion;
        doc["command"] = command;
        doc["instanceDigest"] = digestToHex(inst.digest);
        doc["checks"] = ordered_json::array();
        for (const auto &item : out.checks.items) {
            ordered_json c = {{"name", item.name}, {"passed", item.passed}};
            if (!item.witness.empty())
                c["witness"] = item.witness;
            doc["checks"].push_back(c);
        }
        doc["numbers"] = out.numbers;
        doc["passed"] = out.checks.passed();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << command << " (instance " << digestToHex(inst.digest) << ")\n";
        for (const auto &item : out.checks.items) {
            std::cout << "  " << (item.passed ? "✓" : "✗") << " " << item.name;
            if (!item.passed && !item.witness.empty())
                std::cout << "  " << item.witness;
            std::cout << "\n";
        }
        if (!out.numbers.empty())
            std::cout << "  numbers: " << out.numbers.dump() << "\n";
        std::cout << (out.checks.passed() ? "PASS" : "FAIL") << "\n";
    }
    return out.checks.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact checker and cohomology calculator for twisted Leibniz-type "
                 "structures given by rational structure constants"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    const std::vector<std::string> names = {"check",     "cohomology", "cocycle",
                                            "deform",    "nijenhuis",  "dialgebra",
                                            "tensor-square", "extend", "equivalent"};
    for (const auto &name : names) {
        CLI::App *sub = app.add_subcommand(name);
        sub->add_option("file", opt.file, "instance file")->required();
        sub->add_option("--cochain", opt.cochainFile, "cochain from another file");
        sub->add_option("--cochain2", opt.cochain2File, "second cochain file");
        sub->add_option("--pair", opt.pairFile, "pair from another file");
        sub->add_option("--degree", opt.degree, "cohomology degree");
        sub->add_option("--order", opt.order, "truncation order");
        sub->add_flag("--no-alpha-compat", opt.noCompat,
                      "work in raw coordinates, skip the twist-compatibility "
                      "restriction");
        sub->add_flag("--json", opt.jsonOut, "machine-readable report");
        sub->callback([&command, name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        Instance inst = parseInstance(opt.file);
        Outcome out;
        if (command == "check")
            out = runCheck(inst);
        else if (command == "cohomology")
            out = runCohomology(inst, opt);
        else if (command == "cocycle")
            out = runCocycle(inst, opt);
        else if (command == "deform")
            out = runDeform(inst, opt);
        else if (command == "nijenhuis")
            out = runNijenhuis(inst, opt);
        else if (command == "dialgebra")
            out = runDialgebra(inst);
        else if (command == "tensor-square")
            out = runTensorSquare(inst);
        else if (command == "extend")
            out = runExtend(inst, opt);
        else
            out = runEquivalent(inst, opt);
        return emit(command, inst, out, opt.jsonOut);
    } catch (const InputError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError &e) {
        std::cerr << "failed check: " << e.what() << "\n";
        const CheckItem *f = e.report.firstFailure();
        if (f)
            std::cerr << "  " << f->name << (f->witness.empty() ? "" : " " + f->witness)
                      << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
