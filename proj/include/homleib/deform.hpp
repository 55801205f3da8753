#pragma once

#include "homleib/cohomology.hpp"
#include "homleib/poly.hpp"

#include <optional>
#include <vector>

namespace homleib {

using PolyObject = LMObject<TruncPoly>;

// Base structure plus the lambda-series terms: terms[i] holds the order
// i+1 coefficients (omega_i+1, mu_i+1, nu_i+1, theta_i+1). An infinitesimal
// deformation has a single term.
struct DeformationData {
    QLMObject base;
    std::vector<Cochain2> terms;
};

struct NijenhuisPair {
    QMatrix n0; // g -> g
    QMatrix n1; // M -> M
};

// Base object with every scalar widened to Q[lambda]/(lambda^(order+1)).
PolyObject toPolyObject(const QLMObject &o, std::size_t order);

// f + lambda theta + ..., product + lambda omega + ..., actions likewise;
// twists unchanged.
PolyObject deformedStructure(const DeformationData &d, std::size_t order);

struct InfinitesimalVerdict {
    bool cocycleOK = false;
    bool structureOK = false;
    bool deformationOK = false;
    CheckReport cocycle;     // the six 2-cocycle conditions, adjoint coefficients
    CheckReport structure;   // (omega, mu, nu, theta) as an object in its own right
    CheckReport deformation; // full axioms of the deformed structure mod lambda^3
};

// The deformed structure is valid exactly when the term is a 2-cocycle and
// itself an LM structure; all three verdicts are computed independently.
InfinitesimalVerdict checkInfinitesimalDeformation(const DeformationData &d);

// Conditions (i)-(iv): Im(f N1 - N0 f) in Ker N0, and N0/N1 intertwine the
// once-deformed products with the originals.
CheckReport isNijenhuis(const QLMObject &o, const NijenhuisPair &p);

// Whether (N0, N1) commute with the twists; reported separately because the
// defining conditions do not require it.
CheckReport nijenhuisTwistCommutation(const QLMObject &o, const NijenhuisPair &p);

// omega(x,y) = N0(x)y + xN0(y) - N0(xy), mu, nu likewise, theta = fN1 - N0f.
// Refuses pairs failing isNijenhuis.
DeformationData deformationFromNijenhuis(const QLMObject &o, const NijenhuisPair &p);

// (id + lambda N0, id + lambda N1) as a morphism from the deformed object to
// the base, verified exactly mod lambda^3.
CheckReport isTrivialDeformation(const DeformationData &d, const NijenhuisPair &p);

// Order-k convolution identities of the full lambda-series, k = 0..order.
// Order 0 is base validity; order 1 the 2-cocycle conditions.
CheckReport checkFormalDeformation(const DeformationData &d, std::size_t order);

// Witness c with (a - b)'s first-order term = D1(c), searched in the
// twist-compatible subspace unless raw is set; absent when not cohomologous.
std::optional<Cochain1> deformationsEquivalentFirstOrder(const DeformationData &a,
                                                         const DeformationData &b,
                                                         bool raw = false);

struct RigidityVerdict {
    CohomologyDims h2;
    bool rigidByCriterion = false; // H^2 = 0 is sufficient, not necessary
};

RigidityVerdict isRigid(const QLMObject &o);

} // namespace homleib
