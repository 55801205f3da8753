#pragma once

#include "homleib/lmcat.hpp"
#include "homleib/linalg.hpp"

namespace homleib {

using QLMObject = LMObject<Rational>;
using QLMRepresentation = LMRepresentation<Rational>;

// (N0, N1): g -> W, M -> V.
struct Cochain1 {
    QMatrix n0; // w x n
    QMatrix n1; // v x m
};

// (omega, mu, nu, theta).
struct Cochain2 {
    Tensor3<Rational> omega; // (g, g) -> W
    Tensor3<Rational> mu;    // (g, M) -> V
    Tensor3<Rational> nu;    // (M, g) -> V
    QMatrix theta;           // w x m
};

// Codomain of the degree-2 coboundary, indexed by argument signature.
struct Cochain3 {
    Tensor4<Rational> www; // (x, y, z) -> W
    Tensor4<Rational> xym; // (x, y, m) -> V
    Tensor4<Rational> xmy; // (x, m, y) -> V
    Tensor4<Rational> mxy; // (m, x, y) -> V
    Tensor3<Rational> xmW; // (x, m) -> W
    Tensor3<Rational> mxW; // (m, x) -> W
};

// Flat coordinates: pieces in declaration order, row-major multi-index,
// target coordinate fastest.
struct CochainSpace {
    int degree = 0;
    std::size_t n = 0, m = 0, v = 0, w = 0; // dims of g, M, V, W
    bool compatRestricted = false;
    Subspace compat; // basis of the twist-compatible cochains

    std::size_t rawDim() const;
};

// Requires k in {1,2,3} and a multiplicative twist on the algebra.
CochainSpace cochainSpace(int k, const QLMObject &o, const QLMRepresentation &r,
                          bool compatFlag = true);

QVec flatten(const CochainSpace &s, const Cochain1 &c);
QVec flatten(const CochainSpace &s, const Cochain2 &c);
QVec flatten(const CochainSpace &s, const Cochain3 &c);
Cochain1 unflatten1(const CochainSpace &s, const QVec &x);
Cochain2 unflatten2(const CochainSpace &s, const QVec &x);
Cochain3 unflatten3(const CochainSpace &s, const QVec &x);

Cochain2 applyD1(const QLMObject &o, const QLMRepresentation &r, const Cochain1 &c);
Cochain3 applyD2(const QLMObject &o, const QLMRepresentation &r, const Cochain2 &c);

CheckReport check1Cocycle(const QLMObject &o, const QLMRepresentation &r,
                          const Cochain1 &c);
CheckReport check2Cocycle(const QLMObject &o, const QLMRepresentation &r,
                          const Cochain2 &c);

// Matrix of D_k in flat coordinates; restricted to the compatible-subspace
// coordinates of both ends when compatFlag is set.
QMatrix d1Matrix(const QLMObject &o, const QLMRepresentation &r, bool compatFlag = true);
QMatrix d2Matrix(const QLMObject &o, const QLMRepresentation &r, bool compatFlag = true);

// The complex starts at W, but the first differential is not pinned down by
// the defining data; the strategy is explicit in every result.
enum class D0Strategy { Zero, WAction };

// Matrix of D0: W -> C^1. WAction sets D0(w) = (x -> -w.x, m -> -w|>m) and
// is accepted only after verifying D1 . D0 = 0 on this instance.
QMatrix d0Matrix(const QLMObject &o, const QLMRepresentation &r, D0Strategy strategy,
                 bool compatFlag = true);

struct CohomologyDims {
    std::size_t zDim = 0, bDim = 0, hDim = 0;
    D0Strategy d0 = D0Strategy::Zero; // meaningful for degree 1 only
};

// Degree 1 or 2. Verifies coboundaries sit inside cocycles before quotienting.
CohomologyDims cohomologyDim(const QLMObject &o, const QLMRepresentation &r, int k,
                             bool compatFlag = true,
                             D0Strategy d0 = D0Strategy::Zero);

// A k-linear map (g)^k -> module, dense coefficients, target fastest.
struct MultiTensor {
    std::size_t arity = 0, argDim = 0, outDim = 0;
    std::vector<Rational> a;

    MultiTensor() = default;
    MultiTensor(std::size_t k, std::size_t n, std::size_t out);

    std::size_t flatIndex(const std::vector<std::size_t> &idx, std::size_t t) const;
    Rational &at(const std::vector<std::size_t> &idx, std::size_t t);
    const Rational &at(const std::vector<std::size_t> &idx, std::size_t t) const;
    QVec apply(const std::vector<QVec> &args) const;
    bool isZero() const;
};

// Coboundary of the one-algebra complex of (g, alpha) with values in a
// bimodule: delta(omega)(u1..u_{k+1}) with alpha^{k-1} twists.
MultiTensor csCoboundary(const HomAlgebra<Rational> &a, const Bimodule<Rational> &b,
                         std::size_t k, const MultiTensor &omega);

} // namespace homleib
