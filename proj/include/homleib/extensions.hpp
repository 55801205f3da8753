#pragma once

#include "homleib/cohomology.hpp"

#include <optional>

namespace homleib {

// Short exact sequence of LM objects with abelian fiber (V, W, phi),
// carried with explicit inclusion and projection maps so non-block-basis
// extensions can be checked too.
struct AbelianExtension {
    QLMObject total; // on (M + V, g + W)
    QMatrix i0;      // W -> g+W
    QMatrix i1;      // V -> M+V
    QMatrix p0;      // g+W -> g
    QMatrix p1;      // M+V -> M
    QLMObject base;
    QLMRepresentation fiber;
};

struct Splitting {
    QMatrix s0; // g -> g+W, section of p0
    QMatrix s1; // M -> M+V, section of p1
};

// Total structure: product xx' + omega(x,x') + x.w' + w.x', actions with
// mu / nu / cross terms, anchor f + theta + phi. Refuses non-cocycles,
// naming the failing condition.
AbelianExtension extensionFromCocycle(const QLMObject &o, const QLMRepresentation &r,
                                      const Cochain2 &c);

// Block inclusions; a valid splitting of every internally built extension.
Splitting canonicalSplitting(const AbelianExtension &e);

// Exact rows, commuting squares, abelian fiber, and validity of the total.
CheckReport checkExtension(const AbelianExtension &e);

// p0 s0 = id, p1 s1 = id, and fhat s1 - s0 f lands in the fiber.
CheckReport checkSplitting(const AbelianExtension &e, const Splitting &s);

// A splitting found by solving the section equations; absent only when the
// stacked linear system is inconsistent.
std::optional<Splitting> findSplitting(const AbelianExtension &e);

// theta = fhat s1 - s0 f, omega(x,y) = s0(x)s0(y) - s0(xy), mu and nu
// likewise; the values are verified to land in the fiber and returned in
// fiber coordinates. Output is always a 2-cocycle.
Cochain2 extractCocycle(const AbelianExtension &e, const Splitting &s);

// Action table x.v := s0(x).v, x.w := s0(x)w, w|>m := w.s1(m), m<|w :=
// s1(m).w, read off the total structure; splitting-independent.
QLMRepresentation inducedBimodule(const AbelianExtension &e, const Splitting &s);

// Morphism F0(x+w) = x + b0(x) + w, F1(m+v) = m + b1(m) + v when the
// extracted cocycles differ by the coboundary of some (b0, b1); absent
// otherwise. The returned morphism is re-verified before being returned.
std::optional<LMMorphism<Rational>> areEquivalent(const AbelianExtension &e,
                                                  const AbelianExtension &f,
                                                  bool raw = false);

} // namespace homleib
