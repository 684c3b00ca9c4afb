#pragma once

#include <vector>

#include "dh/algebraic.hpp"

namespace dh {

using PolyM = Poly<AlgebraicElement>;

// Coefficient-wise lift of a polynomial over k into M[X].
PolyM lift_to_ambient(const PolyK& g, const AmbientPtr& M);

// All roots of a nonzero g in the ambient M, sorted, without multiplicities.
//
// Method: pick a monic irreducible u such that the integral defining
// polynomial of M splits into distinct unit roots mod u.  Each root of g then
// reduces, under every one of the [M:k] embeddings into A/u, to a residue
// root of the embedded image of g; candidates are rebuilt from tuples of
// u-adically lifted residue roots by solving for power-basis coordinates mod
// u^N and rationally reconstructing them, and every candidate is checked by
// exact evaluation, so no false roots survive.  The precision window N
// doubles until the verified root set is stable across a doubling; the search
// is complete for roots whose coordinates are u-integral and fit the window.
// Requires a separable defining polynomial for M and a nonzero g with nonzero
// formal derivative (after removing repeated factors).
std::vector<AlgebraicElement> roots_in_ambient(const PolyM& g, const AmbientPtr& M);
std::vector<AlgebraicElement> roots_in_ambient(const PolyK& g, const AmbientPtr& M);

}  // namespace dh
