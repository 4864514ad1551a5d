#pragma once

#include "resol/ideal.hpp"
#include "resol/upoly.hpp"

#include <optional>
#include <vector>

namespace resol {

/// Components {a + r b = 0} of a curve piece, one for each root r of an
/// irreducible polynomial: a piece q(m) = 0 for a monomial m has a = m,
/// b = -1; a pair of conjugate lines through a rational point has a, b linear.
struct RootSplitting {
  Poly a;
  Poly b;
  UPoly minimal;  // monic, irreducible over Q
};

/// One Q-irreducible component of an affine curve.
struct CurvePiece {
  Ideal ideal;              // prime over Q
  int c_components = 1;     // components over C
  int genus = 0;            // of the smooth projective model of each one
  std::optional<RootSplitting> splitting;
};

/// Q-irreducible components of a reduced affine curve, recognised by shape:
/// coordinates that are polynomial in the others are eliminated first, then
/// the rest must be a line, a union of curves m = root for a primitive
/// monomial m, a pair of lines through a rational point, a graph
/// a(u) w + b(u) = 0 with a, b coprime, or a plane curve whose projective
/// closure is smooth. Anything else raises UnsupportedShape.
std::vector<CurvePiece> curve_pieces(const Ideal& curve);

/// Number of components over C of a point set (zero-dimensional ideal) or a
/// curve (via curve_pieces).
int count_c_components(const Ideal& I);

/// Euler characteristic of the smooth projective curve whose affine part is
/// given by the pieces: sum of c_components * (2 - 2 genus).
long long compact_chi(const std::vector<CurvePiece>& pieces);

/// True iff the projective closure of the plane curve g = 0 (g in exactly
/// two variables of its ring) is smooth.
bool smooth_projective_closure(const Poly& g);

}  // namespace resol
