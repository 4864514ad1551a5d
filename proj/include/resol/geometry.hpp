#pragma once

#include "resol/blowup.hpp"

#include <vector>

namespace resol {

/// Coordinates of chart `to` as reduced fractions in the coordinates of
/// chart `from` (both charts of the same resolution of the same root).
std::vector<Fraction> transition(const Chart& from, const Chart& to);

/// Product of the denominators of transition(from, to). When both charts are
/// open pieces of the same final space, U_from and U_to overlap exactly where
/// this polynomial does not vanish (in the coordinates of `from`).
Poly overlap_denominator(const Chart& from, const Chart& to);

/// Ideals of the divisor components visible in a chart: the strict transform
/// (when not the unit ideal) followed by the visible exceptional divisors.
std::vector<Ideal> visible_components(const Chart& c);

/// Closure in chart `to` of the part of V(J) lying in the overlap with chart
/// `from`. J lives in the ring of `from`, optionally extended by trailing
/// variables that are not chart coordinates; they are carried over unchanged.
Ideal transport(const Ideal& J, const Chart& from, const Chart& to);

/// Polynomials in the ring of `c` whose common zeros are the points of `c`
/// lying in none of the `earlier` charts. Empty when `earlier` is empty.
std::vector<Poly> outside_of(const Chart& c, const std::vector<const Chart*>& earlier);

/// Length of the zero-dimensional ideal J at the points of V(locus); the
/// locus polynomials are embedded into the ring of J by name. An empty locus
/// means every point.
long long length_on(const Ideal& J, const std::vector<Poly>& locus);

/// Distinct points of the zero-dimensional ideal J in V(locus).
long long points_on(const Ideal& J, const std::vector<Poly>& locus);

/// True iff the irreducible variety V(P) (P prime) lies inside V(locus).
bool inside(const Ideal& P, const std::vector<Poly>& locus);

}  // namespace resol
