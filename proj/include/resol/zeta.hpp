#pragma once

#include "resol/divisors.hpp"
#include "resol/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace resol {

/// Euler characteristic of the exceptional divisor created by blowing up a
/// smooth compact center of Euler characteristic `center_chi` and dimension
/// `center_dim` in an ambient space of dimension `ambient_dim`: a bundle of
/// projective spaces of dimension ambient_dim - center_dim - 1.
long long birth_chi(int ambient_dim, int center_dim, long long center_chi);

/// Surfaces in 3-space: 3 for a point, 4 - 4g for a curve of genus g.
long long birth_chi(int center_dim, int center_genus = 0);

/// Euler characteristics of the exceptional divisors (by label), tracked from
/// birth through every later blow-up meeting them.
struct ChiLedger {
  struct Update {
    int by_label = 0;  // the blow-up creating this label
    long long delta = 0;
  };
  struct Entry {
    long long birth = 0;
    std::vector<Update> updates;
    long long current() const;
  };
  std::vector<Entry> entries;  // index label - 1

  long long chi(int label) const { return entries.at(static_cast<std::size_t>(label - 1)).current(); }
};

/// Change of the Euler characteristic of a divisor E of dimension `divisor_dim`
/// when a center meets it in a set of dimension `meet_dim` and Euler
/// characteristic `meet_chi`.
long long update_chi(int divisor_dim, int meet_dim, long long meet_chi);

/// Ledger for all exceptional divisors of the tree. Centers must be compact,
/// i.e. lie over the origin.
ChiLedger chi_ledger(const ChartTree& t, const DivisorTable& d);

/// A non-empty intersection E_J of divisor components; label 0 is the strict
/// transform. chi_star is the Euler characteristic of E_J minus the other
/// components.
struct Stratum {
  std::vector<int> labels;  // ascending
  long long chi = 0;
  long long chi_star = 0;
  long long chi_star_over_origin = 0;
};

/// All strata whose labels include an exceptional divisor, in lexicographic
/// order of labels. Requires every exceptional divisor to lie over the origin
/// (UnsupportedShape otherwise), so the strata lie in the fibre over it.
std::vector<Stratum> stratify(const ChartTree& t, const DivisorTable& d);

/// True iff every exceptional divisor maps to the origin.
bool divisors_over_origin(const ChartTree& t, const DivisorTable& d);

/// Positive weights w with f weighted homogeneous, if there are any.
std::optional<std::vector<Rational>> homogeneity_weights(const Poly& f);

/// Topological zeta function Z^(dd)(s), summed over the strata E_J* with dd
/// dividing every N_j. The local version counts the fibre over the origin;
/// the global one is computed for weighted homogeneous input only (where the
/// strata off the origin have Euler characteristic 0 and both agree).
RationalFunction zeta_top(const ChartTree& t, const DivisorTable& d, int dd, bool local);

/// Characteristic polynomial of the local monodromy at the origin, in s, from
/// the A'Campo product over the strata of single exceptional divisors.
UPoly monodromy_charpoly(const ChartTree& t, const DivisorTable& d);

/// {"d", "scope", "numerator", "denominator", "monodromy"}; coefficient lists
/// run from degree 0 upward.
std::string zeta_json(const RationalFunction& z, const UPoly& monodromy, int dd, bool local);

}  // namespace resol
