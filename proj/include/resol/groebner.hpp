#pragma once

#include "resol/poly.hpp"

#include <vector>

namespace resol {

/// Monomial order. Variable 0 is the largest variable for lex.
struct TermOrder {
  enum class Kind { Lex, DegRevLex, Elimination };
  Kind kind = Kind::DegRevLex;
  /// For Elimination: variables to eliminate (compared first by degree in
  /// these variables, ties broken by degrevlex).
  std::vector<bool> eliminate;

  static TermOrder lex() { return {Kind::Lex, {}}; }
  static TermOrder degrevlex() { return {Kind::DegRevLex, {}}; }
  static TermOrder elimination(std::vector<bool> vars) { return {Kind::Elimination, std::move(vars)}; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Exponents& a, const Exponents& b) const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind == b.kind && a.eliminate == b.eliminate;
  }
};

/// Leading exponent and coefficient of a non-zero polynomial.
Exponents leading_exponent(const Poly& p, const TermOrder& ord);
Rational leading_coefficient(const Poly& p, const TermOrder& ord);

/// Reduced Groebner basis (monic, sorted by ascending leading term) of the
/// ideal generated by `gens`. Buchberger with the product and chain criteria
/// and the normal selection strategy. The zero ideal gives an empty basis.
std::vector<Poly> groebner(const std::vector<Poly>& gens, const TermOrder& ord);

/// Fully reduced remainder of f on division by g (assumed a Groebner basis).
Poly normal_form(const Poly& f, const std::vector<Poly>& g, const TermOrder& ord);

/// True if the basis is {1}.
bool is_unit_basis(const std::vector<Poly>& g);

}  // namespace resol
