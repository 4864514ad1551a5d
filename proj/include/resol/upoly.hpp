#pragma once

#include "resol/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace resol {

/// Dense univariate polynomial over the rationals, coefficients from degree 0
/// upward. Trailing zeros are trimmed, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c) : UPoly(std::vector<Rational>{c}) {}  // NOLINT(implicit)

  static UPoly x() { return UPoly(std::vector<Rational>{0, 1}); }
  /// a*x + b
  static UPoly linear(const Rational& a, const Rational& b) { return UPoly(std::vector<Rational>{b, a}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  UPoly pow(int k) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean division: (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly derivative() const;
  UPoly monic() const;
  Rational evaluate(const Rational& t) const;
  /// Coefficients made coprime integers with positive leading coefficient.
  UPoly primitive() const;

  /// Render in variable `var`, highest degree first, e.g. "5*s^2+11*s+6".
  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

/// Convert a polynomial that uses at most variable `var` into a UPoly.
UPoly to_upoly(const Poly& p, std::size_t var);
Poly from_upoly(const UPoly& u, const Ring& ring, std::size_t var);

struct Factor {
  UPoly factor;  // monic, irreducible over Q
  int multiplicity;
};

struct Factorization {
  Rational unit;  // leading coefficient
  std::vector<Factor> factors;
};

/// Factorisation over Q: squarefree decomposition, rational roots, then a
/// Kronecker search for factors of degree up to half the remaining degree.
/// Throws std::invalid_argument on the zero polynomial.
Factorization factor_univariate(const UPoly& p);

/// p reconstructed from a factorisation.
UPoly expand(const Factorization& f);

/// Quotient of univariate polynomials in lowest terms with positive leading
/// coefficient in the denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(UPoly num, UPoly den);
  RationalFunction(const Rational& c) : RationalFunction(UPoly(c), UPoly(Rational(1))) {}  // NOLINT(implicit)

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  Rational evaluate(const Rational& t) const;
  bool is_polynomial() const { return den_.degree() == 0; }

  /// "(num)/(den)" or just the numerator when the denominator is 1.
  std::string to_string(const std::string& var = "s") const;

 private:
  UPoly num_, den_;
};

}  // namespace resol
