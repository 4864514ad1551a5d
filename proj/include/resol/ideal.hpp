#pragma once

#include "resol/groebner.hpp"
#include "resol/poly.hpp"

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace resol {

/// Ideal given by generators. The degrevlex reduced Groebner basis is computed
/// on first use and cached; copies share the cache, which is guarded by a
/// mutex so concurrent readers see either no basis or a complete one.
class Ideal {
 public:
  Ideal() : cache_(std::make_shared<Cache>()) {}
  explicit Ideal(Ring ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
  Ideal(Ring ring, std::vector<Poly> gens);

  static Ideal unit(const Ring& ring) { return Ideal(ring, {Poly(ring, 1)}); }
  static Ideal zero(const Ring& ring) { return Ideal(ring); }
  static Ideal principal(const Poly& f) { return Ideal(f.ring(), {f}); }

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Reduced degrevlex basis (cached).
  const std::vector<Poly>& basis() const;
  std::vector<Poly> basis(const TermOrder& ord) const;

  bool is_unit() const { return is_unit_basis(basis()); }
  bool is_zero() const { return basis().empty(); }
  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  friend bool operator==(const Ideal& a, const Ideal& b);

  /// Generator of a principal ideal (primitive), if the reduced basis has one
  /// element; throws otherwise.
  Poly principal_generator() const;
  bool is_principal() const { return basis().size() <= 1; }

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  Ideal with(const Poly& f) const;

  /// Image under a substitution of the ring variables.
  Ideal substitute(const std::vector<Poly>& images, const Ring& target) const;
  Ideal embed(const Ring& target) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex m;
    std::shared_ptr<const std::vector<Poly>> gb;
  };
  Ring ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// I intersected with the subring without the dropped variables, expressed in
/// the smaller ring (variable order preserved).
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop);

Ideal intersect(const Ideal& I, const Ideal& J);

/// Ideal quotient (I : J).
Ideal quotient(const Ideal& I, const Ideal& J);

struct Saturation {
  Ideal ideal;
  int exponent = 0;
};

/// (I : J^infinity) by iterated quotients, with the stabilisation exponent.
Saturation saturate(const Ideal& I, const Ideal& J);

/// (I : f^infinity) through one elimination (Rabinowitsch).
Ideal saturate_by(const Ideal& I, const Poly& f);

/// Components of I (for radical, equidimensional I) on which f vanishes
/// identically; for zero-dimensional I, the part supported on V(f).
Ideal part_on(const Ideal& I, const Poly& f);

/// Krull dimension of the quotient ring; -1 for the unit ideal.
int dimension(const Ideal& I);

/// I plus all codim x codim minors of the Jacobian matrix of its generators.
Ideal singular_locus(const Ideal& I, int codim);

/// True iff f lies in the radical of I.
bool radical_membership(const Poly& f, const Ideal& I);

/// Radical of a zero-dimensional ideal.
Ideal radical_zero_dim(const Ideal& I);

/// Vector space dimension of K[x]/I; I must be zero-dimensional or unit.
long long vector_space_dim(const Ideal& I);

/// Number of distinct points of a zero-dimensional ideal over C.
long long point_count(const Ideal& I);

/// Monic generator of I intersected with K[var] (zero poly if none).
Poly univariate_eliminant(const Ideal& I, std::size_t var);

/// Exact polynomial division; throws if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);
/// Largest k with b^k dividing a (a non-zero).
int divisibility_order(const Poly& a, const Poly& b);

/// Multivariate gcd (primitive, positive leading coefficient).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Determinant of a square matrix of polynomials (fraction-free expansion).
Poly determinant(const std::vector<std::vector<Poly>>& m, const Ring& ring);

/// Jacobian matrix d f_i / d x_j.
std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& fs);

}  // namespace resol
