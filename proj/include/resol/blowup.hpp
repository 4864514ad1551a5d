#pragma once

#include "resol/ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace resol {

/// Substitution sending each target variable to a polynomial in the source
/// ring: pulling a target polynomial back along the map is `apply`.
struct ChartMap {
  Ring source;
  Ring target;
  std::vector<Poly> images;  // one per target variable

  static ChartMap identity(const Ring& ring);
  Poly apply(const Poly& f) const;
  Ideal apply(const Ideal& I) const;
  /// This map followed by `inner` (inner.target == source): pulls back from
  /// this->target all the way into inner.source.
  ChartMap then(const ChartMap& inner) const;
};

/// Quotient num/den of polynomials, kept reduced.
struct Fraction {
  Poly num;
  Poly den;

  static Fraction of(const Poly& p) { return {p, Poly(p.ring(), 1)}; }
  Fraction reduced() const;
};

/// One affine patch of the resolution tree. Rings of charts are affine spaces:
/// ambient is always the zero ideal in the hypersurface pipeline.
struct Chart {
  std::string id;
  std::optional<std::string> parent;
  int chart_index = -1;
  int depth = 0;
  Ring ring;
  Ideal ambient;
  Ideal strict;
  /// Indexed by birth order along the branch; unit ideal when not visible.
  std::vector<Ideal> exceptional;
  std::optional<Ideal> center_in_parent;
  ChartMap from_parent;  // parent variables in terms of this chart
  ChartMap map_to_root;  // root variables in terms of this chart
  /// Each chart variable as a fraction of root variables.
  std::vector<Fraction> inverse_to_root;
  bool final = false;
  bool discarded = false;  // final chart whose data is shown elsewhere

  static Chart root(const Ideal& I);
  Poly strict_generator() const { return strict.principal_generator(); }
  /// Generator of a visible exceptional divisor (throws for unit entries).
  Poly exceptional_generator(std::size_t k) const { return exceptional.at(k).principal_generator(); }
  bool visible(std::size_t k) const { return k < exceptional.size() && !exceptional[k].is_unit(); }
};

struct BlowupResult {
  std::vector<Chart> charts;
  Ideal center;
};

/// Kernel of K[x][y_0..y_{m-1}] -> K[x][t]/ambient, y_i -> t f_i, stated in the
/// ring of `ambient` extended by the m variables y_i (appended in order).
Ideal rees_kernel(const Ideal& ambient, const Ideal& center);

/// All m affine patches of the blow-up of chart `c` along `center`, ordered by
/// patch index. Children get ids "<parent>.<i>". Throws UnsupportedShape if a
/// patch is not an affine space in the remaining and new variables.
BlowupResult blow_up_chart(const Chart& c, const Ideal& center);

/// Image of a parent ideal in `child`.
Ideal total_transform(const Chart& child, const Ideal& I);
/// Total transform saturated by the newest exceptional divisor.
Saturation strict_transform(const Chart& child, const Ideal& I);
/// Iterated quotient by the newest exceptional divisor, stopped at the last
/// step where multiplying back recovers the previous iterate.
Ideal weak_transform(const Chart& child, const Ideal& I);

/// Determinant of the Jacobian of the images with respect to the source
/// variables. Throws std::invalid_argument unless the map is square.
Poly jacobian_det_of_map(const ChartMap& m);

/// Pull back a fraction of `ring` variables along per-variable fractions.
Fraction compose_fraction(const Fraction& f, const std::vector<Fraction>& inner, const Ring& target);

}  // namespace resol
