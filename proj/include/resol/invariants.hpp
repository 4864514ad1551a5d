#pragma once

#include "resol/divisors.hpp"
#include "resol/upoly.hpp"

#include <string>
#include <vector>

namespace resol {

/// Multiplicity N of each exceptional divisor (by label) in the divisor of
/// f o pi, followed by 1 for the strict transform. Throws
/// InconsistentResolution if two charts disagree.
std::vector<int> multiplicities_N(const ChartTree& t, const DivisorTable& d);

/// nu = 1 + multiplicity in the Jacobian determinant of the chart map, per
/// label, followed by 1 for the strict transform.
std::vector<int> multiplicities_nu(const ChartTree& t, const DivisorTable& d);

enum class DiscrepancyKind { Log, Plain };

/// nu - N per exceptional divisor (Log) or nu - N - 1 (Plain).
std::vector<int> discrepancies(const ChartTree& t, const DivisorTable& d, DiscrepancyKind kind);

/// Minimum of nu/N over the exceptional divisors, and over the strict
/// transform (ratio 1) too when include_strict. Without exceptional divisors
/// the strict transform alone decides, giving 1.
Rational lct(const ChartTree& t, const DivisorTable& d, bool include_strict = false);

/// One component over C of the intersection of an exceptional divisor with
/// the strict transform.
struct ExceptionalCurve {
  int divisor = 0;
  int component = 0;
  friend bool operator==(const ExceptionalCurve&, const ExceptionalCurve&) = default;
};

struct IntersectionMatrix {
  std::vector<ExceptionalCurve> curves;
  std::vector<std::vector<int>> entries;
  /// Linear form through the singular point used for the self-intersections,
  /// its multiplicity along each curve, and its strict transform's
  /// intersection with each curve.
  std::string linear_form;
  std::vector<int> pullback;
  std::vector<int> strict_meets;

  std::size_t size() const { return curves.size(); }
  bool symmetric() const;
  /// All leading principal minors alternate in sign, starting negative.
  bool negative_definite() const;
};

/// Intersection matrix of the exceptional curves of the resolution of a
/// surface (3 variables), computed on the abstract resolution. Intersection
/// points are counted once across charts; self-intersections come from the
/// pullback of a linear form through the singular point. UnsupportedShape
/// for other dimensions.
IntersectionMatrix intersection_matrix(const ChartTree& t, const DivisorTable& d);

struct DualGraph {
  struct Vertex {
    ExceptionalCurve curve;
    int self_intersection = 0;
    std::string label;  // empty for -2
  };
  struct Edge {
    std::size_t a = 0, b = 0;
    int multiplicity = 1;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::string to_dot() const;
};

DualGraph dual_graph(const IntersectionMatrix& m);

/// prod_i prod_{k=1}^{r_i} (r_i s + k).
UPoly bernstein_normal_crossing(const std::vector<int>& r);

}  // namespace resol
