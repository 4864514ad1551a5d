#include "resol/invariants.hpp"

#include "resol/errors.hpp"

#include <optional>
#include <sstream>

namespace resol {

namespace {

// Per label, the order of `value(chart)` along the divisor, required to agree
// over all final charts where the divisor is visible.
template <class Value>
std::vector<int> orders_along(const ChartTree& t, const DivisorTable& d, const char* what, Value value) {
  std::vector<std::optional<int>> out(static_cast<std::size_t>(d.divisor_count));
  for (const auto* c : t.finals()) {
    std::optional<Poly> v;
    for (std::size_t k = 0; k < c->exceptional.size(); ++k) {
      if (!c->visible(k)) continue;
      if (!v) v = value(*c);
      const int label = d.label(c->id, k);
      const int n = divisibility_order(*v, c->exceptional_generator(k));
      auto& slot = out.at(static_cast<std::size_t>(label - 1));
      if (slot && *slot != n)
        throw InconsistentResolution(std::string(what) + " of divisor " + std::to_string(label) + " differs in chart " + c->id);
      slot = n;
    }
  }
  std::vector<int> r;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i]) throw InconsistentResolution("divisor " + std::to_string(i + 1) + " is visible in no final chart");
    r.push_back(*out[i]);
  }
  return r;
}

}  // namespace

std::vector<int> multiplicities_N(const ChartTree& t, const DivisorTable& d) {
  const Poly f = t.input().principal_generator();
  auto n = orders_along(t, d, "N", [&](const Chart& c) { return c.map_to_root.apply(f); });
  n.push_back(1);
  return n;
}

std::vector<int> multiplicities_nu(const ChartTree& t, const DivisorTable& d) {
  auto n = orders_along(t, d, "nu", [](const Chart& c) { return jacobian_det_of_map(c.map_to_root); });
  for (auto& v : n) ++v;
  n.push_back(1);
  return n;
}

std::vector<int> discrepancies(const ChartTree& t, const DivisorTable& d, DiscrepancyKind kind) {
  const auto N = multiplicities_N(t, d);
  const auto nu = multiplicities_nu(t, d);
  std::vector<int> out;
  for (int i = 0; i < d.divisor_count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.push_back(nu[k] - N[k] - (kind == DiscrepancyKind::Plain ? 1 : 0));
  }
  return out;
}

Rational lct(const ChartTree& t, const DivisorTable& d, bool include_strict) {
  const auto N = multiplicities_N(t, d);
  const auto nu = multiplicities_nu(t, d);
  std::optional<Rational> best;
  for (int i = 0; i < d.divisor_count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    Rational r(nu[k], N[k]);
    r.canonicalize();
    if (!best || r < *best) best = r;
  }
  if (include_strict || !best) {
    if (!best || Rational(1) < *best) best = Rational(1);
  }
  return *best;
}

bool IntersectionMatrix::symmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (entries[i][j] != entries[j][i]) return false;
  return true;
}

bool IntersectionMatrix::negative_definite() const {
  const std::size_t n = size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i][j] = entries[i][j];
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && a[p][c] == 0) ++p;
      if (p == k) return false;
      if (p != c) {
        std::swap(a[p], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        Rational m = a[r][c] / a[c][c];
        for (std::size_t j = c; j < k; ++j) a[r][j] -= m * a[c][j];
      }
    }
    const bool want_negative = k % 2 == 1;
    if ((det < 0) != want_negative || det == 0) return false;
  }
  return true;
}

DualGraph dual_graph(const IntersectionMatrix& m) {
  DualGraph g;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int self = m.entries[i][i];
    g.vertices.push_back({m.curves[i], self, self == -2 ? std::string() : std::to_string(self)});
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m.entries[i][j] > 0) g.edges.push_back({i, j, m.entries[i][j]});
  return g;
}

std::string DualGraph::to_dot() const {
  auto name = [&](std::size_t i) {
    return "E" + std::to_string(vertices[i].curve.divisor) + "_" + std::to_string(vertices[i].curve.component);
  };
  std::ostringstream os;
  os << "graph dual {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) os << "  " << name(i) << " [label=\"" << vertices[i].label << "\"];\n";
  for (const auto& e : edges) {
    os << "  " << name(e.a) << " -- " << name(e.b);
    if (e.multiplicity > 1) os << " [label=\"" << e.multiplicity << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

UPoly bernstein_normal_crossing(const std::vector<int>& r) {
  UPoly b(Rational(1));
  for (int ri : r) {
    if (ri < 1) throw std::invalid_argument("bernstein_normal_crossing: exponents must be positive");
    for (int k = 1; k <= ri; ++k) b = b * UPoly::linear(ri, k);
  }
  return b;
}

}  // namespace resol
