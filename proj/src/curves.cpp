#include "resol/curves.hpp"

#include "resol/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace resol {

namespace {

bool linear_with_constant_coefficient(const Poly& g, std::size_t v) {
  if (g.degree_in(v) != 1) return false;
  Poly d = g.derivative(v);
  return d.is_constant() && !d.is_zero();
}

// Eliminate coordinates that some generator expresses as a polynomial in the
// others; returns the basis of the remaining ideal and the surviving
// coordinates.
std::pair<std::vector<Poly>, std::vector<std::size_t>> drop_graph_coordinates(const Ideal& I) {
  const Ring& ring = I.ring();
  std::vector<bool> alive(ring.size(), true);
  std::vector<Poly> gens = I.basis();
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& g : gens) {
      for (std::size_t v = 0; v < ring.size() && !changed; ++v) {
        if (!alive[v] || !linear_with_constant_coefficient(g, v)) continue;
        Rational c = g.derivative(v).constant_term();
        Poly rest = g - Poly::variable(ring, v) * c;
        std::vector<Poly> img;
        for (std::size_t i = 0; i < ring.size(); ++i)
          img.push_back(i == v ? rest * Rational(-1 / c) : Poly::variable(ring, i));
        std::vector<Poly> next;
        for (const auto& h : gens) next.push_back(h.substitute(img, ring));
        gens = Ideal(ring, std::move(next)).basis();
        alive[v] = false;
        changed = true;
      }
      if (changed) break;
    }
  }
  std::vector<std::size_t> left;
  for (std::size_t v = 0; v < ring.size(); ++v)
    if (alive[v]) left.push_back(v);
  return {gens, left};
}

// Pieces {a + r b = 0} over the Q-irreducible factors of q(r).
void split_into(std::vector<CurvePiece>& out, const Ideal& curve, const Poly& a, const Poly& b, const UPoly& q) {
  const Ring& ring = curve.ring();
  for (const auto& f : factor_univariate(q).factors) {
    if (f.multiplicity > 1) throw UnsupportedShape("curve_pieces: non-reduced curve " + curve.to_string());
    // b^deg f(-a/b)
    const int deg = f.factor.degree();
    Poly g(ring);
    for (int i = 0; i <= deg; ++i) g += (-a).pow(i) * b.pow(deg - i) * f.factor[static_cast<std::size_t>(i)];
    out.push_back({curve.with(g), deg, 0, RootSplitting{a, b, f.factor}});
  }
}

// Degenerate conic: two lines meeting in a rational affine point.
void line_pair(std::vector<CurvePiece>& out, const Ideal& curve, const Poly& g, const std::vector<std::size_t>& sup) {
  const Ring& ring = curve.ring();
  std::vector<Poly> eqs{g, g.derivative(sup[0]), g.derivative(sup[1])};
  for (std::size_t v = 0; v < ring.size(); ++v)
    if (v != sup[0] && v != sup[1]) eqs.push_back(Poly::variable(ring, v));
  Ideal sing(ring, std::move(eqs));
  if (dimension(sing) != 0 || vector_space_dim(radical_zero_dim(sing)) != 1)
    throw UnsupportedShape("curve_pieces: conic without a rational singular point " + g.to_string());
  Ideal rad = radical_zero_dim(sing);
  std::vector<Poly> shifted(ring.size());
  for (std::size_t v = 0; v < ring.size(); ++v) shifted[v] = Poly::variable(ring, v);
  for (std::size_t v : sup) {
    UPoly u = to_upoly(univariate_eliminant(rad, v), v).monic();
    shifted[v] = Poly::variable(ring, v) - Poly(ring, -u[0]);
  }
  // g in the shifted coordinates is A u^2 + B u w + C w^2
  const Poly& u = shifted[sup[0]];
  const Poly& w = shifted[sup[1]];
  std::vector<Poly> img(ring.size());
  for (std::size_t v = 0; v < ring.size(); ++v) img[v] = Poly::variable(ring, v);
  img[sup[0]] = Poly::variable(ring, sup[0]) * Rational(2) - u;
  img[sup[1]] = Poly::variable(ring, sup[1]) * Rational(2) - w;
  Poly h = g.substitute(img, ring);
  Exponents e(ring.size(), 0);
  e[sup[0]] = 2;
  const Rational A = h.coefficient(e);
  e[sup[0]] = 1;
  e[sup[1]] = 1;
  const Rational B = h.coefficient(e);
  e[sup[0]] = 0;
  e[sup[1]] = 2;
  const Rational C = h.coefficient(e);
  if (A == 0) {
    out.push_back({curve.with(w), 1, 0, std::nullopt});
    out.push_back({curve.with(u * B + w * C), 1, 0, std::nullopt});
    return;
  }
  split_into(out, curve, u, -w, UPoly(std::vector<Rational>{C, B, A}));
}

// g = q(m) for a monomial m = u^a w^b with gcd(a, b) = 1, so every curve
// m = root is a rational curve (a line when b = 0).
std::optional<std::pair<Poly, UPoly>> primitive_monomial_base(const Poly& g, const std::vector<std::size_t>& sup) {
  int a = 0, b = 0;
  for (const auto& [e, c] : g.terms()) {
    const int k = std::gcd(e[sup[0]], sup.size() > 1 ? e[sup[1]] : 0);
    if (k == 0) continue;
    a = e[sup[0]] / k;
    b = sup.size() > 1 ? e[sup[1]] / k : 0;
    break;
  }
  std::vector<Rational> q;
  for (const auto& [e, c] : g.terms()) {
    const int ea = e[sup[0]], eb = sup.size() > 1 ? e[sup[1]] : 0;
    const int k = a != 0 ? ea / a : eb / b;
    if (ea != k * a || eb != k * b) return std::nullopt;
    if (q.size() <= static_cast<std::size_t>(k)) q.resize(static_cast<std::size_t>(k) + 1);
    q[static_cast<std::size_t>(k)] += c;
  }
  Exponents m(g.ring().size(), 0);
  m[sup[0]] = a;
  if (sup.size() > 1) m[sup[1]] = b;
  return std::pair{Poly::monomial(g.ring(), m, 1), UPoly(std::move(q))};
}

// g = a(u) w + b(u) with a, b coprime: the graph of w = -b/a, a rational
// curve.
bool rational_graph(const Poly& g, std::size_t w, std::size_t u) {
  if (g.degree_in(w) != 1) return false;
  const Poly a = g.derivative(w);
  const Poly b = g - a * Poly::variable(g.ring(), w);
  if (a.degree_in(w) != 0 || b.degree_in(w) != 0) return false;
  return gcd(to_upoly(a, u), to_upoly(b, u)).degree() == 0;
}

}  // namespace

bool smooth_projective_closure(const Poly& g) {
  const auto sup = g.support();
  if (sup.size() != 2) throw std::invalid_argument("smooth_projective_closure: expected a plane curve");
  Ring p({"u", "w", "t"});
  const int d = g.total_degree();
  Poly G(p);
  for (const auto& [e, c] : g.terms()) {
    const int a = e[sup[0]], b = e[sup[1]];
    G += Poly::monomial(p, {a, b, d - a - b}, c);
  }
  std::vector<Poly> eqs{G.derivative(0), G.derivative(1), G.derivative(2)};
  for (std::size_t chart = 0; chart < 3; ++chart) {
    std::vector<Poly> local;
    for (const auto& q : eqs) local.push_back(q.specialize(chart, 1));
    if (!Ideal(p, std::move(local)).is_unit()) return false;
  }
  return true;
}

std::vector<CurvePiece> curve_pieces(const Ideal& curve) {
  if (dimension(curve) != 1) throw std::invalid_argument("curve_pieces: ideal is not a curve");
  const Ring& ring = curve.ring();
  auto [gens, left] = drop_graph_coordinates(curve);
  std::vector<CurvePiece> out;
  if (left.size() == 1) {
    if (!gens.empty()) throw UnsupportedShape("curve_pieces: unexpected relation on a line");
    out.push_back({curve, 1, 0, std::nullopt});
    return out;
  }
  if (left.size() != 2 || gens.size() != 1)
    throw UnsupportedShape("curve_pieces: curve is not a plane curve after eliminating graphs: " + curve.to_string());

  Poly g = gens.front();
  Exponents mono = g.monomial_content();
  for (std::size_t v : left) {
    if (mono[v] > 1) throw UnsupportedShape("curve_pieces: non-reduced curve " + curve.to_string());
    if (mono[v] == 1) out.push_back({curve.with(Poly::variable(ring, v)), 1, 0, std::nullopt});
  }
  Poly rest = g.divide_monomial(mono);
  if (rest.is_constant()) return out;

  const auto sup = rest.support();
  if (auto m = primitive_monomial_base(rest, sup)) {
    split_into(out, curve, m->first, Poly(ring, -1), m->second);
    return out;
  }
  if (rest.total_degree() == 2 && !smooth_projective_closure(rest)) {
    line_pair(out, curve, rest, sup);
    return out;
  }
  for (std::size_t k = 0; k < 2; ++k)
    if (rational_graph(rest, sup[k], sup[1 - k])) {
      out.push_back({curve.with(rest), 1, 0, std::nullopt});
      return out;
    }
  if (!smooth_projective_closure(rest))
    throw UnsupportedShape("curve_pieces: plane curve with singular closure " + rest.to_string());
  const int d = rest.total_degree();
  out.push_back({curve.with(rest), 1, (d - 1) * (d - 2) / 2, std::nullopt});
  return out;
}

int count_c_components(const Ideal& I) {
  const int dim = dimension(I);
  if (dim < 0) return 0;
  if (dim == 0) return static_cast<int>(point_count(I));
  if (dim == 1) {
    int n = 0;
    for (const auto& p : curve_pieces(I)) n += p.c_components;
    return n;
  }
  throw UnsupportedShape("count_c_components: only points and curves are supported");
}

long long compact_chi(const std::vector<CurvePiece>& pieces) {
  long long chi = 0;
  for (const auto& p : pieces) chi += static_cast<long long>(p.c_components) * (2 - 2 * p.genus);
  return chi;
}

}  // namespace resol
