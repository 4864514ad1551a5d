#include "resol/curves.hpp"
#include "resol/errors.hpp"
#include "resol/geometry.hpp"
#include "resol/invariants.hpp"

#include <map>
#include <optional>
#include <random>

namespace resol {

namespace {

struct Piece {
  int label;
  const Chart* home;
  CurvePiece piece;
};

// Square-free integer s and rational m with disc = m^2 s.
std::pair<Integer, Rational> split_square(const Rational& disc) {
  Integer num = disc.get_num(), den = disc.get_den();
  Integer n = num * den;
  Integer sign = n < 0 ? -1 : 1;
  n = abs(n);
  if (n > Integer("1000000000000")) throw UnsupportedShape("discriminant too large to split");
  Integer s = 1, m = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      m *= p;
    }
    if (n % p == 0) {
      n /= p;
      s *= p;
    }
  }
  s *= n;
  return {sign * s, Rational(m, den)};
}

std::string fresh_name(const std::vector<const Chart*>& charts, std::string base) {
  for (bool clash = true; clash;) {
    clash = false;
    for (const auto* c : charts)
      if (c->ring.index_of(base) >= 0) clash = true;
    if (clash) base += "_";
  }
  return base;
}

std::vector<const Chart*> prefix(const std::vector<const Chart*>& cs, std::size_t n) {
  return {cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(n)};
}

// Coordinates of the unique singular point of the input, which must be
// rational.
std::vector<Rational> singular_point(const Ideal& input) {
  Ideal sing = singular_locus(input, 1);
  if (dimension(sing) != 0) throw UnsupportedShape("intersection matrix: the singular locus is not a finite set of points");
  Ideal rad = radical_zero_dim(sing);
  if (vector_space_dim(rad) != 1) throw UnsupportedShape("intersection matrix: more than one singular point");
  std::vector<Rational> p;
  for (std::size_t v = 0; v < input.ring().size(); ++v) {
    UPoly u = to_upoly(univariate_eliminant(rad, v), v).monic();
    p.push_back(-u[0]);
  }
  return p;
}

}  // namespace

IntersectionMatrix intersection_matrix(const ChartTree& t, const DivisorTable& d) {
  if (t.ring().size() != 3) throw UnsupportedShape("intersection matrix: surfaces in three variables only");
  const auto charts = abstract_resolution(t).final_charts(t);

  // Q-components of the exceptional curves, each counted in the first chart
  // where it shows
  std::vector<Piece> pieces;
  for (int label = 1; label <= d.divisor_count; ++label) {
    for (std::size_t i = 0; i < charts.size(); ++i) {
      const Chart& x = *charts[i];
      const int k = d.slot_of(x.id, label);
      if (k < 0 || x.strict.is_unit()) continue;
      Ideal curve = x.strict + x.exceptional[static_cast<std::size_t>(k)];
      if (curve.is_unit()) continue;
      if (dimension(singular_locus(curve, 2)) >= 1)
        throw UnsupportedShape("exceptional divisor " + std::to_string(label) + " is not transversal to the strict transform in chart " + x.id);
      auto out = outside_of(x, prefix(charts, i));
      for (auto& p : curve_pieces(curve))
        if (inside(p.ideal, out)) pieces.push_back({label, &x, std::move(p)});
    }
  }
  IntersectionMatrix m;
  if (pieces.empty()) return m;

  // a common quadratic field for all splittings
  std::optional<Integer> field;
  for (const auto& p : pieces) {
    if (!p.piece.splitting) continue;
    const UPoly& q = p.piece.splitting->minimal;
    if (q.degree() > 2) throw UnsupportedShape("exceptional curve splits over a field of degree above 2");
    if (q.degree() < 2) continue;
    Integer s = split_square(q[1] * q[1] - 4 * q[0]).first;
    if (field && *field != s) throw UnsupportedShape("exceptional curves split over different quadratic fields");
    field = s;
  }
  const std::string wname = fresh_name(charts, "w");
  const int degree = field ? 2 : 1;
  auto ext_ring = [&](const Chart& c) { return c.ring.extended({wname}); };
  auto minimal = [&](const Ring& r) {
    Poly w = Poly::variable(r, r.size() - 1);
    return field ? w * w - Poly(r, Rational(*field)) : w;
  };

  // component ideals in their home charts
  struct Curve {
    ExceptionalCurve id;
    const Chart* home;
    Ideal ideal;
  };
  std::vector<Curve> curves;
  std::map<int, int> next_component;
  for (const auto& p : pieces) {
    Ring r = ext_ring(*p.home);
    Ideal base = p.piece.ideal.embed(r).with(minimal(r));
    if (p.piece.splitting && p.piece.splitting->minimal.degree() == 2) {
      const UPoly& q = p.piece.splitting->minimal;
      auto [s, root] = split_square(q[1] * q[1] - 4 * q[0]);
      Poly a = p.piece.splitting->a.embed(r);
      Poly b = p.piece.splitting->b.embed(r);
      Poly w = Poly::variable(r, r.size() - 1);
      for (int sign : {-1, 1}) {
        Poly alpha = Poly(r, -q[1] / 2) + w * Rational(sign * root / 2);
        curves.push_back({{p.label, ++next_component[p.label]}, p.home, base.with(a + alpha * b)});
      }
    } else if (p.piece.c_components == 1) {
      curves.push_back({{p.label, ++next_component[p.label]}, p.home, base});
    } else {
      throw UnsupportedShape("exceptional curve with " + std::to_string(p.piece.c_components) + " components of unknown shape");
    }
  }

  // every curve in every chart
  const std::size_t nc = curves.size();
  std::vector<std::vector<std::optional<Ideal>>> local(nc, std::vector<std::optional<Ideal>>(charts.size()));
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t i = 0; i < charts.size(); ++i) {
      const Chart& x = *charts[i];
      if (d.slot_of(x.id, curves[a].id.divisor) < 0) continue;
      Ideal J = &x == curves[a].home ? curves[a].ideal : transport(curves[a].ideal, *curves[a].home, x);
      if (!J.is_unit()) local[a][i] = J;
    }
  std::vector<std::vector<Poly>> outside;
  for (std::size_t i = 0; i < charts.size(); ++i) outside.push_back(outside_of(*charts[i], prefix(charts, i)));
  auto total_length = [&](auto ideal_in_chart) {
    long long sum = 0;
    for (std::size_t i = 0; i < charts.size(); ++i)
      if (auto J = ideal_in_chart(i)) sum += length_on(*J, outside[i]);
    if (sum % degree != 0) throw InconsistentResolution("intersection length not divisible by the field degree");
    return static_cast<int>(sum / degree);
  };

  m.curves.reserve(nc);
  for (const auto& c : curves) m.curves.push_back(c.id);
  m.entries.assign(nc, std::vector<int>(nc, 0));
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = a + 1; b < nc; ++b) {
      int v = total_length([&](std::size_t i) -> std::optional<Ideal> {
        if (!local[a][i] || !local[b][i]) return std::nullopt;
        return *local[a][i] + *local[b][i];
      });
      m.entries[a][b] = m.entries[b][a] = v;
    }

  // self-intersections from the pullback of a linear form
  const Ring& root = t.ring();
  const auto p = singular_point(t.input());
  std::vector<Poly> candidates;
  for (std::size_t v = 0; v < root.size(); ++v) candidates.push_back(Poly::variable(root, v) - Poly(root, p[v]));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int tries = 0; tries < 20; ++tries) {
    Poly h(root);
    for (std::size_t v = 0; v < root.size(); ++v) h += candidates[v] * Rational(coef(rng));
    if (!h.is_zero()) candidates.push_back(h);
  }

  for (const auto& h : candidates) {
    std::vector<Poly> rest;
    std::map<int, int> order;
    bool consistent = true;
    for (const auto* x : charts) {
      Poly g = x->map_to_root.apply(h);
      for (std::size_t k = 0; k < x->exceptional.size(); ++k) {
        if (!x->visible(k)) continue;
        const Poly e = x->exceptional_generator(k);
        const int n = divisibility_order(g, e);
        const int label = d.label(x->id, k);
        if (order.count(label) && order[label] != n) consistent = false;
        order[label] = n;
        for (int j = 0; j < n; ++j) g = exact_divide(g, e);
      }
      rest.push_back(g);
    }
    if (!consistent) throw InconsistentResolution("multiplicity of a linear form differs between charts");
    bool valid = true;
    for (std::size_t a = 0; a < nc && valid; ++a)
      for (std::size_t i = 0; i < charts.size() && valid; ++i)
        if (local[a][i] && dimension(local[a][i]->with(rest[i].embed(local[a][i]->ring()))) > 0) valid = false;
    if (!valid) continue;

    m.linear_form = h.to_string();
    m.pullback.clear();
    m.strict_meets.clear();
    for (std::size_t a = 0; a < nc; ++a) {
      m.pullback.push_back(order.at(curves[a].id.divisor));
      m.strict_meets.push_back(total_length([&](std::size_t i) -> std::optional<Ideal> {
        if (!local[a][i]) return std::nullopt;
        return local[a][i]->with(rest[i].embed(local[a][i]->ring()));
      }));
    }
    for (std::size_t a = 0; a < nc; ++a) {
      long long s = m.strict_meets[a];
      for (std::size_t b = 0; b < nc; ++b)
        if (b != a) s += static_cast<long long>(m.pullback[b]) * m.entries[a][b];
      if (s % m.pullback[a] != 0) throw InconsistentResolution("self-intersection is not an integer");
      m.entries[a][a] = static_cast<int>(-s / m.pullback[a]);
    }
    return m;
  }
  throw UnsupportedShape("intersection matrix: no linear form through the singular point in general position");
}

}  // namespace resol
