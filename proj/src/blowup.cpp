#include "resol/blowup.hpp"

#include "resol/errors.hpp"

#include <map>

namespace resol {

ChartMap ChartMap::identity(const Ring& ring) {
  ChartMap m{ring, ring, {}};
  for (std::size_t i = 0; i < ring.size(); ++i) m.images.push_back(Poly::variable(ring, i));
  return m;
}

Poly ChartMap::apply(const Poly& f) const { return f.substitute(images, source); }

Ideal ChartMap::apply(const Ideal& I) const { return I.substitute(images, source); }

ChartMap ChartMap::then(const ChartMap& inner) const {
  if (!(inner.target == source)) throw std::invalid_argument("ChartMap::then: rings do not match");
  ChartMap m{inner.source, target, {}};
  for (const auto& p : images) m.images.push_back(inner.apply(p));
  return m;
}

Fraction Fraction::reduced() const {
  if (den.is_zero()) throw std::invalid_argument("fraction with zero denominator");
  Poly g = poly_gcd(num, den);
  Poly n = g.is_constant() ? num : exact_divide(num, g);
  Poly d = g.is_constant() ? den : exact_divide(den, g);
  Rational c = leading_coefficient(d, TermOrder::degrevlex());
  return {n * (1 / c), d * (1 / c)};
}

namespace {

// p(inner) as a fraction, with the denominator prod den_v^{deg_v p}.
Fraction pull_back(const Poly& p, const std::vector<Fraction>& inner, const Ring& target) {
  const std::size_t n = p.ring().size();
  std::vector<int> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = p.degree_in(v);
  Poly num(target), den(target, 1);
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] > 0) den = den * inner[v].den.pow(deg[v]);
  for (const auto& [e, c] : p.terms()) {
    Poly t(target, c);
    for (std::size_t v = 0; v < n; ++v) {
      if (deg[v] == 0) continue;
      if (e[v] > 0) t = t * inner[v].num.pow(e[v]);
      if (deg[v] - e[v] > 0) t = t * inner[v].den.pow(deg[v] - e[v]);
    }
    num += t;
  }
  return {num, den};
}

std::string fresh_var(const Ring& ring, const std::string& base) {
  std::string name = base;
  while (ring.index_of(name) >= 0) name += "_";
  return name;
}

// Is f = c*v + h with c a non-zero constant and h free of v?
bool linear_in(const Poly& f, std::size_t v) { return f.degree_in(v) == 1 && f.derivative(v).is_constant(); }

// Strip all factors of e from g; unit ideal when nothing is left.
std::pair<Ideal, int> strip(const Poly& g, const Poly& e) {
  if (g.is_zero()) return {Ideal::zero(g.ring()), 0};
  int k = e.is_constant() ? 0 : divisibility_order(g, e);
  Poly r = g;
  for (int j = 0; j < k; ++j) r = exact_divide(r, e);
  if (r.is_constant()) return {Ideal::unit(g.ring()), k};
  return {Ideal::principal(r.primitive()), k};
}

struct Patch {
  Ring ring;
  std::vector<Poly> images;  // parent variables in the patch ring
  Poly e;                    // exceptional generator
  std::vector<int> origin;   // per patch variable: parent index, or -(j+1) for y_j
};

Patch affine_patch(const Chart& c, const std::vector<Poly>& f, const Ideal& kernel, std::size_t i) {
  const Ring& R = c.ring;
  const std::size_t n = R.size(), m = f.size();
  const int depth = c.depth + 1;

  std::vector<std::string> names = R.vars();
  std::vector<int> origin;
  for (std::size_t v = 0; v < n; ++v) origin.push_back(static_cast<int>(v));
  for (std::size_t j = 0; j < m; ++j) {
    if (j == i) continue;
    Ring so_far(names);
    names.push_back(fresh_var(so_far, "x" + std::to_string(depth) + "_" + std::to_string(j)));
    origin.push_back(-static_cast<int>(j) - 1);
  }
  Ring W(names);

  // kernel ring (R, y_0..y_{m-1}) -> W with y_i = 1
  std::vector<Poly> to_w;
  for (std::size_t v = 0; v < n; ++v) to_w.push_back(Poly::variable(W, v));
  for (std::size_t j = 0, slot = n; j < m; ++j) to_w.push_back(j == i ? Poly(W, 1) : Poly::variable(W, slot++));
  std::vector<Poly> rel;
  for (const auto& g : kernel.basis()) {
    Poly p = g.substitute(to_w, W);
    if (!p.is_zero()) rel.push_back(p);
  }

  // solve linearly occurring parent variables
  std::vector<Poly> subst;
  for (std::size_t v = 0; v < W.size(); ++v) subst.push_back(Poly::variable(W, v));
  std::vector<bool> eliminated(n, false);
  bool reduced_once = false;
  while (!rel.empty()) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (std::size_t g = 0; g < rel.size() && !pick; ++g)
      for (std::size_t v = 0; v < n && !pick; ++v)
        if (!eliminated[v] && linear_in(rel[g], v)) pick = {{g, v}};
    if (!pick) {
      if (reduced_once) throw UnsupportedShape("blow-up patch " + std::to_string(i) + " of chart " + c.id + " is not an affine space");
      rel = groebner(rel, TermOrder::degrevlex());
      reduced_once = true;
      continue;
    }
    auto [g, v] = *pick;
    Poly coef = rel[g].derivative(v);
    Poly sol = (Poly::variable(W, v) * coef - rel[g]) * (1 / coef.constant_term());
    std::vector<Poly> step;
    for (std::size_t u = 0; u < W.size(); ++u) step.push_back(u == v ? sol : Poly::variable(W, u));
    for (auto& s : subst) s = s.substitute(step, W);
    std::vector<Poly> next;
    for (std::size_t k = 0; k < rel.size(); ++k) {
      if (k == g) continue;
      Poly p = rel[k].substitute(step, W);
      if (!p.is_zero()) next.push_back(p);
    }
    rel = std::move(next);
    eliminated[v] = true;
    reduced_once = false;
  }

  // patch ring: surviving parent variables then the new ones
  std::vector<std::string> kept;
  std::vector<int> kept_origin;
  for (std::size_t v = 0; v < W.size(); ++v)
    if (v >= n || !eliminated[v]) {
      kept.push_back(W.var(v));
      kept_origin.push_back(origin[v]);
    }
  Ring N(kept);
  std::vector<Poly> images;
  for (std::size_t v = 0; v < n; ++v) images.push_back(subst[v].embed(N));
  Poly e = f[i].substitute(images, N);
  Patch patch{N, std::move(images), e, kept_origin};

  // make a linear exceptional generator a coordinate of its own
  if (patch.e.as_variable() < 0) {
    for (std::size_t v = 0; v < N.size(); ++v) {
      if (!linear_in(patch.e, v)) continue;
      std::vector<std::string> vars = N.vars();
      vars[v] = fresh_var(N, "x" + std::to_string(depth) + "_" + std::to_string(i));
      Ring S(vars);
      Poly w = Poly::variable(S, v);
      Rational c = patch.e.derivative(v).constant_term();
      std::vector<Poly> rename;
      for (std::size_t u = 0; u < N.size(); ++u) rename.push_back(u == v ? Poly(S) : Poly::variable(S, u));
      Poly rest = patch.e.substitute(rename, S);  // e - c*v, renamed
      std::vector<Poly> step = rename;
      step[v] = (w - rest) * (1 / c);
      for (auto& p : patch.images) p = p.substitute(step, S);
      patch.e = w;
      patch.ring = S;
      patch.origin[v] = -static_cast<int>(i) - 1 - static_cast<int>(m);  // straightened coordinate
      break;
    }
  }
  return patch;
}

}  // namespace

Fraction compose_fraction(const Fraction& f, const std::vector<Fraction>& inner, const Ring& target) {
  Fraction a = pull_back(f.num, inner, target);
  Fraction b = pull_back(f.den, inner, target);
  return Fraction{a.num * b.den, a.den * b.num}.reduced();
}

Chart Chart::root(const Ideal& I) {
  Chart c;
  c.id = "0";
  c.ring = I.ring();
  c.ambient = Ideal::zero(c.ring);
  c.strict = Ideal(c.ring, I.basis());
  c.from_parent = ChartMap::identity(c.ring);
  c.map_to_root = ChartMap::identity(c.ring);
  for (std::size_t v = 0; v < c.ring.size(); ++v) c.inverse_to_root.push_back(Fraction::of(Poly::variable(c.ring, v)));
  return c;
}

Ideal rees_kernel(const Ideal& ambient, const Ideal& center) {
  if (center.is_unit()) throw std::invalid_argument("rees_kernel: center is the unit ideal");
  if (center.is_zero()) throw std::invalid_argument("rees_kernel: center is the zero ideal");
  const Ring& R = ambient.ring();
  const auto& f = center.generators();
  std::vector<std::string> more;
  Ring grow = R;
  for (std::size_t i = 0; i < f.size(); ++i) {
    more.push_back(fresh_var(grow, "y" + std::to_string(i)));
    grow = grow.extended({more.back()});
  }
  Ring with_t = grow.extended({fresh_var(grow, "t")});
  Poly t = Poly::variable(with_t, grow.size());
  std::vector<Poly> gens;
  for (const auto& g : ambient.generators()) gens.push_back(g.embed(with_t));
  for (std::size_t i = 0; i < f.size(); ++i)
    gens.push_back(Poly::variable(with_t, R.size() + i) - t * f[i].embed(with_t));
  Ideal k = eliminate(Ideal(with_t, std::move(gens)), {grow.size()});
  return Ideal(grow, k.embed(grow).generators());
}

BlowupResult blow_up_chart(const Chart& c, const Ideal& center_in) {
  if (!(center_in.ring() == c.ring)) throw std::invalid_argument("blow_up_chart: center from another ring");
  if (!c.ambient.is_zero()) throw UnsupportedShape("blow-up of a chart with non-trivial ambient ideal");
  std::vector<Poly> f;
  for (const auto& g : center_in.generators()) f.push_back(g.primitive());
  Ideal center(c.ring, f);
  Ideal kernel = rees_kernel(c.ambient, center);

  BlowupResult out{{}, center};
  const Poly h = c.strict.is_unit() ? Poly(c.ring, 1) : c.strict_generator();
  for (std::size_t i = 0; i < f.size(); ++i) {
    Patch p = affine_patch(c, f, kernel, i);
    Chart child;
    child.id = c.id + "." + std::to_string(i);
    child.parent = c.id;
    child.chart_index = static_cast<int>(i);
    child.depth = c.depth + 1;
    child.ring = p.ring;
    child.ambient = Ideal::zero(p.ring);
    child.center_in_parent = center;
    child.from_parent = ChartMap{p.ring, c.ring, p.images};
    child.map_to_root = c.map_to_root.then(child.from_parent);

    child.strict = c.strict.is_unit() ? Ideal::unit(p.ring) : strip(child.from_parent.apply(h), p.e).first;
    for (std::size_t k = 0; k < c.exceptional.size(); ++k) {
      if (!c.visible(k)) {
        child.exceptional.push_back(Ideal::unit(p.ring));
        continue;
      }
      child.exceptional.push_back(strip(child.from_parent.apply(c.exceptional_generator(k)), p.e).first);
    }
    child.exceptional.push_back(Ideal::principal(p.e.primitive()));

    for (std::size_t v = 0; v < p.ring.size(); ++v) {
      int o = p.origin[v];
      Fraction local;
      if (o >= 0) local = Fraction::of(Poly::variable(c.ring, static_cast<std::size_t>(o)));
      else if (-o - 1 < static_cast<int>(f.size())) local = {f[static_cast<std::size_t>(-o - 1)], f[i]};
      else local = Fraction::of(f[i]);
      child.inverse_to_root.push_back(compose_fraction(local, c.inverse_to_root, c.map_to_root.target));
    }
    out.charts.push_back(std::move(child));
  }
  return out;
}

Ideal total_transform(const Chart& child, const Ideal& I) { return child.from_parent.apply(I); }

Saturation strict_transform(const Chart& child, const Ideal& I) {
  return saturate(total_transform(child, I), child.exceptional.back());
}

Ideal weak_transform(const Chart& child, const Ideal& I) {
  const Ideal& E = child.exceptional.back();
  Ideal cur = total_transform(child, I);
  while (true) {
    Ideal next = quotient(cur, E);
    if (next == cur || !(next * E == cur)) return cur;
    cur = std::move(next);
  }
}

Poly jacobian_det_of_map(const ChartMap& m) {
  if (m.source.size() != m.target.size()) throw std::invalid_argument("jacobian_det_of_map: map is not square");
  return determinant(jacobian(m.images), m.source);
}

}  // namespace resol
