#include "resol/geometry.hpp"

#include <optional>
#include <stdexcept>

namespace resol {

std::vector<Fraction> transition(const Chart& from, const Chart& to) {
  std::vector<Fraction> root_coords;
  for (const auto& p : from.map_to_root.images) root_coords.push_back(Fraction::of(p));
  std::vector<Fraction> out;
  for (const auto& f : to.inverse_to_root) out.push_back(compose_fraction(f, root_coords, from.ring));
  return out;
}

Poly overlap_denominator(const Chart& from, const Chart& to) {
  Poly d(from.ring, 1);
  for (const auto& f : transition(from, to))
    if (!f.den.is_constant()) d = d * f.den;
  return d;
}

std::vector<Ideal> visible_components(const Chart& c) {
  std::vector<Ideal> out;
  if (!c.strict.is_unit()) out.push_back(c.strict);
  for (std::size_t k = 0; k < c.exceptional.size(); ++k)
    if (c.visible(k)) out.push_back(c.exceptional[k]);
  return out;
}

Ideal transport(const Ideal& J, const Chart& from, const Chart& to) {
  const Ring& src = J.ring();
  const std::size_t nc = from.ring.size();
  for (std::size_t i = 0; i < nc; ++i)
    if (src.size() < nc || src.var(i) != from.ring.var(i)) throw std::invalid_argument("transport: ideal not in the source chart ring");
  std::vector<std::string> extra(src.vars().begin() + static_cast<std::ptrdiff_t>(nc), src.vars().end());
  Ring dst = extra.empty() ? to.ring : to.ring.extended(extra);

  // source coordinates as fractions of the target coordinates
  std::vector<Fraction> inner;
  Poly den(dst, 1);
  for (const auto& f : transition(to, from)) {
    inner.push_back({f.num.embed(dst), f.den.embed(dst)});
    if (!f.den.is_constant()) den = den * f.den.embed(dst);
  }
  for (std::size_t i = 0; i < extra.size(); ++i) inner.push_back(Fraction::of(Poly::variable(dst, to.ring.size() + i)));

  std::vector<Poly> gens;
  for (const auto& g : J.generators()) gens.push_back(compose_fraction(Fraction::of(g), inner, dst).num);
  Ideal out(dst, std::move(gens));
  return den.is_constant() ? out : saturate_by(out, den);
}

std::vector<Poly> outside_of(const Chart& c, const std::vector<const Chart*>& earlier) {
  std::vector<Poly> out;
  for (const auto* e : earlier) out.push_back(overlap_denominator(c, *e));
  return out;
}

namespace {

std::vector<Poly> embedded(const std::vector<Poly>& ps, const Ring& ring) {
  std::vector<Poly> out;
  for (const auto& p : ps) out.push_back(p.embed(ring));
  return out;
}

// J with the components supported off V(locus) removed from the count:
// returns the ideal of the part away from V(locus).
Ideal away_from(const Ideal& J, const std::vector<Poly>& locus) {
  std::optional<Ideal> acc;
  for (const auto& g : embedded(locus, J.ring())) {
    Ideal s = g.is_constant() ? J : saturate_by(J, g);
    acc = acc ? intersect(*acc, s) : s;
  }
  return *acc;
}

}  // namespace

long long length_on(const Ideal& J, const std::vector<Poly>& locus) {
  if (J.is_unit()) return 0;
  if (locus.empty()) return vector_space_dim(J);
  return vector_space_dim(J) - vector_space_dim(away_from(J, locus));
}

long long points_on(const Ideal& J, const std::vector<Poly>& locus) {
  if (J.is_unit()) return 0;
  return length_on(radical_zero_dim(J), locus);
}

bool inside(const Ideal& P, const std::vector<Poly>& locus) {
  for (const auto& g : embedded(locus, P.ring()))
    if (!P.contains(g)) return false;
  return true;
}

}  // namespace resol
