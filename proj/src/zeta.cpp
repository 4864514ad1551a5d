#include "resol/zeta.hpp"

#include "resol/curves.hpp"
#include "resol/errors.hpp"
#include "resol/geometry.hpp"
#include "resol/invariants.hpp"

#include "json.hpp"

#include <map>
#include <stdexcept>

namespace resol {

namespace {

std::vector<const Chart*> prefix(const std::vector<const Chart*>& cs, std::size_t n) {
  return {cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(n)};
}

// Euler characteristic of the compact points and curves of V(J) lying in
// V(out); curves are counted by their smooth projective models.
long long owned_chi(const Ideal& J, const std::vector<Poly>& out) {
  switch (dimension(J)) {
    case -1:
      return 0;
    case 0:
      return points_on(J, out);
    case 1: {
      long long chi = 0;
      for (const auto& p : curve_pieces(J))
        if (inside(p.ideal, out)) chi += static_cast<long long>(p.c_components) * (2 - 2 * p.genus);
      return chi;
    }
    default:
      throw UnsupportedShape("Euler characteristic of a set of dimension above 1: " + J.to_string());
  }
}

bool smooth_or_off_origin(const Poly& f) {
  const std::vector<Rational> origin(f.ring().size(), Rational(0));
  if (f.evaluate(origin) != 0) return true;
  for (std::size_t v = 0; v < f.ring().size(); ++v)
    if (f.derivative(v).evaluate(origin) != 0) return true;
  return false;
}

// Zeta function and monodromy without exceptional divisors.
void require_smooth_at_origin(const Poly& f) {
  if (!smooth_or_off_origin(f))
    throw UnsupportedShape("singular at the origin without exceptional divisors: strict transform components are not separated");
}

int multiplicity_of(const std::vector<int>& m, int label) {
  return label == 0 ? m.back() : m.at(static_cast<std::size_t>(label - 1));
}

nlohmann::ordered_json coefficient(const Rational& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return c.get_str();
}

nlohmann::ordered_json coefficients(const UPoly& p) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(coefficient(c));
  return a;
}

}  // namespace

long long birth_chi(int ambient_dim, int center_dim, long long center_chi) {
  if (center_dim < 0 || center_dim > ambient_dim - 2)
    throw std::invalid_argument("birth_chi: center of dimension " + std::to_string(center_dim) + " in dimension " +
                                std::to_string(ambient_dim));
  return center_chi * (ambient_dim - center_dim);
}

long long birth_chi(int center_dim, int center_genus) {
  if (center_dim == 0) return birth_chi(3, 0, 1);
  if (center_dim == 1) {
    if (center_genus < 0) throw std::invalid_argument("birth_chi: negative genus");
    return birth_chi(3, 1, 2 - 2 * center_genus);
  }
  throw std::invalid_argument("birth_chi: centers of dimension 0 or 1 only");
}

long long update_chi(int divisor_dim, int meet_dim, long long meet_chi) {
  if (meet_dim < 0) return 0;
  if (meet_dim >= divisor_dim) throw std::invalid_argument("update_chi: the center contains the divisor");
  return meet_chi * (divisor_dim - meet_dim - 1);
}

long long ChiLedger::Entry::current() const {
  long long chi = birth;
  for (const auto& u : updates) chi += u.delta;
  return chi;
}

ChiLedger chi_ledger(const ChartTree& t, const DivisorTable& d) {
  const int n = static_cast<int>(t.ring().size());
  ChiLedger ledger;
  ledger.entries.resize(static_cast<std::size_t>(d.divisor_count));
  for (int label = 1; label <= d.divisor_count; ++label) {
    const auto& b = d.births[static_cast<std::size_t>(label - 1)];
    std::vector<const Chart*> parents;
    for (const auto& id : b.parents) parents.push_back(&t.at(id));
    std::vector<std::vector<Poly>> out;
    for (std::size_t i = 0; i < parents.size(); ++i) out.push_back(outside_of(*parents[i], prefix(parents, i)));

    long long center = 0;
    for (std::size_t i = 0; i < parents.size(); ++i) center += owned_chi(b.centers[i], out[i]);
    ledger.entries[static_cast<std::size_t>(label - 1)].birth = birth_chi(n, dimension(b.centers.front()), center);

    for (int other = 1; other < label; ++other) {
      long long delta = 0;
      for (std::size_t i = 0; i < parents.size(); ++i) {
        const int k = d.slot_of(parents[i]->id, other);
        if (k < 0) continue;
        Ideal meet = b.centers[i] + parents[i]->exceptional[static_cast<std::size_t>(k)];
        delta += update_chi(n - 1, dimension(meet), owned_chi(meet, out[i]));
      }
      if (delta != 0) ledger.entries[static_cast<std::size_t>(other - 1)].updates.push_back({label, delta});
    }
  }
  return ledger;
}

bool divisors_over_origin(const ChartTree& t, const DivisorTable& d) {
  for (int label = 1; label <= d.divisor_count; ++label) {
    bool seen = false;
    for (const auto* c : t.finals()) {
      const int k = d.slot_of(c->id, label);
      if (k < 0) continue;
      seen = true;
      const Poly e = c->exceptional_generator(static_cast<std::size_t>(k));
      for (const auto& img : c->map_to_root.images)
        if (divisibility_order(img, e) < 1) return false;
      break;
    }
    if (!seen) throw InconsistentResolution("divisor " + std::to_string(label) + " is visible in no final chart");
  }
  return true;
}

std::vector<Stratum> stratify(const ChartTree& t, const DivisorTable& d) {
  if (!divisors_over_origin(t, d)) throw UnsupportedShape("an exceptional divisor does not lie over the origin");
  const std::size_t n = t.ring().size();
  std::map<std::vector<int>, long long> chi;

  const ChiLedger ledger = chi_ledger(t, d);
  for (int label = 1; label <= d.divisor_count; ++label) chi[{label}] = ledger.chi(label);

  const auto finals = t.finals();
  for (std::size_t i = 0; i < finals.size(); ++i) {
    const Chart& c = *finals[i];
    const auto out = outside_of(c, prefix(finals, i));
    std::vector<std::pair<int, Ideal>> parts;
    if (!c.strict.is_unit()) parts.emplace_back(0, c.strict);
    for (std::size_t k = 0; k < c.exceptional.size(); ++k)
      if (c.visible(k)) parts.emplace_back(d.label(c.id, k), c.exceptional[k]);

    // subsets of two or more components, in ascending label order
    const std::size_t m = parts.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
      if (size < 2 || size > n) continue;
      std::vector<int> labels;
      Ideal meet(c.ring);
      for (std::size_t j = 0; j < m; ++j)
        if (mask & (1u << j)) {
          labels.push_back(parts[j].first);
          meet = meet + parts[j].second;
        }
      std::sort(labels.begin(), labels.end());
      if (labels.back() == 0 || meet.is_unit()) continue;
      chi[labels] += owned_chi(meet, out);
    }
  }

  std::vector<Stratum> strata;
  for (const auto& [labels, value] : chi) {
    Stratum s{labels, value, 0, 0};
    for (const auto& [bigger, v] : chi) {
      if (bigger.size() < labels.size() || !std::includes(bigger.begin(), bigger.end(), labels.begin(), labels.end()))
        continue;
      s.chi_star += (bigger.size() - labels.size()) % 2 == 0 ? v : -v;
    }
    s.chi_star_over_origin = s.chi_star;
    strata.push_back(std::move(s));
  }
  return strata;
}

std::optional<std::vector<Rational>> homogeneity_weights(const Poly& f) {
  const std::size_t n = f.ring().size();
  if (f.is_zero() || f.is_constant()) return std::nullopt;
  std::vector<Exponents> mons;
  for (const auto& [e, c] : f.terms()) mons.push_back(e);

  // reduced row echelon form of the exponent differences
  std::vector<std::vector<Rational>> rows;
  for (std::size_t j = 1; j < mons.size(); ++j) {
    std::vector<Rational> r(n);
    for (std::size_t v = 0; v < n; ++v) r[v] = mons[j][v] - mons[0][v];
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational m = rows[r][col];
      for (std::size_t v = 0; v < n; ++v) rows[r][v] -= m * rows[rank][v];
    }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> w(n);
    w[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) w[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(w));
  }
  if (basis.empty()) return std::nullopt;

  // small integer combinations of the kernel basis
  const int range = 4;
  std::vector<int> coef(basis.size(), -range);
  for (;;) {
    std::vector<Rational> w(n);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t v = 0; v < n; ++v) w[v] += basis[b][v] * coef[b];
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x > 0; })) return w;
    std::size_t b = 0;
    while (b < coef.size() && coef[b] == range) coef[b++] = -range;
    if (b == coef.size()) return std::nullopt;
    ++coef[b];
  }
}

RationalFunction zeta_top(const ChartTree& t, const DivisorTable& d, int dd, bool local) {
  if (dd < 1) throw std::invalid_argument("zeta_top: d must be positive");
  const Poly f = t.input().principal_generator();
  if (!local && !homogeneity_weights(f))
    throw UnsupportedShape("global zeta function: the input is not weighted homogeneous");
  if (d.divisor_count == 0) {
    require_smooth_at_origin(f);
    const std::vector<Rational> origin(f.ring().size(), Rational(0));
    if (f.evaluate(origin) != 0 || dd != 1) return RationalFunction();
    return RationalFunction(UPoly(Rational(1)), UPoly::linear(1, 1));
  }
  const auto N = multiplicities_N(t, d);
  const auto nu = multiplicities_nu(t, d);
  RationalFunction z;
  for (const auto& s : stratify(t, d)) {
    const long long chi = local ? s.chi_star_over_origin : s.chi_star;
    if (chi == 0) continue;
    bool divisible = true;
    UPoly den(Rational(1));
    for (int j : s.labels) {
      if (multiplicity_of(N, j) % dd != 0) divisible = false;
      den = den * UPoly::linear(multiplicity_of(N, j), multiplicity_of(nu, j));
    }
    if (divisible) z = z + RationalFunction(UPoly(Rational(static_cast<long>(chi))), den);
  }
  return z;
}

UPoly monodromy_charpoly(const ChartTree& t, const DivisorTable& d) {
  if (d.divisor_count == 0) {
    require_smooth_at_origin(t.input().principal_generator());
    return UPoly(Rational(1));
  }
  const auto N = multiplicities_N(t, d);
  RationalFunction p(1);
  for (const auto& s : stratify(t, d)) {
    if (s.labels.size() != 1 || s.labels[0] == 0) continue;
    const UPoly factor = UPoly::x().pow(multiplicity_of(N, s.labels[0])) - UPoly(Rational(1));
    const long long chi = s.chi_star_over_origin;
    for (long long i = 0; i < std::abs(chi); ++i)
      p = chi > 0 ? p * RationalFunction(factor, UPoly(Rational(1))) : p / RationalFunction(factor, UPoly(Rational(1)));
  }
  const RationalFunction shift(UPoly::linear(1, -1), UPoly(Rational(1)));
  const RationalFunction delta = t.ring().size() % 2 == 1 ? p / shift : shift / p;
  if (!delta.is_polynomial()) throw InconsistentResolution("monodromy product is not a polynomial: " + delta.to_string());
  return delta.numerator().monic();
}

std::string zeta_json(const RationalFunction& z, const UPoly& monodromy, int dd, bool local) {
  nlohmann::ordered_json j;
  j["d"] = dd;
  j["scope"] = local ? "local" : "global";
  j["numerator"] = coefficients(z.numerator());
  j["denominator"] = coefficients(z.denominator());
  j["monodromy"] = coefficients(monodromy);
  return j.dump(2);
}

}  // namespace resol
