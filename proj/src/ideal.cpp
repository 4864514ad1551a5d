#include "resol/ideal.hpp"

#include "resol/upoly.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace resol {

namespace {

std::string fresh_name(const Ring& ring, const std::string& base) {
  std::string name = base;
  while (ring.index_of(name) >= 0) name += "_";
  return name;
}

std::vector<Poly> nonzero(std::vector<Poly> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Poly& p) { return p.is_zero(); }), gens.end());
  return gens;
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(nonzero(std::move(gens))), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_)
    if (!(g.ring() == ring_)) throw std::invalid_argument("Ideal: generator from a different ring");
}

const std::vector<Poly>& Ideal::basis() const {
  std::lock_guard<std::mutex> lock(cache_->m);
  if (!cache_->gb) cache_->gb = std::make_shared<const std::vector<Poly>>(groebner(gens_, TermOrder::degrevlex()));
  return *cache_->gb;
}

std::vector<Poly> Ideal::basis(const TermOrder& ord) const {
  if (ord == TermOrder::degrevlex()) return basis();
  return groebner(gens_, ord);
}

bool Ideal::contains(const Poly& f) const { return normal_form(f, basis(), TermOrder::degrevlex()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool operator==(const Ideal& a, const Ideal& b) { return a.ring() == b.ring() && a.basis() == b.basis(); }

Poly Ideal::principal_generator() const {
  const auto& g = basis();
  if (g.empty()) return Poly(ring_);
  if (g.size() != 1) throw std::logic_error("ideal is not principal: " + to_string());
  return g.front().primitive();
}

Ideal Ideal::operator+(const Ideal& o) const {
  std::vector<Poly> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& o) const {
  std::vector<Poly> g;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::with(const Poly& f) const {
  std::vector<Poly> g = gens_;
  g.push_back(f);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::substitute(const std::vector<Poly>& images, const Ring& target) const {
  std::vector<Poly> g;
  for (const auto& p : gens_) g.push_back(p.substitute(images, target));
  return Ideal(target, std::move(g));
}

Ideal Ideal::embed(const Ring& target) const {
  std::vector<Poly> g;
  for (const auto& p : gens_) g.push_back(p.embed(target));
  return Ideal(target, std::move(g));
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i];
  os << ">";
  return os.str();
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop) {
  const Ring& ring = I.ring();
  std::vector<bool> mask(ring.size(), false);
  for (auto d : drop) mask.at(d) = true;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!mask[i]) kept.push_back(ring.var(i));
  Ring small(kept);
  std::vector<Poly> out;
  for (const auto& g : groebner(I.generators(), TermOrder::elimination(mask))) {
    bool uses = false;
    for (std::size_t i = 0; i < ring.size() && !uses; ++i) uses = mask[i] && g.uses_var(i);
    if (!uses) out.push_back(g.embed(small));
  }
  return Ideal(small, std::move(out));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  const Ring& ring = I.ring();
  Ring ext = ring.extended({fresh_name(ring, "t_")});
  Poly t = Poly::variable(ext, ring.size());
  Poly one_minus_t = Poly(ext, 1) - t;
  std::vector<Poly> g;
  for (const auto& p : I.generators()) g.push_back(t * p.embed(ext));
  for (const auto& p : J.generators()) g.push_back(one_minus_t * p.embed(ext));
  Ideal elim = eliminate(Ideal(ext, std::move(g)), {ring.size()});
  return Ideal(ring, elim.embed(ring).generators());
}

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  const TermOrder ord = TermOrder::degrevlex();
  const Exponents lb = leading_exponent(b, ord);
  const Rational cb = b.coefficient(lb);
  Poly q(a.ring()), r = a;
  while (!r.is_zero()) {
    Exponents lr = leading_exponent(r, ord);
    if (!divides(lb, lr)) throw std::invalid_argument("exact_divide: not divisible");
    Exponents m(lr.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = lr[i] - lb[i];
    Poly t = Poly::monomial(a.ring(), m, r.coefficient(lr) / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  try {
    return exact_divide(a, b);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

int divisibility_order(const Poly& a, const Poly& b) {
  if (a.is_zero()) throw std::invalid_argument("divisibility_order of zero");
  if (b.is_constant()) throw std::invalid_argument("divisibility_order by a constant");
  int k = 0;
  Poly cur = a;
  while (auto q = try_divide(cur, b)) {
    cur = *q;
    ++k;
  }
  return k;
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  const Ring& ring = I.ring();
  if (J.is_zero()) return Ideal::unit(ring);
  std::optional<Ideal> acc;
  for (const auto& g : J.basis()) {
    Ideal inter = intersect(I, Ideal::principal(g));
    std::vector<Poly> q;
    for (const auto& p : inter.basis()) q.push_back(exact_divide(p, g));
    Ideal part(ring, std::move(q));
    acc = acc ? intersect(*acc, part) : part;
    if (acc->contains(I) && I.contains(*acc)) break;
  }
  return Ideal(ring, acc->basis());
}

Saturation saturate(const Ideal& I, const Ideal& J) {
  Ideal cur(I.ring(), I.basis());
  int k = 0;
  while (true) {
    Ideal next = quotient(cur, J);
    if (next == cur) return {cur, k};
    cur = std::move(next);
    ++k;
  }
}

Ideal saturate_by(const Ideal& I, const Poly& f) {
  const Ring& ring = I.ring();
  if (f.is_constant()) {
    if (f.is_zero()) return Ideal::unit(ring);
    return I;
  }
  Ring ext = ring.extended({fresh_name(ring, "u_")});
  Poly u = Poly::variable(ext, ring.size());
  std::vector<Poly> g;
  for (const auto& p : I.generators()) g.push_back(p.embed(ext));
  g.push_back(Poly(ext, 1) - u * f.embed(ext));
  Ideal elim = eliminate(Ideal(ext, std::move(g)), {ring.size()});
  return Ideal(ring, elim.embed(ring).generators());
}

Ideal part_on(const Ideal& I, const Poly& f) { return quotient(I, saturate_by(I, f)); }

int dimension(const Ideal& I) {
  const auto& g = I.basis();
  const std::size_t n = I.ring().size();
  if (is_unit_basis(g)) return -1;
  std::vector<Exponents> lms;
  for (const auto& p : g) lms.push_back(leading_exponent(p, TermOrder::degrevlex()));
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& lm : lms) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (lm[i] > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& fs) {
  std::vector<std::vector<Poly>> m;
  for (const auto& f : fs) {
    std::vector<Poly> row;
    for (std::size_t j = 0; j < f.ring().size(); ++j) row.push_back(f.derivative(j));
    m.push_back(std::move(row));
  }
  return m;
}

Poly determinant(const std::vector<std::vector<Poly>>& m, const Ring& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(ring, 1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 1) return m[0][0];
  Poly det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * determinant(minor, ring);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

Ideal singular_locus(const Ideal& I, int codim) {
  const Ring& ring = I.ring();
  const auto& gens = I.generators();
  if (codim < 0 || static_cast<std::size_t>(codim) > ring.size() || static_cast<std::size_t>(codim) > gens.size())
    throw std::invalid_argument("singular_locus: inconsistent codimension " + std::to_string(codim));
  if (codim == 0) return I;
  auto jac = jacobian(gens);
  std::vector<std::vector<std::size_t>> rows, cols;
  combinations(gens.size(), static_cast<std::size_t>(codim), rows);
  combinations(ring.size(), static_cast<std::size_t>(codim), cols);
  std::vector<Poly> out = gens;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      std::vector<std::vector<Poly>> sub;
      for (auto i : r) {
        std::vector<Poly> row;
        for (auto j : c) row.push_back(jac[i][j]);
        sub.push_back(std::move(row));
      }
      out.push_back(determinant(sub, ring));
    }
  return Ideal(ring, std::move(out));
}

bool radical_membership(const Poly& f, const Ideal& I) {
  const Ring& ring = I.ring();
  if (f.is_zero()) return true;
  Ring ext = ring.extended({fresh_name(ring, "u_")});
  Poly u = Poly::variable(ext, ring.size());
  std::vector<Poly> g;
  for (const auto& p : I.generators()) g.push_back(p.embed(ext));
  g.push_back(Poly(ext, 1) - u * f.embed(ext));
  return Ideal(ext, std::move(g)).is_unit();
}

Poly univariate_eliminant(const Ideal& I, std::size_t var) {
  const Ring& ring = I.ring();
  std::vector<bool> mask(ring.size(), true);
  mask[var] = false;
  for (const auto& g : groebner(I.generators(), TermOrder::elimination(mask))) {
    bool only = true;
    for (std::size_t i = 0; i < ring.size() && only; ++i)
      if (i != var && g.uses_var(i)) only = false;
    if (only) return g;
  }
  return Poly(ring);
}

Ideal radical_zero_dim(const Ideal& I) {
  const Ring& ring = I.ring();
  if (I.is_unit()) return I;
  if (dimension(I) != 0) throw std::invalid_argument("radical_zero_dim: ideal is not zero-dimensional");
  std::vector<Poly> g = I.basis();
  for (std::size_t v = 0; v < ring.size(); ++v) {
    Poly p = univariate_eliminant(I, v);
    UPoly sq = squarefree_part(to_upoly(p, v));
    g.push_back(from_upoly(sq, ring, v));
  }
  return Ideal(ring, std::move(g));
}

long long vector_space_dim(const Ideal& I) {
  const auto& g = I.basis();
  if (is_unit_basis(g)) return 0;
  const std::size_t n = I.ring().size();
  std::vector<Exponents> lms;
  for (const auto& p : g) lms.push_back(leading_exponent(p, TermOrder::degrevlex()));
  // every variable needs a pure power among the leading monomials
  Exponents bound(n, -1);
  for (const auto& lm : lms) {
    int nz = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] > 0) {
        ++nz;
        var = i;
      }
    if (nz == 1 && (bound[var] < 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (auto b : bound)
    if (b < 0) throw std::invalid_argument("vector_space_dim: ideal is not zero-dimensional");
  long long count = 0;
  Exponents e(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (const auto& lm : lms)
        if (divides(lm, e)) return;
      ++count;
      return;
    }
    for (int k = 0; k < bound[i]; ++k) {
      e[i] = k;
      rec(i + 1);
    }
    e[i] = 0;
  };
  rec(0);
  return count;
}

long long point_count(const Ideal& I) {
  if (I.is_unit()) return 0;
  return vector_space_dim(radical_zero_dim(I));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  const Ring& ring = a.ring();
  if (a.is_zero()) return b.is_zero() ? Poly(ring) : b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(ring, 1);
  if (a.is_monomial() || b.is_monomial()) {
    Exponents ma = a.monomial_content(), mb = b.monomial_content();
    for (std::size_t i = 0; i < ma.size(); ++i) ma[i] = std::min(ma[i], mb[i]);
    return Poly::monomial(ring, ma);
  }
  // strip the common monomial part, then use the lcm through intersection
  Exponents ma = a.monomial_content(), mb = b.monomial_content();
  Exponents m(ma.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(ma[i], mb[i]);
  Poly ar = a.divide_monomial(ma), br = b.divide_monomial(mb);
  Poly g(ring, 1);
  if (!ar.is_constant() && !br.is_constant()) {
    if (auto q = try_divide(ar, br)) g = br;
    else if (auto q2 = try_divide(br, ar)) g = ar;
    else {
      Poly l = intersect(Ideal::principal(ar), Ideal::principal(br)).principal_generator();
      g = exact_divide(ar * br, l);
    }
  }
  return (g * Poly::monomial(ring, m)).primitive();
}

}  // namespace resol
