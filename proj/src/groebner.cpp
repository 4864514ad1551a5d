#include "resol/groebner.hpp"

#include <algorithm>
#include <utility>

namespace resol {

int TermOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Elimination: {
      int da = 0, db = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (i < eliminate.size() && eliminate[i]) {
          da += a[i];
          db += b[i];
        }
      if (da != db) return da < db ? -1 : 1;
      [[fallthrough]];
    }
    case Kind::DegRevLex: {
      int da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

namespace {

struct Term {
  Exponents exp;
  Rational coef;
};

// Terms sorted by descending order.
using SPoly = std::vector<Term>;

SPoly to_sorted(const Poly& p, const TermOrder& ord) {
  SPoly s;
  s.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) s.push_back({e, c});
  std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return ord.compare(a.exp, b.exp) > 0; });
  return s;
}

Poly to_poly(const SPoly& s, const Ring& ring) {
  Poly p(ring);
  for (const auto& t : s) p.add_term(t.exp, t.coef);
  return p;
}

void make_monic(SPoly& s) {
  if (s.empty() || s.front().coef == 1) return;
  Rational inv = 1 / s.front().coef;
  for (auto& t : s) t.coef *= inv;
}

// a - c * x^m * b, merged in order.
SPoly sub_mul(const SPoly& a, const Rational& c, const Exponents& m, const SPoly& b, const TermOrder& ord) {
  SPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const std::size_t n = m.size();
  Exponents e(n);
  auto shifted = [&](std::size_t k) {
    for (std::size_t v = 0; v < n; ++v) e[v] = b[k].exp[v] + m[v];
  };
  bool have = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have) {
      shifted(j);
      have = true;
    }
    int cmp;
    if (i >= a.size()) cmp = -1;
    else if (j >= b.size()) cmp = 1;
    else cmp = ord.compare(a[i].exp, e);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({e, -c * b[j].coef});
      ++j;
      have = false;
    } else {
      Rational v = a[i].coef - c * b[j].coef;
      if (v != 0) out.push_back({a[i].exp, std::move(v)});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

Exponents quotient_exp(const Exponents& num, const Exponents& den) {
  Exponents q(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) q[i] = num[i] - den[i];
  return q;
}

// Full reduction of f by the (monic) basis g.
SPoly reduce(SPoly f, const std::vector<SPoly>& g, const TermOrder& ord) {
  SPoly rem;
  while (!f.empty()) {
    bool reduced = false;
    for (const auto& gi : g) {
      if (gi.empty()) continue;
      if (divides(gi.front().exp, f.front().exp)) {
        Rational c = f.front().coef / gi.front().coef;
        f = sub_mul(f, c, quotient_exp(f.front().exp, gi.front().exp), gi, ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(std::move(f.front()));
      f.erase(f.begin());
    }
  }
  return rem;
}

SPoly s_polynomial(const SPoly& a, const SPoly& b, const TermOrder& ord) {
  Exponents l = lcm(a.front().exp, b.front().exp);
  // a, b monic
  SPoly sa;
  sa.reserve(a.size());
  Exponents ma = quotient_exp(l, a.front().exp);
  for (const auto& t : a) {
    Exponents e = t.exp;
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += ma[v];
    sa.push_back({std::move(e), t.coef});
  }
  return sub_mul(sa, Rational(1), quotient_exp(l, b.front().exp), b, ord);
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

}  // namespace

Exponents leading_exponent(const Poly& p, const TermOrder& ord) {
  if (p.is_zero()) throw std::invalid_argument("leading_exponent of zero polynomial");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || ord.compare(e, *best) > 0) best = &e;
  return *best;
}

Rational leading_coefficient(const Poly& p, const TermOrder& ord) {
  return p.coefficient(leading_exponent(p, ord));
}

bool is_unit_basis(const std::vector<Poly>& g) { return g.size() == 1 && g[0].is_constant() && !g[0].is_zero(); }

std::vector<Poly> groebner(const std::vector<Poly>& gens, const TermOrder& ord) {
  if (gens.empty()) return {};
  const Ring ring = gens.front().ring();
  std::vector<SPoly> basis;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto add = [&](SPoly h) {
    make_monic(h);
    const std::size_t k = basis.size();
    const Exponents& lh = h.front().exp;
    // Gebauer-Moeller update: prune old pairs whose lcm is divisible by lm(h)
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
      bool drop = divides(lh, p.lcm) && lcm(basis[p.i].front().exp, lh) != p.lcm &&
                  lcm(basis[p.j].front().exp, lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    // candidate new pairs
    std::vector<Pair> cand;
    for (std::size_t i = 0; i < k; ++i)
      if (active[i]) cand.push_back({i, k, lcm(basis[i].front().exp, lh)});
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (divides(cand[b].lcm, cand[a].lcm) && (cand[b].lcm != cand[a].lcm || b < a)) keep[a] = false;
      }
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (coprime(basis[cand[a].i].front().exp, lh)) continue;
      pairs.push_back(std::move(cand[a]));
    }
    for (std::size_t i = 0; i < k; ++i)
      if (active[i] && divides(lh, basis[i].front().exp)) active[i] = false;
    basis.push_back(std::move(h));
    active.push_back(true);
  };

  auto current = [&]() {
    std::vector<SPoly> g;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (active[i]) g.push_back(basis[i]);
    return g;
  };

  {
    std::vector<SPoly> input;
    for (const auto& p : gens)
      if (!p.is_zero()) input.push_back(to_sorted(p, ord));
    std::sort(input.begin(), input.end(), [&](const SPoly& a, const SPoly& b) {
      return ord.compare(a.front().exp, b.front().exp) < 0;
    });
    for (auto& f : input) {
      SPoly r = reduce(std::move(f), current(), ord);
      if (r.empty()) continue;
      if (total_degree(r.front().exp) == 0) return {Poly(ring, 1)};
      add(std::move(r));
    }
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return ord.compare(a.lcm, b.lcm) < 0;
    });
    Pair p = std::move(*it);
    pairs.erase(it);
    SPoly s = s_polynomial(basis[p.i], basis[p.j], ord);
    // reduce against the full basis (inactive elements are still members)
    SPoly r = reduce(std::move(s), basis, ord);
    if (r.empty()) continue;
    if (total_degree(r.front().exp) == 0) return {Poly(ring, 1)};
    add(std::move(r));
  }

  // minimal basis then inter-reduction
  std::vector<SPoly> g;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(basis[j].front().exp, basis[i].front().exp) &&
          (basis[j].front().exp != basis[i].front().exp || j < i))
        redundant = true;
    }
    if (!redundant) g.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<SPoly> others;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) others.push_back(g[j]);
    SPoly head{g[i].front()};
    SPoly tail(g[i].begin() + 1, g[i].end());
    SPoly red = reduce(std::move(tail), others, ord);
    head.insert(head.end(), red.begin(), red.end());
    g[i] = std::move(head);
  }
  std::sort(g.begin(), g.end(), [&](const SPoly& a, const SPoly& b) {
    return ord.compare(a.front().exp, b.front().exp) < 0;
  });
  std::vector<Poly> out;
  out.reserve(g.size());
  for (const auto& s : g) out.push_back(to_poly(s, ring));
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& g, const TermOrder& ord) {
  if (f.is_zero() || g.empty()) return f;
  std::vector<SPoly> gs;
  for (const auto& p : g)
    if (!p.is_zero()) gs.push_back(to_sorted(p, ord));
  return to_poly(reduce(to_sorted(f, ord), gs, ord), f.ring());
}

}  // namespace resol
