#include "resol/upoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace resol {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::pow(int k) const {
  UPoly r(Rational(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - dd + 1), 0);
  for (int k = degree(); k >= dd; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / d.lead();
    q[static_cast<std::size_t>(k - dd)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  Rational l = lead();
  for (auto& c : r.c_) c /= l;
  return r;
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer g = 0, l = 1;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  if (lead() < 0) s = -s;
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) os << "-";
    else if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return p.divmod(gcd(p, p.derivative())).first.monic();
}

UPoly to_upoly(const Poly& p, std::size_t var) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree_in(var))) + 1, 0);
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("to_upoly: polynomial is not univariate");
    c[static_cast<std::size_t>(e[var])] += v;
  }
  return UPoly(std::move(c));
}

Poly from_upoly(const UPoly& u, const Ring& ring, std::size_t var) {
  Poly p(ring);
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    Exponents e(ring.size(), 0);
    e[var] = static_cast<int>(i);
    p.add_term(e, u.coeffs()[i]);
  }
  return p;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  if (n == 0) throw std::invalid_argument("divisors of zero");
  if (n > Integer("1000000000000")) throw std::runtime_error("factor_univariate: coefficients too large for trial search");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// primitive integer polynomial, positive lead
UPoly integral(const UPoly& p) { return p.primitive(); }

std::vector<Rational> rational_roots(const UPoly& p) {
  UPoly q = integral(p);
  std::vector<Rational> roots;
  if (q.degree() < 1) return roots;
  if (q[0] == 0) roots.push_back(0);
  // strip factors of x for the candidate search
  std::size_t low = 0;
  while (q[low] == 0) ++low;
  Integer a0 = q[low].get_num(), an = q.lead().get_num();
  if (q.degree() == static_cast<int>(low)) return roots;
  for (const auto& num : positive_divisors(a0))
    for (const auto& den : positive_divisors(an))
      for (int sign : {1, -1}) {
        Rational r(num * sign, den);
        r.canonicalize();
        if (q.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Lagrange interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  UPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly term(Rational(ys[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      Rational inv(1, 1);
      inv = Rational(1) / Rational(xs[i] - xs[j]);
      term = term * UPoly::linear(inv, -Rational(xs[j]) * inv);
    }
    result += term;
  }
  return result;
}

bool integer_coeffs(const UPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

// One non-trivial factor of a squarefree primitive integer polynomial without
// rational roots, or the zero polynomial if irreducible.
UPoly kronecker_factor(const UPoly& p) {
  const int n = p.degree();
  for (int d = 2; d <= n / 2; ++d) {
    // evaluation points with small non-zero values
    std::vector<std::pair<Integer, Integer>> cand;
    for (int a = -12; a <= 12; ++a) {
      Rational v = p.evaluate(a);
      if (v != 0) cand.emplace_back(abs(v.get_num()), Integer(a));
    }
    std::sort(cand.begin(), cand.end());
    if (static_cast<int>(cand.size()) < d + 1) throw std::runtime_error("factor_univariate: no evaluation points");
    std::vector<Integer> xs;
    std::vector<std::vector<Integer>> choices;
    for (int i = 0; i <= d; ++i) {
      xs.push_back(cand[static_cast<std::size_t>(i)].second);
      auto divs = positive_divisors(p.evaluate(Rational(xs.back())).get_num());
      std::vector<Integer> signed_divs;
      for (const auto& v : divs) {
        signed_divs.push_back(v);
        if (i > 0) signed_divs.push_back(-v);  // fix the sign of the first value
      }
      choices.push_back(std::move(signed_divs));
    }
    std::vector<Integer> ys(xs.size());
    UPoly found;
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
      if (i == xs.size()) {
        UPoly g = interpolate(xs, ys);
        if (g.degree() != d || !integer_coeffs(g)) return false;
        auto [q, r] = p.divmod(g);
        if (!r.is_zero()) return false;
        found = g;
        return true;
      }
      for (const auto& y : choices[i]) {
        ys[i] = y;
        if (search(i + 1)) return true;
      }
      return false;
    };
    if (search(0)) return found;
  }
  return {};
}

void split_squarefree(const UPoly& p, int mult, std::vector<Factor>& out) {
  if (p.degree() < 1) return;
  UPoly rest = integral(p);
  for (const auto& r : rational_roots(rest)) {
    UPoly lin = UPoly::linear(1, -r);
    out.push_back({lin, mult});
    rest = rest.divmod(lin).first;
  }
  rest = integral(rest);
  std::vector<UPoly> work;
  if (rest.degree() >= 1) work.push_back(rest);
  while (!work.empty()) {
    UPoly q = work.back();
    work.pop_back();
    UPoly f = q.degree() >= 4 ? kronecker_factor(q) : UPoly();
    if (f.is_zero()) {
      out.push_back({q.monic(), mult});
    } else {
      work.push_back(integral(f));
      work.push_back(integral(q.divmod(f).first));
    }
  }
}

}  // namespace

Factorization factor_univariate(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
  Factorization result{p.lead(), {}};
  // Yun's squarefree decomposition
  UPoly a = p.monic();
  if (a.degree() >= 1) {
    UPoly b = a.derivative();
    UPoly c = gcd(a, b);
    UPoly w = a.divmod(c).first;
    UPoly y = b.divmod(c).first;
    UPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() >= 1) {
      UPoly g = gcd(w, z);
      split_squarefree(g, i, result.factors);
      w = w.divmod(g).first;
      y = z.divmod(g).first;
      z = y - w.derivative();
      ++i;
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const Factor& x, const Factor& y) {
    if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
    if (x.multiplicity != y.multiplicity) return x.multiplicity < y.multiplicity;
    return x.factor.coeffs() < y.factor.coeffs();
  });
  return result;
}

UPoly expand(const Factorization& f) {
  UPoly r(f.unit);
  for (const auto& fac : f.factors) r = r * fac.factor.pow(fac.multiplicity);
  return r;
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  UPoly g = gcd(num, den);
  if (!num.is_zero() && g.degree() > 0) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  if (num.is_zero()) den = UPoly(Rational(1));
  // scale so all coefficients are coprime integers, denominator lead positive
  Integer gg = 0, l = 1;
  for (const auto* p : {&num, &den})
    for (const auto& c : p->coeffs()) {
      mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
  Rational s(l, gg == 0 ? Integer(1) : gg);
  s.canonicalize();
  if (den.lead() < 0) s = -s;
  num_ = num * UPoly(s);
  den_ = den * UPoly(s);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

Rational RationalFunction::evaluate(const Rational& t) const { return num_.evaluate(t) / den_.evaluate(t); }

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) {
    UPoly n = num_;
    Rational d = den_.lead();
    return (n * UPoly(Rational(1) / d)).to_string(var);
  }
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace resol
