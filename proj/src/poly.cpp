#include "resol/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace resol {

std::string to_string(const Rational& q) { return q.get_str(); }

Ring::Ring(std::vector<std::string> vars)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {}

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return static_cast<int>(i);
  return -1;
}

Ring Ring::extended(const std::vector<std::string>& more) const {
  std::vector<std::string> v = *vars_;
  for (const auto& m : more) {
    if (index_of(m) >= 0) throw std::invalid_argument("variable already in ring: " + m);
    v.push_back(m);
  }
  return Ring(std::move(v));
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Poly::Poly(Ring ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace(Exponents(ring_.size(), 0), c);
}

Poly Poly::variable(const Ring& ring, std::size_t i, int power) {
  Exponents e(ring.size(), 0);
  e.at(i) = power;
  return monomial(ring, std::move(e));
}

Poly Poly::monomial(const Ring& ring, Exponents e, const Rational& c) {
  Poly p(ring);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && resol::total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const { return coefficient(Exponents(ring_.size(), 0)); }

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, resol::total_degree(e));
  return d;
}

int Poly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_.size(); ++i)
    if (uses_var(i)) out.push_back(i);
  return out;
}

int Poly::as_variable() const {
  if (terms_.size() != 1) return -1;
  const auto& [e, c] = *terms_.begin();
  if (c != 1 || resol::total_degree(e) != 1) return -1;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] == 1) return static_cast<int>(i);
  return -1;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (is_zero() && ring_.size() == 0) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (is_zero() && ring_.size() == 0) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.ring_);
  const std::size_t n = a.ring_.size();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Poly result(ring_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images, const Ring& target) const {
  if (images.size() != ring_.size())
    throw std::invalid_argument("substitute: image count does not match ring");
  // cache powers per variable
  std::vector<std::vector<Poly>> powers(ring_.size());
  auto power_of = [&](std::size_t i, int k) -> const Poly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.emplace_back(target, 1);
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
    return pw[k];
  };
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Poly t(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * power_of(i, e[i]);
    r += t;
  }
  return r;
}

Poly Poly::embed(const Ring& target) const {
  std::vector<Poly> images;
  images.reserve(ring_.size());
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    int j = target.index_of(ring_.var(i));
    if (j < 0) {
      if (uses_var(i)) throw std::invalid_argument("embed: variable missing in target: " + ring_.var(i));
      images.emplace_back(target);
    } else {
      images.push_back(variable(target, static_cast<std::size_t>(j)));
    }
  }
  return substitute(images, target);
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Poly Poly::specialize(std::size_t var, const Rational& value) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < e[var]; ++k) t *= value;
    Exponents d = e;
    d[var] = 0;
    r.add_term(d, t);
  }
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Integer g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(l, g);
  if (terms_.rbegin()->second < 0) scale = -scale;
  return *this * scale;
}

Exponents Poly::monomial_content() const {
  if (is_zero()) return Exponents(ring_.size(), 0);
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Poly Poly::divide_monomial(const Exponents& m) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (!divides(m, e)) throw std::invalid_argument("divide_monomial: not divisible");
    Exponents d = e;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= m[i];
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

namespace {

// degree-reverse-lexicographic "greater than", used only for printing
bool drl_greater(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return drl_greater(a->first, b->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : ts) {
    const auto& [e, c] = *t;
    Rational mag = abs(c);
    if (c < 0) os << "-";
    else if (!first) os << "+";
    first = false;
    bool constant = resol::total_degree(e) == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << ring_.var(i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// parser

std::string normalize_var_name(std::string_view name) {
  std::string out;
  for (char ch : name) {
    if (ch == '(' || ch == ',') out += '_';
    else if (ch == ')' || std::isspace(static_cast<unsigned char>(ch))) continue;
    else out += ch;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

  Poly parse_all() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

  std::vector<Poly> parse_list() {
    std::vector<Poly> out;
    out.push_back(expr());
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      out.push_back(expr());
      skip_ws();
    }
    if (pos_ != s_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    skip_ws();
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
      fail("implicit multiplication is not allowed");
    return acc;
  }

  Poly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      Integer k = integer();
      if (!k.fits_sint_p() || k > 10000) fail("exponent too large");
      return base.pow(static_cast<int>(k.get_si()));
    }
    return base;
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Rational q(num);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          fail("expected denominator");
        Integer den = integer();
        if (den == 0) fail("zero denominator");
        q = Rational(num, den);
        q.canonicalize();
      }
      return Poly(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == '(') {
        std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos) fail("unterminated index");
        std::string_view idx = s_.substr(pos_ + 1, close - pos_ - 1);
        for (char ch : idx)
          if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != ',' && ch != ' ') fail("bad index");
        name = normalize_var_name(std::string(s_.substr(start, close + 1 - start)));
        pos_ = close + 1;
      }
      int i = ring_.index_of(name);
      if (i < 0) fail("unknown variable '" + name + "'");
      return Poly::variable(ring_, static_cast<std::size_t>(i));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse_all(); }

std::vector<Poly> parse_poly_list(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse_list();
}

}  // namespace resol
