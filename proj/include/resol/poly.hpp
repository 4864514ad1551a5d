#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace resol {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Raised for malformed polynomial text or unknown identifiers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered list of variable names. Two rings are equal iff their names agree.
class Ring {
 public:
  Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> vars);

  std::size_t size() const { return vars_->size(); }
  const std::vector<std::string>& vars() const { return *vars_; }
  const std::string& var(std::size_t i) const { return (*vars_)[i]; }
  /// Index of a variable, or -1.
  int index_of(std::string_view name) const;

  /// Ring with extra variables appended (names must be fresh).
  Ring extended(const std::vector<std::string>& more) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);

/// Sparse polynomial over the rationals; zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  Poly(Ring ring, const Rational& c);

  static Poly variable(const Ring& ring, std::size_t i, int power = 1);
  static Poly monomial(const Ring& ring, Exponents e, const Rational& c = 1);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term coefficient (0 if absent).
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool uses_var(std::size_t var) const { return degree_in(var) > 0; }
  /// Indices of variables that occur.
  std::vector<std::size_t> support() const;
  /// Single variable with coefficient 1, degree 1: its index; else -1.
  int as_variable() const;
  /// True if monomial times constant.
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Exponents& e, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly pow(int k) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(std::size_t var) const;
  /// Substitute images[i] for variable i; images all live in `target`.
  Poly substitute(const std::vector<Poly>& images, const Ring& target) const;
  /// Same variables reinterpreted in another ring by name.
  Poly embed(const Ring& target) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Replace one variable by a constant.
  Poly specialize(std::size_t var, const Rational& value) const;

  /// Divide by the content so coefficients are coprime integers with positive
  /// leading coefficient (w.r.t. the map order).
  Poly primitive() const;
  /// Highest common monomial factor of all terms.
  Exponents monomial_content() const;
  /// Exact division by a monomial (must divide every term).
  Poly divide_monomial(const Exponents& e) const;

  std::string to_string() const;

 private:
  Ring ring_;
  TermMap terms_;
};

/// Parse polynomial text over the given ring. Variables may be written x(1),
/// which is read as x_1. Implicit multiplication is not accepted.
Poly parse_poly(std::string_view text, const Ring& ring);
/// Parse a comma-separated list of polynomials.
std::vector<Poly> parse_poly_list(std::string_view text, const Ring& ring);
/// Normalise an identifier such as x(1) or x(2,3) to x_1 / x_2_3.
std::string normalize_var_name(std::string_view name);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace resol
