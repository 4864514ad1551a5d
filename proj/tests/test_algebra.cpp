#include "doctest.h"

#include "resol/ideal.hpp"
#include "resol/upoly.hpp"

#include <random>

using namespace resol;

namespace {

Ideal ideal(const Ring& r, const std::string& gens) { return Ideal(r, parse_poly_list(gens, r)); }
Poly P(const Ring& r, const std::string& s) { return parse_poly(s, r); }

UPoly U(std::vector<int> c) {
  return UPoly(std::vector<Rational>(c.begin(), c.end()));
}

bool same_ideal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

}  // namespace

TEST_CASE("parse and print round trip") {
  Ring r({"x", "y", "z"});
  for (std::string s : {"x^5+y^2+z^2", "-x", "3/2*x*y-1", "x^2*y^3*z-7/3"}) {
    Poly p = P(r, s);
    CHECK(P(r, p.to_string()) == p);
  }
  CHECK(P(r, "y^2+x^5+z^2").to_string() == "x^5+y^2+z^2");
  CHECK_THROWS_AS(P(r, "x y"), ParseError);
  CHECK_THROWS_AS(P(r, "x++y"), ParseError);
  CHECK_THROWS_AS(P(r, "w"), ParseError);
  Ring r2({"x_1", "y"});
  CHECK(P(r2, "x(1)*y") == P(r2, "x_1*y"));
}

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, 4);
  a.canonicalize();
  CHECK(a.get_num() == 3);
  CHECK(a.get_den() == 2);
  Rational b = Rational(1, 3) - Rational(1, 3);
  CHECK(b == 0);
  CHECK(b.get_den() == 1);
}

TEST_CASE("groebner bases") {
  Ring r({"x", "y"});
  auto g = groebner(ideal(r, "x, y").generators(), TermOrder::degrevlex());
  REQUIRE(g.size() == 2);
  CHECK(is_unit_basis(groebner(ideal(r, "x^2, x*y-1").generators(), TermOrder::degrevlex())));

  Ring rz({"z", "y", "x"});
  auto lex = groebner(ideal(rz, "y-x^2, z-x^3").generators(), TermOrder::lex());
  REQUIRE(lex.size() == 2);
  CHECK(lex[0] == P(rz, "y-x^2"));
  CHECK(lex[1] == P(rz, "z-x^3"));
  CHECK(groebner(lex, TermOrder::lex()) == lex);
  CHECK(groebner({}, TermOrder::lex()).empty());
}

TEST_CASE("normal form") {
  Ring r({"z", "y", "x"});
  CHECK(normal_form(P(r, "x^2"), {P(r, "x")}, TermOrder::degrevlex()).is_zero());
  CHECK(normal_form(P(r, "x+y"), {P(r, "x")}, TermOrder::degrevlex()) == P(r, "y"));
  auto g = groebner(ideal(r, "z-x^3, y-x^2").generators(), TermOrder::lex());
  CHECK(normal_form(P(r, "x*z-y^2"), g, TermOrder::lex()).is_zero());
}

TEST_CASE("groebner basis generates the input ideal") {
  Ring r({"x", "y", "z"});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) {
      Poly p(r);
      for (int t = 0; t < 3; ++t) p.add_term({ex(rng), ex(rng), ex(rng)}, coef(rng));
      gens.push_back(p);
    }
    for (auto ord : {TermOrder::degrevlex(), TermOrder::lex()}) {
      auto g = groebner(gens, ord);
      for (const auto& f : gens) CHECK(normal_form(f, g, ord).is_zero());
      Ideal back(r, g);
      for (const auto& f : g) CHECK(Ideal(r, gens).contains(f));
      CHECK(groebner(g, ord) == g);
    }
  }
}

TEST_CASE("elimination") {
  Ring r({"x", "y", "t", "y0", "y1"});
  Ideal e = eliminate(ideal(r, "y0-t*x, y1-t*y"), {2});
  Ring small({"x", "y", "y0", "y1"});
  CHECK(e.ring() == small);
  CHECK(same_ideal(e, ideal(small, "x*y1-y*y0")));

  Ring rt({"x", "t"});
  CHECK(eliminate(ideal(rt, "x-t"), {1}).is_zero());

  Ring rc({"x", "y", "z", "t"});
  Ideal cubic = eliminate(ideal(rc, "x-t, y-t^2, z-t^3"), {3});
  Ring r3({"x", "y", "z"});
  CHECK(cubic.contains(P(r3, "y-x^2")));
  CHECK(cubic.contains(P(r3, "z-x^3")));
  for (const auto& g : cubic.generators())
    for (int t = -3; t <= 3; ++t) CHECK(g.evaluate({t, t * t, t * t * t}) == 0);
}

TEST_CASE("quotient and saturation") {
  Ring r({"x", "y"});
  CHECK(same_ideal(quotient(ideal(r, "x*y"), ideal(r, "x")), ideal(r, "y")));
  CHECK(same_ideal(quotient(ideal(r, "x"), ideal(r, "y")), ideal(r, "x")));
  Ring c({"x", "y1"});
  CHECK(same_ideal(quotient(ideal(c, "x^2*(y1^2-x)"), ideal(c, "x")), ideal(c, "x*(y1^2-x)")));

  auto s = saturate(ideal(r, "x^2*y"), ideal(r, "x"));
  CHECK(same_ideal(s.ideal, ideal(r, "y")));
  CHECK(s.exponent == 2);
  s = saturate(ideal(r, "x"), ideal(r, "y"));
  CHECK(same_ideal(s.ideal, ideal(r, "x")));
  CHECK(s.exponent == 0);
  s = saturate(ideal(c, "x^2*(y1^2-x)"), ideal(c, "x"));
  CHECK(same_ideal(s.ideal, ideal(c, "y1^2-x")));
  CHECK(s.exponent == 2);
  CHECK(quotient(s.ideal, ideal(c, "x")) == s.ideal);

  CHECK(same_ideal(saturate_by(ideal(c, "x^2*(y1^2-x)"), P(c, "x")), ideal(c, "y1^2-x")));
}

TEST_CASE("intersection") {
  Ring r({"x", "y"});
  CHECK(same_ideal(intersect(ideal(r, "x"), ideal(r, "y")), ideal(r, "x*y")));
  CHECK(same_ideal(intersect(ideal(r, "x^2"), ideal(r, "x*y")), ideal(r, "x^2*y")));
}

TEST_CASE("dimension") {
  Ring r({"x", "y", "z"});
  CHECK(dimension(ideal(r, "x, y, z")) == 0);
  CHECK(dimension(ideal(r, "x^5+y^2+z^2")) == 2);
  CHECK(dimension(ideal(r, "x*y, x*z")) == 2);
  CHECK(dimension(Ideal::unit(r)) == -1);
  CHECK(dimension(Ideal::zero(r)) == 3);
  CHECK(dimension(ideal(r, "x*z, x*y, x^2")) == dimension(ideal(r, "x")));
}

TEST_CASE("singular locus") {
  Ring r({"x", "y", "z"});
  Ideal s = singular_locus(ideal(r, "x^5+y^2+z^2"), 1);
  for (std::string v : {"x", "y", "z"}) CHECK(radical_membership(P(r, v), s));
  CHECK(!s.is_unit());
  CHECK(singular_locus(ideal(r, "x"), 1).is_unit());
  Ring r2({"x", "y"});
  Ideal c = singular_locus(ideal(r2, "y^2-x^3"), 1);
  CHECK(radical_membership(P(r2, "x"), c));
  CHECK(radical_membership(P(r2, "y"), c));
  CHECK_THROWS_AS(singular_locus(ideal(r2, "x"), 2), std::invalid_argument);
}

TEST_CASE("radical membership") {
  Ring r({"x", "y", "z"});
  CHECK(radical_membership(P(r, "x"), ideal(r, "x^2")));
  CHECK(!radical_membership(P(r, "y"), ideal(r, "x^2")));
  CHECK(radical_membership(P(r, "x"), ideal(r, "x^4, y, z, x^5+y^2+z^2")));
}

TEST_CASE("zero-dimensional radicals and point counts") {
  Ring r({"x", "y"});
  CHECK(point_count(ideal(r, "x^2, y^3")) == 1);
  CHECK(point_count(ideal(r, "x^2-1, y^2-2")) == 4);
  CHECK(point_count(ideal(r, "x^2+1, y-x")) == 2);
  CHECK(point_count(ideal(r, "(x^2-1)^2, y")) == 2);
  CHECK(point_count(Ideal::unit(r)) == 0);
  CHECK(vector_space_dim(ideal(r, "x^2, y^3")) == 6);
}

TEST_CASE("exact division and gcd") {
  Ring r({"x", "y"});
  CHECK(exact_divide(P(r, "x^2-y^2"), P(r, "x-y")) == P(r, "x+y"));
  CHECK_THROWS_AS(exact_divide(P(r, "x^2+y"), P(r, "x")), std::invalid_argument);
  CHECK(divisibility_order(P(r, "x^3*y+x^4"), P(r, "x")) == 3);
  CHECK(poly_gcd(P(r, "x^2*y-x*y^2"), P(r, "x^3-x*y^2")) == P(r, "x^2-x*y"));
  CHECK(poly_gcd(P(r, "x+1"), P(r, "y+1")) == Poly(r, 1));
  CHECK(poly_gcd(P(r, "x^2*y"), P(r, "x*y^3")) == P(r, "x*y"));
}

TEST_CASE("determinant") {
  Ring r({"x", "y"});
  std::vector<std::vector<Poly>> m = {{P(r, "x"), P(r, "y")}, {P(r, "1"), P(r, "x")}};
  CHECK(determinant(m, r) == P(r, "x^2-y"));
}

TEST_CASE("univariate factorisation") {
  auto f = factor_univariate(U({1, 0, 1}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].factor.degree() == 2);

  f = factor_univariate(U({-1, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].factor.degree() == 1);
  CHECK(f.factors[1].factor.degree() == 1);

  f = factor_univariate(U({1, 1, 1, 1, 1}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].factor.degree() == 4);

  // (x^2+1)(x^2+2) has no rational roots but splits
  UPoly q = U({1, 0, 1}) * U({2, 0, 1});
  f = factor_univariate(q);
  CHECK(f.factors.size() == 2);
  CHECK(expand(f) == q);

  UPoly r = U({3}) * U({-1, 1}).pow(3) * U({1, 0, 1}).pow(2) * U({1, 1, 0, 1});
  f = factor_univariate(r);
  CHECK(expand(f) == r);
  CHECK(f.unit == 3);
  CHECK_THROWS(factor_univariate(UPoly()));
}

TEST_CASE("rational functions") {
  RationalFunction a(U({6, 1}), U({6, 11, 5}));
  CHECK(a.to_string() == "(s+6)/(5*s^2+11*s+6)");
  RationalFunction b(U({2, 2}), U({4, 4}));
  CHECK(b.to_string() == "1/2");
  CHECK((a - a) == RationalFunction(0));
  CHECK((a / a) == RationalFunction(1));
  RationalFunction c = RationalFunction(U({1}), U({1, 1})) + RationalFunction(U({1}), U({-1, 1}));
  CHECK(c.to_string() == "(2*s)/(s^2-1)");
}
