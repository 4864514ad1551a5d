#include "doctest.h"

#include "resol/blowup.hpp"

#include <random>
#include <set>

using namespace resol;

namespace {

Poly P(const Ring& r, const std::string& s) { return parse_poly(s, r); }
Ideal ideal(const Ring& r, const std::string& gens) { return Ideal(r, parse_poly_list(gens, r)); }
bool same_ideal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

const Chart& child(const BlowupResult& b, int i) { return b.charts.at(static_cast<std::size_t>(i)); }

Chart blow(const Chart& c, const std::string& center, int patch) {
  return child(blow_up_chart(c, ideal(c.ring, center)), patch);
}

// Randomised check that child.map_to_root == parent.map_to_root o child.from_parent
void check_composition(const Chart& parent, const Chart& ch) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < ch.ring.size(); ++i) pt.push_back(d(rng));
    std::vector<Rational> mid;
    for (const auto& p : ch.from_parent.images) mid.push_back(p.evaluate(pt));
    for (std::size_t k = 0; k < ch.map_to_root.images.size(); ++k)
      CHECK(ch.map_to_root.images[k].evaluate(pt) == parent.map_to_root.images[k].evaluate(mid));
  }
}

}  // namespace

TEST_CASE("rees kernel") {
  Ring r({"x", "y"});
  Ideal k = rees_kernel(Ideal::zero(r), ideal(r, "x, y"));
  Ring ry({"x", "y", "y0", "y1"});
  CHECK(k.ring() == ry);
  CHECK(same_ideal(k, ideal(ry, "x*y1-y*y0")));

  Ideal k1 = rees_kernel(Ideal::zero(r), ideal(r, "x"));
  CHECK(k1.is_zero());
  CHECK(k1.ring().size() == 3);

  Ring r3({"x", "y", "z"});
  Ideal k3 = rees_kernel(Ideal::zero(r3), ideal(r3, "x, y, z"));
  Ring r3y({"x", "y", "z", "y0", "y1", "y2"});
  CHECK(same_ideal(k3, ideal(r3y, "x*y1-y*y0, x*y2-z*y0, y*y2-z*y1")));
  // homogeneous in the y-variables
  for (const auto& g : k3.basis()) {
    std::set<int> degs;
    for (const auto& [e, c] : g.terms()) degs.insert(e[3] + e[4] + e[5]);
    CHECK(degs.size() == 1);
  }
  CHECK_THROWS(rees_kernel(Ideal::zero(r), Ideal::unit(r)));
}

TEST_CASE("cusp blow-up and transforms") {
  Ring r({"x", "y"});
  Chart root = Chart::root(ideal(r, "y^2-x^3"));
  BlowupResult b = blow_up_chart(root, ideal(r, "x, y"));
  REQUIRE(b.charts.size() == 2);
  const Chart& c0 = child(b, 0);
  CHECK(c0.id == "0.0");
  CHECK(c0.ring.vars() == std::vector<std::string>{"x", "x1_1"});
  // y -> x*y1
  CHECK(c0.from_parent.images[0] == P(c0.ring, "x"));
  CHECK(c0.from_parent.images[1] == P(c0.ring, "x*x1_1"));

  Ideal total = total_transform(c0, root.strict);
  CHECK(same_ideal(total, ideal(c0.ring, "x^2*(x1_1^2-x)")));
  auto s = strict_transform(c0, root.strict);
  CHECK(same_ideal(s.ideal, ideal(c0.ring, "x1_1^2-x")));
  CHECK(s.exponent == 2);
  CHECK(same_ideal(weak_transform(c0, root.strict), s.ideal));
  CHECK(same_ideal(c0.strict, s.ideal));
  CHECK(c0.exceptional.size() == 1);
  CHECK(same_ideal(c0.exceptional[0], ideal(c0.ring, "x")));

  CHECK(total_transform(c0, Ideal::unit(r)).is_unit());
  CHECK(weak_transform(c0, Ideal::unit(r)).is_unit());

  CHECK(jacobian_det_of_map(c0.map_to_root) == P(c0.ring, "x"));
  CHECK(jacobian_det_of_map(root.map_to_root) == Poly(r, 1));
  check_composition(root, c0);
}

TEST_CASE("smooth curve strict transform") {
  Ring r({"x", "y"});
  Chart root = Chart::root(ideal(r, "x"));
  Chart c1 = blow(root, "x, y", 1);
  // x -> y*x1_0
  CHECK(c1.from_parent.images[0] == P(c1.ring, "y*x1_0"));
  auto s = strict_transform(c1, root.strict);
  CHECK(same_ideal(s.ideal, ideal(c1.ring, "x1_0")));
  CHECK(s.exponent == 1);
}

TEST_CASE("A1 transforms") {
  Ring r({"x", "y", "z"});
  Chart root = Chart::root(ideal(r, "x^2+y^2+z^2"));
  Chart c2 = blow(root, "x, y, z", 2);
  CHECK(c2.from_parent.images[0] == P(c2.ring, "z*x1_0"));
  CHECK(c2.from_parent.images[1] == P(c2.ring, "z*x1_1"));
  CHECK(same_ideal(total_transform(c2, root.strict), ideal(c2.ring, "z^2*(x1_0^2+x1_1^2+1)")));
  auto s = strict_transform(c2, root.strict);
  CHECK(same_ideal(s.ideal, ideal(c2.ring, "x1_0^2+x1_1^2+1")));
  CHECK(s.exponent == 2);
  CHECK(same_ideal(weak_transform(c2, root.strict), s.ideal));
}

TEST_CASE("principal center gives one isomorphic chart") {
  Ring r({"x", "y"});
  Chart root = Chart::root(ideal(r, "y^2-x^3"));
  BlowupResult b = blow_up_chart(root, ideal(r, "x"));
  REQUIRE(b.charts.size() == 1);
  CHECK(b.charts[0].ring == r);
  CHECK(b.charts[0].ambient.is_zero());
  CHECK(same_ideal(b.charts[0].exceptional[0], ideal(r, "x")));
}

TEST_CASE("linear centers are straightened") {
  Ring r({"x", "y"});
  Chart root = Chart::root(ideal(r, "y^2-x^3"));
  // the point (1, 1) is not on the curve, but the blow-up is still defined
  BlowupResult b = blow_up_chart(root, ideal(r, "x-1, y-1"));
  for (const auto& c : b.charts) {
    CHECK(c.exceptional.back().principal_generator().as_variable() >= 0);
    CHECK(std::abs(jacobian_det_of_map(c.map_to_root).total_degree()) == 1);
    check_composition(root, c);
    // inverse really inverts the map on sample points
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < c.ring.size(); ++i) pt.push_back(Rational(static_cast<long>(i) + 3, 7));
    std::vector<Rational> img;
    for (const auto& p : c.map_to_root.images) img.push_back(p.evaluate(pt));
    for (std::size_t v = 0; v < c.ring.size(); ++v) {
      const auto& fr = c.inverse_to_root[v];
      CHECK(fr.num.evaluate(img) / fr.den.evaluate(img) == pt[v]);
    }
  }
}

TEST_CASE("A4 chart reaching the reference chart") {
  Ring r({"x", "y", "z"});
  Chart root = Chart::root(ideal(r, "x^5+y^2+z^2"));
  Chart a = blow(root, "x, y, z", 0);
  CHECK(same_ideal(a.strict, ideal(a.ring, "x^3+x1_1^2+x1_2^2")));
  Chart b = blow(a, "x, x1_1, x1_2", 0);
  CHECK(b.id == "0.0.0");
  CHECK(same_ideal(b.strict, ideal(b.ring, "x+x2_1^2+x2_2^2")));
  CHECK(b.exceptional[0].is_unit());
  Chart c = blow(b, "x, x2_1, x2_2", 2);
  CHECK(same_ideal(c.strict, ideal(c.ring, "x3_0+x2_2*x3_1^2+x2_2")));
  Chart d = blow(c, "x3_0, x2_2", 1);
  CHECK(d.id == "0.0.0.2.1");
  // hand substitution: x = c^2 y0, y = c^5 b y0^2, z = c^5 y0^2 with c = x2_2,
  // b = x3_1, y0 = x4_0
  Ring s({"x2_2", "x3_1", "x4_0"});
  REQUIRE(d.ring.size() == 3);
  std::vector<Poly> rename;
  for (const auto& v : d.ring.vars()) rename.push_back(Poly::variable(s, static_cast<std::size_t>(s.index_of(v))));
  std::vector<Poly> images;
  for (const auto& p : d.map_to_root.images) images.push_back(p.substitute(rename, s));
  CHECK(images[0] == P(s, "x2_2^2*x4_0"));
  CHECK(images[1] == P(s, "x2_2^5*x3_1*x4_0^2"));
  CHECK(images[2] == P(s, "x2_2^5*x4_0^2"));
  CHECK(same_ideal(d.strict.substitute(rename, s), ideal(s, "x3_1^2+x4_0+1")));
  REQUIRE(d.exceptional.size() == 4);
  CHECK(d.exceptional[0].is_unit());
  CHECK(same_ideal(d.exceptional[1].substitute(rename, s), ideal(s, "x4_0")));
  CHECK(d.exceptional[2].is_unit());
  CHECK(same_ideal(d.exceptional[3].substitute(rename, s), ideal(s, "x2_2")));

  Poly jac = jacobian_det_of_map(d.map_to_root).substitute(rename, s);
  CHECK(jac.is_monomial());
  CHECK(jac.monomial_content() == Exponents{11, 0, 4});

  // factorisation: f o pi = strict * prod e_i^{N_i} up to a unit
  Poly total = d.map_to_root.apply(P(r, "x^5+y^2+z^2")).substitute(rename, s);
  Poly expected = P(s, "(x3_1^2+x4_0+1)*x2_2^10*x4_0^4");
  CHECK(total == expected);
}

TEST_CASE("non-square maps are rejected") {
  Ring r({"x", "y"});
  Ring t({"x"});
  ChartMap m{r, t, {P(r, "x*y")}};
  CHECK_THROWS_AS(jacobian_det_of_map(m), std::invalid_argument);
}
