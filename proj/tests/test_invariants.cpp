#include "doctest.h"

#include "fixtures.hpp"
#include "resol/errors.hpp"
#include "resol/invariants.hpp"

#include <algorithm>
#include <numeric>

using namespace resol;

namespace {

struct Case {
  const char* input;
  const char* script;  // empty for the default strategy
};

const Case all_cases[] = {
    {"a1.txt", ""},   {"a4.txt", "a4_reference.script"}, {"a4.txt", "a4_alternative.script"},
    {"a4.txt", ""},   {"cusp.txt", "cusp.script"},       {"cusp.txt", "cusp_alternative.script"},
    {"cusp.txt", ""}, {"line.txt", ""},
};

ChartTree run(const Case& c) {
  const CenterStrategy s = *c.script ? fixtures::script(c.script) : CenterStrategy::heuristic();
  return resolve(fixtures::problem(c.input), s);
}

bool same_ideal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

std::multiset<int> without_strict(std::vector<int> v) {
  v.pop_back();
  return {v.begin(), v.end()};
}

bool permutation_equivalent(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i)
      for (std::size_t j = 0; j < a.size() && same; ++j) same = a[p[i]][p[j]] == b[i][j];
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("A4 multiplicities, discrepancies and lct") {
  ChartTree t = run(all_cases[1]);
  DivisorTable d = collect_divisors(t);
  CHECK(multiplicities_N(t, d) == std::vector<int>{2, 4, 5, 10, 1});
  CHECK(multiplicities_nu(t, d) == std::vector<int>{3, 5, 7, 12, 1});
  CHECK(discrepancies(t, d, DiscrepancyKind::Plain) == std::vector<int>{0, 0, 1, 1});
  CHECK(discrepancies(t, d, DiscrepancyKind::Log) == std::vector<int>{1, 1, 2, 2});
  CHECK(lct(t, d) == Rational(6, 5));
  CHECK(lct(t, d, true) == Rational(1));
}

TEST_CASE("cusp multiplicities match the hand-computed charts") {
  for (const char* script : {"cusp.script", "cusp_alternative.script", ""}) {
    ChartTree t = run({"cusp.txt", script});
    DivisorTable d = collect_divisors(t);
    const auto N = without_strict(multiplicities_N(t, d));
    const auto nu = without_strict(multiplicities_nu(t, d));
    for (int v : {2, 3, 6}) CHECK(N.count(v) == 1);
    for (int v : {2, 3, 5}) CHECK(nu.count(v) == 1);
    CHECK(lct(t, d) == Rational(5, 6));
  }
  ChartTree t = run({"cusp.txt", "cusp.script"});
  DivisorTable d = collect_divisors(t);
  CHECK(without_strict(multiplicities_N(t, d)) == std::multiset<int>{2, 3, 6});
  CHECK(without_strict(multiplicities_nu(t, d)) == std::multiset<int>{2, 3, 5});
}

TEST_CASE("lct without exceptional divisors is 1") {
  ChartTree t = run({"line.txt", ""});
  DivisorTable d = collect_divisors(t);
  CHECK(d.divisor_count == 0);
  CHECK(lct(t, d) == Rational(1));
  CHECK(multiplicities_N(t, d) == std::vector<int>{1});
}

TEST_CASE("f o pi and the Jacobian factor through the divisors in every chart") {
  for (const auto& c : all_cases) {
    ChartTree t = run(c);
    DivisorTable d = collect_divisors(t);
    const auto N = multiplicities_N(t, d);
    const auto nu = multiplicities_nu(t, d);
    CHECK(lct(t, d, true) <= 1);
    const Poly f = t.input().principal_generator();
    for (const auto& x : t.charts()) {
      Poly total = x.map_to_root.apply(f);
      Poly jac = jacobian_det_of_map(x.map_to_root);
      for (std::size_t k = 0; k < x.exceptional.size(); ++k) {
        if (!x.visible(k)) continue;
        const int label = d.label(x.id, k);
        const Poly e = x.exceptional_generator(k);
        for (int i = 0; i < N[static_cast<std::size_t>(label - 1)]; ++i) total = exact_divide(total, e);
        for (int i = 1; i < nu[static_cast<std::size_t>(label - 1)]; ++i) jac = exact_divide(jac, e);
      }
      CHECK_MESSAGE(same_ideal(Ideal::principal(total), x.strict), c.input, " ", x.id);
      CHECK_MESSAGE((jac.is_constant() && !jac.is_zero()), c.input, " ", x.id);
    }
  }
}

TEST_CASE("A4 intersection matrix and dual graph") {
  ChartTree t = run(all_cases[1]);
  DivisorTable d = collect_divisors(t);
  const IntersectionMatrix m = intersection_matrix(t, d);
  const std::vector<std::vector<int>> reference{{-2, 0, 1, 0}, {0, -2, 0, 1}, {1, 0, -2, 1}, {0, 1, 1, -2}};
  CHECK(permutation_equivalent(m.entries, reference));
  CHECK(m.symmetric());
  CHECK(m.negative_definite());

  // pullback of the linear form meets every exceptional curve trivially
  for (std::size_t a = 0; a < m.size(); ++a) {
    long long s = m.strict_meets[a];
    for (std::size_t b = 0; b < m.size(); ++b) s += static_cast<long long>(m.pullback[b]) * m.entries[a][b];
    CHECK(s == 0);
  }

  const DualGraph g = dual_graph(m);
  REQUIRE(g.vertices.size() == 4);
  REQUIRE(g.edges.size() == 3);
  std::vector<int> degree(4, 0);
  for (const auto& e : g.edges) {
    ++degree[e.a];
    ++degree[e.b];
  }
  std::sort(degree.begin(), degree.end());
  CHECK(degree == std::vector<int>{1, 1, 2, 2});
  for (const auto& v : g.vertices) CHECK(v.label.empty());
  const std::string dot = g.to_dot();
  CHECK(dot.rfind("graph dual {", 0) == 0);
  CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_CASE("the scripted and alternative A4 resolutions give the same matrix") {
  ChartTree t = run(all_cases[2]);
  DivisorTable d = collect_divisors(t);
  const IntersectionMatrix m = intersection_matrix(t, d);
  const std::vector<std::vector<int>> reference{{-2, 0, 1, 0}, {0, -2, 0, 1}, {1, 0, -2, 1}, {0, 1, 1, -2}};
  CHECK(permutation_equivalent(m.entries, reference));
}

TEST_CASE("A1: one blow-up, a single -2 curve") {
  ChartTree t = run(all_cases[0]);
  for (const auto* c : t.finals()) CHECK(c->depth == 1);
  DivisorTable d = collect_divisors(t);
  const IntersectionMatrix m = intersection_matrix(t, d);
  REQUIRE(m.size() == 1);
  CHECK(m.entries[0][0] == -2);
  // the pullback relation: N_E E^2 + H.E = 0 with N_E = 1
  CHECK(m.pullback[0] * m.entries[0][0] + m.strict_meets[0] == 0);
  CHECK(lct(t, d) == Rational(3, 2));
}

TEST_CASE("dual graph labels curves that are not -2") {
  IntersectionMatrix m;
  m.curves = {{1, 1}, {2, 1}, {3, 1}};
  m.entries = {{-3, 1, 0}, {1, -2, 2}, {0, 2, -1}};
  const DualGraph g = dual_graph(m);
  CHECK(g.vertices[0].label == "-3");
  CHECK(g.vertices[1].label.empty());
  const std::string dot = g.to_dot();
  CHECK(dot.find("E1_1 [label=\"-3\"]") != std::string::npos);
  CHECK(dot.find("E2_1 -- E3_1 [label=\"2\"]") != std::string::npos);
  CHECK_FALSE(m.negative_definite());
}

TEST_CASE("intersection matrix needs three variables") {
  ChartTree t = run({"cusp.txt", "cusp.script"});
  CHECK_THROWS_AS(intersection_matrix(t, collect_divisors(t)), UnsupportedShape);
}

TEST_CASE("normal-crossing Bernstein-Sato polynomial") {
  CHECK(bernstein_normal_crossing({1}) == UPoly::linear(1, 1));
  CHECK(bernstein_normal_crossing({2}) == UPoly::linear(2, 1) * UPoly::linear(2, 2));
  CHECK(bernstein_normal_crossing({1, 1}) == UPoly::linear(1, 1).pow(2));
  CHECK(bernstein_normal_crossing({}) == UPoly(Rational(1)));
  CHECK_THROWS_AS(bernstein_normal_crossing({0}), std::invalid_argument);

  const UPoly b = bernstein_normal_crossing({2, 3});
  CHECK(b.degree() == 5);
  for (int r : {2, 3})
    for (int k = 1; k <= r; ++k) CHECK(b.evaluate(Rational(-k, r)) == 0);
  CHECK(b.evaluate(Rational(-1, 4)) != 0);
}
