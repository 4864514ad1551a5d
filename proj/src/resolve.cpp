#include "resol/resolve.hpp"

#include "resol/errors.hpp"
#include "resol/geometry.hpp"
#include "resol/upoly.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace resol {

using json = nlohmann::json;

// ---------------------------------------------------------------- ChartTree

bool label_less(const std::string& a, const std::string& b) {
  auto parts = [](const std::string& s) {
    std::vector<long> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '.')) v.push_back(std::stol(item));
    return v;
  };
  return parts(a) < parts(b);
}

const Chart& ChartTree::at(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("no chart " + id);
  return charts_[it->second];
}

std::vector<const Chart*> ChartTree::children(const std::string& id) const {
  std::vector<const Chart*> out;
  for (const auto& c : charts_)
    if (c.parent && *c.parent == id) out.push_back(&c);
  return out;
}

std::vector<const Chart*> ChartTree::finals() const {
  std::vector<const Chart*> out;
  for (const auto& c : charts_)
    if (c.final) out.push_back(&c);
  return out;
}

void ChartTree::add(Chart c) {
  if (index_.count(c.id)) throw std::invalid_argument("duplicate chart " + c.id);
  if (c.parent && !index_.count(*c.parent)) throw std::invalid_argument("chart " + c.id + " added before its parent");
  index_[c.id] = charts_.size();
  charts_.push_back(std::move(c));
}

std::vector<const Chart*> ChartTree::kept() const {
  std::vector<const Chart*> out;
  for (const auto& c : charts_)
    if (!c.discarded) out.push_back(&c);
  return out;
}

void ChartTree::set_final(const std::string& id, bool final) { charts_.at(index_.at(id)).final = final; }

void ChartTree::set_discarded(const std::string& id, bool discarded) {
  charts_.at(index_.at(id)).discarded = discarded;
}

CenterStrategy CenterStrategy::parse_script(const std::string& text) {
  CenterStrategy s = scripted({});
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string v) {
    auto b = v.find_first_not_of(" \t\r");
    auto e = v.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  while (std::getline(ss, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("script line " + std::to_string(lineno) + ": missing ':'");
    std::string label = trim(line.substr(0, colon));
    std::string rest = trim(line.substr(colon + 1));
    if (label.empty() || rest.empty()) throw InputError("script line " + std::to_string(lineno) + ": empty field");
    if (rest == "discard") {
      s.discard.insert(label);
      continue;
    }
    std::vector<std::string> gens;
    std::stringstream gs(rest);
    std::string g;
    while (std::getline(gs, g, ',')) gens.push_back(trim(g));
    s.centers[label] = gens;
  }
  return s;
}

CenterStrategy CenterStrategy::load_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_script(ss.str());
}

void ChartTree::remove_leaf(const std::string& id) {
  if (!children(id).empty()) throw std::invalid_argument("chart " + id + " has children");
  charts_.erase(charts_.begin() + static_cast<long>(index_.at(id)));
  reindex();
}

void ChartTree::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < charts_.size(); ++i) index_[charts_[i].id] = i;
}

// ---------------------------------------------------------------- SNC test

namespace {

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      visit(cur);
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

// Locus where the chosen components fail to meet transversally (for more
// components than variables: where they meet at all).
Ideal contact_locus(const Ring& ring, const std::vector<Poly>& g) {
  if (g.size() > ring.size()) return Ideal(ring, g);
  return singular_locus(Ideal(ring, g), static_cast<int>(g.size()));
}

std::vector<Poly> component_generators(const Chart& c) {
  std::vector<Poly> g;
  for (const auto& I : visible_components(c)) g.push_back(I.principal_generator());
  return g;
}

// Generators of a center ordered by decreasing leading term (x, y, z for the
// origin of K[x,y,z]).
Ideal ordered(const Ideal& I) {
  std::vector<Poly> g;
  for (const auto& p : I.basis()) g.push_back(p.primitive());
  std::reverse(g.begin(), g.end());
  return Ideal(I.ring(), std::move(g));
}

Ideal prime_point_component(const Ideal& rad) {
  const Ring& ring = rad.ring();
  const long long count = vector_space_dim(rad);
  Ring ext = ring.extended({"u_sep"});
  for (long c = 1; c < 50; ++c) {
    Poly ell(ring);
    Rational w = 1;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      ell += Poly::variable(ring, i) * w;
      w *= c;
    }
    Ideal J = rad.embed(ext).with(Poly::variable(ext, ring.size()) - ell.embed(ext));
    Poly q = univariate_eliminant(J, ring.size());
    UPoly uq = to_upoly(q, ring.size());
    if (uq.degree() != count) continue;
    auto fac = factor_univariate(uq);
    if (fac.factors.size() == 1) return ordered(rad);
    std::vector<UPoly> parts;
    for (const auto& f : fac.factors) parts.push_back(f.factor);
    std::sort(parts.begin(), parts.end(), [](const UPoly& a, const UPoly& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a.to_string("u") < b.to_string("u");
    });
    Poly p_ell = from_upoly(parts.front(), ext, ring.size());
    std::vector<Poly> img;
    for (std::size_t i = 0; i < ring.size(); ++i) img.push_back(Poly::variable(ring, i));
    img.push_back(ell);
    return ordered(rad.with(p_ell.substitute(img, ring)));
  }
  throw StrategyError("no separating linear form for a zero-dimensional center");
}

}  // namespace

bool is_final(const Chart& c) {
  const auto g = component_generators(c);
  for (std::size_t k = 1; k <= g.size(); ++k) {
    bool ok = true;
    subsets(g.size(), k, [&](const std::vector<std::size_t>& s) {
      if (!ok) return;
      std::vector<Poly> sel;
      for (auto i : s) sel.push_back(g[i]);
      if (!contact_locus(c.ring, sel).is_unit()) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

Ideal smooth_center_in(const Ideal& locus) {
  if (locus.is_unit()) throw StrategyError("empty locus has no center");
  const int d = dimension(locus);
  const int n = static_cast<int>(locus.ring().size());
  if (d == 0) return prime_point_component(radical_zero_dim(locus));
  if (d >= n) throw StrategyError("locus is the whole chart");
  const int codim = n - d;
  std::vector<Poly> g = locus.basis();
  if (static_cast<int>(g.size()) < codim) throw StrategyError("locus has too few generators");
  Ideal clean(locus.ring(), g);
  Ideal sing = singular_locus(clean, codim);
  if (sing.is_unit()) {
    Ideal ord = ordered(clean);
    std::optional<Ideal> best;
    subsets(ord.generators().size(), static_cast<std::size_t>(codim), [&](const std::vector<std::size_t>& s) {
      if (best) return;
      std::vector<Poly> sel;
      for (auto i : s) sel.push_back(ord.generators()[i]);
      Ideal cand(locus.ring(), sel);
      if (cand.contains(clean)) best = cand;
    });
    return best ? *best : ord;
  }
  if (sing == clean) throw StrategyError("singular locus does not shrink: " + clean.to_string());
  return smooth_center_in(sing);
}

Ideal default_center(const Chart& c) {
  if (!c.strict.is_unit()) {
    Ideal s = singular_locus(c.strict, 1);
    if (!s.is_unit()) return smooth_center_in(s);
  }
  const auto g = component_generators(c);
  std::optional<Ideal> worst;
  int worst_dim = -1;
  for (std::size_t k = 1; k <= g.size(); ++k)
    subsets(g.size(), k, [&](const std::vector<std::size_t>& s) {
      std::vector<Poly> sel;
      for (auto i : s) sel.push_back(g[i]);
      Ideal bad = contact_locus(c.ring, sel);
      if (bad.is_unit()) return;
      int d = dimension(bad);
      if (d > worst_dim) {
        worst_dim = d;
        worst = bad;
      }
    });
  if (!worst) throw std::logic_error("default_center called on final chart " + c.id);
  return smooth_center_in(*worst);
}

void validate_center(const Chart& c, const Ideal& center) {
  if (center.is_zero() || center.is_unit()) throw StrategyError("center in chart " + c.id + " is not proper");
  const int n = static_cast<int>(c.ring.size());
  const int codim = n - dimension(center);
  if (codim < 1 || static_cast<int>(center.generators().size()) < codim)
    throw StrategyError("center in chart " + c.id + " has inconsistent generators");
  if (!singular_locus(center, codim).is_unit())
    throw StrategyError("center " + center.to_string() + " in chart " + c.id + " is singular");
}

// ---------------------------------------------------------------- driver

namespace {

struct Expansion {
  bool final = false;
  bool discarded = false;
  std::vector<Chart> children;
  bool over_depth = false;
};

Expansion expand(const Chart& c, const CenterStrategy& s, const ResolutionLimits& lim) {
  Expansion out;
  std::optional<Ideal> center;
  auto it = s.centers.find(c.id);
  if (s.kind == CenterStrategy::Kind::Scripted && it != s.centers.end()) {
    std::vector<Poly> gens;
    for (const auto& text : it->second) gens.push_back(parse_poly(text, c.ring));
    center = Ideal(c.ring, gens);
    validate_center(c, *center);
  } else if (is_final(c)) {
    out.final = true;
    out.discarded = s.discard.count(c.id) > 0;
    return out;
  }
  if (s.discard.count(c.id)) throw StrategyError("chart " + c.id + " is not final and cannot be discarded");
  if (c.depth >= lim.max_depth) {
    out.over_depth = true;
    return out;
  }
  if (!center) center = default_center(c);
  out.children = blow_up_chart(c, *center).charts;
  return out;
}

void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  std::vector<std::exception_ptr> errors(count);
  auto guarded = [&](std::size_t i) {
    try {
      task(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, static_cast<int>(count)); ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < count;) guarded(i);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void check_input(const Ideal& I) {
  const std::size_t n = I.ring().size();
  if (n < 2 || n > 3) throw std::invalid_argument("resolve: only 2 or 3 variables are supported");
  if (!I.is_principal() || I.is_zero() || I.is_unit())
    throw std::invalid_argument("resolve: input must be a non-constant principal ideal");
  if (dimension(singular_locus(I, 1)) > static_cast<int>(n) - 2)
    throw std::invalid_argument("resolve: input hypersurface is not reduced");
}

// Every intersection of the strict transform with an exceptional divisor seen
// in a discarded chart must lie in some kept final chart.
void check_discards(const ChartTree& tree) {
  std::vector<const Chart*> kept_finals;
  for (const auto* c : tree.finals())
    if (!c->discarded) kept_finals.push_back(c);
  for (const auto* a : tree.finals()) {
    if (!a->discarded) continue;
    std::vector<Poly> cover;
    for (const auto* b : kept_finals) cover.push_back(overlap_denominator(*a, *b));
    for (std::size_t k = 0; k < a->exceptional.size(); ++k) {
      if (!a->visible(k) || a->strict.is_unit()) continue;
      Ideal meet = a->strict + a->exceptional[k] + Ideal(a->ring, cover);
      if (!meet.is_unit()) throw StrategyError("discarded chart " + a->id + " holds data seen nowhere else");
    }
  }
}

}  // namespace

ChartTree resolve(const Ideal& I, const CenterStrategy& s, const ResolutionLimits& lim, int jobs) {
  check_input(I);
  ChartTree tree(Ideal(I.ring(), {I.principal_generator()}), s.name());
  tree.add(Chart::root(tree.input()));
  std::vector<std::string> level{tree.root().id};
  while (!level.empty()) {
    std::vector<Chart> parents;
    for (const auto& id : level) parents.push_back(tree.at(id));
    std::vector<Expansion> results(parents.size());
    run_parallel(parents.size(), jobs, [&](std::size_t i) { results[i] = expand(parents[i], s, lim); });
    std::vector<std::string> next;
    for (std::size_t i = 0; i < parents.size(); ++i) {
      if (results[i].over_depth)
        throw LimitExceeded("depth limit " + std::to_string(lim.max_depth) + " reached in chart " + parents[i].id, tree);
      if (results[i].final) tree.set_final(parents[i].id, true);
      if (results[i].discarded) tree.set_discarded(parents[i].id, true);
      for (auto& ch : results[i].children) {
        next.push_back(ch.id);
        tree.add(std::move(ch));
        if (static_cast<int>(tree.size()) > lim.max_charts)
          throw LimitExceeded("chart limit " + std::to_string(lim.max_charts) + " exceeded", tree);
      }
    }
    level = std::move(next);
  }
  for (const auto& id : s.discard)
    if (!tree.contains(id)) throw StrategyError("discarded chart " + id + " does not exist");
  check_discards(tree);
  return tree;
}

ChartTree prune(const ChartTree& t) {
  std::vector<const Chart*> finals = t.finals();
  std::sort(finals.begin(), finals.end(), [](const Chart* a, const Chart* b) { return label_less(b->id, a->id); });
  std::set<std::string> retained;
  for (const auto* c : finals) retained.insert(c->id);
  std::vector<std::string> dropped;
  for (const auto* a : finals) {
    std::vector<Poly> cover;
    for (const auto* b : finals)
      if (b != a && retained.count(b->id)) cover.push_back(overlap_denominator(*a, *b));
    bool covered = true;
    for (const auto& comp : visible_components(*a)) {
      Ideal uncovered = comp + Ideal(a->ring, cover);
      if (!uncovered.is_unit()) {
        covered = false;
        break;
      }
    }
    if (covered) {
      retained.erase(a->id);
      dropped.push_back(a->id);
    }
  }
  ChartTree out = t;
  for (const auto& id : dropped) out.remove_leaf(id);
  return out;
}

// ---------------------------------------------------------------- JSON

namespace {

constexpr int kSchemaVersion = 1;

json polys(const std::vector<Poly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

std::vector<Poly> read_polys(const json& a, const Ring& ring) {
  std::vector<Poly> out;
  for (const auto& s : a) out.push_back(parse_poly(s.get<std::string>(), ring));
  return out;
}

json chart_json(const Chart& c) {
  json j;
  j["id"] = c.id;
  j["parent"] = c.parent ? json(*c.parent) : json(nullptr);
  j["chart_index"] = c.chart_index;
  j["depth"] = c.depth;
  j["vars"] = c.ring.vars();
  j["ambient"] = polys(c.ambient.generators());
  j["strict"] = polys(c.strict.generators());
  json ex = json::array();
  for (const auto& e : c.exceptional) ex.push_back(e.is_unit() ? json("1") : polys(e.generators()));
  j["exceptional"] = ex;
  j["center_in_parent"] = c.center_in_parent ? polys(c.center_in_parent->generators()) : json(nullptr);
  j["map_to_root"] = polys(c.map_to_root.images);
  j["map_from_parent"] = polys(c.from_parent.images);
  json inv = json::array();
  for (const auto& f : c.inverse_to_root) inv.push_back({f.num.to_string(), f.den.to_string()});
  j["inverse"] = inv;
  j["final"] = c.final;
  j["discarded"] = c.discarded;
  return j;
}

}  // namespace

std::string to_json(const ChartTree& t) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["ring"] = {{"vars", t.ring().vars()}};
  j["input"] = {{"generators", polys(t.input().generators())}};
  j["strategy"] = t.strategy();
  json charts = json::array();
  for (const auto& c : t.charts()) charts.push_back(chart_json(c));
  j["charts"] = charts;
  return j.dump(2);
}

ChartTree from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
      throw SchemaError("unsupported chart-tree schema version");
    Ring root_ring(j.at("ring").at("vars").get<std::vector<std::string>>());
    Ideal input(root_ring, read_polys(j.at("input").at("generators"), root_ring));
    ChartTree tree(input, j.at("strategy").get<std::string>());
    for (const auto& cj : j.at("charts")) {
      Chart c;
      c.id = cj.at("id").get<std::string>();
      if (!cj.at("parent").is_null()) c.parent = cj["parent"].get<std::string>();
      c.chart_index = cj.at("chart_index").get<int>();
      c.depth = cj.value("depth", 0);
      c.ring = Ring(cj.at("vars").get<std::vector<std::string>>());
      c.ambient = Ideal(c.ring, read_polys(cj.at("ambient"), c.ring));
      c.strict = Ideal(c.ring, read_polys(cj.at("strict"), c.ring));
      for (const auto& e : cj.at("exceptional")) {
        if (e.is_string()) c.exceptional.push_back(Ideal::unit(c.ring));
        else c.exceptional.push_back(Ideal(c.ring, read_polys(e, c.ring)));
      }
      c.map_to_root = ChartMap{c.ring, root_ring, read_polys(cj.at("map_to_root"), c.ring)};
      if (c.map_to_root.images.size() != root_ring.size()) throw SchemaError("chart " + c.id + ": bad map_to_root");
      if (c.parent) {
        const Chart& p = tree.at(*c.parent);
        c.center_in_parent = Ideal(p.ring, read_polys(cj.at("center_in_parent"), p.ring));
        c.from_parent = ChartMap{c.ring, p.ring, read_polys(cj.at("map_from_parent"), c.ring)};
      } else {
        c.from_parent = ChartMap::identity(c.ring);
      }
      for (const auto& f : cj.at("inverse"))
        c.inverse_to_root.push_back({parse_poly(f.at(0).get<std::string>(), root_ring), parse_poly(f.at(1).get<std::string>(), root_ring)});
      if (c.inverse_to_root.size() != c.ring.size()) throw SchemaError("chart " + c.id + ": bad inverse");
      c.final = cj.at("final").get<bool>();
      c.discarded = cj.value("discarded", false);
      tree.add(std::move(c));
    }
    if (tree.size() == 0) throw SchemaError("chart tree without charts");
    return tree;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed chart tree: ") + e.what());
  } catch (const ParseError& e) {
    throw SchemaError(std::string("malformed polynomial in chart tree: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw SchemaError(std::string("inconsistent chart tree: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("inconsistent chart tree: ") + e.what());
  }
}

void save(const ChartTree& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << to_json(t) << "\n";
}

ChartTree load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace resol
