#include "resol/divisors.hpp"

#include "resol/curves.hpp"
#include "resol/geometry.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace resol {

namespace {

Slot descend(const ChartTree& t, Slot s) {
  for (;;) {
    const Chart& c = t.at(s.chart);
    if (!c.visible(s.index)) throw std::invalid_argument("slot " + s.chart + "[" + std::to_string(s.index) + "] is not visible");
    if (c.final) return s;
    const Chart* next = nullptr;
    for (const auto* ch : t.children(c.id))
      if (ch->visible(s.index)) {
        next = ch;
        break;
      }
    if (!next) throw std::logic_error("divisor of chart " + c.id + " is visible in no child");
    s.chart = next->id;
  }
}

// The generic point of the divisor in A lies in B, and the divisor of B
// vanishes there.
bool same_valuation(const Chart& a, std::size_t ka, const Chart& b, std::size_t kb, const std::vector<Fraction>& t_ab) {
  const Poly ea = a.exceptional_generator(ka);
  for (const auto& f : t_ab)
    if (!f.den.is_constant() && divisibility_order(f.den, ea) > 0) return false;
  Fraction g = compose_fraction(Fraction::of(b.exceptional_generator(kb)), t_ab, a.ring);
  return !g.num.is_zero() && !g.num.is_constant() && divisibility_order(g.num, ea) > 0;
}

struct UnionFind {
  std::vector<std::size_t> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  std::size_t find(std::size_t i) { return up[i] == i ? i : up[i] = find(up[i]); }
  void unite(std::size_t a, std::size_t b) { up[find(a)] = find(b); }
};

const Chart& ancestor_at_depth(const ChartTree& t, const Chart& c, int depth) {
  const Chart* p = &c;
  while (p->depth > depth) p = &t.at(*p->parent);
  return *p;
}

std::vector<const Chart*> prefix(const std::vector<const Chart*>& cs, std::size_t n) {
  return {cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(n)};
}

int center_components(const ChartTree& t, const DivisorTable::Birth& b) {
  std::vector<const Chart*> parents;
  for (const auto& id : b.parents) parents.push_back(&t.at(id));
  const int dim = dimension(b.centers.front());
  long long n = 0;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    auto out = outside_of(*parents[i], prefix(parents, i));
    if (dim == 0) {
      n += points_on(b.centers[i], out);
    } else if (dim == 1) {
      for (const auto& p : curve_pieces(b.centers[i]))
        if (inside(p.ideal, out)) n += p.c_components;
    } else {
      return 1;
    }
  }
  return static_cast<int>(n);
}

}  // namespace

const std::vector<int>& DivisorTable::row(const std::string& chart) const {
  auto it = std::find(charts.begin(), charts.end(), chart);
  if (it == charts.end()) throw std::out_of_range("no chart " + chart + " in divisor table");
  return rows[static_cast<std::size_t>(it - charts.begin())];
}

int DivisorTable::label(const std::string& chart, std::size_t index) const {
  const auto& r = row(chart);
  return index < r.size() ? r[index] : 0;
}

int DivisorTable::slot_of(const std::string& chart, int label) const {
  const auto& r = row(chart);
  auto it = std::find(r.begin(), r.end(), label);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

bool same_divisor(const ChartTree& t, const Slot& a, const Slot& b) {
  if (a.chart == b.chart && a.index == b.index) return true;
  Slot fa = descend(t, a), fb = descend(t, b);
  if (fa.chart == fb.chart) return fa.index == fb.index;
  const Chart& ca = t.at(fa.chart);
  const Chart& cb = t.at(fb.chart);
  return same_valuation(ca, fa.index, cb, fb.index, transition(ca, cb));
}

DivisorTable collect_divisors(const ChartTree& t) {
  const auto finals = t.finals();
  std::vector<Slot> pieces;
  for (const auto* c : finals)
    for (std::size_t k = 0; k < c->exceptional.size(); ++k)
      if (c->visible(k)) pieces.push_back({c->id, k});

  std::map<std::pair<std::string, std::string>, std::vector<Fraction>> transitions;
  auto trans = [&](const Chart& a, const Chart& b) -> const std::vector<Fraction>& {
    auto key = std::make_pair(a.id, b.id);
    auto it = transitions.find(key);
    if (it == transitions.end()) it = transitions.emplace(key, transition(a, b)).first;
    return it->second;
  };

  UnionFind uf(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (pieces[i].chart == pieces[j].chart || uf.find(i) == uf.find(j)) continue;
      const Chart& a = t.at(pieces[i].chart);
      const Chart& b = t.at(pieces[j].chart);
      if (same_valuation(a, pieces[i].index, b, pieces[j].index, trans(a, b))) uf.unite(i, j);
    }

  // group data: birth level and birth charts
  std::map<std::size_t, DivisorTable::Birth> groups;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Chart& c = t.at(pieces[i].chart);
    const int level = static_cast<int>(pieces[i].index);
    const Chart& parent = ancestor_at_depth(t, c, level);
    auto& g = groups[uf.find(i)];
    if (g.parents.empty() || level < g.level) g.level = level;
    if (std::find(g.parents.begin(), g.parents.end(), parent.id) == g.parents.end()) g.parents.push_back(parent.id);
  }
  std::map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < t.charts().size(); ++i) order[t.charts()[i].id] = i;
  std::vector<std::pair<std::size_t, DivisorTable::Birth>> sorted(groups.begin(), groups.end());
  for (auto& [root, b] : sorted)
    std::sort(b.parents.begin(), b.parents.end(), [&](const auto& x, const auto& y) { return order[x] < order[y]; });
  std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
    if (x.second.level != y.second.level) return x.second.level < y.second.level;
    return order[x.second.parents.front()] < order[y.second.parents.front()];
  });
  std::map<std::size_t, int> label_of_root;
  DivisorTable d;
  for (auto& [root, b] : sorted) {
    label_of_root[root] = ++d.divisor_count;
    for (const auto& p : b.parents) b.centers.push_back(*t.children(p).front()->center_in_parent);
    d.births.push_back(b);
  }

  std::map<std::pair<std::string, std::size_t>, int> piece_label;
  for (std::size_t i = 0; i < pieces.size(); ++i) piece_label[{pieces[i].chart, pieces[i].index}] = label_of_root[uf.find(i)];
  for (const auto& c : t.charts()) {
    d.charts.push_back(c.id);
    std::vector<int> row(c.exceptional.size(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!c.visible(k)) continue;
      Slot f = descend(t, {c.id, k});
      row[k] = piece_label.at({f.chart, f.index});
    }
    d.rows.push_back(std::move(row));
  }
  for (const auto& b : d.births) d.c_components.push_back(center_components(t, b));
  return d;
}

std::vector<const Chart*> AbstractResolution::final_charts(const ChartTree& t) const {
  std::vector<const Chart*> out;
  for (std::size_t i = 0; i < t.charts().size(); ++i)
    if (final[i]) out.push_back(&t.charts()[i]);
  return out;
}

AbstractResolution abstract_resolution(const ChartTree& t) {
  const auto& cs = t.charts();
  std::map<std::string, std::size_t> index;
  AbstractResolution a;
  std::vector<bool> smooth(cs.size()), below_smooth(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Chart& c = cs[i];
    index[c.id] = i;
    smooth[i] = c.strict.is_unit() || singular_locus(c.strict, 1).is_unit();
    bool irrelevant = false;
    if (c.parent) {
      std::size_t p = index.at(*c.parent);
      below_smooth[i] = smooth[p] || below_smooth[p];
      irrelevant = a.final[p] || a.irrelevant[p];
    }
    a.final.push_back(smooth[i] && !below_smooth[i]);
    a.irrelevant.push_back(irrelevant);
  }
  return a;
}

int count_c_components(const ChartTree& t, const DivisorTable& d, int label, bool restricted_to_strict) {
  if (label < 1 || label > d.divisor_count) throw std::out_of_range("no divisor " + std::to_string(label));
  if (!restricted_to_strict) return d.c_components[static_cast<std::size_t>(label - 1)];
  const auto finals = t.finals();
  long long n = 0;
  for (std::size_t i = 0; i < finals.size(); ++i) {
    const Chart& c = *finals[i];
    const int k = d.slot_of(c.id, label);
    if (k < 0 || c.strict.is_unit()) continue;
    Ideal meet = c.strict + c.exceptional[static_cast<std::size_t>(k)];
    if (meet.is_unit()) continue;
    auto out = outside_of(c, prefix(finals, i));
    if (dimension(meet) == 0) {
      n += points_on(meet, out);
    } else {
      for (const auto& p : curve_pieces(meet))
        if (inside(p.ideal, out)) n += p.c_components;
    }
  }
  return static_cast<int>(n);
}

std::string divisors_json(const DivisorTable& d) {
  nlohmann::ordered_json j;
  j["count"] = d.divisor_count;
  nlohmann::ordered_json rows = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < d.charts.size(); ++i) rows[d.charts[i]] = d.rows[i];
  j["rows"] = rows;
  j["c_components"] = d.c_components;
  nlohmann::ordered_json births = nlohmann::ordered_json::array();
  for (const auto& b : d.births) {
    nlohmann::ordered_json e;
    e["level"] = b.level;
    e["parents"] = b.parents;
    std::vector<std::string> centers;
    for (const auto& c : b.centers) centers.push_back(c.to_string());
    e["centers"] = centers;
    births.push_back(e);
  }
  j["births"] = births;
  return j.dump(2);
}

}  // namespace resol
