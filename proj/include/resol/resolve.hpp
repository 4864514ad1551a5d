#pragma once

#include "resol/blowup.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace resol {

struct ResolutionLimits {
  int max_depth = 12;
  int max_charts = 512;
};

/// Choice of centers. A scripted strategy maps chart labels to center
/// generators (text in the chart's variables); a scripted chart is blown up
/// even when it is already final. Unscripted charts use the default heuristic.
/// Discarded charts must be final; their intersections of the strict
/// transform with exceptional divisors must be visible in other kept final
/// charts. They stay in the tree, flagged, so every stratum remains covered.
struct CenterStrategy {
  enum class Kind { Default, Scripted };
  Kind kind = Kind::Default;
  std::map<std::string, std::vector<std::string>> centers;
  std::set<std::string> discard;

  static CenterStrategy heuristic() { return {}; }
  static CenterStrategy scripted(std::map<std::string, std::vector<std::string>> centers,
                                 std::set<std::string> discard = {}) {
    return {Kind::Scripted, std::move(centers), std::move(discard)};
  }
  /// Script file: one line per chart, "<label>: <generator>, <generator>..."
  /// or "<label>: discard"; '#' starts a comment.
  static CenterStrategy parse_script(const std::string& text);
  static CenterStrategy load_script(const std::string& path);
  std::string name() const { return kind == Kind::Default ? "default" : "scripted"; }
};

/// Tree of charts, stored in creation order (breadth first, patches in index
/// order), so a parent always precedes its children.
class ChartTree {
 public:
  ChartTree() = default;
  ChartTree(Ideal input, std::string strategy) : input_(std::move(input)), strategy_(std::move(strategy)) {}

  const Ideal& input() const { return input_; }
  const Ring& ring() const { return input_.ring(); }
  const std::string& strategy() const { return strategy_; }
  const std::vector<Chart>& charts() const { return charts_; }
  std::size_t size() const { return charts_.size(); }

  const Chart& root() const { return charts_.front(); }
  const Chart& at(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) > 0; }
  std::vector<const Chart*> children(const std::string& id) const;
  std::vector<const Chart*> finals() const;
  /// Charts not flagged as discarded.
  std::vector<const Chart*> kept() const;

  void add(Chart c);
  void set_final(const std::string& id, bool final);
  void set_discarded(const std::string& id, bool discarded);
  /// Remove a chart without children.
  void remove_leaf(const std::string& id);

 private:
  Ideal input_;
  std::string strategy_;
  std::vector<Chart> charts_;
  std::map<std::string, std::size_t> index_;
  void reindex();
};

/// Raised when the resolution exceeds its depth or chart budget; carries the
/// partial tree built so far.
class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(const std::string& what, ChartTree partial) : std::runtime_error(what), partial_(std::move(partial)) {}
  const ChartTree& partial() const { return partial_; }

 private:
  ChartTree partial_;
};

/// Numeric comparison of dotted chart labels ("0.10" after "0.9").
bool label_less(const std::string& a, const std::string& b);

/// Smooth strict transform meeting the visible exceptional divisors with
/// simple normal crossings: all components smooth, and every k components
/// meet transversally (for k above the dimension, not at all).
bool is_final(const Chart& c);

/// Non-singular center for a chart that is not final (StrategyError if none
/// is found). Generators are returned in the order their patches are built.
Ideal default_center(const Chart& c);

/// Reduced smooth subvariety of V(locus) used as a center: the zero-dimensional
/// case picks one Q-irreducible point, the positive-dimensional case recurses
/// into singular loci until a smooth one is reached.
Ideal smooth_center_in(const Ideal& locus);

/// Check that a center is proper and non-singular; throws StrategyError.
void validate_center(const Chart& c, const Ideal& center);

/// Resolve a reduced hypersurface in 2 or 3 variables. `jobs` > 1 expands the
/// charts of one tree level concurrently; the result does not depend on it.
ChartTree resolve(const Ideal& I, const CenterStrategy& s, const ResolutionLimits& lim = {}, int jobs = 1);

/// Drop final charts whose divisor components are covered by the retained
/// final charts, scanning from the highest label down.
ChartTree prune(const ChartTree& t);

std::string to_json(const ChartTree& t);
ChartTree from_json(const std::string& text);
void save(const ChartTree& t, const std::string& path);
ChartTree load(const std::string& path);

}  // namespace resol
