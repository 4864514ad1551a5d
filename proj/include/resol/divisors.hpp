#pragma once

#include "resol/resolve.hpp"

#include <string>
#include <vector>

namespace resol {

/// Local exceptional divisor: a chart and a position in its exceptional list.
struct Slot {
  std::string chart;
  std::size_t index = 0;
};

/// Global labels of the exceptional divisors of a chart tree.
struct DivisorTable {
  struct Birth {
    int level = 0;                     // depth of the charts blown up
    std::vector<std::string> parents;  // charts whose blow-up created it
    std::vector<Ideal> centers;        // center in each parent
  };

  std::vector<std::string> charts;    // tree order
  std::vector<std::vector<int>> rows;  // per chart, per slot: label or 0
  int divisor_count = 0;
  std::vector<int> c_components;  // index label - 1
  std::vector<Birth> births;      // index label - 1

  const std::vector<int>& row(const std::string& chart) const;
  /// Label of a slot, 0 when not visible.
  int label(const std::string& chart, std::size_t index) const;
  /// Slot index of a label in a chart, or -1.
  int slot_of(const std::string& chart, int label) const;
};

/// True iff the two visible local divisors define the same divisorial
/// valuation. Slots of non-final charts are first followed down to a final
/// chart where the divisor is still visible.
bool same_divisor(const ChartTree& t, const Slot& a, const Slot& b);

/// Identify the exceptional divisors across all charts. Labels are ordered by
/// the depth of the blow-up creating them, then by the first parent chart.
DivisorTable collect_divisors(const ChartTree& t);

/// Sub-tree sufficient for a resolution of the hypersurface itself: a chart is
/// final there when its strict transform is smooth and no ancestor's is;
/// charts below such a chart are irrelevant. Indexed like t.charts().
struct AbstractResolution {
  std::vector<bool> final;
  std::vector<bool> irrelevant;

  std::vector<const Chart*> final_charts(const ChartTree& t) const;
};
AbstractResolution abstract_resolution(const ChartTree& t);

/// Components over C of a divisor, or of its intersection with the strict
/// transform (a curve for surfaces, points for plane curves).
int count_c_components(const ChartTree& t, const DivisorTable& d, int label, bool restricted_to_strict);

/// Table as JSON: {"count", "rows": {chart: [...]}, "c_components", "births"}.
std::string divisors_json(const DivisorTable& d);

}  // namespace resol
