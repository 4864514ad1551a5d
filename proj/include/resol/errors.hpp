#pragma once

#include <stdexcept>

namespace resol {

/// The center strategy could not produce a valid non-singular center, or a
/// scripted center is singular or improper in its chart.
class StrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the shapes the geometric routines can handle (non-affine
/// charts, unrecognised curve components, ...).
class UnsupportedShape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or incompatible chart-tree file.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Charts of one resolution disagree about a quantity that must be global
/// (multiplicities, identifications).
class InconsistentResolution : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Missing or unreadable input file, or an input file in the wrong format.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace resol
