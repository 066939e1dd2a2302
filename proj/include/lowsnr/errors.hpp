#pragma once

#include <stdexcept>
#include <string>

#include "lowsnr/types.hpp"

namespace lowsnr {

/// An iterative scheme failed to meet its error target; carries the partial result.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadResult partial_result)
      : std::runtime_error(what), partial(partial_result) {}
  QuadResult partial;
};

/// A root bracket could not be established; reports the last attempted interval.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, double lo_, double hi_)
      : std::runtime_error(what), lo(lo_), hi(hi_) {}
  double lo;
  double hi;
};

/// A maximizer ran into the upper edge of its search interval.
class BoundaryMaximumError : public std::runtime_error {
 public:
  BoundaryMaximumError(const std::string& what, double boundary_)
      : std::runtime_error(what), boundary(boundary_) {}
  double boundary;
};

}  // namespace lowsnr
