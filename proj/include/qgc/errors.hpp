#pragma once

#include <stdexcept>
#include <string>

namespace qgc {

/// Quadrature grid cannot represent the requested projection exactly.
struct GridError : std::runtime_error {
  explicit GridError(const std::string& what) : std::runtime_error(what) {}
};

/// A strict-mode bracket produced modes beyond the configured band limit.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Sectional curvature requested for a (numerically) degenerate 2-plane.
struct DegeneratePlaneError : std::runtime_error {
  explicit DegeneratePlaneError(const std::string& what) : std::runtime_error(what) {}
};

/// A trajectory coefficient exceeded the configured blow-up bound.
struct BlowupError : std::runtime_error {
  explicit BlowupError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qgc
