#pragma once

// Area of the set omitted by a poled function, computed two independent
// ways: from the coefficient sum and from a contour integral of the
// boundary curve f(e^{i theta}).

#include <cstddef>

#include "qcx/series.hpp"

namespace qcx {

inline constexpr std::size_t kDefaultAreaSamples = 1024;

/// Tail bounds above this make the boundary curve untrustworthy.
inline constexpr double kTailWarning = 1e-6;

/// pi [1/(1-p^2)^2 - sum n|a_n|^2]. The true value lies in
/// [value - uncertainty, value]; unstored coefficients can only shrink it.
struct SeriesArea {
  double value = 0.0;
  double uncertainty = 0.0;
};

/// Negative values are returned unclamped: they prove f is not univalent.
SeriesArea complement_area_series(const PoledFunction& f);

/// |1/2 \oint Im(conj(w) dw)| over w(theta) = f(e^{i theta}) with the
/// `samples`-point trapezoidal rule. Requires samples >= 64; throws
/// NonFiniteError if the boundary values overflow.
double complement_area_green(const PoledFunction& f, std::size_t samples = kDefaultAreaSamples);

struct AreaReport {
  double series_area = 0.0;
  double quadrature_area = 0.0;
  double abs_discrepancy = 0.0;
  /// abs_discrepancy / max(|series_area|, 1e-3)
  double rel_discrepancy = 0.0;
  std::size_t samples = 0;
  double series_uncertainty = 0.0;
  bool tail_warning = false;
};

AreaReport area_report(const PoledFunction& f, std::size_t samples = kDefaultAreaSamples);

struct AreaTheoremCheck {
  bool pass = false;
  bool equality = false; ///< |slack| <= 1e-10
  double lhs = 0.0;      ///< sum n|a_n|^2 plus the squared-tail bound
  double bound = 0.0;    ///< k^2 / (1-p^2)^2
  double slack = 0.0;    ///< bound - lhs
};

inline constexpr double kEqualityTolerance = 1e-10;

/// Coefficient inequality for k-quasiconformally extendable functions.
/// Equality within kEqualityTolerance counts as a pass. Throws
/// InvalidParameter unless 0 <= k < 1.
AreaTheoremCheck area_theorem_check(const PoledFunction& f, double k);

struct A1BoundCheck {
  bool pass = false;
  double a1_abs = 0.0;
  double bound = 0.0;  ///< k / (1-p^2)
  double margin = 0.0; ///< bound - |a1|
  /// Known bracket for the best constant M(p, k): [k, k/(1-p^2)).
  double bracket_lower = 0.0;
  double bracket_upper = 0.0;
};

/// |a1| < k/(1-p^2). Requires 0 < k < 1 and 0 < p < 1.
A1BoundCheck a1_bound_check(const PoledFunction& f, double k);

} // namespace qcx
