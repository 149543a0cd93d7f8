#include "qcx/area.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcx/detail/summation.hpp"
#include "qcx/errors.hpp"

namespace qcx {

namespace {

double full_area_factor(double p) {
  const double s = 1.0 - p * p;
  return 1.0 / (s * s);
}

} // namespace

SeriesArea complement_area_series(const PoledFunction& f) {
  const WeightedSums ws = weighted_sums(f);
  return {std::numbers::pi * (full_area_factor(f.pole()) - ws.sum_n_sq),
          std::numbers::pi * ws.sq_tail_bound};
}

double complement_area_green(const PoledFunction& f, std::size_t samples) {
  if (samples < 64)
    throw InvalidParameter("contour quadrature needs at least 64 samples");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  const cplx i{0.0, 1.0};
  detail::CompensatedSum<double> acc;
  for (std::size_t j = 0; j < samples; ++j) {
    const cplx z = std::polar(1.0, step * static_cast<double>(j));
    const cplx w = evaluate_closed_disk(f, z);
    const cplx dw = i * z * derivative_closed_disk(f, z); // d/dtheta
    const double term = std::imag(std::conj(w) * dw);
    if (!std::isfinite(term))
      throw NonFiniteError("boundary values of f are not finite");
    acc.add(term);
  }
  // The boundary is traversed clockwise around the omitted set.
  return std::abs(0.5 * step * acc.value());
}

AreaReport area_report(const PoledFunction& f, std::size_t samples) {
  AreaReport r;
  const SeriesArea series = complement_area_series(f);
  r.series_area = series.value;
  r.series_uncertainty = series.uncertainty;
  r.quadrature_area = complement_area_green(f, samples);
  r.abs_discrepancy = std::abs(r.quadrature_area - r.series_area);
  r.rel_discrepancy = r.abs_discrepancy / std::max(std::abs(r.series_area), 1e-3);
  r.samples = samples;
  r.tail_warning = f.tail_bound() > kTailWarning;
  return r;
}

AreaTheoremCheck area_theorem_check(const PoledFunction& f, double k) {
  if (!(k >= 0.0 && k < 1.0))
    throw InvalidParameter("area theorem check requires 0 <= k < 1");
  const WeightedSums ws = weighted_sums(f);
  AreaTheoremCheck c;
  c.lhs = ws.sum_n_sq + ws.sq_tail_bound;
  c.bound = k * k * full_area_factor(f.pole());
  c.slack = c.bound - c.lhs;
  c.equality = std::abs(c.slack) <= kEqualityTolerance;
  c.pass = c.slack >= 0.0 || c.equality;
  return c;
}

A1BoundCheck a1_bound_check(const PoledFunction& f, double k) {
  const double p = f.pole();
  if (!(k > 0.0 && k < 1.0) || !(p > 0.0))
    throw InvalidParameter("a1 bound applies for 0 < k < 1 and 0 < p < 1");
  A1BoundCheck c;
  c.a1_abs = std::abs(f.coeff(1));
  c.bound = k / (1.0 - p * p);
  c.margin = c.bound - c.a1_abs;
  c.pass = c.a1_abs < c.bound;
  c.bracket_lower = k;
  c.bracket_upper = c.bound;
  return c;
}

} // namespace qcx
