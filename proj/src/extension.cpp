#include "qcx/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qcx {

namespace {

constexpr double kExtractionRadius = 0.95;

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cplx pole_term(double p, cplx z) {
  const cplx d = z - p;
  if (std::abs(d) < kPoleExclusion)
    throw SingularityError("evaluation point within the pole exclusion radius");
  return 1.0 / d;
}

std::vector<cplx> extract(const std::function<cplx(cplx)>& omega, std::size_t order) {
  return coefficients_from_omega(omega, order, kExtractionRadius,
                                 std::max<std::size_t>(4 * order, 512));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

} // namespace

AnalyticPart AnalyticPart::polynomial(std::vector<cplx> coeffs) {
  AnalyticPart part;
  double bound = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (!is_finite(coeffs[n]))
      throw InvalidParameter("polynomial omega has a non-finite coefficient");
    bound += static_cast<double>(n) * std::abs(coeffs[n]);
  }
  part.derivative_bound_ = bound;
  auto shared = std::make_shared<const std::vector<cplx>>(coeffs);
  part.value_ = [shared](cplx z) {
    cplx acc{};
    for (auto it = shared->rbegin(); it != shared->rend(); ++it)
      acc = acc * z + *it;
    return acc;
  };
  part.derivative_ = [shared](cplx z) {
    cplx acc{};
    for (std::size_t n = shared->size(); n-- > 1;)
      acc = acc * z + static_cast<double>(n) * (*shared)[n];
    return acc;
  };
  part.poly_ = std::move(coeffs);
  return part;
}

AnalyticPart AnalyticPart::from_callable(std::function<cplx(cplx)> value,
                                         std::function<cplx(cplx)> derivative,
                                         double derivative_bound) {
  if (!value)
    throw InvalidParameter("omega callable is empty");
  if (!(derivative_bound >= 0.0) || !std::isfinite(derivative_bound))
    throw InvalidParameter("omega needs a finite declared bound on sup |omega'|");
  AnalyticPart part;
  part.value_ = std::move(value);
  part.derivative_ = std::move(derivative);
  part.derivative_bound_ = derivative_bound;
  if (!part.derivative_) {
    auto c = extract(part.value_, kDefaultTruncation);
    for (std::size_t n = 0; n + 1 < c.size(); ++n)
      c[n] = static_cast<double>(n + 1) * c[n + 1];
    c.pop_back();
    part.derivative_series_ = std::make_shared<const std::vector<cplx>>(std::move(c));
  }
  return part;
}

cplx AnalyticPart::value(cplx z) const { return value_(z); }

cplx AnalyticPart::derivative(cplx z) const {
  if (derivative_)
    return derivative_(z);
  cplx acc{};
  for (auto it = derivative_series_->rbegin(); it != derivative_series_->rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

std::vector<cplx> AnalyticPart::taylor_coeffs(std::size_t order) const {
  if (poly_) {
    std::vector<cplx> c(order + 1);
    std::copy_n(poly_->begin(), std::min(poly_->size(), c.size()), c.begin());
    return c;
  }
  return extract(value_, order);
}

ExtensionMap::ExtensionMap(PoledFunction inner, OuterRule outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
  if (const auto* affine = std::get_if<AffineMobius>(&outer_)) {
    if (std::abs(affine->a1) > 1.0)
      throw InvalidParameter("affine outer rule requires |a1| <= 1");
  }
}

cplx ExtensionMap::outer_value(cplx z) const {
  if (!is_finite(z))
    throw DomainError("outer rule evaluated at a non-finite point");
  if (std::abs(z) < 1.0 - 1e-12)
    throw DomainError("outer rule requires |z| >= 1");
  const double p = pole();
  const cplx base = pole_term(p, z);
  return std::visit(overloaded{
                        [&](const AffineMobius& r) { return base + r.a0 + r.a1 / (std::conj(z) - p); },
                        [&](const OmegaReflection& r) { return base + r.omega.value(1.0 / std::conj(z)); },
                    },
                    outer_);
}

ExtensionMap build_extremal_extension(double p, cplx a0, cplx a1, std::size_t order) {
  return ExtensionMap(extremal_theorem1(p, a0, a1, order), AffineMobius{a0, a1});
}

ExtensionMap build_theorem2_extension(AnalyticPart omega, double p, std::size_t order) {
  if (const auto& poly = omega.polynomial_coeffs()) {
    PoledFunction inner(p, *poly);
    return ExtensionMap(std::move(inner), OmegaReflection{std::move(omega)});
  }
  // Extract twice as many coefficients as kept; the discarded block gives
  // an estimate (not a bound) of the weighted tail.
  auto c = omega.taylor_coeffs(2 * order);
  double tail = 0.0;
  for (std::size_t n = order + 1; n < c.size(); ++n)
    tail += static_cast<double>(n) * std::abs(c[n]);
  c.resize(order + 1);
  PoledFunction inner(p, std::move(c), tail);
  return ExtensionMap(std::move(inner), OmegaReflection{std::move(omega)});
}

cplx evaluate(const ExtensionMap& map, cplx z) {
  if (!is_finite(z)) {
    return std::visit(overloaded{
                          [](const AffineMobius& r) { return r.a0; },
                          [](const OmegaReflection& r) { return r.omega.value(cplx{}); },
                      },
                      map.outer());
  }
  if (std::abs(z) < 1.0)
    return evaluate_inside(map.inner(), z);
  return map.outer_value(z);
}

WirtingerPair wirtinger_closed_form(const ExtensionMap& map, cplx z) {
  if (!is_finite(z))
    throw DomainError("Wirtinger derivatives need a finite point");
  if (!(std::abs(z) > 1.0))
    throw RuleMismatch("closed-form outer derivatives require |z| > 1");
  const double p = map.pole();
  const cplx q = 1.0 / (z - p);
  const cplx dz = -q * q;
  const cplx zb = std::conj(z);
  const cplx dzb = std::visit(overloaded{
                                  [&](const AffineMobius& r) {
                                    const cplx s = 1.0 / (zb - p);
                                    return -r.a1 * s * s;
                                  },
                                  [&](const OmegaReflection& r) {
                                    return -r.omega.derivative(1.0 / zb) / (zb * zb);
                                  },
                              },
                              map.outer());
  return {dz, dzb, WirtingerPair::Method::closed_form, 0.0};
}

WirtingerPair wirtinger_inner(const ExtensionMap& map, cplx z) {
  if (!(std::abs(z) < 1.0))
    throw RuleMismatch("inner derivatives require |z| < 1");
  return {derivative_closed_disk(map.inner(), z), cplx{}, WirtingerPair::Method::closed_form, 0.0};
}

WirtingerPair wirtinger_numeric(const ExtensionMap& map, cplx z, double h) {
  return wirtinger_numeric([&map](cplx w) { return evaluate(map, w); }, z, h);
}

cplx dilatation(const ExtensionMap& map, cplx z, DerivativeMethod method) {
  if (!(std::abs(z) > 1.0))
    throw DomainError("dilatation is sampled on |z| > 1 only");
  const WirtingerPair w = method.kind == WirtingerPair::Method::closed_form
                              ? wirtinger_closed_form(map, z)
                              : wirtinger_numeric(map, z, method.step);
  if (std::abs(w.dz) < 1e-14)
    throw DegenerateError("d/dz F vanishes at the sample point");
  return w.dzb / w.dz;
}

std::vector<cplx> AnnulusGrid::points() const {
  if (!(inner_radius > 1.0 && outer_radius >= inner_radius) || radii == 0 || angles == 0)
    throw InvalidParameter("annulus grid needs 1 < inner <= outer and nonzero counts");
  std::vector<cplx> pts;
  pts.reserve(radii * angles);
  const double log_ratio = std::log(outer_radius / inner_radius);
  for (std::size_t i = 0; i < radii; ++i) {
    const double t = radii == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(radii - 1);
    const double r = inner_radius * std::exp(t * log_ratio);
    for (std::size_t j = 0; j < angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles);
      pts.push_back(std::polar(r, theta));
    }
  }
  return pts;
}

DilatationSweep sweep_dilatation(const ExtensionMap& map, const AnnulusGrid& grid,
                                 DerivativeMethod method) {
  DilatationSweep sweep;
  const double p = map.pole();
  sweep.inf = std::numeric_limits<double>::infinity();
  for (const cplx z : grid.points()) {
    if (p > 0.0 && std::abs(z - 1.0 / p) < kReflectedPoleSkip) {
      sweep.skipped.push_back(z);
      continue;
    }
    const cplx mu = dilatation(map, z, method);
    const double m = std::abs(mu);
    sweep.sup = std::max(sweep.sup, m);
    sweep.inf = std::min(sweep.inf, m);
    sweep.samples.push_back({z, mu});
  }
  sweep.evaluated = sweep.samples.size();
  if (sweep.evaluated == 0)
    sweep.inf = 0.0;
  return sweep;
}

double sup_dilatation(const ExtensionMap& map, const AnnulusGrid& grid, DerivativeMethod method) {
  return sweep_dilatation(map, grid, method).sup;
}

double boundary_mismatch(const ExtensionMap& map, std::size_t samples) {
  if (samples < 8)
    throw InvalidParameter("boundary mismatch needs at least 8 samples");
  double worst = 0.0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const cplx z = std::polar(1.0, step * static_cast<double>(j));
    const cplx inner = evaluate_closed_disk(map.inner(), z);
    worst = std::max(worst, std::abs(inner - map.outer_value(z)));
  }
  return worst;
}

} // namespace qcx
