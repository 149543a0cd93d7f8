#include "qcx/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qcx/detail/summation.hpp"
#include "qcx/errors.hpp"

namespace qcx {

namespace {

void require_pole(double p) {
  if (!(p >= 0.0 && p < 1.0))
    throw InvalidParameter("pole must lie in [0, 1), got " + std::to_string(p));
}

void trim_trailing_zeros(std::vector<cplx>& c) {
  while (c.size() > 1 && c.back() == cplx{})
    c.pop_back();
}

// Index of the first coefficient not stored; the tail covers n >= this.
std::size_t tail_start(const PoledFunction& f) {
  return std::max<std::size_t>(f.coeffs().size(), 1);
}

// Polynomial part by Horner.
cplx horner(std::span<const cplx> c, cplx z) {
  cplx acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

cplx pole_term(double p, cplx z) {
  const cplx d = z - p;
  if (std::abs(d) < kPoleExclusion)
    throw SingularityError("evaluation point within the pole exclusion radius");
  return 1.0 / d;
}

} // namespace

double geometric_weighted_tail(double ratio, std::size_t order) {
  if (!(ratio >= 0.0 && ratio < 1.0))
    throw InvalidParameter("geometric ratio must lie in [0, 1)");
  const double n = static_cast<double>(order);
  const double one_minus = 1.0 - ratio;
  return std::pow(ratio, n) * ((n + 1.0) - n * ratio) / (one_minus * one_minus);
}

PoledFunction::PoledFunction(double pole, std::vector<cplx> coeffs, double tail_bound,
                             std::optional<GeometricEnvelope> envelope)
    : pole_(pole), coeffs_(std::move(coeffs)), tail_bound_(tail_bound),
      envelope_(envelope) {
  require_pole(pole_);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n].real()) || !std::isfinite(coeffs_[n].imag()))
      throw InvalidParameter("coefficient a_" + std::to_string(n) + " is not finite");
  }
  if (!(tail_bound_ >= 0.0) || !std::isfinite(tail_bound_))
    throw InvalidParameter("tail_bound must be a finite nonnegative number");
  if (envelope_) {
    const auto [scale, ratio] = *envelope_;
    if (!(scale >= 0.0) || !std::isfinite(scale) || !(ratio >= 0.0 && ratio < 1.0))
      throw InvalidParameter("envelope needs scale >= 0 and ratio in [0, 1)");
    double bound = scale;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      if (std::abs(coeffs_[n]) > bound * (1.0 + 1e-12) + 1e-300)
        throw InvalidParameter("coefficient a_" + std::to_string(n) +
                               " exceeds the declared envelope");
      bound *= ratio;
    }
  }
}

cplx evaluate_inside(const PoledFunction& f, cplx z) {
  if (!(std::abs(z) < 1.0))
    throw DomainError("evaluate_inside requires |z| < 1");
  return pole_term(f.pole(), z) + horner(f.coeffs(), z);
}

cplx evaluate_closed_disk(const PoledFunction& f, cplx z) {
  if (!(std::abs(z) <= 1.0 + 1e-12))
    throw DomainError("closed-disk evaluation requires |z| <= 1");
  return pole_term(f.pole(), z) + horner(f.coeffs(), z);
}

cplx derivative_closed_disk(const PoledFunction& f, cplx z) {
  if (!(std::abs(z) <= 1.0 + 1e-12))
    throw DomainError("closed-disk evaluation requires |z| <= 1");
  const cplx q = pole_term(f.pole(), z);
  const auto c = f.coeffs();
  cplx acc{};
  for (std::size_t n = c.size(); n-- > 1;)
    acc = acc * z + static_cast<double>(n) * c[n];
  return -q * q + acc;
}

cplx divided_difference(const PoledFunction& f, cplx z1, cplx z2) {
  const double p = f.pole();
  const cplx q1 = pole_term(p, z1);
  const cplx q2 = pole_term(p, z2);
  // P(z) = (z - z1) Q(z) + P(z1); the Horner partials at z1 are the
  // coefficients of Q, and P[z1, z2] = Q(z2).
  const auto c = f.coeffs();
  cplx b{};
  cplx q{};
  for (std::size_t n = c.size(); n-- > 1;) {
    b = b * z1 + c[n];
    q = q * z2 + b;
  }
  return -q1 * q2 + q;
}

PoledFunction extremal_theorem1(double p, cplx a0, cplx a1, std::size_t order) {
  require_pole(p);
  if (std::abs(a1) > 1.0)
    throw InvalidParameter("extremal family requires |a1| <= 1");
  std::vector<cplx> c(order + 1);
  c[0] = a0;
  cplx term = a1;
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = term;
    term *= p;
  }
  trim_trailing_zeros(c);
  const double scale = std::abs(a1);
  const double tail =
      scale == 0.0 ? 0.0 : scale * geometric_weighted_tail(p, c.size() - 1);
  return PoledFunction(p, std::move(c), tail, GeometricEnvelope{scale, p});
}

PoledFunction chichra_extremal(double p, cplx a0) {
  require_pole(p);
  const double a1 = 1.0 / (1.0 - p * p);
  return PoledFunction(p, {a0, cplx{a1}}, 0.0, GeometricEnvelope{a1, 0.0});
}

PoledFunction hadamard_product(const PoledFunction& f, const PoledFunction& g) {
  if (f.pole() != g.pole())
    throw PoleMismatch("modified Hadamard product needs a common pole");
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  const std::size_t stored = std::min(fc.size(), gc.size());
  std::vector<cplx> c(stored);
  for (std::size_t n = 0; n < stored; ++n)
    c[n] = fc[n] * gc[n];

  // sum_{n >= stored} n|a_n b_n| <= (sum_{n >= stored} n|a_n|) * sup_{n >= stored} |b_n|.
  auto weighted_mass = [stored](const PoledFunction& h) {
    double s = h.tail_bound();
    const auto hc = h.coeffs();
    for (std::size_t n = std::max<std::size_t>(stored, 1); n < hc.size(); ++n)
      s += static_cast<double>(n) * std::abs(hc[n]);
    return s;
  };
  auto sup_abs = [stored](const PoledFunction& h) {
    const auto hc = h.coeffs();
    double s = h.tail_bound() / static_cast<double>(tail_start(h));
    for (std::size_t n = std::max<std::size_t>(stored, 1); n < hc.size(); ++n)
      s = std::max(s, std::abs(hc[n]));
    return s;
  };
  double tail = std::min(weighted_mass(f) * sup_abs(g), weighted_mass(g) * sup_abs(f));

  std::optional<GeometricEnvelope> envelope;
  if (f.envelope() && g.envelope()) {
    envelope = GeometricEnvelope{f.envelope()->scale * g.envelope()->scale,
                                 f.envelope()->ratio * g.envelope()->ratio};
    const std::size_t order = std::max<std::size_t>(stored, 1) - 1;
    tail = std::min(tail, envelope->scale * geometric_weighted_tail(envelope->ratio, order));
  }
  return PoledFunction(f.pole(), std::move(c), tail, envelope);
}

std::vector<cplx> coefficients_from_omega(const std::function<cplx(cplx)>& omega,
                                          std::size_t order, double radius,
                                          std::size_t samples) {
  if (!(radius > 0.0 && radius < 1.0))
    throw InvalidParameter("sampling radius must lie in (0, 1)");
  if (samples < 4 * order || samples == 0)
    throw InvalidParameter("need at least 4 * order trapezoidal samples");

  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  std::vector<cplx> values(samples);
  for (std::size_t j = 0; j < samples; ++j)
    values[j] = omega(std::polar(radius, step * static_cast<double>(j)));

  std::vector<cplx> c(order + 1);
  double scale = 1.0;
  for (std::size_t n = 0; n <= order; ++n) {
    detail::CompensatedSum<cplx> acc;
    for (std::size_t j = 0; j < samples; ++j) {
      // (n * j) mod samples keeps the twiddle argument small.
      const auto idx = static_cast<double>((n * j) % samples);
      acc.add(values[j] * std::polar(1.0, -step * idx));
    }
    c[n] = acc.value() / (static_cast<double>(samples) * scale);
    scale *= radius;
  }
  return c;
}

std::vector<cplx> coefficients_from_omega(const std::function<cplx(cplx)>& omega,
                                          std::size_t order, double radius) {
  return coefficients_from_omega(omega, order, radius, std::max<std::size_t>(4 * order, 64));
}

WeightedSums weighted_sums(const PoledFunction& f) {
  WeightedSums out;
  detail::CompensatedSum<double> sq;
  detail::CompensatedSum<double> ab;
  const auto c = f.coeffs();
  for (std::size_t n = 1; n < c.size(); ++n) {
    const double a = std::abs(c[n]);
    sq.add(static_cast<double>(n) * a * a);
    ab.add(static_cast<double>(n) * a);
  }
  out.sum_n_sq = sq.value();
  out.sum_n_abs = ab.value();
  out.tail_bound = f.tail_bound();

  // n|a_n|^2 <= n|a_n| * |a_n| and |a_n| <= tail / n for n past the block.
  const double start = static_cast<double>(tail_start(f));
  out.sq_tail_bound = f.tail_bound() * f.tail_bound() / start;
  if (const auto& env = f.envelope()) {
    const double r2 = env->ratio * env->ratio;
    const double env_sq = env->scale * env->scale *
                          geometric_weighted_tail(r2, tail_start(f) - 1);
    out.sq_tail_bound = std::min(out.sq_tail_bound, env_sq);
  }
  return out;
}

} // namespace qcx
