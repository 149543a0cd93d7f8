#pragma once

// Explicit quasiconformal extensions of poled functions to the whole sphere
// and sampling of their complex dilatation mu = (d/dzbar F) / (d/dz F).
//
// Two outer rules are supported on |z| >= 1:
//   AffineMobius     F(z) = 1/(z-p) + a0 + a1/(conj(z) - p)
//   OmegaReflection  F(z) = 1/(z-p) + omega(1/conj(z))
// Inside the disk F is the poled function itself.

#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "qcx/errors.hpp"
#include "qcx/series.hpp"

namespace qcx {

/// The analytic part omega of f(z) = 1/(z-p) + omega(z), together with a
/// declared bound on sup_{|z|<1} |omega'(z)|.
class AnalyticPart {
public:
  /// sum c_n z^n; the declared derivative bound is sum n |c_n|.
  static AnalyticPart polynomial(std::vector<cplx> coeffs);

  /// A general analytic function on the closed disk. `derivative` may be
  /// empty, in which case omega' is taken from the trapezoidal Taylor
  /// coefficients of `value`. Throws InvalidParameter unless
  /// `derivative_bound` is finite and nonnegative.
  static AnalyticPart from_callable(std::function<cplx(cplx)> value,
                                    std::function<cplx(cplx)> derivative,
                                    double derivative_bound);

  cplx value(cplx z) const;
  cplx derivative(cplx z) const;
  double derivative_bound() const { return derivative_bound_; }
  /// False when omega' comes from extracted coefficients.
  bool derivative_exact() const { return static_cast<bool>(derivative_); }
  const std::optional<std::vector<cplx>>& polynomial_coeffs() const { return poly_; }

  /// Taylor coefficients c_0..c_order. Exact for polynomials.
  std::vector<cplx> taylor_coeffs(std::size_t order) const;

private:
  AnalyticPart() = default;

  std::function<cplx(cplx)> value_;
  std::function<cplx(cplx)> derivative_;
  std::shared_ptr<const std::vector<cplx>> derivative_series_;
  std::optional<std::vector<cplx>> poly_;
  double derivative_bound_ = 0.0;
};

struct AffineMobius {
  cplx a0;
  cplx a1;
};

struct OmegaReflection {
  AnalyticPart omega;
};

using OuterRule = std::variant<AffineMobius, OmegaReflection>;

class ExtensionMap {
public:
  /// Throws InvalidParameter for |a1| > 1 in the affine rule.
  ExtensionMap(PoledFunction inner, OuterRule outer);

  const PoledFunction& inner() const { return inner_; }
  const OuterRule& outer() const { return outer_; }
  double pole() const { return inner_.pole(); }

  /// The outer formula evaluated at any finite z with |z| >= 1 - 1e-12.
  cplx outer_value(cplx z) const;

private:
  PoledFunction inner_;
  OuterRule outer_;
};

/// Inner: extremal_theorem1(p, a0, a1, order); outer: AffineMobius(a0, a1).
ExtensionMap build_extremal_extension(double p, cplx a0, cplx a1,
                                      std::size_t order = kDefaultTruncation);

/// Inner: 1/(z-p) + omega(z) from the Taylor coefficients of omega (exact for
/// polynomial omega, otherwise `order` coefficients plus an estimated tail);
/// outer: OmegaReflection.
ExtensionMap build_theorem2_extension(AnalyticPart omega, double p,
                                      std::size_t order = kDefaultTruncation);

/// F(z). Inner rule for |z| < 1, outer rule otherwise. A non-finite z is
/// read as the point at infinity and returns the limit (a0, or omega(0)).
cplx evaluate(const ExtensionMap& map, cplx z);

struct WirtingerPair {
  enum class Method { closed_form, finite_difference };

  cplx dz;
  cplx dzb;
  Method method = Method::closed_form;
  double step = 0.0; ///< finite-difference step, 0 for closed form
};

/// Wirtinger derivatives of the outer rule. Throws RuleMismatch for |z| <= 1.
WirtingerPair wirtinger_closed_form(const ExtensionMap& map, cplx z);

/// (f'(z), 0) for |z| < 1. Throws RuleMismatch otherwise.
WirtingerPair wirtinger_inner(const ExtensionMap& map, cplx z);

/// Central differences on the stencil z +- h, z +- ih.
template <typename F>
  requires std::invocable<const F&, cplx>
WirtingerPair wirtinger_numeric(const F& map, cplx z, double h) {
  if (!(h > 0.0))
    throw InvalidParameter("finite-difference step must be positive");
  const cplx ih{0.0, h};
  const cplx dx = (map(z + h) - map(z - h)) / (2.0 * h);
  const cplx dy = (map(z + ih) - map(z - ih)) / (2.0 * h);
  const cplx i{0.0, 1.0};
  return {0.5 * (dx - i * dy), 0.5 * (dx + i * dy),
          WirtingerPair::Method::finite_difference, h};
}

WirtingerPair wirtinger_numeric(const ExtensionMap& map, cplx z, double h);

inline constexpr double kDefaultStep = 1e-5;

struct DerivativeMethod {
  WirtingerPair::Method kind = WirtingerPair::Method::closed_form;
  double step = kDefaultStep;

  static DerivativeMethod closed_form() { return {}; }
  static DerivativeMethod finite_difference(double h = kDefaultStep) {
    return {WirtingerPair::Method::finite_difference, h};
  }
};

/// mu(z) = dzb / dz for |z| > 1. Throws DomainError for |z| <= 1 and
/// DegenerateError when |dz| < 1e-14.
cplx dilatation(const ExtensionMap& map, cplx z,
                DerivativeMethod method = DerivativeMethod::closed_form());

/// Log-spaced radii times uniform angles on an annulus outside the disk.
struct AnnulusGrid {
  double inner_radius = 1.001;
  double outer_radius = 10.0;
  std::size_t radii = 64;
  std::size_t angles = 128;

  std::vector<cplx> points() const;
};

struct DilatationSample {
  cplx z;
  cplx mu;
};

struct DilatationSweep {
  double sup = 0.0;
  double inf = 0.0;
  std::size_t evaluated = 0;
  /// Points within 1e-3 of 1/p, where the reflected map has its pole.
  std::vector<cplx> skipped;
  std::vector<DilatationSample> samples;
};

inline constexpr double kReflectedPoleSkip = 1e-3;

DilatationSweep sweep_dilatation(const ExtensionMap& map, const AnnulusGrid& grid = {},
                                 DerivativeMethod method = DerivativeMethod::closed_form());

double sup_dilatation(const ExtensionMap& map, const AnnulusGrid& grid = {},
                      DerivativeMethod method = DerivativeMethod::closed_form());

/// max over `samples` equispaced boundary points of |inner - outer|.
/// Throws InvalidParameter for samples < 8.
double boundary_mismatch(const ExtensionMap& map, std::size_t samples);

} // namespace qcx
