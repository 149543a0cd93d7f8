#pragma once

// Coefficient-level model of functions meromorphic in the unit disk with a
// single simple pole of residue 1 at a real point p in [0, 1):
//
//     f(z) = 1/(z - p) + sum_{n >= 0} a_n z^n,   |z| < 1.
//
// Only finitely many a_n are stored. Everything beyond the stored block is
// summarised by `tail_bound`, an upper bound on sum_{n >= size} n |a_n|, and
// optionally by a geometric envelope |a_n| <= scale * ratio^(n-1).

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace qcx {

using cplx = std::complex<double>;

/// Points closer than this to the pole are rejected by every evaluator.
inline constexpr double kPoleExclusion = 1e-9;

inline constexpr std::size_t kDefaultTruncation = 64;

/// |a_n| <= scale * ratio^(n-1) for every n >= 1, stored or not.
struct GeometricEnvelope {
  double scale = 0.0;
  double ratio = 0.0;
};

/// sum_{n > order} n * ratio^(n-1), for 0 <= ratio < 1.
double geometric_weighted_tail(double ratio, std::size_t order);

class PoledFunction {
public:
  /// Throws InvalidParameter if the pole is outside [0, 1), a coefficient is
  /// not finite, the tail bound is negative, or a stored coefficient breaks
  /// the declared envelope.
  explicit PoledFunction(double pole, std::vector<cplx> coeffs = {},
                         double tail_bound = 0.0,
                         std::optional<GeometricEnvelope> envelope = {});

  double pole() const { return pole_; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  double tail_bound() const { return tail_bound_; }
  const std::optional<GeometricEnvelope>& envelope() const { return envelope_; }

  /// a_n, or zero past the stored block.
  cplx coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : cplx{};
  }

  /// True when the stored coefficients are declared exact.
  bool exact() const { return tail_bound_ == 0.0; }

private:
  double pole_;
  std::vector<cplx> coeffs_;
  double tail_bound_;
  std::optional<GeometricEnvelope> envelope_;
};

struct WeightedSums {
  double sum_n_sq = 0.0;  ///< sum_{n>=1} n |a_n|^2 over stored coefficients
  double sum_n_abs = 0.0; ///< sum_{n>=1} n |a_n| over stored coefficients
  double tail_bound = 0.0;
  /// Upper bound on sum_{n >= size} n |a_n|^2. Exact for geometric
  /// envelopes that are attained (the extremal family).
  double sq_tail_bound = 0.0;
};

/// 1/(z - p) + sum a_n z^n for |z| < 1.
/// Throws DomainError for |z| >= 1 and SingularityError near the pole.
cplx evaluate_inside(const PoledFunction& f, cplx z);

/// Same as evaluate_inside but also accepts points on the unit circle.
cplx evaluate_closed_disk(const PoledFunction& f, cplx z);

/// f'(z) on the closed disk.
cplx derivative_closed_disk(const PoledFunction& f, cplx z);

/// (f(z1) - f(z2)) / (z1 - z2), computed without cancellation.
/// For z1 == z2 this is f'(z1).
cplx divided_difference(const PoledFunction& f, cplx z1, cplx z2);

/// 1/(z-p) + a0 + a1 z/(1 - p z), expanded to order `order` (trailing exact
/// zeros trimmed) with the exact geometric tail.
PoledFunction extremal_theorem1(double p, cplx a0, cplx a1,
                                std::size_t order = kDefaultTruncation);

/// 1/(z-p) + a0 + z/(1 - p^2), the extremal of the unrestricted area theorem.
PoledFunction chichra_extremal(double p, cplx a0);

/// Modified Hadamard product: pole term kept, a_n b_n elementwise.
/// Throws PoleMismatch when the poles differ.
PoledFunction hadamard_product(const PoledFunction& f, const PoledFunction& g);

/// Taylor coefficients c_0..c_order of `omega` by the M-point trapezoidal
/// rule on |z| = radius. Requires 0 < radius < 1 and samples >= 4 * order.
std::vector<cplx> coefficients_from_omega(const std::function<cplx(cplx)>& omega,
                                          std::size_t order, double radius,
                                          std::size_t samples);

/// As above with samples = max(4 * order, 64).
std::vector<cplx> coefficients_from_omega(const std::function<cplx(cplx)>& omega,
                                          std::size_t order, double radius);

WeightedSums weighted_sums(const PoledFunction& f);

} // namespace qcx
