#pragma once

// Sufficient conditions for a poled function to admit a k-quasiconformal
// extension, and a sampling refuter for univalence.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "qcx/extension.hpp"
#include "qcx/series.hpp"

namespace qcx {

enum class CertificateTest { Corollary1, Theorem2, Theorem3 };

std::string_view to_string(CertificateTest test);

struct MembershipCertificate {
  double witness_k = 0.0;
  CertificateTest test = CertificateTest::Corollary1;
  bool valid = false;   ///< witness_k < 1
  bool sampled = false; ///< witness rests on a finite sample, not a bound
  std::map<std::string, double> inputs;
};

/// witness = (1+p)^2 (sum n|a_n| + tail_bound).
MembershipCertificate corollary1_certificate(const PoledFunction& f);

/// witness = (1+p)^2 * sup|omega'|, from an analytic bound on sup|omega'|.
MembershipCertificate theorem2_certificate(double derivative_bound, double p);

/// Uses the bound declared by `omega`.
MembershipCertificate theorem2_certificate(const AnalyticPart& omega, double p);

/// Polar sample of the closed unit disk (center, then `radii` circles out
/// to |z| = 1 with `angles` points each).
struct DiskGrid {
  std::size_t radii = 64;
  std::size_t angles = 256;
  double safety_factor = 1.05;
};

/// witness = safety_factor * (1+p)^2 * max over the grid of |omega'|;
/// marked as sampled.
MembershipCertificate theorem2_certificate_sampled(const std::function<cplx(cplx)>& derivative,
                                                   double p, const DiskGrid& grid = {});

/// alpha = k1 k2 / (1-p)^2. Requires k1, k2, p in [0, 1).
MembershipCertificate theorem3_certificate(double k1, double k2, double p);

/// Result of sampling pairs in the disk. A collision proves the function is
/// not univalent; the absence of one proves nothing.
struct ProbeReport {
  std::size_t pairs = 0;
  double min_ratio = 0.0; ///< min |f(z1)-f(z2)| / |z1-z2|
  cplx argmin_z1;
  cplx argmin_z2;
  double lower_bound = 0.0; ///< (1-k)/(1+p)^2
  bool meets_bound = false;
  bool collision = false; ///< some |f(z1)-f(z2)| <= 1e-12
  std::uint64_t seed = 0;
};

inline constexpr double kSampleRadius = 0.999;
inline constexpr double kCollisionTolerance = 1e-12;
inline constexpr double kRatioSlack = 1e-12;

/// Samples `pairs` independent pairs uniformly from |z| < 0.999 (outside the
/// pole exclusion ball). Deterministic in `seed`. With `enforce_bound`, a
/// ratio below (1-k)/(1+p)^2 - 1e-12 throws BoundViolation: use it only for
/// functions already certified with witness k.
ProbeReport injectivity_probe(const PoledFunction& f, double k, std::size_t pairs,
                              std::uint64_t seed, bool enforce_bound = false);

} // namespace qcx
