#include "qcx/certify.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qcx/errors.hpp"

namespace qcx {

namespace {

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x < 1.0))
    throw InvalidParameter(std::string(what) + " must lie in [0, 1)");
}

MembershipCertificate make(CertificateTest test, double witness, bool sampled) {
  MembershipCertificate c;
  c.test = test;
  c.witness_k = witness;
  c.valid = witness < 1.0;
  c.sampled = sampled;
  return c;
}

constexpr std::size_t kProbeChunk = 4096;

} // namespace

std::string_view to_string(CertificateTest test) {
  switch (test) {
  case CertificateTest::Corollary1:
    return "corollary1";
  case CertificateTest::Theorem2:
    return "theorem2";
  case CertificateTest::Theorem3:
    return "theorem3";
  }
  return "unknown";
}

MembershipCertificate corollary1_certificate(const PoledFunction& f) {
  const WeightedSums ws = weighted_sums(f);
  const double p = f.pole();
  auto c = make(CertificateTest::Corollary1,
                (1.0 + p) * (1.0 + p) * (ws.sum_n_abs + ws.tail_bound), false);
  c.inputs = {{"p", p},
              {"coefficients", static_cast<double>(f.coeffs().size())},
              {"tail_bound", f.tail_bound()},
              {"sum_n_abs", ws.sum_n_abs}};
  return c;
}

MembershipCertificate theorem2_certificate(double derivative_bound, double p) {
  require_unit(p, "pole");
  if (!(derivative_bound >= 0.0) || !std::isfinite(derivative_bound))
    throw InvalidParameter("derivative bound must be finite and nonnegative");
  auto c = make(CertificateTest::Theorem2, (1.0 + p) * (1.0 + p) * derivative_bound, false);
  c.inputs = {{"p", p}, {"sup_derivative", derivative_bound}};
  return c;
}

MembershipCertificate theorem2_certificate(const AnalyticPart& omega, double p) {
  return theorem2_certificate(omega.derivative_bound(), p);
}

MembershipCertificate theorem2_certificate_sampled(const std::function<cplx(cplx)>& derivative,
                                                   double p, const DiskGrid& grid) {
  require_unit(p, "pole");
  if (grid.radii == 0 || grid.angles == 0 || !(grid.safety_factor >= 1.0))
    throw InvalidParameter("disk grid needs nonzero counts and safety factor >= 1");
  double sup = std::abs(derivative(cplx{}));
  for (std::size_t i = 1; i <= grid.radii; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(grid.radii);
    for (std::size_t j = 0; j < grid.angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid.angles);
      const double v = std::abs(derivative(std::polar(r, theta)));
      if (!std::isfinite(v))
        throw NonFiniteError("omega' is not finite on the disk grid");
      sup = std::max(sup, v);
    }
  }
  auto c = make(CertificateTest::Theorem2, grid.safety_factor * (1.0 + p) * (1.0 + p) * sup, true);
  c.inputs = {{"p", p},
              {"sampled_sup_derivative", sup},
              {"safety_factor", grid.safety_factor},
              {"grid_points", static_cast<double>(1 + grid.radii * grid.angles)}};
  return c;
}

MembershipCertificate theorem3_certificate(double k1, double k2, double p) {
  require_unit(k1, "k1");
  require_unit(k2, "k2");
  require_unit(p, "pole");
  auto c = make(CertificateTest::Theorem3, k1 * k2 / ((1.0 - p) * (1.0 - p)), false);
  c.inputs = {{"k1", k1}, {"k2", k2}, {"p", p}};
  return c;
}

ProbeReport injectivity_probe(const PoledFunction& f, double k, std::size_t pairs,
                              std::uint64_t seed, bool enforce_bound) {
  require_unit(k, "k");
  if (pairs == 0)
    throw InvalidParameter("probe needs at least one pair");
  const double p = f.pole();

  ProbeReport report;
  report.pairs = pairs;
  report.seed = seed;
  report.lower_bound = (1.0 - k) / ((1.0 + p) * (1.0 + p));
  report.min_ratio = std::numeric_limits<double>::infinity();

  // Each chunk of pairs owns a generator seeded from (seed, chunk index), so
  // the sample set does not depend on how chunks are scheduled.
  for (std::size_t chunk = 0; chunk * kProbeChunk < pairs; ++chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] {
      for (;;) {
        const cplx z = std::polar(kSampleRadius * std::sqrt(unit(rng)),
                                  2.0 * std::numbers::pi * unit(rng));
        if (std::abs(z - p) >= kPoleExclusion)
          return z;
      }
    };
    const std::size_t end = std::min(pairs, (chunk + 1) * kProbeChunk);
    for (std::size_t i = chunk * kProbeChunk; i < end; ++i) {
      const cplx z1 = draw();
      const cplx z2 = draw();
      if (z1 == z2)
        continue;
      const double ratio = std::abs(divided_difference(f, z1, z2));
      if (ratio * std::abs(z1 - z2) <= kCollisionTolerance)
        report.collision = true;
      if (ratio < report.min_ratio) {
        report.min_ratio = ratio;
        report.argmin_z1 = z1;
        report.argmin_z2 = z2;
      }
    }
  }
  report.meets_bound = report.min_ratio >= report.lower_bound - kRatioSlack && !report.collision;
  if (enforce_bound && !report.meets_bound) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "certified function breaks its lower Lipschitz bound: ratio " << report.min_ratio
        << " < " << report.lower_bound << " at z1=" << report.argmin_z1 << ", z2=" << report.argmin_z2;
    throw BoundViolation(msg.str());
  }
  return report;
}

} // namespace qcx
