// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcx/area.hpp"
#include "qcx/certify.hpp"
#include "qcx/extension.hpp"
#include "qcx/series.hpp"

using namespace qcx;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double sq(double x) { return x * x; }

const std::vector<double> kPoles1 = {0.0, 0.3, 0.5, 0.7};
const std::vector<double> kKs1 = {0.2, 0.6, 0.9};

// Criterion 4 and 8 test functions: omega = k z/(1+p)^2 and
// omega = (k/2)(z^2 + z)/(1+p)^2 / 1.5.
std::vector<AnalyticPart> theorem2_omegas(double p, double k) {
  const double s = k / sq(1 + p);
  return {AnalyticPart::polynomial({0.0, s}),
          AnalyticPart::polynomial({0.0, 0.5 * s / 1.5, 0.5 * s / 1.5})};
}

Outcome theorem1_equality() {
  double worst = 0.0;
  for (double p : kPoles1) {
    for (double k : kKs1) {
      const auto ws = weighted_sums(extremal_theorem1(p, 0.0, k, 256));
      worst = std::max(worst, std::abs(ws.sum_n_sq + ws.sq_tail_bound - sq(k) / sq(1 - p * p)));
    }
  }
  return {worst <= 1e-10, fmt("max |sum n|a_n|^2 + tail - k^2/(1-p^2)^2| = %.3e (tol 1e-10)", worst)};
}

Outcome chichra_relation() {
  std::vector<PoledFunction> fs;
  for (double p : kPoles1)
    for (double k : kKs1)
      fs.push_back(extremal_theorem1(p, 0.0, k));
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    // p <= 0.4 keeps (1+p)^2 * 0.5 < 1, so every sample is certified univalent.
    const double p = 0.4 * u(rng);
    const double mass = 0.5 * (0.05 + 0.95 * u(rng));
    fs.emplace_back(p, qcx::test::random_coeffs(rng, 4 + i, mass));
  }
  double worst = 0.0;
  for (const auto& f : fs) {
    const double series = complement_area_series(f).value;
    const double quad = complement_area_green(f, 4096);
    worst = std::max(worst, std::abs(quad - series) / std::max(series, 1e-3));
  }
  return {worst <= 1e-6,
          fmt("%.0f functions, max |green - series| / max(series, 1e-3) = %.3e (tol 1e-6)",
              static_cast<double>(fs.size()), worst)};
}

Outcome dilatation_constancy() {
  double worst_closed = 0.0;
  double worst_fd = 0.0;
  for (double p : {0.0, 0.5}) {
    for (double m : {0.3, 0.9}) {
      for (double phase : {0.0, 0.7}) {
        const auto map = build_extremal_extension(p, 0.0, std::polar(m, phase));
        const auto closed = sweep_dilatation(map);
        const auto fd = sweep_dilatation(map, {}, DerivativeMethod::finite_difference(1e-5));
        worst_closed = std::max({worst_closed, std::abs(closed.sup - m), std::abs(closed.inf - m)});
        worst_fd = std::max({worst_fd, std::abs(fd.sup - m), std::abs(fd.inf - m)});
      }
    }
  }
  return {worst_closed <= 1e-10 && worst_fd <= 1e-4,
          fmt("max dev closed = %.3e (tol 1e-10), finite-difference = %.3e (tol 1e-4)", worst_closed,
              worst_fd)};
}

Outcome theorem2_bound() {
  double worst_excess = -1.0;
  bool bounds_ok = true;
  for (double p : {0.0, 0.5}) {
    for (double k : {0.4, 0.8}) {
      for (const auto& omega : theorem2_omegas(p, k)) {
        // sum n|c_n| bounds sup|omega'| and is attained at z = 1 here.
        bounds_ok = bounds_ok && omega.derivative_bound() <= k / sq(1 + p) * (1 + 1e-15) &&
                    std::abs(std::abs(omega.derivative(cplx{1.0})) - omega.derivative_bound()) < 1e-15;
        const double sup = sup_dilatation(build_theorem2_extension(omega, p));
        worst_excess = std::max(worst_excess, sup - k);
      }
    }
  }
  return {bounds_ok && worst_excess <= 1e-8,
          fmt("max (sup|mu| - k) = %.3e (tol 1e-8), derivative bounds verified = %.0f", worst_excess,
              bounds_ok ? 1.0 : 0.0)};
}

Outcome boundary_continuity() {
  double worst = 0.0;
  for (double p : {0.0, 0.5}) {
    for (double m : {0.3, 0.9}) {
      worst = std::max(worst, boundary_mismatch(build_extremal_extension(p, cplx{0.2, -0.1}, std::polar(m, 0.7)), 2048));
      for (const auto& omega : theorem2_omegas(p, m))
        worst = std::max(worst, boundary_mismatch(build_theorem2_extension(omega, p), 2048));
    }
  }
  return {worst <= 1e-10, fmt("max boundary mismatch = %.3e (tol 1e-10)", worst)};
}

Outcome theorem3_tightness() {
  double worst = 0.0;
  int cases = 0;
  for (double p : {0.0, 0.3, 0.6}) {
    for (double k1 : {0.3, 0.7}) {
      for (double k2 : {0.3, 0.7}) {
        const double alpha = k1 * k2 / sq(1 - p);
        if (!(alpha < 1.0))
          continue;
        const auto h = hadamard_product(extremal_theorem1(p, 0.0, k1, 512), extremal_theorem1(p, 0.0, k2, 512));
        const auto ws = weighted_sums(h);
        worst = std::max(worst, std::abs(sq(1 + p) * (ws.sum_n_abs + ws.tail_bound) - alpha));
        worst = std::max(worst, std::abs(theorem3_certificate(k1, k2, p).witness_k - alpha));
        ++cases;
      }
    }
  }
  return {worst <= 1e-10, fmt("%.0f pairs, max |(1+p)^2 sum n|a_n b_n| - alpha| = %.3e (tol 1e-10)",
                              static_cast<double>(cases), worst)};
}

Outcome soundness_chain() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int accepted = 0;
  int failures = 0;
  while (accepted < 100) {
    const double p = 0.95 * u(rng);
    const double mass = 0.999 * u(rng) / sq(1 + p);
    const PoledFunction f(p, qcx::test::random_coeffs(rng, 1 + accepted % 24, mass), 1e-6 * u(rng));
    const auto cert = corollary1_certificate(f);
    if (!cert.valid)
      continue;
    ++accepted;
    if (!area_theorem_check(f, cert.witness_k).pass)
      ++failures;
  }
  return {failures == 0, fmt("%.0f certified functions, %.0f area-check failures (allowed 0)", accepted, failures)};
}

Outcome univalence_bound() {
  double worst = std::numeric_limits<double>::infinity();
  for (double p : {0.0, 0.5}) {
    for (double k : {0.4, 0.8}) {
      for (const auto& omega : theorem2_omegas(p, k)) {
        const auto map = build_theorem2_extension(omega, p);
        const auto r = injectivity_probe(map.inner(), k, 100000, 8675309);
        worst = std::min(worst, r.min_ratio - r.lower_bound);
      }
    }
  }
  return {worst >= -1e-12, fmt("min over functions of (min ratio - (1-k)/(1+p)^2) = %.3e (tol -1e-12)", worst)};
}

Outcome a1_bound() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  int wrong = 0;
  for (int i = 0; i < 500; ++i) {
    const double p = 1e-3 + 0.998 * u(rng);
    const double k = 1e-3 + 0.998 * u(rng);
    if (!a1_bound_check(extremal_theorem1(p, 0.0, std::polar(k, 6.0 * u(rng))), k).pass)
      ++wrong;
    ++checked;
  }
  for (double p = 0.05; p < 1.0; p += 0.05) {
    for (double k = 0.05; k <= 0.9 + 1e-12; k += 0.05) {
      if (a1_bound_check(chichra_extremal(p, 0.0), k).pass)
        ++wrong;
      ++checked;
    }
  }
  return {wrong == 0, fmt("%.0f checks, %.0f wrong verdicts", checked, wrong)};
}

Outcome fd_convergence() {
  const auto map = build_extremal_extension(0.5, cplx{0.1}, std::polar(0.6, 0.3));
  const double h = 1e-3;
  double lo = 1e9;
  double hi = 0.0;
  for (int i = 0; i < 10; ++i) {
    const cplx z = std::polar(1.2 + 0.25 * i, 0.4 + 0.6 * i);
    const auto exact = wirtinger_closed_form(map, z);
    auto err = [&](double step) {
      const auto w = wirtinger_numeric(map, z, step);
      return std::abs(w.dz - exact.dz) + std::abs(w.dzb - exact.dzb);
    };
    const double ratio = err(h) / err(h / 2);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo >= 3.5 && hi <= 4.5, fmt("error ratio e(h)/e(h/2) in [%.4f, %.4f] at h = %.0e (need [3.5, 4.5])", lo, hi, h)};
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"C1  extremal equality case", theorem1_equality},
      {"C2  area relation cross-check", chichra_relation},
      {"C3  extremal dilatation constancy", dilatation_constancy},
      {"C4  derivative-bound dilatation", theorem2_bound},
      {"C5  boundary continuity", boundary_continuity},
      {"C6  product bound tightness", theorem3_tightness},
      {"C7  soundness chain", soundness_chain},
      {"C8  univalence lower bound", univalence_bound},
      {"C9  |a1| bound", a1_bound},
      {"C10 finite-difference convergence", fd_convergence},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %-36s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
