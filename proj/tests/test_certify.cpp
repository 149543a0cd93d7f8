#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qcx/area.hpp"
#include "qcx/certify.hpp"
#include "qcx/errors.hpp"

using namespace qcx;

TEST_CASE("weighted coefficient sum certificates") {
  SUBCASE("single coefficient at p = 0") {
    const auto c = corollary1_certificate(PoledFunction(0.0, {0.0, 0.3}));
    CHECK(c.witness_k == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(c.valid);
    CHECK(c.test == CertificateTest::Corollary1);
    CHECK_FALSE(c.sampled);
  }
  SUBCASE("zero coefficients") {
    CHECK(corollary1_certificate(PoledFunction(0.7, {1.0, 0.0})).witness_k == 0.0);
  }
  SUBCASE("two coefficients at p = 0.5") {
    const auto c = corollary1_certificate(PoledFunction(0.5, {0.0, 0.2, 0.1}));
    CHECK(c.witness_k == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(c.valid);
  }
  SUBCASE("tail bound is charged to the witness") {
    const auto c = corollary1_certificate(PoledFunction(0.0, {0.0, 0.3}, 0.75));
    CHECK(c.witness_k == doctest::Approx(1.05));
    CHECK_FALSE(c.valid);
  }
  SUBCASE("witness scales linearly") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      const double p = 0.9 * u(rng);
      const double t = u(rng);
      auto c = qcx::test::random_coeffs(rng, 10, 0.5);
      const double tail = 0.01 * u(rng);
      const auto base = corollary1_certificate(PoledFunction(p, c, tail)).witness_k;
      for (auto& a : c)
        a *= t;
      const auto scaled = corollary1_certificate(PoledFunction(p, c, t * tail)).witness_k;
      CHECK(scaled == doctest::Approx(t * base).epsilon(1e-13));
    }
  }
}

TEST_CASE("Taylor-part derivative bound certificates") {
  CHECK(theorem2_certificate(0.0, 0.4).witness_k == 0.0);
  for (double p : {0.0, 0.5}) {
    for (double k : {0.4, 0.8}) {
      const auto omega = AnalyticPart::polynomial({0.0, k / ((1 + p) * (1 + p))});
      const auto c = theorem2_certificate(omega, p);
      CHECK(c.witness_k == doctest::Approx(k).epsilon(1e-15));
      CHECK(c.valid);
    }
  }
  SUBCASE("quadratic omega") {
    const auto c = theorem2_certificate(AnalyticPart::polynomial({0.0, 0.0, 0.1}), 0.3);
    CHECK(c.witness_k == doctest::Approx(0.338).epsilon(1e-14));
    CHECK_FALSE(c.sampled);
  }
  SUBCASE("sampled certificate is inflated and labelled") {
    const auto c = theorem2_certificate_sampled([](cplx z) { return 0.2 * z; }, 0.3);
    CHECK(c.sampled);
    CHECK(c.witness_k == doctest::Approx(1.05 * 0.338).epsilon(1e-14));
    CHECK(c.inputs.at("sampled_sup_derivative") == doctest::Approx(0.2));
  }
  CHECK_THROWS_AS(theorem2_certificate(0.1, 1.0), InvalidParameter);
  CHECK_THROWS_AS(theorem2_certificate(-0.1, 0.0), InvalidParameter);
}

TEST_CASE("Hadamard product certificates") {
  CHECK(theorem3_certificate(0.5, 0.5, 0.0).witness_k == doctest::Approx(0.25));
  CHECK(theorem3_certificate(0.0, 0.9, 0.7).witness_k == 0.0);
  const auto c = theorem3_certificate(0.4, 0.5, 0.5);
  CHECK(c.witness_k == doctest::Approx(0.8));
  CHECK(c.valid);
  CHECK_FALSE(theorem3_certificate(0.9, 0.9, 0.3).valid);
  CHECK_THROWS_AS(theorem3_certificate(1.0, 0.5, 0.0), InvalidParameter);

  SUBCASE("symmetric and monotone") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 0.99);
    for (int trial = 0; trial < 200; ++trial) {
      const double k1 = u(rng);
      const double k2 = u(rng);
      const double p = u(rng);
      const double a = theorem3_certificate(k1, k2, p).witness_k;
      CHECK(a == theorem3_certificate(k2, k1, p).witness_k);
      const double d = 0.005;
      CHECK(theorem3_certificate(std::min(k1 + d, 0.999), k2, p).witness_k >= a);
      CHECK(theorem3_certificate(k1, std::min(k2 + d, 0.999), p).witness_k >= a);
      CHECK(theorem3_certificate(k1, k2, std::min(p + d, 0.999)).witness_k >= a);
    }
  }
  SUBCASE("tight on the extremal pair") {
    for (double p : {0.0, 0.3, 0.6}) {
      const double k1 = 0.3;
      const double k2 = 0.7;
      const auto h = hadamard_product(extremal_theorem1(p, 0.0, k1, 128), extremal_theorem1(p, 0.0, k2, 128));
      const auto cor = corollary1_certificate(h);
      CHECK(std::abs(cor.witness_k - theorem3_certificate(k1, k2, p).witness_k) <= 1e-10);
    }
  }
}

TEST_CASE("injectivity probe") {
  SUBCASE("1/z expands distances") {
    const auto r = injectivity_probe(PoledFunction(0.0), 0.0, 20000, 1);
    CHECK(r.min_ratio >= 1.0);
    CHECK(r.meets_bound);
    CHECK_FALSE(r.collision);
  }
  SUBCASE("derivative-bound functions meet their Lipschitz bound") {
    for (double p : {0.0, 0.5}) {
      const double k = 0.8;
      const PoledFunction f(p, {0.0, k / ((1 + p) * (1 + p))});
      const auto r = injectivity_probe(f, k, 20000, 99, true);
      CHECK(r.meets_bound);
      CHECK(r.min_ratio >= (1 - k) / ((1 + p) * (1 + p)));
    }
  }
  SUBCASE("deterministic in the seed") {
    const PoledFunction f(0.3, {0.0, 0.2, 0.05});
    const auto a = injectivity_probe(f, 0.5, 10000, 5);
    const auto b = injectivity_probe(f, 0.5, 10000, 5);
    const auto c = injectivity_probe(f, 0.5, 10000, 6);
    CHECK(a.min_ratio == b.min_ratio);
    CHECK(a.argmin_z1 == b.argmin_z1);
    CHECK(a.min_ratio != c.min_ratio);
    // A prefix of the pair sequence is a prefix of a longer run.
    const auto longer = injectivity_probe(f, 0.5, 20000, 5);
    CHECK(longer.min_ratio <= a.min_ratio);
  }
  SUBCASE("non-univalent extremal-form function is caught") {
    // f = 1/z + 3z: f(z1) - f(z2) = (z2 - z1)/(z1 z2) [1 - 3 z1 z2], so every
    // pair with z1 z2 = 1/3 collides; (0.5, 2/3) is one inside the disk.
    const PoledFunction f(0.0, {0.0, 3.0});
    const cplx z1{0.5};
    const cplx z2{2.0 / 3.0};
    const cplx factored = (z2 - z1) / (z1 * z2) * (1.0 - 3.0 * z1 * z2);
    CHECK(std::abs(factored) < 1e-15);
    CHECK(std::abs(divided_difference(f, z1, z2)) < 1e-14);

    const auto r = injectivity_probe(f, 0.5, 100000, 17);
    CHECK_FALSE(r.meets_bound);
    CHECK(r.min_ratio < 0.05);
    // The near-collision sits close to the curve z1 z2 = 1/3.
    CHECK(std::abs(r.argmin_z1 * r.argmin_z2 - 1.0 / 3.0) < 0.05);
    CHECK_THROWS_AS(injectivity_probe(f, 0.5, 100000, 17, true), BoundViolation);
  }
  CHECK_THROWS_AS(injectivity_probe(PoledFunction(0.0), 1.0, 10, 1), InvalidParameter);
  CHECK_THROWS_AS(injectivity_probe(PoledFunction(0.0), 0.5, 0, 1), InvalidParameter);
}
