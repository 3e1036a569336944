#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/signal.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

std::vector<double> sampled(std::size_t k, double (*fn)(double)) {
  std::vector<double> s(k);
  for (std::size_t j = 0; j < k; ++j) s[j] = fn(2.0 * std::numbers::pi * double(j) / double(k));
  return s;
}

}  // namespace

TEST(Signal, SignalValidation) {
  EXPECT_THROW(BoundarySignal({1.0, 2.0}), InvalidSignal);
  EXPECT_THROW(BoundarySignal({1.0, 2.0, 3.0, 4.0, 5.0, 6.0}), InvalidSignal);
  EXPECT_THROW(BoundarySignal({1.0, NAN, 0.0, 0.0}), NonFinite);
  EXPECT_NO_THROW(BoundarySignal({1.0, 2.0, 3.0, 4.0}));
}

TEST(Signal, CosineBecomesZ) {
  const Series f = analytic_signal(BoundarySignal(sampled(64, [](double t) { return std::cos(t); })), 4);
  ASSERT_EQ(f.size(), 5u);
  EXPECT_TRUE(approx_equal(f, Series{0.0, 1.0, 0.0, 0.0, 0.0}, 1e-12, 0.0));
}

TEST(Signal, ConstantAndMixedExamples) {
  EXPECT_TRUE(approx_equal(analytic_signal(BoundarySignal(std::vector<double>(16, 1.0)), 3), Series{1.0}, 1e-14, 0.0));
  const Series f = analytic_signal(
      BoundarySignal(sampled(32, [](double t) { return std::cos(2 * t) + 0.5 * std::cos(t); })), 5);
  EXPECT_TRUE(approx_equal(f, Series{0.0, 0.5, 1.0}, 1e-13, 0.0));
  // Sine: Hilbert transform of sin is -cos, so F = -i z.
  const Series s = analytic_signal(BoundarySignal(sampled(16, [](double t) { return std::sin(t); })), 3);
  EXPECT_TRUE(approx_equal(s, Series{0.0, Complex(0, -1)}, 1e-13, 0.0));
}

TEST(Signal, CapTooLarge) {
  const BoundarySignal s(std::vector<double>(16, 1.0));
  EXPECT_THROW(analytic_signal(s, 8), CapTooLarge);
  EXPECT_NO_THROW(analytic_signal(s, 7));
}

TEST(Signal, MatchesDirectDftOracle) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> n;
  std::vector<double> v(64);
  for (auto& x : v) x = n(rng);
  const Series f = analytic_signal(BoundarySignal(v), 20);
  for (std::size_t m = 0; m <= 20; ++m) {
    Complex c = 0.0;
    for (std::size_t j = 0; j < 64; ++j) c += v[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(m * j) / 64.0);
    c /= 64.0;
    EXPECT_LT(std::abs(f[m] - (m == 0 ? c : 2.0 * c)), 1e-13);
  }
}

TEST(Signal, RealPartFidelityForTrigPolynomials) {
  std::mt19937_64 rng(67);
  std::normal_distribution<double> n;
  for (int t = 0; t < 10; ++t) {
    const std::size_t deg = 10;
    std::vector<double> a(deg + 1), b(deg + 1);
    for (std::size_t m = 0; m <= deg; ++m) {
      a[m] = n(rng);
      b[m] = m == 0 ? 0.0 : n(rng);
    }
    const std::size_t k = 64;
    std::vector<double> s(k);
    for (std::size_t j = 0; j < k; ++j) {
      const double th = 2.0 * std::numbers::pi * double(j) / double(k);
      for (std::size_t m = 0; m <= deg; ++m) s[j] += a[m] * std::cos(m * th) + b[m] * std::sin(m * th);
    }
    const Series f = analytic_signal(BoundarySignal(s), deg);
    const auto z = boundary_samples(f, k);
    for (std::size_t j = 0; j < k; ++j) EXPECT_NEAR(z[j].real(), s[j], 1e-9);
  }
}

TEST(BoundarySamples, Examples) {
  auto s = boundary_samples(Series{1.0}, 4);
  for (Complex v : s) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-15);
  s = boundary_samples(Series{0.0, 1.0}, 4);
  const Complex expect[] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(s[j] - expect[j]), 0.0, 1e-15);
  s = boundary_samples(Series{1.0, 1.0}, 8);
  for (int j = 0; j < 8; ++j) {
    EXPECT_NEAR(std::abs(s[j] - (1.0 + std::polar(1.0, 2.0 * std::numbers::pi * j / 8.0))), 0.0, 1e-15);
  }
  EXPECT_THROW(boundary_samples(Series{1.0, 1.0, 1.0}, 5), KTooSmall);
  // Non power-of-two counts use direct evaluation.
  s = boundary_samples(Series{1.0, 2.0}, 6);
  for (int j = 0; j < 6; ++j) {
    EXPECT_NEAR(std::abs(s[j] - (1.0 + 2.0 * std::polar(1.0, 2.0 * std::numbers::pi * j / 6.0))), 0.0, 1e-14);
  }
}

TEST(Project, Examples) {
  EXPECT_TRUE(approx_equal(project_coefficients(boundary_samples(Series{1.0, 0.5}, 8), 2), Series{1.0, 0.5, 0.0},
                           1e-15, 0.0));
  const std::vector<Complex> c(8, Complex(2.0, -1.0));
  EXPECT_TRUE(approx_equal(project_coefficients(c, 3), Series{Complex(2.0, -1.0)}, 1e-15, 0.0));
  EXPECT_THROW(project_coefficients(c, 4), CapTooLarge);
}

TEST(Project, RoundTripAllSampleCounts) {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> n;
  for (std::size_t deg : {0u, 3u, 10u}) {
    std::vector<Complex> a(deg + 1);
    for (auto& x : a) x = {n(rng), n(rng)};
    const Series f(a);
    for (std::size_t k = 2 * (deg + 1); k <= 2 * (deg + 1) + 9; ++k) {
      EXPECT_TRUE(approx_equal(project_coefficients(boundary_samples(f, k), deg), f, 1e-10, 0.0))
          << "deg " << deg << " K " << k;
    }
  }
}

TEST(Project, BlaschkeProductParsevalBound) {
  // 30 Blaschke factors times G, projected at cap 255: H2 of the projection
  // does not exceed the boundary mean square.
  std::vector<Complex> rs;
  for (int j = 1; j <= 30; ++j) rs.push_back(std::polar(1.0 - 1.0 / ((j + 1.0) * (j + 1.0)), double(j)));
  const std::size_t k = 2048;
  std::vector<Complex> samples(k);
  double mean = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(k));
    Complex v = 1.0 + 0.3 * z;
    for (Complex a : rs) v *= (a - z) / (1.0 - std::conj(a) * z);
    samples[j] = v;
    mean += std::norm(v);
  }
  mean /= double(k);
  const Series p = project_coefficients(samples, 255);
  EXPECT_LE(h2_norm_sq(p), mean * (1 + 1e-12));
}

TEST(Project, ParsevalWithDiscardedTail) {
  std::mt19937_64 rng(73);
  std::normal_distribution<double> n;
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> s(64);
    for (auto& x : s) x = {n(rng), n(rng)};
    double mean = 0.0;
    for (Complex v : s) mean += std::norm(v);
    mean /= 64.0;
    const Series full = project_coefficients(s, 31);
    const Series head = project_coefficients(s, 10);
    EXPECT_LE(h2_norm_sq(head), mean);
    // All 64 DFT bins together carry the mean square exactly.
    std::vector<Complex> d = s;
    fft_in_place(d, -1);
    double bins = 0.0;
    for (Complex v : d) bins += std::norm(v / 64.0);
    EXPECT_NEAR(bins, mean, 1e-12 * mean);
    EXPECT_GE(bins - h2_norm_sq(full), -1e-12);
  }
}

TEST(Fft, MatchesDirectSum) {
  std::vector<Complex> a{1.0, Complex(2, 1), -1.0, 0.5, Complex(0, 3), 2.0, -2.0, 1.0};
  std::vector<Complex> b = a;
  fft_in_place(b, -1);
  for (std::size_t m = 0; m < 8; ++m) {
    Complex c = 0.0;
    for (std::size_t j = 0; j < 8; ++j) c += a[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(m * j) / 8.0);
    EXPECT_LT(std::abs(b[m] - c), 1e-13);
  }
  std::vector<Complex> bad(6);
  EXPECT_THROW(fft_in_place(bad, 1), DomainError);
  EXPECT_TRUE(is_power_of_two(64));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_EQ(next_power_of_two(65), 128u);
}
