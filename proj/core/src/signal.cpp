#include "hardy/signal.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "hardy/errors.hpp"

namespace hardy {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_in_place(std::vector<Complex>& a, int sign) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw DomainError("FFT length " + std::to_string(n) + " is not a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Twiddles computed directly, not by recurrence, to keep rounding at one ulp.
  std::vector<Complex> tw(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    tw[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = a[i + k];
        const Complex v = a[i + k + half] * tw[k * stride];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

BoundarySignal::BoundarySignal(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 4 || !is_power_of_two(samples_.size())) {
    throw InvalidSignal("signal length " + std::to_string(samples_.size()) + " is not a power of two >= 4");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) throw NonFinite("signal sample " + std::to_string(i) + " is not finite");
  }
}

Series analytic_signal(const BoundarySignal& s, std::size_t cap) {
  const std::size_t k = s.size();
  if (2 * cap >= k) {
    throw CapTooLarge("cap " + std::to_string(cap) + " must be below K/2 = " + std::to_string(k / 2));
  }
  std::vector<Complex> data(s.samples().begin(), s.samples().end());
  fft_in_place(data, -1);
  std::vector<Complex> a(cap + 1);
  const double inv = 1.0 / static_cast<double>(k);
  a[0] = data[0] * inv;
  for (std::size_t n = 1; n <= cap; ++n) a[n] = 2.0 * inv * data[n];
  return Series(std::move(a));
}

std::vector<Complex> boundary_samples(const Series& f, std::size_t k) {
  if (k < 2 * f.size() || k == 0) {
    throw KTooSmall("K = " + std::to_string(k) + " is below 2 (deg f + 1) = " + std::to_string(2 * f.size()));
  }
  if (is_power_of_two(k)) {
    std::vector<Complex> data(k);
    std::copy(f.vec().begin(), f.vec().end(), data.begin());
    fft_in_place(data, +1);
    return data;
  }
  std::vector<Complex> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k));
    out[j] = evaluate_unchecked(f.coeffs(), z);
  }
  return out;
}

Series project_coefficients(std::span<const Complex> samples, std::size_t cap) {
  const std::size_t k = samples.size();
  if (2 * cap >= k) {
    throw CapTooLarge("cap " + std::to_string(cap) + " must be below half the sample count " + std::to_string(k));
  }
  for (const Complex& z : samples) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw NonFinite("non-finite boundary sample");
  }
  std::vector<Complex> a(cap + 1);
  const double inv = 1.0 / static_cast<double>(k);
  if (is_power_of_two(k)) {
    std::vector<Complex> data(samples.begin(), samples.end());
    fft_in_place(data, -1);
    for (std::size_t n = 0; n <= cap; ++n) a[n] = data[n] * inv;
  } else {
    for (std::size_t n = 0; n <= cap; ++n) {
      Complex acc{};
      for (std::size_t j = 0; j < k; ++j) {
        acc += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((n * j) % k) /
                                                static_cast<double>(k));
      }
      a[n] = acc * inv;
    }
  }
  return Series(std::move(a));
}

}  // namespace hardy
