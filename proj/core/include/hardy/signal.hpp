#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hardy/series.hpp"

namespace hardy {

/// Real samples s(2 pi k / K), k = 0..K-1, with K a power of two, K >= 4.
class BoundarySignal {
 public:
  explicit BoundarySignal(std::vector<double> samples);

  std::size_t size() const noexcept { return samples_.size(); }
  const std::vector<double>& samples() const noexcept { return samples_; }

 private:
  std::vector<double> samples_;
};

/// F = s + i H(s) truncated at degree `cap`: a_0 = c_0, a_n = 2 c_n for the
/// discrete Fourier coefficients c_n of s. Convention: H(cos) = sin.
Series analytic_signal(const BoundarySignal& s, std::size_t cap);

/// f(e^{2 pi i k / K}) for k = 0..K-1. Requires K >= 2 (f.size()).
std::vector<Complex> boundary_samples(const Series& f, std::size_t k);

/// Discrete Fourier projection onto frequencies 0..cap.
Series project_coefficients(std::span<const Complex> samples, std::size_t cap);

bool is_power_of_two(std::size_t n) noexcept;
std::size_t next_power_of_two(std::size_t n) noexcept;

/// In-place radix-2 FFT; sign -1 for the forward transform sum x_k e^{-2 pi i k n / K}.
void fft_in_place(std::vector<Complex>& data, int sign);

}  // namespace hardy
