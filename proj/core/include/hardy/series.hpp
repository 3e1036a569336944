#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

/// Truncated power series a_0 + a_1 z + ... + a_N z^N of a function analytic
/// on the unit disk. The stored length is explicit: trailing zeros are kept,
/// so a series of length N+1 always has degree cap N.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Complex> coeffs);
  Series(std::initializer_list<Complex> coeffs);

  /// Series of `length` zero coefficients.
  static Series zeros(std::size_t length);

  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  /// Truncation order N (= size() - 1); zero for the empty series.
  std::size_t degree_cap() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  /// Index of the last nonzero coefficient, or -1 when every coefficient is zero.
  long degree() const noexcept;

  bool is_zero() const noexcept { return degree() < 0; }

  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }

  /// Coefficient n, or zero past the stored length.
  Complex coeff(std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const std::vector<Complex>& vec() const noexcept { return coeffs_; }

  /// Copy with trailing zero coefficients removed.
  Series trimmed() const;

  /// Copy zero-padded or truncated to exactly `length` coefficients.
  Series resized(std::size_t length) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(Complex s, const Series& a);

 private:
  std::vector<Complex> coeffs_;
};

/// Equality after trimming trailing zeros, per coefficient within
/// abs_tol + rel_tol * max|coefficient|.
bool approx_equal(const Series& a, const Series& b, double abs_tol = 1e-10, double rel_tol = 1e-10);

/// Horner evaluation. Refuses |z| > 1 + 1e-12.
Complex evaluate(const Series& f, Complex z);

/// Horner evaluation with no domain restriction (internal use by root finders).
Complex evaluate_unchecked(std::span<const Complex> coeffs, Complex z) noexcept;

/// Cauchy product truncated at degree `cap` (result has cap+1 coefficients).
Series multiply(const Series& f, const Series& g, std::size_t cap);

struct Deflation {
  Series quotient;
  Complex remainder;
};

/// Synthetic division by (z - alpha), highest coefficient first:
/// f(z) = (z - alpha) q(z) + r with r = f(alpha). The quotient has one
/// coefficient fewer than f.
Deflation deflate(const Series& f, Complex alpha);

/// (1 - conj(alpha) z) f(z); the result has one coefficient more than f.
Series multiply_conjugate_linear(const Series& f, Complex alpha);

/// Division by (1 - conj(alpha) z), lowest coefficient first. Returns q with
/// one coefficient fewer than f and the overflow f_N + conj(alpha) q_{N-1},
/// which vanishes exactly when (1 - conj(alpha) z) divides f.
Deflation divide_conjugate_linear(const Series& f, Complex alpha);

/// Multiplication by the Blaschke factor (z - alpha) / (1 - conj(alpha) z),
/// carried out in the ring of series modulo z^{f.size()}.
Series multiply_blaschke_factor(const Series& f, Complex alpha);

/// Sum of |a_n|^2.
double h2_norm_sq(const Series& f) noexcept;

/// Sum of |a_n|^2 over n >= k.
double tail_energy(const Series& f, std::size_t k) noexcept;

/// Default root residual tolerance 1e-8 (1 + ||f||_{H^2}).
double default_root_tolerance(const Series& f) noexcept;

}  // namespace hardy
