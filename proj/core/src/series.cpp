#include "hardy/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kEvalRadius = 1.0 + 1e-12;

void require_finite(std::span<const Complex> c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!std::isfinite(c[i].real()) || !std::isfinite(c[i].imag())) {
      throw InvalidSeries("non-finite coefficient at index " + std::to_string(i));
    }
  }
}

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string("non-finite ") + what);
  }
}

}  // namespace

Series::Series(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { require_finite(coeffs_); }

Series::Series(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { require_finite(coeffs_); }

Series Series::zeros(std::size_t length) { return Series(std::vector<Complex>(length)); }

long Series::degree() const noexcept {
  for (std::size_t i = coeffs_.size(); i > 0; --i) {
    if (coeffs_[i - 1] != Complex{}) return static_cast<long>(i - 1);
  }
  return -1;
}

Series Series::trimmed() const {
  return Series(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + (degree() + 1)));
}

Series Series::resized(std::size_t length) const {
  std::vector<Complex> c(coeffs_);
  c.resize(length);
  return Series(std::move(c));
}

Series Series::operator-() const {
  std::vector<Complex> c(coeffs_);
  for (auto& x : c) x = -x;
  return Series(std::move(c));
}

Series operator+(const Series& a, const Series& b) {
  std::vector<Complex> c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
  std::vector<Complex> c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Series(std::move(c));
}

Series operator*(Complex s, const Series& a) {
  std::vector<Complex> c(a.vec());
  for (auto& x : c) x *= s;
  return Series(std::move(c));
}

bool approx_equal(const Series& a, const Series& b, double abs_tol, double rel_tol) {
  const std::size_t n = std::max(a.size(), b.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max({scale, std::abs(a.coeff(i)), std::abs(b.coeff(i))});
  const double tol = abs_tol + rel_tol * scale;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(a.coeff(i) - b.coeff(i)) > tol) return false;
  }
  return true;
}

Complex evaluate_unchecked(std::span<const Complex> coeffs, Complex z) noexcept {
  Complex acc{};
  for (std::size_t i = coeffs.size(); i > 0; --i) acc = acc * z + coeffs[i - 1];
  return acc;
}

Complex evaluate(const Series& f, Complex z) {
  require_finite(z, "evaluation point");
  if (std::abs(z) > kEvalRadius) {
    throw DomainError("evaluation outside the closed unit disk: |z| = " + std::to_string(std::abs(z)));
  }
  return evaluate_unchecked(f.coeffs(), z);
}

Series multiply(const Series& f, const Series& g, std::size_t cap) {
  std::vector<Complex> c(cap + 1);
  for (std::size_t i = 0; i < f.size() && i <= cap; ++i) {
    if (f[i] == Complex{}) continue;
    const std::size_t jmax = std::min(g.size(), cap - i + 1);
    for (std::size_t j = 0; j < jmax; ++j) c[i + j] += f[i] * g[j];
  }
  return Series(std::move(c));
}

Deflation deflate(const Series& f, Complex alpha) {
  require_finite(alpha, "deflation point");
  const std::size_t n = f.size();
  if (n == 0) return {Series{}, Complex{}};
  std::vector<Complex> q(n - 1);
  Complex carry{};
  for (std::size_t k = n - 1; k > 0; --k) {
    carry = f[k] + alpha * carry;
    q[k - 1] = carry;
  }
  const Complex remainder = f[0] + alpha * carry;
  return {Series(std::move(q)), remainder};
}

Series multiply_conjugate_linear(const Series& f, Complex alpha) {
  require_finite(alpha, "reflection point");
  const Complex ca = std::conj(alpha);
  std::vector<Complex> c(f.size() + 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    c[i] += f[i];
    c[i + 1] -= ca * f[i];
  }
  return Series(std::move(c));
}

Deflation divide_conjugate_linear(const Series& f, Complex alpha) {
  require_finite(alpha, "division point");
  const Complex ca = std::conj(alpha);
  const std::size_t n = f.size();
  if (n == 0) return {Series{}, Complex{}};
  std::vector<Complex> q(n - 1);
  Complex prev{};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    prev = f[k] + ca * prev;
    q[k] = prev;
  }
  const Complex overflow = f[n - 1] + ca * prev;
  return {Series(std::move(q)), overflow};
}

Series multiply_blaschke_factor(const Series& f, Complex alpha) {
  require_finite(alpha, "Blaschke zero");
  const Complex ca = std::conj(alpha);
  const std::size_t n = f.size();
  std::vector<Complex> c(n);
  Complex prev{};
  for (std::size_t k = 0; k < n; ++k) {
    const Complex h = (k > 0 ? f[k - 1] : Complex{}) - alpha * f[k];
    prev = h + ca * prev;
    c[k] = prev;
  }
  return Series(std::move(c));
}

double h2_norm_sq(const Series& f) noexcept { return tail_energy(f, 0); }

double tail_energy(const Series& f, std::size_t k) noexcept {
  double s = 0.0;
  for (std::size_t i = k; i < f.size(); ++i) s += std::norm(f[i]);
  return s;
}

double default_root_tolerance(const Series& f) noexcept { return 1e-8 * (1.0 + std::sqrt(h2_norm_sq(f))); }

}  // namespace hardy
