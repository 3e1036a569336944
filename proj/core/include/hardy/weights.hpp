#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/series.hpp"

namespace hardy {

enum class WeightFamily { dirichlet, sobolev_square, constant_step, indicator, concave_power_sum, table };

enum class Extension { error, hold_last };

/// Growth flags of a weight sequence.
///  convex:   gamma_{n+2} - 2 gamma_{n+1} + gamma_n >= 0 for all n
///  concave:  the same second difference <= 0 for all n
struct GrowthClass {
  bool convex = false;
  bool concave = false;
  bool constant_step = false;
  bool bounded = false;
  std::optional<double> limit;  ///< M when bounded
  bool tail_summable = false;   ///< sum_n (M - gamma_n) < infinity
};

/// Monotone nondecreasing weight gamma_n with gamma_0 = 0.
///
/// Closed-form families:
///   dirichlet               gamma_n = n
///   sobolev_square          gamma_n = n^2
///   constant_step(c)        gamma_n = c n
///   indicator(k)            gamma_n = [n >= k], k >= 1
///   concave_power_sum(beta) gamma_n = sum_{j=1}^{n} j^{-beta}, beta a positive integer
/// plus an explicit table with a declared rule for indices past its end.
class WeightSequence {
 public:
  static WeightSequence dirichlet();
  static WeightSequence sobolev_square();
  static WeightSequence constant_step(double c);
  static WeightSequence indicator(std::size_t k);
  static WeightSequence concave_power_sum(int beta);
  static WeightSequence table(std::vector<double> values, Extension rule);

  /// Inverse of describe(): "family" or "family:param", tables as
  /// "table:v0,v1,...[:hold_last|:error]". Throws ParseError.
  static WeightSequence parse(std::string_view descriptor);

  WeightFamily family() const noexcept { return family_; }

  /// gamma_n. Throws IndexError past the end of a table with Extension::error.
  double gamma_at(std::size_t n) const;

  /// gamma_{n+1} - gamma_n, evaluated in closed form where one exists.
  double step_at(std::size_t n) const;

  /// gamma_0 ... gamma_{count-1}.
  std::vector<double> gammas(std::size_t count) const;

  /// Gamma_0 ... Gamma_{count-1}, Gamma_n = gamma_{n+1} - gamma_n.
  std::vector<double> steps(std::size_t count) const;

  /// lim gamma_n, when finite.
  std::optional<double> limit() const noexcept { return limit_; }

  /// sum_{n>=0} (M - gamma_n), when finite.
  std::optional<double> tail_sum() const noexcept { return tail_sum_; }

  double constant() const noexcept { return param_; }
  std::size_t index() const noexcept { return k_; }
  int beta() const noexcept { return beta_; }
  const std::vector<double>& table_values() const noexcept { return table_; }
  Extension extension() const noexcept { return extension_; }

  /// Compact descriptor, e.g. "dirichlet", "constant_step:2", "indicator:3".
  std::string describe() const;

 private:
  WeightSequence() = default;

  WeightFamily family_ = WeightFamily::dirichlet;
  double param_ = 1.0;
  std::size_t k_ = 1;
  int beta_ = 1;
  std::vector<double> table_;
  Extension extension_ = Extension::error;
  std::optional<double> limit_;
  std::optional<double> tail_sum_;
};

/// Default sampling horizon for classification of a weight used on `f`.
std::size_t default_horizon(const Series& f) noexcept;

/// Growth classification. Sampled second differences over n <= horizon;
/// closed-form families report their analytic class instead.
GrowthClass classify(const WeightSequence& w, std::size_t horizon = 64);

/// Sampled classification only, ignoring analytic tags (exposed for testing).
GrowthClass classify_sampled(const WeightSequence& w, std::size_t horizon);

/// sum_j gamma_j |a_j|^2 over the stored coefficients.
double x_norm_sq(const Series& f, const WeightSequence& w);

/// sum_j (gamma_{j+1} - gamma_j) |a_j|^2 over the stored coefficients.
double y_seminorm_sq(const Series& f, const WeightSequence& w);

/// Riemann zeta at s > 1 via direct summation plus an Euler-Maclaurin tail.
double zeta(double s);

}  // namespace hardy
