#pragma once

#include <cstddef>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/errors.hpp"
#include "hardy/series.hpp"

namespace hardy {

/// Partial unwinding series
///   F = sum_{j<=n} G_j(0) B_0...B_j + B_0...B_n (G_n - G_n(0)),
/// where F = B_0 G_0 and G_n - G_n(0) = B_{n+1} G_{n+1}.
/// Entry n of every list describes depth n.
struct UnwindingExpansion {
  std::vector<Complex> constants;               ///< G_n(0)
  std::vector<Series> cumulative_blaschke;      ///< B_0...B_n modulo z^{N+1}
  std::vector<Series> residuals;                ///< G_n - G_n(0)
  std::vector<double> residual_h2;              ///< ||G_n - G_n(0)||^2
  std::vector<std::vector<Complex>> blaschke_zeros;  ///< zeros of B_n
  bool terminated = false;                      ///< the last residual is exactly zero or below the floor

  std::size_t depth() const noexcept { return constants.size(); }
};

struct UnwindOptions {
  RootOptions roots;
  /// Stop once residual_h2 < floor_ratio * ||f||^2.
  double floor_ratio = 1e-20;
  /// Throw DepthExhausted when `depth` steps do not terminate the expansion.
  bool require_termination = false;
};

class DepthExhausted : public Error {
 public:
  DepthExhausted(const std::string& what, UnwindingExpansion partial) : Error(what), partial_(std::move(partial)) {}
  const UnwindingExpansion& partial() const noexcept { return partial_; }

 private:
  UnwindingExpansion partial_;
};

/// Runs at most `depth` unwinding steps.
UnwindingExpansion unwind(const Series& f, std::size_t depth, const UnwindOptions& opts = {});

/// sum_{j<=n} G_j(0) B_0...B_j.
Series reconstruct(const UnwindingExpansion& e, std::size_t n);

/// residual_h2[n+1] / residual_h2[n] wherever residual_h2[n] > 0.
std::vector<double> residual_decay_rate(const UnwindingExpansion& e);

}  // namespace hardy
