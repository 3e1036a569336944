#include "hardy/unwind.hpp"

#include <string>

namespace hardy {

UnwindingExpansion unwind(const Series& f, std::size_t depth, const UnwindOptions& opts) {
  if (depth < 1) throw InvalidSpec("unwinding depth must be at least 1");
  if (f.is_zero()) throw ZeroSeries("cannot unwind the zero series");

  const std::size_t length = f.size();
  const double floor = opts.floor_ratio * h2_norm_sq(f);

  UnwindingExpansion e;
  Series current = f;
  std::vector<Complex> one(length);
  one[0] = 1.0;
  Series cumulative(std::move(one));

  for (std::size_t n = 0; n < depth; ++n) {
    const DecompositionChain chain = decompose(current, opts.roots);
    for (Complex alpha : chain.alphas) cumulative = multiply_blaschke_factor(cumulative, alpha);

    const Series& g = chain.g();
    std::vector<Complex> rest(g.vec());
    const Complex constant = rest[0];
    rest[0] = Complex{};
    Series residual(std::move(rest));
    const double energy = h2_norm_sq(residual);

    e.constants.push_back(constant);
    e.cumulative_blaschke.push_back(cumulative);
    e.blaschke_zeros.push_back(chain.alphas);
    e.residual_h2.push_back(energy);
    const bool done = residual.is_zero() || energy < floor;
    e.residuals.push_back(std::move(residual));
    if (done) {
      e.terminated = true;
      break;
    }
    current = e.residuals.back();
  }

  if (!e.terminated && opts.require_termination) {
    throw DepthExhausted("unwinding did not terminate within " + std::to_string(depth) + " steps", std::move(e));
  }
  return e;
}

Series reconstruct(const UnwindingExpansion& e, std::size_t n) {
  if (n >= e.depth()) {
    throw IndexError("reconstruction depth " + std::to_string(n) + " not available; expansion has " +
                     std::to_string(e.depth()) + " terms");
  }
  Series sum = Series::zeros(e.cumulative_blaschke[0].size());
  for (std::size_t j = 0; j <= n; ++j) sum = sum + e.constants[j] * e.cumulative_blaschke[j];
  return sum;
}

std::vector<double> residual_decay_rate(const UnwindingExpansion& e) {
  if (e.depth() < 2) throw InsufficientDepth("decay rates need at least two recorded depths");
  std::vector<double> ratios;
  for (std::size_t n = 0; n + 1 < e.depth(); ++n) {
    if (e.residual_h2[n] > 0.0) ratios.push_back(e.residual_h2[n + 1] / e.residual_h2[n]);
  }
  return ratios;
}

}  // namespace hardy
