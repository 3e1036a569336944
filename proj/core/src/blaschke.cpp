#include "hardy/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

std::string point_str(Complex z) { return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")"; }

void require_in_disk(Complex alpha) {
  if (!(std::abs(alpha) < 1.0)) throw DomainError("reflection point " + point_str(alpha) + " is not inside the unit disk");
}

}  // namespace

void sort_roots(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  // Moduli equal up to rounding form a tie group, ordered by argument.
  std::size_t start = 0;
  while (start < roots.size()) {
    std::size_t end = start + 1;
    while (end < roots.size() &&
           std::abs(roots[end]) - std::abs(roots[end - 1]) <= 1e-12 * std::max(1.0, std::abs(roots[end]))) {
      ++end;
    }
    std::sort(roots.begin() + static_cast<long>(start), roots.begin() + static_cast<long>(end),
              [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
    start = end;
  }
}

RootSet::RootSet(std::vector<Complex> roots) : roots_(std::move(roots)) { sort_roots(roots_); }

std::size_t RootSet::origin_multiplicity() const noexcept {
  return static_cast<std::size_t>(std::count(roots_.begin(), roots_.end(), Complex{}));
}

RootSet RootSet::prefix(std::size_t count) const {
  count = std::min(count, roots_.size());
  return RootSet(std::vector<Complex>(roots_.begin(), roots_.begin() + static_cast<long>(count)));
}

Series reflect_root(const Series& f, Complex alpha, const RootOptions& opts) {
  require_in_disk(alpha);
  const Deflation d = deflate(f, alpha);
  const double tol = opts.residual_tol(f);
  if (std::abs(d.remainder) > tol) {
    throw NotARoot(point_str(alpha) + " is not a root: |f(alpha)| = " + std::to_string(std::abs(d.remainder)) +
                   " exceeds " + std::to_string(tol));
  }
  return multiply_conjugate_linear(d.quotient, alpha);
}

DecompositionChain reflect_chain(const Series& f, const std::vector<Complex>& roots, const RootOptions& opts) {
  DecompositionChain chain;
  chain.stages.reserve(roots.size() + 1);
  chain.h_list.reserve(roots.size());
  chain.stages.push_back(f);
  const double tol = opts.residual_tol(f);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Complex alpha = roots[k];
    require_in_disk(alpha);
    Deflation d = deflate(chain.stages.back(), alpha);
    if (std::abs(d.remainder) > tol) {
      throw NotARoot("root " + std::to_string(k + 1) + " " + point_str(alpha) + " leaves remainder " +
                     std::to_string(std::abs(d.remainder)) + " in stage " + std::to_string(k));
    }
    chain.stages.push_back(multiply_conjugate_linear(d.quotient, alpha));
    chain.h_list.push_back(std::move(d.quotient));
  }
  chain.alphas = roots;
  chain.roots = RootSet(roots);
  return chain;
}

DecompositionChain decompose(const Series& f, const RootOptions& opts) {
  RootSearch found = find_roots_in_disk(f, opts);
  DecompositionChain chain;
  try {
    chain = reflect_chain(f, found.inside.roots(), opts);
  } catch (const NotARoot& e) {
    throw ChainInconsistent(e.what());
  }
  chain.near_boundary = std::move(found.near_boundary);
  if (!opts.check_chain) return chain;

  const double nf = h2_norm_sq(f);
  const double ng = h2_norm_sq(chain.g());
  if (std::abs(nf - ng) > 1e-9 * std::max(nf, 1e-300)) {
    throw ChainInconsistent("H2 norm not preserved: ||F||^2 = " + std::to_string(nf) +
                            ", ||G||^2 = " + std::to_string(ng));
  }
  if (!chain.g().is_zero()) {
    const RootSearch left = find_roots_in_disk(chain.g(), opts);
    if (!left.inside.empty()) {
      throw ChainInconsistent("final stage still has " + std::to_string(left.inside.size()) +
                              " roots inside the disk, nearest " + point_str(left.inside[0]));
    }
  }
  return chain;
}

std::pair<std::vector<Series>, double> g_over_conjugate_factors(const DecompositionChain& chain) {
  std::vector<Series> out;
  out.reserve(chain.alphas.size());
  double worst = 0.0;
  for (Complex alpha : chain.alphas) {
    Deflation d = divide_conjugate_linear(chain.g(), alpha);
    worst = std::max(worst, std::abs(d.remainder));
    out.push_back(std::move(d.quotient));
  }
  return {std::move(out), worst};
}

Complex blaschke_eval(const RootSet& roots, double phase, int origin_mult, Complex z) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("Blaschke product evaluated outside the closed disk");
  if (origin_mult < 0) throw DomainError("origin multiplicity must be nonnegative");
  Complex b = std::polar(1.0, phase);
  for (int i = 0; i < origin_mult; ++i) b *= z;
  for (Complex alpha : roots) b *= (alpha - z) / (1.0 - std::conj(alpha) * z);
  return b;
}

IdentitySides reflection_identity_gap(const Series& f, Complex alpha, const WeightSequence& w,
                                      const RootOptions& opts) {
  const Series reflected = reflect_root(f, alpha, opts);
  const Series h = deflate(f, alpha).quotient;
  const double lhs = x_norm_sq(reflected, w);
  const double rhs = x_norm_sq(f, w) - (1.0 - std::norm(alpha)) * y_seminorm_sq(h, w);
  return {lhs, rhs};
}

}  // namespace hardy
