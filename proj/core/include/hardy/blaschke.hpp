#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hardy/series.hpp"
#include "hardy/weights.hpp"

namespace hardy {

struct RootOptions {
  /// |f(alpha)| accepted as a root; defaults to 1e-8 (1 + ||f||_{H^2}).
  std::optional<double> root_residual_tol;
  /// Roots with | 1 - |alpha| | < boundary_margin are set aside as near-boundary.
  double boundary_margin = 1e-10;
  /// Iteration budget for the simultaneous (Aberth-Ehrlich) solver.
  int max_iterations = 500;
  /// Newton polishing steps per root.
  int newton_steps = 20;
  /// Above this degree the companion-matrix solver gives way to Aberth-Ehrlich.
  int companion_max_degree = 64;
  /// Check the invariants of a DecompositionChain after building it.
  bool check_chain = true;

  double residual_tol(const Series& f) const { return root_residual_tol.value_or(default_root_tolerance(f)); }
};

/// Roots inside the disk listed with multiplicity, ordered by nondecreasing
/// modulus with ties broken by increasing principal argument.
class RootSet {
 public:
  RootSet() = default;
  /// Sorts the given roots into canonical order.
  explicit RootSet(std::vector<Complex> roots);

  std::size_t size() const noexcept { return roots_.size(); }
  bool empty() const noexcept { return roots_.empty(); }
  const Complex& operator[](std::size_t i) const { return roots_[i]; }
  const std::vector<Complex>& roots() const noexcept { return roots_; }
  auto begin() const noexcept { return roots_.begin(); }
  auto end() const noexcept { return roots_.end(); }

  /// Number of roots exactly at the origin.
  std::size_t origin_multiplicity() const noexcept;

  /// The first `count` roots.
  RootSet prefix(std::size_t count) const;

 private:
  std::vector<Complex> roots_;
};

/// Canonical root ordering, in place.
void sort_roots(std::vector<Complex>& roots);

struct RootSearch {
  RootSet inside;
  std::vector<Complex> near_boundary;
};

/// Every root of the polynomial with |alpha| < 1 - margin, Newton-polished
/// and resolved with multiplicity by sequential deflation.
RootSearch find_roots_in_disk(const Series& f, const RootOptions& opts = {});

/// All roots of the polynomial (trailing zeros trimmed), unpolished.
std::vector<Complex> polynomial_roots(const Series& f, const RootOptions& opts = {});

/// The reflection (z - alpha) H(z) -> (1 - conj(alpha) z) H(z). Same length as f.
Series reflect_root(const Series& f, Complex alpha, const RootOptions& opts = {});

/// F_0 ... F_m with F_k the reflection of F_{k-1} at alpha_k and
/// H_k = F_{k-1} / (z - alpha_k).
struct DecompositionChain {
  std::vector<Series> stages;
  std::vector<Series> h_list;
  /// Roots in processing order; alphas[k] produced stages[k+1].
  std::vector<Complex> alphas;
  RootSet roots;
  std::vector<Complex> near_boundary;

  const Series& input() const { return stages.front(); }
  const Series& g() const { return stages.back(); }
};

/// Full Blaschke decomposition: find the roots, then reflect them in order.
DecompositionChain decompose(const Series& f, const RootOptions& opts = {});

/// Chain for a caller-chosen root sequence, processed in the given order.
DecompositionChain reflect_chain(const Series& f, const std::vector<Complex>& roots, const RootOptions& opts = {});

/// G / (1 - conj(alpha_j) z) for every alpha_j in processing order, by exact division of
/// the final stage. The second member is the largest division overflow.
std::pair<std::vector<Series>, double> g_over_conjugate_factors(const DecompositionChain& chain);

/// e^{i phase} z^m prod_j (alpha_j - z) / (1 - conj(alpha_j) z), for |z| <= 1.
Complex blaschke_eval(const RootSet& roots, double phase, int origin_mult, Complex z);

/// Both sides of the one-step reflection identity
///   ||phi_alpha(F)||_X^2 = ||F||_X^2 - (1 - |alpha|^2) ||H_alpha||_Y^2.
struct IdentitySides {
  double lhs;
  double rhs;
};
IdentitySides reflection_identity_gap(const Series& f, Complex alpha, const WeightSequence& w,
                                      const RootOptions& opts = {});

}  // namespace hardy
