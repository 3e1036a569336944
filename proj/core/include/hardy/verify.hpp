#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/series.hpp"
#include "hardy/weights.hpp"

namespace hardy {

enum class Claim {
  prop_reflect,
  single_root,
  lemma10_chain,
  theorem1,
  corollary1,
  corollary2,
  theorem2,
  theorem3_truncated,
  qian_tail_identity,
  qian_tail_inequality,
};

inline constexpr std::array<Claim, 10> kAllClaims = {
    Claim::prop_reflect, Claim::single_root,        Claim::lemma10_chain,      Claim::theorem1,
    Claim::corollary1,   Claim::corollary2,         Claim::theorem2,           Claim::theorem3_truncated,
    Claim::qian_tail_identity, Claim::qian_tail_inequality,
};

std::string_view to_string(Claim c) noexcept;
/// Throws ParseError on an unknown name.
Claim claim_from_string(std::string_view name);

enum class Relation { identity, inequality };

/// One checked claim on one instance.
///   identity:   slack = |lhs - rhs|, pass iff slack <= tol * scale
///   inequality: slack = rhs - lhs,   pass iff slack >= -tol * scale
/// with scale = max(|lhs|, |rhs|, 1). Extra conditions a claim imposes
/// (monotone partial sums, projection accuracy) are folded into `pass`.
struct VerificationReport {
  Claim claim = Claim::theorem1;
  Relation relation = Relation::identity;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string weight;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> context;
  /// Set when the instance could not be evaluated; such a report never passes.
  std::string error;

  double scale() const noexcept;
};

VerificationReport make_report(Claim claim, Relation relation, double lhs, double rhs, double tol);

struct VerifyOptions {
  RootOptions roots;
  /// Overrides the default tolerance policy when set.
  std::optional<double> tol;
};

/// 1e-10 for degree <= 8, else 1e-9.
double default_identity_tol(const Series& f) noexcept;
inline constexpr double kInequalityTol = 1e-9;
inline constexpr double kReflectionTol = 1e-10;

/// One report per reflection step of the decomposition.
std::vector<VerificationReport> verify_prop_reflect(const Series& f, const WeightSequence& w,
                                                    const VerifyOptions& opts = {});

/// Equality case for a function with exactly one root in the disk.
VerificationReport verify_single_root(const Series& f, const WeightSequence& w, const VerifyOptions& opts = {});

/// One report per chain prefix n = 1..m:
///   ||F_n||_X^2 = ||F||_X^2 - sum_{j<=n} (1 - |alpha_j|^2) ||H_j||_Y^2.
std::vector<VerificationReport> verify_lemma10_chain(const Series& f, const WeightSequence& w,
                                                     const VerifyOptions& opts = {});

/// Convex weights:
///   ||G||_X^2 <= ||F||_X^2 - sum_j (1 - |alpha_j|^2) ||G / (1 - conj(alpha_j) z)||_Y^2.
VerificationReport verify_theorem1(const Series& f, const WeightSequence& w, const VerifyOptions& opts = {});

/// Constant-step weights: the convex bound holds with equality.
VerificationReport verify_corollary1(const Series& f, const WeightSequence& w, const VerifyOptions& opts = {});

/// Hardy-Sobolev bound with ||.||_{W^{1,2}}^2 = sum (1 + j^2)|a_j|^2 and the
/// Dirichlet norm sum (j + 1)|a_j|^2.
VerificationReport verify_corollary2(const Series& f, const VerifyOptions& opts = {});

/// Concave weights:
///   ||G||_X^2 <= ||F||_X^2 - sum_j (1 - |alpha_j|^2) ||F / (z - alpha_j)||_Y^2.
VerificationReport verify_theorem2(const Series& f, const WeightSequence& w, const VerifyOptions& opts = {});

struct Theorem3Options {
  VerifyOptions verify;
  /// Relative sup-norm error allowed when re-synthesising the boundary samples
  /// from the projected coefficients; the projection cap doubles until met.
  double roundtrip_target = 1e-10;
  /// Acceptance threshold on that error.
  double roundtrip_limit = 1e-9;
  std::size_t min_projection_length = 64;
  std::size_t max_projection_length = std::size_t{1} << 17;
};

/// Bounded concave weights with summable tail, applied to
/// F_K = (first K Blaschke factors) * g, represented by boundary sampling and
/// Fourier projection. One report per entry of `caps`.
std::vector<VerificationReport> verify_theorem3_truncated(const RootSet& roots, const Series& g,
                                                          const WeightSequence& w, std::span<const std::size_t> caps,
                                                          const Theorem3Options& opts = {});

/// Heuristic witness that a finite root list is the head of a Blaschke
/// sequence: the second half of the list adds at most 10% to sum (1 - |alpha|).
bool blaschke_partial_sums_stable(const RootSet& roots) noexcept;

struct QianTailReports {
  VerificationReport identity;
  VerificationReport inequality;
};

/// Tail energies sum_{n>=k} of F and G: the inequality tail(G) <= tail(F) and
/// the identity obtained from the chain with the indicator(k) weight.
QianTailReports verify_qian_tail(const Series& f, std::size_t k, const VerifyOptions& opts = {});

/// Per-root values of the three Y-quantities ordered by weight growth:
/// ||G / (1 - conj(alpha_k) z)||_Y^2, ||H_k||_Y^2 and ||F / (z - alpha_k)||_Y^2.
struct YOrdering {
  Complex alpha;
  double g_side;
  double h;
  double f_side;
};
std::vector<YOrdering> lemma11_values(const DecompositionChain& chain, const WeightSequence& w);

/// Convex weights: g_side <= h <= f_side; concave: reversed. Within tol * scale.
bool lemma11_ordering_holds(const YOrdering& row, const GrowthClass& cls, double tol) noexcept;

/// Relative gaps ||G||^2 vs ||F||^2 and max_k ||F(z_k)| - |G(z_k)|| / max_k |F(z_k)|
/// on the boundary grid of the chain.
struct ChainHealth {
  double h2_gap;
  double boundary_gap;
};
ChainHealth chain_health(const DecompositionChain& chain);

/// Randomized instance description.
struct InstanceSpec {
  std::size_t root_count = 0;
  double radius_min = 0.0;
  double radius_max = 0.9;
  std::size_t degree_cap = 8;
  std::string weight = "dirichlet";
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  Series f;
  std::vector<Complex> planted;         ///< roots inside the disk
  std::vector<Complex> outer_factors;   ///< beta_k of the root-free factor prod (1 - conj(beta_k) z)
};

/// prod_j (z - alpha_j) * prod_k (1 - conj(beta_k) z), alpha_j uniform (by
/// area) in the annulus, |beta_k| < 0.9. Deterministic in the seed.
GeneratedInstance generate(const InstanceSpec& spec);
Series generate_instance(const InstanceSpec& spec);

/// Deterministic generator used by the instance generator and sweeps. The
/// engine is std::mt19937_64; the conversions to doubles and ranges are done
/// here because the standard distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : engine_(seed) {}
  std::uint64_t next() noexcept { return engine_(); }
  double uniform() noexcept;  ///< [0, 1)
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  std::size_t uniform_int(std::size_t lo, std::size_t hi) noexcept;  ///< inclusive

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

struct SweepConfig {
  std::vector<Claim> claims{kAllClaims.begin(), kAllClaims.end()};
  std::size_t count = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// count reports per claim, ordered by claim then instance index. Identical
/// content for every thread count.
std::vector<VerificationReport> run_sweep(const SweepConfig& config);

/// The single report for instance `index` of `claim` in a sweep.
VerificationReport sweep_instance(Claim claim, std::uint64_t seed, std::size_t index);

}  // namespace hardy
