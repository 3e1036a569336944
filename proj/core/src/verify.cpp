#include "hardy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/signal.hpp"

namespace hardy {

namespace {

constexpr std::array<std::string_view, 10> kClaimNames = {
    "prop_reflect", "single_root", "lemma10_chain",      "theorem1",           "corollary1",
    "corollary2",   "theorem2",    "theorem3_truncated", "qian_tail_identity", "qian_tail_inequality",
};

DecompositionChain interior_chain(const Series& f, const RootOptions& opts) {
  DecompositionChain chain = decompose(f, opts);
  if (!chain.near_boundary.empty()) {
    throw PreconditionFailed("f has " + std::to_string(chain.near_boundary.size()) +
                             " roots on or near the unit circle");
  }
  return chain;
}

void require(bool ok, const WeightSequence& w, const char* what) {
  if (!ok) throw WeightClassMismatch("weight " + w.describe() + " is not " + what);
}

double identity_tol(const Series& f, const VerifyOptions& opts) {
  return opts.tol.value_or(default_identity_tol(f));
}

// sum_j (1 - |alpha_j|^2) y(q_j)
double weighted_corrections(const std::vector<Complex>& alphas, const std::vector<Series>& qs,
                            const WeightSequence& w) {
  double s = 0.0;
  for (std::size_t j = 0; j < alphas.size(); ++j) s += (1.0 - std::norm(alphas[j])) * y_seminorm_sq(qs[j], w);
  return s;
}

std::vector<Series> f_over_linear_factors(const Series& f, const std::vector<Complex>& alphas) {
  std::vector<Series> out;
  out.reserve(alphas.size());
  for (Complex a : alphas) out.push_back(deflate(f, a).quotient);
  return out;
}

std::vector<Series> g_over_factors_checked(const DecompositionChain& chain) {
  auto [qs, overflow] = g_over_conjugate_factors(chain);
  const double scale = std::sqrt(h2_norm_sq(chain.g()));
  if (overflow > 1e-8 * std::max(scale, 1.0)) {
    throw ChainInconsistent("final stage is not divisible by a conjugate factor; overflow " + std::to_string(overflow));
  }
  return qs;
}

}  // namespace

std::string_view to_string(Claim c) noexcept { return kClaimNames[static_cast<std::size_t>(c)]; }

Claim claim_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kClaimNames.size(); ++i) {
    if (kClaimNames[i] == name) return kAllClaims[i];
  }
  throw ParseError("unknown claim '" + std::string(name) + "'");
}

double VerificationReport::scale() const noexcept { return std::max({std::abs(lhs), std::abs(rhs), 1.0}); }

VerificationReport make_report(Claim claim, Relation relation, double lhs, double rhs, double tol) {
  VerificationReport r;
  r.claim = claim;
  r.relation = relation;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  if (relation == Relation::identity) {
    r.slack = std::abs(lhs - rhs);
    r.pass = r.slack <= tol * r.scale();
  } else {
    r.slack = rhs - lhs;
    r.pass = r.slack >= -tol * r.scale();
  }
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) r.pass = false;
  return r;
}

double default_identity_tol(const Series& f) noexcept { return f.degree() <= 8 ? 1e-10 : 1e-9; }

std::vector<VerificationReport> verify_prop_reflect(const Series& f, const WeightSequence& w,
                                                    const VerifyOptions& opts) {
  const DecompositionChain chain = interior_chain(f, opts.roots);
  const double tol = opts.tol.value_or(kReflectionTol);
  std::vector<VerificationReport> out;
  for (std::size_t k = 0; k < chain.alphas.size(); ++k) {
    const Complex a = chain.alphas[k];
    const double lhs = x_norm_sq(chain.stages[k + 1], w);
    const double rhs = x_norm_sq(chain.stages[k], w) - (1.0 - std::norm(a)) * y_seminorm_sq(chain.h_list[k], w);
    VerificationReport r = make_report(Claim::prop_reflect, Relation::identity, lhs, rhs, tol);
    r.weight = w.describe();
    r.context["step"] = static_cast<double>(k);
    r.context["alpha_re"] = a.real();
    r.context["alpha_im"] = a.imag();
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport verify_single_root(const Series& f, const WeightSequence& w, const VerifyOptions& opts) {
  const DecompositionChain chain = interior_chain(f, opts.roots);
  if (chain.alphas.size() != 1) {
    throw PreconditionFailed("single-root check needs exactly one root inside the disk, found " +
                             std::to_string(chain.alphas.size()));
  }
  const std::vector<Series> qs = g_over_factors_checked(chain);
  const double lhs = x_norm_sq(chain.g(), w);
  const double rhs = x_norm_sq(f, w) - weighted_corrections(chain.alphas, qs, w);
  VerificationReport r = make_report(Claim::single_root, Relation::identity, lhs, rhs,
                                     opts.tol.value_or(kReflectionTol));
  r.weight = w.describe();
  r.context["alpha_re"] = chain.alphas[0].real();
  r.context["alpha_im"] = chain.alphas[0].imag();
  return r;
}

std::vector<VerificationReport> verify_lemma10_chain(const Series& f, const WeightSequence& w,
                                                     const VerifyOptions& opts) {
  const DecompositionChain chain = interior_chain(f, opts.roots);
  const double tol = identity_tol(f, opts);
  const double xf = x_norm_sq(f, w);
  std::vector<VerificationReport> out;
  double corrections = 0.0;
  for (std::size_t n = 1; n <= chain.alphas.size(); ++n) {
    corrections += (1.0 - std::norm(chain.alphas[n - 1])) * y_seminorm_sq(chain.h_list[n - 1], w);
    VerificationReport r =
        make_report(Claim::lemma10_chain, Relation::identity, x_norm_sq(chain.stages[n], w), xf - corrections, tol);
    r.weight = w.describe();
    r.context["prefix"] = static_cast<double>(n);
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport verify_theorem1(const Series& f, const WeightSequence& w, const VerifyOptions& opts) {
  require(classify(w, default_horizon(f)).convex, w, "convex");
  const DecompositionChain chain = interior_chain(f, opts.roots);
  const std::vector<Series> qs = g_over_factors_checked(chain);
  const double lhs = x_norm_sq(chain.g(), w);
  const double rhs = x_norm_sq(f, w) - weighted_corrections(chain.alphas, qs, w);
  VerificationReport r =
      make_report(Claim::theorem1, Relation::inequality, lhs, rhs, opts.tol.value_or(kInequalityTol));
  r.weight = w.describe();
  r.context["roots"] = static_cast<double>(chain.alphas.size());
  return r;
}

VerificationReport verify_corollary1(const Series& f, const WeightSequence& w, const VerifyOptions& opts) {
  require(classify(w, default_horizon(f)).constant_step, w, "constant-step");
  const DecompositionChain chain = interior_chain(f, opts.roots);
  const std::vector<Series> qs = g_over_factors_checked(chain);
  const double lhs = x_norm_sq(chain.g(), w);
  const double corrections = weighted_corrections(chain.alphas, qs, w);
  VerificationReport r =
      make_report(Claim::corollary1, Relation::identity, lhs, x_norm_sq(f, w) - corrections, identity_tol(f, opts));
  r.weight = w.describe();
  r.context["roots"] = static_cast<double>(chain.alphas.size());
  r.context["corrections"] = corrections;
  return r;
}

VerificationReport verify_corollary2(const Series& f, const VerifyOptions& opts) {
  const DecompositionChain chain = interior_chain(f, opts.roots);
  const std::vector<Series> qs = g_over_factors_checked(chain);
  auto sobolev = [](const Series& s) {
    double acc = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) acc += (1.0 + static_cast<double>(j * j)) * std::norm(s[j]);
    return acc;
  };
  auto dirichlet_plus = [](const Series& s) {
    double acc = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) acc += static_cast<double>(j + 1) * std::norm(s[j]);
    return acc;
  };
  double corrections = 0.0;
  for (std::size_t j = 0; j < qs.size(); ++j) {
    corrections += (1.0 - std::norm(chain.alphas[j])) * (2.0 * dirichlet_plus(qs[j]) - h2_norm_sq(qs[j]));
  }
  VerificationReport r = make_report(Claim::corollary2, Relation::inequality, sobolev(chain.g()),
                                     sobolev(f) - corrections, opts.tol.value_or(kInequalityTol));
  r.weight = "sobolev_w12";
  r.context["roots"] = static_cast<double>(chain.alphas.size());
  return r;
}

VerificationReport verify_theorem2(const Series& f, const WeightSequence& w, const VerifyOptions& opts) {
  require(classify(w, default_horizon(f)).concave, w, "concave");
  const DecompositionChain chain = interior_chain(f, opts.roots);
  const std::vector<Series> qs = f_over_linear_factors(f, chain.alphas);
  const double lhs = x_norm_sq(chain.g(), w);
  const double rhs = x_norm_sq(f, w) - weighted_corrections(chain.alphas, qs, w);
  VerificationReport r =
      make_report(Claim::theorem2, Relation::inequality, lhs, rhs, opts.tol.value_or(kInequalityTol));
  r.weight = w.describe();
  r.context["roots"] = static_cast<double>(chain.alphas.size());
  return r;
}

bool blaschke_partial_sums_stable(const RootSet& roots) noexcept {
  if (roots.size() < 8) return true;
  const std::size_t half = (roots.size() + 1) / 2;
  double total = 0.0;
  double head = 0.0;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    const double d = 1.0 - std::abs(roots[j]);
    total += d;
    if (j < half) head += d;
  }
  return total - head <= 0.1 * total;
}

std::vector<VerificationReport> verify_theorem3_truncated(const RootSet& roots, const Series& g,
                                                          const WeightSequence& w, std::span<const std::size_t> caps,
                                                          const Theorem3Options& opts) {
  const GrowthClass cls = classify(w, 64);
  require(cls.concave && cls.tail_summable && cls.limit.has_value(), w, "concave with a summable tail");
  for (Complex a : roots) {
    if (!(std::abs(a) < 1.0)) throw DomainError("root outside the open unit disk");
  }
  if (!blaschke_partial_sums_stable(roots)) {
    throw BlaschkeConditionViolated("partial sums of 1 - |alpha_j| do not stabilise over the root list");
  }
  if (g.is_zero()) throw ZeroSeries("g must not be the zero series");
  {
    const RootSearch left = find_roots_in_disk(g, opts.verify.roots);
    if (!left.inside.empty() || !left.near_boundary.empty()) {
      throw PreconditionFailed("g has roots in the closed unit disk");
    }
  }

  const double gh2 = h2_norm_sq(g);
  const double sup_bound = std::max(4.0 * w.gamma_at(1), 4.0 * *w.tail_sum()) * gh2;
  double blaschke_mass = 0.0;
  for (Complex a : roots) blaschke_mass += 1.0 - std::norm(a);
  const double total_bound = sup_bound * blaschke_mass;
  const double xg = x_norm_sq(g, w);
  const std::size_t g_len = std::max<std::size_t>(g.size(), 1);
  const double tol = opts.verify.tol.value_or(kInequalityTol);

  std::vector<VerificationReport> out;
  for (std::size_t cap : caps) {
    if (cap > roots.size()) {
      throw InvalidSpec("cap " + std::to_string(cap) + " exceeds the " + std::to_string(roots.size()) + " known roots");
    }
    const RootSet head = roots.prefix(cap);

    // Sample B_K g on the circle and project, doubling the projection length
    // until the projected coefficients re-synthesise the samples.
    std::size_t length = std::max(opts.min_projection_length, next_power_of_two(2 * g_len));
    Series projected;
    double roundtrip = 0.0;
    std::size_t samples_used = 0;
    for (;;) {
      const std::size_t count = next_power_of_two(8 * length * g_len);
      std::vector<Complex> samples(count);
      double peak = 0.0;
      for (std::size_t k = 0; k < count; ++k) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count));
        samples[k] = blaschke_eval(head, 0.0, 0, z) * evaluate_unchecked(g.coeffs(), z);
        peak = std::max(peak, std::abs(samples[k]));
      }
      projected = project_coefficients(samples, length - 1);
      const std::vector<Complex> back = boundary_samples(projected, count);
      double err = 0.0;
      for (std::size_t k = 0; k < count; ++k) err = std::max(err, std::abs(back[k] - samples[k]));
      roundtrip = err / std::max(peak, 1e-300);
      samples_used = count;
      if (roundtrip <= opts.roundtrip_target || length >= opts.max_projection_length) break;
      length *= 2;
    }

    const std::vector<Complex>& alphas = head.roots();
    const std::vector<Series> qs = f_over_linear_factors(projected, alphas);
    double partial = 0.0;
    double max_term = 0.0;
    bool monotone = true;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      const double y = y_seminorm_sq(qs[j], w);
      const double term = (1.0 - std::norm(alphas[j])) * y;
      if (term < 0.0 || partial + term < partial) monotone = false;
      partial += term;
      max_term = std::max(max_term, y);
    }
    const double rhs = x_norm_sq(projected, w) - partial;

    VerificationReport r = make_report(Claim::theorem3_truncated, Relation::inequality, xg, rhs, tol);
    r.weight = w.describe();

    // The exact chain on the projected polynomial: its final stage should be g.
    const DecompositionChain chain = reflect_chain(projected, alphas, opts.verify.roots);
    const double final_gap = std::abs(x_norm_sq(chain.g(), w) - xg) / std::max(xg, 1.0);

    const bool bounded = max_term <= sup_bound * (1.0 + tol) && partial <= total_bound * (1.0 + tol);
    r.pass = r.pass && monotone && bounded && roundtrip <= opts.roundtrip_limit;
    r.context["cap"] = static_cast<double>(cap);
    r.context["projection_length"] = static_cast<double>(length);
    r.context["samples"] = static_cast<double>(samples_used);
    r.context["roundtrip_error"] = roundtrip;
    r.context["correction_sum"] = partial;
    r.context["correction_bound"] = total_bound;
    r.context["max_y_term"] = max_term;
    r.context["y_bound"] = sup_bound;
    r.context["partial_sums_monotone"] = monotone ? 1.0 : 0.0;
    r.context["final_stage_gap"] = final_gap;
    out.push_back(std::move(r));
  }
  return out;
}

QianTailReports verify_qian_tail(const Series& f, std::size_t k, const VerifyOptions& opts) {
  if (k < 1) throw InvalidSpec("tail index k must be at least 1");
  const DecompositionChain chain = interior_chain(f, opts.roots);
  const WeightSequence w = WeightSequence::indicator(k);
  const double tf = tail_energy(f, k);
  const double tg = tail_energy(chain.g(), k);
  double corrections = 0.0;
  for (std::size_t j = 0; j < chain.alphas.size(); ++j) {
    corrections += (1.0 - std::norm(chain.alphas[j])) * y_seminorm_sq(chain.h_list[j], w);
  }
  QianTailReports out{
      make_report(Claim::qian_tail_identity, Relation::identity, tg, tf - corrections, identity_tol(f, opts)),
      make_report(Claim::qian_tail_inequality, Relation::inequality, tg, tf, opts.tol.value_or(kInequalityTol)),
  };
  for (VerificationReport* r : {&out.identity, &out.inequality}) {
    r->weight = w.describe();
    r->context["k"] = static_cast<double>(k);
  }
  return out;
}

std::vector<YOrdering> lemma11_values(const DecompositionChain& chain, const WeightSequence& w) {
  auto [qs, overflow] = g_over_conjugate_factors(chain);
  std::vector<YOrdering> rows;
  rows.reserve(chain.alphas.size());
  for (std::size_t j = 0; j < chain.alphas.size(); ++j) {
    const Complex a = chain.alphas[j];
    rows.push_back({a, y_seminorm_sq(qs[j], w), y_seminorm_sq(chain.h_list[j], w),
                    y_seminorm_sq(deflate(chain.input(), a).quotient, w)});
  }
  return rows;
}

bool lemma11_ordering_holds(const YOrdering& row, const GrowthClass& cls, double tol) noexcept {
  const double slack = tol * std::max({std::abs(row.g_side), std::abs(row.h), std::abs(row.f_side), 1.0});
  bool ok = true;
  if (cls.convex) ok = ok && row.g_side <= row.h + slack && row.h <= row.f_side + slack;
  if (cls.concave) ok = ok && row.f_side <= row.h + slack && row.h <= row.g_side + slack;
  return ok;
}

ChainHealth chain_health(const DecompositionChain& chain) {
  const Series& f = chain.input();
  const Series& g = chain.g();
  const double nf = h2_norm_sq(f);
  const double ng = h2_norm_sq(g);
  ChainHealth h{};
  h.h2_gap = std::abs(nf - ng) / std::max(nf, 1e-300);
  const std::size_t count = std::max<std::size_t>(64, next_power_of_two(4 * std::max(f.size(), g.size())));
  const std::vector<Complex> fs = boundary_samples(f, count);
  const std::vector<Complex> gs = boundary_samples(g, count);
  double peak = 0.0;
  double gap = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    peak = std::max(peak, std::abs(fs[k]));
    gap = std::max(gap, std::abs(std::abs(fs[k]) - std::abs(gs[k])));
  }
  h.boundary_gap = gap / std::max(peak, 1e-300);
  return h;
}

double Rng::uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::uniform_int(std::size_t lo, std::size_t hi) noexcept {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<std::size_t>(x % span);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
  // splitmix64 finaliser over a combination of the three inputs
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1) + 0xBF58476D1CE4E5B9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

GeneratedInstance generate(const InstanceSpec& spec) {
  if (spec.root_count > spec.degree_cap) {
    throw InvalidSpec("root_count " + std::to_string(spec.root_count) + " exceeds degree_cap " +
                      std::to_string(spec.degree_cap));
  }
  if (!(spec.radius_min >= 0.0) || !(spec.radius_max < 1.0) || spec.radius_min > spec.radius_max) {
    throw InvalidSpec("root radius range must satisfy 0 <= min <= max < 1");
  }
  Rng rng(spec.seed);
  GeneratedInstance out;
  const double r2_lo = spec.radius_min * spec.radius_min;
  const double r2_hi = spec.radius_max * spec.radius_max;
  for (std::size_t j = 0; j < spec.root_count; ++j) {
    const double r = std::sqrt(rng.uniform(r2_lo, r2_hi));
    out.planted.push_back(std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  for (std::size_t j = spec.root_count; j < spec.degree_cap; ++j) {
    const double r = 0.9 * std::sqrt(rng.uniform());
    out.outer_factors.push_back(std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  const std::size_t n = spec.degree_cap + 1;
  std::vector<Complex> one(n);
  one[0] = 1.0;
  Series f(std::move(one));
  for (Complex a : out.planted) f = multiply(f, Series{-a, 1.0}, spec.degree_cap);
  for (Complex b : out.outer_factors) f = multiply_conjugate_linear(f, b).resized(n);
  out.f = std::move(f);
  return out;
}

Series generate_instance(const InstanceSpec& spec) { return generate(spec).f; }

}  // namespace hardy
