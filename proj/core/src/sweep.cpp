#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "hardy/errors.hpp"
#include "hardy/verify.hpp"

namespace hardy {

namespace {

std::size_t claim_index(Claim c) { return static_cast<std::size_t>(c); }

WeightSequence any_weight(Rng& rng) {
  switch (rng.uniform_int(0, 4)) {
    case 0:
      return WeightSequence::dirichlet();
    case 1:
      return WeightSequence::sobolev_square();
    case 2:
      return WeightSequence::constant_step(0.5 * static_cast<double>(rng.uniform_int(1, 6)));
    case 3:
      return WeightSequence::indicator(rng.uniform_int(1, 6));
    default:
      return WeightSequence::concave_power_sum(static_cast<int>(rng.uniform_int(1, 4)));
  }
}

WeightSequence convex_weight(Rng& rng) {
  switch (rng.uniform_int(0, 2)) {
    case 0:
      return WeightSequence::dirichlet();
    case 1:
      return WeightSequence::sobolev_square();
    default:
      return WeightSequence::constant_step(0.5 * static_cast<double>(rng.uniform_int(1, 6)));
  }
}

WeightSequence concave_weight(Rng& rng) {
  switch (rng.uniform_int(0, 3)) {
    case 0:
      return WeightSequence::concave_power_sum(static_cast<int>(rng.uniform_int(1, 4)));
    case 1:
      return WeightSequence::indicator(1);
    case 2:
      return WeightSequence::dirichlet();
    default:
      return WeightSequence::constant_step(0.5 * static_cast<double>(rng.uniform_int(1, 6)));
  }
}

// How far inside its tolerance a report sits, relative to its scale.
double margin(const VerificationReport& r) {
  if (!r.pass) return -std::numeric_limits<double>::infinity();
  const double s = r.slack / r.scale();
  return r.relation == Relation::identity ? r.tol - s : r.tol + s;
}

VerificationReport worst_of(std::vector<VerificationReport> reports, Claim claim, const std::string& weight) {
  if (reports.empty()) {
    VerificationReport r = make_report(claim, claim == Claim::qian_tail_inequality || claim == Claim::theorem1 ||
                                                      claim == Claim::theorem2 || claim == Claim::corollary2 ||
                                                      claim == Claim::theorem3_truncated
                                                  ? Relation::inequality
                                                  : Relation::identity,
                                       0.0, 0.0, 0.0);
    r.weight = weight;
    return r;
  }
  auto it = std::min_element(reports.begin(), reports.end(),
                             [](const auto& a, const auto& b) { return margin(a) < margin(b); });
  return std::move(*it);
}

VerificationReport theorem3_instance(Rng& rng) {
  const std::size_t count = rng.uniform_int(16, 20);
  const double c = rng.uniform(0.5, 1.0);
  std::vector<Complex> alphas;
  for (std::size_t j = 1; j <= count; ++j) {
    const double r = 1.0 - c / static_cast<double>((j + 1) * (j + 1));
    alphas.push_back(std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  Series g{1.0};
  if (rng.uniform_int(0, 1) == 1) {
    const Complex beta = std::polar(0.5 * rng.uniform(), rng.uniform(0.0, 2.0 * std::numbers::pi));
    g = multiply_conjugate_linear(g, beta);
  }
  const WeightSequence w = rng.uniform_int(0, 2) == 0 ? WeightSequence::indicator(1)
                                                       : WeightSequence::concave_power_sum(static_cast<int>(rng.uniform_int(3, 4)));
  const std::vector<std::size_t> caps{count / 2, count};
  VerificationReport r =
      worst_of(verify_theorem3_truncated(RootSet(alphas), g, w, caps), Claim::theorem3_truncated, w.describe());
  r.context["roots"] = static_cast<double>(count);
  return r;
}

}  // namespace

VerificationReport sweep_instance(Claim claim, std::uint64_t seed, std::size_t index) {
  const std::uint64_t instance_seed = mix_seed(seed, claim_index(claim), index);
  Rng rng(instance_seed);
  VerificationReport report;
  std::string weight_name;
  try {
    if (claim == Claim::theorem3_truncated) {
      report = theorem3_instance(rng);
    } else {
      InstanceSpec spec;
      spec.degree_cap = rng.uniform_int(2, 32);
      spec.root_count = claim == Claim::single_root ? 1 : rng.uniform_int(1, std::min<std::size_t>(spec.degree_cap, 8));
      spec.radius_min = 0.0;
      spec.radius_max = 0.9;
      std::optional<WeightSequence> w;
      switch (claim) {
        case Claim::prop_reflect:
        case Claim::single_root:
        case Claim::lemma10_chain:
          w = any_weight(rng);
          break;
        case Claim::theorem1:
          w = convex_weight(rng);
          break;
        case Claim::corollary1:
          w = rng.uniform_int(0, 1) == 0 ? WeightSequence::dirichlet()
                                         : WeightSequence::constant_step(0.5 * static_cast<double>(rng.uniform_int(1, 6)));
          break;
        case Claim::theorem2:
          w = concave_weight(rng);
          break;
        default:
          break;
      }
      weight_name = w ? w->describe() : (claim == Claim::corollary2 ? "sobolev_w12" : "indicator");
      spec.weight = weight_name;
      spec.seed = rng.next();
      const Series f = generate_instance(spec);

      switch (claim) {
        case Claim::prop_reflect:
          report = worst_of(verify_prop_reflect(f, *w), claim, weight_name);
          break;
        case Claim::single_root:
          report = verify_single_root(f, *w);
          break;
        case Claim::lemma10_chain:
          report = worst_of(verify_lemma10_chain(f, *w), claim, weight_name);
          break;
        case Claim::theorem1:
          report = verify_theorem1(f, *w);
          break;
        case Claim::corollary1:
          report = verify_corollary1(f, *w);
          break;
        case Claim::corollary2:
          report = verify_corollary2(f);
          break;
        case Claim::theorem2:
          report = verify_theorem2(f, *w);
          break;
        case Claim::qian_tail_identity:
        case Claim::qian_tail_inequality: {
          std::vector<VerificationReport> all;
          for (std::size_t k = 1; k <= static_cast<std::size_t>(std::max(f.degree(), 1L)); ++k) {
            QianTailReports q = verify_qian_tail(f, k);
            all.push_back(claim == Claim::qian_tail_identity ? std::move(q.identity) : std::move(q.inequality));
          }
          report = worst_of(std::move(all), claim, "indicator");
          break;
        }
        case Claim::theorem3_truncated:
          break;
      }
      report.context["degree"] = static_cast<double>(spec.degree_cap);
      report.context["planted_roots"] = static_cast<double>(spec.root_count);
    }
  } catch (const Error& e) {
    report = VerificationReport{};
    report.claim = claim;
    report.weight = weight_name;
    report.pass = false;
    report.error = e.what();
  }
  report.seed = instance_seed;
  report.context["instance"] = static_cast<double>(index);
  return report;
}

std::vector<VerificationReport> run_sweep(const SweepConfig& config) {
  const std::size_t per_claim = config.count;
  const std::size_t total = per_claim * config.claims.size();
  std::vector<VerificationReport> out(total);
  auto work = [&](std::size_t i) { out[i] = sweep_instance(config.claims[i / per_claim], config.seed, i % per_claim); };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1 || total < 2) {
    for (std::size_t i = 0; i < total; ++i) work(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) work(i);
    });
  }
  pool.clear();
  return out;
}

}  // namespace hardy
