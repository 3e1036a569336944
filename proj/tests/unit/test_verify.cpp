#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/io.hpp"
#include "hardy/verify.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

const Series kQuadratic{1.0 / 6.0, -5.0 / 6.0, 1.0};

double sobolev_x(const oracle::Poly& p) {
  return oracle::weighted(p, [](std::size_t j) { return double(j * j); });
}
double sobolev_y(const oracle::Poly& p) {
  return oracle::weighted(p, [](std::size_t j) { return 2.0 * double(j) + 1.0; });
}

}  // namespace

TEST(Report, PassRules) {
  VerificationReport r = make_report(Claim::theorem1, Relation::inequality, 1.0, 1.0 - 5e-10, 1e-9);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.slack, (1.0 - 5e-10) - 1.0);
  r = make_report(Claim::theorem1, Relation::inequality, 1.0, 1.0 - 2e-9, 1e-9);
  EXPECT_FALSE(r.pass);
  r = make_report(Claim::corollary1, Relation::identity, 100.0, 100.0 + 5e-8, 1e-9);
  EXPECT_TRUE(r.pass);  // scale 100
  r = make_report(Claim::corollary1, Relation::identity, 0.0, 2e-9, 1e-9);
  EXPECT_FALSE(r.pass);  // scale 1
  EXPECT_FALSE(make_report(Claim::corollary1, Relation::identity, NAN, 0.0, 1e-9).pass);
}

TEST(Report, ClaimNames) {
  for (Claim c : kAllClaims) EXPECT_EQ(claim_from_string(to_string(c)), c);
  EXPECT_THROW(claim_from_string("theorem9"), ParseError);
}

TEST(ConvexBound, QuadraticSobolevAgainstOracle) {
  const VerificationReport r = verify_theorem1(kQuadratic, WeightSequence::sobolev_square());
  EXPECT_TRUE(r.pass);
  EXPECT_GE(r.slack, 0.0);
  // G = (1 - z/3)(1 - z/2); G/(1 - z/3) = 1 - z/2; G/(1 - z/2) = 1 - z/3.
  const double lhs = sobolev_x({1.0, -5.0 / 6.0, 1.0 / 6.0});
  const double rhs = sobolev_x(kQuadratic.vec()) - (1.0 - 1.0 / 9.0) * sobolev_y({1.0, -0.5}) -
                     (1.0 - 0.25) * sobolev_y({1.0, -1.0 / 3.0});
  EXPECT_NEAR(r.lhs, lhs, 1e-13);
  EXPECT_NEAR(r.rhs, rhs, 1e-13);
}

TEST(ConvexBound, TrivialCases) {
  VerificationReport r = verify_theorem1(Series{0.0, 1.0}, WeightSequence::dirichlet());
  EXPECT_NEAR(r.lhs, 0.0, 1e-15);
  EXPECT_NEAR(r.rhs, 0.0, 1e-15);
  EXPECT_TRUE(r.pass);
  r = verify_theorem1(Series{1.0}, WeightSequence::dirichlet());
  EXPECT_EQ(r.lhs, r.rhs);
  EXPECT_THROW(verify_theorem1(kQuadratic, WeightSequence::concave_power_sum(3)), WeightClassMismatch);
  EXPECT_THROW(verify_theorem1(Series{0.0, 1.0, 1.0}, WeightSequence::dirichlet()), PreconditionFailed);
}

TEST(ConstantStepIdentity, QuadraticDirichletExact) {
  const VerificationReport r = verify_corollary1(kQuadratic, WeightSequence::dirichlet());
  EXPECT_NEAR(r.lhs, 27.0 / 36.0, 1e-12);
  EXPECT_NEAR(r.context.at("corrections"), 70.0 / 36.0, 1e-12);
  EXPECT_NEAR(r.rhs, 97.0 / 36.0 - 70.0 / 36.0, 1e-12);
  EXPECT_TRUE(r.pass);
  const VerificationReport t = verify_corollary1(Series{0.0, 1.0}, WeightSequence::dirichlet());
  EXPECT_NEAR(t.lhs, 0.0, 1e-15);
  EXPECT_NEAR(t.rhs, 0.0, 1e-15);
  EXPECT_THROW(verify_corollary1(kQuadratic, WeightSequence::sobolev_square()), WeightClassMismatch);
}

TEST(ConstantStepIdentity, RandomConstantStep) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    InstanceSpec spec;
    spec.degree_cap = 16;
    spec.root_count = 5;
    spec.seed = seed;
    const VerificationReport r = verify_corollary1(generate_instance(spec), WeightSequence::constant_step(2.0));
    EXPECT_LE(r.slack, 1e-9 * r.scale());
  }
}

TEST(SobolevBound, Examples) {
  VerificationReport r = verify_corollary2(Series{0.0, 1.0});
  EXPECT_NEAR(r.lhs, 1.0, 1e-15);
  EXPECT_NEAR(r.rhs, 1.0, 1e-15);
  EXPECT_TRUE(r.pass);
  r = verify_corollary2(kQuadratic);
  EXPECT_GE(r.slack, 0.0);
  // Oracle: W(g) <= W(f) - sum (1 - |a|^2)(2 D(q) - H(q)).
  auto w12 = [](const oracle::Poly& p) { return oracle::weighted(p, [](std::size_t j) { return 1.0 + double(j * j); }); };
  auto d = [](const oracle::Poly& p) { return oracle::weighted(p, [](std::size_t j) { return double(j + 1); }); };
  auto h = [](const oracle::Poly& p) { return oracle::weighted(p, [](std::size_t) { return 1.0; }); };
  const oracle::Poly q1{1.0, -0.5}, q2{1.0, -1.0 / 3.0};
  const double rhs = w12(kQuadratic.vec()) - (8.0 / 9.0) * (2 * d(q1) - h(q1)) - 0.75 * (2 * d(q2) - h(q2));
  EXPECT_NEAR(r.rhs, rhs, 1e-13);
  EXPECT_NEAR(r.lhs, w12({1.0, -5.0 / 6.0, 1.0 / 6.0}), 1e-13);
  r = verify_corollary2(Series{1.0});
  EXPECT_EQ(r.lhs, r.rhs);
}

TEST(ConcaveBound, Examples) {
  VerificationReport r = verify_theorem2(kQuadratic, WeightSequence::concave_power_sum(3));
  EXPECT_TRUE(r.pass);
  EXPECT_GE(r.slack, 0.0);
  // F/(z - 1/3) = z - 1/2 and F/(z - 1/2) = z - 1/3.
  auto g3 = [](std::size_t n) {
    double s = 0;
    for (std::size_t j = 1; j <= n; ++j) s += 1.0 / double(j * j * j);
    return s;
  };
  auto y3 = [](std::size_t n) { return 1.0 / std::pow(double(n + 1), 3); };
  const double rhs = oracle::weighted(kQuadratic.vec(), g3) - (8.0 / 9.0) * oracle::weighted({-0.5, 1.0}, y3) -
                     0.75 * oracle::weighted({-1.0 / 3.0, 1.0}, y3);
  EXPECT_NEAR(r.rhs, rhs, 1e-14);

  const WeightSequence c1 = WeightSequence::constant_step(1.0);
  r = verify_theorem2(Series{0.0, 1.0}, c1);
  const VerificationReport t1 = verify_theorem1(Series{0.0, 1.0}, c1);
  EXPECT_NEAR(r.rhs, t1.rhs, 1e-15);
  EXPECT_NEAR(r.lhs, r.rhs, 1e-15);
  r = verify_theorem2(Series{1.0}, WeightSequence::concave_power_sum(3));
  EXPECT_EQ(r.lhs, r.rhs);
  EXPECT_THROW(verify_theorem2(kQuadratic, WeightSequence::sobolev_square()), WeightClassMismatch);
}

TEST(ConcaveBound, ConstantStepAgreesWithConvexBound) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    InstanceSpec spec;
    spec.degree_cap = 12;
    spec.root_count = 4;
    spec.seed = seed;
    const Series f = generate_instance(spec);
    const WeightSequence w = WeightSequence::constant_step(1.5);
    const double a = verify_theorem1(f, w).rhs;
    const double b = verify_theorem2(f, w).rhs;
    EXPECT_NEAR(a, b, 1e-9 * std::max(std::abs(a), 1.0));
  }
}

TEST(ReflectionSteps, OneReportPerStep) {
  const auto reports = verify_prop_reflect(kQuadratic, WeightSequence::sobolev_square());
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) EXPECT_TRUE(r.pass);
  EXPECT_TRUE(verify_prop_reflect(Series{1.0}, WeightSequence::dirichlet()).empty());
}

TEST(SingleRoot, EqualityAndPrecondition) {
  InstanceSpec spec;
  spec.degree_cap = 10;
  spec.root_count = 1;
  spec.seed = 3;
  for (const auto& w : {WeightSequence::dirichlet(), WeightSequence::sobolev_square(),
                        WeightSequence::concave_power_sum(2), WeightSequence::indicator(3)}) {
    const VerificationReport r = verify_single_root(generate_instance(spec), w);
    EXPECT_TRUE(r.pass) << w.describe();
    EXPECT_LE(r.slack, 1e-10 * r.scale());
  }
  EXPECT_THROW(verify_single_root(kQuadratic, WeightSequence::dirichlet()), PreconditionFailed);
  // The convex bound is an equality for a single root.
  const VerificationReport t = verify_theorem1(generate_instance(spec), WeightSequence::sobolev_square());
  EXPECT_LE(std::abs(t.slack), 1e-10 * t.scale());
}

TEST(ChainPrefix, PrefixReports) {
  const auto reports = verify_lemma10_chain(kQuadratic, WeightSequence::dirichlet());
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_NEAR(reports.back().lhs, 27.0 / 36.0, 1e-14);
  for (const auto& r : reports) EXPECT_TRUE(r.pass);
}

TEST(YOrdering, OrderingOnQuadratic) {
  const DecompositionChain chain = decompose(kQuadratic);
  for (const auto& w : {WeightSequence::sobolev_square(), WeightSequence::concave_power_sum(3),
                        WeightSequence::dirichlet()}) {
    const GrowthClass cls = classify(w);
    for (const auto& row : lemma11_values(chain, w)) EXPECT_TRUE(lemma11_ordering_holds(row, cls, 1e-9)) << w.describe();
  }
  // First root: H_1 equals F/(z - alpha_1).
  const auto rows = lemma11_values(chain, WeightSequence::sobolev_square());
  EXPECT_NEAR(rows[0].h, rows[0].f_side, 1e-14);
  // Last root: H_m equals G/(1 - conj(alpha_m) z).
  EXPECT_NEAR(rows[1].h, rows[1].g_side, 1e-14);
}

TEST(TailEnergy, Examples) {
  QianTailReports q = verify_qian_tail(Series{0.0, 1.0}, 1);
  EXPECT_NEAR(q.identity.lhs, 0.0, 1e-15);
  EXPECT_NEAR(q.identity.rhs, 0.0, 1e-15);
  EXPECT_NEAR(q.inequality.rhs, 1.0, 1e-15);
  EXPECT_TRUE(q.identity.pass && q.inequality.pass);

  q = verify_qian_tail(kQuadratic, 2);
  EXPECT_NEAR(q.identity.lhs, 1.0 / 36.0, 1e-15);
  // tail(F) - (8/9)|H_1[1]|^2 - (3/4)|H_2[1]|^2 with H_1 = z - 1/2, H_2 = 1 - z/3.
  EXPECT_NEAR(q.identity.rhs, 1.0 - 8.0 / 9.0 - 0.75 / 9.0, 1e-15);
  EXPECT_TRUE(q.identity.pass && q.inequality.pass);

  q = verify_qian_tail(Series{1.0, 0.3, 0.1}, 1);
  EXPECT_EQ(q.inequality.lhs, q.inequality.rhs);
  EXPECT_EQ(q.identity.lhs, q.identity.rhs);
  EXPECT_THROW(verify_qian_tail(kQuadratic, 0), InvalidSpec);
}

TEST(TailEnergy, SlackNonnegativeForEveryK) {
  InstanceSpec spec;
  spec.degree_cap = 14;
  spec.root_count = 5;
  spec.seed = 77;
  const Series f = generate_instance(spec);
  for (std::size_t k = 1; k <= 14; ++k) {
    const QianTailReports q = verify_qian_tail(f, k);
    EXPECT_GE(q.inequality.slack, 0.0) << "k=" << k;
    EXPECT_TRUE(q.identity.pass) << "k=" << k;
  }
}

TEST(TruncatedProduct, Preconditions) {
  const std::vector<std::size_t> caps{1};
  const RootSet one({0.5});
  EXPECT_THROW(verify_theorem3_truncated(one, Series{1.0}, WeightSequence::dirichlet(), caps), WeightClassMismatch);
  EXPECT_THROW(verify_theorem3_truncated(one, Series{1.0}, WeightSequence::concave_power_sum(2), caps),
               WeightClassMismatch);
  std::vector<Complex> harmonic;
  for (int j = 1; j <= 30; ++j) harmonic.push_back(1.0 - 1.0 / (j + 1.0));
  EXPECT_FALSE(blaschke_partial_sums_stable(RootSet(harmonic)));
  EXPECT_THROW(verify_theorem3_truncated(RootSet(harmonic), Series{1.0}, WeightSequence::concave_power_sum(3), caps),
               BlaschkeConditionViolated);
  EXPECT_THROW(verify_theorem3_truncated(one, Series{-0.5, 1.0}, WeightSequence::concave_power_sum(3), caps),
               PreconditionFailed);
  const std::vector<std::size_t> too_many{2};
  EXPECT_THROW(verify_theorem3_truncated(one, Series{1.0}, WeightSequence::concave_power_sum(3), too_many),
               InvalidSpec);
}

TEST(TruncatedProduct, EmptyRootsTrivial) {
  const std::vector<std::size_t> caps{0};
  const auto reports = verify_theorem3_truncated(RootSet{}, Series{1.0, 0.2}, WeightSequence::concave_power_sum(3), caps);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].pass);
  EXPECT_NEAR(reports[0].lhs, reports[0].rhs, 1e-12);
}

TEST(TruncatedProduct, SingleRootAgreesWithConcaveBound) {
  const Complex a(0.3, 0.4);
  const Series g{1.0, Complex(0.2, -0.1)};
  const WeightSequence w = WeightSequence::concave_power_sum(3);
  const std::vector<std::size_t> caps{1};
  const auto t3 = verify_theorem3_truncated(RootSet({a}), g, w, caps);
  ASSERT_EQ(t3.size(), 1u);
  EXPECT_TRUE(t3[0].pass);
  // The same function built directly as a truncated series.
  const Series f = multiply_blaschke_factor(g.resized(64), a);
  const VerificationReport t2 = verify_theorem2(-1.0 * f, w);
  EXPECT_NEAR(t3[0].rhs, t2.rhs, 1e-9);
  EXPECT_NEAR(t3[0].lhs, t2.lhs, 1e-9);
}

TEST(Generate, Examples) {
  InstanceSpec spec;
  spec.degree_cap = 6;
  spec.root_count = 0;
  spec.seed = 1;
  EXPECT_TRUE(find_roots_in_disk(generate_instance(spec)).inside.empty());

  spec.root_count = 1;
  spec.radius_min = spec.radius_max = 0.5;
  const GeneratedInstance g = generate(spec);
  ASSERT_EQ(g.planted.size(), 1u);
  EXPECT_NEAR(std::abs(g.planted[0]), 0.5, 1e-15);
  const RootSearch r = find_roots_in_disk(g.f);
  ASSERT_EQ(r.inside.size(), 1u);
  EXPECT_LT(std::abs(r.inside[0] - g.planted[0]), 1e-8);

  EXPECT_TRUE(approx_equal(generate_instance(spec), generate_instance(spec), 0.0, 0.0));
  spec.seed = 2;
  EXPECT_FALSE(approx_equal(generate_instance(spec), g.f, 0.0, 0.0));
}

TEST(Generate, InvalidSpecs) {
  InstanceSpec spec;
  spec.degree_cap = 2;
  spec.root_count = 3;
  EXPECT_THROW(generate(spec), InvalidSpec);
  spec.root_count = 1;
  spec.radius_max = 1.0;
  EXPECT_THROW(generate(spec), InvalidSpec);
  spec.radius_max = 0.2;
  spec.radius_min = 0.5;
  EXPECT_THROW(generate(spec), InvalidSpec);
}

TEST(Generate, PlantedRootsRecovered) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    InstanceSpec spec;
    spec.degree_cap = 20;
    spec.root_count = 6;
    spec.seed = seed;
    const GeneratedInstance g = generate(spec);
    EXPECT_EQ(g.f.size(), 21u);
    EXPECT_EQ(find_roots_in_disk(g.f).inside.size(), 6u) << "seed " << seed;
  }
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const std::size_t k = r.uniform_int(3, 7);
    EXPECT_GE(k, 3u);
    EXPECT_LE(k, 7u);
  }
  EXPECT_NE(mix_seed(1, 0, 0), mix_seed(1, 0, 1));
  EXPECT_NE(mix_seed(1, 0, 0), mix_seed(1, 1, 0));
}

TEST(Sweep, ThreadCountDoesNotChangeContent) {
  SweepConfig c;
  c.count = 6;
  c.seed = 11;
  c.claims = {Claim::prop_reflect, Claim::theorem1, Claim::qian_tail_identity, Claim::corollary2};
  c.threads = 1;
  const auto serial = run_sweep(c);
  c.threads = 4;
  const auto parallel = run_sweep(c);
  ASSERT_EQ(serial.size(), 24u);
  ASSERT_EQ(parallel.size(), serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(io::report_to_json(serial[i]), io::report_to_json(parallel[i]));
    EXPECT_TRUE(serial[i].pass) << io::report_to_json(serial[i]);
  }
  EXPECT_EQ(serial[0].claim, Claim::prop_reflect);
  EXPECT_EQ(serial[6].claim, Claim::theorem1);
}

TEST(Sweep, SingleInstanceMatchesSweepEntry) {
  SweepConfig c;
  c.count = 3;
  c.seed = 4;
  c.claims = {Claim::theorem2};
  const auto all = run_sweep(c);
  EXPECT_EQ(io::report_to_json(sweep_instance(Claim::theorem2, 4, 2)), io::report_to_json(all[2]));
}
