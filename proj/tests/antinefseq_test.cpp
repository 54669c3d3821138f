#include <gtest/gtest.h>

#include <random>

#include "subadd/antinefseq.hpp"
#include "subadd/instances.hpp"
#include "support.hpp"

using namespace subadd;
using namespace subadd::antinefseq;
using subadd::surface::anti_nef_closure;
using subadd::surface::ceil_cycle;
using subadd::testing::expect_error;
using subadd::testing::make_cycle;
using subadd::testing::uniform;

namespace {

Cycle example_z(const ResolutionModel& m) {
  return make_cycle(m, {{"F1", 1}, {"E1", 3}, {"E2", 5}, {"F2", 1}});
}

// Oracle for the closure of Z - ceil(K).
Cycle closure_of_z_minus_ceil_k(const ResolutionModel& m, const Cycle& z) {
  return anti_nef_closure(m, z - ceil_cycle(m.canonical()));
}

Cycle random_anti_nef(const ResolutionModel& m, std::mt19937_64& rng, int hi) {
  return anti_nef_closure(m, subadd::testing::random_effective(m, rng, hi));
}

}  // namespace

TEST(Proximity, Examples) {
  auto none = surface::hirzebruch_jung(5, 2);
  EXPECT_EQ(proximity_matrix(none).p.rows(), 0u);
  auto a1 = surface::a1_blown_up_once();
  EXPECT_EQ(proximity_matrix(a1).p, QMatrix({{1}}));
  auto q52 = surface::quotient_five_two_blown_up_twice();
  auto prox = proximity_matrix(q52);
  EXPECT_EQ(prox.p, QMatrix({{1, -1}, {0, 1}}));
  EXPECT_TRUE(prox.proximate[1][0]);
  EXPECT_FALSE(prox.proximate[0][1]);
  EXPECT_EQ(prox.pullbacks[0], make_cycle(q52, {{"E1", 1}, {"E2", 1}}));
  EXPECT_EQ(prox.pullbacks[1], make_cycle(q52, {{"E2", 1}}));
  // pullback(E1) . strict(E2) = (E1 + E2) . E2 = 1 - 1 = 0; pullback(E2) . E1 = 1.
  EXPECT_EQ(q52.dot_curve(prox.pullbacks[0], q52.id("E2").index), 0);
  EXPECT_EQ(q52.dot_curve(prox.pullbacks[1], q52.id("E1").index), 1);
}

TEST(DCoordinates, Examples) {
  auto a1 = surface::a1_blown_up_once();
  auto dc = d_coordinates(a1, make_cycle(a1, {{"E1", 2}, {"F", 1}}));
  EXPECT_EQ(dc.base_part, subadd::testing::make_qcycle(a1, {{"F", Rational(1)}}));
  EXPECT_EQ(dc.d, DVector({1}));

  auto q52 = surface::quotient_five_two_blown_up_twice();
  dc = d_coordinates(q52, example_z(q52));
  EXPECT_EQ(dc.base_part, subadd::testing::make_qcycle(q52, {{"F1", Rational(1)}, {"F2", Rational(1)}}));
  EXPECT_EQ(dc.d, DVector({1, 1}));
  EXPECT_EQ(from_d_coordinates(q52, dc), surface::to_q(example_z(q52)));

  dc = d_coordinates(q52, q52.zero_cycle());
  EXPECT_TRUE(dc.base_part.is_zero());
  EXPECT_EQ(dc.d, DVector({0, 0}));
}

TEST(AntiNefTestD, Examples) {
  auto a1 = surface::a1_blown_up_once();
  QCycle f = subadd::testing::make_qcycle(a1, {{"F", Rational(1)}});
  EXPECT_TRUE(anti_nef_test_d(a1, DCoordinates{f, {1}}));
  auto q52 = surface::quotient_five_two_blown_up_twice();
  QCycle base = subadd::testing::make_qcycle(q52, {{"F1", Rational(1)}, {"F2", Rational(1)}});
  EXPECT_TRUE(anti_nef_test_d(q52, DCoordinates{base, {1, 1}}));
  EXPECT_EQ(proximity_matrix(q52).row(0, {1, 1}), 0);
  EXPECT_EQ(proximity_matrix(q52).row(1, {1, 1}), 1);
  EXPECT_FALSE(anti_nef_test_d(a1, DCoordinates{a1.zero(), {-1}}));
}

TEST(AntiNefTestD, BaseOnlyTestIsWeaker) {
  // Z = E1 on the blown-up A1: base part 0 is anti-nef and P d = (1) >= 0,
  // yet Z . F' = 1 > 0.
  auto a1 = surface::a1_blown_up_once();
  const auto prox = proximity_matrix(a1);
  DCoordinates dc{a1.zero(), {1}};
  EXPECT_TRUE(anti_nef_test_d_base_only(a1, prox, dc));
  EXPECT_FALSE(anti_nef_test_d(a1, prox, dc));
  EXPECT_FALSE(surface::is_anti_nef(a1, make_cycle(a1, {{"E1", 1}})));
}

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda_set(surface::a1_blown_up_once()), std::vector<std::size_t>({0}));
  auto q52 = surface::quotient_five_two_blown_up_twice();
  EXPECT_EQ(ceil_cycle(q52.canonical()), make_cycle(q52, {{"E1", 1}, {"E2", 1}}));
  EXPECT_EQ(lambda_set(q52), std::vector<std::size_t>({0}));
  EXPECT_TRUE(lambda_set(surface::ade("D5")).empty());
  EXPECT_TRUE(lambda_set(surface::hirzebruch_jung(7, 3)).empty());
  // Three -3 curves in a cycle: ceil(K) = -(A + B + C) lives on the base.
  surface::ModelDescription d;
  d.base_curves = {{"A", -3}, {"B", -3}, {"C", -3}};
  d.base_edges = {{"A", "B"}, {"B", "C"}, {"C", "A"}};
  expect_error(ErrorKind::NoLambda, [&] { lambda_set(surface::build_model(d)); });
}

TEST(ComputationSequence, Examples) {
  auto a1 = surface::a1_blown_up_once();
  auto fa = make_cycle(a1, {{"E1", 2}, {"F", 1}});
  auto t = computation_sequence(a1, fa);
  EXPECT_EQ(t.d, std::vector<DVector>({{0}}));
  EXPECT_EQ(t.final_cycle, make_cycle(a1, {{"E1", 1}, {"F", 1}}));
  t = computation_sequence(a1, 2 * fa);
  EXPECT_EQ(t.d, std::vector<DVector>({{1}}));
  EXPECT_EQ(t.final_cycle, make_cycle(a1, {{"E1", 3}, {"F", 2}}));

  auto q52 = surface::quotient_five_two_blown_up_twice();
  t = computation_sequence(q52, example_z(q52));
  EXPECT_EQ(t.d, std::vector<DVector>({{0, 1}, {1, 0}}));
  EXPECT_EQ(t.steps, std::vector<std::size_t>({0}));
  EXPECT_EQ(t.final_cycle, make_cycle(q52, {{"F1", 1}, {"E1", 3}, {"E2", 4}, {"F2", 1}}));
  EXPECT_EQ(t.final_cycle, closure_of_z_minus_ceil_k(q52, example_z(q52)));

  for (const char* spec : {"D4", "HJ(5,2)", "E7"}) {
    auto m = surface::catalog_model(spec);
    auto zf = surface::fundamental_cycle(m);
    t = computation_sequence(m, zf);
    EXPECT_EQ(t.d.size(), 1u);
    EXPECT_EQ(t.final_cycle, closure_of_z_minus_ceil_k(m, zf)) << spec;
  }
  expect_error(ErrorKind::NotAntiNef, [&] { computation_sequence(a1, make_cycle(a1, {{"E1", 1}})); });
}

TEST(PairedSequences, Examples) {
  auto a1 = surface::a1_blown_up_once();
  auto fa = make_cycle(a1, {{"E1", 2}, {"F", 1}});
  auto p = paired_sequences(a1, fa, fa);
  EXPECT_EQ(p.a.final_cycle, make_cycle(a1, {{"E1", 1}, {"F", 1}}));
  EXPECT_EQ(p.b.final_cycle, make_cycle(a1, {{"E1", 1}, {"F", 1}}));
  EXPECT_EQ(p.c.final_cycle, make_cycle(a1, {{"E1", 3}, {"F", 2}}));
  EXPECT_TRUE(p.d_inequality);
  EXPECT_TRUE(p.cycle_inequality);
  EXPECT_EQ(p.forms, std::vector<TripleForm>({TripleForm::BothLowered}));

  auto q52 = surface::quotient_five_two_blown_up_twice();
  auto z = example_z(q52);
  p = paired_sequences(q52, z, q52.zero_cycle());
  EXPECT_EQ(p.c.d, p.a.d);
  EXPECT_EQ(p.c.final_cycle, p.a.final_cycle);
  for (const auto& d : p.b.d) EXPECT_EQ(d, DVector({0, 0}));
  EXPECT_TRUE(p.b.final_cycle.is_zero());
}

TEST(PairedSequences, RandomPairsOnQuotientFiveTwo) {
  std::mt19937_64 rng(21);
  auto base = surface::hirzebruch_jung(5, 2).description();
  for (int t = 0; t < 80; ++t) {
    auto m = subadd::testing::add_random_blowups(base, uniform(rng, 0, 3), rng);
    auto fa = random_anti_nef(m, rng, 4), fb = random_anti_nef(m, rng, 4);
    try {
      auto p = paired_sequences(m, fa, fb);
      EXPECT_TRUE(p.cycle_inequality);
      EXPECT_EQ(p.a.final_cycle, closure_of_z_minus_ceil_k(m, fa));
      EXPECT_EQ(p.b.final_cycle, closure_of_z_minus_ceil_k(m, fb));
      EXPECT_EQ(p.c.final_cycle, closure_of_z_minus_ceil_k(m, fa + fb));
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NoLambda);
    }
  }
}

TEST(SubadditivityCheck2d, Examples) {
  auto a1 = surface::a1_blown_up_once();
  auto fa = make_cycle(a1, {{"E1", 2}, {"F", 1}});
  auto cert = subadditivity_check_2d(a1, fa, fa);
  EXPECT_TRUE(cert.holds);
  EXPECT_FALSE(cert.witness);
  EXPECT_EQ(cert.strict, std::vector<std::size_t>({a1.id("E1").index}));
  EXPECT_TRUE(cert.sequence_checked);
  EXPECT_TRUE(cert.warnings.empty());

  for (const char* spec : {"A3", "D4", "HJ(7,2)"}) {
    auto m = surface::catalog_model(spec);
    cert = subadditivity_check_2d(m, m.zero_cycle(), m.zero_cycle());
    EXPECT_TRUE(cert.holds);
    const auto unit = surface::multiplier_cycle(m, m.zero_cycle(), Rational(1));
    EXPECT_EQ(cert.j_a, unit);
    EXPECT_EQ(cert.j_b, unit);
    EXPECT_EQ(cert.j_ab, unit);
  }
  expect_error(ErrorKind::NotAntiNef, [&] { subadditivity_check_2d(a1, make_cycle(a1, {{"E1", 1}}), fa); });
}

TEST(SubadditivityCheck2d, DivisorsOnA1Fail) {
  auto m = surface::a1_with_two_rulings();
  auto d1 = surface::total_transform_marked(m, m.id("D1").index);
  auto d2 = surface::total_transform_marked(m, m.id("D2").index);
  auto cert = subadditivity_check_2d(m, d1, d2);
  EXPECT_FALSE(cert.holds);
  ASSERT_TRUE(cert.witness);
  EXPECT_EQ(*cert.witness, m.id("E").index);
  EXPECT_EQ(cert.j_a + cert.j_b, make_cycle(m, {{"D1", 1}, {"D2", 1}, {"E", 2}}));
  EXPECT_EQ(cert.j_ab, make_cycle(m, {{"D1", 1}, {"D2", 1}, {"E", 1}}));
}

TEST(ClosureFormulas, Examples) {
  auto a1 = surface::a1_blown_up_once();
  auto fa = make_cycle(a1, {{"E1", 2}, {"F", 1}});
  EXPECT_EQ(gorenstein_closure_formula(a1, fa), make_cycle(a1, {{"E1", 1}, {"F", 1}}));
  EXPECT_EQ(gorenstein_closure_formula(a1, 2 * fa), make_cycle(a1, {{"E1", 3}, {"F", 2}}));

  auto q52 = surface::quotient_five_two_blown_up_twice();
  auto z = example_z(q52);
  expect_error(ErrorKind::NotGorenstein, [&] { gorenstein_closure_formula(q52, z); });
  const Cycle zk = z - ceil_cycle(q52.canonical());
  EXPECT_EQ(closure_of_z_minus_ceil_k(q52, z), zk + make_cycle(q52, {{"E1", 1}}));
  EXPECT_EQ(ceil_closure_formula(q52, z), zk);
  EXPECT_NE(ceil_closure_formula(q52, z), closure_of_z_minus_ceil_k(q52, z));
}

TEST(StrongSubadditivity, IrreducibleCase) {
  for (int k = 2; k <= 7; ++k) {
    auto r = strong_subadd_counterexample_irreducible(k);
    const auto& m = r.model;
    EXPECT_EQ(r.small, make_cycle(m, {{"E1", 1}, {"E2", 1}})) << k;
    EXPECT_EQ(r.big, make_cycle(m, {{"E1", 3}, {"E2", 1}})) << k;
    EXPECT_FALSE(r.inclusion_holds);
    EXPECT_EQ(r.witnesses, std::vector<std::size_t>({m.id("E2").index}));
    for (const auto& [name, ok] : r.checks) EXPECT_TRUE(ok) << name;
  }
  expect_error(ErrorKind::InvalidParameters, [] { strong_subadd_counterexample_irreducible(1); });
}

TEST(StrongSubadditivity, ReducibleCase) {
  auto hj = surface::hirzebruch_jung(5, 2);
  auto r = strong_subadd_counterexample_reducible(hj, 2);
  EXPECT_EQ(r.z, make_cycle(hj, {{"E1", 2}, {"E2", 1}}));
  EXPECT_EQ(r.big, r.z);
  EXPECT_EQ(r.small, make_cycle(hj, {{"E1", 1}, {"E2", 1}}));
  EXPECT_FALSE(r.inclusion_holds);
  EXPECT_EQ(r.witnesses, std::vector<std::size_t>({hj.id("E2").index}));
  for (const auto& [name, ok] : r.checks) EXPECT_TRUE(ok) << name;

  for (const char* spec : {"D4", "A3", "E6", "HJ(7,3)"}) {
    auto m = surface::catalog_model(spec);
    for (int n = 2; n <= 3; ++n) {
      auto rr = strong_subadd_counterexample_reducible(m, n);
      EXPECT_FALSE(rr.inclusion_holds) << spec << " n=" << n;
      for (const auto& [name, ok] : rr.checks) EXPECT_TRUE(ok) << spec << ": " << name;
    }
  }
  expect_error(ErrorKind::NoQualifyingCycle, [] { strong_subadd_counterexample_reducible(surface::ade("A1"), 2); });
  expect_error(ErrorKind::NoQualifyingCycle, [] { strong_subadd_counterexample_reducible(surface::hirzebruch_jung(5, 1), 3); });
  expect_error(ErrorKind::InvalidParameters,
               [] { strong_subadd_counterexample_reducible(surface::quotient_five_two_blown_up_twice(), 2); });
}

// ---- properties ------------------------------------------------------------

TEST(SequenceProperties, DCoordinateTestMatchesIntersectionTest) {
  std::mt19937_64 rng(31);
  int positives = 0;
  for (int t = 0; t < 300; ++t) {
    auto m = subadd::testing::random_catalog_model(rng, 4);
    const auto prox = proximity_matrix(m);
    Cycle z(m.size());
    if (uniform(rng, 0, 1) == 0) {
      z = random_anti_nef(m, rng, 3);
      if (uniform(rng, 0, 1) == 0) z[uniform(rng, 0, int(m.size()) - 1)] += uniform(rng, -1, 1);
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) z[i] = uniform(rng, -2, 4);
    }
    const auto dc = d_coordinates(m, z);
    const bool expected = surface::is_anti_nef(m, z);
    EXPECT_EQ(anti_nef_test_d(m, prox, dc), expected);
    if (expected) {
      ++positives;
      for (auto x : dc.d) EXPECT_GE(x, 0);
    }
  }
  EXPECT_GT(positives, 50);
}

TEST(SequenceProperties, SequencesReachTheClosure) {
  std::mt19937_64 rng(32);
  int run = 0;
  for (int t = 0; t < 300; ++t) {
    auto m = subadd::testing::random_catalog_model(rng, 4);
    std::vector<std::size_t> lambda;
    try {
      lambda = lambda_set(m);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::NoLambda);
      continue;
    }
    ++run;
    const auto prox = proximity_matrix(m);
    const auto z = random_anti_nef(m, rng, 4);
    const auto dz = d_coordinates(m, z).d;
    const auto oracle = closure_of_z_minus_ceil_k(m, z);
    const auto trace = computation_sequence(m, z);
    EXPECT_EQ(trace.final_cycle, oracle);
    auto random_row = [&](std::span<const std::size_t> rows) { return rows[uniform(rng, 0, int(rows.size()) - 1)]; };
    EXPECT_EQ(computation_sequence(m, z, random_row).final_cycle, oracle);

    // d_i - 1 <= d_i^(k) <= d_i along the trace.
    for (const auto& dk : trace.d)
      for (std::size_t i = 0; i < dz.size(); ++i) {
        EXPECT_LE(dz[i] - 1, dk[i]);
        EXPECT_LE(dk[i], dz[i]);
      }
    // The base-only test agrees with the full one along the trace.
    for (const auto& dk : trace.d) {
      DCoordinates dc{trace.base_part, dk};
      EXPECT_EQ(anti_nef_test_d_base_only(m, prox, dc), anti_nef_test_d(m, prox, dc));
    }
    // Once d_j = 0, every d_i with E_i proximate to E_j vanishes.
    for (std::size_t j = 0; j < dz.size(); ++j)
      if (dz[j] == 0)
        for (std::size_t i = 0; i < dz.size(); ++i)
          if (prox.proximate[i][j]) EXPECT_EQ(dz[i], 0);
  }
  EXPECT_GT(run, 100);
}

TEST(SequenceProperties, PairedSequencesProveTheInequality) {
  std::mt19937_64 rng(33);
  int run = 0;
  for (int t = 0; t < 300; ++t) {
    auto m = subadd::testing::random_catalog_model(rng, 4);
    const auto fa = random_anti_nef(m, rng, 3), fb = random_anti_nef(m, rng, 3);
    auto cert = subadditivity_check_2d(m, fa, fb);
    EXPECT_TRUE(cert.holds);
    EXPECT_TRUE(cert.warnings.empty() || !cert.sequence_checked);
    PairedSequences p;
    try {
      p = paired_sequences(m, fa, fb);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::NoLambda);
      continue;
    }
    ++run;
    EXPECT_TRUE(cert.sequence_checked);
    EXPECT_TRUE(p.d_inequality);
    EXPECT_TRUE(p.cycle_inequality);
    EXPECT_EQ(p.forms.size(), m.blowup_count());
  }
  EXPECT_GT(run, 100);
}

TEST(SequenceProperties, GorensteinFormulaMatchesClosure) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 200; ++t) {
    static const char* labels[] = {"A1", "A2", "A4", "D4", "D6", "E6", "E7", "E8"};
    auto base = surface::ade(labels[uniform(rng, 0, 7)]).description();
    auto m = subadd::testing::add_random_blowups(base, uniform(rng, 0, 4), rng);
    const auto z = random_anti_nef(m, rng, 4);
    EXPECT_EQ(gorenstein_closure_formula(m, z), anti_nef_closure(m, z - ceil_cycle(m.canonical())));
    // Lambda is all blowups on these models.
    EXPECT_EQ(lambda_set(m).size(), m.blowup_count());
  }
}
