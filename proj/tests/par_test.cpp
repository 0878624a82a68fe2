#include "parlab/par.hpp"

#include "gtest/gtest.h"
#include "parlab/set_problems.hpp"
#include "test_util.hpp"

namespace parlab {
namespace {

using testing::q;
using testing::tiling_of;

struct Instance {
  ValueMatrix m;
  Partition t;
};

Instance instance(SetProblem p, ProtocolKind proto, unsigned k) {
  return {build_matrix({p, k}), tiling_of(p, proto, k)};
}

TEST(WorstCaseParTest, TrivialDisjointnessOneBit) {
  auto [m, t] = instance(SetProblem::disjointness, ProtocolKind::trivial, 1);
  EXPECT_EQ(worst_case_par(t, m, Scope::objective), 3);
  EXPECT_EQ(worst_case_par(t, m, Scope::wrt1), 1);
  EXPECT_EQ(worst_case_par(t, m, Scope::wrt2), 2);
  EXPECT_EQ(worst_case_par(t, m, Scope::subjective), 2);
}

TEST(WorstCaseParTest, PerfectlyPrivateTiling) {
  ValueMatrix c = ValueMatrix::constant(2, 0);
  Partition t = ideal_partition(c);
  EXPECT_THROW(worst_case_par(t, c, Scope::objective), InvalidPartition);
  Partition whole = Partition::from_rectangles(4, 4, {Rectangle({0, 1, 2, 3}, {0, 1, 2, 3})});
  for (auto s : {Scope::objective, Scope::wrt1, Scope::wrt2, Scope::subjective}) {
    EXPECT_EQ(worst_case_par(whole, c, s), 1);
    EXPECT_EQ(avg_par_uniform(whole, c, s), 1);
  }
}

TEST(WorstCaseParTest, RejectsNonTilings) {
  ValueMatrix m = build_matrix({SetProblem::disjointness, 1});
  Partition bad = Partition::from_rectangles(2, 2, {Rectangle({0, 1}, {0, 1})});
  EXPECT_THROW(worst_case_par(bad, m, Scope::objective), InvalidPartition);
  EXPECT_THROW(avg_par_uniform(ideal_partition(m), m, Scope::objective), InvalidPartition);
}

TEST(AvgParTest, PaperValues) {
  auto dis3 = instance(SetProblem::disjointness, ProtocolKind::trivial, 3);
  EXPECT_EQ(avg_par_uniform(dis3.t, dis3.m, Scope::objective), q("475/64"));
  auto dis1 = instance(SetProblem::disjointness, ProtocolKind::trivial, 1);
  EXPECT_EQ(avg_par_uniform(dis1.t, dis1.m, Scope::wrt2), q("3/2"));
  EXPECT_EQ(avg_par_uniform(dis1.t, dis1.m, Scope::objective), q("7/4"));
  auto of2 = instance(SetProblem::disjointness, ProtocolKind::one_first, 2);
  EXPECT_EQ(avg_par_uniform(of2.t, of2.m, Scope::objective), q("57/16"));
  auto alt2 = instance(SetProblem::intersection, ProtocolKind::alternating, 2);
  EXPECT_EQ(avg_par_uniform(alt2.t, alt2.m, Scope::objective), q("49/16"));
}

// Values frozen from an independent simulation of the protocol rules that
// groups cells by transcript.
struct Frozen {
  SetProblem problem;
  ProtocolKind protocol;
  unsigned k;
  const char* objective;
  const char* wrt1;
  const char* wrt2;
};

class FrozenParTest : public ::testing::TestWithParam<Frozen> {};

TEST_P(FrozenParTest, MatchesOracle) {
  const Frozen& f = GetParam();
  auto [m, t] = instance(f.problem, f.protocol, f.k);
  EXPECT_EQ(avg_par_uniform(t, m, Scope::objective), q(f.objective));
  EXPECT_EQ(avg_par_uniform(t, m, Scope::wrt1), q(f.wrt1));
  EXPECT_EQ(avg_par_uniform(t, m, Scope::wrt2), q(f.wrt2));
}

constexpr auto D = SetProblem::disjointness;
constexpr auto I = SetProblem::intersection;
constexpr auto T = ProtocolKind::trivial;
constexpr auto O = ProtocolKind::one_first;
constexpr auto A = ProtocolKind::alternating;

INSTANTIATE_TEST_SUITE_P(Oracle, FrozenParTest,
                         ::testing::Values(Frozen{D, T, 2, "57/16", "1", "21/8"},
                                           Frozen{D, O, 2, "57/16", "19/16", "37/16"},
                                           Frozen{D, A, 2, "57/16", "23/16", "31/16"},
                                           Frozen{I, A, 2, "49/16", "5/4", "15/8"},
                                           Frozen{D, T, 3, "475/64", "1", "165/32"},
                                           Frozen{D, O, 3, "475/64", "3/2", "57/16"},
                                           Frozen{D, A, 3, "475/64", "31/16", "85/32"},
                                           Frozen{I, T, 3, "343/64", "1", "27/8"},
                                           Frozen{I, O, 3, "343/64", "1", "27/8"},
                                           Frozen{I, A, 3, "343/64", "25/16", "75/32"},
                                           Frozen{D, T, 4, "3921/256", "1", "1377/128"},
                                           Frozen{D, O, 4, "3921/256", "485/256", "1393/256"},
                                           Frozen{D, A, 4, "3921/256", "669/256", "917/256"},
                                           Frozen{I, T, 4, "2401/256", "1", "81/16"},
                                           Frozen{I, A, 4, "2401/256", "125/64", "375/128"}));

TEST(AvgParTest, SubjectiveIsMaxOfPlayers) {
  auto [m, t] = instance(D, O, 3);
  EXPECT_EQ(avg_par_uniform(t, m, Scope::subjective), q("57/16"));
  EXPECT_EQ(avg_par(t, m, Scope::subjective, Distribution::uniform(8, 8)), q("57/16"));
}

TEST(AvgParTest, PointMassCollapsesTheExpectation) {
  auto [m, t] = instance(D, T, 2);
  for (Index r = 0; r < 4; ++r) {
    for (Index c = 0; c < 4; ++c) {
      Cell x{r, c};
      auto d = Distribution::point_mass(4, 4, x);
      Rational expected(static_cast<long>(ideal_partition(m).region(ideal_partition(m).owner(x)).size()),
                        static_cast<long>(t.region(t.owner(x)).size()));
      expected.canonicalize();
      EXPECT_EQ(avg_par(t, m, Scope::objective, d), expected);
      EXPECT_EQ(g_par(t, m, Scope::objective, d, GFunction{}, Mode::worst), expected);
    }
  }
}

TEST(DistributionTest, Validation) {
  EXPECT_THROW(Distribution::from_weights(1, 2, {q("1/2"), q("1/3")}), std::invalid_argument);
  EXPECT_THROW(Distribution::from_weights(1, 2, {q("3/2"), q("-1/2")}), std::invalid_argument);
  EXPECT_THROW(Distribution::from_weights(1, 2, {q("1")}), std::invalid_argument);
  auto d = Distribution::from_weights(1, 2, {q("1/4"), q("3/4")}, "skew");
  EXPECT_EQ(d.id(), "skew");
  EXPECT_EQ(d.weight(Cell{0, 1}), q("3/4"));
  EXPECT_EQ(Distribution::uniform(2, 2).weight(3), q("1/4"));
}

TEST(SubjectiveRatioTest, IntersectionCorollaries) {
  for (unsigned k = 1; k <= 5; ++k) {
    Index n = Index{1} << k;
    auto u = Distribution::uniform(n, n);
    auto alt = instance(I, A, k);
    EXPECT_EQ(subjective_ratio(alt.t, alt.m, u), q("3/2")) << "k=" << k;
    auto triv = instance(I, T, k);
    EXPECT_EQ(subjective_ratio(triv.t, triv.m, u), pow(q("3/2"), k)) << "k=" << k;
  }
}

TEST(SubjectiveRatioTest, SymmetricTilingIsOne) {
  // The transposed-symmetric tiling of disjointness k=1 by three singletons
  // and one domino cannot be symmetric; four singletons are.
  ValueMatrix m = build_matrix({D, 1});
  Partition t = Partition::from_rectangles(
      2, 2, {Rectangle({0}, {0}), Rectangle({0}, {1}), Rectangle({1}, {0}), Rectangle({1}, {1})});
  EXPECT_EQ(subjective_ratio(t, m, Distribution::uniform(2, 2)), 1);
}

TEST(TileContributionTest, SplitsByLabel) {
  auto [m, t] = instance(D, O, 2);
  auto c = tile_contributions(t, m, Scope::objective);
  EXPECT_EQ(c.at(1).count, 4u);
  EXPECT_EQ(c.at(0).count, 3u);
  EXPECT_EQ(c.at(1).sum + c.at(0).sum, 57);
}

TEST(GParTest, CardinalityAgreesWithPlainPar) {
  for (auto proto : kAllProtocols) {
    auto [m, t] = instance(D, proto, 3);
    auto u = Distribution::uniform(8, 8);
    for (auto s : {Scope::objective, Scope::wrt1, Scope::wrt2, Scope::subjective}) {
      EXPECT_EQ(g_par(t, m, s, u, GFunction{}, Mode::average), avg_par(t, m, s, u));
      EXPECT_EQ(g_par(t, m, s, u, GFunction{}, Mode::worst), worst_case_par(t, m, s));
    }
  }
}

TEST(GParTest, ZeroDistanceGivesOne) {
  auto [m, t] = instance(D, A, 3);
  GFunction g{GVariant::max_distance, DistanceKind::zero};
  auto u = Distribution::uniform(8, 8);
  EXPECT_EQ(g_par(t, m, Scope::objective, u, g, Mode::average), 1);
  EXPECT_EQ(g_par(t, m, Scope::objective, u, g, Mode::worst), 1);
  g.variant = GVariant::additive_distance;
  EXPECT_EQ(g_par(t, m, Scope::wrt2, u, g, Mode::average), 1);
}

TEST(GParTest, ZeroMeasureIsADomainError) {
  auto [m, t] = instance(D, T, 1);
  // Diameter zero on singleton tiles.
  GFunction g{GVariant::relative_size, DistanceKind::hamming};
  EXPECT_THROW(g_par(t, m, Scope::objective, Distribution::uniform(2, 2), g, Mode::average), std::domain_error);
}

TEST(GParTest, DistanceFunctions) {
  EXPECT_EQ(distance(DistanceKind::hamming, {0b101, 0b11}, {0b011, 0b10}), 3u);
  EXPECT_EQ(distance(DistanceKind::discrete, {1, 1}, {1, 1}), 0u);
  EXPECT_EQ(distance(DistanceKind::discrete, {1, 1}, {1, 0}), 1u);
  EXPECT_EQ(distance(DistanceKind::zero, {0, 0}, {3, 3}), 0u);
}

TEST(GParTest, AdditiveAndMaxDistanceByHand) {
  // Trivial disjointness k=1: the ideal 1-region {(0,0),(0,1),(1,0)} against
  // tile {0}x{0,1}. Under discrete distance, cell (0,0) sees
  // additive 1 + 2 = 3 over 1 + 1 = 2 and max 2 over 2.
  ValueMatrix m = build_matrix({D, 1});
  Partition t = tiling_of(D, T, 1);
  auto d = Distribution::point_mass(2, 2, {0, 0});
  GFunction add{GVariant::additive_distance, DistanceKind::discrete};
  EXPECT_EQ(g_par(t, m, Scope::objective, d, add, Mode::average), q("3/2"));
  GFunction mx{GVariant::max_distance, DistanceKind::discrete};
  EXPECT_EQ(g_par(t, m, Scope::objective, d, mx, Mode::average), 1);
}

TEST(GParTest, NamesRoundTrip) {
  for (auto g : {GVariant::cardinality, GVariant::probability_mass, GVariant::additive_distance,
                 GVariant::max_distance, GVariant::plausible_deniability, GVariant::relative_size}) {
    EXPECT_EQ(parse_g_variant(name(g)), g);
  }
  for (auto s : {Scope::objective, Scope::wrt1, Scope::wrt2, Scope::subjective}) EXPECT_EQ(parse_scope(name(s)), s);
  EXPECT_EQ(parse_mode("worst"), Mode::worst);
  EXPECT_THROW(parse_scope("both"), std::invalid_argument);
}

TEST(CounterexampleTest, MassParIsTwoUnderBothDistributions) {
  auto cx = probability_mass_counterexample(10, q("1/10"));
  const Partition& t = cx.protocol.tiling();
  GFunction mass{GVariant::probability_mass};
  EXPECT_EQ(g_par(t, cx.matrix, Scope::objective, cx.d1, mass, Mode::average), 2);
  EXPECT_EQ(g_par(t, cx.matrix, Scope::objective, cx.d2, mass, Mode::average), 2);
  EXPECT_EQ(avg_par(t, cx.matrix, Scope::objective, cx.d1), q("209/100"));
  EXPECT_EQ(avg_par(t, cx.matrix, Scope::objective, cx.d2), q("1001/100"));
  EXPECT_EQ(cx.matrix.rows(), 11u);
  EXPECT_EQ(cx.matrix.cols(), 10u);
  EXPECT_EQ(ideal_partition(cx.matrix).size(), 10u);
}

TEST(CounterexampleTest, HalfMakesTheDistributionsAgree) {
  auto cx = probability_mass_counterexample(4, q("1/2"));
  EXPECT_EQ(avg_par(cx.protocol.tiling(), cx.matrix, Scope::objective, cx.d1),
            avg_par(cx.protocol.tiling(), cx.matrix, Scope::objective, cx.d2));
}

TEST(OptimalSearchTest, KnownOptima) {
  EXPECT_EQ(optimal_avg_objective_par(build_matrix({D, 1})).value, q("7/4"));
  EXPECT_EQ(optimal_avg_objective_par(build_matrix({I, 1})).value, q("7/4"));
  EXPECT_EQ(optimal_avg_objective_par(build_matrix({I, 2})).value, q("49/16"));
  Rational d2 = optimal_avg_objective_par(build_matrix({D, 2})).value;
  EXPECT_GE(d2, q("9/4"));
  EXPECT_LE(d2, q("57/16"));
}

TEST(OptimalSearchTest, ReturnedProtocolAchievesTheValue) {
  for (auto p : kAllProblems) {
    for (unsigned k = 1; k <= 2; ++k) {
      ValueMatrix m = build_matrix({p, k});
      auto opt = optimal_avg_objective_par(m);
      Protocol proto(opt.protocol, m);
      EXPECT_EQ(avg_par_uniform(proto.tiling(), m, Scope::objective), opt.value);
    }
  }
}

TEST(OptimalSearchTest, SideCap) {
  EXPECT_THROW(optimal_avg_objective_par(build_matrix({D, 4})), std::invalid_argument);
}

TEST(ParReportTest, JsonAndCsv) {
  ParReport r;
  r.problem = "intersection";
  r.protocol = "alternating";
  r.k = 3;
  r.scope = Scope::subjective;
  r.value = q("75/32");
  r.ratio_of_subjective = q("3/2");
  std::string j = r.json();
  EXPECT_NE(j.find(R"("value":{"num":"75","den":"32"})"), std::string::npos);
  EXPECT_NE(j.find(R"("ratio_of_subjective":{"num":"3","den":"2"})"), std::string::npos);
  EXPECT_EQ(ParReport::csv_header().find('\n'), std::string::npos);
  EXPECT_NE(r.csv_row().find("75/32"), std::string::npos);
}

}  // namespace
}  // namespace parlab
