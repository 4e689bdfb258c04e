#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "delone/almost_period.hpp"
#include "delone/generators.hpp"

using namespace delone;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

SourcePtr integers() { return lattice_source(LatticeSpec{}); }

SourcePtr cosine_curve() {
  CurveSpec spec;
  spec.family = CurveFamily::cosine2;
  spec.theta = kInvSqrt2;
  return kronecker_source(spec);
}

template <class E, class F>
std::string message_of(F&& fn) {
  try {
    fn();
  } catch (const E& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("set distance: exact agreement, shifts, and symmetry") {
  SourcePtr z1 = integers(), z2 = integers();
  CHECK(delone_distance(*z1, *z2, 100.0) == 0.0);

  SourcePtr shifted = translated(z1, point1(0.4));
  double dab = delone_distance(*z1, *shifted, 100.0);
  double dba = delone_distance(*shifted, *z1, 100.0);
  CHECK(dab == doctest::Approx(0.4).epsilon(1e-5));  // agreement holds to R = 2.5
  CHECK(dab == dba);

  SourcePtr nudged = translated(z1, point1(1e-7));
  CHECK(delone_distance(*z1, *nudged, 100.0) == 0.01);  // capped at 1/r_cap

  SourcePtr lone = std::make_shared<PointListSource>(
      PointSet::build(1, std::vector<double>{0.0}), "pt", 200.0);
  SourcePtr none = std::make_shared<PointListSource>(PointSet(1), "none", 200.0);
  CHECK(delone_distance(*lone, *none, 100.0) == 1.0);

  CHECK_THROWS_AS(delone_distance(*z1, *z2, 0.5), std::invalid_argument);
}

TEST_CASE("return vectors of the integers band around the lattice") {
  SourcePtr z = integers();
  ReturnVectorReport rep = return_vectors(*z, 5.0, 20.0);
  CHECK(rep.vectors.contains(point1(0.0), 1e-12));
  CHECK(rep.vectors.contains(point1(1.0), 1e-12));
  CHECK(rep.vectors.contains(point1(-1.0), 1e-12));
  CHECK(rep.vectors.nearest_distance(point1(0.5)) > 0.29);
  CHECK(rep.max_gap == doctest::Approx(0.6).epsilon(0.05));

  CHECK_THROWS_AS(return_vectors(*z, -1.0, 20.0), std::invalid_argument);
  SourcePtr off = translated(z, point1(0.5));
  auto msg = message_of<std::invalid_argument>([&] { return_vectors(*off, 5.0, 20.0); });
  CHECK(msg.find("translate first") != std::string::npos);
}

TEST_CASE("integer shifts are the almost periods of the integers") {
  SourcePtr z = integers();
  EpsPeriodReport rep = eps_almost_periods(*z, 0.2, 20.0);
  CHECK(rep.periods.size() == 41);
  CHECK(rep.periods.xs().front() == -20.0);
  CHECK(rep.periods.xs().back() == 20.0);
  CHECK(rep.max_gap == 1.0);
  CHECK(rep.relatively_dense_at_scale);

  auto coarse = message_of<std::invalid_argument>(
      [&] { eps_almost_periods(*z, 0.3, 20.0); });
  CHECK(coarse.find("unique matching") != std::string::npos);

  SourcePtr off = translated(z, point1(0.5));
  auto nozero = message_of<std::invalid_argument>(
      [&] { eps_almost_periods(*off, 0.2, 20.0); });
  CHECK(nozero.find("translate first") != std::string::npos);

  SourcePtr sparse = std::make_shared<PointListSource>(
      PointSet::build(1, {-40.0, 0.0, 40.0}), "sparse", 100.0);
  auto starved = message_of<MarginError>(
      [&] { eps_almost_periods(*sparse, 0.2, 5.0); });
  CHECK(starved.find("captures 1 point(s)") != std::string::npos);
}

TEST_CASE("almost-period sets are exactly symmetric and nest across windows") {
  SourcePtr k = cosine_curve();
  EpsPeriodReport big = eps_almost_periods(*k, 0.1, 200.0);
  CHECK(big.periods.size() > 1);
  for (std::size_t i = 0; i < big.periods.size(); ++i) {
    double p = big.periods.xs()[i];
    CHECK(big.periods.contains(point1(-p), 0.0));
  }

  EpsPeriodReport small = eps_almost_periods(*k, 0.1, 100.0);
  for (std::size_t i = 0; i < big.periods.size(); ++i) {
    double p = big.periods.xs()[i];
    if (std::fabs(p) <= 100.0) CHECK(small.periods.contains(point1(p), 0.0));
  }
}

TEST_CASE("shift bijections pair each point with its match") {
  SourcePtr z = integers();
  BijectionWitness w = find_bijection(*z, 1.0, 0.2, 10.0);
  CHECK(w.pairs.size() == 21);
  CHECK(w.max_displacement == 0.0);
  for (const auto& [x, y] : w.pairs) CHECK(y == x + 1.0);

  auto msg = message_of<std::invalid_argument>(
      [&] { find_bijection(*z, 0.5, 0.2, 10.0); });
  CHECK(msg.find("not an epsilon-almost period") != std::string::npos);
}

TEST_CASE("bijection witnesses stay within epsilon on an aperiodic set") {
  SourcePtr k = cosine_curve();
  EpsPeriodReport rep = eps_almost_periods(*k, 0.1, 150.0);
  REQUIRE(rep.periods.size() > 1);
  double a = rep.periods.xs().back();  // largest period found
  REQUIRE(a > 0.0);
  BijectionWitness w = find_bijection(*k, a, 0.1, 150.0);
  PointSet W = materialize(*k, {point1(0.0), 150.0});
  CHECK(w.pairs.size() == W.size());
  CHECK(w.max_displacement <= 0.1 + 1e-12);
  for (const auto& [x, y] : w.pairs) CHECK(std::fabs(y - (x + a)) <= 0.1 + 1e-12);
}

TEST_CASE("functional almost periods of the integer comb") {
  SourcePtr z = integers();
  BumpSpec bump{0.4, 1.0};
  BohrReport rep = bohr_diagnostic(*z, bump, 0.05, 0.04, 10.0);
  CHECK(rep.periods.size() == 21);
  CHECK(rep.periods.contains(point1(0.0), 1e-12));
  CHECK(rep.periods.contains(point1(1.0), 1e-12));
  CHECK(rep.periods.contains(point1(-10.0), 1e-12));
  CHECK(rep.max_gap == 1.0);

  CHECK_THROWS_AS(bohr_diagnostic(*z, bump, 0.05, 0.05, 10.0),
                  std::invalid_argument);  // pitch above half_width/10
  CHECK_THROWS_AS(bohr_diagnostic(*z, BumpSpec{-1.0, 1.0}, 0.05, 0.04, 10.0),
                  std::invalid_argument);
}

TEST_CASE("ladder diagnostic on the integers is consistent") {
  SourcePtr z = integers();
  std::vector<LadderStep> ladder = {
      {LadderStep::Kind::return_r, 5.0},
      {LadderStep::Kind::eps, 0.225},
      {LadderStep::Kind::eps, 0.15},
      {LadderStep::Kind::eps, 0.075},
  };
  UapReport rep = uap_diagnostic(*z, ladder, {25.0, 50.0}, 7);
  CHECK(rep.verdict == UapVerdict::consistent);
  CHECK(std::string(to_string(rep.verdict)) == "consistent");
  CHECK(rep.steps.size() == 8);
  CHECK_FALSE(rep.rationale.empty());
  for (const auto& s : rep.steps) {
    if (s.step.kind == LadderStep::Kind::eps) {
      CHECK(s.relatively_dense_at_scale);
      CHECK(s.bijections_ok);
      CHECK(s.period_count >= 3);
    }
  }

  CHECK_THROWS_AS(uap_diagnostic(*z, {}, {25.0}, 7), std::invalid_argument);
  CHECK_THROWS_AS(uap_diagnostic(*z, ladder, {}, 7), std::invalid_argument);
}
