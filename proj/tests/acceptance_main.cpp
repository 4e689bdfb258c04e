// End-to-end acceptance checks.  Each criterion prints one PASS/FAIL line;
// the binary exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "delone/almost_period.hpp"
#include "delone/dynamics.hpp"
#include "delone/generators.hpp"

using namespace delone;

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr double kSqrt2m1 = 0.41421356237309515;
constexpr double kInvSqrt2 = 0.7071067811865476;

SourcePtr make_integers() { return lattice_source(LatticeSpec{}); }

SourcePtr make_sturmian() {
  SturmianSpec spec;
  spec.theta = kGolden;
  return sturmian_source(spec);
}

SourcePtr make_linear() {
  CurveSpec spec;
  spec.family = CurveFamily::linear;
  spec.params = {1.0, -1.0};
  spec.theta = kSqrt2m1;
  return kronecker_source(spec);
}

CurveSpec cosine_spec(double px = 0.0, double py = 0.0) {
  CurveSpec spec;
  spec.family = CurveFamily::cosine2;
  spec.theta = kInvSqrt2;
  spec.phase_x = px;
  spec.phase_y = py;
  return spec;
}

SourcePtr make_cosine() { return kronecker_source(cosine_spec()); }

int failures = 0;

void criterion(int n, const char* desc, const std::function<bool()>& fn) {
  bool ok = false;
  std::string note;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    note = e.what();
  }
  std::printf("[%s] %2d: %s\n", ok ? "PASS" : "FAIL", n, desc);
  if (!ok && !note.empty()) std::printf("          error: %s\n", note.c_str());
  if (!ok) ++failures;
  std::fflush(stdout);
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace

int main() {
  criterion(1,
            "cosine torus sections: invariant under integer phase shifts, "
            "equivariant along the flow (100 dyadic trials)",
            [] {
              std::mt19937_64 rng(42);
              std::uniform_real_distribution<double> u(0.0, 1.0);
              std::uniform_int_distribution<int> shift(-3, 3);
              auto dyadic = [&] {
                return std::round(u(rng) * 1073741824.0) / 1073741824.0;
              };
              auto t0 = std::chrono::steady_clock::now();
              for (int trial = 0; trial < 100; ++trial) {
                double px = dyadic(), py = dyadic();
                SourcePtr base = kronecker_source(cosine_spec(px, py));
                int j = shift(rng), k = shift(rng);
                SourcePtr moved = kronecker_source(
                    cosine_spec(px + double(j), py + double(k)));
                PointSet A = materialize(*base, {point1(0.0), 25.0});
                PointSet B = materialize(*moved, {point1(0.0), 25.0});
                if (!(A == B)) return false;

                double tau = dyadic();
                SourcePtr flow = kronecker_source(
                    cosine_spec(px + tau, py + kInvSqrt2 * tau));
                PointSet F = materialize(*flow, {point1(0.0), 25.0});
                PointSet R = materialize(*base, {point1(tau), 25.0})
                                 .translated(point1(-tau));
                if (F.size() != R.size()) return false;
                for (std::size_t i = 0; i < F.size(); ++i)
                  if (!close(F.xs()[i], R.xs()[i], 1e-9)) return false;
              }
              auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
              return dt < 60;
            });

  criterion(2,
            "linear torus section is the 1/sqrt(2) lattice with its periods",
            [] {
              SourcePtr lin = make_linear();
              PointSet got = materialize(*lin, {point1(0.0), 50.0});
              if (got.size() != 141) return false;
              const double pitch = 1.0 / std::sqrt(2.0);
              for (double x : got.xs())
                if (!close(x, std::round(x / pitch) * pitch, 1e-9)) return false;
              PointSet periods = detect_periods(*lin, {point1(0.0), 50.0}, 1e-6);
              return periods.contains(point1(pitch), 1e-6) &&
                     periods.contains(point1(-pitch), 1e-6);
            });

  criterion(3, "cosine section admits no exact period out to scale 200", [] {
    PointSet periods = detect_periods(*make_cosine(), {point1(0.0), 200.0}, 1e-6);
    return periods.size() == 0;
  });

  criterion(4,
            "cosine-section almost-period gaps are scale-stable and admit "
            "bijection witnesses",
            [] {
              SourcePtr k = make_cosine();
              const double eps[] = {0.1, 0.05, 0.02};
              const double frozen[] = {2.8933, 9.9133, 41.0119};
              for (int i = 0; i < 3; ++i) {
                EpsPeriodReport at250 = eps_almost_periods(*k, eps[i], 250.0);
                EpsPeriodReport at500 = eps_almost_periods(*k, eps[i], 500.0);
                if (std::fabs(at250.max_gap - at500.max_gap) >
                    0.2 * at500.max_gap)
                  return false;
                if (std::fabs(at500.max_gap - frozen[i]) > 0.05 * frozen[i])
                  return false;
                double a = at500.periods.xs().back();
                if (!(a > 0.0)) return false;
                BijectionWitness w = find_bijection(*k, a, eps[i], 500.0);
                if (w.max_displacement > eps[i] + 1e-12) return false;
              }
              return true;
            });

  criterion(5,
            "cut-and-project almost periods at fine epsilon collapse to the "
            "zero shift",
            [] {
              SourcePtr st = make_sturmian();
              PointSet W = materialize(*st, {point1(0.0), 500.0});
              double r_min = min_pair_separation(W) / 2.0;
              EpsPeriodReport rep =
                  eps_almost_periods(*st, 0.05 * r_min, 500.0);
              return rep.periods.size() == 1 && rep.periods.xs()[0] == 0.0;
            });

  criterion(6,
            "patch census stabilizes for the cut-and-project set, grows for "
            "the cosine section",
            [] {
              SourcePtr st = make_sturmian();
              FlcCensus s200 = flc_census(*st, 3.0, {point1(0.0), 200.0}, 1e-6);
              FlcCensus s400 = flc_census(*st, 3.0, {point1(0.0), 400.0}, 1e-6);
              if (s200.classes.size() != s400.classes.size()) return false;
              if (s200.classes.size() <= 1) return false;
              SourcePtr k = make_cosine();
              FlcCensus k200 = flc_census(*k, 3.0, {point1(0.0), 200.0}, 1e-6);
              FlcCensus k400 = flc_census(*k, 3.0, {point1(0.0), 400.0}, 1e-6);
              return k400.classes.size() > k200.classes.size();
            });

  criterion(7, "return vectors stay within 1/r of the source set", [] {
    SourcePtr sources[] = {make_sturmian(), make_linear(), make_cosine()};
    for (const SourcePtr& src : sources) {
      PointSet M = materialize(*src, {point1(0.0), 51.0});
      for (double r : {5.0, 10.0, 20.0}) {
        ReturnVectorReport rep = return_vectors(*src, r, 50.0);
        if (rep.vectors.empty()) return false;
        if (!rep.vectors.contains(point1(0.0), 1e-9)) return false;
        for (double v : rep.vectors.xs())
          if (M.nearest_distance(point1(v)) > 1.0 / r + 1e-12) return false;
      }
    }
    return true;
  });

  criterion(8,
            "almost-period and period sets are exactly symmetric under "
            "negation",
            [] {
              auto symmetric = [](const PointSet& ps) {
                for (std::size_t i = 0; i < ps.size(); ++i)
                  if (!ps.contains(point1(-ps.xs()[i]), 0.0)) return false;
                return true;
              };
              EpsPeriodReport a =
                  eps_almost_periods(*make_sturmian(), 0.1, 300.0);
              EpsPeriodReport b = eps_almost_periods(*make_cosine(), 0.1, 300.0);
              PointSet c =
                  detect_periods(*make_integers(), {point1(0.0), 20.0}, 1e-6);
              return symmetric(a.periods) && symmetric(b.periods) &&
                     symmetric(c) && c.size() > 0;
            });

  criterion(9,
            "distinct cut-and-project hull translates admit separating "
            "anchors at the separation radius",
            [] {
              SourcePtr st = make_sturmian();
              PointSet W = materialize(*st, {point1(0.0), 500.0});
              double r_max = largest_interior_gap(W, {point1(0.0), 500.0});
              double C = separation_radius(r_max, 0.0);
              HullSample sample = hull_transversal_sample(st, 500.0, 51);
              for (std::size_t i = 1; i < 51; ++i) {
                SeparatingAnchor sep = find_separating_anchor(
                    *st, *sample.translate(i), C, 500.0, 1e-6);
                if (!sep.found) return false;
                if (std::fabs(sep.anchor) > 5.0) return false;
              }
              return true;
            });

  criterion(10,
            "patch forcing fails for the cut-and-project set, holds for the "
            "lattice section",
            [] {
              ForcingReport st =
                  patch_forcing_probe(make_sturmian(), 0.0, 5.0, 50.0, 200, 1e-6);
              if (st.forced || !st.counterexample.has_value()) return false;
              if (st.occurrences < 3 || st.occurrences > 30) return false;
              ForcingReport lin =
                  patch_forcing_probe(make_linear(), 0.0, 5.0, 50.0, 200, 1e-6);
              return lin.forced && lin.occurrences == 200;
            });

  criterion(11,
            "ladder verdicts: lattice sections consistent, cut-and-project "
            "refuted at scale, cosine section consistent",
            [] {
              auto verdict_of = [](const SourcePtr& src) {
                PointSet W = materialize(*src, {point1(0.0), 500.0});
                double r_min = min_pair_separation(W) / 2.0;
                std::vector<LadderStep> ladder;
                for (double f : {0.45, 0.3, 0.15})
                  ladder.push_back({LadderStep::Kind::eps, f * r_min});
                return uap_diagnostic(*src, ladder, {250.0, 500.0}, 12345)
                    .verdict;
              };
              if (verdict_of(make_integers()) != UapVerdict::consistent)
                return false;
              if (verdict_of(make_linear()) != UapVerdict::consistent)
                return false;
              if (verdict_of(make_sturmian()) != UapVerdict::refuted_at_scale)
                return false;
              return verdict_of(make_cosine()) == UapVerdict::consistent;
            });

  criterion(12,
            "set distance obeys the metric axioms within discretization slack",
            [] {
              SourcePtr st = make_sturmian();
              HullSample sample = hull_transversal_sample(st, 120.0, 40);
              std::mt19937 gen(7);
              std::uniform_int_distribution<std::size_t> pick(0, 39);
              for (int trial = 0; trial < 20; ++trial) {
                SourcePtr a = sample.translate(pick(gen));
                SourcePtr b = sample.translate(pick(gen));
                SourcePtr c = sample.translate(pick(gen));
                if (delone_distance(*a, *a, 100.0) != 0.0) return false;
                double ab = delone_distance(*a, *b, 100.0);
                double ba = delone_distance(*b, *a, 100.0);
                if (ab != ba) return false;
                double ac = delone_distance(*a, *c, 100.0);
                double bc = delone_distance(*b, *c, 100.0);
                if (ac > ab + bc + 2.0 / 100.0) return false;
              }
              return true;
            });

  if (failures == 0) {
    std::printf("acceptance: 12/12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
