#include "delone/almost_period.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "delone/kernels.hpp"

namespace delone {

namespace {

Point origin_of(int dim) { return dim == 1 ? point1(0.0) : point2(0.0, 0.0); }

Patch origin_patch(const DeloneSource& src, double r) {
  return Patch{r, materialize(src, {origin_of(src.dim()), r}), false};
}

}  // namespace

double delone_distance(const DeloneSource& a, const DeloneSource& b,
                       double r_cap) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("set distance needs equal dimensions");
  if (!(r_cap >= 1.0))
    throw std::invalid_argument("r_cap must be at least 1");
  if (materialize(a, {origin_of(a.dim()), r_cap}) ==
      materialize(b, {origin_of(b.dim()), r_cap}))
    return 0.0;
  auto agree = [&](double r) {
    return patch_distance(origin_patch(a, r), origin_patch(b, r)) <= 1.0 / r;
  };
  if (!agree(1.0)) return 1.0;
  double best = 1.0;
  long long cap = static_cast<long long>(std::floor(r_cap));
  for (long long r = 2; r <= cap; ++r)
    if (agree(static_cast<double>(r))) best = static_cast<double>(r);
  double hi;
  if (best + 1.0 <= r_cap) {
    hi = best + 1.0;  // an integer that failed the scan
  } else {
    if (r_cap > best && agree(r_cap)) return 1.0 / r_cap;
    if (!(r_cap > best)) return 1.0 / best;
    hi = r_cap;
  }
  double lo = best;
  for (int it = 0; it < 40 && hi - lo > 1e-6; ++it) {
    double mid = 0.5 * (lo + hi);
    if (agree(mid)) lo = mid; else hi = mid;
  }
  return 1.0 / lo;
}

ReturnVectorReport return_vectors(const DeloneSource& src, double r,
                                  double window_radius) {
  if (src.dim() != 1)
    throw std::invalid_argument("return vectors are 1D only");
  if (!(r > 0.0) || !(window_radius > 0.0))
    throw std::invalid_argument("patch radius and window radius must be positive");
  PointSet W = materialize(src, {point1(0.0), window_radius});
  if (!W.contains(point1(0.0), 1e-9))
    throw std::invalid_argument("return vectors need 0 in the set (translate first)");
  Patch P0{r, materialize(src, {point1(0.0), r}), false};
  const double reach = 1.0 / r;
  const double h = std::min(1e-2, 1.0 / (4.0 * r));
  const long long K = static_cast<long long>(std::ceil(reach / h));
  std::vector<double> cands;
  for (double x : W.xs()) {
    for (long long k = -K; k <= K; ++k) {
      double a = x + static_cast<double>(k) * h;
      if (std::fabs(a - x) <= reach) cands.push_back(a);
    }
  }
  std::sort(cands.begin(), cands.end());
  std::vector<double> uniq;
  for (double c : cands)
    if (uniq.empty() || c - uniq.back() > h / 4.0) uniq.push_back(c);
  std::vector<double> acc;
  for (double a : uniq) {
    Patch Pa{r, materialize(src, {point1(a), r}).translated(point1(-a)), false};
    if (patch_distance(P0, Pa) <= reach) acc.push_back(a);
  }
  ReturnVectorReport rep;
  rep.r = r;
  rep.window_radius = window_radius;
  rep.vectors = PointSet::build(1, std::move(acc));
  rep.max_gap = 2.0 * largest_empty_gap(rep.vectors, {point1(0.0), window_radius});
  return rep;
}

namespace {

// shared preamble: window points, 0-membership, and the matching-uniqueness
// bound ε < r_min / 2
PointSet almost_period_window(const DeloneSource& src, double epsilon,
                              double window_radius, bool need_origin) {
  if (src.dim() != 1)
    throw std::invalid_argument("almost-period analysis is 1D only");
  if (!(epsilon > 0.0) || !(window_radius > 0.0))
    throw std::invalid_argument("epsilon and window radius must be positive");
  PointSet W = materialize(src, {point1(0.0), window_radius});
  if (W.size() < 2) {
    std::ostringstream os;
    os << "window radius " << window_radius << " captures " << W.size()
       << " point(s); almost-period analysis needs at least 2";
    throw MarginError(os.str());
  }
  if (need_origin && !W.contains(point1(0.0), 1e-9))
    throw std::invalid_argument("almost periods need 0 in the set (translate first)");
  double r_min = min_pair_separation(W) / 2.0;
  if (!(epsilon < r_min / 2.0)) {
    std::ostringstream os;
    os << "epsilon " << epsilon << " too coarse for unique matching (needs < r_min/2 = "
       << r_min / 2.0 << ")";
    throw std::invalid_argument(os.str());
  }
  return W;
}

}  // namespace

EpsPeriodReport eps_almost_periods(const DeloneSource& src, double epsilon,
                                   double window_radius) {
  PointSet W = almost_period_window(src, epsilon, window_radius, true);
  PointSet M = materialize(src, {point1(0.0), 2.0 * window_radius + epsilon + 1.0});
  // a passes iff -a passes (the displacement conditions coincide pairwise),
  // so candidates are tested by magnitude and mirrored on output; merging
  // near-coincident magnitudes up front keeps the +/- pairing exact even
  // when two window points are almost but not exactly opposite
  std::vector<double> cands;
  cands.reserve(W.size());
  for (double x : W.xs()) cands.push_back(std::fabs(x));
  std::sort(cands.begin(), cands.end());
  std::vector<double> merged;
  for (double c : cands)
    if (merged.empty() || c - merged.back() >= PointSet::dup_tol)
      merged.push_back(c);
  std::vector<double> acc;
  for (double a : merged) {
    bool ok = true;
    for (double x : W.xs()) {
      if (M.nearest_distance(point1(x + a)) > epsilon ||
          M.nearest_distance(point1(x - a)) > epsilon) {
        ok = false;
        break;
      }
    }
    if (ok) acc.push_back(a);
  }
  std::vector<double> full;
  full.reserve(2 * acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (*it > 0.0) full.push_back(-*it);
  full.insert(full.end(), acc.begin(), acc.end());
  EpsPeriodReport rep;
  rep.epsilon = epsilon;
  rep.window_radius = window_radius;
  rep.periods = PointSet::build(1, std::move(full));
  rep.max_gap = 2.0 * largest_empty_gap(rep.periods, {point1(0.0), window_radius});
  rep.relatively_dense_at_scale = rep.max_gap <= window_radius / 2.0;
  return rep;
}

BijectionWitness find_bijection(const DeloneSource& src, double a,
                                double epsilon, double window_radius) {
  PointSet W = almost_period_window(src, epsilon, window_radius, false);
  PointSet M = materialize(
      src, {point1(0.0), window_radius + std::fabs(a) + epsilon + 1.0});
  BijectionWitness wit;
  wit.a = a;
  wit.epsilon = epsilon;
  wit.window_radius = window_radius;
  auto xs = M.xs();
  for (double x : W.xs()) {
    double q = x + a;
    auto it = std::lower_bound(xs.begin(), xs.end(), q);
    double best = std::numeric_limits<double>::infinity();
    double y = 0.0;
    if (it != xs.end() && *it - q < best) { best = *it - q; y = *it; }
    if (it != xs.begin() && q - *std::prev(it) < best) {
      best = q - *std::prev(it);
      y = *std::prev(it);
    }
    if (!(best <= epsilon)) {
      std::ostringstream os;
      os << "a=" << a << " is not an epsilon-almost period at this scale: x=" << x
         << " lands " << best << " from the set";
      throw std::invalid_argument(os.str());
    }
    wit.pairs.emplace_back(x, y);
    wit.max_displacement = std::max(wit.max_displacement, best);
  }
  return wit;
}

BohrReport bohr_diagnostic(const DeloneSource& src, const BumpSpec& bump,
                           double epsilon, double grid_pitch,
                           double window_radius) {
  if (src.dim() != 1)
    throw std::invalid_argument("functional diagnostic is 1D only");
  if (!(bump.height > 0.0) || !(bump.half_width > 0.0))
    throw std::invalid_argument("bump height and half_width must be positive");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("epsilon must be positive");
  if (!(window_radius > 0.0))
    throw std::invalid_argument("window radius must be positive");
  if (!(grid_pitch > 0.0) || grid_pitch > bump.half_width / 10.0 * (1.0 + 1e-12))
    throw std::invalid_argument("grid pitch must be positive and at most half_width/10");

  const double S = window_radius;
  const long long N2 = static_cast<long long>(std::ceil(2.0 * S / grid_pitch));
  const long long N1 = static_cast<long long>(std::floor(S / grid_pitch + 1e-9));
  std::vector<double> f(static_cast<std::size_t>(2 * N2 + 1), 0.0);
  PointSet pts =
      materialize(src, {point1(0.0), 2.0 * S + bump.half_width + grid_pitch});
  for (double x : pts.xs())
    kern::add_triangle(f, -N2, grid_pitch, 0.0, x, bump.half_width, bump.height);

  // f[i - j] vs f[i] over the core i ∈ [-N1, N1]; 2*N1 <= N2 keeps the
  // shifted span inside the table
  const double* core = f.data() + (N2 - N1);
  const std::size_t core_len = static_cast<std::size_t>(2 * N1 + 1);
  std::vector<double> acc;
  for (long long j = -N1; j <= N1; ++j) {
    std::span<const double> shifted(core - j, core_len);
    std::span<const double> plain(core, core_len);
    if (!kern::any_abs_diff_exceeds(shifted, plain, epsilon))
      acc.push_back(static_cast<double>(j) * grid_pitch);
  }
  BohrReport rep;
  rep.bump = bump;
  rep.epsilon = epsilon;
  rep.grid_pitch = grid_pitch;
  rep.window_radius = S;
  rep.periods = PointSet::build(1, std::move(acc));
  rep.max_gap = 2.0 * largest_empty_gap(rep.periods, {point1(0.0), S});
  return rep;
}

const char* to_string(UapVerdict v) {
  switch (v) {
    case UapVerdict::consistent: return "consistent";
    case UapVerdict::refuted_at_scale: return "refuted_at_scale";
    case UapVerdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

UapReport uap_diagnostic(const DeloneSource& src,
                         const std::vector<LadderStep>& ladder,
                         const std::vector<double>& window_radii,
                         std::uint64_t seed) {
  if (ladder.empty() || window_radii.empty())
    throw std::invalid_argument("diagnostic needs a ladder and at least one window");
  std::vector<double> windows = window_radii;
  std::sort(windows.begin(), windows.end());
  const double s_max = windows.back();

  UapReport rep;
  std::mt19937_64 rng(seed);
  bool any_eps = false;
  bool all_quarter = true;
  bool any_half_exceeded = false;
  bool bijections_ok = true;
  double worst_gap = 0.0, worst_eps = 0.0;

  for (double S : windows) {
    for (const LadderStep& step : ladder) {
      UapStepResult res;
      res.step = step;
      res.window_radius = S;
      if (step.kind == LadderStep::Kind::eps) {
        EpsPeriodReport er = eps_almost_periods(src, step.value, S);
        res.period_count = er.periods.size();
        res.max_gap = er.max_gap;
        res.relatively_dense_at_scale = er.relatively_dense_at_scale;
        if (S == s_max) {
          any_eps = true;
          if (er.max_gap > worst_gap) { worst_gap = er.max_gap; worst_eps = step.value; }
          if (er.max_gap > S / 2.0) any_half_exceeded = true;
          if (!(er.max_gap <= S / 4.0)) all_quarter = false;
          std::vector<double> nonzero;
          for (double p : er.periods.xs())
            if (p != 0.0) nonzero.push_back(p);
          for (int k = 0; k < 3 && !nonzero.empty(); ++k) {
            std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1);
            std::size_t i = pick(rng);
            double a = nonzero[i];
            nonzero.erase(nonzero.begin() + static_cast<std::ptrdiff_t>(i));
            try {
              BijectionWitness w = find_bijection(src, a, step.value, S);
              if (w.max_displacement > step.value) res.bijections_ok = false;
            } catch (const std::exception&) {
              res.bijections_ok = false;
            }
          }
          if (!res.bijections_ok) bijections_ok = false;
        }
      } else {
        ReturnVectorReport rr = return_vectors(src, step.value, S);
        res.period_count = rr.vectors.size();
        res.max_gap = rr.max_gap;
        res.relatively_dense_at_scale = rr.max_gap <= S / 2.0;
      }
      rep.steps.push_back(res);
    }
  }

  std::ostringstream os;
  if (any_eps && any_half_exceeded) {
    rep.verdict = UapVerdict::refuted_at_scale;
    os << "epsilon " << worst_eps << " leaves a period-free stretch of " << worst_gap
       << " inside the window of radius " << s_max << ", more than half the radius";
  } else if (any_eps && all_quarter && bijections_ok) {
    rep.verdict = UapVerdict::consistent;
    os << "every epsilon step keeps its period gaps within a quarter of the largest "
          "window (worst " << worst_gap << " vs " << s_max / 4.0
       << ") and sampled bijections hold";
  } else {
    rep.verdict = UapVerdict::inconclusive;
    if (!any_eps)
      os << "ladder has no epsilon steps at the largest window";
    else if (!bijections_ok)
      os << "a sampled bijection failed its displacement bound";
    else
      os << "worst period gap " << worst_gap << " sits between a quarter and half of "
            "the largest window radius " << s_max;
  }
  rep.rationale = os.str();
  return rep;
}

}  // namespace delone
