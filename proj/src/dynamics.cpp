#include "delone/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace delone {

double separation_radius(double covering_radius, double flow_budget) {
  if (!(covering_radius >= 0.0) || !(flow_budget >= 0.0))
    throw std::invalid_argument("separation radius needs nonnegative inputs");
  return 2.0 * covering_radius + std::sqrt(flow_budget) + 1.0;
}

SourcePtr HullSample::translate(std::size_t i) const {
  if (i >= offsets.size())
    throw std::out_of_range("hull sample index out of range");
  return translated(base, point1(offsets[i]));
}

HullSample hull_transversal_sample(SourcePtr src, double window_radius,
                                   std::size_t count) {
  if (!src) throw std::invalid_argument("null source");
  if (src->dim() != 1)
    throw std::invalid_argument("hull sampling is 1D only");
  if (count == 0) throw std::invalid_argument("sample count must be positive");
  PointSet W = materialize(*src, {point1(0.0), window_radius});
  if (W.size() < count) {
    std::ostringstream os;
    os << "window radius " << window_radius << " holds " << W.size()
       << " point(s); the sample needs " << count;
    throw MarginError(os.str());
  }
  std::vector<double> xs(W.xs().begin(), W.xs().end());
  std::sort(xs.begin(), xs.end(), [](double p, double q) {
    double ap = std::fabs(p), aq = std::fabs(q);
    return ap != aq ? ap < aq : p < q;
  });
  xs.resize(count);
  HullSample sample;
  sample.base = std::move(src);
  sample.window_radius = window_radius;
  sample.offsets = std::move(xs);
  return sample;
}

namespace {

Patch patch_at(const DeloneSource& src, double t, double r) {
  return Patch{r, materialize(src, {point1(t), r}).translated(point1(-t)), false};
}

}  // namespace

ProximalityReport proximality_probe(const DeloneSource& a,
                                    const DeloneSource& b,
                                    double t_window_radius, double r) {
  if (a.dim() != 1 || b.dim() != 1)
    throw std::invalid_argument("proximality probe is 1D only");
  if (!(t_window_radius > 0.0) || !(r > 0.0))
    throw std::invalid_argument("window and patch radii must be positive");
  std::vector<double> ts;
  PointSet anchors = materialize(a, {point1(0.0), t_window_radius});
  ts.assign(anchors.xs().begin(), anchors.xs().end());
  const double pitch = 0.1;
  long long K = static_cast<long long>(std::ceil(t_window_radius / pitch));
  for (long long k = -K; k <= K; ++k) {
    double t = static_cast<double>(k) * pitch;
    if (std::fabs(t) <= t_window_radius) ts.push_back(t);
  }
  ProximalityReport rep;
  rep.r = r;
  rep.t_window_radius = t_window_radius;
  rep.inf_estimate = std::numeric_limits<double>::infinity();
  for (double t : ts) {
    double d = patch_distance(patch_at(a, t, r), patch_at(b, t, r));
    if (d < rep.inf_estimate) {
      rep.inf_estimate = d;
      rep.argmin_t = t;
    }
  }
  return rep;
}

SeparatingAnchor find_separating_anchor(const DeloneSource& a,
                                        const DeloneSource& b, double c_radius,
                                        double window_radius, double tol) {
  if (a.dim() != 1 || b.dim() != 1)
    throw std::invalid_argument("anchor search is 1D only");
  if (!(c_radius > 0.0) || !(window_radius > 0.0) || !(tol > 0.0))
    throw std::invalid_argument("radii and tol must be positive");
  PointSet A = materialize(a, {point1(0.0), window_radius});
  PointSet B = materialize(b, {point1(0.0), window_radius});
  if (!A.contains(point1(0.0), 1e-9) || !B.contains(point1(0.0), 1e-9))
    throw std::invalid_argument("both sets must contain 0");

  auto nearest_member = [](const PointSet& ps, double q) {
    auto xs = ps.xs();
    auto it = std::lower_bound(xs.begin(), xs.end(), q);
    double best = std::numeric_limits<double>::infinity(), y = 0.0;
    if (it != xs.end() && *it - q < best) { best = *it - q; y = *it; }
    if (it != xs.begin() && q - *std::prev(it) < best) {
      best = q - *std::prev(it);
      y = *std::prev(it);
    }
    return std::pair<double, double>(y, best);
  };

  std::vector<double> common;
  for (double v : A.xs())
    if (B.nearest_distance(point1(v)) <= tol) common.push_back(v);
  std::sort(common.begin(), common.end(), [](double p, double q) {
    double ap = std::fabs(p), aq = std::fabs(q);
    return ap != aq ? ap < aq : p < q;
  });

  SeparatingAnchor out;
  for (double v : common) {
    ++out.common_scanned;
    Patch pa = r_patch(a, point1(v), c_radius);
    Patch pb = r_patch(b, point1(nearest_member(B, v).first), c_radius);
    if (!patches_equivalent(pa, pb, tol)) {
      out.found = true;
      out.anchor = v;
      return out;
    }
  }
  return out;
}

ForcingReport patch_forcing_probe(SourcePtr src, double anchor, double r,
                                  double extension, std::size_t sample_count,
                                  double tol) {
  if (!src) throw std::invalid_argument("null source");
  if (src->dim() != 1)
    throw std::invalid_argument("forcing probe is 1D only");
  if (!(r > 0.0) || !(extension >= r) || !(tol > 0.0))
    throw std::invalid_argument("needs 0 < r <= extension and positive tol");
  Patch ref = r_patch(*src, point1(anchor), r);

  double window = std::max(2.0 * extension, 50.0);
  HullSample sample;
  for (int attempt = 0;; ++attempt) {
    try {
      sample = hull_transversal_sample(src, window, sample_count);
      break;
    } catch (const MarginError&) {
      if (attempt >= 4) throw;
      window *= 2.0;
    }
  }

  std::vector<double> match_offsets;
  for (std::size_t i = 0; i < sample.offsets.size(); ++i) {
    SourcePtr tr = sample.translate(i);
    Patch pi = r_patch(*tr, point1(0.0), r);
    if (patches_equivalent(ref, pi, tol)) match_offsets.push_back(sample.offsets[i]);
  }
  if (match_offsets.empty())
    throw std::invalid_argument("anchor patch not found in sampled translates");

  ForcingReport rep;
  rep.occurrences = match_offsets.size();
  rep.forced = true;
  Patch ext0 = r_patch(*translated(src, point1(match_offsets[0])), point1(0.0),
                       extension);
  for (std::size_t i = 1; i < match_offsets.size(); ++i) {
    Patch exti = r_patch(*translated(src, point1(match_offsets[i])), point1(0.0),
                         extension);
    if (!patches_equivalent(ext0, exti, tol)) {
      rep.forced = false;
      rep.counterexample = std::make_pair(match_offsets[0], match_offsets[i]);
      break;
    }
  }
  return rep;
}

}  // namespace delone
