#pragma once

#include <optional>

#include "delone/sources.hpp"

namespace delone {

// Radius such that agreement of C-patches at a shared point propagates a
// separation argument: 2R + sqrt(f) + 1 for covering radius R and flow
// displacement budget f.
double separation_radius(double covering_radius, double flow_budget);

// Translates Λ − x for the `count` window points nearest the origin
// (ties toward the negative side); every translate contains 0.
struct HullSample {
  SourcePtr base;
  double window_radius = 0.0;
  std::vector<double> offsets;
  SourcePtr translate(std::size_t i) const;
};
HullSample hull_transversal_sample(SourcePtr src, double window_radius,
                                   std::size_t count);

struct ProximalityReport {
  double r = 0.0;
  double t_window_radius = 0.0;
  double inf_estimate = 0.0;  // min over scanned t of the patch distance
  double argmin_t = 0.0;
};
// Scans t over the window points of `a` plus a coarse grid (pitch 0.1) and
// reports the closest approach of the two orbits at patch radius r.
ProximalityReport proximality_probe(const DeloneSource& a,
                                    const DeloneSource& b,
                                    double t_window_radius, double r);

struct SeparatingAnchor {
  bool found = false;
  double anchor = 0.0;          // smallest-|v| common point whose C-patches differ
  std::size_t common_scanned = 0;
};
// Both sources must contain 0.  Scans common points v (within tol) by
// increasing |v| and returns the first whose c_radius-patches disagree.
SeparatingAnchor find_separating_anchor(const DeloneSource& a,
                                        const DeloneSource& b, double c_radius,
                                        double window_radius, double tol);

struct ForcingReport {
  bool forced = false;
  std::size_t occurrences = 0;
  // offsets of the first pair of matching translates whose extension
  // patches disagree (when !forced)
  std::optional<std::pair<double, double>> counterexample;
};
// Among `sample_count` hull translates, finds those whose origin r-patch
// matches the anchor's, then tests whether they all agree out to
// `extension`.  Errors when the anchor patch never occurs in the sample.
ForcingReport patch_forcing_probe(SourcePtr src, double anchor, double r,
                                  double extension, std::size_t sample_count,
                                  double tol);

}  // namespace delone
