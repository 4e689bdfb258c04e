#pragma once

#include <cstdint>
#include <utility>

#include "delone/sources.hpp"

namespace delone {

// All almost-periodicity diagnostics work on 1D sources over centered
// windows; `max_gap` in the reports is the length (diameter) of the largest
// point-free interval inside the search window.

// Scaled comparison distance between two sets: 1/R*, where R* is the
// largest radius (integer scan to r_cap, then bisection to 1e-6) at which
// the origin-centered R-patches agree to within 1/R in patch distance.
// 0 when the sets agree exactly on B_{r_cap}; capped at 1.
double delone_distance(const DeloneSource& a, const DeloneSource& b,
                       double r_cap);

struct ReturnVectorReport {
  double r = 0.0;
  double window_radius = 0.0;
  PointSet vectors;
  double max_gap = 0.0;
};
// Translation vectors a with patch_distance(B_r[Λ], B_r[Λ−a]) ≤ 1/r.
// Candidates: a grid of pitch min(1e-2, 1/(4r)) over the 1/r-ball around
// each window point (every return vector lies within 1/r of Λ).
// Requires 0 ∈ Λ (within 1e-9).
ReturnVectorReport return_vectors(const DeloneSource& src, double r,
                                  double window_radius);

struct EpsPeriodReport {
  double epsilon = 0.0;
  double window_radius = 0.0;
  PointSet periods;
  double max_gap = 0.0;
  bool relatively_dense_at_scale = false;  // heuristic: max_gap ≤ radius/2
};
// a ∈ ±(Λ ∩ window) such that every window point stays within ε of the set
// under both +a and −a shifts.  The candidate list is symmetrized and the
// pass condition is symmetric, so periods == −periods exactly, and 0 always
// passes.  Requires ε < r_min/2 (unique matching) and 0 ∈ Λ.
EpsPeriodReport eps_almost_periods(const DeloneSource& src, double epsilon,
                                   double window_radius);

struct BijectionWitness {
  double a = 0.0;
  double epsilon = 0.0;
  double window_radius = 0.0;
  std::vector<std::pair<double, double>> pairs;  // (x, y): |y − (x+a)| ≤ ε
  double max_displacement = 0.0;
};
// The unique ε-matching x ↦ y between the window and the shifted set;
// throws when a is not an ε-almost period at this scale (message names the
// first failing point).
BijectionWitness find_bijection(const DeloneSource& src, double a,
                                double epsilon, double window_radius);

struct BumpSpec {
  double half_width = 1.0;
  double height = 1.0;
  double lipschitz() const { return height / half_width; }
};

struct BohrReport {
  BumpSpec bump;
  double epsilon = 0.0;
  double grid_pitch = 0.0;
  double window_radius = 0.0;
  PointSet periods;  // grid shifts t with sup_s |f(s−t) − f(s)| ≤ ε
  double max_gap = 0.0;
};
// Functional almost-periods of f(t) = Σ_x φ(t − x) with a triangle bump φ,
// evaluated on an aligned grid (pitch ≤ half_width/10).
BohrReport bohr_diagnostic(const DeloneSource& src, const BumpSpec& bump,
                           double epsilon, double grid_pitch,
                           double window_radius);

struct LadderStep {
  enum class Kind { return_r, eps };
  Kind kind = Kind::eps;
  double value = 0.0;
};

enum class UapVerdict { consistent, refuted_at_scale, inconclusive };
const char* to_string(UapVerdict v);

struct UapStepResult {
  LadderStep step;
  double window_radius = 0.0;
  std::size_t period_count = 0;
  double max_gap = 0.0;
  bool relatively_dense_at_scale = false;
  bool bijections_ok = true;  // spot-checked for eps steps
};

struct UapReport {
  UapVerdict verdict = UapVerdict::inconclusive;
  std::vector<UapStepResult> steps;
  std::string rationale;
};
// Runs the ladder over each window (ascending).  Refuted when an ε-period
// set's max_gap exceeds half the largest window radius; consistent when all
// ε steps stay relatively dense there and spot-checked bijections succeed.
UapReport uap_diagnostic(const DeloneSource& src,
                         const std::vector<LadderStep>& ladder,
                         const std::vector<double>& window_radii,
                         std::uint64_t seed);

}  // namespace delone
