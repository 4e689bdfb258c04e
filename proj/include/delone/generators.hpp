#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "delone/sources.hpp"

namespace delone {

// n-dimensional lattice with a motif of offsets inside the fundamental
// domain: { B k + m : k ∈ Z^n, m ∈ motif }.
struct LatticeSpec {
  int dim = 1;
  // row-major basis columns: dim 1 uses basis[0][0]; dim 2 the full 2x2
  std::array<std::array<double, 2>, 2> basis{{{1.0, 0.0}, {0.0, 1.0}}};
  std::vector<Point> motif;  // defaults to the origin
};

// Cut-and-project line set: lattice point (m, n) is accepted when its
// internal coordinate (−θm + n)/√(1+θ²) + phase falls in the half-open
// acceptance window [−θ, 1)/√(1+θ²); it then contributes (m + θn)/√(1+θ²).
struct SturmianSpec {
  double theta = 0.0;
  // Internal-space offset.  The default (half a lattice cell) is regular;
  // phase 0 is singular: (1, 0) projects exactly onto the window edge.
  std::optional<double> phase;
};

enum class CurveFamily { linear, cosine2, polynomial };

// Graph curve (s, γ(s)) on the 2-torus, crossed by the Kronecker line flow
// t ↦ phase + (t, θt).  Families:
//   linear:     γ(s) = c0 + c1 s            params {c0, c1}, c1 integral
//   cosine2:    γ(s) = c0 + cos²(πs/2)      params {} or {c0}
//   polynomial: γ(s) = Σ params[i] s^i      endpoint difference integral
struct CurveSpec {
  CurveFamily family = CurveFamily::linear;
  std::vector<double> params;
  double theta = 0.0;
  double phase_x = 0.0;
  double phase_y = 0.0;
};

struct CurveValidation {
  bool ok = false;
  bool transversal = false;
  double margin = 0.0;           // min over s of |γ'(s) − θ|, sign constant
  double endpoint_defect = 0.0;  // distance of γ(1) − γ(0) from the integers
  bool injective = false;        // automatic for graph curves
  double epsilon_estimate = 0.0; // margin / (2 (1 + θ + max|γ'|))
  double max_slope = 0.0;        // max over s of |γ'(s)|
  std::string failure;           // names the violated invariant when !ok
};

CurveValidation validate_curve(const CurveSpec& spec);

double curve_value(const CurveSpec& spec, double s);
double curve_slope(const CurveSpec& spec, double s);

// All t in [t_lo, t_hi] with phase + (t, θt) on the curve (mod Z²).  Per
// unit cell the crossing function is strictly monotone (transversality),
// so each (cell, sheet) pair holds at most one root; bisection to 1e-12.
std::vector<double> solve_intersections(const CurveSpec& spec, double t_lo,
                                        double t_hi);

SourcePtr lattice_source(const LatticeSpec& spec);
SourcePtr sturmian_source(const SturmianSpec& spec);
SourcePtr kronecker_source(const CurveSpec& spec);

using GeneratorSpec = std::variant<LatticeSpec, SturmianSpec, CurveSpec>;

// Strict JSON spec parsing: unknown fields are rejected.
GeneratorSpec parse_generator_spec(const std::string& json_text,
                                   const std::string& origin);
GeneratorSpec load_generator_spec(const std::string& path);
SourcePtr make_source(const GeneratorSpec& spec);

// Rejects theta within 1e-9 of a rational with denominator <= 50.
void require_irrational(double theta);

}  // namespace delone
