#include "delone/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace delone {

void require_irrational(double theta) {
  for (int q = 1; q <= 50; ++q) {
    double p = std::round(theta * q);
    if (std::fabs(theta - p / q) < 1e-9) {
      std::ostringstream os;
      os << "theta " << theta << " within 1e-9 of rational " << p << "/" << q;
      throw SpecError(os.str());
    }
  }
}

// ---------------- lattice ----------------

namespace {

class LatticeSource final : public DeloneSource {
 public:
  explicit LatticeSource(LatticeSpec spec) : spec_(std::move(spec)) {
    if (spec_.dim != 1 && spec_.dim != 2)
      throw SpecError("lattice dim must be 1 or 2");
    if (spec_.motif.empty()) {
      spec_.motif.push_back(spec_.dim == 1 ? point1(0.0) : point2(0.0, 0.0));
    }
    const auto& B = spec_.basis;
    if (spec_.dim == 1) {
      det_ = B[0][0];
    } else {
      det_ = B[0][0] * B[1][1] - B[0][1] * B[1][0];
    }
    double scale = std::max({std::fabs(B[0][0]), std::fabs(B[0][1]),
                             std::fabs(B[1][0]), std::fabs(B[1][1]), 1.0});
    if (std::fabs(det_) <= 1e-12 * scale * scale)
      throw SpecError("lattice basis is singular");
    if (spec_.dim == 2) {
      inv_[0][0] = B[1][1] / det_;
      inv_[0][1] = -B[0][1] / det_;
      inv_[1][0] = -B[1][0] / det_;
      inv_[1][1] = B[0][0] / det_;
    } else {
      inv_[0][0] = 1.0 / det_;
    }
    for (const Point& m : spec_.motif) {
      if (m.dim != spec_.dim) throw SpecError("motif offset dimension mismatch");
      double c0, c1 = 0.0;
      if (spec_.dim == 1) {
        c0 = inv_[0][0] * m.x;
      } else {
        c0 = inv_[0][0] * m.x + inv_[0][1] * m.y;
        c1 = inv_[1][0] * m.x + inv_[1][1] * m.y;
      }
      if (c0 < -1e-9 || c0 >= 1.0 || c1 < -1e-9 || c1 >= 1.0)
        throw SpecError("motif offset outside fundamental domain");
    }
    // reference window large enough to see every inter-point distance once
    double colnorm = spec_.dim == 1 ? std::fabs(B[0][0])
                                    : std::max(std::hypot(B[0][0], B[1][0]),
                                               std::hypot(B[0][1], B[1][1]));
    double mext = 0.0;
    for (const Point& m : spec_.motif) mext = std::max(mext, norm(m));
    double ref = 3.0 * colnorm + mext + 1.0;
    PointSet pts = points_in({spec_.dim == 1 ? point1(0) : point2(0, 0), ref});
    bounds_.r_min_lower = min_pair_separation(pts) / 2.0 * (1.0 - 1e-9);
    bounds_.r_max_upper =
        largest_interior_gap(pts, {spec_.dim == 1 ? point1(0) : point2(0, 0), ref}) *
        (1.0 + 1e-9);
  }

  int dim() const override { return spec_.dim; }

  PointSet points_in(const Ball& w) const override {
    std::vector<double> xs, ys;
    const auto& B = spec_.basis;
    if (spec_.dim == 1) {
      for (const Point& m : spec_.motif) {
        double lo = (w.center.x - w.radius - m.x) * inv_[0][0];
        double hi = (w.center.x + w.radius - m.x) * inv_[0][0];
        if (lo > hi) std::swap(lo, hi);
        long long ka = static_cast<long long>(std::floor(lo)) - 1;
        long long kb = static_cast<long long>(std::ceil(hi)) + 1;
        for (long long k = ka; k <= kb; ++k) {
          double p = static_cast<double>(k) * B[0][0] + m.x;
          if (std::fabs(p - w.center.x) <= w.radius) xs.push_back(p);
        }
      }
      return PointSet::build(1, std::move(xs));
    }
    double inv_norm = std::max(std::fabs(inv_[0][0]) + std::fabs(inv_[0][1]),
                               std::fabs(inv_[1][0]) + std::fabs(inv_[1][1]));
    for (const Point& m : spec_.motif) {
      double cx = w.center.x - m.x, cy = w.center.y - m.y;
      double k0 = inv_[0][0] * cx + inv_[0][1] * cy;
      double k1 = inv_[1][0] * cx + inv_[1][1] * cy;
      long long reach = static_cast<long long>(std::ceil(inv_norm * w.radius)) + 1;
      for (long long a = std::llround(k0) - reach; a <= std::llround(k0) + reach; ++a) {
        for (long long b = std::llround(k1) - reach; b <= std::llround(k1) + reach; ++b) {
          double px = B[0][0] * static_cast<double>(a) + B[0][1] * static_cast<double>(b) + m.x;
          double py = B[1][0] * static_cast<double>(a) + B[1][1] * static_cast<double>(b) + m.y;
          double dx = px - w.center.x, dy = py - w.center.y;
          if (std::sqrt(dx * dx + dy * dy) <= w.radius) {
            xs.push_back(px);
            ys.push_back(py);
          }
        }
      }
    }
    return PointSet::build(2, std::move(xs), std::move(ys));
  }

  std::string label() const override {
    std::ostringstream os;
    os << "lattice(dim=" << spec_.dim << ", motif=" << spec_.motif.size() << ")";
    return os.str();
  }

  SourceBounds bounds() const override { return bounds_; }

 private:
  LatticeSpec spec_;
  double det_ = 0.0;
  std::array<std::array<double, 2>, 2> inv_{{{0, 0}, {0, 0}}};
  SourceBounds bounds_;
};

}  // namespace

SourcePtr lattice_source(const LatticeSpec& spec) {
  return std::make_shared<LatticeSource>(spec);
}

// ---------------- cut-and-project ----------------

namespace {

class SturmianSource final : public DeloneSource {
 public:
  explicit SturmianSource(const SturmianSpec& spec) : theta_(spec.theta) {
    if (!(theta_ > 0.0 && theta_ < 1.0))
      throw SpecError("sturmian theta must lie in (0, 1)");
    require_irrational(theta_);
    s_ = std::sqrt(1.0 + theta_ * theta_);
    // P is the phase in scaled internal units; the default half-cell offset
    // keeps every lattice point clear of the acceptance-window edges
    P_ = spec.phase ? *spec.phase * s_ : 0.5;
    phase_ = P_ / s_;
  }

  int dim() const override { return 1; }

  PointSet points_in(const Ball& w) const override {
    double a = w.center.x - w.radius, b = w.center.x + w.radius;
    std::vector<double> xs;
    double mlo = (a * s_ - theta_ * (1.0 - P_)) / (1.0 + theta_ * theta_);
    double mhi = (b * s_ + theta_ * (theta_ + P_)) / (1.0 + theta_ * theta_);
    long long m0 = static_cast<long long>(std::floor(mlo)) - 1;
    long long m1 = static_cast<long long>(std::ceil(mhi)) + 1;
    for (long long m = m0; m <= m1; ++m) {
      double md = static_cast<double>(m);
      // accepted n lie in [θm − P − θ, θm − P + 1)
      long long n0 = static_cast<long long>(std::floor(theta_ * md - P_ - theta_)) - 1;
      long long n1 = static_cast<long long>(std::ceil(theta_ * md - P_ + 1.0)) + 1;
      for (long long n = n0; n <= n1; ++n) {
        double v = -theta_ * md + static_cast<double>(n) + P_;  // scaled internal coord
        double edge = std::min(std::fabs(v + theta_), std::fabs(v - 1.0)) / s_;
        if (edge < 1e-12) {
          std::ostringstream os;
          os << "singular phase: lattice point (" << m << ", " << n
             << ") within 1e-12 of the acceptance window edge";
          throw SpecError(os.str());
        }
        if (v < -theta_ || v >= 1.0) continue;
        double t = (md + theta_ * static_cast<double>(n)) / s_;
        if (t >= a && t <= b) xs.push_back(t);
      }
    }
    return PointSet::build(1, std::move(xs));
  }

  std::string label() const override {
    std::ostringstream os;
    os << "sturmian(theta=" << theta_ << ", phase=" << phase_ << ")";
    return os.str();
  }

  SourceBounds bounds() const override {
    SourceBounds b;
    b.r_min_lower = theta_ / (2.0 * s_) * (1.0 - 1e-9);
    b.r_max_upper = 1.0 / (2.0 * s_) * (1.0 + 1e-9);
    return b;
  }

 private:
  double theta_, s_, P_, phase_;
};

}  // namespace

SourcePtr sturmian_source(const SturmianSpec& spec) {
  return std::make_shared<SturmianSource>(spec);
}

// ---------------- Kronecker curve ----------------

double curve_value(const CurveSpec& spec, double s) {
  switch (spec.family) {
    case CurveFamily::linear:
      return spec.params[0] + spec.params[1] * s;
    case CurveFamily::cosine2: {
      double c0 = spec.params.empty() ? 0.0 : spec.params[0];
      double c = std::cos(std::numbers::pi * s / 2.0);
      return c0 + c * c;
    }
    case CurveFamily::polynomial: {
      double acc = 0.0;
      for (std::size_t i = spec.params.size(); i-- > 0;)
        acc = acc * s + spec.params[i];
      return acc;
    }
  }
  return 0.0;
}

double curve_slope(const CurveSpec& spec, double s) {
  switch (spec.family) {
    case CurveFamily::linear:
      return spec.params[1];
    case CurveFamily::cosine2:
      return -(std::numbers::pi / 2.0) * std::sin(std::numbers::pi * s);
    case CurveFamily::polynomial: {
      double acc = 0.0;
      for (std::size_t i = spec.params.size(); i-- > 1;)
        acc = acc * s + static_cast<double>(i) * spec.params[i];
      return acc;
    }
  }
  return 0.0;
}

namespace {

void check_curve_params(const CurveSpec& spec) {
  switch (spec.family) {
    case CurveFamily::linear:
      if (spec.params.size() != 2)
        throw SpecError("linear curve needs params [c0, c1]");
      break;
    case CurveFamily::cosine2:
      if (spec.params.size() > 1)
        throw SpecError("cosine2 curve takes at most one offset param");
      break;
    case CurveFamily::polynomial:
      if (spec.params.empty())
        throw SpecError("polynomial curve needs at least one coefficient");
      break;
  }
}

}  // namespace

CurveValidation validate_curve(const CurveSpec& spec) {
  check_curve_params(spec);
  if (!std::isfinite(spec.theta) || spec.theta <= 0.0)
    throw SpecError("curve slope theta must be positive");
  require_irrational(spec.theta);

  CurveValidation v;
  v.injective = true;  // graph curves cannot self-intersect on the torus
  double d = curve_value(spec, 1.0) - curve_value(spec, 0.0);
  v.endpoint_defect = std::fabs(d - std::round(d));

  constexpr int samples = 10000;
  double margin = std::numeric_limits<double>::infinity();
  double max_slope = 0.0;
  int sign = 0;
  bool flipped = false;
  for (int i = 0; i <= samples; ++i) {
    double s = static_cast<double>(i) / samples;
    double g = curve_slope(spec, s);
    max_slope = std::max(max_slope, std::fabs(g));
    double rel = g - spec.theta;
    margin = std::min(margin, std::fabs(rel));
    int sg = rel > 0.0 ? 1 : (rel < 0.0 ? -1 : 0);
    if (sg != 0) {
      if (sign != 0 && sg != sign) flipped = true;
      sign = sg;
    }
  }
  v.margin = margin;
  v.max_slope = max_slope;
  v.transversal = !flipped && margin > 1e-9;
  v.epsilon_estimate = margin / (2.0 * (1.0 + spec.theta + max_slope));

  if (!v.transversal) {
    std::ostringstream os;
    os << "transversality violated: margin=" << margin
       << (flipped ? " (gamma' - theta changes sign)" : "");
    v.failure = os.str();
  } else if (v.endpoint_defect > 1e-9) {
    std::ostringstream os;
    os << "endpoint_defect=" << v.endpoint_defect
       << " (gamma(1) - gamma(0) must be an integer)";
    v.failure = os.str();
  } else {
    v.ok = true;
  }
  return v;
}

namespace {

// assumes an already-validated curve
std::vector<double> solve_core(const CurveSpec& spec, double t_lo, double t_hi) {
  if (!(t_lo <= t_hi)) throw std::invalid_argument("empty parameter interval");

  // reduced phase; cells are then [p - phx, p + 1 - phx]
  double phx = spec.phase_x - std::floor(spec.phase_x);
  double phy = spec.phase_y - std::floor(spec.phase_y);

  auto G = [&](double t, long long p) {
    return phy + spec.theta * t - curve_value(spec, phx + t - static_cast<double>(p));
  };

  std::vector<double> roots;
  long long p0 = static_cast<long long>(std::floor(t_lo + phx)) - 1;
  long long p1 = static_cast<long long>(std::floor(t_hi + phx)) + 1;
  for (long long p = p0; p <= p1; ++p) {
    // always bisect over the full cell so a root's bits never depend on the
    // query interval
    double alpha = static_cast<double>(p) - phx;
    double beta = static_cast<double>(p) + 1.0 - phx;
    double ga = G(alpha, p), gb = G(beta, p);
    double gmin = std::min(ga, gb), gmax = std::max(ga, gb);
    long long qlo = static_cast<long long>(std::ceil(gmin - 1e-9));
    long long qhi = static_cast<long long>(std::floor(gmax + 1e-9));
    for (long long q = qlo; q <= qhi; ++q) {
      double fa = ga - static_cast<double>(q);
      double fb = gb - static_cast<double>(q);
      double root;
      if (std::fabs(fa) <= 1e-13) {
        root = alpha;
      } else if (std::fabs(fb) <= 1e-13) {
        root = beta;
      } else if (fa * fb > 0.0) {
        continue;
      } else {
        double a = alpha, b = beta, va = fa;
        for (int it = 0; it < 60 && b - a > 1e-12; ++it) {
          double mid = 0.5 * (a + b);
          double vm = G(mid, p) - static_cast<double>(q);
          if (va * vm <= 0.0) {
            b = mid;
          } else {
            a = mid;
            va = vm;
          }
        }
        root = 0.5 * (a + b);
      }
      if (root >= t_lo && root <= t_hi) roots.push_back(root);
    }
  }
  std::sort(roots.begin(), roots.end());
  // cell-boundary roots surface in both adjacent cells; true roots are far
  // apart (re-intersection spacing), so a 1e-9 merge is safe
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 1e-9) out.push_back(r);
  return out;
}

}  // namespace

std::vector<double> solve_intersections(const CurveSpec& spec, double t_lo,
                                        double t_hi) {
  CurveValidation v = validate_curve(spec);
  if (!v.ok) throw SpecError("invalid curve: " + v.failure);
  return solve_core(spec, t_lo, t_hi);
}

namespace {

class KroneckerSource final : public DeloneSource {
 public:
  explicit KroneckerSource(CurveSpec spec) : spec_(std::move(spec)) {
    validation_ = validate_curve(spec_);
    if (!validation_.ok) throw SpecError("invalid curve: " + validation_.failure);
    spec_.phase_x -= std::floor(spec_.phase_x);
    spec_.phase_y -= std::floor(spec_.phase_y);
  }

  int dim() const override { return 1; }

  PointSet points_in(const Ball& w) const override {
    std::vector<double> xs =
        solve_core(spec_, w.center.x - w.radius, w.center.x + w.radius);
    return PointSet::build(1, std::move(xs));
  }

  std::string label() const override {
    std::ostringstream os;
    os << "kronecker(";
    switch (spec_.family) {
      case CurveFamily::linear: os << "linear"; break;
      case CurveFamily::cosine2: os << "cosine2"; break;
      case CurveFamily::polynomial: os << "polynomial"; break;
    }
    os << ", theta=" << spec_.theta << ")";
    return os.str();
  }

  SourceBounds bounds() const override {
    SourceBounds b;
    b.r_min_lower = validation_.epsilon_estimate / 2.0 * (1.0 - 1e-9);
    b.r_max_upper = 1.0 / (2.0 * validation_.margin) * (1.0 + 1e-6);
    return b;
  }

  const CurveValidation& validation() const { return validation_; }

 private:
  CurveSpec spec_;
  CurveValidation validation_;
};

}  // namespace

SourcePtr kronecker_source(const CurveSpec& spec) {
  return std::make_shared<KroneckerSource>(spec);
}

// ---------------- JSON spec parsing ----------------

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& origin, const std::string& msg) {
  throw SpecError(origin + ": " + msg);
}

void check_fields(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& origin) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) { ok = true; break; }
    if (!ok) bad(origin, "unknown field '" + it.key() + "'");
  }
}

double get_num(const json& j, const char* key, const std::string& origin) {
  if (!j.contains(key)) bad(origin, std::string("missing field '") + key + "'");
  if (!j[key].is_number()) bad(origin, std::string("field '") + key + "' must be a number");
  return j[key].get<double>();
}

GeneratorSpec parse_lattice(const json& j, const std::string& origin) {
  check_fields(j, {"type", "dim", "basis", "motif"}, origin);
  LatticeSpec spec;
  if (!j.contains("basis")) bad(origin, "missing field 'basis'");
  const json& b = j["basis"];
  if (b.is_array() && !b.empty() && b[0].is_array()) {
    if (b.size() == 1 && b[0].size() == 1) {
      spec.dim = 1;
      spec.basis[0][0] = b[0][0].get<double>();
    } else if (b.size() == 2 && b[0].size() == 2 && b[1].size() == 2) {
      spec.dim = 2;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) spec.basis[r][c] = b[r][c].get<double>();
    } else {
      bad(origin, "basis must be 1x1 or 2x2");
    }
  } else if (b.is_array() && b.size() == 1 && b[0].is_number()) {
    spec.dim = 1;
    spec.basis[0][0] = b[0].get<double>();
  } else {
    bad(origin, "basis must be [b] or [[a,b],[c,d]]");
  }
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() != spec.dim)
      bad(origin, "field 'dim' disagrees with basis shape");
  }
  if (j.contains("motif")) {
    if (!j["motif"].is_array()) bad(origin, "motif must be an array");
    for (const json& m : j["motif"]) {
      if (spec.dim == 1) {
        if (!m.is_number()) bad(origin, "1D motif entries must be numbers");
        spec.motif.push_back(point1(m.get<double>()));
      } else {
        if (!m.is_array() || m.size() != 2)
          bad(origin, "2D motif entries must be [x, y]");
        spec.motif.push_back(point2(m[0].get<double>(), m[1].get<double>()));
      }
    }
  }
  return spec;
}

GeneratorSpec parse_sturmian(const json& j, const std::string& origin) {
  check_fields(j, {"type", "theta", "phase"}, origin);
  SturmianSpec spec;
  spec.theta = get_num(j, "theta", origin);
  if (j.contains("phase")) {
    if (!j["phase"].is_number()) bad(origin, "sturmian phase must be a number");
    spec.phase = j["phase"].get<double>();
  }
  return spec;
}

GeneratorSpec parse_kronecker(const json& j, const std::string& origin) {
  check_fields(j, {"type", "family", "params", "theta", "phase"}, origin);
  CurveSpec spec;
  if (!j.contains("family") || !j["family"].is_string())
    bad(origin, "missing curve 'family'");
  std::string fam = j["family"].get<std::string>();
  if (fam == "linear") spec.family = CurveFamily::linear;
  else if (fam == "cosine2") spec.family = CurveFamily::cosine2;
  else if (fam == "polynomial") spec.family = CurveFamily::polynomial;
  else bad(origin, "unknown curve family '" + fam + "'");
  if (j.contains("params")) {
    if (!j["params"].is_array()) bad(origin, "params must be an array");
    for (const json& p : j["params"]) {
      if (!p.is_number()) bad(origin, "params entries must be numbers");
      spec.params.push_back(p.get<double>());
    }
  }
  spec.theta = get_num(j, "theta", origin);
  if (j.contains("phase")) {
    const json& ph = j["phase"];
    if (!ph.is_array() || ph.size() != 2 || !ph[0].is_number() || !ph[1].is_number())
      bad(origin, "kronecker phase must be [x, y]");
    spec.phase_x = ph[0].get<double>();
    spec.phase_y = ph[1].get<double>();
  }
  return spec;
}

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& json_text,
                                   const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw SpecError(origin + ": spec must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string())
    throw SpecError(origin + ": missing 'type'");
  std::string type = j["type"].get<std::string>();
  if (type == "lattice") return parse_lattice(j, origin);
  if (type == "sturmian") return parse_sturmian(j, origin);
  if (type == "kronecker") return parse_kronecker(j, origin);
  throw SpecError(origin + ": unknown generator type '" + type + "'");
}

GeneratorSpec load_generator_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SpecError("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_generator_spec(buf.str(), path);
}

SourcePtr make_source(const GeneratorSpec& spec) {
  return std::visit(
      [](const auto& s) -> SourcePtr {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LatticeSpec>) return lattice_source(s);
        else if constexpr (std::is_same_v<T, SturmianSpec>) return sturmian_source(s);
        else return kronecker_source(s);
      },
      spec);
}

}  // namespace delone
