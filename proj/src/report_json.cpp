#include "delone/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace delone {

double round_sig(double v, int digits) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

json num(double v) { return json(round_sig(v)); }

json points_json(const PointSet& ps) {
  json arr = json::array();
  if (ps.dim() == 1) {
    for (double x : ps.xs()) arr.push_back(num(x));
  } else {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      Point p = ps.at(i);
      arr.push_back(json::array({num(p.x), num(p.y)}));
    }
  }
  return arr;
}

namespace {

json ball_json(const Ball& b) {
  json j;
  j["center"] = b.center.dim == 1 ? json(num(b.center.x))
                                  : json::array({num(b.center.x), num(b.center.y)});
  j["radius"] = num(b.radius);
  return j;
}

}  // namespace

json report_json(const DeloneCheckReport& r) {
  json j;
  j["op"] = "check";
  j["window"] = ball_json(r.window);
  j["count"] = r.count;
  j["r_min"] = num(r.r_min);
  j["r_max"] = num(r.r_max);
  j["uniformly_discrete"] = r.uniformly_discrete;
  j["relatively_dense"] = r.relatively_dense;
  return j;
}

json report_json(const FlcCensus& r) {
  json j;
  j["op"] = "census";
  j["r"] = num(r.r);
  j["window"] = ball_json(r.window);
  j["tol"] = num(r.tol);
  j["anchor_count"] = r.anchor_count;
  j["class_count"] = r.classes.size();
  json cls = json::array();
  for (const PatchClass& c : r.classes) {
    json e;
    e["count"] = c.count;
    e["size"] = c.representative.points.size();
    e["representative"] = points_json(c.representative.points);
    cls.push_back(std::move(e));
  }
  j["classes"] = std::move(cls);
  return j;
}

json periods_report_json(const PointSet& periods, const Ball& window, double tol) {
  json j;
  j["op"] = "periods";
  j["window"] = ball_json(window);
  j["tol"] = num(tol);
  j["count"] = periods.size();
  j["periods"] = points_json(periods);
  return j;
}

json report_json(const ReturnVectorReport& r) {
  json j;
  j["op"] = "return_vectors";
  j["r"] = num(r.r);
  j["window_radius"] = num(r.window_radius);
  j["count"] = r.vectors.size();
  j["max_gap"] = num(r.max_gap);
  j["vectors"] = points_json(r.vectors);
  return j;
}

json report_json(const EpsPeriodReport& r) {
  json j;
  j["op"] = "eps_periods";
  j["epsilon"] = num(r.epsilon);
  j["window_radius"] = num(r.window_radius);
  j["count"] = r.periods.size();
  j["max_gap"] = num(r.max_gap);
  j["relatively_dense_at_scale"] = r.relatively_dense_at_scale;
  j["periods"] = points_json(r.periods);
  return j;
}

json report_json(const BijectionWitness& r) {
  json j;
  j["op"] = "bijection";
  j["a"] = num(r.a);
  j["epsilon"] = num(r.epsilon);
  j["window_radius"] = num(r.window_radius);
  j["pair_count"] = r.pairs.size();
  j["max_displacement"] = num(r.max_displacement);
  json pairs = json::array();
  for (const auto& [x, y] : r.pairs)
    pairs.push_back(json::array({num(x), num(y)}));
  j["pairs"] = std::move(pairs);
  return j;
}

json report_json(const BohrReport& r) {
  json j;
  j["op"] = "bohr";
  j["bump"] = {{"half_width", num(r.bump.half_width)},
               {"height", num(r.bump.height)},
               {"lipschitz", num(r.bump.lipschitz())}};
  j["epsilon"] = num(r.epsilon);
  j["grid_pitch"] = num(r.grid_pitch);
  j["window_radius"] = num(r.window_radius);
  j["count"] = r.periods.size();
  j["max_gap"] = num(r.max_gap);
  j["periods"] = points_json(r.periods);
  return j;
}

json report_json(const UapReport& r) {
  json j;
  j["op"] = "uap";
  j["verdict"] = to_string(r.verdict);
  j["rationale"] = r.rationale;
  json steps = json::array();
  for (const UapStepResult& s : r.steps) {
    json e;
    e["kind"] = s.step.kind == LadderStep::Kind::eps ? "eps" : "return_r";
    e["value"] = num(s.step.value);
    e["window_radius"] = num(s.window_radius);
    e["period_count"] = s.period_count;
    e["max_gap"] = num(s.max_gap);
    e["relatively_dense_at_scale"] = s.relatively_dense_at_scale;
    e["bijections_ok"] = s.bijections_ok;
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  return j;
}

json report_json(const ProximalityReport& r) {
  json j;
  j["op"] = "proximality";
  j["r"] = num(r.r);
  j["t_window_radius"] = num(r.t_window_radius);
  j["inf_estimate"] = num(r.inf_estimate);
  j["argmin_t"] = num(r.argmin_t);
  return j;
}

json report_json(const SeparatingAnchor& r) {
  json j;
  j["op"] = "separating_anchor";
  j["found"] = r.found;
  if (r.found) j["anchor"] = num(r.anchor);
  j["common_scanned"] = r.common_scanned;
  return j;
}

json report_json(const ForcingReport& r) {
  json j;
  j["op"] = "forcing";
  j["forced"] = r.forced;
  j["occurrences"] = r.occurrences;
  if (r.counterexample) {
    j["counterexample"] =
        json::array({num(r.counterexample->first), num(r.counterexample->second)});
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace delone
