#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

#include "delone/almost_period.hpp"
#include "delone/dynamics.hpp"
#include "delone/generators.hpp"
#include "delone/report_json.hpp"

using namespace delone;

namespace {

struct Options {
  std::string spec_path, points_path, out_path;
  std::string gen_format = "points";
  std::string analyze_format = "json";
  std::string ops = "check";
  double window = 50.0;
  double radius = 5.0;
  double epsilon = 0.1;
  double r_cap = 100.0;
  double tol = 1e-6;
  double shift_a = 0.0;
  bool shift_a_given = false;
  double bump_width = 1.0;
  double bump_height = 1.0;
  double pitch = 0.0;  // 0 -> bump_width / 10
  std::uint64_t seed = 0;
  std::string cmp_a, cmp_b;
  double anchor_radius = 0.0;   // 0 -> skip the anchor search
  double proximality_r = 0.0;   // 0 -> skip the proximality probe
};

void emit(const std::string& out_path, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out_path);
    if (!f) throw SpecError("cannot write " + out_path);
    f << body;
  }
}

SourcePtr source_from_file(const std::string& path) {
  // a spec file is a JSON object; anything else is a point file
  std::ifstream f(path);
  if (!f) throw SpecError("cannot read " + path);
  char c = 0;
  while (f.get(c) && (c == ' ' || c == '\t' || c == '\n' || c == '\r')) {}
  if (c == '{') return make_source(load_generator_spec(path));
  return std::make_shared<PointListSource>(read_point_file(path), path);
}

SourcePtr load_source(const Options& o) {
  if (!o.spec_path.empty() && !o.points_path.empty())
    throw SpecError("give either --spec or --points, not both");
  if (!o.spec_path.empty()) return make_source(load_generator_spec(o.spec_path));
  if (!o.points_path.empty())
    return std::make_shared<PointListSource>(read_point_file(o.points_path),
                                             o.points_path);
  throw SpecError("need --spec or --points");
}

// the almost-period ops anchor everything at 0; shift the nearest point there
SourcePtr normalize_origin(SourcePtr src) {
  if (src->dim() != 1) return src;
  for (double R = 1.0; R <= 64.0; R *= 2.0) {
    PointSet w = materialize(*src, {point1(0.0), R});
    if (!w.empty()) {
      double best = std::numeric_limits<double>::infinity(), x0 = 0.0;
      for (double x : w.xs())
        if (std::fabs(x) < best) { best = std::fabs(x); x0 = x; }
      if (best <= 1e-9) return src;
      return translated(src, point1(x0));
    }
  }
  throw MarginError("no points within radius 64 of the origin");
}

Point origin_for(const DeloneSource& s) {
  return s.dim() == 1 ? point1(0.0) : point2(0.0, 0.0);
}

int run_generate(const Options& o) {
  if (o.spec_path.empty()) throw SpecError("generate needs --spec");
  SourcePtr src = make_source(load_generator_spec(o.spec_path));
  PointSet pts = materialize(*src, {origin_for(*src), o.window});
  if (o.gen_format == "points") {
    emit(o.out_path, format_point_file(pts));
  } else if (o.gen_format == "json") {
    json j;
    j["source"] = src->label();
    j["window_radius"] = num(o.window);
    j["dim"] = pts.dim();
    j["count"] = pts.size();
    j["points"] = points_json(pts);
    emit(o.out_path, j.dump(2));
  } else {
    throw SpecError("generate format must be points or json");
  }
  return 0;
}

std::vector<std::string> split_ops(const std::string& ops) {
  std::vector<std::string> out;
  std::stringstream ss(ops);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw SpecError("empty --ops list");
  return out;
}

int run_analyze(const Options& o) {
  SourcePtr src = load_source(o);
  const Ball window{origin_for(*src), o.window};
  const double pitch = o.pitch > 0.0 ? o.pitch : o.bump_width / 10.0;
  const BumpSpec bump{o.bump_width, o.bump_height};

  std::vector<std::string> ops = split_ops(o.ops);
  const bool csv = o.analyze_format == "csv";
  if (!csv && o.analyze_format != "json")
    throw SpecError("analyze format must be json or csv");

  json reports = json::array();
  std::ostringstream csv_rows;
  csv_rows << "series,x,y\n";

  for (const std::string& op : ops) {
    if (csv && op != "gap_series" && op != "census_series")
      throw SpecError("csv output supports only gap_series and census_series, not '" + op + "'");
    if (op == "check") {
      reports.push_back(report_json(delone_check(*src, window)));
    } else if (op == "census") {
      reports.push_back(report_json(flc_census(*src, o.radius, window, o.tol)));
    } else if (op == "periods") {
      PointSet p = detect_periods(*src, window, o.tol);
      reports.push_back(periods_report_json(p, window, o.tol));
    } else if (op == "return_vectors") {
      reports.push_back(
          report_json(return_vectors(*normalize_origin(src), o.radius, o.window)));
    } else if (op == "eps_periods") {
      reports.push_back(report_json(
          eps_almost_periods(*normalize_origin(src), o.epsilon, o.window)));
    } else if (op == "bijection") {
      if (!o.shift_a_given) throw SpecError("bijection needs --a SHIFT");
      reports.push_back(report_json(
          find_bijection(*normalize_origin(src), o.shift_a, o.epsilon, o.window)));
    } else if (op == "bohr") {
      reports.push_back(report_json(
          bohr_diagnostic(*normalize_origin(src), bump, o.epsilon, pitch, o.window)));
    } else if (op == "gap_series") {
      json rows = json::array();
      for (int k = 1; k <= 10; ++k) {
        double S = o.window * k / 10.0;
        Ball b{origin_for(*src), S};
        double gap = 2.0 * largest_empty_gap(materialize(*src, b), b);
        rows.push_back(json::array({num(S), num(gap)}));
        csv_rows << "max_gap," << round_sig(S) << "," << round_sig(gap) << "\n";
      }
      json j;
      j["op"] = "gap_series";
      j["window_radius"] = num(o.window);
      j["rows"] = std::move(rows);
      reports.push_back(std::move(j));
    } else if (op == "census_series") {
      json rows = json::array();
      for (int r = 1; r <= static_cast<int>(std::floor(o.radius)); ++r) {
        FlcCensus c = flc_census(*src, static_cast<double>(r), window, o.tol);
        rows.push_back(json::array(
            {num(static_cast<double>(r)), json(c.classes.size())}));
        csv_rows << "patch_classes," << r << "," << c.classes.size() << "\n";
      }
      json j;
      j["op"] = "census_series";
      j["window_radius"] = num(o.window);
      j["rows"] = std::move(rows);
      reports.push_back(std::move(j));
    } else {
      throw SpecError("unknown op '" + op + "'");
    }
  }

  if (csv) {
    emit(o.out_path, csv_rows.str());
    return 0;
  }
  json out;
  out["source"] = src->label();
  out["config"] = {{"window", num(o.window)},   {"radius", num(o.radius)},
                   {"epsilon", num(o.epsilon)}, {"tol", num(o.tol)},
                   {"bump_half_width", num(o.bump_width)},
                   {"bump_height", num(o.bump_height)},
                   {"grid_pitch", num(pitch)}};
  out["reports"] = std::move(reports);
  emit(o.out_path, out.dump(2));
  return 0;
}

int run_compare(const Options& o) {
  SourcePtr a = source_from_file(o.cmp_a);
  SourcePtr b = source_from_file(o.cmp_b);
  json out;
  out["a"] = a->label();
  out["b"] = b->label();
  out["r_cap"] = num(o.r_cap);
  out["distance"] = num(delone_distance(*a, *b, o.r_cap));
  if (o.anchor_radius > 0.0) {
    SeparatingAnchor sep = find_separating_anchor(
        *normalize_origin(a), *normalize_origin(b), o.anchor_radius, o.window, o.tol);
    out["separating_anchor"] = report_json(sep);
  }
  if (o.proximality_r > 0.0) {
    ProximalityReport prox = proximality_probe(*a, *b, o.window, o.proximality_r);
    out["proximality"] = report_json(prox);
  }
  emit(o.out_path, out.dump(2));
  return 0;
}

int run_diagnose(const Options& o) {
  SourcePtr src = normalize_origin(load_source(o));
  PointSet w = materialize(*src, {point1(0.0), o.window});
  if (w.size() < 2) {
    std::ostringstream os;
    os << "window radius " << o.window << " captures " << w.size()
       << " point(s); the diagnostic needs at least 2";
    throw MarginError(os.str());
  }
  double r_min = min_pair_separation(w) / 2.0;
  std::vector<LadderStep> ladder;
  for (double f : {0.45, 0.3, 0.15})
    ladder.push_back({LadderStep::Kind::eps, f * r_min});
  std::vector<double> windows{o.window / 2.0, o.window};
  UapReport rep = uap_diagnostic(*src, ladder, windows, o.seed);
  json out;
  out["source"] = src->label();
  json lj = json::array();
  for (const LadderStep& s : ladder) lj.push_back(num(s.value));
  out["config"] = {{"window", num(o.window)},
                   {"windows", json::array({num(windows[0]), num(windows[1])})},
                   {"measured_r_min", num(r_min)},
                   {"ladder_epsilons", std::move(lj)},
                   {"seed", o.seed}};
  out["report"] = report_json(rep);
  emit(o.out_path, out.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delone point sets on the line: construction and finite-scale "
               "equicontinuity diagnostics"};
  app.require_subcommand(1);
  Options o;

  CLI::App* gen = app.add_subcommand("generate", "materialize a window of a generated set");
  gen->add_option("--spec", o.spec_path, "generator spec (JSON)");
  gen->add_option("--window", o.window, "window radius around the origin");
  gen->add_option("--format", o.gen_format, "points|json");
  gen->add_option("--out", o.out_path, "output path (default stdout)");

  CLI::App* ana = app.add_subcommand("analyze", "run analyses over one set");
  ana->add_option("--spec", o.spec_path, "generator spec (JSON)");
  ana->add_option("--points", o.points_path, "point file");
  ana->add_option("--ops", o.ops,
                  "comma list: check,census,periods,return_vectors,eps_periods,"
                  "bijection,bohr,gap_series,census_series");
  ana->add_option("--window", o.window, "window radius");
  ana->add_option("--radius", o.radius, "patch radius (census, return_vectors)");
  ana->add_option("--epsilon", o.epsilon, "tolerance for almost-period ops");
  ana->add_option("--tol", o.tol, "matching tolerance (census, periods)");
  CLI::Option* a_opt = ana->add_option("--a", o.shift_a, "shift to witness (bijection)");
  ana->add_option("--bump-width", o.bump_width, "bump half-width (bohr)");
  ana->add_option("--bump-height", o.bump_height, "bump height (bohr)");
  ana->add_option("--pitch", o.pitch, "sampling pitch (bohr, default width/10)");
  ana->add_option("--format", o.analyze_format, "json|csv");
  ana->add_option("--out", o.out_path, "output path (default stdout)");

  CLI::App* cmp = app.add_subcommand("compare", "compare two sets");
  cmp->add_option("a", o.cmp_a, "spec JSON or point file")->required();
  cmp->add_option("b", o.cmp_b, "spec JSON or point file")->required();
  cmp->add_option("--r-cap", o.r_cap, "largest comparison radius");
  cmp->add_option("--anchor-radius", o.anchor_radius,
                  "also search for a separating anchor at this patch radius");
  cmp->add_option("--proximality-r", o.proximality_r,
                  "also probe orbit proximality at this patch radius");
  cmp->add_option("--window", o.window, "search window for the probes");
  cmp->add_option("--tol", o.tol, "matching tolerance");
  cmp->add_option("--out", o.out_path, "output path (default stdout)");

  CLI::App* dia = app.add_subcommand("diagnose", "uniform almost-periodicity verdict");
  dia->add_option("--spec", o.spec_path, "generator spec (JSON)");
  dia->add_option("--points", o.points_path, "point file");
  dia->add_option("--window", o.window, "largest window radius");
  dia->add_option("--seed", o.seed, "seed for bijection spot checks");
  dia->add_option("--out", o.out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.shift_a_given = a_opt->count() > 0;

  try {
    if (gen->parsed()) return run_generate(o);
    if (ana->parsed()) return run_analyze(o);
    if (cmp->parsed()) return run_compare(o);
    if (dia->parsed()) return run_diagnose(o);
    return 2;
  } catch (const MarginError& e) {
    std::cerr << "margin error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
