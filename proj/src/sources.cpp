#include "delone/sources.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "delone/kernels.hpp"

namespace delone {

TranslatedSource::TranslatedSource(SourcePtr base, Point shift)
    : base_(std::move(base)), shift_(shift) {
  if (!base_) throw std::invalid_argument("null base source");
  if (shift_.dim != base_->dim())
    throw std::invalid_argument("shift dimension mismatch");
}

int TranslatedSource::dim() const { return base_->dim(); }

PointSet TranslatedSource::points_in(const Ball& window) const {
  Ball up{window.center + shift_, window.radius};
  return base_->points_in(up).translated(-shift_);
}

std::string TranslatedSource::label() const {
  char buf[64];
  if (dim() == 1)
    std::snprintf(buf, sizeof buf, " - (%.6g)", shift_.x);
  else
    std::snprintf(buf, sizeof buf, " - (%.6g, %.6g)", shift_.x, shift_.y);
  return base_->label() + buf;
}

SourceBounds TranslatedSource::bounds() const { return base_->bounds(); }

SourcePtr translated(SourcePtr base, const Point& shift) {
  return std::make_shared<TranslatedSource>(std::move(base), shift);
}

PointListSource::PointListSource(PointSet pts, std::string label,
                                 std::optional<double> coverage_radius)
    : pts_(std::move(pts)), label_(std::move(label)) {
  if (coverage_radius) {
    coverage_ = *coverage_radius;
  } else {
    for (std::size_t i = 0; i < pts_.size(); ++i)
      coverage_ = std::max(coverage_, norm(pts_.at(i)));
  }
}

int PointListSource::dim() const { return pts_.dim(); }

PointSet PointListSource::points_in(const Ball& window) const {
  double reach = norm(window.center) + window.radius;
  if (reach > coverage_ + 1e-9) {
    std::ostringstream os;
    os << "window reaches " << reach << " but data coverage ends at "
       << coverage_ << " (|center| " << norm(window.center) << " + radius "
       << window.radius << ")";
    throw MarginError(os.str());
  }
  return pts_.restricted(window);
}

std::string PointListSource::label() const { return label_; }

PointSet materialize(const DeloneSource& src, const Ball& window) {
  if (window.center.dim != src.dim())
    throw std::invalid_argument("window dimension mismatch");
  if (!(window.radius >= 0.0))
    throw std::invalid_argument("window radius must be nonnegative");
  return src.points_in(window);
}

Patch r_patch(const DeloneSource& src, const Point& x, double r) {
  if (x.dim != src.dim()) throw std::invalid_argument("anchor dimension mismatch");
  // snap to the actual member so the patch is exactly centered
  PointSet near = src.points_in({x, 1e-9});
  if (near.empty())
    throw std::invalid_argument("r_patch anchor is not a point of the set");
  Point anchor = near.at(0);
  double best = dist(anchor, x);
  for (std::size_t i = 1; i < near.size(); ++i) {
    if (dist(near.at(i), x) < best) {
      anchor = near.at(i);
      best = dist(anchor, x);
    }
  }
  PointSet pts = src.points_in({anchor, r}).translated(-anchor);
  return Patch{r, std::move(pts), true};
}

DeloneCheckReport delone_check(const DeloneSource& src, const Ball& window) {
  PointSet pts = materialize(src, window);
  if (pts.size() < 2)
    throw std::invalid_argument("delone_check needs at least 2 window points");
  DeloneCheckReport rep;
  rep.window = window;
  rep.count = pts.size();
  rep.r_min = min_pair_separation(pts) / 2.0;
  rep.r_max = largest_interior_gap(pts, window);
  SourceBounds b = src.bounds();
  rep.uniformly_discrete = b.r_min_lower ? rep.r_min >= *b.r_min_lower : rep.r_min > 0.0;
  rep.relatively_dense = b.r_max_upper ? rep.r_max <= *b.r_max_upper
                                       : std::isfinite(rep.r_max);
  return rep;
}

namespace {

Patch slice_patch(const PointSet& pts, const Point& anchor, double r) {
  return Patch{r, pts.restricted({anchor, r}).translated(-anchor), true};
}

}  // namespace

FlcCensus flc_census(const DeloneSource& src, double r, const Ball& window,
                     double tol) {
  if (!(r > 0.0)) throw std::invalid_argument("patch radius must be positive");
  PointSet pts = materialize(src, window);
  if (pts.size() < 2)
    throw std::invalid_argument("flc_census needs at least 2 window points");
  double r_max = largest_interior_gap(pts, window);
  if (window.radius < r + r_max) {
    std::ostringstream os;
    os << "census window radius " << window.radius << " below patch radius " << r
       << " + covering radius " << r_max;
    throw MarginError(os.str());
  }
  double r_min = min_pair_separation(pts) / 2.0;
  if (!(tol < r_min)) {
    std::ostringstream os;
    os << "census tol " << tol << " too coarse for greedy patch matching (r_min "
       << r_min << ")";
    throw std::invalid_argument(os.str());
  }

  FlcCensus census;
  census.r = r;
  census.window = window;
  census.tol = tol;

  Ball core{window.center, window.radius - r};
  PointSet anchors = pts.restricted(core);
  census.anchor_count = anchors.size();
  // bucket by patch size to keep the representative scan short
  std::vector<std::size_t> by_size_first;  // class indices in first-seen order
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    Patch p = slice_patch(pts, anchors.at(i), r);
    bool matched = false;
    for (std::size_t ci : by_size_first) {
      if (census.classes[ci].representative.points.size() != p.points.size())
        continue;
      if (patches_equivalent(census.classes[ci].representative, p, tol)) {
        ++census.classes[ci].count;
        matched = true;
        break;
      }
    }
    if (!matched) {
      census.classes.push_back(PatchClass{std::move(p), 1});
      by_size_first.push_back(census.classes.size() - 1);
    }
  }
  return census;
}

PointSet detect_periods(const DeloneSource& src, const Ball& window, double tol) {
  PointSet pts = materialize(src, window);
  if (pts.size() < 2)
    throw std::invalid_argument("detect_periods needs at least 2 window points");
  double r_max = largest_interior_gap(pts, window);
  if (!(window.radius > 2.0 * r_max)) {
    std::ostringstream os;
    os << "period window radius " << window.radius
       << " not above twice the covering radius " << r_max;
    throw MarginError(os.str());
  }
  double half = window.radius / 2.0;

  auto verify = [&](const Point& t) {
    double tn = norm(t);
    if (tn <= tol) return false;  // the zero vector is excluded
    Ball core{window.center, window.radius - tn};
    PointSet cx = pts.restricted(core);
    for (std::size_t i = 0; i < cx.size(); ++i) {
      Point x = cx.at(i);
      if (pts.nearest_distance(x + t) > tol) return false;
      if (pts.nearest_distance(x - t) > tol) return false;
    }
    return !cx.empty();
  };

  std::vector<Point> found;
  if (src.dim() == 1) {
    auto xs = pts.xs();
    std::vector<double> diffs;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        double d = xs[j] - xs[i];
        if (d > half) break;
        if (d > 0.0) diffs.push_back(d);
      }
    }
    std::sort(diffs.begin(), diffs.end());
    // candidates within tol of each other collapse to one representative
    std::size_t i = 0;
    while (i < diffs.size()) {
      std::size_t j = i;
      while (j + 1 < diffs.size() && diffs[j + 1] - diffs[j] <= tol) ++j;
      double rep = diffs[(i + j) / 2];
      if (verify(point1(rep))) {
        found.push_back(point1(rep));
        found.push_back(point1(-rep));
      }
      i = j + 1;
    }
  } else {
    std::vector<Point> cands;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (i == j) continue;
        Point d = pts.at(j) - pts.at(i);
        if (norm(d) <= half && (d.x > 0 || (d.x == 0 && d.y > 0))) cands.push_back(d);
      }
    std::sort(cands.begin(), cands.end(), [](const Point& a, const Point& b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (i > 0 && dist(cands[i], cands[i - 1]) <= tol) continue;
      if (verify(cands[i])) {
        found.push_back(cands[i]);
        found.push_back(-cands[i]);
      }
    }
  }
  return PointSet::build(src.dim(), found);
}

// ---- point-set files ----

std::string format_point_file(const PointSet& ps) {
  std::ostringstream os;
  os << "dim " << ps.dim() << "\n";
  char buf[64];
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps.dim() == 1) {
      std::snprintf(buf, sizeof buf, "%.17g\n", ps.xs()[i]);
      os << buf;
    } else {
      std::snprintf(buf, sizeof buf, "%.17g %.17g\n", ps.xs()[i], ps.ys()[i]);
      os << buf;
    }
  }
  return os.str();
}

void write_point_file(const std::string& path, const PointSet& ps) {
  std::ofstream f(path);
  if (!f) throw SpecError("cannot write " + path);
  f << format_point_file(ps);
}

PointSet parse_point_file(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int dim = 0;
  std::vector<double> xs, ys;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!header_seen) {
      std::string kw;
      if (!(ls >> kw)) continue;  // blank/comment before header
      if (kw != "dim" || !(ls >> dim))
        throw SpecError(origin + ":" + std::to_string(lineno) +
                        ": expected header 'dim n'");
      if (dim != 1 && dim != 2)
        throw SpecError(origin + ":" + std::to_string(lineno) +
                        ": unsupported dimension " + std::to_string(dim));
      std::string extra;
      if (ls >> extra)
        throw SpecError(origin + ":" + std::to_string(lineno) +
                        ": trailing content after header");
      header_seen = true;
      continue;
    }
    double x;
    if (!(ls >> x)) {
      std::string junk;
      std::istringstream probe(line);
      if (probe >> junk)
        throw SpecError(origin + ":" + std::to_string(lineno) +
                        ": non-numeric coordinate '" + junk + "'");
      continue;  // blank after comment strip
    }
    xs.push_back(x);
    if (dim == 2) {
      double y;
      if (!(ls >> y))
        throw SpecError(origin + ":" + std::to_string(lineno) +
                        ": expected 2 coordinates");
      ys.push_back(y);
    }
    std::string extra;
    if (ls >> extra)
      throw SpecError(origin + ":" + std::to_string(lineno) +
                      ": too many coordinates");
  }
  if (!header_seen) throw SpecError(origin + ": missing 'dim n' header");
  return PointSet::build(dim, std::move(xs), std::move(ys));
}

PointSet read_point_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SpecError("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_point_file(buf.str(), path);
}

}  // namespace delone
