#include "lvl/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lvl {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}

ChainBreakError::ChainBreakError(int edge_index, double gap)
    : std::runtime_error("chain break after edge " + std::to_string(edge_index) + " (gap " + std::to_string(gap) + ")"),
      edge_index(edge_index),
      gap(gap) {}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s(buf);
  // "-0.000000" would print a sign on a value that rounds to zero.
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string exact(double v) {
  if (v == 0) v = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string num(double v) {
  if (v == 0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double to_double(const std::string& tok, int line) {
  double v = 0.0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  if (!tok.empty() && *b == '+') ++b;
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc{} || res.ptr != e || !std::isfinite(v)) throw ParseError(line, "bad number '" + tok + "'");
  return v;
}

std::string strip_comment(const std::string& s) {
  const auto k = s.find('#');
  return k == std::string::npos ? s : s.substr(0, k);
}

}  // namespace

JordanCurve parse_curve(std::istream& in) {
  std::string raw;
  int line = 0;
  bool header = false;
  bool ended = false;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    const auto tok = split_ws(strip_comment(raw));
    if (tok.empty()) continue;
    if (ended) throw ParseError(line, "content after END");
    if (!header) {
      if (tok.size() != 2 || tok[0] != "CURVE" || tok[1] != "v1") throw ParseError(line, "expected 'CURVE v1'");
      header = true;
      continue;
    }
    const std::string& kind = tok[0];
    if (kind == "ORIENT") {
      if (tok.size() != 2 || tok[1] != "ccw") throw ParseError(line, "only 'ORIENT ccw' is supported");
    } else if (kind == "S") {
      if (tok.size() != 5) throw ParseError(line, "segment needs 4 numbers");
      edges.emplace_back(Segment{{to_double(tok[1], line), to_double(tok[2], line)},
                                 {to_double(tok[3], line), to_double(tok[4], line)}});
    } else if (kind == "A") {
      if (tok.size() != 7) throw ParseError(line, "arc needs 5 numbers and a direction");
      const double r = to_double(tok[3], line);
      if (!(r > 0)) throw ParseError(line, "arc radius must be positive");
      const double a0 = to_double(tok[4], line);
      const double a1 = to_double(tok[5], line);
      double sweep = a1 - a0;
      if (tok[6] == "+") {
        if (sweep <= 0) sweep += kTwoPi;
      } else if (tok[6] == "-") {
        if (sweep >= 0) sweep -= kTwoPi;
      } else {
        throw ParseError(line, "arc direction must be + or -");
      }
      if (std::abs(sweep) > kTwoPi + 1e-12) throw ParseError(line, "arc sweep exceeds a full turn");
      edges.emplace_back(CircularArc{{to_double(tok[1], line), to_double(tok[2], line)}, r, a0, sweep});
    } else if (kind == "END") {
      if (tok.size() != 1) throw ParseError(line, "unexpected tokens after END");
      ended = true;
    } else {
      throw ParseError(line, "unknown record '" + kind + "'");
    }
  }
  if (!header) throw ParseError(line, "missing 'CURVE v1' header");
  if (!ended) throw ParseError(line, "missing END");
  if (edges.empty()) throw ParseError(line, "no edges");

  Box box = edge_box(edges[0]);
  for (const auto& e : edges) {
    const Box b = edge_box(e);
    box.expand({b.xmin, b.ymin});
    box.expand({b.xmax, b.ymax});
  }
  const double tol = 8 * Tolerance{}.effective(std::hypot(box.xmax - box.xmin, box.ymax - box.ymin));
  for (size_t i = 0; i < edges.size(); ++i) {
    const double gap = dist(edge_end(edges[i]), edge_start(edges[(i + 1) % edges.size()]));
    if (gap > tol) throw ChainBreakError(static_cast<int>(i), gap);
  }
  JordanCurve curve(std::move(edges));
  const auto v = validate(curve, true);
  if (!v.ok()) throw std::runtime_error("invalid curve: " + v.message);
  return curve;
}

JordanCurve read_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_curve(in);
}

void write_edges(std::ostream& out, const std::vector<Edge>& edges) {
  for (const auto& e : edges) {
    if (const auto* s = std::get_if<Segment>(&e)) {
      out << "S " << exact(s->a.x) << ' ' << exact(s->a.y) << ' ' << exact(s->b.x) << ' ' << exact(s->b.y) << '\n';
    } else {
      const auto& a = std::get<CircularArc>(e);
      out << "A " << exact(a.center.x) << ' ' << exact(a.center.y) << ' ' << exact(a.radius) << ' '
          << exact(a.start_angle) << ' ' << exact(a.end_angle()) << ' ' << (a.sweep >= 0 ? '+' : '-') << '\n';
    }
  }
}

void write_curve(std::ostream& out, const JordanCurve& curve) {
  out << "CURVE v1\nORIENT ccw\n";
  write_edges(out, curve.edges());
  out << "END\n";
}

void write_curve(const JordanCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_curve(out, curve);
}

void write_grid(std::ostream& out, const ScalarGrid& grid) {
  out << "GRID v1 " << exact(grid.origin.x) << ' ' << exact(grid.origin.y) << ' ' << exact(grid.h) << ' ' << grid.nx
      << ' ' << grid.ny << '\n';
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      if (i) out << ' ';
      out << exact(grid.values[static_cast<size_t>(j) * static_cast<size_t>(grid.nx) + static_cast<size_t>(i)]);
    }
    out << '\n';
  }
}

ScalarGrid parse_grid(std::istream& in) {
  std::string raw;
  int line = 0;
  ScalarGrid g;
  bool header = false;
  size_t expected = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tok = split_ws(strip_comment(raw));
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 7 || tok[0] != "GRID" || tok[1] != "v1") throw ParseError(line, "expected 'GRID v1 ox oy h nx ny'");
      g.origin = {to_double(tok[2], line), to_double(tok[3], line)};
      g.h = to_double(tok[4], line);
      const double nx = to_double(tok[5], line);
      const double ny = to_double(tok[6], line);
      if (nx < 1 || ny < 1 || nx != std::floor(nx) || ny != std::floor(ny)) throw ParseError(line, "bad grid size");
      g.nx = static_cast<int>(nx);
      g.ny = static_cast<int>(ny);
      expected = static_cast<size_t>(g.nx) * static_cast<size_t>(g.ny);
      header = true;
      continue;
    }
    if (static_cast<int>(tok.size()) != g.nx) throw ParseError(line, "row has wrong number of values");
    if (g.values.size() >= expected) throw ParseError(line, "too many rows");
    for (const auto& t : tok) g.values.push_back(to_double(t, line));
  }
  if (!header) throw ParseError(line, "missing GRID header");
  if (g.values.size() != expected) throw ParseError(line, "too few rows");
  return g;
}

void write_level_set(std::ostream& out, const LevelSetResult& level) {
  out << "LEVELSET v1 eps=" << exact(level.epsilon) << " class=" << to_string(level.classification)
      << " components=" << level.components << " chains=" << level.chains.size() << '\n';
  for (const auto& b : level.branch_points) out << "BRANCH " << exact(b.x) << ' ' << exact(b.y) << '\n';
  for (const auto& p : level.isolated_points) out << "ISOLATED " << exact(p.x) << ' ' << exact(p.y) << '\n';
  for (const auto& ch : level.chains) {
    out << "CHAIN " << (ch.closed ? "closed" : "open") << '\n';
    write_edges(out, ch.edges);
    out << "END\n";
  }
}

void write_polylines(std::ostream& out, double eps, const std::vector<Polyline>& lines) {
  out << "POLYLINES v1 eps=" << exact(eps) << " count=" << lines.size() << '\n';
  for (const auto& pl : lines) {
    out << "POLYLINE " << (pl.closed ? "closed" : "open") << ' ' << pl.points.size() << '\n';
    for (const auto& p : pl.points) out << exact(p.x) << ' ' << exact(p.y) << '\n';
  }
}

std::string classify_line(const LevelSetResult& level) {
  switch (level.classification) {
    case LevelClass::empty: return "EMPTY";
    case LevelClass::jordan_curve: return "JORDAN";
    case LevelClass::multiple_components: return "COMPONENTS=" + std::to_string(level.components);
    case LevelClass::non_manifold: {
      std::string s = "NONMANIFOLD(";
      for (size_t k = 0; k < level.branch_points.size(); ++k) {
        if (k) s += ',';
        s += fixed(level.branch_points[k].x) + ',' + fixed(level.branch_points[k].y);
      }
      return s + ')';
    }
  }
  return "UNKNOWN";
}

std::string report_line(const JordanCurve& curve, const ConstantReport& r) {
  std::ostringstream os;
  const Point2 x = curve.point(r.x);
  const Point2 y = curve.point(r.y);
  os << "kind=" << to_string(r.kind) << " value=" << num(r.value) << " x=" << num(x.x) << ',' << num(x.y)
     << " y=" << num(y.x) << ',' << num(y.y) << " x_edge=" << r.x.edge << " x_t=" << num(r.x.t)
     << " y_edge=" << r.y.edge << " y_t=" << num(r.y.t);
  if (r.kind == ConstantKind::delta_linear) os << " radius=" << num(r.radius);
  if (r.r0 > 0) os << " r0=" << num(r.r0);
  os << " samples=" << r.samples_used << " refined=" << (r.refined ? 1 : 0) << " net_spacing=" << num(r.net_spacing);
  if (!r.sequence.empty()) {
    os << " scales=";
    for (size_t k = 0; k < r.scales.size(); ++k) os << (k ? "," : "") << num(r.scales[k]);
    os << " sequence=";
    for (size_t k = 0; k < r.sequence.size(); ++k) os << (k ? "," : "") << num(r.sequence[k]);
  }
  return os.str();
}

void write_report(std::ostream& out, const VerificationReport& r) {
  out << "suite=" << r.suite << " curve=" << r.curve_id << " verdict=" << (r.pass ? "pass" : "fail") << '\n';
  for (const auto& o : r.outcomes) {
    out << "eps=" << num(o.epsilon) << " class=" << to_string(o.classification) << " components=" << o.components
        << " ok=" << (o.ok ? 1 : 0);
    for (const auto& [k, v] : o.measures) out << ' ' << k << '=' << num(v);
    for (const auto& b : o.branch_points) out << " branch=" << fixed(b.x) << ',' << fixed(b.y);
    if (!o.note.empty()) out << " note=\"" << o.note << '"';
    out << '\n';
  }
  if (!r.summary.empty()) {
    out << "summary";
    for (const auto& [k, v] : r.summary) out << ' ' << k << '=' << num(v);
    out << '\n';
  }
  if (r.witness) {
    out << "witness eps=" << num(r.witness->epsilon) << " value=" << num(r.witness->value) << " what=\""
        << r.witness->what << '"';
    for (const auto& p : r.witness->points) out << " point=" << fixed(p.x) << ',' << fixed(p.y);
    out << '\n';
  }
}

// ---- SVG -------------------------------------------------------------------

namespace {

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string path_data(const std::vector<Edge>& edges, bool closed) {
  std::ostringstream os;
  os.precision(10);
  bool first = true;
  for (const auto& e : edges) {
    const Point2 a = edge_start(e);
    if (first) {
      os << 'M' << a.x << ' ' << a.y;
      first = false;
    }
    if (const auto* s = std::get_if<Segment>(&e)) {
      os << " L" << s->b.x << ' ' << s->b.y;
      continue;
    }
    const auto& arc = std::get<CircularArc>(e);
    // SVG cannot draw a full turn in one command; halves are always safe.
    const int parts = std::abs(arc.sweep) > kPi ? 2 : 1;
    for (int k = 1; k <= parts; ++k) {
      const Point2 q = arc.at(static_cast<double>(k) / parts);
      os << " A" << arc.radius << ' ' << arc.radius << " 0 0 " << (arc.sweep > 0 ? 1 : 0) << ' ' << q.x << ' ' << q.y;
    }
  }
  if (closed) os << " Z";
  return os.str();
}

}  // namespace

void render_svg(std::ostream& out, const JordanCurve& curve, const std::vector<RenderLayer>& layers) {
  Box box = curve.bbox();
  for (const auto& l : layers) {
    for (const auto& ch : l.level.chains) {
      for (const auto& e : ch.edges) {
        const Box b = edge_box(e);
        box.expand({b.xmin, b.ymin});
        box.expand({b.xmax, b.ymax});
      }
    }
  }
  const double span = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const double pad = 0.05 * span;
  const double w = box.xmax - box.xmin + 2 * pad;
  const double h = box.ymax - box.ymin + 2 * pad;
  const double stroke = span / 500;
  out.precision(10);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" << static_cast<int>(800 * h / w)
      << "\" viewBox=\"" << box.xmin - pad << ' ' << -(box.ymax + pad) << ' ' << w << ' ' << h << "\">\n";
  out << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << stroke << "\">\n";
  out << "<path class=\"curve\" stroke=\"#000000\" d=\"" << path_data(curve.edges(), true) << "\"/>\n";
  for (size_t k = 0; k < layers.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    const auto& lv = layers[k].level;
    for (const auto& ch : lv.chains) {
      out << "<path class=\"level\" data-eps=\"" << exact(layers[k].epsilon) << "\" stroke=\"" << color << "\" d=\""
          << path_data(ch.edges, ch.closed) << "\"/>\n";
    }
    for (const auto& p : lv.isolated_points) {
      out << "<circle class=\"isolated\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << 2 * stroke << "\" fill=\""
          << color << "\"/>\n";
    }
    for (const auto& b : lv.branch_points) {
      out << "<circle class=\"branch\" cx=\"" << b.x << "\" cy=\"" << b.y << "\" r=\"" << 4 * stroke
          << "\" stroke=\"#000000\" fill=\"#ffff00\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
}

}  // namespace lvl
