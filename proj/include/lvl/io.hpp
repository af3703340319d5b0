#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lvl/constants.hpp"
#include "lvl/distance_field.hpp"
#include "lvl/level_set.hpp"
#include "lvl/verify.hpp"

namespace lvl {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line;
};

class ChainBreakError : public std::runtime_error {
 public:
  ChainBreakError(int edge_index, double gap);
  int edge_index;  // the gap follows this edge (0-based)
  double gap;
};

// ---- Curve files ("CURVE v1") -------------------------------------------

JordanCurve parse_curve(std::istream& in);
JordanCurve read_curve(const std::string& path);
void write_curve(std::ostream& out, const JordanCurve& curve);
void write_curve(const JordanCurve& curve, const std::string& path);
void write_edges(std::ostream& out, const std::vector<Edge>& edges);

// ---- Grid files ("GRID v1 ox oy h nx ny") --------------------------------

void write_grid(std::ostream& out, const ScalarGrid& grid);
ScalarGrid parse_grid(std::istream& in);

// ---- Level sets ----------------------------------------------------------

void write_level_set(std::ostream& out, const LevelSetResult& level);
void write_polylines(std::ostream& out, double eps, const std::vector<Polyline>& lines);

/// One-line classification: JORDAN | COMPONENTS=k | NONMANIFOLD(bx,by,...) | EMPTY
std::string classify_line(const LevelSetResult& level);

// ---- Reports --------------------------------------------------------------

/// Fixed-point with `digits` decimals; negative zero prints as zero.
std::string fixed(double v, int digits = 6);
/// Shortest text that reads back to the same double.
std::string exact(double v);

std::string report_line(const JordanCurve& curve, const ConstantReport& r);
void write_report(std::ostream& out, const VerificationReport& r);

// ---- SVG -----------------------------------------------------------------

struct RenderLayer {
  double epsilon = 0.0;
  LevelSetResult level;
};

void render_svg(std::ostream& out, const JordanCurve& curve, const std::vector<RenderLayer>& layers);

}  // namespace lvl
