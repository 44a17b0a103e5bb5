#pragma once

// Static SVG drawings of graphs. Cuts are ellipses around their contents.
// A scroll with loops is a circle whose loops are equal circles touching it
// from the inside on its right-hand side; the outer-area contents sit in the
// left half.

#include <string>
#include <vector>

#include "eg/graph.hpp"

namespace eg {

struct GeometryNode {
  enum class Shape { Sheet, Ellipse, Text };
  enum class Role { Sheet, Cut, Scroll, Loop, Atom };

  Shape shape = Shape::Sheet;
  Role role = Role::Sheet;
  // Ellipses: center and radii. Text: anchor point (centered).
  double cx = 0, cy = 0;
  double rx = 0, ry = 0;
  // Sheet only; the origin is the top left corner.
  double width = 0, height = 0;
  std::string text;
  std::vector<GeometryNode> children;
};

struct LayoutMetrics {
  double pad = 8;
  double char_width = 10;
  double line_height = 16;
  double empty_area = 16;
  double margin = 10;
};

GeometryNode layout(const Graph& g, const LayoutMetrics& m = {});
std::string emit_svg(const GeometryNode& root);

inline std::string render_svg(const Graph& g) { return emit_svg(layout(g)); }

std::string to_string(GeometryNode::Role r);

}  // namespace eg
