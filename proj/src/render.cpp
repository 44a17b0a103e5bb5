#include "eg/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace eg {

namespace {

struct Laid {
  double w = 0, h = 0;
  std::vector<GeometryNode> nodes;  // relative to the center of the box
};

void shift(GeometryNode& n, double dx, double dy) {
  n.cx += dx;
  n.cy += dy;
  for (auto& c : n.children) shift(c, dx, dy);
}

GeometryNode ellipse(GeometryNode::Role role, double rx, double ry) {
  GeometryNode n;
  n.shape = GeometryNode::Shape::Ellipse;
  n.role = role;
  n.rx = rx;
  n.ry = ry;
  return n;
}

class Layout {
 public:
  explicit Layout(const LayoutMetrics& m) : m_(m) {}

  Laid area(const Graph& g) const {
    Laid out;
    if (g.empty()) {
      out.w = out.h = m_.empty_area;
      return out;
    }
    std::vector<Laid> parts;
    for (const auto& it : g.items) parts.push_back(item(it));
    for (const auto& p : parts) out.h = std::max(out.h, p.h);
    for (const auto& p : parts) out.w += p.w;
    out.w += m_.pad * static_cast<double>(parts.size() - 1);
    double x = -out.w / 2;
    for (auto& p : parts) {
      for (auto& n : p.nodes) {
        shift(n, x + p.w / 2, 0);
        out.nodes.push_back(std::move(n));
      }
      x += p.w + m_.pad;
    }
    return out;
  }

 private:
  Laid item(const Item& it) const {
    if (it.is_atom()) {
      GeometryNode t;
      t.shape = GeometryNode::Shape::Text;
      t.role = GeometryNode::Role::Atom;
      t.text = it.name;
      return {m_.char_width * static_cast<double>(it.name.size()),
              m_.line_height,
              {std::move(t)}};
    }
    return it.is_cut() ? cut(it) : scroll(it);
  }

  // The ellipse through the corners of the padded box.
  Laid cut(const Item& it) const {
    Laid inner = area(it.outer);
    GeometryNode e = ellipse(GeometryNode::Role::Cut,
                             std::numbers::sqrt2 * (inner.w / 2 + m_.pad),
                             std::numbers::sqrt2 * (inner.h / 2 + m_.pad));
    e.children = std::move(inner.nodes);
    return {2 * e.rx, 2 * e.ry, {std::move(e)}};
  }

  Laid scroll(const Item& it) const {
    const double pad = m_.pad;
    Laid front = area(it.outer);
    std::vector<Laid> loops;
    double r = 0;
    for (const auto& l : it.loops) {
      loops.push_back(area(l));
      r = std::max(r, std::hypot(loops.back().w / 2 + pad, loops.back().h / 2 + pad));
    }
    const double n = static_cast<double>(loops.size());
    const double reach = std::hypot(front.w + 1.5 * pad, front.h / 2 + pad);

    double radius = 2 * r + pad, spacing = 0;
    for (;; radius *= 1.05) {
      const double d = radius - r;
      const double s = (r + pad / 2) / d;
      if (s > 1) continue;
      spacing = 2 * std::asin(s);
      const double widest = (n - 1) / 2 * spacing;
      if (widest <= std::numbers::pi / 2 && d * std::cos(widest) - r >= pad / 2 &&
          reach <= radius)
        break;
    }

    GeometryNode outer = ellipse(GeometryNode::Role::Scroll, radius, radius);
    for (auto& nd : front.nodes) {
      shift(nd, -pad / 2 - front.w / 2, 0);
      outer.children.push_back(std::move(nd));
    }
    for (std::size_t k = 0; k < loops.size(); ++k) {
      const double theta = (static_cast<double>(k) - (n - 1) / 2) * spacing;
      GeometryNode loop = ellipse(GeometryNode::Role::Loop, r, r);
      loop.children = std::move(loops[k].nodes);
      shift(loop, (radius - r) * std::cos(theta), (radius - r) * std::sin(theta));
      outer.children.push_back(std::move(loop));
    }
    return {2 * radius, 2 * radius, {std::move(outer)}};
  }

  LayoutMetrics m_;
};

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void emit(const GeometryNode& n, int indent, std::string& out) {
  const std::string pre(static_cast<std::size_t>(indent) * 2, ' ');
  if (n.shape == GeometryNode::Shape::Text) {
    out += pre + "<text x=\"" + num(n.cx) + "\" y=\"" + num(n.cy) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\" "
           "fill=\"black\" stroke=\"none\">" +
           escape(n.text) + "</text>\n";
    return;
  }
  const std::string role = to_string(n.role);
  out += pre + "<g class=\"" + role + "\">\n";
  out += pre + "  <ellipse class=\"" + role + "\" cx=\"" + num(n.cx) +
         "\" cy=\"" + num(n.cy) + "\" rx=\"" + num(n.rx) + "\" ry=\"" +
         num(n.ry) + "\"/>\n";
  for (const auto& c : n.children) emit(c, indent + 1, out);
  out += pre + "</g>\n";
}

}  // namespace

std::string to_string(GeometryNode::Role r) {
  switch (r) {
    case GeometryNode::Role::Sheet: return "sheet";
    case GeometryNode::Role::Cut: return "cut";
    case GeometryNode::Role::Scroll: return "scroll";
    case GeometryNode::Role::Loop: return "loop";
    case GeometryNode::Role::Atom: return "atom";
  }
  return "?";
}

GeometryNode layout(const Graph& g, const LayoutMetrics& m) {
  Laid sheet = Layout(m).area(g);
  GeometryNode root;
  root.width = sheet.w + 2 * m.margin;
  root.height = sheet.h + 2 * m.margin;
  root.children = std::move(sheet.nodes);
  for (auto& c : root.children) shift(c, root.width / 2, root.height / 2);
  return root;
}

std::string emit_svg(const GeometryNode& root) {
  const std::string w = num(root.width), h = num(root.height);
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
      w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out +=
      "  <g fill=\"none\" stroke=\"black\" stroke-width=\"1\" "
      "font-family=\"monospace\" font-size=\"14\">\n";
  for (const auto& c : root.children) emit(c, 2, out);
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace eg
