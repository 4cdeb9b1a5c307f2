#include "polysig/svg.hpp"

#include <algorithm>
#include <sstream>

#include "polysig/report.hpp"

namespace polysig {

std::string svg_polygon_document(const PolygonRealization& realization) {
  const auto& verts = realization.vertices;
  if (verts.empty()) throw DomainError("cannot render an empty polygon");

  // SVG's y axis points down; flip y so the drawing keeps the plane's
  // orientation.
  double min_x = verts[0].x, max_x = verts[0].x;
  double min_y = -verts[0].y, max_y = -verts[0].y;
  for (const Point& p : verts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, -p.y);
    max_y = std::max(max_y, -p.y);
  }
  double width = max_x - min_x;
  double height = max_y - min_y;
  const double extent = std::max({width, height, 1e-9});
  const double margin = 0.05 * extent;
  min_x -= margin;
  min_y -= margin;
  width += 2 * margin;
  height += 2 * margin;

  const double stroke = 0.01 * extent;
  const double radius = 0.02 * extent;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"480\" height=\"480\" viewBox=\"" << format_double(min_x) << " "
      << format_double(min_y) << " " << format_double(width) << " "
      << format_double(height) << "\">\n";

  out << "  <polygon points=\"";
  for (std::size_t k = 0; k < verts.size(); ++k) {
    if (k) out << " ";
    out << format_double(verts[k].x) << "," << format_double(-verts[k].y);
  }
  out << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
      << format_double(stroke) << "\"/>\n";

  for (std::size_t k = 0; k < verts.size(); ++k) {
    // Slot k holds z_{k+1}; even 1-based indices are the cone points.
    const bool cone = (k % 2 == 1);
    out << "  <circle cx=\"" << format_double(verts[k].x) << "\" cy=\""
        << format_double(-verts[k].y) << "\" r=\"" << format_double(radius)
        << "\" fill=\"" << (cone ? "black" : "white")
        << "\" stroke=\"black\" stroke-width=\"" << format_double(0.5 * stroke)
        << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polysig
