#include "narayana/svg.hpp"

#include "narayana/involution.hpp"
#include "narayana/polyomino.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace narayana {

namespace {

constexpr int kUnit = 18;
constexpr int kMargin = 30;
constexpr int kCaptionSpace = 24;

struct Panel {
  int width = 0;   // grid units
  int height = 0;  // grid units
};

void polyline(std::ostringstream& out, const std::vector<GridPoint>& points, int origin_x,
              int origin_y, const char* stroke) {
  out << "  <polyline fill=\"none\" stroke=\"" << stroke
      << "\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k) out << ' ';
    out << origin_x + points[k].x * kUnit << ',' << origin_y - points[k].y * kUnit;
  }
  out << "\"/>\n";
}

void dots(std::ostringstream& out, const std::vector<GridPoint>& points, int origin_x,
          int origin_y, int radius, const char* fill) {
  for (const GridPoint& p : points) {
    out << "  <circle cx=\"" << origin_x + p.x * kUnit << "\" cy=\""
        << origin_y - p.y * kUnit << "\" r=\"" << radius << "\" fill=\"" << fill << "\"/>\n";
  }
}

std::vector<GridPoint> dyck_vertices(const DyckPath& p) {
  std::vector<GridPoint> points;
  points.reserve(p.steps().size() + 1);
  GridPoint at{0, 0};
  points.push_back(at);
  for (Step s : p.steps()) {
    ++at.x;
    at.y += s == Step::Up ? 1 : -1;
    points.push_back(at);
  }
  return points;
}

int max_height(const std::vector<GridPoint>& points) {
  long long h = 0;
  for (const GridPoint& p : points) h = std::max(h, p.y);
  return static_cast<int>(h);
}

void caption(std::ostringstream& out, int x, int y, const std::string& text) {
  out << "  <text x=\"" << x << "\" y=\"" << y
      << "\" font-family=\"monospace\" font-size=\"13\">" << text << "</text>\n";
}

}  // namespace

std::string figure_svg(const DyckPath& p) {
  if (p.empty()) {
    throw std::domain_error("figure: the empty path has no figure");
  }
  const DyckPath image = phi(p);
  const ParallelogramPolyomino poly = to_polyomino(image);
  const LatticePathPair pair = to_lattice_pair(poly);

  const auto left_points = dyck_vertices(p);
  const auto mid_points = dyck_vertices(image);
  const Panel left{2 * p.semilength(), max_height(left_points)};
  const Panel mid{2 * image.semilength(), max_height(mid_points)};
  const Panel right{poly.width(), poly.height()};

  const int top = kMargin + kUnit * std::max({left.height, mid.height, right.height});
  const int left_x = kMargin;
  const int mid_x = left_x + kUnit * left.width + 3 * kMargin;
  const int right_x = mid_x + kUnit * mid.width + 3 * kMargin;
  const int total_width = right_x + kUnit * right.width + 2 * kMargin;
  const int total_height = top + kMargin + 2 * kCaptionSpace;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_width
      << "\" height=\"" << total_height << "\" viewBox=\"0 0 " << total_width << ' '
      << total_height << "\">\n";

  // Panel 1: the input path over its ground line.
  out << "  <line x1=\"" << left_x << "\" y1=\"" << top << "\" x2=\""
      << left_x + kUnit * left.width << "\" y2=\"" << top
      << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  polyline(out, left_points, left_x, top, "black");
  dots(out, left_points, left_x, top, 3, "black");
  caption(out, left_x, top + kCaptionSpace, "P = " + render_path(p));

  // Panel 2: the image under phi.
  out << "  <line x1=\"" << mid_x << "\" y1=\"" << top << "\" x2=\""
      << mid_x + kUnit * mid.width << "\" y2=\"" << top
      << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  polyline(out, mid_points, mid_x, top, "black");
  dots(out, mid_points, mid_x, top, 3, "black");
  caption(out, mid_x, top + kCaptionSpace, "phi(P) = " + render_path(image));

  // Panel 3: the polyomino of phi(P) with the lattice-pair endpoints.
  polyline(out, boundary_vertices(GridPoint{0, 0}, poly.upper()), right_x, top, "black");
  polyline(out, boundary_vertices(GridPoint{0, 0}, poly.lower()), right_x, top, "black");
  dots(out, boundary_vertices(GridPoint{0, 0}, poly.upper()), right_x, top, 3, "black");
  dots(out, boundary_vertices(GridPoint{0, 0}, poly.lower()), right_x, top, 3, "black");
  caption(out, right_x, top + kCaptionSpace,
          "polyomino " + render_boundary(poly.upper()) + " / " + render_boundary(poly.lower()));

  if (!pair.degenerate) {
    const std::vector<std::pair<const char*, GridPoint>> marks = {
        {"A1", pair.a1}, {"A2", pair.a2}, {"B1", pair.b1}, {"B2", pair.b2}};
    for (const auto& [name, point] : marks) {
      const long long cx = right_x + point.x * kUnit;
      const long long cy = top - point.y * kUnit;
      out << "  <circle cx=\"" << cx << "\" cy=\"" << cy
          << "\" r=\"5\" fill=\"crimson\"/>\n";
      out << "  <text x=\"" << cx + 7 << "\" y=\"" << cy - 5
          << "\" font-family=\"monospace\" font-size=\"12\">" << name << "=(" << point.x
          << ',' << point.y << ")</text>\n";
    }
  } else {
    caption(out, right_x, top + 2 * kCaptionSpace,
            "degenerate cell (j = n): no lattice pair");
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace narayana
