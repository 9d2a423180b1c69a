#include "guarding/svg.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace guarding {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  // Avoid the two spellings of zero.
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

}  // namespace

std::string render_svg(const SimplePolygon& p,
                       const std::vector<Point2>& guards,
                       const std::vector<std::vector<Point2>>& regions,
                       const std::optional<Point2>& witness) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (int i = 0; i < p.size(); ++i) {
    double x = to_double(p.vertex(i).x), y = to_double(p.vertex(i).y);
    if (i == 0 || x < xmin) xmin = x;
    if (i == 0 || x > xmax) xmax = x;
    if (i == 0 || y < ymin) ymin = y;
    if (i == 0 || y > ymax) ymax = y;
  }
  double span = std::max(xmax - xmin, ymax - ymin);
  if (span <= 0) span = 1;
  double margin = span * 0.05;
  // Flip y so the drawing matches the usual math orientation.
  auto X = [&](const Point2& q) { return fmt(to_double(q.x)); };
  auto Y = [&](const Point2& q) { return fmt(ymin + ymax - to_double(q.y)); };
  auto ring = [&](const std::vector<Point2>& pts) {
    std::string s;
    for (const Point2& q : pts) {
      if (!s.empty()) s += ' ';
      s += X(q) + ',' + Y(q);
    }
    return s;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << fmt(xmin - margin) << ' ' << fmt(ymin - margin) << ' '
      << fmt(xmax - xmin + 2 * margin) << ' ' << fmt(ymax - ymin + 2 * margin)
      << "\">\n";
  for (const auto& r : regions)
    out << "  <polygon points=\"" << ring(r)
        << "\" fill=\"#3b82c4\" fill-opacity=\"0.30\" stroke=\"none\"/>\n";
  std::vector<Point2> outline;
  outline.reserve(p.size());
  for (int i = 0; i < p.size(); ++i) outline.push_back(p.vertex(i));
  out << "  <polygon points=\"" << ring(outline)
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
      << fmt(span / 200) << "\"/>\n";
  for (const Point2& g : guards)
    out << "  <circle cx=\"" << X(g) << "\" cy=\"" << Y(g) << "\" r=\""
        << fmt(span / 80) << "\" fill=\"#c03020\"/>\n";
  if (witness) {
    double a = span / 40;
    double wx = to_double(witness->x), wy = ymin + ymax - to_double(witness->y);
    out << "  <line x1=\"" << fmt(wx - a) << "\" y1=\"" << fmt(wy - a)
        << "\" x2=\"" << fmt(wx + a) << "\" y2=\"" << fmt(wy + a)
        << "\" stroke=\"#7a1fa0\" stroke-width=\"" << fmt(span / 150)
        << "\"/>\n";
    out << "  <line x1=\"" << fmt(wx - a) << "\" y1=\"" << fmt(wy + a)
        << "\" x2=\"" << fmt(wx + a) << "\" y2=\"" << fmt(wy - a)
        << "\" stroke=\"#7a1fa0\" stroke-width=\"" << fmt(span / 150)
        << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg(const std::string& path, const SimplePolygon& p,
               const std::vector<Point2>& guards,
               const std::vector<std::vector<Point2>>& regions,
               const std::optional<Point2>& witness) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write file: " + path);
  f << render_svg(p, guards, regions, witness);
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace guarding
