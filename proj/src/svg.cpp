#include "triweights/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace triweights {

namespace {

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                          "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid the "-0.00" artifact so output stays stable across platforms.
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace

std::string cells_svg(const DofComplex& c, double scale) {
  const Triangle& t = c.tri;
  double xs[3], ys[3];
  for (int i = 0; i < 3; ++i) {
    xs[i] = to_double(t.v[i].x);
    ys[i] = to_double(t.v[i].y);
  }
  double xmin = std::min({xs[0], xs[1], xs[2]}), xmax = std::max({xs[0], xs[1], xs[2]});
  double ymin = std::min({ys[0], ys[1], ys[2]}), ymax = std::max({ys[0], ys[1], ys[2]});
  double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
  xmin -= margin;
  xmax += margin;
  ymin -= margin;
  ymax += margin;
  auto px = [&](double x) { return (x - xmin) * scale; };
  auto py = [&](double y) { return (ymax - y) * scale; };  // SVG y grows downward

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num((xmax - xmin) * scale)
      << " " << num((ymax - ymin) * scale) << "\">\n";

  auto chart_to_xy = [&](const UV& p, double& x, double& y) {
    double u = to_double(p.u), v = to_double(p.v);
    x = xs[0] + u * (xs[1] - xs[0]) + v * (xs[2] - xs[0]);
    y = ys[0] + u * (ys[1] - ys[0]) + v * (ys[2] - ys[0]);
  };

  for (size_t i = 0; i < c.cells.size(); ++i) {
    out << "<polygon points=\"";
    for (size_t j = 0; j < c.cells[i].polygon.size(); ++j) {
      double x, y;
      chart_to_xy(c.cells[i].polygon[j], x, y);
      if (j) out << " ";
      out << num(px(x)) << "," << num(py(y));
    }
    out << "\" fill=\"" << kPalette[i % (sizeof kPalette / sizeof *kPalette)]
        << "\" stroke=\"#333333\" stroke-width=\"" << num(scale / 120.0) << "\"/>\n";
  }

  out << "<polygon points=\"";
  for (int i = 0; i < 3; ++i) {
    if (i) out << " ";
    out << num(px(xs[i])) << "," << num(py(ys[i]));
  }
  out << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << num(scale / 60.0) << "\"/>\n";

  for (const auto& cell : c.cells) {
    Vec2 p = t.point(cell.xi);
    out << "<circle cx=\"" << num(px(to_double(p.x))) << "\" cy=\"" << num(py(to_double(p.y)))
        << "\" r=\"" << num(scale / 30.0) << "\" fill=\"#888888\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace triweights
