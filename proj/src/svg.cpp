#include "mwa/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mwa/minball.hpp"
#include "mwa/rotation.hpp"

namespace mwa {
namespace {

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace

std::vector<Vec> annulus_shell(const ConvexPolytope& c, const AnnulusSolution& sol,
                               double radius) {
  Matrix op = rotation_from_angles(sol.rotation);
  std::vector<Vec> out;
  for (const Vec& v : c.vertices()) {
    Vec rv = op.apply(v);
    out.push_back(add(sol.center, scaled(rv, radius)));
  }
  return out;
}

std::string render_svg(const ConvexPolytope& c, const PointCloud& s,
                       const AnnulusSolution& sol) {
  if (c.dim() != 2 || s.dim() != 2) throw NotPlanar("SVG rendering is 2D only");

  std::vector<Vec> outer = annulus_shell(c, sol, sol.outer_radius);
  std::vector<Vec> inner = annulus_shell(c, sol, sol.inner_radius);
  Placement mb = minball(c, s, 0);
  AnnulusSolution mb_sol;
  mb_sol.center = mb.center;
  mb_sol.rotation = Rotation::identity(2);
  std::vector<Vec> ball = annulus_shell(c, mb_sol, mb.radius);

  double lox = sol.center[0], hix = lox, loy = sol.center[1], hiy = loy;
  auto grow = [&](const Vec& p) {
    lox = std::min(lox, p[0]);
    hix = std::max(hix, p[0]);
    loy = std::min(loy, p[1]);
    hiy = std::max(hiy, p[1]);
  };
  for (const auto& v : outer) grow(v);
  for (const auto& v : ball) grow(v);
  for (std::size_t i = 0; i < s.size(); ++i) grow(s.point_vec(i));

  const double view = 800.0, pad = 24.0;
  double span = std::max({hix - lox, hiy - loy, 1e-12});
  double k = (view - 2.0 * pad) / span;
  auto X = [&](double x) { return pad + (x - lox) * k; };
  auto Y = [&](double y) { return view - pad - (y - loy) * k; };
  auto polygon = [&](const std::vector<Vec>& pts, const std::string& style) {
    std::ostringstream o;
    o << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) o << ' ';
      o << fmt(X(pts[i][0])) << ',' << fmt(Y(pts[i][1]));
    }
    o << "\" " << style << "/>\n";
    return o.str();
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  svg << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  svg << polygon(outer, "fill=\"#dbe7ff\" stroke=\"#3b6fd4\" stroke-width=\"1.5\"");
  svg << polygon(inner, "fill=\"#ffffff\" stroke=\"#3b6fd4\" stroke-width=\"1.5\"");
  svg << polygon(ball,
                 "fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
  svg << "<g fill=\"#c43333\">\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double* p = s.point(i);
    svg << "<circle cx=\"" << fmt(X(p[0])) << "\" cy=\"" << fmt(Y(p[1])) << "\" r=\"2\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void write_svg(const std::string& path, const std::string& svg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << svg;
}

}  // namespace mwa
