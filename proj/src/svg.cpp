#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "akm/tiling.hpp"

namespace akm {

namespace {

struct Vec2 {
  double x;
  double y;
};

class Projector {
 public:
  explicit Projector(int k) {
    for (int m = 1; m <= k; ++m) {
      double a = std::numbers::pi * (k - 2 * m + 1) / (2.0 * k);
      dirs_.push_back({std::cos(a), std::sin(a)});
    }
  }
  Vec2 operator()(const Point& p) const {
    Vec2 r{0, 0};
    for (std::size_t m = 0; m < p.size(); ++m) {
      r.x += p[m] * dirs_[m].x;
      r.y += p[m] * dirs_[m].y;
    }
    return r;
  }

 private:
  std::vector<Vec2> dirs_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

constexpr double kScale = 40.0;
constexpr double kMargin = 20.0;

}  // namespace

std::string emit_tiling_svg(const Tiling& t) {
  int k = t.k, n = t.n, N = k * n;
  Projector proj(k);
  // Outlines of the symmetrizer blocks: top edges 1..k, bottom edges k..1.
  std::vector<std::vector<Vec2>> polygons;
  Point start(k, 0);
  for (int b = 0; b < n; ++b) {
    std::vector<Vec2> poly;
    Point cur = start;
    poly.push_back(proj(cur));
    for (int m = 1; m <= k; ++m) {
      ++cur[m - 1];
      poly.push_back(proj(cur));
    }
    Point end = cur;
    cur = start;
    std::vector<Vec2> lower;
    for (int m = k; m >= 1; --m) {
      ++cur[m - 1];
      lower.push_back(proj(cur));
    }
    for (auto it = lower.rbegin() + 1; it != lower.rend(); ++it) poly.push_back(*it);
    polygons.push_back(poly);
    start = end;
  }
  std::vector<std::vector<Vec2>> rhombi;
  for (const auto& r : t.rhombi) rhombi.push_back({proj(r.left), proj(r.bottom), proj(r.right), proj(r.top)});

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  auto grow = [&](const Vec2& v) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, -v.y);
    maxy = std::max(maxy, -v.y);
  };
  for (const auto& p : polygons)
    for (const auto& v : p) grow(v);
  for (const auto& p : rhombi)
    for (const auto& v : p) grow(v);
  auto X = [&](double x) { return fmt((x - minx) * kScale + kMargin); };
  auto Y = [&](double y) { return fmt((-y - miny) * kScale + kMargin); };
  auto points = [&](const std::vector<Vec2>& poly) {
    std::string s;
    for (const auto& v : poly) {
      if (!s.empty()) s += ' ';
      s += X(v.x) + "," + Y(v.y);
    }
    return s;
  };

  std::ostringstream os;
  double w = (maxx - minx) * kScale + 2 * kMargin, h = (maxy - miny) * kScale + 2 * kMargin;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
     << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& p : polygons) os << "<polygon points=\"" << points(p) << "\"/>\n";
  os << "</g>\n<g fill=\"#f3e6c4\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& p : rhombi) os << "<polygon points=\"" << points(p) << "\"/>\n";
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  for (std::size_t j = 0; j < rhombi.size(); ++j) {
    double cx = 0, cy = 0;
    for (const auto& v : rhombi[j]) {
      cx += v.x / 4;
      cy += v.y / 4;
    }
    os << "<text x=\"" << X(cx) << "\" y=\"" << Y(cy) << "\">" << t.rhombi[j].label << "</text>\n";
  }
  os << "</g>\n<g stroke=\"gray\" stroke-dasharray=\"4,3\">\n";
  Point seam_end(k, 0);
  for (int j = 0; j < N; ++j) ++seam_end[t.base[j] - 1];
  for (const Vec2& v : {proj(Point(k, 0)), proj(seam_end)})
    os << "<line x1=\"" << X(v.x) << "\" y1=\"" << fmt(0) << "\" x2=\"" << X(v.x) << "\" y2=\"" << fmt(h) << "\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace akm
