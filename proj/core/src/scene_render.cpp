#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "lpa/relative_view.hpp"

namespace lpa {

namespace {

constexpr double kViewHalf = 4.0;
constexpr int kPixels = 480;
// Orthographic camera for 3D scenes.
constexpr double kAzimuth = 35.0 * std::numbers::pi / 180.0;
constexpr double kElevation = 20.0 * std::numbers::pi / 180.0;
constexpr double kPlanePatchHalf = 2.5;

std::string fixed(double v) {
  if (std::fabs(v) < 5e-5) v = 0.0;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4f", v);
  return buffer;
}

std::string shortest(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), v);
  return std::string(buffer.data(), ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string color(const Primitive& p) { return p.style.empty() ? "#000000" : p.style; }

using Vec2 = std::array<double, 2>;

Vec2 project(const std::vector<double>& p) {
  if (p.size() == 2) return {p[0], p[1]};
  const double right[3] = {-std::sin(kAzimuth), std::cos(kAzimuth), 0.0};
  const double up[3] = {-std::sin(kElevation) * std::cos(kAzimuth),
                        -std::sin(kElevation) * std::sin(kAzimuth), std::cos(kElevation)};
  return {p[0] * right[0] + p[1] * right[1] + p[2] * right[2],
          p[0] * up[0] + p[1] * up[1] + p[2] * up[2]};
}

// Parameter interval of anchor + t*dir inside the cube [-4,4]^d (Liang-Barsky).
bool clip(const std::vector<double>& anchor, const std::vector<double>& dir, double& t0,
          double& t1) {
  t0 = -1e9;
  t1 = 1e9;
  for (std::size_t i = 0; i < anchor.size(); ++i) {
    if (std::fabs(dir[i]) < 1e-15) {
      if (std::fabs(anchor[i]) > kViewHalf) return false;
      continue;
    }
    double a = (-kViewHalf - anchor[i]) / dir[i];
    double b = (kViewHalf - anchor[i]) / dir[i];
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
  }
  return t0 < t1;
}

std::vector<double> along(const std::vector<double>& anchor, const std::vector<double>& dir,
                          double t) {
  std::vector<double> out(anchor);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t * dir[i];
  return out;
}

// SVG y axis points down; relative y points up.
std::string xy(const Vec2& v, const char* xname, const char* yname) {
  return std::string(xname) + "=\"" + fixed(v[0]) + "\" " + yname + "=\"" + fixed(-v[1]) + "\"";
}

void emit_label(std::ostringstream& out, const Primitive& p, const Vec2& at) {
  if (p.label.empty()) return;
  out << "  <text " << xy({at[0] + 0.08, at[1] + 0.08}, "x", "y")
      << " font-size=\"0.28\" font-family=\"sans-serif\" fill=\"" << color(p) << "\">"
      << escape(p.label) << "</text>\n";
}

void emit_arrow(std::ostringstream& out, const Primitive& p, const std::vector<double>& base) {
  if (!p.orientation) return;
  const std::vector<double> tip = along(base, *p.orientation, 0.6);
  out << "  <line " << xy(project(base), "x1", "y1") << " " << xy(project(tip), "x2", "y2")
      << " stroke=\"" << color(p) << "\" stroke-width=\"0.03\" marker-end=\"url(#arrow)\"/>\n";
}

void emit(std::ostringstream& out, const Primitive& p) {
  switch (p.kind) {
    case PrimitiveKind::kOutOfView:
      out << "  <!-- " << escape(p.label) << ": out of view -->\n";
      return;
    case PrimitiveKind::kPoint: {
      const Vec2 c = project(p.anchor);
      out << "  <circle " << xy(c, "cx", "cy") << " r=\"0.07\" fill=\"" << color(p) << "\"/>\n";
      emit_label(out, p, c);
      return;
    }
    case PrimitiveKind::kCircle:
    case PrimitiveKind::kSphere: {
      const Vec2 c = project(p.anchor);
      out << "  <circle " << xy(c, "cx", "cy") << " r=\"" << fixed(p.radius)
          << "\" fill=\"none\" stroke=\"" << color(p) << "\" stroke-width=\"0.04\"/>\n";
      emit_label(out, p, {c[0] + p.radius * 0.7071, c[1] + p.radius * 0.7071});
      return;
    }
    case PrimitiveKind::kLine: {
      double t0 = 0.0, t1 = 0.0;
      if (!clip(p.anchor, p.directions[0], t0, t1)) {
        out << "  <!-- " << escape(p.label) << ": outside viewport -->\n";
        return;
      }
      const Vec2 a = project(along(p.anchor, p.directions[0], t0));
      const Vec2 b = project(along(p.anchor, p.directions[0], t1));
      out << "  <line " << xy(a, "x1", "y1") << " " << xy(b, "x2", "y2") << " stroke=\""
          << color(p) << "\" stroke-width=\"0.04\"/>\n";
      emit_arrow(out, p, p.anchor);
      emit_label(out, p, project(along(p.anchor, p.directions[0], 0.5 * (t0 + t1) + 1.0)));
      return;
    }
    case PrimitiveKind::kPlane: {
      const auto& u = p.directions[0];
      const auto& v = p.directions[1];
      const double corners[4][2] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
      out << "  <polygon points=\"";
      for (int i = 0; i < 4; ++i) {
        std::vector<double> q = along(along(p.anchor, u, corners[i][0] * kPlanePatchHalf), v,
                                      corners[i][1] * kPlanePatchHalf);
        const Vec2 c = project(q);
        out << (i ? " " : "") << fixed(c[0]) << "," << fixed(-c[1]);
      }
      out << "\" fill=\"" << color(p) << "\" fill-opacity=\"0.25\" stroke=\"" << color(p)
          << "\" stroke-width=\"0.03\"/>\n";
      emit_arrow(out, p, p.anchor);
      emit_label(out, p, project(along(along(p.anchor, u, kPlanePatchHalf), v, kPlanePatchHalf)));
      return;
    }
  }
}

}  // namespace

std::string scene_to_svg(const RelativeViewScene& scene) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kPixels
      << "\" height=\"" << kPixels << "\" viewBox=\"" << fixed(-kViewHalf) << " "
      << fixed(-kViewHalf) << " " << fixed(2 * kViewHalf) << " " << fixed(2 * kViewHalf)
      << "\">\n"
      << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
         "markerWidth=\"4\" markerHeight=\"4\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/>"
         "</marker></defs>\n"
      << "  <rect x=\"" << fixed(-kViewHalf) << "\" y=\"" << fixed(-kViewHalf) << "\" width=\""
      << fixed(2 * kViewHalf) << "\" height=\"" << fixed(2 * kViewHalf)
      << "\" fill=\"#ffffff\"/>\n"
      << "  <!-- relative view, " << scene.dimension << "D, ct = " << fixed(scene.slice_time)
      << " -->\n";
  for (const auto& p : scene.primitives) emit(out, p);
  out << "</svg>\n";
  return out.str();
}

std::string scene_to_csv(const RelativeViewScene& scene) {
  std::ostringstream out;
  out << "kind,label,coords\n";
  for (const auto& p : scene.primitives) {
    out << to_string(p.kind) << "," << p.label;
    for (double c : p.coordinates()) out << "," << shortest(c);
    out << "\n";
  }
  return out.str();
}

}  // namespace lpa
