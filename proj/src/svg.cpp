#include "kreweras/svg.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

namespace kreweras {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* kSvgHeader = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

}  // namespace

std::string bump_to_svg(const BumpDiagram& d) {
  int len = d.word.size();
  double unit = 40.0, margin = 30.0;
  double base = margin + unit * len / 2.0 + 20.0;
  double width = 2 * margin + unit * std::max(1, len - 1);
  double height = base + 50.0;

  std::ostringstream os;
  os << kSvgHeader;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto xpos = [&](double i) { return margin + unit * (i - 1); };
  for (const Arc& a : d.arcs) {
    double x1 = xpos(a.opener), x2 = xpos(a.closer);
    double r = (x2 - x1) / 2.0;
    bool blue = a.color == ArcColor::blue;
    os << "<path d=\"M " << fmt(x1) << " " << fmt(base) << " A " << fmt(r) << " " << fmt(r)
       << " 0 0 1 " << fmt(x2) << " " << fmt(base) << "\" fill=\"none\" stroke=\""
       << (blue ? "#1f4fd8" : "#c21f3a") << "\" stroke-width=\"2\""
       << (blue ? "" : " stroke-dasharray=\"7,4\"") << "/>\n";
  }
  for (int i = 1; i <= len; ++i) {
    double x = xpos(i);
    os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(base) << "\" r=\"2.5\" fill=\"black\"/>\n";
    os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(base + 18) << "\" font-size=\"12\""
       << " text-anchor=\"middle\">" << i << "</text>\n";
    os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(base + 34) << "\" font-size=\"13\""
       << " text-anchor=\"middle\" font-style=\"italic\">" << to_char(d.word.letter(i))
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string web_to_svg(const Web& w, const EdgeColoring* coloring, std::uint64_t seed) {
  int V = w.vertex_count();
  int m = w.boundary_count;
  double radius = 36.0 * m / (2.0 * 3.14159265358979);
  radius = std::max(radius, 90.0);
  double cx = radius + 45.0, cy = radius + 45.0;
  double size = 2 * (radius + 45.0);

  std::vector<double> px(V), py(V);
  for (int b = 0; b < m; ++b) {
    // counterclockwise labels; screen y points down, so negate the sine
    double theta = 3.14159265358979 * (0.5 + 2.0 * b / m);
    px[b] = cx + radius * std::cos(theta);
    py[b] = cy - radius * std::sin(theta);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-4.0, 4.0);
  for (int v = m; v < V; ++v) {
    px[v] = cx + jitter(rng);
    py[v] = cy + jitter(rng);
  }
  std::vector<std::vector<int>> adj(V);
  for (const auto& e : w.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (int iter = 0; iter < 240; ++iter) {
    for (int v = m; v < V; ++v) {
      double sx = 0, sy = 0;
      for (int u : adj[v]) {
        sx += px[u];
        sy += py[u];
      }
      px[v] = 0.55 * px[v] + 0.45 * sx / adj[v].size();
      py[v] = 0.55 * py[v] + 0.45 * sy / adj[v].size();
    }
  }

  std::ostringstream os;
  os << kSvgHeader;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
     << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << " " << fmt(size) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(radius)
     << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";

  for (int e = 0; e < w.edge_count(); ++e) {
    double x1 = px[w.edges[e][0]], y1 = py[w.edges[e][0]];
    double x2 = px[w.edges[e][1]], y2 = py[w.edges[e][1]];
    EdgeColor c = coloring ? coloring->color[e] : EdgeColor::blue;
    if (coloring && c == EdgeColor::avocado) {
      // wavy avocado edge: a short sine ribbon along the segment
      double dx = x2 - x1, dy = y2 - y1;
      double L = std::hypot(dx, dy);
      double nx = L > 1e-9 ? -dy / L : 0.0, ny = L > 1e-9 ? dx / L : 0.0;
      os << "<path d=\"M " << fmt(x1) << " " << fmt(y1);
      int segs = 8;
      for (int k = 1; k <= segs; ++k) {
        double t = static_cast<double>(k) / segs;
        double amp = 2.6 * std::sin(t * 3.14159265358979 * 3);
        os << " L " << fmt(x1 + dx * t + nx * amp) << " " << fmt(y1 + dy * t + ny * amp);
      }
      os << "\" fill=\"none\" stroke=\"#4f9d2f\" stroke-width=\"2\"/>\n";
    } else {
      const char* stroke = "#444444";
      const char* dash = "";
      if (coloring) {
        stroke = c == EdgeColor::blue ? "#1f4fd8" : "#c21f3a";
        if (c == EdgeColor::crimson) dash = " stroke-dasharray=\"7,4\"";
      }
      os << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
         << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"" << dash
         << "/>\n";
    }
  }
  for (int v = 0; v < V; ++v) {
    bool white = w.vertex_color[v] == VertexColor::white;
    os << "<circle cx=\"" << fmt(px[v]) << "\" cy=\"" << fmt(py[v]) << "\" r=\"4\" fill=\""
       << (white ? "white" : "black") << "\" stroke=\"black\"/>\n";
    if (w.is_boundary(v)) {
      double dx = px[v] - cx, dy = py[v] - cy;
      double L = std::hypot(dx, dy);
      os << "<text x=\"" << fmt(px[v] + 14 * dx / L) << "\" y=\"" << fmt(py[v] + 14 * dy / L + 4)
         << "\" font-size=\"12\" text-anchor=\"middle\">" << v + 1 << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kreweras
