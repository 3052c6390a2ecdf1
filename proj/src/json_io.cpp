#include "kreweras/json_io.hpp"

#include <sstream>

#include "kreweras/errors.hpp"

namespace kreweras {

using nlohmann::json;

json word_to_json(const KrewerasWord& w) { return json{{"n", w.n()}, {"word", w.str()}}; }

KrewerasWord word_from_json(const json& j) {
  KrewerasWord w = KrewerasWord::parse(j.at("word").get<std::string>());
  if (j.contains("n") && j.at("n").get<int>() != w.n())
    throw std::invalid_argument("n field disagrees with the word length");
  return w;
}

json bump_to_json(const BumpDiagram& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs)
    arcs.push_back(json::array({a.opener, a.closer, a.color == ArcColor::blue ? "B" : "C"}));
  json crossings = json::array();
  for (const Crossing& c : d.crossings) {
    crossings.push_back(json{{"arcs", {c.outer, c.inner}},
                             {"kind", c.kind == CrossingKind::boundary ? "boundary" : "interior"},
                             {"x", {c.x.num, c.x.den}},
                             {"y_squared", {c.y_sq.num, c.y_sq.den}}});
  }
  return json{{"n", d.word.n()},
              {"word", d.word.str()},
              {"arcs", arcs},
              {"crossings", crossings},
              {"arc_order", d.arc_order}};
}

json growth_to_json(const GrowthWindow& g) {
  json rows = json::array();
  for (const auto& row : g.labels) {
    json r = json::array();
    for (const IdealTriple& t : row) r.push_back(json::array({t.a, t.b, t.c}));
    rows.push_back(std::move(r));
  }
  json fills = json::array();
  for (const GrowthFill& f : g.fills)
    fills.push_back(json{{"row", f.row}, {"column", f.column}, {"letter", std::string(1, to_char(f.letter))}});
  return json{{"n", g.n}, {"word", g.word.str()}, {"rows", g.rows}, {"labels", rows}, {"fills", fills}};
}

json web_to_json(const Web& w, const EdgeColoring* coloring) {
  json vertices = json::array();
  for (int v = 0; v < w.vertex_count(); ++v) {
    json jv{{"color", w.vertex_color[v] == VertexColor::white ? "white" : "black"}};
    if (w.is_boundary(v)) jv["boundary_label"] = v + 1;
    vertices.push_back(std::move(jv));
  }
  json edges = json::array();
  for (const auto& e : w.edges) edges.push_back(json::array({e[0], e[1]}));
  // rotations are emitted as edge ids; each incident edge appears once per endpoint
  json rotations = json::array();
  for (int v = 0; v < w.vertex_count(); ++v) {
    json r = json::array();
    for (int d : w.rotation[v]) r.push_back(d >> 1);
    rotations.push_back(std::move(r));
  }
  json out{{"boundary", w.boundary_count},
           {"vertices", vertices},
           {"edges", edges},
           {"rotations", rotations}};
  if (coloring) {
    json colors = json::array();
    for (EdgeColor c : coloring->color)
      colors.push_back(c == EdgeColor::avocado ? "avocado" : (c == EdgeColor::blue ? "blue" : "crimson"));
    out["edge_colors"] = colors;
  }
  return out;
}

Web web_from_json(const json& j) {
  Web w;
  w.boundary_count = j.at("boundary").get<int>();
  for (const auto& jv : j.at("vertices")) {
    std::string c = jv.at("color").get<std::string>();
    if (c != "white" && c != "black") throw std::invalid_argument("vertex color must be white or black");
    w.vertex_color.push_back(c == "white" ? VertexColor::white : VertexColor::black);
  }
  for (const auto& je : j.at("edges")) {
    w.edges.push_back({je.at(0).get<int>(), je.at(1).get<int>()});
  }
  for (const auto& jr : j.at("rotations")) {
    std::vector<int> darts;
    int v = static_cast<int>(w.rotation.size());
    for (const auto& jedge : jr) {
      int e = jedge.get<int>();
      if (e < 0 || e >= w.edge_count()) throw std::invalid_argument("rotation refers to a bad edge");
      if (w.edges[e][0] != v && w.edges[e][1] != v)
        throw std::invalid_argument("rotation lists an edge not incident to the vertex");
      darts.push_back(w.edges[e][0] == v ? 2 * e : 2 * e + 1);
    }
    w.rotation.push_back(std::move(darts));
  }
  validate_web(w);
  return w;
}

std::string growth_to_text(const GrowthWindow& g) {
  std::ostringstream os;
  int cell = 4;
  for (int r = 0; r <= g.rows; ++r) {
    if (r >= 1 && g.n > 0) {
      const GrowthFill& f = g.fill_in_row(r);
      std::string marker(cell * (f.column - 1) + 2, ' ');
      marker += '*';
      marker += to_char(f.letter);
      marker += '*';
      os << marker << "\n";
    }
    std::string line(cell * r, ' ');
    for (const IdealTriple& t : g.labels[r]) {
      line += std::to_string(t.a);
      line += std::to_string(t.b);
      line += std::to_string(t.c);
      line += ' ';
    }
    os << line << "\n";
  }
  return os.str();
}

}  // namespace kreweras
