#include "kplanar/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <system_error>

#include "kplanar/error.hpp"
#include "kplanar/rational.hpp"

namespace kplanar {

std::string to_string(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

namespace io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  std::string next(const char* what) {
    std::string token;
    if (!(in_ >> token)) parse_error(std::string("unexpected end of input, expected ") + what);
    return token;
  }

  std::uint64_t count(const char* what) {
    const std::string token = next(what);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) parse_error("bad " + std::string(what) + ": " + token);
    return value;
  }

  double real(const char* what) {
    const std::string token = next(what);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) parse_error("bad " + std::string(what) + ": " + token);
    return value;
  }

  void expect_end() {
    std::string extra;
    if (in_ >> extra) parse_error("trailing input: " + extra);
  }

 private:
  std::istream& in_;
};

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in) {
  Tokens tokens(in);
  const std::uint64_t n = tokens.count("vertex count");
  const std::uint64_t m = tokens.count("edge count");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t u = tokens.count("edge endpoint");
    const std::uint64_t v = tokens.count("edge endpoint");
    edges.emplace_back(u, v);
  }
  tokens.expect_end();
  return build_graph(n, edges);
}

void write_drawing(std::ostream& out, const Drawing& d) {
  out << d.graph().vertex_count() << ' ' << d.graph().edge_count() << '\n';
  for (const Point& p : d.positions()) out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
  for (const Route& r : d.routes()) {
    out << r.size();
    for (const Point& p : r) out << ' ' << format_double(p.x) << ' ' << format_double(p.y);
    out << '\n';
  }
}

Drawing read_drawing(std::istream& in) {
  Tokens tokens(in);
  const std::uint64_t n = tokens.count("vertex count");
  const std::uint64_t m = tokens.count("edge count");
  std::vector<Point> positions(n);
  std::map<Point, Vertex> at;
  for (Vertex v = 0; v < n; ++v) {
    positions[v].x = tokens.real("x coordinate");
    positions[v].y = tokens.real("y coordinate");
    if (!at.emplace(positions[v], v).second) parse_error("vertices share position; edges would be ambiguous");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Route> routes;
  for (std::uint64_t e = 0; e < m; ++e) {
    const std::uint64_t s = tokens.count("route point count");
    if (s < 2) parse_error("route of edge " + std::to_string(e) + " has fewer than 2 points");
    Route r(s);
    for (Point& p : r) {
      p.x = tokens.real("x coordinate");
      p.y = tokens.real("y coordinate");
    }
    auto u = at.find(r.front());
    auto v = at.find(r.back());
    if (u == at.end() || v == at.end()) parse_error("route of edge " + std::to_string(e) + " does not end at vertices");
    if (u->second > v->second) std::reverse(r.begin(), r.end());
    edges.emplace_back(u->second, v->second);
    routes.push_back(std::move(r));
  }
  tokens.expect_end();
  return Drawing(build_graph(n, edges), std::move(positions), std::move(routes));
}

void write_labeling(std::ostream& out, const VertexLabeling& labeling) {
  out << labeling.size() << ' ' << labeling.k() << '\n';
  for (std::uint32_t l : labeling.labels()) out << l << '\n';
}

VertexLabeling read_labeling(std::istream& in) {
  Tokens tokens(in);
  const std::uint64_t n = tokens.count("vertex count");
  const std::uint64_t k = tokens.count("class count");
  if (k == 0 || k > UINT32_MAX) parse_error("class count out of range");
  std::vector<std::uint32_t> labels(n);
  for (auto& l : labels) {
    const std::uint64_t value = tokens.count("label");
    if (value >= k) parse_error("label " + std::to_string(value) + " not below k=" + std::to_string(k));
    l = static_cast<std::uint32_t>(value);
  }
  tokens.expect_end();
  return VertexLabeling(static_cast<std::uint32_t>(k), std::move(labels));
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  return in;
}

}  // namespace

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

Drawing load_drawing(const std::string& path) {
  auto in = open_input(path);
  return read_drawing(in);
}

VertexLabeling load_labeling(const std::string& path) {
  auto in = open_input(path);
  return read_labeling(in);
}

void save_text(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace io
}  // namespace kplanar
