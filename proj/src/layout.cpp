#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "kplanar/decompose.hpp"
#include "kplanar/error.hpp"
#include "kplanar/io.hpp"

namespace kplanar {

namespace {

CrossingReport validated_report(const Drawing& d) {
  ValidationReport validation = validate_general_position(d);
  if (!validation.ok()) throw Error(ErrorCode::ValidationFailure, validation.violations.front().message);
  return count_crossings_sweep(d, {.validate = false, .tolerance = validation.tolerance});
}

}  // namespace

MonteCarloResult monte_carlo(const Drawing& d, std::uint32_t k, std::uint64_t trials, std::uint64_t seed,
                             unsigned threads) {
  return monte_carlo(validated_report(d), d.graph(), k, trials, seed, threads);
}

VertexLabeling derandomize(const Drawing& d, std::uint32_t k) {
  return derandomize(validated_report(d), d.graph(), k);
}

LayeredDrawing layered_layout(const Drawing& d, const VertexLabeling& labeling, double padding) {
  ValidationReport validation = validate_general_position(d);
  if (!validation.ok()) throw Error(ErrorCode::ValidationFailure, validation.violations.front().message);
  const Graph& g = d.graph();
  const Decomposition parts = decompose(g, labeling);
  const std::uint32_t k = labeling.k();

  const Box box = d.bounding_box();
  const double diag = box.diagonal();
  const double separation = std::max({diag, padding, diag > 0.0 ? 0.0 : 1.0});
  const double cell_w = box.width() + separation;
  const double cell_h = box.height() + separation;

  LayeredDrawing out;
  out.k = k;
  out.padding = separation;
  out.tolerance = validation.tolerance;
  out.layers.reserve(k);

  std::vector<bool> used(k, false);
  for (std::uint32_t l : labeling.labels()) used[l] = true;

  for (std::uint32_t i = 0; i < k; ++i) {
    // Every class g pairs with exactly one h in layer i; the type class
    // {g, h} owns the vertices labeled g or h and all edges between them.
    std::map<EdgeType, Point> offsets;
    for (std::uint32_t c = 0; c < k; ++c)
      if (used[c]) offsets.emplace(EdgeType::of(c, parts.partner(i, c)), Point{});
    const auto columns = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(offsets.size()))));
    std::size_t slot = 0;
    for (auto& [type, offset] : offsets) {
      offset = Point{static_cast<double>(slot % columns) * cell_w, static_cast<double>(slot / columns) * cell_h};
      ++slot;
    }

    std::vector<Point> positions(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const std::uint32_t c = labeling[v];
      positions[v] = d.position(v) + offsets.at(EdgeType::of(c, parts.partner(i, c)));
    }
    const auto edges = parts.subgraph_edges(i);
    std::vector<Route> routes;
    routes.reserve(edges.size());
    for (EdgeIndex e : edges) {
      const Point offset = offsets.at(parts.types()[e]);
      Route r = d.route(e);
      for (Point& p : r) p = p + offset;
      routes.push_back(std::move(r));
    }

    Layer layer{Drawing(edge_subgraph(g, edges), std::move(positions), std::move(routes)),
                std::vector<EdgeIndex>(edges.begin(), edges.end()),
                {}};
    for (const auto& [type, offset] : offsets) layer.offsets.push_back({type, offset});
    out.layers.push_back(std::move(layer));
  }
  return out;
}

std::string offsets_csv(const LayeredDrawing& layered) {
  std::ostringstream out;
  out << "layer,type_g,type_h,dx,dy\n";
  for (std::size_t i = 0; i < layered.layers.size(); ++i)
    for (const TypeOffset& t : layered.layers[i].offsets)
      out << i << ',' << t.type.g << ',' << t.type.h << ',' << io::format_double(t.offset.x) << ','
          << io::format_double(t.offset.y) << '\n';
  return out.str();
}

}  // namespace kplanar
