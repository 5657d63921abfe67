#pragma once

#include <iosfwd>
#include <string>

#include "kplanar/decompose.hpp"
#include "kplanar/drawing.hpp"
#include "kplanar/graph.hpp"

// Text formats. All readers throw Error{ParseError} on malformed input.
//
//   graph:    "n m", then m lines "u v"
//   drawing:  "n m", n lines "x y", then m lines "s x1 y1 ... xs ys" where
//             s is the number of route points; edge endpoints are the
//             vertices at the first and last point
//   labeling: "n k", then n labels

namespace kplanar::io {

/// Shortest decimal that reads back to the same double.
std::string format_double(double value);

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

void write_drawing(std::ostream& out, const Drawing& d);
Drawing read_drawing(std::istream& in);

void write_labeling(std::ostream& out, const VertexLabeling& labeling);
VertexLabeling read_labeling(std::istream& in);

Graph load_graph(const std::string& path);
Drawing load_drawing(const std::string& path);
VertexLabeling load_labeling(const std::string& path);
/// Writes `contents` to `path`; throws std::runtime_error on I/O failure.
void save_text(const std::string& path, const std::string& contents);

}  // namespace kplanar::io
