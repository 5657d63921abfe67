#include "kplanar/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "kplanar/crossings.hpp"
#include "kplanar/decompose.hpp"
#include "kplanar/error.hpp"
#include "kplanar/experiments.hpp"
#include "kplanar/io.hpp"
#include "kplanar/oracles.hpp"
#include "kplanar/random.hpp"

namespace kplanar {

namespace {

/// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out;
  std::string kind = "complete";
  std::string layout = "none";
  std::string method = "sweep";
  std::string drawing;
  std::string graph;
  std::string labels;
  std::string labels_out;
  std::string layers_dir;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::uint32_t> k{2};
  std::optional<std::uint64_t> seed;
  std::size_t restarts = 10;
  std::uint64_t trials = 0;
  std::uint64_t limit = oracle::kDefaultLimit;
  double padding = 0.0;
  std::optional<double> tolerance;
  bool derandomize = false;
  std::vector<std::size_t> n_values;
  std::vector<double> exponents;
  std::optional<std::size_t> complete;
};

std::uint64_t need_seed(const Options& o, const std::string& why) {
  if (!o.seed) throw UsageError("--seed is required " + why);
  return *o.seed;
}

std::uint32_t single_k(const Options& o) {
  if (o.k.size() != 1) throw UsageError("exactly one --k value expected");
  return o.k.front();
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    io::save_text(o.out, text);
  }
}

Drawing load_input_drawing(const Options& o) {
  if (o.drawing.empty()) throw UsageError("--drawing is required");
  return io::load_drawing(o.drawing);
}

VertexLabeling choose_labeling(const Options& o, const Drawing& d, std::uint32_t k) {
  const int sources = static_cast<int>(o.derandomize) + static_cast<int>(!o.labels.empty()) + static_cast<int>(o.seed.has_value());
  if (sources != 1) throw UsageError("give exactly one of --seed, --derandomize, --labels");
  if (o.derandomize) return derandomize(d, k);
  if (!o.labels.empty()) {
    VertexLabeling l = io::load_labeling(o.labels);
    if (l.k() != k) throw UsageError("labeling file has a different k");
    return l;
  }
  return sample_labeling(d.graph().vertex_count(), k, *o.seed);
}

void write_layers(const LayeredDrawing& layered, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < layered.layers.size(); ++i) {
    std::ostringstream text;
    io::write_drawing(text, layered.layers[i].drawing);
    io::save_text((std::filesystem::path(dir) / ("layer_" + std::to_string(i) + ".txt")).string(), text.str());
  }
  io::save_text((std::filesystem::path(dir) / "offsets.csv").string(), offsets_csv(layered));
}

Graph generate_graph(const Options& o) {
  if (o.kind == "complete") return complete_graph(o.n);
  if (o.kind == "gnm") return gnm_random(o.n, o.m, need_seed(o, "for --kind gnm"));
  if (o.kind == "path") {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < o.n; ++v) edges.emplace_back(v, v + 1);
    return build_graph(o.n, edges);
  }
  throw UsageError("unknown --kind " + o.kind);
}

void run_gen(const Options& o, std::ostream& out) {
  std::ostringstream text;
  if (o.kind == "k5-fixture") {
    io::write_drawing(text, k5_one_crossing_drawing());
    emit(o, out, text.str());
    return;
  }
  const Graph g = generate_graph(o);
  if (o.layout == "none") {
    io::write_graph(text, g);
  } else if (o.layout == "circular") {
    io::write_drawing(text, circular_drawing(g));
  } else if (o.layout == "random") {
    io::write_drawing(text, random_drawing(g, need_seed(o, "for --layout random")));
  } else if (o.layout == "improved") {
    io::write_drawing(text, improve_circular(g, o.restarts, need_seed(o, "for --layout improved")).drawing);
  } else {
    throw UsageError("unknown --layout " + o.layout);
  }
  emit(o, out, text.str());
}

void run_count(const Options& o, std::ostream& out) {
  const Drawing d = load_input_drawing(o);
  const CountOptions count{.validate = true, .tolerance = o.tolerance};
  CrossingReport report;
  if (o.method == "brute") {
    report = count_crossings_bruteforce(d, count);
  } else if (o.method == "sweep") {
    report = count_crossings_sweep(d, count);
  } else {
    throw UsageError("unknown --method " + o.method);
  }
  emit(o, out, to_csv(report));
}

void run_decompose(const Options& o, std::ostream& out) {
  const Drawing d = load_input_drawing(o);
  const std::uint32_t k = single_k(o);
  const VertexLabeling labeling = choose_labeling(o, d, k);
  emit(o, out, to_csv(d.graph(), decompose(d.graph(), labeling)));
  if (!o.labels_out.empty()) {
    std::ostringstream text;
    io::write_labeling(text, labeling);
    io::save_text(o.labels_out, text.str());
  }
  if (!o.layers_dir.empty()) write_layers(layered_layout(d, labeling, o.padding), o.layers_dir);
}

void run_expect(const Options& o, std::ostream& out) {
  const Drawing d = load_input_drawing(o);
  const CrossingReport report = count_crossings_sweep(d, {.validate = true, .tolerance = o.tolerance});
  emit(o, out, to_string(expected_monochromatic_crossings(report, d.graph(), single_k(o))) + "\n");
}

int run_verify(const Options& o, std::ostream& out) {
  const Drawing d = load_input_drawing(o);
  const std::uint32_t k = single_k(o);
  std::ostringstream text;
  bool ok = true;
  auto line = [&](const char* status, const std::string& name, const std::string& detail) {
    text << status << ' ' << name << ' ' << detail << '\n';
  };
  auto check = [&](bool pass, const std::string& name, const std::string& detail) {
    ok = ok && pass;
    line(pass ? "PASS" : "FAIL", name, detail);
  };

  const ValidationReport validation = validate_general_position(d, o.tolerance);
  check(validation.ok(), "general-position", std::to_string(validation.violations.size()) + " violation(s)");
  if (!validation.ok()) {
    emit(o, out, text.str());
    return kExitValidation;
  }
  const CountOptions count{.validate = false, .tolerance = validation.tolerance};
  const CrossingReport brute = count_crossings_bruteforce(d, count);
  const CrossingReport sweep = count_crossings_sweep(d, count);
  check(brute == sweep, "sweep-equals-brute-force", "total " + std::to_string(brute.total));

  if (k <= 64) {
    const Rational enumerated = oracle::enumerate_pair_probability(k, PairPattern::DisjointPair);
    check(enumerated == same_type_probability(k, PairPattern::DisjointPair), "pair-probability",
          to_string(enumerated));
  } else {
    line("SKIP", "pair-probability", "k > 64");
  }

  const Graph& g = d.graph();
  const Rational expected = expected_monochromatic_crossings(brute, g, k);
  const std::uint64_t derandomized = realized_crossings(brute, g, derandomize(brute, g, k));
  check(Rational(to_rational(derandomized)) <= expected, "derandomize-within-expectation",
        std::to_string(derandomized) + " <= " + to_string(expected));
  try {
    const oracle::EnumerationResult all = oracle::enumerate_expectation(brute, g, k, o.limit);
    check(all.mean == expected, "expectation-oracle", to_string(all.mean) + " == " + to_string(expected));
    check(all.minimum <= derandomized, "exhaustive-minimum",
          std::to_string(all.minimum) + " <= " + std::to_string(derandomized));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EnumerationTooLarge) throw;
    line("SKIP", "expectation-oracle", "k^n above --limit");
  }
  emit(o, out, text.str());
  return ok ? kExitOk : kExitValidation;
}

void run_layers(const Options& o) {
  if (o.out.empty()) throw UsageError("--out directory is required");
  const Drawing d = load_input_drawing(o);
  const std::uint32_t k = single_k(o);
  write_layers(layered_layout(d, choose_labeling(o, d, k), o.padding), o.out);
}

void run_color(const Options& o, std::ostream& out) {
  const Drawing d = load_input_drawing(o);
  const std::uint32_t k = single_k(o);
  const std::uint64_t seed = need_seed(o, "for color");
  const CrossingReport report = count_crossings_sweep(d, {.validate = true, .tolerance = o.tolerance});
  std::ostringstream text;
  if (o.trials > 0) {
    mpz_class sum = 0;
    for (std::uint64_t t = 0; t < o.trials; ++t)
      sum += to_rational(monochromatic_crossings(report, uniform_edge_coloring(d.graph(), k, derive_seed(seed, t))))
                 .get_num();
    Rational mean(sum, to_rational(o.trials).get_num());
    mean.canonicalize();
    text << "trials,mean,expected\n"
         << o.trials << ',' << to_string(mean) << ',' << to_string(expected_coloring_crossings(report, k)) << '\n';
  } else {
    const EdgeColoring coloring = uniform_edge_coloring(d.graph(), k, seed);
    text << "edge_u,edge_v,color\n";
    for (EdgeIndex e = 0; e < d.graph().edge_count(); ++e)
      text << d.graph().edge(e).u << ',' << d.graph().edge(e).v << ',' << coloring[e] << '\n';
    text << "MONOCHROMATIC,," << monochromatic_crossings(report, coloring) << '\n';
  }
  emit(o, out, text.str());
}

void run_midrange(const Options& o, std::ostream& out, std::ostream& err) {
  const MidrangeRun run = midrange_experiment(o.n_values, o.exponents, o.restarts, need_seed(o, "for midrange"));
  for (const std::string& w : run.warnings) err << "warning: " << w << '\n';
  emit(o, out, to_csv(run));
}

void run_ratio(const Options& o, std::ostream& out) {
  const std::uint64_t seed = need_seed(o, "for ratio");
  const int sources = static_cast<int>(!o.graph.empty()) + static_cast<int>(!o.drawing.empty()) +
                      static_cast<int>(o.complete.has_value());
  if (sources != 1) throw UsageError("give exactly one of --graph, --drawing, --complete");
  std::vector<RatioRecord> records;
  for (std::uint32_t k : o.k) {
    if (!o.drawing.empty()) {
      records.push_back(ratio_for_drawing(io::load_drawing(o.drawing), k, o.trials, seed));
    } else {
      const Graph g = o.complete ? complete_graph(*o.complete) : io::load_graph(o.graph);
      records.push_back(ratio_experiment(g, k, o.trials, seed, o.restarts));
    }
  }
  emit(o, out, to_csv(records));
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-planar decomposition of drawn graphs", args.empty() ? "kplanar" : args.front()};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* sub, const char* what = "Output file (default stdout)") {
    sub->add_option("--out,-o", o.out, what);
  };
  auto add_drawing = [&](CLI::App* sub) {
    sub->add_option("--drawing,-d", o.drawing, "Drawing file")->required();
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k,-k", o.k, "Number of subgraphs / colors")->check(CLI::Range(1u, 1u << 20));
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed,-s", o.seed, "Random seed"); };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tolerance, "General-position tolerance (default 1e-9 of the bounding-box diagonal)");
  };
  auto add_labeling_source = [&](CLI::App* sub) {
    add_seed(sub);
    sub->add_flag("--derandomize", o.derandomize, "Label by conditional expectations");
    sub->add_option("--labels", o.labels, "Labeling file");
    sub->add_option("--padding", o.padding, "Minimum gap between type classes");
  };

  auto* gen = app.add_subcommand("gen", "Generate a graph or drawing");
  gen->add_option("--kind", o.kind, "complete | gnm | path | k5-fixture")
      ->check(CLI::IsMember({"complete", "gnm", "path", "k5-fixture"}));
  gen->add_option("--n,-n", o.n, "Vertex count");
  gen->add_option("--m,-m", o.m, "Edge count (gnm)");
  gen->add_option("--layout", o.layout, "none | circular | random | improved")
      ->check(CLI::IsMember({"none", "circular", "random", "improved"}));
  gen->add_option("--restarts", o.restarts, "Local search restarts (improved layout)");
  add_seed(gen);
  add_out(gen);

  auto* count = app.add_subcommand("count", "Count crossings of a drawing (CSV report)");
  add_drawing(count);
  count->add_option("--method", o.method, "brute | sweep")->check(CLI::IsMember({"brute", "sweep"}));
  add_tol(count);
  add_out(count);

  auto* dec = app.add_subcommand("decompose", "Split edges into k subgraphs by vertex labels");
  add_drawing(dec);
  add_k(dec);
  add_labeling_source(dec);
  dec->add_option("--labels-out", o.labels_out, "Write the labeling used");
  dec->add_option("--layers-dir", o.layers_dir, "Also export the layered drawing here");
  add_out(dec);

  auto* expect = app.add_subcommand("expect", "Exact expected surviving crossings, as p/q");
  add_drawing(expect);
  add_k(expect);
  add_tol(expect);
  add_out(expect);

  auto* verify = app.add_subcommand("verify", "Check formulas and counters against brute-force oracles");
  add_drawing(verify);
  add_k(verify);
  add_tol(verify);
  verify->add_option("--limit", o.limit, "Largest k^n to enumerate");
  add_out(verify);

  auto* layers = app.add_subcommand("layers", "Export the layered drawing of a decomposition");
  add_drawing(layers);
  add_k(layers);
  add_labeling_source(layers);
  add_out(layers, "Output directory");

  auto* color = app.add_subcommand("color", "Uniform random edge coloring (geometric variant)");
  add_drawing(color);
  add_k(color);
  add_seed(color);
  add_tol(color);
  color->add_option("--trials", o.trials, "Average over this many colorings");
  add_out(color);

  auto* midrange = app.add_subcommand("midrange", "Scaled crossing estimates over an (n, e) grid");
  midrange->add_option("--n", o.n_values, "Vertex counts")->required()->delimiter(',');
  midrange->add_option("--exponents", o.exponents, "Density exponents a, e = round(n^a)")->required()->delimiter(',');
  midrange->add_option("--restarts", o.restarts, "Local search restarts per cell");
  add_seed(midrange);
  add_out(midrange);

  auto* ratio = app.add_subcommand("ratio", "Best decomposition found vs crossings, against the band");
  ratio->add_option("--graph,-g", o.graph, "Graph file (drawn by circular local search)");
  ratio->add_option("--drawing,-d", o.drawing, "Drawing file (used as is)");
  ratio->add_option("--complete", o.complete, "Use K_n");
  ratio->add_option("--k,-k", o.k, "Subgraph counts")->delimiter(',')->check(CLI::Range(1u, 1u << 20));
  ratio->add_option("--trials", o.trials, "Monte Carlo trials besides derandomization");
  ratio->add_option("--restarts", o.restarts, "Local search restarts");
  add_seed(ratio);
  add_out(ratio);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("kplanar");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) run_gen(o, out);
    if (count->parsed()) run_count(o, out);
    if (dec->parsed()) run_decompose(o, out);
    if (expect->parsed()) run_expect(o, out);
    if (verify->parsed()) return run_verify(o, out);
    if (layers->parsed()) run_layers(o);
    if (color->parsed()) run_color(o, out);
    if (midrange->parsed()) run_midrange(o, out, err);
    if (ratio->parsed()) run_ratio(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace kplanar
