#include "chordsieve/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <numeric>
#include <optional>

#include "chordsieve/bounds.hpp"
#include "chordsieve/cliques.hpp"
#include "chordsieve/errors.hpp"
#include "chordsieve/io.hpp"
#include "chordsieve/optimize.hpp"
#include "chordsieve/random.hpp"
#include "chordsieve/reliability.hpp"

namespace chordsieve::cli {

namespace {

struct BoundOptions {
  std::string events_file;
  std::string graph_file;
  std::string kind;
  std::optional<int> r;
  bool sharpened = false;
  bool unchecked = false;
  std::optional<int> j;
  std::optional<int> k;
  std::optional<int> m;
  std::vector<int> order;
  bool exact = false;
};

struct OptimizeOptions {
  std::string events_file;
  bool exact = false;
  bool heuristic = false;
  std::string objective = "min-weight";
};

struct ReliabilityOptions {
  std::string network;
  std::string sweep;
  std::vector<std::string> bounds;
  bool json = false;
};

struct GenerateOptions {
  int n = 6;
  int outcomes = 64;
  std::uint64_t seed = 1;
  bool exact = false;
};

void print_json(std::ostream& out, const io::Json& j) { out << j.dump(2) << '\n'; }

Graph load_graph(const std::string& path) { return io::parse_graph(io::read_file(path)); }

template <ValueDomain V>
EventSystem<V> load_events(const std::string& path) {
  return io::event_system_from_json<V>(io::parse_json(io::read_file(path)));
}

// --- graph check ----------------------------------------------------------

void graph_check(const std::string& path, std::ostream& out) {
  Graph g = load_graph(path);
  io::Json counts = io::Json::object();
  for (const auto& [size, count] : clique_size_counts(g)) counts[std::to_string(size)] = count;
  io::Json j{{"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"chordal", is_chordal(g)},
             {"components", connected_components(g)},
             {"independence_number", independence_number(g)},
             {"clique_counts", counts},
             {"euler", truncated_euler_sum(g)}};
  print_json(out, j);
}

// --- bounds ---------------------------------------------------------------

Graph require_graph(const BoundOptions& o) {
  if (o.graph_file.empty()) throw ParseError("--graph is required for this bound");
  return load_graph(o.graph_file);
}

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw ParseError(std::string(flag) + " is required for this bound");
  return *v;
}

template <ValueDomain V>
BoundReport<V> compute_report(const BoundOptions& o, const EventSystem<V>& sys) {
  const GraphCheck check = o.unchecked ? GraphCheck::unchecked : GraphCheck::require_chordal;
  switch (parse_bound_kind(o.kind)) {
    case BoundKind::bonferroni_upper:
      return classical_bonferroni(sys, o.r.value_or(1), Direction::upper);
    case BoundKind::bonferroni_lower:
      return classical_bonferroni(sys, o.r.value_or(1), Direction::lower);
    case BoundKind::chordal_upper:
      return chordal_upper(sys, require_graph(o), o.r, check);
    case BoundKind::chordal_lower:
      return chordal_lower(sys, require_graph(o), o.r, o.sharpened, check);
    case BoundKind::chordal_lower_sharpened:
      return chordal_lower(sys, require_graph(o), o.r, true, check);
    case BoundKind::hunter_upper:
      return hunter_upper_tree(sys, require_graph(o));
    case BoundKind::hunter_lower:
      return hunter_lower_tree(sys, require_graph(o));
    case BoundKind::path_lower: {
      std::vector<int> order = o.order;
      if (order.empty()) {
        order.resize(static_cast<std::size_t>(sys.event_count()));
        std::iota(order.begin(), order.end(), 0);
      }
      return path_lower(sys, std::span<const int>(order));
    }
    case BoundKind::kwerel_lower:
      return kwerel_lower(sys);
    case BoundKind::kwerel_upper:
      return kwerel_upper(sys);
    case BoundKind::seneta_lower:
      return seneta_lower(sys, require(o.j, "--j"), require(o.k, "--k"));
    case BoundKind::seneta_upper:
      return seneta_upper(sys, require(o.j, "--j"), require(o.k, "--k"));
    case BoundKind::kwerel2_lower:
      return kwerel2_lower(sys);
    case BoundKind::generalized_lower:
      return generalized_lower(sys, require(o.m, "-m"));
  }
  throw ParseError("unknown bound kind");
}

void bounds_compute(const BoundOptions& o, std::ostream& out) {
  if (o.exact)
    print_json(out, io::report_to_json(compute_report(o, load_events<Rational>(o.events_file))));
  else
    print_json(out, io::report_to_json(compute_report(o, load_events<double>(o.events_file))));
}

template <ValueDomain V>
struct Row {
  std::string label;
  std::string direction;
  V value;
};

template <ValueDomain V>
bool same_value(const V& a, const V& b) {
  if constexpr (std::is_same_v<V, double>)
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
  else
    return a == b;
}

template <ValueDomain V>
void bounds_all_in(const BoundOptions& o, std::ostream& out, std::ostream& err) {
  const auto sys = load_events<V>(o.events_file);
  const int n = sys.event_count();
  std::vector<Row<V>> rows;
  auto add = [&](std::string label, const BoundReport<V>& report) {
    rows.push_back({std::move(label), std::string(to_string(report.direction())), report.value});
  };
  rows.push_back({"exact", "-", union_prob_exact(sys)});
  for (int r = 1; 2 * r - 1 <= std::max(n, 1); ++r) {
    add(fmt::format("bonferroni-upper r={}", r), classical_bonferroni(sys, r, Direction::upper));
    add(fmt::format("bonferroni-lower r={}", r), classical_bonferroni(sys, r, Direction::lower));
  }
  if (!o.graph_file.empty()) {
    Graph g = load_graph(o.graph_file);
    if (is_chordal(g)) {
      add("chordal-upper", chordal_upper(sys, g));
      add("chordal-lower", chordal_lower(sys, g));
      add("chordal-lower-sharpened", chordal_lower(sys, g, std::nullopt, true));
    } else {
      fmt::print(err, "note: graph is not chordal; chordal bounds skipped\n");
    }
    if (is_tree(g)) {
      add("hunter-upper", hunter_upper_tree(sys, g));
      add("hunter-lower", hunter_lower_tree(sys, g));
    }
  }
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  add("path-lower", path_lower(sys, std::span<const int>(identity)));
  add("kwerel-upper", kwerel_upper(sys));
  add("kwerel-lower", kwerel_lower(sys));
  if (n >= 3) {
    add("seneta-upper j=0 k=1", seneta_upper(sys, 0, 1));
    add("seneta-lower j=0 k=1", seneta_lower(sys, 0, 1));
    add("kwerel2-lower", kwerel2_lower(sys));
  }
  for (int m = 0; m < n; ++m) {
    auto report = generalized_lower(sys, m);
    if (n <= 10 && !same_value(report.value, generalized_lower_by_averaging(sys, m)))
      fmt::print(err, "warning: generalized-lower m={} disagrees with the average over G_M\n", m);
    add(fmt::format("generalized-lower m={}", m), report);
  }
  for (const auto& row : rows)
    fmt::print(out, "{:<26} {:<6} {}\n", row.label, row.direction, ValueTraits<V>::to_string(row.value));
}

void bounds_all(const BoundOptions& o, std::ostream& out, std::ostream& err) {
  if (o.exact)
    bounds_all_in<Rational>(o, out, err);
  else
    bounds_all_in<double>(o, out, err);
}

// --- optimize -------------------------------------------------------------

void optimize_tree(const OptimizeOptions& o, std::ostream& out) {
  const auto sys = load_events<double>(o.events_file);
  const auto w = pairwise_weights(sys);
  const auto singles = singleton_probabilities(sys);
  io::Json j;
  if (o.objective == "min-weight" || o.objective == "max-weight") {
    const auto objective = o.objective == "min-weight" ? TreeObjective::minimize_weight : TreeObjective::maximize_weight;
    Graph tree = best_tree(w, objective);
    j = io::tree_result_to_json(tree, tree_weight(w, tree), "kruskal", true);
    j["objective"] = std::string(to_string(objective));
    j["tree_lower"] = tree_lower_value(singles, w, tree);
    j["hunter_upper"] = tree_bracket_value(singles, w, tree);
  } else if (o.objective == "max-tree-lower" || o.objective == "min-hunter-upper") {
    const auto criterion =
        o.objective == "max-tree-lower" ? TreeCriterion::max_tree_lower : TreeCriterion::min_hunter_upper;
    auto result = exhaustive_tree_oracle(singles, w, criterion);
    j = io::tree_result_to_json(result.tree, result.objective, "exhaustive", true);
    j["objective"] = std::string(to_string(criterion));
  } else {
    throw ParseError("unknown objective '" + o.objective + "'");
  }
  print_json(out, j);
}

void optimize_path(const OptimizeOptions& o, std::ostream& out) {
  const auto sys = load_events<double>(o.events_file);
  const auto w = pairwise_weights(sys);
  const PathMode mode = o.heuristic ? PathMode::heuristic : PathMode::exact;
  auto result = best_path(w, mode);
  io::Json j = io::path_result_to_json(result, to_string(mode));
  j["path_lower"] = path_lower(sys, std::span<const int>(result.order)).value;
  print_json(out, j);
}

// --- reliability ----------------------------------------------------------

Network load_network(const std::string& source) {
  if (source == "appendix") return appendix_network();
  return io::network_from_json(io::parse_json(io::read_file(source)));
}

std::vector<std::string> path_labels(const Network& net) {
  std::vector<std::string> labels;
  for (const auto& path : enumerate_st_paths(net)) labels.push_back(path.label());
  return labels;
}

void reliability(const ReliabilityOptions& o, std::ostream& out, std::ostream& err) {
  const Network net = load_network(o.network);
  if (!o.sweep.empty()) {
    if (!net.symbolic()) fmt::print(err, "note: the sweep replaces the network's arc reliabilities by p\n");
    std::vector<std::string> ids = o.bounds;
    if (ids.empty()) ids = {"hunter-lower", "kwerel-lower", "bonferroni-lower"};
    auto grid = parse_sweep_grid(o.sweep);
    out << to_csv(sweep(net, grid, ids));
    return;
  }
  auto selected = [&](const std::string& id) {
    return id == "exact" || o.bounds.empty() || std::find(o.bounds.begin(), o.bounds.end(), id) != o.bounds.end();
  };
  for (const auto& id : o.bounds) parse_bound_kind(id);
  const auto polys = bound_polynomials(net);
  for (const auto& id : o.bounds)
    if (std::none_of(polys.begin(), polys.end(), [&](const NamedPolynomial& np) { return np.id == id; }))
      throw DomainError("bound '" + id + "' is not available for this network");
  const auto labels = path_labels(net);

  if (net.symbolic()) {
    if (o.json) {
      io::Json list = io::Json::array();
      for (const auto& np : polys)
        if (selected(np.id))
          list.push_back({{"id", np.id}, {"polynomial", np.value.to_string()}, {"coefficients", np.value.to_coefficient_string()}});
      print_json(out, io::Json{{"paths", labels}, {"p", "symbolic"}, {"bounds", list}});
      return;
    }
    fmt::print(out, "paths: {}\n", fmt::join(labels, ", "));
    for (const auto& np : polys) {
      if (!selected(np.id)) continue;
      fmt::print(out, "{}: {}\n", np.id, np.value.to_string());
      fmt::print(out, "  coefficients: {}\n", np.value.to_coefficient_string());
    }
    return;
  }

  // Numeric arcs: evaluate the same bounds on the real-valued path events.
  std::vector<std::pair<std::string, double>> values;
  values.emplace_back("exact", exact_reliability_numeric(net));
  if (!labels.empty()) {
    const auto sys = numeric_path_event_system(net);
    const Graph chain = path_graph(sys.event_count());
    values.emplace_back("hunter-lower", hunter_lower_tree(sys, chain).value);
    values.emplace_back("kwerel-lower", kwerel_lower(sys).value);
    values.emplace_back("bonferroni-lower", classical_bonferroni(sys, 1, Direction::lower).value);
    values.emplace_back("hunter-upper", hunter_upper_tree(sys, chain).value);
    values.emplace_back("kwerel-upper", kwerel_upper(sys).value);
    values.emplace_back("bonferroni-upper", classical_bonferroni(sys, 1, Direction::upper).value);
    if (sys.event_count() >= 3) values.emplace_back("kwerel2-lower", kwerel2_lower(sys).value);
  }
  if (o.json) {
    io::Json list = io::Json::array();
    for (const auto& [id, v] : values)
      if (selected(id)) list.push_back({{"id", id}, {"value", v}});
    print_json(out, io::Json{{"paths", labels}, {"p", "numeric"}, {"bounds", list}});
    return;
  }
  fmt::print(out, "paths: {}\n", fmt::join(labels, ", "));
  for (const auto& [id, v] : values)
    if (selected(id)) fmt::print(out, "{}: {:.12g}\n", id, v);
}

// --- demo -----------------------------------------------------------------

EventSystem<Rational> certain_events(int n) {
  return EventSystem<Rational>::from_outcomes({Rational(1)}, std::vector<std::vector<int>>(static_cast<std::size_t>(n), {0}));
}

void demo_graph(const std::string& name, const Graph& g, std::ostream& out) {
  const auto counts = clique_size_counts(g);
  std::vector<std::string> parts;
  for (const auto& [size, count] : counts) parts.push_back(std::to_string(count));
  const int alpha = independence_number(g);
  const auto euler = truncated_euler_sum(g);
  const Rational bound =
      chordal_lower(certain_events(g.vertex_count()), g, std::nullopt, false, GraphCheck::unchecked).value;
  fmt::print(out, "{}: n={} cliques by size ({}), alpha={}, chordal={}\n", name, g.vertex_count(),
             fmt::join(parts, ", "), alpha, is_chordal(g) ? "yes" : "no");
  fmt::print(out, "{}: all events certain, signed clique sum {} over alpha {}\n", name, to_short_string(Rational(euler)),
             alpha);
  fmt::print(out, "bound {} {} 1\n", to_short_string(bound), bound > 1 ? "exceeds" : "does not exceed");
}

void demo_counterexample(const std::vector<int>& ks, std::ostream& out) {
  demo_graph("figure1", figure1_graph(), out);
  for (int k : ks) demo_graph(fmt::format("G_{}", k), counterexample_family(k), out);
}

// --- generate -------------------------------------------------------------

void generate_chordal(const GenerateOptions& o, std::ostream& out) {
  Rng rng(o.seed);
  print_json(out, io::graph_to_json(random_chordal_graph(o.n, rng)));
}

void generate_events(const GenerateOptions& o, std::ostream& out) {
  Rng rng(o.seed);
  io::Json j;
  auto write = [&](const auto& sys) {
    io::Json weights = io::Json::array();
    for (const auto& w : sys.weights()) weights.push_back(io::value_to_json(w));
    io::Json events = io::Json::array();
    for (int v = 0; v < sys.event_count(); ++v) {
      std::vector<int> members;
      for (std::size_t x = 0; x < sys.outcome_count(); ++x)
        if (sys.event(v).test(x)) members.push_back(static_cast<int>(x));
      events.push_back(members);
    }
    j = io::Json{{"weights", weights}, {"events", events}};
  };
  if (o.exact)
    write(random_rational_event_system(o.n, o.outcomes, rng));
  else
    write(random_event_system(o.n, o.outcomes, rng));
  print_json(out, j);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chordal graph sieve bounds for union probabilities"};
  app.require_subcommand(1);

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Graph utilities");
  graph_cmd->require_subcommand(1);
  std::string graph_file;
  auto* graph_check_cmd = graph_cmd->add_subcommand("check", "Chordality, components, alpha and clique counts");
  graph_check_cmd->add_option("file", graph_file, "Graph file (JSON or 'n m' edge list)")->required();

  // bounds
  BoundOptions bo;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate union-probability bounds");
  bounds_cmd->require_subcommand(1);
  auto* compute_cmd = bounds_cmd->add_subcommand("compute", "One bound as report JSON");
  compute_cmd->add_option("events", bo.events_file, "Event system JSON")->required();
  compute_cmd->add_option("--graph", bo.graph_file, "Graph file");
  compute_cmd->add_option("--kind", bo.kind, "Bound id")->required();
  compute_cmd->add_option("-r", bo.r, "Truncation depth")->check(CLI::PositiveNumber);
  compute_cmd->add_flag("--sharpened", bo.sharpened, "Divide by alpha' instead of alpha");
  compute_cmd->add_flag("--unchecked", bo.unchecked, "Accept a non-chordal graph");
  compute_cmd->add_option("--j", bo.j, "Seneta index j");
  compute_cmd->add_option("--k", bo.k, "Seneta index k");
  compute_cmd->add_option("-m", bo.m, "Generalized bound parameter");
  compute_cmd->add_option("--order", bo.order, "Path order for path-lower")->delimiter(',');
  compute_cmd->add_flag("--exact", bo.exact, "Exact rational arithmetic");
  auto* all_cmd = bounds_cmd->add_subcommand("all", "Every applicable bound next to the exact value");
  all_cmd->add_option("events", bo.events_file, "Event system JSON")->required();
  all_cmd->add_option("--graph", bo.graph_file, "Graph file");
  all_cmd->add_flag("--exact", bo.exact, "Exact rational arithmetic");

  // optimize
  OptimizeOptions oo;
  auto* optimize_cmd = app.add_subcommand("optimize", "Choose the graph that optimizes a bound");
  optimize_cmd->require_subcommand(1);
  auto* tree_cmd = optimize_cmd->add_subcommand("tree", "Spanning tree for the tree bounds");
  tree_cmd->add_option("events", oo.events_file, "Event system JSON")->required();
  tree_cmd->add_option("--objective", oo.objective, "min-weight | max-weight | max-tree-lower | min-hunter-upper");
  auto* path_cmd = optimize_cmd->add_subcommand("path", "Hamiltonian path for the path bound");
  path_cmd->add_option("events", oo.events_file, "Event system JSON")->required();
  auto* exact_flag = path_cmd->add_flag("--exact", oo.exact, "Held-Karp (n <= 15), the default");
  path_cmd->add_flag("--heuristic", oo.heuristic, "Nearest neighbor plus 2-opt")->excludes(exact_flag);

  // reliability
  ReliabilityOptions ro;
  auto* rel_cmd = app.add_subcommand("reliability", "Two-terminal reliability and its bounds");
  rel_cmd->add_option("network", ro.network, "Network JSON, or 'appendix'")->required();
  rel_cmd->add_option("--sweep", ro.sweep, "Grid a:b:step; prints CSV");
  rel_cmd->add_option("--bounds", ro.bounds, "Comma-separated bound ids")->delimiter(',');
  rel_cmd->add_flag("--json", ro.json, "JSON instead of text");

  // demo
  std::vector<int> ks{3, 5};
  auto* demo_cmd = app.add_subcommand("demo", "Paper demonstrations");
  demo_cmd->require_subcommand(1);
  auto* counter_cmd = demo_cmd->add_subcommand("counterexample", "Lower bound above 1 on non-chordal graphs");
  counter_cmd->add_option("--k", ks, "Odd k values for G_k")->delimiter(',');

  // generate
  GenerateOptions go;
  auto* gen_cmd = app.add_subcommand("generate", "Random test inputs");
  gen_cmd->require_subcommand(1);
  auto* gen_chordal = gen_cmd->add_subcommand("chordal", "Random chordal graph JSON");
  gen_chordal->add_option("--n", go.n, "Vertices")->check(CLI::NonNegativeNumber);
  gen_chordal->add_option("--seed", go.seed, "RNG seed");
  auto* gen_events = gen_cmd->add_subcommand("events", "Random event system JSON");
  gen_events->add_option("--n", go.n, "Events")->check(CLI::PositiveNumber);
  gen_events->add_option("--outcomes", go.outcomes, "Outcomes")->check(CLI::PositiveNumber);
  gen_events->add_option("--seed", go.seed, "RNG seed");
  gen_events->add_flag("--exact", go.exact, "Rational weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (graph_check_cmd->parsed()) graph_check(graph_file, out);
    else if (compute_cmd->parsed()) bounds_compute(bo, out);
    else if (all_cmd->parsed()) bounds_all(bo, out, err);
    else if (tree_cmd->parsed()) optimize_tree(oo, out);
    else if (path_cmd->parsed()) optimize_path(oo, out);
    else if (rel_cmd->parsed()) reliability(ro, out, err);
    else if (counter_cmd->parsed()) demo_counterexample(ks, out);
    else if (gen_chordal->parsed()) generate_chordal(go, out);
    else if (gen_events->parsed()) generate_events(go, out);
  } catch (const ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsageError;
  } catch (const LimitError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kLimitError;
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kDomainError;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kDomainError;
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace chordsieve::cli
