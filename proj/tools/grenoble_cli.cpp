// Command-line front end: check, color, verify, gen, gen-corpus, bench, selftest.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grenoble/audit.hpp"
#include "grenoble/io.hpp"

namespace {

using namespace grenoble;

enum Exit { kOk = 0, kMismatch = 1, kRejected = 2, kInternal = 3, kUsage = 64 };

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void print_rejection(const Witness& w) {
  std::cout << "rejected\n" << to_json(w).dump() << "\n";
}

int cmd_check(const std::string& path) {
  const Graph g = read_dimacs_file(path);
  const Classification c = classify(g);
  if (c.accepted) {
    std::cout << "accepted\n";
    return kOk;
  }
  print_rejection(*c.witness);
  return kRejected;
}

struct ColorFlags {
  std::string tree_out;
  std::string report;
  bool parallel = false;
  bool timings = false;
};

int cmd_color(const std::string& path, const ColorFlags& flags) {
  const Graph g = read_dimacs_file(path);
  const auto t0 = Clock::now();
  const Classification c = classify(g);
  const double detect_ms = ms_since(t0);
  if (!c.accepted) {
    print_rejection(*c.witness);
    return kRejected;
  }
  ColorOptions options;
  options.parallel = flags.parallel;
  const auto t1 = Clock::now();
  const ColoredResult r = color(g, options);
  const double color_ms = ms_since(t1);
  std::cout << coloring_to_text(r.coloring, r.clique);

  if (!flags.tree_out.empty()) write_file(flags.tree_out, to_json(r.tree).dump(2) + "\n");
  if (!flags.report.empty()) {
    const ColorStats s = collect_stats(r.tree);
    const TreeBound bound = check_tree_bound(r.tree);
    Json report;
    report["input_hash"] = hash_hex(structural_hash(g));
    report["name"] = g.name();
    report["n"] = g.size();
    report["m"] = g.edge_count();
    report["outcome"] = "colored";
    report["num_colors"] = r.coloring.num_colors;
    report["clique"] = r.clique.members;
    report["restarts"] = s.restarts;
    report["tree"] = {{"decomposition_nodes", s.decomposition_nodes},
                      {"leaves", s.leaves},
                      {"total_nodes", bound.total_nodes},
                      {"bound_ok", bound.ok},
                      {"kempe_swaps", s.kempe_swaps},
                      {"contractions", s.contractions},
                      {"oracle_fallbacks", s.oracle_fallbacks}};
    if (flags.timings) report["timings_ms"] = {{"detect", detect_ms}, {"color", color_ms}};
    write_file(flags.report, report.dump(2) + "\n");
  }
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
  const Graph g = read_dimacs_file(graph_path);
  const auto [c, q] = parse_coloring(read_file(coloring_path));
  if (verify_coloring(g, c, q)) {
    std::cout << "optimal: " << c.num_colors << " colors, clique of size " << q.size() << "\n";
    return kOk;
  }
  std::cout << "not certified\n";
  return kMismatch;
}

struct GenFlags {
  std::string kind;
  std::vector<std::string> args;
  int n = 10;
  double p = 0.3;
  std::uint64_t seed = 0;
  int extra = 2;
  std::string spec_json;
};

int cmd_gen(const GenFlags& f) {
  GenSpec spec;
  if (!f.spec_json.empty()) {
    spec = gen_spec_from_json(Json::parse(f.spec_json));
  } else {
    spec.kind = gen_kind_from_string(f.kind == "even-prism"       ? "even_prism"
                                     : f.kind == "random"         ? "random_grenoble"
                                     : f.kind == "decorated-prism" ? "decorated_prism"
                                                                   : f.kind);
    spec.n = f.n;
    spec.p = f.p;
    spec.seed = f.seed;
    spec.extra = f.extra;
    if (spec.kind == GenSpec::Kind::even_prism || spec.kind == GenSpec::Kind::decorated_prism) {
      if (f.args.size() != 3) throw InputError("prisms take three path lengths");
      for (std::size_t i = 0; i < 3; ++i) spec.lengths[i] = std::stoi(f.args[i]);
    } else if (spec.kind == GenSpec::Kind::violator) {
      if (f.args.size() != 1) throw InputError("violator takes one kind: square, odd_hole, odd_prism");
      spec.violator = witness_kind_from_string(f.args[0]);
    } else if (spec.kind != GenSpec::Kind::random_grenoble) {
      throw InputError("use --spec for hyperprism generators");
    }
  }
  const auto g = generate(spec);
  if (!g) {
    std::cerr << "sampler found no accepted graph\n";
    return kMismatch;
  }
  write_dimacs(std::cout, *g);
  return kOk;
}

int cmd_gen_corpus(const std::string& out) {
  const auto corpus = build_corpus();
  write_file(out, corpus_manifest(corpus).dump(1) + "\n");
  std::cout << corpus.size() << " graphs\n";
  return kOk;
}

int cmd_bench(const std::string& manifest) {
  const auto corpus = load_corpus(manifest);
  std::cout << std::left << std::setw(36) << "graph" << std::right << std::setw(4) << "n"
            << std::setw(5) << "m" << std::setw(7) << "chi" << std::setw(12) << "detect_ms"
            << std::setw(12) << "color_ms" << "\n";
  for (const auto& e : corpus) {
    const auto t0 = Clock::now();
    classify(e.graph);
    const double detect = ms_since(t0);
    const auto t1 = Clock::now();
    const ColoredResult r = color(e.graph);
    const double col = ms_since(t1);
    std::cout << std::left << std::setw(36) << e.graph.name() << std::right << std::setw(4)
              << e.graph.size() << std::setw(5) << e.graph.edge_count() << std::setw(7)
              << r.coloring.num_colors << std::setw(12) << std::fixed << std::setprecision(2)
              << detect << std::setw(12) << col << "\n";
  }
  return kOk;
}

int cmd_selftest(const std::string& manifest) {
  const auto corpus = load_corpus(manifest);
  AuditObserver audit;
  int failures = 0;
  for (const auto& e : corpus) {
    ColorOptions options;
    options.observer = &audit;
    const ColoredResult r = color(e.graph, options);
    const int chi = chromatic_number_exact(e.graph).first;
    const int omega = max_clique_exact(e.graph).size();
    if (r.coloring.num_colors != chi || chi != omega || !check_tree_bound(r.tree).ok) {
      std::cout << "FAIL " << e.graph.name() << "\n";
      ++failures;
    }
  }
  const auto violations = audit.violations();
  for (const auto& v : violations) std::cout << "FAIL " << v << "\n";
  const AuditCounts n = audit.counts();
  std::cout << corpus.size() << " graphs, " << n.contexts << " hyperprisms, " << n.orders
            << " orders, " << n.pairs << " even pairs, " << n.recolorings << " recolorings\n";
  const bool ok = failures == 0 && violations.empty();
  std::cout << (ok ? "selftest passed" : "selftest failed") << "\n";
  return ok ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
  if (const char* budget = std::getenv("GRENOBLE_BUDGET")) {
    try {
      set_default_budget(std::stoull(budget));
    } catch (const std::exception&) {
      std::cerr << "GRENOBLE_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Coloring square-free Grenoble graphs"};
  app.require_subcommand(1);

  std::string path;
  auto* check = app.add_subcommand("check", "Classify a DIMACS graph");
  check->add_option("graph", path, "DIMACS file")->required();

  ColorFlags color_flags;
  auto* color_cmd = app.add_subcommand("color", "Optimally color an accepted graph");
  color_cmd->add_option("graph", path, "DIMACS file")->required();
  color_cmd->add_option("--tree-out", color_flags.tree_out, "Write the decomposition tree as JSON");
  color_cmd->add_option("--report", color_flags.report, "Write a run report as JSON");
  color_cmd->add_flag("--parallel", color_flags.parallel, "Color the two halves of each split concurrently");
  color_cmd->add_flag("--timings", color_flags.timings, "Include wall-clock timings in the report");

  std::string coloring_path;
  auto* verify = app.add_subcommand("verify", "Check a coloring and clique certificate");
  verify->add_option("graph", path, "DIMACS file")->required();
  verify->add_option("coloring", coloring_path, "Coloring file")->required();

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "Generate a graph in DIMACS format");
  gen->add_option("kind", gen_flags.kind,
                  "even-prism, random, violator, decorated-prism (or use --spec)");
  gen->add_option("args", gen_flags.args, "Path lengths or violator kind");
  gen->add_option("--n", gen_flags.n, "Vertex count for random graphs");
  gen->add_option("--p", gen_flags.p, "Edge probability");
  gen->add_option("--seed", gen_flags.seed, "Random seed");
  gen->add_option("--extra", gen_flags.extra, "Vertices added by decorated generators");
  gen->add_option("--spec", gen_flags.spec_json, "Generator spec as JSON");

  std::string manifest = "tests/data/corpus.json";
  auto* gen_corpus = app.add_subcommand("gen-corpus", "Write the corpus manifest");
  gen_corpus->add_option("--out", manifest, "Manifest path");
  auto* bench = app.add_subcommand("bench", "Time detection and coloring over a corpus");
  bench->add_option("manifest", manifest, "Manifest path");
  auto* selftest = app.add_subcommand("selftest", "Run the lemma audit over a corpus");
  selftest->add_option("manifest", manifest, "Manifest path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(path);
    if (*color_cmd) return cmd_color(path, color_flags);
    if (*verify) return cmd_verify(path, coloring_path);
    if (*gen) return cmd_gen(gen_flags);
    if (*gen_corpus) return cmd_gen_corpus(manifest);
    if (*bench) return cmd_bench(manifest);
    if (*selftest) return cmd_selftest(manifest);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const ClassViolation& e) {
    print_rejection(e.witness());
    return kRejected;
  } catch (const LemmaViolation& e) {
    std::cerr << "lemma violation: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
