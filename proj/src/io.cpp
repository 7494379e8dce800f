#include "grenoble/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace grenoble {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

long parse_number(const std::string& word, int line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(word, &used);
    if (used != word.size()) throw std::invalid_argument(word);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(line, "expected a number, got '" + word + "'");
  }
}

Json path_json(const Path& p) { return Json(p.vertices); }

} // namespace

Graph read_dimacs(std::istream& in) {
  std::string name;
  bool named = false;
  long n = -1;
  long m = -1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string& tag = words[0];
    if (tag == "c") {
      if (!named) {
        const auto start = line.find_first_not_of(" \t", line.find('c') + 1);
        name = start == std::string::npos ? "" : line.substr(start);
        named = true;
      }
    } else if (tag == "p") {
      if (n >= 0) throw ParseError(line_no, "second problem line");
      if (words.size() != 4 || (words[1] != "edge" && words[1] != "col")) {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      n = parse_number(words[2], line_no);
      m = parse_number(words[3], line_no);
      if (n < 0 || m < 0) throw ParseError(line_no, "negative size");
      if (n > kMaxVertices) {
        throw ParseError(line_no, "graph has " + std::to_string(n) + " vertices; the cap is " +
                                      std::to_string(kMaxVertices));
      }
    } else if (tag == "e") {
      if (n < 0) throw ParseError(line_no, "edge before the problem line");
      if (words.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const long u = parse_number(words[1], line_no);
      const long v = parse_number(words[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "vertex out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing problem line");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError(line_no, "problem line announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph::with_vertices(static_cast<int>(n), edges, name);
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_dimacs(in);
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "c " << g.name() << "\n";
  const auto edges = g.edges();
  out << "p edge " << g.size() << " " << edges.size() << "\n";
  for (const auto& [u, v] : edges) out << "e " << g.index(u) + 1 << " " << g.index(v) + 1 << "\n";
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

std::string coloring_to_text(const Coloring& c, const CliqueWitness& q) {
  std::ostringstream out;
  for (const auto& [v, color] : c.assignment) out << v << " " << color << "\n";
  out << "clique";
  for (VertexId v : q.members) out << " " << v;
  out << "\n";
  return out.str();
}

std::pair<Coloring, CliqueWitness> parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  Coloring c;
  CliqueWitness q;
  bool saw_clique = false;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "clique") {
      if (saw_clique) throw ParseError(line_no, "second clique line");
      saw_clique = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        q.members.push_back(static_cast<VertexId>(parse_number(words[i], line_no)));
      }
      continue;
    }
    if (words.size() != 2) throw ParseError(line_no, "expected '<vertex> <color>'");
    const auto v = static_cast<VertexId>(parse_number(words[0], line_no));
    const auto color = static_cast<int>(parse_number(words[1], line_no));
    if (!c.assignment.emplace(v, color).second) throw ParseError(line_no, "vertex colored twice");
    c.num_colors = std::max(c.num_colors, color + 1);
  }
  if (!saw_clique) throw ParseError(line_no, "missing clique line");
  return {c, q};
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const Witness& w) {
  Json j;
  j["kind"] = std::string(to_string(w.kind));
  j["vertices"] = w.vertices;
  Json paths = Json::array();
  for (const auto& p : w.paths) paths.push_back(path_json(p));
  j["paths"] = paths;
  return j;
}

Json to_json(const Graph& g, const Hyperprism& h) {
  Json j;
  j["graph_hash"] = hash_hex(structural_hash(g));
  Json strips = Json::array();
  const auto sets = h.to_ids(g);
  for (std::size_t i = 0; i < 3; ++i) {
    strips.push_back({{"A", sets[3 * i]}, {"C", sets[3 * i + 1]}, {"B", sets[3 * i + 2]}});
  }
  j["strips"] = strips;
  return j;
}

Json to_json(const DecompositionNode& node) {
  Json j;
  j["kind"] = node.kind == DecompositionNode::Kind::decomposition ? "decomposition" : "leaf";
  j["method"] = std::string(to_string(node.method));
  j["vertices"] = node.graph.ids();
  j["mark"] = node.mark ? Json::array({node.mark->first, node.mark->second}) : Json(nullptr);
  j["cutset"] = node.cutset;
  Json pairs = Json::array();
  for (const auto& [a, b] : node.pairs) pairs.push_back({a, b});
  j["pairs"] = pairs;
  j["restarts"] = node.restarts;
  j["swaps"] = node.swaps;
  j["contractions"] = node.contractions;
  Json children = Json::array();
  for (const auto& c : node.children) children.push_back(to_json(c));
  j["children"] = children;
  return j;
}

Json to_json(const StripContext& ctx, const Orders& orders) {
  Json j;
  j["a_side"] = ctx.a_side;
  j["b_side"] = ctx.b_side;
  Json rel = Json::array();
  for (const auto& [base, order] : orders) {
    Json pairs = Json::array();
    for (const auto& [x, y] : order.pairs) pairs.push_back({x, y});
    rel.push_back({{"base", base}, {"pairs", pairs}});
  }
  j["orders"] = rel;
  Json d = Json::array();
  for (VertexId a : ctx.a_side) {
    for (VertexId b : ctx.b_side) {
      d.push_back({{"a", a}, {"b", b}, {"d", d_set(orders, ctx, a, b)}});
    }
  }
  j["d_sets"] = d;
  return j;
}

Json to_json(const GenSpec& spec) {
  Json j;
  j["kind"] = std::string(to_string(spec.kind));
  switch (spec.kind) {
  case GenSpec::Kind::even_prism:
  case GenSpec::Kind::decorated_prism:
  case GenSpec::Kind::converging:
  case GenSpec::Kind::decorated_converging:
    j["lengths"] = spec.lengths;
    break;
  case GenSpec::Kind::hyperprism:
  case GenSpec::Kind::decorated_hyperprism: {
    Json strips = Json::array();
    for (const auto& s : spec.hyperprism.strips) {
      Json rungs = Json::array();
      for (const auto& r : s.rungs) rungs.push_back({r.a, r.b, r.length});
      strips.push_back({{"a_count", s.a_count},
                        {"b_count", s.b_count},
                        {"a_clique", s.a_clique},
                        {"b_clique", s.b_clique},
                        {"rungs", rungs}});
    }
    j["strips"] = strips;
    break;
  }
  case GenSpec::Kind::random_grenoble:
    j["n"] = spec.n;
    break;
  case GenSpec::Kind::violator:
    j["violator"] = std::string(to_string(spec.violator));
    break;
  }
  const bool decorated = spec.kind == GenSpec::Kind::decorated_prism ||
                         spec.kind == GenSpec::Kind::decorated_hyperprism ||
                         spec.kind == GenSpec::Kind::decorated_converging;
  if (decorated || spec.kind == GenSpec::Kind::random_grenoble) j["p"] = spec.p;
  if (decorated) j["extra"] = spec.extra;
  j["seed"] = spec.seed;
  return j;
}

GenSpec gen_spec_from_json(const Json& j) {
  try {
    GenSpec s;
    s.kind = gen_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("lengths")) s.lengths = j.at("lengths").get<std::array<int, 3>>();
    if (j.contains("strips")) {
      const Json& strips = j.at("strips");
      if (strips.size() != 3) throw InputError("a hyperprism spec has three strips");
      for (std::size_t i = 0; i < 3; ++i) {
        const Json& js = strips[i];
        StripSpec& ss = s.hyperprism.strips[i];
        ss.a_count = js.at("a_count").get<int>();
        ss.b_count = js.at("b_count").get<int>();
        ss.a_clique = js.at("a_clique").get<bool>();
        ss.b_clique = js.at("b_clique").get<bool>();
        for (const auto& r : js.at("rungs")) {
          ss.rungs.push_back({r.at(0).get<int>(), r.at(1).get<int>(), r.at(2).get<int>()});
        }
      }
    }
    if (j.contains("n")) s.n = j.at("n").get<int>();
    if (j.contains("p")) s.p = j.at("p").get<double>();
    if (j.contains("extra")) s.extra = j.at("extra").get<int>();
    if (j.contains("violator")) s.violator = witness_kind_from_string(j.at("violator").get<std::string>());
    s.seed = j.at("seed").get<std::uint64_t>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad generator spec: ") + e.what());
  }
}

std::uint64_t text_hash(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;
  for (const GenSpec& spec : corpus_specs()) {
    auto g = generate(spec);
    if (!g || g->size() < 6 || g->size() > 24 || !classify(*g).accepted) continue;
    out.push_back({spec, std::move(*g)});
  }
  return out;
}

Json corpus_manifest(const std::vector<CorpusEntry>& corpus) {
  Json graphs = Json::array();
  for (const auto& e : corpus) {
    graphs.push_back({{"name", e.graph.name()},
                      {"spec", to_json(e.spec)},
                      {"n", e.graph.size()},
                      {"m", e.graph.edge_count()},
                      {"hash", hash_hex(text_hash(to_dimacs(e.graph)))}});
  }
  return Json{{"graphs", graphs}};
}

std::vector<CorpusEntry> load_corpus(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw InputError("cannot open " + manifest_path);
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad manifest: ") + e.what());
  }
  std::vector<CorpusEntry> out;
  for (const auto& entry : manifest.at("graphs")) {
    const GenSpec spec = gen_spec_from_json(entry.at("spec"));
    auto g = generate(spec);
    const std::string name = entry.at("name").get<std::string>();
    if (!g) throw Error("corpus entry '" + name + "' no longer generates");
    if (hash_hex(text_hash(to_dimacs(*g))) != entry.at("hash").get<std::string>()) {
      throw Error("corpus entry '" + name + "' does not match its hash");
    }
    out.push_back({spec, std::move(*g)});
  }
  return out;
}

} // namespace grenoble
