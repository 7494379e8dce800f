#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "grenoble/color.hpp"
#include "grenoble/generators.hpp"

namespace grenoble {

using Json = nlohmann::ordered_json;

/// DIMACS edge format: "c" comments (the first one names the graph), one
/// "p edge n m" line ("p col" is accepted too), then m lines "e u v" with
/// 1-based vertices. Vertex k becomes id k - 1. Throws ParseError.
Graph read_dimacs(std::istream& in);
Graph parse_dimacs(std::string_view text);
Graph read_dimacs_file(const std::string& path);

/// Vertices are renumbered by rank (smallest id -> 1); edges sorted.
void write_dimacs(std::ostream& out, const Graph& g);
std::string to_dimacs(const Graph& g);

/// "<id> <color>" per vertex, then "clique <ids...>".
std::string coloring_to_text(const Coloring& c, const CliqueWitness& q);
/// Inverse of coloring_to_text; num_colors is 1 + the largest color.
std::pair<Coloring, CliqueWitness> parse_coloring(std::string_view text);

std::string hash_hex(std::uint64_t h);

Json to_json(const Witness& w);
Json to_json(const Graph& g, const Hyperprism& h);
Json to_json(const DecompositionNode& node);
Json to_json(const StripContext& ctx, const Orders& orders);
Json to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const Json& j);

struct CorpusEntry {
  GenSpec spec;
  Graph graph;
};

/// Accepted graphs with 6 to 24 vertices drawn from corpus_specs().
std::vector<CorpusEntry> build_corpus();
/// {"graphs": [{"name", "spec", "n", "m", "hash"}, ...]}; the hash is the
/// FNV-1a hash of the DIMACS text.
Json corpus_manifest(const std::vector<CorpusEntry>& corpus);
/// Regenerates every manifest entry; throws Error when a graph no longer
/// matches its recorded hash.
std::vector<CorpusEntry> load_corpus(const std::string& manifest_path);
std::uint64_t text_hash(std::string_view text);

} // namespace grenoble
