#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "gontd/divisor.hpp"
#include "gontd/harmonic_morphism.hpp"
#include "gontd/search_strategy.hpp"
#include "gontd/tree_decomposition.hpp"

namespace gontd::io {

// PACE .gr: "p tw <n> <m>" then m lines "<u> <v>" (1-based); "c" lines are
// comments; repeated lines are parallel edges.
MultiGraph read_gr(std::istream& in);
void write_gr(std::ostream& out, const MultiGraph& g);

// PACE .td: "s td <bags> <max bag size> <n>", "b <id> <v...>", then "<i> <j>" tree edges.
struct TdFile {
    std::size_t vertex_count = 0;
    TreeDecomposition td;
};
TdFile read_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t vertex_count);

/// Whitespace-separated "<vertex>:<chips>" tokens; omitted vertices hold 0.
Divisor parse_divisor(const MultiGraph& g, const std::string& text);
/// Nonzero entries in vertex order, e.g. "a:3 c:1"; empty for the zero divisor.
std::string format_divisor(const MultiGraph& g, const Divisor& d);

// Morphism text: "v <g-vertex> <t-vertex>" and "e <g-edge-id> <t-edge-id> <index>"
// with 1-based edge ids in .gr line order.
FiniteMorphism read_morphism(std::istream& in, const MultiGraph& g, const MultiGraph& t);
void write_morphism(std::ostream& out, const MultiGraph& g, const MultiGraph& t, const FiniteMorphism& f);

// Refinement text, one line per refined vertex:
//   "o <refined-v> <original-v>"
//   "s <refined-v> <original-edge-id> <from-original-v> <position>"
//   "l <refined-v> <anchor-refined-v>"
RefinementMap read_refinement(std::istream& in, const MultiGraph& original, const MultiGraph& refined);
void write_refinement(std::ostream& out, const MultiGraph& original, const MultiGraph& refined, const RefinementMap& map);

/// Single-file JSON document: graph, optional divisor, optional morphism to a tree.
struct Document {
    static constexpr int kVersion = 1;

    MultiGraph graph;
    std::optional<Divisor> divisor;
    std::optional<MultiGraph> tree;
    std::optional<FiniteMorphism> morphism;
};
Document read_document(std::istream& in);
void write_document(std::ostream& out, const Document& doc);

nlohmann::json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);

nlohmann::json mss_to_json(const MultiGraph& g, const MssTree& t);
MssTree mss_from_json(const MultiGraph& g, const nlohmann::json& j);

nlohmann::json treedec_to_json(const MultiGraph& g, const TreeDecomposition& td);

std::string treedec_to_dot(const MultiGraph& g, const TreeDecomposition& td);

/// Reads a graph from a .gr file, or from the "graph" member of a JSON document
/// (any other extension). Throws ParseError on malformed content.
Document load_document(const std::string& path);
MultiGraph load_graph(const std::string& path);

}  // namespace gontd::io
