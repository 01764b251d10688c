#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "orbiklt/dual_graph.hpp"
#include "orbiklt/germ.hpp"
#include "orbiklt/orbibase.hpp"

namespace orbiklt {

/// Parsed input document. Text format, one `key = value` statement per
/// line (values may span lines inside brackets), `#` comments:
///
///     vertices = [3, 2, 2]
///     edges    = [[0, 1], [1, 2]]
///     branches = [{vertex: 0, mult: 2, inter: 1}, {vertex: 2, mult: 4}]
///
/// Values are decimal integers, double-quoted strings, true/false, lists
/// `[...]` and maps `{key: value, ...}`. Float literals are rejected.
struct Document {
  nlohmann::json root = nlohmann::json::object();
  /// Source line of every value, keyed by path ("branches[1].mult").
  std::map<std::string, int> lines;

  /// "line N: path" for diagnostics.
  std::string where(const std::string& path) const;
};

/// Throws ParseError with a line:column diagnostic.
Document parse_document(std::string_view text);

/// Schema: vertices = [e...], edges = [[i,j]...] (optional),
/// branches = [{vertex, mult, inter?}...] (optional, inter defaults to 1).
DualGraph graph_from_document(const Document& doc);

/// Schema: branches = [{kind: "smooth"|"cusp", p?, q?, mult}...],
/// contact = [[i,j,t]...] (optional).
GermConfig germ_from_document(const Document& doc);

/// Schema: baseGenus = g, fibers = [{point: "label", components: [[m, orbMult]...]}...].
FibrationData fibration_from_document(const Document& doc);

}  // namespace orbiklt
