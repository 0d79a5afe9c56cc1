#pragma once

#include <string>
#include <string_view>

#include "sandgroup/graph.hpp"
#include "sandgroup/matrix.hpp"
#include "sandgroup/plane.hpp"
#include "sandgroup/polygon.hpp"
#include "sandgroup/sandpile.hpp"

namespace sandgroup {

/// One "u v" pair per line, 0-based. A line holding a single integer fixes the
/// vertex count; otherwise it is one more than the largest endpoint. '#' starts a comment.
Tree parse_tree_text(std::string_view text);

/// Comma-separated integers.
CycleLengths parse_lengths(std::string_view csv);
Configuration parse_configuration(std::string_view csv);
std::string format_configuration(const Configuration& c);

/// "k1,k2,...,kn" or "kxn" for n copies of a k-gon.
PolygonChainSpec parse_chain_spec(std::string_view text);

/// "l; chain; chain; ..." where each chain may end in "@first" (default) or "@last".
PolygonFlowerSpec parse_flower_spec(std::string_view text);

struct PlaneGraphInput {
  PlaneGraph plane;
  int sink;
};

/// {"n", "edges": [[u,v],...], "rotation": {"v": [edge ids counterclockwise]},
///  "outer": face id, "sink": vertex}. "outer" and "sink" are optional;
/// the sink defaults to n - 1.
PlaneGraphInput parse_plane_graph_json(std::string_view text);

/// Same layout as parse_plane_graph_json accepts.
std::string plane_graph_json(const PlaneGraph& pg, int sink);

/// "rows cols" then the entries, whitespace separated.
IntMatrix parse_matrix_text(std::string_view text);
/// {"rows": r, "cols": c, "entries": [[...], ...]}.
IntMatrix parse_matrix_json(std::string_view text);

}  // namespace sandgroup
