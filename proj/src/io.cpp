#include "sandgroup/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "sandgroup/error.hpp"

namespace sandgroup {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_long(const std::string& token, std::string_view what) {
  long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw Error(ErrorKind::invalid_input, "parse error", std::string(what) + ": '" + token + "'");
  return value;
}

int parse_int(const std::string& token, std::string_view what) {
  const long v = parse_long(token, what);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw Error(ErrorKind::invalid_input, "parse error", std::string(what) + " out of range");
  return static_cast<int>(v);
}

Integer json_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error(ErrorKind::invalid_input, "parse error", "expected an integer, got " + j.dump());
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::invalid_input, "parse error", e.what());
  }
}

}  // namespace

Tree parse_tree_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int declared = -1, largest = -1;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      declared = parse_int(tokens[0], "vertex count");
    } else if (tokens.size() == 2) {
      const int u = parse_int(tokens[0], "tree vertex"), v = parse_int(tokens[1], "tree vertex");
      edges.emplace_back(u, v);
      largest = std::max({largest, u, v});
    } else {
      throw Error(ErrorKind::invalid_input, "parse error", "tree line '" + line + "'");
    }
  }
  const int n = declared >= 0 ? declared : largest + 1;
  if (n <= 0) throw Error(ErrorKind::invalid_input, "parse error", "empty tree");
  return Tree(n, edges);
}

CycleLengths parse_lengths(std::string_view csv) {
  CycleLengths out;
  for (const auto& tok : split(csv, ',')) out.push_back(parse_int(tok, "length"));
  return out;
}

Configuration parse_configuration(std::string_view csv) {
  Configuration out;
  if (trim(csv).empty()) return out;
  for (const auto& tok : split(csv, ',')) out.push_back(parse_long(tok, "configuration entry"));
  return out;
}

std::string format_configuration(const Configuration& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

PolygonChainSpec parse_chain_spec(std::string_view text) {
  const std::string s = trim(text);
  PolygonChainSpec spec;
  if (auto x = s.find_first_of("xX"); x != std::string::npos) {
    const int sides = parse_int(trim(s.substr(0, x)), "polygon sides");
    const int count = parse_int(trim(s.substr(x + 1)), "polygon count");
    if (count < 1) throw Error(ErrorKind::invalid_input, "parse error", "chain needs at least one polygon");
    spec.lengths.assign(count, sides);
  } else {
    for (const auto& tok : split(s, ',')) spec.lengths.push_back(parse_int(tok, "polygon sides"));
  }
  spec.validate();
  return spec;
}

PolygonFlowerSpec parse_flower_spec(std::string_view text) {
  const auto parts = split(text, ';');
  if (parts.size() < 2) throw Error(ErrorKind::invalid_input, "parse error", "flower needs 'l; chain; ...'");
  PolygonFlowerSpec spec;
  spec.cycle_length = parse_int(parts[0], "central cycle length");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string chain = parts[i];
    Attach where = Attach::first;
    if (auto at = chain.find('@'); at != std::string::npos) {
      const std::string suffix = trim(chain.substr(at + 1));
      if (suffix == "first") where = Attach::first;
      else if (suffix == "last") where = Attach::last;
      else throw Error(ErrorKind::invalid_input, "parse error", "attachment '" + suffix + "'");
      chain = trim(chain.substr(0, at));
    }
    spec.chains.push_back(parse_chain_spec(chain));
    spec.attach.push_back(where);
  }
  spec.validate();
  return spec;
}

PlaneGraphInput parse_plane_graph_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    const int n = j.at("n").get<int>();
    MultiGraph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::invalid_input, "parse error", "edge " + e.dump());
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::vector<int>> rotation(n);
    const json& rot = j.at("rotation");
    if (rot.is_array()) {
      if (static_cast<int>(rot.size()) != n) throw Error(ErrorKind::invalid_input, "bad embedding", "rotation size");
      for (int v = 0; v < n; ++v) rotation[v] = rot[v].get<std::vector<int>>();
    } else {
      for (const auto& [key, value] : rot.items()) {
        const int v = parse_int(key, "rotation vertex");
        if (v < 0 || v >= n) throw Error(ErrorKind::invalid_input, "bad embedding", "rotation vertex " + key);
        rotation[v] = value.get<std::vector<int>>();
      }
    }
    std::optional<int> outer;
    if (j.contains("outer")) outer = j.at("outer").get<int>();
    const int sink = j.contains("sink") ? j.at("sink").get<int>() : n - 1;
    if (sink < 0 || sink >= n) throw Error(ErrorKind::invalid_input, "vertex out of range", "sink");
    return PlaneGraphInput{PlaneGraph(std::move(g), std::move(rotation), outer), sink};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_input, "parse error", e.what());
  }
}

std::string plane_graph_json(const PlaneGraph& pg, int sink) {
  json j;
  j["n"] = pg.graph().vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : pg.graph().edges()) j["edges"].push_back({e.u, e.v});
  j["rotation"] = json::object();
  for (int v = 0; v < pg.graph().vertex_count(); ++v) j["rotation"][std::to_string(v)] = pg.rotation()[v];
  j["outer"] = pg.outer_face();
  j["sink"] = sink;
  return j.dump();
}

IntMatrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw Error(ErrorKind::invalid_input, "parse error", "matrix header");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::string tok;
      if (!(in >> tok)) throw Error(ErrorKind::invalid_input, "parse error", "matrix too short");
      try {
        m(r, c) = parse_integer(tok);
      } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::invalid_input, "parse error", "matrix entry '" + tok + "'");
      }
    }
  if (std::string extra; in >> extra) throw Error(ErrorKind::invalid_input, "parse error", "trailing matrix data");
  return m;
}

IntMatrix parse_matrix_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw Error(ErrorKind::invalid_input, "parse error", "row count");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols) throw Error(ErrorKind::invalid_input, "parse error", "column count");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = json_integer(entries[r][c]);
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_input, "parse error", e.what());
  }
}

}  // namespace sandgroup
