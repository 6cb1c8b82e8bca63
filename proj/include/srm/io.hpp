#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "srm/bruhat.hpp"
#include "srm/core.hpp"
#include "srm/digraph.hpp"
#include "srm/matrix.hpp"
#include "srm/polytope.hpp"

namespace srm {

/// Canonical matrix text format: first line "m n", then m lines of n
/// space-separated integers from {-1,0,1}.
inline std::string write_matrix_text(const SignMatrix& a) {
  std::ostringstream os;
  os << a.rows() << ' ' << a.cols() << '\n';
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
  return os.str();
}

inline SignMatrix parse_matrix_text(std::istream& in) {
  int m = 0, n = 0;
  if (!(in >> m >> n)) throw std::invalid_argument("matrix text: missing dimensions");
  if (m < 1 || n < 1) throw std::invalid_argument("matrix text: dimensions must be >= 1");
  SignMatrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int v;
      if (!(in >> v)) throw std::invalid_argument("matrix text: missing entry");
      if (v < -1 || v > 1)
        throw std::invalid_argument("matrix text: entry " + std::to_string(v) +
                                    " outside {-1,0,1}");
      a.set(i, j, v);
    }
  return a;
}

inline SignMatrix parse_matrix_text(const std::string& s) {
  std::istringstream in(s);
  return parse_matrix_text(in);
}

/// JSON form: {"rows": m, "cols": n, "entries": [[...], ...]}.
inline nlohmann::json matrix_to_json(const SignMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

inline SignMatrix matrix_from_json(const nlohmann::json& j) {
  const int m = j.at("rows").get<int>();
  const int n = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != m)
    throw std::invalid_argument("matrix json: entries must hold one array per row");
  SignMatrix a(m, n);
  for (int i = 0; i < m; ++i) {
    const auto& row = entries.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix json: row length mismatch");
    for (int jx = 0; jx < n; ++jx) {
      const int v = row.at(jx).get<int>();
      if (v < -1 || v > 1)
        throw std::invalid_argument("matrix json: entry " + std::to_string(v) +
                                    " outside {-1,0,1}");
      a.set(i, jx, v);
    }
  }
  return a;
}

/// Rational matrix text: same layout, entries "p" or "p/q".
inline RationalMatrix parse_rational_matrix_text(std::istream& in) {
  int m = 0, n = 0;
  if (!(in >> m >> n)) throw std::invalid_argument("rational matrix text: missing dimensions");
  if (m < 1 || n < 1) throw std::invalid_argument("rational matrix text: dimensions must be >= 1");
  RationalMatrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("rational matrix text: missing entry");
      try {
        Rational v(tok);
        if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
        v.canonicalize();
        a.set(i, j, v);
      } catch (const std::exception&) {
        throw std::invalid_argument("rational matrix text: bad entry '" + tok + "'");
      }
    }
  return a;
}

inline RationalMatrix parse_rational_matrix_text(const std::string& s) {
  std::istringstream in(s);
  return parse_rational_matrix_text(in);
}

/// Digraph text format: first line "n", one "i j" pair per edge line, then a
/// final line "loops: i1 i2 ...".  Vertices are 1-based in the file.
inline LoopedDigraph parse_digraph_text(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (n < 0) {
      n = std::stoi(first);
      continue;
    }
    if (first == "loops:") {
      int v;
      while (ls >> v) loops.push_back(v - 1);
      continue;
    }
    int u = std::stoi(first), v;
    if (!(ls >> v)) throw std::invalid_argument("digraph text: edge line needs two vertices");
    edges.emplace_back(u - 1, v - 1);
  }
  if (n < 0) throw std::invalid_argument("digraph text: missing vertex count");
  return LoopedDigraph(n, std::move(edges), std::move(loops));
}

inline LoopedDigraph parse_digraph_text(const std::string& s) {
  std::istringstream in(s);
  return parse_digraph_text(in);
}

/// Node labels flatten the entries row-major: entries joined by commas, rows
/// by semicolons.
inline std::string matrix_label(const SignMatrix& a) {
  std::string out;
  for (int i = 0; i < a.rows(); ++i) {
    if (i) out += ';';
    for (int j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += std::to_string(a(i, j));
    }
  }
  return out;
}

/// DOT export; edges run from cover-lower to cover-upper.
inline std::string hasse_to_dot(const HasseDiagram& d) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << matrix_label(d.nodes[i].matrix()) << "\"];\n";
  for (auto& [lo, hi] : d.edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

/// Comma-separated integer vector, e.g. "1,0,2".
inline std::vector<int> parse_int_vector(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("vector: empty component in '" + s + "'");
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw std::invalid_argument("vector: no components in '" + s + "'");
  return out;
}

}  // namespace srm
