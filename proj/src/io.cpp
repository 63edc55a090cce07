#include "bcl/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bcl {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) s.resize(hash);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

[[noreturn]] void fail(int line_no, const std::string& message) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + message);
}

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
  std::istringstream in(s);
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return true;
}

bool graph6_alphabet(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (c < 63 || c > 126) return false;
  return true;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
  std::string s = line;
  const std::string prefix = ">>graph6<<";
  if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
  if (!graph6_alphabet(s)) throw std::invalid_argument("graph6: bad alphabet");
  std::size_t pos = 0;
  long long n;
  if (s[0] == '~') {
    if (s.size() < 4) throw std::invalid_argument("graph6: truncated size");
    if (s[1] == '~') throw std::invalid_argument("graph6: size too large");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
    pos = 4;
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  if (n < 1) throw std::invalid_argument("graph6: empty graph");
  const long long bits = n * (n - 1) / 2;
  if (static_cast<long long>(s.size() - pos) != (bits + 5) / 6)
    throw std::invalid_argument("graph6: wrong payload length");
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = s[pos + bit / 6] - 63;
      if (byte >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
    }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  long long n = -1, m = -1;
  long long edges_seen = 0;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> dedup;
  int header_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string s = strip(raw);
    if (s.empty()) continue;
    if (n < 0) {
      if (s.rfind(">>graph6<<", 0) == 0 || graph6_alphabet(s)) return parse_graph6(s);
      if (!parse_two_ints(s, n, m) || n < 1 || m < 0)
        fail(line_no, "malformed header (expected \"n m\")");
      header_line = line_no;
      continue;
    }
    long long u, v;
    if (!parse_two_ints(s, u, v)) fail(line_no, "malformed edge (expected \"u v\")");
    if (u == v) fail(line_no, "self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) fail(line_no, "edge endpoint out of range");
    if (!dedup.insert({static_cast<int>(u), static_cast<int>(v)}).second)
      fail(line_no, "duplicate edge");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    ++edges_seen;
  }
  if (n < 0) throw std::invalid_argument("no graph found in input");
  if (edges_seen != m)
    fail(header_line, "header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(edges_seen));
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string render_graph(const Graph& g) {
  std::string out =
      std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  long long m = -1;
  std::vector<std::pair<int, int>> rel;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string s = strip(raw);
    if (s.empty()) continue;
    if (m < 0) {
      std::istringstream hs(s);
      std::string extra;
      if (!(hs >> m) || (hs >> extra) || m < 1) fail(line_no, "malformed poset header");
      continue;
    }
    long long u, v;
    if (!parse_two_ints(s, u, v)) fail(line_no, "malformed relation (expected \"u v\")");
    if (u < 0 || u >= m || v < 0 || v >= m) fail(line_no, "relation element out of range");
    rel.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (m < 0) throw std::invalid_argument("no poset found in input");
  return Poset(static_cast<int>(m), rel, /*transitive_closure=*/true);
}

Poset parse_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_poset(buffer.str());
}

std::string render_poset(const Poset& p) {
  std::string out = std::to_string(p.size()) + "\n";
  for (auto [u, v] : p.strict_pairs())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != g.vertex_count())
    throw std::invalid_argument("to_dot: one label per vertex required");
  std::string out = "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (!labels.empty()) {
      std::string escaped;
      for (char c : labels[v]) {
        if (c == '"' || c == '\\') escaped += '\\';
        escaped += c;
      }
      out += " [label=\"" + escaped + "\"]";
    }
    out += ";\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace bcl
