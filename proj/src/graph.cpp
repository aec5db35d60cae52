#include "qaoa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qaoa/errors.hpp"

namespace qaoa {

namespace {

std::string edge_name(int u, int v) {
  return std::to_string(u) + " " + std::to_string(v);
}

}  // namespace

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: " + edge_name(u, v));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");

  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

Graph parse_json_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON graph document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "JSON graph document must be an object");

  std::vector<Graph::Edge> edges;
  int max_id = -1;
  if (doc.contains("edges")) {
    const auto& arr = doc.at("edges");
    if (!arr.is_array()) throw ParseError(0, "\"edges\" must be an array of pairs");
    int idx = 0;
    std::set<Graph::Edge> seen;
    for (const auto& item : arr) {
      const std::string where = "edges[" + std::to_string(idx) + "]";
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer())
        throw ParseError(0, where + ": malformed edge, expected [u, v]");
      int u = item[0].get<int>();
      int v = item[1].get<int>();
      if (u == v) throw ParseError(0, where + ": self-loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0) throw ParseError(0, where + ": negative vertex id");
      Graph::Edge e{std::min(u, v), std::max(u, v)};
      if (!seen.insert(e).second)
        throw ParseError(0, where + ": duplicate edge " + edge_name(e.first, e.second));
      max_id = std::max({max_id, u, v});
      edges.push_back(e);
      ++idx;
    }
  }
  int n = max_id + 1;
  if (doc.contains("n")) {
    if (!doc.at("n").is_number_integer()) throw ParseError(0, "\"n\" must be an integer");
    n = doc.at("n").get<int>();
    if (n < 0) throw ParseError(0, "\"n\" must be non-negative");
    if (max_id >= n)
      throw ParseError(0, "vertex id " + std::to_string(max_id) + " >= declared n = " +
                              std::to_string(n));
  }
  return Graph(n, std::move(edges));
}

bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Graph::Edge> edges;
  std::set<Graph::Edge> seen;
  int declared_n = -1;
  int max_id = -1;
  int line_no = 0;
  std::size_t pos = 0;
  bool header_allowed = true;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    if (header_allowed && line.starts_with("n=")) {
      header_allowed = false;
      if (!parse_int(line.substr(2), declared_n) || declared_n < 0)
        throw ParseError(line_no, "malformed header: " + std::string(line));
      continue;
    }
    header_allowed = false;

    std::size_t sep = line.find_first_of(" \t");
    int u = 0, v = 0;
    if (sep == std::string_view::npos || !parse_int(line.substr(0, sep), u))
      throw ParseError(line_no, "malformed line: " + std::string(line));
    std::string_view rest = line.substr(sep);
    std::size_t vb = rest.find_first_not_of(" \t");
    if (vb == std::string_view::npos || !parse_int(rest.substr(vb), v))
      throw ParseError(line_no, "malformed line: " + std::string(line));

    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
      throw ParseError(line_no, "vertex id " + std::to_string(std::max(u, v)) +
                                    " >= declared n = " + std::to_string(declared_n));
    Graph::Edge edge{std::min(u, v), std::max(u, v)};
    if (!seen.insert(edge).second)
      throw ParseError(line_no, "duplicate edge " + edge_name(edge.first, edge.second));
    max_id = std::max({max_id, u, v});
    edges.push_back(edge);
  }

  int n = declared_n >= 0 ? declared_n : max_id + 1;
  return Graph(n, std::move(edges));
}

}  // namespace

Graph Graph::parse(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b != std::string_view::npos && text[b] == '{') return parse_json_document(text);
  return parse_edge_list(text);
}

Graph Graph::ring(int n) {
  if (n < 3) throw std::invalid_argument("ring needs at least 3 vertices");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph Graph::complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

Graph Graph::erdos_renyi(int n, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < edge_prob) edges.emplace_back(u, v);
    }
  return Graph(n, std::move(edges));
}

EdgeLocalEnv edge_local_env(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("edge " + edge_name(u, v) + " not in graph");
  EdgeLocalEnv env;
  env.d = g.degree(u) - 1;
  env.e = g.degree(v) - 1;
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++env.f;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return env;
}

EdgeClassTable classify_edges(const Graph& g) {
  EdgeClassTable table;
  for (const auto& [u, v] : g.edges()) {
    EdgeLocalEnv env = edge_local_env(g, u, v);
    EdgeClass key{std::min(env.d, env.e), std::max(env.d, env.e), env.f};
    ++table[key];
  }
  return table;
}

}  // namespace qaoa
