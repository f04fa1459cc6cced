#include "pns/topology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pns {

Topology::Topology(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("topology needs at least one vertex");
  adj_.assign(static_cast<size_t>(n_) + 1, {});
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges_) {
    if (u < 1 || u > n_ || v < 1 || v > n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop edge " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  // BFS per source. Neighbors are expanded in descending index order, which
  // fixes one canonical shortest path per pair.
  dist_.assign(static_cast<size_t>(n_) + 1, std::vector<int>(static_cast<size_t>(n_) + 1, -1));
  pred_.assign(static_cast<size_t>(n_) + 1, std::vector<int>(static_cast<size_t>(n_) + 1, 0));
  for (int s = 1; s <= n_; ++s) {
    auto& dist = dist_[static_cast<size_t>(s)];
    auto& pred = pred_[static_cast<size_t>(s)];
    std::deque<int> queue{s};
    dist[static_cast<size_t>(s)] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      const auto& nb = adj_[static_cast<size_t>(x)];
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
        if (dist[static_cast<size_t>(*it)] < 0) {
          dist[static_cast<size_t>(*it)] = dist[static_cast<size_t>(x)] + 1;
          pred[static_cast<size_t>(*it)] = x;
          queue.push_back(*it);
        }
      }
    }
    for (int v = 1; v <= n_; ++v) {
      if (dist[static_cast<size_t>(v)] < 0) {
        // collect components for the error message
        std::vector<int> comp_id(static_cast<size_t>(n_) + 1, 0);
        int comps = 0;
        for (int r = 1; r <= n_; ++r) {
          if (comp_id[static_cast<size_t>(r)] != 0) continue;
          ++comps;
          std::deque<int> q2{r};
          comp_id[static_cast<size_t>(r)] = comps;
          while (!q2.empty()) {
            int x = q2.front();
            q2.pop_front();
            for (int y : adj_[static_cast<size_t>(x)]) {
              if (comp_id[static_cast<size_t>(y)] == 0) {
                comp_id[static_cast<size_t>(y)] = comps;
                q2.push_back(y);
              }
            }
          }
        }
        std::string msg = "graph is disconnected (" + std::to_string(comps) + " components):";
        for (int k = 1; k <= comps; ++k) {
          msg += " {";
          bool first = true;
          for (int r = 1; r <= n_; ++r) {
            if (comp_id[static_cast<size_t>(r)] == k) {
              if (!first) msg += ",";
              msg += std::to_string(r);
              first = false;
            }
          }
          msg += "}";
        }
        throw std::invalid_argument(msg);
      }
    }
  }
}

Topology Topology::grid(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("degenerate grid size");
  std::vector<std::pair<int, int>> edges;
  auto id = [width](int row, int col) { return row * width + col + 1; };
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (c + 1 < width) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < height) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Topology(width * height, std::move(edges));
}

Topology Topology::line(int n) {
  if (n < 2) throw std::invalid_argument("line needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Topology(n, std::move(edges));
}

Topology Topology::ring(int n) {
  if (n < 3) throw std::invalid_argument("ring needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return Topology(n, std::move(edges));
}

Topology Topology::complete(int n) {
  if (n < 2) throw std::invalid_argument("complete graph needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Topology(n, std::move(edges));
}

Topology Topology::from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (n < 0) {
      long value = 0;
      if (tok != "n" || !(ls >> value) || value < 1) {
        throw std::runtime_error("graph line " + std::to_string(lineno) +
                                 ": expected 'n <count>'");
      }
      n = static_cast<int>(value);
      continue;
    }
    int u = 0, v = 0;
    try {
      size_t used = 0;
      u = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("trailing");
      if (!(ls >> v)) throw std::invalid_argument("missing endpoint");
    } catch (const std::exception&) {
      throw std::runtime_error("graph line " + std::to_string(lineno) +
                               ": expected 'u v' edge");
    }
    std::string extra;
    if (ls >> extra) {
      throw std::runtime_error("graph line " + std::to_string(lineno) + ": trailing tokens");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::runtime_error("graph: missing 'n <count>' line");
  try {
    return Topology(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("graph: ") + e.what());
  }
}

Topology Topology::from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("bad architecture spec '" + spec +
                                "' (want grid:WxH, line:N, ring:N, complete:N or file:PATH)");
  }
  std::string kind = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad architecture spec '" + spec + "'");
    }
  };
  if (kind == "grid") {
    auto x = arg.find('x');
    if (x == std::string::npos) throw std::invalid_argument("bad architecture spec '" + spec + "'");
    return grid(parse_int(arg.substr(0, x)), parse_int(arg.substr(x + 1)));
  }
  if (kind == "line") return line(parse_int(arg));
  if (kind == "ring") return ring(parse_int(arg));
  if (kind == "complete") return complete(parse_int(arg));
  if (kind == "file") {
    std::ifstream f(arg);
    if (!f) throw std::runtime_error("cannot open graph file '" + arg + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return from_edge_list(buf.str());
  }
  throw std::invalid_argument("unknown architecture kind '" + kind + "'");
}

const std::vector<int>& Topology::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

bool Topology::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Topology::distance(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return dist_[static_cast<size_t>(u)][static_cast<size_t>(v)];
}

std::vector<int> Topology::path(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  std::vector<int> p;
  for (int x = v; x != u; x = pred_[static_cast<size_t>(u)][static_cast<size_t>(x)]) {
    p.push_back(x);
  }
  p.push_back(u);
  std::reverse(p.begin(), p.end());
  return p;
}

void Topology::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex index out of range");
}

}  // namespace pns
