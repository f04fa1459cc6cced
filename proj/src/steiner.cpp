#include "pns/steiner.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace pns {

namespace {

struct TmState {
  SteinerTree tree;
  std::vector<int> uncovered;  // ascending
};

TmState tm_seed(std::vector<int> terminals, const Topology& topo) {
  if (terminals.empty()) throw std::invalid_argument("empty terminal set");
  std::sort(terminals.begin(), terminals.end());
  if (std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end()) {
    throw std::invalid_argument("duplicate terminal");
  }
  for (int t : terminals) {
    if (t < 1 || t > topo.vertex_count()) throw std::out_of_range("unknown terminal vertex");
  }
  TmState s;
  s.tree.terminals = terminals;
  s.tree.vertices.push_back(terminals.front());
  s.uncovered.assign(terminals.begin() + 1, terminals.end());
  return s;
}

// One attachment step: connect the closest uncovered terminal through the
// canonical shortest path. Returns the number of edges added.
int tm_step(TmState& s, const Topology& topo) {
  int best_len = -1, best_u = -1, best_v = -1;
  for (int v : s.uncovered) {
    for (int u : s.tree.vertices) {
      int len = topo.path_vertex_count(u, v);
      bool better = best_len < 0 || len < best_len ||
                    (len == best_len && (v < best_v || (v == best_v && u > best_u)));
      if (better) {
        best_len = len;
        best_u = u;
        best_v = v;
      }
    }
  }
  std::vector<int> p = topo.path(best_u, best_v);
  for (size_t i = 1; i < p.size(); ++i) {
    s.tree.edges.emplace_back(p[i - 1], p[i]);
    auto pos = std::lower_bound(s.tree.vertices.begin(), s.tree.vertices.end(), p[i]);
    s.tree.vertices.insert(pos, p[i]);
  }
  s.uncovered.erase(std::find(s.uncovered.begin(), s.uncovered.end(), best_v));
  return static_cast<int>(p.size()) - 1;
}

}  // namespace

std::vector<int> SteinerTree::steiner_nodes() const {
  std::vector<int> out;
  std::set_difference(vertices.begin(), vertices.end(), terminals.begin(), terminals.end(),
                      std::back_inserter(out));
  return out;
}

bool SteinerTree::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

SteinerTree steiner_tree(std::vector<int> terminals, const Topology& topo) {
  TmState s = tm_seed(std::move(terminals), topo);
  while (!s.uncovered.empty()) tm_step(s, topo);
  return std::move(s.tree);
}

std::vector<std::pair<int, int>> fill_in(const SteinerTree& tree) {
  std::vector<int> steiner = tree.steiner_nodes();
  std::set<int> open(steiner.begin(), steiner.end());
  std::set<int> covered(tree.terminals.begin(), tree.terminals.end());

  // tree adjacency
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : tree.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

  std::vector<std::pair<int, int>> pairs;
  while (!open.empty()) {
    int leaf = -1, partner = -1;
    for (int u : open) {
      int open_degree = 0;
      int lowest_covered = -1;
      for (int w : adj[u]) {
        if (open.count(w)) {
          ++open_degree;
        } else if (covered.count(w) && lowest_covered < 0) {
          lowest_covered = w;
        }
      }
      if (open_degree <= 1 && lowest_covered >= 0) {
        leaf = u;
        partner = lowest_covered;
        break;
      }
    }
    if (leaf < 0) throw std::logic_error("fill-in found no eligible leaf");
    pairs.emplace_back(leaf, partner);
    open.erase(leaf);
    covered.insert(leaf);
  }
  return pairs;
}

long long steiner_cost(const std::vector<int>& terminals, const Topology& topo) {
  SteinerTree t = steiner_tree(terminals, topo);
  return 2 * static_cast<long long>(t.vertices.size()) -
         static_cast<long long>(t.terminals.size()) - 1;
}

std::vector<KSteinerResult> k_min_steiner_trees(
    const std::vector<std::vector<int>>& terminal_sets, const Topology& topo, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");

  struct Instance {
    TmState state;
    long long cost = 0;
  };
  std::vector<Instance> inst;
  inst.reserve(terminal_sets.size());
  for (const auto& s : terminal_sets) inst.push_back({tm_seed(s, topo), 0});

  std::vector<KSteinerResult> out;
  // buckets[c] = instances sitting at accumulated cost c, in push order
  std::vector<std::vector<int>> buckets(1);
  for (int i = 0; i < static_cast<int>(inst.size()); ++i) buckets[0].push_back(i);

  for (size_t cost = 0; cost < buckets.size(); ++cost) {
    // a step adds at least 1, so the current bucket never grows while
    // it is being drained
    for (size_t q = 0; q < buckets[cost].size(); ++q) {
      int i = buckets[cost][q];
      Instance& in = inst[static_cast<size_t>(i)];
      if (in.state.uncovered.empty()) {
        out.push_back({in.cost, i, in.state.tree});
        if (static_cast<int>(out.size()) == k) return out;
        continue;
      }
      int d = tm_step(in.state, topo);
      in.cost += 2 * d - 1;
      size_t next = static_cast<size_t>(in.cost);
      if (next >= buckets.size()) buckets.resize(next + 1);
      buckets[next].push_back(i);
    }
  }
  return out;
}

int exact_steiner_tree_size(const std::vector<int>& terminals, const Topology& topo) {
  std::vector<int> s(terminals);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw std::invalid_argument("empty terminal set");

  std::vector<int> optional;
  for (int v = 1; v <= topo.vertex_count(); ++v) {
    if (!std::binary_search(s.begin(), s.end(), v)) optional.push_back(v);
  }
  if (optional.size() > 10) {
    throw std::invalid_argument("exact oracle guarded to 2^10 subsets");
  }

  auto connected = [&](const std::vector<int>& verts) {
    std::set<int> in(verts.begin(), verts.end());
    std::vector<int> stack{verts.front()};
    std::set<int> seen{verts.front()};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : topo.neighbors(x)) {
        if (in.count(y) && !seen.count(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
      }
    }
    return seen.size() == in.size();
  };

  int best = topo.vertex_count() + 1;
  for (uint32_t mask = 0; mask < (uint32_t{1} << optional.size()); ++mask) {
    std::vector<int> verts(s);
    for (size_t b = 0; b < optional.size(); ++b) {
      if (mask >> b & 1u) verts.push_back(optional[b]);
    }
    if (static_cast<int>(verts.size()) >= best) continue;
    if (connected(verts)) best = static_cast<int>(verts.size());
  }
  if (best > topo.vertex_count()) throw std::logic_error("no connected superset found");
  return best;
}

Arborescence orient_tree(const SteinerTree& tree, int root) {
  if (!tree.contains(root)) throw std::invalid_argument("root not in tree");
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : tree.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Arborescence a;
  a.root = root;
  std::vector<int> stack{root};
  std::set<int> seen{root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (seen.insert(y).second) {
        a.parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  if (a.parent.size() + 1 != tree.vertices.size()) {
    throw std::invalid_argument("tree edges do not span its vertices");
  }
  return a;
}

}  // namespace pns
