#include "pns/arborescence.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace pns {

namespace {

constexpr long long kNoArc = std::numeric_limits<long long>::max() / 4;

// Chu-Liu/Edmonds on a dense arc matrix with a fixed root. Returns the
// parent of every non-root vertex (parent[root] = -1). Ties always resolve
// to the lowest source index, and cycles are contracted in discovery order,
// so the result is deterministic.
std::vector<int> edmonds_fixed_root(int count, int root,
                                    std::vector<std::vector<long long>> w) {
  std::vector<int> best(static_cast<size_t>(count), -1);
  for (int v = 0; v < count; ++v) {
    if (v == root) continue;
    long long min_w = kNoArc;
    for (int u = 0; u < count; ++u) {
      if (u != v && w[static_cast<size_t>(u)][static_cast<size_t>(v)] < min_w) {
        min_w = w[static_cast<size_t>(u)][static_cast<size_t>(v)];
        best[static_cast<size_t>(v)] = u;
      }
    }
    if (best[static_cast<size_t>(v)] < 0) {
      throw std::invalid_argument("no arborescence: vertex with no incoming arc");
    }
  }

  // Look for a cycle among the chosen arcs.
  std::vector<int> mark(static_cast<size_t>(count), -1);
  std::vector<int> cycle;
  for (int v = 0; v < count && cycle.empty(); ++v) {
    int x = v;
    while (x != root && mark[static_cast<size_t>(x)] < 0) {
      mark[static_cast<size_t>(x)] = v;
      x = best[static_cast<size_t>(x)];
    }
    if (x != root && mark[static_cast<size_t>(x)] == v) {
      for (int y = best[static_cast<size_t>(x)]; ; y = best[static_cast<size_t>(y)]) {
        cycle.push_back(y);
        if (y == x) break;
      }
    }
  }
  if (cycle.empty()) {
    best[static_cast<size_t>(root)] = -1;
    return best;
  }

  // Contract the cycle into a single node and recurse on the smaller graph.
  std::vector<bool> in_cycle(static_cast<size_t>(count), false);
  for (int v : cycle) in_cycle[static_cast<size_t>(v)] = true;

  std::vector<int> to_new(static_cast<size_t>(count), -1);
  std::vector<int> to_old;
  for (int v = 0; v < count; ++v) {
    if (!in_cycle[static_cast<size_t>(v)]) {
      to_new[static_cast<size_t>(v)] = static_cast<int>(to_old.size());
      to_old.push_back(v);
    }
  }
  int cnode = static_cast<int>(to_old.size());
  int new_count = cnode + 1;

  std::vector<std::vector<long long>> nw(
      static_cast<size_t>(new_count),
      std::vector<long long>(static_cast<size_t>(new_count), kNoArc));
  // entry_via[u'] = cycle vertex the arc u -> cycle enters through
  std::vector<int> entry_via(static_cast<size_t>(new_count), -1);
  // exit_via[v'] = cycle vertex the arc cycle -> v leaves from
  std::vector<int> exit_via(static_cast<size_t>(new_count), -1);

  for (int u = 0; u < count; ++u) {
    for (int v = 0; v < count; ++v) {
      long long arc = w[static_cast<size_t>(u)][static_cast<size_t>(v)];
      if (u == v || arc >= kNoArc) continue;
      bool uc = in_cycle[static_cast<size_t>(u)];
      bool vc = in_cycle[static_cast<size_t>(v)];
      if (!uc && !vc) {
        nw[static_cast<size_t>(to_new[static_cast<size_t>(u)])]
          [static_cast<size_t>(to_new[static_cast<size_t>(v)])] = arc;
      } else if (!uc && vc) {
        long long reduced =
            arc - w[static_cast<size_t>(best[static_cast<size_t>(v)])][static_cast<size_t>(v)];
        int nu = to_new[static_cast<size_t>(u)];
        if (reduced < nw[static_cast<size_t>(nu)][static_cast<size_t>(cnode)]) {
          nw[static_cast<size_t>(nu)][static_cast<size_t>(cnode)] = reduced;
          entry_via[static_cast<size_t>(nu)] = v;
        }
      } else if (uc && !vc) {
        int nv = to_new[static_cast<size_t>(v)];
        if (arc < nw[static_cast<size_t>(cnode)][static_cast<size_t>(nv)]) {
          nw[static_cast<size_t>(cnode)][static_cast<size_t>(nv)] = arc;
          exit_via[static_cast<size_t>(nv)] = u;
        }
      }
    }
  }

  std::vector<int> sub = edmonds_fixed_root(new_count, to_new[static_cast<size_t>(root)],
                                            std::move(nw));

  std::vector<int> parent(static_cast<size_t>(count), -1);
  int entered_at = -1;
  for (int nv = 0; nv < new_count; ++nv) {
    int p = sub[static_cast<size_t>(nv)];
    if (p < 0) continue;
    if (nv == cnode) {
      // arc into the contracted node: it replaces one cycle arc
      int u = to_old[static_cast<size_t>(p)];
      entered_at = entry_via[static_cast<size_t>(p)];
      parent[static_cast<size_t>(entered_at)] = u;
    } else if (p == cnode) {
      parent[static_cast<size_t>(to_old[static_cast<size_t>(nv)])] =
          exit_via[static_cast<size_t>(nv)];
    } else {
      parent[static_cast<size_t>(to_old[static_cast<size_t>(nv)])] =
          to_old[static_cast<size_t>(p)];
    }
  }
  for (int v : cycle) {
    if (v != entered_at) parent[static_cast<size_t>(v)] = best[static_cast<size_t>(v)];
  }
  return parent;
}

}  // namespace

long long ParityGraph::arc(int from_vertex, int to_vertex) const {
  auto pos = [this](int v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw std::out_of_range("vertex not in graph");
    return static_cast<size_t>(it - vertices.begin());
  };
  return weight[pos(from_vertex)][pos(to_vertex)];
}

ParityGraph build_parity_graph(const ParityTable& table, int slot) {
  return build_parity_graph(table, table.column_support(slot), table.live_mask());
}

ParityGraph build_parity_graph(const ParityTable& table, const std::vector<int>& support_set,
                               const BitVec& mask) {
  if (support_set.empty()) {
    throw std::invalid_argument("parity graph needs a nonempty support");
  }
  ParityGraph g;
  g.vertices = support_set;
  std::sort(g.vertices.begin(), g.vertices.end());
  size_t k = g.vertices.size();
  g.weight.assign(k, std::vector<long long>(k, 0));
  std::vector<int> row_h(k);
  for (size_t a = 0; a < k; ++a) row_h[a] = table.row_weight(g.vertices[a], mask);
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = a + 1; b < k; ++b) {
      int hx = table.xor_row_weight(g.vertices[a], g.vertices[b], mask);
      g.weight[a][b] = hx - row_h[b];
      g.weight[b][a] = hx - row_h[a];
    }
  }
  return g;
}

long long arborescence_weight(const ParityGraph& graph, const Arborescence& a) {
  long long total = 0;
  for (auto [v, p] : a.parent) total += graph.arc(p, v);
  return total;
}

Arborescence min_weight_spanning_arborescence(const ParityGraph& graph) {
  size_t k = graph.vertices.size();
  if (k == 0) throw std::invalid_argument("empty parity graph");
  if (k == 1) return Arborescence{graph.vertices[0], {}};

  // Virtual super-root with uniform arcs heavier than any possible total,
  // so the optimum uses exactly one of them; its head is the real root.
  long long abs_sum = 1;
  for (const auto& row : graph.weight) {
    for (long long w : row) abs_sum += std::llabs(w);
  }
  long long virtual_w = 2 * abs_sum + 1;

  int count = static_cast<int>(k) + 1;
  int root = static_cast<int>(k);
  std::vector<std::vector<long long>> w(
      static_cast<size_t>(count), std::vector<long long>(static_cast<size_t>(count), kNoArc));
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = 0; b < k; ++b) {
      if (a != b) w[a][b] = graph.weight[a][b];
    }
    w[static_cast<size_t>(root)][a] = virtual_w;
  }

  std::vector<int> parent = edmonds_fixed_root(count, root, std::move(w));
  Arborescence result;
  result.root = -1;
  for (size_t v = 0; v < k; ++v) {
    int p = parent[v];
    if (p == root) {
      result.root = graph.vertices[v];
    } else {
      result.parent[graph.vertices[v]] = graph.vertices[static_cast<size_t>(p)];
    }
  }
  if (result.root < 0) throw std::logic_error("branching used no virtual arc");
  return result;
}

std::vector<Arborescence> enumerate_arborescences(std::vector<int> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty vertex set");
  if (vertices.size() > 7) {
    throw std::invalid_argument("enumeration guarded to at most 7 vertices");
  }
  std::sort(vertices.begin(), vertices.end());
  size_t k = vertices.size();
  std::vector<Arborescence> out;

  for (size_t r = 0; r < k; ++r) {
    std::vector<size_t> others;
    for (size_t v = 0; v < k; ++v) {
      if (v != r) others.push_back(v);
    }
    // odometer over parent choices, filtered for reachability of the root
    std::vector<size_t> choice(others.size(), 0);
    while (true) {
      bool valid = true;
      std::vector<size_t> parent_of(k, k);
      for (size_t i = 0; i < others.size(); ++i) {
        // choice skips the vertex itself; any other vertex can be the parent
        size_t candidate = choice[i] < others[i] ? choice[i] : choice[i] + 1;
        parent_of[others[i]] = candidate;
      }
      for (size_t v = 0; v < k && valid; ++v) {
        size_t x = v;
        size_t steps = 0;
        while (x != r && steps <= k) {
          x = parent_of[x];
          ++steps;
        }
        if (x != r) valid = false;
      }
      if (valid) {
        Arborescence a;
        a.root = vertices[r];
        for (size_t i = 0; i < others.size(); ++i) {
          a.parent[vertices[others[i]]] = vertices[parent_of[others[i]]];
        }
        out.push_back(std::move(a));
      }
      size_t pos = 0;
      while (pos < choice.size()) {
        if (++choice[pos] < k - 1) break;
        choice[pos] = 0;
        ++pos;
      }
      if (pos == choice.size()) break;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> traversal_sequence(const Arborescence& a) {
  std::map<int, std::vector<int>> children;
  for (auto [v, p] : a.parent) children[p].push_back(v);  // ascending by map order

  std::vector<std::pair<int, int>> seq;
  // explicit stack postorder
  std::vector<std::pair<int, bool>> stack{{a.root, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      if (v != a.root) seq.emplace_back(v, a.parent.at(v));
      continue;
    }
    stack.emplace_back(v, true);
    auto it = children.find(v);
    if (it != children.end()) {
      for (auto cit = it->second.rbegin(); cit != it->second.rend(); ++cit) {
        stack.emplace_back(*cit, false);
      }
    }
  }
  return seq;
}

}  // namespace pns
