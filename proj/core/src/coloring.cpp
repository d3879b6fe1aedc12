#include "coverideal/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "coverideal/budget.hpp"

namespace coverideal {

namespace {

// vertices in descending degree order; ties by index
std::vector<int> search_order(const Hypergraph& h) {
  std::vector<int> degree(h.vertex_count(), 0);
  for (const std::vector<int>& e : h.edges())
    for (int v : e) ++degree[v];
  std::vector<int> order(h.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[a] != degree[b] ? degree[a] > degree[b] : a < b;
  });
  return order;
}

struct ColorSearch {
  const Hypergraph& h;
  int palette;
  std::vector<int> order;
  std::vector<int> color;                       // -1 while unassigned
  std::vector<std::vector<int>> incident;       // vertex -> edge ids

  ColorSearch(const Hypergraph& hh, int d) : h(hh), palette(d), order(search_order(hh)) {
    color.assign(h.vertex_count(), -1);
    incident.resize(h.vertex_count());
    for (int e = 0; e < h.edge_count(); ++e)
      for (int v : h.edges()[e]) incident[v].push_back(e);
  }

  // would coloring v with c complete a monochromatic edge?
  bool feasible(int v, int c) const {
    for (int e : incident[v]) {
      bool all_same = true;
      for (int w : h.edges()[e]) {
        if (w == v) continue;
        if (color[w] != c) {
          all_same = false;
          break;
        }
      }
      if (all_same) return false;
    }
    return true;
  }

  bool run(std::size_t k, int max_used) {
    if (k == order.size()) return true;
    const int v = order[k];
    const int cap = std::min(palette - 1, max_used + 1);  // fresh colors are interchangeable
    for (int c = 0; c <= cap; ++c) {
      if (!feasible(v, c)) continue;
      color[v] = c;
      if (run(k + 1, std::max(max_used, c))) return true;
      color[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool is_proper(const Hypergraph& h, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != h.vertex_count())
    throw std::invalid_argument("assignment does not cover all vertices");
  if (c.fold < 1 || c.palette < c.fold) throw std::invalid_argument("invalid palette");
  for (const std::vector<int>& set : c.assignment) {
    if (static_cast<int>(set.size()) != c.fold)
      throw std::invalid_argument("color set has the wrong size");
    if (!std::is_sorted(set.begin(), set.end()) ||
        std::adjacent_find(set.begin(), set.end()) != set.end())
      throw std::invalid_argument("color set must be sorted and duplicate-free");
    if (set.front() < 0 || set.back() >= c.palette)
      throw std::invalid_argument("color out of palette");
  }
  for (const std::vector<int>& e : h.edges()) {
    std::vector<int> common = c.assignment[e[0]];
    for (std::size_t k = 1; k < e.size() && !common.empty(); ++k) {
      std::vector<int> next;
      std::set_intersection(common.begin(), common.end(), c.assignment[e[k]].begin(),
                            c.assignment[e[k]].end(), std::back_inserter(next));
      common = std::move(next);
    }
    if (!common.empty()) return false;
  }
  return true;
}

int chromatic_number(const Hypergraph& h) {
  if (h.edges().empty()) return 1;
  const int n = h.vertex_count();
  for (int d = 2; d < n; ++d) {
    ColorSearch search(h, d);
    if (search.run(0, -1)) return d;
  }
  return n;  // distinct colors are always proper for edges of size >= 2
}

namespace {

struct FoldSearch {
  const Hypergraph& g;
  int palette;
  int fold;
  std::vector<int> order;
  std::vector<std::uint64_t> adjacent;  // adjacency masks
  std::vector<std::uint64_t> used;      // color mask per vertex, 0 while unassigned

  FoldSearch(const Hypergraph& gg, int d, int b)
      : g(gg), palette(d), fold(b), order(search_order(gg)) {
    adjacent.assign(g.vertex_count(), 0);
    for (const std::vector<int>& e : g.edges()) {
      adjacent[e[0]] |= std::uint64_t{1} << e[1];
      adjacent[e[1]] |= std::uint64_t{1} << e[0];
    }
    used.assign(g.vertex_count(), 0);
  }

  bool run(std::size_t k) {
    if (k == order.size()) return true;
    const int v = order[k];
    std::uint64_t blocked = 0;
    for (int w = 0; w < g.vertex_count(); ++w)
      if (adjacent[v] >> w & 1) blocked |= used[w];
    std::uint64_t allowed = 0;
    for (int c = 0; c < palette; ++c)
      if (!(blocked >> c & 1)) allowed |= std::uint64_t{1} << c;
    if (k == 0) allowed = (std::uint64_t{1} << fold) - 1;  // palette symmetry
    return pick(k, v, allowed, 0, fold);
  }

  bool pick(std::size_t k, int v, std::uint64_t allowed, int from, int remaining) {
    if (remaining == 0) return run(k + 1);
    for (int c = from; c <= palette - remaining; ++c) {
      if (!(allowed >> c & 1)) continue;
      used[v] |= std::uint64_t{1} << c;
      if (pick(k, v, allowed, c + 1, remaining - 1)) return true;
      used[v] &= ~(std::uint64_t{1} << c);
    }
    return false;
  }
};

}  // namespace

int b_fold_chromatic(const Hypergraph& g, int b) {
  if (!is_graph(g)) throw std::invalid_argument("b-fold coloring requires a graph");
  if (b < 1) throw std::invalid_argument("fold must be positive");
  if (g.vertex_count() > 12 || b > 4)
    throw BudgetExceeded("b-fold search limited to n <= 12 and b <= 4");
  const int upper = b * chromatic_number(g);  // disjoint copies of an optimal coloring
  for (int d = b; d < upper; ++d) {
    FoldSearch search(g, d, b);
    if (search.run(0)) return d;
  }
  return upper;
}

bool is_critically_chromatic(const Hypergraph& h, int d) {
  if (chromatic_number(h) != d) return false;
  if (h.vertex_count() == 1) return true;  // no vertex-deleted subhypergraphs to lower
  for (int v = 0; v < h.vertex_count(); ++v) {
    std::vector<int> rest;
    for (int w = 0; w < h.vertex_count(); ++w)
      if (w != v) rest.push_back(w);
    if (chromatic_number(induced(h, rest)) >= d) return false;
  }
  return true;
}

bool is_independent(const Hypergraph& h, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  for (const std::vector<int>& e : h.edges())
    if (std::includes(vs.begin(), vs.end(), e.begin(), e.end())) return false;
  return true;
}

bool is_vertex_cover(const Hypergraph& h, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  for (const std::vector<int>& e : h.edges()) {
    bool hit = std::any_of(e.begin(), e.end(), [&](int v) {
      return std::binary_search(vs.begin(), vs.end(), v);
    });
    if (!hit) return false;
  }
  return true;
}

}  // namespace coverideal
