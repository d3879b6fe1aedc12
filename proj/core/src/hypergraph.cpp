#include "coverideal/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace coverideal {

void Hypergraph::check_vertex_count(int n) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges, EdgePolicy policy) : n_(n) {
  check_vertex_count(n);
  for (std::vector<int>& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() < 2) throw std::invalid_argument("edge has fewer than two vertices");
    if (e.front() < 0 || e.back() >= n) throw std::invalid_argument("edge vertex out of range");
  }
  // exact duplicates collapse silently in both policies (edges form a set)
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // smaller edges first, so any nesting is seen as kept-inside-candidate
  std::stable_sort(edges.begin(), edges.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return a.size() < b.size();
                   });
  for (const std::vector<int>& e : edges) {
    bool nested = std::any_of(edges_.begin(), edges_.end(), [&](const std::vector<int>& kept) {
      return std::includes(e.begin(), e.end(), kept.begin(), kept.end());
    });
    if (nested) {
      if (policy == EdgePolicy::Strict)
        throw std::invalid_argument("nested edges are not allowed under the strict policy");
      continue;
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

Hypergraph induced(const Hypergraph& h, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw std::invalid_argument("induced vertex set is empty");
  if (vertices.front() < 0 || vertices.back() >= h.vertex_count())
    throw std::invalid_argument("induced vertex out of range");

  std::vector<int> position(h.vertex_count(), -1);
  for (int k = 0; k < static_cast<int>(vertices.size()); ++k) position[vertices[k]] = k;

  std::vector<std::vector<int>> edges;
  for (const std::vector<int>& e : h.edges()) {
    std::vector<int> mapped;
    mapped.reserve(e.size());
    for (int v : e) {
      if (position[v] < 0) break;
      mapped.push_back(position[v]);
    }
    if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
  }
  return Hypergraph(static_cast<int>(vertices.size()), std::move(edges));
}

bool is_graph(const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [](const std::vector<int>& e) { return e.size() == 2; });
}

std::vector<int> isolated_vertices(const Hypergraph& h) {
  std::vector<bool> covered(h.vertex_count(), false);
  for (const std::vector<int>& e : h.edges())
    for (int v : e) covered[v] = true;
  std::vector<int> isolated;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (!covered[v]) isolated.push_back(v);
  return isolated;
}

namespace {

void require_graph(const Hypergraph& h) {
  if (!is_graph(h)) throw std::invalid_argument("operation requires a graph");
}

}  // namespace

Hypergraph complement(const Hypergraph& g) {
  require_graph(g);
  std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (const std::vector<int>& e : g.edges()) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (!adj[i][j]) edges.push_back({i, j});
  return Hypergraph(g.vertex_count(), std::move(edges));
}

std::vector<int> neighbors(const Hypergraph& g, int v) {
  require_graph(g);
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  std::vector<int> out;
  for (const std::vector<int>& e : g.edges()) {
    if (e[0] == v) out.push_back(e[1]);
    if (e[1] == v) out.push_back(e[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique(const Hypergraph& g, const std::vector<int>& vertices) {
  require_graph(g);
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (!vs.empty() && (vs.front() < 0 || vs.back() >= g.vertex_count()))
    throw std::invalid_argument("vertex out of range");
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      std::vector<int> e = {vs[i], vs[j]};
      if (!std::binary_search(g.edges().begin(), g.edges().end(), e)) return false;
    }
  return true;
}

bool is_simplicial(const Hypergraph& g, int v) { return is_clique(g, neighbors(g, v)); }

ExpandedHypergraph expansion(const Hypergraph& h, int s) {
  if (s < 1) throw std::invalid_argument("expansion order must be positive");
  const int n = h.vertex_count();

  std::vector<ExpansionVertex> vertices;
  vertices.reserve(static_cast<std::size_t>(n) * s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < s; ++j) vertices.push_back({i, j});

  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = j + 1; k < s; ++k) edges.push_back({i * s + j, i * s + k});

  // all shadow lifts of every base edge, one shadow per member
  std::vector<int> choice;
  for (const std::vector<int>& e : h.edges()) {
    const int r = static_cast<int>(e.size());
    choice.assign(r, 0);
    while (true) {
      std::vector<int> lift(r);
      for (int t = 0; t < r; ++t) lift[t] = e[t] * s + choice[t];
      edges.push_back(std::move(lift));
      int t = r - 1;
      for (; t >= 0; --t) {
        if (++choice[t] < s) break;
        choice[t] = 0;
      }
      if (t < 0) break;
    }
  }

  ExpandedHypergraph out{s, h, Hypergraph(n * s, std::move(edges)), std::move(vertices)};
  return out;
}

Monomial depolarize(const ExpandedHypergraph& e, const Monomial& m) {
  const int n = e.base.vertex_count();
  if (m.size() != n * e.order)
    throw std::invalid_argument("monomial does not live on the expansion's vertices");
  std::vector<int> exps(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < e.order; ++j) exps[i] += m.exponents[e.index_of(i, j)];
  return Monomial(std::move(exps));
}

std::string vertex_label(int v) { return "x" + std::to_string(v + 1); }

std::string vertex_label(const ExpansionVertex& v) {
  return "x" + std::to_string(v.base + 1) + "_" + std::to_string(v.shadow + 1);
}

}  // namespace coverideal
