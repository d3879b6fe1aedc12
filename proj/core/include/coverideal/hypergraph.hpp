#pragma once

#include <compare>
#include <string>
#include <vector>

#include "coverideal/monomial.hpp"

namespace coverideal {

/// What to do with nested edges at construction time.
enum class EdgePolicy {
  Strict,      // reject an edge properly contained in another
  Minimalize,  // keep only inclusion-minimal edges
};

/// Finite simple hypergraph on vertices 0..n-1. Edges are sorted vertex lists
/// of size >= 2 forming an inclusion antichain, stored in lexicographic order.
/// User-facing labels are 1-based (vertex i prints as x{i+1}); everything
/// internal is 0-based. Instances are immutable after construction.
class Hypergraph {
 public:
  explicit Hypergraph(int n) : n_(n) { check_vertex_count(n); }
  Hypergraph(int n, std::vector<std::vector<int>> edges,
             EdgePolicy policy = EdgePolicy::Minimalize);

  int vertex_count() const { return n_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool operator==(const Hypergraph&) const = default;

 private:
  static void check_vertex_count(int n);

  int n_ = 1;
  std::vector<std::vector<int>> edges_;
};

/// Induced subhypergraph on the given vertices: keeps the edges fully inside
/// the set and reindexes to 0..|vertices|-1 following their sorted order.
Hypergraph induced(const Hypergraph& h, std::vector<int> vertices);

bool is_graph(const Hypergraph& h);  // every edge has size 2

std::vector<int> isolated_vertices(const Hypergraph& h);

// Graph-only queries below throw std::invalid_argument on a non-graph.
Hypergraph complement(const Hypergraph& g);
std::vector<int> neighbors(const Hypergraph& g, int v);
bool is_clique(const Hypergraph& g, const std::vector<int>& vertices);
bool is_simplicial(const Hypergraph& g, int v);

/// Vertex x_{base, shadow} of an expansion; both indices 0-based.
struct ExpansionVertex {
  int base = 0;
  int shadow = 0;
  auto operator<=>(const ExpansionVertex&) const = default;
};

/// s-th expansion H^s: every vertex x_i is replaced by shadows x_{i,0..s-1},
/// shadows of one vertex form a clique, and every base edge lifts to all
/// combinations of one shadow per member. Expansion vertex (i, j) has index
/// i*s + j in the expanded hypergraph.
struct ExpandedHypergraph {
  int order = 1;
  Hypergraph base;
  Hypergraph expanded;
  std::vector<ExpansionVertex> vertices;  // lexicographic by (base, shadow)

  int index_of(int base_vertex, int shadow) const { return base_vertex * order + shadow; }
};

ExpandedHypergraph expansion(const Hypergraph& h, int s);

/// Collapse a monomial on the expansion's variables back to the base ring:
/// the exponent of x_i is the sum over the exponents of its shadows.
Monomial depolarize(const ExpandedHypergraph& e, const Monomial& m);

std::string vertex_label(int v);                      // "x3"
std::string vertex_label(const ExpansionVertex& v);   // "x3_2"

}  // namespace coverideal
