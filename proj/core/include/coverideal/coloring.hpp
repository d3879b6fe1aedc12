#pragma once

#include <vector>

#include "coverideal/hypergraph.hpp"

namespace coverideal {

/// Assignment of `fold` distinct colors from the palette 0..palette-1 to each
/// vertex; assignment[v] is sorted and duplicate-free. fold = 1 is an ordinary
/// coloring.
struct Coloring {
  int palette = 0;
  int fold = 1;
  std::vector<std::vector<int>> assignment;
};

/// Proper iff no single color appears in the color set of every vertex of an
/// edge. For ordinary colorings this forbids monochromatic edges; for graphs
/// with fold > 1 it makes adjacent color sets disjoint.
bool is_proper(const Hypergraph& h, const Coloring& c);

/// Least d admitting a proper ordinary d-coloring; exhaustive backtracking.
/// Edgeless hypergraphs have chromatic number 1.
int chromatic_number(const Hypergraph& h);

/// Least palette size admitting a proper b-fold coloring of a graph.
/// Desk-scale only (n <= 12, b <= 4); throws BudgetExceeded beyond that.
int b_fold_chromatic(const Hypergraph& g, int b);

/// chromatic_number(h) == d and deleting any single vertex lowers it.
bool is_critically_chromatic(const Hypergraph& h, int d);

bool is_independent(const Hypergraph& h, const std::vector<int>& vertices);  // no edge inside
bool is_vertex_cover(const Hypergraph& h, const std::vector<int>& vertices); // meets every edge

}  // namespace coverideal
