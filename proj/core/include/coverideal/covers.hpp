#pragma once

#include <vector>

#include "coverideal/hypergraph.hpp"
#include "coverideal/monomial.hpp"

namespace coverideal {

/// All inclusion-minimal vertex covers, each sorted, the list in lexicographic
/// order. The edgeless hypergraph has the single minimal cover {} (every
/// vertex set covers vacuously); isolated vertices appear in no cover.
std::vector<std::vector<int>> minimal_vertex_covers(const Hypergraph& h);

/// Squarefree ideal generated by the minimal vertex covers. Edgeless
/// hypergraphs give the unit ideal.
MonomialIdeal cover_ideal(const Hypergraph& h);

/// Squarefree ideal generated by the edges. Edgeless hypergraphs give the
/// zero ideal.
MonomialIdeal edge_ideal(const Hypergraph& h);

}  // namespace coverideal
