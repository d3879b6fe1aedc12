#include "coverideal/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace coverideal {

namespace {

using Mask = std::uint64_t;

// Transversal enumeration: branch on the vertices of the first uncovered edge,
// banning earlier branch vertices from the subtree so each minimal cover is
// reached once. Non-minimal covers can still appear; the caller filters.
struct CoverSearch {
  const std::vector<Mask>& edges;
  std::vector<Mask> found;

  void run(Mask cover, Mask banned) {
    const Mask* open = nullptr;
    for (const Mask& e : edges) {
      if (!(e & cover)) {
        open = &e;
        break;
      }
    }
    if (!open) {
      found.push_back(cover);
      return;
    }
    if (!(*open & ~banned)) return;  // every branch vertex banned: dead end
    Mask earlier = 0;
    for (int v = 0; v < 64; ++v) {
      if (!(*open >> v & 1)) continue;
      if (!(banned >> v & 1)) run(cover | (Mask{1} << v), banned | earlier);
      earlier |= Mask{1} << v;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> minimal_vertex_covers(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > 62) throw std::invalid_argument("cover enumeration limited to 62 vertices");
  std::vector<Mask> edges;
  edges.reserve(h.edges().size());
  for (const std::vector<int>& e : h.edges()) {
    Mask m = 0;
    for (int v : e) m |= Mask{1} << v;
    edges.push_back(m);
  }

  CoverSearch search{edges, {}};
  search.run(0, 0);

  // keep the inclusion-minimal ones
  std::sort(search.found.begin(), search.found.end(),
            [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  std::vector<Mask> minimal;
  for (Mask c : search.found) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](Mask kept) { return (kept & ~c) == 0; });
    if (!redundant) minimal.push_back(c);
  }

  std::vector<std::vector<int>> covers;
  covers.reserve(minimal.size());
  for (Mask c : minimal) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (c >> v & 1) vs.push_back(v);
    covers.push_back(std::move(vs));
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

MonomialIdeal cover_ideal(const Hypergraph& h) {
  std::vector<Monomial> gens;
  for (const std::vector<int>& cover : minimal_vertex_covers(h))
    gens.push_back(Monomial::of_support(h.vertex_count(), cover));
  return MonomialIdeal(h.vertex_count(), std::move(gens));
}

MonomialIdeal edge_ideal(const Hypergraph& h) {
  std::vector<Monomial> gens;
  for (const std::vector<int>& e : h.edges())
    gens.push_back(Monomial::of_support(h.vertex_count(), e));
  return MonomialIdeal(h.vertex_count(), std::move(gens));
}

}  // namespace coverideal
