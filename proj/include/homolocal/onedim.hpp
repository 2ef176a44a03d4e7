#pragma once

#include <cstdint>

#include "homolocal/complex.hpp"
#include "homolocal/measure.hpp"

namespace homolocal {

/**
 * Localized 1-cycle from a filter-sorted reduction.
 *
 * Rows (vertices) of the ball's edge boundary matrix are sorted by geodesic
 * value from the ball center; columns (edges) by value, then by the smaller
 * endpoint value, then by index.  Every column that survives the reduction
 * is then a lower edge, so the returned cycle is one edge of value at most
 * r plus lower edges, at most 2r + 1 edges in total.
 */
Chain localized_cycle_1d(const SimplicialComplex& complex, BallChoice ball);

/// Whether an edge joins vertices at different distances from the source.
bool is_lower_edge(const SimplicialComplex& complex, const FilterAssignment& filter, Index edge);

/**
 * Exact length of the shortest 1-cycle homologous to z (S_E of its class).
 *
 * Breadth-first search over the cover of the 1-skeleton whose states are
 * (vertex, accumulated homology class) gives the shortest closed walk of
 * every class; shortest chains then follow by a shortest-path search over
 * the class group, adding one closed walk at a time.  Throws TooLarge when vertices * 2^beta_1 exceeds 2^20.
 */
std::uint32_t shortest_cycle_size_oracle(const SimplicialComplex& complex, const Chain& z);

}  // namespace homolocal
