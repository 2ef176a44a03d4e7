#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "homolocal/complex.hpp"

namespace homolocal {

/**
 * Filtration order of all simplices: nondecreasing filter value, ties by
 * dimension then by stable simplex index.  Infinite values come last.
 */
struct SimplexOrdering
{
    std::vector<SimplexRef> order;
    /// position[d][i] is the place of simplex (d, i) in `order`.
    std::vector<std::vector<std::size_t>> position;
};

SimplexOrdering simplex_ordering(const SimplicialComplex& complex, const FilterAssignment& filter);

struct PersistencePair
{
    SimplexRef birth;
    SimplexRef death;
};

struct EssentialSimplex
{
    SimplexRef simplex;
    Distance birth;
};

struct PersistencePairing
{
    std::vector<PersistencePair> pairs;
    std::vector<EssentialSimplex> essential;

    /// Essential simplices of one dimension.
    std::size_t essential_count(int d) const;
};

/**
 * Pairing from the reduced boundary matrices, one dimension at a time, with
 * rows and columns in filtration order.
 */
PersistencePairing persistence_pairs(const SimplicialComplex& complex, const FilterAssignment& filter);

/**
 * Smallest finite birth value over essential d-simplices, i.e. the radius of
 * the smallest ball around the filter's source that carries a nonbounding
 * d-cycle.  Absent when no such class is born at a finite value.
 */
std::optional<std::uint32_t> first_essential_birth(const SimplicialComplex& complex,
                                                   const FilterAssignment& filter, int d);

/// Lines `dim birth death`, with `inf` for essential classes.
void write_pairing(std::ostream& out, const FilterAssignment& filter, const PersistencePairing& pairing);

}  // namespace homolocal
