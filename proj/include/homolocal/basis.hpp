#pragma once

#include <cstdint>
#include <vector>

#include "homolocal/complex.hpp"
#include "homolocal/measure.hpp"

namespace homolocal {

/// What one sealing round added to the complex.
struct SealRecord
{
    VertexId vertex = 0;
    /// Number of new simplices per dimension (index 0 is the cone vertex).
    std::vector<std::size_t> added;
};

struct BasisResult
{
    int dim = 0;
    /// beta_d of the input complex.
    std::size_t betti = 0;
    /// One measurement per round, sizes nondecreasing.
    std::vector<Measurement> classes;
    std::vector<SealRecord> seal_log;
    Diagnostics diagnostics;
    /// The input with every chosen cycle coned off.
    SimplicialComplex sealed;
};

/**
 * Cone off a cycle: a new sealed vertex v and, for every simplex s of z,
 * the sealed simplex s + v with all of its new faces.  z bounds afterwards.
 * Throws NotACycle when z has a boundary and SealedInput when z uses a
 * sealed simplex.
 */
SimplicialComplex seal_cycle(const SimplicialComplex& complex, const Chain& z, SealRecord* record = nullptr);

/**
 * Greedy optimal basis of H_d: measure the smallest class, seal its cycle,
 * repeat until no class is left.
 */
BasisResult measure_all(const SimplicialComplex& complex, int d, const MeasureOptions& options);

}  // namespace homolocal
