#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "homolocal/complex.hpp"

namespace homolocal {

/// A complex read from disk, with vertex coordinates when the source had them.
struct LoadedComplex
{
    SimplicialComplex complex;
    /// Indexed by vertex label; present only for OFF input.
    std::optional<std::vector<std::array<double, 3>>> coordinates;
};

/**
 * `.cplx` text: one maximal simplex per line as whitespace-separated
 * non-negative vertex ids.  Blank lines and lines starting with `#` are
 * skipped.
 */
LoadedComplex read_cplx(std::istream& in);

/**
 * OFF mesh: `OFF` header, `nv nf ne` counts, nv coordinate lines, then nf
 * faces `3 i j k`.  Faces with any other vertex count are rejected.  Every
 * declared vertex becomes a 0-simplex.
 */
LoadedComplex read_off(std::istream& in);

/// Dispatches on the first token of the file: `OFF` selects the mesh reader.
LoadedComplex load_complex(const std::filesystem::path& path);

/// Writes the maximal non-sealed simplices, one per line, by vertex label.
void write_cplx(std::ostream& out, const SimplicialComplex& complex);

}  // namespace homolocal
