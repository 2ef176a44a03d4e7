#pragma once

#include <cstdint>
#include <vector>

#include "homolocal/complex.hpp"
#include "homolocal/z2.hpp"

namespace homolocal {

/// One representative cycle per class of some basis of H_d.
struct BasisCycles
{
    int dim = 0;
    std::vector<Chain> cycles;

    std::size_t betti() const { return cycles.size(); }
};

/// Center and radius of the smallest ball carrying a nontrivial class.
struct BallChoice
{
    VertexId center = 0;
    std::uint32_t radius = 0;

    bool operator==(const BallChoice&) const = default;
};

/// Size of the smallest class, the ball center, and a cycle it carries.
struct Measurement
{
    std::uint32_t size = 0;
    Chain cycle;
    VertexId center = 0;
};

enum class BminMode
{
    Naive,
    Improved,
};

enum class RankMethod
{
    /// Randomized rank when the smaller matrix side is at most
    /// `RankOptions::auto_limit`, exact sparse elimination otherwise.
    Auto,
    Randomized,
    Exact,
};

struct RankOptions
{
    RankMethod method = RankMethod::Auto;
    std::uint64_t seed = 0;
    int trials = 20;
    std::size_t auto_limit = 256;
};

/// Counters for the randomized carriage test.
struct Diagnostics
{
    std::uint64_t carriage_tests = 0;
    std::uint64_t randomized_ranks = 0;
    std::uint64_t exact_ranks = 0;
    std::uint64_t rank_rechecks = 0;
    std::uint64_t rank_escalations = 0;
    std::uint64_t rank_unresolved = 0;

    Diagnostics& operator+=(const Diagnostics& other);
};

struct MeasureOptions
{
    BminMode mode = BminMode::Improved;
    std::uint64_t seed = 0;
    int trials = 20;
    RankMethod rank_method = RankMethod::Auto;
    /// Worker threads for the naive search; 0 means hardware concurrency.
    unsigned threads = 0;
    /// Use the filter-sorted reduction for d = 1 localized cycles.
    bool onedim_modified = false;
};

/// Reduced column basis of B_d = im(boundary_{d+1}), for membership tests.
class BoundarySpace
{
  public:
    BoundarySpace(const SimplicialComplex& complex, int d);

    /// True iff the d-chain is a boundary.
    bool bounds(const Chain& chain) const;
    std::size_t rank() const { return space_.rank(); }

  private:
    ColumnSpace space_;
};

/**
 * Representatives of a basis of H_d.  Cycle candidates come from reducing
 * the boundary matrix of dimension d; a candidate is kept when it is
 * independent of the boundaries and of the cycles kept so far.
 */
BasisCycles precompute_basis_cycles(const SimplicialComplex& complex, int d);

/**
 * Exhaustive search: persistence from every non-sealed vertex, keeping the
 * least first-essential birth.  Ties go to the smallest vertex label.
 * Throws NoNontrivialClass when beta_d = 0.
 */
BallChoice bmin_naive(const SimplicialComplex& complex, int d, unsigned threads = 0);

/**
 * Whether the subcomplex carries a d-cycle that is nonbounding in the whole
 * complex, by comparing ranks of the basis and boundary matrices restricted
 * to the rows of simplices outside the subcomplex.
 */
bool contains_nonbounding(const SimplicialComplex& complex, const SubcomplexMask& subcomplex,
                          const BasisCycles& basis, const RankOptions& options,
                          Diagnostics* diagnostics = nullptr);

/**
 * Breadth-first search from the smallest non-sealed vertex of each
 * component, shrinking the running radius by one whenever the ball of radius
 * r-1 at the next vertex carries a nonbounding cycle.
 */
BallChoice bmin_improved(const SimplicialComplex& complex, int d, const BasisCycles& basis,
                         const RankOptions& options, Diagnostics* diagnostics = nullptr);

/**
 * A nonbounding d-cycle carried by the ball: first cycle (in reduction order)
 * of the column-reduced boundary restricted to the ball that does not bound.
 * Throws InternalInconsistency if the ball carries none.
 */
Chain localized_cycle(const SimplicialComplex& complex, int d, BallChoice ball);

/// Bmin followed by localized_cycle.  Throws NoNontrivialClass when beta_d = 0.
Measurement measure_smallest(const SimplicialComplex& complex, int d, const MeasureOptions& options,
                             Diagnostics* diagnostics = nullptr);

/// min over non-sealed centers of the largest hop distance to a vertex of z.
Distance cycle_radius(const SimplicialComplex& complex, const Chain& chain);

}  // namespace homolocal
