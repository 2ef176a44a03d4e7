#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homolocal/complex.hpp"

/// Brute-force ground truth for desk-sized complexes.  Everything here uses
/// dense Gaussian elimination and plain enumeration, sharing no code with
/// the reduction and rank kernels it is used to check.
namespace homolocal::oracle {

/// Dense bit vector over Z2.
class Bits
{
  public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    Bits& operator^=(const Bits& o);
    bool none() const;
    std::optional<std::size_t> highest() const;
    std::vector<Index> ones() const;
    bool operator==(const Bits&) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

Bits to_bits(const Chain& chain, std::size_t n);

/// Basis of the null space of the dense matrix whose columns are given.
std::vector<Bits> null_space(const std::vector<Bits>& columns);

/**
 * Homology coordinates: fixes a basis of H_d and maps any d-cycle to the
 * bit vector of its class (bit i = coefficient of basis class i).
 */
class ClassCoordinates
{
  public:
    ClassCoordinates(const SimplicialComplex& complex, int d);

    std::size_t betti() const { return representatives_.size(); }
    int dim() const { return dim_; }
    /// Cycle basis of Z_d found by dense elimination.
    const std::vector<Bits>& cycle_basis() const { return cycles_; }
    /// Basis of B_d.
    const std::vector<Bits>& boundary_basis() const { return boundaries_; }
    const std::vector<Bits>& representatives() const { return representatives_; }

    /// Class of a d-cycle; throws NotACycle for chains with boundary.
    std::uint32_t class_of(const Chain& cycle) const;
    std::uint32_t class_of(const Bits& cycle) const;

  private:
    struct Row
    {
        Bits vec;
        std::uint32_t tag;
    };

    const SimplicialComplex* complex_;
    int dim_;
    std::vector<Bits> cycles_;
    std::vector<Bits> boundaries_;
    std::vector<Bits> representatives_;
    std::vector<Row> echelon_;                 // reduced [boundaries | representatives]
    std::vector<std::size_t> pivot_;           // highest bit -> echelon row, or npos
};

/// The cycle closing the forest path between the endpoints of `edge`.
Chain fundamental_cycle(const SimplicialComplex& complex, const std::vector<std::uint8_t>& forest_edge,
                        Index edge);

/// Every d-cycle (2^dim Z_d of them).  Throws TooLarge past dim Z_d = 20.
std::vector<Chain> enumerate_cycles(const SimplicialComplex& complex, int d);

/// Hop distances between all vertex pairs over non-sealed edges.
std::vector<std::vector<Distance>> all_pairs_distances(const SimplicialComplex& complex);

/// min over non-sealed centers of the max distance to the chain's vertices.
Distance chain_radius(const SimplicialComplex& complex, const std::vector<std::vector<Distance>>& dist,
                      const Chain& chain);
/// max distance between two vertices of the chain.
Distance chain_diameter(const SimplicialComplex& complex, const std::vector<std::vector<Distance>>& dist,
                        const Chain& chain);

/**
 * Size of every homology class by exhaustive scan over balls (p, r): the
 * classes carried by a ball are the span of the classes of its cycles.
 * Entry h is the least radius of a ball carrying class h (entry 0 unused).
 */
std::vector<std::optional<std::uint32_t>> class_sizes(const SimplicialComplex& complex, int d);

/// Classes carried by the ball B_p^r, as the list of class vectors in its span.
std::vector<std::uint32_t> carried_classes(const SimplicialComplex& complex, const ClassCoordinates& coords,
                                           const SubcomplexMask& ball);

/// S(h) for the class of z.  Throws InvalidArgument if z bounds.
std::uint32_t brute_size(const SimplicialComplex& complex, int d, const Chain& z);

/**
 * Greedy over all nonzero classes in increasing size, keeping those
 * independent of the ones kept.  Returns the sorted size multiset.  Throws
 * TooLarge when beta_d > 4.
 */
std::vector<std::uint32_t> brute_optimal_basis(const SimplicialComplex& complex, int d);

/**
 * Whether the subcomplex carries a d-cycle nonbounding in the complex, by
 * enumerating every cycle it carries.  Throws TooLarge past 2^20 cycles.
 */
bool carries_nonbounding(const SimplicialComplex& complex, const SubcomplexMask& subcomplex, int d);

/// Minimum diameter over the class of z, by enumerating z + B_d.
/// Throws TooLarge when dim B_d > 20.
std::uint32_t min_class_diameter(const SimplicialComplex& complex, const Chain& z);

}  // namespace homolocal::oracle
