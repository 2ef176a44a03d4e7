#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "homolocal/types.hpp"
#include "homolocal/z2.hpp"

namespace homolocal {

/// Reference to one simplex of a complex: its dimension and index within it.
struct SimplexRef
{
    int dim = 0;
    Index index = 0;

    auto operator<=>(const SimplexRef&) const = default;
};

/**
 * A finite abstract simplicial complex, closed under taking faces.
 *
 * Simplices are grouped by dimension and indexed contiguously within each
 * dimension in the order they were first encountered.  That order is the
 * tie-breaker used by every ordering downstream.  Vertices carry the label
 * they had in the input; internally they are renumbered densely.
 *
 * Simplices added by sealing (coning off a cycle) are flagged; they never
 * receive a finite geodesic value.
 *
 * Instances are immutable once built.
 */
class SimplicialComplex
{
  public:
    SimplicialComplex() = default;

    /// Highest simplex dimension, or -1 for the empty complex.
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }

    /// Number of d-simplices; zero for d outside [0, dimension()].
    std::size_t count(int d) const;

    /// Total number of simplices over all dimensions.
    std::size_t size() const;

    std::size_t num_vertices() const { return count(0); }

    /// Sorted dense vertex ids of a simplex.
    std::span<const VertexId> vertices(int d, Index i) const;
    std::span<const VertexId> vertices(SimplexRef s) const { return vertices(s.dim, s.index); }

    /// Indices of the (d-1)-faces of a d-simplex, d >= 1.
    std::span<const Index> facets(int d, Index i) const;

    bool is_sealed(int d, Index i) const { return sealed_[d][i] != 0; }
    bool is_sealed_vertex(VertexId v) const { return sealed_[0][v] != 0; }

    /// Look up a simplex by its sorted dense vertex ids.
    std::optional<Index> find(std::span<const VertexId> sorted_vertices) const;

    /// Adjacent vertices along edges, with the connecting edge index.
    struct Neighbor
    {
        VertexId vertex;
        Index edge;
    };
    std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_[v]; }

    VertexLabel label(VertexId v) const { return labels_[v]; }
    std::optional<VertexId> vertex_of_label(VertexLabel label) const;

    /// Labels of a simplex's vertices, in dense-id order.
    std::vector<VertexLabel> labels_of(int d, Index i) const;

    /// Column j holds the facets of d-simplex j; rows are (d-1)-simplices.
    SparseZ2Matrix boundary_matrix(int d) const;

    /// Boundary of a d-chain.
    Chain boundary(const Chain& chain) const;

    /// Sorted distinct vertex ids touched by a chain.
    std::vector<VertexId> support_vertices(const Chain& chain) const;

    bool has_sealed_simplices() const;

    /// Simplices that are not a face of any other simplex.
    std::vector<SimplexRef> maximal_simplices() const;

  private:
    friend class ComplexBuilder;

    struct VectorHash
    {
        std::size_t operator()(const std::vector<VertexId>& v) const noexcept;
    };

    // Per dimension: flattened vertex lists (stride d+1) and facet lists.
    std::vector<std::vector<VertexId>> vertices_;
    std::vector<std::vector<Index>> facets_;
    std::vector<std::vector<std::uint8_t>> sealed_;
    std::vector<std::unordered_map<std::vector<VertexId>, Index, VectorHash>> index_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<VertexLabel> labels_;
    std::unordered_map<VertexLabel, VertexId> label_index_;
};

/**
 * Incremental construction of a face-closed complex.  Adding a simplex adds
 * all of its faces (lower dimensions first, each dimension in lexicographic
 * order of vertex subsets).  Duplicates are collapsed.
 */
class ComplexBuilder
{
  public:
    ComplexBuilder() = default;
    /// Start from an existing complex; new simplices extend its indexing.
    explicit ComplexBuilder(SimplicialComplex base);

    /// Add a simplex given by user-facing vertex labels.
    void add(std::span<const VertexLabel> labels, bool sealed = false);
    void add(std::initializer_list<VertexLabel> labels, bool sealed = false)
    {
        add(std::span<const VertexLabel>(labels.begin(), labels.size()), sealed);
    }

    /// Add a simplex given by dense vertex ids; ids beyond the current
    /// vertex count create new vertices labelled max(label)+1, ...
    void add_dense(std::vector<VertexId> vertices, bool sealed = false);

    /// Create a fresh vertex with the next unused label.
    VertexId new_vertex(bool sealed);

    std::size_t num_vertices() const { return complex_.labels_.size(); }

    SimplicialComplex build() &&;

  private:
    VertexId intern(VertexLabel label);
    Index insert(std::vector<VertexId> sorted, bool sealed);

    SimplicialComplex complex_;
    VertexLabel next_label_ = 0;
};

/// Face closure of a list of maximal simplices given by vertex labels.
SimplicialComplex build_complex(const std::vector<std::vector<VertexLabel>>& maximal_simplices);

/**
 * Geodesic filter from a source vertex: hop distances in the non-sealed
 * 1-skeleton, extended to simplices by taking the maximum over vertices.
 */
struct FilterAssignment
{
    VertexId source = 0;
    std::vector<Distance> vertex_values;
    std::vector<std::vector<Distance>> simplex_values;  // [dim][index]

    Distance value(int d, Index i) const { return simplex_values[d][i]; }
    Distance value(SimplexRef s) const { return simplex_values[s.dim][s.index]; }
};

/// Unit-weight BFS distances from a vertex over non-sealed edges.
std::vector<Distance> hop_distances(const SimplicialComplex& complex, VertexId source);

FilterAssignment geodesic_filter(const SimplicialComplex& complex, VertexId source);

/// Membership mask over the simplices of a complex, by dimension.
struct SubcomplexMask
{
    std::vector<std::vector<std::uint8_t>> member;

    bool contains(int d, Index i) const { return member[d][i] != 0; }
    std::size_t count(int d) const;
    std::size_t size() const;
};

/// Simplices with filter value at most `radius`.
SubcomplexMask geodesic_ball(const SimplicialComplex& complex, const FilterAssignment& filter,
                             Distance radius);

/// Whether every face of every member is itself a member.
bool is_face_closed(const SimplicialComplex& complex, const SubcomplexMask& mask);

/// True iff every simplex of the chain lies in the mask.
bool carries(const SubcomplexMask& mask, const Chain& chain);

/**
 * Connected components of the non-sealed 1-skeleton.  Each component is a
 * sorted list of vertices; components are ordered by smallest member.
 * Sealed vertices belong to no component.
 */
std::vector<std::vector<VertexId>> skeleton_components(const SimplicialComplex& complex);

/// Z2 Betti number of dimension d, from exact boundary ranks.
std::size_t betti_number(const SimplicialComplex& complex, int d);

}  // namespace homolocal
