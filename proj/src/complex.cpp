#include "homolocal/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace homolocal {

std::size_t SimplicialComplex::VectorHash::operator()(const std::vector<VertexId>& v) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (VertexId x : v)
    {
        h ^= x;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::size_t SimplicialComplex::count(int d) const
{
    if (d < 0 || d > dimension())
        return 0;
    return sealed_[d].size();
}

std::size_t SimplicialComplex::size() const
{
    std::size_t n = 0;
    for (const auto& s : sealed_)
        n += s.size();
    return n;
}

std::span<const VertexId> SimplicialComplex::vertices(int d, Index i) const
{
    const std::size_t stride = static_cast<std::size_t>(d) + 1;
    return {vertices_[d].data() + i * stride, stride};
}

std::span<const Index> SimplicialComplex::facets(int d, Index i) const
{
    assert(d >= 1);
    const std::size_t stride = static_cast<std::size_t>(d) + 1;
    return {facets_[d].data() + i * stride, stride};
}

std::optional<Index> SimplicialComplex::find(std::span<const VertexId> sorted_vertices) const
{
    const int d = static_cast<int>(sorted_vertices.size()) - 1;
    if (d < 0 || d > dimension())
        return std::nullopt;
    const std::vector<VertexId> key(sorted_vertices.begin(), sorted_vertices.end());
    const auto it = index_[d].find(key);
    if (it == index_[d].end())
        return std::nullopt;
    return it->second;
}

std::optional<VertexId> SimplicialComplex::vertex_of_label(VertexLabel label) const
{
    const auto it = label_index_.find(label);
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<VertexLabel> SimplicialComplex::labels_of(int d, Index i) const
{
    std::vector<VertexLabel> out;
    for (VertexId v : vertices(d, i))
        out.push_back(labels_[v]);
    return out;
}

SparseZ2Matrix SimplicialComplex::boundary_matrix(int d) const
{
    if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "boundary matrix needs d >= 1");
    SparseZ2Matrix m(count(d - 1), count(d));
    for (Index j = 0; j < count(d); ++j)
    {
        const auto f = facets(d, j);
        m.set_column(j, SparseZ2Matrix::Column(f.begin(), f.end()));
    }
    return m;
}

Chain SimplicialComplex::boundary(const Chain& chain) const
{
    Chain out{chain.dim - 1, {}};
    if (chain.dim < 1)
        return out;
    std::vector<Index> all;
    for (Index s : chain.simplices)
    {
        const auto f = facets(chain.dim, s);
        all.insert(all.end(), f.begin(), f.end());
    }
    std::sort(all.begin(), all.end());
    // Keep the indices that occur an odd number of times.
    for (std::size_t i = 0; i < all.size();)
    {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.simplices.push_back(all[i]);
        i = j;
    }
    return out;
}

std::vector<VertexId> SimplicialComplex::support_vertices(const Chain& chain) const
{
    std::vector<VertexId> out;
    for (Index s : chain.simplices)
    {
        const auto vs = vertices(chain.dim, s);
        out.insert(out.end(), vs.begin(), vs.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SimplicialComplex::has_sealed_simplices() const
{
    for (const auto& flags : sealed_)
        if (std::any_of(flags.begin(), flags.end(), [](std::uint8_t f) { return f != 0; }))
            return true;
    return false;
}

std::vector<SimplexRef> SimplicialComplex::maximal_simplices() const
{
    std::vector<std::vector<std::uint8_t>> is_face(sealed_.size());
    for (int d = 0; d <= dimension(); ++d)
        is_face[d].assign(count(d), 0);
    for (int d = 1; d <= dimension(); ++d)
        for (Index i = 0; i < count(d); ++i)
            for (Index f : facets(d, i))
                is_face[d - 1][f] = 1;
    std::vector<SimplexRef> out;
    for (int d = 0; d <= dimension(); ++d)
        for (Index i = 0; i < count(d); ++i)
            if (!is_face[d][i])
                out.push_back({d, i});
    return out;
}

ComplexBuilder::ComplexBuilder(SimplicialComplex base) : complex_(std::move(base))
{
    for (VertexLabel l : complex_.labels_)
        next_label_ = std::max(next_label_, l + 1);
}

VertexId ComplexBuilder::intern(VertexLabel label)
{
    if (label < 0)
        throw Error(ErrorKind::ParseError, "vertex ids must be non-negative");
    auto [it, inserted] = complex_.label_index_.try_emplace(label, static_cast<VertexId>(complex_.labels_.size()));
    if (inserted)
    {
        complex_.labels_.push_back(label);
        next_label_ = std::max(next_label_, label + 1);
    }
    return it->second;
}

VertexId ComplexBuilder::new_vertex(bool sealed)
{
    const VertexId v = intern(next_label_);
    insert({v}, sealed);
    return v;
}

Index ComplexBuilder::insert(std::vector<VertexId> sorted, bool sealed)
{
    auto& c = complex_;
    const int d = static_cast<int>(sorted.size()) - 1;
    while (c.dimension() < d)
    {
        c.vertices_.emplace_back();
        c.facets_.emplace_back();
        c.sealed_.emplace_back();
        c.index_.emplace_back();
    }
    if (const auto it = c.index_[d].find(sorted); it != c.index_[d].end())
        return it->second;

    // Faces first, so that facet indices exist.
    std::vector<Index> facet_ids;
    if (d >= 1)
    {
        facet_ids.reserve(sorted.size());
        for (std::size_t skip = 0; skip < sorted.size(); ++skip)
        {
            std::vector<VertexId> face;
            face.reserve(sorted.size() - 1);
            for (std::size_t k = 0; k < sorted.size(); ++k)
                if (k != skip)
                    face.push_back(sorted[k]);
            facet_ids.push_back(insert(std::move(face), sealed));
        }
    }

    const auto index = static_cast<Index>(c.sealed_[d].size());
    c.vertices_[d].insert(c.vertices_[d].end(), sorted.begin(), sorted.end());
    if (d >= 1)
    {
        // Facet k omits vertex k; store them ordered by face index instead.
        std::sort(facet_ids.begin(), facet_ids.end());
        c.facets_[d].insert(c.facets_[d].end(), facet_ids.begin(), facet_ids.end());
    }
    c.sealed_[d].push_back(sealed ? 1 : 0);
    if (d == 0)
    {
        if (c.adjacency_.size() <= sorted[0])
            c.adjacency_.resize(sorted[0] + 1);
    }
    if (d == 1)
    {
        c.adjacency_[sorted[0]].push_back({sorted[1], index});
        c.adjacency_[sorted[1]].push_back({sorted[0], index});
    }
    c.index_[d].emplace(std::move(sorted), index);
    return index;
}

void ComplexBuilder::add_dense(std::vector<VertexId> vertices, bool sealed)
{
    if (vertices.empty())
        throw Error(ErrorKind::InvalidArgument, "a simplex needs at least one vertex");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw Error(ErrorKind::InvalidArgument, "repeated vertex in simplex");
    while (complex_.labels_.size() <= vertices.back())
        intern(next_label_);

    // Lower dimensions first; lexicographic subsets within a dimension.
    const std::size_t n = vertices.size();
    for (std::size_t k = 1; k < n; ++k)
    {
        std::vector<std::uint8_t> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
        do
        {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i])
                    face.push_back(vertices[i]);
            insert(std::move(face), sealed);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    insert(std::move(vertices), sealed);
}

void ComplexBuilder::add(std::span<const VertexLabel> labels, bool sealed)
{
    if (labels.empty())
        throw Error(ErrorKind::InvalidArgument, "a simplex needs at least one vertex");
    std::vector<VertexLabel> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::ParseError, "repeated vertex in simplex");
    std::vector<VertexId> ids;
    ids.reserve(sorted.size());
    for (VertexLabel l : sorted)
        ids.push_back(intern(l));
    add_dense(std::move(ids), sealed);
}

SimplicialComplex ComplexBuilder::build() &&
{
    for (auto& adj : complex_.adjacency_)
        std::sort(adj.begin(), adj.end(), [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
    complex_.adjacency_.resize(complex_.labels_.size());
    return std::move(complex_);
}

SimplicialComplex build_complex(const std::vector<std::vector<VertexLabel>>& maximal_simplices)
{
    if (maximal_simplices.empty())
        throw Error(ErrorKind::EmptyInput, "no simplices given");
    ComplexBuilder builder;
    for (const auto& s : maximal_simplices)
    {
        if (s.empty())
            throw Error(ErrorKind::InvalidArgument, "empty simplex in input");
        builder.add(std::span<const VertexLabel>(s));
    }
    return std::move(builder).build();
}

std::vector<Distance> hop_distances(const SimplicialComplex& complex, VertexId source)
{
    std::vector<Distance> dist(complex.num_vertices(), Distance::infinity());
    if (complex.is_sealed_vertex(source))
        return dist;
    dist[source] = Distance(0);
    std::deque<VertexId> queue{source};
    while (!queue.empty())
    {
        const VertexId u = queue.front();
        queue.pop_front();
        const std::uint32_t next = dist[u].value() + 1;
        for (const auto& n : complex.neighbors(u))
        {
            if (complex.is_sealed(1, n.edge) || dist[n.vertex].is_finite())
                continue;
            dist[n.vertex] = Distance(next);
            queue.push_back(n.vertex);
        }
    }
    return dist;
}

FilterAssignment geodesic_filter(const SimplicialComplex& complex, VertexId source)
{
    if (source >= complex.num_vertices())
        throw Error(ErrorKind::InvalidArgument, "source vertex out of range");
    if (complex.is_sealed_vertex(source))
        throw Error(ErrorKind::SealedCenter, "geodesic filter centered at a sealed vertex");

    FilterAssignment f;
    f.source = source;
    f.vertex_values = hop_distances(complex, source);
    f.simplex_values.resize(static_cast<std::size_t>(complex.dimension() + 1));
    for (int d = 0; d <= complex.dimension(); ++d)
    {
        auto& values = f.simplex_values[d];
        values.resize(complex.count(d));
        for (Index i = 0; i < complex.count(d); ++i)
        {
            if (complex.is_sealed(d, i))
            {
                values[i] = Distance::infinity();
                continue;
            }
            Distance m(0);
            for (VertexId v : complex.vertices(d, i))
                m = std::max(m, f.vertex_values[v]);
            values[i] = m;
        }
    }
    return f;
}

std::size_t SubcomplexMask::count(int d) const
{
    if (d < 0 || static_cast<std::size_t>(d) >= member.size())
        return 0;
    return static_cast<std::size_t>(std::count(member[d].begin(), member[d].end(), std::uint8_t{1}));
}

std::size_t SubcomplexMask::size() const
{
    std::size_t n = 0;
    for (std::size_t d = 0; d < member.size(); ++d)
        n += count(static_cast<int>(d));
    return n;
}

SubcomplexMask geodesic_ball(const SimplicialComplex& complex, const FilterAssignment& filter,
                             Distance radius)
{
    SubcomplexMask mask;
    mask.member.resize(static_cast<std::size_t>(complex.dimension() + 1));
    for (int d = 0; d <= complex.dimension(); ++d)
    {
        auto& m = mask.member[d];
        m.resize(complex.count(d));
        for (Index i = 0; i < complex.count(d); ++i)
        {
            const Distance v = filter.value(d, i);
            m[i] = (v.is_finite() && v <= radius) ? 1 : 0;
        }
    }
    return mask;
}

bool is_face_closed(const SimplicialComplex& complex, const SubcomplexMask& mask)
{
    for (int d = 1; d <= complex.dimension(); ++d)
        for (Index i = 0; i < complex.count(d); ++i)
        {
            if (!mask.contains(d, i))
                continue;
            for (Index f : complex.facets(d, i))
                if (!mask.contains(d - 1, f))
                    return false;
        }
    return true;
}

bool carries(const SubcomplexMask& mask, const Chain& chain)
{
    if (chain.empty())
        return true;
    if (chain.dim < 0 || static_cast<std::size_t>(chain.dim) >= mask.member.size())
        return false;
    return std::all_of(chain.simplices.begin(), chain.simplices.end(),
                       [&](Index s) { return mask.contains(chain.dim, s); });
}

std::vector<std::vector<VertexId>> skeleton_components(const SimplicialComplex& complex)
{
    const std::size_t n = complex.num_vertices();
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::vector<VertexId>> components;
    for (VertexId root = 0; root < n; ++root)
    {
        if (seen[root] || complex.is_sealed_vertex(root))
            continue;
        std::vector<VertexId> comp{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (const auto& nb : complex.neighbors(comp[head]))
            {
                if (complex.is_sealed(1, nb.edge) || seen[nb.vertex])
                    continue;
                seen[nb.vertex] = 1;
                comp.push_back(nb.vertex);
            }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::size_t betti_number(const SimplicialComplex& complex, int d)
{
    if (d < 0 || d > complex.dimension())
        return 0;
    const std::size_t rank_d = d >= 1 ? rank_sparse(complex.boundary_matrix(d)) : 0;
    const std::size_t rank_up = d + 1 <= complex.dimension() ? rank_sparse(complex.boundary_matrix(d + 1)) : 0;
    return complex.count(d) - rank_d - rank_up;
}

}  // namespace homolocal
