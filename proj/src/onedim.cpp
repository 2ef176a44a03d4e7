#include "homolocal/onedim.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "homolocal/oracle.hpp"

namespace homolocal {

bool is_lower_edge(const SimplicialComplex& complex, const FilterAssignment& filter, Index edge)
{
    const auto vs = complex.vertices(1, edge);
    return filter.vertex_values[vs[0]] != filter.vertex_values[vs[1]];
}

Chain localized_cycle_1d(const SimplicialComplex& complex, BallChoice ball)
{
    const auto filter = geodesic_filter(complex, ball.center);
    const auto mask = geodesic_ball(complex, filter, Distance(ball.radius));

    std::vector<Index> rows;
    for (Index v = 0; v < complex.count(0); ++v)
        if (mask.contains(0, v))
            rows.push_back(v);
    std::stable_sort(rows.begin(), rows.end(),
                     [&](Index a, Index b) { return filter.vertex_values[a] < filter.vertex_values[b]; });
    std::vector<Index> row_position(complex.count(0), 0);
    for (std::size_t k = 0; k < rows.size(); ++k)
        row_position[rows[k]] = static_cast<Index>(k);

    auto min_endpoint = [&](Index e) {
        const auto vs = complex.vertices(1, e);
        return std::min(filter.vertex_values[vs[0]], filter.vertex_values[vs[1]]);
    };
    std::vector<Index> columns;
    for (Index e = 0; e < complex.count(1); ++e)
        if (mask.contains(1, e))
            columns.push_back(e);
    std::stable_sort(columns.begin(), columns.end(), [&](Index a, Index b) {
        if (filter.value(1, a) != filter.value(1, b))
            return filter.value(1, a) < filter.value(1, b);
        return min_endpoint(a) < min_endpoint(b);
    });

    SparseZ2Matrix sorted(rows.size(), 0);
    for (Index e : columns)
    {
        SparseZ2Matrix::Column col;
        for (VertexId v : complex.vertices(1, e))
            col.push_back(row_position[v]);
        sorted.append_column(std::move(col));
    }
    const auto reduction = column_reduce(sorted);

    const BoundarySpace boundaries(complex, 1);
    for (std::size_t j = 0; j < columns.size(); ++j)
    {
        if (reduction.low[j])
            continue;
        Chain z{1, {}};
        for (Index k : reduction.transform.column(j))
            z.simplices.push_back(columns[k]);
        std::sort(z.simplices.begin(), z.simplices.end());
        if (!boundaries.bounds(z))
            return z;
    }
    throw Error(ErrorKind::InternalInconsistency,
                "ball of radius " + std::to_string(ball.radius) + " carries no nonbounding 1-cycle");
}

std::uint32_t shortest_cycle_size_oracle(const SimplicialComplex& complex, const Chain& z)
{
    if (z.dim != 1)
        throw Error(ErrorKind::InvalidArgument, "shortest cycle oracle is for 1-cycles");
    const oracle::ClassCoordinates coords(complex, 1);
    const std::size_t beta = coords.betti();
    const std::size_t n = complex.num_vertices();
    if (beta >= 20 || n > (std::size_t{1} << (20 - beta)))
        throw Error(ErrorKind::TooLarge, "class cover too large to enumerate");
    const std::uint32_t target = coords.class_of(z);
    if (target == 0)
        throw Error(ErrorKind::InvalidArgument, "chain is a boundary");

    // Spanning forest of the 1-skeleton.
    const std::size_t classes = std::size_t{1} << beta;
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::uint32_t> edge_label(complex.count(1), 0);
    std::vector<std::uint8_t> tree_edge(complex.count(1), 0);
    for (VertexId root = 0; root < n; ++root)
    {
        if (seen[root])
            continue;
        seen[root] = 1;
        std::deque<VertexId> queue{root};
        while (!queue.empty())
        {
            const VertexId u = queue.front();
            queue.pop_front();
            for (const auto& nb : complex.neighbors(u))
            {
                if (seen[nb.vertex])
                    continue;
                seen[nb.vertex] = 1;
                tree_edge[nb.edge] = 1;
                queue.push_back(nb.vertex);
            }
        }
    }
    // A non-tree edge closes a fundamental cycle; its label is that cycle's
    // class.  Tree edges carry label zero, so a closed walk's label sum is
    // the class of the cycle it traces.
    for (Index e = 0; e < complex.count(1); ++e)
    {
        if (tree_edge[e])
            continue;
        edge_label[e] = coords.class_of(oracle::fundamental_cycle(complex, tree_edge, e));
    }

    // Shortest closed walk realizing each class.
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> walk(classes, kInf);
    std::vector<std::uint32_t> dist(n * classes);
    for (VertexId s = 0; s < n; ++s)
    {
        std::fill(dist.begin(), dist.end(), kInf);
        dist[s * classes] = 0;
        std::deque<std::pair<VertexId, std::uint32_t>> queue{{s, 0}};
        while (!queue.empty())
        {
            const auto [u, c] = queue.front();
            queue.pop_front();
            const std::uint32_t du = dist[u * classes + c];
            for (const auto& nb : complex.neighbors(u))
            {
                const std::uint32_t c2 = c ^ edge_label[nb.edge];
                auto& slot = dist[nb.vertex * classes + c2];
                if (slot != kInf)
                    continue;
                slot = du + 1;
                queue.push_back({nb.vertex, c2});
            }
        }
        for (std::size_t c = 1; c < classes; ++c)
            walk[c] = std::min(walk[c], dist[s * classes + c]);
    }

    // A shortest chain is an edge-disjoint union of closed walks: shortest
    // paths over the class group with one step per walk.
    std::vector<std::uint32_t> best(classes, kInf);
    std::vector<std::uint8_t> done(classes, 0);
    best[0] = 0;
    for (std::size_t round = 0; round < classes; ++round)
    {
        std::size_t h = classes;
        for (std::size_t k = 0; k < classes; ++k)
            if (!done[k] && best[k] != kInf && (h == classes || best[k] < best[h]))
                h = k;
        if (h == classes)
            break;
        done[h] = 1;
        for (std::size_t c = 1; c < classes; ++c)
            if (walk[c] != kInf)
                best[h ^ c] = std::min(best[h ^ c], best[h] + walk[c]);
    }
    return best[target];
}

}  // namespace homolocal
