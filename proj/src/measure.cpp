#include "homolocal/measure.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "homolocal/onedim.hpp"
#include "homolocal/persistence.hpp"

namespace homolocal {

namespace {

constexpr std::size_t kDenseEscalationLimit = 4096;

void require_dimension(int d)
{
    if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "homology dimension must be at least 1");
}

std::vector<std::uint8_t> outside_rows(const SimplicialComplex& complex, const SubcomplexMask& mask, int d)
{
    std::vector<std::uint8_t> keep(complex.count(d), 1);
    if (static_cast<std::size_t>(d) < mask.member.size())
        for (Index i = 0; i < complex.count(d); ++i)
            keep[i] = mask.contains(d, i) ? 0 : 1;
    return keep;
}

/// Better ball: smaller radius, then smaller center label.
bool better(const SimplicialComplex& complex, const BallChoice& a, const BallChoice& b)
{
    if (a.radius != b.radius)
        return a.radius < b.radius;
    return complex.label(a.center) < complex.label(b.center);
}

struct RankPair
{
    std::size_t boundary = 0;
    std::size_t extended = 0;
};

RankPair exact_ranks(const SparseZ2Matrix& boundary, const SparseZ2Matrix& extended, bool dense)
{
    if (dense)
        return {rank_dense(boundary), rank_dense(extended)};
    // The extended matrix shares its leading columns with the boundary one.
    ColumnSpace space;
    for (const auto& c : boundary.columns())
        space.add(c);
    RankPair r{space.rank(), 0};
    for (std::size_t j = boundary.cols(); j < extended.cols(); ++j)
        space.add(extended.column(j));
    r.extended = space.rank();
    return r;
}

bool use_randomized(const RankOptions& options, const SparseZ2Matrix& m)
{
    switch (options.method)
    {
        case RankMethod::Randomized: return true;
        case RankMethod::Exact: return false;
        case RankMethod::Auto: return std::min(m.rows(), m.cols()) <= options.auto_limit;
    }
    return false;
}

}  // namespace

Diagnostics& Diagnostics::operator+=(const Diagnostics& other)
{
    carriage_tests += other.carriage_tests;
    randomized_ranks += other.randomized_ranks;
    exact_ranks += other.exact_ranks;
    rank_rechecks += other.rank_rechecks;
    rank_escalations += other.rank_escalations;
    rank_unresolved += other.rank_unresolved;
    return *this;
}

BoundarySpace::BoundarySpace(const SimplicialComplex& complex, int d)
{
    for (Index j = 0; j < complex.count(d + 1); ++j)
    {
        const auto f = complex.facets(d + 1, j);
        space_.add(SparseZ2Matrix::Column(f.begin(), f.end()));
    }
}

bool BoundarySpace::bounds(const Chain& chain) const
{
    return space_.contains(chain.simplices);
}

BasisCycles precompute_basis_cycles(const SimplicialComplex& complex, int d)
{
    BasisCycles result{d, {}};
    if (d < 0 || d > complex.dimension())
        return result;

    std::vector<Chain> candidates;
    if (d == 0)
    {
        for (Index v = 0; v < complex.count(0); ++v)
            candidates.push_back({0, {v}});
    }
    else
    {
        const auto reduction = column_reduce(complex.boundary_matrix(d));
        for (std::size_t j = 0; j < reduction.low.size(); ++j)
            if (!reduction.low[j])
                candidates.push_back({d, reduction.transform.column(j)});
    }

    ColumnSpace space;
    for (Index j = 0; j < complex.count(d + 1); ++j)
    {
        const auto f = complex.facets(d + 1, j);
        space.add(SparseZ2Matrix::Column(f.begin(), f.end()));
    }
    const std::size_t betti = candidates.size() - space.rank();
    for (auto& z : candidates)
    {
        if (result.cycles.size() == betti)
            break;
        if (space.add(z.simplices))
            result.cycles.push_back(std::move(z));
    }
    return result;
}

BallChoice bmin_naive(const SimplicialComplex& complex, int d, unsigned threads)
{
    require_dimension(d);
    const std::size_t n = complex.num_vertices();
    std::vector<std::optional<std::uint32_t>> radius(n);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t v = next++; v < n; v = next++)
        {
            if (complex.is_sealed_vertex(static_cast<VertexId>(v)))
                continue;
            radius[v] = first_essential_birth(complex, geodesic_filter(complex, static_cast<VertexId>(v)), d);
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1)
        worker();
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    std::optional<BallChoice> best;
    for (VertexId v = 0; v < n; ++v)
    {
        if (!radius[v])
            continue;
        const BallChoice candidate{v, *radius[v]};
        if (!best || better(complex, candidate, *best))
            best = candidate;
    }
    if (!best)
        throw Error(ErrorKind::NoNontrivialClass, "no nontrivial class in dimension " + std::to_string(d));
    return *best;
}

bool contains_nonbounding(const SimplicialComplex& complex, const SubcomplexMask& subcomplex,
                          const BasisCycles& basis, const RankOptions& options, Diagnostics* diagnostics)
{
    Diagnostics local;
    Diagnostics& diag = diagnostics ? *diagnostics : local;
    ++diag.carriage_tests;

    const int d = basis.dim;
    const std::size_t betti = basis.betti();
    if (betti == 0)
        return false;

    const auto keep = outside_rows(complex, subcomplex, d);
    SparseZ2Matrix up = complex.boundary_matrix(d + 1);
    SparseZ2Matrix extended = up;
    for (const auto& z : basis.cycles)
        extended.append_column(z.simplices);
    const SparseZ2Matrix boundary_out = up.select_rows(keep);
    const SparseZ2Matrix extended_out = extended.select_rows(keep);

    auto verdict = [betti](const RankPair& r) -> std::optional<bool> {
        if (r.extended < r.boundary || r.extended - r.boundary > betti)
            return std::nullopt;  // impossible ranks: some estimate was low
        return r.extended - r.boundary != betti;
    };

    if (!use_randomized(options, extended_out))
    {
        ++diag.exact_ranks;
        return *verdict(exact_ranks(boundary_out, extended_out, false));
    }

    auto randomized = [&](std::uint64_t salt) {
        diag.randomized_ranks += 2;
        return RankPair{rank_randomized(boundary_out, derive_seed(options.seed, salt, 1), options.trials),
                        rank_randomized(extended_out, derive_seed(options.seed, salt, 2), options.trials)};
    };

    auto first = verdict(randomized(0));
    if (first && *first)
        return true;

    ++diag.rank_rechecks;
    const auto second = verdict(randomized(1));
    if (first && second && *first == *second)
        return *first;

    ++diag.rank_escalations;
    const bool dense = extended_out.cols() <= kDenseEscalationLimit;
    if (!dense)
        ++diag.rank_unresolved;
    ++diag.exact_ranks;
    return *verdict(exact_ranks(boundary_out, extended_out, dense));
}

BallChoice bmin_improved(const SimplicialComplex& complex, int d, const BasisCycles& basis,
                         const RankOptions& options, Diagnostics* diagnostics)
{
    require_dimension(d);
    if (basis.betti() == 0)
        throw Error(ErrorKind::NoNontrivialClass, "no nontrivial class in dimension " + std::to_string(d));

    std::optional<BallChoice> best;
    for (const auto& component : skeleton_components(complex))
    {
        const VertexId root = *std::min_element(component.begin(), component.end(), [&](VertexId a, VertexId b) {
            return complex.label(a) < complex.label(b);
        });

        const auto root_radius = first_essential_birth(complex, geodesic_filter(complex, root), d);
        if (!root_radius)
            continue;  // component carries no class

        // Breadth-first order of the component from the root.
        std::vector<VertexId> order{root};
        std::vector<std::uint8_t> seen(complex.num_vertices(), 0);
        seen[root] = 1;
        for (std::size_t head = 0; head < order.size(); ++head)
            for (const auto& nb : complex.neighbors(order[head]))
            {
                if (complex.is_sealed(1, nb.edge) || seen[nb.vertex])
                    continue;
                seen[nb.vertex] = 1;
                order.push_back(nb.vertex);
            }

        BallChoice current{root, *root_radius};
        for (std::size_t k = 1; k < order.size() && current.radius > 1; ++k)
        {
            const VertexId p = order[k];
            const auto ball = geodesic_ball(complex, geodesic_filter(complex, p), Distance(current.radius - 1));
            RankOptions probe = options;
            probe.seed = derive_seed(options.seed, p, current.radius);
            if (contains_nonbounding(complex, ball, basis, probe, diagnostics))
            {
                --current.radius;
                current.center = p;
            }
        }
        if (!best || better(complex, current, *best))
            best = current;
    }
    if (!best)
        throw Error(ErrorKind::NoNontrivialClass, "no nontrivial class in dimension " + std::to_string(d));
    return *best;
}

Chain localized_cycle(const SimplicialComplex& complex, int d, BallChoice ball)
{
    require_dimension(d);
    const auto filter = geodesic_filter(complex, ball.center);
    const auto mask = geodesic_ball(complex, filter, Distance(ball.radius));

    std::vector<Index> columns;
    for (Index i = 0; i < complex.count(d); ++i)
        if (mask.contains(d, i))
            columns.push_back(i);
    const auto reduction = column_reduce(complex.boundary_matrix(d).select_columns(columns));

    const BoundarySpace boundaries(complex, d);
    for (std::size_t j = 0; j < columns.size(); ++j)
    {
        if (reduction.low[j])
            continue;
        Chain z{d, {}};
        for (Index k : reduction.transform.column(j))
            z.simplices.push_back(columns[k]);
        if (!boundaries.bounds(z))
            return z;
    }
    throw Error(ErrorKind::InternalInconsistency,
                "ball of radius " + std::to_string(ball.radius) + " carries no nonbounding cycle");
}

Measurement measure_smallest(const SimplicialComplex& complex, int d, const MeasureOptions& options,
                             Diagnostics* diagnostics)
{
    require_dimension(d);
    BallChoice ball;
    if (options.mode == BminMode::Naive)
        ball = bmin_naive(complex, d, options.threads);
    else
    {
        const auto basis = precompute_basis_cycles(complex, d);
        const RankOptions rank{options.rank_method, options.seed, options.trials};
        ball = bmin_improved(complex, d, basis, rank, diagnostics);
    }
    Chain cycle = (options.onedim_modified && d == 1) ? localized_cycle_1d(complex, ball)
                                                      : localized_cycle(complex, d, ball);
    return {ball.radius, std::move(cycle), ball.center};
}

Distance cycle_radius(const SimplicialComplex& complex, const Chain& chain)
{
    const auto support = complex.support_vertices(chain);
    Distance best = Distance::infinity();
    for (VertexId p = 0; p < complex.num_vertices(); ++p)
    {
        if (complex.is_sealed_vertex(p))
            continue;
        const auto dist = hop_distances(complex, p);
        Distance worst(0);
        for (VertexId q : support)
            worst = std::max(worst, dist[q]);
        best = std::min(best, worst);
    }
    return best;
}

}  // namespace homolocal
