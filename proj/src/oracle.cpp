#include "homolocal/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace homolocal::oracle {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr std::size_t kMaxEnumerationBits = 20;

/// Columns of the boundary matrix of dimension d restricted to `cols`.
std::vector<Bits> boundary_columns(const SimplicialComplex& complex, int d, const std::vector<Index>& cols)
{
    std::vector<Bits> out;
    out.reserve(cols.size());
    for (Index j : cols)
    {
        Bits b(complex.count(d - 1));
        for (Index f : complex.facets(d, j))
            b.flip(f);
        out.push_back(std::move(b));
    }
    return out;
}

/// Cycles (as full-length d-chains) carried by the given d-simplices.
std::vector<Bits> cycles_on(const SimplicialComplex& complex, int d, const std::vector<Index>& cols)
{
    std::vector<Bits> out;
    if (d == 0)
    {
        for (Index v : cols)
        {
            Bits b(complex.count(0));
            b.set(v);
            out.push_back(std::move(b));
        }
        return out;
    }
    for (const auto& combo : null_space(boundary_columns(complex, d, cols)))
    {
        Bits z(complex.count(d));
        for (Index k : combo.ones())
            z.set(cols[k]);
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<VertexId> support(const SimplicialComplex& complex, int d, const Bits& chain)
{
    std::vector<VertexId> vs;
    for (Index s : chain.ones())
        for (VertexId v : complex.vertices(d, s))
            vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Distance diameter_of(const std::vector<std::vector<Distance>>& dist, const std::vector<VertexId>& vs)
{
    Distance worst(0);
    for (VertexId a : vs)
        for (VertexId b : vs)
            worst = std::max(worst, dist[a][b]);
    return worst;
}

/// All 2^k sums of the given vectors, in Gray-code order, starting at `base`.
template <typename Visit>
void for_each_combination(const Bits& base, const std::vector<Bits>& generators, Visit visit)
{
    if (generators.size() > kMaxEnumerationBits)
        throw Error(ErrorKind::TooLarge, "too many generators to enumerate");
    Bits current = base;
    visit(current);
    const std::uint64_t total = std::uint64_t{1} << generators.size();
    for (std::uint64_t i = 1; i < total; ++i)
    {
        current ^= generators[static_cast<std::size_t>(std::countr_zero(i))];
        visit(current);
    }
}

}  // namespace

Bits& Bits::operator^=(const Bits& o)
{
    assert(n_ == o.n_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= o.words_[w];
    return *this;
}

bool Bits::none() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> Bits::highest() const
{
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w])
            return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return std::nullopt;
}

std::vector<Index> Bits::ones() const
{
    std::vector<Index> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
    {
        std::uint64_t x = words_[w];
        while (x)
        {
            out.push_back(static_cast<Index>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
            x &= x - 1;
        }
    }
    return out;
}

Bits to_bits(const Chain& chain, std::size_t n)
{
    Bits b(n);
    for (Index s : chain.simplices)
        b.flip(s);
    return b;
}

std::vector<Bits> null_space(const std::vector<Bits>& columns)
{
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    std::vector<std::pair<Bits, Bits>> stored;  // (reduced column, combination)
    std::vector<std::size_t> pivot(rows, kNone);
    std::vector<Bits> result;
    for (std::size_t j = 0; j < columns.size(); ++j)
    {
        Bits v = columns[j];
        Bits combo(columns.size());
        combo.set(j);
        for (auto top = v.highest(); top; top = v.highest())
        {
            const std::size_t slot = pivot[*top];
            if (slot == kNone)
                break;
            v ^= stored[slot].first;
            combo ^= stored[slot].second;
        }
        if (const auto top = v.highest())
        {
            pivot[*top] = stored.size();
            stored.emplace_back(std::move(v), std::move(combo));
        }
        else
            result.push_back(std::move(combo));
    }
    return result;
}

ClassCoordinates::ClassCoordinates(const SimplicialComplex& complex, int d) : complex_(&complex), dim_(d)
{
    const std::size_t n = complex.count(d);
    std::vector<Index> all(n);
    for (Index i = 0; i < n; ++i)
        all[i] = i;
    cycles_ = cycles_on(complex, d, all);

    pivot_.assign(n, kNone);
    auto reduce = [&](Bits& v, std::uint32_t& tag) {
        for (auto top = v.highest(); top; top = v.highest())
        {
            const std::size_t slot = pivot_[*top];
            if (slot == kNone)
                return;
            v ^= echelon_[slot].vec;
            tag ^= echelon_[slot].tag;
        }
    };
    auto store = [&](Bits v, std::uint32_t tag) {
        pivot_[*v.highest()] = echelon_.size();
        echelon_.push_back({std::move(v), tag});
    };

    for (Index j = 0; j < complex.count(d + 1); ++j)
    {
        Bits b(n);
        for (Index f : complex.facets(d + 1, j))
            b.flip(f);
        Bits v = b;
        std::uint32_t tag = 0;
        reduce(v, tag);
        if (!v.none())
        {
            boundaries_.push_back(std::move(b));
            store(std::move(v), 0);
        }
    }
    for (const auto& z : cycles_)
    {
        Bits v = z;
        std::uint32_t tag = 0;
        reduce(v, tag);
        if (v.none())
            continue;
        if (representatives_.size() >= 24)
            throw Error(ErrorKind::TooLarge, "Betti number too large for class coordinates");
        tag ^= std::uint32_t{1} << representatives_.size();
        representatives_.push_back(z);
        store(std::move(v), tag);
    }
}

std::uint32_t ClassCoordinates::class_of(const Bits& cycle) const
{
    Bits v = cycle;
    std::uint32_t tag = 0;
    for (auto top = v.highest(); top; top = v.highest())
    {
        const std::size_t slot = pivot_[*top];
        if (slot == kNone)
            throw Error(ErrorKind::NotACycle, "chain is not a cycle");
        v ^= echelon_[slot].vec;
        tag ^= echelon_[slot].tag;
    }
    return tag;
}

std::uint32_t ClassCoordinates::class_of(const Chain& cycle) const
{
    if (cycle.dim != dim_)
        throw Error(ErrorKind::InvalidArgument, "chain dimension does not match");
    if (!complex_->boundary(cycle).empty())
        throw Error(ErrorKind::NotACycle, "chain has nonzero boundary");
    return class_of(to_bits(cycle, complex_->count(dim_)));
}

Chain fundamental_cycle(const SimplicialComplex& complex, const std::vector<std::uint8_t>& forest_edge,
                        Index edge)
{
    const auto ends = complex.vertices(1, edge);
    const VertexId from = ends[0], to = ends[1];
    std::vector<std::int64_t> via(complex.num_vertices(), -1);  // edge used to reach each vertex
    std::vector<std::uint8_t> seen(complex.num_vertices(), 0);
    std::deque<VertexId> queue{from};
    seen[from] = 1;
    while (!queue.empty() && !seen[to])
    {
        const VertexId u = queue.front();
        queue.pop_front();
        for (const auto& nb : complex.neighbors(u))
        {
            if (!forest_edge[nb.edge] || seen[nb.vertex])
                continue;
            seen[nb.vertex] = 1;
            via[nb.vertex] = nb.edge;
            queue.push_back(nb.vertex);
        }
    }
    if (!seen[to])
        throw Error(ErrorKind::InvalidArgument, "edge endpoints are not joined by the forest");
    Chain z{1, {edge}};
    for (VertexId v = to; v != from;)
    {
        const auto e = static_cast<Index>(via[v]);
        z.simplices.push_back(e);
        const auto vs = complex.vertices(1, e);
        v = vs[0] == v ? vs[1] : vs[0];
    }
    std::sort(z.simplices.begin(), z.simplices.end());
    return z;
}

std::vector<Chain> enumerate_cycles(const SimplicialComplex& complex, int d)
{
    std::vector<Index> all(complex.count(d));
    for (Index i = 0; i < all.size(); ++i)
        all[i] = i;
    const auto basis = cycles_on(complex, d, all);
    if (basis.size() > kMaxEnumerationBits)
        throw Error(ErrorKind::TooLarge, "cycle space too large to enumerate");
    std::vector<Chain> out;
    for_each_combination(Bits(complex.count(d)), basis,
                         [&](const Bits& z) { out.push_back(Chain{d, z.ones()}); });
    return out;
}

std::vector<std::vector<Distance>> all_pairs_distances(const SimplicialComplex& complex)
{
    const std::size_t n = complex.num_vertices();
    std::vector<std::vector<Distance>> dist(n, std::vector<Distance>(n, Distance::infinity()));
    for (VertexId s = 0; s < n; ++s)
    {
        if (complex.is_sealed_vertex(s))
            continue;
        auto& row = dist[s];
        row[s] = Distance(0);
        std::deque<VertexId> queue{s};
        while (!queue.empty())
        {
            const VertexId u = queue.front();
            queue.pop_front();
            for (const auto& nb : complex.neighbors(u))
            {
                if (complex.is_sealed(1, nb.edge) || row[nb.vertex].is_finite())
                    continue;
                row[nb.vertex] = Distance(row[u].value() + 1);
                queue.push_back(nb.vertex);
            }
        }
    }
    return dist;
}

Distance chain_radius(const SimplicialComplex& complex, const std::vector<std::vector<Distance>>& dist,
                      const Chain& chain)
{
    const auto vs = support(complex, chain.dim, to_bits(chain, complex.count(chain.dim)));
    Distance best = Distance::infinity();
    for (VertexId p = 0; p < complex.num_vertices(); ++p)
    {
        if (complex.is_sealed_vertex(p))
            continue;
        Distance worst(0);
        for (VertexId q : vs)
            worst = std::max(worst, dist[p][q]);
        best = std::min(best, worst);
    }
    return best;
}

Distance chain_diameter(const SimplicialComplex& complex, const std::vector<std::vector<Distance>>& dist,
                        const Chain& chain)
{
    return diameter_of(dist, support(complex, chain.dim, to_bits(chain, complex.count(chain.dim))));
}

std::vector<std::uint32_t> carried_classes(const SimplicialComplex& complex, const ClassCoordinates& coords,
                                           const SubcomplexMask& ball)
{
    const int d = coords.dim();
    std::vector<Index> cols;
    for (Index i = 0; i < complex.count(d); ++i)
        if (ball.contains(d, i))
            cols.push_back(i);
    std::set<std::uint32_t> span{0};
    for (const auto& z : cycles_on(complex, d, cols))
    {
        const std::uint32_t c = coords.class_of(z);
        if (span.count(c))
            continue;
        std::vector<std::uint32_t> grown(span.begin(), span.end());
        for (std::uint32_t s : grown)
            span.insert(s ^ c);
    }
    return {span.begin(), span.end()};
}

std::vector<std::optional<std::uint32_t>> class_sizes(const SimplicialComplex& complex, int d)
{
    const ClassCoordinates coords(complex, d);
    const std::size_t classes = std::size_t{1} << coords.betti();
    std::vector<std::optional<std::uint32_t>> size(classes);
    const auto dist = all_pairs_distances(complex);

    for (VertexId p = 0; p < complex.num_vertices(); ++p)
    {
        if (complex.is_sealed_vertex(p))
            continue;
        std::uint32_t reach = 0;
        for (const auto& v : dist[p])
            if (v.is_finite())
                reach = std::max(reach, v.value());
        for (std::uint32_t r = 0; r <= reach; ++r)
        {
            SubcomplexMask ball;
            ball.member.resize(static_cast<std::size_t>(complex.dimension() + 1));
            for (int k = 0; k <= complex.dimension(); ++k)
            {
                ball.member[k].assign(complex.count(k), 0);
                for (Index i = 0; i < complex.count(k); ++i)
                {
                    if (complex.is_sealed(k, i))
                        continue;
                    bool inside = true;
                    for (VertexId v : complex.vertices(k, i))
                        inside = inside && dist[p][v] <= Distance(r);
                    ball.member[k][i] = inside ? 1 : 0;
                }
            }
            const auto carried = carried_classes(complex, coords, ball);
            for (std::uint32_t c : carried)
                if (c != 0 && (!size[c] || *size[c] > r))
                    size[c] = r;
            if (carried.size() == classes)
                break;
        }
    }
    return size;
}

std::uint32_t brute_size(const SimplicialComplex& complex, int d, const Chain& z)
{
    const ClassCoordinates coords(complex, d);
    const std::uint32_t c = coords.class_of(z);
    if (c == 0)
        throw Error(ErrorKind::InvalidArgument, "cycle bounds; its class has no size");
    const auto sizes = class_sizes(complex, d);
    return *sizes[c];
}

std::vector<std::uint32_t> brute_optimal_basis(const SimplicialComplex& complex, int d)
{
    const ClassCoordinates coords(complex, d);
    if (coords.betti() > 4)
        throw Error(ErrorKind::TooLarge, "brute-force basis limited to beta <= 4");
    const auto sizes = class_sizes(complex, d);

    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 1; c < sizes.size(); ++c)
        order.push_back(c);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return *sizes[a] < *sizes[b]; });

    std::vector<std::uint32_t> kept;  // echelon, one vector per leading bit
    std::vector<std::uint32_t> result;
    for (std::uint32_t c : order)
    {
        std::uint32_t v = c;
        for (std::uint32_t k : kept)
            v = std::min(v, v ^ k);
        if (v == 0)
            continue;
        kept.push_back(v);
        std::sort(kept.rbegin(), kept.rend());
        result.push_back(*sizes[c]);
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool carries_nonbounding(const SimplicialComplex& complex, const SubcomplexMask& subcomplex, int d)
{
    const ClassCoordinates coords(complex, d);
    std::vector<Index> cols;
    for (Index i = 0; i < complex.count(d); ++i)
        if (subcomplex.contains(d, i))
            cols.push_back(i);
    const auto basis = cycles_on(complex, d, cols);
    bool found = false;
    for_each_combination(Bits(complex.count(d)), basis, [&](const Bits& z) {
        if (!found && coords.class_of(z) != 0)
            found = true;
    });
    return found;
}

std::uint32_t min_class_diameter(const SimplicialComplex& complex, const Chain& z)
{
    const ClassCoordinates coords(complex, z.dim);
    if (coords.class_of(z) == 0)
        throw Error(ErrorKind::InvalidArgument, "cycle bounds");
    if (coords.boundary_basis().size() > kMaxEnumerationBits)
        throw Error(ErrorKind::TooLarge, "boundary space too large to enumerate");
    const auto dist = all_pairs_distances(complex);
    Distance best = Distance::infinity();
    for_each_combination(to_bits(z, complex.count(z.dim)), coords.boundary_basis(), [&](const Bits& c) {
        best = std::min(best, diameter_of(dist, support(complex, z.dim, c)));
    });
    return best.value();
}

}  // namespace homolocal::oracle
