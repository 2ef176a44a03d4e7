#include "homolocal/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace homolocal {

namespace {

/// d-simplices sorted by (filter value, index).
std::vector<Index> sorted_by_value(const SimplicialComplex& complex, const FilterAssignment& filter, int d)
{
    std::vector<Index> order(complex.count(d));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return filter.value(d, a) < filter.value(d, b); });
    return order;
}

/// rank[i] = place of simplex i in `order`.
std::vector<Index> inverse(const std::vector<Index>& order)
{
    std::vector<Index> rank(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        rank[order[k]] = static_cast<Index>(k);
    return rank;
}

/**
 * Reduces the boundary matrix of dimension d with rows and columns in
 * filtration order.  Returns, for each column (in filtration order), the
 * filtration position of its pivot row, or -1 for a zero column.
 */
std::vector<std::int64_t> reduce_in_order(const SimplicialComplex& complex, int d,
                                          const std::vector<Index>& col_order,
                                          const std::vector<Index>& row_rank)
{
    const std::size_t rows = complex.count(d - 1);
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(rows, kNone);
    std::vector<SparseZ2Matrix::Column> reduced(col_order.size());
    std::vector<std::int64_t> low(col_order.size(), -1);
    for (std::size_t k = 0; k < col_order.size(); ++k)
    {
        auto& col = reduced[k];
        for (Index f : complex.facets(d, col_order[k]))
            col.push_back(row_rank[f]);
        std::sort(col.begin(), col.end());
        while (!col.empty() && owner[col.back()] != kNone)
            add_into(col, reduced[owner[col.back()]]);
        if (!col.empty())
        {
            owner[col.back()] = k;
            low[k] = col.back();
        }
    }
    return low;
}

}  // namespace

SimplexOrdering simplex_ordering(const SimplicialComplex& complex, const FilterAssignment& filter)
{
    SimplexOrdering result;
    for (int d = 0; d <= complex.dimension(); ++d)
        for (Index i = 0; i < complex.count(d); ++i)
            result.order.push_back({d, i});
    std::stable_sort(result.order.begin(), result.order.end(), [&](SimplexRef a, SimplexRef b) {
        const Distance va = filter.value(a), vb = filter.value(b);
        if (va != vb)
            return va < vb;
        if (a.dim != b.dim)
            return a.dim < b.dim;
        return a.index < b.index;
    });
    result.position.resize(static_cast<std::size_t>(complex.dimension() + 1));
    for (int d = 0; d <= complex.dimension(); ++d)
        result.position[d].resize(complex.count(d));
    for (std::size_t k = 0; k < result.order.size(); ++k)
        result.position[result.order[k].dim][result.order[k].index] = k;
    return result;
}

std::size_t PersistencePairing::essential_count(int d) const
{
    return static_cast<std::size_t>(std::count_if(essential.begin(), essential.end(),
                                                  [d](const EssentialSimplex& e) { return e.simplex.dim == d; }));
}

PersistencePairing persistence_pairs(const SimplicialComplex& complex, const FilterAssignment& filter)
{
    const int top = complex.dimension();
    std::vector<std::vector<Index>> order(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<Index>> rank(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d)
    {
        order[d] = sorted_by_value(complex, filter, d);
        rank[d] = inverse(order[d]);
    }

    // paired[d][k]: simplex at place k of dimension d is a birth or a death.
    std::vector<std::vector<std::uint8_t>> paired(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d)
        paired[d].assign(complex.count(d), 0);

    PersistencePairing result;
    for (int d = 1; d <= top; ++d)
    {
        const auto low = reduce_in_order(complex, d, order[d], rank[d - 1]);
        for (std::size_t k = 0; k < low.size(); ++k)
        {
            if (low[k] < 0)
                continue;
            const auto birth_place = static_cast<std::size_t>(low[k]);
            paired[d - 1][birth_place] = 1;
            paired[d][k] = 1;
            result.pairs.push_back({{d - 1, order[d - 1][birth_place]}, {d, order[d][k]}});
        }
    }
    for (int d = 0; d <= top; ++d)
        for (std::size_t k = 0; k < order[d].size(); ++k)
            if (!paired[d][k])
                result.essential.push_back({{d, order[d][k]}, filter.value(d, order[d][k])});

    // Report pairs by position of the death simplex in the global order.
    const auto global = simplex_ordering(complex, filter);
    std::sort(result.pairs.begin(), result.pairs.end(), [&](const PersistencePair& a, const PersistencePair& b) {
        return global.position[a.death.dim][a.death.index] < global.position[b.death.dim][b.death.index];
    });
    std::sort(result.essential.begin(), result.essential.end(),
              [&](const EssentialSimplex& a, const EssentialSimplex& b) {
                  return global.position[a.simplex.dim][a.simplex.index] <
                         global.position[b.simplex.dim][b.simplex.index];
              });
    return result;
}

std::optional<std::uint32_t> first_essential_birth(const SimplicialComplex& complex,
                                                   const FilterAssignment& filter, int d)
{
    if (d < 0 || d > complex.dimension())
        return std::nullopt;

    const auto order = sorted_by_value(complex, filter, d);

    // Positive d-simplices: zero columns of the reduced boundary in dimension d.
    std::vector<std::uint8_t> positive(order.size(), 1);
    if (d >= 1)
    {
        const auto low = reduce_in_order(complex, d, order, inverse(sorted_by_value(complex, filter, d - 1)));
        for (std::size_t k = 0; k < low.size(); ++k)
            positive[k] = low[k] < 0 ? 1 : 0;
    }
    // Of those, the ones killed by a (d+1)-simplex are not essential.
    if (d + 1 <= complex.dimension())
    {
        const auto up_order = sorted_by_value(complex, filter, d + 1);
        const auto low = reduce_in_order(complex, d + 1, up_order, inverse(order));
        for (auto l : low)
            if (l >= 0)
                positive[static_cast<std::size_t>(l)] = 0;
    }
    for (std::size_t k = 0; k < order.size(); ++k)
    {
        if (!positive[k])
            continue;
        // Sorted by value, so the first essential simplex has the least birth.
        const Distance birth = filter.value(d, order[k]);
        if (!birth.is_finite())
            return std::nullopt;
        return birth.value();
    }
    return std::nullopt;
}

void write_pairing(std::ostream& out, const FilterAssignment& filter, const PersistencePairing& pairing)
{
    auto show = [&](Distance v) {
        if (v.is_finite())
            out << v.value();
        else
            out << "inf";
    };
    for (const auto& p : pairing.pairs)
    {
        out << p.birth.dim << ' ';
        show(filter.value(p.birth));
        out << ' ';
        show(filter.value(p.death));
        out << '\n';
    }
    for (const auto& e : pairing.essential)
    {
        out << e.simplex.dim << ' ';
        show(e.birth);
        out << " inf\n";
    }
}

}  // namespace homolocal
