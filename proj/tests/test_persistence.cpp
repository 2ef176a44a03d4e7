#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "homolocal/persistence.hpp"
#include "suite.hpp"

using namespace homolocal;

namespace {

// Edge indices follow input order: e01 = 0, e02 = 1, e12 = 2.
SimplicialComplex ordered_triangle() { return build_complex({{0, 1}, {0, 2}, {1, 2}}); }

SimplexRef edge(const SimplicialComplex& k, VertexLabel a, VertexLabel b)
{
    std::vector<VertexId> ids{*k.vertex_of_label(a), *k.vertex_of_label(b)};
    std::sort(ids.begin(), ids.end());
    return {1, *k.find(ids)};
}

/// Pairing by an independent reduction of the full incidence matrix.
std::vector<std::pair<std::size_t, std::size_t>> global_pairs(const SimplicialComplex& k, const SimplexOrdering& o)
{
    const std::size_t n = o.order.size();
    std::vector<SparseZ2Matrix::Column> cols(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        const auto s = o.order[j];
        if (s.dim == 0)
            continue;
        for (Index f : k.facets(s.dim, s.index))
            cols[j].push_back(static_cast<Index>(o.position[s.dim - 1][f]));
        std::sort(cols[j].begin(), cols[j].end());
    }
    const auto r = column_reduce(SparseZ2Matrix(n, cols));
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t j = 0; j < n; ++j)
        if (r.low[j])
            out.emplace_back(*r.low[j], j);
    return out;
}

}  // namespace

TEST_CASE("ordering of the hollow triangle ties by dimension", "[persistence]")
{
    const auto k = ordered_triangle();
    const auto o = simplex_ordering(k, geodesic_filter(k, 0));
    const std::vector<SimplexRef> expected{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
    CHECK(o.order == expected);
}

TEST_CASE("filled triangle's 2-simplex comes last", "[persistence]")
{
    const auto k = suite::filled_triangle();
    const auto o = simplex_ordering(k, geodesic_filter(k, 0));
    CHECK(o.order.back() == SimplexRef{2, 0});
}

TEST_CASE("constant filter orders by dimension and index", "[persistence]")
{
    const auto k = suite::octahedron();
    FilterAssignment flat;
    flat.vertex_values.assign(k.num_vertices(), Distance(0));
    for (int d = 0; d <= k.dimension(); ++d)
        flat.simplex_values.emplace_back(k.count(d), Distance(0));
    const auto o = simplex_ordering(k, flat);
    CHECK(std::is_sorted(o.order.begin(), o.order.end()));
}

TEST_CASE("orderings respect values and faces", "[persistence][property]")
{
    for (const auto& [name, k] : suite::all())
    {
        const auto f = geodesic_filter(k, 0);
        const auto o = simplex_ordering(k, f);
        REQUIRE(o.order.size() == k.size());
        for (std::size_t j = 1; j < o.order.size(); ++j)
            REQUIRE(f.value(o.order[j - 1]) <= f.value(o.order[j]));
        for (int d = 1; d <= k.dimension(); ++d)
            for (Index i = 0; i < k.count(d); ++i)
                for (Index face : k.facets(d, i))
                    REQUIRE(o.position[d - 1][face] < o.position[d][i]);
    }
}

TEST_CASE("pairing of a single vertex", "[persistence]")
{
    const auto k = build_complex({{0}});
    const auto p = persistence_pairs(k, geodesic_filter(k, 0));
    CHECK(p.pairs.empty());
    REQUIRE(p.essential.size() == 1);
    CHECK(p.essential[0].birth == Distance(0));
}

TEST_CASE("pairing of the hollow triangle", "[persistence]")
{
    const auto k = ordered_triangle();
    const auto p = persistence_pairs(k, geodesic_filter(k, 0));
    REQUIRE(p.pairs.size() == 2);
    CHECK(p.pairs[0].birth == SimplexRef{0, 1});
    CHECK(p.pairs[0].death == edge(k, 0, 1));
    CHECK(p.pairs[1].birth == SimplexRef{0, 2});
    CHECK(p.pairs[1].death == edge(k, 0, 2));
    REQUIRE(p.essential.size() == 2);
    CHECK(p.essential[0].simplex == SimplexRef{0, 0});
    CHECK(p.essential[0].birth == Distance(0));
    CHECK(p.essential[1].simplex == edge(k, 1, 2));
    CHECK(p.essential[1].birth == Distance(1));
}

TEST_CASE("pairing of the filled triangle", "[persistence]")
{
    const auto k = suite::filled_triangle();
    const auto p = persistence_pairs(k, geodesic_filter(k, 0));
    REQUIRE(p.essential.size() == 1);
    CHECK(p.essential[0].simplex == SimplexRef{0, 0});
    bool found = false;
    for (const auto& pair : p.pairs)
        found = found || (pair.death == SimplexRef{2, 0} && pair.birth == edge(k, 1, 2));
    CHECK(found);
}

TEST_CASE("pairings match a global reduction and count Betti numbers", "[persistence][property]")
{
    for (const auto& [name, k] : suite::all())
        for (VertexId src = 0; src < k.num_vertices(); src += 3)
        {
            const auto f = geodesic_filter(k, src);
            const auto o = simplex_ordering(k, f);
            const auto p = persistence_pairs(k, f);
            std::vector<std::pair<std::size_t, std::size_t>> mine;
            for (const auto& pair : p.pairs)
                mine.emplace_back(o.position[pair.birth.dim][pair.birth.index],
                                  o.position[pair.death.dim][pair.death.index]);
            INFO(name);
            REQUIRE(mine == global_pairs(k, o));
            for (int d = 0; d <= k.dimension(); ++d)
                REQUIRE(p.essential_count(d) == betti_number(k, d));
        }
}

TEST_CASE("first essential birth examples", "[persistence]")
{
    const auto hollow = suite::hollow_triangle();
    CHECK(first_essential_birth(hollow, geodesic_filter(hollow, 0), 1) == 1u);
    const auto filled = suite::filled_triangle();
    CHECK_FALSE(first_essential_birth(filled, geodesic_filter(filled, 0), 1).has_value());
    const auto oct = suite::octahedron();
    CHECK(first_essential_birth(oct, geodesic_filter(oct, 0), 2) == 2u);
    CHECK(first_essential_birth(suite::pentagon(), geodesic_filter(suite::pentagon(), 3), 1) == 2u);
}

TEST_CASE("pairing dump marks essential classes", "[persistence]")
{
    const auto k = ordered_triangle();
    const auto f = geodesic_filter(k, 0);
    std::ostringstream out;
    write_pairing(out, f, persistence_pairs(k, f));
    CHECK(out.str() == "0 1 1\n0 1 1\n0 0 inf\n1 1 inf\n");
}
