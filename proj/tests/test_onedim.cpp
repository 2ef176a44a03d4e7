#include <catch2/catch_amalgamated.hpp>

#include "homolocal/oracle.hpp"
#include "homolocal/onedim.hpp"
#include "homolocal/persistence.hpp"
#include "suite.hpp"

using namespace homolocal;

TEST_CASE("filter-sorted localized cycle examples", "[onedim]")
{
    const auto hollow = suite::hollow_triangle();
    CHECK(localized_cycle_1d(hollow, bmin_naive(hollow, 1)).simplices.size() == 3);

    const auto pentagon = suite::pentagon();
    for (VertexId p = 0; p < 5; ++p)
    {
        const BallChoice ball{p, 2};
        const auto z = localized_cycle_1d(pentagon, ball);
        CHECK(z.simplices.size() == 5);
    }

    // Centered on a corner of the small hole the loop is the hole itself;
    // from a center two steps away it detours through the center.
    const auto annulus = suite::annulus();
    const auto hole = localized_cycle_1d(annulus, {*annulus.vertex_of_label(13), 2});
    CHECK(hole.simplices.size() == 4);
    const auto detour = localized_cycle_1d(annulus, {*annulus.vertex_of_label(2), 2});
    CHECK(detour.simplices.size() == 5);
}

TEST_CASE("filter-sorted cycles use lower edges and one level edge at most", "[onedim][property]")
{
    for (const auto& [name, k] : suite::all())
    {
        if (k.dimension() < 1 || betti_number(k, 1) == 0)
            continue;
        const auto h = precompute_basis_cycles(k, 1);
        for (VertexId p = 0; p < k.num_vertices(); ++p)
        {
            const auto f = geodesic_filter(k, p);
            const auto r = first_essential_birth(k, f, 1);
            if (!r)
                continue;
            const auto z = localized_cycle_1d(k, {p, *r});
            INFO(name << " p=" << p);
            REQUIRE(k.boundary(z).empty());
            REQUIRE_FALSE(BoundarySpace(k, 1).bounds(z));
            REQUIRE(carries(geodesic_ball(k, f, Distance(*r)), z));
            REQUIRE(z.simplices.size() <= 2 * *r + 1);
            std::size_t level = 0;
            for (Index e : z.simplices)
                level += is_lower_edge(k, f, e) ? 0 : 1;
            REQUIRE(level <= 1);
        }
    }
}

TEST_CASE("shortest cycle oracle examples", "[onedim]")
{
    const auto hollow = suite::hollow_triangle();
    CHECK(shortest_cycle_size_oracle(hollow, Chain{1, {0, 1, 2}}) == 3);
    const auto pentagon = suite::pentagon();
    CHECK(shortest_cycle_size_oracle(pentagon, Chain{1, {0, 1, 2, 3, 4}}) == 5);

    // Handle loops of the 4 x 4 torus run along a row: girth 4.
    const auto torus = suite::torus(4);
    const oracle::ClassCoordinates coords(torus, 1);
    REQUIRE(coords.betti() == 2);
    for (const auto& rep : coords.representatives())
        CHECK(shortest_cycle_size_oracle(torus, Chain{1, rep.ones()}) == 4);
}

TEST_CASE("shortest cycle oracle agrees with enumeration", "[onedim][property]")
{
    for (const auto& k : {suite::wedge(), suite::torus(3), build_complex({{0, 1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 5}, {5, 3}})})
    {
        const oracle::ClassCoordinates coords(k, 1);
        std::vector<std::size_t> best(std::size_t{1} << coords.betti(), SIZE_MAX);
        for (const auto& z : oracle::enumerate_cycles(k, 1))
        {
            const auto c = coords.class_of(z);
            best[c] = std::min(best[c], z.simplices.size());
        }
        for (std::uint32_t c = 1; c < best.size(); ++c)
        {
            oracle::Bits rep(k.count(1));
            for (std::size_t i = 0; i < coords.betti(); ++i)
                if ((c >> i) & 1U)
                    rep ^= coords.representatives()[i];
            CHECK(shortest_cycle_size_oracle(k, Chain{1, rep.ones()}) == best[c]);
        }
    }
}

TEST_CASE("shortest cycle oracle rejects bounding chains", "[onedim]")
{
    CHECK_THROWS_AS(shortest_cycle_size_oracle(suite::filled_triangle(), Chain{1, {0, 1, 2}}), Error);
    CHECK_THROWS_AS(shortest_cycle_size_oracle(suite::hollow_triangle(), Chain{1, {0, 1}}), Error);
}

TEST_CASE("class sizes bound the shortest cycle from below", "[onedim][property]")
{
    for (const auto& [name, k] : suite::all())
    {
        if (k.dimension() < 1 || betti_number(k, 1) == 0)
            continue;
        const oracle::ClassCoordinates coords(k, 1);
        const auto sizes = oracle::class_sizes(k, 1);
        for (std::uint32_t c = 1; c < sizes.size(); ++c)
        {
            oracle::Bits rep(k.count(1));
            for (std::size_t i = 0; i < coords.betti(); ++i)
                if ((c >> i) & 1U)
                    rep ^= coords.representatives()[i];
            INFO(name << " class " << c);
            CHECK(2 * *sizes[c] <= shortest_cycle_size_oracle(k, Chain{1, rep.ones()}));
        }
    }
}

TEST_CASE("the class found by the filter-sorted reduction is within one edge of shortest", "[onedim][property]")
{
    for (const auto& [name, k] : suite::all())
    {
        if (k.dimension() < 1 || betti_number(k, 1) == 0)
            continue;
        const auto ball = bmin_naive(k, 1);
        const auto z = localized_cycle_1d(k, ball);
        const auto se = shortest_cycle_size_oracle(k, z);
        INFO(name);
        CHECK(2 * ball.radius <= se);
        CHECK(se <= 2 * ball.radius + 1);
        CHECK(z.simplices.size() <= se + 1);
    }
}

TEST_CASE("the upper sandwich bound fails for a wedge's sum class", "[onedim]")
{
    // Both loops sit in the radius-1 ball around the wedge point, so the sum
    // class has size 1, yet its only cycle has six edges.
    const auto k = suite::wedge();
    const oracle::ClassCoordinates coords(k, 1);
    oracle::Bits both = coords.representatives()[0];
    both ^= coords.representatives()[1];
    const auto sizes = oracle::class_sizes(k, 1);
    CHECK(*sizes[3] == 1);
    CHECK(shortest_cycle_size_oracle(k, Chain{1, both.ones()}) == 6);
}
