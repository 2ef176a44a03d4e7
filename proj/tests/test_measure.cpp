#include <catch2/catch_amalgamated.hpp>

#include "homolocal/measure.hpp"
#include "homolocal/oracle.hpp"
#include "homolocal/persistence.hpp"
#include "suite.hpp"

using namespace homolocal;

namespace {

bool independent_classes(const SimplicialComplex& k, const BasisCycles& h)
{
    auto up = k.boundary_matrix(h.dim + 1);
    auto ext = up;
    for (const auto& z : h.cycles)
        ext.append_column(z.simplices);
    return rank_dense(ext) == rank_dense(up) + h.betti();
}

SubcomplexMask empty_mask(const SimplicialComplex& k)
{
    SubcomplexMask m;
    for (int d = 0; d <= k.dimension(); ++d)
        m.member.emplace_back(k.count(d), 0);
    return m;
}

ErrorKind kind_of(auto&& f)
{
    try
    {
        f();
    }
    catch (const Error& e)
    {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("basis cycle examples", "[measure]")
{
    const auto hollow = precompute_basis_cycles(suite::hollow_triangle(), 1);
    REQUIRE(hollow.betti() == 1);
    CHECK(hollow.cycles[0].simplices.size() == 3);
    CHECK(precompute_basis_cycles(suite::filled_triangle(), 1).betti() == 0);
    const auto wedge = precompute_basis_cycles(suite::wedge(), 1);
    CHECK(wedge.betti() == 2);
    CHECK(independent_classes(suite::wedge(), wedge));
}

TEST_CASE("basis cycles are independent cycles", "[measure][property]")
{
    for (const auto& [name, k] : suite::all())
        for (int d = 1; d <= k.dimension(); ++d)
        {
            const auto h = precompute_basis_cycles(k, d);
            INFO(name << " d=" << d);
            REQUIRE(h.betti() == betti_number(k, d));
            for (const auto& z : h.cycles)
                REQUIRE(k.boundary(z).empty());
            REQUIRE(independent_classes(k, h));
        }
}

TEST_CASE("naive search examples", "[measure]")
{
    CHECK(bmin_naive(suite::hollow_triangle(), 1) == BallChoice{0, 1});
    CHECK(bmin_naive(suite::annulus(), 1).radius == 2);
    CHECK(bmin_naive(suite::octahedron(), 2).radius == 2);
    CHECK(kind_of([] { bmin_naive(suite::filled_triangle(), 1); }) == ErrorKind::NoNontrivialClass);
    CHECK(kind_of([] { bmin_naive(suite::hollow_triangle(), 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("improved search examples", "[measure]")
{
    for (auto method : {RankMethod::Auto, RankMethod::Randomized, RankMethod::Exact})
    {
        const RankOptions opts{method, 5};
        auto radius = [&](const SimplicialComplex& k, int d) {
            return bmin_improved(k, d, precompute_basis_cycles(k, d), opts).radius;
        };
        CHECK(radius(suite::hollow_triangle(), 1) == 1);
        CHECK(radius(suite::annulus(), 1) == 2);
        CHECK(radius(suite::octahedron(), 2) == 2);
    }
    const auto filled = suite::filled_triangle();
    CHECK(kind_of([&] { bmin_improved(filled, 1, precompute_basis_cycles(filled, 1), {}); }) ==
          ErrorKind::NoNontrivialClass);
}

TEST_CASE("carriage test examples", "[measure]")
{
    const auto k = suite::hollow_triangle();
    const auto h = precompute_basis_cycles(k, 1);
    CHECK_FALSE(contains_nonbounding(k, empty_mask(k), h, {}));
    CHECK(contains_nonbounding(k, geodesic_ball(k, geodesic_filter(k, 0), Distance(1)), h, {}));

    // The tail end sees only a tree; a ball at a torus vertex reaches around.
    const auto t = suite::torus_with_tail();
    const auto ht = precompute_basis_cycles(t, 1);
    const VertexId tip = *t.vertex_of_label(18);
    for (auto method : {RankMethod::Randomized, RankMethod::Exact})
    {
        const RankOptions opts{method, 9};
        CHECK_FALSE(contains_nonbounding(t, geodesic_ball(t, geodesic_filter(t, tip), Distance(3)), ht, opts));
        CHECK_FALSE(contains_nonbounding(t, geodesic_ball(t, geodesic_filter(t, 0), Distance(1)), ht, opts));
        CHECK(contains_nonbounding(t, geodesic_ball(t, geodesic_filter(t, tip), Distance(5)), ht, opts));
        CHECK(contains_nonbounding(t, geodesic_ball(t, geodesic_filter(t, 0), Distance(2)), ht, opts));
    }
}

TEST_CASE("carriage test agrees with cycle enumeration", "[measure][property]")
{
    // Every complex with at most 16 d-simplices, every ball.
    std::vector<suite::Named> small = suite::all();
    small.push_back({"torus3", suite::torus(3)});
    std::size_t checked = 0;
    for (const auto& [name, k] : small)
        for (int d = 1; d <= k.dimension(); ++d)
        {
            if (k.count(d) > 16)
                continue;
            const auto h = precompute_basis_cycles(k, d);
            for (VertexId p = 0; p < k.num_vertices(); ++p)
            {
                const auto f = geodesic_filter(k, p);
                for (std::uint32_t r = 0; r <= 3; ++r)
                {
                    const auto ball = geodesic_ball(k, f, Distance(r));
                    const bool expected = oracle::carries_nonbounding(k, ball, d);
                    INFO(name << " d=" << d << " p=" << p << " r=" << r);
                    for (auto method : {RankMethod::Randomized, RankMethod::Exact})
                        REQUIRE(contains_nonbounding(k, ball, h, {method, p * 31u + r}) == expected);
                    ++checked;
                }
            }
        }
    CHECK(checked > 50);
}

TEST_CASE("localized cycle examples", "[measure]")
{
    const auto hollow = suite::hollow_triangle();
    CHECK(localized_cycle(hollow, 1, {0, 1}).simplices.size() == 3);

    const auto annulus = suite::annulus();
    const auto ball = bmin_naive(annulus, 1);
    const auto z = localized_cycle(annulus, 1, ball);
    CHECK(annulus.boundary(z).empty());
    CHECK_FALSE(BoundarySpace(annulus, 1).bounds(z));
    CHECK(cycle_radius(annulus, z) <= Distance(2));

    const auto oct = suite::octahedron();
    CHECK(localized_cycle(oct, 2, bmin_naive(oct, 2)).simplices.size() == 8);

    CHECK(kind_of([&] { localized_cycle(hollow, 1, {0, 0}); }) == ErrorKind::InternalInconsistency);
}

TEST_CASE("measurements satisfy their invariants", "[measure][property]")
{
    for (const auto& [name, k] : suite::all())
        for (int d = 1; d <= k.dimension(); ++d)
        {
            if (betti_number(k, d) == 0)
                continue;
            for (auto mode : {BminMode::Naive, BminMode::Improved})
            {
                MeasureOptions opts;
                opts.mode = mode;
                opts.seed = 4;
                const auto m = measure_smallest(k, d, opts);
                INFO(name << " d=" << d);
                REQUIRE(m.size >= 1);
                REQUIRE(k.boundary(m.cycle).empty());
                REQUIRE_FALSE(BoundarySpace(k, d).bounds(m.cycle));
                REQUIRE(carries(geodesic_ball(k, geodesic_filter(k, m.center), Distance(m.size)), m.cycle));
                REQUIRE(cycle_radius(k, m.cycle) <= Distance(m.size));
            }
        }
}

TEST_CASE("disconnected inputs take the best component", "[measure]")
{
    // A pentagon next to a hollow triangle: the triangle wins.
    const auto k = build_complex({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {10, 11}, {11, 12}, {10, 12}, {20, 21}});
    const auto h = precompute_basis_cycles(k, 1);
    const auto improved = bmin_improved(k, 1, h, {});
    CHECK(improved.radius == 1);
    CHECK(k.label(improved.center) == 10);
    CHECK(bmin_naive(k, 1) == improved);
}

TEST_CASE("naive search is independent of the thread count", "[measure]")
{
    const auto k = suite::annulus();
    const auto one = bmin_naive(k, 1, 1);
    for (unsigned t : {2u, 4u, 7u})
        CHECK(bmin_naive(k, 1, t) == one);
}
