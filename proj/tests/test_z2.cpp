#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "homolocal/z2.hpp"
#include "random_matrix.hpp"
#include "suite.hpp"

using namespace homolocal;

namespace {

bool unit_upper_triangular(const SparseZ2Matrix& v)
{
    for (std::size_t j = 0; j < v.cols(); ++j)
    {
        const auto& c = v.column(j);
        if (c.empty() || c.back() != j)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("column_reduce on the identity changes nothing", "[z2]")
{
    const auto id = SparseZ2Matrix::identity(3);
    const auto r = column_reduce(id);
    CHECK(r.reduced == id);
    CHECK(r.transform == id);
}

TEST_CASE("column_reduce zeroes a repeated column", "[z2]")
{
    const SparseZ2Matrix m(3, {{0, 2}, {0, 2}});
    const auto r = column_reduce(m);
    CHECK(r.reduced.column(1).empty());
    CHECK_FALSE(r.low[1].has_value());
    CHECK(r.transform.column(1) == SparseZ2Matrix::Column{0, 1});
}

TEST_CASE("reducing the hollow triangle leaves one cycle", "[z2]")
{
    const auto k = suite::hollow_triangle();
    const auto d1 = k.boundary_matrix(1);
    const auto r = column_reduce(d1);
    CHECK(r.reduced == d1.multiply(r.transform));
    const auto zeros = std::count_if(r.low.begin(), r.low.end(), [](const auto& l) { return !l; });
    REQUIRE(zeros == 1);
    for (std::size_t j = 0; j < r.low.size(); ++j)
        if (!r.low[j])
        {
            const Chain z{1, r.transform.column(j)};
            CHECK(z.simplices.size() == 3);
            CHECK(k.boundary(z).empty());
        }
}

TEST_CASE("column_reduce invariants on random matrices", "[z2][property]")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t)
    {
        const auto m = testing::random_matrix(rng, 1 + rng() % 30, 1 + rng() % 30, 0.1 + 0.05 * (t % 8));
        const auto r = column_reduce(m);
        REQUIRE(r.reduced == m.multiply(r.transform));
        REQUIRE(unit_upper_triangular(r.transform));
        std::vector<Index> lows;
        for (std::size_t j = 0; j < m.cols(); ++j)
        {
            const auto& c = r.reduced.column(j);
            REQUIRE(r.low[j].has_value() == !c.empty());
            if (r.low[j])
            {
                REQUIRE(*r.low[j] == c.back());
                lows.push_back(*r.low[j]);
            }
        }
        std::sort(lows.begin(), lows.end());
        REQUIRE(std::adjacent_find(lows.begin(), lows.end()) == lows.end());
        REQUIRE(lows.size() == rank_dense(m));
    }
}

TEST_CASE("zero columns of the reduced boundary count the cycle space", "[z2]")
{
    for (const auto& [name, k] : suite::all())
        for (int d = 1; d <= k.dimension(); ++d)
        {
            const auto m = k.boundary_matrix(d);
            const auto r = column_reduce(m);
            const auto zeros = static_cast<std::size_t>(std::count_if(r.low.begin(), r.low.end(), [](const auto& l) { return !l; }));
            INFO(name << " d=" << d);
            CHECK(zeros == m.cols() - rank_sparse(m));
        }
}

TEST_CASE("dense rank examples", "[z2]")
{
    CHECK(rank_dense(SparseZ2Matrix(4, 4)) == 0);
    CHECK(rank_dense(SparseZ2Matrix::identity(5)) == 5);
    CHECK(rank_dense(suite::hollow_triangle().boundary_matrix(1)) == 2);
    CHECK(rank_dense(SparseZ2Matrix(0, 3)) == 0);
    CHECK(rank_dense(SparseZ2Matrix(3, 0)) == 0);
}

TEST_CASE("sparse and dense ranks agree", "[z2][property]")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t)
    {
        const auto m = testing::random_matrix(rng, 1 + rng() % 90, 1 + rng() % 90, 0.02 + 0.01 * (t % 30));
        REQUIRE(rank_sparse(m) == rank_dense(m));
    }
}

TEST_CASE("randomized rank examples", "[z2]")
{
    CHECK(rank_randomized(SparseZ2Matrix(6, 9), 3, 20) == 0);
    CHECK(rank_randomized(SparseZ2Matrix::identity(8), 1, 20) == 8);
    std::mt19937_64 rng(40);
    for (int t = 0; t < 50; ++t)
    {
        const auto m = testing::random_matrix(rng, 40, 40, 0.05 + 0.01 * (t % 10));
        REQUIRE(rank_randomized(m, static_cast<std::uint64_t>(t), 20) == rank_dense(m));
    }
    CHECK_THROWS_AS(rank_randomized(SparseZ2Matrix::identity(2), 1, 0), Error);
}

TEST_CASE("randomized rank never overestimates, even with one trial", "[z2][property]")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t)
    {
        const auto m = testing::random_matrix(rng, 1 + rng() % 40, 1 + rng() % 40, 0.05 + 0.02 * (t % 10));
        REQUIRE(rank_randomized(m, rng(), 1) <= rank_dense(m));
    }
}

TEST_CASE("randomized rank is reproducible for a seed", "[z2]")
{
    std::mt19937_64 rng(3);
    const auto m = testing::random_matrix(rng, 120, 90, 0.03);
    CHECK(rank_randomized(m, 99, 2) == rank_randomized(m, 99, 2));
}

TEST_CASE("rank is invariant under row and column permutations", "[z2][property]")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t)
    {
        const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40;
        const auto m = testing::random_matrix(rng, rows, cols, 0.15);
        std::vector<Index> rp(rows), cp(cols);
        std::iota(rp.begin(), rp.end(), Index{0});
        std::iota(cp.begin(), cp.end(), Index{0});
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        const auto p = m.permute_rows(rp).select_columns(cp);
        const auto exact = rank_dense(m);
        REQUIRE(rank_dense(p) == exact);
        REQUIRE(rank_sparse(p) == exact);
        REQUIRE(rank_randomized(p, static_cast<std::uint64_t>(t), 20) == exact);
    }
}

TEST_CASE("matrix helpers", "[z2]")
{
    const SparseZ2Matrix m(3, {{0, 1}, {2}, {}});
    CHECK(m.nonzeros() == 3);
    CHECK(m.get(1, 0));
    CHECK_FALSE(m.get(1, 1));
    CHECK(m.transpose().transpose() == m);
    CHECK(m.multiply(SparseZ2Matrix::identity(3)) == m);
    const std::vector<std::uint8_t> keep{1, 0, 1};
    const auto kept = m.select_rows(keep);
    CHECK(kept.rows() == 2);
    CHECK(kept.column(1) == SparseZ2Matrix::Column{1});
    CHECK(m.hconcat(m).cols() == 6);

    SparseZ2Matrix::Column a{1, 3, 5};
    add_into(a, {3, 4});
    CHECK(a == SparseZ2Matrix::Column{1, 4, 5});
}

TEST_CASE("triplet dump round-trips", "[z2]")
{
    std::mt19937_64 rng(8);
    const auto m = testing::random_matrix(rng, 12, 7, 0.3);
    std::stringstream s;
    write_triplets(s, m);
    CHECK(read_triplets(s) == m);
}

TEST_CASE("column space membership", "[z2]")
{
    ColumnSpace space;
    CHECK(space.add({0, 1}));
    CHECK(space.add({1, 2}));
    CHECK_FALSE(space.add({0, 2}));
    CHECK(space.rank() == 2);
    CHECK(space.contains({2, 0}));
    CHECK_FALSE(space.contains({3}));
    CHECK(space.contains({}));
}

TEST_CASE("derived seeds differ across streams", "[z2]")
{
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 0, 1));
    CHECK(derive_seed(7, 3, 2) == derive_seed(7, 3, 2));
}
