#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "homolocal/types.hpp"

namespace homolocal {

/**
 * Column-major sparse matrix over Z2.  Each column is the strictly
 * increasing list of row indices holding a one.
 */
class SparseZ2Matrix
{
  public:
    using Column = std::vector<Index>;

    SparseZ2Matrix() = default;
    SparseZ2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
    SparseZ2Matrix(std::size_t rows, std::vector<Column> columns);

    static SparseZ2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;

    const Column& column(std::size_t j) const { return columns_[j]; }
    const std::vector<Column>& columns() const { return columns_; }

    /// Replaces column j; the list is sorted and must hold distinct rows.
    void set_column(std::size_t j, Column column);
    void append_column(Column column);

    bool get(std::size_t i, std::size_t j) const;

    /// Keeps the rows with keep[i] != 0, renumbered in their original order.
    SparseZ2Matrix select_rows(std::span<const std::uint8_t> keep) const;
    /// Keeps the listed columns, in the listed order.
    SparseZ2Matrix select_columns(std::span<const Index> cols) const;
    /// Applies new_row = row_position[old_row] and re-sorts each column.
    SparseZ2Matrix permute_rows(std::span<const Index> row_position) const;

    SparseZ2Matrix transpose() const;
    SparseZ2Matrix multiply(const SparseZ2Matrix& rhs) const;

    /// Horizontal concatenation [this | rhs]; row counts must agree.
    SparseZ2Matrix hconcat(const SparseZ2Matrix& rhs) const;

    bool operator==(const SparseZ2Matrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// Text triplet dump: a `rows cols` header followed by one `r c` pair per one.
void write_triplets(std::ostream& out, const SparseZ2Matrix& m);
SparseZ2Matrix read_triplets(std::istream& in);

/// Adds column b into column a over Z2 (symmetric difference of sorted lists).
void add_into(SparseZ2Matrix::Column& a, const SparseZ2Matrix::Column& b);

/**
 * Result of left-to-right column reduction, R = M V.
 * `low[j]` is the largest row index of column j of R, absent when that
 * column is zero.
 */
struct ReductionResult
{
    SparseZ2Matrix reduced;
    SparseZ2Matrix transform;
    std::vector<std::optional<Index>> low;
};

/**
 * Standard persistence reduction: for each column i in turn, while some
 * earlier column j has low(j) == low(i), add column j to column i.
 */
ReductionResult column_reduce(const SparseZ2Matrix& m);

/// Exact rank by Gaussian elimination on a bit-packed dense copy.
std::size_t rank_dense(const SparseZ2Matrix& m);

/// Exact rank by sparse column reduction with a pivot table.
std::size_t rank_sparse(const SparseZ2Matrix& m);

/**
 * Randomized rank estimate by binary search over a probe size s.
 *
 * Each probe draws random dense projections P ((s+k) x rows) and Q
 * (cols x (s+k)) and computes rank(P M Q), a certified lower bound on
 * rank(M).  A probe size is accepted as soon as one of `trials` sketches
 * reaches rank s; if none does, the search concludes rank(M) < s.  The
 * search opens with one full-width sketch and probes one above its rank
 * first, so the usual cost is a single rejected probe.
 *
 * The estimate never exceeds rank(M).  It is deterministic for a fixed
 * seed.
 */
std::size_t rank_randomized(const SparseZ2Matrix& m, std::uint64_t seed, int trials = 20);

/// SplitMix64 finalizer, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

/**
 * Growing column space over Z2, kept in reduced form with one pivot (lowest
 * one) per stored column.
 */
class ColumnSpace
{
  public:
    ColumnSpace() = default;

    /// Adds v; returns true when v was independent of the space.
    bool add(SparseZ2Matrix::Column v);
    bool contains(SparseZ2Matrix::Column v) const;
    std::size_t rank() const { return basis_.size(); }

    /// Reduces v against the stored basis in place; returns true if zero.
    bool reduce(SparseZ2Matrix::Column& v) const;

  private:
    std::vector<SparseZ2Matrix::Column> basis_;
    std::unordered_map<Index, std::size_t> pivot_;
};

}  // namespace homolocal
