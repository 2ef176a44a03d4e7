#include "homolocal/z2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <random>

namespace homolocal {

namespace {

using Word = std::uint64_t;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Bit-packed dense vectors inserted one at a time into an echelon basis
/// keyed by highest set bit.
class DenseEchelon
{
  public:
    explicit DenseEchelon(std::size_t length)
        : words_(words_for(length)), pivot_(length, kNone)
    {
    }

    /// Reduces `v` (words_ words) and stores it if nonzero.
    bool insert(std::vector<Word> v)
    {
        for (;;)
        {
            const auto top = highest_bit(v);
            if (!top)
                return false;
            const auto slot = pivot_[*top];
            if (slot == kNone)
            {
                pivot_[*top] = basis_.size();
                basis_.push_back(std::move(v));
                return true;
            }
            const auto& b = basis_[slot];
            for (std::size_t w = 0; w <= *top / 64; ++w)
                v[w] ^= b[w];
        }
    }

    std::size_t rank() const { return basis_.size(); }
    std::size_t words() const { return words_; }

  private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::optional<std::size_t> highest_bit(const std::vector<Word>& v) const
    {
        for (std::size_t w = words_; w-- > 0;)
            if (v[w] != 0)
                return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v[w]));
        return std::nullopt;
    }

    std::size_t words_;
    std::vector<std::size_t> pivot_;
    std::vector<std::vector<Word>> basis_;
};

std::size_t rank_of_rows(std::vector<std::vector<Word>> rows, std::size_t length)
{
    DenseEchelon echelon(length);
    for (auto& r : rows)
        echelon.insert(std::move(r));
    return echelon.rank();
}

/// rank(P M Q) for uniformly random P (k x rows) and Q (cols x k).
std::size_t sketch_rank(const SparseZ2Matrix& m, std::size_t k, std::mt19937_64& rng)
{
    const std::size_t kw = words_for(k);
    const Word tail_mask = (k % 64 == 0) ? ~Word{0} : ((Word{1} << (k % 64)) - 1);

    auto random_row = [&]() {
        std::vector<Word> r(kw);
        for (auto& w : r)
            w = rng();
        r.back() &= tail_mask;
        return r;
    };

    // Row j of Q, then row i of M Q as the sum of Q rows over the ones of M.
    std::vector<std::vector<Word>> mq(m.rows(), std::vector<Word>(kw, 0));
    for (std::size_t j = 0; j < m.cols(); ++j)
    {
        const auto q = random_row();
        for (Index i : m.column(j))
            for (std::size_t w = 0; w < kw; ++w)
                mq[i][w] ^= q[w];
    }

    // Row r of P M Q sums the rows of M Q selected by a random row of P.
    std::vector<std::vector<Word>> sketch(k, std::vector<Word>(kw, 0));
    const std::size_t mw = words_for(m.rows());
    for (std::size_t r = 0; r < k; ++r)
    {
        auto& out = sketch[r];
        for (std::size_t block = 0; block < mw; ++block)
        {
            Word select = rng();
            if (block == mw - 1 && m.rows() % 64 != 0)
                select &= (Word{1} << (m.rows() % 64)) - 1;
            while (select != 0)
            {
                const auto bit = static_cast<std::size_t>(std::countr_zero(select));
                select &= select - 1;
                const auto& src = mq[block * 64 + bit];
                for (std::size_t w = 0; w < kw; ++w)
                    out[w] ^= src[w];
            }
        }
    }
    return rank_of_rows(std::move(sketch), k);
}

}  // namespace

SparseZ2Matrix::SparseZ2Matrix(std::size_t rows, std::vector<Column> columns)
    : rows_(rows), columns_(std::move(columns))
{
    for (auto& c : columns_)
    {
        std::sort(c.begin(), c.end());
        assert(std::adjacent_find(c.begin(), c.end()) == c.end());
        assert(c.empty() || c.back() < rows_);
    }
}

SparseZ2Matrix SparseZ2Matrix::identity(std::size_t n)
{
    SparseZ2Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        m.columns_[j] = {static_cast<Index>(j)};
    return m;
}

std::size_t SparseZ2Matrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

void SparseZ2Matrix::set_column(std::size_t j, Column column)
{
    std::sort(column.begin(), column.end());
    columns_[j] = std::move(column);
}

void SparseZ2Matrix::append_column(Column column)
{
    std::sort(column.begin(), column.end());
    assert(column.empty() || column.back() < rows_);
    columns_.push_back(std::move(column));
}

bool SparseZ2Matrix::get(std::size_t i, std::size_t j) const
{
    const auto& c = columns_[j];
    return std::binary_search(c.begin(), c.end(), static_cast<Index>(i));
}

SparseZ2Matrix SparseZ2Matrix::select_rows(std::span<const std::uint8_t> keep) const
{
    std::vector<Index> renumber(rows_, 0);
    Index next = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        if (keep[i])
            renumber[i] = next++;
    SparseZ2Matrix out(next, cols());
    for (std::size_t j = 0; j < cols(); ++j)
    {
        auto& dst = out.columns_[j];
        for (Index i : columns_[j])
            if (keep[i])
                dst.push_back(renumber[i]);
    }
    return out;
}

SparseZ2Matrix SparseZ2Matrix::select_columns(std::span<const Index> cols) const
{
    SparseZ2Matrix out(rows_, 0);
    out.columns_.reserve(cols.size());
    for (Index j : cols)
        out.columns_.push_back(columns_[j]);
    return out;
}

SparseZ2Matrix SparseZ2Matrix::permute_rows(std::span<const Index> row_position) const
{
    SparseZ2Matrix out(rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j)
    {
        auto& dst = out.columns_[j];
        dst.reserve(columns_[j].size());
        for (Index i : columns_[j])
            dst.push_back(row_position[i]);
        std::sort(dst.begin(), dst.end());
    }
    return out;
}

SparseZ2Matrix SparseZ2Matrix::transpose() const
{
    SparseZ2Matrix out(cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (Index i : columns_[j])
            out.columns_[i].push_back(static_cast<Index>(j));
    return out;
}

SparseZ2Matrix SparseZ2Matrix::multiply(const SparseZ2Matrix& rhs) const
{
    if (cols() != rhs.rows())
        throw Error(ErrorKind::InvalidArgument, "matrix dimensions do not agree");
    SparseZ2Matrix out(rows_, rhs.cols());
    std::vector<std::uint8_t> acc(rows_, 0);
    std::vector<Index> touched;
    for (std::size_t j = 0; j < rhs.cols(); ++j)
    {
        touched.clear();
        for (Index k : rhs.columns_[j])
            for (Index i : columns_[k])
            {
                if (!acc[i])
                    touched.push_back(i);
                acc[i] ^= 1;
            }
        auto& dst = out.columns_[j];
        for (Index i : touched)
        {
            if (acc[i])
                dst.push_back(i);
            acc[i] = 0;
        }
        std::sort(dst.begin(), dst.end());
        dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
    }
    return out;
}

SparseZ2Matrix SparseZ2Matrix::hconcat(const SparseZ2Matrix& rhs) const
{
    if (rows_ != rhs.rows_)
        throw Error(ErrorKind::InvalidArgument, "row counts differ in concatenation");
    SparseZ2Matrix out(rows_, columns_);
    out.columns_.insert(out.columns_.end(), rhs.columns_.begin(), rhs.columns_.end());
    return out;
}

void write_triplets(std::ostream& out, const SparseZ2Matrix& m)
{
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (Index i : m.column(j))
            out << i << ' ' << j << '\n';
}

SparseZ2Matrix read_triplets(std::istream& in)
{
    std::size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols))
        throw Error(ErrorKind::ParseError, "missing triplet header");
    std::vector<SparseZ2Matrix::Column> columns(cols);
    std::size_t r = 0, c = 0;
    while (in >> r >> c)
    {
        if (r >= rows || c >= cols)
            throw Error(ErrorKind::ParseError, "triplet entry out of range");
        columns[c].push_back(static_cast<Index>(r));
    }
    for (auto& col : columns)
    {
        std::sort(col.begin(), col.end());
        if (std::adjacent_find(col.begin(), col.end()) != col.end())
            throw Error(ErrorKind::ParseError, "duplicate triplet entry");
    }
    return SparseZ2Matrix(rows, std::move(columns));
}

void add_into(SparseZ2Matrix::Column& a, const SparseZ2Matrix::Column& b)
{
    a = symmetric_difference(a, b);
}

ReductionResult column_reduce(const SparseZ2Matrix& m)
{
    ReductionResult result{m, SparseZ2Matrix::identity(m.cols()), {}};
    result.low.assign(m.cols(), std::nullopt);

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(m.rows(), kNone);

    std::vector<SparseZ2Matrix::Column> r(m.columns());
    std::vector<SparseZ2Matrix::Column> v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        v[j] = {static_cast<Index>(j)};

    for (std::size_t i = 0; i < m.cols(); ++i)
    {
        auto& col = r[i];
        while (!col.empty() && owner[col.back()] != kNone)
        {
            const std::size_t j = owner[col.back()];
            add_into(col, r[j]);
            add_into(v[i], v[j]);
        }
        if (!col.empty())
        {
            owner[col.back()] = i;
            result.low[i] = col.back();
        }
    }
    result.reduced = SparseZ2Matrix(m.rows(), std::move(r));
    result.transform = SparseZ2Matrix(m.cols(), std::move(v));
    return result;
}

std::size_t rank_dense(const SparseZ2Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    // Pack along the shorter side.
    if (m.rows() <= m.cols())
    {
        const std::size_t w = words_for(m.rows());
        std::vector<std::vector<Word>> vecs;
        vecs.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
        {
            std::vector<Word> v(w, 0);
            for (Index i : m.column(j))
                v[i / 64] |= Word{1} << (i % 64);
            vecs.push_back(std::move(v));
        }
        return rank_of_rows(std::move(vecs), m.rows());
    }
    const std::size_t w = words_for(m.cols());
    std::vector<std::vector<Word>> vecs(m.rows(), std::vector<Word>(w, 0));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (Index i : m.column(j))
            vecs[i][j / 64] |= Word{1} << (j % 64);
    return rank_of_rows(std::move(vecs), m.cols());
}

std::size_t rank_sparse(const SparseZ2Matrix& m)
{
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(m.rows(), kNone);
    std::vector<SparseZ2Matrix::Column> r(m.columns());
    std::size_t rank = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
    {
        auto& col = r[i];
        while (!col.empty() && owner[col.back()] != kNone)
            add_into(col, r[owner[col.back()]]);
        if (!col.empty())
        {
            owner[col.back()] = i;
            ++rank;
        }
    }
    return rank;
}

std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b)
{
    return mix_seed(mix_seed(mix_seed(master) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

std::size_t rank_randomized(const SparseZ2Matrix& m, std::uint64_t seed, int trials)
{
    if (trials < 1)
        throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
    if (m.rows() == 0 || m.cols() == 0 || m.nonzeros() == 0)
        return 0;

    // Oversampling keeps the per-sketch success probability well above 1/2
    // even when the probe size equals the rank.
    constexpr std::size_t kOversample = 8;

    std::size_t hi = std::min(m.rows(), m.cols());
    // One oversized sketch almost always hits the rank, so the search starts
    // from its (certified) value and first probes just above it.
    std::mt19937_64 opening(derive_seed(seed, ~std::uint64_t{0}));
    std::size_t lo = sketch_rank(m, hi + kOversample, opening);
    std::uint64_t step = 0;
    while (lo < hi)
    {
        const std::size_t probe = step == 0 ? lo + 1 : lo + (hi - lo + 1) / 2;
        bool reached = false;
        for (int t = 0; t < trials && !reached; ++t)
        {
            std::mt19937_64 rng(derive_seed(seed, step, static_cast<std::uint64_t>(t)));
            const std::size_t r = sketch_rank(m, probe + kOversample, rng);
            lo = std::max(lo, r);
            reached = r >= probe;
        }
        if (!reached)
            hi = probe - 1;
        hi = std::max(hi, lo);
        ++step;
    }
    return lo;
}

bool ColumnSpace::reduce(SparseZ2Matrix::Column& v) const
{
    while (!v.empty())
    {
        const auto it = pivot_.find(v.back());
        if (it == pivot_.end())
            return false;
        add_into(v, basis_[it->second]);
    }
    return true;
}

bool ColumnSpace::add(SparseZ2Matrix::Column v)
{
    std::sort(v.begin(), v.end());
    if (reduce(v))
        return false;
    pivot_.emplace(v.back(), basis_.size());
    basis_.push_back(std::move(v));
    return true;
}

bool ColumnSpace::contains(SparseZ2Matrix::Column v) const
{
    std::sort(v.begin(), v.end());
    return reduce(v);
}

}  // namespace homolocal
