#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace homolocal {

/// Dense internal vertex id, assigned in input-encounter order.
using VertexId = std::uint32_t;
/// Vertex id as it appears in input files and output JSON.
using VertexLabel = std::int64_t;
/// Position of a simplex within its dimension.
using Index = std::uint32_t;

/**
 * Hop distance in the 1-skeleton, or +inf for unreachable and sealed
 * simplices.  Infinity orders after every finite value; arithmetic is only
 * legal on finite values.
 */
class Distance
{
  public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::uint32_t value) : value_(value)
    {
        assert(value != kInfinite);
    }

    static constexpr Distance infinity()
    {
        Distance d;
        d.value_ = kInfinite;
        return d;
    }

    constexpr bool is_finite() const { return value_ != kInfinite; }

    constexpr std::uint32_t value() const
    {
        assert(is_finite());
        return value_;
    }

    constexpr auto operator<=>(const Distance&) const = default;

  private:
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t value_ = 0;
};

enum class ErrorKind
{
    EmptyInput,
    ParseError,
    InvalidArgument,
    SealedCenter,
    SealedInput,
    NotACycle,
    NoNontrivialClass,
    InternalInconsistency,
    TooLarge,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

/**
 * A Z2 chain of d-simplices: the sorted set of simplex indices (within
 * dimension d) with coefficient one.
 */
struct Chain
{
    int dim = 0;
    std::vector<Index> simplices;

    bool empty() const { return simplices.empty(); }
    std::size_t size() const { return simplices.size(); }

    bool operator==(const Chain&) const = default;
};

/// Symmetric difference of two chains of the same dimension.
Chain operator+(const Chain& a, const Chain& b);

/// Symmetric difference of two sorted index lists.
std::vector<Index> symmetric_difference(const std::vector<Index>& a, const std::vector<Index>& b);

}  // namespace homolocal
