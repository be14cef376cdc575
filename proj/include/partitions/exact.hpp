#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace partitions {

/// Exact nonnegative partition count. Arbitrary precision; never overflows.
using BigCount = boost::multiprecision::cpp_int;

namespace exact {

enum class Kind { linear, plane };

enum class Restriction { none, max_parts, distinct_parts, max_part_value, power_parts };

/// A partition family: linear or plane, plus at most one restriction.
///
/// Build with the named constructors; they enforce the parameter ranges
/// (N >= 0, s >= 1, exponent >= 2). distinct/max-part/power restrictions only
/// exist for linear partitions.
class PartitionFamily {
public:
    static PartitionFamily unrestricted(Kind kind = Kind::linear);
    static PartitionFamily max_parts(std::int64_t N, Kind kind = Kind::linear);
    static PartitionFamily distinct_parts();
    static PartitionFamily max_part_value(std::int64_t s);
    static PartitionFamily power_parts(std::int64_t exponent);

    /// Unchecked combination, used to exercise the UnsupportedFamily path.
    static PartitionFamily raw(Kind kind, Restriction restriction, std::int64_t parameter);

    Kind kind() const noexcept { return kind_; }
    Restriction restriction() const noexcept { return restriction_; }
    std::int64_t parameter() const noexcept { return parameter_; }

private:
    PartitionFamily(Kind k, Restriction r, std::int64_t p) : kind_(k), restriction_(r), parameter_(p) {}

    Kind kind_;
    Restriction restriction_;
    std::int64_t parameter_;
};

/// Plane partition stored row by row. Rows are non-increasing, every row is
/// no longer than the one above and dominated entrywise by it.
struct PlanePartitionArray {
    std::vector<std::vector<std::uint32_t>> rows;

    std::uint64_t total() const;
    std::size_t nonzero_entries() const;
    /// Weak decrease along rows and columns, all stored entries positive.
    bool is_valid() const;

    friend bool operator==(const PlanePartitionArray&, const PlanePartitionArray&) = default;
    friend auto operator<=>(const PlanePartitionArray&, const PlanePartitionArray&) = default;
};

inline constexpr std::uint32_t default_enumeration_cap = 25;

/// p(n) by Euler's pentagonal-number recurrence. p(0) = 1.
BigCount count_linear(std::uint32_t n);

/// p(0..n) in one pass.
std::vector<BigCount> linear_table(std::uint32_t n);

/// Partitions of n into at most N parts.
BigCount count_linear_restricted(std::uint32_t n, std::uint32_t N);

/// p_N(n) for N = 0..N_max at fixed n. Entry N is the count with at most N
/// parts; built by adding allowed part sizes one at a time (conjugate view).
std::vector<BigCount> linear_restricted_column(std::uint32_t n, std::uint32_t N_max);

/// Partitions of n into at most N parts by the "exactly k parts" recurrence
/// p(n, k) = p(n-1, k-1) + p(n-k, k). Independent of the part-size DP above.
BigCount count_linear_at_most_parts_direct(std::uint32_t n, std::uint32_t N);

/// p2D(n): coefficient of x^n in prod_k (1 - x^k)^(-k).
BigCount count_plane(std::uint32_t n);

/// p2D(0..n) in one pass of the product expansion.
std::vector<BigCount> plane_table(std::uint32_t n);

/// Calls visit for every plane partition of n exactly once.
/// Throws CapExceeded when n > cap.
void for_each_plane(std::uint32_t n,
                    const std::function<void(const PlanePartitionArray&)>& visit,
                    std::uint32_t cap = default_enumeration_cap);

/// All plane partitions of n, in generation order. Requires 1 <= n <= cap.
std::vector<PlanePartitionArray> enumerate_plane(std::uint32_t n,
                                                 std::uint32_t cap = default_enumeration_cap);

/// Plane partitions of n with at most N nonzero entries (the boson-count
/// reading of "parts"; see README). Enumeration based, so n <= cap.
BigCount count_plane_restricted(std::uint32_t n, std::uint32_t N,
                                std::uint32_t cap = default_enumeration_cap);

/// Histogram h[m] = number of plane partitions of n with exactly m nonzero
/// entries, m = 0..n. One enumeration serves every N.
std::vector<BigCount> plane_nonzero_histogram(std::uint32_t n,
                                              std::uint32_t cap = default_enumeration_cap);

/// Exact count for any supported family.
BigCount count_variant(std::uint32_t n, const PartitionFamily& family,
                       std::uint32_t cap = default_enumeration_cap);

} // namespace exact
} // namespace partitions
