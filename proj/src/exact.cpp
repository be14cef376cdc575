#include "partitions/exact.hpp"

#include <algorithm>
#include <string>

#include "partitions/error.hpp"

namespace partitions::exact {

namespace {

constexpr const char* kModule = "exact";

// Unbounded knapsack over the given part sizes: ways[m] counts multisets of
// parts summing to m.
std::vector<BigCount> multiset_counts(std::uint32_t n, const std::vector<std::uint64_t>& parts)
{
    std::vector<BigCount> ways(n + 1);
    ways[0] = 1;
    for (auto part : parts) {
        if (part == 0 || part > n)
            continue;
        for (std::size_t m = part; m <= n; ++m)
            ways[m] += ways[m - part];
    }
    return ways;
}

} // namespace

PartitionFamily PartitionFamily::unrestricted(Kind kind)
{
    return {kind, Restriction::none, 0};
}

PartitionFamily PartitionFamily::max_parts(std::int64_t N, Kind kind)
{
    if (N < 0)
        fail(ErrorKind::Domain, kModule, "maxParts requires N >= 0, got " + std::to_string(N));
    return {kind, Restriction::max_parts, N};
}

PartitionFamily PartitionFamily::distinct_parts()
{
    return {Kind::linear, Restriction::distinct_parts, 0};
}

PartitionFamily PartitionFamily::max_part_value(std::int64_t s)
{
    if (s < 1)
        fail(ErrorKind::Domain, kModule, "maxPartValue requires s >= 1, got " + std::to_string(s));
    return {Kind::linear, Restriction::max_part_value, s};
}

PartitionFamily PartitionFamily::power_parts(std::int64_t exponent)
{
    if (exponent < 2)
        fail(ErrorKind::Domain, kModule,
             "powerParts requires exponent >= 2, got " + std::to_string(exponent));
    return {Kind::linear, Restriction::power_parts, exponent};
}

PartitionFamily PartitionFamily::raw(Kind kind, Restriction restriction, std::int64_t parameter)
{
    return {kind, restriction, parameter};
}

std::vector<BigCount> linear_table(std::uint32_t n)
{
    std::vector<BigCount> p(n + 1);
    p[0] = 1;
    for (std::int64_t m = 1; m <= n; ++m) {
        BigCount acc = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            BigCount term = p[m - g1];
            if (g2 <= m)
                term += p[m - g2];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[m] = std::move(acc);
    }
    return p;
}

BigCount count_linear(std::uint32_t n)
{
    return linear_table(n)[n];
}

std::vector<BigCount> linear_restricted_column(std::uint32_t n, std::uint32_t N_max)
{
    // Conjugation: at most N parts <-> every part <= N. Admitting part size N
    // on top of sizes 1..N-1 turns p_{N-1}(.) into p_N(.).
    std::vector<BigCount> ways(n + 1);
    ways[0] = 1;
    std::vector<BigCount> column;
    column.reserve(N_max + 1);
    column.push_back(ways[n]);
    for (std::uint32_t N = 1; N <= N_max; ++N) {
        for (std::size_t m = N; m <= n; ++m)
            ways[m] += ways[m - N];
        column.push_back(ways[n]);
    }
    return column;
}

BigCount count_linear_restricted(std::uint32_t n, std::uint32_t N)
{
    return linear_restricted_column(n, std::min(N, n))[std::min(N, n)];
}

BigCount count_linear_at_most_parts_direct(std::uint32_t n, std::uint32_t N)
{
    if (n == 0)
        return 1;
    const std::uint32_t K = std::min(N, n);
    // exactly[m][k]: partitions of m into exactly k parts.
    std::vector<std::vector<BigCount>> exactly(n + 1, std::vector<BigCount>(K + 1));
    exactly[0][0] = 1;
    for (std::uint32_t m = 1; m <= n; ++m)
        for (std::uint32_t k = 1; k <= std::min(m, K); ++k)
            exactly[m][k] = exactly[m - 1][k - 1] + exactly[m - k][k];
    BigCount total = 0;
    for (std::uint32_t k = 1; k <= K; ++k)
        total += exactly[n][k];
    return total;
}

BigCount count_variant(std::uint32_t n, const PartitionFamily& family, std::uint32_t cap)
{
    const auto param = family.parameter();
    if (family.kind() == Kind::plane) {
        switch (family.restriction()) {
        case Restriction::none:
            return count_plane(n);
        case Restriction::max_parts:
            if (param < 0)
                fail(ErrorKind::Domain, kModule, "maxParts requires N >= 0");
            return count_plane_restricted(n, static_cast<std::uint32_t>(std::min<std::int64_t>(param, n)), cap);
        default:
            fail(ErrorKind::UnsupportedFamily, kModule,
                 "distinct, max-part-value and power restrictions are defined for linear partitions only");
        }
    }

    switch (family.restriction()) {
    case Restriction::none:
        return count_linear(n);
    case Restriction::max_parts:
        if (param < 0)
            fail(ErrorKind::Domain, kModule, "maxParts requires N >= 0");
        return count_linear_restricted(n, static_cast<std::uint32_t>(std::min<std::int64_t>(param, n)));
    case Restriction::distinct_parts: {
        std::vector<BigCount> ways(n + 1);
        ways[0] = 1;
        for (std::size_t part = 1; part <= n; ++part)
            for (std::size_t m = n; m >= part; --m)
                ways[m] += ways[m - part];
        return ways[n];
    }
    case Restriction::max_part_value: {
        if (param < 1)
            fail(ErrorKind::Domain, kModule, "maxPartValue requires s >= 1");
        std::vector<std::uint64_t> parts;
        for (std::int64_t s = 1; s <= std::min<std::int64_t>(param, n); ++s)
            parts.push_back(static_cast<std::uint64_t>(s));
        return multiset_counts(n, parts)[n];
    }
    case Restriction::power_parts: {
        if (param < 2)
            fail(ErrorKind::Domain, kModule, "powerParts requires exponent >= 2");
        std::vector<std::uint64_t> parts;
        for (std::uint64_t base = 1;; ++base) {
            std::uint64_t value = 1;
            bool too_big = false;
            for (std::int64_t e = 0; e < param; ++e) {
                value *= base;
                if (value > n) {
                    too_big = true;
                    break;
                }
            }
            if (too_big)
                break;
            parts.push_back(value);
        }
        return multiset_counts(n, parts)[n];
    }
    }
    fail(ErrorKind::UnsupportedFamily, kModule, "unknown restriction");
}

} // namespace partitions::exact
