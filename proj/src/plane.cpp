#include <algorithm>
#include <numeric>
#include <string>

#include "partitions/error.hpp"
#include "partitions/exact.hpp"

namespace partitions::exact {

namespace {

constexpr const char* kModule = "exact";

void check_cap(std::uint32_t n, std::uint32_t cap)
{
    if (n > cap)
        fail(ErrorKind::CapExceeded, kModule,
             "plane partition enumeration limited to n <= " + std::to_string(cap) + ", got n = " +
                 std::to_string(n));
}

// Row-by-row depth-first generation. Each new row is a partition dominated
// entrywise by the row above it, which is exactly the column condition.
class PlaneEnumerator {
public:
    explicit PlaneEnumerator(const std::function<void(const PlanePartitionArray&)>& visit)
        : visit_(visit)
    {}

    void run(std::uint32_t n) { next_row(n); }

private:
    void next_row(std::uint32_t remaining)
    {
        if (remaining == 0) {
            visit_(current_);
            return;
        }
        const std::size_t max_len = current_.rows.empty() ? remaining : current_.rows.back().size();
        std::vector<std::uint32_t> row;
        row.reserve(max_len);
        grow(row, remaining, max_len);
    }

    void grow(std::vector<std::uint32_t>& row, std::uint32_t remaining, std::size_t max_len)
    {
        if (!row.empty()) {
            current_.rows.push_back(row);
            next_row(remaining);
            current_.rows.pop_back();
        }
        const std::size_t j = row.size();
        if (j >= max_len || remaining == 0)
            return;
        std::uint32_t limit = remaining;
        if (j > 0)
            limit = std::min(limit, row[j - 1]);
        if (!current_.rows.empty())
            limit = std::min(limit, current_.rows.back()[j]);
        for (std::uint32_t v = limit; v >= 1; --v) {
            row.push_back(v);
            grow(row, remaining - v, max_len);
            row.pop_back();
        }
    }

    const std::function<void(const PlanePartitionArray&)>& visit_;
    PlanePartitionArray current_;
};

} // namespace

std::uint64_t PlanePartitionArray::total() const
{
    std::uint64_t sum = 0;
    for (const auto& row : rows)
        sum = std::accumulate(row.begin(), row.end(), sum);
    return sum;
}

std::size_t PlanePartitionArray::nonzero_entries() const
{
    std::size_t count = 0;
    for (const auto& row : rows)
        count += static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](auto v) { return v > 0; }));
    return count;
}

bool PlanePartitionArray::is_valid() const
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.empty())
            return false;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0)
                return false;
            if (j > 0 && row[j] > row[j - 1])
                return false;
            if (i > 0) {
                // Missing cells above count as zero.
                if (j >= rows[i - 1].size() || row[j] > rows[i - 1][j])
                    return false;
            }
        }
    }
    return true;
}

std::vector<BigCount> plane_table(std::uint32_t n)
{
    std::vector<BigCount> c(n + 1);
    c[0] = 1;
    // Multiply by (1 - x^k)^(-k) as k successive divisions by (1 - x^k),
    // each one an in-place prefix sum with stride k.
    for (std::uint32_t k = 1; k <= n; ++k)
        for (std::uint32_t rep = 0; rep < k; ++rep)
            for (std::size_t m = k; m <= n; ++m)
                c[m] += c[m - k];
    return c;
}

BigCount count_plane(std::uint32_t n)
{
    return plane_table(n)[n];
}

void for_each_plane(std::uint32_t n, const std::function<void(const PlanePartitionArray&)>& visit,
                    std::uint32_t cap)
{
    check_cap(n, cap);
    PlaneEnumerator(visit).run(n);
}

std::vector<PlanePartitionArray> enumerate_plane(std::uint32_t n, std::uint32_t cap)
{
    if (n == 0)
        fail(ErrorKind::Domain, kModule, "enumerate_plane requires n >= 1");
    check_cap(n, cap);
    std::vector<PlanePartitionArray> out;
    for_each_plane(n, [&](const PlanePartitionArray& a) { out.push_back(a); }, cap);
    return out;
}

std::vector<BigCount> plane_nonzero_histogram(std::uint32_t n, std::uint32_t cap)
{
    check_cap(n, cap);
    std::vector<std::uint64_t> hist(n + 1, 0);
    for_each_plane(n, [&](const PlanePartitionArray& a) { ++hist[a.nonzero_entries()]; }, cap);
    return {hist.begin(), hist.end()};
}

BigCount count_plane_restricted(std::uint32_t n, std::uint32_t N, std::uint32_t cap)
{
    const auto hist = plane_nonzero_histogram(n, cap);
    BigCount total = 0;
    for (std::size_t m = 0; m <= std::min<std::size_t>(N, n); ++m)
        total += hist[m];
    return total;
}

} // namespace partitions::exact
