#include <array>
#include <string>

#include "partitions/error.hpp"
#include "partitions/specfun.hpp"

namespace partitions::specfun {

namespace {

constexpr const char* kModule = "specfun";

// B_0..B_60 from sum_{j=0}^{m} C(m+1, j) B_j = 0.
const std::array<Rational, max_bernoulli_index + 1>& bernoulli_table()
{
    static const auto table = [] {
        std::array<Rational, max_bernoulli_index + 1> b;
        b[0] = 1;
        for (int m = 1; m <= max_bernoulli_index; ++m) {
            boost::multiprecision::cpp_int binom = 1; // C(m+1, 0)
            Rational acc = 0;
            for (int j = 0; j < m; ++j) {
                acc += Rational(binom) * b[j];
                binom = binom * (m + 1 - j) / (j + 1);
            }
            b[m] = -acc / (m + 1);
        }
        return b;
    }();
    return table;
}

} // namespace

Rational bernoulli(int m)
{
    if (m < 0 || m > max_bernoulli_index)
        fail(ErrorKind::OutOfRange, kModule,
             "bernoulli index must lie in [0, " + std::to_string(max_bernoulli_index) + "], got " +
                 std::to_string(m));
    if (m % 2 != 0)
        fail(ErrorKind::Domain, kModule, "bernoulli index must be even, got " + std::to_string(m));
    return bernoulli_table()[m];
}

EMSeries em_c_series(int k_max)
{
    if (k_max < 2 || k_max > 10)
        fail(ErrorKind::OutOfRange, kModule, "em_c_series requires 2 <= k_max <= 10, got " + std::to_string(k_max));

    // For f(x) = -x ln(1 - e^{-beta x}) only the -x ln x piece of the small-beta
    // expansion leaves beta-independent constants; its (2k-1)-th derivative at
    // x = 1 is -(2k-3)!, so the k-th correction is B_2k (2k-3)!/(2k)!.
    EMSeries series;
    Rational c = Rational(-1, 6);
    for (int k = 2; k <= k_max; ++k) {
        const int m = 2 * k;
        EMSeriesTerm term;
        term.k = k;
        term.f_term = bernoulli(m) / Rational(m * (m - 1) * (m - 2));
        term.contribution = -term.f_term;
        term.magnitude = abs(term.f_term).convert_to<double>();
        c += term.contribution;
        series.terms.push_back(term);
        series.partial_sums.push_back(c);
    }
    return series;
}

int optimal_truncation(std::span<const EMSeriesTerm> terms)
{
    if (terms.empty())
        fail(ErrorKind::EmptyInput, kModule, "optimal_truncation needs at least one term");
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (terms[i].k != static_cast<int>(i) + 2)
            fail(ErrorKind::Domain, kModule, "series terms must be consecutive starting at k = 2");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i].magnitude < terms[best].magnitude)
            best = i;
    return terms[best].k;
}

} // namespace partitions::specfun
