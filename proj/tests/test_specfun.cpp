#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>


#include "partitions/specfun.hpp"
#include "support.hpp"

using namespace partitions;
using namespace partitions::specfun;

namespace {

HighFloat parse(const char* digits)
{
    return HighFloat(digits);
}

double rel(const HighFloat& a, const HighFloat& b)
{
    return static_cast<double>(abs(a - b) / abs(b));
}

} // namespace

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(60).convert_to<double>() < -1e30);

    CHECK(thrown_kind([] { bernoulli(62); }) == ErrorKind::OutOfRange);
    CHECK(thrown_kind([] { bernoulli(-2); }) == ErrorKind::OutOfRange);
    CHECK(thrown_kind([] { bernoulli(3); }) == ErrorKind::Domain);
}

TEST_CASE("Bernoulli defining recurrence")
{
    // B_1 = -1/2 in this convention; odd indices above 1 vanish.
    auto B = [](int j) -> Rational {
        if (j == 1)
            return Rational(-1, 2);
        if (j % 2 == 1)
            return 0;
        return bernoulli(j);
    };
    for (int m = 1; m <= 60; ++m) {
        Rational sum = 0;
        boost::multiprecision::cpp_int binom = 1; // C(m+1, 0)
        for (int j = 0; j <= m; ++j) {
            sum += Rational(binom) * B(j);
            binom = binom * (m + 1 - j) / (j + 1);
        }
        CAPTURE(m);
        CHECK(sum == 0);
    }
}

TEST_CASE("zeta(3) by two routes")
{
    const auto reference = parse("1.202056903159594285399738161511449990764986292340498881792");
    CHECK(rel(zeta3(), reference) < 1e-45);
    CHECK(rel(zeta3_euler_maclaurin(), reference) < 1e-30);
    CHECK(rel(zeta3(), zeta3_euler_maclaurin()) < 1e-30);
    CHECK(2.0 * zeta3_d() == doctest::Approx(2.4041138063191885).epsilon(1e-15));
}

TEST_CASE("zeta'(-1) and Glaisher")
{
    const auto reference = parse("-0.1654211437004509292139196602427806427640");
    CHECK(rel(zeta_prime_minus1(), reference) < 1e-35);
    CHECK(rel(log_glaisher(), parse("0.2487544770337842625472529935761139760974")) < 1e-35);
    CHECK(rel(zeta_prime_minus1(), HighFloat(1) / 12 - log_glaisher()) < 1e-45);
    CHECK(zeta_prime_minus1_d() == doctest::Approx(-0.165421).epsilon(1e-6));
}

TEST_CASE("Euler-Maclaurin constant series")
{
    const auto s = em_c_series(6);
    REQUIRE(s.terms.size() == 5);
    const double expected[] = {0.0013889, 0.0001984, 0.0000992, 0.0001052, 0.0001918};
    for (int i = 0; i < 5; ++i) {
        CAPTURE(i);
        const auto& t = s.terms[i];
        CHECK(t.k == i + 2);
        CHECK(std::abs(t.magnitude - expected[i]) <= 0.5e-7);
        CHECK(t.contribution == -t.f_term);
        // |B_2k| (2k-3)! / (2k)! = |B_2k| / (2k (2k-1) (2k-2))
        const int m = 2 * t.k;
        CHECK(abs(t.f_term) == abs(bernoulli(m)) / (m * (m - 1) * (m - 2)));
    }
    CHECK(s.partial_sums[0] == Rational(-1, 6) + Rational(1, 720));
    CHECK(s.partial_sums[1] == Rational(-139, 840));
    CHECK(s.partial_sums[2] == Rational(-1667, 10080));
    CHECK(em_c_series(4).partial_sum() == Rational(-1667, 10080));
    CHECK(optimal_truncation(s.terms) == 4);
    CHECK(optimal_truncation(em_c_series(10).terms) == 4);

    CHECK(thrown_kind([] { em_c_series(1); }) == ErrorKind::OutOfRange);
    CHECK(thrown_kind([] { em_c_series(11); }) == ErrorKind::OutOfRange);
}

TEST_CASE("optimal truncation edge cases")
{
    const auto s = em_c_series(3);
    CHECK(optimal_truncation(std::span(s.terms).first(1)) == 2);
    CHECK(optimal_truncation(s.terms) == 3); // strictly decreasing: last k
    CHECK(thrown_kind([] { optimal_truncation({}); }) == ErrorKind::EmptyInput);
    auto gap = em_c_series(5).terms;
    gap.erase(gap.begin() + 1);
    CHECK(thrown_kind([&] { optimal_truncation(gap); }) == ErrorKind::Domain);
}

TEST_CASE("partial sums stay within the first omitted term of zeta'(-1)")
{
    const auto s = em_c_series(5);
    const double z = zeta_prime_minus1_d();
    const double c3 = s.partial_sums[1].convert_to<double>();
    const double c4 = s.partial_sums[2].convert_to<double>();
    CHECK(std::abs(c3 - z) <= 6e-5);
    CHECK(std::abs(c4 - z) <= 5e-5);
    CHECK(std::abs(c3 - z) <= s.terms[2].magnitude);
    CHECK(std::abs(c4 - z) <= s.terms[3].magnitude);
}
