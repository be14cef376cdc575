#include <boost/multiprecision/cpp_bin_float.hpp>

#include "partitions/specfun.hpp"

namespace partitions::specfun {

namespace {

HighFloat to_high(const Rational& r)
{
    return HighFloat(numerator(r)) / HighFloat(denominator(r));
}

struct ConstantTable {
    HighFloat zeta3;
    HighFloat log_glaisher;
    HighFloat zeta_prime_minus1;
    double zeta3_d;
    double zeta_prime_minus1_d;
};

HighFloat apery_series()
{
    HighFloat sum = 0;
    HighFloat central = 1; // C(2k, k)
    for (int k = 1; k <= 120; ++k) {
        central = central * (2 * k) * (2 * k - 1) / (HighFloat(k) * k);
        const HighFloat term = 1 / (HighFloat(k) * k * k * central);
        sum += (k % 2 == 1) ? term : HighFloat(-term);
    }
    return sum * 5 / 2;
}

HighFloat hyperfactorial_log_glaisher()
{
    // sum_{k<=M} k ln k = (M^2/2 + M/2 + 1/12) ln M - M^2/4 + ln A
    //                     - sum_{j>=2} B_2j (2j-3)! / ((2j)! M^(2j-2)).
    constexpr int M = 60;
    HighFloat sum = 0;
    for (int k = 2; k <= M; ++k)
        sum += HighFloat(k) * log(HighFloat(k));
    const HighFloat m = M;
    HighFloat value = sum - (m * m / 2 + m / 2 + HighFloat(1) / 12) * log(m) + m * m / 4;
    HighFloat m_pow = m * m;
    for (int j = 2; j <= 24; ++j) {
        const int d = 2 * j;
        value += to_high(bernoulli(d) / Rational(d * (d - 1) * (d - 2))) / m_pow;
        m_pow *= m * m;
    }
    return value;
}

const ConstantTable& table()
{
    static const ConstantTable t = [] {
        ConstantTable c;
        c.zeta3 = apery_series();
        c.log_glaisher = hyperfactorial_log_glaisher();
        c.zeta_prime_minus1 = HighFloat(1) / 12 - c.log_glaisher;
        c.zeta3_d = c.zeta3.convert_to<double>();
        c.zeta_prime_minus1_d = c.zeta_prime_minus1.convert_to<double>();
        return c;
    }();
    return t;
}

} // namespace

HighFloat zeta3() { return table().zeta3; }

HighFloat zeta3_euler_maclaurin()
{
    constexpr int M = 40;
    HighFloat sum = 0;
    for (int k = 1; k < M; ++k)
        sum += 1 / (HighFloat(k) * k * k);
    const HighFloat m = M;
    // Tail from k = M: integral, half endpoint, then the Bernoulli corrections
    // B_2j (2j+1)/2 M^(-2j-2) coming from f^(2j-1)(x) = -(2j+1)!/2 x^(-2j-2).
    sum += 1 / (2 * m * m) + 1 / (2 * m * m * m);
    HighFloat m_pow = m * m * m * m;
    for (int j = 1; j <= 25; ++j) {
        sum += to_high(bernoulli(2 * j) * (2 * j + 1) / 2) / m_pow;
        m_pow *= m * m;
    }
    return sum;
}

HighFloat log_glaisher() { return table().log_glaisher; }
HighFloat zeta_prime_minus1() { return table().zeta_prime_minus1; }
double zeta3_d() { return table().zeta3_d; }
double zeta_prime_minus1_d() { return table().zeta_prime_minus1_d; }

} // namespace partitions::specfun
