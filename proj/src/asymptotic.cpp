#include "partitions/asymptotic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "partitions/error.hpp"
#include "partitions/specfun.hpp"

namespace partitions::asymptotic {

namespace {

constexpr const char* kModule = "asymptotic";
constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream msg;
        msg << what << " must be positive and finite, got " << v;
        fail(ErrorKind::Domain, kModule, msg.str());
    }
}

double two_zeta3() { return 2.0 * specfun::zeta3_d(); }

} // namespace

Estimate Estimate::from_log(double log_value)
{
    if (!std::isfinite(log_value))
        fail(ErrorKind::Domain, kModule, "estimate logarithm is not finite");
    Estimate e;
    e.log_value = log_value;
    e.value = log_value > std::log(std::numeric_limits<double>::max())
                  ? std::numeric_limits<double>::infinity()
                  : std::exp(log_value);
    return e;
}

Estimate hr_estimate(double n)
{
    require_positive(n, "n");
    return Estimate::from_log(kPi * std::sqrt(2.0 * n / 3.0) - std::log(4.0 * std::sqrt(3.0) * n));
}

Estimate hr_corrected(double n)
{
    require_positive(n, "n");
    const double a = kPi * std::sqrt(2.0 * n / 3.0);
    // e^{28a/27} K(a/27) = e^{a} * [e^{a/27} K(a/27)].
    const double log_prefactor = -std::log(18.0 * std::pow(6.0, 0.25)) - 0.75 * std::log(n);
    return Estimate::from_log(log_prefactor + a + std::log(specfun::bessel_k_scaled(1.0 / 3.0, a / 27.0)));
}

Estimate wright_estimate(double n, double c)
{
    require_positive(n, "n");
    const double tz = two_zeta3();
    const double log_prefactor = (7.0 / 36.0) * std::log(tz) - 0.5 * std::log(6.0 * kPi);
    return Estimate::from_log(log_prefactor - (25.0 / 36.0) * std::log(n) +
                              1.5 * std::cbrt(tz) * std::pow(n, 2.0 / 3.0) + c);
}

Estimate wright_estimate(double n)
{
    return wright_estimate(n, specfun::zeta_prime_minus1_d());
}

Estimate wright_corrected(double n, double c)
{
    require_positive(n, "n");
    const double tz = two_zeta3();
    const double u = std::cbrt(tz) * std::pow(n, 2.0 / 3.0) / 16.0;
    const double log_prefactor = (13.0 / 36.0) * std::log(tz) - std::log(4.0 * std::sqrt(3.0) * kPi);
    // 25/16 t n^{2/3} = 3/2 t n^{2/3} + u; the u part is absorbed by the scaled K.
    return Estimate::from_log(log_prefactor - (13.0 / 36.0) * std::log(n) + 24.0 * u + c +
                              std::log(specfun::bessel_k_scaled(1.0 / 3.0, u)));
}

Estimate wright_corrected(double n)
{
    return wright_corrected(n, specfun::zeta_prime_minus1_d());
}

double erdos_lehner_log_ratio(double n, double N)
{
    require_positive(n, "n");
    require_positive(N, "N");
    const double scale = std::sqrt(6.0 * n) / kPi;
    return -scale * std::exp(-N / scale);
}

double conjecture_main(double n, double N, const WarningSink& warn)
{
    require_positive(n, "n");
    require_positive(N, "N");
    if (N >= n) {
        std::ostringstream msg;
        msg << "conjecture_main requires N < n, got n = " << n << ", N = " << N;
        fail(ErrorKind::Domain, kModule, msg.str());
    }
    const double floor = 0.75 * std::cbrt(n);
    if (warn && N < 3.0 * floor) {
        std::ostringstream msg;
        msg << "N = " << N << " is not well above 0.75 n^{1/3} = " << floor << "; outside the derivation regime";
        warn(msg.str());
    }
    const double t = std::cbrt(two_zeta3());
    const double beta0 = t / std::cbrt(n);
    return -(N / beta0) * std::exp(-N * beta0);
}

double conjecture_intermediate(double n, double N, const WarningSink& warn)
{
    require_positive(n, "n");
    require_positive(N, "N");
    const double scale = std::pow(n, 2.0 / 3.0);
    if (warn && (N < 0.3 * scale || N > 3.0 * scale)) {
        std::ostringstream msg;
        msg << "N = " << N << " lies outside the intermediate window [0.3, 3] n^{2/3} = [" << 0.3 * scale << ", "
            << 3.0 * scale << "]";
        warn(msg.str());
    }
    return -std::cbrt(n * n / N) * std::exp(-two_zeta3() * std::pow(N, 1.5) / n);
}

double intermediate_model(double n, double N, double A, double b, double k)
{
    require_positive(n, "n");
    require_positive(N, "N");
    return -A * std::pow(n, 2.0 / 3.0) / std::cbrt(N) *
           std::exp(-k * std::pow(N, 1.5) / n + b * std::cbrt(n) * std::log(N));
}

double log_count(const BigCount& count)
{
    if (count <= 0)
        fail(ErrorKind::Domain, kModule, "log of a non-positive count");
    return log(boost::multiprecision::cpp_bin_float_50(count)).convert_to<double>();
}

double relative_error(const Estimate& estimate, const BigCount& exact)
{
    return std::expm1(estimate.log_value - log_count(exact));
}

} // namespace partitions::asymptotic
