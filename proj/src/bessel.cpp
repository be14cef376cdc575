#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "partitions/error.hpp"
#include "partitions/specfun.hpp"

namespace partitions::specfun {

namespace {

constexpr const char* kModule = "specfun";

constexpr double kSeriesUpper = 2.0;
constexpr double kAsymptoticLower = 30.0;
constexpr double kSeriesPathLimit = 25.0;

void check_args(double nu, double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        fail(ErrorKind::Domain, kModule, "bessel_k requires x > 0, got " + std::to_string(x));
    if (!(nu >= 0.0 && nu <= 1.0))
        fail(ErrorKind::Domain, kModule, "bessel_k order must lie in [0, 1], got " + std::to_string(nu));
}

bool near_integer_order(double nu)
{
    return std::abs(std::sin(std::numbers::pi * nu)) < 1e-3;
}

// Hankel expansion of e^x K_nu(x), summed until terms stop shrinking.
double hankel_scaled(double nu, double x)
{
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double previous = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * x);
        if (std::abs(term) >= std::abs(previous))
            break;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            break;
        previous = term;
    }
    return std::sqrt(std::numbers::pi / (2.0 * x)) * sum;
}

using boost::multiprecision::cpp_bin_float_50;

cpp_bin_float_50 modified_i(const cpp_bin_float_50& order, const cpp_bin_float_50& half_x)
{
    const cpp_bin_float_50 q = half_x * half_x;
    cpp_bin_float_50 term = pow(half_x, order) / boost::math::tgamma(order + 1);
    cpp_bin_float_50 sum = term;
    const cpp_bin_float_50 eps = std::numeric_limits<cpp_bin_float_50>::epsilon();
    for (int k = 1; k < 500; ++k) {
        term *= q / (cpp_bin_float_50(k) * (order + k));
        sum += term;
        if (k > half_x && abs(term) < eps * abs(sum))
            break;
    }
    return sum;
}

double series_scaled(double nu, double x)
{
    const cpp_bin_float_50 order = nu;
    const cpp_bin_float_50 half_x = cpp_bin_float_50(x) / 2;
    const cpp_bin_float_50 diff = modified_i(-order, half_x) - modified_i(order, half_x);
    const cpp_bin_float_50 pi = boost::math::constants::pi<cpp_bin_float_50>();
    const cpp_bin_float_50 k = pi / (2 * sin(pi * order)) * diff;
    return (k * exp(cpp_bin_float_50(x))).convert_to<double>();
}

} // namespace

double bessel_k_integral_scaled(double nu, double x)
{
    check_args(nu, x);
    // g(t) = exp(-x (cosh t - 1)) cosh(nu t); cosh t - 1 = 2 sinh^2(t/2).
    const auto g = [&](double t) {
        const double s = std::sinh(0.5 * t);
        return std::exp(-2.0 * x * s * s) * std::cosh(nu * t);
    };
    // Past t_peak the integrand is decreasing; stop once terms are negligible.
    const double t_peak = (nu > 0.0 && nu > x) ? std::asinh(nu / x) : 0.0;
    const auto strided_sum = [&](double start, double h) {
        double acc = 0.0;
        for (int i = 0;; ++i) {
            const double t = start + i * h;
            const double v = g(t);
            acc += v;
            if (t > t_peak && v < 1e-18 * acc)
                break;
            if (i > 10'000'000)
                fail(ErrorKind::NonConvergence, kModule, "bessel_k quadrature tail did not decay");
        }
        return acc;
    };

    double h = 0.5;
    double sum = 0.5 * g(0.0) + strided_sum(h, h);
    double estimate = h * sum;
    for (int level = 0; level < 30; ++level) {
        sum += strided_sum(0.5 * h, h); // midpoints of the current grid
        h *= 0.5;
        const double refined = h * sum;
        if (std::abs(refined - estimate) <= 1e-15 * std::abs(refined) && level >= 2)
            return refined;
        estimate = refined;
    }
    fail(ErrorKind::NonConvergence, kModule, "bessel_k quadrature did not converge");
}

double bessel_k_series_scaled(double nu, double x)
{
    check_args(nu, x);
    if (x > kSeriesPathLimit)
        return hankel_scaled(nu, x);
    if (near_integer_order(nu))
        fail(ErrorKind::Domain, kModule, "I_{-nu} - I_nu series needs a non-integer order");
    return series_scaled(nu, x);
}

double bessel_k_scaled(double nu, double x)
{
    check_args(nu, x);
    if (x > kAsymptoticLower)
        return hankel_scaled(nu, x);
    if (x < kSeriesUpper && !near_integer_order(nu))
        return series_scaled(nu, x);
    return bessel_k_integral_scaled(nu, x);
}

double bessel_k(double nu, double x)
{
    return bessel_k_scaled(nu, x) * std::exp(-x);
}

} // namespace partitions::specfun
