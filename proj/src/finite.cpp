#include "partitions/finite.hpp"

#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "partitions/error.hpp"
#include "partitions/specfun.hpp"

namespace partitions::finite {

namespace {

constexpr const char* kModule = "finite";

using boost::multiprecision::cpp_bin_float_50;

void check_x(double x)
{
    if (!(x > 0.0 && x < 1.0)) {
        std::ostringstream msg;
        msg << "x must lie in (0, 1), got " << x;
        fail(ErrorKind::Domain, kModule, msg.str());
    }
}

void check_dimension(int d)
{
    if (d < 1)
        fail(ErrorKind::Domain, kModule, "dimension must be >= 1, got " + std::to_string(d));
}

// 1 - e^{-k beta} in the working type.
template <class T>
T one_minus_power(long k, double beta)
{
    if constexpr (std::is_floating_point_v<T>) {
        return -std::expm1(-static_cast<T>(k) * static_cast<T>(beta));
    } else {
        return T(1) - exp(-T(k) * T(beta));
    }
}

template <class T>
std::vector<double> run_recurrence(int dimension, double beta, int N_max)
{
    using std::exp;
    using std::log;
    using std::pow;

    std::vector<T> weight(static_cast<std::size_t>(N_max) + 1);
    for (int k = 1; k <= N_max; ++k)
        weight[k] = pow(one_minus_power<T>(k, beta), -dimension);

    std::vector<T> log_z(static_cast<std::size_t>(N_max) + 1);
    log_z[0] = 0;
    for (int N = 1; N <= N_max; ++N) {
        const T anchor = log_z[N - 1];
        T sum = 0;
        // Z_{N-k}/Z_{N-1} <= 1 since ln Z is increasing in N.
        for (int k = 1; k <= N; ++k)
            sum += weight[k] * exp(log_z[N - k] - anchor);
        log_z[N] = anchor + log(sum / N);
    }

    std::vector<double> out(log_z.size());
    for (std::size_t i = 0; i < log_z.size(); ++i)
        out[i] = static_cast<double>(log_z[i]);
    return out;
}

} // namespace

RecurrenceConfig RecurrenceConfig::from_beta(int dimension, double beta, int N_max, int precision_bits)
{
    check_dimension(dimension);
    if (!(beta > 0.0) || !std::isfinite(beta))
        fail(ErrorKind::Domain, kModule, "beta must be positive so that 0 < x < 1");
    if (N_max < 1)
        fail(ErrorKind::Domain, kModule, "N_max must be >= 1, got " + std::to_string(N_max));
    if (precision_bits < 1)
        fail(ErrorKind::Domain, kModule, "precision must be a positive number of mantissa bits");
    return {dimension, beta, N_max, precision_bits};
}

RecurrenceConfig RecurrenceConfig::from_x(int dimension, double x, int N_max, int precision_bits)
{
    check_x(x);
    return from_beta(dimension, -std::log(x), N_max, precision_bits);
}

double RecurrenceConfig::x() const
{
    return std::exp(-beta_);
}

ZnTable zn_recurrence(const RecurrenceConfig& config)
{
    const int bits = config.precision_bits();
    if (bits > max_precision_bits)
        fail(ErrorKind::PrecisionExhausted, kModule,
             "requested " + std::to_string(bits) + " mantissa bits, at most " + std::to_string(max_precision_bits) +
                 " available");
    const double n = config.N_max();
    const double error_estimate = n * n * std::ldexp(1.0, -bits);
    if (error_estimate > 1e-5) {
        std::ostringstream msg;
        msg << bits << "-bit arithmetic cannot hold ln Z_N to 1e-5 up to N = " << config.N_max()
            << " (error estimate " << error_estimate << ")";
        fail(ErrorKind::PrecisionExhausted, kModule, msg.str());
    }

    ZnTable table{{}, config};
    if (bits <= 53)
        table.log_z = run_recurrence<double>(config.dimension(), config.beta(), config.N_max());
    else if (bits <= std::numeric_limits<long double>::digits)
        table.log_z = run_recurrence<long double>(config.dimension(), config.beta(), config.N_max());
    else
        table.log_z = run_recurrence<cpp_bin_float_50>(config.dimension(), config.beta(), config.N_max());
    return table;
}

double zn_closed_1d(double x, int N)
{
    check_x(x);
    if (N < 0)
        fail(ErrorKind::Domain, kModule, "N must be >= 0");
    const double log_x = std::log(x);
    double sum = 0.0;
    for (int k = 1; k <= N; ++k)
        sum -= std::log(-std::expm1(k * log_x));
    return sum;
}

double level_degeneracy(int dimension, long k)
{
    // C(k + D - 1, D - 1)
    double c = 1.0;
    for (int i = 1; i < dimension; ++i)
        c = c * static_cast<double>(k + i) / i;
    return c;
}

double ln_z_unrestricted_beta(int dimension, double beta)
{
    check_dimension(dimension);
    if (!(beta > 0.0) || !std::isfinite(beta))
        fail(ErrorKind::Domain, kModule, "x must lie in (0, 1)");
    double sum = 0.0;
    double previous = 0.0;
    for (long k = 1;; ++k) {
        const double term = -level_degeneracy(dimension, k) * std::log(-std::expm1(-beta * k));
        sum += term;
        if (term == 0.0)
            break;
        if (k > 1) {
            // Successive-term ratios decrease from here on; bound the tail
            // by a geometric series once the ratio is below one.
            const double ratio = term / previous;
            if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-13)
                break;
        }
        previous = term;
        if (k > 100'000'000)
            fail(ErrorKind::NonConvergence, kModule, "ln Z tail did not converge");
    }
    return sum;
}

double ln_z_unrestricted(int dimension, double x)
{
    check_x(x);
    return ln_z_unrestricted_beta(dimension, -std::log(x));
}

double ln_macmahon(double x)
{
    check_x(x);
    const double beta = -std::log(x);
    double sum = 0.0;
    double previous = 0.0;
    for (long k = 1;; ++k) {
        const double term = -static_cast<double>(k) * std::log(-std::expm1(-beta * k));
        sum += term;
        if (term == 0.0)
            break;
        if (k > 1) {
            const double ratio = term / previous;
            if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-13)
                break;
        }
        previous = term;
    }
    return sum;
}

double log_yn(thermo::Dimension dim, double n, double N)
{
    if (!(n > 0.0) || !(N > 0.0))
        fail(ErrorKind::Domain, kModule, "log_yn requires positive n and N");
    const auto model = dim == thermo::Dimension::D1 ? thermo::ThermoModel::linear() : thermo::ThermoModel::plane();
    const double beta0 = thermo::saddle(model, n).beta0;
    const double factor = std::exp(-beta0 * N) / beta0;
    return dim == thermo::Dimension::D1 ? -factor : -N * factor;
}

std::vector<std::vector<BigCount>> zn_series(int dimension, int N_max, int degree)
{
    check_dimension(dimension);
    if (N_max < 0 || degree < 0)
        fail(ErrorKind::Domain, kModule, "zn_series needs N_max >= 0 and degree >= 0");
    const auto len = static_cast<std::size_t>(degree) + 1;

    // B_k(x) = (1 - x^k)^-D: D strided prefix sums of the unit series.
    std::vector<std::vector<BigCount>> single(static_cast<std::size_t>(N_max) + 1);
    for (int k = 1; k <= N_max; ++k) {
        auto& s = single[k];
        s.assign(len, 0);
        s[0] = 1;
        for (int rep = 0; rep < dimension; ++rep)
            for (std::size_t m = k; m < len; ++m)
                s[m] += s[m - k];
    }

    std::vector<std::vector<BigCount>> z(static_cast<std::size_t>(N_max) + 1, std::vector<BigCount>(len, 0));
    z[0][0] = 1;
    for (int N = 1; N <= N_max; ++N) {
        std::vector<BigCount> acc(len, 0);
        for (int k = 1; k <= N; ++k) {
            const auto& b = single[k];
            const auto& prev = z[N - k];
            for (std::size_t i = 0; i < len; ++i) {
                if (b[i] == 0)
                    continue;
                for (std::size_t j = 0; i + j < len; ++j)
                    acc[i + j] += b[i] * prev[j];
            }
        }
        for (std::size_t m = 0; m < len; ++m) {
            if (acc[m] % N != 0)
                fail(ErrorKind::Domain, kModule, "recurrence produced a non-integral coefficient");
            z[N][m] = acc[m] / N;
        }
    }
    return z;
}

} // namespace partitions::finite
