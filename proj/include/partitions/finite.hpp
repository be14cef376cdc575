#pragma once

#include <cstdint>
#include <vector>

#include "partitions/exact.hpp"
#include "partitions/thermo.hpp"

namespace partitions::finite {

/// Inputs of the canonical recurrence Z_N = (1/N) sum_k B_k Z_{N-k},
/// B_k = (1 - x^k)^-D. x = e^-beta is stored through beta so that x close to
/// 1 keeps full relative accuracy in 1 - x^k.
class RecurrenceConfig {
public:
    static RecurrenceConfig from_x(int dimension, double x, int N_max, int precision_bits = 53);
    static RecurrenceConfig from_beta(int dimension, double beta, int N_max, int precision_bits = 53);

    int dimension() const noexcept { return dimension_; }
    double beta() const noexcept { return beta_; }
    double x() const;
    int N_max() const noexcept { return N_max_; }
    int precision_bits() const noexcept { return precision_bits_; }

private:
    RecurrenceConfig(int d, double beta, int n_max, int bits)
        : dimension_(d), beta_(beta), N_max_(n_max), precision_bits_(bits)
    {}

    int dimension_;
    double beta_;
    int N_max_;
    int precision_bits_;
};

/// ln Z_N for N = 0..N_max.
struct ZnTable {
    std::vector<double> log_z;
    RecurrenceConfig config;

    double at(int N) const { return log_z.at(static_cast<std::size_t>(N)); }
};

/// Largest mantissa width the recurrence can honour (50 decimal digits).
inline constexpr int max_precision_bits = 166;

/// Runs the recurrence with positive-term sums only, carried in log form as
/// ln Z_N = ln Z_{N-1} + ln((1/N) sum_k B_k Z_{N-k}/Z_{N-1}).
/// Arithmetic: double up to 53 bits, long double up to 64, 50-digit software
/// floats beyond. Throws PrecisionExhausted when the requested width cannot
/// keep ln Z within 1e-5 absolute (estimate N_max^2 2^-bits) or exceeds
/// max_precision_bits.
ZnTable zn_recurrence(const RecurrenceConfig& config);

/// -sum_{k<=N} ln(1 - x^k), the 1D closed form.
double zn_closed_1d(double x, int N);

/// Number of single-particle states at level k of the D-dimensional isotropic
/// oscillator: C(k + D - 1, D - 1).
double level_degeneracy(int dimension, long k);

/// N -> infinity limit of the recurrence at fixed x:
/// -sum_{k>=1} C(k+D-1, D-1) ln(1 - x^k), truncated with tail bound < 1e-12.
double ln_z_unrestricted(int dimension, double x);
double ln_z_unrestricted_beta(int dimension, double beta);

/// ln of MacMahon's product prod_k (1 - x^k)^-k, the plane-partition
/// generating function.
double ln_macmahon(double x);

/// Leading-order ln y_N at the saddle of E = n:
/// D1: -e^{-beta0 N}/beta0, D2: -N e^{-beta0 N}/beta0.
double log_yn(thermo::Dimension dim, double n, double N);

/// Exact formal power series Z_N(x) for N = 0..N_max, each truncated after
/// x^degree, obtained by running the same recurrence over integer series.
std::vector<std::vector<BigCount>> zn_series(int dimension, int N_max, int degree);

} // namespace partitions::finite
