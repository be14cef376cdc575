#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace partitions {

/// Real with a 50-significant-digit contract. Used for the mathematical
/// constants; the estimators themselves run in binary64.
using HighFloat = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;

namespace specfun {

inline constexpr int max_bernoulli_index = 60;

/// Exact Bernoulli number B_m (B_1 = -1/2 convention, unused here) for even
/// 0 <= m <= 60.
Rational bernoulli(int m);

/// Apery's constant from the central-binomial series
/// zeta(3) = 5/2 sum (-1)^(k+1) / (k^3 C(2k, k)).
HighFloat zeta3();

/// zeta(3) again, by direct summation plus an Euler-Maclaurin tail.
HighFloat zeta3_euler_maclaurin();

/// ln A, A the Glaisher-Kinkelin constant, from the asymptotic expansion of
/// the hyperfactorial sum_{k<=M} k ln k.
HighFloat log_glaisher();

/// zeta'(-1) = 1/12 - ln A.
HighFloat zeta_prime_minus1();

/// Binary64 projections for the hot paths.
double zeta3_d();
double zeta_prime_minus1_d();

// --- Macdonald function K_nu(x) ---------------------------------------------
//
// Accepted orders: 0 <= nu <= 1. The "scaled" variants return e^x K_nu(x),
// which stays representable for the large arguments the estimators hit.

/// Primary evaluator: power series for x < 2, trapezoidal quadrature of the
/// cosh integral on [2, 30], Hankel asymptotic expansion for x > 30.
double bessel_k(double nu, double x);
double bessel_k_scaled(double nu, double x);

/// e^x K_nu(x) from int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt, trapezoid
/// rule refined until successive halvings agree to ~1e-15.
double bessel_k_integral_scaled(double nu, double x);

/// e^x K_nu(x) from pi/(2 sin nu pi) (I_{-nu} - I_nu) summed in 50-digit
/// arithmetic for x <= 25, the Hankel expansion above. Non-integer nu only.
double bessel_k_series_scaled(double nu, double x);

// --- Euler-Maclaurin constant series ----------------------------------------

/// One row of the asymptotic series for the constant c of the 2D entropy.
///
/// Two sign conventions coexist. `f_term` is the term as it appears on the
/// f-side of the Euler-Maclaurin formula, B_2k (2k-3)!/(2k)!; `contribution`
/// is what gets added to c, i.e. -f_term. The partial sums start at -1/6.
struct EMSeriesTerm {
    int k = 0;
    Rational f_term;
    Rational contribution;
    double magnitude = 0.0;
};

struct EMSeries {
    std::vector<EMSeriesTerm> terms;
    /// partial_sums[i] = -1/6 + contributions of terms[0..i].
    std::vector<Rational> partial_sums;

    const Rational& partial_sum() const { return partial_sums.back(); }
};

/// Terms k = 2..k_max, 2 <= k_max <= 10.
EMSeries em_c_series(int k_max);

/// k of the smallest-magnitude term. Terms must be consecutive from k = 2.
int optimal_truncation(std::span<const EMSeriesTerm> terms);

} // namespace specfun
} // namespace partitions
