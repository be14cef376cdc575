#pragma once

#include <functional>
#include <string>

#include "partitions/exact.hpp"

namespace partitions::asymptotic {

/// Estimator output. log_value is authoritative; value is exp(log_value) and
/// saturates to +inf once that leaves binary64 range.
struct Estimate {
    double log_value = 0.0;
    double value = 0.0;

    static Estimate from_log(double log_value);
};

/// Called with a human-readable note when an argument falls outside the
/// regime a conjectured formula was derived for. Evaluation continues.
using WarningSink = std::function<void(const std::string&)>;

/// Hardy-Ramanujan: exp(pi sqrt(2n/3)) / (4 sqrt3 n).
Estimate hr_estimate(double n);

/// First Bessel-K correction to Hardy-Ramanujan:
/// e^{(28/27) a} K_{1/3}(a/27) / (18 6^{1/4} n^{3/4}), a = pi sqrt(2n/3).
Estimate hr_corrected(double n);

/// Wright: [2 zeta3]^{7/36}/sqrt(6 pi) n^{-25/36} exp{3/2 [2 zeta3]^{1/3} n^{2/3} + c}.
Estimate wright_estimate(double n, double c);
Estimate wright_estimate(double n);

/// Third-order steepest-descent refinement of Wright:
/// [2 zeta3]^{13/36}/(4 sqrt3 pi) n^{-13/36} e^{25/16 t n^{2/3} + c} K_{1/3}(t n^{2/3}/16),
/// t = [2 zeta3]^{1/3}.
Estimate wright_corrected(double n, double c);
Estimate wright_corrected(double n);

/// Erdos-Lehner prediction for ln(p_N(n)/p(n)): -(sqrt(6n)/pi) exp(-pi N/sqrt(6n)).
double erdos_lehner_log_ratio(double n, double N);

/// Conjectured ln(p2D_N(n)/p2D(n)) = -(N n^{1/3}/t) exp(-N t / n^{1/3}).
/// Hard error for N >= n; warns outside 0.75 n^{1/3} << N (taken as N < 3 * 0.75 n^{1/3}).
double conjecture_main(double n, double N, const WarningSink& warn = {});

/// Intermediate-regime conjecture: -(n^2/N)^{1/3} exp(-2 zeta3 N^{3/2} / n).
/// Warns outside N in [0.3, 3] n^{2/3}.
double conjecture_intermediate(double n, double N, const WarningSink& warn = {});

/// Fitted intermediate model -A n^{2/3} N^{-1/3} exp(-k N^{3/2}/n + b n^{1/3} ln N).
double intermediate_model(double n, double N, double A, double b, double k);

/// (estimate - exact) / exact, evaluated through logarithms.
double relative_error(const Estimate& estimate, const BigCount& exact);

/// Natural logarithm of an exact count (count > 0).
double log_count(const BigCount& count);

} // namespace partitions::asymptotic
