#pragma once

#include <functional>

namespace partitions::thermo {

enum class Dimension { D1 = 1, D2 = 2 };

/// The constant term c of the small-beta 2D entropy.
enum class PlaneConstant {
    leading,      ///< -1/6, first Euler-Maclaurin terms only
    truncated_k3, ///< -139/840
    truncated_k4, ///< -1667/10080, the optimally truncated sum
    wright,       ///< zeta'(-1)
};

double plane_constant(PlaneConstant choice);

/// Entropy S(beta) = beta E + ln Z(beta) of the bosonic oscillator gas in the
/// small-beta regime, units hbar omega = 1.
///
///   D1: pi^2/(6 beta) + 1/2 ln beta - 1/2 ln 2 pi + (E - delta) beta,
///       delta = 1/24 when the energy shift is enabled, 0 otherwise;
///   D2: zeta(3)/beta^2 + 1/12 ln beta + c + beta E.
///
/// The saddle is located on the power-law "action" beta E_eff + a beta^-p
/// (a = pi^2/6, p = 1 in 1D; a = zeta(3), p = 2 in 2D). The logarithmic and
/// constant pieces only enter through S(beta0). action_d2/action_d3 are the
/// curvature terms fed to the steepest-descent formulas.
class ThermoModel {
public:
    static ThermoModel linear(bool energy_shift = false);
    static ThermoModel plane(double c);
    static ThermoModel plane(PlaneConstant c = PlaneConstant::wright);

    Dimension dimension() const noexcept { return dim_; }
    bool energy_shift() const noexcept { return shift_; }
    double constant() const noexcept { return c_; }

    double entropy(double beta, double E) const;
    double entropy_d1(double beta, double E) const;
    double entropy_d2(double beta) const;
    double entropy_d3(double beta) const;

    double action(double beta, double E) const;
    double action_d1(double beta, double E) const;
    double action_d2(double beta) const;
    double action_d3(double beta) const;

    /// Energy that multiplies beta: E, or E - 1/24 with the shift enabled.
    double effective_energy(double E) const;

private:
    ThermoModel(Dimension d, bool shift, double c, double a, int p)
        : dim_(d), shift_(shift), c_(c), a_(a), p_(p)
    {}

    Dimension dim_;
    bool shift_;
    double c_;
    double a_;
    int p_;
};

struct SaddlePoint {
    double beta0 = 0.0;
    double S0 = 0.0; ///< full entropy at beta0
    double S2 = 0.0; ///< action curvature S'' at beta0
    double S3 = 0.0; ///< S''' at beta0
    double energy = 0.0;
};

/// Closed-form stationary point; the residual |S'(beta0)| is checked and the
/// Newton solver takes over if it is not below 1e-12 E.
SaddlePoint saddle(const ThermoModel& model, double E);

/// Root of d1 on (0, inf) by Newton steps safeguarded with bisection.
/// d1 must be negative for small beta and positive for large beta.
double solve_stationary(const std::function<double(double)>& d1,
                        const std::function<double(double)>& d2, double guess);

/// Gamma(E) = e^{S0} / sqrt(2 pi S''), and its logarithm.
double log_gamma_leading(const SaddlePoint& sp);
double gamma_leading(const SaddlePoint& sp);

/// Third-order steepest descent:
/// Gamma = e^{S0}/(2 pi) * 2 S''/(sqrt3 |S'''|) * e^u K_{1/3}(u),
/// u = S''^3 / (3 S'''^2).
double log_gamma_third_order(const SaddlePoint& sp);
double gamma_third_order(const SaddlePoint& sp);

/// Direct sum -sum_j j^(D-1) ln(1 - e^{-beta j}); the exact ln Z the
/// small-beta entropy approximates.
double log_partition_sum(Dimension dim, double beta);

} // namespace partitions::thermo
