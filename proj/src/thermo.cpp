#include "partitions/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "partitions/error.hpp"
#include "partitions/specfun.hpp"

namespace partitions::thermo {

namespace {

constexpr const char* kModule = "thermo";
constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        fail(ErrorKind::Domain, kModule, std::string(what) + " must be positive and finite, got " + std::to_string(v));
}

} // namespace

double plane_constant(PlaneConstant choice)
{
    switch (choice) {
    case PlaneConstant::leading: return -1.0 / 6.0;
    case PlaneConstant::truncated_k3: return -139.0 / 840.0;
    case PlaneConstant::truncated_k4: return -1667.0 / 10080.0;
    case PlaneConstant::wright: return specfun::zeta_prime_minus1_d();
    }
    return specfun::zeta_prime_minus1_d();
}

ThermoModel ThermoModel::linear(bool energy_shift)
{
    return {Dimension::D1, energy_shift, 0.0, kPi * kPi / 6.0, 1};
}

ThermoModel ThermoModel::plane(double c)
{
    return {Dimension::D2, false, c, specfun::zeta3_d(), 2};
}

ThermoModel ThermoModel::plane(PlaneConstant c)
{
    return plane(plane_constant(c));
}

double ThermoModel::effective_energy(double E) const
{
    return shift_ ? E - 1.0 / 24.0 : E;
}

double ThermoModel::action(double beta, double E) const
{
    require_positive(beta, "beta");
    require_positive(E, "E");
    return beta * effective_energy(E) + a_ * std::pow(beta, -p_);
}

double ThermoModel::action_d1(double beta, double E) const
{
    require_positive(beta, "beta");
    return effective_energy(E) - p_ * a_ * std::pow(beta, -p_ - 1);
}

double ThermoModel::action_d2(double beta) const
{
    require_positive(beta, "beta");
    return p_ * (p_ + 1) * a_ * std::pow(beta, -p_ - 2);
}

double ThermoModel::action_d3(double beta) const
{
    require_positive(beta, "beta");
    return -p_ * (p_ + 1) * (p_ + 2) * a_ * std::pow(beta, -p_ - 3);
}

double ThermoModel::entropy(double beta, double E) const
{
    const double base = action(beta, E);
    if (dim_ == Dimension::D1)
        return base + 0.5 * std::log(beta) - 0.5 * std::log(2.0 * kPi);
    return base + std::log(beta) / 12.0 + c_;
}

double ThermoModel::entropy_d1(double beta, double E) const
{
    const double log_coeff = dim_ == Dimension::D1 ? 0.5 : 1.0 / 12.0;
    return action_d1(beta, E) + log_coeff / beta;
}

double ThermoModel::entropy_d2(double beta) const
{
    const double log_coeff = dim_ == Dimension::D1 ? 0.5 : 1.0 / 12.0;
    return action_d2(beta) - log_coeff / (beta * beta);
}

double ThermoModel::entropy_d3(double beta) const
{
    const double log_coeff = dim_ == Dimension::D1 ? 0.5 : 1.0 / 12.0;
    return action_d3(beta) + 2.0 * log_coeff / (beta * beta * beta);
}

double solve_stationary(const std::function<double(double)>& d1,
                        const std::function<double(double)>& d2, double guess)
{
    require_positive(guess, "initial beta");
    double lo = guess;
    double hi = guess;
    for (int i = 0; d1(lo) > 0.0; ++i) {
        lo *= 0.5;
        if (i > 2000)
            fail(ErrorKind::NonConvergence, kModule, "could not bracket the stationary point from below");
    }
    for (int i = 0; d1(hi) < 0.0; ++i) {
        hi *= 2.0;
        if (i > 2000)
            fail(ErrorKind::NonConvergence, kModule, "could not bracket the stationary point from above");
    }
    double beta = std::clamp(guess, lo, hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double g = d1(beta);
        if (g == 0.0)
            return beta;
        if (g < 0.0)
            lo = beta;
        else
            hi = beta;
        const double curvature = d2(beta);
        double next = curvature != 0.0 ? beta - g / curvature : 0.5 * (lo + hi);
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        if (std::abs(next - beta) <= 1e-16 * beta)
            return next;
        beta = next;
    }
    return beta;
}

SaddlePoint saddle(const ThermoModel& model, double E)
{
    require_positive(E, "E");
    const double e_eff = model.effective_energy(E);
    require_positive(e_eff, "effective energy");

    double beta0 = 0.0;
    if (model.dimension() == Dimension::D1)
        beta0 = kPi / std::sqrt(6.0 * e_eff);
    else
        beta0 = std::cbrt(2.0 * specfun::zeta3_d() / e_eff);

    if (!(std::abs(model.action_d1(beta0, E)) < 1e-12 * E)) {
        beta0 = solve_stationary([&](double b) { return model.action_d1(b, E); },
                                 [&](double b) { return model.action_d2(b); }, beta0);
    }

    SaddlePoint sp;
    sp.beta0 = beta0;
    sp.energy = E;
    sp.S0 = model.entropy(beta0, E);
    sp.S2 = model.action_d2(beta0);
    sp.S3 = model.action_d3(beta0);
    return sp;
}

double log_gamma_leading(const SaddlePoint& sp)
{
    require_positive(sp.S2, "S''(beta0)");
    return sp.S0 - 0.5 * std::log(2.0 * kPi * sp.S2);
}

double gamma_leading(const SaddlePoint& sp)
{
    return std::exp(log_gamma_leading(sp));
}

double log_gamma_third_order(const SaddlePoint& sp)
{
    require_positive(sp.S2, "S''(beta0)");
    if (!(std::abs(sp.S3) > 1e-300))
        fail(ErrorKind::DegenerateSaddle, kModule, "S'''(beta0) vanishes; the cubic correction is singular");
    const double u = sp.S2 * sp.S2 * sp.S2 / (3.0 * sp.S3 * sp.S3);
    if (!std::isfinite(u) || !(u > 0.0))
        fail(ErrorKind::DegenerateSaddle, kModule, "Bessel argument S''^3/(3 S'''^2) is not finite");
    // e^u K_{1/3}(u) is exactly the scaled Bessel function.
    return sp.S0 - std::log(2.0 * kPi) + std::log(2.0 * sp.S2 / (std::sqrt(3.0) * std::abs(sp.S3))) +
           std::log(specfun::bessel_k_scaled(1.0 / 3.0, u));
}

double gamma_third_order(const SaddlePoint& sp)
{
    return std::exp(log_gamma_third_order(sp));
}

double log_partition_sum(Dimension dim, double beta)
{
    require_positive(beta, "beta");
    double sum = 0.0;
    for (long j = 1;; ++j) {
        const double weight = dim == Dimension::D1 ? 1.0 : static_cast<double>(j);
        const double term = -weight * std::log1p(-std::exp(-beta * j));
        sum += term;
        if (term < 1e-18 * sum && beta * j > 1.0)
            break;
    }
    return sum;
}

} // namespace partitions::thermo
