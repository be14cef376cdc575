#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

namespace partitions::fitlab {

/// One observation ln(Z_N / Z_inf) at x = e^{-beta0}, beta0 = (2 zeta3/n)^{1/3}.
struct FitSample {
    int n = 0;
    int N = 0;
    double ln_ratio = 0.0;
};

struct FitParams {
    double A = 0.0;
    double b = 0.0;
    double k = 0.0;
    double stderr_A = 0.0;
    double stderr_b = 0.0;
    double stderr_k = 0.0;
    double residual_norm = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    std::size_t samples = 0;
};

/// Which (n, N) pairs go into a dataset. N runs over `N_values` when given,
/// otherwise over every integer, and is kept when it falls inside
/// [window_lo, window_hi] * n^{2/3}.
struct GridSpec {
    std::vector<int> n_values{100, 200, 500, 1000, 2000, 5000, 10000};
    double window_lo = 0.3;
    double window_hi = 3.0;
    std::optional<std::vector<int>> N_values = std::vector<int>{10, 20, 30, 50, 100, 200, 300, 500};
    int precision_bits = 53;
};

/// Computes every sample of the grid, one recurrence per n (run in parallel).
/// Window multipliers must lie in [0.3, 3].
std::vector<FitSample> build_dataset(const GridSpec& grid);

struct FitOptions {
    double A0 = 1.0;
    double b0 = 0.0;
    double k0 = 0.0; ///< 0 selects 2 zeta(3)
    int max_iterations = 500;
    /// Fit ln(-ln_ratio) instead of the signed ln_ratio (sensitivity check).
    bool log_space = false;
};

/// Model of the intermediate regime:
/// ln_ratio = -A n^{2/3} N^{-1/3} exp(-k N^{3/2}/n + b n^{1/3} ln N).
double model(double n, double N, double A, double b, double k);

/// Levenberg-Marquardt with the analytic Jacobian. Needs >= 10 samples over
/// >= 3 distinct n. Standard errors from the leverage-corrected sandwich
/// (J^T J)^-1 J^T diag(r_i^2/(1-h_i)^2) J (J^T J)^-1 at the optimum.
FitParams fit_model(const std::vector<FitSample>& data, const FitOptions& options = {});

/// Two-sided Cox-Stuart sign test for a monotone trend of `values` taken in
/// the given order. Returns the p-value.
double cox_stuart_pvalue(const std::vector<double>& values);

void write_samples_csv(std::ostream& out, const std::vector<FitSample>& samples);
std::vector<FitSample> read_samples_csv(std::istream& in);

nlohmann::json to_json(const FitParams& params);
nlohmann::json to_json(const GridSpec& grid);

} // namespace partitions::fitlab
