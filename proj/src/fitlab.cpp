#include "partitions/fitlab.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "partitions/error.hpp"
#include "partitions/finite.hpp"
#include "partitions/specfun.hpp"

namespace partitions::fitlab {

namespace {

constexpr const char* kModule = "fitlab";

struct Point {
    double n;
    double N;
    double y;
};

// Residuals and Jacobian for either the signed or the log-space objective.
void evaluate(const std::vector<Point>& pts, const Eigen::Vector3d& p, bool log_space, Eigen::VectorXd& r,
              Eigen::MatrixXd& J)
{
    const auto m = static_cast<Eigen::Index>(pts.size());
    r.resize(m);
    J.resize(m, 3);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& pt = pts[static_cast<std::size_t>(i)];
        const double dA_log = 1.0; // d ln|f| / d ln A
        const double db = std::cbrt(pt.n) * std::log(pt.N);
        const double dk = -std::pow(pt.N, 1.5) / pt.n;
        if (log_space) {
            const double log_f = std::log(p[0]) + (2.0 / 3.0) * std::log(pt.n) - std::log(pt.N) / 3.0 +
                                 p[2] * dk + p[1] * db;
            r[i] = log_f - std::log(-pt.y);
            J(i, 0) = dA_log / p[0];
            J(i, 1) = db;
            J(i, 2) = dk;
        } else {
            // Written without dividing by A so that A -> 0 stays well defined.
            const double shape = -std::pow(pt.n, 2.0 / 3.0) / std::cbrt(pt.N) * std::exp(p[2] * dk + p[1] * db);
            const double f = p[0] * shape;
            r[i] = f - pt.y;
            J(i, 0) = shape;
            J(i, 1) = f * db;
            J(i, 2) = f * dk;
        }
    }
}

std::string describe(const Eigen::Vector3d& p, double grad)
{
    std::ostringstream s;
    s << "best point A=" << p[0] << " b=" << p[1] << " k=" << p[2] << ", gradient norm " << grad;
    return s.str();
}

} // namespace

double model(double n, double N, double A, double b, double k)
{
    return -A * std::pow(n, 2.0 / 3.0) / std::cbrt(N) * std::exp(-k * std::pow(N, 1.5) / n + b * std::cbrt(n) * std::log(N));
}

std::vector<FitSample> build_dataset(const GridSpec& grid)
{
    if (grid.window_lo < 0.3 || grid.window_hi > 3.0 || grid.window_lo > grid.window_hi)
        fail(ErrorKind::Domain, kModule, "window multipliers must satisfy 0.3 <= lo <= hi <= 3");
    for (int n : grid.n_values)
        if (n < 1)
            fail(ErrorKind::Domain, kModule, "n values must be positive");

    const double two_zeta3 = 2.0 * specfun::zeta3_d();

    auto column = [&](int n) {
        const double scale = std::pow(static_cast<double>(n), 2.0 / 3.0);
        std::vector<int> Ns;
        if (grid.N_values) {
            for (int N : *grid.N_values)
                if (N >= 1 && N >= grid.window_lo * scale && N <= grid.window_hi * scale)
                    Ns.push_back(N);
        } else {
            for (int N = std::max(1, static_cast<int>(std::ceil(grid.window_lo * scale)));
                 N <= static_cast<int>(std::floor(grid.window_hi * scale)); ++N)
                Ns.push_back(N);
        }
        std::vector<FitSample> out;
        if (Ns.empty())
            return out;
        std::sort(Ns.begin(), Ns.end());
        const double beta0 = std::cbrt(two_zeta3 / n);
        const auto table =
            finite::zn_recurrence(finite::RecurrenceConfig::from_beta(2, beta0, Ns.back(), grid.precision_bits));
        const double limit = finite::ln_z_unrestricted_beta(2, beta0);
        for (int N : Ns) {
            // Rounding can leave a saturated column a hair above the limit.
            out.push_back({n, N, std::min(0.0, table.at(N) - limit)});
        }
        return out;
    };

    std::vector<std::future<std::vector<FitSample>>> jobs;
    for (int n : grid.n_values)
        jobs.push_back(std::async(std::launch::async, column, n));
    std::vector<FitSample> samples;
    for (auto& job : jobs) {
        auto part = job.get();
        samples.insert(samples.end(), part.begin(), part.end());
    }
    return samples;
}

FitParams fit_model(const std::vector<FitSample>& data, const FitOptions& options)
{
    std::set<int> distinct_n;
    std::vector<Point> pts;
    for (const auto& s : data) {
        if (s.n < 1 || s.N < 1)
            fail(ErrorKind::Domain, kModule, "samples need positive n and N");
        if (options.log_space && !(s.ln_ratio < 0.0))
            continue; // ln(-y) undefined at saturation
        distinct_n.insert(s.n);
        pts.push_back({static_cast<double>(s.n), static_cast<double>(s.N), s.ln_ratio});
    }
    if (pts.size() < 10 || distinct_n.size() < 3)
        fail(ErrorKind::Domain, kModule,
             "fit needs at least 10 samples over 3 distinct n, got " + std::to_string(pts.size()) + " over " +
                 std::to_string(distinct_n.size()));

    Eigen::Vector3d p(options.A0, options.b0, options.k0 != 0.0 ? options.k0 : 2.0 * specfun::zeta3_d());
    Eigen::VectorXd r;
    Eigen::MatrixXd J;
    evaluate(pts, p, options.log_space, r, J);
    double cost = r.squaredNorm();
    double lambda = 1e-3;

    FitParams out;
    int iter = 0;
    bool converged = false;
    for (; iter < options.max_iterations; ++iter) {
        const Eigen::Matrix3d JtJ = J.transpose() * J;
        const Eigen::Vector3d g = J.transpose() * r;
        if (g.norm() <= 1e-14 * std::max(1.0, cost)) {
            converged = true;
            break;
        }
        bool stepped = false;
        while (lambda < 1e16) {
            Eigen::Matrix3d damped = JtJ;
            damped.diagonal() += lambda * JtJ.diagonal().cwiseMax(1e-300);
            const Eigen::Vector3d delta = damped.ldlt().solve(-g);
            Eigen::Vector3d trial = p + delta;
            if (options.log_space && trial[0] <= 0.0) {
                lambda *= 4.0;
                continue;
            }
            Eigen::VectorXd r_trial;
            Eigen::MatrixXd J_trial;
            evaluate(pts, trial, options.log_space, r_trial, J_trial);
            const double trial_cost = r_trial.squaredNorm();
            if (std::isfinite(trial_cost) && trial_cost <= cost) {
                const double step = delta.cwiseAbs().cwiseQuotient(p.cwiseAbs().cwiseMax(1e-8)).maxCoeff();
                const bool flat = cost - trial_cost <= 1e-15 * cost;
                p = trial;
                r = std::move(r_trial);
                J = std::move(J_trial);
                cost = trial_cost;
                lambda = std::max(lambda / 3.0, 1e-12);
                stepped = true;
                if (step < 1e-12 || (flat && step < 1e-8) || cost < 1e-28)
                    converged = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!stepped) {
            // No descent direction left at any damping: we are at the optimum
            // to working precision.
            converged = true;
            break;
        }
        if (converged) {
            ++iter;
            break;
        }
    }
    const double grad_norm = (J.transpose() * r).norm();
    if (!converged)
        fail(ErrorKind::NonConvergence, kModule,
             "no convergence after " + std::to_string(options.max_iterations) + " iterations; " + describe(p, grad_norm));

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
    const auto& sv = svd.singularValues();
    if (sv.size() < 3 || !(sv[2] > 1e-12 * sv[0]))
        fail(ErrorKind::RankDeficient, kModule, "Jacobian is numerically singular at the optimum; " + describe(p, grad_norm));

    // Sandwich covariance with leverage correction (HC3): the residual scale
    // varies strongly across the grid and a few large-n points carry most of
    // the leverage, so a pooled s^2 (J^T J)^-1 would understate the spread.
    const Eigen::Matrix3d bread = (J.transpose() * J).inverse();
    Eigen::VectorXd scaled(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) {
        const double leverage = J.row(i) * bread * J.row(i).transpose();
        scaled[i] = std::abs(r[i]) / std::max(1e-12, 1.0 - leverage);
    }
    const Eigen::MatrixXd weighted = scaled.asDiagonal() * J;
    const Eigen::Matrix3d cov = bread * (weighted.transpose() * weighted) * bread;

    out.A = p[0];
    out.b = p[1];
    out.k = p[2];
    out.stderr_A = std::sqrt(std::max(0.0, cov(0, 0)));
    out.stderr_b = std::sqrt(std::max(0.0, cov(1, 1)));
    out.stderr_k = std::sqrt(std::max(0.0, cov(2, 2)));
    out.residual_norm = std::sqrt(cost);
    out.gradient_norm = grad_norm;
    out.iterations = iter;
    out.samples = pts.size();
    return out;
}

double cox_stuart_pvalue(const std::vector<double>& values)
{
    const std::size_t half = values.size() / 2;
    const std::size_t offset = values.size() - half; // skip the middle value for odd sizes
    int plus = 0;
    int minus = 0;
    for (std::size_t i = 0; i < half; ++i) {
        const double d = values[offset + i] - values[i];
        if (d > 0)
            ++plus;
        else if (d < 0)
            ++minus;
    }
    const int m = plus + minus;
    if (m == 0)
        return 1.0;
    const int extreme = std::min(plus, minus);
    // P(X <= extreme), X ~ Bin(m, 1/2), doubled.
    double tail = 0.0;
    double log_half_m = m * std::log(0.5);
    for (int i = 0; i <= extreme; ++i)
        tail += std::exp(std::lgamma(m + 1.0) - std::lgamma(i + 1.0) - std::lgamma(m - i + 1.0) + log_half_m);
    return std::min(1.0, 2.0 * tail);
}

void write_samples_csv(std::ostream& out, const std::vector<FitSample>& samples)
{
    out << "n,N,ln_ratio\n";
    const auto old_precision = out.precision(17);
    for (const auto& s : samples)
        out << s.n << ',' << s.N << ',' << s.ln_ratio << '\n';
    out.precision(old_precision);
}

std::vector<FitSample> read_samples_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        fail(ErrorKind::EmptyInput, kModule, "empty sample file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "n,N,ln_ratio")
        fail(ErrorKind::Domain, kModule, "sample file header must be 'n,N,ln_ratio', got '" + line + "'");
    std::vector<FitSample> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::istringstream row(line);
        FitSample s;
        char c1 = 0;
        char c2 = 0;
        if (!(row >> s.n >> c1 >> s.N >> c2 >> s.ln_ratio) || c1 != ',' || c2 != ',')
            fail(ErrorKind::Domain, kModule, "malformed sample on line " + std::to_string(lineno));
        if (s.ln_ratio > 0.0)
            fail(ErrorKind::Domain, kModule, "ln_ratio must be <= 0 on line " + std::to_string(lineno));
        out.push_back(s);
    }
    return out;
}

nlohmann::json to_json(const FitParams& p)
{
    return {
        {"A", p.A},
        {"b", p.b},
        {"k", p.k},
        {"stderr_A", p.stderr_A},
        {"stderr_b", p.stderr_b},
        {"stderr_k", p.stderr_k},
        {"residual_norm", p.residual_norm},
        {"gradient_norm", p.gradient_norm},
        {"iterations", p.iterations},
        {"samples", p.samples},
    };
}

nlohmann::json to_json(const GridSpec& grid)
{
    nlohmann::json j = {
        {"n_values", grid.n_values},
        {"window", {grid.window_lo, grid.window_hi}},
        {"precision_bits", grid.precision_bits},
    };
    if (grid.N_values)
        j["N_values"] = *grid.N_values;
    else
        j["N_values"] = "all integers in window";
    return j;
}

} // namespace partitions::fitlab
