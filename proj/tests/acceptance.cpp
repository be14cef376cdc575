// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>

#include "partitions/asymptotic.hpp"
#include "partitions/exact.hpp"
#include "partitions/finite.hpp"
#include "partitions/fitlab.hpp"
#include "partitions/specfun.hpp"
#include "partitions/thermo.hpp"

using namespace partitions;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what)
    {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok   " : "MISS ") + what);
    }
};

template <class... T>
std::string fmt(const char* f, T... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double plane_beta(double n)
{
    return std::cbrt(2.0 * specfun::zeta3_d() / n);
}

Outcome exact_values()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const BigCount p10 = exact::count_linear(10);
    const BigCount p100 = exact::count_linear(100);
    const BigCount p200 = exact::count_linear(200);
    const BigCount q3 = exact::count_plane(3);
    const BigCount q4 = exact::count_plane(4);
    const double elapsed = seconds_since(t0);
    o.check(p10 == 42, "p(10) = " + p10.str());
    o.check(p100 == 190569292, "p(100) = " + p100.str());
    o.check(p200 == BigCount("3972999029388"), "p(200) = " + p200.str());
    o.check(q3 == 6, "p2D(3) = " + q3.str());
    o.check(q4 == 13, "p2D(4) = " + q4.str());
    o.check(elapsed < 1.0, fmt("runtime %.2e s", elapsed));
    return o;
}

Outcome table1()
{
    Outcome o;
    const auto s = specfun::em_c_series(6);
    const double reference[] = {0.0013889, 0.0001984, 0.0000992, 0.0001052, 0.0001918};
    for (int i = 0; i < 5; ++i) {
        const double m = s.terms[i].magnitude;
        // Rounded to 7 decimals.
        o.check(std::abs(std::round(m * 1e7) / 1e7 - reference[i]) < 1e-12,
                fmt("k=%d magnitude %.7f (reference %.7f)", s.terms[i].k, m, reference[i]));
    }
    const int k = specfun::optimal_truncation(s.terms);
    o.check(k == 4, fmt("optimal truncation k=%d", k));
    o.check(s.partial_sums[1] == Rational(-139, 840), "c through k=3 = " + s.partial_sums[1].str());
    o.check(s.partial_sums[2] == Rational(-1667, 10080), "c through k=4 = " + s.partial_sums[2].str());
    return o;
}

Outcome error_table()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto p = exact::plane_table(1000);
    const double elapsed = seconds_since(t0);
    struct Row {
        int n;
        double main;
        double corrected;
    };
    for (const Row r : {Row{50, 1.81, -2.72}, Row{100, 1.13, -1.98}, Row{1000, 0.24, -0.54}}) {
        const double m = 100 * asymptotic::relative_error(asymptotic::wright_estimate(r.n), p[r.n]);
        const double c = 100 * asymptotic::relative_error(asymptotic::wright_corrected(r.n), p[r.n]);
        o.check(std::abs(m - r.main) <= 0.02, fmt("n=%d main %+.4f%% (reference %+.2f%%)", r.n, m, r.main));
        o.check(std::abs(c - r.corrected) <= 0.02,
                fmt("n=%d corrected %+.4f%% (reference %+.2f%%)", r.n, c, r.corrected));
    }
    o.check(elapsed < 300.0, fmt("exact p2D(0..1000) in %.2f s", elapsed));
    return o;
}

Outcome corrected_accuracy()
{
    Outcome o;
    const auto p = exact::linear_table(200);
    double worst = 0.0;
    int worst_n = 0;
    for (int n = 21; n <= 200; ++n) {
        const double e = std::abs(asymptotic::relative_error(asymptotic::hr_corrected(n), p[n]));
        if (e > worst) {
            worst = e;
            worst_n = n;
        }
    }
    o.check(worst < 0.01, fmt("1D corrected: max |error| over n=21..200 is %.4f%% at n=%d", 100 * worst, worst_n));

    const auto q = exact::plane_table(60);
    std::string wrong_below;
    std::string wrong_above;
    for (int n = 2; n <= 60; ++n) {
        const double m = std::abs(asymptotic::relative_error(asymptotic::wright_estimate(n), q[n]));
        const double c = std::abs(asymptotic::relative_error(asymptotic::wright_corrected(n), q[n]));
        const bool corrected_wins = c < m;
        if (n < 17 && !corrected_wins)
            wrong_below += fmt(" %d(main %.3f%% corr %.3f%%)", n, 100 * m, 100 * c);
        if (n >= 17 && corrected_wins)
            wrong_above += fmt(" %d(main %.3f%% corr %.3f%%)", n, 100 * m, 100 * c);
    }
    o.check(wrong_below.empty(), "2D: corrected beats main for every n in 2..16" +
                                     (wrong_below.empty() ? std::string() : "; exceptions:" + wrong_below));
    o.check(wrong_above.empty(), "2D: main beats corrected for every n in 17..60" +
                                     (wrong_above.empty() ? std::string() : "; exceptions:" + wrong_above));
    return o;
}

Outcome table2()
{
    Outcome o;
    const std::vector<int> ns{100, 200, 500, 1000, 2000, 5000, 10000};
    struct Entry {
        int N; // 0 marks the saturated row
        int n;
        double value;
    };
    const std::vector<Entry> reference{
        {10, 100, 13.50490},   {10, 200, 17.20871},    {10, 500, 22.46359},    {10, 1000, 26.62624},
        {10, 2000, 30.90153},  {10, 5000, 36.67638},   {10, 10000, 41.11207},  {20, 100, 17.11408},
        {20, 200, 23.66709},   {20, 500, 33.53210},    {20, 1000, 41.58209},   {20, 2000, 49.96198},
        {20, 5000, 61.38032},  {20, 10000, 70.19437},  {30, 100, 18.09474},    {30, 200, 26.52429},
        {30, 500, 40.27325},   {30, 1000, 51.91522},   {30, 2000, 64.22143},   {30, 5000, 81.14853},
        {30, 10000, 94.28280}, {50, 100, 18.30640},    {50, 200, 28.02642},    {50, 500, 47.03409},
        {50, 1000, 64.86995},  {50, 2000, 84.45795},   {50, 5000, 111.98343},  {50, 10000, 133.58019},
        {100, 200, 28.13457},  {100, 500, 49.79461},   {100, 1000, 75.97533},  {100, 2000, 109.82935},
        {100, 5000, 161.18825}, {100, 10000, 202.85769}, {200, 500, 49.81234}, {200, 1000, 76.99794},
        {200, 2000, 119.32409}, {200, 5000, 203.58562}, {200, 10000, 280.20762}, {300, 1000, 76.99798},
        {300, 2000, 119.40093}, {300, 5000, 213.60298}, {300, 10000, 316.40845}, {500, 5000, 214.27879},
        {500, 10000, 334.40026}, {0, 100, 18.30884},    {0, 200, 28.13458},     {0, 500, 49.81234},
        {0, 1000, 76.99798},   {0, 2000, 119.40094},   {0, 5000, 214.27879},   {0, 10000, 334.64773},
    };
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int misses = 0;
    for (const auto& e : reference) {
        const double beta = plane_beta(e.n);
        const double got = e.N == 0
                               ? finite::ln_z_unrestricted_beta(2, beta)
                               : finite::zn_recurrence(finite::RecurrenceConfig::from_beta(2, beta, e.N)).at(e.N);
        const double diff = std::abs(got - e.value);
        worst = std::max(worst, diff);
        if (diff > 1e-4) {
            ++misses;
            o.check(false, fmt("n=%d N=%s: %.5f vs reference %.5f", e.n, e.N ? std::to_string(e.N).c_str() : "->n",
                               got, e.value));
        }
    }
    o.check(misses == 0, fmt("%zu reference entries, max |difference| %.2e", reference.size(), worst));
    o.check(true, fmt("runtime %.2f s", seconds_since(t0)));
    return o;
}

Outcome erdos_lehner()
{
    Outcome o;
    for (int n : {2000, 5000, 10000}) {
        const double s = std::sqrt(6.0 * n) / std::numbers::pi;
        const double lo = 0.5 * s * std::log(n);
        const double hi = 3.0 * std::sqrt(double(n));
        std::vector<int> Ns;
        for (int N = static_cast<int>(std::ceil(lo)); N <= hi; ++N)
            Ns.push_back(N);
        const bool empty = Ns.empty();
        if (empty)
            Ns.push_back(static_cast<int>(std::lround(lo)));
        const auto column = exact::linear_restricted_column(n, Ns.back());
        const double log_p = asymptotic::log_count(exact::count_linear(n));
        double worst = 0.0;
        int worst_N = 0;
        for (int N : Ns) {
            const double exact_log = asymptotic::log_count(column[N]) - log_p;
            const double e = std::abs(asymptotic::erdos_lehner_log_ratio(n, N) - exact_log) / std::abs(exact_log);
            if (e >= worst) {
                worst = e;
                worst_N = N;
            }
        }
        o.check(worst <= 0.1, fmt("n=%d window [%.1f, %.1f]%s: max relative error %.4f at N=%d", n, lo, hi,
                                  empty ? " is empty, evaluated at its lower end" : "", worst, worst_N));
    }
    return o;
}

Outcome conjecture_desk_check()
{
    Outcome o;
    double previous = 1e300;
    for (int n : {16, 18, 20}) {
        const int N = static_cast<int>(std::lround(0.9 * n));
        const auto hist = exact::plane_nonzero_histogram(n);
        BigCount restricted = 0;
        for (int m = 0; m <= N; ++m)
            restricted += hist[m];
        const double implied =
            std::exp(asymptotic::log_count(exact::count_plane(n)) + asymptotic::conjecture_main(n, N));
        const double e = std::abs(implied / restricted.convert_to<double>() - 1.0);
        o.check(e <= 0.15, fmt("n=%d N=%d: exact %s, implied %.1f, error %.2f%%", n, N, restricted.str().c_str(),
                               implied, 100 * e));
        o.check(e < previous, "error decreases with n");
        previous = e;
    }
    return o;
}

Outcome fit_recovery()
{
    Outcome o;
    const fitlab::GridSpec grid;
    const auto data = fitlab::build_dataset(grid);
    const auto p = fitlab::fit_model(data);
    o.check(std::abs(p.A - 1.075) <= 0.024, fmt("A = %.4f +- %.4f (band 1.075 +- 0.024)", p.A, p.stderr_A));
    o.check(std::abs(p.b - 0.0060) <= 0.0006, fmt("b = %.5f +- %.5f (band 0.0060 +- 0.0006)", p.b, p.stderr_b));
    o.check(std::abs(p.k - 2.26) <= 0.6, fmt("k = %.3f +- %.3f (band 2.26 +- 0.6)", p.k, p.stderr_k));
    o.check(true, fmt("grid: %zu samples, n = 100..10000, N in {10,...,500} within [0.3, 3] n^(2/3)", p.samples));

    std::vector<fitlab::FitSample> synthetic;
    for (const auto& s : data)
        synthetic.push_back({s.n, s.N, fitlab::model(s.n, s.N, 1.075, 0.006, 2.26)});
    const auto q = fitlab::fit_model(synthetic);
    const double err = std::max({std::abs(q.A - 1.075), std::abs(q.b - 0.006), std::abs(q.k - 2.26)});
    o.check(err <= 1e-6, fmt("noiseless synthetic recovery: max parameter error %.2e", err));
    return o;
}

Outcome cross_paths()
{
    Outcome o;
    double worst = 0.0;
    for (double n : {50.0, 100.0, 1000.0}) {
        const double a = thermo::log_gamma_third_order(thermo::saddle(thermo::ThermoModel::linear(), n));
        const double b = thermo::log_gamma_third_order(thermo::saddle(thermo::ThermoModel::plane(), n));
        worst = std::max(worst, std::abs(std::expm1(a - asymptotic::hr_corrected(n).log_value)));
        worst = std::max(worst, std::abs(std::expm1(b - asymptotic::wright_corrected(n).log_value)));
    }
    o.check(worst <= 1e-10, fmt("corrected estimators vs generic third-order formula: max rel %.2e", worst));

    std::mt19937_64 rng(1931);
    std::uniform_real_distribution<double> ux(0.01, 0.995);
    std::uniform_int_distribution<int> uN(1, 500);
    double worst_zn = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double x = ux(rng);
        const int N = uN(rng);
        const double r = finite::zn_recurrence(finite::RecurrenceConfig::from_x(1, x, N)).at(N);
        const double c = finite::zn_closed_1d(x, N);
        worst_zn = std::max(worst_zn, std::abs(r - c) / std::max(1.0, std::abs(c)));
    }
    o.check(worst_zn <= 1e-10, fmt("1D recurrence vs closed product, 200 random (x, N): max %.2e", worst_zn));

    double worst_k = 0.0;
    double worst_oracle = 0.0;
    for (double nu : {1.0 / 3.0, 0.5}) {
        for (int i = 0; i < 80; ++i) {
            const double x = 0.05 * std::pow(2000.0, i / 79.0);
            const double primary = specfun::bessel_k_scaled(nu, x);
            const double a = std::abs(primary - specfun::bessel_k_integral_scaled(nu, x)) / primary;
            const double b = std::abs(primary - specfun::bessel_k_series_scaled(nu, x)) / primary;
            worst_k = std::max({worst_k, a, b});
            const double k = specfun::bessel_k(nu, x);
            const double ref = boost::math::cyl_bessel_k(nu, x);
            worst_oracle = std::max(worst_oracle, std::abs(k - ref) / ref);
        }
    }
    o.check(worst_k <= 1e-10, fmt("K_nu paths on x in [0.05, 100]: max rel %.2e", worst_k));
    o.check(worst_oracle <= 1e-12, fmt("K_nu vs reference implementation: max rel %.2e", worst_oracle));
    return o;
}

Outcome bracketing()
{
    Outcome o;
    const auto s = specfun::em_c_series(5);
    const double z = static_cast<double>(specfun::zeta_prime_minus1());
    for (int i : {1, 2}) {
        const double c = s.partial_sums[i].convert_to<double>();
        const double omitted = s.terms[i + 1].magnitude;
        const double bound = i == 1 ? 6e-5 : 5e-5;
        o.check(std::abs(c - z) <= omitted && std::abs(c - z) <= bound,
                fmt("k=%d: |c - zeta'(-1)| = %.3e <= next term %.3e and <= %.0e", s.terms[i].k, std::abs(c - z),
                    omitted, bound));
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "exact values", exact_values},
        {2, "Euler-Maclaurin table", table1},
        {3, "plane error table", error_table},
        {4, "corrected accuracy and 2D crossover", corrected_accuracy},
        {5, "ln Z_N table", table2},
        {6, "Erdos-Lehner window", erdos_lehner},
        {7, "restricted plane conjecture", conjecture_desk_check},
        {8, "fit recovery", fit_recovery},
        {9, "cross-path identities", cross_paths},
        {10, "zeta'(-1) bracketing", bracketing},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %2d %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name);
        for (const auto& d : o.details)
            std::printf("        %s\n", d.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
