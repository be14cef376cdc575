#include "partitions/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "partitions/asymptotic.hpp"
#include "partitions/error.hpp"
#include "partitions/exact.hpp"
#include "partitions/finite.hpp"
#include "partitions/fitlab.hpp"
#include "partitions/specfun.hpp"
#include "partitions/thermo.hpp"

namespace partitions::report {

namespace {

constexpr const char* kModule = "cli";

std::string format_real(double v, int digits)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string cell_text(const Cell& c, int digits)
{
    switch (c.kind) {
    case Cell::Kind::empty:
        return {};
    case Cell::Kind::integer:
    case Cell::Kind::text:
        return c.text;
    case Cell::Kind::real:
        return format_real(c.real, digits);
    }
    return {};
}

std::string json_cell(const Cell& c, int digits)
{
    switch (c.kind) {
    case Cell::Kind::empty:
        return "null";
    case Cell::Kind::integer:
        return c.text;
    case Cell::Kind::text:
        return nlohmann::json(c.text).dump();
    case Cell::Kind::real:
        return std::isfinite(c.real) ? format_real(c.real, digits) : "null";
    }
    return "null";
}

std::string big(const BigCount& v)
{
    return v.str();
}

// "1,2,5" or "2:60" (inclusive range) or a mix of both.
std::vector<int> parse_int_list(const std::vector<std::string>& items, const std::string& flag)
{
    std::vector<int> out;
    auto to_int = [&](const std::string& s) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != s.size() || v < 0 || v > 100'000'000)
            fail(ErrorKind::Usage, kModule, "--" + flag + ": '" + s + "' is not a nonnegative integer");
        return static_cast<int>(v);
    };
    for (const auto& item : items) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.push_back(to_int(item));
            continue;
        }
        const int lo = to_int(item.substr(0, colon));
        const int hi = to_int(item.substr(colon + 1));
        if (hi < lo)
            fail(ErrorKind::Usage, kModule, "--" + flag + ": empty range '" + item + "'");
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    return out;
}

int precision_from_env(int fallback)
{
    const char* raw = std::getenv(precision_env);
    if (!raw || !*raw)
        return fallback;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 100000)
        fail(ErrorKind::Usage, kModule, std::string(precision_env) + " must be a positive integer, got '" + raw + "'");
    return static_cast<int>(v);
}

double parse_plane_constant(const std::string& s)
{
    if (s == "wright")
        return thermo::plane_constant(thermo::PlaneConstant::wright);
    if (s == "leading")
        return thermo::plane_constant(thermo::PlaneConstant::leading);
    if (s == "k3")
        return thermo::plane_constant(thermo::PlaneConstant::truncated_k3);
    if (s == "k4")
        return thermo::plane_constant(thermo::PlaneConstant::truncated_k4);
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos == s.size() && std::isfinite(v))
            return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::Usage, kModule, "--c must be wright, leading, k3, k4 or a number, got '" + s + "'");
}

std::uint32_t max_of(const std::vector<int>& v)
{
    return v.empty() ? 0u : static_cast<std::uint32_t>(*std::max_element(v.begin(), v.end()));
}

void require_positive(const std::vector<int>& ns, const char* what)
{
    for (int n : ns)
        if (n < 1)
            fail(ErrorKind::Domain, "asymptotic", std::string(what) + " requires n >= 1");
}

// --- subcommands ------------------------------------------------------------

struct CountArgs {
    std::string family = "linear";
    std::vector<std::string> n;
    std::vector<std::string> N;
    int s = 0;
    int exponent = 0;
    int cap = static_cast<int>(exact::default_enumeration_cap);
};

Table run_count(const CountArgs& a)
{
    const auto ns = parse_int_list(a.n, "n");
    const auto Ns = parse_int_list(a.N, "N");
    const auto cap = static_cast<std::uint32_t>(a.cap);

    std::optional<exact::PartitionFamily> fixed;
    if (a.family == "distinct")
        fixed = exact::PartitionFamily::distinct_parts();
    else if (a.family == "max-part-value")
        fixed = exact::PartitionFamily::max_part_value(a.s);
    else if (a.family == "power")
        fixed = exact::PartitionFamily::power_parts(a.exponent);
    else if (a.family != "linear" && a.family != "plane")
        fail(ErrorKind::Usage, kModule, "unknown family '" + a.family + "'");
    if (fixed && !Ns.empty())
        fail(ErrorKind::Usage, kModule, "--N only applies to the linear and plane families");

    const auto kind = a.family == "plane" ? exact::Kind::plane : exact::Kind::linear;
    Table t;
    if (Ns.empty()) {
        t.columns = {"n", "count"};
        for (int n : ns) {
            const auto family = fixed ? *fixed : exact::PartitionFamily::unrestricted(kind);
            t.rows.push_back({Cell::integer_text(std::to_string(n)),
                              Cell::integer_text(big(exact::count_variant(static_cast<std::uint32_t>(n), family, cap)))});
        }
        return t;
    }
    t.columns = {"n", "N", "count"};
    for (int n : ns)
        for (int N : Ns) {
            const auto family = exact::PartitionFamily::max_parts(N, kind);
            t.rows.push_back({Cell::integer_text(std::to_string(n)), Cell::integer_text(std::to_string(N)),
                              Cell::integer_text(big(exact::count_variant(static_cast<std::uint32_t>(n), family, cap)))});
        }
    return t;
}

struct EstimateArgs {
    std::string family = "linear";
    std::vector<std::string> n;
    std::string c = "wright";
};

Table run_estimate(const EstimateArgs& a)
{
    const auto ns = parse_int_list(a.n, "n");
    require_positive(ns, "estimate");
    Table t;
    t.columns = {"n", "log_main", "main", "log_corrected", "corrected"};
    const bool plane = a.family == "plane";
    if (!plane && a.family != "linear")
        fail(ErrorKind::Usage, kModule, "estimate supports the linear and plane families, got '" + a.family + "'");
    const double c = plane ? parse_plane_constant(a.c) : 0.0;
    for (int n : ns) {
        const auto main = plane ? asymptotic::wright_estimate(n, c) : asymptotic::hr_estimate(n);
        const auto corr = plane ? asymptotic::wright_corrected(n, c) : asymptotic::hr_corrected(n);
        t.rows.push_back({Cell::integer_text(std::to_string(n)), Cell::number(main.log_value), Cell::number(main.value),
                          Cell::number(corr.log_value), Cell::number(corr.value)});
    }
    return t;
}

struct ErrorsArgs {
    std::string family = "linear";
    std::vector<std::string> n;
    std::string c = "wright";
};

Table run_errors(const ErrorsArgs& a)
{
    const auto ns = parse_int_list(a.n, "n");
    require_positive(ns, "errors");
    const bool plane = a.family == "plane";
    if (!plane && a.family != "linear")
        fail(ErrorKind::Usage, kModule, "errors supports the linear and plane families, got '" + a.family + "'");
    const double c = plane ? parse_plane_constant(a.c) : 0.0;
    const auto exact_counts = plane ? exact::plane_table(max_of(ns)) : exact::linear_table(max_of(ns));

    Table t;
    t.columns = {"n", plane ? "wright_err" : "hr_err", "corrected_err"};
    for (int n : ns) {
        const auto& ex = exact_counts[static_cast<std::size_t>(n)];
        const auto main = plane ? asymptotic::wright_estimate(n, c) : asymptotic::hr_estimate(n);
        const auto corr = plane ? asymptotic::wright_corrected(n, c) : asymptotic::hr_corrected(n);
        t.rows.push_back({Cell::integer_text(std::to_string(n)),
                          Cell::number(100.0 * asymptotic::relative_error(main, ex)),
                          Cell::number(100.0 * asymptotic::relative_error(corr, ex))});
    }
    return t;
}

struct ZnArgs {
    int D = 2;
    std::vector<std::string> n;
    std::vector<std::string> N;
};

Table run_zn_table(const ZnArgs& a, std::ostream& err)
{
    const auto ns = parse_int_list(a.n, "n");
    const auto Ns = parse_int_list(a.N, "N");
    require_positive(ns, "zn-table");
    if (Ns.empty())
        fail(ErrorKind::Usage, kModule, "zn-table needs --N");
    for (int N : Ns)
        if (N < 1)
            fail(ErrorKind::Domain, "finite", "N must be >= 1");
    if (a.D != 1 && a.D != 2)
        fail(ErrorKind::Domain, "finite", "zn-table supports D = 1 or 2, got " + std::to_string(a.D));
    const int bits = precision_from_env(53);
    const auto model = a.D == 1 ? thermo::ThermoModel::linear() : thermo::ThermoModel::plane();

    struct Column {
        std::vector<std::optional<double>> cells;
        double limit;
    };
    auto column = [&](int n) {
        const double beta = thermo::saddle(model, n).beta0;
        int top = 0;
        for (int N : Ns)
            if (N <= n)
                top = std::max(top, N);
        Column col{{}, finite::ln_z_unrestricted_beta(a.D, beta)};
        if (top > 0) {
            const auto table = finite::zn_recurrence(finite::RecurrenceConfig::from_beta(a.D, beta, top, bits));
            for (int N : Ns)
                col.cells.push_back(N <= n ? std::optional<double>(table.at(N)) : std::nullopt);
        } else {
            col.cells.assign(Ns.size(), std::nullopt);
        }
        return col;
    };

    std::vector<std::future<Column>> jobs;
    for (int n : ns)
        jobs.push_back(std::async(std::launch::async, column, n));
    std::vector<Column> cols;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        cols.push_back(jobs[i].get());
        err << "zn-table: column n=" << ns[i] << " done (" << i + 1 << "/" << jobs.size() << ")\n";
    }

    Table t;
    t.columns.push_back("N");
    for (int n : ns)
        t.columns.push_back(std::to_string(n));
    for (std::size_t r = 0; r < Ns.size(); ++r) {
        std::vector<Cell> row{Cell::integer_text(std::to_string(Ns[r]))};
        for (const auto& col : cols)
            row.push_back(col.cells[r] ? Cell::number(*col.cells[r]) : Cell::blank());
        t.rows.push_back(std::move(row));
    }
    std::vector<Cell> last{Cell::label("inf")};
    for (const auto& col : cols)
        last.push_back(Cell::number(col.limit));
    t.rows.push_back(std::move(last));
    return t;
}

struct FitArgs {
    std::vector<std::string> n;
    std::vector<std::string> N;
    bool all_N = false;
    double lo = 0.3;
    double hi = 3.0;
    bool log_space = false;
    std::string samples_in;
    std::string samples_out;
};

void run_fit(const FitArgs& a, Format format, int digits, std::ostream& out, std::ostream& err)
{
    fitlab::GridSpec grid;
    if (!a.n.empty())
        grid.n_values = parse_int_list(a.n, "n");
    if (a.all_N)
        grid.N_values.reset();
    else if (!a.N.empty())
        grid.N_values = parse_int_list(a.N, "N");
    grid.window_lo = a.lo;
    grid.window_hi = a.hi;
    grid.precision_bits = precision_from_env(53);

    std::vector<fitlab::FitSample> samples;
    if (!a.samples_in.empty()) {
        std::ifstream in(a.samples_in);
        if (!in)
            fail(ErrorKind::Usage, kModule, "cannot open '" + a.samples_in + "'");
        samples = fitlab::read_samples_csv(in);
    } else {
        err << "fit: building dataset over " << grid.n_values.size() << " values of n\n";
        samples = fitlab::build_dataset(grid);
    }
    if (!a.samples_out.empty()) {
        std::ofstream o(a.samples_out);
        if (!o)
            fail(ErrorKind::Usage, kModule, "cannot write '" + a.samples_out + "'");
        fitlab::write_samples_csv(o, samples);
    }

    fitlab::FitOptions options;
    options.log_space = a.log_space;
    const auto p = fitlab::fit_model(samples, options);

    if (format == Format::json) {
        // Round through the same formatter so the output is byte-stable.
        auto round = [&](double v) { return std::stod(format_real(v, digits)); };
        nlohmann::json j = fitlab::to_json(p);
        for (const char* key : {"A", "b", "k", "stderr_A", "stderr_b", "stderr_k", "residual_norm", "gradient_norm"})
            j[key] = round(j[key].get<double>());
        nlohmann::json doc = {{"params", j}, {"objective", a.log_space ? "log" : "signed"}};
        if (a.samples_in.empty())
            doc["grid"] = fitlab::to_json(grid);
        else
            doc["grid"] = {{"samples_file", a.samples_in}};
        out << doc.dump(2) << '\n';
        return;
    }
    Table t;
    t.columns = {"A", "b", "k", "stderr_A", "stderr_b", "stderr_k", "residual_norm", "iterations", "samples"};
    t.rows.push_back({Cell::number(p.A), Cell::number(p.b), Cell::number(p.k), Cell::number(p.stderr_A),
                      Cell::number(p.stderr_b), Cell::number(p.stderr_k), Cell::number(p.residual_norm),
                      Cell::integer_text(std::to_string(p.iterations)), Cell::integer_text(std::to_string(p.samples))});
    render(t, format, digits, out);
}

Table run_constants()
{
    using thermo::PlaneConstant;
    Table t;
    t.columns = {"name", "value"};
    const auto hi = [](const HighFloat& v) { return Cell::label(v.str(40, std::ios_base::fixed)); };
    t.rows.push_back({Cell::label("zeta3"), hi(specfun::zeta3())});
    t.rows.push_back({Cell::label("log_glaisher"), hi(specfun::log_glaisher())});
    t.rows.push_back({Cell::label("zeta_prime_minus1"), hi(specfun::zeta_prime_minus1())});
    const auto series = specfun::em_c_series(4);
    t.rows.push_back({Cell::label("c_leading"), Cell::label("-1/6")});
    t.rows.push_back({Cell::label("c_k3"), Cell::label(series.partial_sums[1].str())});
    t.rows.push_back({Cell::label("c_k4"), Cell::label(series.partial_sums[2].str())});
    return t;
}

Table run_em_series(int k_max)
{
    const auto series = specfun::em_c_series(k_max);
    Table t;
    t.columns = {"k", "f_term", "magnitude", "partial_sum", "partial_sum_value"};
    for (std::size_t i = 0; i < series.terms.size(); ++i) {
        const auto& term = series.terms[i];
        t.rows.push_back({Cell::integer_text(std::to_string(term.k)), Cell::label(term.f_term.str()),
                          Cell::number(term.magnitude), Cell::label(series.partial_sums[i].str()),
                          Cell::number(series.partial_sums[i].convert_to<double>())});
    }
    return t;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Usage:
        return exit_usage;
    case ErrorKind::PrecisionExhausted:
        return exit_precision;
    default:
        return exit_domain;
    }
}

} // namespace

void render(const Table& table, Format format, int digits, std::ostream& out)
{
    if (format == Format::json) {
        out << "[";
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            out << (r ? ",\n " : "\n ") << "{";
            for (std::size_t c = 0; c < table.columns.size(); ++c)
                out << (c ? ", " : "") << nlohmann::json(table.columns[c]).dump() << ": "
                    << json_cell(table.rows[r][c], digits);
            out << "}";
        }
        out << "\n]\n";
        return;
    }
    const char sep = format == Format::tsv ? '\t' : ',';
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? std::string(1, sep) : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? std::string(1, sep) : "") << cell_text(row[c], digits);
        out << '\n';
    }
}

Table figure_data(Figure figure)
{
    const bool plane = figure == Figure::fig3;
    const std::uint32_t top = plane ? 60 : 200;
    const auto exact_counts = plane ? exact::plane_table(top) : exact::linear_table(top);
    Table t;
    t.columns = {"n", "relative_error_main", "relative_error_corrected"};
    for (std::uint32_t n = 2; n <= top; ++n) {
        const auto main = plane ? asymptotic::wright_estimate(n) : asymptotic::hr_estimate(n);
        const auto corr = plane ? asymptotic::wright_corrected(n) : asymptotic::hr_corrected(n);
        t.rows.push_back({Cell::integer_text(std::to_string(n)),
                          Cell::number(asymptotic::relative_error(main, exact_counts[n])),
                          Cell::number(asymptotic::relative_error(corr, exact_counts[n]))});
    }
    return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts and asymptotics of linear and plane partitions"};
    app.name("partitions");
    app.require_subcommand(1);

    std::string format_name = "csv";
    int digits = 6;
    app.add_option("--format", format_name, "csv, tsv or json")->check(CLI::IsMember({"csv", "tsv", "json"}));
    app.add_option("--digits", digits, "significant digits of real numbers")->check(CLI::Range(1, 17));

    CountArgs count;
    auto* c_count = app.add_subcommand("count", "exact counts");
    c_count->add_option("--family", count.family, "linear, plane, distinct, max-part-value or power");
    c_count->add_option("--n", count.n, "values of n (list, a:b ranges)")->delimiter(',')->required();
    c_count->add_option("--N", count.N, "at most N parts (linear) or N nonzero entries (plane)")->delimiter(',');
    c_count->add_option("--s", count.s, "largest allowed part (max-part-value)");
    c_count->add_option("--exponent", count.exponent, "parts are perfect powers with this exponent (power)");
    c_count->add_option("--cap", count.cap, "largest n for plane enumeration");

    EstimateArgs estimate;
    auto* c_estimate = app.add_subcommand("estimate", "leading and corrected asymptotic estimates");
    c_estimate->add_option("--family", estimate.family, "linear or plane");
    c_estimate->add_option("--n", estimate.n, "values of n")->delimiter(',')->required();
    c_estimate->add_option("--c", estimate.c, "plane constant: wright, leading, k3, k4 or a number");

    ErrorsArgs errors;
    auto* c_errors = app.add_subcommand("errors", "relative errors in percent against exact counts");
    c_errors->add_option("--family", errors.family, "linear or plane");
    c_errors->add_option("--n", errors.n, "values of n")->delimiter(',')->required();
    c_errors->add_option("--c", errors.c, "plane constant: wright, leading, k3, k4 or a number");

    ZnArgs zn;
    auto* c_zn = app.add_subcommand("zn-table", "ln Z_N at the saddle temperature of each n");
    c_zn->add_option("--D", zn.D, "dimension, 1 or 2");
    c_zn->add_option("--n", zn.n, "columns")->delimiter(',')->required();
    c_zn->add_option("--N", zn.N, "rows")->delimiter(',')->required();

    FitArgs fit;
    auto* c_fit = app.add_subcommand("fit", "fit the intermediate-regime model");
    c_fit->add_option("--n", fit.n, "values of n")->delimiter(',');
    c_fit->add_option("--N", fit.N, "candidate values of N")->delimiter(',');
    c_fit->add_flag("--all-N", fit.all_N, "use every integer N in the window");
    c_fit->add_option("--window-lo", fit.lo, "lower window multiplier of n^(2/3)");
    c_fit->add_option("--window-hi", fit.hi, "upper window multiplier of n^(2/3)");
    c_fit->add_flag("--log-space", fit.log_space, "fit ln(-ln ratio) instead of ln ratio");
    c_fit->add_option("--samples-in", fit.samples_in, "read samples from CSV instead of computing them");
    c_fit->add_option("--samples-out", fit.samples_out, "write the samples used to CSV");

    auto* c_constants = app.add_subcommand("constants", "zeta(3), Glaisher and the 2D entropy constant");

    int k_max = 10;
    auto* c_em = app.add_subcommand("em-series", "Euler-Maclaurin series for the 2D entropy constant");
    c_em->add_option("--k-max", k_max, "last term");

    std::string which;
    auto* c_figure = app.add_subcommand("figure", "relative-error curves for plotting");
    c_figure->add_option("--which", which, "fig2 (linear) or fig3 (plane)")
        ->check(CLI::IsMember({"fig2", "fig3"}))
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "partitions: cli: " << e.what() << '\n';
        return exit_usage;
    }

    const Format format = format_name == "json" ? Format::json : format_name == "tsv" ? Format::tsv : Format::csv;
    try {
        if (c_count->parsed())
            render(run_count(count), format, digits, out);
        else if (c_estimate->parsed())
            render(run_estimate(estimate), format, digits, out);
        else if (c_errors->parsed())
            render(run_errors(errors), format, digits, out);
        else if (c_zn->parsed())
            render(run_zn_table(zn, err), format, digits, out);
        else if (c_fit->parsed())
            run_fit(fit, format, digits, out, err);
        else if (c_constants->parsed())
            render(run_constants(), format, digits, out);
        else if (c_em->parsed())
            render(run_em_series(k_max), format, digits, out);
        else if (c_figure->parsed())
            render(figure_data(which == "fig2" ? Figure::fig2 : Figure::fig3), format, digits, out);
    } catch (const Error& e) {
        err << "partitions: " << e.what() << " [" << to_string(e.kind()) << "]\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "partitions: " << kModule << ": " << e.what() << '\n';
        return exit_domain;
    }
    return exit_ok;
}

} // namespace partitions::report
