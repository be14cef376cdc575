#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partitions::report {

enum class Format { csv, tsv, json };

/// A rendered cell. Integers keep every digit; reals are printed with a
/// fixed number of significant digits.
struct Cell {
    enum class Kind { empty, integer, real, text } kind = Kind::empty;
    std::string text;
    double real = 0.0;

    static Cell blank() { return {}; }
    static Cell integer_text(std::string digits) { return {Kind::integer, std::move(digits), 0.0}; }
    static Cell number(double v) { return {Kind::real, {}, v}; }
    static Cell label(std::string s) { return {Kind::text, std::move(s), 0.0}; }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

void render(const Table& table, Format format, int digits, std::ostream& out);

enum class Figure { fig2, fig3 };

/// Relative errors (estimate - exact)/exact of the leading and the
/// Bessel-corrected estimators: n = 2..200 for linear partitions (fig2),
/// n = 2..60 for plane partitions (fig3).
Table figure_data(Figure figure);

/// Exit codes of the command-line frontend.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;
inline constexpr int exit_precision = 4;

/// Environment variable that overrides the mantissa width of the recurrence.
inline constexpr const char* precision_env = "PARTITIONS_PRECISION_BITS";

/// Parses args (without the program name) and runs one subcommand. Data goes
/// to out, diagnostics and progress to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace partitions::report
