#pragma once

// Report rows, table reproduction and their CSV/JSON serialization.
//
// CSV dialect: comma separated, '.' decimal, 6 significant digits. The first
// line is a '#' comment with tool metadata, the second the column names.
// Absent values are empty fields in CSV and null in JSON (full precision).

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavedisp/core.hpp"
#include "wavedisp/reflection.hpp"

namespace wavedisp {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { csv, json };
Format parse_format(std::string_view name);

enum class Provenance { closed_form, simulated };
std::string_view provenance_name(Provenance p);

struct ReportRow {
    WaveSetting setting;
    std::optional<double> vel_err_pct;
    std::optional<double> damp_err_pct;
    std::optional<double> reflection_pct;
    std::optional<double> d;
    std::optional<double> h;
    Provenance provenance = Provenance::closed_form;
};

/// Velocity/damping errors and (d, h) of one setting.
ReportRow dispersion_row(const WaveSetting& s);
/// Reflection magnitude plus the incident-side (d, h).
ReportRow reflection_row(const WaveSetting& s, InterfaceForm form = InterfaceForm::assembled);

/// 6 significant digits, the CSV number format.
std::string format_csv_number(double v);

void write_rows(std::ostream& out, std::span<const ReportRow> rows, Format format);
/// Parses what write_rows(..., Format::csv) produced.
std::vector<ReportRow> read_rows_csv(std::istream& in);

/// One computed value next to the published value it is compared with.
struct ComparedCell {
    std::string name;            ///< e.g. "consistent.vel_err_pct"
    std::string printed_column;  ///< printed heading the published value sits under
    double computed = 0.0;
    double printed = 0.0;
    bool suspect = false;        ///< published value flagged as a probable typo
    /// (gamma, computed) for the damping sweep when the table leaves gamma unstated.
    std::vector<std::pair<double, double>> sensitivity;

    double abs_dev() const;
    double rel_dev() const;  ///< |computed - printed| / |printed|
};

struct TableRow {
    int table = 0;
    std::size_t index = 0;
    WaveSetting setting;  ///< mass model is irrelevant here; cells carry it in their names
    std::optional<double> printed_right_mesh;
    std::vector<ComparedCell> cells;
};

/// Damping used where a table leaves it unstated.
inline constexpr double kTable2Gamma = 0.1;
inline constexpr double kTable3Gamma = 0.01;
inline constexpr std::array<double, 3> kGammaSweep{0.1, 0.01, 0.001};

struct TableOptions {
    std::optional<double> gamma;  ///< override for tables 2 and 3
};

/// Throws DomainError for which not in {1, 2, 3}.
std::vector<TableRow> reproduce_table(int which, const TableOptions& options = {});

void write_table(std::ostream& out, std::span<const TableRow> rows, Format format);

}  // namespace wavedisp
