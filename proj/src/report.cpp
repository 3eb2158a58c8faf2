#include "wavedisp/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "wavedisp/dispersion.hpp"
#include "wavedisp/reference_tables.hpp"

namespace wavedisp {

namespace {

using nlohmann::json;

void write_metadata(std::ostream& out) {
    out << "# wavedisp " << kToolVersion
        << "; normalization omega=2pi T=1 v_r=1 lambda=1 dt=1/a l=1/b c=gamma/pi\n";
}

std::string optional_csv(const std::optional<double>& v) {
    return v ? format_csv_number(*v) : std::string();
}

json optional_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::optional<double> parse_optional(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return std::stod(s);
}

const char* const kRowColumns[] = {"a", "b", "gamma", "alpha", "mass", "provenance",
                                   "vel_err_pct", "damp_err_pct", "reflection_pct", "d", "h"};

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw DomainError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

std::string_view provenance_name(Provenance p) {
    return p == Provenance::closed_form ? "closed_form" : "simulated";
}

ReportRow dispersion_row(const WaveSetting& s) {
    const DispersionErrors e = dispersion_errors(s);
    const NumericalWave w = numerical_wave(s);
    ReportRow r;
    r.setting = s;
    r.vel_err_pct = e.vel_err_pct;
    r.damp_err_pct = e.damp_err_pct;
    r.d = w.d;
    r.h = w.h;
    return r;
}

ReportRow reflection_row(const WaveSetting& s, InterfaceForm form) {
    const ReflectionResult refl = reflection_amplitude(s, form);
    const NumericalWave w = numerical_wave(s);
    ReportRow r;
    r.setting = s;
    r.reflection_pct = refl.magnitude_pct;
    r.d = w.d;
    r.h = w.h;
    return r;
}

std::string format_csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_rows(std::ostream& out, std::span<const ReportRow> rows, Format format) {
    if (format == Format::json) {
        json arr = json::array();
        for (const ReportRow& r : rows) {
            arr.push_back({{"a", r.setting.a},
                           {"b", r.setting.b},
                           {"gamma", r.setting.gamma},
                           {"alpha", r.setting.alpha},
                           {"mass", std::string(mass_model_name(r.setting.mass))},
                           {"provenance", std::string(provenance_name(r.provenance))},
                           {"vel_err_pct", optional_json(r.vel_err_pct)},
                           {"damp_err_pct", optional_json(r.damp_err_pct)},
                           {"reflection_pct", optional_json(r.reflection_pct)},
                           {"d", optional_json(r.d)},
                           {"h", optional_json(r.h)}});
        }
        out << arr.dump(2) << '\n';
        return;
    }
    write_metadata(out);
    for (std::size_t i = 0; i < std::size(kRowColumns); ++i) out << (i ? "," : "") << kRowColumns[i];
    out << '\n';
    for (const ReportRow& r : rows) {
        out << format_csv_number(r.setting.a) << ',' << format_csv_number(r.setting.b) << ','
            << format_csv_number(r.setting.gamma) << ',' << format_csv_number(r.setting.alpha) << ','
            << mass_model_name(r.setting.mass) << ',' << provenance_name(r.provenance) << ','
            << optional_csv(r.vel_err_pct) << ',' << optional_csv(r.damp_err_pct) << ','
            << optional_csv(r.reflection_pct) << ',' << optional_csv(r.d) << ',' << optional_csv(r.h) << '\n';
    }
}

std::vector<ReportRow> read_rows_csv(std::istream& in) {
    std::vector<ReportRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const std::vector<std::string> f = split_csv(line);
        if (f.size() != std::size(kRowColumns)) throw DomainError("malformed report row: " + line);
        ReportRow r;
        r.setting.a = std::stod(f[0]);
        r.setting.b = std::stod(f[1]);
        r.setting.gamma = std::stod(f[2]);
        r.setting.alpha = std::stod(f[3]);
        r.setting.mass = parse_mass_model(f[4]);
        r.provenance = f[5] == "simulated" ? Provenance::simulated : Provenance::closed_form;
        r.vel_err_pct = parse_optional(f[6]);
        r.damp_err_pct = parse_optional(f[7]);
        r.reflection_pct = parse_optional(f[8]);
        r.d = parse_optional(f[9]);
        r.h = parse_optional(f[10]);
        rows.push_back(r);
    }
    return rows;
}

double ComparedCell::abs_dev() const { return std::abs(computed - printed); }
double ComparedCell::rel_dev() const { return std::abs(computed - printed) / std::abs(printed); }

namespace {

constexpr const char* kDampingHeading = "relative numerical damping error %";
constexpr const char* kVelocityHeading = "relative numerical wave velocity error %";
constexpr const char* kReflectionHeading = "spurious reflections %";

struct MassEntry {
    const char* name;
    MassModel model;
};
constexpr MassEntry kMasses[] = {{"consistent", MassModel::consistent()}, {"lumped", MassModel::lumped()}};

// Cells of a dispersion table: the damping-column value is the velocity error
// and the velocity-column value is the negated damping error.
void add_dispersion_cells(TableRow& row, const reference::DispersionTableRow& printed, bool sweep) {
    for (const MassEntry& m : kMasses) {
        WaveSetting s = row.setting;
        s.mass = m.model;
        const bool lumped = m.model.is_lumped();
        const DispersionErrors e = dispersion_errors(s);

        ComparedCell vel{std::string(m.name) + ".vel_err_pct", kDampingHeading, e.vel_err_pct,
                         lumped ? printed.damping_column.lumped : printed.damping_column.consistent, false, {}};
        ComparedCell damp{std::string(m.name) + ".neg_damp_err_pct", kVelocityHeading, -e.damp_err_pct.value(),
                          lumped ? printed.velocity_column.lumped : printed.velocity_column.consistent, false, {}};
        if (sweep) {
            for (double g : kGammaSweep) {
                WaveSetting sg = s;
                sg.gamma = g;
                const DispersionErrors eg = dispersion_errors(sg);
                vel.sensitivity.emplace_back(g, eg.vel_err_pct);
                damp.sensitivity.emplace_back(g, -eg.damp_err_pct.value());
            }
        }
        row.cells.push_back(std::move(vel));
        row.cells.push_back(std::move(damp));
    }
}

std::vector<TableRow> dispersion_table(int which, std::span<const reference::DispersionTableRow> printed,
                                       std::optional<double> gamma) {
    std::vector<TableRow> rows;
    for (std::size_t i = 0; i < printed.size(); ++i) {
        TableRow row;
        row.table = which;
        row.index = i;
        row.setting.a = printed[i].a;
        row.setting.b = printed[i].b;
        const bool stated = printed[i].gamma > 0.0;
        row.setting.gamma = stated ? printed[i].gamma : gamma.value_or(kTable2Gamma);
        add_dispersion_cells(row, printed[i], !stated);
        rows.push_back(std::move(row));
    }
    if (which == reference::kTable1Suspect.table) {
        const auto& sc = reference::kTable1Suspect;
        for (ComparedCell& c : rows[sc.row].cells) {
            if (c.name == (sc.lumped ? "lumped.vel_err_pct" : "consistent.vel_err_pct")) c.suspect = true;
        }
    }
    return rows;
}

std::vector<TableRow> reflection_table(std::optional<double> gamma) {
    std::vector<TableRow> rows;
    const auto printed = reference::table3();
    for (std::size_t i = 0; i < printed.size(); ++i) {
        TableRow row;
        row.table = 3;
        row.index = i;
        row.setting.a = printed[i].a;
        row.setting.b = printed[i].a;
        row.setting.alpha = printed[i].alpha;
        row.setting.gamma = gamma.value_or(kTable3Gamma);
        row.printed_right_mesh = printed[i].printed_right_mesh;
        for (const MassEntry& m : kMasses) {
            WaveSetting s = row.setting;
            s.mass = m.model;
            const double published = m.model.is_lumped() ? printed[i].reflection_pct.lumped
                                                         : printed[i].reflection_pct.consistent;
            ComparedCell cell{std::string(m.name) + ".reflection_pct", kReflectionHeading,
                              reflection_amplitude(s).magnitude_pct, published, false, {}};
            for (double g : kGammaSweep) {
                WaveSetting sg = s;
                sg.gamma = g;
                cell.sensitivity.emplace_back(g, reflection_amplitude(sg).magnitude_pct);
            }
            ComparedCell printed_form{std::string(m.name) + ".reflection_pct_printed_interface", kReflectionHeading,
                                      reflection_amplitude(s, InterfaceForm::printed).magnitude_pct, published, false, {}};
            row.cells.push_back(std::move(cell));
            row.cells.push_back(std::move(printed_form));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string gamma_label(double g) { return "@gamma=" + format_csv_number(g); }

}  // namespace

std::vector<TableRow> reproduce_table(int which, const TableOptions& options) {
    switch (which) {
        case 1: return dispersion_table(1, reference::table1(), std::nullopt);
        case 2: return dispersion_table(2, reference::table2(), options.gamma);
        case 3: return reflection_table(options.gamma);
        default: throw DomainError("table must be 1, 2 or 3");
    }
}

void write_table(std::ostream& out, std::span<const TableRow> rows, Format format) {
    if (format == Format::json) {
        json doc;
        doc["table"] = rows.empty() ? 0 : rows.front().table;
        doc["rows"] = json::array();
        for (const TableRow& r : rows) {
            json jr = {{"row", r.index}, {"a", r.setting.a}, {"b", r.setting.b}, {"gamma", r.setting.gamma},
                       {"alpha", r.setting.alpha}};
            if (r.printed_right_mesh) {
                jr["printed_right_mesh"] = *r.printed_right_mesh;
                jr["b_right"] = r.setting.b / r.setting.alpha;
            }
            jr["cells"] = json::array();
            for (const ComparedCell& c : r.cells) {
                json jc = {{"name", c.name},         {"printed_column", c.printed_column},
                           {"computed", c.computed}, {"printed", c.printed},
                           {"abs_dev", c.abs_dev()}, {"rel_dev", c.rel_dev()},
                           {"suspect", c.suspect}};
                jc["sensitivity"] = json::array();
                for (const auto& [g, v] : c.sensitivity) jc["sensitivity"].push_back({{"gamma", g}, {"computed", v}});
                jr["cells"].push_back(std::move(jc));
            }
            doc["rows"].push_back(std::move(jr));
        }
        out << doc.dump(2) << '\n';
        return;
    }

    write_metadata(out);
    if (rows.empty()) return;
    const TableRow& first = rows.front();
    out << "table,row,a,b,gamma,alpha";
    if (first.printed_right_mesh) out << ",b_right,printed_right_mesh";
    for (const ComparedCell& c : first.cells) {
        out << ',' << c.name << ',' << c.name << ".printed," << c.name << ".abs_dev," << c.name << ".rel_dev";
        for (const auto& entry : c.sensitivity) out << ',' << c.name << gamma_label(entry.first);
    }
    out << ",suspect\n";
    for (const TableRow& r : rows) {
        out << r.table << ',' << r.index << ',' << format_csv_number(r.setting.a) << ','
            << format_csv_number(r.setting.b) << ',' << format_csv_number(r.setting.gamma) << ','
            << format_csv_number(r.setting.alpha);
        if (r.printed_right_mesh) {
            out << ',' << format_csv_number(r.setting.b / r.setting.alpha) << ','
                << format_csv_number(*r.printed_right_mesh);
        }
        std::string suspects;
        for (const ComparedCell& c : r.cells) {
            out << ',' << format_csv_number(c.computed) << ',' << format_csv_number(c.printed) << ','
                << format_csv_number(c.abs_dev()) << ',' << format_csv_number(c.rel_dev());
            for (const auto& entry : c.sensitivity) out << ',' << format_csv_number(entry.second);
            if (c.suspect) suspects += (suspects.empty() ? "" : ";") + c.name;
        }
        out << ',' << suspects << '\n';
    }
}

}  // namespace wavedisp
