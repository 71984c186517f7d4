#include "qb/errors.hpp"
#include "qb/verify.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include "json.hpp"

namespace qb {

namespace {

std::string num(double x)
{
    if (!std::isfinite(x)) return "";
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

nlohmann::ordered_json jnum(double x)
{
    if (!std::isfinite(x)) return nullptr;
    return x;
}

} // namespace

Format format_from_string(std::string_view name)
{
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw ValidationError("unknown format '" + std::string(name) + "'");
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string to_csv(const SuiteReport& report)
{
    std::string out = report.meta.table ? "order," : "";
    out += "formula_id,params,closed_value,oracle_value,rel_gap,tolerance,status,reason\r\n";
    for (const auto& e : report.entries) {
        if (report.meta.table) out += csv_field(e.order) + ",";
        out += csv_field(e.formula_id) + "," + csv_field(e.params) + "," + num(e.closed_value) + "," +
               num(e.oracle_value) + "," + num(e.rel_gap) + "," + num(e.tolerance) + "," + to_string(e.status) + "," +
               csv_field(e.reason) + "\r\n";
    }
    return out;
}

std::string to_json(const SuiteReport& report)
{
    nlohmann::ordered_json meta = {{report.meta.table ? "table" : "suite", report.meta.name},
                                   {"rel_tol", report.meta.rel_tol},
                                   {"abs_tol", report.meta.abs_tol},
                                   {"seed", report.meta.seed},
                                   {"passed", report.count(EntryStatus::pass)},
                                   {"failed", report.count(EntryStatus::fail)},
                                   {"skipped", report.count(EntryStatus::skipped)}};
    if (report.meta.timestamp) meta["timestamp"] = *report.meta.timestamp;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        nlohmann::ordered_json j;
        if (report.meta.table) j["order"] = e.order;
        j["formula_id"] = e.formula_id;
        j["params"] = e.params;
        j["closed_value"] = jnum(e.closed_value);
        j["oracle_value"] = jnum(e.oracle_value);
        j["rel_gap"] = jnum(e.rel_gap);
        j["tolerance"] = e.tolerance;
        j["status"] = to_string(e.status);
        if (!e.reason.empty()) j["reason"] = e.reason;
        entries.push_back(std::move(j));
    }
    nlohmann::ordered_json doc = {{"metadata", meta}, {"entries", entries}};
    return doc.dump(2) + "\n";
}

std::string render_report(const SuiteReport& report, Format format)
{
    return format == Format::csv ? to_csv(report) : to_json(report);
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
    f << text;
    if (!f.flush()) throw IoError("failed writing '" + path.string() + "'");
}

} // namespace qb
