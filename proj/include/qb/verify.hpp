#pragma once

#include "qb/integral_spec.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qb {

// Grammar: x^<s> * <factor> (* <factor>)*, factor := I(o,c) | K(o,c) | Ai(c) | Bi(c), optionally followed by ^k.
// x^<s> names the Mellin parameter: the integrand is x^{s-1} times the factors.
// Integers and p/q keep their exact rational form.
AnySpec parse_spec(std::string_view text);

enum class EntryStatus { pass, fail, skipped };
const char* to_string(EntryStatus s);

struct SuiteEntry {
    std::string order; // table rows only
    std::string formula_id;
    std::string params;
    double closed_value = 0.0;
    double oracle_value = 0.0;
    double rel_gap = 0.0;
    double tolerance = 0.0;
    EntryStatus status = EntryStatus::fail;
    std::string reason;
};

struct ReportMeta {
    std::string name;
    bool table = false;
    double rel_tol = 0.0;
    double abs_tol = 0.0;
    std::uint64_t seed = 0;
    std::optional<std::string> timestamp;
};

struct SuiteReport {
    ReportMeta meta;
    std::vector<SuiteEntry> entries;

    std::size_t count(EntryStatus s) const;
    bool all_passed() const { return count(EntryStatus::fail) == 0; }
};

struct VerifyOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-14;
    std::uint64_t seed = 20240601;
    unsigned workers = 0; // 0 picks hardware concurrency
    int random_count = 16;
    bool timestamp = true;
};

// rel_tol from QB_DEFAULT_TOL when set and valid, else the built-in default
double default_rel_tol();

// Closed form against the quadrature oracle for one spec.
// `floor` loosens the pass threshold for entries whose closed form is known to be less accurate.
SuiteEntry verify_spec(const AnySpec& spec, const VerifyOptions& opts, double floor = 0.0);

enum class SuiteName { paper_core, paper_elementary, paper_airy, generic_random };
SuiteName suite_from_string(std::string_view name);
std::string to_string(SuiteName s);
SuiteReport run_suite(SuiteName name, const VerifyOptions& opts);

enum class TableFamily { k4_digamma, ik3_digamma, i2k2_elementary, airy };
TableFamily table_from_string(std::string_view name);
std::string to_string(TableFamily f);
SuiteReport make_table(TableFamily family, const VerifyOptions& opts);

enum class Format { csv, json };
Format format_from_string(std::string_view name);

std::string csv_field(std::string_view s);
std::string to_csv(const SuiteReport& report);
std::string to_json(const SuiteReport& report);
std::string render_report(const SuiteReport& report, Format format);
void write_file(const std::filesystem::path& path, const std::string& text);
void emit_table(TableFamily family, Format format, const std::filesystem::path& out, const VerifyOptions& opts);

} // namespace qb
