#include "qb/closed_form.hpp"
#include "qb/errors.hpp"
#include "qb/quadrature.hpp"
#include "qb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <limits>
#include <random>
#include <thread>

namespace qb {

namespace {

using ClosedFn = std::function<EvalResult(const AnySpec&)>;

struct Case {
    std::string order;
    std::string spec;
    double floor = 0.0;
    ClosedFn closed{};
    std::optional<AnySpec> parsed{};
};

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string describe(const Error& e) { return std::string(e.kind()) + ": " + e.what(); }

SuiteEntry verify_with(const AnySpec& spec, const ClosedFn& closed, const VerifyOptions& opts, double floor)
{
    SuiteEntry e;
    e.params = render(spec);
    e.tolerance = std::max(opts.rel_tol, floor);
    e.closed_value = e.oracle_value = e.rel_gap = nan;
    EvalResult c;
    try {
        c = closed ? closed(spec) : evaluate(spec);
    } catch (const NonGenericParameters& x) {
        e.status = EntryStatus::skipped;
        e.reason = describe(x);
        return e;
    } catch (const NearSingularParameter& x) {
        e.status = EntryStatus::skipped;
        e.reason = describe(x);
        return e;
    } catch (const Error& x) {
        e.reason = describe(x);
        return e;
    }
    e.formula_id = c.formula_id;
    e.closed_value = c.value;
    QuadratureOptions q;
    q.rel_tol = std::clamp(opts.rel_tol * 1e-2, 1e-13, 1e-10);
    q.abs_tol = opts.abs_tol;
    q.max_levels = 14;
    try {
        e.oracle_value = integrate(spec, q).value;
    } catch (const Error& x) {
        e.reason = "oracle " + describe(x);
        return e;
    }
    e.rel_gap = std::fabs(e.closed_value - e.oracle_value) / std::max(std::fabs(e.oracle_value), 1e-300);
    e.status = e.rel_gap <= e.tolerance ? EntryStatus::pass : EntryStatus::fail;
    return e;
}

std::vector<SuiteEntry> run_cases(std::vector<Case>& cases, const VerifyOptions& opts)
{
    std::vector<SuiteEntry> out(cases.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < cases.size();) {
            Case& c = cases[i];
            try {
                AnySpec spec = c.parsed ? *c.parsed : parse_spec(c.spec);
                out[i] = verify_with(spec, c.closed, opts, c.floor);
            } catch (const Error& x) {
                out[i].params = c.spec;
                out[i].closed_value = out[i].oracle_value = out[i].rel_gap = nan;
                out[i].reason = describe(x);
            }
            out[i].order = c.order;
        }
    };
    unsigned n = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(work);
    work();
    return out;
}

std::optional<std::string> now_utc()
{
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buf);
}

SuiteReport finish(std::string name, bool table, std::vector<Case>& cases, const VerifyOptions& opts)
{
    SuiteReport r;
    r.meta = {std::move(name), table, opts.rel_tol, opts.abs_tol, opts.seed, std::nullopt};
    if (opts.timestamp) r.meta.timestamp = now_utc();
    r.entries = run_cases(cases, opts);
    return r;
}

ClosedFn airy_branch(AiryBranch b, double a, double c)
{
    return [=](const AnySpec&) { return airy_quartic(b, a, c); };
}

std::vector<Case> core_cases()
{
    return {
        {"", "x^2 * K(0,1)^2"},
        {"", "x^1.5 * K(0.3,1) * K(0.2,1)"},
        {"", "x^1.3 * K(0.21,1) * K(0.17,1) * K(0.11,2) * K(0.07,2)", 1e-7},
        {"", "x^1.2 * I(0.3,1) * K(0.25,1) * K(0.2,2) * K(0.15,2)", 1e-7},
        {"", "x^1.1 * I(0.2,1) * I(0.4,1) * K(0.1,2) * K(0.3,2)"},
        {"", "x^1.5 * I(0.3,1) * K(0.2,3)"},
        {"", "x^1.7 * I(0.3,1) * I(-0.2,0.5) * K(0.4,3)"},
        {"", "x^2 * I(1/3,1)^3 * K(1/3,4)", 1e-6},
        {"", "x^2 * K(0,1)^4"},
        {"", "x^2 * I(0,1) * K(0,1)^3"},
        {"", "x^2 * K(0,1)^2 * K(0,2)^2"},
        {"", "x^2 * I(0,1) * K(0,1) * K(0,2)^2"},
        {"", "x^2 * I(0,2) * K(0,2) * K(0,1)^2"},
        {"", "x^2 * K(0.3,1)^2 * K(0.3,2)^2"},
        {"", "x^2 * K(0.3,1)^4"},
        {"", "x^1 * K(0.15,1)^2 * K(0.15,2)^2"},
        {"", "x^1 * I(0.3,1) * K(0.3,1) * K(0.3,2)^2"},
        {"", "x^2 * I(0.3,1) * K(0.3,1) * K(0.3,2)^2"},
        {"", "x^2 * I(-1/3,1) * K(1/3,1) * K(1/3,2)^2"},
        {"", "x^2 * I(0.6,1) * K(0.6,1)^3"},
        {"", "x^1 * I(0.25,1)^2 * K(0.25,2)^2"},
        {"", "x^2 * I(0.3,1)^2 * K(0.3,2)^2"},
        {"", "x^1 * I(0,1)^2 * K(0,2)^2"},
    };
}

std::vector<Case> elementary_cases()
{
    std::vector<Case> c;
    for (const char* o : {"1/3", "1/4", "1/6", "1/8", "1/10", "1/12"})
        c.push_back({o, std::string("x^2 * K(") + o + ",1)^4"});
    for (const char* o : {"1/2", "1/3", "-1/3", "1/4", "-1/4"})
        c.push_back({o, std::string("x^2 * I(") + o + ",1) * K(" + o + ",1)^3"});
    for (const char* o : {"0", "1", "2", "1/2", "3/2", "5/2"})
        c.push_back({o, std::string("x^2 * I(") + o + ",1)^2 * K(" + o + ",2)^2"});
    c.push_back({"1/3", "x^2 * K(1/3,1)^2 * K(1/3,2)^2"});
    c.push_back({"1/3", "x^2 * K(1/3,1)^2 * K(1/3,3)^2"});
    c.push_back({"1/4", "x^2 * K(1/4,1)^2 * K(1/4,2)^2"});
    for (const char* o : {"1/2", "1/4", "-1/4"})
        c.push_back({o, std::string("x^2 * I(") + o + ",1) * K(" + o + ",1) * K(" + o + ",2)^2"});
    return c;
}

std::vector<Case> airy_cases()
{
    return {
        {"(1,1)", "x^1 * Ai(1)^4"},
        {"(1,1)", "x^1 * Bi(1) * Ai(1)^3"},
        {"(1,2)", "x^1 * Ai(1)^2 * Ai(2)^2"},
        {"(1,2)", "x^1 * Bi(1) * Ai(1) * Ai(2)^2"},
        {"(1,2)", "x^1 * Bi(1) * Ai(1) * Ai(2)^2", 0.0, airy_branch(AiryBranch::s57, 1, 2)},
        {"(1,2)", "x^1 * Bi(1)^2 * Ai(2)^2"},
        {"(1,4)", "x^1 * Bi(1)^3 * Ai(4)", 1e-5},
    };
}

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

std::vector<Case> random_cases(const VerifyOptions& opts)
{
    std::mt19937_64 rng(opts.seed);
    auto u = [&](double lo, double hi) { return round3(lo + (hi - lo) * std::generate_canonical<double, 53>(rng)); };
    auto K = [](double o, double c) { return BesselFactor{BesselKind::K, o, c}; };
    auto I = [](double o, double c) { return BesselFactor{BesselKind::I, o, c}; };
    std::vector<Case> c;
    for (int k = 0; k < opts.random_count; ++k) {
        IntegralSpec s;
        switch (k % 4) {
        case 0: {
            double al = u(0.05, 0.35), be = u(0.05, 0.35), ga = u(0.05, 0.35), de = u(0.05, 0.35), b = u(1.5, 3);
            s = {u(al + be + ga + de + 0.3, al + be + ga + de + 1.2), {K(al, 1), K(be, 1), K(ga, b), K(de, b)}};
            break;
        }
        case 1: {
            double al = u(0.1, 0.6), be = u(0.05, 0.35), ga = u(0.05, 0.35), de = u(0.05, 0.35), b = u(1.5, 3);
            double lo = std::max(be + ga + de - al, 0.0);
            s = {u(lo + 0.3, lo + 1.2), {I(al, 1), K(be, 1), K(ga, b), K(de, b)}};
            break;
        }
        case 2: {
            double al = u(0.1, 0.5), be = u(0.1, 0.5), ga = u(0.05, 0.35), de = u(0.05, 0.35), b = u(1.5, 3);
            double lo = std::max(ga + de - al - be, 0.2);
            s = {u(lo + 0.3, lo + 1.0), {I(al, 1), I(be, 1), K(ga, b), K(de, b)}};
            break;
        }
        default: {
            double al = u(0, 0.5), be = u(0, 0.5), ca = u(0.2, 0.6), cb = u(0.2, 0.6), ga = u(0, 0.5), b = u(1.5, 2.5);
            double lo = std::max(ga - al - be, 0.0);
            s = {u(lo + 0.3, lo + 1.2), {I(al, ca), I(be, cb), K(ga, b)}};
            break;
        }
        }
        Case cs{"", render(s)};
        cs.parsed = s;
        c.push_back(std::move(cs));
    }
    return c;
}

} // namespace

const char* to_string(EntryStatus s)
{
    switch (s) {
    case EntryStatus::pass: return "pass";
    case EntryStatus::fail: return "fail";
    case EntryStatus::skipped: return "skipped";
    }
    return "fail";
}

std::size_t SuiteReport::count(EntryStatus s) const
{
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const SuiteEntry& e) { return e.status == s; }));
}

double default_rel_tol()
{
    if (const char* v = std::getenv("QB_DEFAULT_TOL")) {
        char* end = nullptr;
        double t = std::strtod(v, &end);
        if (end != v && *end == '\0' && t > 0.0 && std::isfinite(t)) return t;
    }
    return VerifyOptions{}.rel_tol;
}

SuiteEntry verify_spec(const AnySpec& spec, const VerifyOptions& opts, double floor)
{
    return verify_with(spec, nullptr, opts, floor);
}

SuiteName suite_from_string(std::string_view name)
{
    if (name == "paper-core") return SuiteName::paper_core;
    if (name == "paper-elementary") return SuiteName::paper_elementary;
    if (name == "paper-airy") return SuiteName::paper_airy;
    if (name == "generic-random") return SuiteName::generic_random;
    throw ValidationError("unknown suite '" + std::string(name) + "'");
}

std::string to_string(SuiteName s)
{
    switch (s) {
    case SuiteName::paper_core: return "paper-core";
    case SuiteName::paper_elementary: return "paper-elementary";
    case SuiteName::paper_airy: return "paper-airy";
    case SuiteName::generic_random: return "generic-random";
    }
    return "";
}

SuiteReport run_suite(SuiteName name, const VerifyOptions& opts)
{
    std::vector<Case> cases;
    switch (name) {
    case SuiteName::paper_core: cases = core_cases(); break;
    case SuiteName::paper_elementary: cases = elementary_cases(); break;
    case SuiteName::paper_airy: cases = airy_cases(); break;
    case SuiteName::generic_random: cases = random_cases(opts); break;
    }
    return finish(to_string(name), false, cases, opts);
}

TableFamily table_from_string(std::string_view name)
{
    if (name == "k4-digamma") return TableFamily::k4_digamma;
    if (name == "ik3-digamma") return TableFamily::ik3_digamma;
    if (name == "i2k2-elementary") return TableFamily::i2k2_elementary;
    if (name == "airy") return TableFamily::airy;
    throw ValidationError("unknown table '" + std::string(name) + "'");
}

std::string to_string(TableFamily f)
{
    switch (f) {
    case TableFamily::k4_digamma: return "k4-digamma";
    case TableFamily::ik3_digamma: return "ik3-digamma";
    case TableFamily::i2k2_elementary: return "i2k2-elementary";
    case TableFamily::airy: return "airy";
    }
    return "";
}

SuiteReport make_table(TableFamily family, const VerifyOptions& opts)
{
    std::vector<Case> all = family == TableFamily::airy ? airy_cases() : elementary_cases(), cases;
    std::size_t from = 0, n = all.size();
    switch (family) {
    case TableFamily::k4_digamma: n = 6; break;
    case TableFamily::ik3_digamma: from = 6, n = 5; break;
    case TableFamily::i2k2_elementary: from = 11, n = 6; break;
    case TableFamily::airy: break;
    }
    cases.assign(all.begin() + from, all.begin() + from + n);
    if (family == TableFamily::airy) cases.erase(cases.begin() + 4); // s57 duplicates lion
    return finish(to_string(family), true, cases, opts);
}

void emit_table(TableFamily family, Format format, const std::filesystem::path& out, const VerifyOptions& opts)
{
    write_file(out, render_report(make_table(family, opts), format));
}

} // namespace qb
