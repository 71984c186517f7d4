#include "qb/closed_form.hpp"
#include "qb/errors.hpp"
#include "qb/quadrature.hpp"
#include "qb/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cmath>
#include <iostream>

namespace {

enum Exit { ok = 0, failed = 1, bad_input = 2, io_error = 3, numeric_error = 4 };

std::string num(double x)
{
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

struct Settings {
    std::string spec;
    std::string format = "csv";
    std::string out;
    std::string suite;
    std::string table;
    qb::VerifyOptions opts;
    bool no_timestamp = false;
};

void emit(const Settings& st, const std::string& text)
{
    if (st.out.empty())
        std::cout << text;
    else
        qb::write_file(st.out, text);
}

int run_eval(const Settings& st)
{
    qb::AnySpec spec = qb::parse_spec(st.spec);
    qb::EvalResult r = qb::evaluate(spec);
    std::string params = qb::render(spec);
    if (qb::format_from_string(st.format) == qb::Format::csv) {
        emit(st, "formula_id,params,value,est_error\r\n" + qb::csv_field(r.formula_id) + "," + qb::csv_field(params) +
                     "," + num(r.value) + "," + num(r.est_error) + "\r\n");
    } else {
        nlohmann::ordered_json j = {{"formula_id", r.formula_id}, {"params", params}, {"value", r.value},
                                    {"est_error", r.est_error}, {"diagnostics", r.diagnostics}};
        emit(st, j.dump(2) + "\n");
    }
    return ok;
}

int run_oracle(const Settings& st)
{
    qb::AnySpec spec = qb::parse_spec(st.spec);
    qb::QuadratureOptions q;
    q.rel_tol = st.opts.rel_tol;
    q.abs_tol = st.opts.abs_tol;
    qb::QuadratureResult r = qb::integrate(spec, q);
    std::string params = qb::render(spec);
    if (qb::format_from_string(st.format) == qb::Format::csv) {
        emit(st, "params,value,err_estimate,tail_bound,evaluations,levels\r\n" + qb::csv_field(params) + "," +
                     num(r.value) + "," + num(r.err_estimate) + "," + num(r.tail_bound) + "," +
                     std::to_string(r.evaluations) + "," + std::to_string(r.levels) + "\r\n");
    } else {
        nlohmann::ordered_json j = {{"params", params},           {"value", r.value},
                                    {"err_estimate", r.err_estimate}, {"tail_bound", r.tail_bound},
                                    {"evaluations", r.evaluations},   {"levels", r.levels}};
        emit(st, j.dump(2) + "\n");
    }
    return ok;
}

int finish(const Settings& st, const qb::SuiteReport& r)
{
    emit(st, qb::render_report(r, qb::format_from_string(st.format)));
    std::cerr << r.meta.name << ": " << r.count(qb::EntryStatus::pass) << " passed, "
              << r.count(qb::EntryStatus::fail) << " failed, " << r.count(qb::EntryStatus::skipped) << " skipped\n";
    return r.all_passed() ? ok : failed;
}

int run_verify(const Settings& st)
{
    qb::SuiteReport r;
    r.meta = {"verify", false, st.opts.rel_tol, st.opts.abs_tol, st.opts.seed, std::nullopt};
    r.entries.push_back(qb::verify_spec(qb::parse_spec(st.spec), st.opts));
    return finish(st, r);
}

int run_suite(const Settings& st)
{
    return finish(st, qb::run_suite(qb::suite_from_string(st.suite), st.opts));
}

int run_table(const Settings& st)
{
    return finish(st, qb::make_table(qb::table_from_string(st.table), st.opts));
}

} // namespace

int main(int argc, char** argv)
{
    Settings st;
    st.opts.rel_tol = qb::default_rel_tol();

    CLI::App app{"Verify closed-form Bessel and Airy product integrals against a quadrature oracle.\n"
                 "Specs read x^<s> * <factor> * ..., meaning the integrand x^(s-1) times the factors, e.g.\n"
                 "  \"x^2 * K(0,1)^4\"   \"x^1 * I(1/3,1) * K(1/3,2)^3\"   \"x^1 * Bi(1) * Ai(1)^3\""};
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    auto config = std::make_shared<CLI::ConfigBase>();
    config->arrayDelimiter(';');
    app.config_formatter(config);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--spec", st.spec, "integral spec");
    app.add_option("--rel-tol", st.opts.rel_tol, "relative tolerance (env QB_DEFAULT_TOL sets the default)")
        ->check(CLI::PositiveNumber);
    app.add_option("--abs-tol", st.opts.abs_tol, "absolute tolerance of the oracle")->check(CLI::PositiveNumber);
    app.add_option("--seed", st.opts.seed, "seed for generic-random");
    app.add_option("--count", st.opts.random_count, "number of generic-random entries")->check(CLI::PositiveNumber);
    app.add_option("--workers", st.opts.workers, "worker threads, 0 = hardware concurrency");
    app.add_option("--format", st.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", st.out, "output file, stdout when omitted");
    app.add_flag("--no-timestamp", st.no_timestamp, "omit the report timestamp");

    auto* eval = app.add_subcommand("eval", "closed-form value of --spec");
    auto* oracle = app.add_subcommand("oracle", "quadrature value of --spec");
    auto* verify = app.add_subcommand("verify", "closed form against the oracle for --spec");
    auto* suite = app.add_subcommand("suite", "run a verification suite");
    suite->add_option("name", st.suite, "paper-core | paper-elementary | paper-airy | generic-random")
        ->required()
        ->check(CLI::IsMember({"paper-core", "paper-elementary", "paper-airy", "generic-random"}));
    auto* table = app.add_subcommand("table", "reproduce one of the elementary tables");
    table->add_option("family", st.table, "k4-digamma | ik3-digamma | i2k2-elementary | airy")
        ->required()
        ->check(CLI::IsMember({"k4-digamma", "ik3-digamma", "i2k2-elementary", "airy"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_input;
    }
    st.opts.timestamp = !st.no_timestamp;

    try {
        if ((eval->parsed() || oracle->parsed() || verify->parsed()) && st.spec.empty())
            throw qb::ValidationError("--spec is required");
        if (eval->parsed()) return run_eval(st);
        if (oracle->parsed()) return run_oracle(st);
        if (verify->parsed()) return run_verify(st);
        if (suite->parsed()) return run_suite(st);
        if (table->parsed()) return run_table(st);
    } catch (const qb::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const qb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << "  " << st.spec << "\n  " << std::string(e.position(), ' ') << "^\n";
        return bad_input;
    } catch (const qb::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const qb::DivergentSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const qb::Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return numeric_error;
    }
    return bad_input;
}
