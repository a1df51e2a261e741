#include "skewlog/cli.hpp"

#include "skewlog/closed_forms.hpp"
#include "skewlog/core_numerics.hpp"
#include "skewlog/errors.hpp"
#include "skewlog/polylog.hpp"
#include "skewlog/quadrature.hpp"
#include "skewlog/series_engine.hpp"
#include "skewlog/verifier.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace skewlog::cli {

namespace {

using json = nlohmann::ordered_json;

enum class OutFormat { Text, Json, Csv };

OutFormat parse_out_format(const std::string& s)
{
    if (s == "text")
        return OutFormat::Text;
    if (s == "json")
        return OutFormat::Json;
    if (s == "csv")
        return OutFormat::Csv;
    throw UsageError("--format must be text, json or csv");
}

// Flags shared by the eval targets.
struct EvalArgs {
    std::string target;
    std::optional<double> x, t, z, mu, tol;
    std::optional<std::size_t> n;
    std::optional<std::string> id;
    std::string format = "text";
};

struct Flag {
    const char* name;
    bool required;
};

struct EvalOutput {
    std::vector<std::pair<std::string, std::string>> fields; // text key, formatted value
};

EvalOutput plain(double v) { return {{{"value", format_double(v)}}}; }

EvalOutput with_bound(const EvalResult& r)
{
    return {{{"value", format_double(r.value)},
             {"error_bound", format_double(r.error_bound)},
             {"terms", std::to_string(r.terms_used)},
             {"status", std::string(to_string(r.status))}}};
}

ClosedFormId parse_closed_form_id(const std::string& tag)
{
    for (const auto& info : closed_form_table())
        if (info.tag == tag)
            return info.id;
    std::string valid;
    for (const auto& info : closed_form_table())
        valid += (valid.empty() ? "" : ", ") + std::string(info.tag);
    throw LookupError("unknown closed form '" + tag + "'; valid: " + valid);
}

QuadratureConfig quadrature_from(const EvalArgs& a)
{
    QuadratureConfig cfg;
    if (a.tol) {
        cfg.abs_tol = *a.tol;
        cfg.rel_tol = std::min(cfg.rel_tol, *a.tol);
    }
    cfg.validate();
    return cfg;
}

struct Target {
    std::vector<Flag> flags;
    std::function<EvalOutput(const EvalArgs&, const SeriesOptions&)> eval;
};

const std::map<std::string, Target>& targets()
{
    static const std::map<std::string, Target> table{
        {"li2", {{{"--x", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(li2(*a.x)); }}},
        {"li3", {{{"--x", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(li3(*a.x)); }}},
        {"li2_real",
         {{{"--x", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(li2_real(*a.x)); }}},
        {"li3_real",
         {{{"--x", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(li3_real(*a.x)); }}},
        {"harmonic",
         {{{"--n", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(harmonic(*a.n)); }}},
        {"harmonic2",
         {{{"--n", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(harmonic2(*a.n)); }}},
        {"skew_harmonic",
         {{{"--n", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(skew_harmonic(*a.n)); }}},
        {"skew_harmonic_mu",
         {{{"--n", true}, {"--mu", true}},
          [](const EvalArgs& a, const SeriesOptions&) { return plain(skew_harmonic_mu(*a.n, *a.mu)); }}},
        {"digamma_half_diff",
         {{{"--n", true}},
          [](const EvalArgs& a, const SeriesOptions&) {
              if (*a.n < 1)
                  throw DomainError("digamma_half_diff requires n >= 1");
              return plain(digamma_half_diff(*a.n));
          }}},
        {"constant",
         {{{"--id", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(constant(*a.id)); }}},
        {"series",
         {{{"--id", true}, {"--t", true}, {"--tol", false}, {"--mu", false}},
          [](const EvalArgs& a, const SeriesOptions& opts) {
              const SeriesId id = parse_series_id(*a.id);
              const EvalResult r = sum_series(id, *a.t, a.tol.value_or(1e-12), a.mu, opts);
              if (r.status == EvalStatus::DivergentInput)
                  throw DomainError(std::string(series_info(id).alias) + " requires " +
                                    std::string(series_info(id).domain) + ", got t = " + format_double(*a.t));
              return with_bound(r);
          }}},
        {"closed_form",
         {{{"--id", true}, {"--t", true}, {"--mu", false}},
          [](const EvalArgs& a, const SeriesOptions&) {
              return plain(closed_form(parse_closed_form_id(*a.id), *a.t, a.mu));
          }}},
        {"int_li2_over_1mt",
         {{{"--x", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(int_li2_over_1mt(*a.x)); }}},
        {"eq17",
         {{{"--x", true}}, [](const EvalArgs& a, const SeriesOptions&) { return plain(closed_form_eq17(*a.x)); }}},
        {"g",
         {{{"--z", true}, {"--tol", false}},
          [](const EvalArgs& a, const SeriesOptions&) { return with_bound(double_integral_g(*a.z, quadrature_from(a))); }}},
        {"bigG",
         {{{"--z", true}, {"--tol", false}},
          [](const EvalArgs& a, const SeriesOptions&) {
              return with_bound(double_integral_bigG(*a.z, quadrature_from(a)));
          }}},
        {"eq31",
         {{{"--tol", false}},
          [](const EvalArgs& a, const SeriesOptions&) { return with_bound(double_integral_eq31(quadrature_from(a))); }}},
        {"eq32",
         {{{"--tol", false}},
          [](const EvalArgs& a, const SeriesOptions&) { return with_bound(double_integral_eq32(quadrature_from(a))); }}},
    };
    return table;
}

std::string joined_targets()
{
    std::string s;
    for (const auto& name : eval_targets())
        s += (s.empty() ? "" : ", ") + name;
    return s;
}

int do_eval(CLI::App& cmd, const EvalArgs& a, const SeriesOptions& opts, std::ostream& out)
{
    const auto it = targets().find(a.target);
    if (it == targets().end())
        throw UsageError("unknown eval target '" + a.target + "'; valid targets: " + joined_targets());
    const Target& target = it->second;

    std::set<std::string> allowed{"--format"};
    for (const Flag& f : target.flags) {
        allowed.insert(f.name);
        if (f.required && cmd.count(f.name) == 0)
            throw UsageError("eval " + a.target + " requires " + f.name);
    }
    for (const char* name : {"--x", "--t", "--z", "--mu", "--tol", "--n", "--id"})
        if (cmd.count(name) > 0 && !allowed.count(name))
            throw UsageError("eval " + a.target + " does not take " + name);
    if (a.tol && !(*a.tol > 0.0))
        throw UsageError("--tol must be positive");

    const OutFormat fmt = parse_out_format(a.format);
    if (fmt == OutFormat::Csv)
        throw UsageError("eval supports --format text or json");
    const EvalOutput res = target.eval(a, opts);
    if (fmt == OutFormat::Json) {
        json j;
        j["target"] = a.target;
        for (const auto& [k, v] : res.fields)
            j[k] = v;
        out << j.dump() << '\n';
    } else {
        for (const auto& [k, v] : res.fields)
            out << k << '=' << v << '\n';
    }
    return kExitOk;
}

void write_text_records(const Report& r, bool failures_only, std::ostream& out)
{
    for (const auto& rec : r.records) {
        if (failures_only && rec.verdict == Verdict::Pass)
            continue;
        out << identity_info(rec.identity).tag;
        if (!rec.params.empty())
            out << ' ' << format_params(rec.params);
        out << " lhs=" << format_double(rec.lhs) << " rhs=" << format_double(rec.rhs)
            << " residual=" << format_double(rec.residual) << " tolerance=" << format_double(rec.tolerance) << ' '
            << to_string(rec.verdict);
        if (!rec.note.empty())
            out << " note=\"" << rec.note << '"';
        out << '\n';
    }
}

void write_text_report(const Report& r, bool per_identity_summary, std::ostream& out)
{
    write_text_records(r, per_identity_summary, out);
    VerdictCounts total;
    for (const auto& s : r.summary) {
        if (per_identity_summary)
            out << "summary " << identity_info(s.identity).tag << " pass=" << s.counts.pass
                << " fail=" << s.counts.fail << " skipped=" << s.counts.skipped << '\n';
        total.pass += s.counts.pass;
        total.fail += s.counts.fail;
        total.skipped += s.counts.skipped;
    }
    for (const auto& e : r.errata) {
        for (const auto& p : e.points)
            out << "erratum " << e.tag << ' ' << format_params(p.params)
                << " printed_residual=" << format_double(std::fabs(p.printed - p.oracle))
                << " corrected_residual=" << format_double(std::fabs(p.corrected - p.oracle)) << '\n';
    }
    out << "total pass=" << total.pass << " fail=" << total.fail << " skipped=" << total.skipped << '\n';
}

void emit_report(const Report& r, OutFormat fmt, bool all, const std::optional<std::string>& path, std::ostream& out)
{
    std::string body;
    if (fmt == OutFormat::Text) {
        std::ostringstream s;
        write_text_report(r, all, s);
        body = s.str();
    } else {
        body = serialize_report(r, fmt == OutFormat::Json ? ReportFormat::Json : ReportFormat::Csv);
    }
    if (!path) {
        out << body;
        return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open '" + *path + "' for writing");
    f << body;
    if (!f.flush())
        throw UsageError("failed writing '" + *path + "'");
    std::size_t fails = 0;
    for (const auto& rec : r.records)
        fails += rec.verdict == Verdict::Fail;
    out << "wrote " << *path << " records=" << r.records.size() << " fail=" << fails << '\n';
}

TolProfile profile_from(const std::optional<double>& strict, const std::optional<double>& standard,
                        const std::optional<double>& relaxed)
{
    for (const auto& v : {strict, standard, relaxed})
        if (v && !(*v > 0.0))
            throw UsageError("tolerances must be positive");
    return {strict, standard, relaxed};
}

std::size_t parse_max_terms(const std::string& s)
{
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
        throw UsageError("SKEWLOG_MAX_TERMS must be a positive integer, got '" + s + "'");
    return v;
}

void write_list(std::ostream& out)
{
    std::vector<const SeriesInfo*> series;
    for (const auto& s : series_table())
        series.push_back(&s);
    std::sort(series.begin(), series.end(), [](auto* a, auto* b) { return a->tag < b->tag; });
    for (const auto* s : series)
        out << "series " << s->tag << " alias=" << s->alias << " equation=" << s->equation << " domain=\""
            << s->domain << "\"" << (s->needs_mu ? " mu" : "") << '\n';

    std::vector<const IdentityInfo*> ids;
    for (const auto& i : identity_table())
        ids.push_back(&i);
    std::sort(ids.begin(), ids.end(), [](auto* a, auto* b) { return a->tag < b->tag; });
    for (const auto* i : ids)
        out << "identity " << i->tag << " equation=" << i->equation << " domain=\"" << i->domain << "\"\n";
}

} // namespace

const std::vector<std::string>& eval_targets()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, _] : targets())
            v.push_back(name);
        return v; // std::map keeps them sorted
    }();
    return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& max_terms_env)
{
    CLI::App app{"Skew-harmonic series, polylogarithms and identity verification", "skewlog"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate a function, series or integral at a point");
    eval->add_option("target", ev.target, "One of: " + joined_targets())->required();
    eval->add_option("--x", ev.x, "Argument x");
    eval->add_option("--t", ev.t, "Series variable t");
    eval->add_option("--z", ev.z, "Integral parameter z");
    eval->add_option("--mu", ev.mu, "Parameter mu");
    eval->add_option("--n", ev.n, "Index n");
    eval->add_option("--id", ev.id, "Series, closed form or constant identifier");
    eval->add_option("--tol", ev.tol, "Absolute tolerance");
    eval->add_option("--format", ev.format, "text or json");

    std::optional<std::string> verify_id, verify_out;
    std::optional<double> verify_tol, strict, standard, relaxed;
    bool verify_all_flag = false;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "Check identities on their default grids");
    auto* id_opt = verify->add_option("--id", verify_id, "Identity tag");
    auto* all_opt = verify->add_flag("--all", verify_all_flag, "Every identity");
    id_opt->excludes(all_opt);
    verify->add_option("--tol", verify_tol, "Tolerance for every point (with --id)");
    verify->add_option("--strict", strict, "Override the strict tier");
    verify->add_option("--standard", standard, "Override the standard tier");
    verify->add_option("--relaxed", relaxed, "Override the relaxed tier");
    verify->add_option("--format", verify_format, "text, json or csv");
    verify->add_option("--out", verify_out, "Write the report to a file");

    std::optional<std::string> report_out;
    std::string report_format = "json";
    std::optional<double> r_strict, r_standard, r_relaxed;
    auto* report = app.add_subcommand("report", "Run every identity and emit the full report");
    report->add_option("--format", report_format, "json, csv or text");
    report->add_option("--out", report_out, "Write the report to a file");
    report->add_option("--strict", r_strict, "Override the strict tier");
    report->add_option("--standard", r_standard, "Override the standard tier");
    report->add_option("--relaxed", r_relaxed, "Override the relaxed tier");

    std::string constants_format = "text";
    auto* consts = app.add_subcommand("constants", "Print the constant table");
    consts->add_option("--format", constants_format, "text or json");

    app.add_subcommand("list", "List series and identity tags");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed); // CLI11 consumes a reversed argument vector

        SeriesOptions series_opts;
        if (max_terms_env)
            series_opts.max_terms = parse_max_terms(*max_terms_env);

        if (eval->parsed())
            return do_eval(*eval, ev, series_opts, out);

        if (verify->parsed()) {
            if (!verify_id && !verify_all_flag)
                throw UsageError("verify needs --id TAG or --all");
            if (verify_tol && verify_all_flag)
                throw UsageError("--tol applies to --id; use --strict/--standard/--relaxed with --all");
            if (verify_tol && !(*verify_tol > 0.0))
                throw UsageError("--tol must be positive");
            const OutFormat fmt = parse_out_format(verify_format);
            const TolProfile profile = profile_from(strict, standard, relaxed);
            Report r;
            if (verify_all_flag) {
                r = verify_all(profile);
            } else {
                const IdentityId id = parse_identity_id(*verify_id);
                r = make_report(verify_tol ? verify_identity(id, default_grid(id), *verify_tol)
                                           : verify_identity(id, default_grid(id), profile),
                                profile);
            }
            emit_report(r, fmt, verify_all_flag, verify_out, out);
            return r.has_failures() ? kExitFail : kExitOk;
        }

        if (report->parsed()) {
            const OutFormat fmt = parse_out_format(report_format);
            const Report r = verify_all(profile_from(r_strict, r_standard, r_relaxed));
            emit_report(r, fmt, true, report_out, out);
            return r.has_failures() ? kExitFail : kExitOk;
        }

        if (consts->parsed()) {
            const OutFormat fmt = parse_out_format(constants_format);
            if (fmt == OutFormat::Json) {
                json j = json::object();
                for (const auto& c : constant_table())
                    j[std::string(c.name)] = c.value;
                out << j.dump(2) << '\n';
            } else if (fmt == OutFormat::Text) {
                for (const auto& c : constant_table())
                    out << c.name << '=' << format_double(c.value) << '\n';
            } else {
                throw UsageError("constants supports --format text or json");
            }
            return kExitOk;
        }

        write_list(out);
        return kExitOk;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const LookupError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace skewlog::cli
