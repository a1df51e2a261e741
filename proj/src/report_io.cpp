#include "skewlog/errors.hpp"
#include "skewlog/verifier.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

namespace skewlog {

namespace {

using json = nlohmann::ordered_json;

// JSON has no NaN or infinity; those travel as strings.
json number(double v)
{
    if (std::isfinite(v))
        return v;
    return format_double(v);
}

double parse_double(std::string_view s)
{
    if (s == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf")
        return std::numeric_limits<double>::infinity();
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    const std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size())
        throw UsageError("malformed number '" + buf + "'");
    return v;
}

double number_from(const json& j)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string())
        return parse_double(j.get<std::string>());
    throw UsageError("expected a number");
}

// Shortest decimal that reads back to the same double; used for grid
// parameters, which are usually short literals.
std::string shortest(double v)
{
    if (!std::isfinite(v))
        return format_double(v);
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v)
            break;
    }
    return buf;
}

json params_json(const Params& params)
{
    json j = json::object();
    for (const auto& [k, v] : params)
        j[k] = number(v);
    return j;
}

Params params_from(const json& j)
{
    Params p;
    for (const auto& [k, v] : j.items())
        p.emplace_back(k, number_from(v));
    return p;
}

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

std::optional<double> optional_from(const json& j)
{
    if (j.is_null())
        return std::nullopt;
    return number_from(j);
}

std::string to_json(const Report& report)
{
    json records = json::array();
    for (const auto& r : report.records) {
        records.push_back({{"identity", identity_info(r.identity).tag},
                           {"params", params_json(r.params)},
                           {"lhs", number(r.lhs)},
                           {"rhs", number(r.rhs)},
                           {"residual", number(r.residual)},
                           {"tolerance", number(r.tolerance)},
                           {"verdict", to_string(r.verdict)},
                           {"note", r.note}});
    }
    json summary = json::object();
    for (const auto& s : report.summary)
        summary[std::string(identity_info(s.identity).tag)] = {
            {"PASS", s.counts.pass}, {"FAIL", s.counts.fail}, {"SKIPPED", s.counts.skipped}};

    json errata = json::array();
    for (const auto& e : report.errata) {
        json points = json::array();
        for (const auto& p : e.points)
            points.push_back({{"params", params_json(p.params)},
                              {"oracle", number(p.oracle)},
                              {"printed", number(p.printed)},
                              {"corrected", number(p.corrected)},
                              {"printed_residual", number(std::fabs(p.printed - p.oracle))},
                              {"corrected_residual", number(std::fabs(p.corrected - p.oracle))}});
        errata.push_back({{"tag", e.tag}, {"description", e.description}, {"points", std::move(points)}});
    }

    const auto& m = report.metadata;
    json doc = {{"records", std::move(records)},
                {"summary", std::move(summary)},
                {"metadata",
                 {{"version", m.version},
                  {"timestamp", m.timestamp},
                  {"tolerance_profile",
                   {{"strict", optional_number(m.profile.strict)},
                    {"standard", optional_number(m.profile.standard)},
                    {"relaxed", optional_number(m.profile.relaxed)}}}}},
                {"errata", std::move(errata)}};
    return doc.dump(2) + "\n";
}

std::string to_csv(const Report& report)
{
    std::string out = "identity,params,lhs,rhs,residual,tolerance,verdict\n";
    for (const auto& r : report.records) {
        out += identity_info(r.identity).tag;
        out += ',';
        out += format_params(r.params);
        for (double v : {r.lhs, r.rhs, r.residual, r.tolerance}) {
            out += ',';
            out += format_double(v);
        }
        out += ',';
        out += to_string(r.verdict);
        out += '\n';
    }
    return out;
}

} // namespace

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%#.17g", v);
    return buf;
}

std::string format_params(const Params& params)
{
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty())
            out += ';';
        out += k;
        out += '=';
        out += shortest(v);
    }
    return out;
}

Params parse_params(std::string_view s)
{
    Params p;
    while (!s.empty()) {
        const auto semi = s.find(';');
        const std::string_view item = s.substr(0, semi);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw UsageError("malformed parameter '" + std::string(item) + "'");
        p.emplace_back(std::string(item.substr(0, eq)), parse_double(item.substr(eq + 1)));
        if (semi == std::string_view::npos)
            break;
        s.remove_prefix(semi + 1);
    }
    return p;
}

ReportFormat parse_report_format(std::string_view s)
{
    if (s == "json")
        return ReportFormat::Json;
    if (s == "csv")
        return ReportFormat::Csv;
    throw LookupError("unknown report format '" + std::string(s) + "' (expected json or csv)");
}

std::string serialize_report(const Report& report, ReportFormat format)
{
    return format == ReportFormat::Json ? to_json(report) : to_csv(report);
}

Report parse_report_json(std::string_view text)
{
    try {
        const json doc = json::parse(text);
        Report r;
        for (const auto& j : doc.at("records")) {
            VerificationRecord rec{parse_identity_id(j.at("identity").get<std::string>()),
                                   params_from(j.at("params")),
                                   number_from(j.at("lhs")),
                                   number_from(j.at("rhs")),
                                   number_from(j.at("residual")),
                                   number_from(j.at("tolerance")),
                                   parse_verdict(j.at("verdict").get<std::string>()),
                                   j.value("note", std::string{})};
            r.records.push_back(std::move(rec));
        }
        for (const auto& [tag, counts] : doc.at("summary").items())
            r.summary.push_back({parse_identity_id(tag),
                                 {counts.at("PASS").get<std::size_t>(), counts.at("FAIL").get<std::size_t>(),
                                  counts.at("SKIPPED").get<std::size_t>()}});
        if (doc.contains("metadata")) {
            const auto& m = doc.at("metadata");
            r.metadata.version = m.value("version", std::string{});
            r.metadata.timestamp = m.value("timestamp", std::string{});
            if (m.contains("tolerance_profile")) {
                const auto& p = m.at("tolerance_profile");
                r.metadata.profile = {optional_from(p.at("strict")), optional_from(p.at("standard")),
                                      optional_from(p.at("relaxed"))};
            }
        }
        if (doc.contains("errata")) {
            for (const auto& e : doc.at("errata")) {
                Erratum err{e.at("tag").get<std::string>(), e.at("description").get<std::string>(), {}};
                for (const auto& p : e.at("points"))
                    err.points.push_back({params_from(p.at("params")), number_from(p.at("oracle")),
                                          number_from(p.at("printed")), number_from(p.at("corrected"))});
                r.errata.push_back(std::move(err));
            }
        }
        return r;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed report: ") + e.what());
    } catch (const LookupError& e) {
        throw UsageError(std::string("malformed report: ") + e.what());
    }
}

std::vector<VerificationRecord> parse_report_csv(std::string_view text)
{
    std::vector<VerificationRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "identity,params,lhs,rhs,residual,tolerance,verdict")
        throw UsageError("malformed CSV report header");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string_view> cols;
        std::string_view rest = line;
        for (;;) {
            const auto comma = rest.find(',');
            cols.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        if (cols.size() != 7)
            throw UsageError("malformed CSV row '" + line + "'");
        try {
            out.push_back({parse_identity_id(cols[0]), parse_params(cols[1]), parse_double(cols[2]),
                           parse_double(cols[3]), parse_double(cols[4]), parse_double(cols[5]),
                           parse_verdict(cols[6]), {}});
        } catch (const LookupError& e) {
            throw UsageError(std::string("malformed CSV row: ") + e.what());
        }
    }
    return out;
}

} // namespace skewlog
