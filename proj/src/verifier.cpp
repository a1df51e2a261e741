#include "skewlog/verifier.hpp"

#include "skewlog/closed_forms.hpp"
#include "skewlog/core_numerics.hpp"
#include "skewlog/errors.hpp"
#include "skewlog/polylog.hpp"
#include "skewlog/quadrature.hpp"
#include "skewlog/series_engine.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#ifndef SKEWLOG_VERSION
#define SKEWLOG_VERSION "0.0.0"
#endif

namespace skewlog {

namespace {

using constants::catalan;
using constants::log2;
using constants::pi;
using constants::pi_sq_over_12;
using constants::pi_sq_over_6;
using constants::zeta3;

using K = IdentityKind;

constexpr std::array<IdentityInfo, 30> kIdentities{{
    {IdentityId::Eq1Digamma, "EQ1_DIGAMMA", "(1)", "n >= 1", K::Discrete,
     "psi((n+1)/2) - psi(n/2) by half-integer recurrence", "2 (-1)^(n-1) (log 2 - H_(n-1)^-)"},
    {IdentityId::Eq2, "EQ2", "(2)", "|t| < 1", K::Pointwise, "series GF_SKEW", "log(1+t)/(1-t)"},
    {IdentityId::Eq3, "EQ3", "(3)", "-1 < t <= 1", K::Pointwise, "series GF_CENTERED", "log((1+t)/2)/(1-t)"},
    {IdentityId::Eq4, "EQ4", "(4)", "t = 1", K::Endpoint, "series GF_CENTERED at t = 1", "-1/2"},
    {IdentityId::Eq5, "EQ5", "(5)", "-1 <= t < 1", K::Pointwise, "series SKEW_OVER_N", "dilogarithm closed form"},
    {IdentityId::Eq8, "EQ8", "(8)", "|t| <= 1", K::Pointwise, "series CENTERED_OVER_N", "dilogarithm closed form"},
    {IdentityId::Eq9, "EQ9", "(9)", "t = -1", K::Endpoint, "-(series CENTERED_OVER_N at t = -1)",
     "pi^2/12 - log^2 2 / 2"},
    {IdentityId::Eq10, "EQ10", "(10)", "t = -1", K::Endpoint, "-(series SKEW_OVER_N at t = -1)",
     "pi^2/12 + log^2 2 / 2"},
    {IdentityId::Eq11, "EQ11", "(11)", "|t| <= 1", K::Pointwise, "series CENTERED_SHIFT", "Li2((1-t)/2) - Li2(1/2)"},
    {IdentityId::Eq12, "EQ12", "(12)", "|t| < 1", K::Pointwise, "series SKEW_SQ", "dilogarithm closed form"},
    {IdentityId::Eq13, "EQ13", "(13)", "|t| <= 1", K::Pointwise, "series CENTERED_SQ", "dilogarithm closed form"},
    {IdentityId::Eq14Lemma6, "EQ14_LEMMA6", "(14)", "n >= 1", K::Discrete,
     "2 sum_(k<=n) (-1)^(k-1) H_k^- / k", "(H_n^-)^2 + H_n^(2)"},
    {IdentityId::Eq15, "EQ15", "(15)", "t = -1", K::Endpoint, "series CENTERED_SQ at t = -1", "pi^2/24"},
    {IdentityId::Eq16, "EQ16", "(16)", "t = 1", K::Endpoint, "series CENTERED_SQ at t = 1", "log 2"},
    {IdentityId::Eq17, "EQ17", "(17)", "|x| <= 1", K::Pointwise, "series CENTERED_SQ_SHIFT",
     "trilogarithm closed form"},
    {IdentityId::Eq18, "EQ18", "(18)", "t = 1", K::Endpoint, "series CENTERED_SQ_SHIFT at t = 1",
     "3/2 zeta(3) - pi^2/6 log 2 - log^3 2 / 3"},
    {IdentityId::Eq19, "EQ19", "(19)", "t = -1", K::Endpoint, "series CENTERED_SQ_SHIFT at t = -1",
     "pi^2/12 log 2 - 3/4 zeta(3) - log^3 2 / 3"},
    {IdentityId::Eq20, "EQ20", "(20)", "-1/3 <= x <= 1", K::Pointwise, "series SKEW_OVER_NSQ",
     "trilogarithm combination"},
    {IdentityId::Eq22, "EQ22", "(22)", "|x| < 1, -1 < mu <= 1", K::MuFamily, "series MU_LEWIN",
     "Li2(mu(1+x)/(1+mu)) - Li2(mu/(1+mu)) - log(1+mu) log(1+x)"},
    {IdentityId::Eq24, "EQ24", "(24)", "|x| < 1, -1 < mu <= 1", K::MuFamily,
     "Li2((1+mu)x/(1+x)) - Li2(x/(1+x))", "series MU_DILOG"},
    {IdentityId::Eq25Abel, "EQ25_ABEL", "(25)", "|x| < 1, -1 < mu <= 1", K::MuFamily,
     "Li2((1+mu)x/(1+x)) + Li2(mu(1+x)/(1+mu)) - Li2(mu x)",
     "Li2(x/(1+x)) + Li2(mu/(1+mu)) + log(1+mu) log(1+x)"},
    {IdentityId::Eq26, "EQ26", "(26)", "-1/3 <= x <= 1", K::Pointwise, "Li2(2x/(1+x)) direct",
     "Li2 combination on [-1, 1]"},
    {IdentityId::Eq27Ramanujan, "EQ27_RAMANUJAN", "(27)", "|x| < 1", K::Pointwise,
     "Li2(2x/(1+x)) + log^2((1-x)/(1+x))/4", "series RAMANUJAN_ODD"},
    {IdentityId::Eq28, "EQ28", "(28)", "|x| < 1, -1 < mu <= 1", K::MuFamily,
     "Li3((1+mu)x/(1+x)) - Li3(x/(1+x))", "series MU_TRILOG"},
    {IdentityId::Eq29, "EQ29", "(29)", "|z| <= 1", K::Pointwise, "double integral g(z)", "closed form of EQ13"},
    {IdentityId::Eq30, "EQ30", "(30)", "|z| <= 1", K::Pointwise, "double integral G(z)", "closed form of EQ17"},
    {IdentityId::Eq31, "EQ31", "(31)", "none", K::Constant, "double integral",
     "7/8 log^2 2 + pi/8 log 2 - G/2 - pi^2/48"},
    {IdentityId::Eq32, "EQ32", "(32)", "none", K::Constant, "double integral",
     "pi^2/12 log 2 + log^3 2 / 3 - zeta(3)/2"},
    {IdentityId::Landen, "LANDEN", "Landen", "-1 < x <= 1", K::Pointwise, "Li2(x/(1+x)) direct",
     "-log^2(1+x)/2 - Li2(-x)"},
    {IdentityId::HEvenOddSplit, "H_EVEN_ODD_SPLIT", "split", "n >= 1", K::Discrete, "H_(2n)^-, H_(2n+1)^-",
     "H_(2n) - H_n, H_(2n+1) - H_n"},
}};

struct Sides {
    double lhs;
    double rhs;
    std::string note;
};

// Series and quadrature sides are computed well inside the tolerance they
// are judged against.
double inner_tol(double tol) { return std::max(tol * 1e-2, 1e-14); }

struct Skip : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double series_value(SeriesId id, double t, double tol, std::optional<double> mu, std::string& note)
{
    const EvalResult r = sum_series(id, t, inner_tol(tol), mu);
    if (r.status == EvalStatus::DivergentInput)
        throw Skip(std::string(series_info(id).tag) + " does not converge at this point");
    if (r.status != EvalStatus::Converged)
        note = std::string(series_info(id).tag) + " stopped at " + std::to_string(r.terms_used) +
               " terms, error bound " + format_double(r.error_bound);
    return r.value;
}

double quadrature_value(const EvalResult& r, std::string& note)
{
    if (r.status != EvalStatus::Converged)
        note = "quadrature " + std::string(to_string(r.status)) + ", error bound " + format_double(r.error_bound);
    return r.value;
}

void require_endpoint(IdentityId id, double t, double at)
{
    if (t != at)
        throw Skip(std::string(identity_info(id).tag) + " is defined only at t = " + format_double(at));
}

QuadratureConfig quadrature_config(double tol)
{
    QuadratureConfig cfg;
    cfg.abs_tol = std::max(tol * 1e-2, 1e-13);
    cfg.rel_tol = 1e-15;
    return cfg;
}

Sides evaluate(IdentityId id, double t, std::optional<double> mu, double tol)
{
    Sides s{};
    auto pointwise = [&](SeriesId sid, ClosedFormId cid) {
        s.lhs = series_value(sid, t, tol, std::nullopt, s.note);
        s.rhs = closed_form(cid, t);
    };
    switch (id) {
    case IdentityId::Eq2: pointwise(SeriesId::GfSkew, ClosedFormId::Eq2); break;
    case IdentityId::Eq3: pointwise(SeriesId::GfCentered, ClosedFormId::Eq3); break;
    case IdentityId::Eq5: pointwise(SeriesId::SkewOverN, ClosedFormId::Eq5); break;
    case IdentityId::Eq8: pointwise(SeriesId::CenteredOverN, ClosedFormId::Eq8); break;
    case IdentityId::Eq11: pointwise(SeriesId::CenteredShift, ClosedFormId::Eq11); break;
    case IdentityId::Eq12: pointwise(SeriesId::SkewSq, ClosedFormId::Eq12); break;
    case IdentityId::Eq13: pointwise(SeriesId::CenteredSq, ClosedFormId::Eq13); break;
    case IdentityId::Eq17: pointwise(SeriesId::CenteredSqShift, ClosedFormId::Eq17); break;
    case IdentityId::Eq20: pointwise(SeriesId::SkewOverNsq, ClosedFormId::Eq20); break;

    case IdentityId::Eq4:
        require_endpoint(id, t, 1.0);
        s.lhs = series_value(SeriesId::GfCentered, 1.0, tol, std::nullopt, s.note);
        s.rhs = -0.5;
        break;
    case IdentityId::Eq9:
        require_endpoint(id, t, -1.0);
        s.lhs = -series_value(SeriesId::CenteredOverN, -1.0, tol, std::nullopt, s.note);
        s.rhs = pi_sq_over_12 - 0.5 * log2 * log2;
        break;
    case IdentityId::Eq10:
        require_endpoint(id, t, -1.0);
        s.lhs = -series_value(SeriesId::SkewOverN, -1.0, tol, std::nullopt, s.note);
        s.rhs = pi_sq_over_12 + 0.5 * log2 * log2;
        break;
    case IdentityId::Eq15:
        require_endpoint(id, t, -1.0);
        s.lhs = series_value(SeriesId::CenteredSq, -1.0, tol, std::nullopt, s.note);
        s.rhs = 0.5 * pi_sq_over_12;
        break;
    case IdentityId::Eq16:
        require_endpoint(id, t, 1.0);
        s.lhs = series_value(SeriesId::CenteredSq, 1.0, tol, std::nullopt, s.note);
        s.rhs = log2;
        break;
    case IdentityId::Eq18:
        require_endpoint(id, t, 1.0);
        s.lhs = series_value(SeriesId::CenteredSqShift, 1.0, tol, std::nullopt, s.note);
        s.rhs = 1.5 * zeta3 - pi_sq_over_6 * log2 - log2 * log2 * log2 / 3.0;
        break;
    case IdentityId::Eq19:
        require_endpoint(id, t, -1.0);
        s.lhs = series_value(SeriesId::CenteredSqShift, -1.0, tol, std::nullopt, s.note);
        s.rhs = pi_sq_over_12 * log2 - 0.75 * zeta3 - log2 * log2 * log2 / 3.0;
        break;

    case IdentityId::Eq22:
        s.lhs = series_value(SeriesId::MuLewin, t, tol, mu, s.note);
        s.rhs = closed_form(ClosedFormId::Eq22, t, mu);
        break;
    case IdentityId::Eq24:
        s.lhs = closed_form(ClosedFormId::Eq24, t, mu);
        s.rhs = series_value(SeriesId::MuDilog, t, tol, mu, s.note);
        break;
    case IdentityId::Eq25Abel: {
        const AbelSides a = abel_sides(*mu, t);
        s.lhs = a.lhs;
        s.rhs = a.rhs;
        break;
    }
    case IdentityId::Eq28:
        s.lhs = closed_form(ClosedFormId::Eq28, t, mu);
        s.rhs = series_value(SeriesId::MuTrilog, t, tol, mu, s.note);
        break;

    case IdentityId::Eq26:
        if (!(t >= -1.0 / 3.0 && t <= 1.0))
            throw Skip("EQ26 needs 2x/(1+x) in [-1, 1], i.e. -1/3 <= x <= 1");
        s.lhs = li2(2.0 * t / (1.0 + t));
        s.rhs = closed_form(ClosedFormId::Eq26, t);
        break;
    case IdentityId::Eq27Ramanujan:
        s.lhs = closed_form(ClosedFormId::Eq27Ramanujan, t);
        s.rhs = series_value(SeriesId::RamanujanOdd, t, tol, std::nullopt, s.note);
        break;
    case IdentityId::Landen:
        if (!(t > -1.0 && t <= 1.0))
            throw Skip("LANDEN requires -1 < x <= 1");
        s.lhs = li2_real(t / (1.0 + t));
        s.rhs = closed_form(ClosedFormId::Landen, t);
        break;

    case IdentityId::Eq29:
        s.lhs = quadrature_value(double_integral_g(t, quadrature_config(tol)), s.note);
        s.rhs = closed_form(ClosedFormId::Eq29G, t);
        break;
    case IdentityId::Eq30:
        s.lhs = quadrature_value(double_integral_bigG(t, quadrature_config(tol)), s.note);
        s.rhs = closed_form(ClosedFormId::Eq30BigG, t);
        break;
    case IdentityId::Eq31:
        s.lhs = quadrature_value(double_integral_eq31(quadrature_config(tol)), s.note);
        s.rhs = 0.875 * log2 * log2 + pi / 8.0 * log2 - 0.5 * catalan - pi_sq_over_6 / 8.0;
        break;
    case IdentityId::Eq32:
        s.lhs = quadrature_value(double_integral_eq32(quadrature_config(tol)), s.note);
        s.rhs = pi_sq_over_12 * log2 + log2 * log2 * log2 / 3.0 - 0.5 * zeta3;
        break;

    case IdentityId::Eq1Digamma:
    case IdentityId::Eq14Lemma6:
    case IdentityId::HEvenOddSplit:
        throw Skip("discrete identity evaluated on n_range");
    }
    return s;
}

VerificationRecord finish(IdentityId id, Params params, double lhs, double rhs, double tol, std::string note)
{
    VerificationRecord r{id, std::move(params), lhs, rhs, std::fabs(lhs - rhs), tol, Verdict::Fail, std::move(note)};
    r.verdict = r.residual <= tol ? Verdict::Pass : Verdict::Fail;
    return r;
}

VerificationRecord skipped(IdentityId id, Params params, double tol, std::string why)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {id, std::move(params), nan, nan, nan, tol, Verdict::Skipped, std::move(why)};
}

using TolFn = std::function<double(const Params&)>;

void verify_discrete(IdentityId id, std::size_t first, std::size_t last, const TolFn& tol_of,
                     std::vector<VerificationRecord>& out)
{
    const auto& cache = default_harmonic_cache();
    const std::size_t limit = id == IdentityId::HEvenOddSplit ? (cache.limit() - 1) / 2 : cache.limit();
    if (first < 1 || first > last || last > limit) {
        Params p{{"n_first", static_cast<double>(first)}, {"n_last", static_cast<double>(last)}};
        const double tol = tol_of(p);
        out.push_back(skipped(id, std::move(p), tol,
                              "n_range must satisfy 1 <= first <= last <= " + std::to_string(limit)));
        return;
    }

    // The EQ14 check needs a running sum from k = 1 regardless of first.
    double sum = 0.0, comp = 0.0;
    for (std::size_t n = 1; n <= last; ++n) {
        if (id == IdentityId::Eq14Lemma6) {
            const double term = 2.0 * ((n % 2 == 1) ? 1.0 : -1.0) * cache.skew(n) / static_cast<double>(n);
            const double t = sum + term;
            comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
            sum = t;
        }
        if (n < first)
            continue;
        const double nd = static_cast<double>(n);
        switch (id) {
        case IdentityId::Eq1Digamma: {
            Params p{{"n", nd}};
            const double sign = (n % 2 == 1) ? 1.0 : -1.0;
            const double tol = tol_of(p);
            out.push_back(finish(id, std::move(p), digamma_half_diff(n), 2.0 * sign * (log2 - cache.skew(n - 1)),
                                 tol, ""));
            break;
        }
        case IdentityId::Eq14Lemma6: {
            Params p{{"n", nd}};
            const double skew = cache.skew(n);
            const double tol = tol_of(p);
            out.push_back(finish(id, std::move(p), sum + comp, skew * skew + cache.h2(n), tol, ""));
            break;
        }
        case IdentityId::HEvenOddSplit:
            for (std::size_t m : {2 * n, 2 * n + 1}) {
                Params p{{"n", nd}, {"m", static_cast<double>(m)}};
                const double tol = tol_of(p);
                out.push_back(finish(id, std::move(p), cache.skew(m), cache.h(m) - cache.h(n), tol, ""));
            }
            break;
        default:
            break;
        }
    }
}

std::vector<VerificationRecord> verify_with(IdentityId id, const GridSpec& grid, const TolFn& tol_of)
{
    std::vector<VerificationRecord> out;
    const IdentityInfo& info = identity_info(id);
    const std::string var = id == IdentityId::Eq29 || id == IdentityId::Eq30 ? "z"
                            : (info.kind == K::MuFamily || id == IdentityId::Eq17 || id == IdentityId::Eq20 ||
                               id == IdentityId::Eq26 || id == IdentityId::Eq27Ramanujan || id == IdentityId::Landen)
                                ? "x"
                                : "t";

    auto run_point = [&](Params params, double t, std::optional<double> mu) {
        const double tol = tol_of(params);
        try {
            Sides s = evaluate(id, t, mu, tol);
            out.push_back(finish(id, std::move(params), s.lhs, s.rhs, tol, std::move(s.note)));
        } catch (const Skip& e) {
            out.push_back(skipped(id, std::move(params), tol, e.what()));
        } catch (const std::exception& e) {
            // Domain and pole errors from the evaluators: the point is outside
            // what the identity covers.
            out.push_back(skipped(id, std::move(params), tol, e.what()));
        }
    };

    switch (info.kind) {
    case K::Discrete:
        if (!grid.n_range) {
            out.push_back(skipped(id, {}, tol_of({}), "discrete identity needs n_range"));
            break;
        }
        verify_discrete(id, grid.n_range->first, grid.n_range->second, tol_of, out);
        break;
    case K::Constant:
        run_point({}, 0.0, std::nullopt);
        break;
    case K::MuFamily:
        if (!grid.mu_points || grid.mu_points->empty() || grid.t_points.empty()) {
            out.push_back(skipped(id, {}, tol_of({}), "mu-family identity needs mu_points and t_points"));
            break;
        }
        for (double mu : *grid.mu_points)
            for (double t : grid.t_points)
                run_point({{"mu", mu}, {var, t}}, t, mu);
        break;
    case K::Pointwise:
    case K::Endpoint:
        if (grid.t_points.empty()) {
            out.push_back(skipped(id, {}, tol_of({}), "identity needs t_points"));
            break;
        }
        for (double t : grid.t_points)
            run_point({{var, t}}, t, std::nullopt);
        break;
    }
    return out;
}

double param(const Params& params, std::string_view name, double fallback)
{
    for (const auto& [k, v] : params)
        if (k == name)
            return v;
    return fallback;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::span<const IdentityInfo> identity_table() noexcept { return kIdentities; }

const IdentityInfo& identity_info(IdentityId id) noexcept { return kIdentities[static_cast<std::size_t>(id)]; }

IdentityId parse_identity_id(std::string_view tag)
{
    for (const auto& info : kIdentities)
        if (info.tag == tag)
            return info.id;
    throw LookupError("unknown identity '" + std::string(tag) + "'");
}

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

Verdict parse_verdict(std::string_view s)
{
    for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Skipped})
        if (to_string(v) == s)
            return v;
    throw LookupError("unknown verdict '" + std::string(s) + "'");
}

std::string_view to_string(ToleranceTier t) noexcept
{
    switch (t) {
    case ToleranceTier::Strict: return "strict";
    case ToleranceTier::Standard: return "standard";
    case ToleranceTier::Relaxed: return "relaxed";
    }
    return "?";
}

GridSpec default_grid(IdentityId id)
{
    const std::vector<double> pointwise{-0.9, -0.5, -0.1, 0.0, 0.1, 0.5, 0.9};
    const std::vector<double> mu_grid{-0.8, -0.3, 0.2, 0.7, 1.0};
    const std::vector<double> mu_x{-0.9, -0.4, 0.3, 0.8};
    switch (id) {
    case IdentityId::Eq1Digamma:
    case IdentityId::Eq14Lemma6: return {{}, std::nullopt, std::pair<std::size_t, std::size_t>{1, 1000}};
    case IdentityId::HEvenOddSplit: return {{}, std::nullopt, std::pair<std::size_t, std::size_t>{1, 5000}};
    case IdentityId::Eq2:
    case IdentityId::Eq3:
    case IdentityId::Eq5:
    case IdentityId::Eq8:
    case IdentityId::Eq11:
    case IdentityId::Eq12:
    case IdentityId::Eq13: return {pointwise, std::nullopt, std::nullopt};
    case IdentityId::Eq4:
    case IdentityId::Eq16:
    case IdentityId::Eq18: return {{1.0}, std::nullopt, std::nullopt};
    case IdentityId::Eq9:
    case IdentityId::Eq10:
    case IdentityId::Eq15:
    case IdentityId::Eq19: return {{-1.0}, std::nullopt, std::nullopt};
    case IdentityId::Eq17: return {{-1.0, -0.9, -0.5, 0.0, 0.3, 0.6, 0.9}, std::nullopt, std::nullopt};
    case IdentityId::Eq20: return {{-0.3, -0.1, 0.2, 0.5, 0.9}, std::nullopt, std::nullopt};
    case IdentityId::Eq22:
    case IdentityId::Eq24:
    case IdentityId::Eq25Abel:
    case IdentityId::Eq28: return {mu_x, mu_grid, std::nullopt};
    case IdentityId::Eq26: return {{-0.3, 0.0, 0.25, 0.6, 0.9}, std::nullopt, std::nullopt};
    case IdentityId::Eq27Ramanujan: return {{-0.6, -0.2, 0.0, 0.3, 0.6, 0.9}, std::nullopt, std::nullopt};
    case IdentityId::Landen: return {{-0.9, -0.5, -0.2, 0.3, 0.7, 1.0}, std::nullopt, std::nullopt};
    case IdentityId::Eq29: return {{-1.0, -0.99, -0.9, -0.5, 0.0, 0.5, 0.9, 1.0}, std::nullopt, std::nullopt};
    case IdentityId::Eq30: return {{-1.0, -0.9, -0.5, 0.5, 0.9, 1.0}, std::nullopt, std::nullopt};
    case IdentityId::Eq31:
    case IdentityId::Eq32: return {};
    }
    return {};
}

ToleranceTier tolerance_tier(IdentityId id, const Params& params)
{
    switch (id) {
    case IdentityId::Eq1Digamma:
    case IdentityId::Eq14Lemma6:
    case IdentityId::HEvenOddSplit: return ToleranceTier::Strict;
    case IdentityId::Eq29:
        return std::fabs(param(params, "z", 0.0)) == 1.0 ? ToleranceTier::Relaxed : ToleranceTier::Standard;
    default: return ToleranceTier::Standard;
    }
}

double default_tolerance(IdentityId id, const Params& params)
{
    switch (id) {
    case IdentityId::Eq1Digamma:
    case IdentityId::Eq14Lemma6: return 1e-12;
    case IdentityId::HEvenOddSplit: return 1e-13;
    case IdentityId::Eq2:
    case IdentityId::Eq3:
    case IdentityId::Eq5:
    case IdentityId::Eq8:
    case IdentityId::Eq11:
    case IdentityId::Eq12:
    case IdentityId::Eq13:
    case IdentityId::Eq4:
    case IdentityId::Eq15:
    case IdentityId::Eq26:
    case IdentityId::Eq27Ramanujan:
    case IdentityId::Landen: return 1e-10;
    case IdentityId::Eq17:
    case IdentityId::Eq9:
    case IdentityId::Eq10:
    case IdentityId::Eq20:
    case IdentityId::Eq22:
    case IdentityId::Eq24:
    case IdentityId::Eq25Abel:
    case IdentityId::Eq28: return 1e-9;
    case IdentityId::Eq18:
    case IdentityId::Eq19:
    case IdentityId::Eq31:
    case IdentityId::Eq32: return 1e-8;
    case IdentityId::Eq16: return 1e-6;
    case IdentityId::Eq30: return 1e-7;
    case IdentityId::Eq29:
        return tolerance_tier(id, params) == ToleranceTier::Relaxed ? 1e-4 : 1e-8;
    }
    return 1e-8;
}

double tolerance_for(const TolProfile& profile, IdentityId id, const Params& params)
{
    std::optional<double> tier_override;
    switch (tolerance_tier(id, params)) {
    case ToleranceTier::Strict: tier_override = profile.strict; break;
    case ToleranceTier::Standard: tier_override = profile.standard; break;
    case ToleranceTier::Relaxed: tier_override = profile.relaxed; break;
    }
    return tier_override.value_or(default_tolerance(id, params));
}

std::vector<VerificationRecord> verify_identity(IdentityId id, const GridSpec& grid, double tol)
{
    if (!(tol > 0.0))
        throw UsageError("tolerance must be positive");
    return verify_with(id, grid, [tol](const Params&) { return tol; });
}

std::vector<VerificationRecord> verify_identity(IdentityId id, const GridSpec& grid, const TolProfile& profile)
{
    for (auto t : {profile.strict, profile.standard, profile.relaxed})
        if (t && !(*t > 0.0))
            throw UsageError("tolerance must be positive");
    return verify_with(id, grid, [&](const Params& p) { return tolerance_for(profile, id, p); });
}

bool Report::has_failures() const noexcept
{
    return std::any_of(records.begin(), records.end(),
                       [](const VerificationRecord& r) { return r.verdict == Verdict::Fail; });
}

std::vector<SummaryEntry> summarize(std::span<const VerificationRecord> records)
{
    std::vector<SummaryEntry> out;
    for (const auto& info : kIdentities) {
        SummaryEntry e{info.id, {}};
        bool any = false;
        for (const auto& r : records) {
            if (r.identity != info.id)
                continue;
            any = true;
            switch (r.verdict) {
            case Verdict::Pass: ++e.counts.pass; break;
            case Verdict::Fail: ++e.counts.fail; break;
            case Verdict::Skipped: ++e.counts.skipped; break;
            }
        }
        if (any)
            out.push_back(e);
    }
    return out;
}

Report make_report(std::vector<VerificationRecord> records, const TolProfile& profile)
{
    Report r;
    r.records = std::move(records);
    r.summary = summarize(r.records);
    r.metadata = {SKEWLOG_VERSION, utc_timestamp(), profile};
    return r;
}

std::vector<Erratum> compute_errata()
{
    std::vector<Erratum> out;

    Erratum antider{"ANTIDERIVATIVE_VERSION_B",
                    "int_0^x Li2(t)/(1-t) dt, version B: printed with pi/6 where pi^2/6 is needed; "
                    "oracle is adaptive quadrature",
                    {}};
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-14;
    cfg.rel_tol = 1e-15;
    for (double x : {0.3, 0.5, 0.7, 0.9, 0.95}) {
        const double oracle = integrate_1d([](double t) { return li2(t) / (1.0 - t); }, 0.0, x, cfg).value;
        antider.points.push_back(
            {{{"x", x}}, oracle, int_li2_over_1mt_version_b_as_printed(x), int_li2_over_1mt_version_b(x)});
    }
    out.push_back(std::move(antider));

    Erratum eq17{"EQ17_AS_PRINTED",
                 "sum (H_n^- - log 2)^2 x^(n+1)/(n+1) closed form with the printed antiderivative "
                 "(differs only where version B is used, x > 1/2); oracle is the series",
                 {}};
    for (double x : {0.6, 0.75, 0.9}) {
        const double oracle = sum_series(SeriesId::CenteredSqShift, x, 1e-14).value;
        eq17.points.push_back({{{"x", x}},
                               oracle,
                               closed_form_eq17(x, AntiderivativeForm::AsPrinted),
                               closed_form_eq17(x, AntiderivativeForm::Corrected)});
    }
    out.push_back(std::move(eq17));

    Erratum eq22{"EQ22_AS_PRINTED",
                 "Lewin expansion: printed with (-1)^n where (-1)^(n-1) is needed, i.e. the series "
                 "as printed is minus the dilogarithm side; oracle is the dilogarithm side",
                 {}};
    for (auto [mu, x] : std::array<std::pair<double, double>, 3>{{{0.5, 0.4}, {-0.3, -0.4}, {1.0, 0.8}}}) {
        const double corrected = sum_series(SeriesId::MuLewin, x, 1e-14, mu).value;
        eq22.points.push_back(
            {{{"mu", mu}, {"x", x}}, closed_form(ClosedFormId::Eq22, x, mu), -corrected, corrected});
    }
    out.push_back(std::move(eq22));

    Erratum eq28{"EQ28_AS_PRINTED",
                 "Li3((1+mu)x/(1+x)) - Li3(x/(1+x)) expansion: printed without the overall factor mu; "
                 "oracle is the trilogarithm difference",
                 {}};
    for (auto [mu, x] : std::array<std::pair<double, double>, 3>{{{0.5, 0.4}, {-0.3, -0.4}, {0.7, 0.8}}}) {
        const double corrected = sum_series(SeriesId::MuTrilog, x, 1e-14, mu).value;
        eq28.points.push_back(
            {{{"mu", mu}, {"x", x}}, closed_form(ClosedFormId::Eq28, x, mu), corrected / mu, corrected});
    }
    out.push_back(std::move(eq28));
    return out;
}

Report verify_all(const TolProfile& profile)
{
    std::vector<VerificationRecord> records;
    for (const auto& info : kIdentities) {
        auto part = verify_identity(info.id, default_grid(info.id), profile);
        records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    Report r = make_report(std::move(records), profile);
    r.errata = compute_errata();
    return r;
}

} // namespace skewlog
