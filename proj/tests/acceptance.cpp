// One line per acceptance criterion; exit status 1 if any fails.
#include "skewlog/closed_forms.hpp"
#include "skewlog/core_numerics.hpp"
#include "skewlog/polylog.hpp"
#include "skewlog/quadrature.hpp"
#include "skewlog/series_engine.hpp"
#include "skewlog/verifier.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace skewlog;

namespace {

int failures = 0;

struct Outcome {
    bool ok;
    std::string detail;
};

void criterion(int number, const char* title, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok)
        ++failures;
    std::printf("[%s] %2d %s: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", number, title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(const char* f, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

// Worst residual over verify_identity records; any FAIL or SKIPPED counts.
struct SuiteResult {
    double worst = 0.0;
    std::size_t bad = 0;
    std::size_t total = 0;
};

void run_suite(SuiteResult& s, IdentityId id, const GridSpec& grid, double tol)
{
    for (const auto& r : verify_identity(id, grid, tol)) {
        ++s.total;
        if (r.verdict != Verdict::Pass)
            ++s.bad;
        else
            s.worst = std::max(s.worst, r.residual);
    }
}

Outcome suite_outcome(const SuiteResult& s)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu points, %zu not passing, worst residual %.3g", s.total, s.bad, s.worst);
    return {s.bad == 0 && s.total > 0, buf};
}

const std::vector<double> kSixPoints{-0.9, -0.5, -0.1, 0.1, 0.5, 0.9};

} // namespace

int main()
{
    criterion(1, "sum (H_n^- - log 2) = -1/2", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = sum_series(SeriesId::GfCentered, 1.0, 1e-12);
        const double secs = seconds_since(t0);
        const double err = std::fabs(r.value + 0.5);
        return Outcome{r.converged() && err <= 1e-10 && secs < 1.0, fmt("|S + 1/2| = %.3g, %.3f s", err, secs)};
    });

    criterion(2, "sum (-1)^n (H_n^- - log 2)^2 = pi^2/24", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = sum_series(SeriesId::CenteredSq, -1.0, 1e-12);
        const double secs = seconds_since(t0);
        const double err = std::fabs(r.value - constants::pi_sq_over_6 / 4.0);
        return Outcome{r.converged() && err <= 1e-10 && secs < 1.0, fmt("residual %.3g, %.3f s", err, secs)};
    });

    criterion(3, "sum (H_n^- - log 2)^2 = log 2", [] {
        // 1e5 terms summed directly; r_n ~ 1/(2n) gives the tail 1/(4N).
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t n_terms = 100'000;
        const double direct = partial_sum(SeriesId::CenteredSq, 1.0, n_terms + 1);
        const double corrected = direct + 1.0 / (4.0 * static_cast<double>(n_terms));
        const auto engine = sum_series(SeriesId::CenteredSq, 1.0, 1e-8);
        const double secs = seconds_since(t0);
        const double e1 = std::fabs(corrected - constants::log2);
        const double e2 = std::fabs(engine.value - constants::log2);
        return Outcome{e1 <= 1e-6 && e2 <= 1e-6 && secs < 5.0,
                       fmt("direct+tail residual %.3g, engine residual %.3g", e1, e2) + fmt(", %.3f s", secs)};
    });

    criterion(4, "endpoint sums pi^2/12 -+ log^2 2 / 2", [] {
        const double l2 = constants::log2;
        const double e9 = std::fabs(-sum_series(SeriesId::CenteredOverN, -1.0, 1e-11).value -
                                    (constants::pi_sq_over_12 - l2 * l2 / 2));
        const double e10 = std::fabs(-sum_series(SeriesId::SkewOverN, -1.0, 1e-11).value -
                                     (constants::pi_sq_over_12 + l2 * l2 / 2));
        return Outcome{e9 <= 1e-9 && e10 <= 1e-9, fmt("residuals %.3g / %.3g", e9, e10)};
    });

    criterion(5, "endpoint sums with zeta(3)", [] {
        const double l2 = constants::log2, z3 = constants::zeta3;
        const double v18 = 1.5 * z3 - constants::pi_sq_over_6 * l2 - l2 * l2 * l2 / 3;
        const double v19 = constants::pi_sq_over_12 * l2 - 0.75 * z3 - l2 * l2 * l2 / 3;
        const double e18 = std::fabs(sum_series(SeriesId::CenteredSqShift, 1.0, 1e-10).value - v18);
        const double e19 = std::fabs(sum_series(SeriesId::CenteredSqShift, -1.0, 1e-10).value - v19);
        return Outcome{e18 <= 1e-8 && e19 <= 1e-8, fmt("residuals %.3g / %.3g", e18, e19)};
    });

    criterion(6, "pointwise generating functions", [] {
        SuiteResult s;
        for (auto id : {IdentityId::Eq2, IdentityId::Eq3, IdentityId::Eq5, IdentityId::Eq8, IdentityId::Eq11,
                        IdentityId::Eq12, IdentityId::Eq13})
            run_suite(s, id, GridSpec{kSixPoints, {}, {}}, 1e-10);
        return suite_outcome(s);
    });

    criterion(7, "trilogarithm identities", [] {
        SuiteResult s;
        run_suite(s, IdentityId::Eq20, GridSpec{{-0.3, -0.1, 0.2, 0.5, 0.9}, {}, {}}, 1e-9);
        run_suite(s, IdentityId::Eq28, default_grid(IdentityId::Eq28), 1e-9);
        return suite_outcome(s);
    });

    criterion(8, "dilogarithm identity suite", [] {
        SuiteResult s;
        for (auto id : {IdentityId::Eq22, IdentityId::Eq24, IdentityId::Eq25Abel, IdentityId::Eq26,
                        IdentityId::Eq27Ramanujan, IdentityId::Landen})
            run_suite(s, id, default_grid(id), 1e-9);
        // mu = 1 closure points
        for (auto id : {IdentityId::Eq22, IdentityId::Eq24, IdentityId::Eq25Abel})
            run_suite(s, id, GridSpec{{-0.9, -0.4, 0.3, 0.8}, std::vector<double>{1.0}, {}}, 1e-9);
        return suite_outcome(s);
    });

    criterion(9, "discrete identities", [] {
        SuiteResult s;
        GridSpec to1000;
        to1000.n_range = {1, 1000};
        run_suite(s, IdentityId::Eq14Lemma6, to1000, 1e-12);
        run_suite(s, IdentityId::Eq1Digamma, to1000, 1e-12);
        GridSpec to5000;
        to5000.n_range = {1, 5000};
        run_suite(s, IdentityId::HEvenOddSplit, to5000, 1e-13);
        return suite_outcome(s);
    });

    criterion(10, "double integrals", [] {
        SuiteResult s;
        run_suite(s, IdentityId::Eq29, GridSpec{{-0.9, -0.5, 0.0, 0.5, 0.9}, {}, {}}, 1e-8);
        run_suite(s, IdentityId::Eq29, GridSpec{{-1.0, 1.0}, {}, {}}, 1e-4);
        const double g1 = std::fabs(double_integral_g(1.0).value - constants::log2);
        const double gm1 = std::fabs(double_integral_g(-1.0).value - constants::pi_sq_over_6 / 4.0);
        for (double z : {-0.9, -0.5, 0.5, 0.9}) {
            ++s.total;
            const double r = std::fabs(double_integral_bigG(z).value - closed_form_eq17(z));
            if (r > 1e-7)
                ++s.bad;
            s.worst = std::max(s.worst, r);
        }
        const double l2 = constants::log2;
        const double v31 = 7.0 / 8 * l2 * l2 + constants::pi / 8 * l2 - constants::catalan / 2 -
                           constants::pi_sq_over_6 / 8;
        const double v32 = constants::pi_sq_over_12 * l2 + l2 * l2 * l2 / 3 - constants::zeta3 / 2;
        const double e31 = std::fabs(double_integral_eq31().value - v31);
        const double e32 = std::fabs(double_integral_eq32().value - v32);
        auto o = suite_outcome(s);
        o.ok = o.ok && g1 <= 1e-4 && gm1 <= 1e-4 && e31 <= 1e-8 && e32 <= 1e-8 &&
               std::fabs(v31 - 0.0289950931) <= 1e-10 && std::fabs(v32 - 0.0800704705) <= 1e-9;
        o.detail += fmt("; |g(1)-log2| %.3g, |g(-1)-pi^2/24| %.3g", g1, gm1) + fmt("; eq31 %.3g, eq32 %.3g", e31, e32);
        return o;
    });

    criterion(11, "antiderivative of Li2(t)/(1-t)", [] {
        double ab = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double x = 0.5 * i / 100.0;
            ab = std::max(ab, std::fabs(int_li2_over_1mt_version_a(x) - int_li2_over_1mt_version_b(x)));
        }
        double quad = 0.0;
        for (double x : {-0.9, -0.5, 0.3, 0.7, 0.95}) {
            const auto q = integrate_1d([](double t) { return li2(t) / (1.0 - t); }, 0.0, x);
            quad = std::max(quad, std::fabs(int_li2_over_1mt(x) - q.value));
        }
        const double jm1 = std::fabs(int_li2_over_1mt(-1.0) -
                                     (constants::pi_sq_over_12 * constants::log2 - constants::zeta3 / 4));
        return Outcome{ab <= 1e-12 && quad <= 1e-9 && jm1 <= 1e-10,
                       fmt("A vs B %.3g, vs quadrature %.3g", ab, quad) + fmt(", J(-1) residual %.3g", jm1)};
    });

    criterion(12, "property suite", [] {
        int bad = 0;
        std::string which;
        auto expect = [&](bool ok, const char* name) {
            if (!ok) {
                ++bad;
                which += std::string(" ") + name;
            }
        };
        double oracle_err = 0.0, landen = 0.0, refl = 0.0, dup = 0.0;
        for (int m : {2, 3})
            for (double x : {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9})
                oracle_err = std::max(oracle_err, std::fabs(polylog(PolylogOrder(m), x) -
                                                            polylog_series_oracle(PolylogOrder(m), x, 2000)));
        for (int i = 0; i <= 199; ++i) {
            const double x = -0.99 + 1.99 * i / 199.0;
            landen = std::max(landen, std::fabs(li2_real(x / (1 + x)) + 0.5 * std::log1p(x) * std::log1p(x) + li2(-x)));
        }
        for (int i = 1; i < 100; ++i) {
            const double x = i / 100.0;
            refl = std::max(refl, std::fabs(li2(x) + li2(1 - x) - constants::pi_sq_over_6 + std::log(x) * std::log1p(-x)));
        }
        for (int i = 0; i <= 200; ++i) {
            const double x = -1.0 + i / 100.0;
            dup = std::max(dup, std::fabs(li2(x) + li2(-x) - 0.5 * li2(x * x)));
        }
        expect(oracle_err <= 1e-13, "oracle");
        expect(landen <= 1e-13, "landen");
        expect(refl <= 1e-13, "reflection");
        expect(dup <= 1e-13, "duplication");

        bool honest = true;
        for (const auto& info : series_table()) {
            if (info.needs_mu)
                continue;
            for (double t : {-0.95, -0.7, 0.3, 0.8, 0.95}) {
                const auto r = sum_series(info.id, t, 1e-9);
                const double longer = partial_sum(info.id, t, 4 * r.terms_used + 64);
                honest = honest && r.converged() && std::fabs(r.value - longer) <= r.error_bound + 1e-14;
            }
        }
        expect(honest, "tail-bound");

        auto a = verify_all();
        auto b = verify_all();
        a.metadata.timestamp.clear();
        b.metadata.timestamp.clear();
        expect(a == b, "determinism");
        expect(!a.has_failures(), "verify_all");
        const auto json = serialize_report(a, ReportFormat::Json);
        expect(serialize_report(parse_report_json(json), ReportFormat::Json) == json, "json-roundtrip");
        const auto csv = serialize_report(a, ReportFormat::Csv);
        expect(serialize_report(make_report(parse_report_csv(csv)), ReportFormat::Csv) == csv, "csv-roundtrip");

        std::string detail = bad == 0 ? "all invariants hold" : "failed:" + which;
        detail += fmt("; oracle %.2g, Landen %.2g", oracle_err, landen) + fmt(", reflection %.2g, duplication %.2g", refl, dup);
        return Outcome{bad == 0, detail};
    });

    return failures == 0 ? 0 : 1;
}
