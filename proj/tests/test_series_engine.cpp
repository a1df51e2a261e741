#include "skewlog/core_numerics.hpp"
#include "skewlog/errors.hpp"
#include "skewlog/series_engine.hpp"

#include "oracles/oracle_values.hpp"
#include "support.hpp"

#include <cmath>
#include <span>
#include <vector>

using namespace skewlog;

namespace {

struct Table {
    SeriesId id;
    std::span<const oracle::P1> rows;
};

const Table kTables[] = {
    {SeriesId::GfSkew, oracle::series_gf_skew},
    {SeriesId::GfCentered, oracle::series_gf_centered},
    {SeriesId::SkewOverN, oracle::series_skew_over_n},
    {SeriesId::CenteredOverN, oracle::series_centered_over_n},
    {SeriesId::CenteredShift, oracle::series_centered_shift},
    {SeriesId::SkewSq, oracle::series_skew_sq},
    {SeriesId::CenteredSq, oracle::series_centered_sq},
    {SeriesId::CenteredSqShift, oracle::series_centered_sq_shift},
    {SeriesId::SkewOverNsq, oracle::series_skew_over_nsq},
};

double scale(double v) { return std::max(1.0, std::fabs(v)); }

} // namespace

TEST_CASE("coefficients")
{
    CHECK(coefficient(SeriesId::GfSkew, 0) == 0.0);
    CHECK(coefficient(SeriesId::GfSkew, 1) == 1.0);
    CHECK(coefficient(SeriesId::GfSkew, 2) == 0.5);
    CHECK_CLOSE(coefficient(SeriesId::GfCentered, 0), -constants::log2, 0.0);
    CHECK_CLOSE(coefficient(SeriesId::CenteredSq, 1), std::pow(1.0 - constants::log2, 2), 1e-16);
    CHECK_CLOSE(coefficient(SeriesId::SkewOverNsq, 2), 0.5 / 9.0, 1e-17);
    CHECK_CLOSE(coefficient(SeriesId::MuDilog, 1, 0.5), 0.5, 1e-17);
    CHECK_CLOSE(coefficient(SeriesId::MuDilog, 2, 0.5), -0.5 * (1.0 - 0.25) / 2.0, 1e-17);
    CHECK_CLOSE(coefficient(SeriesId::RamanujanOdd, 1), 2.0, 0.0);
    CHECK(coefficient(SeriesId::RamanujanOdd, 2) == 0.0);
    CHECK_CLOSE(coefficient(SeriesId::RamanujanOdd, 3), 2.0 * (1.0 + 1.0 / 3.0) / 3.0, 1e-16);
    CHECK_THROWS_AS(coefficient(SeriesId::MuDilog, 1), UsageError);
    CHECK_THROWS_AS(coefficient(SeriesId::GfSkew, 1, 0.5), UsageError);
    CHECK_THROWS_AS(coefficient(SeriesId::MuDilog, 1, 1.5), DomainError);
}

TEST_CASE("table lookup")
{
    CHECK(parse_series_id("CENTERED_SQ") == SeriesId::CenteredSq);
    CHECK(parse_series_id(series_info(SeriesId::CenteredSq).alias) == SeriesId::CenteredSq);
    CHECK_THROWS_AS(parse_series_id("NOPE"), LookupError);
    for (const auto& info : series_table())
        CHECK(series_info(info.id).tag == info.tag);
}

TEST_CASE("sums against mpmath")
{
    for (const auto& table : kTables)
        for (const auto& p : table.rows) {
            CAPTURE(series_info(table.id).tag);
            CAPTURE(p.x);
            const auto r = sum_series(table.id, p.x, 1e-13);
            CHECK(r.converged());
            CHECK_CLOSE(r.value, p.value, 1e-12 * scale(p.value));
        }
}

TEST_CASE("mu-series against mpmath")
{
    const std::pair<SeriesId, std::span<const oracle::P2>> tables[] = {
        {SeriesId::MuLewin, oracle::series_mu_lewin},
        {SeriesId::MuDilog, oracle::series_mu_dilog},
        {SeriesId::MuTrilog, oracle::series_mu_trilog},
    };
    for (const auto& [id, rows] : tables)
        for (const auto& p : rows) {
            CAPTURE(series_info(id).tag);
            CAPTURE(p.mu);
            CAPTURE(p.x);
            const auto r = sum_series(id, p.x, 1e-13, p.mu);
            CHECK(r.converged());
            CHECK_CLOSE(r.value, p.value, 1e-12 * scale(p.value));
        }
    for (const auto& p : oracle::series_ramanujan_odd)
        CHECK_CLOSE(sum_series(SeriesId::RamanujanOdd, p.x, 1e-13).value, p.value, 1e-12 * scale(p.value));
}

TEST_CASE("endpoint sums")
{
    const auto eq4 = sum_series(SeriesId::GfCentered, 1.0, 1e-12);
    CHECK(eq4.converged());
    CHECK_CLOSE(eq4.value, oracle::eq4, 1e-10);
    CHECK_CLOSE(-sum_series(SeriesId::CenteredOverN, -1.0, 1e-11).value, oracle::eq9, 1e-9);
    CHECK_CLOSE(-sum_series(SeriesId::SkewOverN, -1.0, 1e-11).value, oracle::eq10, 1e-9);
    CHECK_CLOSE(sum_series(SeriesId::CenteredSq, -1.0, 1e-12).value, oracle::eq15, 1e-10);
    CHECK_CLOSE(sum_series(SeriesId::CenteredSq, 1.0, 1e-8).value, oracle::eq16, 1e-6);
    CHECK_CLOSE(sum_series(SeriesId::CenteredSqShift, 1.0, 1e-10).value, oracle::eq18, 1e-8);
    CHECK_CLOSE(sum_series(SeriesId::CenteredSqShift, -1.0, 1e-10).value, oracle::eq19, 1e-8);
}

TEST_CASE("divergent points")
{
    CHECK(sum_series(SeriesId::GfSkew, 1.0, 1e-10).status == EvalStatus::DivergentInput);
    CHECK(sum_series(SeriesId::SkewSq, 1.0, 1e-10).status == EvalStatus::DivergentInput);
    CHECK(sum_series(SeriesId::GfSkew, 1.5, 1e-10).status == EvalStatus::DivergentInput);
    CHECK(sum_series(SeriesId::CenteredSq, -1.2, 1e-10).status == EvalStatus::DivergentInput);
}

TEST_CASE("t = 0")
{
    CHECK(sum_series(SeriesId::GfSkew, 0.0, 1e-12).value == 0.0);
    CHECK(sum_series(SeriesId::GfCentered, 0.0, 1e-12).value == -constants::log2);
    CHECK(sum_series(SeriesId::CenteredSq, 0.0, 1e-12).value == constants::log2 * constants::log2);
    CHECK(sum_series(SeriesId::CenteredShift, 0.0, 1e-12).value == 0.0);
}

TEST_CASE("max_terms cap is reported")
{
    const auto r = sum_series(SeriesId::GfSkew, 0.99, 1e-14, std::nullopt, SeriesOptions{10});
    CHECK(r.status == EvalStatus::MaxTerms);
    CHECK(r.terms_used <= 10);
}

TEST_CASE("tail bound is honest")
{
    // Summing four times as many terms must land within the reported bound.
    for (const auto& table : kTables)
        for (double t : {-0.95, -0.7, 0.3, 0.8, 0.95}) {
            CAPTURE(series_info(table.id).tag);
            CAPTURE(t);
            const auto r = sum_series(table.id, t, 1e-9);
            REQUIRE(r.converged());
            const double longer = partial_sum(table.id, t, 4 * r.terms_used + 64);
            CHECK(std::fabs(r.value - longer) <= r.error_bound + 1e-14);
        }
    for (double mu : {-0.8, 0.5, 1.0})
        for (double x : {-0.9, 0.7}) {
            const auto r = sum_series(SeriesId::MuTrilog, x, 1e-9, mu);
            REQUIRE(r.converged());
            const double longer = partial_sum(SeriesId::MuTrilog, x, 4 * r.terms_used + 64, mu);
            CHECK(std::fabs(r.value - longer) <= r.error_bound + 1e-14);
        }
}

TEST_CASE("EQ16 partial sums stay within 1/(N+1) of log 2")
{
    // r_n < 1/(2n) gives a tail below sum 1/(4n^2) < 1/(4N) for n > N.
    for (std::size_t n : {10u, 100u, 1000u, 10000u}) {
        const double s = partial_sum(SeriesId::CenteredSq, 1.0, n + 1);
        CAPTURE(n);
        CHECK(constants::log2 - s > 0.0);
        CHECK(constants::log2 - s <= 1.0 / static_cast<double>(n + 1));
    }
}

TEST_CASE("cauchy_divide")
{
    const std::vector<double> ones(5, 1.0);
    const auto b = cauchy_divide(ones, 1.0, 5);
    CHECK(b == std::vector<double>{1, 2, 3, 4, 5});
    const auto c = cauchy_divide(ones, -1.0, 4);
    CHECK(c == std::vector<double>{1, 0, 1, 0});
    CHECK_THROWS_AS(cauchy_divide(ones, 1.0, 6), UsageError);

    // Coefficients of -log(1 - t)/(1 + t) are skew-harmonic-like sums.
    std::vector<double> a(50, 0.0);
    for (std::size_t k = 1; k < a.size(); ++k)
        a[k] = 1.0 / static_cast<double>(k);
    const auto d = cauchy_divide(a, -1.0, 50);
    for (std::size_t n = 1; n < 50; ++n) {
        double expect = 0.0;
        for (std::size_t k = 1; k <= n; ++k)
            expect += ((n - k) % 2 ? -1.0 : 1.0) / static_cast<double>(k);
        CHECK_CLOSE(d[n], expect, 1e-15);
    }
}

TEST_CASE("double sum of the centered coefficients")
{
    // sum_n (H_n^- - log2) t^n / (1 - t) = sum_n (sum_{k<=n} (H_k^- - log 2)) t^n.
    std::vector<double> a(200);
    for (std::size_t n = 0; n < a.size(); ++n)
        a[n] = coefficient(SeriesId::GfCentered, n);
    const auto b = cauchy_divide(a, 1.0, a.size());
    double t = 0.4, direct = 0.0, tn = 1.0;
    for (double v : b) {
        direct += v * tn;
        tn *= t;
    }
    CHECK_CLOSE(direct, sum_series(SeriesId::GfCentered, t, 1e-15).value / (1.0 - t), 1e-13);
}

TEST_CASE("alternating acceleration")
{
    std::vector<double> terms(40);
    for (std::size_t k = 0; k < terms.size(); ++k)
        terms[k] = (k % 2 ? -1.0 : 1.0) / static_cast<double>(k + 1);
    const auto r = accelerate_alternating(terms, 1e-14);
    CHECK(r.converged());
    CHECK_CLOSE(r.value, constants::log2, 1e-14);
    CHECK(std::fabs(r.value - constants::log2) <= r.error_bound);

    const std::vector<double> one{0.25};
    CHECK(accelerate_alternating(one, 1e-12).value == 0.25);

    // Terms of the EQ9 sum have one sign: no acceleration.
    std::vector<double> same(20);
    for (std::size_t n = 1; n <= same.size(); ++n)
        same[n - 1] = skew_harmonic(n) / static_cast<double>(n);
    CHECK(accelerate_alternating(same, 1e-12).status == EvalStatus::DivergentInput);
}
