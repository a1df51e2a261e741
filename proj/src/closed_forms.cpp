#include "skewlog/closed_forms.hpp"

#include "skewlog/core_numerics.hpp"
#include "skewlog/errors.hpp"
#include "skewlog/polylog.hpp"
#include "skewlog/series_engine.hpp"

#include <array>
#include <cmath>
#include <string>

namespace skewlog {

namespace {

using constants::li2_half;
using constants::li3_half;
using constants::log2;
using constants::pi_sq_over_6;
using constants::zeta3;

constexpr double kPoleWindow = 1e-8;

constexpr std::array<ClosedFormInfo, 18> kClosedForms{{
    {ClosedFormId::Eq2, "EQ2", "-1 < t < 1", false},
    {ClosedFormId::Eq3, "EQ3", "-1 < t <= 1", false},
    {ClosedFormId::Eq5, "EQ5", "-1 <= t < 1", false},
    {ClosedFormId::Eq8, "EQ8", "-1 <= t <= 1", false},
    {ClosedFormId::Eq11, "EQ11", "-1 <= t <= 1", false},
    {ClosedFormId::Eq12, "EQ12", "-1 < t < 1", false},
    {ClosedFormId::Eq13, "EQ13", "-1 <= t <= 1", false},
    {ClosedFormId::Eq17, "EQ17", "-1 <= x <= 1", false},
    {ClosedFormId::Eq20, "EQ20", "-1/3 <= x <= 1", false},
    {ClosedFormId::Eq22, "EQ22", "-1 < x < 1, -1 < mu <= 1", true},
    {ClosedFormId::Eq24, "EQ24", "-1 < x < 1, -1 < mu <= 1", true},
    {ClosedFormId::Eq25Abel, "EQ25_ABEL", "-1 < x < 1, -1 < mu <= 1", true},
    {ClosedFormId::Eq26, "EQ26", "-1 < x <= 1", false},
    {ClosedFormId::Eq27Ramanujan, "EQ27_RAMANUJAN", "-1 < x < 1", false},
    {ClosedFormId::Eq28, "EQ28", "-1 < x < 1, -1 < mu <= 1", true},
    {ClosedFormId::Eq29G, "EQ29_G", "-1 <= z <= 1", false},
    {ClosedFormId::Eq30BigG, "EQ30_BIGG", "-1 <= z <= 1", false},
    {ClosedFormId::Landen, "LANDEN", "-1 < x <= 1", false},
}};

void require(bool ok, const ClosedFormInfo& info, double t)
{
    if (!ok)
        throw DomainError(std::string(info.tag) + " requires " + std::string(info.domain) + ", got " +
                          std::to_string(t));
}

double sq(double v) { return v * v; }

double eq13(double t)
{
    if (std::fabs(1.0 - t) < kPoleWindow)
        return log2;
    return (li2(t) + log2 * log2 - 2.0 * (li2(0.5 * (1.0 + t)) - li2_half)) / (1.0 - t);
}

// Li2(2x/(1+x)) for x in (-1, 1], through li2_real when the argument is below -1.
double li2_double_ratio(double x) { return li2_real(2.0 * x / (1.0 + x)); }

} // namespace

std::span<const ClosedFormInfo> closed_form_table() noexcept { return kClosedForms; }

const ClosedFormInfo& closed_form_info(ClosedFormId id) noexcept
{
    return kClosedForms[static_cast<std::size_t>(id)];
}

double closed_form(ClosedFormId id, double t, std::optional<double> mu)
{
    const auto& info = closed_form_info(id);
    if (info.needs_mu && !mu)
        throw UsageError(std::string(info.tag) + " requires mu");
    if (!info.needs_mu && mu)
        throw UsageError(std::string(info.tag) + " takes no mu");
    const double m = mu.value_or(0.0);
    if (info.needs_mu)
        require(m > -1.0 && m <= 1.0 && std::fabs(t) < 1.0, info, t);

    switch (id) {
    case ClosedFormId::Eq2:
        require(t > -1.0 && t < 1.0, info, t);
        return std::log1p(t) / (1.0 - t);

    case ClosedFormId::Eq3:
        require(t > -1.0 && t <= 1.0, info, t);
        if (std::fabs(1.0 - t) < kPoleWindow)
            return -0.5;
        return std::log1p(0.5 * (t - 1.0)) / (1.0 - t);

    case ClosedFormId::Eq5:
        require(t >= -1.0 && t <= 1.0, info, t);
        if (t == 1.0)
            throw PoleError("EQ5 has a logarithmic pole at t = 1");
        return li2(0.5 * (1.0 - t)) - li2_half - li2(-t) - std::log1p(-t) * log2;

    case ClosedFormId::Eq8:
        require(t >= -1.0 && t <= 1.0, info, t);
        return li2(0.5 * (1.0 - t)) - li2_half - li2(-t);

    case ClosedFormId::Eq11:
        require(t >= -1.0 && t <= 1.0, info, t);
        return li2(0.5 * (1.0 - t)) - li2_half;

    case ClosedFormId::Eq12:
        require(t > -1.0 && t <= 1.0, info, t);
        if (t == 1.0)
            throw PoleError("EQ12 has a simple pole at t = 1");
        return (li2(t) + 2.0 * log2 * std::log1p(t) + 2.0 * li2_half - 2.0 * li2(0.5 * (1.0 + t))) / (1.0 - t);

    case ClosedFormId::Eq13:
    case ClosedFormId::Eq29G:
        require(t >= -1.0 && t <= 1.0, info, t);
        return eq13(t);

    case ClosedFormId::Eq17:
    case ClosedFormId::Eq30BigG:
        require(t >= -1.0 && t <= 1.0, info, t);
        return closed_form_eq17(t);

    case ClosedFormId::Eq20: {
        require(t >= -1.0 / 3.0 && t <= 1.0, info, t);
        const double l1p = std::log1p(t);
        return li3(2.0 * t / (1.0 + t)) - li3(t / (1.0 + t)) - li3(0.5 * (1.0 + t)) + li3_half - li3(t) +
               l1p * (li2(t) + li2_half + 0.5 * log2 * l1p);
    }

    case ClosedFormId::Eq22:
        return li2_real(m * (1.0 + t) / (1.0 + m)) - li2_real(m / (1.0 + m)) - std::log1p(m) * std::log1p(t);

    case ClosedFormId::Eq24:
        return li2_real((1.0 + m) * t / (1.0 + t)) - li2_real(t / (1.0 + t));

    case ClosedFormId::Eq25Abel:
        return abel_sides(m, t).rhs;

    case ClosedFormId::Eq26: {
        require(t > -1.0 && t <= 1.0, info, t);
        const double l1p = std::log1p(t);
        return -li2(0.5 * (1.0 + t)) + li2_half + li2(t) - li2(-t) + log2 * l1p - 0.5 * l1p * l1p;
    }

    case ClosedFormId::Eq27Ramanujan:
        require(t > -1.0 && t < 1.0, info, t);
        return li2_double_ratio(t) + 0.25 * sq(std::log1p(-t) - std::log1p(t));

    case ClosedFormId::Eq28:
        return li3_real((1.0 + m) * t / (1.0 + t)) - li3_real(t / (1.0 + t));

    case ClosedFormId::Landen:
        require(t > -1.0 && t <= 1.0, info, t);
        return -0.5 * sq(std::log1p(t)) - li2(-t);
    }
    return std::nan("");
}

double int_li2_over_1mt_version_a(double x)
{
    if (!(x >= -1.0 && x <= 0.5))
        throw DomainError("antiderivative version A requires -1 <= x <= 1/2");
    const double l = std::log1p(-x);
    return -2.0 * li3(-x / (1.0 - x)) - 2.0 * li3(x) + l * li2(x) + l * l * l / 3.0;
}

double int_li2_over_1mt_version_b(double x)
{
    if (!(x >= 0.0 && x < 1.0))
        throw DomainError("antiderivative version B requires 0 <= x < 1");
    return 2.0 * (li3(1.0 - x) - zeta3) - std::log1p(-x) * (li2(1.0 - x) + pi_sq_over_6);
}

double int_li2_over_1mt_version_b_as_printed(double x)
{
    if (!(x >= 0.0 && x < 1.0))
        throw DomainError("antiderivative version B requires 0 <= x < 1");
    return 2.0 * (li3(1.0 - x) - zeta3) - std::log1p(-x) * (li2(1.0 - x) + constants::pi / 6.0);
}

double int_li2_over_1mt(double x)
{
    if (x >= 1.0)
        throw DomainError("integral of Li2(t)/(1-t) diverges at t = 1");
    if (!(x >= -1.0))
        throw DomainError("integral of Li2(t)/(1-t) requires x >= -1");
    return x <= 0.5 ? int_li2_over_1mt_version_a(x) : int_li2_over_1mt_version_b(x);
}

double closed_form_eq17(double x, AntiderivativeForm form)
{
    if (!(x >= -1.0 && x <= 1.0))
        throw DomainError("EQ17 requires -1 <= x <= 1");
    const double log2_cubed = log2 * log2 * log2;
    if (x == -1.0)
        return constants::pi_sq_over_12 * log2 - 0.75 * zeta3 - log2_cubed / 3.0;
    if (std::fabs(1.0 - x) < kPoleWindow)
        return 1.5 * zeta3 - pi_sq_over_6 * log2 - log2_cubed / 3.0;

    double integral = 0.0;
    if (form == AntiderivativeForm::AsPrinted && x > 0.5)
        integral = int_li2_over_1mt_version_b_as_printed(x);
    else
        integral = int_li2_over_1mt(x);

    const double lm = std::log1p(-x); // log(1-x)
    const double lp = std::log1p(x);  // log(1+x)
    const double li2_plus = li2(0.5 * (1.0 + x));
    return integral + lm * (2.0 * li2_plus - pi_sq_over_6) + 2.0 * lp * (lm * lm - log2 * log2) +
           2.0 * log2 * (li2_plus - li2_half) - 2.0 * log2 * lm * lm + 4.0 * lm * li2(0.5 * (1.0 - x)) -
           4.0 * (li3(0.5 * (1.0 - x)) - li3_half);
}

AbelSides abel_sides(double mu, double x)
{
    if (!(std::fabs(x) < 1.0 && mu > -1.0 && mu <= 1.0))
        throw DomainError("Abel identity requires |x| < 1 and -1 < mu <= 1");
    AbelSides sides;
    sides.lhs = li2_real((1.0 + mu) * x / (1.0 + x)) + li2_real(mu * (1.0 + x) / (1.0 + mu)) - li2(mu * x);
    sides.rhs = li2_real(x / (1.0 + x)) + li2_real(mu / (1.0 + mu)) + std::log1p(mu) * std::log1p(x);
    return sides;
}

double abel_residual(double mu, double x)
{
    const auto s = abel_sides(mu, x);
    return s.lhs - s.rhs;
}

double ramanujan_eq27_residual(double x)
{
    if (!(std::fabs(x) < 1.0))
        throw DomainError("EQ27 requires |x| < 1");
    const double lhs = closed_form(ClosedFormId::Eq27Ramanujan, x);
    const auto series = sum_series(SeriesId::RamanujanOdd, x, 1e-13);
    return lhs - series.value;
}

} // namespace skewlog
