#include "skewlog/polylog.hpp"

#include "skewlog/core_numerics.hpp"
#include "skewlog/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace skewlog {

namespace {

constexpr int kMaxSeriesTerms = 200;
constexpr double kSeriesStop = 1e-17;

// sum_{n>=1} x^n / n^order for |x| <= 2/3. Terms are generated forward to
// find the cut-off and accumulated backwards, smallest first.
double reduced_series(int order, double x)
{
    std::array<double, kMaxSeriesTerms> terms{};
    double power = 1.0;
    double partial = 0.0;
    int count = 0;
    for (int n = 1; n <= kMaxSeriesTerms; ++n) {
        power *= x;
        const double nd = n;
        const double denom = order == 2 ? nd * nd : nd * nd * nd;
        const double term = power / denom;
        terms[count++] = term;
        partial += term;
        if (std::fabs(term) <= kSeriesStop * (1.0 + std::fabs(partial)))
            break;
    }
    double sum = 0.0;
    for (int i = count - 1; i >= 0; --i)
        sum += terms[i];
    return sum;
}

void require_unit_interval(const char* name, double x)
{
    if (!(x >= -1.0 && x <= 1.0))
        throw DomainError(std::string(name) + "(x) requires x in [-1, 1], got " + std::to_string(x));
}

void require_real_ray(const char* name, double x)
{
    if (!(x <= 1.0))
        throw DomainError(std::string(name) + "(x) requires x in (-inf, 1], got " + std::to_string(x));
}

double li2_unit(double x)
{
    if (x == 0.0)
        return 0.0;
    if (x == 1.0)
        return constants::pi_sq_over_6;
    if (x == 0.5)
        return constants::li2_half;
    if (x == -1.0)
        return constants::li2_minus1;

    if (std::fabs(x) <= 0.5)
        return reduced_series(2, x);
    if (x > 0.5) {
        // Euler reflection
        return constants::pi_sq_over_6 - std::log(x) * std::log1p(-x) - reduced_series(2, 1.0 - x);
    }
    // Landen, x/(x-1) in (1/3, 1/2]
    const double l = std::log1p(-x);
    return -reduced_series(2, x / (x - 1.0)) - 0.5 * l * l;
}

double li3_unit(double x)
{
    if (x == 0.0)
        return 0.0;
    if (x == 1.0)
        return constants::zeta3;
    if (x == 0.5)
        return constants::li3_half;
    if (x == -1.0)
        return constants::li3_minus1;

    if (std::fabs(x) <= 0.5)
        return reduced_series(3, x);
    if (x < -0.5) {
        // Li3(y) + Li3(1-y) + Li3(y/(y-1)) = zeta(3) + L^3/6 + zeta(2) L - log(y) L^2 / 2
        // with y = x/(x-1) in (1/3, 1/2], y/(y-1) = x and L = log(1-y) = -log(1-x).
        const double y = x / (x - 1.0);
        const double big_l = -std::log1p(-x);
        return constants::zeta3 + big_l * big_l * big_l / 6.0 + constants::pi_sq_over_6 * big_l -
               0.5 * std::log(y) * big_l * big_l - reduced_series(3, y) - reduced_series(3, 1.0 - y);
    }
    // Li3(x) + Li3(1-x) + Li3(1-1/x) = zeta(3) + log^3 x / 6 + zeta(2) log x - log^2 x log(1-x) / 2
    const double lx = std::log(x);
    return constants::zeta3 + lx * lx * lx / 6.0 + constants::pi_sq_over_6 * lx -
           0.5 * lx * lx * std::log1p(-x) - reduced_series(3, 1.0 - x) - li3_unit(1.0 - 1.0 / x);
}

} // namespace

PolylogOrder::PolylogOrder(int m)
    : m_(m)
{
    if (m != 2 && m != 3)
        throw UsageError("polylog order must be 2 or 3, got " + std::to_string(m));
}

double li2(double x)
{
    require_unit_interval("li2", x);
    return li2_unit(x);
}

double li3(double x)
{
    require_unit_interval("li3", x);
    return li3_unit(x);
}

double li2_real(double x)
{
    require_real_ray("li2", x);
    if (x >= -1.0)
        return li2_unit(x);
    const double l = std::log(-x);
    return -constants::pi_sq_over_6 - 0.5 * l * l - li2_unit(1.0 / x);
}

double li3_real(double x)
{
    require_real_ray("li3", x);
    if (x >= -1.0)
        return li3_unit(x);
    const double l = std::log(-x);
    return li3_unit(1.0 / x) - constants::pi_sq_over_6 * l - l * l * l / 6.0;
}

double polylog(PolylogOrder m, double x) { return m.value() == 2 ? li2(x) : li3(x); }

double polylog_real(PolylogOrder m, double x) { return m.value() == 2 ? li2_real(x) : li3_real(x); }

double polylog_series_oracle(PolylogOrder m, double x, std::size_t n_terms)
{
    if (!(std::fabs(x) < 1.0))
        throw DomainError("polylog_series_oracle requires |x| < 1");
    double sum = 0.0;
    double power = 1.0;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        power *= x;
        sum += power / std::pow(static_cast<double>(n), m.value());
    }
    return sum;
}

} // namespace skewlog
