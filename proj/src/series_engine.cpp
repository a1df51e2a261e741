#include "skewlog/series_engine.hpp"

#include "skewlog/core_numerics.hpp"
#include "skewlog/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace skewlog {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<SeriesInfo, 13> kSeries{{
    {SeriesId::GfSkew, "GF_SKEW", "EQ2_LHS", "(2)", "|t| < 1", false, 0},
    {SeriesId::GfCentered, "GF_CENTERED", "EQ3_LHS", "(3)", "-1 < t <= 1", false, 0},
    {SeriesId::SkewOverN, "SKEW_OVER_N", "EQ5_LHS", "(5)", "-1 <= t < 1", false, 0},
    {SeriesId::CenteredOverN, "CENTERED_OVER_N", "EQ8_LHS", "(8)", "|t| <= 1", false, 0},
    {SeriesId::CenteredShift, "CENTERED_SHIFT", "EQ11_LHS", "(11)", "|t| <= 1", false, 1},
    {SeriesId::SkewSq, "SKEW_SQ", "EQ12_LHS", "(12)", "|t| < 1", false, 0},
    {SeriesId::CenteredSq, "CENTERED_SQ", "EQ13_LHS", "(13)", "|t| <= 1", false, 0},
    {SeriesId::CenteredSqShift, "CENTERED_SQ_SHIFT", "EQ17_LHS", "(17)", "|t| <= 1", false, 1},
    {SeriesId::SkewOverNsq, "SKEW_OVER_NSQ", "EQ20_LHS", "(20)", "|t| <= 1", false, 1},
    {SeriesId::MuLewin, "MU_LEWIN", "EQ22_LHS", "(22)", "|t| < 1, |mu| <= 1", true, 1},
    {SeriesId::MuDilog, "MU_DILOG", "EQ24_RHS", "(24)", "|t| < 1, |mu| <= 1", true, 0},
    {SeriesId::MuTrilog, "MU_TRILOG", "EQ28_RHS", "(28)", "|t| < 1, |mu| <= 1", true, 0},
    {SeriesId::RamanujanOdd, "RAMANUJAN_ODD", "EQ27_RHS", "(27)", "|t| < 1", false, 0},
}};

double centered(const HarmonicCache& cache, std::size_t n) { return cache.skew(n) - constants::log2; }

// |H_n^- - log 2|, whose sign is (-1)^(n-1) (negative at n = 0).
double centered_abs(const HarmonicCache& cache, std::size_t n) { return std::fabs(centered(cache, n)); }

void check_mu(SeriesId id, std::optional<double> mu)
{
    const auto& info = series_info(id);
    if (info.needs_mu && !mu)
        throw UsageError(std::string(info.tag) + " requires mu");
    if (!info.needs_mu && mu)
        throw UsageError(std::string(info.tag) + " takes no mu");
    if (mu && !(std::fabs(*mu) <= 1.0))
        throw DomainError(std::string(info.tag) + " requires |mu| <= 1");
}

// Yields a_0, a_1, ... in order. The mu-series and the odd harmonic series
// carry running sums, so sequential access is O(1) per coefficient.
class CoefficientStream {
public:
    CoefficientStream(SeriesId id, std::optional<double> mu)
        : id_(id)
        , mu_(mu.value_or(0.0))
        , cache_(default_harmonic_cache())
    {
    }

    double next()
    {
        const std::size_t n = n_++;
        const double nd = static_cast<double>(n);
        switch (id_) {
        case SeriesId::GfSkew: return cache_.skew(n);
        case SeriesId::GfCentered: return centered(cache_, n);
        case SeriesId::SkewOverN: return n == 0 ? 0.0 : cache_.skew(n) / nd;
        case SeriesId::CenteredOverN: return n == 0 ? 0.0 : centered(cache_, n) / nd;
        case SeriesId::CenteredShift: return centered(cache_, n) / (nd + 1.0);
        case SeriesId::SkewSq: {
            const double s = cache_.skew(n);
            return s * s;
        }
        case SeriesId::CenteredSq: {
            const double c = centered(cache_, n);
            return c * c;
        }
        case SeriesId::CenteredSqShift: {
            const double c = centered(cache_, n);
            return c * c / (nd + 1.0);
        }
        case SeriesId::SkewOverNsq: return n == 0 ? 0.0 : cache_.skew(n) / ((nd + 1.0) * (nd + 1.0));
        case SeriesId::MuLewin:
        case SeriesId::MuDilog:
        case SeriesId::MuTrilog: return next_mu(n);
        case SeriesId::RamanujanOdd: return next_odd(n);
        }
        return 0.0;
    }

private:
    double next_mu(std::size_t n)
    {
        if (n == 0)
            return 0.0;
        const double nd = static_cast<double>(n);
        skew_mu_ += mu_power_ / nd; // H_n^-(mu)
        mu_power_ *= -mu_;
        const double sign = (n % 2 == 1) ? 1.0 : -1.0; // (-1)^(n-1)
        switch (id_) {
        case SeriesId::MuLewin: return sign * mu_ * skew_mu_ / (nd + 1.0);
        case SeriesId::MuDilog: return sign * mu_ * skew_mu_ / nd;
        default:
            trilog_inner_ += skew_mu_ / nd;
            return sign * mu_ * trilog_inner_ / nd;
        }
    }

    double next_odd(std::size_t m)
    {
        if (m % 2 == 0)
            return 0.0;
        const double md = static_cast<double>(m);
        odd_harmonic_ += 1.0 / md;
        return 2.0 * odd_harmonic_ / md;
    }

    SeriesId id_;
    double mu_;
    const HarmonicCache& cache_;
    std::size_t n_ = 0;
    double mu_power_ = 1.0;
    double skew_mu_ = 0.0;
    double trilog_inner_ = 0.0;
    double odd_harmonic_ = 0.0;
};

// Upper bound on |H_m^-(mu)| uniform in m, for mu != -1 (where H_m^-(-1) = H_m
// is unbounded and the callers use 1 + log m instead).
double skew_mu_bound(double mu)
{
    const double a = std::fabs(mu);
    if (mu == 1.0)
        return 1.0;
    return a == 0.0 ? 1.0 : -std::log1p(-a) / a;
}

// Envelope E(n) >= sup_{m >= n} |a_m|, valid for n >= 3.
double coefficient_envelope(SeriesId id, std::size_t n, double mu)
{
    const double nd = static_cast<double>(n);
    const double log_growth = 1.0 + std::log(nd);
    const double a = std::fabs(mu);
    switch (id) {
    case SeriesId::GfSkew:
    case SeriesId::SkewSq: return 1.0;
    case SeriesId::GfCentered: return 1.0 / (nd + 1.0);
    case SeriesId::SkewOverN: return 1.0 / nd;
    case SeriesId::CenteredOverN: return 1.0 / (nd * (nd + 1.0));
    case SeriesId::CenteredShift:
    case SeriesId::CenteredSq:
    case SeriesId::SkewOverNsq: return 1.0 / ((nd + 1.0) * (nd + 1.0));
    case SeriesId::CenteredSqShift: return 1.0 / ((nd + 1.0) * (nd + 1.0) * (nd + 1.0));
    case SeriesId::MuLewin:
    case SeriesId::MuDilog: {
        // |H_m^-(-1)| = H_m <= 1 + log m; (1 + log m)/m is decreasing for m >= 2.
        const double b = mu == -1.0 ? log_growth : skew_mu_bound(mu);
        return a * b / nd;
    }
    case SeriesId::MuTrilog: {
        // sum_{k<=m} H_k^-(mu)/k <= B (1 + log m), or (1 + log m)^2 for mu = -1;
        // both divided by m are decreasing for m >= 3.
        if (mu == -1.0)
            return a * log_growth * log_growth / nd;
        return a * skew_mu_bound(mu) * log_growth / nd;
    }
    case SeriesId::RamanujanOdd:
        // 1 + 1/3 + ... + 1/(2j-1) <= 1 + log(2j-1)/2
        return (2.0 + std::log(nd)) / nd;
    }
    return kInf;
}

bool inside_domain(SeriesId id, double t)
{
    const double a = std::fabs(t);
    if (!(a <= 1.0))
        return false;
    if (a < 1.0)
        return true;
    switch (id) {
    case SeriesId::GfCentered: return t == 1.0;
    case SeriesId::SkewOverN: return t == -1.0;
    case SeriesId::CenteredOverN:
    case SeriesId::CenteredShift:
    case SeriesId::CenteredSq:
    case SeriesId::CenteredSqShift:
    case SeriesId::SkewOverNsq: return true;
    default: return false;
    }
}

EvalResult divergent()
{
    return {std::numeric_limits<double>::quiet_NaN(), kInf, 0, EvalStatus::DivergentInput};
}

// Neumaier compensated accumulator.
struct Accumulator {
    double sum = 0.0;
    double carry = 0.0;
    double abs_sum = 0.0;
    std::size_t count = 0;

    void add(double x) noexcept
    {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
        abs_sum += std::fabs(x);
        ++count;
    }
    double total() const noexcept { return sum + carry; }
};

EvalResult sum_inside_disc(SeriesId id, double t, double tol, std::optional<double> mu, std::size_t max_terms)
{
    const double a = std::fabs(t);
    const int shift = series_info(id).shift;
    const double prefactor = shift == 1 ? t : 1.0;
    const double mu_value = mu.value_or(0.0);

    CoefficientStream stream(id, mu);
    Accumulator acc;
    double power = 1.0;
    double power_sum = 0.0;
    double tail = kInf;
    bool done = false;
    for (std::size_t n = 0; n < max_terms; ++n) {
        acc.add(stream.next() * power);
        power_sum += std::fabs(power);
        power *= t;
        if (n >= 3) {
            tail = coefficient_envelope(id, n + 1, mu_value) * std::fabs(power) / (1.0 - a);
            // Coefficients carry absolute errors of order eps (log 2 scale).
            const double rounding = 4.0 * kEps * (acc.abs_sum + power_sum);
            if ((tail + rounding) * std::fabs(prefactor) <= tol) {
                done = true;
                break;
            }
        }
        if (power == 0.0) {
            tail = 0.0;
            done = true;
            break;
        }
    }
    const double rounding = 4.0 * kEps * (acc.abs_sum + power_sum);
    EvalResult result;
    result.value = prefactor * acc.total();
    result.error_bound = (tail + rounding) * std::fabs(prefactor);
    result.terms_used = acc.count;
    result.status = done && result.error_bound <= tol ? EvalStatus::Converged : EvalStatus::MaxTerms;
    return result;
}

// --- endpoint machinery -------------------------------------------------

constexpr std::size_t kMaxAcceleratedTerms = 300;
const double kCvzRate = 3.0 + std::sqrt(8.0);

// Bounds on sum_{m > M} 1/m^p for p >= 2 from convexity of x^-p: the
// midpoint rule underestimates, the trapezoid rule overestimates.
struct Bracket {
    double lo;
    double hi;
};

Bracket zeta_tail(int p, double big_m)
{
    const double q = p - 1.0;
    const double lo = std::pow(big_m + 1.0, -q) / q + 0.5 * std::pow(big_m + 1.0, -static_cast<double>(p));
    const double hi = std::pow(big_m + 0.5, -q) / q;
    return {lo, hi};
}

// A part of an endpoint sum, term(n) for n = first, first + 1, ...
struct AlternatingPart {
    std::size_t first;
    std::function<double(std::size_t)> term;
};

struct SignedPart {
    std::size_t first;
    std::function<double(std::size_t)> term;
    std::function<Bracket(std::size_t)> tail; // bounds on sum_{n > M} term(n)
};

struct EndpointPlan {
    std::vector<AlternatingPart> alternating;
    std::vector<SignedPart> single_signed;
};

Bracket negate(Bracket b) { return {-b.hi, -b.lo}; }
Bracket scale(Bracket b, double s) { return s >= 0 ? Bracket{s * b.lo, s * b.hi} : Bracket{s * b.hi, s * b.lo}; }

// Bounds used below, all from 1/(2(n+1)) <= |H_n^- - log 2| <= 1/(2n), n >= 1.
std::optional<EndpointPlan> endpoint_plan(SeriesId id, double t)
{
    const auto& c = default_harmonic_cache();
    const auto r = [&c](std::size_t n) { return centered_abs(c, n); };
    const auto sgn = [](std::size_t n) { return (n % 2 == 0) ? 1.0 : -1.0; }; // (-1)^n
    EndpointPlan plan;
    const double l2 = constants::log2;

    switch (id) {
    case SeriesId::GfCentered:
        if (t != 1.0)
            return std::nullopt;
        plan.alternating.push_back({0, [&c](std::size_t n) { return centered(c, n); }});
        return plan;

    case SeriesId::SkewOverN:
        if (t != -1.0)
            return std::nullopt;
        // H_n^- (-1)^n / n = log 2 (-1)^n / n - r_n / n
        plan.alternating.push_back({1, [=](std::size_t n) { return l2 * sgn(n) / static_cast<double>(n); }});
        plan.single_signed.push_back({1, [=](std::size_t n) { return -r(n) / static_cast<double>(n); },
                                      [](std::size_t m) {
                                          const double md = static_cast<double>(m);
                                          const Bracket upper = scale(zeta_tail(2, md), 0.5);
                                          return negate(Bracket{0.5 / (md + 1.0), upper.hi});
                                      }});
        return plan;

    case SeriesId::CenteredOverN:
        if (t == 1.0) {
            plan.alternating.push_back(
                {1, [&c](std::size_t n) { return centered(c, n) / static_cast<double>(n); }});
        } else {
            // (H_n^- - log 2)(-1)^n / n = -r_n / n; 1/(2n(n+1)) <= r_n/n <= 1/(2n^2)
            plan.single_signed.push_back({1, [=](std::size_t n) { return -r(n) / static_cast<double>(n); },
                                          [](std::size_t m) {
                                              const double md = static_cast<double>(m);
                                              return negate(Bracket{0.5 / (md + 1.0), 0.5 * zeta_tail(2, md).hi});
                                          }});
        }
        return plan;

    case SeriesId::CenteredShift:
        if (t == 1.0) {
            plan.alternating.push_back(
                {0, [&c](std::size_t n) { return centered(c, n) / (static_cast<double>(n) + 1.0); }});
        } else {
            // -(-1)^n (H_n^- - log 2)/(n+1) = r_n/(n+1), in [1/(2(n+1)^2), 1/(2n(n+1))]
            plan.single_signed.push_back({0, [=](std::size_t n) { return r(n) / (static_cast<double>(n) + 1.0); },
                                          [](std::size_t m) {
                                              const double md = static_cast<double>(m);
                                              return Bracket{0.5 * zeta_tail(2, md + 1.0).lo, 0.5 / (md + 1.0)};
                                          }});
        }
        return plan;

    case SeriesId::CenteredSq:
        if (t == 1.0) {
            plan.single_signed.push_back({0, [=](std::size_t n) { return r(n) * r(n); },
                                          [](std::size_t m) {
                                              const double md = static_cast<double>(m);
                                              return Bracket{0.25 * zeta_tail(2, md + 1.0).lo,
                                                             0.25 * zeta_tail(2, md).hi};
                                          }});
        } else {
            plan.alternating.push_back({0, [=](std::size_t n) { return sgn(n) * r(n) * r(n); }});
        }
        return plan;

    case SeriesId::CenteredSqShift:
        if (t == 1.0) {
            plan.single_signed.push_back({0, [=](std::size_t n) { return r(n) * r(n) / (static_cast<double>(n) + 1.0); },
                                          [](std::size_t m) {
                                              const double md = static_cast<double>(m);
                                              return Bracket{0.25 * zeta_tail(3, md + 1.0).lo,
                                                             0.25 * zeta_tail(3, md).hi};
                                          }});
        } else {
            plan.alternating.push_back(
                {0, [=](std::size_t n) { return -sgn(n) * r(n) * r(n) / (static_cast<double>(n) + 1.0); }});
        }
        return plan;

    case SeriesId::SkewOverNsq: {
        const auto inv_sq = [](std::size_t n) {
            const double np1 = static_cast<double>(n) + 1.0;
            return 1.0 / (np1 * np1);
        };
        if (t == 1.0) {
            plan.single_signed.push_back({1, [=](std::size_t n) { return l2 * inv_sq(n); },
                                          [=](std::size_t m) {
                                              return scale(zeta_tail(2, static_cast<double>(m) + 1.0), l2);
                                          }});
            plan.alternating.push_back({1, [&c, inv_sq](std::size_t n) { return centered(c, n) * inv_sq(n); }});
        } else {
            // -(-1)^n H_n^-/(n+1)^2 = -log 2 (-1)^n/(n+1)^2 + r_n/(n+1)^2
            plan.alternating.push_back({1, [=](std::size_t n) { return -l2 * sgn(n) * inv_sq(n); }});
            plan.single_signed.push_back({1, [=](std::size_t n) { return r(n) * inv_sq(n); },
                                          [](std::size_t m) {
                                              const double md = static_cast<double>(m);
                                              return Bracket{0.5 * zeta_tail(3, md + 1.0).lo,
                                                             0.5 * zeta_tail(3, md).hi};
                                          }});
        }
        return plan;
    }

    default: return std::nullopt;
    }
}

double cvz_sum(std::span<const double> magnitudes)
{
    const double n = static_cast<double>(magnitudes.size());
    double d = std::pow(kCvzRate, n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    for (std::size_t k = 0; k < magnitudes.size(); ++k) {
        const double kd = static_cast<double>(k);
        c = b - c;
        s += c * magnitudes[k];
        b = (kd + n) * (kd - n) * b / ((kd + 0.5) * (kd + 1.0));
    }
    return s / d;
}

EvalResult sum_alternating_part(const AlternatingPart& part, double tol)
{
    const double first = part.term(part.first);
    std::vector<double> terms;
    std::size_t n_terms = 2;
    if (first != 0.0 && tol > 0.0)
        n_terms = static_cast<std::size_t>(std::ceil(std::log(8.0 * std::fabs(first) / tol) / std::log(kCvzRate)));
    n_terms = std::clamp<std::size_t>(n_terms + 2, 8, kMaxAcceleratedTerms);
    terms.reserve(n_terms);
    for (std::size_t k = 0; k < n_terms; ++k)
        terms.push_back(part.term(part.first + k));
    return accelerate_alternating(terms, tol);
}

EvalResult sum_signed_part(const SignedPart& part, double tol, std::size_t max_terms)
{
    Accumulator acc;
    std::size_t n = part.first;
    std::size_t last = part.first + 63;
    while (true) {
        for (; n <= last; ++n)
            acc.add(part.term(n));
        const Bracket tail = part.tail(last);
        const double half_width = 0.5 * (tail.hi - tail.lo);
        const double rounding = 4.0 * kEps * acc.abs_sum;
        if (half_width + rounding <= tol || last + 1 >= max_terms) {
            EvalResult result;
            result.value = acc.total() + 0.5 * (tail.lo + tail.hi);
            result.error_bound = half_width + rounding;
            result.terms_used = acc.count;
            result.status = result.error_bound <= tol ? EvalStatus::Converged : EvalStatus::MaxTerms;
            return result;
        }
        last = std::min(2 * last + 1, max_terms - 1);
    }
}

EvalResult sum_at_endpoint(const EndpointPlan& plan, double tol, std::size_t max_terms)
{
    const std::size_t parts = plan.alternating.size() + plan.single_signed.size();
    const double part_tol = tol / static_cast<double>(parts);
    EvalResult total{0.0, 0.0, 0, EvalStatus::Converged};
    const auto merge = [&total](const EvalResult& r) {
        total.value += r.value;
        total.error_bound += r.error_bound;
        total.terms_used += r.terms_used;
        if (r.status != EvalStatus::Converged)
            total.status = r.status;
    };
    for (const auto& part : plan.alternating)
        merge(sum_alternating_part(part, part_tol));
    for (const auto& part : plan.single_signed)
        merge(sum_signed_part(part, part_tol, max_terms));
    if (total.status == EvalStatus::Converged && total.error_bound > tol)
        total.status = EvalStatus::MaxTerms;
    return total;
}

} // namespace

std::span<const SeriesInfo> series_table() noexcept { return kSeries; }

const SeriesInfo& series_info(SeriesId id) noexcept { return kSeries[static_cast<std::size_t>(id)]; }

SeriesId parse_series_id(std::string_view name)
{
    for (const auto& info : kSeries)
        if (info.tag == name || info.alias == name)
            return info.id;
    throw LookupError("unknown series '" + std::string(name) + "'");
}

double coefficient(SeriesId id, std::size_t n, std::optional<double> mu)
{
    check_mu(id, mu);
    CoefficientStream stream(id, mu);
    if (!series_info(id).needs_mu && id != SeriesId::RamanujanOdd) {
        // Random access through the harmonic cache.
        const auto& c = default_harmonic_cache();
        const double nd = static_cast<double>(n);
        switch (id) {
        case SeriesId::GfSkew: return c.skew(n);
        case SeriesId::GfCentered: return centered(c, n);
        case SeriesId::SkewOverN: return n == 0 ? 0.0 : c.skew(n) / nd;
        case SeriesId::CenteredOverN: return n == 0 ? 0.0 : centered(c, n) / nd;
        case SeriesId::CenteredShift: return centered(c, n) / (nd + 1.0);
        case SeriesId::SkewSq: return c.skew(n) * c.skew(n);
        case SeriesId::CenteredSq: return centered(c, n) * centered(c, n);
        case SeriesId::CenteredSqShift: return centered(c, n) * centered(c, n) / (nd + 1.0);
        case SeriesId::SkewOverNsq: return n == 0 ? 0.0 : c.skew(n) / ((nd + 1.0) * (nd + 1.0));
        default: break;
        }
    }
    double value = 0.0;
    for (std::size_t k = 0; k <= n; ++k)
        value = stream.next();
    return value;
}

EvalResult sum_series(SeriesId id, double t, double tol, std::optional<double> mu, const SeriesOptions& options)
{
    check_mu(id, mu);
    if (!(tol > 0.0))
        throw UsageError("tolerance must be positive");
    if (!inside_domain(id, t))
        return divergent();
    if (t == 0.0)
        return {series_info(id).shift == 0 ? coefficient(id, 0, mu) : 0.0, 0.0, 1, EvalStatus::Converged};

    const std::size_t max_terms =
        std::min(options.max_terms, default_harmonic_cache().limit() + 1);
    if (max_terms < 8)
        throw UsageError("max_terms must be at least 8");

    if (std::fabs(t) < 1.0)
        return sum_inside_disc(id, t, tol, mu, max_terms);

    const auto plan = endpoint_plan(id, t);
    if (!plan)
        return divergent();
    return sum_at_endpoint(*plan, tol, max_terms);
}

double partial_sum(SeriesId id, double t, std::size_t n_terms, std::optional<double> mu)
{
    check_mu(id, mu);
    CoefficientStream stream(id, mu);
    Accumulator acc;
    double power = 1.0;
    for (std::size_t n = 0; n < n_terms; ++n) {
        acc.add(stream.next() * power);
        power *= t;
    }
    return (series_info(id).shift == 1 ? t : 1.0) * acc.total();
}

std::vector<double> cauchy_divide(std::span<const double> coeffs, double lambda, std::size_t n_out)
{
    if (coeffs.size() < n_out)
        throw UsageError("cauchy_divide needs at least n_out coefficients");
    std::vector<double> out(n_out);
    double running = 0.0;
    for (std::size_t n = 0; n < n_out; ++n) {
        running = lambda * running + coeffs[n];
        out[n] = running;
    }
    return out;
}

EvalResult accelerate_alternating(std::span<const double> terms, double tol)
{
    if (terms.empty())
        return {0.0, kInf, 0, EvalStatus::MaxTerms};
    if (terms.size() == 1) {
        const double c = terms[0];
        return {c, std::fabs(c), 1, std::fabs(c) <= tol ? EvalStatus::Converged : EvalStatus::MaxTerms};
    }

    bool alternating = true;
    bool monotone = true;
    double abs_sum = 0.0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        abs_sum += std::fabs(terms[k]);
        if (k + 1 < terms.size()) {
            if (!(terms[k] * terms[k + 1] < 0.0))
                alternating = false;
            if (std::fabs(terms[k + 1]) > std::fabs(terms[k]))
                monotone = false;
        }
    }
    if (!alternating) {
        Accumulator acc;
        for (double x : terms)
            acc.add(x);
        return {acc.total(), kInf, terms.size(), EvalStatus::DivergentInput};
    }

    const std::size_t n = std::min(terms.size(), kMaxAcceleratedTerms);
    std::vector<double> magnitudes(n);
    for (std::size_t k = 0; k < n; ++k)
        magnitudes[k] = std::fabs(terms[k]);
    const double sign = terms[0] > 0.0 ? 1.0 : -1.0;

    const double value = sign * cvz_sum(magnitudes);
    const double rounding = 4.0 * kEps * abs_sum;
    double bound = 2.0 * magnitudes[0] / std::pow(kCvzRate, static_cast<double>(n));
    if (!monotone) {
        const double previous = sign * cvz_sum(std::span<const double>(magnitudes).first(n - 1));
        bound = std::max(bound, std::fabs(value - previous));
    }
    EvalResult result;
    result.value = value;
    result.error_bound = bound + rounding;
    result.terms_used = n;
    result.status = result.error_bound <= tol ? EvalStatus::Converged : EvalStatus::MaxTerms;
    return result;
}

} // namespace skewlog
