#include "skewlog/core_numerics.hpp"

#include "skewlog/errors.hpp"

#include <cmath>
#include <string>

namespace skewlog {

namespace {

constexpr std::array<ConstantEntry, 11> kConstants{{
    {ConstantName::Log2, "LOG2", constants::log2},
    {ConstantName::Pi, "PI", constants::pi},
    {ConstantName::PiSqOver6, "PI_SQ_OVER_6", constants::pi_sq_over_6},
    {ConstantName::PiSqOver12, "PI_SQ_OVER_12", constants::pi_sq_over_12},
    {ConstantName::Zeta3, "ZETA3", constants::zeta3},
    {ConstantName::CatalanG, "CATALAN_G", constants::catalan},
    {ConstantName::EulerGamma, "EULER_GAMMA", constants::euler_gamma},
    {ConstantName::Li2Half, "LI2_HALF", constants::li2_half},
    {ConstantName::Li3Half, "LI3_HALF", constants::li3_half},
    {ConstantName::Li2Minus1, "LI2_MINUS1", constants::li2_minus1},
    {ConstantName::Li3Minus1, "LI3_MINUS1", constants::li3_minus1},
}};

// Neumaier's variant of Kahan summation; total() is the compensated sum.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) noexcept
    {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double total() const noexcept { return sum + carry; }
};

} // namespace

std::span<const ConstantEntry> constant_table() noexcept { return kConstants; }

double constant(ConstantName id) noexcept
{
    for (const auto& e : kConstants)
        if (e.id == id)
            return e.value;
    return std::nan("");
}

double constant(std::string_view name)
{
    for (const auto& e : kConstants)
        if (e.name == name)
            return e.value;
    throw LookupError("unknown constant '" + std::string(name) + "'");
}

HarmonicCache::HarmonicCache(std::size_t limit)
    : limit_(limit)
{
    values_h_.resize(limit + 1);
    values_h2_.resize(limit + 1);
    values_skew_.resize(limit + 1);

    CompensatedSum h, h2, skew;
    values_h_[0] = values_h2_[0] = values_skew_[0] = 0.0;
    for (std::size_t k = 1; k <= limit; ++k) {
        const double kd = static_cast<double>(k);
        const double inv = 1.0 / kd;
        h.add(inv);
        h2.add(1.0 / (kd * kd));
        skew.add((k % 2 == 1) ? inv : -inv);
        values_h_[k] = h.total();
        values_h2_[k] = h2.total();
        values_skew_[k] = skew.total();
    }
}

void HarmonicCache::check(std::size_t n) const
{
    if (n > limit_)
        throw UsageError("harmonic index " + std::to_string(n) + " exceeds cache limit " +
                         std::to_string(limit_));
}

double HarmonicCache::h(std::size_t n) const
{
    check(n);
    return values_h_[n];
}

double HarmonicCache::h2(std::size_t n) const
{
    check(n);
    return values_h2_[n];
}

double HarmonicCache::skew(std::size_t n) const
{
    check(n);
    return values_skew_[n];
}

const HarmonicCache& default_harmonic_cache()
{
    static const HarmonicCache cache;
    return cache;
}

double harmonic(std::size_t n) { return default_harmonic_cache().h(n); }
double harmonic2(std::size_t n) { return default_harmonic_cache().h2(n); }
double skew_harmonic(std::size_t n) { return default_harmonic_cache().skew(n); }

double skew_harmonic_mu(std::size_t n, double mu)
{
    if (n == 0)
        throw UsageError("skew_harmonic_mu requires n >= 1");
    if (!(std::fabs(mu) <= 1.0))
        throw DomainError("skew_harmonic_mu requires |mu| <= 1");
    if (mu == 1.0)
        return skew_harmonic(n);

    CompensatedSum sum;
    double power = 1.0; // (-mu)^(k-1)
    for (std::size_t k = 1; k <= n; ++k) {
        sum.add(power / static_cast<double>(k));
        power *= -mu;
    }
    return sum.total();
}

double digamma_half_diff(std::size_t n)
{
    if (n == 0)
        throw UsageError("digamma_half_diff requires n >= 1");

    // With psi~(x) = psi(x) + gamma:
    //   psi~(m + 1)   = H_m
    //   psi~(m + 1/2) = -2 log 2 + 2 (1 + 1/3 + ... + 1/(2m-1)),
    // and 1 + 1/3 + ... + 1/(2m-1) = H_2m - H_m / 2.
    const auto& cache = default_harmonic_cache();
    const auto odd_harmonic = [&](std::size_t m) { return cache.h(2 * m) - 0.5 * cache.h(m); };
    const auto psi_half = [&](std::size_t m) { return -2.0 * constants::log2 + 2.0 * odd_harmonic(m); };

    const std::size_t m = n / 2;
    if (n % 2 == 1)
        return cache.h(m) - psi_half(m); // psi(m+1) - psi(m+1/2)
    return psi_half(m) - cache.h(m - 1); // psi(m+1/2) - psi(m)
}

} // namespace skewlog
