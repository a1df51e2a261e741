#ifndef SKEWLOG_CORE_NUMERICS_HPP
#define SKEWLOG_CORE_NUMERICS_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace skewlog {

namespace constants {
inline constexpr double log2 = 0.693147180559945309417232121458176568;
inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double pi_sq_over_6 = 1.64493406684822643647241516664602519;
inline constexpr double pi_sq_over_12 = 0.822467033424113218236207583323012595;
inline constexpr double zeta3 = 1.20205690315959428539973816151144999;
inline constexpr double catalan = 0.915965594177219015054603514932384111;
inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;
inline constexpr double li2_half = 0.582240526465012505902656320159680109;
inline constexpr double li3_half = 0.537213193608040200940623225594965827;
inline constexpr double li2_minus1 = -0.822467033424113218236207583323012595;
inline constexpr double li3_minus1 = -0.901542677369695714049803621133587493;
} // namespace constants

enum class ConstantName {
    Log2,
    Pi,
    PiSqOver6,
    PiSqOver12,
    Zeta3,
    CatalanG,
    EulerGamma,
    Li2Half,
    Li3Half,
    Li2Minus1,
    Li3Minus1,
};

struct ConstantEntry {
    ConstantName id;
    std::string_view name;
    double value;
};

// All constants in declaration order, keyed by their upper-case names
// (LOG2, PI, ..., LI3_MINUS1).
std::span<const ConstantEntry> constant_table() noexcept;

double constant(ConstantName id) noexcept;

// Throws LookupError for an unrecognised name.
double constant(std::string_view name);

inline constexpr std::size_t kDefaultHarmonicLimit = 1'000'000;

// Prefix sums H_n, H_n^(2) and the skew-harmonic numbers H_n^- for
// n = 0..limit. Immutable after construction.
class HarmonicCache {
public:
    explicit HarmonicCache(std::size_t limit = kDefaultHarmonicLimit);

    std::size_t limit() const noexcept { return limit_; }

    // All three throw UsageError when n > limit().
    double h(std::size_t n) const;
    double h2(std::size_t n) const;
    double skew(std::size_t n) const;

    std::span<const double> values_h() const noexcept { return values_h_; }
    std::span<const double> values_h2() const noexcept { return values_h2_; }
    std::span<const double> values_skew() const noexcept { return values_skew_; }

private:
    void check(std::size_t n) const;

    std::size_t limit_;
    std::vector<double> values_h_;
    std::vector<double> values_h2_;
    std::vector<double> values_skew_;
};

// Process-wide cache with kDefaultHarmonicLimit entries, built on first use.
const HarmonicCache& default_harmonic_cache();

double harmonic(std::size_t n);
double harmonic2(std::size_t n);
double skew_harmonic(std::size_t n);

// H_n^-(mu) = sum_{k=1..n} (-mu)^(k-1)/k, with H_n^-(1) = H_n^-.
// Requires n >= 1 and |mu| <= 1.
double skew_harmonic_mu(std::size_t n, double mu);

// psi((n+1)/2) - psi(n/2) for n >= 1 from the half-integer recurrences.
double digamma_half_diff(std::size_t n);

} // namespace skewlog

#endif
