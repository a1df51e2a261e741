#ifndef SKEWLOG_SERIES_ENGINE_HPP
#define SKEWLOG_SERIES_ENGINE_HPP

#include "skewlog/eval_result.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace skewlog {

// Power series with skew-harmonic coefficients. A series with shift s is
// t^s * sum_{n>=0} a_n t^n, so coefficient(id, n) is always the weight of
// the n-th skew-harmonic term as the series is usually written.
enum class SeriesId {
    GfSkew,          // sum H_n^- t^n
    GfCentered,      // sum (H_n^- - log 2) t^n
    SkewOverN,       // sum H_n^- t^n / n
    CenteredOverN,   // sum (H_n^- - log 2) t^n / n
    CenteredShift,   // sum (H_n^- - log 2) t^(n+1) / (n+1)
    SkewSq,          // sum (H_n^-)^2 t^n
    CenteredSq,      // sum (H_n^- - log 2)^2 t^n
    CenteredSqShift, // sum (H_n^- - log 2)^2 t^(n+1) / (n+1)
    SkewOverNsq,     // sum H_n^- t^(n+1) / (n+1)^2
    MuLewin,         // sum mu H_n^-(mu) (-1)^(n-1) t^(n+1) / (n+1)
    MuDilog,         // sum mu H_n^-(mu) (-1)^(n-1) t^n / n
    MuTrilog,        // sum mu (sum_{k<=n} H_k^-(mu)/k) (-1)^(n-1) t^n / n
    RamanujanOdd,    // 2 sum (1 + 1/3 + ... + 1/(2j-1)) t^(2j-1) / (2j-1)
};

struct SeriesInfo {
    SeriesId id;
    std::string_view tag;      // e.g. "CENTERED_SQ"
    std::string_view alias;    // e.g. "EQ13_LHS"
    std::string_view equation; // e.g. "(13)"
    std::string_view domain;   // human-readable convergence domain
    bool needs_mu;
    int shift;
};

std::span<const SeriesInfo> series_table() noexcept;
const SeriesInfo& series_info(SeriesId id) noexcept;

// Accepts the tag or the alias; throws LookupError otherwise.
SeriesId parse_series_id(std::string_view name);

// n-th coefficient. Throws UsageError when mu is missing for a mu-series
// (or given for one that takes none) and DomainError for |mu| > 1.
double coefficient(SeriesId id, std::size_t n, std::optional<double> mu = std::nullopt);

inline constexpr std::size_t kDefaultMaxTerms = 1'000'000;

struct SeriesOptions {
    std::size_t max_terms = kDefaultMaxTerms;
};

// Truncated sum with a rigorous error bound. Inside the open disc the tail
// is bounded geometrically using a per-series envelope on |a_n|. At |t| = 1
// the sum is split into alternating parts (accelerated) and single-signed
// parts (direct sum plus a bracketed tail). Points where the series
// diverges return status DivergentInput.
EvalResult sum_series(SeriesId id, double t, double tol, std::optional<double> mu = std::nullopt,
                      const SeriesOptions& options = {});

// Plain t^shift * sum_{n < n_terms} a_n t^n.
double partial_sum(SeriesId id, double t, std::size_t n_terms, std::optional<double> mu = std::nullopt);

// Coefficients of f(t) / (1 - lambda t): b_n = sum_{k<=n} lambda^(n-k) a_k.
// Throws UsageError if coeffs has fewer than n_out entries.
std::vector<double> cauchy_divide(std::span<const double> coeffs, double lambda, std::size_t n_out);

// Cohen-Villegas-Zagier acceleration of sum_k terms[k] for sign-alternating
// terms. When the magnitudes are also non-increasing the reported bound is
// 2|terms[0]| / (3 + sqrt 8)^n plus rounding, which is rigorous for
// moment sequences; otherwise it falls back to the change between the
// n- and (n-1)-term estimates. Non-alternating input gives DivergentInput
// with the plain partial sum as value.
EvalResult accelerate_alternating(std::span<const double> terms, double tol);

} // namespace skewlog

#endif
