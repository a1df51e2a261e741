#ifndef SKEWLOG_VERIFIER_HPP
#define SKEWLOG_VERIFIER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewlog {

// Every identity the verifier knows about, in canonical report order.
enum class IdentityId {
    Eq1Digamma,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    Eq8,
    Eq9,
    Eq10,
    Eq11,
    Eq12,
    Eq13,
    Eq14Lemma6,
    Eq15,
    Eq16,
    Eq17,
    Eq18,
    Eq19,
    Eq20,
    Eq22,
    Eq24,
    Eq25Abel,
    Eq26,
    Eq27Ramanujan,
    Eq28,
    Eq29,
    Eq30,
    Eq31,
    Eq32,
    Landen,
    HEvenOddSplit,
};

enum class IdentityKind {
    Discrete, // iterates n over n_range
    Pointwise, // one real variable
    MuFamily, // (mu, x) grid
    Endpoint, // a single fixed point
    Constant, // no parameters
};

struct IdentityInfo {
    IdentityId id;
    std::string_view tag;      // e.g. "EQ25_ABEL"
    std::string_view equation; // e.g. "(25)"
    std::string_view domain;
    IdentityKind kind;
    std::string_view lhs;      // what each side is computed with
    std::string_view rhs;
};

std::span<const IdentityInfo> identity_table() noexcept;
const IdentityInfo& identity_info(IdentityId id) noexcept;
// Throws LookupError for an unknown tag.
IdentityId parse_identity_id(std::string_view tag);

enum class Verdict { Pass, Fail, Skipped };
std::string_view to_string(Verdict v) noexcept;
// Throws LookupError.
Verdict parse_verdict(std::string_view s);

using Params = std::vector<std::pair<std::string, double>>;

struct VerificationRecord {
    IdentityId identity;
    Params params;
    double lhs;
    double rhs;
    double residual; // |lhs - rhs|, NaN if either side is
    double tolerance;
    Verdict verdict;
    std::string note; // why a point was skipped, or a convergence warning

    bool operator==(const VerificationRecord&) const = default;
};

struct GridSpec {
    std::vector<double> t_points;
    std::optional<std::vector<double>> mu_points;
    std::optional<std::pair<std::size_t, std::size_t>> n_range; // inclusive
};

// The fixed grids the artifact ships with.
GridSpec default_grid(IdentityId id);

enum class ToleranceTier { Strict, Standard, Relaxed };
std::string_view to_string(ToleranceTier t) noexcept;

// Overrides for whole tiers; unset tiers keep each identity's own default.
struct TolProfile {
    std::optional<double> strict;
    std::optional<double> standard;
    std::optional<double> relaxed;

    bool operator==(const TolProfile&) const = default;
};

ToleranceTier tolerance_tier(IdentityId id, const Params& params);
double default_tolerance(IdentityId id, const Params& params);
double tolerance_for(const TolProfile& profile, IdentityId id, const Params& params);

// One record per grid point (per n for discrete identities). Points outside
// the identity's domain, or where an evaluator throws, give SKIPPED records
// with the reason in note. Never throws for grid problems.
std::vector<VerificationRecord> verify_identity(IdentityId id, const GridSpec& grid, double tol);
std::vector<VerificationRecord> verify_identity(IdentityId id, const GridSpec& grid, const TolProfile& profile);

struct VerdictCounts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;

    bool operator==(const VerdictCounts&) const = default;
};

struct SummaryEntry {
    IdentityId identity;
    VerdictCounts counts;

    bool operator==(const SummaryEntry&) const = default;
};

// An uncorrected form checked against an independent oracle next to the
// corrected form the library ships.
struct ErratumPoint {
    Params params;
    double oracle;
    double printed;
    double corrected;

    bool operator==(const ErratumPoint&) const = default;
};

struct Erratum {
    std::string tag;
    std::string description;
    std::vector<ErratumPoint> points;

    bool operator==(const Erratum&) const = default;
};

struct ReportMetadata {
    std::string version;
    std::string timestamp; // ISO 8601 UTC; the only non-deterministic field
    TolProfile profile;

    bool operator==(const ReportMetadata&) const = default;
};

struct Report {
    std::vector<VerificationRecord> records;
    std::vector<SummaryEntry> summary; // canonical identity order, only identities with records
    ReportMetadata metadata;
    std::vector<Erratum> errata;

    bool operator==(const Report&) const = default;
    bool has_failures() const noexcept;
};

std::vector<SummaryEntry> summarize(std::span<const VerificationRecord> records);

// Builds a report around the given records: summary, metadata with the
// current time, no errata.
Report make_report(std::vector<VerificationRecord> records, const TolProfile& profile = {});

// The erratum table: uncorrected vs corrected forms for the antiderivative
// version B, EQ17 above x = 1/2, EQ22 and EQ28.
std::vector<Erratum> compute_errata();

// Runs every identity on its default grid, records in canonical order.
Report verify_all(const TolProfile& profile = {});

enum class ReportFormat { Json, Csv };
// Throws LookupError for anything but "json" or "csv".
ReportFormat parse_report_format(std::string_view s);

std::string serialize_report(const Report& report, ReportFormat format);
std::string format_params(const Params& params); // "mu=0.5;x=-0.9"
Params parse_params(std::string_view s);

// Inverse of serialize_report(JSON). Throws UsageError on malformed input.
Report parse_report_json(std::string_view text);
// Records from serialize_report(CSV); notes are not part of the CSV.
std::vector<VerificationRecord> parse_report_csv(std::string_view text);

// Always 17 significant digits (trailing zeros kept); "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

} // namespace skewlog

#endif
