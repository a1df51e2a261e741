#ifndef SKEWLOG_CLOSED_FORMS_HPP
#define SKEWLOG_CLOSED_FORMS_HPP

#include <optional>
#include <span>
#include <string_view>

namespace skewlog {

// Closed-form sides of the skew-harmonic identities. Each is a function of
// one real variable (t, x or z) and, for the mu-families, a parameter mu.
enum class ClosedFormId {
    Eq2,           // log(1+t)/(1-t)
    Eq3,           // log((1+t)/2)/(1-t)
    Eq5,           // Li2((1-t)/2) - Li2(1/2) - Li2(-t) - log(1-t) log 2
    Eq8,           // Li2((1-t)/2) - Li2(1/2) - Li2(-t)
    Eq11,          // Li2((1-t)/2) - Li2(1/2)
    Eq12,          // generating function of (H_n^-)^2
    Eq13,          // generating function of (H_n^- - log 2)^2
    Eq17,          // integral of Eq13 from 0 to x
    Eq20,          // trilogarithm combination
    Eq22,          // Lewin's dilogarithm expansion
    Eq24,          // Li2((1+mu)x/(1+x)) - Li2(x/(1+x))
    Eq25Abel,      // right-hand side of the Abel-type identity
    Eq26,          // Li2(2x/(1+x)) rewritten through Li2 on [-1, 1]
    Eq27Ramanujan, // Li2(2x/(1+x)) + log^2((1-x)/(1+x))/4
    Eq28,          // Li3((1+mu)x/(1+x)) - Li3(x/(1+x))
    Eq29G,         // g(z), same expression as Eq13
    Eq30BigG,      // G(z), same expression as Eq17
    Landen,        // -log^2(1+x)/2 - Li2(-x)
};

struct ClosedFormInfo {
    ClosedFormId id;
    std::string_view tag;
    std::string_view domain;
    bool needs_mu;
};

std::span<const ClosedFormInfo> closed_form_table() noexcept;
const ClosedFormInfo& closed_form_info(ClosedFormId id) noexcept;

// Throws DomainError outside the identity's domain, PoleError at t = 1 for
// Eq5 and Eq12, UsageError if mu is missing or superfluous. Within 1e-8 of
// t = 1 the removable forms (Eq3, Eq13, Eq17, Eq29G, Eq30BigG) return their
// analytic limits.
double closed_form(ClosedFormId id, double t, std::optional<double> mu = std::nullopt);

// J(x) = integral_0^x Li2(t)/(1-t) dt, x in [-1, 1). Uses version A up to
// x = 1/2 and version B above.
double int_li2_over_1mt(double x);

// -2 Li3(-x/(1-x)) - 2 Li3(x) + log(1-x) Li2(x) + log^3(1-x)/3, x in [-1, 1/2].
double int_li2_over_1mt_version_a(double x);

// 2[Li3(1-x) - zeta(3)] - log(1-x)[Li2(1-x) + pi^2/6], x in [0, 1).
double int_li2_over_1mt_version_b(double x);

// Uncorrected version B with "pi/6" in place of pi^2/6. Kept only so
// reports can show how far off it is.
double int_li2_over_1mt_version_b_as_printed(double x);

enum class AntiderivativeForm { Corrected, AsPrinted };

// Generating function sum (H_n^- - log 2)^2 x^(n+1)/(n+1), x in [-1, 1].
// x = -1 and x -> 1 use their exact closed values.
double closed_form_eq17(double x, AntiderivativeForm form = AntiderivativeForm::Corrected);

struct AbelSides {
    double lhs;
    double rhs;
};

// Both sides of
//   Li2((1+mu)x/(1+x)) + Li2(mu(1+x)/(1+mu)) - Li2(mu x)
//     = Li2(x/(1+x)) + Li2(mu/(1+mu)) + log(1+mu) log(1+x)
// for |x| < 1 and -1 < mu <= 1.
AbelSides abel_sides(double mu, double x);
double abel_residual(double mu, double x);

// Li2(2x/(1+x)) + log^2((1-x)/(1+x))/4 minus twice the odd-harmonic series,
// the series summed to 1e-13. |x| < 1.
double ramanujan_eq27_residual(double x);

} // namespace skewlog

#endif
