#ifndef SKEWLOG_POLYLOG_HPP
#define SKEWLOG_POLYLOG_HPP

#include <cstddef>

namespace skewlog {

// Order m of Li_m; only 2 and 3 are supported.
class PolylogOrder {
public:
    // Throws UsageError unless m is 2 or 3.
    explicit PolylogOrder(int m);
    int value() const noexcept { return m_; }

private:
    int m_;
};

// Dilogarithm and trilogarithm on [-1, 1]. Arguments outside the interval
// throw DomainError. Absolute error is a few ulp of the result.
double li2(double x);
double li3(double x);

// Same functions on the real ray (-inf, 1]. Below -1 they use the
// inversion formulas Li2(x) = -pi^2/6 - log^2(-x)/2 - Li2(1/x) and
// Li3(x) = Li3(1/x) - (pi^2/6) log(-x) - log^3(-x)/6, both real there.
double li2_real(double x);
double li3_real(double x);

double polylog(PolylogOrder m, double x);
double polylog_real(PolylogOrder m, double x);

// Plain partial sum sum_{n=1..n_terms} x^n / n^m with no argument
// reduction. Used as an independent check of li2/li3. Requires |x| < 1.
double polylog_series_oracle(PolylogOrder m, double x, std::size_t n_terms);

} // namespace skewlog

#endif
