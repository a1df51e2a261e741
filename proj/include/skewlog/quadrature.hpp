#ifndef SKEWLOG_QUADRATURE_HPP
#define SKEWLOG_QUADRATURE_HPP

#include "skewlog/eval_result.hpp"

#include <cstddef>
#include <functional>

namespace skewlog {

struct QuadratureConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-13;
    std::size_t max_subdivisions = 20'000;
    // Map (x, y) -> (1-x, 1-y) and apply a Duffy split at the (1, 1) corner
    // for the integrands that are singular there.
    bool singular_corner_substitution = true;

    // Throws UsageError unless tolerances are >= 1e-15 and
    // 1 <= max_subdivisions <= 1e6.
    void validate() const;
};

using Integrand1d = std::function<double(double)>;
using Integrand2d = std::function<double(double, double)>;

// Globally adaptive Gauss-Kronrod (7/15) quadrature. b < a is allowed and
// flips the sign. Endpoint singularities are fine as long as they are
// integrable; the rule never samples the endpoints.
EvalResult integrate_1d(const Integrand1d& f, double a, double b, const QuadratureConfig& cfg = {});

struct Rectangle {
    double x0, x1, y0, y1;
};

// Adaptive tensor-product Gauss-Legendre quadrature over a rectangle.
// A cell's error is |Q(cell) - sum Q(quarters)|; the worst cell is split
// until the total estimate is below max(abs_tol, rel_tol |value|).
// Single-threaded and deterministic.
EvalResult integrate_2d(const Integrand2d& f, const Rectangle& region, const QuadratureConfig& cfg = {});

// g(z) = int_0^1 int_0^1 dx dy / ((1 - xyz)(1+x)(1+y)), -1 <= z <= 1.
EvalResult double_integral_g(double z, const QuadratureConfig& cfg = {});

// G(z) = -int_0^1 int_0^1 log(1 - xyz) dx dy / (xy (1+x)(1+y)), -1 <= z <= 1.
EvalResult double_integral_bigG(double z, const QuadratureConfig& cfg = {});

// int_0^1 int_0^1 x^2 y^2 dx dy / ((1 + x^2 y^2)(1+x)(1+y))
EvalResult double_integral_eq31(const QuadratureConfig& cfg = {});

// int_0^1 int_0^1 log(1 + xy) dx dy / ((1+x)(1+y))
EvalResult double_integral_eq32(const QuadratureConfig& cfg = {});

// Integrands of the four double integrals, exposed for symmetry and
// spot-value tests. The g and G integrands take (x, y) in the unit square.
double integrand_g(double x, double y, double z);
double integrand_bigG(double x, double y, double z);
double integrand_eq31(double x, double y);
double integrand_eq32(double x, double y);

} // namespace skewlog

#endif
