#include "skewlog/quadrature.hpp"

#include "skewlog/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace skewlog {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// --- 1D: Gauss-Kronrod 7/15 ----------------------------------------------

struct Interval {
    double a, b;
    double kronrod;
    double abs_kronrod;
    double err;
};

struct IntervalOrder {
    bool operator()(const Interval& l, const Interval& r) const { return l.err < r.err; }
};

Interval gk15(const Integrand1d& f, double a, double b)
{
    using rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    using gauss = boost::math::quadrature::gauss<double, 7>;
    const auto& xk = rule::abscissa();
    const auto& wk = rule::weights();
    const auto& wg = gauss::weights();

    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(centre);
    double kronrod = wk[0] * f0;
    double gauss_sum = wg[0] * f0;
    double abs_sum = wk[0] * std::fabs(f0);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double dx = half * xk[i];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += wk[i] * pair;
        abs_sum += wk[i] * (std::fabs(f(centre - dx)) + std::fabs(f(centre + dx)));
        if (i % 2 == 0)
            gauss_sum += wg[i / 2] * pair;
    }
    Interval out{a, b, kronrod * half, abs_sum * std::fabs(half), 0.0};
    out.err = std::fabs((kronrod - gauss_sum) * half);
    return out;
}

// --- 2D: tensor Gauss-Legendre ----------------------------------------------

using GaussRule2d = boost::math::quadrature::gauss<double, 10>;

double tensor_gauss(const Integrand2d& f, const Rectangle& r)
{
    const auto& xs = GaussRule2d::abscissa();
    const auto& ws = GaussRule2d::weights();
    const double cx = 0.5 * (r.x0 + r.x1), hx = 0.5 * (r.x1 - r.x0);
    const double cy = 0.5 * (r.y0 + r.y1), hy = 0.5 * (r.y1 - r.y0);

    // Nodes in a fixed order so results do not depend on anything but the cell.
    std::array<double, 10> nx{}, ny{}, w{};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        nx[2 * i] = cx - hx * xs[i];
        nx[2 * i + 1] = cx + hx * xs[i];
        ny[2 * i] = cy - hy * xs[i];
        ny[2 * i + 1] = cy + hy * xs[i];
        w[2 * i] = w[2 * i + 1] = ws[i];
    }
    double total = 0.0;
    for (std::size_t i = 0; i < nx.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < ny.size(); ++j)
            row += w[j] * f(nx[i], ny[j]);
        total += w[i] * row;
    }
    return total * hx * hy;
}

std::array<Rectangle, 4> quarters(const Rectangle& r)
{
    const double mx = 0.5 * (r.x0 + r.x1);
    const double my = 0.5 * (r.y0 + r.y1);
    return {{{r.x0, mx, r.y0, my}, {mx, r.x1, r.y0, my}, {r.x0, mx, my, r.y1}, {mx, r.x1, my, r.y1}}};
}

struct Cell {
    Rectangle box;
    std::array<double, 4> quarter{};
    double fine = 0.0;
    double err = 0.0;
    bool active = true;
    bool stalled = false;
};

Cell make_cell(const Integrand2d& f, const Rectangle& box, double coarse)
{
    Cell c;
    c.box = box;
    const auto qs = quarters(box);
    for (std::size_t k = 0; k < 4; ++k)
        c.quarter[k] = tensor_gauss(f, qs[k]);
    c.fine = (c.quarter[0] + c.quarter[1]) + (c.quarter[2] + c.quarter[3]);
    c.err = std::fabs(coarse - c.fine);
    return c;
}

// --- integrands ----------------------------------------------------------

// -log(1 - p z)/p with the removable p -> 0 limit; q = 1 - p z is passed in
// separately so corner callers can supply it without cancellation.
double log_kernel(double p, double z, double q)
{
    const double pz = p * z;
    if (std::fabs(pz) < 1e-4)
        return z * (1.0 + pz * (0.5 + pz * (1.0 / 3.0 + pz * 0.25)));
    if (q > 0.5)
        return -std::log1p(-pz) / p;
    return -std::log(q) / p;
}

// In corner coordinates u = 1 - x, v = 1 - y: 1 - xyz = (1 - z) + z (u + v - uv).
double corner_q(double u, double v, double z) { return (1.0 - z) + z * (u + v - u * v); }

double g_corner(double u, double v, double z) { return 1.0 / (corner_q(u, v, z) * (2.0 - u) * (2.0 - v)); }

double bigG_corner(double u, double v, double z)
{
    const double p = (1.0 - u) * (1.0 - v);
    return log_kernel(p, z, corner_q(u, v, z)) / ((2.0 - u) * (2.0 - v));
}

// Duffy map of a function on the unit square, singular at the origin, onto
// the unit square: the two triangles v <= u and u <= v each become
// (s, w) -> (s, s w) with Jacobian s.
Integrand2d duffy(Integrand2d corner)
{
    return [corner = std::move(corner)](double s, double w) {
        const double sw = s * w;
        return s * (corner(s, sw) + corner(sw, s));
    };
}

void require_z(const char* name, double z)
{
    if (!(z >= -1.0 && z <= 1.0))
        throw DomainError(std::string(name) + " requires -1 <= z <= 1");
}

constexpr Rectangle kUnitSquare{0.0, 1.0, 0.0, 1.0};

} // namespace

void QuadratureConfig::validate() const
{
    if (!(abs_tol >= 1e-15) || !(rel_tol >= 1e-15))
        throw UsageError("quadrature tolerances must be >= 1e-15");
    if (max_subdivisions < 1 || max_subdivisions > 1'000'000)
        throw UsageError("max_subdivisions must be in [1, 1e6]");
}

EvalResult integrate_1d(const Integrand1d& f, double a, double b, const QuadratureConfig& cfg)
{
    cfg.validate();
    if (a == b)
        return {0.0, 0.0, 0, EvalStatus::Converged};
    const double sign = b < a ? -1.0 : 1.0;
    if (b < a)
        std::swap(a, b);

    std::priority_queue<Interval, std::vector<Interval>, IntervalOrder> heap;
    heap.push(gk15(f, a, b));
    double total = heap.top().kronrod;
    double total_err = heap.top().err;
    double total_abs = heap.top().abs_kronrod;
    std::size_t evaluations = 15;
    std::size_t splits = 0;
    std::vector<Interval> stalled; // intervals too narrow to split further
    double stalled_err = 0.0;

    auto target = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)); };
    while (!heap.empty() && total_err + stalled_err > target() && splits < cfg.max_subdivisions) {
        const Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) || worst.b - worst.a < 1e-14 * (b - a)) {
            // The rule cannot be checked any further here, so the whole
            // contribution counts as uncertain.
            const double err = std::max(worst.err, worst.abs_kronrod);
            stalled.push_back(worst);
            stalled_err += err;
            total_err -= worst.err;
            continue;
        }
        const Interval left = gk15(f, worst.a, mid);
        const Interval right = gk15(f, mid, worst.b);
        evaluations += 30;
        ++splits;
        total += left.kronrod + right.kronrod - worst.kronrod;
        total_err += left.err + right.err - worst.err;
        total_abs += left.abs_kronrod + right.abs_kronrod - worst.abs_kronrod;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum in a fixed order to shed incremental drift.
    std::vector<Interval> pieces = std::move(stalled);
    total_err = stalled_err;
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        total_err += heap.top().err;
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(), [](const Interval& l, const Interval& r) { return l.a < r.a; });
    total = 0.0;
    for (const auto& p : pieces)
        total += p.kronrod;

    EvalResult result;
    result.value = sign * total;
    result.error_bound = total_err + 50.0 * kEps * total_abs;
    result.terms_used = evaluations;
    result.status = result.error_bound <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))
                        ? EvalStatus::Converged
                        : EvalStatus::MaxTerms;
    if (!std::isfinite(result.value))
        result.status = EvalStatus::DivergentInput;
    return result;
}

EvalResult integrate_2d(const Integrand2d& f, const Rectangle& region, const QuadratureConfig& cfg)
{
    cfg.validate();
    std::vector<Cell> cells;
    cells.push_back(make_cell(f, region, tensor_gauss(f, region)));

    const auto by_error = [&cells](std::size_t l, std::size_t r) { return cells[l].err < cells[r].err; };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)> heap(by_error);
    heap.push(0);

    double total = cells[0].fine;
    double total_err = cells[0].err;
    double stalled_err = 0.0;
    std::size_t evaluations = 500;
    std::size_t splits = 0;
    const double min_width = 1e-13 * std::max(region.x1 - region.x0, region.y1 - region.y0);

    auto target = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)); };
    while (!heap.empty() && total_err + stalled_err > target() && splits < cfg.max_subdivisions) {
        const std::size_t idx = heap.top();
        heap.pop();
        if (cells[idx].box.x1 - cells[idx].box.x0 < min_width) {
            cells[idx].stalled = true;
            stalled_err += std::max(cells[idx].err, std::fabs(cells[idx].fine));
            total_err -= cells[idx].err;
            continue;
        }
        cells[idx].active = false;
        const Cell parent = cells[idx];
        const auto qs = quarters(parent.box);
        total -= parent.fine;
        total_err -= parent.err;
        for (std::size_t k = 0; k < 4; ++k) {
            cells.push_back(make_cell(f, qs[k], parent.quarter[k]));
            total += cells.back().fine;
            total_err += cells.back().err;
            heap.push(cells.size() - 1);
        }
        evaluations += 1600;
        ++splits;
    }

    total = 0.0;
    total_err = stalled_err;
    for (const auto& c : cells) {
        if (!c.active)
            continue;
        total += c.fine;
        if (!c.stalled)
            total_err += c.err;
    }

    EvalResult result;
    result.value = total;
    result.error_bound = total_err + 100.0 * kEps * std::fabs(total);
    result.terms_used = evaluations;
    result.status = result.error_bound <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))
                        ? EvalStatus::Converged
                        : EvalStatus::MaxTerms;
    if (!std::isfinite(result.value))
        result.status = EvalStatus::DivergentInput;
    return result;
}

double integrand_g(double x, double y, double z) { return 1.0 / ((1.0 - x * y * z) * (1.0 + x) * (1.0 + y)); }

double integrand_bigG(double x, double y, double z)
{
    const double p = x * y;
    return log_kernel(p, z, 1.0 - p * z) / ((1.0 + x) * (1.0 + y));
}

double integrand_eq31(double x, double y)
{
    const double p2 = x * x * y * y;
    return p2 / ((1.0 + p2) * (1.0 + x) * (1.0 + y));
}

double integrand_eq32(double x, double y) { return std::log1p(x * y) / ((1.0 + x) * (1.0 + y)); }

EvalResult double_integral_g(double z, const QuadratureConfig& cfg)
{
    require_z("double_integral_g", z);
    if (cfg.singular_corner_substitution)
        return integrate_2d(duffy([z](double u, double v) { return g_corner(u, v, z); }), kUnitSquare, cfg);
    return integrate_2d([z](double x, double y) { return integrand_g(x, y, z); }, kUnitSquare, cfg);
}

EvalResult double_integral_bigG(double z, const QuadratureConfig& cfg)
{
    require_z("double_integral_bigG", z);
    if (cfg.singular_corner_substitution)
        return integrate_2d(duffy([z](double u, double v) { return bigG_corner(u, v, z); }), kUnitSquare, cfg);
    return integrate_2d([z](double x, double y) { return integrand_bigG(x, y, z); }, kUnitSquare, cfg);
}

EvalResult double_integral_eq31(const QuadratureConfig& cfg) { return integrate_2d(integrand_eq31, kUnitSquare, cfg); }

EvalResult double_integral_eq32(const QuadratureConfig& cfg) { return integrate_2d(integrand_eq32, kUnitSquare, cfg); }

} // namespace skewlog
