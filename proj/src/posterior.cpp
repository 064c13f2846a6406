#include "royalty/posterior.hpp"

#include "royalty/detail/parallel.hpp"
#include "royalty/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

namespace royalty {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tolerance of each cross-section integral. The density is a difference
// quotient over a 1/2000 grid step, so CDF errors near 1e-11 leave it accurate
// to about 1e-8; tighter targets chase roundoff amplified by 1 / (d - c).
constexpr double kCdfTolerance = 1e-11;
constexpr unsigned kCdfMaxDepth = 12;
// Slivers between nearly coincident knots take a midpoint value.
constexpr double kMinPieceFraction = 1e-12;

constexpr double kMeanOuterTolerance = 1e-12;
constexpr double kMeanInnerTolerance = 1e-13;

constexpr double kBisectionWidth = 1e-14;
// Relative to the peak; well above the ~1e-8 quadrature noise in the density.
constexpr double kPlateauTolerance = 1e-6;
// A central difference straddling a kink reads low, so the maximal grid point
// next to a peak at theta(b, d) can sit up to two steps away.
constexpr double kCornerSteps = 2.0;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;

// Integral over [lo, hi] of an fn of order one, such as a probability. Boost
// scales its tolerance by the running estimate but compares it against the
// error on the unmapped [-1, 1] interval, so narrow or near-zero integrals
// never terminate. Integrating 1 + fn over [-1, 1] keeps both on one scale.
template <typename Fn>
double integrate_unit(Fn fn, double lo, double hi, unsigned depth, double tol) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double shifted = Kronrod::integrate(
        [&](double u) { return 1.0 + fn(std::clamp(mid + half * u, lo, hi)); }, -1.0, 1.0,
        depth, tol);
    return half * (shifted - 2.0);
}

// Same for expectations, where the Case 2 ratio has a boundary layer of width
// d1 at the origin; tanh-sinh nodes cluster at the endpoints and resolve it.
template <typename Fn>
double integrate_unit_endpoint(Fn fn, double lo, double hi, double tol) {
    thread_local boost::math::quadrature::tanh_sinh<double> rule;
    const double shifted = rule.integrate([&](double x) { return 1.0 + fn(x); }, lo, hi, tol);
    return shifted - (hi - lo);
}

void require_defined(const RoyaltySurface& surface, const PayoffBounds& bounds) {
    if (surface.singular_at_origin() && bounds.b() == 0.0 && bounds.d() == 0.0) {
        throw RoyaltyError(ErrorKind::DegeneratePayoffs,
                           "Case 2 royalty is undefined: all probability sits at d1 = d2 = 0");
    }
}

// First x in [lo, hi] where the nondecreasing y*(x) reaches `level`, if the
// crossing is strictly inside.
std::optional<double> threshold_crossing(const RoyaltySurface& surface, double t, double level,
                                         double lo, double hi) {
    auto excess = [&](double x) { return surface.d2_threshold(x, t) - level; };
    if (excess(lo) >= 0.0 || excess(hi) < 0.0) return std::nullopt;
    std::uintmax_t max_iter = 200;
    const auto bracket = boost::math::tools::bisect(
        excess, lo, hi, [](double l, double r) { return std::abs(r - l) <= 1e-16; }, max_iter);
    return 0.5 * (bracket.first + bracket.second);
}

// E{fn(theta)} over the uniform rectangle, collapsing point-mass axes.
template <typename Fn>
double rectangle_expectation(const RoyaltySurface& surface, const PayoffBounds& bounds, Fn fn) {
    require_defined(surface, bounds);
    const double a = bounds.a();
    const double b = bounds.b();
    const double c = bounds.c();
    const double d = bounds.d();
    const double w1 = bounds.width1();
    const double w2 = bounds.width2();

    if (w1 == 0.0 && w2 == 0.0) return fn(surface(a, c));
    if (w1 == 0.0) {
        return integrate_unit_endpoint([&](double y) { return fn(surface(a, y)); }, c, d,
                                       kMeanInnerTolerance) /
               w2;
    }
    if (w2 == 0.0) {
        return integrate_unit_endpoint([&](double x) { return fn(surface(x, c)); }, a, b,
                                       kMeanInnerTolerance) /
               w1;
    }
    auto inner = [&](double x) {
        return integrate_unit_endpoint([&](double y) { return fn(surface(x, y)); }, c, d,
                                       kMeanInnerTolerance) /
               w2;
    };
    return integrate_unit_endpoint(inner, a, b, kMeanOuterTolerance) / w1;
}

}  // namespace

RoyaltySurface RoyaltySurface::fixed_weight(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
        throw RoyaltyError(ErrorKind::OutOfRange,
                           fmt::format("alpha = {} must lie in [0, 1]", alpha));
    }
    return RoyaltySurface(alpha);
}

double RoyaltySurface::operator()(double d1, double d2) const noexcept {
    if (model_) return theta_raw(*model_, d1, d2);
    return d1 + *alpha_ * (1.0 - d1 - d2);
}

double RoyaltySurface::d2_threshold(double d1, double t) const noexcept {
    if (alpha_) {
        const double alpha = *alpha_;
        if (alpha == 0.0) return d1 <= t ? -kInf : kInf;
        return (d1 + alpha * (1.0 - d1) - t) / alpha;
    }
    switch (*model_) {
        case ModelKind::OriginalNBS:
            return d1 + 1.0 - 2.0 * t;
        case ModelKind::Case1: {
            // theta = (1 + (1 - d2)^2 - (1 - d1)^2) / 2 <= t  <=>  (1 - d2)^2 <= r
            const double u = 1.0 - d1;
            const double r = 2.0 * t - 1.0 + u * u;
            if (r < 0.0) return kInf;
            return 1.0 - std::sqrt(r);
        }
        case ModelKind::Case2:
            if (t >= 1.0) return -kInf;
            if (d1 == 0.0) return t >= 0.0 ? -kInf : kInf;
            if (t <= 0.0) return kInf;
            return d1 * (1.0 - t) / t;
    }
    return kInf;
}

Support theta_support(const RoyaltySurface& surface, const PayoffBounds& bounds) {
    require_defined(surface, bounds);
    if (surface.singular_at_origin()) {
        // A zero corner means one payoff is pinned at 0 and the ratio is constant.
        if (bounds.a() == 0.0 && bounds.d() == 0.0) return {1.0, 1.0};
        if (bounds.b() == 0.0 && bounds.c() == 0.0) return {0.0, 0.0};
    }
    return {surface(bounds.a(), bounds.d()), surface(bounds.b(), bounds.c())};
}

double cdf_at(const RoyaltySurface& surface, const PayoffBounds& bounds, double t) {
    if (!std::isfinite(t)) {
        throw RoyaltyError(ErrorKind::InvalidArgument, fmt::format("t = {} is not finite", t));
    }
    const Support support = theta_support(surface, bounds);
    if (t < support.lo) return 0.0;
    if (t >= support.hi) return 1.0;

    const double a = bounds.a();
    const double b = bounds.b();
    const double c = bounds.c();
    const double d = bounds.d();
    const double w2 = bounds.width2();

    // Conditional probability P{theta <= t | d1 = x}.
    auto section = [&](double x) {
        const double y = surface.d2_threshold(x, t);
        if (w2 == 0.0) return c >= y ? 1.0 : 0.0;
        return std::clamp((d - y) / w2, 0.0, 1.0);
    };

    if (bounds.width1() == 0.0) return section(a);

    // Kinks of the section probability where y* meets c or d.
    std::vector<double> knots{a};
    for (double level : {c, d}) {
        if (auto x = threshold_crossing(surface, t, level, a, b)) knots.push_back(*x);
    }
    knots.push_back(b);
    std::sort(knots.begin(), knots.end());

    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double lo = knots[i];
        const double hi = knots[i + 1];
        if (hi - lo > kMinPieceFraction * bounds.width1()) {
            mass += integrate_unit(section, lo, hi, kCdfMaxDepth, kCdfTolerance);
        } else if (hi > lo) {
            mass += (hi - lo) * section(0.5 * (lo + hi));
        }
    }
    return std::clamp(mass / bounds.width1(), 0.0, 1.0);
}

PosteriorCurve pdf_curve(const RoyaltySurface& surface, const PayoffBounds& bounds,
                         std::size_t n_points, unsigned threads) {
    if (n_points < 3) {
        throw RoyaltyError(ErrorKind::InvalidArgument,
                           fmt::format("grid needs at least 3 points, got {}", n_points));
    }
    const Support support = theta_support(surface, bounds);
    if (support.deterministic()) {
        throw RoyaltyError(ErrorKind::DegenerateDistribution,
                           fmt::format("theta is deterministic ({}); no density exists",
                                       support.lo));
    }

    PosteriorCurve curve{{}, {}, {}, surface, bounds};
    curve.thetas.resize(n_points);
    curve.cdf.resize(n_points);
    curve.pdf.assign(n_points, 0.0);
    const double last = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) curve.thetas[i] = static_cast<double>(i) / last;

    detail::parallel_for(n_points, threads, [&](std::size_t i) {
        curve.cdf[i] = cdf_at(surface, bounds, curve.thetas[i]);
    });

    const auto& t = curve.thetas;
    const auto& f = curve.cdf;
    for (std::size_t i = 0; i < n_points; ++i) {
        if (t[i] < support.lo || t[i] > support.hi) continue;
        const bool has_left = i > 0 && t[i - 1] >= support.lo;
        const bool has_right = i + 1 < n_points && t[i + 1] <= support.hi;
        std::size_t lo = i;
        std::size_t hi = i;
        if (has_left == has_right) {
            lo = i > 0 ? i - 1 : i;
            hi = i + 1 < n_points ? i + 1 : i;
        } else if (has_right) {
            hi = i + 1;
        } else {
            lo = i - 1;
        }
        curve.pdf[i] = (f[hi] - f[lo]) / (t[hi] - t[lo]);
    }
    return curve;
}

double numeric_median(const RoyaltySurface& surface, const PayoffBounds& bounds) {
    const Support support = theta_support(surface, bounds);
    if (support.deterministic()) return support.lo;
    auto excess = [&](double t) { return cdf_at(surface, bounds, t) - 0.5; };
    std::uintmax_t max_iter = 200;
    const auto bracket = boost::math::tools::bisect(
        excess, support.lo, support.hi,
        [](double l, double r) { return std::abs(r - l) <= kBisectionWidth; }, max_iter);
    return 0.5 * (bracket.first + bracket.second);
}

double numeric_mean(const RoyaltySurface& surface, const PayoffBounds& bounds) {
    return rectangle_expectation(surface, bounds, [](double theta) { return theta; });
}

double expected_squared_error(const RoyaltySurface& surface, const PayoffBounds& bounds,
                              double theta_hat) {
    return rectangle_expectation(surface, bounds, [theta_hat](double theta) {
        const double e = theta - theta_hat;
        return e * e;
    });
}

ModeEstimate numeric_mode(const RoyaltySurface& surface, const PayoffBounds& bounds,
                          std::size_t n_points) {
    const Support support = theta_support(surface, bounds);
    if (support.deterministic()) return {support.lo, false, false};

    const PosteriorCurve curve = pdf_curve(surface, bounds, n_points);
    const double peak = *std::max_element(curve.pdf.begin(), curve.pdf.end());
    const double step = 1.0 / static_cast<double>(n_points - 1);
    const double corner = surface(bounds.b(), bounds.d());

    std::size_t maximal = 0;
    double largest = 0.0;
    bool corner_near = false;
    for (std::size_t i = 0; i < curve.pdf.size(); ++i) {
        if (curve.pdf[i] < peak * (1.0 - kPlateauTolerance)) continue;
        ++maximal;
        largest = curve.thetas[i];
        if (std::abs(curve.thetas[i] - corner) <= kCornerSteps * step * (1.0 + 1e-9)) {
            corner_near = true;
        }
    }
    if (corner_near) return {corner, maximal > 1, true};
    return {largest, maximal > 1, false};
}

double overpayment_prob(const RoyaltySurface& surface, const PayoffBounds& bounds,
                        double theta_hat) {
    return cdf_at(surface, bounds, theta_hat);
}

}  // namespace royalty
