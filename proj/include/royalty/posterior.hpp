#pragma once

// Numerical characterization of the royalty distribution induced by
// independent uniform outside options d1 ~ U[a,b], d2 ~ U[c,d].
//
// The CDF is obtained by integrating cross-sections: for fixed d1 the set
// {d2 : theta(d1, d2) <= t} is the ray [y*(d1, t), inf) because every model
// is nonincreasing in d2. The density is the central difference quotient of
// the CDF on a uniform grid.

#include "royalty/bargain.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace royalty {

/// theta(d1, d2), nondecreasing in d1 and nonincreasing in d2.
class RoyaltySurface {
public:
    RoyaltySurface(ModelKind model) noexcept : model_(model) {}  // NOLINT(google-explicit-constructor)

    /// theta = d1 + alpha (1 - d1 - d2) with a fixed bargaining weight.
    static RoyaltySurface fixed_weight(double alpha);

    double operator()(double d1, double d2) const noexcept;

    /// Smallest d2 with theta(d1, d2) <= t; +inf if none, -inf if every d2 qualifies.
    double d2_threshold(double d1, double t) const noexcept;

    std::optional<ModelKind> model() const noexcept { return model_; }
    std::optional<double> alpha() const noexcept { return alpha_; }

    /// Case 2 is undefined at the origin.
    bool singular_at_origin() const noexcept { return model_ == ModelKind::Case2; }

private:
    explicit RoyaltySurface(double alpha) noexcept : alpha_(alpha) {}

    std::optional<ModelKind> model_;
    std::optional<double> alpha_;
};

struct Support {
    double lo;
    double hi;
    bool deterministic() const noexcept { return lo == hi; }
};

/// Range of theta over the rectangle, taken at the (a,d) and (b,c) corners.
Support theta_support(const RoyaltySurface& surface, const PayoffBounds& bounds);

struct PosteriorCurve {
    std::vector<double> thetas;
    std::vector<double> pdf;
    std::vector<double> cdf;
    RoyaltySurface surface;
    PayoffBounds bounds;
};

struct ModeEstimate {
    double theta;
    bool plateau;         // more than one grid point attains the maximum
    bool corner_applied;  // theta(b, d) was returned from the argmax set
};

inline constexpr std::size_t kDefaultGridPoints = 2001;

/// P{theta <= t}. A deterministic theta gives a 0/1 step.
double cdf_at(const RoyaltySurface& surface, const PayoffBounds& bounds, double t);

/// Density and CDF on the uniform grid i / (n_points - 1). Throws
/// DegenerateDistribution when theta is deterministic. `threads` = 0 uses
/// the hardware concurrency; results do not depend on it.
PosteriorCurve pdf_curve(const RoyaltySurface& surface, const PayoffBounds& bounds,
                         std::size_t n_points = kDefaultGridPoints, unsigned threads = 1);

/// Bisection for P{theta <= t} = 1/2.
double numeric_median(const RoyaltySurface& surface, const PayoffBounds& bounds);

/// E{theta} by nested tanh-sinh quadrature.
double numeric_mean(const RoyaltySurface& surface, const PayoffBounds& bounds);

/// Grid argmax of the density. Among maximal grid points (within a relative 1e-6), the
/// corner value theta(b, d) is returned when it lies within two grid steps of
/// the argmax set, otherwise the largest maximal grid point.
ModeEstimate numeric_mode(const RoyaltySurface& surface, const PayoffBounds& bounds,
                          std::size_t n_points = kDefaultGridPoints);

double overpayment_prob(const RoyaltySurface& surface, const PayoffBounds& bounds,
                        double theta_hat);

/// E{(theta - theta_hat)^2} by nested quadrature.
double expected_squared_error(const RoyaltySurface& surface, const PayoffBounds& bounds,
                              double theta_hat);

}  // namespace royalty
