#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "omtlab/bm_engine.hpp"
#include "omtlab/complex.hpp"
#include "omtlab/stats.hpp"

namespace omtlab {

// Open circular arc {center + r'*e^{i*theta} : theta1 < theta < theta2}.
struct ArcSpec {
    Complex center;
    double arc_radius = 0.0;  // r' > 0
    double theta1 = 0.0;
    double theta2 = 0.0;  // theta1 < theta2 <= theta1 + 2*pi
};

struct EstimateReport {
    long n = 0;
    long hits = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;   // 95% Wilson
    double ci_high = 0.0;
    std::optional<double> reference;
    std::optional<bool> passed;
};

// Probability that Brownian motion from the common center first reaches
// the inner circle |z-a| = r' inside the angular window (theta1, theta2).
// The closed-form reference is (theta2-theta1)/(2*pi); passed records
// whether the reference lands in the Wilson interval widened to at least
// a 3-standard-error band. Exit positions come from segment-circle
// intersection, not from the overshooting sample point. Boundary-angle
// landings count as misses (the window is open; measure-zero effect),
// except that a full-circle window accepts every exit. Requires
// arc.center == circle.center and 0 < r' < circle.radius.
EstimateReport estimate_arc_first_hit(CircleSpec circle, ArcSpec arc, long n,
                                      const SamplerConfig& cfg, RngStream base, int threads = 1);

// Fraction of paths from `start` with any sampled point in the set
// before exiting the circle. No closed-form reference; passed = hits > 0.
// Sampled points only, so the estimate is biased low for thin sets.
EstimateReport estimate_open_set_hit(CircleSpec circle, Complex start,
                                     const std::function<bool(Complex)>& in_set, long n,
                                     const SamplerConfig& cfg, RngStream base, int threads = 1);

struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 0.0;
};

// Pearson chi-square of angles in [0, 2pi) against the uniform bin law;
// p-value from the upper incomplete gamma with bins-1 degrees of
// freedom. Requires bins >= 8 and at least 5 samples per bin on average.
ChiSquareResult chi_square_uniformity(std::span<const double> angles, int bins);

// Two-sample chi-square homogeneity test over equal-width angular bins.
// Bins empty in both samples are dropped from the statistic and the
// degrees of freedom. Same sample-size requirement per sample.
ChiSquareResult two_sample_angle_test(std::span<const double> sample_a,
                                      std::span<const double> sample_b, int bins);

}  // namespace omtlab
