#pragma once

#include <optional>
#include <vector>

#include "omtlab/analytic_fn.hpp"
#include "omtlab/bm_engine.hpp"

namespace omtlab {

// sigma[k] = integral of |f'(B_s)|^2 ds up to times[k], trapezoid rule on
// the sampled endpoints. sigma is nondecreasing, strictly increasing
// wherever |f'| > 0 along a segment. The image process runs on the sigma
// axis; clock_inverse maps image time back to path time.
struct ClockTable {
    std::vector<double> times;
    std::vector<double> sigma;

    double sigma_end() const { return sigma.empty() ? 0.0 : sigma.back(); }
};

ClockTable compute_clock(const BmPath& path, const AnalyticFn& f);
// Hot-path variant: caller supplies the precomputed derivative tree.
ClockTable compute_clock_with_deriv(const BmPath& path, const AnalyticFn& f_prime);

// inf{t >= 0 : sigma(t) >= s} under piecewise-linear interpolation of
// sigma; on flat stretches returns the left endpoint (the infimum).
// Throws ClockRangeError unless 0 <= s <= sigma_end.
double clock_inverse(const ClockTable& clock, double s);

// f(B) resampled on a uniform grid of the image time axis. points[k] is
// f evaluated at the path linearly interpolated at clock_inverse(s_k);
// the terminal image point is f of the path's exit point, which lies on
// the image of the stopping circle.
struct ImagePath {
    std::vector<double> image_times;
    std::vector<Complex> points;
    Complex terminal_point;
    double terminal_image_time = 0.0;
};

ImagePath map_path(const BmPath& path, const AnalyticFn& f, double image_step);
// Default resolution: image_step = sigma_end / 4096.
ImagePath map_path(const BmPath& path, const AnalyticFn& f);
ImagePath map_path_with_clock(const BmPath& path, const ClockTable& clock, const AnalyticFn& f,
                              double image_step);

struct Crossing {
    double image_time = 0.0;
    Complex point;
};

// First time the image path reaches distance `radius` from `center`:
// scans grid segments (including the final segment to the terminal
// point) for endpoints straddling the circle and interpolates the
// crossing onto it. If the path starts at distance >= radius the
// crossing is at image time 0. Absent if the path never reaches it.
std::optional<Crossing> first_crossing(const ImagePath& image, Complex center, double radius);

}  // namespace omtlab
