#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "omtlab/analytic_fn.hpp"
#include "omtlab/complex.hpp"
#include "omtlab/errors.hpp"
#include "omtlab/rng.hpp"

namespace omtlab {

struct SamplerConfig {
    double step_dt = 1e-4;      // Gaussian increment variance per coordinate
    double boundary_tol = 1e-9; // accepted deviation of the exit point from the circle
    long max_steps = 10'000'000;

    // Scale-aware default: step_dt = 1e-4 * r^2 keeps the discretization
    // bias of the exit-time mean under ~2% at any radius.
    static SamplerConfig for_radius(double radius) {
        SamplerConfig cfg;
        cfg.step_dt = 1e-4 * radius * radius;
        cfg.boundary_tol = 1e-9 * std::max(1.0, radius);
        return cfg;
    }
};

// Planar Brownian path stopped at the exit of a disk. points[0] is the
// start, every point before exit_index is strictly inside the stopping
// disk, and points[exit_index] lies on the circle within boundary_tol.
struct BmPath {
    std::vector<double> times;
    std::vector<Complex> points;
    std::size_t exit_index = 0;

    Complex exit_point() const { return points[exit_index]; }
    double exit_time() const { return times[exit_index]; }
};

struct BudgetExceededError : Error {
    BudgetExceededError(std::string msg, BmPath partial_path)
        : Error(std::move(msg)), partial(std::move(partial_path)) {}
    BmPath partial;
};

struct ExitSample {
    Complex point;
    double time = 0.0;
    long steps = 0;
};

// Core stepping loop shared by the samplers. Calls visit(t, point) for
// the start and every interior sample; the exit sample is the returned
// value, with the exit point placed on the circle by segment-circle
// intersection and the exit time linearly interpolated. Throws
// BudgetExceededError (with an empty partial path; sample_path_until_exit
// attaches the collected prefix) when max_steps is exhausted.
template <class Visit>
ExitSample walk_until_exit(Complex start, CircleSpec circle, const SamplerConfig& cfg,
                           RngStream& rng, Visit&& visit) {
    if (!(circle.radius > 0.0)) throw ContractError("walk_until_exit: radius must be > 0");
    if (!(cfg.step_dt > 0.0)) throw ContractError("walk_until_exit: step_dt must be > 0");
    const double r2 = circle.radius * circle.radius;
    Complex p = start - circle.center;
    if (!(std::norm(p) < r2))
        throw ContractError("walk_until_exit: start must lie strictly inside the stopping disk");

    const double step_sd = std::sqrt(cfg.step_dt);
    double t = 0.0;
    visit(t, start);
    for (long step = 1; step <= cfg.max_steps; ++step) {
        const auto [gx, gy] = rng.next_gaussian_pair();
        const Complex d{gx * step_sd, gy * step_sd};
        const Complex q = p + d;
        if (std::norm(q) >= r2) {
            // Segment-circle intersection: |p + s*d| = r, p inside, take
            // the positive root. Removes the O(sqrt(dt)) overshoot bias.
            const double a2 = std::norm(d);
            const double b = p.real() * d.real() + p.imag() * d.imag();
            const double c = std::norm(p) - r2;
            const double s = (-b + std::sqrt(b * b - a2 * c)) / a2;
            const Complex exit = p + s * d;
            return ExitSample{exit + circle.center, t + s * cfg.step_dt, step};
        }
        p = q;
        t += cfg.step_dt;
        visit(t, p + circle.center);
    }
    throw BudgetExceededError("walk_until_exit: max_steps exhausted before exit", BmPath{});
}

// Full time-stamped path; increments are exact bivariate Gaussians with
// variance step_dt per coordinate. Identical (start, circle, cfg, rng)
// give bitwise-identical paths.
BmPath sample_path_until_exit(Complex start, CircleSpec circle, const SamplerConfig& cfg,
                              RngStream rng);

// Exit point/time only, no path storage.
ExitSample sample_exit(Complex start, CircleSpec circle, const SamplerConfig& cfg, RngStream rng);

// arg(exit point - center), normalized to [0, 2pi). Throws ContractError
// if the path's last point does not lie on the given circle.
double exit_angle(const BmPath& path, CircleSpec circle);

// Smallest index i <= exit_index whose sampled point satisfies the
// predicate; inspects sampled points only (hit estimates converge from
// below as step_dt -> 0).
std::optional<std::size_t> first_hit_of_set(const BmPath& path,
                                            const std::function<bool(Complex)>& in_set);

// n exit angles from independent streams (seed, base_stream + i),
// deterministic and mergeable in index order regardless of threads.
std::vector<double> sample_exit_angles(Complex start, CircleSpec circle, long n,
                                       const SamplerConfig& cfg, RngStream base, int threads = 1);

// Companion per-path exit times for the same streams as sample_exit_angles.
struct ExitEnsemble {
    std::vector<double> angles;
    std::vector<double> times;
};
ExitEnsemble sample_exit_ensemble(Complex start, CircleSpec circle, long n,
                                  const SamplerConfig& cfg, RngStream base, int threads = 1);

}  // namespace omtlab
