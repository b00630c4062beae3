#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omtlab/analytic_fn.hpp"
#include "omtlab/bm_engine.hpp"
#include "omtlab/time_change.hpp"

namespace omtlab {

// The open set the experiment works in, represented as an explicit disk
// so that "closed disk of radius r around a stays inside" is exact
// arithmetic.
struct DomainSpec {
    Complex center;
    double radius = 0.0;
};

// Discretization of the image of the stopping circle under f, with the
// margin m = min distance from v to the sampled curve. The curve may
// self-intersect when f is not injective on the disk; nothing here
// depends on it being a Jordan curve.
struct GammaCurve {
    std::vector<Complex> points;  // f(a + r*e^{i*theta_k}), uniform theta_k
    double m = 0.0;
    double argmin_angle = 0.0;
    double tolerance = 0.0;  // gap bound from min_on_circle
};

struct OmtConfig {
    AnalyticFn f;
    Complex a;
    DomainSpec domain;
    long n_paths = 0;
    int grid_cells = 10;  // per axis
    SamplerConfig sampler;
    std::uint64_t seed = 1;

    std::optional<double> radius_override;  // r0 for the radius search
    int gamma_samples = 4096;               // K
    int image_substeps = 4096;              // image grid resolution per path
    double margin_tol = 1e-6;
    int threads = 1;
};

// Aggregated per-path verdicts plus grid-cell coverage of the disk
// D(v, m). Cells are counted only when they sit entirely inside
// D(v, 0.95*m); near the rim hit probabilities decay toward zero and
// finite n cannot certify them. A path whose terminal image distance is
// within boundary_tol of m is numerically ambiguous and counted apart
// instead of as a violation.
struct OmtReport {
    double r = 0.0;
    Complex v;
    double m = 0.0;
    long paths_run = 0;
    long crossing_violations = 0;
    long ambiguous_paths = 0;
    long path_errors = 0;
    double terminal_margin_min = 0.0;  // min over paths of |terminal - v| - m
    int grid_cells = 0;
    long cells_total = 0;
    long cells_hit = 0;
    std::vector<long> per_cell_hit_counts;  // row-major grid_cells x grid_cells
    std::vector<std::uint8_t> cell_counted; // same layout; 1 = inside D(v, 0.95m)
    double boundary_tol = 0.0;
    double grid_origin_re = 0.0;  // lower-left corner of the cell grid
    double grid_origin_im = 0.0;
    double cell_size = 0.0;
};

// Starting from r0 (default: half the distance from a to the domain
// boundary), halve r until |f - v| stays above margin_tol on the circle
// |z-a| = r, at most 60 halvings. Throws RadiusSelectionError when the
// budget runs out and ContractError for constant f or a outside the
// domain.
double select_radius(const AnalyticFn& f, Complex a, DomainSpec domain, Complex v,
                     std::optional<double> r0 = std::nullopt, double margin_tol = 1e-6,
                     int K = 4096);

// K uniform circle samples mapped through f, with the refined margin.
// Throws DegenerateMarginError if m <= margin_tol.
GammaCurve build_gamma(const AnalyticFn& f, Complex a, double r, Complex v, int K,
                       double margin_tol = 1e-6);

// The full pipeline: sample paths from a stopped at |z-a| = r, push them
// through the time change, locate the first crossing of |w-v| = m, check
// the per-path claims, and accumulate cell coverage of D(v, m).
OmtReport run_experiment(const OmtConfig& cfg);

// Verdict: no crossing violations, terminal margins not below
// -boundary_tol, and every counted cell hit.
bool containment_check(const OmtReport& report);

}  // namespace omtlab
