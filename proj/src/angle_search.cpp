#include "ucaris/angle_search.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ucaris {

double epsilon_at(double rot_x, double rot_y, const SegmentGeometry& base,
                  double wavelength, double beta) {
    SegmentGeometry seg = base;
    seg.rot_x = rot_x;
    seg.rot_y = rot_y;
    return epsilon_segment(seg, wavelength, beta);
}

namespace {

constexpr double kUpper = kPi / 3;

// Largest feasible point of a monotone predicate on [lo, hi] by bisection,
// assuming eval(lo) is feasible. Evaluations are logged so the caller can
// check the monotonicity assumption afterwards.
double bisect_boundary(const std::function<double(double)>& eval, double lo, double hi,
                       double threshold, double resolution,
                       std::map<double, double>& trace) {
    double e_hi = eval(hi);
    trace[hi] = e_hi;
    if (e_hi <= threshold) return hi;
    while (hi - lo > resolution) {
        const double mid = 0.5 * (lo + hi);
        const double e = eval(mid);
        trace[mid] = e;
        if (e <= threshold)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

bool trace_is_monotone(const std::map<double, double>& trace) {
    double prev = -1;
    bool first = true;
    for (const auto& [angle, err] : trace) {
        if (!first && err < prev - 1e-15) return false;
        prev = err;
        first = false;
    }
    return true;
}

}  // namespace

AngleRange find_angle_range(double threshold, const SegmentGeometry& base,
                            double resolution, double wavelength, double beta) {
    if (!(threshold >= 0)) throw std::invalid_argument("find_angle_range: threshold must be >= 0");
    if (!(resolution > 0)) throw std::invalid_argument("find_angle_range: resolution must be > 0");

    AngleRange out;
    out.threshold = threshold;

    const auto diag_eval = [&](double a) { return epsilon_at(a, a, base, wavelength, beta); };
    std::map<double, double> trace;
    trace[0.0] = diag_eval(0.0);
    if (trace[0.0] > threshold)
        throw std::runtime_error("find_angle_range: error at zero rotation already exceeds threshold");

    double diag = bisect_boundary(diag_eval, 0.0, kUpper, threshold, resolution, trace);

    if (!trace_is_monotone(trace)) {
        // Nonmonotone error along the diagonal: fall back to scanning the
        // diagonal at the requested resolution and keep the last feasible
        // point before the first violation.
        out.used_grid_fallback = true;
        diag = 0.0;
        for (double a = resolution; a <= kUpper + 1e-15; a += resolution) {
            if (diag_eval(std::min(a, kUpper)) > threshold) break;
            diag = std::min(a, kUpper);
        }
    }

    // Per-axis refinement with the other axis pinned at the diagonal boundary.
    std::map<double, double> trace_x, trace_y;
    const auto x_eval = [&](double a) { return epsilon_at(a, diag, base, wavelength, beta); };
    const auto y_eval = [&](double a) { return epsilon_at(diag, a, base, wavelength, beta); };
    trace_x[diag] = x_eval(diag);
    trace_y[diag] = y_eval(diag);
    out.max_rot_x = bisect_boundary(x_eval, diag, kUpper, threshold, resolution, trace_x);
    out.max_rot_y = bisect_boundary(y_eval, diag, kUpper, threshold, resolution, trace_y);
    if (!trace_is_monotone(trace_x) || !trace_is_monotone(trace_y)) {
        out.used_grid_fallback = true;
        out.max_rot_x = out.max_rot_y = diag;
    }

    // Feasibility is re-evaluated, never trusted from the search path.
    out.achieved_error = std::max(epsilon_at(out.max_rot_x, diag, base, wavelength, beta),
                                  epsilon_at(diag, out.max_rot_y, base, wavelength, beta));
    if (out.achieved_error > threshold) {
        out.max_rot_x = out.max_rot_y = diag;
        out.achieved_error = epsilon_at(diag, diag, base, wavelength, beta);
    }
    return out;
}

}  // namespace ucaris
