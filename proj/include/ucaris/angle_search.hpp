#pragma once

#include "ucaris/channel.hpp"

namespace ucaris {

struct AngleRange {
    double max_rot_x = 0;        // radians
    double max_rot_y = 0;        // radians
    double threshold = 0;        // the error budget this range was found for
    double achieved_error = 0;   // re-evaluated at the returned angles
    bool used_grid_fallback = false;  // set when nonmonotonicity forced a scan
};

/// epsilon_segment of `base` with the rotation angles overridden.
double epsilon_at(double rot_x, double rot_y, const SegmentGeometry& base,
                  double wavelength, double beta);

/// Largest rotation angles on [0, pi/3] whose circulant-approximation error
/// stays within `threshold`. Bisects along the symmetric diagonal
/// rot_x == rot_y to within `resolution`, then refines each axis with the
/// other held at the diagonal boundary. Monotonicity of the error along the
/// bisection path is checked as the search runs; a violation triggers an
/// exhaustive grid scan at `resolution` instead (reported via the flag).
AngleRange find_angle_range(double threshold, const SegmentGeometry& base,
                            double resolution, double wavelength, double beta);

}  // namespace ucaris
