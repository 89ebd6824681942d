#pragma once

#include <vector>

#include "branch.hpp"
#include "config.hpp"
#include "quadrature.hpp"

namespace hyptor {

/// A polyline path in the complex plane.  Closed iff front() == back().
struct Path {
    std::vector<cplx> points;
    double clearance = 0.0;  // min distance to the relevant singularities

    bool closed() const {
        return points.size() > 2 && points.front() == points.back();
    }
    double length() const;
    int segments() const { return static_cast<int>(points.size()) - 1; }
};

/// Counterclockwise rectangle around the j-th cut (0-based), symmetric about
/// the real axis.  Vertical sides sit at the midpoints of the adjacent gaps;
/// horizontal sides at +/- min(adjacent gap widths)/2 * height_scale.
/// height_scale in (0, 1] shrinks the rectangle (deformation tests).
Path rectangle_loop(const Configuration& config, int j,
                    double height_scale = 1.0);

/// The z = 1/x integration route for v: two mirror-image polylines meeting at
/// the real crossing point c = 1/(1-eps), eps = (1 - max(a))/2.  The lower
/// path runs 0 -> c through Im z < 0 (branch anchored to +1 at 0), the upper
/// path c -> 0 through Im z > 0 (anchored to -1).
struct VPath {
    Path lower, upper;
    double epsilon = 0.0;
    double crossing = 0.0;
};

VPath v_path(const Configuration& config);

/// Adaptive Gauss-Kronrod integration of f along the path.  The tolerance is
/// distributed over segments by arc-length share.
QuadResult integrate(const Path& path,
                     const std::function<cplx(const cplx&)>& f, double tol);

} // namespace hyptor
