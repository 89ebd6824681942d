#include "contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyptor {

namespace {

double dist_segment_segment(cplx a0, cplx a1, cplx b0, cplx b1) {
    // Minimum distance between two planar segments via endpoint-to-segment
    // distances (sufficient when segments do not intersect).
    auto dist_pt = [](cplx p, cplx s0, cplx s1) {
        cplx d = s1 - s0;
        double len2 = std::norm(d);
        if (len2 == 0.0) return std::abs(p - s0);
        double t = ((p.real() - s0.real()) * d.real() +
                    (p.imag() - s0.imag()) * d.imag()) /
                   len2;
        t = std::clamp(t, 0.0, 1.0);
        return std::abs(p - (s0 + t * d));
    };
    return std::min(std::min(dist_pt(a0, b0, b1), dist_pt(a1, b0, b1)),
                    std::min(dist_pt(b0, a0, a1), dist_pt(b1, a0, a1)));
}

double path_clearance_to_cuts(const Path& path, const Configuration& config) {
    // Cuts: the g pair segments plus the two rays, truncated far out.
    constexpr double kFar = 1e9;
    std::vector<std::pair<cplx, cplx>> cuts;
    for (int j = 0; j < config.genus(); ++j)
        cuts.emplace_back(cplx(config.pair_lo(j), 0.0),
                          cplx(config.pair_hi(j), 0.0));
    cuts.emplace_back(cplx(1.0, 0.0), cplx(kFar, 0.0));
    cuts.emplace_back(cplx(-kFar, 0.0), cplx(-1.0, 0.0));

    double d = std::numeric_limits<double>::infinity();
    for (size_t s = 0; s + 1 < path.points.size(); ++s)
        for (const auto& cut : cuts)
            d = std::min(d, dist_segment_segment(path.points[s],
                                                 path.points[s + 1], cut.first,
                                                 cut.second));
    return d;
}

} // namespace

double Path::length() const {
    double len = 0.0;
    for (size_t i = 0; i + 1 < points.size(); ++i)
        len += std::abs(points[i + 1] - points[i]);
    return len;
}

Path rectangle_loop(const Configuration& config, int j, double height_scale) {
    if (j < 0 || j >= config.genus())
        fail(errc::invalid_argument, "cut index out of range");
    if (!(height_scale > 0.0 && height_scale <= 1.0))
        fail(errc::invalid_argument, "height_scale must be in (0, 1]");

    double left_outer = (j == 0) ? -1.0 : config.pair_hi(j - 1);
    double right_outer = (j == config.genus() - 1) ? 1.0 : config.pair_lo(j + 1);
    double left = 0.5 * (left_outer + config.pair_lo(j));
    double right = 0.5 * (config.pair_hi(j) + right_outer);

    std::vector<double> m = config.margins();
    double height =
        0.5 * std::min(m[static_cast<size_t>(j)], m[static_cast<size_t>(j) + 1]) *
        height_scale;

    Path p;
    p.points = {cplx(right, -height), cplx(right, height), cplx(left, height),
                cplx(left, -height), cplx(right, -height)};
    p.clearance = path_clearance_to_cuts(p, config);
    return p;
}

VPath v_path(const Configuration& config) {
    double eps = 0.5 * (1.0 - config.max_value());
    double c = 1.0 / (1.0 - eps);
    double cl = eps;

    // Nearest z-plane cut image on the positive real axis: the pair cuts map
    // to segments/rays starting at 1/a for the positive branch points.
    double z0 = std::numeric_limits<double>::infinity();
    for (double ai : config.values())
        if (ai > 0.0) z0 = std::min(z0, 1.0 / ai);

    VPath vp;
    vp.epsilon = eps;
    vp.crossing = c;
    vp.lower.points = {cplx(0.0, 0.0), cplx(0.0, -cl), cplx(c, -cl),
                       cplx(c, 0.0)};
    vp.upper.points = {cplx(c, 0.0), cplx(c, cl), cplx(0.0, cl),
                       cplx(0.0, 0.0)};
    double clearance = std::min(cl, std::min(c - 1.0, z0 - c));
    vp.lower.clearance = clearance;
    vp.upper.clearance = clearance;
    return vp;
}

QuadResult integrate(const Path& path,
                     const std::function<cplx(const cplx&)>& f, double tol) {
    if (path.points.size() < 2)
        fail(errc::invalid_argument, "path needs at least one segment");
    if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be > 0");
    double total = path.length();
    if (total == 0.0) return {};
    QuadResult acc;
    for (size_t i = 0; i + 1 < path.points.size(); ++i) {
        cplx za = path.points[i], zb = path.points[i + 1];
        double share = std::abs(zb - za) / total;
        if (share == 0.0) continue;
        QuadResult r = integrate_segment(f, za, zb, tol * share);
        acc.value += r.value;
        acc.error_estimate += r.error_estimate;
        acc.evaluations += r.evaluations;
    }
    return acc;
}

} // namespace hyptor
