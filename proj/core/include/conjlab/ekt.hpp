#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "conjlab/errors.hpp"
#include "conjlab/extent.hpp"

namespace conjlab {

struct SpaceParams {
    double kappa = 0.0;
    double tau = 0.0;
    std::optional<double> h_partner;

    // E(4H^2-1, H)
    static SpaceParams from_mean_curvature(double H);

    double delta() const; // sqrt(-kappa), 0 for kappa >= 0
    // radius of the model disk, +inf when kappa >= 0
    double model_radius() const;
};

struct BasePoint {
    double x = 0.0;
    double y = 0.0;
};

struct SpacePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// coefficients in the orthonormal frame E1, E2, E3
struct FrameVector {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double norm2() const { return c1 * c1 + c2 * c2 + c3 * c3; }
};

struct Vertex {
    BasePoint point;    // for an ideal vertex with kappa = 0: unit direction at infinity
    bool ideal = false;
};

struct GeodesicTriangle {
    Extent a;
    Extent b;
    int k = 2;
    double kappa = 0.0;
    Vertex p0, p1, p2;
    Extent ell;

    double wedge_angle() const;
};

double conformal_factor(BasePoint p, const SpaceParams& params);
bool in_model(BasePoint p, const SpaceParams& params);

// frame coefficients of a coordinate tangent vector (vx, vy, vz) at p
FrameVector to_frame(const SpacePoint& p, double vx, double vy, double vz, const SpaceParams& params);
// coordinate components of a frame vector at p
SpacePoint from_frame(const SpacePoint& p, const FrameVector& v, const SpaceParams& params);

// point at distance `dist` (lambda metric) from the origin along angle `theta`
BasePoint point_at_distance(double dist, double theta, const SpaceParams& params);
// distance (lambda metric) between two base points
double base_distance(BasePoint p, BasePoint q, const SpaceParams& params);
// point at fraction t in [0,1] along the base geodesic from p to q
BasePoint geodesic_lerp(BasePoint p, BasePoint q, double t, const SpaceParams& params);

double law_of_cosines(double a, double b, int k, double kappa);
GeodesicTriangle build_triangle(Extent a, Extent b, int k, double kappa, bool allow_wedge = false);
double interior_angle_at_p2(double b, int k, double kappa, bool a_infinite);
// b at which the doubled angle at p2 equals pi
double embeddedness_threshold_b(int k, double H);

// second-order jet of a height function at a point
struct Jet2 {
    double ux = 0, uy = 0, uxx = 0, uxy = 0, uyy = 0;
};

// mean curvature of the graph z = u(x,y) from exact partial derivatives
double graph_mean_curvature(BasePoint p, const Jet2& d, const SpaceParams& params);

struct ClosedFormGraph {
    std::function<double(BasePoint)> value;
    std::function<Jet2(BasePoint)> jet;
};

ClosedFormGraph umbrella_graph();
// minimal graph made of horizontal geodesics orthogonal to the x-axis
ClosedFormGraph invariant_surface_graph(const SpaceParams& params);

// values on a uniform (nx x ny) grid, row-major in y
struct GridField {
    double x0 = 0, y0 = 0, hx = 0, hy = 0;
    int nx = 0, ny = 0;
    std::vector<double> values;

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
    BasePoint point(int i, int j) const { return {x0 + i * hx, y0 + j * hy}; }

    static GridField sample(const std::function<double(BasePoint)>& f, double x0, double y0,
                            double hx, double hy, int nx, int ny);
};

struct CurvatureField {
    GridField H;
    std::vector<char> valid; // 0 where second differences are unavailable
    std::size_t failures() const;
};

CurvatureField graph_mean_curvature(const GridField& u, const SpaceParams& params);

struct LiftFailure : NumericalFailure {
    LiftFailure(const std::string& what, double achieved, std::vector<SpacePoint> partial)
        : NumericalFailure(what, achieved), partial_path(std::move(partial)) {}
    std::vector<SpacePoint> partial_path;
};

struct LiftOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double min_step = 1e-14;
};

std::vector<SpacePoint> horizontal_lift(std::span<const BasePoint> base_curve, double z0,
                                        const SpaceParams& params, const LiftOptions& opts = {});

// smooth closed-form path t in [t0, t1]
struct ParametricPath {
    std::function<BasePoint(double)> position;
    std::function<BasePoint(double)> velocity;
    double t0 = 0.0;
    double t1 = 1.0;
};

ParametricPath circle_path(double radius, bool counterclockwise = true);

// final height of the horizontal lift started at z0
double horizontal_lift_end(const ParametricPath& path, double z0, const SpaceParams& params,
                           const LiftOptions& opts = {});

double holonomy_gap(std::span<const BasePoint> jordan_curve, const SpaceParams& params,
                    const LiftOptions& opts = {});
double holonomy_gap(const ParametricPath& closed_path, const SpaceParams& params,
                    const LiftOptions& opts = {});

// signed area (lambda^2 measure) enclosed by a closed polygon, ccw positive
double enclosed_area(std::span<const BasePoint> closed_curve, const SpaceParams& params);

} // namespace conjlab
