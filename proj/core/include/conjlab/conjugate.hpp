#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conjlab/ekt.hpp"

namespace conjlab {

// everything here lives in the Poincare disk of curvature -1

struct CurveSample {
    double x = 0.0, y = 0.0;
    double phi = 0.0; // euclidean tangent angle
    double s = 0.0;   // hyperbolic arclength
    double kg = 0.0;
};

enum class StopReason { range_exhausted, ideal_boundary, left_disk, step_underflow };
std::string to_string(StopReason r);

struct PlanarCurve {
    std::vector<CurveSample> samples;
    std::vector<double> theta_prime;    // per sample, when built from a vertical fiber
    StopReason stop_backward = StopReason::range_exhausted;
    StopReason stop_forward = StopReason::range_exhausted;
    double total_turning = 0.0;         // integral of theta'

    std::vector<BasePoint> points() const;
};

struct CurveRange {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    double start = 0.0; // arclength of the initial condition, lo <= start <= hi
};

struct CurveInit {
    BasePoint point;
    double angle = 0.0;
};

struct CurveOptions {
    double tol = 1e-10;
    double max_step = 0.05;
    double chord_tol = 5e-9;  // per-step gap between arclength and chord length
    double eps_ideal = 1e-6;
    double max_length = 1e4;  // cap for unbounded ranges
    double step_scale = 1.0;  // multiplies every step cap
};

PlanarCurve integrate_prescribed_curvature(const std::function<double(double)>& kg, CurveRange range, CurveInit init,
                                           const CurveOptions& opts = {});

double disk_distance(BasePoint a, BasePoint b);
// largest |chord - arclength| over consecutive samples
double unit_speed_defect(const PlanarCurve& c);

double kg_critical(double s, double mu);

PlanarCurve conjugate_vertical_boundary(const std::function<double(double)>& theta_prime, double H, CurveRange range,
                                        CurveInit init, const CurveOptions& opts = {});

struct HeightSample {
    double s = 0.0, base = 0.0, height = 0.0;
};
struct HeightProfile {
    std::vector<HeightSample> samples;
};

// nu sampled at increasing arclength positions along a horizontal geodesic
HeightProfile conjugate_horizontal_profile(std::span<const double> s, std::span<const double> nu, double tol = 1e-9);

struct AssembledBoundary {
    std::vector<BasePoint> polyline; // closed: last point joins the first
    int k = 0;
    bool closed = false;
    double gap = 0.0;
    std::size_t pieces = 0;
};

AssembledBoundary assemble_domain(const PlanarCurve& fundamental, int k, const CurveOptions& opts = {});

struct Crossing {
    double s1 = 0.0, s2 = 0.0; // polyline arclength (euclidean) of the two branches
    BasePoint point;
    bool uncertain = false;
};

struct EmbeddednessReport {
    std::vector<Crossing> crossings;
    std::size_t uncertain = 0;
    double multiplicity_2_area = 0.0;
    bool embedded = true;
    int symmetry_k = 0;

    std::size_t crossing_count() const { return crossings.size() - uncertain; }
};

struct EmbeddednessOptions {
    double eps_geom = 1e-9;
    int raster = 1024;
};

std::vector<Crossing> polyline_crossings(std::span<const BasePoint> poly, bool closed, double eps_geom = 1e-9);
// winding numbers at the centres of an R x R grid over [-1,1]^2, row-major in y
std::vector<int> winding_raster(std::span<const BasePoint> closed_poly, int raster);
// hyperbolic area of the set with |winding number| >= 2
double multiplicity_area(std::span<const BasePoint> closed_poly, int raster = 1024);

EmbeddednessReport self_intersections(const PlanarCurve& curve, const EmbeddednessOptions& opts = {});
EmbeddednessReport self_intersections(const AssembledBoundary& boundary, const EmbeddednessOptions& opts = {});

enum class LemmaStatus { held, violated, inapplicable };
std::string to_string(LemmaStatus s);

LemmaStatus rotation_lemma_check(const PlanarCurve& curve, double theta_prime_total);

// conjugate of the vertical fiber of the critical helicoid, started at (tanh(d/2), 0)
PlanarCurve critical_catenoid_curve(double mu, const CurveOptions& opts = {});

} // namespace conjlab
