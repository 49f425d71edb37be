#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "conjlab/ekt.hpp"
#include "conjlab/mesh.hpp"

namespace conjlab {

struct FreeBoundary {};

// constant, sampled from a function, or natural (zero conormal flux)
using BoundaryValue = std::variant<double, std::function<double(BasePoint)>, FreeBoundary>;

struct BoundaryValues {
    BoundaryValue p0p1 = 0.0;
    BoundaryValue p0p2 = 0.0;
    BoundaryValue p1p2 = 0.0;
    BoundaryValue truncation = FreeBoundary{};

    const BoundaryValue& operator[](BoundaryTag t) const;
};

struct SolverOptions {
    double tol = 1e-9; // Newton decrement
    int max_iters = 200;
    double armijo = 1e-4;
    std::optional<std::vector<double>> initial;
};

using DomainPtr = std::shared_ptr<const TriangulatedDomain>;

struct GraphSolution {
    DomainPtr domain;
    SpaceParams params;
    std::vector<double> u;
    double M = 0.0; // value on side_p1p2 when constant, otherwise NaN
    double residual_norm = 0.0;
    int newton_iters = 0;
    std::vector<double> energy_history;
};

double area_energy(const TriangulatedDomain& domain, std::span<const double> u, const SpaceParams& params);

GraphSolution solve_dirichlet(DomainPtr domain, const BoundaryValues& bv, const SpaceParams& params,
                              const SolverOptions& opts = {});

struct JSOptions {
    SolverOptions solver;
    bool negate = false;                     // -M on side_p1p2 instead of +M
    std::optional<SpaceParams> params;       // override E(4H^2-1, H)
    double monotonicity_tol = 1e-7;
    double cauchy_distance = 1.0;
    double corner_grading = 1.0;             // see triangulate
};

struct JSRun {
    DomainPtr domain;
    SpaceParams params;
    std::vector<GraphSolution> solutions;
    std::vector<double> cauchy;        // change between consecutive M on the far subdomain
    double cauchy_distance = 0.0;      // distance from side_p1p2 actually used
    double monotonicity_violation = 0.0;
    bool discretization_failure = false;

    const GraphSolution& last() const { return solutions.back(); }
    double cauchy_indicator() const { return cauchy.empty() ? std::numeric_limits<double>::quiet_NaN() : cauchy.back(); }
};

JSRun solve_jenkins_serrin(Extent a, Extent b, int k, double H, std::span<const double> M_schedule,
                           double target_h, std::optional<double> R_trunc, const JSOptions& opts = {});

// lambda-distance of every node to the side p1p2
std::vector<double> distance_to_side_p1p2(const TriangulatedDomain& domain, const SpaceParams& params);

// conormal flux per node (P/S . n, integrated against the hat function)
std::vector<double> nodal_flux(const GraphSolution& sol);

// angle function per node
std::vector<double> nu_field(const GraphSolution& sol);

struct DistanceEstimate {
    double value = 0.0;
    double previous = 0.0; // same integral on the second-to-last M
    double m_change() const { return std::abs(value - previous); }
};

// integral of nu against lambda-length along a boundary chain
double integrate_along(const TriangulatedDomain& domain, const std::vector<int>& chain,
                       std::span<const double> nu, const SpaceParams& params);

DistanceEstimate distance_d(const JSRun& run);
DistanceEstimate rho_estimate(const JSRun& run);

enum class Fiber { p1, p2 };

struct ThetaPrimeSamples {
    std::vector<double> s;
    std::vector<double> theta_prime;
    double s_min = 0.0, s_max = 0.0; // resolved range
    bool flagged = false;
};

ThetaPrimeSamples boundary_theta_prime(const GraphSolution& sol, Fiber fiber, int n_levels = 60);

struct CriticalPoints {
    std::vector<BasePoint> fundamental; // inside T
    std::vector<BasePoint> points;      // images under the dihedral group
    std::size_t flagged_nodes = 0;
};

// clustering of nodes with nu > 1 - tol, plus sign changes of the flux on the zero sides
CriticalPoints critical_points_from_field(const TriangulatedDomain& domain, std::span<const double> nu,
                                          std::span<const double> flux, double tol);
CriticalPoints critical_points_of_nu(const GraphSolution& sol, std::optional<double> tol = std::nullopt);

std::vector<BasePoint> dihedral_orbit(BasePoint p, int k, double merge_radius);

} // namespace conjlab
