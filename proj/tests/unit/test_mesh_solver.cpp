#include <algorithm>
#include <cmath>
#include <memory>

#include <doctest.h>

#include "conjlab/js_solver.hpp"

using namespace conjlab;
using doctest::Approx;

namespace {

DomainPtr mesh(Extent a, Extent b, int k, double kappa, double h, std::optional<double> R = std::nullopt) {
    return std::make_shared<const TriangulatedDomain>(triangulate(build_triangle(a, b, k, kappa), h, R));
}

double signed_area(const TriangulatedDomain& D, const std::array<int, 3>& e) {
    const auto &a = D.nodes[e[0]], &b = D.nodes[e[1]], &c = D.nodes[e[2]];
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

double sup_error(const GraphSolution& s, const std::function<double(BasePoint)>& exact) {
    double e = 0.0;
    for (std::size_t i = 0; i < s.u.size(); ++i) e = std::max(e, std::abs(s.u[i] - exact(s.domain->nodes[i])));
    return e;
}

} // namespace

TEST_CASE("planar triangle mesh") {
    const auto D = mesh(Extent{1.0}, Extent{1.0}, 2, 0.0, 0.1);
    CHECK(D->interior_count() > 20);
    CHECK(D->interior_count() < 200);
    double area = 0.0;
    for (const auto& e : D->elements) {
        CHECK(signed_area(*D, e) > 0.0);
        area += signed_area(*D, e);
    }
    CHECK(area == Approx(0.5).epsilon(1e-12));
    CHECK(D->chain_p0p1.front() == D->chain_p0p2.front());
    CHECK(D->chain_truncation.empty());
    for (int i : D->chain_p1p2) CHECK(std::abs(D->nodes[i].x + D->nodes[i].y - 1.0) < 1e-12);
}

TEST_CASE("truncated mesh with an ideal side") {
    const auto D = mesh(Extent::infinite(), Extent{1.0}, 3, -0.75, 0.1, 5.0);
    CHECK_FALSE(D->chain_truncation.empty());
    CHECK(D->chain_truncation.size() >= 2); // the truncation side is short near an ideal vertex
    for (const auto& e : D->elements) CHECK(signed_area(*D, e) > 0.0);
    CHECK_THROWS(triangulate(build_triangle(Extent::infinite(), Extent{1.0}, 3, -0.75), 0.1));
}

TEST_CASE("point location") {
    const auto D = mesh(Extent{1.0}, Extent{2.0}, 3, -0.75, 0.05);
    const MeshLocator loc(*D);
    std::vector<double> lin(D->nodes.size());
    for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = 2 * D->nodes[i].x - D->nodes[i].y;
    const BasePoint q{0.3 * D->triangle.p1.point.x + 0.3 * D->triangle.p2.point.x,
                      0.3 * D->triangle.p1.point.y + 0.3 * D->triangle.p2.point.y};
    CHECK(*loc.interpolate(lin, q) == Approx(2 * q.x - q.y));
    CHECK_FALSE(loc.locate({-1.0, -1.0}).has_value());
}

TEST_CASE("zero data in a product space") {
    const auto D = mesh(Extent{1.0}, Extent{1.0}, 2, -1.0, 0.1);
    const auto s = solve_dirichlet(D, {}, SpaceParams{-1.0, 0.0});
    for (double u : s.u) CHECK(std::abs(u) < 1e-12);
}

TEST_CASE("invariant surface recovered at second order") {
    const SpaceParams nil{0.0, 0.5};
    const auto exact = invariant_surface_graph(nil).value;
    BoundaryValues bv;
    bv.p0p1 = bv.p0p2 = bv.p1p2 = exact;
    const auto s1 = solve_dirichlet(mesh(Extent{1.0}, Extent{1.0}, 2, 0.0, 0.1), bv, nil);
    const auto s2 = solve_dirichlet(mesh(Extent{1.0}, Extent{1.0}, 2, 0.0, 0.05), bv, nil);
    const double e1 = sup_error(s1, exact), e2 = sup_error(s2, exact);
    CHECK(e2 < 1e-3);
    CHECK(e1 / e2 > 3.0);
    // energy never increases along Newton
    for (std::size_t i = 1; i < s2.energy_history.size(); ++i)
        CHECK(s2.energy_history[i] <= s2.energy_history[i - 1] + 1e-13);
}

TEST_CASE("Jenkins-Serrin truncation limit") {
    const std::vector<double> M{2, 4, 8, 16};
    const auto run = solve_jenkins_serrin(Extent{1.0}, Extent{1.0}, 2, 0.5, M, 0.05, std::nullopt);
    REQUIRE(run.cauchy.size() == 3);
    CHECK(run.cauchy[1] < run.cauchy[0]);
    CHECK(run.cauchy[2] < run.cauchy[1]);
    CHECK_FALSE(run.discretization_failure);
    CHECK(run.monotonicity_violation < 1e-7);

    const auto nu = nu_field(run.last());
    const int p0 = run.domain->chain_p0p1.front();
    CHECK(nu[static_cast<std::size_t>(p0)] == Approx(1.0));
    for (double v : nu) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
    const auto d = distance_d(run);
    CHECK(d.value > 0.0);
    CHECK(d.value < 1.0);
    const auto rho = rho_estimate(run);
    CHECK(rho.value > 0.0);
    CHECK(rho.value < 1.0);
}

TEST_CASE("integral of a constant angle function") {
    const auto D = mesh(Extent{1.0}, Extent{0.8}, 3, -1.0, 0.05);
    const std::vector<double> one(D->nodes.size(), 1.0);
    CHECK(integrate_along(*D, D->chain_p0p2, one, D->params) == Approx(0.8).epsilon(1e-10));
    CHECK(integrate_along(*D, D->chain_p0p1, one, D->params) == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("critical point clustering") {
    const auto D = mesh(Extent{1.0}, Extent{1.0}, 3, -0.36, 0.1);
    const std::vector<double> one(D->nodes.size(), 1.0), zero(D->nodes.size(), 0.0);
    const auto all = critical_points_from_field(*D, one, zero, 0.01);
    CHECK(all.flagged_nodes == D->nodes.size());
    CHECK(all.fundamental.size() == 1);

    const auto orbit = dihedral_orbit({0.3, 0.1}, 3, 1e-9);
    CHECK(orbit.size() == 6);
    CHECK(dihedral_orbit({0.3, 0.0}, 3, 1e-9).size() == 3);
    CHECK(dihedral_orbit({0.0, 0.0}, 4, 1e-9).size() == 1);
    for (const auto& p : orbit) CHECK(std::hypot(p.x, p.y) == Approx(std::hypot(0.3, 0.1)));
    CHECK(std::abs(std::atan2(orbit[1].y, orbit[1].x) - std::atan2(orbit[0].y, orbit[0].x)) > 0.0);
}
