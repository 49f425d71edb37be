#include <cmath>
#include <numbers>

#include <doctest.h>

#include "conjlab/ekt.hpp"

using namespace conjlab;
using doctest::Approx;
constexpr double pi = std::numbers::pi;

TEST_CASE("conformal factor") {
    CHECK(conformal_factor({0, 0}, {-1, 0}) == 1.0);
    CHECK(conformal_factor({1, 0}, {0, 0}) == 1.0);
    CHECK(conformal_factor({1, 1}, {-1, 0}) == Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(conformal_factor({2, 0}, {-1, 0}), DomainError);
}

TEST_CASE("E(4H^2-1, H)") {
    const auto p = SpaceParams::from_mean_curvature(0.25);
    CHECK(p.kappa == Approx(-0.75));
    CHECK(p.tau == 0.25);
    CHECK(p.model_radius() == Approx(2.0 / std::sqrt(0.75)));
}

TEST_CASE("law of cosines") {
    CHECK(law_of_cosines(1.0, 2.0, 2, 0.0) == Approx(std::sqrt(5.0)).epsilon(1e-14));
    CHECK(law_of_cosines(1.5, 0.0, 3, -1.0) == Approx(1.5).epsilon(1e-14));
    const double l = law_of_cosines(1.0, 1.0, 3, -1.0);
    const double ch = std::cosh(1.0) * std::cosh(1.0) - std::sinh(1.0) * std::sinh(1.0) * std::cos(pi / 3);
    CHECK(std::cosh(l) == Approx(ch).epsilon(1e-13));
    CHECK(law_of_cosines(2.0, 1.0, 3, -1.0) == law_of_cosines(1.0, 2.0, 3, -1.0));
    CHECK(law_of_cosines(1.1, 1.0, 4, -1.0) > law_of_cosines(1.0, 1.0, 4, -1.0));
    // flat limit
    CHECK(std::abs(law_of_cosines(0.7, 1.3, 3, -1e-4) - law_of_cosines(0.7, 1.3, 3, 0.0)) < 1e-4);
    CHECK_THROWS_AS(law_of_cosines(1.0, 1.0, 3, 0.5), DomainError);
}

TEST_CASE("triangle construction") {
    const auto t = build_triangle(Extent{1.0}, Extent{1.0}, 2, 0.0);
    CHECK(t.p1.point.x == Approx(1.0));
    CHECK(std::abs(t.p1.point.y) < 1e-15);
    CHECK(std::abs(t.p2.point.x) < 1e-15);
    CHECK(t.p2.point.y == Approx(1.0));
    CHECK(t.ell.value() == Approx(std::sqrt(2.0)));

    const auto h = build_triangle(Extent{1.0}, Extent{2.0}, 3, -1.0);
    const SpaceParams P{-1.0, 0.0};
    CHECK(base_distance({0, 0}, h.p2.point, P) == Approx(2.0).epsilon(1e-12));
    CHECK(std::atan2(h.p2.point.y, h.p2.point.x) == Approx(pi / 3).epsilon(1e-13));

    const auto id = build_triangle(Extent::infinite(), Extent{1.0}, 3, -0.75);
    CHECK(id.p1.ideal);
    CHECK(std::hypot(id.p1.point.x, id.p1.point.y) == Approx(2.0 / std::sqrt(0.75)).epsilon(1e-13));
    CHECK_THROWS(build_triangle(Extent::infinite(), Extent::infinite(), 2, 0.0));
}

TEST_CASE("angle at p2 with an ideal vertex") {
    const double beta = interior_angle_at_p2(1.0, 2, -1.0, true);
    CHECK(1.0 / std::sin(beta) == Approx(std::cosh(1.0)).epsilon(1e-13));
    for (double H : {0.1, 0.4})
        for (int k : {2, 3, 4, 6}) {
            const double b = embeddedness_threshold_b(k, H);
            CHECK(std::abs(interior_angle_at_p2(b, k, 4 * H * H - 1, true) - pi / 2) < 1e-10);
        }
    CHECK(interior_angle_at_p2(30.0, 3, -1.0, true) < 1e-6);
}

TEST_CASE("closed-form minimal graphs") {
    const SpaceParams nil{0.0, 0.5};
    const SpaceParams hyp{-1.0, 0.5};
    const auto umb = umbrella_graph();
    const auto inv0 = invariant_surface_graph(nil);
    const auto inv1 = invariant_surface_graph(hyp);
    for (double x = -0.8; x <= 0.8; x += 0.2)
        for (double y = -0.8; y <= 0.8; y += 0.2) {
            CHECK(std::abs(graph_mean_curvature({x, y}, umb.jet({x, y}), hyp)) < 1e-12);
            CHECK(std::abs(graph_mean_curvature({x, y}, inv0.jet({x, y}), nil)) < 1e-12);
            CHECK(std::abs(graph_mean_curvature({x, y}, inv1.jet({x, y}), hyp)) < 1e-8);
        }
    CHECK(inv0.value({1.0, 2.0}) == Approx(1.0)); // tau x y
    // a non-minimal control
    CHECK(std::abs(graph_mean_curvature({0.3, 0.1}, Jet2{0, 0, 1, 0, 1}, nil)) > 0.1);
}

TEST_CASE("discrete mean curvature operator") {
    const SpaceParams hyp{-1.0, 0.5};
    const auto inv = invariant_surface_graph(hyp);
    const auto u = GridField::sample(inv.value, -0.5, -0.5, 0.01, 0.01, 101, 101);
    const auto H = graph_mean_curvature(u, hyp);
    double worst = 0.0;
    for (int j = 0; j < u.ny; ++j)
        for (int i = 0; i < u.nx; ++i)
            if (H.valid[static_cast<std::size_t>(j) * u.nx + i]) worst = std::max(worst, std::abs(H.H.at(i, j)));
    CHECK(worst < 1e-4);
    CHECK(H.failures() == 400); // the outer ring has no centered differences
}

TEST_CASE("horizontal lift and holonomy") {
    const SpaceParams nil{0.0, 0.5};
    CHECK(horizontal_lift_end(circle_path(1.0), 0.0, nil) == Approx(pi).epsilon(1e-9));
    for (double r : {0.5, 1.0, 2.0}) CHECK(std::abs(holonomy_gap(circle_path(r), nil) - pi * r * r) < 1e-6);
    CHECK(std::abs(holonomy_gap(circle_path(1.0), SpaceParams{0.0, 0.0})) < 1e-12);

    const std::vector<BasePoint> seg{{-1, 0}, {0, 0}, {2, 0}};
    const auto lift = horizontal_lift(seg, 0.3, nil);
    for (const auto& p : lift) CHECK(p.z == Approx(0.3));
    const std::vector<BasePoint> still{{0.2, 0.1}, {0.2, 0.1}};
    const auto c = horizontal_lift(still, 1.0, nil);
    CHECK(c.back().z == 1.0);
}

TEST_CASE("frame round trip") {
    const SpaceParams P{-1.0, 0.5};
    const SpacePoint p{0.3, -0.4, 1.0};
    const auto f = to_frame(p, 0.2, -0.7, 0.5, P);
    const auto back = from_frame(p, f, P);
    CHECK(back.x == Approx(0.2));
    CHECK(back.y == Approx(-0.7));
    CHECK(back.z == Approx(0.5));
}
