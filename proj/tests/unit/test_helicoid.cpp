#include <cmath>
#include <limits>

#include <doctest.h>

#include "conjlab/conjugate.hpp"
#include "conjlab/helicoid.hpp"

using namespace conjlab;
using doctest::Approx;

// reference values from tests/oracles/helicoid_oracle.py (30 digits, rounded)
namespace ref {
struct T {
    double mu, t;
};
constexpr T half_periods[] = {{0.6, 2.7763615822964843},  {1, 1.4148844305059559},   {2, 0.71895283449482296},
                              {3, 0.4897616661290827},    {5, 0.30065122844986047},  {10, 0.15343678464965948},
                              {-0.6, 10.805121223712086}, {-1, 2.4983481277325165},  {-2, 0.93006823868433974},
                              {-3, 0.57983641647344264},  {-5, 0.33242430368010652}, {-10, 0.16131291327843837}};
struct F {
    double mu, v, f;
};
constexpr F profile[] = {{0.25, 1.0, 0.52903922423393679}, {-0.25, 1.0, 1.4731302459957791},
                         {3, 0.3, -2.2482435630129134},    {-3, 0.3, 2.7389216193476749},
                         {1, 0.5, -0.57051168572259025},   {-1, 0.5, 1.5635593042278615}};
struct D {
    double mu, d;
};
constexpr D axis[] = {{3, 0.31305936377186}, {-3, 0.363634304296414}, {1, 0.882719900062329}, {-1, 1.44808084257738}};
} // namespace ref

TEST_CASE("half period against reference") {
    for (const auto& r : ref::half_periods) {
        CAPTURE(r.mu);
        CHECK(std::abs(t_mu(r.mu).value() - r.t) < 1e-10);
    }
    CHECK(t_mu(0.5).is_infinite());
    CHECK(t_mu(-0.5).is_infinite());
    CHECK(t_mu(0.0).is_infinite());
}

TEST_CASE("g_mu closed cases") {
    for (double x : {-3.0, 0.1, 2.5}) {
        CHECK(g_mu(x, 0.0) == Approx(x).epsilon(1e-13));
        CHECK(g_mu(x, -0.5) == Approx(0.5 * x).epsilon(1e-13));
        CHECK(g_mu(-x, 3.0) == Approx(-g_mu(x, 3.0)));
    }
    CHECK_THROWS_AS(g_mu(1.0, 0.5), DomainError);
}

TEST_CASE("profile inversion against reference") {
    for (const auto& r : ref::profile) {
        CAPTURE(r.mu);
        const Helicoid h(r.mu);
        CHECK(std::abs(h.f(r.v) - r.f) < 1e-9);
        CHECK(h.f(0.0) == 0.0);
    }
    const Helicoid half(0.5);
    CHECK(half.f(0.7) == 0.0);
    CHECK(half.h(0.7) == Approx(0.35));
    const Helicoid umb(0.0);
    CHECK(umb.f(1.3) == 1.3);
    CHECK(umb.h(1.3) == 0.0);
    CHECK_THROWS_AS(Helicoid(3.0).f(0.6), DomainError);
}

TEST_CASE("h blows up at the half period") {
    const Helicoid h(3.0);
    const double t = h.half_period().value();
    CHECK(std::abs(h.h(0.999 * t)) > 10 * std::abs(h.h(0.9 * t)));
}

TEST_CASE("axis distance against reference") {
    for (const auto& r : ref::axis) {
        CAPTURE(r.mu);
        CHECK(std::abs(Helicoid(r.mu).axis_distance() - r.d) < 1e-8);
    }
}

TEST_CASE("profile residuals on entire graphs") {
    for (double mu : {0.25, -0.25}) {
        const auto prof = invert_profile(mu, profile_grid(mu, 0.9, 1e-3, 5.0));
        CHECK(minimality_residual(prof) < 1e-6);
        CHECK(*first_integral_residual(prof) < 1e-6);
    }
    const auto flat = invert_profile(0.5, uniform_grid(-1, 1, 0.01));
    CHECK(minimality_residual(flat) == 0.0);
    CHECK_FALSE(first_integral_residual(flat).has_value());
    const auto umb = invert_profile(0.0, uniform_grid(-1, 1, 0.01));
    CHECK(minimality_residual(umb) < 1e-9); // roundoff / dv^2
    const std::vector<double> few{0, 0.1, 0.2, 0.3};
    CHECK_THROWS_AS(minimality_residual(invert_profile(0.25, few)), DomainError);
}

TEST_CASE("residuals shrink quadratically on helicoids") {
    // centered differences: halving the spacing divides the truncation error by four
    const double t = t_mu(-3.0).value();
    const auto r1 = minimality_residual(invert_profile(-3.0, profile_grid(-3.0, 0.5, 2e-3, 0)));
    const auto r2 = minimality_residual(invert_profile(-3.0, profile_grid(-3.0, 0.5, 1e-3, 0)));
    CHECK(t > 0.5);
    CHECK(r1 / r2 == Approx(4.0).epsilon(0.05));
}

TEST_CASE("perturbed integrand breaks the first integral") {
    QuadratureOptions bad;
    bad.integrand_scale = 1.001;
    const auto prof = invert_profile(0.25, profile_grid(0.25, 0.9, 1e-3, 3.0), bad);
    const auto good = invert_profile(0.25, profile_grid(0.25, 0.9, 1e-3, 3.0));
    CHECK(*first_integral_residual(prof) > 100 * *first_integral_residual(good));
}

TEST_CASE("angle function") {
    const auto prof = invert_profile(3.0, profile_grid(3.0, 0.9, 0.01, 0));
    CHECK(angle_function(0, 0, prof) == 1.0);
    for (double u : {-2.0, 0.0, 0.5, 3.0})
        for (double v : {-0.4, -0.1, 0.1, 0.4}) CHECK(angle_function(u, v, prof) < 1.0);
    CHECK(angle_function(1e8, 0.2, prof) < 1e-6);
}

TEST_CASE("sigma and rotation speed") {
    CHECK(*sigma(0.5) == 2.0);
    CHECK(*sigma(-0.5) == 0.0);
    CHECK(*sigma(3.0) == Approx(49.0 / 12.0));
    CHECK_FALSE(sigma(0.0).has_value());
    CHECK(theta_prime(0.0, 3.0) == Approx(-49.0 / 12.0));
    CHECK(std::abs(theta_prime(1e6, 3.0)) < 1e-9);
    CHECK(kg_critical(0.0, 3.0) == Approx(1.0 + 49.0 / 12.0));
    CHECK(kg_critical(1e7, -2.0) == Approx(1.0));
    CHECK_THROWS_AS(theta_prime(0.0, 0.3), DomainError);
}

TEST_CASE("height of a Nil helicoid is minimal") {
    const Helicoid hel(1.0);
    const double t = hel.half_period().value();
    const double dv = 1e-3;
    const auto u = GridField::sample([&](BasePoint p) { return hel.height(p.x, p.y); }, 0.2, -0.5 * t, dv, dv, 41,
                                     static_cast<int>(t / dv));
    const auto H = graph_mean_curvature(u, SpaceParams{0.0, 0.5});
    double worst = 0.0;
    for (int j = 0; j < u.ny; ++j)
        for (int i = 0; i < u.nx; ++i)
            if (H.valid[static_cast<std::size_t>(j) * u.nx + i]) worst = std::max(worst, std::abs(H.H.at(i, j)));
    CHECK(worst < 1e-5);
}
