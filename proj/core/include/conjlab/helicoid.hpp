#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conjlab/extent.hpp"

namespace conjlab {

enum class SurfaceKind { umbrella, entire_graph, invariant_surface, helicoid };

std::string to_string(SurfaceKind k);

struct QuadratureOptions {
    double abs_tol = 1e-10;
    // multiplies the integrand; anything but 1 is a deliberate fault for negative controls
    double integrand_scale = 1.0;
};

struct HelicoidParams {
    double mu = 0.0;

    SurfaceKind kind() const;
    // (1+2mu)/(1-2mu); empty at mu = 1/2
    std::optional<double> c() const;
};

struct ProfileSample {
    double v = 0.0;
    double f = 0.0;
    double h = 0.0;
};

struct HelicoidProfile {
    double mu = 0.0;
    Extent t_mu;
    std::optional<double> sigma;
    std::vector<ProfileSample> samples;
    std::vector<double> rejected; // requested v outside (-t_mu, t_mu)
};

double g_mu(double x, double mu, const QuadratureOptions& opts = {});
Extent t_mu(double mu, const QuadratureOptions& opts = {});
HelicoidProfile invert_profile(double mu, std::span<const double> v_grid, const QuadratureOptions& opts = {});

double minimality_residual(const HelicoidProfile& profile);
// empty at mu = 1/2, where the first integral does not apply
std::optional<double> first_integral_residual(const HelicoidProfile& profile);
double angle_function(double u, double v, const HelicoidProfile& profile);

std::optional<double> sigma(double mu);
double theta_prime(double s, double mu);

// Evaluator for one member of the family: f, h and their derivatives at arbitrary v.
class Helicoid {
public:
    explicit Helicoid(double mu, QuadratureOptions opts = {});

    double mu() const { return mu_; }
    SurfaceKind kind() const { return HelicoidParams{mu_}.kind(); }
    const Extent& half_period() const { return t_; }

    double f(double v) const;
    double df(double v) const; // analytic, from the first integral
    double h(double v) const { return 0.5 * (v - f(v)); }
    double dh(double v) const { return 0.5 * (1.0 - df(v)); }
    // minimal graph in the cylinder model: the ruled surface (u, v, u h(v)) read with the fiber reversed
    double height(double x, double y) const { return -x * h(y); }
    double angle(double u, double v) const;
    // derivative of g_mu at x (the integrand)
    double dg(double x) const;

    // integral of the angle function along the axis from 0 to t_mu
    double axis_distance() const;

private:
    double mu_;
    std::optional<double> c_;
    Extent t_;
    QuadratureOptions opts_;
};

std::vector<double> uniform_grid(double lo, double hi, double spacing);
// symmetric grid |v| <= frac * t_mu (or <= cap when t_mu is infinite)
std::vector<double> profile_grid(double mu, double frac, double spacing, double cap);

} // namespace conjlab
