#include "conjlab/ekt.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/numeric/odeint.hpp>

namespace conjlab {

namespace {

using cplx = std::complex<double>;
namespace odeint = boost::numeric::odeint;

constexpr double pi = std::numbers::pi;

double lambda_unchecked(double x, double y, double kappa) {
    return 1.0 / (1.0 + 0.25 * kappa * (x * x + y * y));
}

void require_nonpositive_kappa(double kappa) {
    if (!(kappa <= 0.0)) throw DomainError("only kappa <= 0 is supported here");
}

// chart of the model disk -> unit Poincare disk
cplx to_unit(BasePoint p, double delta) { return {0.5 * delta * p.x, 0.5 * delta * p.y}; }
BasePoint from_unit(cplx w, double delta) { return {2.0 * w.real() / delta, 2.0 * w.imag() / delta}; }

} // namespace

Extent parse_extent(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "inf" || t == "+inf" || t == "infinity" || t == "+infinity") return Extent::infinite();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw DomainError("not a length: '" + text + "'");
    }
    if (used != t.size() || !std::isfinite(v)) throw DomainError("not a length: '" + text + "'");
    return Extent{v};
}

std::string to_string(const Extent& e) {
    if (e.is_infinite()) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", e.value());
    return buf;
}

SpaceParams SpaceParams::from_mean_curvature(double H) {
    SpaceParams p;
    p.kappa = 4.0 * H * H - 1.0;
    p.tau = H;
    p.h_partner = H;
    return p;
}

double SpaceParams::delta() const { return kappa < 0.0 ? std::sqrt(-kappa) : 0.0; }

double SpaceParams::model_radius() const {
    return kappa < 0.0 ? 2.0 / std::sqrt(-kappa) : std::numeric_limits<double>::infinity();
}

double GeodesicTriangle::wedge_angle() const { return pi / k; }

bool in_model(BasePoint p, const SpaceParams& params) {
    return 1.0 + 0.25 * params.kappa * (p.x * p.x + p.y * p.y) > 0.0;
}

double conformal_factor(BasePoint p, const SpaceParams& params) {
    const double den = 1.0 + 0.25 * params.kappa * (p.x * p.x + p.y * p.y);
    if (!(den > 0.0)) throw DomainError("point outside the model disk");
    return 1.0 / den;
}

FrameVector to_frame(const SpacePoint& p, double vx, double vy, double vz, const SpaceParams& params) {
    const double lam = conformal_factor({p.x, p.y}, params);
    return {lam * vx, lam * vy, vz + lam * params.tau * (p.y * vx - p.x * vy)};
}

SpacePoint from_frame(const SpacePoint& p, const FrameVector& v, const SpaceParams& params) {
    const double lam = conformal_factor({p.x, p.y}, params);
    // E1 = d_x/lam - tau y d_z, E2 = d_y/lam + tau x d_z, E3 = d_z
    return {v.c1 / lam, v.c2 / lam, -params.tau * p.y * v.c1 + params.tau * p.x * v.c2 + v.c3};
}

BasePoint point_at_distance(double dist, double theta, const SpaceParams& params) {
    require_nonpositive_kappa(params.kappa);
    double r = dist;
    if (params.kappa < 0.0) {
        const double d = params.delta();
        r = 2.0 / d * std::tanh(0.5 * d * dist);
    }
    return {r * std::cos(theta), r * std::sin(theta)};
}

double base_distance(BasePoint p, BasePoint q, const SpaceParams& params) {
    require_nonpositive_kappa(params.kappa);
    if (params.kappa == 0.0) return std::hypot(q.x - p.x, q.y - p.y);
    if (!in_model(p, params) || !in_model(q, params)) throw DomainError("point outside the model disk");
    const double d = params.delta();
    const cplx a = to_unit(p, d), b = to_unit(q, d);
    const double ratio = std::abs(b - a) / std::abs(1.0 - std::conj(a) * b);
    return 2.0 * std::atanh(std::min(ratio, 1.0)) / d;
}

BasePoint geodesic_lerp(BasePoint p, BasePoint q, double t, const SpaceParams& params) {
    require_nonpositive_kappa(params.kappa);
    if (params.kappa == 0.0) return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
    const double d = params.delta();
    const cplx a = to_unit(p, d), b = to_unit(q, d);
    const cplx bm = (b - a) / (1.0 - std::conj(a) * b);
    const double rb = std::abs(bm);
    if (rb == 0.0) return p;
    const double D = 2.0 * std::atanh(std::min(rb, 1.0 - 1e-16));
    const cplx w = bm / rb * std::tanh(0.5 * t * D);
    return from_unit((w + a) / (1.0 + std::conj(a) * w), d);
}

double law_of_cosines(double a, double b, int k, double kappa) {
    require_nonpositive_kappa(kappa);
    if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("law_of_cosines needs finite non-negative sides");
    if (k < 2) throw DomainError("k must be at least 2");
    const double s = std::sin(pi / (2.0 * k));
    if (kappa == 0.0) return std::sqrt((a - b) * (a - b) + 4.0 * a * b * s * s);
    // cosh(l d) - 1 written with half-angle sinh's to keep small sides accurate
    const double d = std::sqrt(-kappa);
    const double sh = std::sinh(0.5 * (a - b) * d);
    const double half = std::sqrt(sh * sh + std::sinh(a * d) * std::sinh(b * d) * s * s);
    return 2.0 * std::asinh(half) / d;
}

GeodesicTriangle build_triangle(Extent a, Extent b, int k, double kappa, bool allow_wedge) {
    require_nonpositive_kappa(kappa);
    if (k < 2) throw DomainError("k must be at least 2");
    if (a.is_infinite() && b.is_infinite() && !allow_wedge)
        throw DomainError("a and b both infinite: the wedge must be requested explicitly");
    if ((a.is_finite() && !(a.value() > 0.0)) || (b.is_finite() && !(b.value() > 0.0)))
        throw DomainError("side lengths must be positive");

    SpaceParams sp{kappa, 0.0, std::nullopt};
    GeodesicTriangle T;
    T.a = a;
    T.b = b;
    T.k = k;
    T.kappa = kappa;
    T.p0 = {{0.0, 0.0}, false};
    const double th = pi / k;

    auto place = [&](const Extent& len, double angle) {
        Vertex v;
        if (len.is_finite()) {
            v.point = point_at_distance(len.value(), angle, sp);
        } else {
            v.ideal = true;
            const double r = kappa < 0.0 ? 2.0 / std::sqrt(-kappa) : 1.0;
            v.point = {r * std::cos(angle), r * std::sin(angle)};
        }
        return v;
    };
    T.p1 = place(a, 0.0);
    T.p2 = place(b, th);
    T.ell = (a.is_finite() && b.is_finite()) ? Extent{law_of_cosines(a.value(), b.value(), k, kappa)}
                                             : Extent::infinite();
    return T;
}

double interior_angle_at_p2(double b, int k, double kappa, bool a_infinite) {
    if (!(kappa < 0.0)) throw DomainError("interior_angle_at_p2 needs kappa < 0");
    if (!a_infinite) throw DomainError("interior_angle_at_p2 is defined for the one-ideal-vertex triangle");
    // b = 0 is the degenerate limit; it is where the k = 2 threshold sits
    if (!(b >= 0.0) || !std::isfinite(b)) throw DomainError("b must be finite and non-negative");
    if (k < 2) throw DomainError("k must be at least 2");
    // cosh(b d) sin(pi/k) sin(beta) - cos(pi/k) cos(beta) = 1
    const double d = std::sqrt(-kappa);
    const double A = std::cosh(b * d) * std::sin(pi / k);
    const double c = std::cos(pi / k);
    const double R = std::hypot(A, c);
    if (R < 1.0) throw GeometryError("no angle in (0, pi) satisfies the ideal-triangle relation");
    const double beta = std::atan2(c, A) + std::asin(1.0 / R);
    if (!(beta > 0.0 && beta < pi)) throw GeometryError("angle at p2 outside (0, pi)");
    return beta;
}

double embeddedness_threshold_b(int k, double H) {
    if (k < 2) throw DomainError("k must be at least 2");
    if (!(H >= 0.0 && H < 0.5)) throw DomainError("threshold exists only for 0 <= H < 1/2");
    return std::acosh(1.0 / std::sin(pi / k)) / std::sqrt(1.0 - 4.0 * H * H);
}

double graph_mean_curvature(BasePoint p, const Jet2& d, const SpaceParams& params) {
    const double kap = params.kappa, tau = params.tau;
    const double lam = conformal_factor(p, params);
    const double W = 1.0 / lam;
    const double Wx = 0.5 * kap * p.x, Wy = 0.5 * kap * p.y;
    const double lx = -lam * lam * Wx, ly = -lam * lam * Wy;

    const double P1 = d.ux + lam * tau * p.y;
    const double P2 = d.uy - lam * tau * p.x;
    const double P1x = d.uxx + tau * p.y * lx;
    const double P1y = d.uxy + tau * (lam + p.y * ly);
    const double P2x = d.uxy - tau * (lam + p.x * lx);
    const double P2y = d.uyy - tau * p.x * ly;

    const double PP = P1 * P1 + P2 * P2;
    const double S = std::sqrt(1.0 + PP * W * W);
    const double Sx = ((P1 * P1x + P2 * P2x) * W * W + PP * W * Wx) / S;
    const double Sy = ((P1 * P1y + P2 * P2y) * W * W + PP * W * Wy) / S;

    const double div = (P1x + P2y) / S - (P1 * Sx + P2 * Sy) / (S * S);
    return 0.5 * W * W * div;
}

ClosedFormGraph umbrella_graph() {
    return {[](BasePoint) { return 0.0; }, [](BasePoint) { return Jet2{}; }};
}

ClosedFormGraph invariant_surface_graph(const SpaceParams& params) {
    const double kap = params.kappa, tau = params.tau;
    if (kap == 0.0) {
        return {[tau](BasePoint p) { return tau * p.x * p.y; },
                [tau](BasePoint p) { return Jet2{tau * p.y, tau * p.x, 0.0, tau, 0.0}; }};
    }
    require_nonpositive_kappa(kap);
    // u = A atan(N/D), N = 2xy, D = 4/kappa + x^2 - y^2
    const double A = 2.0 * tau / kap;
    auto value = [A, kap](BasePoint p) {
        return A * std::atan(2.0 * p.x * p.y / (4.0 / kap + p.x * p.x - p.y * p.y));
    };
    auto jet = [A, kap](BasePoint p) {
        const double x = p.x, y = p.y;
        const double N = 2 * x * y, D = 4.0 / kap + x * x - y * y;
        const double Nx = 2 * y, Ny = 2 * x, Nxy = 2;
        const double Dx = 2 * x, Dy = -2 * y, Dxx = 2, Dyy = -2;
        const double q = N * N + D * D;
        const double qx = 2 * N * Nx + 2 * D * Dx, qy = 2 * N * Ny + 2 * D * Dy;
        const double gx = Nx * D - N * Dx, gy = Ny * D - N * Dy;
        const double gx_x = -N * Dxx;
        const double gx_y = Nxy * D + Nx * Dy - Ny * Dx;
        const double gy_y = -N * Dyy;
        Jet2 j;
        j.ux = A * gx / q;
        j.uy = A * gy / q;
        j.uxx = A * (gx_x * q - gx * qx) / (q * q);
        j.uxy = A * (gx_y * q - gx * qy) / (q * q);
        j.uyy = A * (gy_y * q - gy * qy) / (q * q);
        return j;
    };
    return {value, jet};
}

GridField GridField::sample(const std::function<double(BasePoint)>& f, double x0, double y0, double hx,
                            double hy, int nx, int ny) {
    GridField g{x0, y0, hx, hy, nx, ny, std::vector<double>(static_cast<std::size_t>(nx) * ny)};
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) g.at(i, j) = f(g.point(i, j));
    return g;
}

std::size_t CurvatureField::failures() const {
    return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), 0));
}

CurvatureField graph_mean_curvature(const GridField& u, const SpaceParams& params) {
    CurvatureField out;
    out.H = u;
    std::fill(out.H.values.begin(), out.H.values.end(), std::numeric_limits<double>::quiet_NaN());
    out.valid.assign(u.values.size(), 0);
    if (u.nx < 3 || u.ny < 3 || !(u.hx > 0.0) || !(u.hy > 0.0)) return out;

    const double hx = u.hx, hy = u.hy;
    for (int j = 1; j + 1 < u.ny; ++j) {
        for (int i = 1; i + 1 < u.nx; ++i) {
            const BasePoint p = u.point(i, j);
            if (!in_model(p, params)) continue;
            Jet2 d;
            d.ux = (u.at(i + 1, j) - u.at(i - 1, j)) / (2 * hx);
            d.uy = (u.at(i, j + 1) - u.at(i, j - 1)) / (2 * hy);
            d.uxx = (u.at(i + 1, j) - 2 * u.at(i, j) + u.at(i - 1, j)) / (hx * hx);
            d.uyy = (u.at(i, j + 1) - 2 * u.at(i, j) + u.at(i, j - 1)) / (hy * hy);
            d.uxy = (u.at(i + 1, j + 1) - u.at(i + 1, j - 1) - u.at(i - 1, j + 1) + u.at(i - 1, j - 1)) /
                    (4 * hx * hy);
            if (!std::isfinite(d.ux + d.uy + d.uxx + d.uyy + d.uxy)) continue;
            out.H.at(i, j) = graph_mean_curvature(p, d, params);
            out.valid[static_cast<std::size_t>(j) * u.nx + i] = 1;
        }
    }
    return out;
}

namespace {

using state1 = std::array<double, 1>;

// integrates dz/dt = rhs(t) over [t0, t1]
template <class Rhs>
double integrate_height(Rhs rhs, double z0, double t0, double t1, const LiftOptions& opts) {
    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<state1>>(opts.abs_tol, opts.rel_tol);
    state1 z{z0};
    double t = t0;
    double dt = (t1 - t0) / 16.0;
    auto sys = [&](const state1&, state1& dz, double tt) { dz[0] = rhs(tt); };
    while ((t1 - t) * (t1 - t0) > 0.0) {
        if ((t + dt - t1) * (t1 - t0) > 0.0) dt = t1 - t;
        int trials = 0;
        while (stepper.try_step(sys, z, t, dt) == odeint::fail) {
            if (std::abs(dt) < opts.min_step || ++trials > 200)
                throw NumericalFailure("horizontal lift: step size underflow", std::abs(dt));
        }
    }
    return z[0];
}

} // namespace

std::vector<SpacePoint> horizontal_lift(std::span<const BasePoint> base_curve, double z0,
                                        const SpaceParams& params, const LiftOptions& opts) {
    std::vector<SpacePoint> out;
    out.reserve(base_curve.size());
    for (const auto& p : base_curve)
        if (!in_model(p, params)) throw DomainError("base curve leaves the model disk");
    if (base_curve.empty()) return out;

    double z = z0;
    out.push_back({base_curve[0].x, base_curve[0].y, z});
    for (std::size_t i = 1; i < base_curve.size(); ++i) {
        const BasePoint p = base_curve[i - 1], q = base_curve[i];
        const double dx = q.x - p.x, dy = q.y - p.y;
        // on a chord, y x' - x y' is constant
        const double c = p.y * dx - p.x * dy;
        if (c != 0.0 && params.tau != 0.0) {
            auto rhs = [&](double t) {
                return -lambda_unchecked(p.x + t * dx, p.y + t * dy, params.kappa) * params.tau * c;
            };
            try {
                z = integrate_height(rhs, z, 0.0, 1.0, opts);
            } catch (const NumericalFailure& e) {
                throw LiftFailure(e.what(), e.achieved(), out);
            }
        }
        out.push_back({q.x, q.y, z});
    }
    return out;
}

ParametricPath circle_path(double radius, bool counterclockwise) {
    const double s = counterclockwise ? 1.0 : -1.0;
    return {[radius, s](double t) { return BasePoint{radius * std::cos(s * t), radius * std::sin(s * t)}; },
            [radius, s](double t) {
                return BasePoint{-s * radius * std::sin(s * t), s * radius * std::cos(s * t)};
            },
            0.0, 2.0 * pi};
}

double horizontal_lift_end(const ParametricPath& path, double z0, const SpaceParams& params,
                           const LiftOptions& opts) {
    auto rhs = [&](double t) {
        const BasePoint p = path.position(t), v = path.velocity(t);
        return -conformal_factor(p, params) * params.tau * (p.y * v.x - p.x * v.y);
    };
    return integrate_height(rhs, z0, path.t0, path.t1, opts);
}

double holonomy_gap(std::span<const BasePoint> jordan_curve, const SpaceParams& params,
                    const LiftOptions& opts) {
    if (jordan_curve.size() < 4) throw DomainError("closed curve needs at least 3 distinct samples");
    const BasePoint a = jordan_curve.front(), b = jordan_curve.back();
    double scale = 0.0;
    for (const auto& p : jordan_curve) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    if (std::hypot(a.x - b.x, a.y - b.y) > 1e-9 * (1.0 + scale)) throw DomainError("curve is not closed");
    const auto lift = horizontal_lift(jordan_curve, 0.0, params, opts);
    return lift.back().z - lift.front().z;
}

double holonomy_gap(const ParametricPath& closed_path, const SpaceParams& params, const LiftOptions& opts) {
    const BasePoint a = closed_path.position(closed_path.t0), b = closed_path.position(closed_path.t1);
    if (std::hypot(a.x - b.x, a.y - b.y) > 1e-9 * (1.0 + std::hypot(a.x, a.y)))
        throw DomainError("path is not closed");
    return horizontal_lift_end(closed_path, 0.0, params, opts);
}

double enclosed_area(std::span<const BasePoint> closed_curve, const SpaceParams& params) {
    using boost::math::quadrature::gauss;
    const std::size_t n = closed_curve.size();
    if (n < 3) return 0.0;
    for (const auto& p : closed_curve)
        if (!in_model(p, params)) throw DomainError("curve leaves the model disk");
    // d(lambda (x dy - y dx)) = 2 lambda^2 dx dy
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const BasePoint p = closed_curve[i], q = closed_curve[(i + 1) % n];
        const double dx = q.x - p.x, dy = q.y - p.y;
        const double c = p.x * dy - p.y * dx;
        if (c == 0.0) continue;
        double lam_mean = 1.0;
        if (params.kappa != 0.0)
            lam_mean = gauss<double, 10>::integrate(
                [&](double t) { return lambda_unchecked(p.x + t * dx, p.y + t * dy, params.kappa); }, 0.0, 1.0);
        twice += c * lam_mean;
    }
    return 0.5 * twice;
}

} // namespace conjlab
