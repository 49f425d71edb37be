#include "conjlab/conjugate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "conjlab/helicoid.hpp"

namespace conjlab {

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 3>;
constexpr double pi = std::numbers::pi;

struct Leg {
    std::vector<State> states;
    std::vector<double> t;
    StopReason reason = StopReason::range_exhausted;
};

// unit-speed curve with left-normal geodesic curvature k(t), t in [0, L]
Leg integrate_leg(const std::function<double(double)>& k, State y, double L, const CurveOptions& opts) {
    Leg leg;
    leg.states.push_back(y);
    leg.t.push_back(0.0);
    if (!(L > 0.0)) return leg;
    auto rhs = [&](const State& s, State& ds, double t) {
        const double x = s[0], yy = s[1], phi = s[2];
        const double c = std::cos(phi), sn = std::sin(phi);
        const double f = 0.5 * (1.0 - x * x - yy * yy);
        ds[0] = f * c;
        ds[1] = f * sn;
        ds[2] = k(t) + (-x * sn + yy * c);
    };
    auto stepper = odeint::make_controlled(opts.tol, opts.tol, odeint::runge_kutta_dopri5<State>{});
    double t = 0.0;
    double dt = 1e-3 * opts.step_scale;
    for (;;) {
        if (t >= L) {
            leg.reason = StopReason::range_exhausted;
            break;
        }
        const double kk = std::abs(k(t));
        double cap = opts.max_step;
        if (kk > 0.0) cap = std::min(cap, std::cbrt(24.0 * opts.chord_tol / (kk * kk)));
        cap *= opts.step_scale;
        dt = std::min({dt, cap, L - t});
        const State prev = y;
        const double tprev = t;
        const auto res = stepper.try_step(rhs, y, t, dt);
        if (res == odeint::fail) {
            if (dt < 1e-14) {
                leg.reason = StopReason::step_underflow;
                break;
            }
            continue;
        }
        const double r = std::hypot(y[0], y[1]);
        if (!(r < 1.0)) {
            y = prev;
            t = tprev;
            leg.reason = StopReason::left_disk;
            break;
        }
        leg.states.push_back(y);
        leg.t.push_back(t);
        if (1.0 - r < opts.eps_ideal) {
            leg.reason = StopReason::ideal_boundary;
            break;
        }
    }
    return leg;
}

BasePoint rotate(BasePoint p, double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double wrap(double a) {
    while (a > pi) a -= 2.0 * pi;
    while (a <= -pi) a += 2.0 * pi;
    return a;
}

// along the ideal boundary itself, so the joins stay clear of curves hugging it
void append_arc(std::vector<BasePoint>& out, BasePoint from, BasePoint to) {
    const double a0 = std::atan2(from.y, from.x);
    const double da = wrap(std::atan2(to.y, to.x) - a0);
    const int n = std::max(2, static_cast<int>(std::ceil(std::abs(da) / 0.005)));
    // circumscribed polygon: chords never dip inside the disk
    const double R = 1.0 / std::cos(0.5 * da / n);
    for (int i = 0; i <= n; ++i) {
        const double a = a0 + da * i / n;
        out.push_back({R * std::cos(a), R * std::sin(a)});
    }
}

} // namespace

std::string to_string(StopReason r) {
    switch (r) {
    case StopReason::range_exhausted: return "range_exhausted";
    case StopReason::ideal_boundary: return "ideal_boundary";
    case StopReason::left_disk: return "left_disk";
    case StopReason::step_underflow: return "step_underflow";
    }
    return "?";
}

std::vector<BasePoint> PlanarCurve::points() const {
    std::vector<BasePoint> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back({s.x, s.y});
    return out;
}

PlanarCurve integrate_prescribed_curvature(const std::function<double(double)>& kg, CurveRange range, CurveInit init,
                                           const CurveOptions& opts) {
    if (!(range.lo <= range.start && range.start <= range.hi)) throw DomainError("start must lie in the arclength range");
    if (!(std::hypot(init.point.x, init.point.y) < 1.0)) throw DomainError("initial point outside the disk");
    if (!(opts.step_scale > 0.0) || !(opts.max_step > 0.0)) throw DomainError("step bounds must be positive");
    const double Lf = std::min(range.hi - range.start, opts.max_length);
    const double Lb = std::min(range.start - range.lo, opts.max_length);

    const Leg fwd = integrate_leg([&](double t) { return kg(range.start + t); },
                                  {init.point.x, init.point.y, init.angle}, Lf, opts);
    // backwards: reversed tangent, curvature changes sign
    const Leg bwd = integrate_leg([&](double t) { return -kg(range.start - t); },
                                  {init.point.x, init.point.y, init.angle + pi}, Lb, opts);

    PlanarCurve c;
    c.stop_forward = fwd.reason;
    c.stop_backward = bwd.reason;
    for (std::size_t i = bwd.states.size(); i-- > 1;) {
        const auto& y = bwd.states[i];
        const double s = range.start - bwd.t[i];
        c.samples.push_back({y[0], y[1], y[2] - pi, s, kg(s)});
    }
    for (std::size_t i = 0; i < fwd.states.size(); ++i) {
        const auto& y = fwd.states[i];
        const double s = range.start + fwd.t[i];
        c.samples.push_back({y[0], y[1], y[2], s, kg(s)});
    }
    return c;
}

double disk_distance(BasePoint a, BasePoint b) {
    using cplx = std::complex<double>;
    const cplx za{a.x, a.y}, zb{b.x, b.y};
    const double ratio = std::abs(zb - za) / std::abs(1.0 - std::conj(za) * zb);
    return 2.0 * std::atanh(std::min(ratio, 1.0));
}

double unit_speed_defect(const PlanarCurve& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < c.samples.size(); ++i) {
        const auto& a = c.samples[i];
        const auto& b = c.samples[i + 1];
        worst = std::max(worst, std::abs(disk_distance({a.x, a.y}, {b.x, b.y}) - (b.s - a.s)));
    }
    return worst;
}

double kg_critical(double s, double mu) {
    if (!(std::abs(mu) > 0.5)) throw DomainError("kg_critical needs |mu| > 1/2");
    const double a = 1.0 + 2.0 * mu;
    return 1.0 + 4.0 * mu * a * a / (16.0 * mu * mu + a * a * a * a * s * s);
}

PlanarCurve conjugate_vertical_boundary(const std::function<double(double)>& theta_prime, double H, CurveRange range,
                                        CurveInit init, const CurveOptions& opts) {
    if (!(H >= 0.0 && H <= 0.5)) throw DomainError("H must lie in [0, 1/2]");
    auto c = integrate_prescribed_curvature([&](double s) { return 2.0 * H - theta_prime(s); }, range, init, opts);
    c.theta_prime.reserve(c.samples.size());
    for (const auto& s : c.samples) c.theta_prime.push_back(theta_prime(s.s));
    // piecewise over the integrator's own steps, which already resolve theta'
    for (std::size_t i = 0; i + 1 < c.samples.size(); ++i)
        c.total_turning += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            theta_prime, c.samples[i].s, c.samples[i + 1].s, 3, 1e-12);
    return c;
}

HeightProfile conjugate_horizontal_profile(std::span<const double> s, std::span<const double> nu, double tol) {
    if (s.size() != nu.size()) throw DomainError("arclength and nu sample counts differ");
    HeightProfile p;
    double base = 0.0, height = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(nu[i] >= -tol && nu[i] <= 1.0 + tol)) throw DomainError("nu outside [0, 1]");
        if (i > 0) {
            const double ds = s[i] - s[i - 1];
            if (!(ds >= 0.0)) throw DomainError("arclength samples must increase");
            const double n0 = std::clamp(nu[i - 1], 0.0, 1.0), n1 = std::clamp(nu[i], 0.0, 1.0);
            base += 0.5 * (n0 + n1) * ds;
            height += 0.5 * (std::sqrt(1.0 - n0 * n0) + std::sqrt(1.0 - n1 * n1)) * ds;
        }
        p.samples.push_back({s[i], base, height});
    }
    return p;
}

AssembledBoundary assemble_domain(const PlanarCurve& C, int k, const CurveOptions& opts) {
    if (k < 2) throw DomainError("k must be at least 2");
    if (C.samples.size() < 2) throw DomainError("fundamental curve too short");
    const auto& first = C.samples.front();
    if (std::abs(first.y) > 1e-8) throw DomainError("fundamental curve must start on the positive x-axis ray");

    std::vector<BasePoint> F;
    for (std::size_t i = C.samples.size(); i-- > 1;) F.push_back({C.samples[i].x, -C.samples[i].y});
    for (const auto& s : C.samples) F.push_back({s.x, s.y});

    AssembledBoundary out;
    out.k = k;
    out.pieces = static_cast<std::size_t>(k);
    const BasePoint end = F.back();
    const bool ideal_end = C.stop_forward == StopReason::ideal_boundary ||
                           1.0 - std::hypot(end.x, end.y) < 10.0 * opts.eps_ideal;
    const double end_angle = std::atan2(end.y, end.x);
    const bool on_ray = !ideal_end && std::abs(wrap(end_angle - pi / k)) < 1e-8;

    for (int j = 0; j < k; ++j) {
        const double a = 2.0 * pi * j / k;
        const BasePoint next_start = rotate(F.front(), 2.0 * pi * (j + 1) / k);
        for (std::size_t i = 0; i < F.size(); ++i) {
            if (j > 0 && i == 0 && on_ray) continue; // shared with the previous piece
            out.polyline.push_back(rotate(F[i], a));
        }
        const BasePoint piece_end = out.polyline.back();
        const double g = std::hypot(piece_end.x - next_start.x, piece_end.y - next_start.y);
        if (ideal_end) {
            append_arc(out.polyline, piece_end, next_start);
        } else {
            out.gap = std::max(out.gap, g);
        }
    }
    if (on_ray) out.polyline.pop_back(); // the last piece ends where the first starts
    out.closed = ideal_end || (on_ray && out.gap < 1e-8);
    return out;
}

std::string to_string(LemmaStatus s) {
    switch (s) {
    case LemmaStatus::held: return "held";
    case LemmaStatus::violated: return "violated";
    case LemmaStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

LemmaStatus rotation_lemma_check(const PlanarCurve& curve, double theta_prime_total) {
    if (curve.theta_prime.empty() || curve.theta_prime.size() != curve.samples.size()) return LemmaStatus::inapplicable;
    bool positive = false;
    for (double t : curve.theta_prime) {
        if (t < 0.0) return LemmaStatus::inapplicable;
        if (t > 0.0) positive = true;
    }
    if (!positive || theta_prime_total > pi + 1e-9) return LemmaStatus::inapplicable;
    const auto rep = self_intersections(curve);
    return rep.crossing_count() == 0 ? LemmaStatus::held : LemmaStatus::violated;
}

PlanarCurve critical_catenoid_curve(double mu, const CurveOptions& opts) {
    if (!(std::abs(mu) > 0.5)) throw DomainError("critical catenoids need |mu| > 1/2");
    const double d = Helicoid(mu).axis_distance();
    // left normal toward the axis when theta' > 0, away from it otherwise
    const double heading = mu < 0.0 ? 0.5 * pi : -0.5 * pi;
    return conjugate_vertical_boundary([mu](double s) { return theta_prime(s, mu); }, 0.5,
                                       {0.0, std::numeric_limits<double>::infinity(), 0.0},
                                       {{std::tanh(0.5 * d), 0.0}, heading}, opts);
}

} // namespace conjlab
