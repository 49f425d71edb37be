#include "conjlab/helicoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "conjlab/errors.hpp"

namespace conjlab {

namespace {

using boost::math::quadrature::gauss_kronrod;

bool is_half(double mu) { return mu == 0.5; }

double c_of(double mu) { return (1.0 + 2.0 * mu) / (1.0 - 2.0 * mu); }

// integrand of g_mu
double integrand(double y, double c) {
    if (c >= 0.0) return 0.5 * (1.0 + c * std::sqrt(4.0 + y * y) / std::sqrt(4.0 + c * c * y * y));
    // c < 0: same function with the cancellation removed
    const double a = 4.0 + c * c * y * y;
    return 2.0 * (1.0 - c * c) / (a + std::sqrt(a * (4.0 * c * c + c * c * y * y)));
}

// integrand(1/s)/s^2, bounded at s = 0 when c < 0
double tail_integrand(double s, double c) {
    const double a = 4.0 * s * s + c * c;
    return 2.0 * (1.0 - c * c) / (a + std::sqrt(a * (4.0 * c * c * s * s + c * c)));
}

// Gauss-Kronrod 61 panels, bisected until each panel meets its share of the tolerance.
// Near roundoff the estimate stops shrinking under bisection; the panel is then kept as is.
template <class F>
double adaptive_gk(F& f, double a, double b, double tol, int depth, double& err, double v, double e) {
    if (e <= tol || depth == 0) {
        err += e;
        return v;
    }
    const double m = 0.5 * (a + b);
    double el = 0.0, er = 0.0;
    const double vl = gauss_kronrod<double, 61>::integrate(f, a, m, 0, 0.0, &el);
    const double vr = gauss_kronrod<double, 61>::integrate(f, m, b, 0, 0.0, &er);
    if (el + er >= 0.5 * e) {
        err += e;
        return v;
    }
    return adaptive_gk(f, a, m, 0.5 * tol, depth - 1, err, vl, el) +
           adaptive_gk(f, m, b, 0.5 * tol, depth - 1, err, vr, er);
}

template <class F>
double adaptive_gk(F& f, double a, double b, double tol, int depth, double& err) {
    double e = 0.0;
    const double v = gauss_kronrod<double, 61>::integrate(f, a, b, 0, 0.0, &e);
    return adaptive_gk(f, a, b, tol, depth, err, v, e);
}

template <class F>
double quad(F f, double a, double b, const QuadratureOptions& opts) {
    if (a == b) return 0.0;
    double err = 0.0;
    const double v = adaptive_gk(f, a, b, 1e-3 * opts.abs_tol, 20, err);
    if (!(err <= opts.abs_tol)) throw NumericalFailure("g_mu quadrature did not converge", err);
    return v;
}

// splits [a, b] at an interior breakpoint when it falls inside
template <class F>
double quad_split(F f, double a, double b, double brk, const QuadratureOptions& opts) {
    if (brk > a && brk < b) return quad(f, a, brk, opts) + quad(f, brk, b, opts);
    return quad(f, a, b, opts);
}

// the integrand varies on the scale 2/|c| near y = 0, the tail on |c|/2 near s = 0
double head_scale(double c) { return c != 0.0 ? 2.0 / std::abs(c) : 1.0; }
double tail_scale(double c) { return 0.5 * std::abs(c); }

// g_mu(X) for X >= 0
double g_positive(double X, double c, const QuadratureOptions& opts) {
    const double sc = opts.integrand_scale;
    auto F = [c, sc](double y) { return sc * integrand(y, c); };
    if (X <= 1.0) return quad_split(F, 0.0, X, head_scale(c), opts);
    double v = quad_split(F, 0.0, 1.0, head_scale(c), opts);
    if (c < 0.0) {
        auto G = [c, sc](double s) { return sc * tail_integrand(s, c); };
        v += quad_split(G, 1.0 / X, 1.0, tail_scale(c), opts);
    } else {
        v += quad_split(F, 1.0, X, head_scale(c), opts);
    }
    return v;
}

} // namespace

std::string to_string(SurfaceKind k) {
    switch (k) {
    case SurfaceKind::umbrella: return "umbrella";
    case SurfaceKind::entire_graph: return "entire graph";
    case SurfaceKind::invariant_surface: return "invariant surface";
    case SurfaceKind::helicoid: return "helicoid";
    }
    return "unknown";
}

SurfaceKind HelicoidParams::kind() const {
    if (mu == 0.0) return SurfaceKind::umbrella;
    if (std::abs(mu) == 0.5) return SurfaceKind::invariant_surface;
    if (std::abs(mu) < 0.5) return SurfaceKind::entire_graph;
    return SurfaceKind::helicoid;
}

std::optional<double> HelicoidParams::c() const {
    if (is_half(mu)) return std::nullopt;
    return c_of(mu);
}

double g_mu(double x, double mu, const QuadratureOptions& opts) {
    if (is_half(mu)) throw DomainError("g_mu is undefined at mu = 1/2");
    if (!std::isfinite(x)) throw DomainError("g_mu needs a finite argument");
    const double c = c_of(mu);
    const double v = g_positive(std::abs(x), c, opts);
    return x < 0.0 ? -v : v;
}

Extent t_mu(double mu, const QuadratureOptions& opts) {
    if (std::abs(mu) <= 0.5) return Extent::infinite();
    const double c = c_of(mu);
    const double sc = opts.integrand_scale;
    const double head =
        quad_split([c, sc](double y) { return sc * integrand(y, c); }, 0.0, 1.0, head_scale(c), opts);
    const double tail =
        quad_split([c, sc](double s) { return sc * tail_integrand(s, c); }, 0.0, 1.0, tail_scale(c), opts);
    return Extent{std::abs(head + tail)};
}

std::optional<double> sigma(double mu) {
    if (mu == 0.0) return std::nullopt;
    return (1.0 + 2.0 * mu) * (1.0 + 2.0 * mu) / (4.0 * mu);
}

double theta_prime(double s, double mu) {
    if (!(std::abs(mu) > 0.5)) throw DomainError("theta_prime needs |mu| > 1/2");
    const double sg = *sigma(mu);
    return -sg / (1.0 + sg * sg * s * s);
}

Helicoid::Helicoid(double mu, QuadratureOptions opts) : mu_(mu), t_(t_mu(mu, opts)), opts_(opts) {
    if (!std::isfinite(mu)) throw DomainError("mu must be finite");
    if (!is_half(mu)) c_ = c_of(mu);
}

double Helicoid::dg(double x) const {
    if (!c_) throw DomainError("g_mu is undefined at mu = 1/2");
    return opts_.integrand_scale * integrand(x, *c_);
}

double Helicoid::f(double v) const {
    if (!(std::abs(v) < t_.or_inf())) throw DomainError("v outside (-t_mu, t_mu)");
    if (is_half(mu_)) return 0.0;
    if (mu_ == 0.0 && opts_.integrand_scale == 1.0) return v;
    if (mu_ == -0.5 && opts_.integrand_scale == 1.0) return 2.0 * v;
    if (v == 0.0) return 0.0;

    const double c = *c_;
    const double target = std::abs(v);
    // |g| is increasing on [0, inf); f has the sign of v * g'
    const double orient = integrand(0.0, c) * opts_.integrand_scale > 0.0 ? 1.0 : -1.0;
    auto phi = [&](double x) { return std::abs(g_positive(x, c, opts_)) - target; };

    double lo = 0.0, hi = 1.0;
    double phi_hi = phi(hi);
    while (phi_hi < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e150) throw NumericalFailure("profile inversion: no bracket", hi);
        phi_hi = phi(hi);
    }
    // safeguarded Newton on [lo, hi]
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double p = phi(x);
        if (p == 0.0) break;
        if (p < 0.0) lo = x; else hi = x;
        const double slope = std::abs(opts_.integrand_scale * integrand(x, c));
        double xn = x - p / slope;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        const double dx = std::abs(xn - x);
        x = xn;
        if (dx <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + x) ||
            hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + x))
            break;
    }
    return (v < 0.0 ? -1.0 : 1.0) * orient * x;
}

double Helicoid::df(double v) const {
    if (is_half(mu_)) return 0.0;
    return 1.0 / dg(f(v));
}

double Helicoid::angle(double u, double v) const {
    const double fp = df(v);
    const double w = 2.0 * v - f(v); // 2h + v
    return 2.0 / std::sqrt(u * u * fp * fp + w * w + 4.0);
}

double Helicoid::axis_distance() const {
    if (t_.is_infinite()) return std::numeric_limits<double>::infinity();
    const double t = t_.value();
    double err = 0.0;
    const double d = gauss_kronrod<double, 31>::integrate([this](double v) { return angle(0.0, v); }, 0.0, t, 12,
                                                          1e-12, &err);
    if (!(err <= 1e-8)) throw NumericalFailure("axis distance quadrature did not converge", err);
    return d;
}

HelicoidProfile invert_profile(double mu, std::span<const double> v_grid, const QuadratureOptions& opts) {
    const Helicoid hel(mu, opts);
    HelicoidProfile prof;
    prof.mu = mu;
    prof.t_mu = hel.half_period();
    prof.sigma = sigma(mu);
    prof.samples.reserve(v_grid.size());
    for (double v : v_grid) {
        if (!(std::abs(v) < prof.t_mu.or_inf())) {
            prof.rejected.push_back(v);
            continue;
        }
        const double f = hel.f(v);
        prof.samples.push_back({v, f, 0.5 * (v - f)});
    }
    return prof;
}

namespace {

double grid_spacing(const HelicoidProfile& p) {
    if (p.samples.size() < 5) throw DomainError("residual needs at least 5 samples");
    const double dv = p.samples[1].v - p.samples[0].v;
    if (!(dv > 0.0)) throw DomainError("profile grid must be increasing");
    for (std::size_t i = 1; i < p.samples.size(); ++i) {
        const double d = p.samples[i].v - p.samples[i - 1].v;
        if (std::abs(d - dv) > 1e-6 * dv) throw DomainError("profile grid must be uniform");
    }
    return dv;
}

} // namespace

double minimality_residual(const HelicoidProfile& profile) {
    const double dv = grid_spacing(profile);
    const auto& s = profile.samples;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double f = s[i].f;
        const double fp = (s[i + 1].f - s[i - 1].f) / (2.0 * dv);
        const double fpp = (s[i + 1].f - 2.0 * f + s[i - 1].f) / (dv * dv);
        const double r = (4.0 + f * f) * fpp - 2.0 * f * (fp - 1.0) * (fp - 2.0);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

std::optional<double> first_integral_residual(const HelicoidProfile& profile) {
    if (is_half(profile.mu)) return std::nullopt;
    const double dv = grid_spacing(profile);
    const double c = c_of(profile.mu);
    const auto& s = profile.samples;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double f = s[i].f;
        const double fp = (s[i + 1].f - s[i - 1].f) / (2.0 * dv);
        const double a = std::sqrt(4.0 + c * c * f * f);
        const double b = std::sqrt(4.0 + f * f);
        const double den = c >= 0.0 ? a + c * b : 4.0 * (1.0 - c * c) / (a - c * b);
        worst = std::max(worst, std::abs(fp - 2.0 * a / den));
    }
    return worst;
}

double angle_function(double u, double v, const HelicoidProfile& profile) {
    if (!(std::abs(v) < profile.t_mu.or_inf())) throw DomainError("v outside (-t_mu, t_mu)");
    return Helicoid(profile.mu).angle(u, v);
}

std::vector<double> uniform_grid(double lo, double hi, double spacing) {
    if (!(spacing > 0.0) || !(hi >= lo)) throw DomainError("bad grid");
    const auto n = static_cast<long>(std::floor((hi - lo) / spacing + 1e-9));
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) g.push_back(lo + static_cast<double>(i) * spacing);
    return g;
}

std::vector<double> profile_grid(double mu, double frac, double spacing, double cap) {
    const Extent t = t_mu(mu);
    const double V = t.is_finite() ? frac * t.value() : cap;
    const auto m = static_cast<long>(std::floor(V / spacing + 1e-9));
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(2 * m + 1));
    for (long i = -m; i <= m; ++i) g.push_back(static_cast<double>(i) * spacing);
    return g;
}

} // namespace conjlab
