#include "conjlab/js_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

namespace conjlab {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct QuadPoint {
    double w, lam, sx, sy;
};

struct Element {
    std::array<int, 3> v;
    double area;
    std::array<double, 3> gx, gy;
    std::array<QuadPoint, 3> q;
};

std::vector<Element> precompute(const TriangulatedDomain& D, const SpaceParams& params) {
    std::vector<Element> out;
    out.reserve(D.elements.size());
    constexpr double bary[3][3] = {{2.0 / 3, 1.0 / 6, 1.0 / 6}, {1.0 / 6, 2.0 / 3, 1.0 / 6}, {1.0 / 6, 1.0 / 6, 2.0 / 3}};
    for (const auto& el : D.elements) {
        Element E;
        E.v = el;
        const BasePoint a = D.nodes[el[0]], b = D.nodes[el[1]], c = D.nodes[el[2]];
        const double det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
        E.area = 0.5 * std::abs(det);
        // gradients of the barycentric coordinates
        E.gx = {(b.y - c.y) / det, (c.y - a.y) / det, (a.y - b.y) / det};
        E.gy = {(c.x - b.x) / det, (a.x - c.x) / det, (b.x - a.x) / det};
        for (int k = 0; k < 3; ++k) {
            const double x = bary[k][0] * a.x + bary[k][1] * b.x + bary[k][2] * c.x;
            const double y = bary[k][0] * a.y + bary[k][1] * b.y + bary[k][2] * c.y;
            const double lam = conformal_factor({x, y}, params);
            E.q[k] = {E.area / 3.0, lam, lam * params.tau * y, -lam * params.tau * x};
        }
        out.push_back(E);
    }
    return out;
}

double energy(const std::vector<Element>& els, std::span<const double> u) {
    double E = 0.0;
    for (const auto& e : els) {
        double gx = 0, gy = 0;
        for (int i = 0; i < 3; ++i) {
            gx += u[e.v[i]] * e.gx[i];
            gy += u[e.v[i]] * e.gy[i];
        }
        for (const auto& q : e.q) {
            const double px = gx + q.sx, py = gy + q.sy;
            E += q.w * q.lam * q.lam * std::sqrt(1.0 + (px * px + py * py) / (q.lam * q.lam));
        }
    }
    return E;
}

// full residual (all nodes); optional Hessian triplets on free nodes
void assemble(const std::vector<Element>& els, std::span<const double> u, std::vector<double>& grad,
              const std::vector<int>* free_index, std::vector<Eigen::Triplet<double>>* trip, bool lagged = false) {
    std::fill(grad.begin(), grad.end(), 0.0);
    if (trip) trip->clear();
    for (const auto& e : els) {
        double gx = 0, gy = 0;
        for (int i = 0; i < 3; ++i) {
            gx += u[e.v[i]] * e.gx[i];
            gy += u[e.v[i]] * e.gy[i];
        }
        double K[3][3] = {};
        for (const auto& q : e.q) {
            const double px = gx + q.sx, py = gy + q.sy;
            const double l2 = q.lam * q.lam;
            const double S = std::sqrt(1.0 + (px * px + py * py) / l2);
            for (int i = 0; i < 3; ++i) grad[e.v[i]] += q.w * (px * e.gx[i] + py * e.gy[i]) / S;
            if (!trip) continue;
            const double c = lagged ? 0.0 : 1.0 / (l2 * S * S * S);
            const double axx = 1.0 / S - c * px * px, axy = -c * px * py, ayy = 1.0 / S - c * py * py;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    K[i][j] += q.w * (e.gx[i] * (axx * e.gx[j] + axy * e.gy[j]) + e.gy[i] * (axy * e.gx[j] + ayy * e.gy[j]));
        }
        if (!trip) continue;
        for (int i = 0; i < 3; ++i) {
            const int fi = (*free_index)[e.v[i]];
            if (fi < 0) continue;
            for (int j = 0; j < 3; ++j) {
                const int fj = (*free_index)[e.v[j]];
                if (fj >= 0) trip->emplace_back(fi, fj, K[i][j]);
            }
        }
    }
}

std::optional<double> dirichlet_value(const BoundaryValue& bv, BasePoint p) {
    if (const auto* c = std::get_if<double>(&bv)) return *c;
    if (const auto* f = std::get_if<std::function<double(BasePoint)>>(&bv)) return (*f)(p);
    return std::nullopt;
}

double chain_measure(const TriangulatedDomain& D, const std::vector<int>& chain, std::size_t i) {
    double m = 0.0;
    auto len = [&](std::size_t a, std::size_t b) {
        const BasePoint p = D.nodes[chain[a]], q = D.nodes[chain[b]];
        return std::hypot(q.x - p.x, q.y - p.y);
    };
    if (i > 0) m += 0.5 * len(i - 1, i);
    if (i + 1 < chain.size()) m += 0.5 * len(i, i + 1);
    return m;
}

double dist_chart(BasePoint a, BasePoint b) { return std::hypot(a.x - b.x, a.y - b.y); }

} // namespace

const BoundaryValue& BoundaryValues::operator[](BoundaryTag t) const {
    switch (t) {
    case BoundaryTag::side_p0p1: return p0p1;
    case BoundaryTag::side_p0p2: return p0p2;
    case BoundaryTag::side_p1p2: return p1p2;
    case BoundaryTag::truncation: return truncation;
    default: throw DomainError("interior nodes carry no boundary value");
    }
}

double area_energy(const TriangulatedDomain& domain, std::span<const double> u, const SpaceParams& params) {
    if (u.size() != domain.nodes.size()) throw DomainError("field size does not match the mesh");
    return energy(precompute(domain, params), u);
}

GraphSolution solve_dirichlet(DomainPtr domain, const BoundaryValues& bv, const SpaceParams& params,
                              const SolverOptions& opts) {
    if (!domain) throw DomainError("no domain");
    const auto& D = *domain;
    if (params.kappa != D.params.kappa) throw DomainError("mesh and space disagree on kappa");
    const std::size_t n = D.nodes.size();

    std::vector<double> u(n, 0.0);
    if (opts.initial) {
        if (opts.initial->size() != n) throw DomainError("initial guess has the wrong size");
        u = *opts.initial;
    }
    std::vector<int> free_index(n, -1);
    int nf = 0;
    bool any_fixed = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (D.tags[i] == BoundaryTag::interior) {
            free_index[i] = nf++;
            continue;
        }
        const auto val = dirichlet_value(bv[D.tags[i]], D.nodes[i]);
        if (val) {
            if (!std::isfinite(*val)) throw DomainError("boundary values must be finite");
            u[i] = *val;
            any_fixed = true;
        } else {
            free_index[i] = nf++;
        }
    }
    if (!any_fixed) throw DomainError("at least one boundary side needs Dirichlet data");

    const auto els = precompute(D, params);
    GraphSolution sol;
    sol.domain = domain;
    sol.params = params;
    sol.M = std::holds_alternative<double>(bv.p1p2) ? std::get<double>(bv.p1p2) : nan;

    std::vector<double> grad(n), trial(n);
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::SparseMatrix<double> Hm(nf, nf);
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
    bool analyzed = false;
    double E = energy(els, u);
    sol.energy_history.push_back(E);
    double decrement = nan;
    // after a heavily damped step the lagged-coefficient matrix is used: it is more robust where the graph is steep
    bool lagged = false;

    for (int it = 0;; ++it) {
        if (nf == 0) {
            decrement = 0.0;
            break;
        }
        assemble(els, u, grad, &free_index, &trip, lagged);
        Hm.setFromTriplets(trip.begin(), trip.end());
        if (!analyzed) {
            ldlt.analyzePattern(Hm);
            analyzed = true;
        }
        ldlt.factorize(Hm);
        if (ldlt.info() != Eigen::Success) throw SolverFailure("Hessian factorization failed", decrement, it);
        Eigen::VectorXd g(nf);
        for (std::size_t i = 0; i < n; ++i)
            if (free_index[i] >= 0) g[free_index[i]] = grad[i];
        const Eigen::VectorXd d = ldlt.solve(-g);
        const double gd = g.dot(d);
        decrement = std::sqrt(std::max(0.0, -gd));
        if (!lagged && decrement < opts.tol) {
            sol.newton_iters = it;
            break;
        }
        if (it >= opts.max_iters) {
            std::ostringstream os;
            os << "Newton stagnated after " << it << " iterations, decrement " << decrement;
            throw SolverFailure(os.str(), decrement, it);
        }
        double t = 1.0;
        for (;;) {
            trial = u;
            for (std::size_t i = 0; i < n; ++i)
                if (free_index[i] >= 0) trial[i] += t * d[free_index[i]];
            const double Et = energy(els, trial);
            if (Et <= E + opts.armijo * t * gd) {
                E = Et;
                break;
            }
            // energy differences below roundoff: the quadratic model is trusted
            if (t == 1.0 && -gd < 1e-13 * std::max(1.0, std::abs(E))) {
                E = Et;
                break;
            }
            t *= 0.5;
            if (t < 1e-12) throw SolverFailure("line search failed", decrement, it);
        }
        lagged = t < 0.25;
        u.swap(trial);
        sol.energy_history.push_back(E);
    }
    sol.u = std::move(u);
    sol.residual_norm = decrement;
    return sol;
}

std::vector<double> distance_to_side_p1p2(const TriangulatedDomain& D, const SpaceParams& params) {
    std::vector<BasePoint> samples;
    const auto& ch = D.chain_p1p2;
    for (std::size_t i = 0; i + 1 < ch.size(); ++i)
        for (int s = 0; s < 4; ++s) samples.push_back(geodesic_lerp(D.nodes[ch[i]], D.nodes[ch[i + 1]], s / 4.0, params));
    if (!ch.empty()) samples.push_back(D.nodes[ch.back()]);
    std::vector<double> out(D.nodes.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < D.nodes.size(); ++i)
        for (const auto& s : samples) out[i] = std::min(out[i], base_distance(D.nodes[i], s, params));
    return out;
}

JSRun solve_jenkins_serrin(Extent a, Extent b, int k, double H, std::span<const double> M_schedule,
                           double target_h, std::optional<double> R_trunc, const JSOptions& opts) {
    // H only picks the space; with explicit parameters the minimal case H = 0 is allowed
    const bool h_ok = opts.params ? (H >= 0.0 && H <= 0.5) : (H > 0.0 && H <= 0.5);
    if (!h_ok) throw DomainError("H must lie in (0, 1/2]");
    if (M_schedule.empty()) throw DomainError("empty M schedule");
    for (std::size_t i = 0; i < M_schedule.size(); ++i) {
        if (!(M_schedule[i] > 0.0) || !std::isfinite(M_schedule[i])) throw DomainError("M values must be positive");
        if (i > 0 && !(M_schedule[i] > M_schedule[i - 1])) throw DomainError("M schedule must increase");
    }
    const SpaceParams params = opts.params.value_or(SpaceParams::from_mean_curvature(H));
    const auto T = build_triangle(a, b, k, params.kappa);
    JSRun run;
    run.domain = std::make_shared<const TriangulatedDomain>(triangulate(T, target_h, R_trunc, opts.corner_grading));
    run.params = params;

    const auto dist = distance_to_side_p1p2(*run.domain, params);
    const double dmax = *std::max_element(dist.begin(), dist.end());
    run.cauchy_distance = std::min(opts.cauchy_distance, 0.5 * dmax);
    const double mono_distance = 3.0 * target_h;

    SolverOptions so = opts.solver;
    for (double M : M_schedule) {
        BoundaryValues bv;
        bv.p1p2 = opts.negate ? -M : M;
        if (!run.solutions.empty()) so.initial = run.solutions.back().u;
        run.solutions.push_back(solve_dirichlet(run.domain, bv, params, so));
        if (run.solutions.size() < 2) continue;
        const auto& u0 = run.solutions[run.solutions.size() - 2].u;
        const auto& u1 = run.solutions.back().u;
        double change = 0.0, viol = 0.0;
        for (std::size_t i = 0; i < u0.size(); ++i) {
            const double du = opts.negate ? u0[i] - u1[i] : u1[i] - u0[i];
            if (dist[i] >= run.cauchy_distance) change = std::max(change, std::abs(du));
            if (dist[i] >= mono_distance) viol = std::max(viol, -du);
        }
        run.cauchy.push_back(change);
        run.monotonicity_violation = std::max(run.monotonicity_violation, viol);
    }
    run.discretization_failure = run.monotonicity_violation > opts.monotonicity_tol;
    return run;
}

std::vector<double> nodal_flux(const GraphSolution& sol) {
    const auto& D = *sol.domain;
    const auto els = precompute(D, sol.params);
    std::vector<double> R(D.nodes.size());
    assemble(els, sol.u, R, nullptr, nullptr);
    std::vector<double> Q(D.nodes.size(), nan);
    for (const auto* ch : {&D.chain_p0p1, &D.chain_p0p2}) {
        // skip both ends: p0 and the far corner see two sides
        for (std::size_t i = 1; i + 1 < ch->size(); ++i) {
            const int v = (*ch)[i];
            Q[v] = R[v] / chain_measure(D, *ch, i);
        }
    }
    return Q;
}

std::vector<double> nu_field(const GraphSolution& sol) {
    const auto& D = *sol.domain;
    const auto& P = sol.params;
    const std::size_t n = D.nodes.size();
    std::vector<double> sgx(n, 0.0), sgy(n, 0.0), wsum(n, 0.0);
    for (const auto& el : D.elements) {
        const BasePoint a = D.nodes[el[0]], b = D.nodes[el[1]], c = D.nodes[el[2]];
        const double det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
        const double gx = (sol.u[el[0]] * (b.y - c.y) + sol.u[el[1]] * (c.y - a.y) + sol.u[el[2]] * (a.y - b.y)) / det;
        const double gy = (sol.u[el[0]] * (c.x - b.x) + sol.u[el[1]] * (a.x - c.x) + sol.u[el[2]] * (b.x - a.x)) / det;
        const double w = 0.5 * std::abs(det);
        for (int v : el) {
            sgx[v] += w * gx;
            sgy[v] += w * gy;
            wsum[v] += w;
        }
    }
    std::vector<double> nu(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BasePoint p = D.nodes[i];
        const double lam = conformal_factor(p, P);
        const double px = sgx[i] / wsum[i] + lam * P.tau * p.y;
        const double py = sgy[i] / wsum[i] - lam * P.tau * p.x;
        nu[i] = 1.0 / std::sqrt(1.0 + (px * px + py * py) / (lam * lam));
    }
    const auto Q = nodal_flux(sol);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::isnan(Q[i])) continue;
        const double lam = conformal_factor(D.nodes[i], P);
        nu[i] = std::sqrt(std::max(0.0, 1.0 - Q[i] * Q[i] / (lam * lam)));
    }
    if (!D.chain_p0p1.empty()) nu[D.chain_p0p1.front()] = 1.0;
    return nu;
}

double integrate_along(const TriangulatedDomain& D, const std::vector<int>& chain, std::span<const double> nu,
                       const SpaceParams& params) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        s += 0.5 * (nu[chain[i]] + nu[chain[i + 1]]) * base_distance(D.nodes[chain[i]], D.nodes[chain[i + 1]], params);
    return s;
}

namespace {

DistanceEstimate chain_estimate(const JSRun& run, const std::vector<int>& chain) {
    if (run.solutions.empty()) throw DomainError("empty solution sequence");
    DistanceEstimate est;
    est.value = integrate_along(*run.domain, chain, nu_field(run.last()), run.params);
    est.previous = run.solutions.size() > 1
                       ? integrate_along(*run.domain, chain, nu_field(run.solutions[run.solutions.size() - 2]), run.params)
                       : est.value;
    return est;
}

} // namespace

DistanceEstimate distance_d(const JSRun& run) { return chain_estimate(run, run.domain->chain_p0p2); }
DistanceEstimate rho_estimate(const JSRun& run) { return chain_estimate(run, run.domain->chain_p0p1); }

ThetaPrimeSamples boundary_theta_prime(const GraphSolution& sol, Fiber fiber, int n_levels) {
    const auto& D = *sol.domain;
    const auto& T = D.triangle;
    const Vertex& V = fiber == Fiber::p1 ? T.p1 : T.p2;
    if (V.ideal) throw DomainError("fiber over an ideal vertex");
    const auto& zc = fiber == Fiber::p1 ? D.chain_p0p1 : D.chain_p0p2;
    const auto& mc = D.chain_p1p2;
    const BasePoint v = V.point;
    auto near_v = [&](int idx) { return dist_chart(D.nodes[idx], v) < 1e-12; };
    int mn;
    if (near_v(mc.front())) mn = mc[1];
    else if (near_v(mc.back())) mn = mc[mc.size() - 2];
    else throw GeometryError("vertex is not an end of side p1p2");
    int zn;
    if (near_v(zc.front())) zn = zc[1];
    else if (near_v(zc.back())) zn = zc[zc.size() - 2];
    else throw GeometryError("vertex is not an end of its zero side");

    auto tangent_angle = [&](int other) {
        const BasePoint q = geodesic_lerp(v, D.nodes[other], 1e-6, sol.params);
        return std::atan2(q.y - v.y, q.x - v.x);
    };
    const double az = tangent_angle(zn);
    double sweep = tangent_angle(mn) - az;
    while (sweep > std::numbers::pi) sweep -= 2.0 * std::numbers::pi;
    while (sweep <= -std::numbers::pi) sweep += 2.0 * std::numbers::pi;

    const double M = sol.M;
    if (!std::isfinite(M)) throw DomainError("theta reconstruction needs a constant value on side p1p2");
    const double hc = D.target_h / conformal_factor(v, sol.params);
    const MeshLocator loc(D);
    constexpr int n_arc = 720;

    auto level_angles = [&](double r) {
        std::vector<double> al, uv;
        for (int j = 1; j < n_arc; ++j) {
            const double ang = az + sweep * j / n_arc;
            const auto val = loc.interpolate(sol.u, {v.x + r * std::cos(ang), v.y + r * std::sin(ang)});
            if (!val) continue;
            al.push_back(ang);
            uv.push_back(*val);
        }
        std::vector<double> out(static_cast<std::size_t>(n_levels), nan);
        for (int l = 0; l < n_levels; ++l) {
            const double target = M * (l + 1.0) / (n_levels + 1.0);
            for (std::size_t j = 0; j + 1 < uv.size(); ++j) {
                const double lo = std::min(uv[j], uv[j + 1]), hi = std::max(uv[j], uv[j + 1]);
                if (target >= lo && target <= hi && hi > lo) {
                    const double t = (target - uv[j]) / (uv[j + 1] - uv[j]);
                    out[static_cast<std::size_t>(l)] = al[j] + t * (al[j + 1] - al[j]);
                    break;
                }
            }
        }
        return out;
    };
    const double r1 = 3.0 * hc;
    const auto a1 = level_angles(r1), a2 = level_angles(2.0 * r1);

    std::vector<double> s_levels(static_cast<std::size_t>(n_levels)), alpha(static_cast<std::size_t>(n_levels), nan);
    for (int l = 0; l < n_levels; ++l) {
        s_levels[l] = M * (l + 1.0) / (n_levels + 1.0);
        if (!std::isnan(a1[l]) && !std::isnan(a2[l]) && std::abs(a1[l] - a2[l]) < 0.2)
            alpha[l] = 2.0 * a1[l] - a2[l];
    }
    ThetaPrimeSamples out;
    for (int l = 1; l + 1 < n_levels; ++l) {
        if (std::isnan(alpha[l - 1]) || std::isnan(alpha[l + 1])) continue;
        out.s.push_back(s_levels[l]);
        out.theta_prime.push_back((alpha[l + 1] - alpha[l - 1]) / (s_levels[l + 1] - s_levels[l - 1]));
    }
    if (out.s.empty()) {
        out.flagged = true;
        return out;
    }
    out.s_min = std::min(out.s.front(), out.s.back());
    out.s_max = std::max(out.s.front(), out.s.back());
    out.flagged = out.s.size() < static_cast<std::size_t>(n_levels) / 2;
    return out;
}

std::vector<BasePoint> dihedral_orbit(BasePoint p, int k, double merge_radius) {
    std::vector<BasePoint> out;
    for (int j = 0; j < k; ++j) {
        const double c = std::cos(2.0 * std::numbers::pi * j / k), s = std::sin(2.0 * std::numbers::pi * j / k);
        for (const BasePoint q : {p, BasePoint{p.x, -p.y}}) {
            const BasePoint r{c * q.x - s * q.y, s * q.x + c * q.y};
            const bool dup = std::any_of(out.begin(), out.end(), [&](BasePoint o) { return dist_chart(o, r) < merge_radius; });
            if (!dup) out.push_back(r);
        }
    }
    return out;
}

CriticalPoints critical_points_from_field(const TriangulatedDomain& D, std::span<const double> nu,
                                          std::span<const double> flux, double tol) {
    const std::size_t n = D.nodes.size();
    const double h = D.target_h;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> flag(n, 0);
    CriticalPoints out;
    for (std::size_t i = 0; i < n; ++i)
        if (nu[i] > 1.0 - tol) {
            flag[i] = 1;
            ++out.flagged_nodes;
        }
    for (const auto& el : D.elements)
        for (int a = 0; a < 3; ++a) {
            const int p = el[a], q = el[(a + 1) % 3];
            if (flag[p] && flag[q]) parent[find(p)] = find(q);
        }
    std::vector<int> best(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!flag[i]) continue;
        const int r = find(static_cast<int>(i));
        if (best[r] < 0 || nu[i] > nu[best[r]]) best[r] = static_cast<int>(i);
    }
    std::vector<BasePoint> pts;
    for (std::size_t i = 0; i < n; ++i)
        if (best[i] >= 0) pts.push_back(D.nodes[best[i]]);

    auto add = [&](BasePoint p) {
        for (const auto& q : pts)
            if (base_distance(p, q, D.params) < 2.0 * h) return;
        pts.push_back(p);
    };
    const BasePoint p0 = D.triangle.p0.point;
    if (!flux.empty()) {
        for (const auto* ch : {&D.chain_p0p1, &D.chain_p0p2}) {
            const BasePoint end = D.nodes[ch->back()];
            for (std::size_t i = 1; i + 2 < ch->size(); ++i) {
                const int a = (*ch)[i], b = (*ch)[i + 1];
                const double qa = flux[a], qb = flux[b];
                if (std::isnan(qa) || std::isnan(qb) || !(qa * qb < 0.0)) continue;
                const double t = qa / (qa - qb);
                const BasePoint pa = D.nodes[a], pb = D.nodes[b];
                const BasePoint z{pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)};
                if (base_distance(z, p0, D.params) < 2.0 * h || base_distance(z, end, D.params) < 2.0 * h) continue;
                add(z);
            }
        }
    }
    add(p0);
    // the cluster containing p0 is reported at p0
    for (auto& q : pts)
        if (base_distance(q, p0, D.params) < 2.0 * h) q = p0;
    out.fundamental = pts;
    const int k = D.triangle.k;
    for (const auto& p : pts)
        for (const auto& r : dihedral_orbit(p, k, h)) {
            const bool dup = std::any_of(out.points.begin(), out.points.end(), [&](BasePoint o) { return dist_chart(o, r) < h; });
            if (!dup) out.points.push_back(r);
        }
    return out;
}

CriticalPoints critical_points_of_nu(const GraphSolution& sol, std::optional<double> tol) {
    const auto nu = nu_field(sol);
    const auto Q = nodal_flux(sol);
    return critical_points_from_field(*sol.domain, nu, Q, tol.value_or(5.0 * sol.domain->target_h));
}

} // namespace conjlab
