#include "conjlab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace conjlab {

namespace {

using cplx = std::complex<double>;

double signed_area(BasePoint a, BasePoint b, BasePoint c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

struct Rail {
    BasePoint from, to;
    BoundaryTag tag;
};

} // namespace

std::string to_string(BoundaryTag t) {
    switch (t) {
    case BoundaryTag::interior: return "interior";
    case BoundaryTag::side_p0p1: return "side_p0p1";
    case BoundaryTag::side_p0p2: return "side_p0p2";
    case BoundaryTag::side_p1p2: return "side_p1p2";
    case BoundaryTag::truncation: return "truncation";
    }
    return "?";
}

const std::vector<int>& TriangulatedDomain::chain(BoundaryTag t) const {
    switch (t) {
    case BoundaryTag::side_p0p1: return chain_p0p1;
    case BoundaryTag::side_p0p2: return chain_p0p2;
    case BoundaryTag::side_p1p2: return chain_p1p2;
    case BoundaryTag::truncation: return chain_truncation;
    default: throw DomainError("interior nodes have no chain");
    }
}

std::size_t TriangulatedDomain::interior_count() const {
    return static_cast<std::size_t>(std::count(tags.begin(), tags.end(), BoundaryTag::interior));
}

BasePoint ideal_side_point(BasePoint p, const Vertex& ideal, double R, const SpaceParams& params) {
    if (!ideal.ideal) throw DomainError("ideal_side_point needs an ideal vertex");
    const BasePoint origin{0.0, 0.0};
    if (!(base_distance(origin, p, params) < R)) throw DomainError("truncation distance must exceed the finite side");
    if (params.kappa == 0.0) {
        const double ex = ideal.point.x, ey = ideal.point.y;
        const double pe = p.x * ex + p.y * ey;
        const double t = -pe + std::sqrt(pe * pe - (p.x * p.x + p.y * p.y) + R * R);
        return {p.x + t * ex, p.y + t * ey};
    }
    const double d = params.delta();
    const cplx a{0.5 * d * p.x, 0.5 * d * p.y};
    const cplx xi = cplx{ideal.point.x, ideal.point.y} / std::hypot(ideal.point.x, ideal.point.y);
    const cplx xim = (xi - a) / (1.0 - std::conj(a) * xi);
    const cplx dir = xim / std::abs(xim);
    auto at = [&](double r) {
        const cplx w = dir * r;
        const cplx z = (w + a) / (1.0 + std::conj(a) * w);
        return BasePoint{2.0 * z.real() / d, 2.0 * z.imag() / d};
    };
    // bisection on the unit-disk radius of the moved point
    double lo = 0.0, hi = 1.0 - 1e-15;
    if (base_distance(origin, at(hi), params) < R) throw DomainError("truncation distance too large for double precision");
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        (base_distance(origin, at(mid), params) < R ? lo : hi) = mid;
    }
    return at(0.5 * (lo + hi));
}

TriangulatedDomain triangulate(const GeodesicTriangle& T, double target_h, std::optional<double> R_trunc,
                               double corner_grading) {
    if (!(target_h > 0.0) || !std::isfinite(target_h)) throw DomainError("target_h must be positive");
    if (!(corner_grading >= 1.0)) throw DomainError("corner grading must be at least 1");
    if (T.a.is_infinite() && T.b.is_infinite()) throw DomainError("cannot triangulate the wedge");
    const SpaceParams sp{T.kappa, 0.0, std::nullopt};
    const bool finite = T.a.is_finite() && T.b.is_finite();
    if (!finite && !R_trunc) throw DomainError("an ideal vertex needs a truncation distance");
    if (finite) R_trunc.reset();

    const BasePoint O = T.p0.point;
    Rail L, Rr;
    BoundaryTag first_tag, last_tag;
    if (finite) {
        L = {O, T.p1.point, BoundaryTag::side_p0p1};
        Rr = {O, T.p2.point, BoundaryTag::side_p0p2};
        first_tag = BoundaryTag::side_p0p1; // degenerate rung at p0
        last_tag = BoundaryTag::side_p1p2;
    } else if (T.a.is_infinite()) {
        const BasePoint A = point_at_distance(*R_trunc, 0.0, sp);
        const BasePoint B = ideal_side_point(T.p2.point, T.p1, *R_trunc, sp);
        if (!(*R_trunc > T.b.value())) throw DomainError("truncation distance must exceed b");
        L = {O, A, BoundaryTag::side_p0p1};
        Rr = {T.p2.point, B, BoundaryTag::side_p1p2};
        first_tag = BoundaryTag::side_p0p2;
        last_tag = BoundaryTag::truncation;
    } else {
        const BasePoint A = ideal_side_point(T.p1.point, T.p2, *R_trunc, sp);
        const BasePoint B = point_at_distance(*R_trunc, T.wedge_angle(), sp);
        if (!(*R_trunc > T.a.value())) throw DomainError("truncation distance must exceed a");
        L = {T.p1.point, A, BoundaryTag::side_p1p2};
        Rr = {O, B, BoundaryTag::side_p0p2};
        first_tag = BoundaryTag::side_p0p1;
        last_tag = BoundaryTag::truncation;
    }

    // the vertices where side p1p2 meets a zero side, in rail/rung parameters (t, s)
    std::vector<std::array<double, 2>> corners;
    if (finite) corners = {{1.0, 0.0}, {1.0, 1.0}};
    else if (T.a.is_infinite()) corners = {{0.0, 1.0}};
    else corners = {{0.0, 0.0}};
    const double len = std::max(base_distance(L.from, L.to, sp), base_distance(Rr.from, Rr.to, sp));
    // radial power grading r -> r0 (r/r0)^g around each corner, measured in lengths so that
    // elements are roughly isotropic where the map bends them; sides through a corner map into themselves
    std::vector<double> rung_len;
    for (const auto& c : corners)
        rung_len.push_back(base_distance(geodesic_lerp(L.from, L.to, c[0], sp), geodesic_lerp(Rr.from, Rr.to, c[0], sp), sp));
    auto graded = [&](double t, double u) -> std::array<double, 2> {
        for (std::size_t k = 0; k < corners.size(); ++k) {
            const auto& c = corners[k];
            const double sy = rung_len[k], r0 = 0.5 * std::min(len, sy);
            const double dt = (t - c[0]) * len, du = (u - c[1]) * sy;
            const double r = std::hypot(dt, du);
            if (r < r0 && r > 0.0) {
                const double f = std::pow(r / r0, corner_grading - 1.0);
                return {c[0] + f * dt / len, c[1] + f * du / sy};
            }
        }
        return {t, u};
    };

    TriangulatedDomain D;
    D.params = sp;
    D.triangle = T;
    D.target_h = target_h;
    D.R_trunc = R_trunc;

    const int n = std::max(1, static_cast<int>(std::ceil(len / target_h)));
    std::vector<std::vector<int>> ids(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<double>> us(ids.size()); // graded rung parameter, drives the zipper

    for (int i = 0; i <= n; ++i) {
        const double t0 = static_cast<double>(i) / n;
        const double rl = base_distance(geodesic_lerp(L.from, L.to, t0, sp), geodesic_lerp(Rr.from, Rr.to, t0, sp), sp);
        const int m = rl < 1e-13 ? 0 : std::max(1, static_cast<int>(std::ceil(rl / target_h)));
        auto& row = ids[static_cast<std::size_t>(i)];
        for (int j = 0; j <= m; ++j) {
            const auto [t, u] = graded(t0, m == 0 ? 0.0 : static_cast<double>(j) / m);
            const BasePoint li = geodesic_lerp(L.from, L.to, t, sp);
            const BasePoint p = m == 0 ? li : geodesic_lerp(li, geodesic_lerp(Rr.from, Rr.to, t, sp), u, sp);
            BoundaryTag tag = BoundaryTag::interior;
            if (j == 0) tag = L.tag;
            else if (j == m) tag = Rr.tag;
            else if (i == 0) tag = first_tag;
            else if (i == n) tag = last_tag;
            us[static_cast<std::size_t>(i)].push_back(u);
            row.push_back(static_cast<int>(D.nodes.size()));
            D.nodes.push_back(p);
            D.tags.push_back(tag);
        }
    }
    // corners that are not already correct
    if (finite) {
        D.tags[static_cast<std::size_t>(ids[0][0])] = BoundaryTag::side_p0p1;
        D.tags[static_cast<std::size_t>(ids[n].front())] = BoundaryTag::side_p0p1;
        D.tags[static_cast<std::size_t>(ids[n].back())] = BoundaryTag::side_p0p2;
    } else if (T.a.is_infinite()) {
        D.tags[static_cast<std::size_t>(ids[0].front())] = BoundaryTag::side_p0p1;
        D.tags[static_cast<std::size_t>(ids[0].back())] = BoundaryTag::side_p0p2;
    } else {
        D.tags[static_cast<std::size_t>(ids[0].front())] = BoundaryTag::side_p0p1;
        D.tags[static_cast<std::size_t>(ids[0].back())] = BoundaryTag::side_p0p1;
    }

    std::size_t flipped = 0, kept = 0; // a consistent zipper has one raw orientation
    for (int i = 0; i < n; ++i) {
        const auto& a = ids[static_cast<std::size_t>(i)];
        const auto& b = ids[static_cast<std::size_t>(i) + 1];
        const auto& ua = us[static_cast<std::size_t>(i)];
        const auto& ub = us[static_cast<std::size_t>(i) + 1];
        const int ma = static_cast<int>(a.size()) - 1, mb = static_cast<int>(b.size()) - 1;
        int p = 0, q = 0;
        while (p < ma || q < mb) {
            std::array<int, 3> e;
            const bool step_a = q == mb || (p < ma && ua[p + 1] <= ub[q + 1]);
            if (step_a) {
                e = {a[p], a[p + 1], b[q]};
                ++p;
            } else {
                e = {a[p], b[q + 1], b[q]};
                ++q;
            }
            const double ar = signed_area(D.nodes[e[0]], D.nodes[e[1]], D.nodes[e[2]]);
            if (std::abs(ar) < 1e-300) continue;
            (ar < 0.0 ? flipped : kept)++;
            if (ar < 0.0) std::swap(e[1], e[2]);
            D.elements.push_back(e);
        }
    }

    if (flipped > 0 && kept > 0) throw GeometryError("triangulation folded over; reduce the corner grading");

    auto column = [&](bool last) {
        std::vector<int> c;
        for (const auto& row : ids) c.push_back(last ? row.back() : row.front());
        return c;
    };
    if (finite) {
        D.chain_p0p1 = column(false);
        D.chain_p0p2 = column(true);
        D.chain_p1p2 = ids[n];
    } else if (T.a.is_infinite()) {
        D.chain_p0p1 = column(false);
        D.chain_p0p2 = ids[0];
        D.chain_p1p2 = column(true);
        D.chain_truncation = ids[n];
    } else {
        D.chain_p0p1.assign(ids[0].rbegin(), ids[0].rend());
        D.chain_p0p2 = column(true);
        D.chain_p1p2 = column(false);
        D.chain_truncation = ids[n];
    }
    return D;
}

MeshLocator::MeshLocator(const TriangulatedDomain& domain) : dom_(&domain) {
    double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
    for (const auto& p : domain.nodes) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double ext = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double ne = std::max<double>(1.0, static_cast<double>(domain.elements.size()));
    cell_ = ext / std::max(1.0, std::sqrt(ne / 2.0));
    x0_ = xmin - 1e-9 * ext;
    y0_ = ymin - 1e-9 * ext;
    nx_ = static_cast<int>((xmax - x0_) / cell_) + 1;
    ny_ = static_cast<int>((ymax - y0_) / cell_) + 1;
    buckets_.assign(static_cast<std::size_t>(nx_) * ny_, {});
    for (std::size_t e = 0; e < domain.elements.size(); ++e) {
        double ex0 = 1e300, ey0 = 1e300, ex1 = -1e300, ey1 = -1e300;
        for (int v : domain.elements[e]) {
            const auto& p = domain.nodes[static_cast<std::size_t>(v)];
            ex0 = std::min(ex0, p.x);
            ex1 = std::max(ex1, p.x);
            ey0 = std::min(ey0, p.y);
            ey1 = std::max(ey1, p.y);
        }
        const int i0 = std::clamp(static_cast<int>((ex0 - x0_) / cell_), 0, nx_ - 1);
        const int i1 = std::clamp(static_cast<int>((ex1 - x0_) / cell_), 0, nx_ - 1);
        const int j0 = std::clamp(static_cast<int>((ey0 - y0_) / cell_), 0, ny_ - 1);
        const int j1 = std::clamp(static_cast<int>((ey1 - y0_) / cell_), 0, ny_ - 1);
        for (int j = j0; j <= j1; ++j)
            for (int i = i0; i <= i1; ++i)
                buckets_[static_cast<std::size_t>(j) * nx_ + i].push_back(static_cast<int>(e));
    }
}

std::optional<MeshLocator::Hit> MeshLocator::locate(BasePoint p) const {
    const int i = static_cast<int>(std::floor((p.x - x0_) / cell_));
    const int j = static_cast<int>(std::floor((p.y - y0_) / cell_));
    if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return std::nullopt;
    for (int e : buckets_[static_cast<std::size_t>(j) * nx_ + i]) {
        const auto& el = dom_->elements[static_cast<std::size_t>(e)];
        const BasePoint a = dom_->nodes[el[0]], b = dom_->nodes[el[1]], c = dom_->nodes[el[2]];
        const double A = signed_area(a, b, c);
        const double l0 = signed_area(p, b, c) / A, l1 = signed_area(a, p, c) / A;
        const double l2 = 1.0 - l0 - l1;
        constexpr double eps = -1e-10;
        if (l0 >= eps && l1 >= eps && l2 >= eps) return Hit{e, {l0, l1, l2}};
    }
    return std::nullopt;
}

std::optional<double> MeshLocator::interpolate(const std::vector<double>& field, BasePoint p) const {
    const auto hit = locate(p);
    if (!hit) return std::nullopt;
    const auto& el = dom_->elements[static_cast<std::size_t>(hit->element)];
    return hit->bary[0] * field[el[0]] + hit->bary[1] * field[el[1]] + hit->bary[2] * field[el[2]];
}

} // namespace conjlab
