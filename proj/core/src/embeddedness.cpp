#include <algorithm>
#include <cmath>

#include "conjlab/conjugate.hpp"

namespace conjlab {

namespace {

double cross(BasePoint o, BasePoint a, BasePoint b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double point_segment_distance(BasePoint p, BasePoint a, BasePoint b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double l2 = dx * dx + dy * dy;
    double t = l2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / l2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

double segment_distance(BasePoint a, BasePoint b, BasePoint c, BasePoint d) {
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d), point_segment_distance(c, a, b),
                     point_segment_distance(d, a, b)});
}

} // namespace

std::vector<Crossing> polyline_crossings(std::span<const BasePoint> P, bool closed, double eps) {
    const std::size_t n = P.size();
    if (n < 3) throw DomainError("need a polyline with at least 2 segments");
    const std::size_t nseg = closed ? n : n - 1;
    auto seg = [&](std::size_t i) { return std::pair{P[i], P[(i + 1) % n]}; };

    std::vector<double> arc(nseg + 1, 0.0);
    for (std::size_t i = 0; i < nseg; ++i) {
        const auto [a, b] = seg(i);
        arc[i + 1] = arc[i] + std::hypot(b.x - a.x, b.y - a.y);
    }

    // bounding boxes over contiguous index ranges; consecutive segments are spatially coherent
    struct Node {
        double x0, y0, x1, y1;
        std::size_t lo, hi;
        int left = -1, right = -1;
    };
    std::vector<Node> tree;
    tree.reserve(2 * nseg / 4 + 8);
    auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> int {
        Node nd{1e300, 1e300, -1e300, -1e300, lo, hi};
        for (std::size_t i = lo; i < hi; ++i) {
            const auto [a, b] = seg(i);
            nd.x0 = std::min({nd.x0, a.x, b.x});
            nd.x1 = std::max({nd.x1, a.x, b.x});
            nd.y0 = std::min({nd.y0, a.y, b.y});
            nd.y1 = std::max({nd.y1, a.y, b.y});
        }
        const int id = static_cast<int>(tree.size());
        tree.push_back(nd);
        if (hi - lo > 8) {
            const std::size_t mid = lo + (hi - lo) / 2;
            const int l = self(self, lo, mid);
            const int r = self(self, mid, hi);
            tree[static_cast<std::size_t>(id)].left = l;
            tree[static_cast<std::size_t>(id)].right = r;
        }
        return id;
    };
    build(build, 0, nseg);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto overlap = [&](const Node& A, const Node& B) {
        return !(A.x1 + eps < B.x0 || B.x1 + eps < A.x0 || A.y1 + eps < B.y0 || B.y1 + eps < A.y0);
    };
    auto visit = [&](auto&& self, int ia, int ib) -> void {
        const Node& A = tree[static_cast<std::size_t>(ia)];
        const Node& B = tree[static_cast<std::size_t>(ib)];
        if (ia != ib && !overlap(A, B)) return;
        if (ia == ib) {
            if (A.left < 0) {
                for (std::size_t i = A.lo; i < A.hi; ++i)
                    for (std::size_t j = i + 2; j < A.hi; ++j) pairs.emplace_back(i, j);
                return;
            }
            self(self, A.left, A.left);
            self(self, A.left, A.right);
            self(self, A.right, A.right);
            return;
        }
        if (A.left < 0 && B.left < 0) {
            for (std::size_t i = A.lo; i < A.hi; ++i)
                for (std::size_t j = B.lo; j < B.hi; ++j) {
                    const std::size_t p = std::min(i, j), q = std::max(i, j);
                    if (q == p + 1 || (closed && p == 0 && q == nseg - 1)) continue;
                    pairs.emplace_back(p, q);
                }
            return;
        }
        if (B.left < 0 || (A.left >= 0 && A.hi - A.lo >= B.hi - B.lo)) {
            self(self, A.left, ib);
            self(self, A.right, ib);
        } else {
            self(self, ia, B.left);
            self(self, ia, B.right);
        }
    };
    visit(visit, 0, 0);
    if (closed && nseg > 2) {
        // the wrap-around neighbours were never adjacent in index order
        pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                   [&](const auto& pq) { return pq.first == 0 && pq.second == nseg - 1; }),
                    pairs.end());
    }

    std::vector<Crossing> out;
    for (const auto& [i, j] : pairs) {
        const auto [a, b] = seg(i);
        const auto [c, d] = seg(j);
        if (std::max(a.x, b.x) + eps < std::min(c.x, d.x) || std::max(c.x, d.x) + eps < std::min(a.x, b.x) ||
            std::max(a.y, b.y) + eps < std::min(c.y, d.y) || std::max(c.y, d.y) + eps < std::min(a.y, b.y))
            continue;
        const double lab = std::hypot(b.x - a.x, b.y - a.y), lcd = std::hypot(d.x - c.x, d.y - c.y);
        if (lab == 0.0 || lcd == 0.0) continue;
        // signed distances of each endpoint to the other segment's line
        const double d1 = cross(a, b, c) / lab, d2 = cross(a, b, d) / lab;
        const double d3 = cross(c, d, a) / lcd, d4 = cross(c, d, b) / lcd;
        const bool proper = d1 * d2 < 0.0 && d3 * d4 < 0.0;
        const double margin = std::min({std::abs(d1), std::abs(d2), std::abs(d3), std::abs(d4)});
        if (proper && margin > eps) {
            const double t = d3 / (d3 - d4), u = d1 / (d1 - d2);
            out.push_back({arc[i] + t * lab, arc[j] + u * lcd, {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}, false});
        } else if (segment_distance(a, b, c, d) <= eps) {
            // neighbours joined by a sub-eps stretch of the polyline are not a tangency
            double gap = arc[j] - arc[i + 1];
            if (closed) gap = std::min(gap, arc[nseg] - arc[j + 1] + arc[i]);
            if (gap <= 100.0 * eps) continue;
            out.push_back({arc[i], arc[j], a, true});
        }
    }
    return out;
}

std::vector<int> winding_raster(std::span<const BasePoint> P, int R) {
    const std::size_t n = P.size();
    if (R < 2) throw DomainError("raster too coarse");
    std::vector<int> W(static_cast<std::size_t>(R) * R, 0);
    if (n < 3) return W;
    const double px = 2.0 / R;
    std::vector<std::vector<std::size_t>> rows(static_cast<std::size_t>(R));
    auto row_of = [&](double y) { return (y + 1.0) / px - 0.5; };
    for (std::size_t i = 0; i < n; ++i) {
        const BasePoint a = P[i], b = P[(i + 1) % n];
        const double r0 = row_of(std::min(a.y, b.y)), r1 = row_of(std::max(a.y, b.y));
        const int j0 = std::max(0, static_cast<int>(std::ceil(r0))), j1 = std::min(R - 1, static_cast<int>(std::floor(r1)));
        for (int j = j0; j <= j1; ++j) rows[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<std::pair<double, int>> xs;
    for (int j = 0; j < R; ++j) {
        const double y = -1.0 + (j + 0.5) * px;
        xs.clear();
        for (std::size_t i : rows[static_cast<std::size_t>(j)]) {
            const BasePoint a = P[i], b = P[(i + 1) % n];
            if ((a.y <= y) == (b.y <= y)) continue;
            const double x = a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x);
            xs.emplace_back(x, b.y > a.y ? 1 : -1);
        }
        if (xs.empty()) continue;
        std::sort(xs.begin(), xs.end());
        int w = 0;
        std::size_t c = 0;
        for (int i = 0; i < R; ++i) {
            const double x = -1.0 + (i + 0.5) * px;
            while (c < xs.size() && xs[c].first < x) w += xs[c++].second;
            W[static_cast<std::size_t>(j) * R + i] = w;
        }
    }
    return W;
}

double multiplicity_area(std::span<const BasePoint> P, int R) {
    const auto W = winding_raster(P, R);
    const double px = 2.0 / R;
    double area = 0.0;
    for (int j = 0; j < R; ++j)
        for (int i = 0; i < R; ++i) {
            if (std::abs(W[static_cast<std::size_t>(j) * R + i]) < 2) continue;
            const double x = -1.0 + (i + 0.5) * px, y = -1.0 + (j + 0.5) * px;
            const double r2 = x * x + y * y;
            if (r2 >= 1.0) continue;
            area += px * px * 4.0 / ((1.0 - r2) * (1.0 - r2));
        }
    return area;
}

EmbeddednessReport self_intersections(const PlanarCurve& curve, const EmbeddednessOptions& opts) {
    const auto pts = curve.points();
    EmbeddednessReport rep;
    rep.symmetry_k = 1;
    rep.crossings = polyline_crossings(pts, false, opts.eps_geom);
    rep.uncertain = static_cast<std::size_t>(std::count_if(rep.crossings.begin(), rep.crossings.end(),
                                                           [](const Crossing& c) { return c.uncertain; }));
    rep.embedded = rep.crossings.empty();
    return rep;
}

EmbeddednessReport self_intersections(const AssembledBoundary& boundary, const EmbeddednessOptions& opts) {
    EmbeddednessReport rep;
    rep.symmetry_k = boundary.k;
    rep.crossings = polyline_crossings(boundary.polyline, true, opts.eps_geom);
    rep.uncertain = static_cast<std::size_t>(std::count_if(rep.crossings.begin(), rep.crossings.end(),
                                                           [](const Crossing& c) { return c.uncertain; }));
    rep.multiplicity_2_area = boundary.closed ? multiplicity_area(boundary.polyline, opts.raster) : 0.0;
    rep.embedded = rep.crossings.empty() && boundary.closed;
    return rep;
}

} // namespace conjlab
