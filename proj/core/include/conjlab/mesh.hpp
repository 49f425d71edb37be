#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conjlab/ekt.hpp"

namespace conjlab {

enum class BoundaryTag : std::uint8_t { interior, side_p0p1, side_p0p2, side_p1p2, truncation };

std::string to_string(BoundaryTag t);

struct TriangulatedDomain {
    SpaceParams params;
    GeodesicTriangle triangle;
    std::vector<BasePoint> nodes;
    std::vector<std::array<int, 3>> elements; // counterclockwise
    std::vector<BoundaryTag> tags;            // one per node
    double target_h = 0.0;
    std::optional<double> R_trunc;

    // boundary chains in order: p0->p1 (or its truncation corner), p0->p2 (or corner),
    // p1->p2 and the truncation side; corner nodes appear in every chain they touch
    std::vector<int> chain_p0p1, chain_p0p2, chain_p1p2, chain_truncation;

    const std::vector<int>& chain(BoundaryTag t) const;
    std::size_t interior_count() const;
};

// boundary point of the ideal side p2->p1 (or p1->p2) at distance R from the origin
BasePoint ideal_side_point(BasePoint finite_vertex, const Vertex& ideal, double R, const SpaceParams& params);

// corner_grading > 1 clusters nodes toward the vertices where side p1p2 meets a zero side
TriangulatedDomain triangulate(const GeodesicTriangle& triangle, double target_h,
                               std::optional<double> R_trunc = std::nullopt, double corner_grading = 1.0);

// point location by uniform bucketing
class MeshLocator {
public:
    explicit MeshLocator(const TriangulatedDomain& domain);

    struct Hit {
        int element;
        std::array<double, 3> bary;
    };
    std::optional<Hit> locate(BasePoint p) const;
    std::optional<double> interpolate(const std::vector<double>& field, BasePoint p) const;

private:
    const TriangulatedDomain* dom_;
    double x0_, y0_, cell_;
    int nx_, ny_;
    std::vector<std::vector<int>> buckets_;
};

} // namespace conjlab
