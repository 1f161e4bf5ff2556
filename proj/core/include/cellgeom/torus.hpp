#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace cellgeom::geom {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Square [0, side)^2 with wrap-around edges.
class Torus {
public:
    explicit Torus(double side);

    double side() const noexcept { return side_; }

    /// Minimum-image displacement along one axis, in [-side/2, side/2].
    double wrap_delta(double d) const noexcept {
        if (d > half_) return d - side_;
        if (d < -half_) return d + side_;
        return d;
    }

    double distance2(Point a, Point b) const noexcept {
        const double dx = wrap_delta(a.x - b.x);
        const double dy = wrap_delta(a.y - b.y);
        return dx * dx + dy * dy;
    }

    double distance(Point a, Point b) const noexcept { return std::sqrt(distance2(a, b)); }

    /// Maps any point into [0, side)^2.
    Point wrap(Point p) const noexcept;

private:
    double side_;
    double half_;
};

/// Uniform cell list over a torus for nearest-neighbour queries.
class TorusGrid {
public:
    /// `target_cell` is the desired cell edge; the actual edge divides side.
    TorusGrid(const Torus& torus, const std::vector<Point>& points, double target_cell);

    /// Index of the nearest point (torus metric). Requires a non-empty set.
    std::size_t nearest(Point q) const;

    /// For each of the six 60-degree cones around points[i], the distance to
    /// the nearest other point inside it; the Voronoi cell of points[i] lies
    /// within the largest of the six. Returns +inf if some cone has no point
    /// within `limit`.
    double cone_cover_radius(std::size_t i, double limit) const;

    const Torus& torus() const noexcept { return torus_; }
    std::size_t size() const noexcept { return points_->size(); }

private:
    int cell_of(double coord) const noexcept;
    int wrap_cell(int c) const noexcept { return ((c % cells_) + cells_) % cells_; }

    template <typename Visit>
    void visit_ring(int cx, int cy, int r, Visit&& visit) const;

    Torus torus_;
    const std::vector<Point>* points_;
    int cells_;
    double cell_edge_;
    std::vector<std::size_t> start_;   // CSR offsets, cells_^2 + 1
    std::vector<std::size_t> members_;
};

}  // namespace cellgeom::geom
