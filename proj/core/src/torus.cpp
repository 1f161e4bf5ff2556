#include "cellgeom/torus.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cellgeom::geom {

Torus::Torus(double side) : side_(side), half_(0.5 * side) {
    if (!(side > 0.0) || !std::isfinite(side)) throw std::invalid_argument("Torus: side must be > 0");
}

Point Torus::wrap(Point p) const noexcept {
    p.x -= side_ * std::floor(p.x / side_);
    p.y -= side_ * std::floor(p.y / side_);
    if (p.x >= side_) p.x = 0.0;
    if (p.y >= side_) p.y = 0.0;
    return p;
}

TorusGrid::TorusGrid(const Torus& torus, const std::vector<Point>& points, double target_cell)
    : torus_(torus), points_(&points) {
    if (!(target_cell > 0.0)) throw std::invalid_argument("TorusGrid: cell edge must be > 0");
    cells_ = std::max(1, static_cast<int>(std::floor(torus.side() / target_cell)));
    cell_edge_ = torus.side() / cells_;

    const std::size_t ncell = static_cast<std::size_t>(cells_) * cells_;
    std::vector<std::size_t> owner(points.size());
    start_.assign(ncell + 1, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point p = torus.wrap(points[i]);
        owner[i] = static_cast<std::size_t>(cell_of(p.y)) * cells_ + cell_of(p.x);
        ++start_[owner[i] + 1];
    }
    for (std::size_t c = 0; c < ncell; ++c) start_[c + 1] += start_[c];
    members_.resize(points.size());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) members_[fill[owner[i]]++] = i;
}

int TorusGrid::cell_of(double coord) const noexcept {
    return std::min(cells_ - 1, std::max(0, static_cast<int>(coord / cell_edge_)));
}

template <typename Visit>
void TorusGrid::visit_ring(int cx, int cy, int r, Visit&& visit) const {
    auto visit_cell = [&](int dx, int dy) {
        const std::size_t c = static_cast<std::size_t>(wrap_cell(cy + dy)) * cells_ + wrap_cell(cx + dx);
        for (std::size_t k = start_[c]; k < start_[c + 1]; ++k) visit(members_[k]);
    };
    if (r == 0) {
        visit_cell(0, 0);
        return;
    }
    for (int d = -r; d <= r; ++d) {
        visit_cell(d, -r);
        visit_cell(d, r);
    }
    for (int d = -r + 1; d <= r - 1; ++d) {
        visit_cell(-r, d);
        visit_cell(r, d);
    }
}

std::size_t TorusGrid::nearest(Point q) const {
    if (points_->empty()) throw std::logic_error("TorusGrid::nearest on an empty point set");
    q = torus_.wrap(q);
    const int cx = cell_of(q.x);
    const int cy = cell_of(q.y);
    const auto& pts = *points_;

    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = 0;
    // Past this ring every cell has been visited at least once.
    const int max_ring = cells_ / 2 + 1;
    for (int r = 0; r <= max_ring; ++r) {
        visit_ring(cx, cy, r, [&](std::size_t i) {
            const double d2 = torus_.distance2(q, pts[i]);
            if (d2 < best || (d2 == best && i < best_index)) {
                best = d2;
                best_index = i;
            }
        });
        // Anything in ring r+1 or beyond is at least r cell edges away.
        const double reach = r * cell_edge_;
        if (best < std::numeric_limits<double>::infinity() && best <= reach * reach) break;
    }
    return best_index;
}

double TorusGrid::cone_cover_radius(std::size_t i, double limit) const {
    const auto& pts = *points_;
    const Point q = torus_.wrap(pts[i]);
    const int cx = cell_of(q.x);
    const int cy = cell_of(q.y);
    std::array<double, 6> cone;
    cone.fill(std::numeric_limits<double>::infinity());

    const int max_ring = cells_ / 2 + 1;
    for (int r = 0; r <= max_ring; ++r) {
        visit_ring(cx, cy, r, [&](std::size_t j) {
            if (j == i) return;
            const double dx = torus_.wrap_delta(pts[j].x - q.x);
            const double dy = torus_.wrap_delta(pts[j].y - q.y);
            double angle = std::atan2(dy, dx);
            if (angle < 0.0) angle += 2.0 * std::numbers::pi;
            const int c = std::min(5, static_cast<int>(angle / (std::numbers::pi / 3.0)));
            cone[c] = std::min(cone[c], std::sqrt(dx * dx + dy * dy));
        });
        const double worst = *std::max_element(cone.begin(), cone.end());
        const double reach = r * cell_edge_;
        if (worst <= reach) return worst;
        if (reach > limit) break;
    }
    const double worst = *std::max_element(cone.begin(), cone.end());
    return worst <= limit ? worst : std::numeric_limits<double>::infinity();
}

}  // namespace cellgeom::geom
