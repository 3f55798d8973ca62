#include "conplaus/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace conplaus {

namespace {

// Absolute pad applied when an axis has zero range.
constexpr double kDegenerateAxisPad = 1.0;

void check_no_duplicates(const Matrix& pts) {
    std::vector<Eigen::Index> order(pts.rows());
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    auto lex_less = [&](Eigen::Index a, Eigen::Index b) {
        for (Eigen::Index j = 0; j < pts.cols(); ++j) {
            if (pts(a, j) != pts(b, j)) return pts(a, j) < pts(b, j);
        }
        return false;
    };
    std::sort(order.begin(), order.end(), lex_less);
    for (size_t k = 1; k < order.size(); ++k) {
        if (pts.row(order[k - 1]) == pts.row(order[k]))
            throw std::invalid_argument("Grid: duplicate points");
    }
}

}  // namespace

Grid Grid::tensor(std::vector<Vector> axes) {
    if (axes.empty()) throw std::invalid_argument("Grid: no axes");
    Eigen::Index total = 1;
    for (const auto& ax : axes) {
        if (ax.size() < 1) throw std::invalid_argument("Grid: empty axis");
        for (Eigen::Index i = 0; i + 1 < ax.size(); ++i) {
            if (!(ax[i] < ax[i + 1]))
                throw std::invalid_argument("Grid: axis ticks must be strictly increasing");
        }
        total *= ax.size();
    }
    Grid g;
    g.axes_ = std::move(axes);
    const Eigen::Index d = static_cast<Eigen::Index>(g.axes_.size());
    g.points_.resize(total, d);
    for (Eigen::Index flat = 0; flat < total; ++flat) {
        Eigen::Index rem = flat;
        for (Eigen::Index j = d - 1; j >= 0; --j) {
            const auto& ax = g.axes_[j];
            g.points_(flat, j) = ax[rem % ax.size()];
            rem /= ax.size();
        }
    }
    return g;
}

Grid Grid::explicit_points(Matrix points) {
    if (points.rows() < 1) throw std::invalid_argument("Grid: empty");
    if (!points.allFinite()) throw std::invalid_argument("Grid: non-finite point");
    check_no_duplicates(points);
    Grid g;
    g.points_ = std::move(points);
    return g;
}

Eigen::Index Grid::nearest_index(const RowVec& x) const {
    if (x.size() != dim()) throw std::domain_error("Grid: dimension mismatch");
    if (is_tensor()) {
        // Snap per axis; exact midpoints round toward the lower tick.
        Eigen::Index flat = 0;
        for (size_t j = 0; j < axes_.size(); ++j) {
            const Vector& ax = axes_[j];
            const double v = x[static_cast<Eigen::Index>(j)];
            auto it = std::lower_bound(ax.begin(), ax.end(), v);
            Eigen::Index hi = static_cast<Eigen::Index>(it - ax.begin());
            Eigen::Index pick;
            if (hi == 0) {
                pick = 0;
            } else if (hi == ax.size()) {
                pick = ax.size() - 1;
            } else {
                const double dlo = v - ax[hi - 1];
                const double dhi = ax[hi] - v;
                pick = (dlo <= dhi) ? hi - 1 : hi;
            }
            flat = flat * ax.size() + pick;
        }
        return flat;
    }
    Eigen::Index best = 0;
    double best_d = (points_.row(0) - x).squaredNorm();
    for (Eigen::Index i = 1; i < points_.rows(); ++i) {
        const double d2 = (points_.row(i) - x).squaredNorm();
        if (d2 < best_d) {
            best_d = d2;
            best = i;
        }
    }
    return best;
}

Grid build_grid(const Sample& data, double padding_fraction, int points_per_axis) {
    if (padding_fraction < 0.0)
        throw std::invalid_argument("build_grid: padding_fraction must be >= 0");
    if (points_per_axis < 2)
        throw std::invalid_argument("build_grid: points_per_axis must be >= 2");
    const Eigen::Index d = data.dim();
    std::vector<Vector> axes(static_cast<size_t>(d));
    for (Eigen::Index j = 0; j < d; ++j) {
        double lo = data.points().col(j).minCoeff();
        double hi = data.points().col(j).maxCoeff();
        const double range = hi - lo;
        if (range == 0.0) {
            lo -= kDegenerateAxisPad;
            hi += kDegenerateAxisPad;
        } else {
            lo -= padding_fraction * range;
            hi += padding_fraction * range;
        }
        Vector ax(points_per_axis);
        const double step = (hi - lo) / (points_per_axis - 1);
        for (int i = 0; i < points_per_axis; ++i) ax[i] = lo + step * i;
        ax[points_per_axis - 1] = hi;  // avoid drift at the top tick
        axes[static_cast<size_t>(j)] = std::move(ax);
    }
    return Grid::tensor(std::move(axes));
}

}  // namespace conplaus
