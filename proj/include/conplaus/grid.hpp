#pragma once

#include <vector>

#include "conplaus/sample.hpp"

namespace conplaus {

/// Candidate grid over the response space.  Two forms:
///   - tensor: per-axis strictly increasing ticks, flattened row-major
///     (last axis varies fastest);
///   - explicit: an arbitrary duplicate-free list of points (used when a
///     grid is read back from a file).
class Grid {
public:
    static Grid tensor(std::vector<Vector> axes);
    static Grid explicit_points(Matrix points);

    Eigen::Index size() const { return points_.rows(); }
    Eigen::Index dim() const { return points_.cols(); }
    const Matrix& points() const { return points_; }
    RowVec point(Eigen::Index i) const { return points_.row(i); }

    bool is_tensor() const { return !axes_.empty(); }
    const std::vector<Vector>& axes() const { return axes_; }

    /// Index of the grid point nearest to `x` (Euclidean).  Exact ties
    /// resolve to the lower flat index; for tensor grids the snap is done
    /// per axis with midpoints rounding toward the lower tick.
    Eigen::Index nearest_index(const RowVec& x) const;

private:
    Grid() = default;
    std::vector<Vector> axes_;  // empty for explicit grids
    Matrix points_;
};

/// Uniform tensor grid covering the data range per axis, padded by
/// `padding_fraction * range` on each side.  A zero-range axis is widened
/// by the fixed absolute pad 1.0 instead.
Grid build_grid(const Sample& data, double padding_fraction, int points_per_axis);

}  // namespace conplaus
