#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace conplaus {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVec = Eigen::RowVectorXd;

/// An exchangeable sample: n points of common dimension d, one per row.
/// Immutable after construction; all coordinates must be finite.
class Sample {
public:
    explicit Sample(Matrix points) : points_(std::move(points)) {
        if (points_.rows() < 1)
            throw std::invalid_argument("Sample: need at least one point");
        if (points_.cols() < 1)
            throw std::invalid_argument("Sample: dimension must be >= 1");
        if (!points_.allFinite())
            throw std::invalid_argument("Sample: coordinates must be finite");
    }

    /// Convenience constructor for 1-D data.
    static Sample from_values(const Vector& values) {
        Matrix m(values.size(), 1);
        m.col(0) = values;
        return Sample(std::move(m));
    }

    Eigen::Index n() const { return points_.rows(); }
    Eigen::Index dim() const { return points_.cols(); }
    const Matrix& points() const { return points_; }
    RowVec point(Eigen::Index i) const { return points_.row(i); }

private:
    Matrix points_;
};

}  // namespace conplaus
