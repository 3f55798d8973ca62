#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "conplaus/contour.hpp"
#include "conplaus/level.hpp"

namespace conplaus {

struct Interval {
    double lo, hi;  // closed endpoints
};

/// Prediction region extracted from a contour: the grid points whose
/// count exceeds threshold_count = floor((n+1)*t).  In one dimension the
/// retained points are merged into closed intervals; in higher dimension
/// the region is kept as a grid mask.
class PredictionRegion {
public:
    PredictionRegion(const PlausibilityContour& contour, double alpha, bool corrected);

    double alpha() const { return alpha_; }
    bool corrected() const { return corrected_; }
    /// Threshold on the value scale: region = { value > threshold }.
    double threshold() const { return threshold_count_ / double(n_ + 1); }
    int threshold_count() const { return threshold_count_; }
    int n() const { return n_; }

    Eigen::Index dim() const { return dim_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<std::uint8_t>& mask() const { return mask_; }
    bool empty() const;

    /// Membership.  1-D: exact interval test.  d >= 2: mask lookup of the
    /// nearest grid point.
    bool contains(const RowVec& x) const;

    /// Set inclusion against another region (same grid for masks).
    bool subset_of(const PredictionRegion& other) const;

private:
    double alpha_;
    bool corrected_;
    int threshold_count_;
    int n_;
    Eigen::Index dim_;
    std::vector<Interval> intervals_;    // 1-D form
    std::vector<std::uint8_t> mask_;     // d >= 2 form
    std::shared_ptr<const Grid> grid_;   // mask form only
};

}  // namespace conplaus
