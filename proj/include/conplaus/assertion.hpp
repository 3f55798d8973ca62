#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "conplaus/grid.hpp"
#include "conplaus/sample.hpp"

namespace conplaus {

/// Axis-aligned box with per-face openness.  Unbounded faces use +/-inf
/// with the face treated as open.
struct Box {
    Vector lo, hi;
    std::vector<std::uint8_t> lo_open, hi_open;

    static Box closed(Vector lo, Vector hi);
    /// 1-D interval helper.
    static Box interval(double lo, double hi, bool lo_open = false, bool hi_open = false);

    Eigen::Index dim() const { return lo.size(); }
    bool contains(const RowVec& x) const;
};

/// An assertion about the next observation: either a finite union of
/// boxes or an explicit boolean mask over a grid.  Immutable value type.
class Assertion {
public:
    static Assertion boxes(std::vector<Box> bs);
    static Assertion mask(Grid grid, std::vector<std::uint8_t> keep);

    bool is_mask() const { return is_mask_; }
    const std::vector<Box>& box_list() const { return boxes_; }
    const std::vector<std::uint8_t>& mask_values() const { return mask_; }
    Eigen::Index dim() const { return dim_; }

    /// Converts to a mask over `grid` by exact membership of grid points.
    std::vector<std::uint8_t> to_mask(const Grid& grid) const;

    /// Mask of the complement within the grid discretization.
    std::vector<std::uint8_t> complement_mask(const Grid& grid) const;

private:
    Assertion() = default;
    bool is_mask_ = false;
    std::vector<Box> boxes_;
    std::vector<std::uint8_t> mask_;
    std::shared_ptr<const Grid> grid_;  // mask form only
    Eigen::Index dim_ = 0;

    friend bool assertion_contains(const Assertion&, const RowVec&);
};

/// Exact membership for box assertions; mask assertions test the nearest
/// grid point (exact midpoints snap toward the lower index).
bool assertion_contains(const Assertion& a, const RowVec& point);

}  // namespace conplaus
