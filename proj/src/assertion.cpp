#include "conplaus/assertion.hpp"

#include <stdexcept>

namespace conplaus {

Box Box::closed(Vector lo, Vector hi) {
    if (lo.size() != hi.size()) throw std::invalid_argument("Box: dim mismatch");
    Box b;
    b.lo = std::move(lo);
    b.hi = std::move(hi);
    b.lo_open.assign(static_cast<size_t>(b.lo.size()), 0);
    b.hi_open.assign(static_cast<size_t>(b.lo.size()), 0);
    for (Eigen::Index j = 0; j < b.lo.size(); ++j) {
        if (!(b.lo[j] <= b.hi[j])) throw std::invalid_argument("Box: lo > hi");
    }
    return b;
}

Box Box::interval(double lo, double hi, bool lo_open, bool hi_open) {
    Vector l(1), h(1);
    l[0] = lo;
    h[0] = hi;
    Box b = closed(std::move(l), std::move(h));
    b.lo_open[0] = lo_open ? 1 : 0;
    b.hi_open[0] = hi_open ? 1 : 0;
    return b;
}

bool Box::contains(const RowVec& x) const {
    if (x.size() != dim()) throw std::domain_error("Box: dimension mismatch");
    for (Eigen::Index j = 0; j < dim(); ++j) {
        const bool lo_ok = lo_open[static_cast<size_t>(j)] ? (x[j] > lo[j]) : (x[j] >= lo[j]);
        const bool hi_ok = hi_open[static_cast<size_t>(j)] ? (x[j] < hi[j]) : (x[j] <= hi[j]);
        if (!lo_ok || !hi_ok) return false;
    }
    return true;
}

Assertion Assertion::boxes(std::vector<Box> bs) {
    if (bs.empty()) throw std::invalid_argument("Assertion: no boxes");
    Assertion a;
    a.dim_ = bs.front().dim();
    for (const auto& b : bs) {
        if (b.dim() != a.dim_) throw std::invalid_argument("Assertion: mixed box dims");
    }
    a.boxes_ = std::move(bs);
    return a;
}

Assertion Assertion::mask(Grid grid, std::vector<std::uint8_t> keep) {
    if (static_cast<Eigen::Index>(keep.size()) != grid.size())
        throw std::invalid_argument("Assertion: mask length must equal grid size");
    Assertion a;
    a.is_mask_ = true;
    a.mask_ = std::move(keep);
    a.grid_ = std::make_shared<const Grid>(std::move(grid));
    a.dim_ = a.grid_->dim();
    return a;
}

std::vector<std::uint8_t> Assertion::to_mask(const Grid& grid) const {
    if (grid.dim() != dim_) throw std::domain_error("Assertion: dimension mismatch");
    if (is_mask_) {
        if (static_cast<Eigen::Index>(mask_.size()) != grid.size())
            throw std::domain_error("Assertion: mask/grid size mismatch");
        return mask_;
    }
    std::vector<std::uint8_t> out(static_cast<size_t>(grid.size()), 0);
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const RowVec p = grid.point(i);
        for (const auto& b : boxes_) {
            if (b.contains(p)) {
                out[static_cast<size_t>(i)] = 1;
                break;
            }
        }
    }
    return out;
}

std::vector<std::uint8_t> Assertion::complement_mask(const Grid& grid) const {
    auto m = to_mask(grid);
    for (auto& v : m) v = v ? 0 : 1;
    return m;
}

bool assertion_contains(const Assertion& a, const RowVec& point) {
    if (point.size() != a.dim()) throw std::domain_error("assertion_contains: dimension mismatch");
    if (!a.is_mask()) {
        for (const auto& b : a.box_list()) {
            if (b.contains(point)) return true;
        }
        return false;
    }
    const Eigen::Index idx = a.grid_->nearest_index(point);
    return a.mask_values()[static_cast<size_t>(idx)] != 0;
}

}  // namespace conplaus
