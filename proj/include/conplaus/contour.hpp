#pragma once

#include <utility>
#include <vector>

#include "conplaus/grid.hpp"

namespace conplaus {

/// Plausibility contour on a grid.  Values are exact rationals
/// count/(n+1); only the integer counts are stored so that equality and
/// threshold tests never touch floats.
class PlausibilityContour {
public:
    PlausibilityContour(Grid grid, std::vector<int> counts, int n)
        : grid_(std::move(grid)), counts_(std::move(counts)), n_(n) {
        if (n_ < 1) throw std::invalid_argument("PlausibilityContour: n must be >= 1");
        if (static_cast<Eigen::Index>(counts_.size()) != grid_.size())
            throw std::invalid_argument("PlausibilityContour: counts/grid size mismatch");
        for (int c : counts_) {
            if (c < 0 || c > n_ + 1)
                throw std::invalid_argument("PlausibilityContour: count out of range");
        }
    }

    const Grid& grid() const { return grid_; }
    int n() const { return n_; }
    const std::vector<int>& counts() const { return counts_; }
    double value(Eigen::Index i) const { return counts_[static_cast<size_t>(i)] / double(n_ + 1); }
    Eigen::Index size() const { return grid_.size(); }

    int max_count() const;
    /// Eq.-(10)-style check: the supremum over the grid reaches 1.  A
    /// coarse grid can miss the minimizer, so callers treat a false
    /// return as a warning, not an error.
    bool attains_one() const { return max_count() == n_ + 1; }
    Eigen::Index argmax() const;

private:
    Grid grid_;
    std::vector<int> counts_;
    int n_;
};

}  // namespace conplaus
