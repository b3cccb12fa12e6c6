// time_grid.hpp: uniform time grids anchored on t = 0

#pragma once

#include <cstddef>
#include <vector>

namespace qisf {

// Points t_i = i·step for i in [first_index, last_index]. Anchoring at an
// integer index keeps t = 0 exactly on the grid and makes symmetric grids
// exactly antisymmetric (t(-i) == -t(i) bit for bit).
class TimeGrid {
public:
    TimeGrid(double step, long first_index, long last_index);

    // n points spanning [t_min, t_max]; t = 0 must fall on a grid point.
    static TimeGrid from_range(double t_min, double t_max, std::size_t n);
    // 2·half_points + 1 points on [-t_max, t_max].
    static TimeGrid symmetric(double t_max, std::size_t half_points);

    double step() const noexcept { return step_; }
    long first_index() const noexcept { return first_; }
    long last_index() const noexcept { return last_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(last_ - first_ + 1); }
    bool is_symmetric() const noexcept { return first_ == -last_; }

    double time(std::size_t i) const noexcept { return static_cast<double>(first_ + static_cast<long>(i)) * step_; }
    long index_of(std::size_t i) const noexcept { return first_ + static_cast<long>(i); }
    // Position of t = 0 in the sample vector.
    std::size_t origin() const noexcept { return static_cast<std::size_t>(-first_); }
    double t_min() const noexcept { return static_cast<double>(first_) * step_; }
    double t_max() const noexcept { return static_cast<double>(last_) * step_; }

    std::vector<double> times() const;

private:
    double step_;
    long first_;
    long last_;
};

}  // namespace qisf
