#include "qisf/time_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qisf/errors.hpp"

namespace qisf {

TimeGrid::TimeGrid(double step, long first_index, long last_index)
    : step_(step), first_(first_index), last_(last_index) {
    if (!(step > 0.0) || !std::isfinite(step)) throw domain_error("time step must be positive and finite");
    if (first_index > 0 || last_index < 0) throw domain_error("time grid must contain t = 0");
}

TimeGrid TimeGrid::from_range(double t_min, double t_max, std::size_t n) {
    if (n < 2) throw domain_error("time grid needs at least two points");
    if (!(t_min <= 0.0 && t_max >= 0.0 && t_max > t_min)) throw domain_error("time range must straddle t = 0");
    const double step = (t_max - t_min) / static_cast<double>(n - 1);
    const double origin = -t_min / step;
    const double rounded = std::round(origin);
    if (std::abs(origin - rounded) > 1e-9 * std::max(1.0, origin))
        throw domain_error("t = 0 does not fall on the grid (t_min=" + std::to_string(t_min) +
                           ", step=" + std::to_string(step) + ")");
    const long first = -static_cast<long>(rounded);
    return TimeGrid(step, first, first + static_cast<long>(n) - 1);
}

TimeGrid TimeGrid::symmetric(double t_max, std::size_t half_points) {
    if (half_points == 0) throw domain_error("symmetric grid needs at least one point per side");
    const long h = static_cast<long>(half_points);
    return TimeGrid(t_max / static_cast<double>(h), -h, h);
}

std::vector<double> TimeGrid::times() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = time(i);
    return out;
}

}  // namespace qisf
