// pchip.hpp — monotonicity-preserving piecewise-cubic Hermite interpolation
// on a uniform unit-spaced grid, with analytic derivative

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "transcav/errors.hpp"

namespace transcav::interp {

// Node slopes follow the Fritsch-Butland weighted harmonic mean, which on a
// uniform grid reduces to the plain harmonic mean of the adjacent secants,
// zeroed where the secants disagree in sign. The resulting cubic never
// develops an extremum strictly inside a subinterval, so interpolated data
// cannot acquire spurious wiggles.
class MonotoneCubic {
public:
    MonotoneCubic() = default;

    explicit MonotoneCubic(std::vector<double> y) : y_(std::move(y)) {
        const std::size_t n = y_.size();
        if (n == 0) throw input_error("MonotoneCubic: no samples");
        s_.assign(n, 0.0);
        if (n == 1) return;
        if (n == 2) {
            s_[0] = s_[1] = y_[1] - y_[0];
            return;
        }
        s_[0] = y_[1] - y_[0];
        s_[n - 1] = y_[n - 1] - y_[n - 2];
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const double dl = y_[k] - y_[k - 1];
            const double dr = y_[k + 1] - y_[k];
            if (dl == 0.0 || dr == 0.0 || (dl > 0.0) != (dr > 0.0))
                s_[k] = 0.0;
            else
                s_[k] = 2.0 * dl * dr / (dl + dr);
        }
    }

    std::size_t size() const { return y_.size(); }
    double max_x() const { return static_cast<double>(y_.size() - 1); }
    const std::vector<double>& samples() const { return y_; }

    double operator()(double x) const {
        const auto [k, t] = locate(x);
        if (t == 0.0) return y_[k];
        const double d = y_[k + 1] - y_[k];
        // Hermite cubic in the form y0 + t*(...), exact at t = 0
        return y_[k] + t * (s_[k] + t * ((3.0 * d - 2.0 * s_[k] - s_[k + 1]) +
                                         t * (s_[k] + s_[k + 1] - 2.0 * d)));
    }

    double derivative(double x) const {
        const auto [k, t] = locate(x);
        if (t == 0.0) return s_[k];
        const double d = y_[k + 1] - y_[k];
        return s_[k] + t * (2.0 * (3.0 * d - 2.0 * s_[k] - s_[k + 1]) +
                            t * 3.0 * (s_[k] + s_[k + 1] - 2.0 * d));
    }

private:
    // Subinterval index and local coordinate t in [0,1). Integer x lands
    // exactly on a node.
    std::pair<std::size_t, double> locate(double x) const {
        if (!(x >= 0.0))
            throw input_error("MonotoneCubic: argument must be >= 0, got " + std::to_string(x));
        const double xm = max_x();
        if (x > xm)
            throw range_error("MonotoneCubic: argument " + std::to_string(x) +
                              " beyond table end " + std::to_string(xm) +
                              "; rebuild with a larger n_max");
        if (x == xm) return {y_.size() - 1, 0.0};
        const double f = std::floor(x);
        return {static_cast<std::size_t>(f), x - f};
    }

    std::vector<double> y_;
    std::vector<double> s_;
};

} // namespace transcav::interp
