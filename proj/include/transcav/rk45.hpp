// rk45.hpp — embedded Dormand-Prince 5(4) driver for small complex systems

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>

#include "transcav/errors.hpp"

namespace transcav::ode {

struct StepStats {
    long accepted = 0;
    long rejected = 0;
    long rhs_evals = 0;
};

struct AdaptiveOptions {
    double rtol = 1e-8;
    double atol = 1e-10;
    long max_steps = 50'000'000;
};

// Integrate y' = f(t, y) from t = 0 to t_end. The error norm runs over the
// real and imaginary parts of the first ErrDim components only, so auxiliary
// quadrature states ride along at the full step order without steering the
// step size. on_accept(t, y) fires after every accepted step (and once for
// the initial state); the final call lands exactly at t_end.
template <std::size_t N, std::size_t ErrDim, class RHS, class Accept>
StepStats dopri5(RHS&& f, std::array<std::complex<double>, N> y, double t_end,
                 const AdaptiveOptions& opts, Accept&& on_accept) {
    static_assert(ErrDim >= 1 && ErrDim <= N);
    using Vec = std::array<std::complex<double>, N>;

    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                     a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    StepStats stats;
    double t = 0.0;
    double h = t_end * 1e-3;
    const double h_floor = t_end * 1e3 * std::numeric_limits<double>::epsilon();

    on_accept(t, y);
    Vec k1 = f(t, y);
    ++stats.rhs_evals;

    auto blend = [](const Vec& base, std::initializer_list<std::pair<double, const Vec*>> terms,
                    double h) {
        Vec r = base;
        for (const auto& [w, k] : terms)
            for (std::size_t i = 0; i < N; ++i) r[i] += h * w * (*k)[i];
        return r;
    };

    while (t < t_end) {
        bool last = false;
        if (t + h >= t_end) {
            h = t_end - t;
            last = true;
        }

        const Vec k2 = f(t + c2 * h, blend(y, {{a21, &k1}}, h));
        const Vec k3 = f(t + c3 * h, blend(y, {{a31, &k1}, {a32, &k2}}, h));
        const Vec k4 = f(t + c4 * h, blend(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
        const Vec k5 = f(t + c5 * h,
                         blend(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
        const Vec k6 = f(t + h, blend(y, {{a61, &k1}, {a62, &k2}, {a63, &k3},
                                          {a64, &k4}, {a65, &k5}}, h));
        const Vec y_new = blend(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
        const Vec k7 = f(t + h, y_new);
        stats.rhs_evals += 6;

        double err_sq = 0.0;
        for (std::size_t i = 0; i < ErrDim; ++i) {
            const std::complex<double> e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                                e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc_re = opts.atol + opts.rtol * std::max(std::abs(y[i].real()),
                                                                  std::abs(y_new[i].real()));
            const double sc_im = opts.atol + opts.rtol * std::max(std::abs(y[i].imag()),
                                                                  std::abs(y_new[i].imag()));
            err_sq += (e.real() / sc_re) * (e.real() / sc_re) +
                      (e.imag() / sc_im) * (e.imag() / sc_im);
        }
        const double err = std::sqrt(err_sq / (2.0 * ErrDim));

        if (err <= 1.0) {
            t = last ? t_end : t + h;
            y = y_new;
            k1 = k7;  // FSAL
            ++stats.accepted;
            on_accept(t, y);
        } else {
            ++stats.rejected;
        }

        const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
        if (t < t_end && h < h_floor)
            throw stiffness_error("dopri5: step size underflow at t=" + std::to_string(t) +
                                  " s, state (" + std::to_string(y[0].real()) + ", " +
                                  std::to_string(y[0].imag()) + ")");
        if (stats.accepted + stats.rejected > opts.max_steps)
            throw stiffness_error("dopri5: step budget exhausted at t=" + std::to_string(t));
    }
    return stats;
}

} // namespace transcav::ode
