// scd.hpp — semiclassical photon-state dynamics: drive configuration,
// trajectory integration from vacuum, and the integrated readout (T, phi)

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "transcav/effres.hpp"
#include "transcav/errors.hpp"
#include "transcav/params.hpp"
#include "transcav/rk45.hpp"
#include "transcav/units.hpp"

namespace transcav::scd {

using complexd = std::complex<double>;

struct DriveConfig {
    double amplitude = 0.0;        // E, rad/s
    double omega_m = 0.0;          // measurement frequency, rad/s
    double t0 = 1e-6;              // integration time, s
    complexd initial_alpha = 0.0;
};

// Headroom rule: the steady radius never exceeds alpha0 = E/kappa, so the
// table must cover 1.5x the resonant photon number.
inline void validate_drive(const DriveConfig& d, const effres::EffResCurve& curve,
                           const SystemParams& p) {
    if (d.amplitude < 0.0) throw input_error("DriveConfig: amplitude must be >= 0");
    if (!(d.t0 > 0.0)) throw input_error("DriveConfig: t0 must be > 0");
    const double a0sq = std::pow(d.amplitude / p.kappa_dyn(), 2);
    if (a0sq > curve.max_n() / 1.5) {
        const int need = static_cast<int>(std::ceil(1.5 * a0sq)) + 1;
        throw range_error("DriveConfig: (E/kappa)^2 = " + std::to_string(a0sq) +
                          " exceeds table headroom; raise n_max to >= " + std::to_string(need));
    }
}

// Right-hand side of the photon-state equation in the drive frame.
inline complexd rhs(const effres::EffResCurve& curve, const DriveConfig& d,
                    const SystemParams& p, complexd alpha) {
    const double n = std::norm(alpha);
    const double delta = effres::eval(curve, n) - d.omega_m;
    return complexd(0.0, -1.0) * (delta * alpha + d.amplitude / 2.0) -
           (p.kappa_dyn() / 2.0) * alpha;
}

struct Trajectory {
    std::vector<double> times;
    std::vector<complexd> alphas;
    complexd integral = 0.0;       // int_0^t0 alpha dt
    ode::StepStats stats;

    complexd terminal() const { return alphas.back(); }
};

enum class Record { full, endpoints };

// Adaptive 5(4) integration to exactly t0; the running integral of alpha is
// carried as a second state component so the quadrature shares the step order.
inline Trajectory integrate(const effres::EffResCurve& curve, const DriveConfig& drive,
                            const SystemParams& params, Record record = Record::full) {
    validate_drive(drive, curve, params);
    Trajectory traj;
    auto f = [&](double, const std::array<complexd, 2>& y) {
        return std::array<complexd, 2>{rhs(curve, drive, params, y[0]), y[0]};
    };
    ode::AdaptiveOptions opts;  // rtol 1e-8, atol 1e-10
    std::array<complexd, 2> y0{drive.initial_alpha, 0.0};
    complexd last;
    traj.stats = ode::dopri5<2, 1>(f, y0, drive.t0, opts, [&](double t, const auto& y) {
        last = y[1];
        if (record == Record::full || traj.times.size() < 2) {
            traj.times.push_back(t);
            traj.alphas.push_back(y[0]);
        } else {
            traj.times.back() = t;
            traj.alphas.back() = y[0];
        }
    });
    traj.integral = last;
    return traj;
}

struct Readout {
    double transmission = 0.0;  // T, normalized so a resonant linear cavity -> 1
    double phase = 0.0;         // phi in (-pi, pi], 0 at ideal linear resonance
};

inline double wrap_phase(double phi) {
    while (phi > units::pi) phi -= units::two_pi;
    while (phi <= -units::pi) phi += units::two_pi;
    return phi;
}

inline Readout readout(const Trajectory& traj, const DriveConfig& drive,
                       const SystemParams& params) {
    if (drive.amplitude == 0.0) return {0.0, 0.0};
    const complexd m = traj.integral / drive.t0;
    Readout r;
    r.transmission = std::abs(m) * params.kappa_dyn() / drive.amplitude;
    r.phase = wrap_phase(std::arg(m) + units::pi / 2.0);
    return r;
}

// Samples of the flow field over a phase-space rectangle (Fig.-3-style
// landscape): decimal log of |alpha_dot| and its direction.
struct LandscapeSample {
    double re = 0.0, im = 0.0;
    double log_abs = 0.0;
    double angle = 0.0;
};

inline std::vector<LandscapeSample> landscape(const effres::EffResCurve& curve,
                                              const DriveConfig& drive,
                                              const SystemParams& params,
                                              double re_min, double re_max,
                                              double im_min, double im_max, int points) {
    if (points < 2) throw input_error("landscape: need at least 2 points per axis");
    std::vector<LandscapeSample> out;
    out.reserve(static_cast<std::size_t>(points) * points);
    for (int iy = 0; iy < points; ++iy) {
        const double im = im_min + (im_max - im_min) * iy / (points - 1);
        for (int ix = 0; ix < points; ++ix) {
            const double re = re_min + (re_max - re_min) * ix / (points - 1);
            const complexd v = rhs(curve, drive, params, complexd(re, im));
            out.push_back({re, im, std::log10(std::abs(v)), std::arg(v)});
        }
    }
    return out;
}

} // namespace transcav::scd
