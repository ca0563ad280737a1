// fixed_points.hpp — steady states of the photon dynamics, their stability
// from the linearized flow, and region labels over (drive, frequency)

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "transcav/effres.hpp"
#include "transcav/errors.hpp"
#include "transcav/params.hpp"

namespace transcav::fixed_points {

enum class Stability { stable, saddle, boundary };

enum class RegionLabel { s0, s1, sb_low, sb_high };

inline const char* to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "STABLE";
        case Stability::saddle: return "SADDLE";
        default: return "BOUNDARY";
    }
}
inline const char* to_string(RegionLabel r) {
    switch (r) {
        case RegionLabel::s0: return "S0";
        case RegionLabel::s1: return "S1";
        case RegionLabel::sb_low: return "SB_LOW";
        default: return "SB_HIGH";
    }
}

struct FixedPoint {
    double n_star = 0.0;       // photons
    double r = 0.0;            // sqrt(n_star)
    double theta = 0.0;        // radians
    int detuning_sign = 0;     // sign of omega_i(n_star) - omega_M
    Stability stability = Stability::boundary;
    double jacobian_det = 0.0;   // 1/s^2
    double jacobian_trace = 0.0; // 1/s
};

// Branch-free steady-state condition: roots of
//   H(n) = n ((omega_i(n) - omega_M)^2 + kappa^2/4) - E^2/4
// on (0, alpha0^2], algebraically equivalent to the two-branch polar form.
inline double steady_state_residual(const effres::EffResCurve& curve, double amplitude,
                                    double omega_m, const SystemParams& p, double n) {
    const double delta = effres::eval(curve, n) - omega_m;
    const double kappa = p.kappa_dyn();
    return n * (delta * delta + kappa * kappa / 4.0) - amplitude * amplitude / 4.0;
}

namespace detail {

// Hybrid scan grid: dim-state roots cluster at small n, bright roots near
// alpha0^2, so the grid is logarithmic below n = 1 and linear above.
inline std::vector<double> root_scan_grid(double n_hi, int points = 4096) {
    const double n_lo = 1e-12 * std::max(n_hi, 1.0);
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    if (n_hi <= 1.0) {
        const double ratio = std::log(n_hi / n_lo) / (points - 1);
        for (int k = 0; k < points; ++k) grid.push_back(n_lo * std::exp(ratio * k));
    } else {
        const int m = points / 2;
        const double ratio = std::log(1.0 / n_lo) / (m - 1);
        for (int k = 0; k < m; ++k) grid.push_back(n_lo * std::exp(ratio * k));
        for (int k = 1; k <= points - m; ++k)
            grid.push_back(1.0 + (n_hi - 1.0) * k / (points - m));
    }
    grid.back() = n_hi;
    return grid;
}

} // namespace detail

// Linearized flow at a fixed point, in (Re alpha, Im alpha) coordinates.
// Fills det and trace; stability decided by the sign of det (the divergence
// of the field is exactly -kappa, so det > 0 <=> attracting). Points within
// the degeneracy band are marked boundary.
inline FixedPoint linearize(FixedPoint point, const effres::EffResCurve& curve,
                            double amplitude, double omega_m, const SystemParams& p) {
    (void)amplitude;
    const double kappa = p.kappa_dyn();
    const double n = point.n_star;
    const double delta = effres::eval(curve, n) - omega_m;
    const double dslope = effres::eval_derivative(curve, n);
    const double x = point.r * std::cos(point.theta);
    const double y = point.r * std::sin(point.theta);

    const double j11 = 2.0 * x * y * dslope - kappa / 2.0;
    const double j12 = delta + 2.0 * y * y * dslope;
    const double j21 = -delta - 2.0 * x * x * dslope;
    const double j22 = -2.0 * x * y * dslope - kappa / 2.0;

    point.jacobian_trace = j11 + j22;
    point.jacobian_det = j11 * j22 - j12 * j21;
    point.detuning_sign = delta > 0.0 ? 1 : (delta < 0.0 ? -1 : 0);
    if (std::abs(point.jacobian_det) < 1e-9 * kappa * kappa)
        point.stability = Stability::boundary;
    else
        point.stability = point.jacobian_det > 0.0 ? Stability::stable : Stability::saddle;
    return point;
}

inline FixedPoint classify(FixedPoint point, const effres::EffResCurve& curve,
                           double amplitude, double omega_m, const SystemParams& p) {
    point = linearize(point, curve, amplitude, omega_m, p);
    if (point.stability == Stability::boundary)
        throw degenerate_root_error("classify: |det J| < 1e-9 kappa^2 at n=" +
                                    std::to_string(point.n_star) + " (bifurcation boundary)");
    return point;
}

// Locate all steady states at one (drive, frequency) point, sorted by n_star.
// Roots on a bifurcation boundary are kept and marked, not classified.
inline std::vector<FixedPoint> find_roots(const effres::EffResCurve& curve, double amplitude,
                                          double omega_m, const SystemParams& p) {
    if (!(amplitude > 0.0)) throw input_error("find_roots: amplitude must be > 0");
    const double kappa = p.kappa_dyn();
    const double a0sq = std::pow(amplitude / kappa, 2);
    if (a0sq > curve.max_n())
        throw range_error("find_roots: alpha0^2 = " + std::to_string(a0sq) +
                          " exceeds the effective-resonance table; raise n_max");

    auto h = [&](double n) { return steady_state_residual(curve, amplitude, omega_m, p, n); };
    const std::vector<double> grid = detail::root_scan_grid(a0sq);

    std::vector<FixedPoint> out;
    double prev_n = grid.front();
    double prev_h = h(prev_n);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double cur_n = grid[k];
        const double cur_h = h(cur_n);
        if (prev_h == 0.0 || prev_h * cur_h < 0.0) {
            double lo = prev_n, hi = cur_n, h_lo = prev_h;
            for (int it = 0; it < 200 && hi - lo > 1e-10 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double h_mid = h(mid);
                if (h_lo == 0.0 || h_lo * h_mid <= 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    h_lo = h_mid;
                }
            }
            FixedPoint fp;
            fp.n_star = 0.5 * (lo + hi);
            fp.r = std::sqrt(fp.n_star);
            const double delta = effres::eval(curve, fp.n_star) - omega_m;
            const std::complex<double> alpha =
                std::complex<double>(0.0, -amplitude) /
                std::complex<double>(kappa, 2.0 * delta);
            fp.theta = std::arg(alpha);
            out.push_back(linearize(fp, curve, amplitude, omega_m, p));
        }
        prev_n = cur_n;
        prev_h = cur_h;
    }
    return out;
}

struct FrequencyWindow {
    double omega_lo = 0.0;   // rad/s
    double omega_hi = 0.0;
    int scan_points = 1281;  // fine enough to resolve sub-map-grid wedges
};

namespace detail {

inline int count_roots(const effres::EffResCurve& curve, double amplitude, double omega_m,
                       const SystemParams& p) {
    const double a0sq = std::pow(amplitude / p.kappa_dyn(), 2);
    const std::vector<double> grid = root_scan_grid(a0sq);
    int count = 0;
    double prev = steady_state_residual(curve, amplitude, omega_m, p, grid.front());
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double cur = steady_state_residual(curve, amplitude, omega_m, p, grid[k]);
        if (prev == 0.0 || prev * cur < 0.0) ++count;
        prev = cur;
    }
    return count;
}

} // namespace detail

// Region taxonomy at one (drive, frequency) point. Three roots: the two
// stable ones with opposite detuning signs mark the photon-blockade flavor
// (sb_high), same signs the low-frequency flavor (sb_low). A single root is
// s1 when bistable frequencies exist both above and below it at this drive,
// else s0; the scan runs over the supplied window.
inline RegionLabel region(const effres::EffResCurve& curve, double amplitude, double omega_m,
                          const SystemParams& p, const FrequencyWindow& window) {
    const std::vector<FixedPoint> roots = find_roots(curve, amplitude, omega_m, p);
    for (const auto& fp : roots)
        if (fp.stability == Stability::boundary)
            throw degenerate_root_error("region: fixed point on a bifurcation boundary at n=" +
                                        std::to_string(fp.n_star));
    if (roots.size() >= 5)
        throw computation_error("region: " + std::to_string(roots.size()) +
                                " steady states; multistability beyond the bistable model");
    if (roots.size() % 2 == 0)
        throw degenerate_root_error("region: even root count (" + std::to_string(roots.size()) +
                                    "), grid tangency at a fold boundary");
    if (roots.size() == 3) {
        return roots.front().detuning_sign != roots.back().detuning_sign ? RegionLabel::sb_high
                                                                         : RegionLabel::sb_low;
    }
    bool below = false, above = false;
    for (int k = 0; k < window.scan_points; ++k) {
        const double w = window.omega_lo +
                         (window.omega_hi - window.omega_lo) * k / (window.scan_points - 1);
        if (detail::count_roots(curve, amplitude, w, p) >= 3) {
            (w < omega_m ? below : above) = true;
            if (below && above) break;
        }
    }
    return below && above ? RegionLabel::s1 : RegionLabel::s0;
}

} // namespace transcav::fixed_points
