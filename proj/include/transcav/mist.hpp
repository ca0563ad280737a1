// mist.hpp — fan diagram of relative energy shifts and ladder-crossing search

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "transcav/errors.hpp"
#include "transcav/spectrum.hpp"

namespace transcav::mist {

// Relative shift of the dressed (k, N-k[+1]) level from the N-photon bare
// resonator, sampled at integer N. extra_photon selects the one-additional-
// photon variant used as the initial-state curve in crossing searches.
struct FanCurve {
    int level = 0;
    bool extra_photon = false;
    int n_first = 0;                  // first valid N
    std::vector<double> omega_bar;    // rad/s, indexed by N - n_first

    int n_last() const { return n_first + static_cast<int>(omega_bar.size()) - 1; }
    bool contains(int n) const { return n >= n_first && n <= n_last(); }
    double at(int n) const { return omega_bar[static_cast<std::size_t>(n - n_first)]; }
};

inline FanCurve fan_curve(const spectrum::DressedSpectrum& spec, int k, bool extra_photon) {
    if (k < 0 || k >= spec.levels())
        throw input_error("fan_curve: level " + std::to_string(k) + " out of range");
    const int offset = extra_photon ? 1 : 0;
    FanCurve fc;
    fc.level = k;
    fc.extra_photon = extra_photon;
    fc.n_first = std::max(0, k - offset);
    for (int n = fc.n_first; n <= spec.n_max() - 1; ++n) {
        const int photons = n - k + offset;
        fc.omega_bar.push_back(spec.energy(k, photons) - spec.params.omega_r * n);
    }
    return fc;
}

// Paper-style error bound on a crossing photon number.
inline double error_bound(double n_star) { return 2.0 * std::sqrt(n_star); }

struct CrossingResult {
    int initial_level = 0;
    int target_level = 0;
    double n_star = 0.0;       // interpolated crossing photon number
    int bracket_lo = 0;
    int bracket_hi = 0;
    double error_bound = 0.0;  // +- 2 sqrt(n_star)
};

// Scan D(N) = omega_bar_k^{+1}(N) - omega_bar_j(N) over integer N and report
// every sign change, refined by linear interpolation between the bracketing
// integers. Sub-photon structure is not invented: photon number is integer.
inline std::vector<CrossingResult> find_crossings(const spectrum::DressedSpectrum& spec,
                                                  int k_initial, int j_target,
                                                  int n_lo, int n_hi) {
    if (k_initial < 0 || k_initial >= spec.levels())
        throw input_error("find_crossings: initial level out of range");
    if (j_target < 0 || j_target >= spec.levels())
        throw input_error("find_crossings: target level out of range");
    if (n_lo > n_hi) throw input_error("find_crossings: empty photon range");

    const FanCurve fk = fan_curve(spec, k_initial, true);
    const FanCurve fj = fan_curve(spec, j_target, false);
    const int lo = std::max({n_lo, fk.n_first, fj.n_first});
    const int hi = std::min({n_hi, fk.n_last(), fj.n_last()});
    if (lo > hi) throw input_error("find_crossings: photon range outside spectrum domain");

    std::vector<CrossingResult> out;
    auto diff = [&](int n) { return fk.at(n) - fj.at(n); };
    for (int n = lo; n < hi; ++n) {
        const double da = diff(n);
        const double db = diff(n + 1);
        double n_star;
        if (da == 0.0)
            n_star = n;
        else if (da * db < 0.0)
            n_star = n + da / (da - db);
        else
            continue;
        CrossingResult c;
        c.initial_level = k_initial;
        c.target_level = j_target;
        c.n_star = n_star;
        c.bracket_lo = n;
        c.bracket_hi = n + 1;
        c.error_bound = error_bound(n_star);
        out.push_back(c);
    }
    if (hi > lo && diff(hi) == 0.0)
        out.push_back({k_initial, j_target, static_cast<double>(hi), hi - 1, hi,
                       error_bound(hi)});
    return out;  // scan order is ascending in n_star already
}

} // namespace transcav::mist
