// effres.hpp — effective cavity resonance omega_i(n) = E[i][n+1] - E[i][n]
// with a shape-preserving interpolant over real photon number

#pragma once

#include <string>
#include <vector>

#include "transcav/errors.hpp"
#include "transcav/pchip.hpp"
#include "transcav/spectrum.hpp"

namespace transcav::effres {

struct EffResCurve {
    int level = 0;
    double omega_r = 0.0;           // bare cavity frequency, for chi views
    interp::MonotoneCubic interp;   // through samples at integer n in [0, n_max-1]

    const std::vector<double>& samples() const { return interp.samples(); }
    double max_n() const { return interp.max_x(); }

    // Zero-photon dispersive shift; a derived view, not a stored constant.
    double chi() const { return samples().front() - omega_r; }
};

inline EffResCurve effective_resonance(const spectrum::DressedSpectrum& spec, int i) {
    if (i < 0 || i >= spec.levels())
        throw input_error("effective_resonance: level " + std::to_string(i) + " out of range");
    std::vector<double> w(static_cast<std::size_t>(spec.n_max()));
    for (int n = 0; n < spec.n_max(); ++n)
        w[static_cast<std::size_t>(n)] = spec.energy(i, n + 1) - spec.energy(i, n);
    EffResCurve c;
    c.level = i;
    c.omega_r = spec.params.omega_r;
    c.interp = interp::MonotoneCubic(std::move(w));
    return c;
}

// Interpolant value / derivative at real n; exact at integer nodes, hard
// range error beyond the table (no extrapolation).
inline double eval(const EffResCurve& c, double n) { return c.interp(n); }
inline double eval_derivative(const EffResCurve& c, double n) { return c.interp.derivative(n); }

} // namespace transcav::effres
