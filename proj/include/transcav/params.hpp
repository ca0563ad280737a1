// params.hpp — device constants, truncations and unit conventions

#pragma once

#include <string>

#include "transcav/errors.hpp"
#include "transcav/units.hpp"

namespace transcav {

// Transmon self-interaction prefactor: as_printed uses -eta b†b†bb (first
// anharmonic gap 2*eta), halved uses -(eta/2) b†b†bb (gap eta, the standard
// transmon Duffing normalization).
enum class EtaConvention { as_printed, halved };

// Unit of kappa where it enters the dynamics (Eq. damping and root radius):
// angular keeps kappa in rad/s, ordinary divides the configured value by 2pi.
enum class KappaConvention { angular, ordinary };

inline double eta_prefactor(EtaConvention c) {
    return c == EtaConvention::as_printed ? 1.0 : 0.5;
}

// Single source of physical truth; all frequencies angular (rad/s).
struct SystemParams {
    double omega_r = 0.0;   // bare cavity frequency
    double omega_q = 0.0;   // qubit 0-1 frequency
    double eta = 0.0;       // anharmonicity
    double g = 0.0;         // qubit-cavity coupling
    double kappa = 0.0;     // cavity decay rate (as configured, rad/s)
    int transmon_levels = 18;
    int n_max = 601;        // photon truncation of the dressed table
    EtaConvention eta_convention = EtaConvention::as_printed;
    KappaConvention kappa_convention = KappaConvention::angular;

    double detuning() const { return omega_q - omega_r; }

    // kappa as used by the semiclassical dynamics and fixed-point equations.
    double kappa_dyn() const {
        return kappa_convention == KappaConvention::angular ? kappa
                                                            : kappa / units::two_pi;
    }
};

inline void validate(const SystemParams& p) {
    if (!(p.omega_r > 0.0)) throw input_error("SystemParams: omega_r must be > 0");
    if (!(p.omega_q > 0.0)) throw input_error("SystemParams: omega_q must be > 0");
    if (!(p.kappa > 0.0)) throw input_error("SystemParams: kappa must be > 0");
    if (p.eta < 0.0) throw input_error("SystemParams: eta must be >= 0");
    if (p.g < 0.0) throw input_error("SystemParams: g must be >= 0");
    if (p.transmon_levels < 2) throw input_error("SystemParams: transmon_levels must be >= 2");
    if (p.n_max < 1) throw input_error("SystemParams: n_max must be >= 1");
}

// Device constants of the reference experiment.
inline SystemParams paper_params() {
    SystemParams p;
    p.omega_r = units::ghz(5.078);
    p.omega_q = units::ghz(5.795);
    p.eta = units::mhz(111.0);
    p.g = units::mhz(55.0);
    p.kappa = units::mhz(1.3);
    p.transmon_levels = 18;
    p.n_max = 601;
    return p;
}

inline const char* to_string(EtaConvention c) {
    return c == EtaConvention::as_printed ? "as_printed" : "halved";
}
inline const char* to_string(KappaConvention c) {
    return c == KappaConvention::angular ? "angular" : "ordinary";
}

} // namespace transcav
