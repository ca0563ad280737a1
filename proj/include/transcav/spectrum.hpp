// spectrum.hpp — excitation-number blocks of the generalized JC Hamiltonian,
// their diagonalization, and the labeled dressed-energy table E[i][n]

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "transcav/errors.hpp"
#include "transcav/params.hpp"

namespace transcav::spectrum {

// One excitation block conserves n_tot = photons + transmon index. Basis is
// ordered by transmon index i = 0..d-1 with photon number n = n_tot - i, so
// the number-conserving coupling makes the block tridiagonal.
inline Eigen::MatrixXd build_block(const SystemParams& p, int n_tot) {
    if (n_tot < 0) throw input_error("build_block: n_tot must be >= 0");
    const int d = std::min(p.transmon_levels, n_tot + 1);
    const double c = eta_prefactor(p.eta_convention);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const double n = static_cast<double>(n_tot - i);
        h(i, i) = n * p.omega_r + i * p.omega_q - c * p.eta * i * (i - 1.0);
        if (i + 1 < d) {
            const double v = p.g * std::sqrt((i + 1.0) * n);
            h(i, i + 1) = v;
            h(i + 1, i) = v;
        }
    }
    return h;
}

// Emitted when a dressed state's overlap with its own bare label drops below
// the ambiguity threshold (strong hybridization near avoided crossings).
struct OverlapWarning {
    int n_tot = 0;
    int level = 0;
    double overlap = 0.0;
};

struct DressedSpectrum {
    SystemParams params;
    // Row-major tables indexed by [level][photons], level < L, photons <= n_max.
    std::vector<double> energies;
    std::vector<double> overlaps;
    std::vector<OverlapWarning> warnings;

    int levels() const { return params.transmon_levels; }
    int n_max() const { return params.n_max; }

    double energy(int i, int n) const { return energies[idx(i, n)]; }
    double overlap(int i, int n) const { return overlaps[idx(i, n)]; }

    std::size_t idx(int i, int n) const {
        return static_cast<std::size_t>(i) * (params.n_max + 1) + n;
    }
};

// Diagonalize every block covering the table and label the eigenpairs by
// adiabatic continuation in g: eigenvalues of an unreduced symmetric
// tridiagonal are simple, so the k-th eigenvalue (ascending) connects to the
// bare state of bare-energy rank k as g -> 0. Max-overlap labeling is not
// usable here: it scrambles level identity once g*sqrt(n) rivals the level
// spacing, destroying the fan diagram.
inline DressedSpectrum diagonalize_strip(const SystemParams& p) {
    validate(p);
    const int L = p.transmon_levels;
    const int n_max = p.n_max;

    DressedSpectrum out;
    out.params = p;
    out.energies.assign(static_cast<std::size_t>(L) * (n_max + 1), 0.0);
    out.overlaps.assign(static_cast<std::size_t>(L) * (n_max + 1), 0.0);

    std::vector<int> rank;
    for (int n_tot = 0; n_tot <= n_max + L - 1; ++n_tot) {
        const Eigen::MatrixXd h = build_block(p, n_tot);
        const int d = static_cast<int>(h.rows());

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
        if (solver.info() != Eigen::Success)
            throw computation_error("diagonalize_strip: eigensolver failed on block n_tot=" +
                                    std::to_string(n_tot));
        const auto& w = solver.eigenvalues();   // ascending
        const auto& v = solver.eigenvectors();

        // rank[r] = bare index with the r-th smallest diagonal energy
        rank.resize(d);
        std::iota(rank.begin(), rank.end(), 0);
        std::stable_sort(rank.begin(), rank.end(),
                         [&h](int a, int b) { return h(a, a) < h(b, b); });

        for (int r = 0; r < d; ++r) {
            const int i = rank[r];
            const int n = n_tot - i;
            if (i >= L || n < 0 || n > n_max) continue;
            const double ov = v(i, r) * v(i, r);
            out.energies[out.idx(i, n)] = w(r);
            out.overlaps[out.idx(i, n)] = ov;
            if (ov < 0.5) out.warnings.push_back({n_tot, i, ov});
        }
    }
    return out;
}

// Pure lookup, total over the stated domain.
inline double eigenenergy(const DressedSpectrum& spec, int i, int n) {
    if (i < 0 || i >= spec.levels())
        throw input_error("eigenenergy: level " + std::to_string(i) + " out of range");
    if (n < 0 || n > spec.n_max())
        throw input_error("eigenenergy: photon number " + std::to_string(n) + " out of range");
    return spec.energy(i, n);
}

} // namespace transcav::spectrum
