// response.hpp — (drive, frequency) response maps, phase-gradient peak
// analysis, critical-point extraction and the three-model comparison table

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "transcav/effres.hpp"
#include "transcav/errors.hpp"
#include "transcav/fixed_points.hpp"
#include "transcav/parallel.hpp"
#include "transcav/params.hpp"
#include "transcav/scd.hpp"
#include "transcav/units.hpp"

namespace transcav::response {

// Drive-to-photon conversion: resonant steady-state photon number of the
// linear cavity.
inline double amp_to_photon(double amplitude, const SystemParams& p) {
    if (amplitude < 0.0) throw input_error("amp_to_photon: amplitude must be >= 0");
    const double a0 = amplitude / p.kappa_dyn();
    return a0 * a0;
}

inline double photon_to_amp(double n, const SystemParams& p) {
    if (n < 0.0) throw input_error("photon_to_amp: photon number must be >= 0");
    return p.kappa_dyn() * std::sqrt(n);
}

enum class MapMode { ode, fixed_point, both };

enum class CellStatus { ok, range_error, stiffness_error, degenerate, invalid };

struct Cell {
    double transmission = 0.0;
    double phase = 0.0;
    int root_count = -1;                          // -1: not computed
    fixed_points::RegionLabel region = fixed_points::RegionLabel::s0;
    CellStatus status = CellStatus::ok;
};

struct MapGrid {
    std::vector<double> drives;    // ascending E (rad/s)
    std::vector<double> freqs;     // ascending omega_M (rad/s)

    double freq_step() const { return freqs.size() > 1 ? freqs[1] - freqs[0] : 0.0; }
};

// Default window: photon axis 1..400 over 49 log-spaced drives, detuning
// -30..+10 MHz over 161 linear steps.
inline MapGrid default_map_grid(const SystemParams& p, double n_lo = 1.0, double n_hi = 400.0,
                                int drive_points = 49, double dmr_lo = units::mhz(-30.0),
                                double dmr_hi = units::mhz(10.0), int freq_points = 161) {
    if (drive_points < 1 || freq_points < 2) throw input_error("map grid: too few points");
    if (!(n_lo > 0.0) || !(n_hi > n_lo)) throw input_error("map grid: bad photon window");
    MapGrid grid;
    const double lr = std::log(n_lo), hr = std::log(n_hi);
    for (int k = 0; k < drive_points; ++k) {
        const double n = drive_points == 1 ? n_lo : std::exp(lr + (hr - lr) * k / (drive_points - 1));
        grid.drives.push_back(photon_to_amp(n, p));
    }
    for (int k = 0; k < freq_points; ++k)
        grid.freqs.push_back(p.omega_r + dmr_lo + (dmr_hi - dmr_lo) * k / (freq_points - 1));
    return grid;
}

struct ResponseMap {
    int level = 0;
    SystemParams params;
    MapGrid grid;
    MapMode mode = MapMode::both;
    std::vector<Cell> cells;   // row-major: [drive][freq]

    const Cell& at(std::size_t d, std::size_t f) const { return cells[d * grid.freqs.size() + f]; }
    Cell& at(std::size_t d, std::size_t f) { return cells[d * grid.freqs.size() + f]; }
    double photon(std::size_t d) const { return amp_to_photon(grid.drives[d], params); }
};

// Fill the map cell by cell. Cells are independent; evaluation order (and
// thread count) cannot change the result. Per-cell range/stiffness errors are
// recorded in the cell status and the map is still returned.
inline ResponseMap run_map(const effres::EffResCurve& curve, const MapGrid& grid,
                           const SystemParams& params, MapMode mode, int threads = 0,
                           double t0 = 1e-6) {
    if (grid.drives.empty() || grid.freqs.empty()) throw input_error("run_map: empty grid");
    for (std::size_t k = 1; k < grid.drives.size(); ++k)
        if (!(grid.drives[k] > grid.drives[k - 1]))
            throw input_error("run_map: drive axis must be strictly ascending");
    for (std::size_t k = 1; k < grid.freqs.size(); ++k)
        if (!(grid.freqs[k] > grid.freqs[k - 1]))
            throw input_error("run_map: frequency axis must be strictly ascending");

    ResponseMap map;
    map.level = curve.level;
    map.params = params;
    map.grid = grid;
    map.mode = mode;
    map.cells.assign(grid.drives.size() * grid.freqs.size(), Cell{});

    const std::size_t nf = grid.freqs.size();
    parallel::parallel_for(map.cells.size(), threads, [&](std::size_t idx) {
        const std::size_t d = idx / nf;
        const std::size_t f = idx % nf;
        Cell& cell = map.cells[idx];
        try {
            if (mode != MapMode::fixed_point) {
                scd::DriveConfig drive;
                drive.amplitude = grid.drives[d];
                drive.omega_m = grid.freqs[f];
                drive.t0 = t0;
                const scd::Trajectory traj =
                    scd::integrate(curve, drive, params, scd::Record::endpoints);
                const scd::Readout r = scd::readout(traj, drive, params);
                cell.transmission = r.transmission;
                cell.phase = r.phase;
            }
            if (mode != MapMode::ode) {
                const auto roots =
                    fixed_points::find_roots(curve, grid.drives[d], grid.freqs[f], params);
                for (const auto& fp : roots)
                    if (fp.stability == fixed_points::Stability::boundary)
                        throw degenerate_root_error("boundary root in map cell");
                cell.root_count = static_cast<int>(roots.size());
                if (roots.size() == 3)
                    cell.region = roots.front().detuning_sign != roots.back().detuning_sign
                                      ? fixed_points::RegionLabel::sb_high
                                      : fixed_points::RegionLabel::sb_low;
                else if (roots.size() == 1)
                    cell.region = fixed_points::RegionLabel::s0;  // s1 resolved in second pass
                else
                    throw computation_error("unexpected root count");
            }
        } catch (const transcav::range_error&) {
            cell.status = CellStatus::range_error;
        } catch (const stiffness_error&) {
            cell.status = CellStatus::stiffness_error;
        } catch (const degenerate_root_error&) {
            cell.status = CellStatus::degenerate;
        } catch (...) {
            cell.status = CellStatus::invalid;
        }
    });

    // Second pass over completed rows: a single-root cell flanked by bistable
    // cells on both frequency sides at the same drive is s1.
    if (mode != MapMode::ode) {
        for (std::size_t d = 0; d < grid.drives.size(); ++d) {
            std::vector<bool> bistable(nf, false);
            for (std::size_t f = 0; f < nf; ++f)
                bistable[f] = map.at(d, f).status == CellStatus::ok && map.at(d, f).root_count == 3;
            for (std::size_t f = 0; f < nf; ++f) {
                Cell& cell = map.at(d, f);
                if (cell.status != CellStatus::ok || cell.root_count != 1) continue;
                const bool below = std::any_of(bistable.begin(), bistable.begin() + f,
                                               [](bool b) { return b; });
                const bool above = std::any_of(bistable.begin() + f + 1, bistable.end(),
                                               [](bool b) { return b; });
                if (below && above) cell.region = fixed_points::RegionLabel::s1;
            }
        }
    }
    return map;
}

// ------------------------------ peak analysis -------------------------------

struct Peak {
    double freq = 0.0;       // rad/s, parabolically refined
    double value = 0.0;      // dphi/df at the refined position (rad s)
    double grid_pos = 0.0;   // refined position in grid-step units
};

inline std::vector<double> unwrap(std::vector<double> phi) {
    for (std::size_t k = 1; k < phi.size(); ++k) {
        double d = phi[k] - phi[k - 1];
        while (d > units::pi) d -= units::two_pi;
        while (d < -units::pi) d += units::two_pi;
        phi[k] = phi[k - 1] + d;
    }
    return phi;
}

// dphi/df by central differences on the unwrapped column (one-sided at the
// two ends).
inline std::vector<double> phase_gradient(const std::vector<double>& phase_column,
                                          double freq_step) {
    const std::vector<double> ph = unwrap(phase_column);
    const std::size_t n = ph.size();
    std::vector<double> dph(n, 0.0);
    if (n < 2) return dph;
    dph[0] = (ph[1] - ph[0]) / freq_step;
    dph[n - 1] = (ph[n - 1] - ph[n - 2]) / freq_step;
    for (std::size_t k = 1; k + 1 < n; ++k) dph[k] = (ph[k + 1] - ph[k - 1]) / (2.0 * freq_step);
    return dph;
}

// Local maxima of dphi/df with topographic prominence at least
// prominence_frac of the column's dynamic range, in descending height.
inline std::vector<Peak> phase_gradient_peaks(const std::vector<double>& freqs,
                                              const std::vector<double>& phase_column,
                                              double prominence_frac = 0.05) {
    if (freqs.size() != phase_column.size())
        throw input_error("phase_gradient_peaks: axis/column size mismatch");
    if (freqs.size() < 8)
        throw input_error("phase_gradient_peaks: need at least 8 frequency samples");
    const double step = freqs[1] - freqs[0];
    const std::vector<double> dph = phase_gradient(phase_column, step);
    const auto [lo_it, hi_it] = std::minmax_element(dph.begin(), dph.end());
    const double range = *hi_it - *lo_it;
    std::vector<Peak> peaks;
    if (range == 0.0) return peaks;  // all-flat column

    const std::size_t n = dph.size();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        if (!(dph[m] > dph[m - 1] && dph[m] >= dph[m + 1])) continue;
        double left_min = dph[m];
        for (std::size_t k = m; k-- > 0;) {
            left_min = std::min(left_min, dph[k]);
            if (dph[k] > dph[m]) break;
        }
        double right_min = dph[m];
        for (std::size_t k = m + 1; k < n; ++k) {
            right_min = std::min(right_min, dph[k]);
            if (dph[k] > dph[m]) break;
        }
        const double prominence = dph[m] - std::max(left_min, right_min);
        if (prominence < prominence_frac * range) continue;

        const double den = dph[m - 1] - 2.0 * dph[m] + dph[m + 1];
        const double offset = den != 0.0 ? 0.5 * (dph[m - 1] - dph[m + 1]) / den : 0.0;
        Peak pk;
        pk.grid_pos = static_cast<double>(m) + offset;
        pk.freq = freqs[0] + pk.grid_pos * step;
        pk.value = dph[m] - 0.25 * (dph[m - 1] - dph[m + 1]) * offset;
        peaks.push_back(pk);
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.value > b.value; });
    return peaks;
}

namespace detail {

inline std::vector<double> phase_column(const ResponseMap& map, std::size_t d) {
    std::vector<double> col(map.grid.freqs.size());
    for (std::size_t f = 0; f < col.size(); ++f) col[f] = map.at(d, f).phase;
    return col;
}

} // namespace detail

struct DetectorConfig {
    double prominence_frac = 0.05;
    double separation_steps = 2.0;  // threshold in frequency-grid steps
};

// Smallest drive at which the two highest phase-gradient peaks sit more than
// separation_steps grid steps apart, with the separation sustained at every
// larger drive: a later drive showing the two peaks re-collapsed disqualifies
// the candidate (rows where fewer than two peaks survive the prominence cut
// carry no separation statement and do not veto). Returns the photon number,
// or nothing for maps that never split (a linear cavity).
inline std::optional<double> critical_point_scd(const ResponseMap& map,
                                                const DetectorConfig& cfg = {}) {
    const std::size_t nd = map.grid.drives.size();
    std::vector<int> state(nd, 0);  // 0: <2 peaks, 1: separated, -1: collapsed
    for (std::size_t d = 0; d < nd; ++d) {
        const auto peaks =
            phase_gradient_peaks(map.grid.freqs, detail::phase_column(map, d), cfg.prominence_frac);
        if (peaks.size() < 2) continue;
        const double sep = std::abs(peaks[0].grid_pos - peaks[1].grid_pos);
        state[d] = sep > cfg.separation_steps ? 1 : -1;
    }
    for (std::size_t d = 0; d < nd; ++d) {
        if (state[d] != 1) continue;
        bool sustained = true;
        for (std::size_t r = d + 1; r < nd; ++r)
            if (state[r] == -1) {
                sustained = false;
                break;
            }
        if (sustained) return map.photon(d);
    }
    return std::nullopt;
}

// Divergence detector in the style of the measured-data analysis: drive at
// which the transmission maximum and the steepest phase gradient stop
// tracking each other (again sustained against re-merging at larger drives).
inline std::optional<double> critical_point_divergence(const ResponseMap& map,
                                                       const DetectorConfig& cfg = {}) {
    const std::size_t nd = map.grid.drives.size();
    const std::size_t nf = map.grid.freqs.size();
    std::vector<bool> diverged(nd, false);
    for (std::size_t d = 0; d < nd; ++d) {
        std::size_t f_t = 0;
        for (std::size_t f = 1; f < nf; ++f)
            if (map.at(d, f).transmission > map.at(d, f_t).transmission) f_t = f;
        const std::vector<double> dph =
            phase_gradient(detail::phase_column(map, d), map.grid.freq_step());
        const std::size_t f_p = static_cast<std::size_t>(
            std::max_element(dph.begin(), dph.end()) - dph.begin());
        diverged[d] = std::abs(static_cast<double>(f_t) - static_cast<double>(f_p)) >
                      cfg.separation_steps;
    }
    for (std::size_t d = 0; d < nd; ++d) {
        if (!diverged[d]) continue;
        bool sustained = true;
        for (std::size_t r = d + 1; r < nd; ++r)
            if (!diverged[r]) {
                sustained = false;
                break;
            }
        if (sustained) return map.photon(d);
    }
    return std::nullopt;
}

// ------------------------------ summary table -------------------------------

// Measured critical photon numbers carried as reference data; the device
// itself is outside this model.
inline double experiment_reference(int level) {
    switch (level) {
        case 0: return 49.0;
        case 1: return 61.0;
        case 2: return 20.0;
        default: throw input_error("experiment_reference: only levels 0..2 are tabulated");
    }
}

struct CriticalPointReport {
    int level = 0;
    std::optional<double> n_c_scd;         // phase-gradient peak-separation detector
    std::optional<double> n_c_divergence;  // T-vs-dphi/df divergence detector
    double n_mist = 0.0;                   // headline ladder-crossing photon number
    double n_c_experiment_reference = 0.0;
    DetectorConfig detector;
};

struct Fig5Row {
    int level = 0;
    double n_c_experiment_reference = 0.0;
    double n_mist = 0.0;
    std::optional<double> n_c_scd;
    std::optional<double> lower_model;  // min(n_mist, n_c_scd): the observed mechanism
};

inline std::vector<Fig5Row> fig5_summary(const std::vector<CriticalPointReport>& reports) {
    if (reports.size() != 3)
        throw input_error("fig5_summary: need reports for levels g, e, f");
    std::vector<Fig5Row> rows;
    for (const auto& rep : reports) {
        Fig5Row row;
        row.level = rep.level;
        row.n_c_experiment_reference = rep.n_c_experiment_reference;
        row.n_mist = rep.n_mist;
        row.n_c_scd = rep.n_c_scd;
        row.lower_model = rep.n_c_scd ? std::min(rep.n_mist, *rep.n_c_scd) : rep.n_mist;
        rows.push_back(row);
    }
    return rows;
}

} // namespace transcav::response
