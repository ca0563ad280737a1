// units.hpp — frequency unit helpers; everything internal is angular (rad/s)

#pragma once

namespace transcav::units {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Config files quote frequencies as value/2pi; conversion happens exactly once.
inline constexpr double mhz(double value_over_2pi) { return two_pi * 1e6 * value_over_2pi; }
inline constexpr double ghz(double value_over_2pi) { return two_pi * 1e9 * value_over_2pi; }

inline constexpr double to_mhz(double rad_per_s) { return rad_per_s / (two_pi * 1e6); }
inline constexpr double to_ghz(double rad_per_s) { return rad_per_s / (two_pi * 1e9); }

} // namespace transcav::units
