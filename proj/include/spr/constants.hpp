#pragma once
#include <cmath>

// Internal unit system: natural units (hbar = c = |e| = 1), every length and
// time carried in centimeters.  The CLI layer converts nm/um/mm/deg on input
// and rad/s on output.

namespace spr {

namespace constants {
inline constexpr double lambda_c_cm = 3.9e-11;     // electron Compton wavelength
inline constexpr double t_c_s = 1.3e-21;           // Compton time, seconds
inline constexpr double c_cm_per_s = lambda_c_cm / t_c_s;
inline constexpr double electron_mass = 1.0 / lambda_c_cm;  // 1/cm
inline constexpr double pi = 3.141592653589793238462643383279502884;
}  // namespace constants

inline constexpr double nm_to_cm(double v) { return v * 1e-7; }
inline constexpr double um_to_cm(double v) { return v * 1e-4; }
inline constexpr double mm_to_cm(double v) { return v * 1e-1; }
inline constexpr double cm_to_um(double v) { return v * 1e4; }
inline double deg_to_rad(double v) { return v * constants::pi / 180.0; }
inline double rad_to_deg(double v) { return v * 180.0 / constants::pi; }

// times are carried as c*t in cm; conversion for reporting
inline constexpr double time_cm_to_s(double t_cm) { return t_cm / constants::c_cm_per_s; }

}  // namespace spr
