#pragma once

#include <numbers>

namespace oamrcs {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

constexpr double deg_to_rad(double deg) noexcept { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) noexcept { return rad * (180.0 / kPi); }

/// Free-space wavelength in meters for a carrier in GHz.
constexpr double wavelength_from_ghz(double freq_ghz) noexcept {
    return kSpeedOfLight / (freq_ghz * 1e9);
}

/// Reduce an angle to [0, 2π). Used on observation angles before they are
/// scaled by large factors like 2kD, so φ and φ + 2π evaluate identically.
double wrap_two_pi(double rad) noexcept;

/// Reduce a phase to [−π, π] in extended precision.
double wrap_phase(long double rad) noexcept;

}  // namespace oamrcs
