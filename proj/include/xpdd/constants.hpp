#ifndef XPDD_CONSTANTS_HPP
#define XPDD_CONSTANTS_HPP

namespace xpdd::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Electromagnetic / quantum constants (SI).
inline constexpr double mu0 = 1.25663706212e-6;       // vacuum permeability [T m/A]
inline constexpr double hbar = 1.054571817e-34;       // reduced Planck [J s]
inline constexpr double c_light = 299792458.0;        // [m/s]

// Sensor and nuclear constants. All frequencies in this toolkit are angular
// (rad/s); plain-Hz values appear only at the I/O boundary.
inline constexpr double zero_field_splitting = two_pi * 2.87e9;      // D [rad/s]
inline constexpr double gamma_e = -two_pi * 28.024e9;                // [rad/s/T]
inline constexpr double gamma_c13 = two_pi * 10.708e6;               // [rad/s/T]
inline constexpr double gamma_h = two_pi * 42.577e6;                 // [rad/s/T]

inline constexpr double diamond_lattice_a = 3.567e-10;               // [m]

}  // namespace xpdd::constants

#endif
