#ifndef XPDD_SPIN_MODEL_HPP
#define XPDD_SPIN_MODEL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xpdd/constants.hpp"

namespace xpdd::spin_model {

// Fixed sensor and species constants, angular units.
struct PhysicalConstants {
  double zero_field_splitting = constants::zero_field_splitting;  // D [rad/s]
  double gamma_e = constants::gamma_e;      // electron [rad/s/T], negative
  double gamma_c13 = constants::gamma_c13;  // [rad/s/T]
  double gamma_h = constants::gamma_h;      // [rad/s/T]
};

struct NuclearSpin {
  Eigen::Vector3d hyperfine;  // A_j, lab frame [rad/s]
  double gyro = 0.0;          // gamma_n [rad/s/T]
  std::string label;
};

// The sensor plus its nuclear environment. Immutable once built; safe to
// share read-only across scan workers.
struct SpinBath {
  PhysicalConstants constants;
  double b_field = 0.0;  // B_z [tesla]
  std::vector<NuclearSpin> nuclei;

  // throws ConfigError on nonpositive field or duplicate labels
  void validate() const;
  int index_of(const std::string& label) const;  // throws UnknownNucleus
};

// Per-nucleus rotating-frame quantities: the dressed precession vector
// omega_vec = omega_L z - A/2 and the decomposition of A along / transverse
// to it. Axes form a right-handed orthonormal triple with
// omega_axis = x_axis x y_axis.
struct FrameComponents {
  double omega = 0.0;  // |omega_vec| [rad/s]
  double ax = 0.0;     // |A - (A.w)w| [rad/s]
  double ay = 0.0;     // |w x A| [rad/s]
  double az = 0.0;     // A . w [rad/s]
  Eigen::Vector3d x_axis, y_axis, omega_axis;
};

double larmor_frequency(double gyro, double b_field);
double larmor_frequency(const SpinBath& bath, const NuclearSpin& nucleus);

// throws ZeroFrequency when omega_vec vanishes (axes undefined)
FrameComponents hyperfine_components(const SpinBath& bath,
                                     const NuclearSpin& nucleus);

// Secular point-dipole hyperfine vector for a nucleus at `position` relative
// to the sensor, NV axis along z: A = pref (z - 3 n_z n), pref = mu0
// gamma_e gamma_n hbar / (4 pi r^3).
Eigen::Vector3d point_dipole_hyperfine(const Eigen::Vector3d& position,
                                       double gamma_n);

// Deterministically samples `count` distinct diamond-lattice sites in the
// radial shell [min_distance, max_distance] (meters) around the sensor and
// assigns point-dipole couplings. Pure in (seed, parameters).
SpinBath generate_c13_bath(std::uint64_t seed, int count, double min_distance,
                           double max_distance, double b_field);

// Bath file I/O. Plain text, non-angular units (MHz/T, kHz), 17 significant
// digits so write/read round-trips bit for bit.
void write_bath(std::ostream& os, const SpinBath& bath);
void write_bath_file(const std::string& path, const SpinBath& bath);
SpinBath read_bath(std::istream& is);
SpinBath read_bath_file(const std::string& path);

}  // namespace xpdd::spin_model

#endif
