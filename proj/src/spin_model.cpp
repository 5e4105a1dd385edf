#include "xpdd/spin_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "xpdd/errors.hpp"

namespace xpdd::spin_model {

using Eigen::Vector3d;

void SpinBath::validate() const {
  if (!(b_field > 0.0)) throw ConfigError("bath: b_field must be positive");
  std::set<std::string> seen;
  for (const auto& n : nuclei) {
    if (!seen.insert(n.label).second)
      throw ConfigError("bath: duplicate nucleus label '" + n.label + "'");
    if (!n.hyperfine.allFinite())
      throw ConfigError("bath: non-finite hyperfine for '" + n.label + "'");
    if (!(n.gyro > 0.0))
      throw ConfigError("bath: gyro must be positive for '" + n.label + "'");
  }
}

int SpinBath::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < nuclei.size(); i++)
    if (nuclei[i].label == label) return static_cast<int>(i);
  throw UnknownNucleus("no nucleus labelled '" + label + "' in bath");
}

double larmor_frequency(double gyro, double b_field) {
  return gyro * b_field;
}

double larmor_frequency(const SpinBath& bath, const NuclearSpin& nucleus) {
  return larmor_frequency(nucleus.gyro, bath.b_field);
}

FrameComponents hyperfine_components(const SpinBath& bath,
                                     const NuclearSpin& nucleus) {
  const double wl = larmor_frequency(bath, nucleus);
  const Vector3d omega_vec = wl * Vector3d::UnitZ() - 0.5 * nucleus.hyperfine;

  FrameComponents fc;
  fc.omega = omega_vec.norm();
  if (fc.omega == 0.0)
    throw ZeroFrequency("nuclear frame undefined: |omega_L z - A/2| = 0 for '" +
                        nucleus.label + "'");
  fc.omega_axis = omega_vec / fc.omega;

  const Vector3d a_perp =
      nucleus.hyperfine - nucleus.hyperfine.dot(fc.omega_axis) * fc.omega_axis;
  fc.ax = a_perp.norm();
  fc.ay = fc.omega_axis.cross(nucleus.hyperfine).norm();
  fc.az = nucleus.hyperfine.dot(fc.omega_axis);

  if (fc.ax > 1e-30) {
    fc.x_axis = a_perp / fc.ax;
  } else {
    // transverse phase is irrelevant at ax = 0: pick z x w, fall back to x
    Vector3d seed = Vector3d::UnitZ().cross(fc.omega_axis);
    if (seed.norm() < 1e-12) seed = Vector3d::UnitX();
    fc.x_axis = (seed - seed.dot(fc.omega_axis) * fc.omega_axis).normalized();
  }
  fc.y_axis = fc.omega_axis.cross(fc.x_axis);
  return fc;
}

Eigen::Vector3d point_dipole_hyperfine(const Eigen::Vector3d& position,
                                       double gamma_n) {
  const double r = position.norm();
  if (r <= 0.0) throw Error("point_dipole_hyperfine: zero distance");
  const Vector3d n = position / r;
  const double pref = constants::mu0 * constants::gamma_e * gamma_n *
                      constants::hbar / (4.0 * constants::pi * r * r * r);
  return pref * (Vector3d::UnitZ() - 3.0 * n.z() * n);
}

namespace {

// platform-stable bounded integer from raw mt19937_64 output
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace

SpinBath generate_c13_bath(std::uint64_t seed, int count, double min_distance,
                           double max_distance, double b_field) {
  if (count < 1) throw ConfigError("bath generator: count must be >= 1");
  if (!(0.0 < min_distance && min_distance < max_distance))
    throw ConfigError("bath generator: need 0 < min_distance < max_distance");

  // diamond: fcc lattice with two-atom basis
  const double a = constants::diamond_lattice_a;
  const Vector3d f1(0.0, 0.5 * a, 0.5 * a);
  const Vector3d f2(0.5 * a, 0.0, 0.5 * a);
  const Vector3d f3(0.5 * a, 0.5 * a, 0.0);
  const Vector3d basis[2] = {Vector3d::Zero(),
                             Vector3d(0.25 * a, 0.25 * a, 0.25 * a)};

  const int m = static_cast<int>(std::ceil(max_distance / (0.5 * a))) + 2;
  std::vector<Vector3d> sites;
  for (int i = -m; i <= m; i++)
    for (int j = -m; j <= m; j++)
      for (int k = -m; k <= m; k++) {
        const Vector3d cell = i * f1 + j * f2 + k * f3;
        for (const auto& b : basis) {
          const Vector3d r = cell + b;
          const double d = r.norm();
          if (d >= min_distance && d <= max_distance) sites.push_back(r);
        }
      }

  if (static_cast<int>(sites.size()) < count) {
    std::ostringstream msg;
    msg << "bath generator: shell holds " << sites.size()
        << " sites, requested " << count;
    throw InsufficientSites(msg.str());
  }

  // partial Fisher-Yates over site indices
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> idx(sites.size());
  for (std::size_t i = 0; i < idx.size(); i++) idx[i] = i;
  for (int i = 0; i < count; i++) {
    const std::uint64_t j = i + bounded(rng, idx.size() - i);
    std::swap(idx[i], idx[j]);
  }

  SpinBath bath;
  bath.b_field = b_field;
  bath.nuclei.reserve(count);
  for (int i = 0; i < count; i++) {
    NuclearSpin n;
    n.gyro = constants::gamma_c13;
    n.hyperfine = point_dipole_hyperfine(sites[idx[i]], n.gyro);
    char buf[32];
    std::snprintf(buf, sizeof buf, "C13_%03d", i + 1);
    n.label = buf;
    bath.nuclei.push_back(std::move(n));
  }
  bath.validate();
  return bath;
}

// ---------------------------------------------------------------------------
// bath file format:
//   # comment lines
//   B_z_T <tesla>
//   <label> <gyro MHz/T> <Ax kHz> <Ay kHz> <Az kHz>
// plain (non-angular) units in the file, 17 significant digits
// ---------------------------------------------------------------------------

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Printed file value p such that p * k reproduces v exactly. A plain v / k
// misses by one ulp for ~13% of doubles (double rounding), which would break
// the bit-for-bit file round trip; searching the two ulp neighbours recovers
// the exact twin whenever one exists (always, for values that entered via a
// file read).
double to_file_units(double v, double k) {
  const double p = v / k;
  if (p * k == v) return p;
  double up = p, dn = p;
  for (int step = 0; step < 2; step++) {
    up = std::nextafter(up, std::numeric_limits<double>::infinity());
    dn = std::nextafter(dn, -std::numeric_limits<double>::infinity());
    if (up * k == v) return up;
    if (dn * k == v) return dn;
  }
  return p;
}

constexpr double kGyroUnit = constants::two_pi * 1e6;  // MHz/T -> rad/s/T
constexpr double kHfUnit = constants::two_pi * 1e3;    // kHz -> rad/s

}  // namespace

void write_bath(std::ostream& os, const SpinBath& bath) {
  os << "# columns: label gyro_MHz_per_T Ax_kHz Ay_kHz Az_kHz\n";
  os << "B_z_T " << fmt17(bath.b_field) << "\n";
  for (const auto& n : bath.nuclei) {
    os << n.label << " " << fmt17(to_file_units(n.gyro, kGyroUnit));
    for (int k = 0; k < 3; k++)
      os << " " << fmt17(to_file_units(n.hyperfine[k], kHfUnit));
    os << "\n";
  }
}

void write_bath_file(const std::string& path, const SpinBath& bath) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  write_bath(os, bath);
}

SpinBath read_bath(std::istream& is) {
  SpinBath bath;
  std::string line;
  bool have_field = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    lineno++;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok == "B_z_T") {
      ss >> bath.b_field;
      if (!ss) throw IoError("bath file: bad B_z_T value (line " +
                             std::to_string(lineno) + ")");
      have_field = true;
      continue;
    }
    NuclearSpin n;
    n.label = tok;
    double gyro_mhz, ax, ay, az;
    ss >> gyro_mhz >> ax >> ay >> az;
    if (!ss) throw IoError("bath file: bad nucleus row (line " +
                           std::to_string(lineno) + ")");
    n.gyro = gyro_mhz * kGyroUnit;
    n.hyperfine =
        Eigen::Vector3d(ax * kHfUnit, ay * kHfUnit, az * kHfUnit);
    bath.nuclei.push_back(std::move(n));
  }
  if (!have_field) throw IoError("bath file: missing B_z_T header row");
  bath.validate();
  return bath;
}

SpinBath read_bath_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open bath file '" + path + "'");
  return read_bath(is);
}

}  // namespace xpdd::spin_model
