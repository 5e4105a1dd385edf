#ifndef XPDD_PULSE_SHAPE_HPP
#define XPDD_PULSE_SHAPE_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace xpdd::pulse_shape {

enum class PulseFamily { modulated, top_hat, instantaneous };

std::string family_name(PulseFamily f);
PulseFamily family_from_name(const std::string& name);

// Everything defining one amplitude-modulated extended pi pulse. Timing
// layout within one period T: flat (+1) of length t_flat, pulse centred at
// T/4, flat (-1) of length 2 t_flat, mirrored pulse centred at 3T/4, flat
// (+1) of length t_flat, so T = 4 t_flat + 2 t_pi.
struct ExtendedPulseSpec {
  int harmonic = 0;          // l, odd
  double period = 0.0;       // T [s]
  double t_pi = 0.0;         // pulse length [s]
  double gauss_width = 0.0;  // c [s]
  double a1 = 0.0;           // solved modulation amplitude
  int q_max = 1;             // only q = 1 is solved

  double t_flat() const { return 0.25 * (period - 2.0 * t_pi); }
  double pulse_center() const { return 0.25 * period; }

  // intrapulse F(t) for the first pulse window [t_flat, t_flat + t_pi]
  double intrapulse(double t) const;
};

struct FilterCoefficient {
  int harmonic = 0;
  double value = 0.0;
};

// Fourier coefficient of the ideal (instantaneous-pulse) square wave:
// (4 / pi l) sin(pi l / 2) for odd l, zero for even l.
double f_instantaneous(int l);

// Finite-width constant-amplitude pulse coefficient
//   f = 4 sin(pi l/2) cos(pi l t_pi/T) / [pi l (1 - 4 l^2 t_pi^2 / T^2)],
// with the removable singularity at t_pi = T/(2l) evaluated analytically.
double f_top_hat(int l, double t_pi, double T);

// Modulated extended-pulse coefficient (4 / pi l) cos(pi t_pi/(T/l))
// sin(pi l/2); periodic in t_pi with period 2T/l. Throws EvenHarmonic for
// even l.
double f_modulated(int l, double t_pi, double T);

// Inverts f_modulated for t_pi. Branch b picks the b-th smallest nonnegative
// solution; larger branches give longer pulses. Throws OutOfRange when
// |target| > 4/(pi l) and NoRoom when the branch forces t_pi >= T/2.
double t_pi_for_target(int l, double T, double target, int branch);

// Solves the q = 1 Gaussian amplitude that cancels the intrapulse Fourier
// contribution at harmonic l (adaptive quadrature, relative 1e-10). Throws
// DegenerateDenominator when the modulation cannot cancel the ramp.
double solve_a1(const ExtendedPulseSpec& spec);

struct PulseWindow {
  double start = 0.0;
  double end = 0.0;
  int entry_sign = 1;        // F value on the flat region entering the window
  int first = 0, last = 0;   // inclusive sample index range
  int rabi_sign_changes = 0; // filled by rabi_from_modulation
};

// One period of F(t) (and, once filled, Omega(t)) sampled on a uniform grid
// augmented with the exact window-edge nodes. The descriptor keeps the
// analytic piecewise definition so quadrature can evaluate F between samples.
struct ModulationWaveform {
  PulseFamily family = PulseFamily::modulated;
  double period = 0.0;
  ExtendedPulseSpec spec;  // for top_hat/instantaneous only timing fields used
  std::vector<double> time;
  std::vector<double> modulation;
  std::vector<double> rabi;  // empty until rabi_from_modulation
  std::array<PulseWindow, 2> windows;

  bool has_rabi() const { return !rabi.empty(); }
  // analytic F at any t in [0, period]
  double value(double t) const;
  // same waveform stretched to a new period (times scale, Rabi scales down)
  ModulationWaveform rescaled(double new_period) const;
};

// Samples the piecewise waveform. Requires samples_per_period >= 200 l and
// a solved a1; throws BoundViolation if max |F| exceeds 1 + 1e-9.
ModulationWaveform synthesize_modulation(const ExtendedPulseSpec& spec,
                                         int samples_per_period);

// Constant-amplitude pulse of the same timing layout (F = cosine ramp inside
// the pulse window, Omega = pi / t_pi).
ModulationWaveform synthesize_top_hat(double t_pi, double T,
                                      int samples_per_period);

// Ideal square wave (t_pi = 0 limit).
ModulationWaveform synthesize_instantaneous(double T, int samples_per_period);

// Recovers Omega(t) = d/dt arccos[F(t)] inside each pulse window by branch
// tracking from the window entry, signed (no phase flip applied where the
// modulation overshoots). Throws EdgeSingularity if |F| reaches 1 at an
// interior sample.
void rabi_from_modulation(ModulationWaveform& wave);

// Pulse area of window w from the tabulated Omega (should be pi).
double pulse_area(const ModulationWaveform& wave, int window);

// f_n = 2/T int_0^T F(s) cos(n w_M s) ds by composite Simpson applied piece
// by piece between waveform breakpoints (node density follows the sample
// grid), so discontinuous square waves integrate cleanly.
double fourier_numeric(const ModulationWaveform& wave, int n);

// Tabular export: time_ns, F, Omega/2pi MHz, in_pulse.
void write_waveform(std::ostream& os, const ModulationWaveform& wave);

}  // namespace xpdd::pulse_shape

#endif
