#ifndef XPDD_SEQUENCE_HPP
#define XPDD_SEQUENCE_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "xpdd/pulse_shape.hpp"
#include "xpdd/spin_model.hpp"

namespace xpdd::sequence {

// What gets played during each pulse window.
struct PulseShapeRef {
  pulse_shape::PulseFamily family = pulse_shape::PulseFamily::instantaneous;
  // modulated pulses need the synthesized waveform with Rabi filled
  std::shared_ptr<const pulse_shape::ModulationWaveform> waveform;
  double rabi = 0.0;  // constant Omega for top-hat pulses [rad/s]
};

struct TimedPulse {
  double center = 0.0;    // [s]
  double duration = 0.0;  // t_pi [s]
  double phase = 0.0;     // 0 for X, pi/2 for Y
};

// Repeated XY-8 blocks: pulses at T/4 + k T/2, phases XYXYYXYX, one block
// spans 4T, total_time = repetitions * 4T.
struct PulseSchedule {
  double period = 0.0;  // T [s]
  int repetitions = 0;
  std::vector<TimedPulse> pulses;
  double total_time = 0.0;
  PulseShapeRef shape;
};

// T = 2 pi l / omega_k so the l-th harmonic sits exactly on omega_k.
double resonance_period(int l, double omega_k);

// Throws ScheduleOverlap when t_pi >= T/2.
PulseSchedule build_xy8(double T, double t_pi, int repetitions,
                        PulseShapeRef shape);

// F(t) composed over the whole schedule (periodic continuation of the shape).
double schedule_modulation(const PulseSchedule& schedule, double t);

struct RwaEntry {
  std::string nucleus;
  int harmonic = 0;       // n
  double detuning = 0.0;  // |omega_j - n omega_M| [rad/s]
  double coupling = 0.0;  // f_n A_j^x / 4 [rad/s]
  double ratio = 0.0;     // detuning / coupling (inf when coupling = 0)
  bool margin_flag = false;   // ratio below threshold
  bool overlap_flag = false;  // resonance falls inside the scan window
};

struct RwaReport {
  std::vector<RwaEntry> entries;
  bool any_margin = false;
  bool any_overlap = false;
};

struct RwaOptions {
  double scan_halfwidth = 0.0;     // window half width in omega_M [rad/s]
  double ratio_threshold = 10.0;   // "much greater" default
};

// Margin report for addressing `target` at harmonic l, on resonance
// (omega_M = omega_target / l). coeffs[n-1] holds f_n for n = 1..n_max.
RwaReport rwa_margins(const spin_model::SpinBath& bath,
                      const std::string& target, int l,
                      const std::vector<double>& coeffs,
                      const RwaOptions& options);

void write_schedule(std::ostream& os, const PulseSchedule& schedule);
void write_rwa_report(std::ostream& os, const RwaReport& report);

}  // namespace xpdd::sequence

#endif
