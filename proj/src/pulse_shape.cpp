#include "xpdd/pulse_shape.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "xpdd/constants.hpp"
#include "xpdd/errors.hpp"
#include "xpdd/quadrature.hpp"

namespace xpdd::pulse_shape {

using constants::pi;
using constants::two_pi;

std::string family_name(PulseFamily f) {
  switch (f) {
    case PulseFamily::modulated: return "modulated";
    case PulseFamily::top_hat: return "top-hat";
    case PulseFamily::instantaneous: return "instantaneous";
  }
  return "?";
}

PulseFamily family_from_name(const std::string& name) {
  if (name == "modulated") return PulseFamily::modulated;
  if (name == "top-hat" || name == "top_hat" || name == "tophat")
    return PulseFamily::top_hat;
  if (name == "instantaneous") return PulseFamily::instantaneous;
  throw ConfigError("unknown pulse family '" + name + "'");
}

namespace {

// sin(pi l / 2) without rounding: +1, 0, -1, 0 for l = 1, 2, 3, 4 (mod 4)
int sin_half_pi(int l) {
  switch (((l % 4) + 4) % 4) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

// cos(pi * u) with period-2 range reduction so the periodicity of the
// coefficients in t_pi survives in floating point
double cos_pi_reduced(double u) {
  return std::cos(pi * std::fmod(u, 2.0));
}

}  // namespace

double ExtendedPulseSpec::intrapulse(double t) const {
  const double tm = t_flat();
  double v = std::cos(pi * (t - tm) / t_pi);
  if (a1 != 0.0) {
    const double tp = tm + 0.5 * t_pi;
    const double arg = (t - tp) / gauss_width;
    v += a1 * std::exp(-0.5 * arg * arg) *
         std::sin(harmonic * (two_pi / period) * (t - tp));
  }
  return v;
}

double f_instantaneous(int l) {
  if (l < 1) throw OutOfRange("harmonic must be >= 1");
  const int s = sin_half_pi(l);
  return s == 0 ? 0.0 : 4.0 / (pi * l) * s;
}

double f_top_hat(int l, double t_pi, double T) {
  if (l < 1) throw OutOfRange("harmonic must be >= 1");
  if (!(t_pi >= 0.0 && t_pi < 0.5 * T))
    throw OutOfRange("f_top_hat requires 0 <= t_pi < T/2");
  const int s = sin_half_pi(l);
  if (s == 0) return 0.0;
  const double q = 2.0 * l * t_pi / T;
  const double denom = (1.0 - q) * (1.0 + q);
  if (std::abs(denom) < 1e-9) return static_cast<double>(s) / l;
  return 4.0 * s * cos_pi_reduced(l * t_pi / T) / (pi * l * denom);
}

double f_modulated(int l, double t_pi, double T) {
  if (l < 1) throw OutOfRange("harmonic must be >= 1");
  if (l % 2 == 0)
    throw EvenHarmonic("f_modulated is identically 0 for even harmonic " +
                       std::to_string(l));
  if (!(t_pi >= 0.0 && t_pi < 0.5 * T))
    throw OutOfRange("f_modulated requires 0 <= t_pi < T/2");
  return 4.0 / (pi * l) * cos_pi_reduced(l * t_pi / T) * sin_half_pi(l);
}

double t_pi_for_target(int l, double T, double target, int branch) {
  if (l < 1 || l % 2 == 0)
    throw EvenHarmonic("t_pi_for_target needs an odd harmonic");
  if (branch < 0) throw OutOfRange("branch must be >= 0");
  const double fmax = 4.0 / (pi * l);
  if (std::abs(target) > fmax * (1.0 + 1e-12))
    throw OutOfRange("target filter value exceeds 4/(pi l)");
  const double u =
      std::clamp(target / (fmax * sin_half_pi(l)), -1.0, 1.0);
  const double a = std::acos(u) / pi;  // in [0, 1]
  const double x = (branch % 2 == 0) ? branch + a : branch + 1 - a;
  const double t_pi = x * T / l;
  if (t_pi >= 0.5 * T)
    throw NoRoom("branch " + std::to_string(branch) +
                 " gives t_pi >= T/2 at harmonic " + std::to_string(l));
  return t_pi;
}

double solve_a1(const ExtendedPulseSpec& spec) {
  if (spec.harmonic < 1 || spec.harmonic % 2 == 0)
    throw EvenHarmonic("solve_a1 needs an odd harmonic");
  if (!(spec.t_pi > 0.0 && spec.t_flat() > 0.0))
    throw OutOfRange("solve_a1 requires 0 < t_pi < T/2");
  if (!(spec.gauss_width > 0.0))
    throw OutOfRange("solve_a1 requires gauss_width > 0");

  const double tm = spec.t_flat();
  const double tp = tm + 0.5 * spec.t_pi;
  const double wml = spec.harmonic * two_pi / spec.period;
  const double c = spec.gauss_width;
  const double abs_floor = 1e-15 * spec.t_pi;

  const double num = quadrature::adaptive_gauss_kronrod(
      [&](double s) {
        return std::cos(pi * (s - tm) / spec.t_pi) * std::cos(wml * s);
      },
      tm, tm + spec.t_pi, 1e-10, abs_floor);
  const double den = quadrature::adaptive_gauss_kronrod(
      [&](double s) {
        const double arg = (s - tp) / c;
        return std::exp(-0.5 * arg * arg) * std::sin(wml * (s - tp)) *
               std::cos(wml * s);
      },
      tm, tm + spec.t_pi, 1e-10, abs_floor);

  if (std::abs(den) < 1e-14 * spec.t_pi)
    throw DegenerateDenominator(
        "intrapulse modulation cannot cancel the ramp at these parameters");
  return -num / den;
}

// ---------------------------------------------------------------------------
// waveform synthesis
// ---------------------------------------------------------------------------

namespace {

double eval_waveform(const ModulationWaveform& w, double t) {
  const auto& w0 = w.windows[0];
  const auto& w1 = w.windows[1];
  if (w.family == PulseFamily::instantaneous)
    return (t < w0.start || t >= w1.start) ? 1.0 : -1.0;
  if (t >= w0.start && t <= w0.end) return w.spec.intrapulse(t);
  if (t >= w1.start && t <= w1.end)
    return -w.spec.intrapulse(t - 0.5 * w.period);
  if (t < w0.start) return 1.0;
  if (t < w1.start) return -1.0;
  return 1.0;
}

// uniform grid over [0, T] with the window edges inserted as exact nodes
ModulationWaveform sample_waveform(ModulationWaveform w, int n) {
  const double T = w.period;
  std::vector<double>& t = w.time;
  t.resize(n + 1);
  for (int i = 0; i <= n; i++) t[i] = i * T / n;
  t.back() = T;

  const double tol = 1e-12 * T;
  for (auto& win : w.windows) {
    for (double edge : {win.start, win.end}) {
      auto it = std::lower_bound(t.begin(), t.end(), edge - tol);
      if (it == t.end() || std::abs(*it - edge) > tol)
        t.insert(it, edge);
      else
        *it = edge;
    }
  }
  for (auto& win : w.windows) {
    win.first = static_cast<int>(
        std::lower_bound(t.begin(), t.end(), win.start) - t.begin());
    win.last = static_cast<int>(
        std::lower_bound(t.begin(), t.end(), win.end) - t.begin());
  }

  w.modulation.resize(t.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); i++) {
    double v = eval_waveform(w, t[i]);
    worst = std::max(worst, std::abs(v));
    w.modulation[i] = std::clamp(v, -1.0, 1.0);
  }
  if (worst > 1.0 + 1e-9) {
    std::ostringstream msg;
    msg << "modulation exceeds the physical bound: max|F| - 1 = "
        << (worst - 1.0);
    throw BoundViolation(msg.str());
  }
  return w;
}

}  // namespace

double ModulationWaveform::value(double t) const {
  return std::clamp(eval_waveform(*this, t), -1.0, 1.0);
}

ModulationWaveform ModulationWaveform::rescaled(double new_period) const {
  ModulationWaveform out = *this;
  const double k = new_period / period;
  out.period = new_period;
  out.spec.period *= k;
  out.spec.t_pi *= k;
  out.spec.gauss_width *= k;
  for (auto& v : out.time) v *= k;
  for (auto& v : out.rabi) v /= k;
  for (auto& win : out.windows) {
    win.start *= k;
    win.end *= k;
  }
  return out;
}

ModulationWaveform synthesize_modulation(const ExtendedPulseSpec& spec,
                                         int samples_per_period) {
  if (spec.harmonic < 1 || spec.harmonic % 2 == 0)
    throw EvenHarmonic("synthesize_modulation needs an odd harmonic");
  if (!(spec.t_pi > 0.0 && spec.t_flat() > 0.0))
    throw OutOfRange("synthesize_modulation requires 0 < t_pi < T/2");
  if (samples_per_period < 200 * spec.harmonic)
    throw ConfigError("samples_per_period must be >= 200 * harmonic");

  ModulationWaveform w;
  w.family = PulseFamily::modulated;
  w.period = spec.period;
  w.spec = spec;
  const double tm = spec.t_flat();
  w.windows[0] = {tm, tm + spec.t_pi, +1, 0, 0, 0};
  w.windows[1] = {0.5 * spec.period + tm, 0.5 * spec.period + tm + spec.t_pi,
                  -1, 0, 0, 0};
  return sample_waveform(std::move(w), samples_per_period);
}

ModulationWaveform synthesize_top_hat(double t_pi, double T,
                                      int samples_per_period) {
  if (!(t_pi > 0.0 && t_pi < 0.5 * T))
    throw OutOfRange("synthesize_top_hat requires 0 < t_pi < T/2");
  if (samples_per_period < 16)
    throw ConfigError("samples_per_period must be >= 16");

  ModulationWaveform w;
  w.family = PulseFamily::top_hat;
  w.period = T;
  w.spec = ExtendedPulseSpec{1, T, t_pi, 0.0, 0.0, 0};
  const double tm = w.spec.t_flat();
  w.windows[0] = {tm, tm + t_pi, +1, 0, 0, 0};
  w.windows[1] = {0.5 * T + tm, 0.5 * T + tm + t_pi, -1, 0, 0, 0};
  return sample_waveform(std::move(w), samples_per_period);
}

ModulationWaveform synthesize_instantaneous(double T, int samples_per_period) {
  if (samples_per_period < 16)
    throw ConfigError("samples_per_period must be >= 16");
  ModulationWaveform w;
  w.family = PulseFamily::instantaneous;
  w.period = T;
  w.spec = ExtendedPulseSpec{1, T, 0.0, 0.0, 0.0, 0};
  w.windows[0] = {0.25 * T, 0.25 * T, +1, 0, 0, 0};
  w.windows[1] = {0.75 * T, 0.75 * T, -1, 0, 0, 0};
  return sample_waveform(std::move(w), samples_per_period);
}

// ---------------------------------------------------------------------------
// Rabi recovery
// ---------------------------------------------------------------------------

namespace {

// second-order derivative at xe from three (possibly non-uniform) nodes
double deriv3_at(double x0, double f0, double x1, double f1, double x2,
                 double f2, double xe) {
  return f0 * (2.0 * xe - x1 - x2) / ((x0 - x1) * (x0 - x2)) +
         f1 * (2.0 * xe - x0 - x2) / ((x1 - x0) * (x1 - x2)) +
         f2 * (2.0 * xe - x0 - x1) / ((x2 - x0) * (x2 - x1));
}

}  // namespace

void rabi_from_modulation(ModulationWaveform& wave) {
  if (wave.family == PulseFamily::instantaneous)
    throw Error("instantaneous waveform has no intrapulse region");

  wave.rabi.assign(wave.time.size(), 0.0);
  for (auto& win : wave.windows) {
    const int first = win.first, last = win.last;
    const int m = last - first;
    if (m < 2) throw Error("pulse window holds too few samples");
    const int edge_zone = std::max(2, static_cast<int>(std::ceil(0.005 * m)));

    std::vector<double> theta(m + 1);
    theta[0] = 0.0;
    for (int i = 1; i <= m; i++) {
      const double g = win.entry_sign * wave.modulation[first + i];
      if (i > edge_zone && i < m - edge_zone && std::abs(g) >= 1.0)
        throw EdgeSingularity(
            "|F| reaches 1 inside a pulse window; arccos not differentiable");
      const double base = std::acos(std::clamp(g, -1.0, 1.0));
      const double prev = theta[i - 1];
      const double c1 =
          base + two_pi * std::round((prev - base) / two_pi);
      const double c2 =
          -base + two_pi * std::round((prev + base) / two_pi);
      theta[i] = (std::abs(c1 - prev) <= std::abs(c2 - prev)) ? c1 : c2;
    }

    win.rabi_sign_changes = 0;
    double prev_omega = 0.0;
    for (int i = 0; i <= m; i++) {
      const int j = std::clamp(i, 1, m - 1);  // stencil centre (one-sided at edges)
      const double omega = deriv3_at(
          wave.time[first + j - 1], theta[j - 1], wave.time[first + j],
          theta[j], wave.time[first + j + 1], theta[j + 1],
          wave.time[first + i]);
      wave.rabi[first + i] = omega;
      if (i > 0 && omega * prev_omega < 0.0) win.rabi_sign_changes++;
      prev_omega = omega;
    }
  }
}

double pulse_area(const ModulationWaveform& wave, int window) {
  if (!wave.has_rabi()) throw Error("rabi not filled");
  const auto& win = wave.windows[window];
  double acc = 0.0;
  for (int i = win.first + 1; i <= win.last; i++)
    acc += 0.5 * (wave.rabi[i] + wave.rabi[i - 1]) *
           (wave.time[i] - wave.time[i - 1]);
  return acc;
}

// ---------------------------------------------------------------------------
// numeric Fourier coefficient
// ---------------------------------------------------------------------------

double fourier_numeric(const ModulationWaveform& wave, int n) {
  if (n < 1) throw OutOfRange("harmonic must be >= 1");
  const double T = wave.period;
  const double wn = n * two_pi / T;
  const int density = static_cast<int>(wave.time.size()) - 1;

  struct Piece {
    double a, b;
    std::function<double(double)> f;
  };
  std::vector<Piece> pieces;
  const auto& w0 = wave.windows[0];
  const auto& w1 = wave.windows[1];
  pieces.push_back({0.0, w0.start, [](double) { return 1.0; }});
  if (w0.end > w0.start)
    pieces.push_back(
        {w0.start, w0.end, [&](double t) { return wave.spec.intrapulse(t); }});
  pieces.push_back({w0.end, w1.start, [](double) { return -1.0; }});
  if (w1.end > w1.start)
    pieces.push_back({w1.start, w1.end, [&](double t) {
                        return -wave.spec.intrapulse(t - 0.5 * T);
                      }});
  pieces.push_back({w1.end, T, [](double) { return 1.0; }});

  double acc = 0.0;
  for (const auto& p : pieces) {
    if (p.b <= p.a) continue;
    const int m =
        std::max(8, static_cast<int>(std::ceil(density * (p.b - p.a) / T)));
    acc += quadrature::composite_simpson(
        [&](double t) { return p.f(t) * std::cos(wn * t); }, p.a, p.b, m);
  }
  return 2.0 / T * acc;
}

void write_waveform(std::ostream& os, const ModulationWaveform& wave) {
  char buf[160];
  os << "# xpdd waveform\n";
  std::snprintf(buf, sizeof buf,
                "# family=%s harmonic=%d T_ns=%.12g t_pi_ns=%.12g c_ns=%.12g "
                "a1=%.12g\n",
                family_name(wave.family).c_str(), wave.spec.harmonic,
                wave.period * 1e9, wave.spec.t_pi * 1e9,
                wave.spec.gauss_width * 1e9, wave.spec.a1);
  os << buf;
  os << "# rabi_sign_changes_per_window=" << wave.windows[0].rabi_sign_changes
     << "," << wave.windows[1].rabi_sign_changes << "\n";
  os << "# columns: time_ns F Omega_over_2pi_MHz in_pulse\n";
  for (std::size_t i = 0; i < wave.time.size(); i++) {
    const double t = wave.time[i];
    const bool in_pulse =
        (t >= wave.windows[0].start && t <= wave.windows[0].end) ||
        (t >= wave.windows[1].start && t <= wave.windows[1].end);
    const double omega = wave.has_rabi() ? wave.rabi[i] : 0.0;
    std::snprintf(buf, sizeof buf, "%.12g %.12g %.12g %d\n", t * 1e9,
                  wave.modulation[i], omega / (two_pi * 1e6), in_pulse ? 1 : 0);
    os << buf;
  }
}

}  // namespace xpdd::pulse_shape
