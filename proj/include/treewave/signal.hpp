#pragma once

#include <map>
#include <string>
#include <vector>

namespace treewave::signal {

// Low-frequency traveling wave L(t,x) = A cos(2 pi f t - k x + phi0).
struct TravelingWave {
  double amplitude = 1.0;     // >= 0
  double frequency = 2.0;     // Hz, > 0
  double wavenumber = 0.0;    // rad per unit position
  double phase_offset = 0.0;  // rad, stored wrapped

  TravelingWave() = default;
  TravelingWave(double amplitude, double frequency, double wavenumber, double phase_offset);
};

// One fast component whose amplitude rides the slow wave's phase:
// instantaneous amplitude = base + depth * cos(phi_slow - preferred).
struct HighFreqComponent {
  double base_amplitude = 1.0;    // >= 0
  double modulation_depth = 0.0;  // >= 0, <= base_amplitude
  double frequency = 60.0;        // Hz
  double phase = 0.0;             // rad

  HighFreqComponent() = default;
  HighFreqComponent(double base_amplitude, double modulation_depth, double frequency,
                    double phase);
};

struct PacConfig {
  double preferred_phase = 0.0;  // rad, stored wrapped

  PacConfig() = default;
  explicit PacConfig(double preferred_phase);
};

// Carrier that places one category at one phase offset:
// S(t) = A cos(2 pi f t + phi_C). Mapped phases must be pairwise separated
// by at least 2 pi / (4 * |categories|).
struct PhaseCode {
  double amplitude = 1.0;  // >= 0
  double frequency = 6.0;  // Hz, > 0
  std::map<std::string, double> mapping;

  PhaseCode() = default;
  PhaseCode(double amplitude, double frequency, std::map<std::string, double> mapping);
};

// Builds the evenly spaced mapping category[i] -> i * 2 pi / n.
PhaseCode evenly_spaced_phase_code(double amplitude, double frequency,
                                   const std::vector<std::string>& categories);

struct KuramotoNetwork {
  std::vector<double> natural_frequencies;     // rad/s
  std::vector<std::vector<double>> coupling;   // square, zero diagonal
  std::vector<double> phases;                  // rad, wrapped

  KuramotoNetwork() = default;
  KuramotoNetwork(std::vector<double> natural_frequencies,
                  std::vector<std::vector<double>> coupling, std::vector<double> phases);
};

// Uniform all-to-all coupling k with zero diagonal.
std::vector<std::vector<double>> uniform_coupling(std::size_t n, double k);

struct SignalTrace {
  double sample_rate = 0.0;  // Hz, > 0
  double position = 0.0;     // spatial coordinate the trace was sampled at
  std::vector<double> samples;

  double duration() const { return samples.size() / sample_rate; }
  double time_at(std::size_t i) const { return static_cast<double>(i) / sample_rate; }
};

double eval_wave(const TravelingWave& w, double t, double x);

// Instantaneous phase of the wave, wrapped to [0, 2pi).
double wave_phase(const TravelingWave& w, double t, double x);

// Sinusoidal amplitude law: base + depth * cos(phi - preferred). Stays in
// [base - depth, base + depth], never negative given the constructor check.
double pac_amplitude(const HighFreqComponent& c, double phi, const PacConfig& pac);

// Sum of fast components, each amplitude-modulated by the slow wave's phase
// at position x. Throws NyquistError when sample_rate <= 2 * max component
// frequency, or when fewer than 2 samples would be produced.
SignalTrace synth_modulated(const std::vector<HighFreqComponent>& bank, const TravelingWave& w,
                            const PacConfig& pac, double sample_rate, double duration, double x);

// Unmodulated sum H(t,x): every component at its base amplitude.
SignalTrace synth_unmodulated(const std::vector<HighFreqComponent>& bank, double sample_rate,
                              double duration, double x);

// S(t) for the given category. Throws UnknownCategoryError.
double eval_phase_code(const PhaseCode& pc, const std::string& category, double t);

// Kuramoto vector field: dphi_i/dt = omega_i + sum_j K_ij sin(phi_j - phi_i).
std::vector<double> kuramoto_field(const KuramotoNetwork& net, const std::vector<double>& phases);

// One RK4 step of the field; phases re-wrapped. Throws StepSizeError when
// dt <= 0 or dt * max|omega| >= 0.1.
KuramotoNetwork kuramoto_step(const KuramotoNetwork& net, double dt);

// |mean of unit phasors|, in [0,1]. Throws EmptyInputError.
double order_parameter(const std::vector<double>& phases);

// wrap(phi_matrix + n * delta_phi): n nestings deep into the matrix phase.
double nested_phase(double phi_matrix, double delta_phi, int n);

// Test/noise utility: adds white Gaussian noise at the given SNR (dB,
// relative to the trace's mean power), deterministically per seed.
SignalTrace with_noise(const SignalTrace& trace, double snr_db, std::uint64_t seed);

// CSV export, header "t,value" (15 significant digits).
void write_trace_csv(const std::string& path, const SignalTrace& trace);
SignalTrace read_trace_csv(const std::string& path);

// Spatial sweep export, header "t,x,value".
void write_sweep_csv(const std::string& path, const std::vector<SignalTrace>& traces);

}  // namespace treewave::signal
