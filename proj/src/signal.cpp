#include "treewave/signal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "treewave/csvio.hpp"
#include "treewave/errors.hpp"
#include "treewave/phase.hpp"
#include "treewave/rng.hpp"

namespace treewave::signal {

TravelingWave::TravelingWave(double amplitude, double frequency, double wavenumber,
                             double phase_offset)
    : amplitude(amplitude),
      frequency(frequency),
      wavenumber(wavenumber),
      phase_offset(wrap_phase(phase_offset)) {
  if (amplitude < 0.0) throw FormatError("wave amplitude must be >= 0");
  if (frequency <= 0.0) throw FormatError("wave frequency must be > 0");
}

HighFreqComponent::HighFreqComponent(double base_amplitude, double modulation_depth,
                                     double frequency, double phase)
    : base_amplitude(base_amplitude),
      modulation_depth(modulation_depth),
      frequency(frequency),
      phase(wrap_phase(phase)) {
  if (base_amplitude < 0.0) throw FormatError("base amplitude must be >= 0");
  if (modulation_depth < 0.0) throw FormatError("modulation depth must be >= 0");
  if (modulation_depth > base_amplitude)
    throw FormatError("modulation depth must not exceed base amplitude");
}

PacConfig::PacConfig(double preferred_phase) : preferred_phase(wrap_phase(preferred_phase)) {}

PhaseCode::PhaseCode(double amplitude, double frequency, std::map<std::string, double> mapping)
    : amplitude(amplitude), frequency(frequency), mapping(std::move(mapping)) {
  if (amplitude < 0.0) throw FormatError("phase code amplitude must be >= 0");
  if (frequency <= 0.0) throw FormatError("phase code frequency must be > 0");
  for (auto& [cat, phi] : this->mapping) phi = wrap_phase(phi);
  const double min_sep = kTwoPi / (4.0 * static_cast<double>(std::max<std::size_t>(
                                             this->mapping.size(), 1)));
  for (auto a = this->mapping.begin(); a != this->mapping.end(); ++a)
    for (auto b = std::next(a); b != this->mapping.end(); ++b)
      if (circular_distance(a->second, b->second) < min_sep)
        throw FormatError("phase code: categories '" + a->first + "' and '" + b->first +
                          "' are closer than the minimum separation");
}

PhaseCode evenly_spaced_phase_code(double amplitude, double frequency,
                                   const std::vector<std::string>& categories) {
  if (categories.empty()) throw FormatError("phase code needs at least one category");
  std::map<std::string, double> mapping;
  for (std::size_t i = 0; i < categories.size(); ++i)
    mapping[categories[i]] = kTwoPi * static_cast<double>(i) / categories.size();
  if (mapping.size() != categories.size()) throw FormatError("duplicate category in phase code");
  return PhaseCode(amplitude, frequency, std::move(mapping));
}

KuramotoNetwork::KuramotoNetwork(std::vector<double> natural_frequencies,
                                 std::vector<std::vector<double>> coupling,
                                 std::vector<double> phases)
    : natural_frequencies(std::move(natural_frequencies)),
      coupling(std::move(coupling)),
      phases(std::move(phases)) {
  const std::size_t n = this->natural_frequencies.size();
  if (this->phases.size() != n) throw FormatError("kuramoto: phase/frequency size mismatch");
  if (this->coupling.size() != n) throw FormatError("kuramoto: coupling must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (this->coupling[i].size() != n) throw FormatError("kuramoto: coupling must be square");
    if (this->coupling[i][i] != 0.0) throw FormatError("kuramoto: coupling diagonal must be 0");
  }
  for (auto& phi : this->phases) phi = wrap_phase(phi);
}

std::vector<std::vector<double>> uniform_coupling(std::size_t n, double k) {
  std::vector<std::vector<double>> m(n, std::vector<double>(n, k));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 0.0;
  return m;
}

double eval_wave(const TravelingWave& w, double t, double x) {
  return w.amplitude * std::cos(kTwoPi * w.frequency * t - w.wavenumber * x + w.phase_offset);
}

double wave_phase(const TravelingWave& w, double t, double x) {
  return wrap_phase(kTwoPi * w.frequency * t - w.wavenumber * x + w.phase_offset);
}

double pac_amplitude(const HighFreqComponent& c, double phi, const PacConfig& pac) {
  return c.base_amplitude + c.modulation_depth * std::cos(phi - pac.preferred_phase);
}

static void check_nyquist(const std::vector<HighFreqComponent>& bank, double sample_rate,
                          double duration) {
  if (sample_rate <= 0.0) throw NyquistError("sample rate must be > 0");
  double fmax = 0.0;
  for (const auto& c : bank) fmax = std::max(fmax, std::fabs(c.frequency));
  if (sample_rate <= 2.0 * fmax)
    throw NyquistError("sample rate " + csv::format_double(sample_rate) +
                       " Hz is not above twice the max component frequency " +
                       csv::format_double(fmax) + " Hz");
  if (duration * sample_rate < 2.0) throw NyquistError("trace would hold fewer than 2 samples");
}

SignalTrace synth_modulated(const std::vector<HighFreqComponent>& bank, const TravelingWave& w,
                            const PacConfig& pac, double sample_rate, double duration, double x) {
  check_nyquist(bank, sample_rate, duration);
  const auto n = static_cast<std::size_t>(std::floor(duration * sample_rate));
  SignalTrace trace{sample_rate, x, std::vector<double>(n, 0.0)};
  for (std::size_t s = 0; s < n; ++s) {
    const double t = trace.time_at(s);
    const double phi = wave_phase(w, t, x);
    double v = 0.0;
    for (const auto& c : bank)
      v += pac_amplitude(c, phi, pac) * std::cos(kTwoPi * c.frequency * t + c.phase);
    trace.samples[s] = v;
  }
  return trace;
}

SignalTrace synth_unmodulated(const std::vector<HighFreqComponent>& bank, double sample_rate,
                              double duration, double x) {
  check_nyquist(bank, sample_rate, duration);
  const auto n = static_cast<std::size_t>(std::floor(duration * sample_rate));
  SignalTrace trace{sample_rate, x, std::vector<double>(n, 0.0)};
  for (std::size_t s = 0; s < n; ++s) {
    const double t = trace.time_at(s);
    double v = 0.0;
    for (const auto& c : bank)
      v += c.base_amplitude * std::cos(kTwoPi * c.frequency * t + c.phase);
    trace.samples[s] = v;
  }
  return trace;
}

double eval_phase_code(const PhaseCode& pc, const std::string& category, double t) {
  auto it = pc.mapping.find(category);
  if (it == pc.mapping.end()) throw UnknownCategoryError("unknown category: " + category);
  return pc.amplitude * std::cos(kTwoPi * pc.frequency * t + it->second);
}

std::vector<double> kuramoto_field(const KuramotoNetwork& net, const std::vector<double>& phases) {
  const std::size_t n = phases.size();
  if (n != net.natural_frequencies.size()) throw FormatError("kuramoto field: size mismatch");
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    double coupling_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      coupling_sum += net.coupling[i][j] * std::sin(phases[j] - phases[i]);
    d[i] = net.natural_frequencies[i] + coupling_sum;
  }
  return d;
}

KuramotoNetwork kuramoto_step(const KuramotoNetwork& net, double dt) {
  if (dt <= 0.0) throw StepSizeError("dt must be > 0");
  double omega_max = 0.0;
  for (double w : net.natural_frequencies) omega_max = std::max(omega_max, std::fabs(w));
  if (dt * omega_max >= 0.1)
    throw StepSizeError("dt * max|omega| = " + csv::format_double(dt * omega_max) +
                        " violates the stability guard (< 0.1)");
  const std::size_t n = net.phases.size();
  std::vector<double> k1 = kuramoto_field(net, net.phases);
  std::vector<double> tmp(n);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = net.phases[i] + 0.5 * dt * k1[i];
  std::vector<double> k2 = kuramoto_field(net, tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = net.phases[i] + 0.5 * dt * k2[i];
  std::vector<double> k3 = kuramoto_field(net, tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = net.phases[i] + dt * k3[i];
  std::vector<double> k4 = kuramoto_field(net, tmp);
  KuramotoNetwork out = net;
  for (std::size_t i = 0; i < n; ++i)
    out.phases[i] =
        wrap_phase(net.phases[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
  return out;
}

double order_parameter(const std::vector<double>& phases) {
  if (phases.empty()) throw EmptyInputError("order parameter of an empty phase set");
  std::complex<double> sum{0.0, 0.0};
  for (double phi : phases) sum += std::complex<double>(std::cos(phi), std::sin(phi));
  return std::abs(sum) / static_cast<double>(phases.size());
}

double nested_phase(double phi_matrix, double delta_phi, int n) {
  if (n < 0) throw FormatError("nesting count must be >= 0");
  return wrap_phase(phi_matrix + static_cast<double>(n) * delta_phi);
}

SignalTrace with_noise(const SignalTrace& trace, double snr_db, std::uint64_t seed) {
  double power = 0.0;
  for (double v : trace.samples) power += v * v;
  power /= static_cast<double>(std::max<std::size_t>(trace.samples.size(), 1));
  const double noise_sd = std::sqrt(power / std::pow(10.0, snr_db / 10.0));
  Rng rng(seed, 0x6e6f697365ULL);
  SignalTrace out = trace;
  for (double& v : out.samples) v += noise_sd * rng.gaussian();
  return out;
}

void write_trace_csv(const std::string& path, const SignalTrace& trace) {
  csv::Table table;
  table.header = {"t", "value"};
  table.rows.reserve(trace.samples.size());
  for (std::size_t i = 0; i < trace.samples.size(); ++i)
    table.rows.push_back({trace.time_at(i), trace.samples[i]});
  csv::write_table(path, table);
}

SignalTrace read_trace_csv(const std::string& path) {
  csv::Table table = csv::read_table(path);
  if (table.header.size() != 2 || table.header[0] != "t" || table.header[1] != "value")
    throw FormatError(path + ": expected header t,value");
  if (table.rows.size() < 2) throw FormatError(path + ": trace needs at least 2 samples");
  const double dt = table.rows[1][0] - table.rows[0][0];
  if (dt <= 0.0) throw FormatError(path + ": time column must increase");
  SignalTrace trace{1.0 / dt, 0.0, {}};
  trace.samples.reserve(table.rows.size());
  for (const auto& row : table.rows) trace.samples.push_back(row[1]);
  return trace;
}

void write_sweep_csv(const std::string& path, const std::vector<SignalTrace>& traces) {
  csv::Table table;
  table.header = {"t", "x", "value"};
  for (const auto& trace : traces)
    for (std::size_t i = 0; i < trace.samples.size(); ++i)
      table.rows.push_back({trace.time_at(i), trace.position, trace.samples[i]});
  csv::write_table(path, table);
}

}  // namespace treewave::signal
