#include "treewave/spiking.hpp"

#include <algorithm>
#include <cmath>

#include "treewave/csvio.hpp"
#include "treewave/errors.hpp"
#include "treewave/rng.hpp"

namespace treewave::spiking {

SpikingPopulation::SpikingPopulation(std::vector<double> weights, double alpha,
                                     double preferred_phase, double noise_sd)
    : weights(std::move(weights)),
      alpha(alpha),
      preferred_phase(preferred_phase),
      noise_sd(noise_sd) {
  if (this->weights.empty()) throw FormatError("population needs at least one neuron");
  for (double w : this->weights)
    if (!(w >= 0.0 && w <= 1.0)) throw FormatError("population weights must lie in [0,1]");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw FormatError("alpha must lie in [0,1]");
  if (noise_sd < 0.0) throw FormatError("noise_sd must be >= 0");
}

SpikeTrain::SpikeTrain(std::vector<double> events, double duration)
    : events(std::move(events)), duration(duration) {
  if (duration < 0.0) throw FormatError("spike train duration must be >= 0");
  double prev = -1.0;
  for (double t : this->events) {
    if (t <= prev) throw FormatError("spike times must be strictly increasing");
    if (t < 0.0 || t >= duration) throw FormatError("spike time outside [0, duration)");
    prev = t;
  }
}

double modulated_rate(const SpikingPopulation& pop, std::size_t i, double phi_c,
                      double base_scale) {
  if (i >= pop.weights.size()) throw IndexError("neuron index out of range");
  return base_scale * pop.weights[i] * (1.0 + pop.alpha * std::cos(phi_c - pop.preferred_phase));
}

SpikeTrain sample_spikes(const std::function<double(double)>& rate_fn, double duration, double dt,
                         std::uint64_t seed, double noise_sd) {
  if (dt <= 0.0) throw ThinnessError("dt must be > 0");
  if (duration < 0.0) throw FormatError("duration must be >= 0");
  Rng rng(seed);
  std::vector<double> events;
  const auto n_bins = static_cast<std::size_t>(std::floor(duration / dt));
  for (std::size_t b = 0; b < n_bins; ++b) {
    const double t = (static_cast<double>(b) + 0.5) * dt;
    double rate = rate_fn(t);
    if (rate * dt >= 0.1)
      throw ThinnessError("rate * dt = " + csv::format_double(rate * dt) +
                          " violates the thinness bound (< 0.1)");
    if (noise_sd > 0.0) rate = std::max(0.0, rate + noise_sd * rng.gaussian());
    if (rate <= 0.0) continue;
    if (rng.uniform() < rate * dt) events.push_back(static_cast<double>(b) * dt);
  }
  return SpikeTrain(std::move(events), duration);
}

PopulationTrace population_rate(const SpikingPopulation& pop,
                                const std::vector<double>& phi_c_series, double base_scale,
                                double sample_rate) {
  if (phi_c_series.empty()) throw EmptyInputError("phase series must be non-empty");
  PopulationTrace trace;
  trace.sample_rate = sample_rate;
  trace.rates.assign(pop.size(), std::vector<double>(phi_c_series.size(), 0.0));
  trace.aggregate.assign(phi_c_series.size(), 0.0);
  for (std::size_t i = 0; i < pop.size(); ++i)
    for (std::size_t t = 0; t < phi_c_series.size(); ++t) {
      const double r = modulated_rate(pop, i, phi_c_series[t], base_scale);
      trace.rates[i][t] = r;
      trace.aggregate[t] += r;
    }
  return trace;
}

std::vector<SpikeTrain> sample_population(const SpikingPopulation& pop,
                                          const std::vector<double>& phi_c_series,
                                          double phi_sample_rate, double base_scale, double dt,
                                          std::uint64_t seed) {
  if (phi_c_series.empty()) throw EmptyInputError("phase series must be non-empty");
  if (phi_sample_rate <= 0.0) throw FormatError("phase sample rate must be > 0");
  const double duration = static_cast<double>(phi_c_series.size()) / phi_sample_rate;
  std::vector<SpikeTrain> trains;
  trains.reserve(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    auto rate_fn = [&, i](double t) {
      auto idx = static_cast<std::size_t>(t * phi_sample_rate);
      idx = std::min(idx, phi_c_series.size() - 1);
      return modulated_rate(pop, i, phi_c_series[idx], base_scale);
    };
    Rng stream_seed(seed, i + 1);
    trains.push_back(sample_spikes(rate_fn, duration, dt, stream_seed.next_u64(), pop.noise_sd));
  }
  return trains;
}

std::vector<double> estimate_rate(const SpikeTrain& train, double window) {
  if (window <= 0.0) throw FormatError("window must be > 0");
  auto count_in = [&](double lo, double hi) {
    auto first = std::lower_bound(train.events.begin(), train.events.end(), lo);
    auto last = std::lower_bound(train.events.begin(), train.events.end(), hi);
    return static_cast<double>(last - first);
  };
  if (train.duration <= window) {
    if (train.duration <= 0.0) return {};
    return {count_in(0.0, train.duration) / train.duration};
  }
  std::vector<double> estimates;
  const double stride = window / 2.0;
  for (double lo = 0.0; lo + window <= train.duration + 1e-12; lo += stride)
    estimates.push_back(count_in(lo, lo + window) / window);
  return estimates;
}

void write_spikes_csv(const std::string& path, const std::vector<SpikeTrain>& trains) {
  csv::Table table;
  table.header = {"neuron_id", "time"};
  for (std::size_t i = 0; i < trains.size(); ++i)
    for (double t : trains[i].events) table.rows.push_back({static_cast<double>(i), t});
  csv::write_table(path, table);
}

std::vector<SpikeTrain> read_spikes_csv(const std::string& path, std::size_t n_neurons,
                                        double duration) {
  csv::Table table = csv::read_table(path);
  if (table.header.size() != 2 || table.header[0] != "neuron_id" || table.header[1] != "time")
    throw FormatError(path + ": expected header neuron_id,time");
  std::vector<std::vector<double>> events(n_neurons);
  for (const auto& row : table.rows) {
    const auto id = static_cast<std::size_t>(row[0]);
    if (id >= n_neurons) throw FormatError(path + ": neuron id out of range");
    events[id].push_back(row[1]);
  }
  std::vector<SpikeTrain> trains;
  trains.reserve(n_neurons);
  for (auto& ev : events) {
    std::sort(ev.begin(), ev.end());
    trains.emplace_back(std::move(ev), duration);
  }
  return trains;
}

void write_population_csv(const std::string& path, const PopulationTrace& trace) {
  csv::Table table;
  table.header.push_back("t");
  for (std::size_t i = 0; i < trace.rates.size(); ++i)
    table.header.push_back("rate_" + std::to_string(i));
  table.header.push_back("aggregate");
  for (std::size_t t = 0; t < trace.aggregate.size(); ++t) {
    std::vector<double> row;
    row.push_back(static_cast<double>(t) / trace.sample_rate);
    for (const auto& rates : trace.rates) row.push_back(rates[t]);
    row.push_back(trace.aggregate[t]);
    table.rows.push_back(std::move(row));
  }
  csv::write_table(path, table);
}

}  // namespace treewave::spiking
