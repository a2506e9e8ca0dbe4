#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace treewave::spiking {

// Population of N phase-modulated Poisson units. weights[i] is the
// semantic weight of feature i; alpha in [0,1] keeps the modulation factor
// 1 + alpha*cos(...) nonnegative.
struct SpikingPopulation {
  std::vector<double> weights;   // each in [0,1], N >= 1
  double alpha = 0.0;            // coupling strength, [0,1]
  double preferred_phase = 0.0;  // rad
  double noise_sd = 0.0;         // Hz, >= 0

  SpikingPopulation() = default;
  SpikingPopulation(std::vector<double> weights, double alpha, double preferred_phase,
                    double noise_sd = 0.0);

  std::size_t size() const { return weights.size(); }
};

struct SpikeTrain {
  std::vector<double> events;  // strictly increasing, in [0, duration)
  double duration = 0.0;       // seconds

  SpikeTrain() = default;
  SpikeTrain(std::vector<double> events, double duration);
};

struct PopulationTrace {
  double sample_rate = 0.0;
  std::vector<std::vector<double>> rates;  // neuron x time, Hz
  std::vector<double> aggregate;           // per-time sum over neurons
};

// lambda_i = base_scale * weight_i * (1 + alpha * cos(phi_C - preferred)).
// Throws IndexError when i is out of range.
double modulated_rate(const SpikingPopulation& pop, std::size_t i, double phi_c,
                      double base_scale);

// Per-bin Bernoulli realization of an inhomogeneous Poisson process with
// intensity rate_fn, deterministic per seed. Optional Gaussian rate jitter
// (clamped at zero) before thinning. Throws ThinnessError when any bin has
// rate * dt >= 0.1.
SpikeTrain sample_spikes(const std::function<double(double)>& rate_fn, double duration, double dt,
                         std::uint64_t seed, double noise_sd = 0.0);

// Per-neuron modulated rate rows for the given category-phase series plus
// their exact per-time sum.
PopulationTrace population_rate(const SpikingPopulation& pop,
                                const std::vector<double>& phi_c_series, double base_scale,
                                double sample_rate = 1.0);

// One train per neuron. phi_c_series is sampled at phi_sample_rate; the
// thinning grid (dt) may be finer, with the series held sample-wise
// constant. Neuron i draws from stream i of the seed.
std::vector<SpikeTrain> sample_population(const SpikingPopulation& pop,
                                          const std::vector<double>& phi_c_series,
                                          double phi_sample_rate, double base_scale, double dt,
                                          std::uint64_t seed);

// Sliding-window rate recovery: count / window, windows of the given
// length tiled at half-window stride (a single full-span window when the
// train is shorter than `window`).
std::vector<double> estimate_rate(const SpikeTrain& train, double window);

// CSV export "neuron_id,time" (one row per spike).
void write_spikes_csv(const std::string& path, const std::vector<SpikeTrain>& trains);
std::vector<SpikeTrain> read_spikes_csv(const std::string& path, std::size_t n_neurons,
                                        double duration);

// CSV export "t,rate_0..rate_{N-1},aggregate".
void write_population_csv(const std::string& path, const PopulationTrace& trace);

}  // namespace treewave::spiking
