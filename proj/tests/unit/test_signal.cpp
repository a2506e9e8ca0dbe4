#include <doctest.h>

#include <cmath>

#include "treewave/errors.hpp"
#include "treewave/phase.hpp"
#include "treewave/rng.hpp"
#include "treewave/signal.hpp"

using namespace treewave;
using namespace treewave::signal;

TEST_SUITE("signal") {

TEST_CASE("eval_wave hits the formula") {
  TravelingWave w(1.0, 2.0, 0.0, 0.0);
  CHECK(eval_wave(w, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(eval_wave(w, 1.0 / (4.0 * w.frequency), 0.0)) < 1e-12);

  TravelingWave w2(2.0, 2.0, 1.0, 0.3);
  const double expect = 2.0 * std::cos(0.4 * std::numbers::pi - 0.5 + 0.3);
  CHECK(eval_wave(w2, 0.1, 0.5) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("wave_phase wraps and is periodic") {
  TravelingWave w(1.0, 3.0, 2.0, 0.0);
  CHECK(wave_phase(w, 0.0, 0.0) == 0.0);
  for (double t : {0.05, 0.4, 1.9})
    CHECK(circular_distance(wave_phase(w, t + 1.0 / w.frequency, 0.7), wave_phase(w, t, 0.7)) <
          1e-9);
}

TEST_CASE("wave_phase decreases linearly in x") {
  TravelingWave w(1.0, 3.0, 2.0, 1.1);
  const double dx = 0.25;
  for (double x : {0.0, 0.5, 2.0}) {
    const double got = wave_phase(w, 0.3, x + dx);
    const double want = wrap_phase(wave_phase(w, 0.3, x) - w.wavenumber * dx);
    CHECK(circular_distance(got, want) < 1e-12);
  }
}

TEST_CASE("pac_amplitude extremes and mean") {
  HighFreqComponent c(2.0, 0.75, 60.0, 0.0);
  PacConfig pac(1.2);
  CHECK(pac_amplitude(c, pac.preferred_phase, pac) == doctest::Approx(2.75).epsilon(1e-14));
  CHECK(pac_amplitude(c, pac.preferred_phase + std::numbers::pi, pac) ==
        doctest::Approx(1.25).epsilon(1e-14));
  // uniform-phase mean is the base amplitude (cosine integrates to zero)
  const int n = 4096;
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += pac_amplitude(c, kTwoPi * i / n, pac);
  mean /= n;
  CHECK(mean == doctest::Approx(c.base_amplitude).epsilon(1e-9));
}

TEST_CASE("pac_amplitude is 2pi-periodic with its maximum at the preferred phase") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const double base = 0.5 + rng.uniform();
    HighFreqComponent c(base, base * rng.uniform(), 40.0, 0.0);
    PacConfig pac(kTwoPi * rng.uniform());
    const double peak = pac_amplitude(c, pac.preferred_phase, pac);
    for (int k = 0; k < 64; ++k) {
      const double phi = kTwoPi * k / 64.0;
      CHECK(pac_amplitude(c, phi, pac) <= peak + 1e-12);
      CHECK(pac_amplitude(c, phi + kTwoPi, pac) ==
            doctest::Approx(pac_amplitude(c, phi, pac)).epsilon(1e-12));
    }
  }
}

TEST_CASE("component invariants are enforced") {
  CHECK_THROWS(HighFreqComponent(1.0, 1.5, 60.0, 0.0));
  CHECK_THROWS(HighFreqComponent(-1.0, 0.0, 60.0, 0.0));
  CHECK_THROWS(TravelingWave(1.0, 0.0, 0.0, 0.0));
}

TEST_CASE("synth_modulated with zero depth equals the plain sum") {
  std::vector<HighFreqComponent> bank{{1.0, 0.0, 50.0, 0.2}, {0.5, 0.0, 80.0, 1.0}};
  TravelingWave w(1.0, 2.0, 0.5, 0.0);
  auto mod = synth_modulated(bank, w, PacConfig(0.7), 1000.0, 0.5, 0.3);
  auto plain = synth_unmodulated(bank, 1000.0, 0.5, 0.3);
  REQUIRE(mod.samples.size() == plain.samples.size());
  for (std::size_t i = 0; i < mod.samples.size(); ++i)
    CHECK(mod.samples[i] == doctest::Approx(plain.samples[i]).epsilon(1e-15));
}

TEST_CASE("synth_modulated of an empty bank is all zero") {
  auto trace = synth_modulated({}, TravelingWave(1, 2, 0, 0), PacConfig(0), 500.0, 0.1, 0.0);
  for (double v : trace.samples) CHECK(v == 0.0);
}

TEST_CASE("synth_modulated matches a pointwise oracle") {
  HighFreqComponent c(1.3, 0.6, 47.0, 0.4);
  TravelingWave w(1.0, 2.5, 1.7, 0.9);
  PacConfig pac(2.2);
  const double fs = 400.0, x = 0.6;
  auto trace = synth_modulated({c}, w, pac, fs, 0.8, x);
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const double t = static_cast<double>(i) / fs;
    const double phi = wrap_phase(kTwoPi * w.frequency * t - w.wavenumber * x + w.phase_offset);
    const double amp = c.base_amplitude + c.modulation_depth * std::cos(phi - pac.preferred_phase);
    const double want = amp * std::cos(kTwoPi * c.frequency * t + c.phase);
    CHECK(trace.samples[i] == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("synth output is bounded by the bank's peak amplitude") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<HighFreqComponent> bank;
    double bound = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double base = 0.2 + rng.uniform();
      bank.emplace_back(base, base * rng.uniform(), 30.0 + 15.0 * i, kTwoPi * rng.uniform());
      bound += bank.back().base_amplitude + bank.back().modulation_depth;
    }
    auto trace = synth_modulated(bank, TravelingWave(1, 2, 0.3, 0.1),
                                 PacConfig(kTwoPi * rng.uniform()), 500.0, 0.4, 0.0);
    for (double v : trace.samples) CHECK(std::fabs(v) <= bound + 1e-12);
  }
}

TEST_CASE("synth_modulated enforces Nyquist") {
  CHECK_THROWS_AS(
      synth_modulated({HighFreqComponent(1, 0, 60, 0)}, TravelingWave(1, 2, 0, 0), PacConfig(0),
                      100.0, 1.0, 0.0),
      NyquistError);
  CHECK_THROWS_AS(
      synth_modulated({HighFreqComponent(1, 0, 10, 0)}, TravelingWave(1, 2, 0, 0), PacConfig(0),
                      100.0, 0.01, 0.0),
      NyquistError);
}

TEST_CASE("eval_phase_code basics") {
  PhaseCode pc(2.0, 6.0, {{"N", 0.0}, {"V", std::numbers::pi}});
  CHECK(eval_phase_code(pc, "N", 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(eval_phase_code(pc, "V", 0.0) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK_THROWS_AS(eval_phase_code(pc, "D", 0.0), UnknownCategoryError);
}

TEST_CASE("phase offsets act as time shifts") {
  const double delta = 0.8;
  PhaseCode pc(1.0, 6.0, {{"N", 0.3}, {"V", 0.3 + delta}});
  const double shift = delta / (kTwoPi * pc.frequency);
  for (double t : {0.0, 0.05, 0.21, 0.4})
    CHECK(eval_phase_code(pc, "V", t) ==
          doctest::Approx(eval_phase_code(pc, "N", t + shift)).epsilon(1e-12));
}

TEST_CASE("phase code separation is enforced") {
  // two categories at distance below 2pi/(4*2)
  CHECK_THROWS(PhaseCode(1.0, 6.0, {{"N", 0.0}, {"V", 0.3}}));
  CHECK_NOTHROW(evenly_spaced_phase_code(1.0, 6.0, {"N", "V", "A", "P", "D", "C", "T"}));
}

TEST_CASE("kuramoto uncoupled oscillators drift linearly") {
  KuramotoNetwork net({1.3, -0.7, 2.1}, uniform_coupling(3, 0.0), {0.1, 2.0, 4.4});
  const double dt = 1e-3;
  KuramotoNetwork state = net;
  for (int s = 0; s < 1000; ++s) state = kuramoto_step(state, dt);
  for (std::size_t i = 0; i < 3; ++i) {
    const double want = wrap_phase(net.phases[i] + net.natural_frequencies[i] * 1.0);
    CHECK(circular_distance(state.phases[i], want) < 1e-9);
  }
}

TEST_CASE("two coupled oscillators phase-lock") {
  // reference: dD/dt = -2K sin(D) at high accuracy
  double ref = 1.0;
  const double k = 1.0, dt_ref = 1e-5;
  auto f = [&](double d) { return -2.0 * k * std::sin(d); };
  for (int s = 0; s < 500000; ++s) {
    const double k1 = f(ref);
    const double k2 = f(ref + 0.5 * dt_ref * k1);
    const double k3 = f(ref + 0.5 * dt_ref * k2);
    const double k4 = f(ref + dt_ref * k3);
    ref += dt_ref / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }

  KuramotoNetwork net({2.0, 2.0}, uniform_coupling(2, k), {1.0, 0.0});
  const double dt = 1e-3;
  KuramotoNetwork state = net;
  for (int s = 0; s < 5000; ++s) state = kuramoto_step(state, dt);
  const double diff = circular_distance(state.phases[0], state.phases[1]);
  CHECK(diff < 0.01);
  CHECK(std::fabs(diff - std::fabs(ref)) < 1e-6);
}

TEST_CASE("identical phases stay identical under equal frequencies") {
  KuramotoNetwork net({1.5, 1.5, 1.5}, uniform_coupling(3, 0.8), {0.9, 0.9, 0.9});
  KuramotoNetwork state = net;
  for (int s = 0; s < 200; ++s) {
    state = kuramoto_step(state, 1e-3);
    CHECK(state.phases[0] == state.phases[1]);
    CHECK(state.phases[1] == state.phases[2]);
  }
}

TEST_CASE("phase difference contracts for symmetric positive coupling") {
  KuramotoNetwork state({1.0, 1.0}, uniform_coupling(2, 0.5), {2.5, 0.0});
  double prev = circular_distance(state.phases[0], state.phases[1]);
  for (int s = 0; s < 3000; ++s) {
    state = kuramoto_step(state, 1e-3);
    const double cur = circular_distance(state.phases[0], state.phases[1]);
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("kuramoto_step enforces the stability guard") {
  KuramotoNetwork net({200.0}, uniform_coupling(1, 0.0), {0.0});
  CHECK_THROWS_AS(kuramoto_step(net, 1e-3), StepSizeError);
  CHECK_THROWS_AS(kuramoto_step(net, 0.0), StepSizeError);
}

TEST_CASE("order parameter") {
  CHECK(order_parameter({1.1, 1.1, 1.1}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(order_parameter({0.0, std::numbers::pi / 2, std::numbers::pi,
                         3 * std::numbers::pi / 2}) < 1e-12);
  CHECK(order_parameter({0.0, std::numbers::pi, 0.0}) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(order_parameter({}), EmptyInputError);
}

TEST_CASE("order parameter is invariant under global rotation") {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> phases(6), shifted(6);
    const double shift = kTwoPi * rng.uniform();
    for (std::size_t i = 0; i < phases.size(); ++i) {
      phases[i] = kTwoPi * rng.uniform();
      shifted[i] = wrap_phase(phases[i] + shift);
    }
    CHECK(order_parameter(shifted) == doctest::Approx(order_parameter(phases)).epsilon(1e-9));
  }
}

TEST_CASE("nested_phase accumulates and wraps") {
  CHECK(nested_phase(1.3, 0.4, 0) == doctest::Approx(1.3).epsilon(1e-14));
  CHECK(circular_distance(nested_phase(1.3, std::numbers::pi / 2, 4), 1.3) < 1e-12);
  const double want = std::fmod(0.3 + 7.0, kTwoPi);
  CHECK(nested_phase(0.3, 1.0, 7) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("nested_phase is additive in the nesting count") {
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const double phi = kTwoPi * rng.uniform();
    const double d = 2.0 * rng.uniform();
    const int a = int(rng.next_u64() % 9), b = int(rng.next_u64() % 9);
    CHECK(circular_distance(nested_phase(phi, d, a + b),
                            nested_phase(nested_phase(phi, d, a), d, b)) < 1e-12);
  }
}

TEST_CASE("with_noise is deterministic and hits the requested SNR") {
  auto trace = synth_unmodulated({HighFreqComponent(1, 0, 30, 0)}, 500.0, 2.0, 0.0);
  auto a = with_noise(trace, 20.0, 99);
  auto b = with_noise(trace, 20.0, 99);
  CHECK(a.samples == b.samples);
  double signal = 0.0, noise = 0.0;
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    signal += trace.samples[i] * trace.samples[i];
    const double d = a.samples[i] - trace.samples[i];
    noise += d * d;
  }
  const double snr_db = 10.0 * std::log10(signal / noise);
  CHECK(snr_db == doctest::Approx(20.0).epsilon(0.05));
}

}  // TEST_SUITE
