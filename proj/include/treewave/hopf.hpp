#pragma once

#include <optional>
#include <utility>

#include <json.hpp>

namespace treewave::hopf {

// Oscillatory state A * e^{i phi}. Merged elements record the constituent
// (amplitude, phase) pair so comultiplication can undo the product.
class HopfElement {
 public:
  HopfElement(double amplitude, double phase);

  double amplitude() const { return amplitude_; }
  double phase() const { return phase_; }
  bool has_bands() const { return bands_.has_value(); }

  nlohmann::json to_json() const;
  static HopfElement from_json(const nlohmann::json& j);

  friend HopfElement hopf_merge(const HopfElement& x, const HopfElement& y);
  friend std::pair<HopfElement, HopfElement> comultiply(const HopfElement& x);

 private:
  struct Band {
    double amplitude, phase;
  };

  double amplitude_;
  double phase_;
  std::optional<std::pair<Band, Band>> bands_;
};

// M(x,y): amplitudes multiply, phases add (wrapped); the operands'
// (amplitude, phase) summaries are recorded as bands.
HopfElement hopf_merge(const HopfElement& x, const HopfElement& y);

// Recovers the recorded constituent pair; merging them reproduces x.
// Throws NoDecompositionError for atomic elements.
std::pair<HopfElement, HopfElement> comultiply(const HopfElement& x);

// x_{k+1} = M(x_k, z), applied n times (literally, so it agrees exactly
// with n explicit merges).
HopfElement iterate_merge(const HopfElement& x0, const HopfElement& z, int n);

}  // namespace treewave::hopf
