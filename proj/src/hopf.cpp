#include "treewave/hopf.hpp"

#include "treewave/errors.hpp"
#include "treewave/phase.hpp"

namespace treewave::hopf {

using nlohmann::json;

HopfElement::HopfElement(double amplitude, double phase)
    : amplitude_(amplitude), phase_(wrap_phase(phase)) {
  if (amplitude < 0.0) throw FormatError("hopf amplitude must be >= 0");
}

json HopfElement::to_json() const {
  json j{{"amplitude", amplitude_}, {"phase", phase_}};
  if (bands_) {
    j["bands"] = json::array({json{{"amplitude", bands_->first.amplitude},
                                   {"phase", bands_->first.phase}},
                              json{{"amplitude", bands_->second.amplitude},
                                   {"phase", bands_->second.phase}}});
  }
  return j;
}

HopfElement HopfElement::from_json(const json& j) {
  HopfElement e(j.at("amplitude").get<double>(), j.at("phase").get<double>());
  if (j.contains("bands")) {
    const auto& b = j.at("bands");
    if (!b.is_array() || b.size() != 2) throw FormatError("hopf bands must be a pair");
    e.bands_ = {Band{b[0].at("amplitude").get<double>(), b[0].at("phase").get<double>()},
                Band{b[1].at("amplitude").get<double>(), b[1].at("phase").get<double>()}};
  }
  return e;
}

HopfElement hopf_merge(const HopfElement& x, const HopfElement& y) {
  HopfElement merged(x.amplitude_ * y.amplitude_, x.phase_ + y.phase_);
  merged.bands_ = {HopfElement::Band{x.amplitude_, x.phase_},
                   HopfElement::Band{y.amplitude_, y.phase_}};
  return merged;
}

std::pair<HopfElement, HopfElement> comultiply(const HopfElement& x) {
  if (!x.bands_) throw NoDecompositionError("atomic element has no recorded constituents");
  return {HopfElement(x.bands_->first.amplitude, x.bands_->first.phase),
          HopfElement(x.bands_->second.amplitude, x.bands_->second.phase)};
}

HopfElement iterate_merge(const HopfElement& x0, const HopfElement& z, int n) {
  if (n < 0) throw FormatError("iteration count must be >= 0");
  HopfElement x = x0;
  for (int k = 0; k < n; ++k) x = hopf_merge(x, z);
  return x;
}

}  // namespace treewave::hopf
