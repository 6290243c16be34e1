// Copyright 2026 The fockwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockwitness/json_io.hpp"

#include <stdexcept>

namespace fockwitness {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "fockwitness-state/1";

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex values must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json amplitudes_to_json(const Eigen::VectorXcd& amp) {
  json out = json::array();
  for (Eigen::Index i = 0; i < amp.size(); ++i) {
    out.push_back(complex_to_json(amp(i)));
  }
  return out;
}

Eigen::VectorXcd amplitudes_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("amplitudes must be an array");
  }
  Eigen::VectorXcd amp(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    amp(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  }
  return amp;
}

// Doubles annotated with a small exact fraction when one reproduces them.
void emit_with_exact(json& out, const std::string& key, double value) {
  out[key] = value;
  if (auto r = approximate_rational(value)) {
    out[key + "_exact"] = to_string(*r);
  } else {
    out[key + "_exact"] = nullptr;
  }
}

}  // namespace

json basis_descriptor(const FockBasis& basis) {
  return json{{"modes", basis.modes()},
              {"photons", basis.photons()},
              {"size", basis.size()},
              {"ordering", "descending-lex"}};
}

json state_to_json(const PureState& state) {
  json out;
  out["format"] = kFormatTag;
  if (state.is_joint()) {
    out["type"] = "joint";
    out["modes"] = state.basis_a().modes();
    out["basis_a"] = basis_descriptor(state.basis_a());
    out["basis_b"] = basis_descriptor(state.basis_b());
  } else {
    out["type"] = "local";
    out["modes"] = state.basis_a().modes();
    out["basis"] = basis_descriptor(state.basis_a());
  }
  out["amplitudes"] = amplitudes_to_json(state.amplitudes());
  return out;
}

json state_to_json(const StratifiedState& state) {
  json strata = json::array();
  for (const auto& s : state.strata()) {
    if (s.terms.empty()) {
      continue;
    }
    const int modes = state.modes();
    json terms = json::array();
    for (const auto& t : s.terms) {
      terms.push_back(
          json{{"a", pattern_unrank(modes, s.photons_a, t.index_a).str()},
               {"b", pattern_unrank(modes, modes - s.photons_a, t.index_b).str()},
               {"amp", complex_to_json(t.amplitude)}});
    }
    strata.push_back(json{{"photons_a", s.photons_a},
                          {"photons_b", state.modes() - s.photons_a},
                          {"terms", std::move(terms)}});
  }
  return json{{"format", kFormatTag},
              {"type", "stratified"},
              {"modes", state.modes()},
              {"strata", std::move(strata)}};
}

std::variant<PureState, StratifiedState> state_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != kFormatTag) {
    throw std::invalid_argument("not a fockwitness state file");
  }
  const std::string type = j.at("type").get<std::string>();
  const int modes = j.at("modes").get<int>();
  if (type == "joint") {
    FockBasis ba(modes, j.at("basis_a").at("photons").get<int>());
    FockBasis bb(modes, j.at("basis_b").at("photons").get<int>());
    return PureState::joint(std::move(ba), std::move(bb),
                            amplitudes_from_json(j.at("amplitudes")));
  }
  if (type == "local") {
    FockBasis basis(modes, j.at("basis").at("photons").get<int>());
    return PureState::local(std::move(basis), amplitudes_from_json(j.at("amplitudes")));
  }
  if (type == "stratified") {
    std::vector<StratifiedState::Stratum> strata;
    for (const auto& sj : j.at("strata")) {
      StratifiedState::Stratum s;
      s.photons_a = sj.at("photons_a").get<int>();
      for (const auto& tj : sj.at("terms")) {
        const auto pa = PhotonPattern::parse(tj.at("a").get<std::string>());
        const auto pb = PhotonPattern::parse(tj.at("b").get<std::string>());
        if (pa.modes() != modes || pb.modes() != modes || pa.photons() != s.photons_a ||
            pb.photons() != modes - s.photons_a) {
          throw std::invalid_argument("stratum term pattern does not match its basis");
        }
        s.terms.push_back({pattern_rank(pa), pattern_rank(pb), complex_from_json(tj.at("amp"))});
      }
      strata.push_back(std::move(s));
    }
    return StratifiedState(modes, std::move(strata));
  }
  throw std::invalid_argument("unknown state type '" + type + "'");
}

json report_to_json(const WitnessReport& report) {
  json out;
  out["modes"] = report.modes;
  out["photons_a"] = report.photons_a;
  out["photons_b"] = report.photons_b;
  emit_with_exact(out, "fidelity_input", report.fidelity_input);
  emit_with_exact(out, "fidelity_dft", report.fidelity_dft);
  emit_with_exact(out, "pattern_defect", report.pattern_defect);
  emit_with_exact(out, "basic_bound", report.basic_bound);
  emit_with_exact(out, "optimized_lhs", report.optimized_lhs);
  emit_with_exact(out, "witness_value", report.witness_value);
  out["entangled_by_basic"] = report.entangled_by_basic;
  out["entangled_by_optimized"] = report.entangled_by_optimized;
  return out;
}

json mode_unitary_to_json(const ModeUnitary& u) {
  json entries = json::array();
  for (Eigen::Index k = 0; k < u.transfer().rows(); ++k) {
    for (Eigen::Index m = 0; m < u.transfer().cols(); ++m) {
      entries.push_back(complex_to_json(u.transfer()(k, m)));
    }
  }
  return json{{"modes", u.modes()}, {"layout", "row-major"}, {"matrix", std::move(entries)}};
}

}  // namespace fockwitness
