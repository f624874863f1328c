/*
 * Copyright 2026 the momlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "momlab/density.hpp"
#include "momlab/moments.hpp"
#include "momlab/scalar.hpp"

namespace momlab {

using Json = nlohmann::json;

/// Numeric config entries must be integers or strings ("p/q" fractions or
/// decimal literals, both parsed exactly); JSON floats are rejected so no
/// silent binary rounding sneaks into the exact path.
inline Scalar scalar_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer())
    return Scalar(Rational(static_cast<long>(j.get<long long>())));
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_float())
    throw ConfigError(what + ": give numbers as strings (\"p/q\" or decimal), "
                             "not JSON floats");
  throw ConfigError(what + ": expected a number string");
}

inline ComplexScalar complex_from_json(const Json& j, const std::string& what) {
  if (j.is_array() && j.size() == 2)
    return ComplexScalar(scalar_from_json(j[0], what + "[re]"),
                         scalar_from_json(j[1], what + "[im]"));
  return ComplexScalar(scalar_from_json(j, what));
}

inline MeasureSpec measure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw ConfigError("measure section needs a 'family' field");
  std::string family = j.at("family").get<std::string>();
  if (family == "laguerre") return MeasureSpec::laguerre();
  if (family == "uniform-unit") return MeasureSpec::uniform_unit();
  if (family == "lognormal") {
    if (!j.contains("q")) throw ConfigError("lognormal measure needs 'q'");
    return MeasureSpec::lognormal(scalar_from_json(j.at("q"), "q"));
  }
  if (family == "discrete") {
    if (!j.contains("points") || !j.contains("weights"))
      throw ConfigError("discrete measure needs 'points' and 'weights'");
    std::vector<Scalar> pts, wts;
    for (const auto& p : j.at("points")) pts.push_back(scalar_from_json(p, "point"));
    for (const auto& w : j.at("weights")) wts.push_back(scalar_from_json(w, "weight"));
    return MeasureSpec::discrete(std::move(pts), std::move(wts));
  }
  if (family == "raw-moments") {
    if (!j.contains("moments")) throw ConfigError("raw-moments measure needs 'moments'");
    std::vector<Scalar> ms;
    for (const auto& m : j.at("moments")) ms.push_back(scalar_from_json(m, "moment"));
    return MeasureSpec::raw(MomentSequence::from(std::move(ms)));
  }
  throw ConfigError("unknown measure family '" + family + "'");
}

inline TargetFunction target_from_json(const Json& j) {
  if (j.is_object() && j.contains("poly")) {
    std::vector<Scalar> c;
    for (const auto& v : j.at("poly")) c.push_back(scalar_from_json(v, "poly coeff"));
    return TargetFunction::poly(Poly(std::move(c)));
  }
  if (j.is_object() && j.contains("atom-values")) {
    std::vector<Scalar> v;
    for (const auto& x : j.at("atom-values"))
      v.push_back(scalar_from_json(x, "atom value"));
    return TargetFunction::atom_values(std::move(v));
  }
  throw ConfigError("target needs 'poly' or 'atom-values'");
}

inline IdealSpec ideal_from_json(const Json& j) {
  if (j.is_object() && j.contains("monomial"))
    return IdealSpec::monomial(j.at("monomial").get<unsigned>());
  if (j.is_object() && j.contains("roots")) {
    std::vector<std::pair<ComplexScalar, unsigned>> roots;
    for (const auto& r : j.at("roots")) {
      if (!r.is_array() || r.size() != 2)
        throw ConfigError("each root entry must be [z, multiplicity_order]");
      roots.emplace_back(complex_from_json(r[0], "root"), r[1].get<unsigned>());
    }
    return IdealSpec::root_system(std::move(roots));
  }
  throw ConfigError("ideal needs 'monomial' or 'roots'");
}

/// Everything a command run needs: the measure, numeric policy, output
/// target, and command-specific parameters (kept as structured JSON and
/// validated by each command).
struct ExperimentConfig {
  unsigned precision = kDefaultPrecision;
  bool exact = false;      // request the exact-arithmetic path
  std::string format = "csv";
  std::string out;         // empty = stdout
  std::optional<MeasureSpec> measure;
  Json params = Json::object();

  void validate() const {
    if (precision < 64) throw ConfigError("precision must be at least 64 bits");
    if (format != "csv" && format != "json")
      throw ConfigError("format must be csv or json");
  }

  const MeasureSpec& require_measure() const {
    if (!measure) throw ConfigError("this command needs a measure section");
    return *measure;
  }

  long param_int(const std::string& key, long fallback) const {
    if (!params.contains(key)) return fallback;
    const Json& v = params.at(key);
    if (!v.is_number_integer()) throw ConfigError("parameter '" + key + "' must be an integer");
    return v.get<long>();
  }
  long require_param_int(const std::string& key) const {
    if (!params.contains(key)) throw ConfigError("missing parameter '" + key + "'");
    return param_int(key, 0);
  }
};

inline ExperimentConfig load_config_json(const Json& root) {
  ExperimentConfig cfg;
  if (root.contains("precision")) cfg.precision = root.at("precision").get<unsigned>();
  if (root.contains("exact")) cfg.exact = root.at("exact").get<bool>();
  if (root.contains("format")) cfg.format = root.at("format").get<std::string>();
  if (root.contains("out")) cfg.out = root.at("out").get<std::string>();
  if (root.contains("measure")) cfg.measure = measure_from_json(root.at("measure"));
  if (root.contains("params")) {
    if (!root.at("params").is_object()) throw ConfigError("params must be an object");
    cfg.params = root.at("params");
  }
  cfg.validate();
  return cfg;
}

inline ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Json root;
  try {
    root = Json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }
  return load_config_json(root);
}

}  // namespace momlab
