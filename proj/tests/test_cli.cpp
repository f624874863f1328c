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
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "momlab/config.hpp"
#include "momlab/records.hpp"

using namespace momlab;

TEST_CASE("config JSON parses measures with exact fraction strings") {
  Json root = Json::parse(R"({
    "precision": 128,
    "exact": true,
    "format": "json",
    "measure": {"family": "lognormal", "q": "1/2"},
    "params": {"n_max": 12, "k_max": 4}
  })");
  ExperimentConfig cfg = load_config_json(root);
  CHECK(cfg.precision == 128);
  CHECK(cfg.exact);
  CHECK(cfg.format == "json");
  REQUIRE(cfg.measure.has_value());
  const Lognormal* ln = cfg.measure->as_lognormal();
  REQUIRE(ln != nullptr);
  CHECK(ln->q == Scalar(Rational(1, 2)));
  CHECK(cfg.param_int("n_max", 0) == 12);
  CHECK(cfg.param_int("missing", 7) == 7);
  CHECK_THROWS_AS(cfg.require_param_int("missing"), ConfigError);
}

TEST_CASE("config rejects JSON floats to protect the exact path") {
  Json root = Json::parse(R"({"measure": {"family": "lognormal", "q": 0.5}})");
  CHECK_THROWS_AS(load_config_json(root), ConfigError);
}

TEST_CASE("config validation errors") {
  CHECK_THROWS_AS(load_config_json(Json::parse(R"({"precision": 32})")), ConfigError);
  CHECK_THROWS_AS(load_config_json(Json::parse(R"({"format": "xml"})")), ConfigError);
  CHECK_THROWS_AS(
      load_config_json(Json::parse(R"({"measure": {"family": "lognormal", "q": "2"}})")),
      ConfigError);
  CHECK_THROWS_AS(load_config_json(Json::parse(R"({"measure": {"family": "nope"}})")),
                  ConfigError);
  CHECK_THROWS_AS(
      load_config_json(Json::parse(R"({"measure": {"family": "discrete",
        "points": ["1"], "weights": ["0"]}})")),
      ConfigError);
}

TEST_CASE("discrete and raw measures from config") {
  Json root = Json::parse(R"({
    "measure": {"family": "discrete", "points": ["1/4", "3"], "weights": ["1/2", "1/2"]}
  })");
  ExperimentConfig cfg = load_config_json(root);
  const DiscreteAtoms* d = cfg.measure->as_discrete();
  REQUIRE(d != nullptr);
  CHECK(d->points[0] == Scalar(Rational(1, 4)));

  Json raw = Json::parse(R"({
    "measure": {"family": "raw-moments", "moments": ["1", "1/2", "1/3"]}
  })");
  ExperimentConfig rcfg = load_config_json(raw);
  CHECK(rcfg.measure->moments(2).at(2) == Scalar(Rational(1, 3)));
}

TEST_CASE("targets and ideals from config") {
  TargetFunction f = target_from_json(Json::parse(R"({"poly": ["1", "-2", "1/3"]})"));
  REQUIRE(f.as_poly() != nullptr);
  CHECK(f.as_poly()->f.coeff(2) == Scalar(Rational(1, 3)));

  IdealSpec mono = ideal_from_json(Json::parse(R"({"monomial": 2})"));
  REQUIRE(mono.as_monomial() != nullptr);
  CHECK(mono.as_monomial()->n == 2);

  IdealSpec roots = ideal_from_json(Json::parse(R"({"roots": [[["0", "1"], 0]]})"));
  REQUIRE(roots.as_root_system() != nullptr);
  CHECK(roots.as_root_system()->degree() == 1);

  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"roots": [["1"]]})")), ConfigError);
  CHECK_THROWS_AS(target_from_json(Json::parse(R"({"nope": 1})")), ConfigError);
}

TEST_CASE("complex scalars parse from [re, im] arrays") {
  ComplexScalar z = complex_from_json(Json::parse(R"(["1/2", "-3"])"), "z");
  CHECK(z.re == Scalar(Rational(1, 2)));
  CHECK(z.im == Scalar(-3));
  ComplexScalar real = complex_from_json(Json::parse(R"("7/4")"), "z");
  CHECK(real.im.is_zero());
}

TEST_CASE("records carry decimals plus exact fractions") {
  ResultRecord r = make_record("density", "measure=laguerre;N=3", "residual_sq",
                               Scalar(Rational(1, 4)), 256, "duality: pass");
  CHECK(r.experiment_id == "density[measure=laguerre;N=3]");
  CHECK(r.is_exact);
  CHECK(r.exact_value == "1/4");
  CHECK(r.value.find("2.5") != std::string::npos);
  // ceil(256 * log10 2) + 1 = 79 digits requested; mantissa formatting keeps
  // at least that many significant figures
  CHECK(decimal_digits_for_bits(256) == 79);

  ResultRecord t = make_text_record("probe", "k=1", "classification",
                                    "bounded-looking (heuristic)", "rule: ...");
  CHECK_FALSE(t.is_exact);
  CHECK(t.exact_value.empty());
}

TEST_CASE("csv escaping and shape") {
  std::vector<ResultRecord> recs = {
      make_text_record("probe", "a=1;b=2", "note", "says \"hi\", twice", "ok")};
  std::ostringstream os;
  write_csv(os, recs);
  std::string out = os.str();
  CHECK(out.rfind("experiment_id,command,params,name,value,exact_value,is_exact,provenance\n",
                  0) == 0);
  CHECK(out.find("\"says \"\"hi\"\", twice\"") != std::string::npos);
  // exactly one header + one data line
  CHECK(std::count(out.begin(), out.end(), '\n') == 2);
}

TEST_CASE("json output parses back losslessly") {
  std::vector<ResultRecord> recs = {
      make_record("quad", "n=2", "node_1", Scalar(Rational(2, 3)), 128, "prov"),
      make_text_record("quad", "n=2", "note", "line1\nline2 \"q\"", "prov")};
  std::ostringstream os;
  write_json(os, recs);
  Json arr = Json::parse(os.str());
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 2);
  CHECK(arr[0].at("exact_value") == "2/3");
  CHECK(arr[0].at("is_exact") == true);
  CHECK(arr[1].at("value") == "line1\nline2 \"q\"");
}

TEST_CASE("identical inputs give byte-identical output") {
  auto render = [] {
    std::vector<ResultRecord> recs;
    for (int k = 0; k < 5; ++k)
      recs.push_back(make_record("moments", "measure=laguerre",
                                 "s_" + std::to_string(k),
                                 Scalar(Rational(factorial(k))), 192, "pd: pass"));
    std::ostringstream os;
    write_csv(os, recs);
    return os.str();
  };
  CHECK(render() == render());
}

TEST_CASE("config file loader tolerates comments and reports parse errors") {
  std::string path = "momlab_test_config.json";
  {
    std::ofstream f(path);
    f << "// experiment\n{\"precision\": 96, \"params\": {\"n\": 3}}\n";
  }
  ExperimentConfig cfg = load_config_file(path);
  CHECK(cfg.precision == 96);
  CHECK(cfg.param_int("n", 0) == 3);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_config_file("does_not_exist.json"), ConfigError);
  {
    std::ofstream f(path);
    f << "{broken";
  }
  CHECK_THROWS_AS(load_config_file(path), ConfigError);
  std::remove(path.c_str());
}
