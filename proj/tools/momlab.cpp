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
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momlab/config.hpp"
#include "momlab/momlab.hpp"

namespace {

using namespace momlab;

std::string exactness_tag(const ExperimentConfig& cfg) {
  return cfg.exact ? "exact" : "approx";
}

std::string base_params(const ExperimentConfig& cfg) {
  std::string p = "bits=" + std::to_string(cfg.precision) + ";path=" + exactness_tag(cfg);
  if (cfg.measure) p = "measure=" + cfg.measure->name() + ";" + p;
  return p;
}

/// On --exact the measure data itself must be exact; drift onto the float
/// path would silently betray the request.
void enforce_exact_path(const ExperimentConfig& cfg) {
  if (cfg.exact && cfg.measure && !cfg.measure->is_exact())
    throw ConfigError("--exact requested but the measure has non-exact data");
}

void emit(const ExperimentConfig& cfg, const std::vector<ResultRecord>& records) {
  if (cfg.out.empty()) {
    if (cfg.format == "csv")
      write_csv(std::cout, records);
    else
      write_json(std::cout, records);
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw ConfigError("cannot open output path '" + cfg.out + "'");
  if (cfg.format == "csv")
    write_csv(out, records);
  else
    write_json(out, records);
}

// ---------------------------------------------------------------------------
// subcommand bodies

void run_moments(const ExperimentConfig& cfg, long max_order) {
  if (max_order < 0) throw ConfigError("max order must be >= 0");
  const MeasureSpec& m = cfg.require_measure();
  MomentSequence s = m.moments(static_cast<std::size_t>(max_order), cfg.precision);

  // re-assert the touched invariant: leading Hankel minors stay positive
  std::string prov = "none";
  std::size_t depth = static_cast<std::size_t>(max_order) / 2;
  if (depth > 0) {
    s.assert_positive_definite(depth);  // throws PositivityError on failure
    prov = "hankel-pd(depth=" + std::to_string(depth) + "): pass";
  }
  std::string params = base_params(cfg) + ";max_order=" + std::to_string(max_order);
  std::vector<ResultRecord> recs;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(max_order); ++k)
    recs.push_back(make_record("moments", params, "s_" + std::to_string(k),
                               s.at(k), cfg.precision, prov));
  emit(cfg, recs);
}

void run_recur(const ExperimentConfig& cfg, long depth) {
  if (depth < 1) throw ConfigError("depth must be >= 1");
  const MeasureSpec& m = cfg.require_measure();
  std::size_t n = static_cast<std::size_t>(depth);
  MomentSequence s = m.moments(2 * n, cfg.precision);
  RecurrenceCoeffs rc = chebyshev_recurrence(s, n);  // pivots re-checked inside
  std::string prov = "sigma-pivots-positive(depth=" + std::to_string(n) + "): pass";
  std::string params = base_params(cfg) + ";depth=" + std::to_string(depth);
  std::vector<ResultRecord> recs;
  for (std::size_t k = 0; k < rc.a.size(); ++k)
    recs.push_back(make_record("recur", params, "a_" + std::to_string(k),
                               rc.a_at(k), cfg.precision, prov));
  for (std::size_t k = 1; k <= rc.b.size(); ++k)
    recs.push_back(make_record("recur", params, "b_" + std::to_string(k),
                               rc.b_at(k), cfg.precision, prov));
  emit(cfg, recs);
}

void run_zeros(const ExperimentConfig& cfg, long order) {
  if (order < 1) throw ConfigError("order must be >= 1");
  const MeasureSpec& m = cfg.require_measure();
  std::size_t n = static_cast<std::size_t>(order);
  MomentSequence s = m.moments(2 * n, cfg.precision);
  RecurrenceCoeffs rc = chebyshev_recurrence(s, n);
  std::vector<Scalar> zs = zeros(rc, n, cfg.precision);

  std::string prov;
  if (n >= 2) {
    InterlacingReport il =
        interlacing_check(zeros(rc, n - 1, cfg.precision), zs, cfg.precision);
    if (!il.ok) throw InternalError("interlacing violated: " + il.note);
    prov += "interlacing(" + std::to_string(n - 1) + "," + std::to_string(n) + "): pass";
  }
  if (s.exact && m.support_nonneg()) {
    if (!zeros_strictly_positive(rc, n))
      throw InternalError("positivity certificate failed for nonnegative support");
    prov += std::string(prov.empty() ? "" : "; ") + "zeros-positive(sturm): pass";
  }
  if (prov.empty()) prov = "none";
  std::string params = base_params(cfg) + ";n=" + std::to_string(order);
  std::vector<ResultRecord> recs;
  for (std::size_t j = 0; j < zs.size(); ++j)
    recs.push_back(make_record("zeros", params, "zero_" + std::to_string(j + 1),
                               zs[j], cfg.precision, prov));
  emit(cfg, recs);
}

void run_quad(const ExperimentConfig& cfg, long order) {
  if (order < 1) throw ConfigError("order must be >= 1");
  const MeasureSpec& m = cfg.require_measure();
  std::size_t n = static_cast<std::size_t>(order);
  MomentSequence s = m.moments(2 * n, cfg.precision);
  RecurrenceCoeffs rc = chebyshev_recurrence(s, n);
  QuadratureRule rule = gauss_rule(rc, n, cfg.precision);

  // in-run battery: positive masses, mass sum = s_0, exactness to 2n-1
  for (const Scalar& h : rule.masses)
    if (!(h.sgn() > 0)) throw InternalError("nonpositive Gauss mass");
  BigFloat tol = BigFloat::pow2(-static_cast<long>(cfg.precision) / 2, cfg.precision);
  BigFloat mass_gap = relative_error(rule.mass_sum().to_approx(cfg.precision),
                                     s.at(0).to_approx(cfg.precision));
  BigFloat defect = quadrature_moment_defect(rule, s, 2 * n - 1, cfg.precision);
  if (!(mass_gap < tol) || !(defect < tol))
    throw PrecisionError("quadrature exactness defect above 2^-(P/2)");
  std::string prov = "masses-positive: pass; mass-sum=s0: pass (rel gap " +
                     mass_gap.to_string(4) + "); moment-exactness(<=2n-1): pass (defect " +
                     defect.to_string(4) + ")";

  std::string params = base_params(cfg) + ";n=" + std::to_string(order);
  std::vector<ResultRecord> recs;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    recs.push_back(make_record("quad", params, "node_" + std::to_string(j + 1),
                               rule.nodes[j], cfg.precision, prov));
    recs.push_back(make_record("quad", params, "mass_" + std::to_string(j + 1),
                               rule.masses[j], cfg.precision, prov));
  }
  emit(cfg, recs);
}

void run_ratio_table(const ExperimentConfig& cfg, long n_max, long k_max) {
  if (n_max < 1) throw ConfigError("n_max must be >= 1");
  if (k_max >= n_max)
    throw ConfigError("k_max must be smaller than n_max (ratios need k+1 <= n)");
  if (k_max < 0) throw ConfigError("k_max must be >= 0");
  const MeasureSpec& m = cfg.require_measure();
  std::size_t nm = static_cast<std::size_t>(n_max), km = static_cast<std::size_t>(k_max);
  MomentSequence s = m.moments(2 * (nm + 1), cfg.precision);
  OrthonormalBasis basis = orthonormal_basis(chebyshev_recurrence(s, nm + 1), nm);
  RatioTable table = ratio_table(basis, km);

  const Lognormal* ln = m.as_lognormal();
  BigFloat tol = BigFloat::pow2(-static_cast<long>(cfg.precision) / 2, cfg.precision);
  std::string prov = ln ? "closed-form-column: checked" : "none";
  std::string params = base_params(cfg) + ";n_max=" + std::to_string(n_max) +
                       ";k_max=" + std::to_string(k_max);
  std::vector<ResultRecord> recs;
  for (std::size_t n = 1; n <= nm; ++n) {
    for (std::size_t k = 0; k < n && k <= km; ++k) {
      std::string cell = "[" + std::to_string(n) + "," + std::to_string(k) + "]";
      Scalar got = table.at(n, k);
      recs.push_back(make_record("ratio-table", params, "ratio" + cell, got,
                                 cfg.precision, prov));
      if (ln) {
        // the closed-form column plus per-entry differences
        Scalar closed = sw_ratio_closed_form(ln->q, n, k);
        Scalar diff = got - closed;
        if (diff.is_exact()) {
          if (!diff.is_zero())
            throw InternalError("exact ratio deviates from closed form at " + cell);
        } else if (!(abs(diff).to_approx(cfg.precision) <
                     tol * abs(closed).to_approx(cfg.precision))) {
          throw PrecisionError("ratio differs from closed form beyond 2^-(P/2) at " + cell);
        }
        recs.push_back(make_record("ratio-table", params, "closed_form" + cell,
                                   closed, cfg.precision, prov));
        recs.push_back(make_record("ratio-table", params, "difference" + cell,
                                   diff, cfg.precision, prov));
      }
    }
  }
  emit(cfg, recs);
}

void run_mass(const ExperimentConfig& cfg, const std::string& x_str, long N_arg) {
  const MeasureSpec& m = cfg.require_measure();
  if (x_str.empty()) throw ConfigError("mass needs --x <point>");
  Scalar x0(parse_rational(x_str));
  long N_default = 10;
  if (const DiscreteAtoms* d = m.as_discrete())
    N_default = static_cast<long>(d->points.size()) - 1;
  long N_hi = N_arg >= 0 ? N_arg : N_default;
  if (N_hi < 0) throw ConfigError("N must be >= 0");
  std::size_t N = static_cast<std::size_t>(N_hi);

  MomentSequence s = m.moments(2 * (N + 1), cfg.precision);
  OrthonormalBasis basis = orthonormal_basis(chebyshev_recurrence(s, N + 1), N);

  std::string prov = "kernel-positive: pass";
  if (const DiscreteAtoms* d = m.as_discrete()) {
    // full-basis estimates must reproduce atom weights exactly (Parseval)
    if (m.has_atom_at(x0) && N + 1 >= d->points.size()) {
      Scalar est = point_mass_estimate(basis, x0, d->points.size() - 1);
      if (!(est == m.atom_mass(x0)))
        throw InternalError("full-basis estimate misses the atom weight");
      prov += "; atom-weight-recovery: pass";
    }
  }
  std::string params = base_params(cfg) + ";x=" + x0.to_string() +
                       ";N_max=" + std::to_string(N);
  std::vector<ResultRecord> recs;
  for (std::size_t NN = 0; NN <= N; ++NN) {
    Scalar est = point_mass_estimate(basis, x0, NN);
    recs.push_back(make_record("mass", params, "estimate[N=" + std::to_string(NN) + "]",
                               est, cfg.precision, prov));
  }
  recs.push_back(make_record("mass", params, "kernel[N=" + std::to_string(N) + "]",
                             kernel_sum(basis, x0, N), cfg.precision, prov));
  emit(cfg, recs);
}

void run_density(const ExperimentConfig& cfg, long ideal_n_flag, long N_lo_arg,
                 long N_hi_arg, bool duality) {
  const MeasureSpec& m = cfg.require_measure();
  TargetFunction f = cfg.params.contains("target")
                         ? target_from_json(cfg.params.at("target"))
                         : TargetFunction::one();
  IdealSpec ideal = cfg.params.contains("ideal")
                        ? ideal_from_json(cfg.params.at("ideal"))
                        : IdealSpec::monomial(1);
  if (ideal_n_flag >= 0) ideal = IdealSpec::monomial(static_cast<unsigned>(ideal_n_flag));
  if (N_lo_arg < 1 || N_hi_arg < N_lo_arg)
    throw ConfigError("need 1 <= N_lo <= N_hi");
  std::size_t N_lo = static_cast<std::size_t>(N_lo_arg);
  std::size_t N_hi = static_cast<std::size_t>(N_hi_arg);

  auto curve = residual_decay_curve(f, ideal, N_lo, N_hi, m, cfg.precision);
  ProjectionResult final_res = ideal_distance(f, ideal, N_hi, m, cfg.precision);
  if (!(final_res.residual_sq == curve.back().second) &&
      !(relative_error(final_res.residual_sq.to_approx(cfg.precision),
                       curve.back().second.to_approx(cfg.precision)) <
        BigFloat::pow2(-static_cast<long>(cfg.precision) / 2, cfg.precision)))
    throw InternalError("decay-curve and direct-solve residuals disagree");

  // independent-route re-assertions
  std::string prov = "curve-vs-direct: pass";
  if (const MonomialIdeal* mono = ideal.as_monomial()) {
    // the transformed route needs f divisible by x^n, or a discrete measure
    // without an atom at 0 (so f/x^n is defined mu-a.e.)
    bool comparable = false;
    if (const PolyTarget* pt = f.as_poly()) {
      comparable = true;
      for (std::size_t k = 0; k < mono->n && comparable; ++k)
        if (static_cast<long>(k) <= pt->f.degree() && !pt->f.coeff(k).is_zero())
          comparable = false;
    }
    if (!comparable && m.as_discrete() && !m.has_atom_at(Scalar(0)))
      comparable = true;
    if (comparable) {
      ProjectionResult alt =
          transformed_projection(f, mono->n, N_hi, m, cfg.precision);
      bool same = final_res.exact && alt.exact
                      ? final_res.residual_sq == alt.residual_sq
                      : relative_error(final_res.residual_sq.to_approx(cfg.precision),
                                       alt.residual_sq.to_approx(cfg.precision)) <
                            BigFloat::pow2(-static_cast<long>(cfg.precision) / 2,
                                           cfg.precision);
      if (!same) throw InternalError("route equivalence failed at N = N_hi");
      prov += "; route-equivalence(transformed): pass";
    }
  } else {
    Scalar defect = ideal_membership_defect(final_res, ideal);
    if (!defect.is_zero() &&
        !(defect.to_approx(cfg.precision) <
          BigFloat::pow2(-static_cast<long>(cfg.precision) / 2, cfg.precision)))
      throw InternalError("approximant fails ideal membership");
    prov += "; ideal-membership: pass";
  }

  std::string params = base_params(cfg) + ";ideal=" + ideal.name() +
                       ";N=" + std::to_string(N_lo) + ".." + std::to_string(N_hi);
  std::vector<ResultRecord> recs;
  for (const auto& [N, res] : curve)
    recs.push_back(make_record("density", params,
                               "residual_sq[N=" + std::to_string(N) + "]", res,
                               cfg.precision, prov));
  Poly approx = final_res.approximant_real();
  for (std::size_t j = 0; j < approx.c.size(); ++j)
    recs.push_back(make_record("density", params,
                               "approximant_c" + std::to_string(j) +
                                   "[N=" + std::to_string(N_hi) + "]",
                               approx.coeff(j), cfg.precision, prov));
  recs.push_back(make_record("density", params, "gram_conditioning",
                             final_res.conditioning, cfg.precision, prov));

  if (duality) {
    for (const DualityRow& row : christoffel_duality_check(m, N_lo, N_hi, cfg.precision)) {
      recs.push_back(make_record("density", params,
                                 "duality_product[N=" + std::to_string(row.N) + "]",
                                 row.product, cfg.precision,
                                 prov + "; christoffel-duality: pass"));
    }
  }
  emit(cfg, recs);
}

void run_probe(const ExperimentConfig& cfg, const std::string& kind, long N_lo_arg,
               long N_hi_arg, long k_max_arg) {
  const MeasureSpec& m = cfg.require_measure();
  ComplexScalar z = cfg.params.contains("z")
                        ? complex_from_json(cfg.params.at("z"), "z")
                        : ComplexScalar(Scalar(0), Scalar(1));
  std::optional<Scalar> threshold;
  if (cfg.params.contains("threshold"))
    threshold = scalar_from_json(cfg.params.at("threshold"), "threshold");
  if (N_hi_arg < 1) throw ConfigError("need N_max >= 1");
  std::size_t N_hi = static_cast<std::size_t>(N_hi_arg);

  std::vector<ResultRecord> recs;
  if (kind == "determinacy") {
    MomentSequence s = m.moments(2 * (N_hi + 1), cfg.precision);
    OrthonormalBasis basis = orthonormal_basis(chebyshev_recurrence(s, N_hi + 1), N_hi);
    ProbeCurve pc = determinacy_probe(basis, z, N_hi, cfg.precision, threshold);
    std::string params = base_params(cfg) + ";kind=determinacy;z=" + z.to_string() +
                         ";N_max=" + std::to_string(N_hi);
    std::string prov = "rule: " + pc.rule;
    for (std::size_t N = 0; N <= N_hi; ++N)
      recs.push_back(make_record("probe", params, "K[N=" + std::to_string(N) + "]",
                                 pc.partial_sums[N], cfg.precision, prov));
    for (std::size_t N = 1; N <= N_hi; ++N)
      recs.push_back(make_record("probe", params,
                                 "increment[N=" + std::to_string(N) + "]",
                                 pc.increments[N - 1], cfg.precision, prov));
    recs.push_back(make_text_record("probe", params, "classification",
                                    pc.classification + " (" + pc.label + ")", prov));
  } else if (kind == "riesz") {
    if (N_lo_arg < 1) throw ConfigError("need N_lo >= 1");
    RieszReport rep = riesz_ideal_check(m, z, static_cast<std::size_t>(N_lo_arg),
                                        N_hi, cfg.precision);
    std::string params = base_params(cfg) + ";kind=riesz;z=" + z.to_string() + ";N=" +
                         std::to_string(N_lo_arg) + ".." + std::to_string(N_hi);
    std::string prov = std::string("monotone-nonincreasing: ") +
                       (rep.monotone_nonincreasing ? "pass" : "FAIL");
    for (const auto& [N, res] : rep.curve)
      recs.push_back(make_record("probe", params,
                                 "residual_sq[N=" + std::to_string(N) + "]", res,
                                 cfg.precision, prov));
    recs.push_back(make_record("probe", params, "final_residual",
                               rep.final_residual, cfg.precision, prov));
  } else if (kind == "density-index") {
    if (k_max_arg < 0) throw ConfigError("need k_max >= 0");
    DensityIndexReport rep = density_index_probe(m, static_cast<std::size_t>(k_max_arg),
                                                 N_hi, cfg.precision, threshold);
    std::string params = base_params(cfg) + ";kind=density-index;k_max=" +
                         std::to_string(k_max_arg) + ";N_max=" + std::to_string(N_hi);
    for (const DensityIndexRow& row : rep.rows) {
      std::string prov = "rule: " + row.kernel_probe.rule;
      recs.push_back(make_text_record(
          "probe", params, "kernel_classification[k=" + std::to_string(row.k) + "]",
          row.kernel_probe.classification + " (" + rep.label + ")", prov));
      recs.push_back(make_record("probe", params,
                                 "final_residual[k=" + std::to_string(row.k) + "]",
                                 row.residual_curve.back().second, cfg.precision,
                                 prov));
    }
    recs.push_back(make_text_record("probe", params, "summary",
                                    rep.summary + " (" + rep.label + ")",
                                    "heuristic evidence only"));
  } else {
    throw ConfigError("probe kind must be determinacy | riesz | density-index");
  }
  emit(cfg, recs);
}

int run_suite(const ExperimentConfig& cfg) {
  std::vector<CriterionResult> results = run_acceptance_suite(cfg.precision);
  int failures = 0;
  std::vector<ResultRecord> recs;
  for (const CriterionResult& r : results) {
    if (!r.pass) ++failures;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.index << ": "
              << r.title << "\n       " << r.detail << "\n";
    std::string params = "criterion=" + std::to_string(r.index) +
                         ";bits=" + std::to_string(cfg.precision);
    recs.push_back(make_text_record("suite", params, "result",
                                    r.pass ? "pass" : "fail", r.detail));
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  if (!cfg.out.empty()) emit(cfg, recs);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"momlab: orthonormal polynomials, Gauss quadrature, and ideal "
               "density experiments in exact rational / MPFR arithmetic"};
  app.require_subcommand(1);

  std::string config_path, out_path, format_opt, measure_opt, q_opt;
  unsigned precision_opt = 0;
  bool exact_flag = false;
  app.add_option("--config", config_path, "JSON config file (comments allowed)");
  app.add_option("--precision", precision_opt, "working precision in bits (>= 64)");
  app.add_flag("--exact", exact_flag, "request the exact-arithmetic path");
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_option("--format", format_opt, "output format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--measure", measure_opt,
                 "built-in measure family: laguerre | uniform-unit | lognormal")
      ->check(CLI::IsMember({"laguerre", "uniform-unit", "lognormal"}));
  app.add_option("--q", q_opt, "lognormal parameter as exact fraction, e.g. 1/2");

  long max_order = 10, depth = 8, order = 5, n_max = 12, k_max = 4;
  long N_flag = -1, N_lo = 1, N_hi = 20, ideal_n = -1, probe_k_max = 2;
  std::string x_point, probe_kind = "determinacy";
  bool duality = false;

  CLI::App* c_moments = app.add_subcommand("moments", "emit s_0..s_M");
  c_moments->add_option("--max-order", max_order, "largest moment order M");
  CLI::App* c_recur = app.add_subcommand("recur", "recurrence coefficients a_k, b_k");
  c_recur->add_option("--depth", depth, "number of a_k to compute");
  CLI::App* c_zeros = app.add_subcommand("zeros", "zeros of the n-th orthogonal polynomial");
  c_zeros->add_option("--n", order, "polynomial degree n");
  CLI::App* c_quad = app.add_subcommand("quad", "n-point Gauss rule (nodes and masses)");
  c_quad->add_option("--n", order, "rule size n");
  CLI::App* c_ratio = app.add_subcommand("ratio-table", "coefficient-ratio matrix");
  c_ratio->add_option("--n-max", n_max, "largest row degree");
  c_ratio->add_option("--k-max", k_max, "largest coefficient index k");
  CLI::App* c_mass = app.add_subcommand("mass", "Christoffel point-mass estimates 1/K_N(x)");
  c_mass->add_option("--x", x_point, "evaluation point (fraction or decimal string)");
  c_mass->add_option("--N", N_flag, "largest basis degree (default: full for discrete)");
  CLI::App* c_density = app.add_subcommand("density", "L2 distance from f to an ideal");
  c_density->add_option("--ideal-n", ideal_n, "monomial ideal x^n C[x] (overrides config)");
  c_density->add_option("--N-lo", N_lo, "first truncation degree");
  c_density->add_option("--N-hi", N_hi, "last truncation degree");
  c_density->add_flag("--duality", duality, "also emit Christoffel duality products");
  CLI::App* c_probe = app.add_subcommand("probe", "determinacy / riesz / density-index probes");
  c_probe->add_option("--kind", probe_kind, "determinacy | riesz | density-index");
  c_probe->add_option("--N-lo", N_lo, "first degree (riesz)");
  c_probe->add_option("--N-max", N_hi, "probe depth");
  c_probe->add_option("--k-max", probe_k_max, "largest shift power (density-index)");
  CLI::App* c_suite = app.add_subcommand("suite", "run the full acceptance battery");
  for (CLI::App* sub : {c_moments, c_recur, c_zeros, c_quad, c_ratio, c_mass,
                        c_density, c_probe, c_suite})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path);
    if (app.count("--precision") > 0) cfg.precision = precision_opt;
    if (exact_flag) cfg.exact = true;
    if (app.count("--format") > 0) cfg.format = format_opt;
    if (app.count("--out") > 0) cfg.out = out_path;
    if (app.count("--measure") > 0) {
      if (measure_opt == "laguerre") cfg.measure = MeasureSpec::laguerre();
      if (measure_opt == "uniform-unit") cfg.measure = MeasureSpec::uniform_unit();
      if (measure_opt == "lognormal") {
        if (q_opt.empty()) throw ConfigError("--measure lognormal needs --q <fraction>");
        cfg.measure = MeasureSpec::lognormal(Scalar(parse_rational(q_opt)));
      }
    }
    cfg.validate();
    enforce_exact_path(cfg);

    if (c_moments->parsed()) {
      run_moments(cfg, c_moments->count("--max-order") ? max_order
                                                       : cfg.param_int("max_order", max_order));
    } else if (c_recur->parsed()) {
      run_recur(cfg, c_recur->count("--depth") ? depth : cfg.param_int("depth", depth));
    } else if (c_zeros->parsed()) {
      run_zeros(cfg, c_zeros->count("--n") ? order : cfg.param_int("n", order));
    } else if (c_quad->parsed()) {
      run_quad(cfg, c_quad->count("--n") ? order : cfg.param_int("n", order));
    } else if (c_ratio->parsed()) {
      run_ratio_table(cfg,
                      c_ratio->count("--n-max") ? n_max : cfg.param_int("n_max", n_max),
                      c_ratio->count("--k-max") ? k_max : cfg.param_int("k_max", k_max));
    } else if (c_mass->parsed()) {
      std::string x = x_point;
      if (x.empty() && cfg.params.contains("x"))
        x = scalar_from_json(cfg.params.at("x"), "x").to_string();
      run_mass(cfg, x, c_mass->count("--N") ? N_flag : cfg.param_int("N", N_flag));
    } else if (c_density->parsed()) {
      bool dual = duality;
      if (!dual && cfg.params.contains("duality")) {
        const Json& dv = cfg.params.at("duality");
        if (!dv.is_boolean()) throw ConfigError("parameter 'duality' must be a boolean");
        dual = dv.get<bool>();
      }
      run_density(cfg,
                  c_density->count("--ideal-n") ? ideal_n
                                                : cfg.param_int("ideal_n", ideal_n),
                  c_density->count("--N-lo") ? N_lo : cfg.param_int("N_lo", N_lo),
                  c_density->count("--N-hi") ? N_hi : cfg.param_int("N_hi", N_hi),
                  dual);
    } else if (c_probe->parsed()) {
      std::string kind = c_probe->count("--kind")
                             ? probe_kind
                             : (cfg.params.contains("kind")
                                    ? cfg.params.at("kind").get<std::string>()
                                    : probe_kind);
      run_probe(cfg, kind,
                c_probe->count("--N-lo") ? N_lo : cfg.param_int("N_lo", N_lo),
                c_probe->count("--N-max") ? N_hi : cfg.param_int("N_max", N_hi),
                c_probe->count("--k-max") ? probe_k_max
                                          : cfg.param_int("k_max", probe_k_max));
    } else if (c_suite->parsed()) {
      return run_suite(cfg);
    }
    return 0;
  } catch (const momlab::Error& e) {
    std::cerr << "momlab error [" << e.code() << "]: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "momlab error [internal]: " << e.what() << std::endl;
    return 3;
  }
}
