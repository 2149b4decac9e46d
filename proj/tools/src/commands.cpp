#include "hinterp_tools/commands.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hinterp/errors.hpp"
#include "hinterp/sobolev1d.hpp"
#include "hinterp/spectral.hpp"

namespace hinterp::tools {

namespace {

constexpr double kLog10e = std::numbers::log10e;

std::string q_label(const Exponent& q) {
  return q.is_infinite() ? "inf" : format_number(q.value());
}

void fail(Report& r, const std::string& what) { r.failures.push_back(what); }

}  // namespace

Report cmd_constants(const RunConfig& cfg) {
  std::vector<double> thetas = cfg.theta;
  if (thetas.empty()) {
    for (int k = 1; k <= 9; ++k) thetas.push_back(k / 10.0);
  }
  std::vector<Exponent> qs = cfg.q;
  if (qs.empty()) {
    qs = {Exponent::finite(1.0), Exponent::finite(2.0), Exponent::finite(4.0),
          Exponent::infinity()};
  }

  Report r;
  Table t{"constants", {"theta", "q", "N", "N_prime", "ratio"}, {}};
  for (double theta : thetas) {
    for (const Exponent& q : qs) {
      const ThetaQ p(theta, q);
      const double n = n_theta_q(p);
      const double np = n_prime_theta_q(p);
      const double ratio = n / np;
      Cell qcell = q.is_infinite() ? Cell{std::string("inf")} : Cell{q.value()};
      t.add_row({theta, qcell, n, np, ratio});
      if (!(ratio >= 1.0 - 1e-12 && ratio <= std::numbers::sqrt2 * (1.0 + 1e-12))) {
        fail(r, "N'/N sandwich violated at theta=" + format_number(theta) + ", q=" + q_label(q));
      }
    }
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_figure1(const RunConfig& cfg) {
  if (cfg.grid < 1) throw std::invalid_argument("--grid must be at least 1");
  if (cfg.jmax < 1) throw std::invalid_argument("--jmax must be at least 1");
  const QuadratureOptions qopts{.rel_tol = cfg.tol.value_or(1e-12)};
  const SpectralDecomposition dec = dirichlet_interval_decomposition(cfg.jmax);

  Table t{"figure1", {"theta"}, {}};
  for (std::size_t j = 1; j <= cfg.jmax; ++j) {
    const std::string s = std::to_string(j);
    t.columns.push_back("star_norm_phi" + s);
    t.columns.push_back("sobolev_norm_phi" + s);
    t.columns.push_back("ratio_phi" + s);
  }
  std::vector<FourierSquareModulus> moduli;
  for (std::size_t j = 1; j <= cfg.jmax; ++j) moduli.push_back(sine_fourier_sq(static_cast<int>(j)));

  Report r;
  for (std::size_t k = 1; k <= cfg.grid; ++k) {
    const double theta = static_cast<double>(k) / static_cast<double>(cfg.grid + 1);
    std::vector<Cell> row{theta};
    for (std::size_t j = 1; j <= cfg.jmax; ++j) {
      const double star = spectral_interp_norm(dec, CoefficientVector::unit(j), theta);
      const double sob = hs_norm_fourier(moduli[j - 1], theta, qopts);
      const double ratio = star / sob;
      row.insert(row.end(), {star, sob, ratio});
      if (!(ratio >= 1.0 - 1e-6)) {
        fail(r, "ratio_phi" + std::to_string(j) + " below 1 at theta=" + format_number(theta));
      }
    }
    t.add_row(std::move(row));
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_interval_ratio(const RunConfig& cfg) {
  std::vector<double> as = cfg.a;
  if (as.empty()) as = log_grid_decreasing(1e-4, 1e2, 13);

  Report r;
  Table t{"interval_ratio",
          {"a", "l2", "h1", "h2", "upper_bound", "ratio_bound", "min_a_quarter_1", "holds"},
          {}};
  for (double a : as) {
    const IntervalRatio ir = interval_ratio_bound(a);
    const double cap = std::min(std::pow(a, 0.25), 1.0);
    t.add_row({a, ir.l2, ir.h1, ir.h2, ir.upper_bound, ir.ratio_bound, cap, ir.below_min});
    if (!ir.below_min) fail(r, "ratio bound not below min(a^{1/4}, 1) at a=" + format_number(a));
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_cusp(const RunConfig& cfg) {
  const double theta = cfg.theta.empty() ? 0.5 : cfg.theta.front();
  CuspParams cp;
  cp.p = cfg.p;
  cp.h_grid = log_grid_decreasing(cfg.h_min, cfg.h_max, cfg.h_points);
  const CuspScalings cs = cusp_norm_scalings(cp, theta, {.rel_tol = cfg.tol.value_or(1e-12)});

  Report r;
  Table rows{"cusp", {"h", "l2_norm", "l2_upper", "l2_within_upper", "h2_plus_norm", "interp_bound"}, {}};
  for (const CuspRow& row : cs.rows) {
    const bool within = row.l2_norm <= row.l2_upper;
    rows.add_row({row.h, row.l2_norm, row.l2_upper, within, row.h2_plus_norm, row.interp_bound});
    if (!within) fail(r, "L2 norm exceeds the volume bound at h=" + format_number(row.h));
  }
  Table slopes{"slopes", {"quantity", "slope", "expected", "deviation"}, {}};
  slopes.add_row({std::string("l2_norm"), cs.slope_l2, cs.expected_l2,
                  std::abs(cs.slope_l2 - cs.expected_l2)});
  slopes.add_row({std::string("h2_plus_norm"), cs.slope_h2, cs.expected_h2,
                  std::abs(cs.slope_h2 - cs.expected_h2)});
  slopes.add_row({std::string("interp_bound"), cs.slope_interp, cs.expected_interp,
                  std::abs(cs.slope_interp - cs.expected_interp)});
  r.tables.push_back(std::move(rows));
  r.tables.push_back(std::move(slopes));
  return r;
}

Report cmd_fractal(const RunConfig& cfg) {
  const CutoffProfile chi = default_cutoff();
  const FractalAlpha alpha = fractal_alpha(chi);
  const double used = alpha.select(cfg.alpha_mode);
  const FractalSequence seq = fractal_sequence(used, cfg.nmax);
  const QuadratureOptions qopts{.rel_tol = cfg.tol.value_or(1e-12)};

  Report r;
  Table head{"alpha",
             {"alpha_norm", "alpha_norm_squared", "alpha_mode", "alpha_used", "underflow_index"},
             {}};
  head.add_row({alpha.norm, alpha.norm_squared,
                std::string(cfg.alpha_mode == AlphaMode::norm ? "norm" : "norm-squared"), used,
                static_cast<std::int64_t>(seq.underflow_index)});

  Table t{"fractal",
          {"n", "log10_a", "log10_b", "log10_4pow", "a_le_4pow", "a_lt_prev_quarter",
           "log10_l2_bound", "log10_h2_bound", "log10_interp_half_bound", "log10_sqrt2_bound",
           "interp_le_sqrt2", "tail_sum_bound", "witness_phi", "witness_ok", "psi_energy",
           "psi_energy_quadrature", "psi_bound"},
          {}};
  for (std::size_t n = 2; n <= seq.nmax; ++n) {
    const FractalBounds fb = fractal_phi_bounds(seq, n);
    const FractalWitness w = fractal_witness(seq, n);
    const bool quarter = seq.log_a[n] < seq.log_a[n - 1] - 2.0 * std::numbers::ln2;
    const bool witness_ok = w.phi_value == n;
    std::vector<Cell> row{static_cast<std::int64_t>(n),
                          seq.log_a[n] * kLog10e,
                          seq.log_b[n] * kLog10e,
                          -static_cast<double>(n) * 2.0 * std::numbers::ln2 * kLog10e,
                          fb.a_le_4pow,
                          quarter,
                          fb.log_l2_bound * kLog10e,
                          fb.log_h2_bound * kLog10e,
                          fb.log_interp_half_bound * kLog10e,
                          fb.log_sqrt2_bound * kLog10e,
                          fb.interp_le_sqrt2,
                          fb.tail_sum_bound,
                          static_cast<std::int64_t>(w.phi_value),
                          witness_ok};
    if (psi_energy_representable(seq, n)) {
      const PsiEnergy e = fractal_psi_energy(seq, n, chi, qopts);
      row.insert(row.end(), {e.closed_form, e.quadrature, e.bound});
      if (!(e.closed_form <= e.bound)) fail(r, "psi energy above its bound at n=" + std::to_string(n));
    } else {
      row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}});
    }
    t.add_row(std::move(row));

    const std::string at = " at n=" + std::to_string(n);
    if (!fb.a_le_4pow) fail(r, "a_n > 4^{-n}" + at);
    if (!quarter) fail(r, "a_n >= a_{n-1}/4" + at);
    if (!witness_ok) fail(r, "witness Phi != n" + at);
    if (n >= 3 && !fb.interp_le_sqrt2) fail(r, "interpolation bound above sqrt(2)^{-n}" + at);
  }
  r.tables.push_back(std::move(head));
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_selfcheck(const RunConfig& cfg) {
  Report r;
  Table t{"selfcheck", {"suite", "cases", "failures", "max_deviation"}, {}};
  for (const SuiteResult& s : run_selfcheck(cfg.seed, cfg.cases, cfg.normalization_scale)) {
    t.add_row({s.suite, static_cast<std::int64_t>(s.cases), static_cast<std::int64_t>(s.failures),
               s.max_deviation});
    if (s.failures > 0) {
      fail(r, s.suite + ": " + std::to_string(s.failures) + " of " + std::to_string(s.cases) +
                  " cases failed");
    }
  }
  r.tables.push_back(std::move(t));
  return r;
}

}  // namespace hinterp::tools
