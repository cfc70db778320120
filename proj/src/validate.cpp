#include "cascade/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cascade/fock.hpp"
#include "cascade/moments.hpp"
#include "cascade/params.hpp"
#include "cascade/su11.hpp"

namespace cascade {

namespace {

constexpr double kPsi = std::numbers::pi / 4.0;

// Regression constants frozen from the reference implementation of the
// closed forms and the moment engine (dt = 0.01 where applicable).
constexpr double kFrozenPeriod = 1222.1160829496769;     // 2*pi/w
constexpr double kFrozenDriveRatio = 23224.903217049225; // N_dr/N_un at t=50
constexpr double kFrozenPeakSqueeze = 0.16;              // xi / ((eta1+eta2)/2)

SystemParams default_params() { return SystemParams{}; }

SystemParams undriven_params() {
  SystemParams p;
  p.Omega1 = 0.0;
  p.Omega2 = 0.0;
  return p;
}

// Drive ratios Omega1/g1 = 0.3 and Omega2/g2 = 0.2: small enough for a
// 15-per-mode density truncation, large enough to exercise every drive term.
SystemParams small_drive_params() {
  SystemParams p;
  p.Omega1 = 0.3;
  p.Omega2 = 0.4;
  return p;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double rel_err(double value, double ref, double floor = 1e-9) {
  return std::abs(value - ref) / std::max(std::abs(ref), floor);
}

double max_moment_diff(const MomentVector& a, const MomentVector& b) {
  return std::max({std::abs(a.a1 - b.a1), std::abs(a.a2 - b.a2),
                   std::abs(a.n1 - b.n1), std::abs(a.n2 - b.n2),
                   std::abs(a.c12 - b.c12)});
}

MomentVector closed_form_moments(const SystemParams& p,
                                 const DerivedCouplings& c, double t) {
  const SqueezeState s = closed_form_state(p, c, t);
  MomentVector m;
  std::tie(m.a1, m.a2) = closed_form_first_moments(s);
  std::tie(m.n1, m.n2) = closed_form_mode_occupations(s);
  m.c12 = closed_form_pair_correlation(s);
  return m;
}

// Indices of strict interior maxima of `v`.
std::vector<std::size_t> interior_maxima(const std::vector<double>& v) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    if (v[k] > v[k - 1] && v[k] > v[k + 1]) out.push_back(k);
  }
  return out;
}

double mean_spacing(const std::vector<std::size_t>& peaks, double dt) {
  const double span =
      static_cast<double>(peaks.back() - peaks.front()) * dt;
  return span / static_cast<double>(peaks.size() - 1);
}

// ---------------------------------------------------------------------------
// 1. Lattice oracle vs closed forms, drives off.
CheckResult check_oracle_undriven() {
  CheckResult r{1, "oracle-undriven", false, 0.0, 1e-8, ""};
  const SystemParams p = undriven_params();
  const DerivedCouplings c = derive_couplings(p);
  const FockLayout lo{40, 40, false};
  const OperatorMatrix H = build_effective_hamiltonian(p, c, lo);
  FockState psi = basis_state(lo, 0, 0);
  double worst = 0.0;
  double prev_t = 0.0;
  for (const double t : {50.0, 100.0, 300.0}) {
    psi = evolve_state(H, psi, t - prev_t, 0.01);
    prev_t = t;
    const SU11Factors f = su11_factors(c, t);
    const SqueezeState s = closed_form_state(p, c, t);
    const FockState ref =
        construct_analytic_state(s.alpha1, s.alpha2, f.A_plus, lo);
    const double infid = 1.0 - fidelity(psi, ref);
    const Observables obs =
        observables_from_moments(moments_from_state(psi), kPsi);
    const double dN = std::abs(obs.photons - closed_form_photon_number(s));
    const double dD = std::abs(obs.duan - closed_form_duan(s.r, s.epsilon));
    worst = std::max({worst, infid, dN, dD});
    if (t == 300.0) {
      r.detail = "t=300: infid=" + num(infid) + " |dN|=" + num(dN) +
                 " |dD|=" + num(dD);
    }
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = "worst over t in {50,100,300} of state infidelity and |dN|, "
             "|dD|; " + r.detail;
  return r;
}

// ---------------------------------------------------------------------------
// 2. Lattice oracle vs closed forms, small drives.
CheckResult check_oracle_small_drives() {
  CheckResult r{2, "oracle-small-drives", false, 0.0, 1e-6, ""};
  const SystemParams p = small_drive_params();
  const DerivedCouplings c = derive_couplings(p);
  const FockLayout lo{25, 25, false};
  const OperatorMatrix H = build_effective_hamiltonian(p, c, lo);
  FockState psi = basis_state(lo, 0, 0);
  double worst_fid = 0.0;
  double worst_fm = 0.0;
  double prev_t = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const double t = 10.0 * k;
    psi = evolve_state(H, psi, t - prev_t, 0.01);
    prev_t = t;
    const SU11Factors f = su11_factors(c, t);
    const SqueezeState s = closed_form_state(p, c, t);
    const FockState ref =
        construct_analytic_state(s.alpha1, s.alpha2, f.A_plus, lo);
    worst_fid = std::max(worst_fid, 1.0 - fidelity(psi, ref));
    const MomentVector m = moments_from_state(psi);
    const auto [fm1, fm2] = closed_form_first_moments(s);
    worst_fm = std::max({worst_fm, std::abs(m.a1 - fm1), std::abs(m.a2 - fm2)});
  }
  r.measured = std::max(worst_fid, worst_fm);
  r.pass = r.measured <= r.threshold;
  r.detail = "t in {10,...,100}: worst infidelity=" + num(worst_fid) +
             ", worst first-moment |d|=" + num(worst_fm);
  return r;
}

// ---------------------------------------------------------------------------
// 3. Moment integration vs closed forms, lossless driven run.
CheckResult check_moments_vs_closed() {
  CheckResult r{3, "moments-vs-closed", false, 0.0, 1e-6, ""};
  const SystemParams p = default_params();
  const DerivedCouplings c = derive_couplings(p);
  const TimeGrid grid{0.0, 0.01, 10000};
  const TimeSeries ts = integrate_moments(p, grid, kPsi);
  double worst = 0.0;
  for (const TimeSeriesRow& row : ts.rows) {
    const SqueezeState s = closed_form_state(p, c, row.t);
    const double relN =
        rel_err(row.photons, closed_form_photon_number(s));
    const double relD = rel_err(row.duan, closed_form_duan(s.r, s.epsilon));
    worst = std::max({worst, relN, relD});
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = "max relative error of N(t), D(t) on [0,100] at dt=0.01";
  return r;
}

// ---------------------------------------------------------------------------
// 4. Moment integration vs density-operator oracle, kappa > 0.
CheckResult check_moments_vs_lindblad() {
  CheckResult r{4, "moments-vs-lindblad", false, 0.0, 1e-6, ""};
  double worst = 0.0;
  std::string parts;
  for (const double kappa : {0.01, 0.02}) {
    SystemParams p = small_drive_params();
    p.kappa = kappa;
    std::vector<MomentVector> traj;
    integrate_moments(p, TimeGrid{0.0, 0.01, 10000}, kPsi, &traj);

    const FockLayout lo{15, 15, false};
    DensityMatrix rho0;
    rho0.layout = lo;
    rho0.rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(lo.size()),
                                      static_cast<Eigen::Index>(lo.size()));
    rho0.rho(0, 0) = Complex(1.0, 0.0);

    double local = 0.0;
    std::size_t step = 0;
    EvolveOptions opts;
    // Lindblad dt = 0.05; compare on the 0.1-spaced grid shared with the
    // dt = 0.01 moment run.
    opts.observe_density = [&](double, const DensityMatrix& dm) {
      const std::size_t k = step++;
      if (k % 2 != 0) return;
      const MomentVector lhs = moments_from_state(dm);
      const MomentVector& rhs = traj[k * 5];
      local = std::max(local, max_moment_diff(lhs, rhs));
    };
    evolve_lindblad(p, rho0, 100.0, 0.05, opts);
    worst = std::max(worst, local);
    parts += " kappa=" + num(kappa) + ": max|d|=" + num(local);
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = "all five moments on [0,100], truncation 15/mode;" + parts;
  return r;
}

// ---------------------------------------------------------------------------
// 5. The entanglement witness is blind to the drives.
CheckResult check_drive_independence() {
  CheckResult r{5, "drive-independence", false, 0.0, 1e-9, ""};
  double worst = 0.0;
  for (const double kappa : {0.0, 0.01, 0.02}) {
    SystemParams driven = default_params();
    driven.kappa = kappa;
    SystemParams un = undriven_params();
    un.kappa = kappa;
    const TimeGrid grid{0.0, 0.01, 10000};
    const TimeSeries a = integrate_moments(driven, grid, kPsi);
    const TimeSeries b = integrate_moments(un, grid, kPsi);
    for (std::size_t k = 0; k < a.rows.size(); ++k) {
      worst = std::max(worst, std::abs(a.rows[k].duan - b.rows[k].duan));
    }
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = "max |D_driven - D_undriven| over kappa in {0, 0.01, 0.02}";
  return r;
}

// ---------------------------------------------------------------------------
// 6. Loss ordering and persistence of the entanglement window.
CheckResult check_loss_ordering() {
  CheckResult r{6, "loss-ordering", false, 0.0, 1e-12, ""};
  const TimeGrid grid{0.0, 0.01, 10000};
  std::vector<TimeSeries> series;
  for (const double kappa : {0.0, 0.01, 0.02}) {
    SystemParams p = default_params();
    p.kappa = kappa;
    series.push_back(integrate_moments(p, grid, kPsi));
  }
  double worst_violation = 0.0;
  for (std::size_t k = 1; k < series[0].rows.size(); ++k) {
    const double d0 = series[0].rows[k].duan;
    const double d1 = series[1].rows[k].duan;
    const double d2 = series[2].rows[k].duan;
    worst_violation = std::max({worst_violation, d1 - d2, d0 - d1});
  }
  std::string windows;
  bool all_entangled = true;
  for (std::size_t i = 0; i < series.size(); ++i) {
    double min_d = 2.0;
    double below = 0.0;
    for (const TimeSeriesRow& row : series[i].rows) {
      min_d = std::min(min_d, row.duan);
      if (row.duan < 2.0) below += grid.dt;
    }
    all_entangled = all_entangled && below > 0.0;
    windows += " minD[" + num(i == 0 ? 0.0 : (i == 1 ? 0.01 : 0.02)) +
               "]=" + num(min_d);
  }
  r.measured = worst_violation;
  r.pass = worst_violation <= r.threshold && all_entangled;
  r.detail = "worst pointwise ordering violation (D_k2>=D_k1>=D_0);" +
             windows + (all_entangled ? "; D<2 window nonempty for each kappa"
                                      : "; MISSING D<2 window");
  return r;
}

// ---------------------------------------------------------------------------
// 7. Oscillation structure and the driven/undriven amplitude contrast.
CheckResult check_oscillation_period() {
  CheckResult r{7, "oscillation-period", false, 0.0, 0.01, ""};
  const SystemParams driven = default_params();
  const SystemParams un = undriven_params();
  const DerivedCouplings c = derive_couplings(driven);
  const double half_sum = 0.5 * (c.eta1 + c.eta2);
  const double w = std::sqrt(half_sum * half_sum - c.xi * c.xi);
  const double period = 2.0 * std::numbers::pi / w;
  if (rel_err(period, kFrozenPeriod) > 1e-9) {
    r.detail = "derived period " + num(period) + " drifted from frozen " +
               num(kFrozenPeriod);
    r.measured = rel_err(period, kFrozenPeriod);
    return r;
  }

  const double dt = 0.5;
  const TimeGrid grid{0.0, dt, 5000};
  const TimeSeries ts_dr = analytic_timeseries(driven, grid, kPsi);
  const TimeSeries ts_un = analytic_timeseries(un, grid, kPsi);
  std::vector<double> duan, n_un, n_dr;
  for (const TimeSeriesRow& row : ts_dr.rows) {
    duan.push_back(row.duan);
    n_dr.push_back(row.photons);
  }
  for (const TimeSeriesRow& row : ts_un.rows) n_un.push_back(row.photons);

  const auto peaks_d = interior_maxima(duan);
  const auto peaks_n = interior_maxima(n_un);
  const auto peaks_dr = interior_maxima(n_dr);
  if (peaks_d.size() < 2 || peaks_n.size() < 2 || peaks_dr.size() < 2) {
    r.detail = "expected repeated maxima on [0,2500]; got D:" +
               num(static_cast<double>(peaks_d.size())) + " N_un:" +
               num(static_cast<double>(peaks_n.size())) + " N_dr:" +
               num(static_cast<double>(peaks_dr.size()));
    r.measured = 1.0;
    return r;
  }
  // Quadratic observables repeat twice per group period: twice the peak
  // spacing must reproduce 2*pi/w.
  const double rel_d = rel_err(2.0 * mean_spacing(peaks_d, dt), period);
  const double rel_n = rel_err(2.0 * mean_spacing(peaks_n, dt), period);

  const SU11Factors rec = su11_factors(c, period);
  const double recur =
      std::max(std::abs(rec.a0 - Complex(1.0, 0.0)), std::abs(rec.A_plus));

  TimeSeries amp_dr =
      integrate_moments(driven, TimeGrid{0.0, 0.01, 5000}, kPsi);
  TimeSeries amp_un = integrate_moments(un, TimeGrid{0.0, 0.01, 5000}, kPsi);
  const double ratio =
      amp_dr.rows.back().photons / amp_un.rows.back().photons;
  const double ratio_drift = rel_err(ratio, kFrozenDriveRatio);

  r.measured = std::max(rel_d, rel_n);
  r.pass = rel_d <= r.threshold && rel_n <= r.threshold && recur <= 1e-9 &&
           ratio >= 100.0 && ratio_drift <= 1e-9;
  r.detail = "peak-map period error: D=" + num(rel_d) + ", N=" + num(rel_n) +
             "; recurrence at 2pi/w: " + num(recur) +
             "; N ratio at t=50: " + num(ratio) + " (frozen drift " +
             num(ratio_drift) + ")";
  return r;
}

// ---------------------------------------------------------------------------
// 8. Small-time decay law of the witness.
CheckResult check_small_time_decay() {
  CheckResult r{8, "small-time-decay", false, 0.0, 0.01, ""};
  const SystemParams p = undriven_params();
  const DerivedCouplings c = derive_couplings(p);
  double worst = 0.0;
  for (int k = 1; k <= 48; ++k) {
    const double t = 0.25 * k;  // xi*t <= 0.01 at t <= 12
    const SqueezeState s = closed_form_state(p, c, t);
    const double ref = 2.0 * std::exp(-2.0 * c.xi * t);
    worst = std::max(worst, std::abs(closed_form_duan(s.r, s.epsilon) - ref) /
                                ref);
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = "max relative deviation of D(t) from 2 exp(-2 xi t) on (0,12]";
  return r;
}

// ---------------------------------------------------------------------------
// 9. Peak pair-creation factor: value and location.
CheckResult check_peak_squeeze() {
  CheckResult r{9, "peak-squeeze", false, 0.0, 1e-9, ""};
  const DerivedCouplings c = derive_couplings(default_params());
  const double half_sum = 0.5 * (c.eta1 + c.eta2);
  const double w = std::sqrt(half_sum * half_sum - c.xi * c.xi);
  const auto magnitude = [&c](double t) {
    return std::abs(su11_factors(c, t).A_plus);
  };
  // Coarse scan over one period, then golden-section refinement.
  const double period = 2.0 * std::numbers::pi / w;
  double best_t = 0.0;
  double best = -1.0;
  for (double t = 0.0; t <= period; t += 0.5) {
    const double v = magnitude(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  double lo = best_t - 1.0;
  double hi = best_t + 1.0;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = magnitude(x1);
  double f2 = magnitude(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = magnitude(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = magnitude(x1);
    }
  }
  const double t_peak = 0.5 * (lo + hi);
  const double peak = magnitude(t_peak);
  const double target = c.xi / half_sum;
  const double loc_err = std::abs(w * t_peak - 0.5 * std::numbers::pi);
  r.measured = std::abs(peak - target);
  r.pass = r.measured <= r.threshold && loc_err <= 1e-5 &&
           std::abs(target - kFrozenPeakSqueeze) <= 1e-15;
  r.detail = "max|A+|=" + num(peak) + " at w t=" + num(w * t_peak) +
             " (target " + num(target) + " at pi/2, location error " +
             num(loc_err) + " rad)";
  return r;
}

// ---------------------------------------------------------------------------
// 10. Three-level confinement vs the reduced generator.
CheckResult check_adiabatic_confinement() {
  CheckResult r{10, "adiabatic-confinement", false, 0.0, 0.05, ""};
  const SystemParams p = undriven_params();
  const DerivedCouplings c = derive_couplings(p);

  struct Sample {
    double n1, n2, duan;
  };

  // Reduced generator, dt = 0.01, samples every 1.0.
  std::vector<Sample> eff;
  {
    const FockLayout lo{10, 10, false};
    const OperatorMatrix H = build_effective_hamiltonian(p, c, lo);
    std::size_t step = 0;
    EvolveOptions opts;
    opts.observe_state = [&](double, const FockState& st) {
      if (step++ % 100 != 0) return;
      const Observables obs =
          observables_from_moments(moments_from_state(st), kPsi);
      eff.push_back({obs.n1, obs.n2, obs.duan});
    };
    evolve_state(H, basis_state(lo, 0, 0), 50.0, 0.01, opts);
  }

  // Three-level generator from the confined level, dt = 1e-4 (the detuning
  // sets the fast scale), samples every 1.0, level populations every 0.01.
  std::vector<Sample> full;
  double min_pb = 1.0;
  {
    const FockLayout lo{10, 10, true};
    const OperatorMatrix H = build_full_hamiltonian(p, lo);
    std::size_t step = 0;
    EvolveOptions opts;
    opts.observe_state = [&](double, const FockState& st) {
      const std::size_t k = step++;
      if (k % 100 == 0) {
        min_pb = std::min(min_pb, atom_level_populations(st)[1]);
      }
      if (k % 10000 == 0) {
        const Observables obs =
            observables_from_moments(moments_from_state(st), kPsi);
        full.push_back({obs.n1, obs.n2, obs.duan});
      }
    };
    evolve_state(H, basis_state(lo, 0, 0, 1), 50.0, 1e-4, opts);
  }

  double scale1 = 0.0;
  double scale2 = 0.0;
  for (const Sample& s : eff) {
    scale1 = std::max(scale1, s.n1);
    scale2 = std::max(scale2, s.n2);
  }
  // Occupations are compared relative to their window scale (they start at
  // zero, so a pointwise quotient is ill-posed at early times); the witness
  // stays near 2 and is compared pointwise.
  double worst_n = 0.0;
  double worst_d = 0.0;
  const std::size_t m = std::min(eff.size(), full.size());
  for (std::size_t k = 1; k < m; ++k) {
    worst_n = std::max({worst_n, std::abs(full[k].n1 - eff[k].n1) / scale1,
                        std::abs(full[k].n2 - eff[k].n2) / scale2});
    worst_d = std::max(worst_d,
                       std::abs(full[k].duan - eff[k].duan) /
                           std::abs(eff[k].duan));
  }
  r.measured = std::max(worst_n, worst_d);
  r.pass = min_pb >= 0.99 && r.measured <= r.threshold;
  r.detail = "min Pb=" + num(min_pb) + "; witness rel err=" + num(worst_d) +
             "; occupation err (window-scaled)=" + num(worst_n) +
             " - the three-level run tracks the reduced shape at roughly "
             "quarter amplitude, i.e. half-strength pair coupling";
  return r;
}

// ---------------------------------------------------------------------------
// 11. Fourth-order convergence of both integrators.
CheckResult check_integrator_order() {
  CheckResult r{11, "integrator-order", false, 0.0, 14.0, ""};

  // Moment engine against the exact closed forms at t = 100 (driven run).
  const SystemParams p = default_params();
  const DerivedCouplings c = derive_couplings(p);
  const MomentVector ref = closed_form_moments(p, c, 100.0);
  const auto moment_err = [&](double dt) {
    std::vector<MomentVector> traj;
    integrate_moments(
        p, TimeGrid{0.0, dt, static_cast<std::size_t>(100.0 / dt + 0.5)},
        kPsi, &traj);
    return max_moment_diff(traj.back(), ref);
  };
  const double em_coarse = moment_err(1.0);
  const double em_fine = moment_err(0.5);
  const double ratio_m = em_coarse / em_fine;

  // Density-operator engine against a fine moment run at t = 20.
  SystemParams pl = small_drive_params();
  pl.kappa = 0.02;
  std::vector<MomentVector> traj;
  integrate_moments(pl, TimeGrid{0.0, 0.005, 4000}, kPsi, &traj);
  const MomentVector ref_l = traj.back();
  const FockLayout lo{12, 12, false};
  const auto lindblad_err = [&](double dt) {
    DensityMatrix rho0;
    rho0.layout = lo;
    rho0.rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(lo.size()),
                                      static_cast<Eigen::Index>(lo.size()));
    rho0.rho(0, 0) = Complex(1.0, 0.0);
    const DensityMatrix out = evolve_lindblad(pl, rho0, 20.0, dt);
    return max_moment_diff(moments_from_state(out), ref_l);
  };
  const double el_coarse = lindblad_err(0.8);
  const double el_fine = lindblad_err(0.4);
  const double ratio_l = el_coarse / el_fine;

  r.measured = std::min(ratio_m, ratio_l);
  // Guard against vacuous ratios measured inside rounding noise: the finer
  // error of each pair must clear the accumulated roundoff of its reference
  // (~1e-15 per step over a few thousand steps) by a wide margin.
  const bool resolvable = em_fine > 1e-13 && el_fine > 1e-13;
  r.pass = ratio_m >= r.threshold && ratio_l >= r.threshold && resolvable;
  r.detail = "halving dt: moment errors " + num(em_coarse) + " -> " +
             num(em_fine) + " (x" + num(ratio_m) + "), density errors " +
             num(el_coarse) + " -> " + num(el_fine) + " (x" + num(ratio_l) +
             ")";
  return r;
}

}  // namespace

ValidateReport run_validate() {
  using Entry = std::pair<std::pair<int, const char*>,
                          std::function<CheckResult()>>;
  const std::vector<Entry> checks = {
      {{1, "oracle-undriven"}, check_oracle_undriven},
      {{2, "oracle-small-drives"}, check_oracle_small_drives},
      {{3, "moments-vs-closed"}, check_moments_vs_closed},
      {{4, "moments-vs-lindblad"}, check_moments_vs_lindblad},
      {{5, "drive-independence"}, check_drive_independence},
      {{6, "loss-ordering"}, check_loss_ordering},
      {{7, "oscillation-period"}, check_oscillation_period},
      {{8, "small-time-decay"}, check_small_time_decay},
      {{9, "peak-squeeze"}, check_peak_squeeze},
      {{10, "adiabatic-confinement"}, check_adiabatic_confinement},
      {{11, "integrator-order"}, check_integrator_order},
  };
  ValidateReport report;
  for (const auto& [meta, fn] : checks) {
    CheckResult result;
    try {
      result = fn();
    } catch (const std::exception& e) {
      result.id = meta.first;
      result.name = meta.second;
      result.pass = false;
      result.detail = std::string("threw: ") + e.what();
    }
    report.all_pass = report.all_pass && result.pass;
    report.checks.push_back(std::move(result));
  }
  return report;
}

void print_validate_report(const ValidateReport& report, std::ostream& out) {
  for (const CheckResult& c : report.checks) {
    char line[160];
    std::snprintf(line, sizeof(line), "%s %2d %-22s measured=%-12.6g tol=%g",
                  c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.measured,
                  c.threshold);
    out << line << "  " << c.detail << "\n";
  }
  out << (report.all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
}

std::string validate_report_json(const ValidateReport& report) {
  nlohmann::json j;
  j["all_pass"] = report.all_pass;
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    j["checks"].push_back({
        {"id", c.id},
        {"name", c.name},
        {"pass", c.pass},
        {"measured", c.measured},
        {"threshold", c.threshold},
        {"detail", c.detail},
    });
  }
  return j.dump(2);
}

}  // namespace cascade
