#include "cascade/fock.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include "cascade/detail/rk4.hpp"

namespace cascade {

namespace {

using Eigen::Index;
using Triplet = Eigen::Triplet<Complex>;

const Complex kMinusI{0.0, -1.0};

// std::to_string renders tiny monitor readings as 0.000000; use scientific.
std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

void require_field_layout(const FockLayout& layout, const char* who) {
  if (layout.has_atom) {
    throw SimError(ErrorCode::ConstraintViolation,
                   std::string(who) + " expects a field-only layout");
  }
}

void require_min_dims(const FockLayout& layout) {
  if (layout.dim1 < 2 || layout.dim2 < 2) {
    throw SimError(ErrorCode::DimensionTooSmall,
                   "need at least 2 Fock levels per mode");
  }
}

// The three-level generator is well defined even where the adiabatic
// reduction degenerates (delta == Omega), so it only needs the raw-input
// checks, not the full derived-coupling validation.
void require_raw_inputs(const SystemParams& p) {
  const double values[] = {p.g1, p.g2, p.Omega, p.Omega1, p.Omega2, p.delta};
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw SimError(ErrorCode::NonFiniteInput,
                     "system parameters must be finite");
    }
  }
  if (p.g1 <= 0.0 || p.g2 <= 0.0) {
    throw SimError(ErrorCode::NegativeRate, "g1 and g2 must be > 0");
  }
}

// Mass held in the top two Fock layers of either mode; the larger of the two
// modes' tails is compared against the leakage threshold.
double tail_mass(const FockLayout& lo, const Eigen::VectorXcd& amp) {
  const std::size_t levels = lo.has_atom ? 3 : 1;
  double tail1 = 0.0;
  double tail2 = 0.0;
  for (std::size_t l = 0; l < levels; ++l) {
    for (std::size_t n1 = lo.dim1 - 2; n1 < lo.dim1; ++n1) {
      tail1 += amp.segment(static_cast<Index>(lo.index(l, n1, 0)),
                           static_cast<Index>(lo.dim2))
                   .squaredNorm();
    }
    for (std::size_t n1 = 0; n1 < lo.dim1; ++n1) {
      for (std::size_t n2 = lo.dim2 - 2; n2 < lo.dim2; ++n2) {
        tail2 += std::norm(amp[static_cast<Index>(lo.index(l, n1, n2))]);
      }
    }
  }
  return std::max(tail1, tail2);
}

double tail_mass(const FockLayout& lo, const Eigen::MatrixXcd& rho) {
  double tail1 = 0.0;
  double tail2 = 0.0;
  for (std::size_t n1 = 0; n1 < lo.dim1; ++n1) {
    for (std::size_t n2 = 0; n2 < lo.dim2; ++n2) {
      const auto i = static_cast<Index>(lo.index(0, n1, n2));
      const double p = rho(i, i).real();
      if (n1 >= lo.dim1 - 2) tail1 += p;
      if (n2 >= lo.dim2 - 2) tail2 += p;
    }
  }
  return std::max(tail1, tail2);
}

// Shared quadratic form of the b-manifold generator over bare operators:
//   xi (a1 a2 + a1'a2') + eta1 n1 + eta2 n2 + L1 (a1 + a1') + L2 (a2 + a2')
//   + constant.
OperatorMatrix quadratic_hamiltonian(const DerivedCouplings& c, double L1,
                                     double L2, double constant,
                                     const FockLayout& layout) {
  require_min_dims(layout);
  const std::size_t d1 = layout.dim1;
  const std::size_t d2 = layout.dim2;
  std::vector<Triplet> trip;
  trip.reserve(7 * d1 * d2);
  for (std::size_t n1 = 0; n1 < d1; ++n1) {
    for (std::size_t n2 = 0; n2 < d2; ++n2) {
      const auto i = static_cast<int>(layout.index(0, n1, n2));
      const double diag = c.eta1 * static_cast<double>(n1) +
                          c.eta2 * static_cast<double>(n2) + constant;
      if (diag != 0.0) trip.emplace_back(i, i, Complex(diag, 0.0));
      if (n1 >= 1) {  // L1 a1 and its adjoint
        const auto j = static_cast<int>(layout.index(0, n1 - 1, n2));
        const double v = L1 * std::sqrt(static_cast<double>(n1));
        if (v != 0.0) {
          trip.emplace_back(j, i, Complex(v, 0.0));
          trip.emplace_back(i, j, Complex(v, 0.0));
        }
      }
      if (n2 >= 1) {  // L2 a2 and its adjoint
        const auto j = static_cast<int>(layout.index(0, n1, n2 - 1));
        const double v = L2 * std::sqrt(static_cast<double>(n2));
        if (v != 0.0) {
          trip.emplace_back(j, i, Complex(v, 0.0));
          trip.emplace_back(i, j, Complex(v, 0.0));
        }
      }
      if (n1 >= 1 && n2 >= 1) {  // xi a1 a2 and its adjoint
        const auto j = static_cast<int>(layout.index(0, n1 - 1, n2 - 1));
        const double v =
            c.xi * std::sqrt(static_cast<double>(n1) * static_cast<double>(n2));
        if (v != 0.0) {
          trip.emplace_back(j, i, Complex(v, 0.0));
          trip.emplace_back(i, j, Complex(v, 0.0));
        }
      }
    }
  }
  OperatorMatrix op;
  op.layout = layout;
  op.mat.resize(static_cast<Index>(layout.size()),
                static_cast<Index>(layout.size()));
  op.mat.setFromTriplets(trip.begin(), trip.end());
  op.hermitian = true;
  return op;
}

struct DriveTerms {
  double L1 = 0.0;
  double L2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
};

DriveTerms drive_terms(const SystemParams& p, const DerivedCouplings& c) {
  DriveTerms d;
  d.beta1 = p.Omega1 / p.g1;
  d.beta2 = p.Omega2 / p.g2;
  d.L1 = c.eta1 * d.beta1 + c.xi * d.beta2;
  d.L2 = c.eta2 * d.beta2 + c.xi * d.beta1;
  return d;
}

void require_unit_norm(const Eigen::VectorXcd& amp, double tol) {
  if (std::abs(amp.squaredNorm() - 1.0) > tol) {
    throw SimError(ErrorCode::NormDrift, "initial state is not normalized");
  }
}

void check_pure_step(const FockLayout& lo, const Eigen::VectorXcd& amp,
                     const EvolveOptions& opts, EvolveReport* report) {
  if (!amp.allFinite()) {
    throw SimError(ErrorCode::NonFiniteState,
                   "state evolution produced a non-finite amplitude");
  }
  const double drift = std::abs(amp.squaredNorm() - 1.0);
  const double leak = tail_mass(lo, amp);
  if (report) {
    report->peak_norm_drift = std::max(report->peak_norm_drift, drift);
    report->peak_leakage = std::max(report->peak_leakage, leak);
  }
  if (drift > opts.norm_tol) {
    throw SimError(ErrorCode::NormDrift,
                   "norm drift " + sci(drift) +
                       " exceeds tolerance; reduce dt");
  }
  if (leak > opts.leak_threshold) {
    throw SimError(ErrorCode::LeakageExceeded,
                   "Fock-tail mass " + sci(leak) +
                       " exceeds threshold; enlarge the truncation");
  }
}

// Number of full steps and the (possibly zero) remainder needed to land
// exactly on t.
std::pair<std::size_t, double> split_interval(double t, double dt) {
  if (!(dt > 0.0) || !(t >= 0.0) || !std::isfinite(t) || !std::isfinite(dt)) {
    throw SimError(ErrorCode::ConstraintViolation,
                   "evolution needs t >= 0 and dt > 0");
  }
  const double raw = t / dt;
  auto full = static_cast<std::size_t>(raw + 1e-9);
  double rem = t - static_cast<double>(full) * dt;
  if (rem < 1e-12 * std::max(1.0, t)) rem = 0.0;
  return {full, rem};
}

}  // namespace

FockState basis_state(const FockLayout& layout, std::size_t n1, std::size_t n2,
                      std::size_t level) {
  require_min_dims(layout);
  const std::size_t levels = layout.has_atom ? 3 : 1;
  if (n1 >= layout.dim1 || n2 >= layout.dim2 || level >= levels) {
    throw SimError(ErrorCode::DimensionMismatch,
                   "basis index outside the truncation");
  }
  FockState s;
  s.layout = layout;
  s.amp = Eigen::VectorXcd::Zero(static_cast<Index>(layout.size()));
  s.amp[static_cast<Index>(layout.index(level, n1, n2))] = Complex(1.0, 0.0);
  return s;
}

OperatorMatrix build_effective_hamiltonian(const SystemParams& p,
                                           const DerivedCouplings& c,
                                           const FockLayout& layout) {
  require_field_layout(layout, "build_effective_hamiltonian");
  const DriveTerms d = drive_terms(p, c);
  const double constant = 0.5 * (c.eta1 + c.eta2) + c.eta1 * d.beta1 * d.beta1 +
                          c.eta2 * d.beta2 * d.beta2 +
                          2.0 * c.xi * d.beta1 * d.beta2;
  return quadratic_hamiltonian(c, d.L1, d.L2, constant, layout);
}

OperatorMatrix build_lindblad_hamiltonian(const SystemParams& p,
                                          const DerivedCouplings& c,
                                          const FockLayout& layout) {
  require_field_layout(layout, "build_lindblad_hamiltonian");
  const DriveTerms d = drive_terms(p, c);
  return quadratic_hamiltonian(c, d.L1, d.L2, 0.0, layout);
}

OperatorMatrix build_full_hamiltonian(const SystemParams& p,
                                      const FockLayout& layout) {
  if (!layout.has_atom) {
    throw SimError(ErrorCode::ConstraintViolation,
                   "build_full_hamiltonian expects an atom factor");
  }
  require_min_dims(layout);
  require_raw_inputs(p);
  constexpr std::size_t kA = 0;
  constexpr std::size_t kB = 1;
  constexpr std::size_t kC = 2;
  const std::size_t d1 = layout.dim1;
  const std::size_t d2 = layout.dim2;
  std::vector<Triplet> trip;
  trip.reserve(10 * d1 * d2);
  auto add_sym = [&trip](std::size_t r, std::size_t cIdx, double v) {
    if (v == 0.0) return;
    trip.emplace_back(static_cast<int>(r), static_cast<int>(cIdx),
                      Complex(v, 0.0));
    trip.emplace_back(static_cast<int>(cIdx), static_cast<int>(r),
                      Complex(v, 0.0));
  };
  for (std::size_t n1 = 0; n1 < d1; ++n1) {
    for (std::size_t n2 = 0; n2 < d2; ++n2) {
      // -delta on levels a and c.
      for (std::size_t l : {kA, kC}) {
        const std::size_t i = layout.index(l, n1, n2);
        trip.emplace_back(static_cast<int>(i), static_cast<int>(i),
                          Complex(-p.delta, 0.0));
      }
      // Omega (s_ac + s_ca).
      add_sym(layout.index(kA, n1, n2), layout.index(kC, n1, n2), p.Omega);
      // g1 (a1 + Omega1/g1) s_bc and adjoint: photon exchange with c <-> b.
      add_sym(layout.index(kB, n1, n2), layout.index(kC, n1, n2), p.Omega1);
      if (n1 >= 1) {
        add_sym(layout.index(kB, n1 - 1, n2), layout.index(kC, n1, n2),
                p.g1 * std::sqrt(static_cast<double>(n1)));
      }
      // g2 (a2 + Omega2/g2) s_ab and adjoint: photon exchange with b <-> a.
      add_sym(layout.index(kA, n1, n2), layout.index(kB, n1, n2), p.Omega2);
      if (n2 >= 1) {
        add_sym(layout.index(kA, n1, n2 - 1), layout.index(kB, n1, n2),
                p.g2 * std::sqrt(static_cast<double>(n2)));
      }
    }
  }
  OperatorMatrix op;
  op.layout = layout;
  op.mat.resize(static_cast<Index>(layout.size()),
                static_cast<Index>(layout.size()));
  op.mat.setFromTriplets(trip.begin(), trip.end());
  op.hermitian = true;
  return op;
}

FockState evolve_state(const OperatorMatrix& H, const FockState& psi0,
                       double t, double dt, const EvolveOptions& opts,
                       EvolveReport* report) {
  if (!(H.layout == psi0.layout)) {
    throw SimError(ErrorCode::DimensionMismatch,
                   "operator and state layouts differ");
  }
  if (!H.hermitian) {
    throw SimError(ErrorCode::ConstraintViolation,
                   "evolve_state needs a Hermitian generator");
  }
  require_unit_norm(psi0.amp, opts.norm_tol);
  const auto [full, rem] = split_interval(t, dt);

  const auto rhs = [&H](const Eigen::VectorXcd& y) {
    return Eigen::VectorXcd(kMinusI * (H.mat * y));
  };

  FockState s = psi0;
  check_pure_step(s.layout, s.amp, opts, report);
  if (opts.observe_state) opts.observe_state(0.0, s);
  for (std::size_t k = 0; k < full; ++k) {
    s.amp = detail::rk4_step(rhs, s.amp, dt);
    check_pure_step(s.layout, s.amp, opts, report);
    if (opts.observe_state) {
      opts.observe_state(static_cast<double>(k + 1) * dt, s);
    }
  }
  if (rem > 0.0) {
    s.amp = detail::rk4_step(rhs, s.amp, rem);
    check_pure_step(s.layout, s.amp, opts, report);
    if (opts.observe_state) opts.observe_state(t, s);
  }
  s.amp /= s.amp.norm();
  return s;
}

DensityMatrix evolve_lindblad(const SystemParams& p, const DensityMatrix& rho0,
                              double t, double dt, const EvolveOptions& opts,
                              EvolveReport* report) {
  require_field_layout(rho0.layout, "evolve_lindblad");
  require_min_dims(rho0.layout);
  const FockLayout lo = rho0.layout;
  const auto n = static_cast<Index>(lo.size());
  if (rho0.rho.rows() != n || rho0.rho.cols() != n) {
    throw SimError(ErrorCode::DimensionMismatch,
                   "density matrix does not match its layout");
  }
  const DerivedCouplings c = derive_couplings(p);
  const OperatorMatrix H = build_lindblad_hamiltonian(p, c, lo);

  // Sparse mode annihilators and occupation diagonals for the dissipator.
  std::vector<Triplet> t1, t2;
  Eigen::VectorXd occ1(n), occ2(n);
  for (std::size_t n1 = 0; n1 < lo.dim1; ++n1) {
    for (std::size_t n2 = 0; n2 < lo.dim2; ++n2) {
      const auto i = static_cast<Index>(lo.index(0, n1, n2));
      occ1[i] = static_cast<double>(n1);
      occ2[i] = static_cast<double>(n2);
      if (n1 >= 1) {
        t1.emplace_back(static_cast<int>(lo.index(0, n1 - 1, n2)),
                        static_cast<int>(i),
                        Complex(std::sqrt(static_cast<double>(n1)), 0.0));
      }
      if (n2 >= 1) {
        t2.emplace_back(static_cast<int>(lo.index(0, n1, n2 - 1)),
                        static_cast<int>(i),
                        Complex(std::sqrt(static_cast<double>(n2)), 0.0));
      }
    }
  }
  Eigen::SparseMatrix<Complex> a1(n, n), a2(n, n);
  a1.setFromTriplets(t1.begin(), t1.end());
  a2.setFromTriplets(t2.begin(), t2.end());
  const Eigen::VectorXd occ = occ1 + occ2;

  const double kappa = p.kappa;
  const auto rhs = [&](const Eigen::MatrixXcd& r) {
    Eigen::MatrixXcd d = kMinusI * (H.mat * r - r * H.mat);
    if (kappa != 0.0) {
      d.noalias() += (2.0 * kappa) * (a1 * (r * a1.adjoint()));
      d.noalias() += (2.0 * kappa) * (a2 * (r * a2.adjoint()));
      d.noalias() -= kappa * (occ.asDiagonal() * r);
      d.noalias() -= kappa * (r * occ.asDiagonal());
    }
    return d;
  };

  const auto check = [&](const Eigen::MatrixXcd& r) {
    if (!r.allFinite()) {
      throw SimError(ErrorCode::NonFiniteState,
                     "density evolution produced a non-finite entry");
    }
    const double drift = std::abs(r.trace().real() - 1.0);
    const double leak = tail_mass(lo, r);
    if (report) {
      report->peak_trace_drift = std::max(report->peak_trace_drift, drift);
      report->peak_leakage = std::max(report->peak_leakage, leak);
    }
    if (drift > opts.trace_tol) {
      throw SimError(ErrorCode::TraceDrift,
                     "trace drift " + sci(drift) +
                         " exceeds tolerance; reduce dt");
    }
    if (leak > opts.leak_threshold) {
      throw SimError(ErrorCode::LeakageExceeded,
                     "Fock-tail mass " + sci(leak) +
                         " exceeds threshold; enlarge the truncation");
    }
  };

  const auto [full, rem] = split_interval(t, dt);
  DensityMatrix out;
  out.layout = lo;
  out.rho = rho0.rho;
  check(out.rho);
  if (opts.observe_density) opts.observe_density(0.0, out);
  const auto advance = [&](double step, double now) {
    out.rho = detail::rk4_step(rhs, out.rho, step);
    out.rho = 0.5 * (out.rho + out.rho.adjoint().eval());
    check(out.rho);
    if (opts.observe_density) opts.observe_density(now, out);
  };
  for (std::size_t k = 0; k < full; ++k) {
    advance(dt, static_cast<double>(k + 1) * dt);
  }
  if (rem > 0.0) advance(rem, t);
  out.rho /= out.rho.trace().real();
  return out;
}

FockState construct_analytic_state(Complex alpha1, Complex alpha2,
                                   Complex A_plus, const FockLayout& layout,
                                   double leak_threshold) {
  require_field_layout(layout, "construct_analytic_state");
  require_min_dims(layout);
  if (std::abs(A_plus) >= 1.0) {
    throw SimError(ErrorCode::NonContractive,
                   "pair-creation factor must have modulus < 1");
  }
  const std::size_t d1 = layout.dim1;
  const std::size_t d2 = layout.dim2;
  const std::size_t dmax = std::max(d1, d2);
  if (dmax > 170) {
    throw SimError(ErrorCode::ConstraintViolation,
                   "truncation too large for the direct series expansion");
  }
  std::vector<double> fact(dmax);
  fact[0] = 1.0;
  for (std::size_t m = 1; m < dmax; ++m) {
    fact[m] = fact[m - 1] * static_cast<double>(m);
  }
  const auto powers = [](Complex z, std::size_t count) {
    std::vector<Complex> pw(count);
    pw[0] = Complex(1.0, 0.0);
    for (std::size_t m = 1; m < count; ++m) pw[m] = pw[m - 1] * z;
    return pw;
  };
  const std::vector<Complex> pw1 = powers(alpha1, d1);
  const std::vector<Complex> pw2 = powers(alpha2, d2);
  const std::vector<Complex> pwA = powers(A_plus, std::min(d1, d2));

  FockState s;
  s.layout = layout;
  s.amp.resize(static_cast<Index>(layout.size()));
  for (std::size_t pIdx = 0; pIdx < d1; ++pIdx) {
    for (std::size_t q = 0; q < d2; ++q) {
      Complex sum{0.0, 0.0};
      const std::size_t kmax = std::min(pIdx, q);
      for (std::size_t k = 0; k <= kmax; ++k) {
        sum += pwA[k] / fact[k] * pw1[pIdx - k] * pw2[q - k] *
               (std::sqrt(fact[pIdx] * fact[q]) /
                (fact[pIdx - k] * fact[q - k]));
      }
      s.amp[static_cast<Index>(layout.index(0, pIdx, q))] = sum;
    }
  }
  const double nrm = s.amp.norm();
  if (!(nrm > 0.0) || !s.amp.allFinite()) {
    throw SimError(ErrorCode::NonFiniteState,
                   "state series failed to normalize");
  }
  s.amp /= nrm;
  const double leak = tail_mass(layout, s.amp);
  if (leak > leak_threshold) {
    throw SimError(ErrorCode::LeakageExceeded,
                   "Fock-tail mass " + sci(leak) +
                       " exceeds threshold; enlarge the truncation");
  }
  return s;
}

MomentVector moments_from_state(const FockState& s) {
  const FockLayout& lo = s.layout;
  const std::size_t levels = lo.has_atom ? 3 : 1;
  MomentVector m;
  double norm2 = 0.0;
  for (std::size_t l = 0; l < levels; ++l) {
    for (std::size_t n1 = 0; n1 < lo.dim1; ++n1) {
      for (std::size_t n2 = 0; n2 < lo.dim2; ++n2) {
        const Complex amp = s.amp[static_cast<Index>(lo.index(l, n1, n2))];
        const double w = std::norm(amp);
        norm2 += w;
        m.n1 += static_cast<double>(n1) * w;
        m.n2 += static_cast<double>(n2) * w;
        if (n1 >= 1) {
          m.a1 += std::conj(s.amp[static_cast<Index>(lo.index(l, n1 - 1, n2))]) *
                  std::sqrt(static_cast<double>(n1)) * amp;
        }
        if (n2 >= 1) {
          m.a2 += std::conj(s.amp[static_cast<Index>(lo.index(l, n1, n2 - 1))]) *
                  std::sqrt(static_cast<double>(n2)) * amp;
        }
        if (n1 >= 1 && n2 >= 1) {
          m.c12 +=
              std::conj(s.amp[static_cast<Index>(lo.index(l, n1 - 1, n2 - 1))]) *
              std::sqrt(static_cast<double>(n1) * static_cast<double>(n2)) *
              amp;
        }
      }
    }
  }
  if (norm2 <= 0.0) {
    throw SimError(ErrorCode::NonFiniteState, "state has zero norm");
  }
  return (1.0 / norm2) * m;
}

MomentVector moments_from_state(const DensityMatrix& s) {
  const FockLayout& lo = s.layout;
  MomentVector m;
  double tr = 0.0;
  for (std::size_t n1 = 0; n1 < lo.dim1; ++n1) {
    for (std::size_t n2 = 0; n2 < lo.dim2; ++n2) {
      const auto i = static_cast<Index>(lo.index(0, n1, n2));
      const double pDiag = s.rho(i, i).real();
      tr += pDiag;
      m.n1 += static_cast<double>(n1) * pDiag;
      m.n2 += static_cast<double>(n2) * pDiag;
      if (n1 >= 1) {
        m.a1 += std::sqrt(static_cast<double>(n1)) *
                s.rho(i, static_cast<Index>(lo.index(0, n1 - 1, n2)));
      }
      if (n2 >= 1) {
        m.a2 += std::sqrt(static_cast<double>(n2)) *
                s.rho(i, static_cast<Index>(lo.index(0, n1, n2 - 1)));
      }
      if (n1 >= 1 && n2 >= 1) {
        m.c12 += std::sqrt(static_cast<double>(n1) * static_cast<double>(n2)) *
                 s.rho(i, static_cast<Index>(lo.index(0, n1 - 1, n2 - 1)));
      }
    }
  }
  if (tr <= 0.0) {
    throw SimError(ErrorCode::NonFiniteState, "density matrix has zero trace");
  }
  return (1.0 / tr) * m;
}

double fidelity(const FockState& x, const FockState& y) {
  if (!(x.layout == y.layout)) {
    throw SimError(ErrorCode::DimensionMismatch, "state layouts differ");
  }
  const double nx = x.amp.squaredNorm();
  const double ny = y.amp.squaredNorm();
  if (nx <= 0.0 || ny <= 0.0) {
    throw SimError(ErrorCode::NonFiniteState, "state has zero norm");
  }
  return std::norm(x.amp.dot(y.amp)) / (nx * ny);
}

std::array<double, 3> atom_level_populations(const FockState& s) {
  if (!s.layout.has_atom) {
    throw SimError(ErrorCode::NoAtomFactor,
                   "state has no atom factor to marginalize");
  }
  const auto block = static_cast<Index>(s.layout.dim1 * s.layout.dim2);
  std::array<double, 3> pops{};
  double norm2 = 0.0;
  for (Index l = 0; l < 3; ++l) {
    pops[static_cast<std::size_t>(l)] = s.amp.segment(l * block, block).squaredNorm();
    norm2 += pops[static_cast<std::size_t>(l)];
  }
  if (norm2 <= 0.0) {
    throw SimError(ErrorCode::NonFiniteState, "state has zero norm");
  }
  for (double& pop : pops) pop /= norm2;
  return pops;
}

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

void put_f64(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(out, bits);
}

std::uint64_t get_u64(std::istream& in) {
  char buf[8];
  in.read(buf, 8);
  if (!in) {
    throw SimError(ErrorCode::MalformedValue, "truncated state dump");
  }
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i]))
         << (8 * i);
  }
  return v;
}

double get_f64(std::istream& in) {
  const std::uint64_t bits = get_u64(in);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void dump_state(const FockState& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw SimError(ErrorCode::MalformedValue, "cannot open for write: " + path);
  }
  put_u64(out, s.layout.has_atom ? 3 : 2);
  if (s.layout.has_atom) put_u64(out, 3);
  put_u64(out, s.layout.dim1);
  put_u64(out, s.layout.dim2);
  for (Index i = 0; i < s.amp.size(); ++i) {
    put_f64(out, s.amp[i].real());
    put_f64(out, s.amp[i].imag());
  }
  if (!out.good()) {
    throw SimError(ErrorCode::MalformedValue, "write failed: " + path);
  }
}

FockState load_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SimError(ErrorCode::MalformedValue, "cannot open for read: " + path);
  }
  const std::uint64_t ndims = get_u64(in);
  if (ndims != 2 && ndims != 3) {
    throw SimError(ErrorCode::MalformedValue,
                   "state dump must carry 2 or 3 dims");
  }
  FockState s;
  s.layout.has_atom = (ndims == 3);
  if (s.layout.has_atom && get_u64(in) != 3) {
    throw SimError(ErrorCode::MalformedValue, "atom dimension must be 3");
  }
  s.layout.dim1 = get_u64(in);
  s.layout.dim2 = get_u64(in);
  if (s.layout.dim1 < 2 || s.layout.dim2 < 2 ||
      s.layout.size() > (1u << 24)) {
    throw SimError(ErrorCode::MalformedValue, "implausible dims in state dump");
  }
  s.amp.resize(static_cast<Index>(s.layout.size()));
  for (Index i = 0; i < s.amp.size(); ++i) {
    const double re = get_f64(in);
    const double im = get_f64(in);
    s.amp[i] = Complex(re, im);
  }
  in.peek();
  if (!in.eof()) {
    throw SimError(ErrorCode::MalformedValue, "trailing bytes in state dump");
  }
  return s;
}

}  // namespace cascade
