#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "cascade/errors.hpp"
#include "cascade/moments.hpp"
#include "cascade/params.hpp"

namespace cascade {

// Basis layout of the truncated tensor space. The flat index is row-major
// with the atom factor (when present) slowest:
//   index = (level * dim1 + n1) * dim2 + n2,   levels ordered a=0, b=1, c=2.
// This ordering is part of the binary-dump contract.
struct FockLayout {
  std::size_t dim1 = 0;
  std::size_t dim2 = 0;
  bool has_atom = false;

  std::size_t size() const { return (has_atom ? 3u : 1u) * dim1 * dim2; }
  std::size_t index(std::size_t level, std::size_t n1, std::size_t n2) const {
    return (level * dim1 + n1) * dim2 + n2;
  }
  bool operator==(const FockLayout&) const = default;
};

struct FockState {
  FockLayout layout;
  Eigen::VectorXcd amp;
};

// Field-only density operator (the damped model has no atom factor).
struct DensityMatrix {
  FockLayout layout;
  Eigen::MatrixXcd rho;
};

struct OperatorMatrix {
  FockLayout layout;
  Eigen::SparseMatrix<Complex> mat;
  bool hermitian = false;
};

// |level; n1, n2> basis vector. `level` must be 0 for field-only layouts.
FockState basis_state(const FockLayout& layout, std::size_t n1, std::size_t n2,
                      std::size_t level = 0);

// Adiabatic b-manifold Hamiltonian over the displaced modes
// t_j = a_j + Omega_j/g_j:
//   H = eta1 t1't1 + eta2 t2't2 + (eta1+eta2)/2 + xi (t1 t2 + t1't2').
// Field-only layout; throws DimensionTooSmall below 2 per mode.
OperatorMatrix build_effective_hamiltonian(const SystemParams& p,
                                           const DerivedCouplings& c,
                                           const FockLayout& layout);

// The same generator written in bare modes with explicit linear drive terms:
//   H = xi (a1 a2 + a1'a2') + eta1 n1 + eta2 n2 + L1 (a1 + a1')
//       + L2 (a2 + a2'),
// with L1 = eta1 Omega1/g1 + xi Omega2/g2 and L2 = eta2 Omega2/g2
// + xi Omega1/g1. Differs from build_effective_hamiltonian by a multiple of
// the identity (unit-tested), so both generate identical observables.
OperatorMatrix build_lindblad_hamiltonian(const SystemParams& p,
                                          const DerivedCouplings& c,
                                          const FockLayout& layout);

// Three-level interaction Hamiltonian (layout.has_atom required):
//   H = g1 (t1 s_bc + t1' s_cb) + g2 (t2 s_ab + t2' s_ba)
//       + Omega (s_ac + s_ca) - delta (s_aa + s_cc),
// where s_ij = |i><j| and t_j are the displaced modes above.
OperatorMatrix build_full_hamiltonian(const SystemParams& p,
                                      const FockLayout& layout);

struct EvolveOptions {
  double norm_tol = 1e-6;         // pure states: | ||psi||^2 - 1 | ceiling
  double trace_tol = 1e-8;        // density matrices: |tr rho - 1| ceiling
  double leak_threshold = 1e-10;  // mass in the top two layers, either mode
  // Invoked at every accepted step, including t = 0 and the final time.
  std::function<void(double t, const FockState&)> observe_state;
  std::function<void(double t, const DensityMatrix&)> observe_density;
};

struct EvolveReport {
  double peak_norm_drift = 0.0;
  double peak_trace_drift = 0.0;
  double peak_leakage = 0.0;
};

// |psi(t)> = exp(-iHt)|psi0> by fixed-step 4th-order integration. The norm
// and the Fock-tail mass are monitored every step (NormDrift,
// LeakageExceeded, NonFiniteState); the returned state is renormalized.
// H and psi0 must share a layout (DimensionMismatch).
FockState evolve_state(const OperatorMatrix& H, const FockState& psi0,
                       double t, double dt, const EvolveOptions& opts = {},
                       EvolveReport* report = nullptr);

// Damped evolution of the field density operator:
//   drho/dt = -i[H, rho] + kappa sum_i (2 a_i rho a_i' - n_i rho - rho n_i)
// with H from build_lindblad_hamiltonian. Fixed-step 4th order; rho is
// re-symmetrized every step; trace and tail mass are monitored (TraceDrift,
// LeakageExceeded, NonFiniteState).
DensityMatrix evolve_lindblad(const SystemParams& p, const DensityMatrix& rho0,
                              double t, double dt,
                              const EvolveOptions& opts = {},
                              EvolveReport* report = nullptr);

// Normalized truncated-lattice expansion of
//   exp(A_plus a1'a2') exp(alpha1 a1') exp(alpha2 a2') |0,0>.
// Requires |A_plus| < 1 (NonContractive); throws LeakageExceeded when the
// truncation holds more than `leak_threshold` of the result in its top two
// layers.
FockState construct_analytic_state(Complex alpha1, Complex alpha2,
                                   Complex A_plus, const FockLayout& layout,
                                   double leak_threshold = 1e-10);

// <a1>, <a2>, <a1'a1>, <a2'a2>, <a1 a2> by direct contraction. Atom factors
// are traced out.
MomentVector moments_from_state(const FockState& s);
MomentVector moments_from_state(const DensityMatrix& s);

// |<x|y>|^2. Layouts must match (DimensionMismatch).
double fidelity(const FockState& x, const FockState& y);

// Marginal probabilities (Pa, Pb, Pc); throws NoAtomFactor for field-only
// states.
std::array<double, 3> atom_level_populations(const FockState& s);

// Binary state dump, little-endian: the number of dims as u64 (2 field-only,
// 3 with atom), the dims as u64 (atom dim first when present), then the
// amplitudes as (Re, Im) f64 pairs in basis order.
void dump_state(const FockState& s, const std::string& path);
FockState load_state(const std::string& path);

}  // namespace cascade
