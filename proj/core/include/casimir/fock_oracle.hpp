#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "casimir/model.hpp"
#include "casimir/quantum_analytic.hpp"

namespace casimir {

/// Which product states |n, n'> of the free oscillators are kept.
/// EvenParity keeps n + n' even: the interaction changes n + n' by 0 or ±2,
/// so this block contains the ground state exactly and is four times cheaper
/// to diagonalize.
enum class Sector { Full, EvenParity };

struct Occupation {
  int n = 0;
  int n_prime = 0;

  friend bool operator==(const Occupation&, const Occupation&) = default;
};

/// Product Fock basis with a per-mode cutoff n, n' <= n_max.
class TruncatedBasis {
 public:
  explicit TruncatedBasis(int n_max, Sector sector = Sector::Full);

  int n_max() const noexcept { return n_max_; }
  Sector sector() const noexcept { return sector_; }
  std::size_t dimension() const noexcept { return states_.size(); }

  /// Flat index of |n, n'>, or nullopt when the state is not in the basis.
  std::optional<std::size_t> index(int n, int n_prime) const noexcept;
  const Occupation& state(std::size_t i) const { return states_.at(i); }

 private:
  int n_max_;
  Sector sector_;
  std::vector<Occupation> states_;
  std::vector<std::ptrdiff_t> lookup_;  // (n_max+1)^2 grid, -1 when excluded
};

enum class OperatorLabel { H, X1X2, N1, N2, XPlusSq, XMinusSq };

struct OperatorMatrix {
  OperatorLabel label = OperatorLabel::H;
  TruncatedBasis basis{1};
  Eigen::MatrixXd matrix;

  double max_asymmetry() const;
};

/// H = ħω(N1 + N2 + 1) + g(y) X1 X2 with X_j = sqrt(ħ/2mω)(a_j† + a_j),
/// ω = sqrt(k/m) the free frequency.
OperatorMatrix build_hamiltonian(const ValidatedModel& model, double y, const TruncatedBasis& basis);

/// Exact matrix elements of the operator restricted to the basis (x_j^2 is
/// built from (a†)^2 + a^2 + 2N + 1, not as a product of truncated X_j).
OperatorMatrix build_operator(OperatorLabel label, const ValidatedModel& model, double y,
                              const TruncatedBasis& basis);

struct GroundStateResult {
  double energy = 0.0;
  Eigen::VectorXd amplitudes;  // c_{nn'} over the basis, unit norm, c_00 > 0
  double residual_norm = 0.0;  // ||H v - E v||
  TruncatedBasis basis{1};

  int n_max() const noexcept { return basis.n_max(); }
  /// c_{nn'}; zero for states outside the basis.
  double amplitude(int n, int n_prime) const noexcept;
};

/// Lowest eigenpair via LAPACK dsyevr. Throws NoConvergence on solver failure
/// and InvalidArgument for a non-symmetric input.
GroundStateResult ground_state(const OperatorMatrix& hamiltonian);

struct OracleObservables {
  VacuumObservables values;
  double force = 0.0;  // -g'(y) <x1 x2>
  GroundStateResult ground;
};

OracleObservables oracle_observables(const ValidatedModel& model, double y, const TruncatedBasis& basis);

/// ||a|0~>|| for the simplified transformation a = α(a1+a2) + β(a1†+a2†)
/// applied to sum_n c_n |n,n>, restricted to rows with n, n' <= n_max - 1.
/// Requires a Full basis with expansion.n_max <= basis.n_max().
double verify_annihilation(const VacuumExpansion& expansion, const TruncatedBasis& basis);

struct PairAmplitude {
  int n = 0;
  double oracle_ratio = 0.0;     // c_nn / c_00
  double predicted_ratio = 0.0;  // (-β/α)^n of the one-branch expansion
};

struct StructureReport {
  double symmetry_violation = 0.0;  // max |c_nn' - c_n'n|
  double odd_parity_mass = 0.0;     // sum over n+n' odd of c_nn'^2
  std::vector<PairAmplitude> pairs;
  /// max |oracle_ratio - predicted_ratio| / |predicted_ratio| over reported
  /// pairs; reported, not asserted.
  double max_pair_deviation = 0.0;

  bool exchange_symmetric(double tol = 1e-10) const noexcept { return symmetry_violation < tol; }
  bool parity_clean(double tol = 1e-20) const noexcept { return odd_parity_mass < tol; }
};

/// predicted_ratio is β/α of the one-branch expansion; pass NaN to skip the
/// pair comparison.
StructureReport ground_state_structure_checks(const GroundStateResult& result, double predicted_ratio);

/// <ψ|x1 x2|ψ> for |ψ> = |0>_1 ⊗ |ψ2>, in units of ħ/(2mω). psi2 has
/// n_max + 1 entries and unit norm.
double free_vacuum_correlation(const TruncatedBasis& basis, std::span<const double> psi2);

}  // namespace casimir
