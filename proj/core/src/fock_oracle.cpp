#include "casimir/fock_oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

TruncatedBasis::TruncatedBasis(int n_max, Sector sector) : n_max_(n_max), sector_(sector) {
  if (n_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "basis cutoff n_max must be >= 1");
  }
  const auto side = static_cast<std::size_t>(n_max + 1);
  lookup_.assign(side * side, -1);
  for (int n = 0; n <= n_max; ++n) {
    for (int np = 0; np <= n_max; ++np) {
      if (sector == Sector::EvenParity && (n + np) % 2 != 0) continue;
      lookup_[static_cast<std::size_t>(n) * side + static_cast<std::size_t>(np)] =
          static_cast<std::ptrdiff_t>(states_.size());
      states_.push_back({n, np});
    }
  }
}

std::optional<std::size_t> TruncatedBasis::index(int n, int n_prime) const noexcept {
  if (n < 0 || n_prime < 0 || n > n_max_ || n_prime > n_max_) return std::nullopt;
  const auto side = static_cast<std::size_t>(n_max_ + 1);
  const std::ptrdiff_t i = lookup_[static_cast<std::size_t>(n) * side + static_cast<std::size_t>(n_prime)];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

double OperatorMatrix::max_asymmetry() const {
  return (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
}

namespace {

// <n+d|(a† + a)|n> for d = ±1
double ladder(int n, int d) { return d > 0 ? std::sqrt(n + 1.0) : std::sqrt(static_cast<double>(n)); }

// (a† + a) on mode 1 times (a† + a) on mode 2, dimensionless.
void add_x1x2(Eigen::MatrixXd& out, const TruncatedBasis& basis, double scale) {
  for (std::size_t j = 0; j < basis.dimension(); ++j) {
    const Occupation s = basis.state(j);
    for (int d1 : {-1, 1}) {
      for (int d2 : {-1, 1}) {
        const auto i = basis.index(s.n + d1, s.n_prime + d2);
        if (!i) continue;
        out(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(j)) +=
            scale * ladder(s.n, d1) * ladder(s.n_prime, d2);
      }
    }
  }
}

// (a† + a)^2 = a†^2 + a^2 + 2N + 1 on one mode, dimensionless.
void add_x_sq(Eigen::MatrixXd& out, const TruncatedBasis& basis, int mode, double scale) {
  for (std::size_t j = 0; j < basis.dimension(); ++j) {
    const Occupation s = basis.state(j);
    const int n = mode == 1 ? s.n : s.n_prime;
    const auto col = static_cast<Eigen::Index>(j);
    out(col, col) += scale * (2.0 * n + 1.0);
    for (int d : {-2, 2}) {
      const int target = n + d;
      if (target < 0) continue;
      const auto i = mode == 1 ? basis.index(target, s.n_prime) : basis.index(s.n, target);
      if (!i) continue;
      const double element = d > 0 ? std::sqrt((n + 1.0) * (n + 2.0)) : std::sqrt(n * (n - 1.0));
      out(static_cast<Eigen::Index>(*i), col) += scale * element;
    }
  }
}

double expectation(const Eigen::MatrixXd& op, const Eigen::VectorXd& v) { return v.dot(op * v); }

double relative_scale(const Eigen::MatrixXd& m) {
  const double s = m.cwiseAbs().maxCoeff();
  return s > 0.0 ? s : 1.0;
}

}  // namespace

OperatorMatrix build_operator(OperatorLabel label, const ValidatedModel& model, double y,
                              const TruncatedBasis& basis) {
  const double g = coupling_value(model.coupling(), y);
  const double omega = std::sqrt(model.k() / model.m());
  const double length_sq = model.hbar() / (2.0 * model.m() * omega);

  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  OperatorMatrix op{label, basis, Eigen::MatrixXd::Zero(dim, dim)};
  Eigen::MatrixXd& a = op.matrix;

  switch (label) {
    case OperatorLabel::H:
      for (Eigen::Index i = 0; i < dim; ++i) {
        const Occupation s = basis.state(static_cast<std::size_t>(i));
        a(i, i) = model.hbar() * omega * (s.n + s.n_prime + 1.0);
      }
      if (g != 0.0) add_x1x2(a, basis, g * length_sq);
      break;
    case OperatorLabel::X1X2:
      add_x1x2(a, basis, length_sq);
      break;
    case OperatorLabel::N1:
    case OperatorLabel::N2:
      for (Eigen::Index i = 0; i < dim; ++i) {
        const Occupation s = basis.state(static_cast<std::size_t>(i));
        a(i, i) = label == OperatorLabel::N1 ? s.n : s.n_prime;
      }
      break;
    case OperatorLabel::XPlusSq:
    case OperatorLabel::XMinusSq: {
      // x±^2 = (x1^2 + x2^2 ± 2 x1 x2)/2
      const double sign = label == OperatorLabel::XPlusSq ? 1.0 : -1.0;
      add_x_sq(a, basis, 1, 0.5 * length_sq);
      add_x_sq(a, basis, 2, 0.5 * length_sq);
      add_x1x2(a, basis, sign * length_sq);
      break;
    }
  }
  return op;
}

OperatorMatrix build_hamiltonian(const ValidatedModel& model, double y, const TruncatedBasis& basis) {
  return build_operator(OperatorLabel::H, model, y, basis);
}

double GroundStateResult::amplitude(int n, int n_prime) const noexcept {
  const auto i = basis.index(n, n_prime);
  return i ? amplitudes(static_cast<Eigen::Index>(*i)) : 0.0;
}

GroundStateResult ground_state(const OperatorMatrix& hamiltonian) {
  const Eigen::MatrixXd& h = hamiltonian.matrix;
  const Eigen::Index dim = h.rows();
  if (dim == 0 || h.cols() != dim) {
    throw Error(ErrorCode::InvalidArgument, "ground_state needs a non-empty square matrix");
  }
  const double scale = relative_scale(h);
  if (hamiltonian.max_asymmetry() > 1e-14 * scale) {
    throw Error(ErrorCode::InvalidArgument, "ground_state needs a symmetric matrix");
  }

  Eigen::MatrixXd work = h;  // dsyevr destroys its input
  Eigen::VectorXd eigenvalues(dim);
  Eigen::VectorXd vector(dim);
  std::vector<lapack_int> support(2);
  lapack_int found = 0;
  const auto n = static_cast<lapack_int>(dim);
  const lapack_int info =
      LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n, 0.0, 0.0, 1, 1, 0.0, &found,
                     eigenvalues.data(), vector.data(), n, support.data());
  if (info != 0 || found != 1) {
    std::ostringstream os;
    os << "dsyevr returned info = " << info << ", eigenvalues found = " << found
       << " (dimension " << dim << ")";
    throw Error(ErrorCode::NoConvergence, os.str());
  }

  GroundStateResult r;
  r.energy = eigenvalues(0);
  r.basis = hamiltonian.basis;
  vector.normalize();
  const auto vacuum = r.basis.index(0, 0);
  double pivot = vacuum ? vector(static_cast<Eigen::Index>(*vacuum)) : 0.0;
  if (pivot == 0.0) {
    Eigen::Index largest = 0;
    vector.cwiseAbs().maxCoeff(&largest);
    pivot = vector(largest);
  }
  if (pivot < 0.0) vector = -vector;
  r.residual_norm = (h * vector - r.energy * vector).norm();
  r.amplitudes = std::move(vector);
  return r;
}

OracleObservables oracle_observables(const ValidatedModel& model, double y, const TruncatedBasis& basis) {
  OracleObservables out;
  out.ground = ground_state(build_hamiltonian(model, y, basis));
  const Eigen::VectorXd& v = out.ground.amplitudes;
  const auto measure = [&](OperatorLabel label) {
    return expectation(build_operator(label, model, y, basis).matrix, v);
  };
  out.values.energy = out.ground.energy;
  out.values.x1x2 = measure(OperatorLabel::X1X2);
  out.values.x_plus_sq = measure(OperatorLabel::XPlusSq);
  out.values.x_minus_sq = measure(OperatorLabel::XMinusSq);
  out.values.n1 = measure(OperatorLabel::N1);
  out.values.n2 = measure(OperatorLabel::N2);
  out.force = -coupling_derivative(model.coupling(), y) * out.values.x1x2;
  return out;
}

double verify_annihilation(const VacuumExpansion& expansion, const TruncatedBasis& basis) {
  if (basis.sector() != Sector::Full) {
    throw Error(ErrorCode::TruncationMismatch,
                "annihilation check maps |n,n> to odd-parity states; needs the full basis");
  }
  if (expansion.n_max > basis.n_max()) {
    std::ostringstream os;
    os << "expansion order " << expansion.n_max << " exceeds basis cutoff " << basis.n_max();
    throw Error(ErrorCode::TruncationMismatch, os.str());
  }

  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(dim, dim);  // a1 + a2
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Occupation s = basis.state(static_cast<std::size_t>(j));
    if (const auto i = basis.index(s.n - 1, s.n_prime)) {
      lower(static_cast<Eigen::Index>(*i), j) += std::sqrt(static_cast<double>(s.n));
    }
    if (const auto i = basis.index(s.n, s.n_prime - 1)) {
      lower(static_cast<Eigen::Index>(*i), j) += std::sqrt(static_cast<double>(s.n_prime));
    }
  }
  const Eigen::MatrixXd a = expansion.alpha * lower + expansion.beta * lower.transpose();

  Eigen::VectorXd state = Eigen::VectorXd::Zero(dim);
  for (int n = 0; n <= expansion.n_max; ++n) {
    state(static_cast<Eigen::Index>(*basis.index(n, n))) = expansion.coefficients[static_cast<std::size_t>(n)];
  }
  const Eigen::VectorXd image = a * state;

  double sum_sq = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Occupation s = basis.state(static_cast<std::size_t>(i));
    if (s.n <= basis.n_max() - 1 && s.n_prime <= basis.n_max() - 1) sum_sq += image(i) * image(i);
  }
  return std::sqrt(sum_sq);
}

StructureReport ground_state_structure_checks(const GroundStateResult& result, double predicted_ratio) {
  StructureReport report;
  const TruncatedBasis& basis = result.basis;
  const int n_max = basis.n_max();
  for (int n = 0; n <= n_max; ++n) {
    for (int np = 0; np <= n_max; ++np) {
      const double c = result.amplitude(n, np);
      if ((n + np) % 2 != 0) report.odd_parity_mass += c * c;
      if (np > n) {
        report.symmetry_violation = std::max(report.symmetry_violation, std::abs(c - result.amplitude(np, n)));
      }
    }
  }

  const double c00 = result.amplitude(0, 0);
  if (std::isnan(predicted_ratio) || c00 == 0.0) return report;
  double predicted = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    const double ratio = result.amplitude(n, n) / c00;
    // Stop once the amplitude sinks into rounding noise.
    if (n > 0 && std::abs(result.amplitude(n, n)) < 1e-13) break;
    report.pairs.push_back({n, ratio, predicted});
    if (predicted != 0.0) {
      report.max_pair_deviation =
          std::max(report.max_pair_deviation, std::abs(ratio - predicted) / std::abs(predicted));
    }
    predicted *= -predicted_ratio;
  }
  return report;
}

double free_vacuum_correlation(const TruncatedBasis& basis, std::span<const double> psi2) {
  if (basis.sector() != Sector::Full) {
    throw Error(ErrorCode::InvalidArgument, "free vacuum correlation needs the full basis");
  }
  if (psi2.size() != static_cast<std::size_t>(basis.n_max() + 1)) {
    throw Error(ErrorCode::InvalidArgument, "psi2 must have n_max + 1 components");
  }
  double norm_sq = 0.0;
  for (double c : psi2) norm_sq += c * c;
  if (std::abs(norm_sq - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "psi2 must be normalized");
  }

  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  Eigen::VectorXd state = Eigen::VectorXd::Zero(dim);
  for (int np = 0; np <= basis.n_max(); ++np) {
    state(static_cast<Eigen::Index>(*basis.index(0, np))) = psi2[static_cast<std::size_t>(np)];
  }
  Eigen::MatrixXd x1x2 = Eigen::MatrixXd::Zero(dim, dim);
  add_x1x2(x1x2, basis, 1.0);
  return expectation(x1x2, state);
}

}  // namespace casimir
