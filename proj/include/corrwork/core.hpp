#pragma once

// Multi-qudit Hilbert-space algebra: system description, basis indexing,
// the non-interacting Hamiltonian, state storage, partial trace and entropy.
//
// Global basis states are indexed big-endian: subsystem 1 is the most
// significant digit. Subsystem indices are 1-based in every interface.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "corrwork/errors.hpp"

namespace corrwork {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultDimCap = 16384;

/// n identical d-level subsystems with local ladder h = sum_a E_a |a><a|
/// (E_0 = 0, nondecreasing) and a reference inverse temperature.
class SystemSpec {
 public:
  SystemSpec(int n, std::vector<double> local_energies, double beta,
             std::size_t dim_cap = kDefaultDimCap);

  /// Qubits with ladder (0, gap).
  static SystemSpec qubits(int n, double beta, double gap = 1.0,
                           std::size_t dim_cap = kDefaultDimCap);

  int n() const noexcept { return n_; }
  int d() const noexcept { return static_cast<int>(energies_.size()); }
  double beta() const noexcept { return beta_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t dim_cap() const noexcept { return dim_cap_; }
  std::span<const double> local_energies() const noexcept { return energies_; }
  double energy(int level) const { return energies_.at(static_cast<std::size_t>(level)); }
  /// E_1, the first excited local energy.
  double gap() const noexcept { return energies_[1]; }

  SystemSpec with_n(int n) const { return {n, energies_, beta_, dim_cap_}; }
  SystemSpec with_beta(double beta) const { return {n_, energies_, beta, dim_cap_}; }
  SystemSpec with_dim_cap(std::size_t cap) const { return {n_, energies_, beta_, cap}; }

 private:
  int n_;
  std::vector<double> energies_;
  double beta_;
  std::size_t dim_cap_;
  std::size_t dim_;
};

// --- basis indexing -------------------------------------------------------

/// Digits (i_1, ..., i_n) of a linear index.
std::vector<int> basis_digits(std::size_t linear, int n, int d);
/// Inverse of basis_digits.
std::size_t basis_linear(std::span<const int> digits, int d);
/// Sum of digits; the Hamming weight |i| for qubits.
int basis_weight(std::size_t linear, int n, int d);
/// Digit-wise complement (d-1-i_k); bitwise negation for qubits. Equals dim-1-linear.
inline std::size_t basis_complement(std::size_t linear, std::size_t dim) { return dim - 1 - linear; }

/// Diagonal of H = sum_i h_i in the product basis.
std::vector<double> build_hamiltonian(const SystemSpec& spec);

// --- operators ------------------------------------------------------------

/// Hermitian operator stored either densely or in X layout: the diagonal plus
/// the anti-diagonal coherences <i|A|dim-1-i>. The X layout covers every
/// diagonal state and every state generated from one by anti-diagonal pair
/// rotations, at O(dim) memory.
class HermitianMatrix {
 public:
  enum class Layout { Dense, X };

  /// Throws ValidityError when m is not square or not Hermitian within 1e-12.
  static HermitianMatrix dense(Eigen::MatrixXcd m);
  /// anti[i] = <i|A|dim-1-i>; anti[i] and conj(anti[dim-1-i]) must agree within 1e-12.
  static HermitianMatrix x_shaped(Eigen::VectorXd diagonal, Eigen::VectorXcd anti);
  static HermitianMatrix diagonal(Eigen::VectorXd diagonal);

  std::size_t dim() const noexcept { return dim_; }
  Layout layout() const noexcept { return layout_; }
  bool is_x() const noexcept { return layout_ == Layout::X; }

  cplx operator()(std::size_t row, std::size_t col) const;
  Eigen::VectorXd diagonal_entries() const;
  double trace() const;
  /// Largest off-diagonal magnitude.
  double max_off_diagonal() const;

  /// Dense storage (Dense layout only).
  const Eigen::MatrixXcd& dense_entries() const;
  /// Anti-diagonal storage (X layout only).
  const Eigen::VectorXcd& anti_entries() const;

  /// Materializes the full matrix. Throws CapacityError above kDefaultDimCap.
  Eigen::MatrixXcd to_dense() const;
  HermitianMatrix as_dense() const { return dense(to_dense()); }

 private:
  HermitianMatrix() = default;

  Layout layout_ = Layout::Dense;
  std::size_t dim_ = 0;
  Eigen::MatrixXcd dense_;
  Eigen::VectorXd diag_;
  Eigen::VectorXcd anti_;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

/// Unit-trace Hermitian operator. Construction checks Hermiticity and trace;
/// positivity needs a spectrum and is checked by check_positive() and by every
/// spectral consumer (entropy, ergotropy).
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix m);

  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  std::size_t dim() const noexcept { return m_.dim(); }
  const HermitianMatrix& matrix() const noexcept { return m_; }
  cplx operator()(std::size_t row, std::size_t col) const { return m_(row, col); }
  Eigen::VectorXd diagonal_entries() const { return m_.diagonal_entries(); }
  bool is_x() const noexcept { return m_.is_x(); }

  /// Throws ValidityError when the minimum eigenvalue is below -1e-10.
  void check_positive() const;

  DensityMatrix as_dense() const { return DensityMatrix(m_.as_dense()); }

 private:
  HermitianMatrix m_;
};

/// Convex combination t*a + (1-t)*b; keeps the X layout when both inputs have it.
DensityMatrix mix(double t, const DensityMatrix& a, const DensityMatrix& b);

// --- spectra --------------------------------------------------------------

/// Eigenvalues sorted descending. Degenerate eigenvalues carry no ordering
/// beyond the sort; tie-breaking against energies happens in passivity.
struct Spectrum {
  enum class Order { Descending };
  std::vector<double> values;
  Order order = Order::Descending;

  double sum() const;
  double min() const { return values.empty() ? 0.0 : values.back(); }
  double max() const { return values.empty() ? 0.0 : values.front(); }
  /// Number of eigenvalues above tol.
  std::size_t rank(double tol = 1e-10) const;
};

struct Eigensystem {
  Spectrum spectrum;
  /// Column k is the eigenvector of spectrum.values[k].
  Eigen::MatrixXcd vectors;
};

enum class EigenStrategy {
  /// Split into connected components of the nonzero pattern first.
  Blocked,
  /// Solve the full matrix in one piece.
  Monolithic,
};

Spectrum eigenvalues(const HermitianMatrix& m, EigenStrategy strategy = EigenStrategy::Blocked);
inline Spectrum eigenvalues(const DensityMatrix& rho,
                            EigenStrategy strategy = EigenStrategy::Blocked) {
  return eigenvalues(rho.matrix(), strategy);
}

Eigensystem eigendecompose_hermitian(const HermitianMatrix& m,
                                     EigenStrategy strategy = EigenStrategy::Blocked);
inline Eigensystem eigendecompose_hermitian(const DensityMatrix& rho,
                                            EigenStrategy strategy = EigenStrategy::Blocked) {
  return eigendecompose_hermitian(rho.matrix(), strategy);
}

// --- state functionals ----------------------------------------------------

/// Tr(rho H) for a diagonal H.
double energy(const DensityMatrix& rho, std::span<const double> hamiltonian);

/// Reduced state of subsystem `keep` (1-based).
DensityMatrix partial_trace_to(const DensityMatrix& rho, const SystemSpec& spec, int keep);

/// -sum lambda ln lambda (nats); eigenvalues in [-1e-10, 0) are clipped to 0.
double von_neumann_entropy(const Spectrum& spectrum);
double von_neumann_entropy(const DensityMatrix& rho);

/// -sum p ln p over a probability vector, 0 ln 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// U rho U^dagger for a dense unitary; throws ValidityError when U is not
/// unitary within 1e-10.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Eigen::MatrixXcd& unitary);

}  // namespace corrwork
