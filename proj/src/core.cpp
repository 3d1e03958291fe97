#include "corrwork/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace corrwork {

SystemSpec::SystemSpec(int n, std::vector<double> local_energies, double beta,
                       std::size_t dim_cap)
    : n_(n), energies_(std::move(local_energies)), beta_(beta), dim_cap_(dim_cap), dim_(1) {
  if (n_ < 1) throw DomainError("subsystem count must be positive, got " + std::to_string(n_));
  if (energies_.size() < 2) throw DomainError("local dimension must be at least 2");
  if (energies_.front() != 0.0) throw DomainError("local ground energy must be zero");
  for (std::size_t a = 0; a < energies_.size(); ++a) {
    if (!std::isfinite(energies_[a])) throw DomainError("local energies must be finite");
    if (a > 0 && energies_[a] < energies_[a - 1])
      throw DomainError("local energies must be nondecreasing");
  }
  if (!(beta_ >= 0.0) || !std::isfinite(beta_))
    throw DomainError("inverse temperature must be finite and nonnegative");
  const auto d = energies_.size();
  for (int k = 0; k < n_; ++k) {
    if (dim_ > dim_cap_ / d)
      throw CapacityError("global dimension " + std::to_string(d) + "^" + std::to_string(n_) +
                          " exceeds the cap " + std::to_string(dim_cap_));
    dim_ *= d;
  }
}

SystemSpec SystemSpec::qubits(int n, double beta, double gap, std::size_t dim_cap) {
  return {n, {0.0, gap}, beta, dim_cap};
}

std::vector<int> basis_digits(std::size_t linear, int n, int d) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<int>(linear % static_cast<std::size_t>(d));
    linear /= static_cast<std::size_t>(d);
  }
  return digits;
}

std::size_t basis_linear(std::span<const int> digits, int d) {
  std::size_t linear = 0;
  for (int x : digits) {
    if (x < 0 || x >= d) throw DomainError("basis digit out of range");
    linear = linear * static_cast<std::size_t>(d) + static_cast<std::size_t>(x);
  }
  return linear;
}

int basis_weight(std::size_t linear, int n, int d) {
  int weight = 0;
  for (int k = 0; k < n; ++k) {
    weight += static_cast<int>(linear % static_cast<std::size_t>(d));
    linear /= static_cast<std::size_t>(d);
  }
  return weight;
}

std::vector<double> build_hamiltonian(const SystemSpec& spec) {
  const auto e = spec.local_energies();
  std::vector<double> h{0.0};
  h.reserve(spec.dim());
  for (int k = 0; k < spec.n(); ++k) {
    std::vector<double> next;
    next.reserve(h.size() * e.size());
    for (double prefix : h)
      for (double ea : e) next.push_back(prefix + ea);
    h = std::move(next);
  }
  return h;
}

// --- HermitianMatrix ------------------------------------------------------

HermitianMatrix HermitianMatrix::dense(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols()) throw ValidityError("operator must be square");
  const double asym = m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol)
    throw ValidityError("operator is not Hermitian (deviation " + std::to_string(asym) + ")");
  HermitianMatrix out;
  out.layout_ = Layout::Dense;
  out.dim_ = static_cast<std::size_t>(m.rows());
  out.dense_ = (m + m.adjoint()) * 0.5;
  return out;
}

HermitianMatrix HermitianMatrix::x_shaped(Eigen::VectorXd diagonal, Eigen::VectorXcd anti) {
  if (diagonal.size() != anti.size())
    throw ShapeError("diagonal and anti-diagonal lengths differ");
  const auto dim = static_cast<std::size_t>(diagonal.size());
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t j = dim - 1 - i;
    if (i > j) break;
    if (i == j) {
      anti[static_cast<Eigen::Index>(i)] = 0.0;
      break;
    }
    const cplx upper = anti[static_cast<Eigen::Index>(i)];
    const cplx lower = anti[static_cast<Eigen::Index>(j)];
    if (std::abs(upper - std::conj(lower)) > kHermitianTol)
      throw ValidityError("X-shaped operator is not Hermitian");
    const cplx avg = 0.5 * (upper + std::conj(lower));
    anti[static_cast<Eigen::Index>(i)] = avg;
    anti[static_cast<Eigen::Index>(j)] = std::conj(avg);
  }
  HermitianMatrix out;
  out.layout_ = Layout::X;
  out.dim_ = dim;
  out.diag_ = std::move(diagonal);
  out.anti_ = std::move(anti);
  return out;
}

HermitianMatrix HermitianMatrix::diagonal(Eigen::VectorXd diagonal) {
  Eigen::VectorXcd anti = Eigen::VectorXcd::Zero(diagonal.size());
  return x_shaped(std::move(diagonal), std::move(anti));
}

cplx HermitianMatrix::operator()(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) throw ShapeError("matrix index out of range");
  if (layout_ == Layout::Dense)
    return dense_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  if (row == col) return diag_[static_cast<Eigen::Index>(row)];
  if (col == dim_ - 1 - row) return anti_[static_cast<Eigen::Index>(row)];
  return 0.0;
}

Eigen::VectorXd HermitianMatrix::diagonal_entries() const {
  if (layout_ == Layout::X) return diag_;
  return dense_.diagonal().real();
}

double HermitianMatrix::trace() const { return diagonal_entries().sum(); }

double HermitianMatrix::max_off_diagonal() const {
  double worst = 0.0;
  if (layout_ == Layout::X) {
    for (std::size_t i = 0; i < dim_; ++i)
      if (i != dim_ - 1 - i) worst = std::max(worst, std::abs(anti_[static_cast<Eigen::Index>(i)]));
    return worst;
  }
  for (Eigen::Index c = 0; c < dense_.cols(); ++c)
    for (Eigen::Index r = 0; r < dense_.rows(); ++r)
      if (r != c) worst = std::max(worst, std::abs(dense_(r, c)));
  return worst;
}

const Eigen::MatrixXcd& HermitianMatrix::dense_entries() const {
  if (layout_ != Layout::Dense) throw ShapeError("operator is not stored densely");
  return dense_;
}

const Eigen::VectorXcd& HermitianMatrix::anti_entries() const {
  if (layout_ != Layout::X) throw ShapeError("operator is not stored in X layout");
  return anti_;
}

Eigen::MatrixXcd HermitianMatrix::to_dense() const {
  if (layout_ == Layout::Dense) return dense_;
  if (dim_ > kDefaultDimCap)
    throw CapacityError("refusing to materialize a dense " + std::to_string(dim_) + "x" +
                        std::to_string(dim_) + " matrix");
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = diag_[i];
    if (i != n - 1 - i) m(i, n - 1 - i) = anti_[i];
  }
  return m;
}

// --- DensityMatrix --------------------------------------------------------

DensityMatrix::DensityMatrix(HermitianMatrix m) : m_(std::move(m)) {
  const double tr = m_.trace();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw ValidityError("density matrix trace is " + std::to_string(tr) + ", expected 1");
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > kTraceTol) throw ValidityError("state vector is not normalized");
  return DensityMatrix(HermitianMatrix::dense(psi * psi.adjoint()));
}

void DensityMatrix::check_positive() const {
  const Spectrum s = eigenvalues(m_);
  if (s.min() < -kPsdTol)
    throw ValidityError("density matrix has eigenvalue " + std::to_string(s.min()));
}

DensityMatrix mix(double t, const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("cannot mix states of different dimension");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("mixing weight must lie in [0, 1]");
  if (a.is_x() && b.is_x()) {
    const auto& ma = a.matrix();
    const auto& mb = b.matrix();
    return DensityMatrix(HermitianMatrix::x_shaped(
        t * ma.diagonal_entries() + (1 - t) * mb.diagonal_entries(),
        t * ma.anti_entries() + (1 - t) * mb.anti_entries()));
  }
  return DensityMatrix(
      HermitianMatrix::dense(t * a.matrix().to_dense() + (1 - t) * b.matrix().to_dense()));
}

// --- Spectrum -------------------------------------------------------------

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

std::size_t Spectrum::rank(double tol) const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [tol](double v) { return v > tol; }));
}

// --- functionals ----------------------------------------------------------

double energy(const DensityMatrix& rho, std::span<const double> hamiltonian) {
  if (hamiltonian.size() != rho.dim()) throw ShapeError("Hamiltonian and state dimensions differ");
  const Eigen::VectorXd diag = rho.diagonal_entries();
  double e = 0.0;
  for (std::size_t i = 0; i < hamiltonian.size(); ++i)
    e += diag[static_cast<Eigen::Index>(i)] * hamiltonian[i];
  return e;
}

DensityMatrix partial_trace_to(const DensityMatrix& rho, const SystemSpec& spec, int keep) {
  if (rho.dim() != spec.dim())
    throw ShapeError("state dimension " + std::to_string(rho.dim()) +
                     " does not match the system dimension " + std::to_string(spec.dim()));
  if (keep < 1 || keep > spec.n())
    throw DomainError("subsystem " + std::to_string(keep) + " is outside [1, n]");

  const auto d = static_cast<std::size_t>(spec.d());
  std::size_t stride = 1;
  for (int k = keep; k < spec.n(); ++k) stride *= d;
  const std::size_t block = stride * d;
  const std::size_t dim = spec.dim();
  const auto digit = [&](std::size_t i) { return static_cast<Eigen::Index>((i / stride) % d); };
  const auto rest = [&](std::size_t i) { return (i / block) * stride + i % stride; };

  Eigen::MatrixXcd red = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                static_cast<Eigen::Index>(d));
  const auto& m = rho.matrix();
  if (m.is_x()) {
    const Eigen::VectorXd diag = m.diagonal_entries();
    const auto& anti = m.anti_entries();
    for (std::size_t i = 0; i < dim; ++i) {
      red(digit(i), digit(i)) += diag[static_cast<Eigen::Index>(i)];
      const std::size_t j = dim - 1 - i;
      if (j != i && rest(i) == rest(j)) red(digit(i), digit(j)) += anti[static_cast<Eigen::Index>(i)];
    }
  } else {
    const auto& a = m.dense_entries();
    for (std::size_t hi = 0; hi < dim / block; ++hi)
      for (std::size_t lo = 0; lo < stride; ++lo) {
        const std::size_t base = hi * block + lo;
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t y = 0; y < d; ++y)
            red(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) +=
                a(static_cast<Eigen::Index>(base + x * stride),
                  static_cast<Eigen::Index>(base + y * stride));
      }
  }
  return DensityMatrix(HermitianMatrix::dense(red));
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities)
    if (p > 0.0) s -= p * std::log(p);
  return s;
}

double von_neumann_entropy(const Spectrum& spectrum) {
  if (spectrum.min() < -kPsdTol)
    throw ValidityError("spectrum has negative eigenvalue " + std::to_string(spectrum.min()));
  // Round-off can push an eigenvalue just above 1 and the sum just below 0.
  return std::max(0.0, shannon_entropy(spectrum.values));
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(eigenvalues(rho)); }

DensityMatrix apply_unitary(const DensityMatrix& rho, const Eigen::MatrixXcd& unitary) {
  const auto n = static_cast<Eigen::Index>(rho.dim());
  if (unitary.rows() != n || unitary.cols() != n)
    throw ShapeError("unitary and state dimensions differ");
  const double defect =
      (unitary.adjoint() * unitary - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > 1e-10)
    throw ValidityError("operator is not unitary (defect " + std::to_string(defect) + ")");
  Eigen::MatrixXcd out = unitary * rho.matrix().to_dense() * unitary.adjoint();
  out = (out + out.adjoint()).eval() * 0.5;
  return DensityMatrix(HermitianMatrix::dense(std::move(out)));
}

}  // namespace corrwork
