// Hermitian eigensolvers. X-layout operators decompose into independent 2x2
// blocks {|i>, |dim-1-i>} solved in closed form; dense operators are split
// into connected components of their nonzero pattern and each component is
// handed to Eigen's tridiagonal QR solver.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "corrwork/core.hpp"

namespace corrwork {
namespace {

struct Pair {
  double value;
  Eigen::Index column;  // column in the unsorted eigenvector matrix
};

void sort_descending(std::vector<Pair>& pairs) {
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.value > b.value; });
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<Eigen::Index>> components(const Eigen::MatrixXcd& a) {
  const auto n = static_cast<std::size_t>(a.rows());
  DisjointSets sets(n);
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = c + 1; r < a.rows(); ++r)
      if (a(r, c) != cplx(0.0)) sets.unite(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  std::vector<std::vector<Eigen::Index>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[sets.find(i)].push_back(static_cast<Eigen::Index>(i));
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

template <typename Solver>
void check_converged(const Solver& solver, Eigen::Index size) {
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigensolver did not converge on a block of size " +
                             std::to_string(size),
                         static_cast<int>(Solver::m_maxIterations * size));
}

Spectrum to_spectrum(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum{std::move(values)};
}

// Closed-form eigenvalues of [[a, c], [conj(c), b]].
std::pair<double, double> block_values(double a, double b, cplx c) {
  const double mean = 0.5 * (a + b);
  const double radius = std::hypot(0.5 * (a - b), std::abs(c));
  return {mean + radius, mean - radius};
}

}  // namespace

Spectrum eigenvalues(const HermitianMatrix& m, EigenStrategy strategy) {
  const std::size_t dim = m.dim();
  std::vector<double> values;
  values.reserve(dim);

  if (m.is_x() && strategy == EigenStrategy::Blocked) {
    const Eigen::VectorXd diag = m.diagonal_entries();
    const auto& anti = m.anti_entries();
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t j = dim - 1 - i;
      if (j < i) break;
      const auto ii = static_cast<Eigen::Index>(i);
      if (i == j) {
        values.push_back(diag[ii]);
        break;
      }
      const auto [hi, lo] = block_values(diag[ii], diag[static_cast<Eigen::Index>(j)], anti[ii]);
      values.push_back(hi);
      values.push_back(lo);
    }
    return to_spectrum(std::move(values));
  }

  const Eigen::MatrixXcd a = m.to_dense();
  if (strategy == EigenStrategy::Monolithic) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    check_converged(solver, a.rows());
    values.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
    return to_spectrum(std::move(values));
  }

  for (const auto& group : components(a)) {
    const auto size = static_cast<Eigen::Index>(group.size());
    if (size == 1) {
      values.push_back(a(group[0], group[0]).real());
      continue;
    }
    Eigen::MatrixXcd sub(size, size);
    for (Eigen::Index c = 0; c < size; ++c)
      for (Eigen::Index r = 0; r < size; ++r) sub(r, c) = a(group[r], group[c]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub, Eigen::EigenvaluesOnly);
    check_converged(solver, size);
    values.insert(values.end(), solver.eigenvalues().begin(), solver.eigenvalues().end());
  }
  return to_spectrum(std::move(values));
}

Eigensystem eigendecompose_hermitian(const HermitianMatrix& m, EigenStrategy strategy) {
  const Eigen::MatrixXcd a = m.to_dense();
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd raw_vectors = Eigen::MatrixXcd::Zero(n, n);
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));

  const auto groups = strategy == EigenStrategy::Blocked
                          ? components(a)
                          : std::vector<std::vector<Eigen::Index>>{[&] {
                              std::vector<Eigen::Index> all(static_cast<std::size_t>(n));
                              std::iota(all.begin(), all.end(), Eigen::Index{0});
                              return all;
                            }()};

  Eigen::Index column = 0;
  for (const auto& group : groups) {
    const auto size = static_cast<Eigen::Index>(group.size());
    if (size == 0) continue;
    Eigen::MatrixXcd sub(size, size);
    for (Eigen::Index c = 0; c < size; ++c)
      for (Eigen::Index r = 0; r < size; ++r) sub(r, c) = a(group[r], group[c]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub, Eigen::ComputeEigenvectors);
    check_converged(solver, size);
    for (Eigen::Index k = 0; k < size; ++k, ++column) {
      for (Eigen::Index r = 0; r < size; ++r) raw_vectors(group[r], column) = solver.eigenvectors()(r, k);
      pairs.push_back({solver.eigenvalues()[k], column});
    }
  }

  sort_descending(pairs);
  Eigensystem out;
  out.spectrum.values.reserve(pairs.size());
  out.vectors.resize(n, n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out.spectrum.values.push_back(pairs[k].value);
    out.vectors.col(static_cast<Eigen::Index>(k)) = raw_vectors.col(pairs[k].column);
  }
  return out;
}

}  // namespace corrwork
