#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ucstar {

using Complex = std::complex<double>;

/// Square sparse complex matrix on a finite basis.
class SparseOperator {
 public:
  using Matrix = Eigen::SparseMatrix<Complex, Eigen::ColMajor, long>;

  struct Entry {
    std::size_t row;
    std::size_t col;
    Complex value;
  };

  /// Below this dimension dense routines are used as a cross-check.
  static constexpr std::size_t kDenseThreshold = 64;

  explicit SparseOperator(std::size_t dim = 0);
  explicit SparseOperator(Matrix m);

  /// Rejects out-of-range indices and duplicate (row, col) pairs; zeros are dropped.
  static SparseOperator from_entries(std::size_t dim, std::vector<Entry> const& entries);
  static SparseOperator identity(std::size_t dim);
  static SparseOperator diagonal(std::vector<Complex> const& d);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t nnz() const { return static_cast<std::size_t>(m_.nonZeros()); }
  Matrix const& matrix() const { return m_; }

  /// Entries sorted by (row, col).
  std::vector<Entry> entries() const;
  Complex at(std::size_t row, std::size_t col) const;
  bool is_diagonal() const;

  SparseOperator adjoint() const;
  /// P A P for the 0/1 mask P (kept basis vectors).
  SparseOperator compress(std::vector<bool> const& keep) const;
  Eigen::VectorXcd apply(Eigen::VectorXcd const& v) const;
  /// ||A e_j||.
  double column_norm(std::size_t j) const;
  Eigen::MatrixXcd to_dense() const;

  /// Largest |entry| of this - other.
  double max_abs_diff(SparseOperator const& other) const;

  friend SparseOperator operator+(SparseOperator const& a, SparseOperator const& b);
  friend SparseOperator operator-(SparseOperator const& a, SparseOperator const& b);
  friend SparseOperator operator*(SparseOperator const& a, SparseOperator const& b);
  friend SparseOperator operator*(Complex c, SparseOperator const& a);

 private:
  void prune();
  Matrix m_;
};

SparseOperator block_diagonal(SparseOperator const& a, SparseOperator const& b);

/// Coordinate-list text: `dim n nnz k`, then k lines `row col re im`.
SparseOperator read_coo(std::istream& in);
void write_coo(std::ostream& out, SparseOperator const& op);

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kPowerIterationCap = 10'000;

/// Largest singular value, relative accuracy `tol`. Zero and diagonal
/// operators are exact; otherwise power iteration on A*A from a fixed seed,
/// falling back to a dense SVD below kDenseThreshold.
double operator_norm(SparseOperator const& op, double tol = 1e-10);
/// Dense SVD.
double dense_norm(SparseOperator const& op);

}  // namespace ucstar
