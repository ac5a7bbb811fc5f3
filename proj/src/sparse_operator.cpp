#include "ucstar/sparse_operator.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ucstar {

SparseOperator::SparseOperator(std::size_t dim) : m_(static_cast<long>(dim), static_cast<long>(dim)) {}

SparseOperator::SparseOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("operator must be square");
  prune();
}

void SparseOperator::prune() {
  m_.prune(Complex(0.0, 0.0), 0.0);
  m_.makeCompressed();
}

SparseOperator SparseOperator::from_entries(std::size_t dim, std::vector<Entry> const& entries) {
  std::vector<Eigen::Triplet<Complex, long>> trips;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto const& e : entries) {
    if (e.row >= dim || e.col >= dim)
      throw std::out_of_range("entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                              ") outside dimension " + std::to_string(dim));
    if (!seen.emplace(e.row, e.col).second)
      throw std::invalid_argument("duplicate entry (" + std::to_string(e.row) + "," + std::to_string(e.col) + ")");
    if (e.value != Complex(0.0, 0.0))
      trips.emplace_back(static_cast<long>(e.row), static_cast<long>(e.col), e.value);
  }
  Matrix m(static_cast<long>(dim), static_cast<long>(dim));
  m.setFromTriplets(trips.begin(), trips.end());
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  return diagonal(std::vector<Complex>(dim, Complex(1.0, 0.0)));
}

SparseOperator SparseOperator::diagonal(std::vector<Complex> const& d) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < d.size(); ++i) e.push_back({i, i, d[i]});
  return from_entries(d.size(), e);
}

std::vector<SparseOperator::Entry> SparseOperator::entries() const {
  std::vector<Entry> out;
  for (long k = 0; k < m_.outerSize(); ++k)
    for (Matrix::InnerIterator it(m_, k); it; ++it)
      out.push_back({static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()), it.value()});
  std::sort(out.begin(), out.end(), [](Entry const& a, Entry const& b) {
    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
  });
  return out;
}

Complex SparseOperator::at(std::size_t row, std::size_t col) const {
  return m_.coeff(static_cast<long>(row), static_cast<long>(col));
}

bool SparseOperator::is_diagonal() const {
  for (long k = 0; k < m_.outerSize(); ++k)
    for (Matrix::InnerIterator it(m_, k); it; ++it)
      if (it.row() != it.col()) return false;
  return true;
}

SparseOperator SparseOperator::adjoint() const { return SparseOperator(Matrix(m_.adjoint())); }

SparseOperator SparseOperator::compress(std::vector<bool> const& keep) const {
  if (keep.size() != dim()) throw std::invalid_argument("mask size does not match dimension");
  Matrix out = m_;
  for (long k = 0; k < out.outerSize(); ++k)
    for (Matrix::InnerIterator it(out, k); it; ++it)
      if (!keep[static_cast<std::size_t>(it.row())] || !keep[static_cast<std::size_t>(it.col())])
        it.valueRef() = Complex(0.0, 0.0);
  return SparseOperator(std::move(out));
}

Eigen::VectorXcd SparseOperator::apply(Eigen::VectorXcd const& v) const { return m_ * v; }

double SparseOperator::column_norm(std::size_t j) const {
  double s = 0.0;
  for (Matrix::InnerIterator it(m_, static_cast<long>(j)); it; ++it) s += std::norm(it.value());
  return std::sqrt(s);
}

Eigen::MatrixXcd SparseOperator::to_dense() const { return Eigen::MatrixXcd(m_); }

double SparseOperator::max_abs_diff(SparseOperator const& other) const {
  Matrix d = m_ - other.m_;
  double best = 0.0;
  for (long k = 0; k < d.outerSize(); ++k)
    for (Matrix::InnerIterator it(d, k); it; ++it) best = std::max(best, std::abs(it.value()));
  return best;
}

SparseOperator operator+(SparseOperator const& a, SparseOperator const& b) {
  return SparseOperator(SparseOperator::Matrix(a.m_ + b.m_));
}
SparseOperator operator-(SparseOperator const& a, SparseOperator const& b) {
  return SparseOperator(SparseOperator::Matrix(a.m_ - b.m_));
}
SparseOperator operator*(SparseOperator const& a, SparseOperator const& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in product");
  return SparseOperator(SparseOperator::Matrix(a.m_ * b.m_));
}
SparseOperator operator*(Complex c, SparseOperator const& a) { return SparseOperator(SparseOperator::Matrix(c * a.m_)); }

SparseOperator block_diagonal(SparseOperator const& a, SparseOperator const& b) {
  std::size_t n = a.dim();
  std::vector<SparseOperator::Entry> e = a.entries();
  for (auto x : b.entries()) e.push_back({x.row + n, x.col + n, x.value});
  return SparseOperator::from_entries(n + b.dim(), e);
}

SparseOperator read_coo(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos || line[p] == '#') continue;
      return true;
    }
    return false;
  };
  auto fail = [&](std::string const& what) {
    throw std::invalid_argument("coo line " + std::to_string(lineno) + ": " + what);
  };
  if (!next_line()) fail("missing header");
  std::istringstream hs(line);
  std::string kdim, knnz;
  std::size_t dim = 0, nnz = 0;
  if (!(hs >> kdim >> dim >> knnz >> nnz) || kdim != "dim" || knnz != "nnz") fail("expected 'dim n nnz k'");
  std::vector<SparseOperator::Entry> entries;
  for (std::size_t k = 0; k < nnz; ++k) {
    if (!next_line()) fail("expected " + std::to_string(nnz) + " entries, got " + std::to_string(k));
    std::istringstream ls(line);
    SparseOperator::Entry e{};
    double re = 0, im = 0;
    if (!(ls >> e.row >> e.col >> re >> im)) fail("expected 'row col re im'");
    e.value = Complex(re, im);
    entries.push_back(e);
  }
  try {
    return SparseOperator::from_entries(dim, entries);
  } catch (std::exception const& ex) {
    fail(ex.what());
  }
  return SparseOperator(0);
}

void write_coo(std::ostream& out, SparseOperator const& op) {
  auto e = op.entries();
  out << "dim " << op.dim() << " nnz " << e.size() << '\n';
  out << std::setprecision(17);
  for (auto const& x : e) out << x.row << ' ' << x.col << ' ' << x.value.real() << ' ' << x.value.imag() << '\n';
}

double dense_norm(SparseOperator const& op) {
  if (op.dim() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(op.to_dense());
  return svd.singularValues()(0);
}

double operator_norm(SparseOperator const& op, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (op.nnz() == 0) return 0.0;
  if (op.is_diagonal()) {
    double best = 0.0;
    for (auto const& e : op.entries()) best = std::max(best, std::abs(e.value));
    return best;
  }
  auto const& A = op.matrix();
  SparseOperator::Matrix B = SparseOperator::Matrix(A.adjoint()) * A;
  long n = A.rows();
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(n);
  for (long i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  double lambda = 0.0;
  for (std::size_t it = 0; it < kPowerIterationCap; ++it) {
    Eigen::VectorXcd w = B * v;
    lambda = v.dot(w).real();
    double wn = w.norm();
    if (wn == 0.0) return 0.0;
    double residual = (w - lambda * v).norm();
    if (residual <= tol * lambda) return std::sqrt(lambda);
    v = w / wn;
  }
  if (op.dim() <= SparseOperator::kDenseThreshold) return dense_norm(op);
  throw NonConvergence("power iteration did not converge within " + std::to_string(kPowerIterationCap) +
                       " steps (estimate " + std::to_string(std::sqrt(std::max(lambda, 0.0))) + ")");
}

}  // namespace ucstar
