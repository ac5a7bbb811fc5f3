#include "ucstar/proj_lattice.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "ucstar/presentation.hpp"

namespace ucstar {

std::vector<std::size_t> mask_elements(SubsetMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; mask; ++k, mask >>= 1)
    if (mask & 1u) out.push_back(k + 1);
  return out;
}

SubsetMask mask_of(std::vector<std::size_t> const& elements) {
  SubsetMask m = 0;
  for (auto e : elements) {
    if (e == 0 || e > 32) throw std::out_of_range("subset element " + std::to_string(e) + " outside 1..32");
    m |= SubsetMask{1} << (e - 1);
  }
  return m;
}

std::vector<std::string> projection_names(std::size_t n, std::string const& prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(family_member(prefix, k));
  return out;
}

namespace {

void check_family_size(std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty projection family");
  if (n > kMaxAtomFamily)
    throw std::invalid_argument("projection family of size " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kMaxAtomFamily));
}

// prefix * prod_{k in comp} (1 - f_k) expanded as sum_S (-1)^|S| prefix prod_S f_k.
Term expand_complements(Term const& prefix, std::vector<Term> const& factors) {
  Term out;
  std::size_t m = factors.size();
  for (SubsetMask S = 0; S < (SubsetMask{1} << m); ++S) {
    Term t = prefix;
    for (auto k : mask_elements(S)) t = t * factors[k - 1];
    out += (std::popcount(S) % 2 ? Coefficient(-1) : Coefficient(1)) * t;
  }
  return out;
}

}  // namespace

Term atom_term(SubsetMask X, std::vector<std::string> const& names) {
  std::size_t n = names.size();
  check_family_size(n);
  if (X == 0) throw std::invalid_argument("atom index must be a nonempty subset");
  if (X >> n) throw std::out_of_range("atom index outside 1.." + std::to_string(n));
  Term prefix = Term::one();
  std::vector<Term> comp;
  for (std::size_t k = 1; k <= n; ++k) {
    if (X & (SubsetMask{1} << (k - 1)))
      prefix = prefix * Term(gen(names[k - 1]));
    else
      comp.emplace_back(gen(names[k - 1]));
  }
  return expand_complements(prefix, comp);
}

Term reconstruct(std::size_t i, std::vector<std::string> const& names) {
  std::size_t n = names.size();
  check_family_size(n);
  if (i == 0 || i > n) throw std::out_of_range("projection index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  Term out;
  SubsetMask bit = SubsetMask{1} << (i - 1);
  for (SubsetMask X = 1; X < (SubsetMask{1} << n); ++X)
    if (X & bit) out += atom_term(X, names);
  return out;
}

namespace {

bool integer_valued(Eigen::MatrixXcd const& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    auto z = m.data()[i];
    if (z.imag() != 0.0 || z.real() != std::round(z.real())) return false;
  }
  return true;
}

}  // namespace

std::vector<NumericAtom> atoms_numeric(std::vector<Eigen::MatrixXcd> const& Q) {
  std::size_t n = Q.size();
  check_family_size(n);
  auto dim = Q[0].rows();
  bool exact = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (Q[k].rows() != dim || Q[k].cols() != dim)
      throw std::invalid_argument("q" + std::to_string(k + 1) + " has the wrong shape");
    exact = exact && integer_valued(Q[k]);
  }
  double tol = exact ? 0.0 : 1e-12;
  for (std::size_t k = 0; k < n; ++k) {
    auto const& q = Q[k];
    double err = std::max((q - q.adjoint()).cwiseAbs().maxCoeff(), (q * q - q).cwiseAbs().maxCoeff());
    if (err > tol) throw std::invalid_argument("q" + std::to_string(k + 1) + " is not a projection");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if ((Q[a] * Q[b] - Q[b] * Q[a]).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("q" + std::to_string(a + 1) + " and q" + std::to_string(b + 1) +
                                    " do not commute");
  Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(dim, dim);
  std::vector<NumericAtom> out;
  for (SubsetMask X = 1; X < (SubsetMask{1} << n); ++X) {
    Eigen::MatrixXcd a = I;
    for (std::size_t k = 0; k < n; ++k) a = a * ((X >> k) & 1u ? Q[k] : Eigen::MatrixXcd(I - Q[k]));
    out.push_back({X, std::move(a)});
  }
  return out;
}

int a_value(ZeroOneMatrix const& A, std::vector<std::size_t> const& X, std::vector<std::size_t> const& Y,
            std::size_t j) {
  int v = 1;
  for (auto x : X) v *= A(x, j);
  for (auto y : Y) v *= 1 - A(y, j);
  return v;
}

ASupport a_support(ZeroOneMatrix const& A, std::vector<std::size_t> const& X, std::vector<std::size_t> const& Y) {
  ASupport s;
  for (std::size_t j = 1; j <= A.size(); ++j)
    if (a_value(A, X, Y, j)) s.indices.push_back(j);
  if (!A.infinite()) return s;
  // Columns past the truncation: A_kj = 0 there for rows known finite.
  bool x_kills = false;
  for (auto x : X) x_kills = x_kills || A.row_known_finite(x);
  if (x_kills) return s;
  bool y_known = true;
  for (auto y : Y) y_known = y_known && A.row_known_finite(y);
  s.status = (X.empty() && y_known) ? ASupport::Status::infinite : ASupport::Status::unknown;
  return s;
}

namespace {

std::string tname(std::size_t i) { return family_member("T", i); }

Term source_proj(std::size_t i) { return Term(Word{star(tname(i)), gen(tname(i))}); }
Term range_proj(std::size_t i) { return Term(Word{gen(tname(i)), star(tname(i))}); }

std::vector<std::size_t> finite_support(ZeroOneMatrix const& A, std::vector<std::size_t> const& X,
                                        std::vector<std::size_t> const& Y) {
  ASupport s = a_support(A, X, Y);
  if (s.status == ASupport::Status::infinite)
    throw std::invalid_argument("A(X,Y,j) is nonzero for infinitely many j");
  if (s.status == ASupport::Status::unknown)
    throw std::invalid_argument("support of A(X,Y,j) is unknown for this truncated matrix");
  return s.indices;
}

}  // namespace

Term unit_term(ZeroOneMatrix const& A, std::vector<std::size_t> const& Y) {
  for (auto y : Y)
    if (y == 0 || y > A.size()) throw std::out_of_range("index " + std::to_string(y) + " outside the matrix");
  std::vector<std::size_t> J2 = finite_support(A, {}, Y);
  Term U;
  std::size_t m = Y.size();
  for (SubsetMask Z = 1; Z < (SubsetMask{1} << m); ++Z) {
    Term p = Term::one();
    for (auto k : mask_elements(Z)) p = p * source_proj(Y[k - 1]);
    U += (std::popcount(Z) % 2 ? Coefficient(1) : Coefficient(-1)) * p;
  }
  for (auto j : J2) U += range_proj(j);
  return U;
}

Term el4_term(ZeroOneMatrix const& A, std::vector<std::size_t> const& X, std::vector<std::size_t> const& Y,
              bool unital) {
  if (X.empty() && !unital) throw std::invalid_argument("EL4 without a unit needs a nonempty X");
  std::vector<std::size_t> J = finite_support(A, X, Y);
  Term prefix = Term::one();
  for (auto x : X) prefix = prefix * source_proj(x);
  std::vector<Term> comp;
  for (auto y : Y) comp.push_back(source_proj(y));
  Term lhs = expand_complements(prefix, comp);
  for (auto j : J) lhs -= range_proj(j);
  return lhs;
}

}  // namespace ucstar
