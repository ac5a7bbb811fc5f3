#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucstar/sparse_operator.hpp"
#include "ucstar/term.hpp"
#include "ucstar/zero_one_matrix.hpp"

namespace ucstar {

inline constexpr std::size_t kMaxAtomFamily = 20;

/// Subset of {1..n} as a bitmask: bit k-1 is element k.
using SubsetMask = std::uint32_t;

std::vector<std::size_t> mask_elements(SubsetMask mask);
SubsetMask mask_of(std::vector<std::size_t> const& elements);

/// prod_{x in X} q_x prod_{k not in X} (1 - q_k), expanded without the unit.
/// `names[k-1]` names q_k; the family size is names.size().
Term atom_term(SubsetMask X, std::vector<std::string> const& names);

/// q1, q2, ..., qn.
std::vector<std::string> projection_names(std::size_t n, std::string const& prefix = "q");

struct NumericAtom {
  SubsetMask X;
  Eigen::MatrixXcd value;
};

/// All 2^n - 1 atoms of a commuting family, ordered by mask. Integer-valued
/// inputs are checked exactly, others to within 1e-12.
std::vector<NumericAtom> atoms_numeric(std::vector<Eigen::MatrixXcd> const& Q);

/// Sum of atom_term(X) over X containing i.
Term reconstruct(std::size_t i, std::vector<std::string> const& names);

/// A(X,Y,j) = prod_{x in X} A_xj prod_{y in Y} (1 - A_yj).
int a_value(ZeroOneMatrix const& A, std::vector<std::size_t> const& X, std::vector<std::size_t> const& Y,
            std::size_t j);

struct ASupport {
  enum class Status { finite, infinite, unknown };
  Status status = Status::finite;
  /// Support among the materialized columns (complete when status is finite).
  std::vector<std::size_t> indices;
};

ASupport a_support(ZeroOneMatrix const& A, std::vector<std::size_t> const& X, std::vector<std::size_t> const& Y);

/// U = sum_{0 != Z <= Y} (-1)^{|Z|+1} prod_{z in Z} T_z*T_z + sum_{j in J2} T_j T_j*
/// with J2 = support of A(0,Y,.). Throws unless that support is finite.
Term unit_term(ZeroOneMatrix const& A, std::vector<std::size_t> const& Y);

/// prod_{x in X} T_x*T_x prod_{y in Y} (1 - T_y*T_y) - sum_j A(X,Y,j) T_j T_j*,
/// expanded. Without a unit X must be nonempty. Throws unless the support is finite.
Term el4_term(ZeroOneMatrix const& A, std::vector<std::size_t> const& X, std::vector<std::size_t> const& Y,
              bool unital);

}  // namespace ucstar
