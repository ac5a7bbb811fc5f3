#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucstar/presentation.hpp"
#include "ucstar/sparse_operator.hpp"
#include "ucstar/term.hpp"

namespace ucstar {

/// Generators assigned to operators on a labeled finite basis. `interior`
/// marks the basis vectors on which a truncated model is exact.
struct Representation {
  std::vector<std::string> basis_labels;
  std::map<std::string, SparseOperator> assign;
  std::vector<bool> interior;
  std::string model_tag;
  /// Truncation parameters (letters m, depth L, ...) for reports.
  std::map<std::string, std::string> params;

  std::size_t dim() const { return basis_labels.size(); }
  double interior_fraction() const;
  std::vector<std::size_t> interior_indices() const;
  /// Throws unless every operator is square of the basis size and labels are unique.
  void validate() const;
};

class UnassignedGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// *-homomorphic image of t. The empty word maps to the identity.
SparseOperator evaluate(Representation const& rep, Term const& t);

enum class Verdict { pass, interior_pass, fail };
std::string_view to_string(Verdict v);

struct Convergence {
  std::string label;
  /// Position in the schedule after which ||x_i e|| <= eps; nullopt if never.
  std::optional<std::size_t> position;
  std::optional<std::string> index;
};

struct CheckReport {
  std::string id;
  std::string kind;  // norm, sot, orthogonal-ranges
  Verdict verdict = Verdict::pass;
  /// Norm that decided the verdict (full or interior).
  double residual = 0.0;
  double full_residual = 0.0;
  double interior_residual = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
  std::optional<std::string> witness;
  std::vector<Convergence> convergence;
  std::vector<std::string> schedule;
  /// Largest sampled net element norm (sot checks).
  double certificate_max = 0.0;
  double interior_fraction = 1.0;
  std::map<std::string, std::string> params;
  std::string note;

  bool ok() const { return verdict != Verdict::fail; }
};

class CheckRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kDefaultEps = 1e-10;

/// pass if ||rho(x)|| <= bound + tol, else interior-pass if the compression to
/// the interior subspace is within bound + tol, else fail.
CheckReport check_norm(Representation const& rep, NormRelation const& r, double tol = kDefaultTol);

/// Verifies the certificate on every sampled element, then finds for each
/// interior basis vector the first schedule position after which
/// ||rho(x_i) e|| <= eps. Refuses nets without a certificate.
CheckReport check_sot(Representation const& rep, SotNet const& net, std::vector<NetIndex> const& schedule,
                      double eps = kDefaultEps, double tol = kDefaultTol);

/// max_{i != j} ||rho(s_i s_i* s_j s_j*)||; pass iff <= tol.
CheckReport check_orthogonal_ranges(Representation const& rep, std::vector<std::string> const& gens,
                                    double tol = kDefaultTol);

/// Block-diagonal sum; labels tagged "1:" and "2:".
Representation direct_sum(Representation const& a, Representation const& b);

struct CheckConfig {
  double tol = kDefaultTol;
  double eps = kDefaultEps;
  /// Schedule for every SOT net; naturals r, or the initial segment {1..r}
  /// for subset schemes.
  std::vector<std::size_t> schedule;
};

/// Schedule entries as indices of the net's scheme.
std::vector<NetIndex> make_schedule(IndexScheme const& scheme, std::vector<std::size_t> const& points);

/// Every norm relation and SOT net of `triple` checked on `rep`. Runs on up to
/// UCSTAR_THREADS threads; output order follows the triple. A net without a
/// certificate yields a fail report noting the refusal.
std::vector<CheckReport> run_checks(Representation const& rep, GeneratingTriple const& triple,
                                    CheckConfig const& config);

std::size_t worker_count();

}  // namespace ucstar
