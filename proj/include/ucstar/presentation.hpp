#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ucstar/term.hpp"
#include "ucstar/zero_one_matrix.hpp"

namespace ucstar {

enum class GeneratorKind { projection, partial_isometry, isometry, unit };

std::string_view to_string(GeneratorKind k);
GeneratorKind parse_generator_kind(std::string_view s);

struct Generator {
  std::string name;
  GeneratorKind kind;
  friend bool operator==(Generator const&, Generator const&) = default;
};

/// Name of the unit generator in the built-in presentations.
inline constexpr std::string_view kUnitName = "one";

/// `prefix` followed by the 1-based index, e.g. ("T", 3) -> "T3".
std::string family_member(std::string_view prefix, std::size_t k);

enum class RelationOrigin { kind_implied, unit, builtin, user };

/// ||rho(term)|| <= bound; equalities x = 0 have bound 0.
struct NormRelation {
  std::string id;
  Term term;
  Rational bound{0};
  RelationOrigin origin = RelationOrigin::user;
};

enum class SchemeKind { naturals, finite_subsets };

/// Directed index set of a net: the naturals 1, 2, ... ordered by <=, or the
/// finite subsets of the labels 1, 2, ... ordered by inclusion.
struct IndexScheme {
  SchemeKind kind = SchemeKind::naturals;
  /// Number of labels; `nullopt` means countably infinite.
  std::optional<std::size_t> label_count;

  friend bool operator==(IndexScheme const&, IndexScheme const&) = default;
};

/// A natural number r or a finite set of labels (kept sorted, unique).
using NetIndex = std::variant<std::size_t, std::vector<std::size_t>>;

NetIndex subset_index(std::vector<std::size_t> labels);
std::string to_string(NetIndex const& idx);
/// Labels summed over at `idx`: {1..r} for naturals, the set itself otherwise.
std::vector<std::size_t> index_labels(NetIndex const& idx);

/// Index order of the scheme: <= for naturals, inclusion for subsets.
bool index_leq(IndexScheme const& scheme, NetIndex const& a, NetIndex const& b);
/// An upper bound of two indices (max or union).
NetIndex index_join(NetIndex const& a, NetIndex const& b);
/// Throws std::out_of_range when `idx` is not an element of the scheme.
void check_in_scheme(IndexScheme const& scheme, NetIndex const& idx);

enum class CertificateTag { projection_defect, projection_difference, user };

std::string_view to_string(CertificateTag t);
CertificateTag parse_certificate_tag(std::string_view s);

struct BoundCertificate {
  Rational bound;
  CertificateTag tag = CertificateTag::user;
  friend bool operator==(BoundCertificate const&, BoundCertificate const&) = default;
};

/// Partial-sum net x_idx = base - sum_{k in labels(idx)} w_k * summand(k),
/// where summand(k) is `summand_template` with every '#' replaced by k.
struct SotNet {
  std::string id;
  IndexScheme scheme;
  Term base;
  std::string summand_template;
  /// w_k for k = 1..weights.size(); empty means every weight is 1.
  std::vector<Rational> weights;
  std::optional<BoundCertificate> certificate;

  Term summand(std::size_t k) const;
  Rational weight(std::size_t k) const;
  Term element(NetIndex const& idx) const;
  /// Generator names touched by the element at `idx`.
  std::set<std::string> generators_at(NetIndex const& idx) const;
};

/// Net elements at the schedule's indices. The schedule must be ascending in
/// the scheme order and every index must lie in the scheme.
std::vector<Term> sample_net(SotNet const& net, std::vector<NetIndex> const& schedule);

/// A countable generator family prefix1, prefix2, ...
struct GeneratorFamily {
  std::string prefix;
  GeneratorKind kind;
  /// nullopt: countably infinite.
  std::optional<std::size_t> count;
};

/// <G | R_N, R_S>. Kind-implied relations (projection, partial isometry,
/// isometry and unit laws) are materialized into the norm relations at
/// construction.
class GeneratingTriple {
 public:
  GeneratingTriple() = default;

  /// Validates that every generator used in a relation is declared and
  /// materializes the kind-implied relations ahead of `norm_relations`.
  static GeneratingTriple make(std::string name, std::vector<Generator> generators,
                               std::vector<NormRelation> norm_relations, std::vector<SotNet> sot_relations,
                               std::vector<GeneratorFamily> families = {});

  std::string const& name() const { return name_; }
  std::vector<Generator> const& generators() const { return generators_; }
  std::vector<GeneratorFamily> const& families() const { return families_; }
  std::vector<NormRelation> const& norm_relations() const { return norm_relations_; }
  std::vector<SotNet> const& sot_relations() const { return sot_relations_; }

  std::optional<std::string> unit_name() const;
  bool has_unit() const { return unit_name().has_value(); }
  std::optional<GeneratorKind> kind_of(std::string_view name) const;
  /// Every generator name, families included up to `family_limit` members.
  std::set<std::string> generator_names(std::size_t family_limit = 0) const;
  std::map<std::string, GeneratorKind> signature(std::size_t family_limit = 0) const;

  /// Finite materialization: each countable family becomes its first `m`
  /// members, with their kind-implied relations.
  GeneratingTriple truncate(std::size_t m) const;

 private:
  void validate_term(Term const& t, std::string const& where) const;

  std::string name_;
  std::vector<Generator> generators_;
  std::vector<GeneratorFamily> families_;
  std::vector<NormRelation> norm_relations_;
  std::vector<NormRelation> user_relations_;
  std::vector<SotNet> sot_relations_;
};

/// Kind-implied relations of a single generator (unit laws need the other
/// generator names).
std::vector<NormRelation> kind_relations(Generator const& g, std::optional<std::string> const& unit);
std::vector<NormRelation> unit_relations(std::string const& unit, std::vector<std::string> const& others);

/// O_n: n isometries S1..Sn, a unit and S1.S1' + ... + Sn.Sn' - 1 = 0.
GeneratingTriple cuntz_triple(std::size_t n);

/// O_infinity: isometries T1, T2, ..., a unit and the net
/// (1 - sum_{i<=r} T_i T_i*)_r with bound certificate 1.
GeneratingTriple cuntz_infinity_triple();

/// Exel-Laca relations for A: partial isometries T1..Tn, CK1 as a net over
/// finite subsets (unital) or pairwise T_i* T_j = 0 (non-unital), and one CK2
/// net per row with bound certificate 2.
GeneratingTriple exel_laca_triple(ZeroOneMatrix const& A, bool unital);

}  // namespace ucstar
