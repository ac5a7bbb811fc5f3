#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ucstar/matrep.hpp"
#include "ucstar/models.hpp"
#include "ucstar/presentation.hpp"
#include "ucstar/rewrite.hpp"

namespace ucstar {

/// Set of vertices as a bitmask over vertex positions.
using VertexSet = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 16;

/// (E0, G1, s, r) with finite E0 and G1; r(e) nonempty.
class Ultragraph {
 public:
  struct Edge {
    std::string name;
    std::size_t source;
    VertexSet range;
    friend bool operator==(Edge const&, Edge const&) = default;
  };

  Ultragraph() = default;
  Ultragraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  /// `vertices v1 v2 ...` then `edge <name> <source> -> {v1,v2,...}` lines.
  static Ultragraph parse(std::string_view text);
  std::string str() const;

  std::vector<std::string> const& vertices() const { return vertices_; }
  std::vector<Edge> const& edges() const { return edges_; }
  std::size_t vertex_index(std::string_view name) const;
  std::size_t edge_index(std::string_view name) const;
  VertexSet all_vertices() const { return (VertexSet{1} << vertices_.size()) - 1; }

  /// Generator of p_A: "p_" then the member names joined by '_'; p_ for the empty set.
  std::string projection_name(VertexSet A) const;
  std::string edge_name(std::size_t e) const { return "s_" + edges_[e].name; }

  friend bool operator==(Ultragraph const&, Ultragraph const&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

std::vector<std::size_t> set_members(VertexSet A);

/// Smallest family closed under finite unions and intersections containing
/// the empty set, every r(e) and every singleton; sorted by (size, mask).
std::vector<VertexSet> g0_closure(Ultragraph const& G);

/// Edge sequences of length n with s(a_{k+1}) in r(a_k), lexicographic in edge order.
std::vector<Path> enumerate_paths(Ultragraph const& G, std::size_t n);

/// Projections p_A (A in the closure), partial isometries s_e with mutually
/// orthogonal ranges, and the union/intersection, s_e*s_e = p_r(e) and
/// vertex sum relations.
GeneratingTriple ultragraph_triple(Ultragraph const& G);

/// Rewriting to words s_alpha p_v s_beta* (see ultragraph_canonical).
RuleSet ultragraph_rules(Ultragraph const& G);

/// Normal form in which every nonzero word is s_alpha p_v s_beta* with a
/// single vertex projection in the middle.
Term ultragraph_canonical(Term const& t, Ultragraph const& G, RuleSet const& rules);

/// Basis edge paths of length 1..L, s_e e_a = e_{ea} when s(a_1) in r(e) and
/// |a| < L, p_A diagonal with entry [s(a_1) in A]. Interior: lengths 2..L-1.
Representation ultragraph_rep(Ultragraph const& G, std::size_t L);

/// s_alpha p_A s_beta* as a term.
Term ultragraph_monomial(Ultragraph const& G, Path const& alpha, VertexSet A, Path const& beta);

struct WitnessResult {
  std::vector<std::size_t> F;  // edges used by X
  std::size_t N = 0;           // longest path in X
  std::vector<VertexSet> Q;
  std::vector<VertexSet> P;    // nonzero atoms of Q
  std::vector<Path> W;
  std::vector<Term> Y;         // nonzero canonical s_alpha p s_beta*
  std::size_t span_dim = 0;    // dimension of the algebra generated by X
  std::size_t products = 0;
  bool pass = false;
  std::string witness;
};

/// Builds F, N, Q, the atoms P of Q, the paths W over F of length <= N and
/// Y = {s_alpha p s_beta*}. Verifies that X is in span Y and that the
/// subspace generated by X under left multiplication by X and X* stays
/// inside span Y, which gives C*(X) in span Y.
WitnessResult witness_span(Ultragraph const& G, std::vector<Term> const& X,
                           std::size_t budget = kDefaultStepBudget);

struct WitnessNumeric {
  std::size_t products = 0;
  std::size_t vacuous = 0;
  double max_residual = 0.0;
  std::size_t rank_y = 0;
  std::size_t rank_with_products = 0;
};

/// Replays the products of witness_span in ultragraph_rep(G, L): the
/// evaluated product rho(x) rho(v) must equal the evaluation of its span-Y
/// expansion on the basis window where truncation does not interfere, and
/// adding the products to {rho(y)} must not raise the numeric rank.
WitnessNumeric witness_rank_check(Ultragraph const& G, std::vector<Term> const& X, WitnessResult const& w,
                                  std::size_t L, double tol = 1e-10);

}  // namespace ucstar
