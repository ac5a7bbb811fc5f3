#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ucstar/proj_lattice.hpp"
#include "ucstar/span.hpp"
#include "ucstar/term_text.hpp"
#include "ucstar/ultragraph.hpp"

namespace ucstar {

namespace {

struct Letters {
  std::map<std::string, std::size_t> edge;
  std::map<std::string, VertexSet> proj;
};

Letters letter_maps(Ultragraph const& G) {
  Letters m;
  for (std::size_t e = 0; e < G.edges().size(); ++e) m.edge[G.edge_name(e)] = e;
  for (VertexSet A = 0; A <= G.all_vertices(); ++A) m.proj[G.projection_name(A)] = A;
  return m;
}

}  // namespace

WitnessResult witness_span(Ultragraph const& G, std::vector<Term> const& X, std::size_t budget) {
  WitnessResult res;
  RuleSet rules = ultragraph_rules(G);
  Letters lm = letter_maps(G);
  auto canon = [&](Term const& t) { return normalize(ultragraph_canonical(t, G, rules), rules, budget); };

  std::set<std::size_t> F;
  std::set<VertexSet> Q;
  for (auto const& x : X)
    for (auto const& [w, c] : x) {
      std::size_t up = 0, down = 0;
      for (auto const& l : w) {
        if (auto e = lm.edge.find(l.gen); e != lm.edge.end()) {
          F.insert(e->second);
          (l.star ? down : up) += 1;
        } else if (auto p = lm.proj.find(l.gen); p != lm.proj.end()) {
          Q.insert(p->second);
        } else {
          throw std::invalid_argument("'" + l.gen + "' is not an ultragraph generator");
        }
      }
      res.N = std::max({res.N, up, down});
    }
  for (auto e : F) Q.insert(G.edges()[e].range);
  res.F.assign(F.begin(), F.end());
  res.Q.assign(Q.begin(), Q.end());

  // Atoms of Q through the inclusion-exclusion expansion, rewritten to vertex sums.
  if (!res.Q.empty()) {
    std::vector<std::string> names;
    for (auto A : res.Q) names.push_back(G.projection_name(A));
    for (SubsetMask S = 1; S < (SubsetMask{1} << names.size()); ++S) {
      Term a = normalize(atom_term(S, names), rules, budget);
      if (a.is_zero()) continue;
      VertexSet set = 0;
      for (auto const& [w, c] : a) {
        if (w.size() != 1 || !(c == Coefficient(1)) || !lm.proj.count(w[0].gen))
          throw std::logic_error("atom did not reduce to a sum of vertex projections: " + to_string(a));
        set |= lm.proj.at(w[0].gen);
      }
      res.P.push_back(set);
    }
  }

  res.W.push_back({});
  for (std::size_t n = 1; n <= res.N; ++n)
    for (auto const& p : enumerate_paths(G, n))
      if (std::all_of(p.begin(), p.end(), [&](std::size_t e) { return F.count(e) > 0; })) res.W.push_back(p);

  ExactSpan spanY;
  for (auto const& a : res.W)
    for (auto const& b : res.W)
      for (auto p : res.P) {
        Term y = canon(ultragraph_monomial(G, a, p, b));
        if (y.is_zero()) continue;
        res.Y.push_back(y);
        spanY.insert(y);
      }

  std::vector<Term> gens;
  for (auto const& x : X) {
    gens.push_back(canon(x));
    gens.push_back(canon(x.adjoint()));
  }
  ExactSpan V;
  std::deque<Term> queue;
  auto admit = [&](Term const& t, std::string const& what) {
    if (!spanY.contains(t)) {
      res.witness = what + " = " + to_string(t) + " is not in span Y";
      return false;
    }
    if (V.insert(t)) queue.push_back(t);
    return true;
  };
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!admit(gens[k], to_string(gens[k]))) return res;
  while (!queue.empty()) {
    Term v = std::move(queue.front());
    queue.pop_front();
    for (auto const& x : gens) {
      ++res.products;
      Term xv = canon(x * v);
      if (!admit(xv, "(" + to_string(x) + ")*(" + to_string(v) + ")")) return res;
    }
  }
  res.span_dim = V.dim();
  res.pass = true;
  return res;
}

namespace {

using Vec = std::map<std::size_t, Complex>;

Vec windowed(SparseOperator const& op, std::vector<bool> const& window) {
  Vec v;
  std::size_t n = op.dim();
  for (auto const& e : op.entries())
    if (window[e.col]) v[e.row * n + e.col] = e.value;
  return v;
}

Complex dot(Vec const& a, Vec const& b) {
  Complex s = 0.0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) ++i;
    else if (j->first < i->first) ++j;
    else {
      s += std::conj(i->second) * j->second;
      ++i;
      ++j;
    }
  }
  return s;
}

long shift(Word const& w, Signature const& sig) { return degree(w, sig); }

}  // namespace

WitnessNumeric witness_rank_check(Ultragraph const& G, std::vector<Term> const& X, WitnessResult const& w,
                                  std::size_t L, double tol) {
  if (!w.pass) throw std::invalid_argument("witness_rank_check needs a passing witness: " + w.witness);
  WitnessNumeric out;
  RuleSet rules = ultragraph_rules(G);
  Signature const& sig = rules.signature();
  Representation rep = ultragraph_rep(G, L);
  auto canon = [&](Term const& t) { return normalize(ultragraph_canonical(t, G, rules), rules); };

  std::vector<std::size_t> length(rep.dim());
  for (std::size_t k = 0; k < rep.dim(); ++k)
    length[k] = static_cast<std::size_t>(std::count(rep.basis_labels[k].begin(), rep.basis_labels[k].end(), ',')) + 1;

  std::vector<Term> gens;
  for (auto const& x : X) {
    gens.push_back(canon(x));
    gens.push_back(canon(x.adjoint()));
  }
  // Regenerate the closure subspace as in witness_span.
  ExactSpan V;
  std::vector<Term> basis;
  for (auto const& g : gens)
    if (V.insert(g)) basis.push_back(g);
  struct Product {
    Term x, v, xv;
    std::size_t g;
  };
  std::vector<Product> products;
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (auto const& x : gens) {
      Term xv = canon(x * basis[k]);
      long g = 0;
      for (auto const& [wv, cv] : basis[k])
        for (auto const& [wx, cx] : x) {
          long dv = shift(wv, sig), dx = shift(wx, sig);
          g = std::max({g, dv, dv + dx});
        }
      products.push_back({x, basis[k], xv, static_cast<std::size_t>(g)});
      if (V.insert(xv)) basis.push_back(xv);
    }

  std::map<std::size_t, std::vector<Product const*>> groups;
  for (auto const& p : products) groups[p.g].push_back(&p);
  for (auto const& [g, group] : groups) {
    std::vector<bool> window(rep.dim());
    bool any = false;
    for (std::size_t k = 0; k < rep.dim(); ++k) any |= (window[k] = length[k] + g <= L);
    if (!any) {
      out.vacuous += group.size();
      continue;
    }
    std::vector<Vec> ys;
    for (auto const& y : w.Y) ys.push_back(windowed(evaluate(rep, y), window));
    std::size_t m = ys.size();
    Eigen::MatrixXcd Gram(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) {
        Gram(a, b) = dot(ys[a], ys[b]);
        Gram(b, a) = std::conj(Gram(a, b));
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(Gram);
    double top = m ? eig.eigenvalues().cwiseAbs().maxCoeff() : 0.0;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(m);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < m; ++k)
      if (eig.eigenvalues()(k) > 1e-9 * std::max(top, 1.0)) {
        inv(k) = 1.0 / eig.eigenvalues()(k);
        ++rank;
      }
    Eigen::MatrixXcd pinv = eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().adjoint();
    out.rank_y += rank;
    std::size_t extra = 0;
    std::vector<Vec> added;
    for (auto const* p : group) {
      ++out.products;
      SparseOperator direct = evaluate(rep, p->x) * evaluate(rep, p->v);
      SparseOperator expanded = evaluate(rep, p->xv);
      Vec b = windowed(direct, window);
      Vec e = windowed(expanded, window);
      for (auto const& [k, val] : e) b[k] -= val;
      for (auto const& [k, val] : b) out.max_residual = std::max(out.max_residual, std::abs(val));
      // Projection of the directly evaluated product onto span{rho(y)}.
      Vec d = windowed(direct, window);
      Eigen::VectorXcd c(m);
      for (std::size_t a = 0; a < m; ++a) c(a) = dot(ys[a], d);
      Eigen::VectorXcd coef = pinv * c;
      Vec r = d;
      for (std::size_t a = 0; a < m; ++a)
        for (auto const& [k, val] : ys[a]) r[k] -= coef(a) * val;
      for (auto const& q : added) {
        Complex proj = dot(q, r);
        for (auto const& [k, val] : q) r[k] -= proj * val;
      }
      double rn = std::sqrt(std::abs(dot(r, r)));
      if (rn > std::sqrt(tol)) {
        for (auto& [k, val] : r) val /= rn;
        added.push_back(std::move(r));
        ++extra;
      }
    }
    out.rank_with_products += rank + extra;
  }
  return out;
}

}  // namespace ucstar
