#include "ucstar/models.hpp"

#include <map>
#include <stdexcept>

#include "ucstar/presentation.hpp"

namespace ucstar {

namespace {

std::string join(Path const& p, char open, char close) {
  std::string s(1, open);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(p[k]);
  }
  return s + close;
}

Representation fock_letters(std::string const& prefix, std::size_t m, std::size_t L, std::string tag) {
  if (L < 2) throw std::invalid_argument("Fock depth must be at least 2");
  if (m == 0) throw std::invalid_argument("Fock model needs at least one letter");
  std::vector<Path> words{{}};
  for (std::size_t lo = 0, len = 1; len <= L; ++len) {
    std::size_t hi = words.size();
    for (std::size_t k = lo; k < hi; ++k)
      for (std::size_t i = 1; i <= m; ++i) {
        Path w = words[k];
        w.push_back(i);
        words.push_back(std::move(w));
      }
    lo = hi;
  }
  std::map<Path, std::size_t> index;
  Representation rep;
  for (std::size_t k = 0; k < words.size(); ++k) {
    index[words[k]] = k;
    rep.basis_labels.push_back(word_label(words[k]));
    rep.interior.push_back(!words[k].empty() && words[k].size() < L);
  }
  std::size_t dim = words.size();
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<SparseOperator::Entry> e;
    for (std::size_t k = 0; k < dim; ++k) {
      if (words[k].size() >= L) continue;
      Path w{i};
      w.insert(w.end(), words[k].begin(), words[k].end());
      e.push_back({index.at(w), k, 1.0});
    }
    rep.assign.emplace(family_member(prefix, i), SparseOperator::from_entries(dim, e));
  }
  rep.assign.emplace(std::string(kUnitName), SparseOperator::identity(dim));
  rep.model_tag = std::move(tag);
  rep.params = {{"m", std::to_string(m)}, {"L", std::to_string(L)}};
  return rep;
}

}  // namespace

std::string word_label(Path const& w) { return join(w, '[', ']'); }
std::string path_label(Path const& p) { return join(p, '(', ')'); }

Representation fock_rep(std::size_t n, std::size_t L) {
  if (n < 2) throw std::invalid_argument("O_n needs n >= 2");
  return fock_letters("S", n, L, "fock n=" + std::to_string(n) + " L=" + std::to_string(L));
}

Representation fock_infinity_rep(std::size_t m, std::size_t L) {
  return fock_letters("T", m, L, "fock-infinity m=" + std::to_string(m) + " L=" + std::to_string(L));
}

std::vector<Path> enumerate_paths(ZeroOneMatrix const& A, std::size_t n) {
  if (n == 0) throw std::invalid_argument("path length must be at least 1");
  std::vector<Path> cur;
  for (std::size_t i = 1; i <= A.size(); ++i) cur.push_back({i});
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<Path> next;
    for (auto const& p : cur)
      for (std::size_t j = 1; j <= A.size(); ++j)
        if (A(p.back(), j)) {
          Path q = p;
          q.push_back(j);
          next.push_back(std::move(q));
        }
    cur = std::move(next);
  }
  return cur;
}

Representation pathspace_rep(ZeroOneMatrix const& A, std::size_t L, bool unital) {
  if (A.infinite()) throw std::invalid_argument("path-space model needs a finite matrix");
  if (L < 3) throw std::invalid_argument("path-space depth must be at least 3");
  std::vector<Path> paths;
  for (std::size_t len = 1; len <= L; ++len) {
    auto p = enumerate_paths(A, len);
    paths.insert(paths.end(), p.begin(), p.end());
  }
  if (paths.empty()) throw std::logic_error("empty path space");
  std::map<Path, std::size_t> index;
  Representation rep;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    index[paths[k]] = k;
    rep.basis_labels.push_back(path_label(paths[k]));
    rep.interior.push_back(paths[k].size() >= 2 && paths[k].size() < L);
  }
  std::size_t dim = paths.size();
  for (std::size_t i = 1; i <= A.size(); ++i) {
    std::vector<SparseOperator::Entry> e;
    for (std::size_t k = 0; k < dim; ++k) {
      Path const& mu = paths[k];
      if (mu.size() >= L || !A(i, mu.front())) continue;
      Path p{i};
      p.insert(p.end(), mu.begin(), mu.end());
      e.push_back({index.at(p), k, 1.0});
    }
    rep.assign.emplace(family_member("T", i), SparseOperator::from_entries(dim, e));
  }
  if (unital) rep.assign.emplace(std::string(kUnitName), SparseOperator::identity(dim));
  rep.model_tag = "pathspace A=" + A.rows_spec() + " L=" + std::to_string(L) + " (l2(F) factor omitted)";
  rep.params = {{"m", std::to_string(A.size())}, {"L", std::to_string(L)}};
  return rep;
}

}  // namespace ucstar
