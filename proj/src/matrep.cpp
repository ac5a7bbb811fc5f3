#include "ucstar/matrep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

#include "ucstar/term_text.hpp"

namespace ucstar {

double Representation::interior_fraction() const {
  if (interior.empty()) return 0.0;
  return static_cast<double>(std::count(interior.begin(), interior.end(), true)) /
         static_cast<double>(interior.size());
}

std::vector<std::size_t> Representation::interior_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < interior.size(); ++i)
    if (interior[i]) out.push_back(i);
  return out;
}

void Representation::validate() const {
  if (interior.size() != basis_labels.size()) throw std::invalid_argument("interior mask size mismatch");
  std::set<std::string> seen(basis_labels.begin(), basis_labels.end());
  if (seen.size() != basis_labels.size()) throw std::invalid_argument("duplicate basis labels");
  for (auto const& [g, op] : assign)
    if (op.dim() != dim())
      throw std::invalid_argument("operator for '" + g + "' has dimension " + std::to_string(op.dim()) +
                                  ", basis has " + std::to_string(dim()));
}

SparseOperator evaluate(Representation const& rep, Term const& t) {
  std::size_t n = rep.dim();
  std::map<Letter, SparseOperator> cache;
  auto letter = [&](Letter const& l) -> SparseOperator const& {
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    auto a = rep.assign.find(l.gen);
    if (a == rep.assign.end()) throw UnassignedGenerator("generator '" + l.gen + "' has no operator");
    return cache.emplace(l, l.star ? a->second.adjoint() : a->second).first->second;
  };
  SparseOperator::Matrix acc(static_cast<long>(n), static_cast<long>(n));
  for (auto const& [w, c] : t) {
    SparseOperator::Matrix m;
    if (w.empty()) {
      m = SparseOperator::identity(n).matrix();
    } else {
      m = letter(w[w.size() - 1]).matrix();
      for (std::size_t k = w.size() - 1; k-- > 0;) m = SparseOperator::Matrix(letter(w[k]).matrix() * m);
    }
    acc += c.to_complex() * m;
  }
  return SparseOperator(std::move(acc));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::interior_pass: return "interior-pass";
    case Verdict::fail: return "fail";
  }
  return "?";
}

namespace {

CheckReport base_report(Representation const& rep, std::string id, std::string kind, double tol) {
  CheckReport r;
  r.id = std::move(id);
  r.kind = std::move(kind);
  r.tolerance = tol;
  r.interior_fraction = rep.interior_fraction();
  r.params = rep.params;
  return r;
}

// Interior basis vector whose column of `op` is largest.
std::optional<std::string> worst_column(Representation const& rep, SparseOperator const& op) {
  double best = -1.0;
  std::optional<std::string> label;
  for (auto i : rep.interior_indices()) {
    double c = op.column_norm(i);
    if (c > best) {
      best = c;
      label = rep.basis_labels[i];
    }
  }
  return label;
}

}  // namespace

CheckReport check_norm(Representation const& rep, NormRelation const& r, double tol) {
  CheckReport out = base_report(rep, r.id, "norm", tol);
  double bound = r.bound.get_d();
  out.bound = bound;
  SparseOperator x = evaluate(rep, r.term);
  out.full_residual = operator_norm(x, tol);
  SparseOperator px = x.compress(rep.interior);
  out.interior_residual = operator_norm(px, tol);
  if (out.full_residual <= bound + tol) {
    out.verdict = Verdict::pass;
    out.residual = out.full_residual;
  } else if (out.interior_residual <= bound + tol) {
    out.verdict = Verdict::interior_pass;
    out.residual = out.interior_residual;
  } else {
    out.verdict = Verdict::fail;
    out.residual = out.interior_residual;
    out.witness = worst_column(rep, px);
  }
  return out;
}

CheckReport check_sot(Representation const& rep, SotNet const& net, std::vector<NetIndex> const& schedule, double eps,
                      double tol) {
  if (!net.certificate)
    throw CheckRefused("net '" + net.id + "' has no bound certificate; SOT convergence is not checked");
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  if (schedule.empty()) throw std::invalid_argument("net '" + net.id + "': empty schedule");
  CheckReport out = base_report(rep, net.id, "sot", tol);
  double bound = net.certificate->bound.get_d();
  out.bound = bound;
  std::vector<Term> elems = sample_net(net, schedule);
  for (auto const& idx : schedule) out.schedule.push_back(to_string(idx));

  std::vector<SparseOperator> ops;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    ops.push_back(evaluate(rep, elems[k]));
    double nrm = operator_norm(ops.back(), tol);
    out.certificate_max = std::max(out.certificate_max, nrm);
    if (nrm > bound + tol && !out.witness) out.witness = "certificate violated at index " + out.schedule[k];
  }

  std::optional<std::string> stuck;
  for (auto i : rep.interior_indices()) {
    Convergence c{rep.basis_labels[i], std::nullopt, std::nullopt};
    std::size_t pos = ops.size();
    while (pos > 0 && ops[pos - 1].column_norm(i) <= eps) --pos;
    if (pos < ops.size()) {
      c.position = pos;
      c.index = out.schedule[pos];
    } else if (!stuck) {
      stuck = c.label;
    }
    out.convergence.push_back(std::move(c));
  }
  out.residual = 0.0;
  for (auto i : rep.interior_indices()) out.residual = std::max(out.residual, ops.back().column_norm(i));
  out.full_residual = out.certificate_max;
  out.interior_residual = out.residual;
  if (out.witness) {
    out.verdict = Verdict::fail;
  } else if (stuck) {
    out.verdict = Verdict::fail;
    out.witness = stuck;
  } else {
    out.verdict = Verdict::pass;
  }
  return out;
}

CheckReport check_orthogonal_ranges(Representation const& rep, std::vector<std::string> const& gens, double tol) {
  CheckReport out = base_report(rep, "orthogonal-ranges", "orthogonal-ranges", tol);
  std::vector<SparseOperator> ranges;
  for (auto const& g : gens) {
    SparseOperator p = evaluate(rep, Term(Word{gen(g), star(g)}));
    double err = std::max((p * p - p).max_abs_diff(SparseOperator(p.dim())),
                          (p - p.adjoint()).max_abs_diff(SparseOperator(p.dim())));
    if (err > tol) throw std::invalid_argument("range of '" + g + "' is not a projection");
    ranges.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      double r = operator_norm(ranges[i] * ranges[j], tol);
      if (r > out.residual) {
        out.residual = r;
        out.witness = gens[i] + "," + gens[j];
      }
    }
  out.full_residual = out.residual;
  out.verdict = out.residual <= tol ? Verdict::pass : Verdict::fail;
  if (out.verdict == Verdict::pass) out.witness.reset();
  return out;
}

Representation direct_sum(Representation const& a, Representation const& b) {
  std::set<std::string> ga, gb;
  for (auto const& [g, op] : a.assign) ga.insert(g);
  for (auto const& [g, op] : b.assign) gb.insert(g);
  if (ga != gb) throw std::invalid_argument("direct sum of representations with different generator sets");
  Representation s;
  for (auto const& l : a.basis_labels) s.basis_labels.push_back("1:" + l);
  for (auto const& l : b.basis_labels) s.basis_labels.push_back("2:" + l);
  s.interior = a.interior;
  s.interior.insert(s.interior.end(), b.interior.begin(), b.interior.end());
  for (auto const& g : ga) s.assign.emplace(g, block_diagonal(a.assign.at(g), b.assign.at(g)));
  s.model_tag = a.model_tag + " (+) " + b.model_tag;
  for (auto const& [k, v] : a.params) s.params["1:" + k] = v;
  for (auto const& [k, v] : b.params) s.params["2:" + k] = v;
  return s;
}

std::vector<NetIndex> make_schedule(IndexScheme const& scheme, std::vector<std::size_t> const& points) {
  std::vector<NetIndex> out;
  for (auto p : points) {
    if (scheme.kind == SchemeKind::naturals) {
      out.emplace_back(p);
    } else {
      std::vector<std::size_t> s;
      for (std::size_t k = 1; k <= p; ++k) s.push_back(k);
      out.push_back(subset_index(std::move(s)));
    }
  }
  return out;
}

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (char const* env = std::getenv("UCSTAR_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = static_cast<std::size_t>(v);
  }
  return n;
}

std::vector<CheckReport> run_checks(Representation const& rep, GeneratingTriple const& triple,
                                    CheckConfig const& config) {
  auto const& norms = triple.norm_relations();
  auto const& nets = triple.sot_relations();
  std::size_t total = norms.size() + nets.size();
  std::vector<CheckReport> reports(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t k; (k = next++) < total;) {
      try {
        if (k < norms.size()) {
          reports[k] = check_norm(rep, norms[k], config.tol);
        } else {
          SotNet const& net = nets[k - norms.size()];
          try {
            reports[k] = check_sot(rep, net, make_schedule(net.scheme, config.schedule), config.eps, config.tol);
          } catch (CheckRefused const& e) {
            CheckReport r = base_report(rep, net.id, "sot", config.tol);
            r.verdict = Verdict::fail;
            r.note = "refused";
            r.witness = e.what();
            reports[k] = std::move(r);
          }
        }
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::size_t threads = std::min(worker_count(), std::max<std::size_t>(total, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto const& e : errors)
    if (e) std::rethrow_exception(e);
  return reports;
}

}  // namespace ucstar
