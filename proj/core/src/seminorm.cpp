#include "thurstonkit/seminorm.hpp"

#include <algorithm>
#include <set>

#include "thurstonkit/errors.hpp"
#include "thurstonkit/linalg.hpp"

namespace thurstonkit {
namespace {

void require_space(const std::string& expected, const std::string& got, const char* what) {
  if (expected != got) {
    throw ContractViolation(std::string(what) + ": space mismatch ('" + expected + "' vs '" + got + "')");
  }
}

void require_class(const PolyhedralSeminorm& x, const H2Class& alpha, const char* what) {
  require_space(x.space(), alpha.space, what);
  if (alpha.rank() != x.rank()) {
    throw ContractViolation(std::string(what) + ": class has rank " + std::to_string(alpha.rank()) +
                            ", seminorm has rank " + std::to_string(x.rank()));
  }
}

Rat max_pairing(const std::vector<RatVec>& duals, const RatVec& alpha) {
  Rat best = dot(duals.front(), alpha);
  for (std::size_t i = 1; i < duals.size(); ++i) best = std::max(best, dot(duals[i], alpha));
  return best;
}

std::vector<RatVec> hull_vertices(const std::vector<RatVec>& pts, std::size_t rank) {
  VRep v{rank, pts, {}, {}};
  return h_to_v(v_to_h(v)).vertices;
}

}  // namespace

Rat pairing(const H1Class& beta, const H2Class& alpha) {
  require_space(beta.space, alpha.space, "pairing");
  if (beta.rank() != alpha.rank()) throw ContractViolation("pairing: rank mismatch");
  return dot(beta.coords, alpha.coords);
}

LinearMap::LinearMap(RatMat matrix, std::string from_space, std::string to_space)
    : matrix_(std::move(matrix)), from_(std::move(from_space)), to_(std::move(to_space)) {}

LinearMap LinearMap::identity(std::string space, std::size_t rank) {
  return LinearMap(RatMat::identity(rank), space, space);
}

LinearMap LinearMap::zero(std::string from_space, std::size_t from_rank, std::string to_space,
                          std::size_t to_rank) {
  return LinearMap(RatMat(to_rank, from_rank), std::move(from_space), std::move(to_space));
}

H2Class LinearMap::apply(const H2Class& alpha) const {
  require_space(from_, alpha.space, "LinearMap::apply");
  if (alpha.rank() != matrix_.cols()) throw ContractViolation("LinearMap::apply: rank mismatch");
  return H2Class{to_, matrix_ * alpha.coords};
}

H1Class LinearMap::pullback(const H1Class& beta) const {
  require_space(to_, beta.space, "LinearMap::pullback");
  if (beta.rank() != matrix_.rows()) throw ContractViolation("LinearMap::pullback: rank mismatch");
  return H1Class{from_, matrix_.transpose() * beta.coords};
}

PolyhedralSeminorm::PolyhedralSeminorm(std::string space, std::size_t rank, std::vector<RatVec> duals)
    : space_(std::move(space)), rank_(rank), duals_(std::move(duals)) {
  if (rank_ == 0) throw ContractViolation("seminorm rank must be positive");
  if (duals_.empty()) duals_.push_back(RatVec(rank_));
  std::set<RatVec> set;
  for (const auto& d : duals_) {
    if (d.dim() != rank_) {
      throw ContractViolation("dual functional " + d.str() + " does not have rank " + std::to_string(rank_));
    }
    set.insert(d);
  }
  for (const auto& d : duals_) {
    if (!set.count(-d)) {
      throw ContractViolation("dual set is not closed under negation: missing " + (-d).str());
    }
  }
  reduced_ = hull_vertices(std::vector<RatVec>(set.begin(), set.end()), rank_);
  null_ = kernel_basis(RatMat::from_rows(reduced_, rank_));
}

PolyhedralSeminorm PolyhedralSeminorm::symmetrized(std::string space, std::size_t rank,
                                                   const std::vector<RatVec>& duals) {
  std::vector<RatVec> all = duals;
  for (const auto& d : duals) all.push_back(-d);
  return PolyhedralSeminorm(std::move(space), rank, std::move(all));
}

Rat eval(const PolyhedralSeminorm& x, const H2Class& alpha) {
  require_class(x, alpha, "eval");
  return max_pairing(x.reduced_duals(), alpha.coords);
}

PolyhedralSeminorm reduce_duals(const PolyhedralSeminorm& x) {
  return PolyhedralSeminorm(x.space(), x.rank(), x.reduced_duals());
}

std::vector<H2Class> null_space(const PolyhedralSeminorm& x) {
  std::vector<H2Class> out;
  for (const auto& v : x.null_basis()) out.push_back(H2Class{x.space(), v});
  return out;
}

VRep unit_ball(const PolyhedralSeminorm& x) {
  HRep h;
  h.dim = x.rank();
  for (const auto& d : x.reduced_duals()) {
    if (!d.is_zero()) h.halfspaces.push_back(HalfSpace{d, Rat(1)});
  }
  return h_to_v(h);
}

std::vector<H1Class> argmax_duals(const PolyhedralSeminorm& x, const H2Class& alpha) {
  const Rat value = eval(x, alpha);
  if (value.is_zero()) throw ZeroNormError("argmax_duals: class " + alpha.coords.str() + " has norm zero");
  std::vector<H1Class> out;
  for (const auto& d : x.reduced_duals()) {
    if (dot(d, alpha.coords) == value) out.push_back(H1Class{x.space(), d});
  }
  return out;
}

bool additive(const PolyhedralSeminorm& x, const H2Class& alpha, const H2Class& beta) {
  require_class(x, beta, "additive");
  const H2Class sum{alpha.space, alpha.coords + beta.coords};
  return eval(x, sum) == eval(x, alpha) + eval(x, beta);
}

bool same_closed_cone(const PolyhedralSeminorm& x, const H2Class& alpha, const H2Class& beta) {
  if (eval(x, alpha).is_zero() || eval(x, beta).is_zero()) return true;
  const auto lhs = argmax_duals(x, alpha);
  const auto rhs = argmax_duals(x, beta);
  for (const auto& a : lhs) {
    if (std::find(rhs.begin(), rhs.end(), a) != rhs.end()) return true;
  }
  return false;
}

bool is_corner(const PolyhedralSeminorm& x, const H2Class& alpha) {
  require_class(x, alpha, "is_corner");
  if (alpha.coords.is_zero()) throw ContractViolation("is_corner: zero class");
  if (eval(x, alpha).is_zero()) return true;
  return argmax_duals(x, alpha).size() >= 2;
}

PolyhedralSeminorm pullback_sum(const LinearMap& f1, const PolyhedralSeminorm& x1,
                                const LinearMap& f2, const PolyhedralSeminorm& x2) {
  require_space(f1.from_space(), f2.from_space(), "pullback_sum domains");
  require_space(f1.to_space(), x1.space(), "pullback_sum first codomain");
  require_space(f2.to_space(), x2.space(), "pullback_sum second codomain");
  if (f1.matrix().rows() != x1.rank() || f2.matrix().rows() != x2.rank() ||
      f1.matrix().cols() != f2.matrix().cols()) {
    throw ContractViolation("pullback_sum: map dimensions do not match the seminorms");
  }
  std::vector<RatVec> duals;
  for (const auto& b1 : x1.reduced_duals()) {
    const RatVec p1 = f1.pullback(H1Class{x1.space(), b1}).coords;
    for (const auto& b2 : x2.reduced_duals()) {
      duals.push_back(p1 + f2.pullback(H1Class{x2.space(), b2}).coords);
    }
  }
  return PolyhedralSeminorm(f1.from_space(), f1.matrix().cols(), std::move(duals));
}

ThurstonAudit check_thurston_inequality(const PolyhedralSeminorm& x, const H1Class& e,
                                        const std::vector<H2Class>& samples) {
  ThurstonAudit audit;
  audit.samples = samples.size();
  for (const auto& alpha : samples) {
    const Rat p = pairing(e, alpha);
    const Rat n = eval(x, alpha);
    if (p.abs() > n) audit.violations.push_back({alpha, p, n});
  }
  return audit;
}

bool fully_marked(const H1Class& e, const SurfaceWitness& w) {
  return pairing(e, w.cls) == Rat(w.euler_char);
}

}  // namespace thurstonkit
