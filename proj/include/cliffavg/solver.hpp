#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffavg/averaging.hpp"
#include "cliffavg/commutation.hpp"
#include "cliffavg/multivector.hpp"
#include "cliffavg/projections.hpp"

namespace cliffavg {

enum class SolutionKind { Unique, Coset, Inconsistent };

enum class FreedomKind { None, Center, Commutant, Anticommutant };

// Subspace of admissible additions to a particular solution. Commutant and
// Anticommutant are taken relative to e^anchor.
struct Freedom {
  FreedomKind kind = FreedomKind::None;
  MultiIndex anchor;

  friend bool operator==(const Freedom&, const Freedom&) = default;
};

// Basis blades spanning the free subspace, in canonical order.
inline std::vector<MultiIndex> free_basis(const Signature& sig, const Freedom& f) {
  std::vector<MultiIndex> out;
  for (MultiIndex b : enumerate_indices(sig)) {
    switch (f.kind) {
      case FreedomKind::None:
        break;
      case FreedomKind::Center:
        if (b.empty() || (sig.dim() % 2 == 1 && b == MultiIndex::full(sig.dim()))) out.push_back(b);
        break;
      case FreedomKind::Commutant:
        if (comm_sign(f.anchor, b) > 0) out.push_back(b);
        break;
      case FreedomKind::Anticommutant:
        if (comm_sign(f.anchor, b) < 0) out.push_back(b);
        break;
    }
  }
  return out;
}

template <typename Scalar>
bool in_free_subspace(const BasicMultivector<Scalar>& u, const Freedom& f) {
  BasicMultivector<Scalar> rest = u;
  for (MultiIndex b : free_basis(u.sig(), f)) rest.set(b, Scalar(0));
  return rest.is_zero();
}

template <typename Scalar>
struct BasicSolution {
  SolutionKind kind = SolutionKind::Inconsistent;
  std::optional<BasicMultivector<Scalar>> particular;
  Freedom freedom;
  // e^A X + eps X e^A - Q^A for every failing equation, canonical order.
  std::vector<std::pair<MultiIndex, BasicMultivector<Scalar>>> residuals;
};

using Solution = BasicSolution<Rational>;

// e^A X + eps X e^A - Q.
template <typename Scalar>
BasicMultivector<Scalar> equation_residual(const BasicMultivector<Scalar>& x, MultiIndex a, const Scalar& eps,
                                           const BasicMultivector<Scalar>& q) {
  const SignedBlade blade{1, a};
  return left_multiply(blade, x) + right_multiply(x, blade) * eps - q;
}

// Single equation e^A X + eps X e^A = Q^A.
template <typename Scalar>
class BasicEquation {
public:
  BasicEquation(MultiIndex a, Scalar eps, BasicMultivector<Scalar> q)
      : index_(a), eps_(std::move(eps)), q_(std::move(q)) {
    if (is_zero_scalar(eps_)) throw std::invalid_argument("epsilon must be nonzero");
    if ((a.mask() & ~q_.sig().full_mask()) != 0) throw std::invalid_argument("multi-index outside 1..n");
  }

  MultiIndex index() const { return index_; }
  const Scalar& epsilon() const { return eps_; }
  const BasicMultivector<Scalar>& rhs() const { return q_; }
  const Signature& sig() const { return q_.sig(); }

private:
  MultiIndex index_;
  Scalar eps_;
  BasicMultivector<Scalar> q_;
};

using EquationInstance = BasicEquation<Rational>;

// System e^A X + eps X e^A = Q^A for every A in I.
template <typename Scalar>
class BasicSystem {
public:
  // Throws std::invalid_argument if eps is zero, a multi-index is missing, or
  // right-hand sides disagree on the signature.
  BasicSystem(const Signature& sig, Scalar eps, const std::map<MultiIndex, BasicMultivector<Scalar>>& rhs)
      : sig_(sig), eps_(std::move(eps)) {
    if (is_zero_scalar(eps_)) throw std::invalid_argument("epsilon must be nonzero");
    rhs_.reserve(sig.size());
    for (std::uint32_t m = 0; m < sig.size(); ++m) {
      const auto it = rhs.find(MultiIndex(m));
      if (it == rhs.end()) throw std::invalid_argument("right-hand side missing for a multi-index");
      if (!(it->second.sig() == sig)) throw std::invalid_argument("right-hand side has a different signature");
      rhs_.push_back(it->second);
    }
    if (rhs.size() != sig.size()) throw std::invalid_argument("right-hand side lists a multi-index outside 1..n");
  }

  // Right-hand sides produced by X: Q^A = e^A X + eps X e^A.
  static BasicSystem generated_by(const BasicMultivector<Scalar>& x, const Scalar& eps) {
    std::map<MultiIndex, BasicMultivector<Scalar>> rhs;
    const BasicMultivector<Scalar> zero(x.sig());
    for (std::uint32_t m = 0; m < x.size(); ++m) {
      rhs.emplace(MultiIndex(m), equation_residual(x, MultiIndex(m), eps, zero));
    }
    return BasicSystem(x.sig(), eps, rhs);
  }

  const Signature& sig() const { return sig_; }
  const Scalar& epsilon() const { return eps_; }
  const BasicMultivector<Scalar>& rhs(MultiIndex a) const { return rhs_.at(a.mask()); }
  void set_rhs(MultiIndex a, BasicMultivector<Scalar> q) {
    if (!(q.sig() == sig_)) throw std::invalid_argument("right-hand side has a different signature");
    rhs_.at(a.mask()) = std::move(q);
  }

private:
  Signature sig_;
  Scalar eps_;
  std::vector<BasicMultivector<Scalar>> rhs_;
};

using SystemInstance = BasicSystem<Rational>;

struct ConsistencyReport {
  bool consistent = true;
  // Multi-indices whose condition fails, canonical order.
  std::vector<MultiIndex> witnesses;
};

namespace detail {

template <typename Scalar>
BasicSolution<Scalar> certify(BasicSolution<Scalar> sol, const BasicSystem<Scalar>& sys) {
  for (MultiIndex a : enumerate_indices(sys.sig())) {
    BasicMultivector<Scalar> r = equation_residual(*sol.particular, a, sys.epsilon(), sys.rhs(a));
    if (!r.is_zero()) sol.residuals.emplace_back(a, std::move(r));
  }
  if (!sol.residuals.empty()) {
    sol.kind = SolutionKind::Inconsistent;
    sol.particular.reset();
    sol.freedom = {};
  }
  return sol;
}

}  // namespace detail

template <typename Scalar>
BasicSolution<Scalar> solve_single(const BasicEquation<Scalar>& eq) {
  const Signature& sig = eq.sig();
  const MultiIndex a = eq.index();
  const Scalar& eps = eq.epsilon();
  // e_A Q^A
  const BasicMultivector<Scalar> reduced = left_multiply(blade_inverse(sig, a), eq.rhs());

  BasicSolution<Scalar> sol;
  if (eps == Scalar(1) || eps == Scalar(-1)) {
    const bool commutator = eps == Scalar(-1);
    CommutantSplit<Scalar> split = commutant_split(reduced, a);
    const BasicMultivector<Scalar>& obstruction = commutator ? split.commuting_part : split.anticommuting_part;
    const BasicMultivector<Scalar>& kept = commutator ? split.anticommuting_part : split.commuting_part;
    BasicMultivector<Scalar> candidate = kept / Scalar(2);
    if (!obstruction.is_zero()) {
      sol.kind = SolutionKind::Inconsistent;
      sol.residuals.emplace_back(a, equation_residual(candidate, a, eps, eq.rhs()));
      return sol;
    }
    sol.kind = SolutionKind::Coset;
    sol.freedom = {commutator ? FreedomKind::Commutant : FreedomKind::Anticommutant, a};
    sol.particular = std::move(candidate);
  } else {
    BasicMultivector<Scalar> x(sig);
    for (std::uint32_t m = 0; m < sig.size(); ++m) {
      const MultiIndex b(m);
      x.set(b, reduced.coefficients()[m] / (Scalar(1) + eps * Scalar(comm_sign(a, b))));
    }
    sol.kind = SolutionKind::Unique;
    sol.particular = std::move(x);
  }

  if (!equation_residual(*sol.particular, a, eps, eq.rhs()).is_zero()) {
    throw std::logic_error("closed-form solution failed re-substitution");
  }
  return sol;
}

template <typename Scalar>
BasicSolution<Scalar> solve_system(const BasicSystem<Scalar>& sys) {
  const Signature& sig = sys.sig();
  const Scalar& eps = sys.epsilon();
  const Scalar two_n(static_cast<long>(sig.size()));

  // sum_A Q^A e_A
  BasicMultivector<Scalar> folded(sig);
  for (MultiIndex a : enumerate_indices(sig)) folded += right_multiply(sys.rhs(a), blade_inverse(sig, a));

  BasicSolution<Scalar> sol;
  if (eps == Scalar(-1)) {
    sol.kind = SolutionKind::Coset;
    sol.freedom = {FreedomKind::Center, MultiIndex{}};
    sol.particular = -folded / two_n;
  } else {
    sol.kind = SolutionKind::Unique;
    sol.particular = (folded - center_project(folded) / (eps + Scalar(1))) / (two_n * eps);
  }
  return detail::certify(std::move(sol), sys);
}

// Solvability test for eps != -1: every Q^A must equal
// (e^A Q^- + eps Q^- e^A) / (1 + eps), Q^- being the right-hand side of the
// empty multi-index.
template <typename Scalar>
ConsistencyReport check_consistency_nonneg(const BasicSystem<Scalar>& sys) {
  const Scalar& eps = sys.epsilon();
  if (eps == Scalar(-1)) throw std::invalid_argument("check_consistency_nonneg requires epsilon != -1");
  const BasicMultivector<Scalar>& q0 = sys.rhs(MultiIndex{});
  const BasicMultivector<Scalar> zero(sys.sig());
  ConsistencyReport report;
  for (MultiIndex a : enumerate_indices(sys.sig())) {
    const BasicMultivector<Scalar> expected = equation_residual(q0, a, eps, zero) / (Scalar(1) + eps);
    if (!(expected == sys.rhs(a))) {
      report.consistent = false;
      report.witnesses.push_back(a);
    }
  }
  return report;
}

// Solvability test for eps = -1: for every A the center part of Q^A e_A
// vanishes and e_A Q^A = (2 / 2^n) pi_{A}(sum_B e_B Q^B).
template <typename Scalar>
ConsistencyReport check_consistency_comm(const BasicSystem<Scalar>& sys) {
  if (!(sys.epsilon() == Scalar(-1))) throw std::invalid_argument("check_consistency_comm requires epsilon = -1");
  const Signature& sig = sys.sig();
  BasicMultivector<Scalar> total(sig);
  for (MultiIndex b : enumerate_indices(sig)) total += left_multiply(blade_inverse(sig, b), sys.rhs(b));
  const Scalar scale = Scalar(2) / Scalar(static_cast<long>(sig.size()));

  ConsistencyReport report;
  for (MultiIndex a : enumerate_indices(sig)) {
    const SignedBlade inv = blade_inverse(sig, a);
    const bool center_ok = center_project(right_multiply(sys.rhs(a), inv)).is_zero();
    const bool split_ok = left_multiply(inv, sys.rhs(a)) == anticommutant_part(total, a) * scale;
    if (!center_ok || !split_ok) {
      report.consistent = false;
      report.witnesses.push_back(a);
    }
  }
  return report;
}

}  // namespace cliffavg
