#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffavg/commutation.hpp"
#include "cliffavg/multivector.hpp"

namespace cliffavg {

// F_{e^A}(U) = (e^A)^{-1} U e^A, evaluated as sum_B m_{AB} pi_{e^B}(U).
template <typename Scalar>
BasicMultivector<Scalar> conjugate(const BasicMultivector<Scalar>& u, MultiIndex a) {
  BasicMultivector<Scalar> out(u.sig());
  for (std::uint32_t m = 0; m < u.size(); ++m) {
    const MultiIndex b(m);
    const Scalar& c = u.coefficients()[m];
    out.set(b, comm_sign(a, b) > 0 ? c : Scalar(-c));
  }
  return out;
}

// u_B e^B.
template <typename Scalar>
BasicMultivector<Scalar> pi_basis(const BasicMultivector<Scalar>& u, MultiIndex b) {
  return BasicMultivector<Scalar>::blade(u.sig(), b, u.coeff(b));
}

// pi_{e^A} + pi_{e^~A}; the pair projection used for odd n.
template <typename Scalar>
BasicMultivector<Scalar> pi_pair(const BasicMultivector<Scalar>& u, MultiIndex a) {
  BasicMultivector<Scalar> out = pi_basis(u, a);
  const MultiIndex adj = adjoint_index(a, u.dim());
  if (adj != a) out.set(adj, u.coeff(adj));
  return out;
}

template <typename Scalar>
struct CommutantSplit {
  MultiIndex index;
  BasicMultivector<Scalar> commuting_part;      // pi_[A](U)
  BasicMultivector<Scalar> anticommuting_part;  // pi_{A}(U)
};

template <typename Scalar>
CommutantSplit<Scalar> commutant_split(const BasicMultivector<Scalar>& u, MultiIndex a) {
  CommutantSplit<Scalar> split{a, BasicMultivector<Scalar>(u.sig()), BasicMultivector<Scalar>(u.sig())};
  for (std::uint32_t m = 0; m < u.size(); ++m) {
    const MultiIndex b(m);
    (comm_sign(a, b) > 0 ? split.commuting_part : split.anticommuting_part).set(b, u.coefficients()[m]);
  }
  return split;
}

template <typename Scalar>
BasicMultivector<Scalar> commutant_part(const BasicMultivector<Scalar>& u, MultiIndex a) {
  return commutant_split(u, a).commuting_part;
}

template <typename Scalar>
BasicMultivector<Scalar> anticommutant_part(const BasicMultivector<Scalar>& u, MultiIndex a) {
  return commutant_split(u, a).anticommuting_part;
}

// (pi_Even(U), pi_Odd(U)) = ((U + e_{1..n} U e^{1..n})/2, (U - e_{1..n} U e^{1..n})/2).
// Only valid for even n: for odd n the pseudoscalar is central.
template <typename Scalar>
std::pair<BasicMultivector<Scalar>, BasicMultivector<Scalar>> even_odd_by_pseudoscalar(
    const BasicMultivector<Scalar>& u) {
  if (u.dim() % 2 == 1) {
    throw std::invalid_argument("pseudoscalar conjugation separates parity only for even n");
  }
  const BasicMultivector<Scalar> conj = blade_conjugate(u, MultiIndex::full(u.dim()));
  return {(u + conj) / Scalar(2), (u - conj) / Scalar(2)};
}

// Coordinate projector written as a signed sum of conjugations:
// pi(U) = (1/denominator) sum_i sign_i * e_{B_i} U e^{B_i}.
struct ConjugationFormula {
  long denominator = 1;
  std::vector<std::pair<MultiIndex, int>> terms;
};

// Even n: pi_{e^A} over all B with weights m_{AB} / 2^n.
// Odd n: the pair pi_{e^A} + pi_{e^~A} over B in I_First with weights l_{AB} / 2^{n-1}.
ConjugationFormula projection_formula(const Signature& sig, MultiIndex a);
// Odd n only: as above with any adjoint set in place of I_First.
ConjugationFormula projection_formula(MultiIndex a, const AdjointPartition& partition);

template <typename Scalar>
BasicMultivector<Scalar> apply_formula(const BasicMultivector<Scalar>& u, const ConjugationFormula& f) {
  BasicMultivector<Scalar> sum(u.sig());
  for (const auto& [b, sign] : f.terms) {
    if (sign > 0) {
      sum += blade_conjugate(u, b);
    } else {
      sum -= blade_conjugate(u, b);
    }
  }
  return sum / Scalar(f.denominator);
}

// Reconstructs pi_{e^A}(U) (even n) or pi_{e^A}(U) + pi_{e^~A}(U) (odd n)
// from conjugations of U.
template <typename Scalar>
BasicMultivector<Scalar> pi_from_conjugations(const BasicMultivector<Scalar>& u, MultiIndex a) {
  return apply_formula(u, projection_formula(u.sig(), a));
}

template <typename Scalar>
BasicMultivector<Scalar> pi_from_conjugations(const BasicMultivector<Scalar>& u, MultiIndex a,
                                              const AdjointPartition& partition) {
  if (!(u.sig() == partition.sig())) throw std::invalid_argument("partition belongs to a different signature");
  return apply_formula(u, projection_formula(a, partition));
}

}  // namespace cliffavg
