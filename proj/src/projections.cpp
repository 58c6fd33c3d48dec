#include "cliffavg/projections.hpp"

namespace cliffavg {

namespace {

void check_index(const Signature& sig, MultiIndex a) {
  if ((a.mask() & ~sig.full_mask()) != 0) throw std::out_of_range("multi-index outside 1..n");
}

}  // namespace

ConjugationFormula projection_formula(const Signature& sig, MultiIndex a) {
  check_index(sig, a);
  const int n = sig.dim();
  ConjugationFormula f;
  const std::vector<MultiIndex> basis = n % 2 == 0 ? enumerate_indices(n) : first_indices(n);
  f.denominator = static_cast<long>(basis.size());
  for (MultiIndex b : basis) f.terms.emplace_back(b, comm_sign(a, b));
  return f;
}

ConjugationFormula projection_formula(MultiIndex a, const AdjointPartition& partition) {
  const Signature& sig = partition.sig();
  check_index(sig, a);
  if (sig.dim() % 2 == 0) {
    throw std::invalid_argument("adjoint-set reconstruction applies to odd n only");
  }
  ConjugationFormula f;
  f.denominator = static_cast<long>(partition.chosen().size());
  for (MultiIndex b : partition.chosen()) f.terms.emplace_back(b, comm_sign(a, b));
  return f;
}

}  // namespace cliffavg
