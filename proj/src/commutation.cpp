#include "cliffavg/commutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cliffavg {

namespace {

void check_dim(int n) {
  if (n < 1 || n > Signature::kHardMaxDim) throw std::invalid_argument("dimension out of range");
}

SignMatrix sign_matrix(int n, SignMatrixKind kind, std::vector<MultiIndex> order) {
  const auto size = static_cast<Eigen::Index>(order.size());
  SignMatrix m{n, kind, std::move(order), Eigen::MatrixXi(size, size)};
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      m.entries(i, j) = comm_sign(m.order[i], m.order[j]);
    }
  }
  return m;
}

}  // namespace

SignMatrix build_M(int n) {
  check_dim(n);
  return sign_matrix(n, SignMatrixKind::Full, enumerate_indices(n));
}

SignMatrix build_L(int n) {
  check_dim(n);
  if (n % 2 == 0) throw std::invalid_argument("L_n is defined for odd n only");
  return sign_matrix(n, SignMatrixKind::Reduced, first_indices(n));
}

std::vector<MultiIndex> first_indices(int n) {
  check_dim(n);
  std::vector<MultiIndex> all = enumerate_indices(n);
  all.resize(all.size() / 2);
  return all;
}

AdjointPartition::AdjointPartition(const Signature& sig, std::vector<MultiIndex> chosen)
    : sig_(sig), chosen_(std::move(chosen)), member_(sig.size(), false) {
  const int n = sig.dim();
  for (MultiIndex a : chosen_) {
    if ((a.mask() & ~sig.full_mask()) != 0) throw std::invalid_argument("multi-index outside 1..n");
    if (member_[a.mask()]) throw std::invalid_argument("adjoint set lists a multi-index twice");
    member_[a.mask()] = true;
  }
  if (chosen_.size() != sig.size() / 2) {
    throw std::invalid_argument("adjoint set must contain exactly 2^{n-1} multi-indices");
  }
  for (MultiIndex a : chosen_) {
    if (member_[adjoint_index(a, n).mask()]) {
      throw std::invalid_argument("adjoint set contains a complementary pair");
    }
  }
  std::sort(chosen_.begin(), chosen_.end(), canonical_less);
}

AdjointPartition AdjointPartition::complement() const {
  std::vector<MultiIndex> rest;
  rest.reserve(chosen_.size());
  for (MultiIndex a : chosen_) rest.push_back(adjoint_index(a, sig_.dim()));
  return AdjointPartition(sig_, std::move(rest));
}

StandardPartitions standard_partitions(const Signature& sig) {
  AdjointPartition first(sig, first_indices(sig.dim()));
  AdjointPartition last = first.complement();
  std::optional<AdjointPartition> even;
  if (sig.dim() % 2 == 1) even = even_partition(sig);
  return {std::move(first), std::move(last), std::move(even)};
}

AdjointPartition even_partition(const Signature& sig) {
  if (sig.dim() % 2 == 0) {
    throw std::invalid_argument("I_Even is an adjoint set only for odd n");
  }
  std::vector<MultiIndex> even;
  for (MultiIndex a : enumerate_indices(sig)) {
    if (a.is_even()) even.push_back(a);
  }
  return AdjointPartition(sig, std::move(even));
}

AdjointPartition random_adjoint_partition(const Signature& sig, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<MultiIndex> chosen;
  for (MultiIndex a : first_indices(sig.dim())) {
    chosen.push_back(coin(rng) ? a : adjoint_index(a, sig.dim()));
  }
  return AdjointPartition(sig, std::move(chosen));
}

CommutationCounts count_commutation(MultiIndex a, int n) {
  check_dim(n);
  CommutationCounts c;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    const MultiIndex b(m);
    const bool commutes = comm_sign(a, b) > 0;
    if (b.is_even()) {
      ++(commutes ? c.even_comm : c.even_anti);
    } else {
      ++(commutes ? c.odd_comm : c.odd_anti);
    }
  }
  return c;
}

PartitionCounts count_partition_commutation(MultiIndex a, const AdjointPartition& partition) {
  PartitionCounts c;
  for (std::uint32_t m = 0; m < partition.sig().size(); ++m) {
    const MultiIndex b(m);
    const bool commutes = comm_sign(a, b) > 0;
    if (partition.contains(b)) {
      ++(commutes ? c.adj_comm : c.adj_anti);
    } else {
      ++(commutes ? c.rest_comm : c.rest_anti);
    }
  }
  return c;
}

CommutationTable export_table(int n) {
  const SignMatrix m = build_M(n);
  CommutationTable t{n, m.order, {}};
  t.rows.reserve(m.order.size());
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    std::vector<int> row(m.entries.cols());
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) row[j] = m.entries(i, j);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace cliffavg
