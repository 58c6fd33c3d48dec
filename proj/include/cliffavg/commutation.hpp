#pragma once

#include <optional>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "cliffavg/signature.hpp"

namespace cliffavg {

// m_{AB}: +1 when e^A and e^B commute, -1 when they anticommute. Does not
// depend on the metric.
constexpr int comm_sign(MultiIndex a, MultiIndex b) {
  const int exponent = a.size() * b.size() - std::popcount(a.mask() & b.mask());
  return (exponent & 1) ? -1 : 1;
}

// Complementary multi-index within 1..n.
constexpr MultiIndex adjoint_index(MultiIndex a, int n) {
  return MultiIndex(a.mask() ^ MultiIndex::full(n).mask());
}

enum class SignMatrixKind { Full, Reduced };

// Symmetric +-1 matrix of commutation signs. Full is M_n over all of I;
// Reduced is L_n over I_First (odd n only). Rows and columns follow `order`.
struct SignMatrix {
  int n = 0;
  SignMatrixKind kind = SignMatrixKind::Full;
  std::vector<MultiIndex> order;
  Eigen::MatrixXi entries;
};

SignMatrix build_M(int n);
// Throws std::invalid_argument for even n.
SignMatrix build_L(int n);

// I_First: the first 2^{n-1} multi-indices in canonical order.
std::vector<MultiIndex> first_indices(int n);

// One multi-index out of every complementary pair {A, ~A}.
class AdjointPartition {
public:
  // Throws std::invalid_argument unless `chosen` holds exactly one of A, ~A for every A.
  AdjointPartition(const Signature& sig, std::vector<MultiIndex> chosen);

  const Signature& sig() const { return sig_; }
  // Members in canonical order.
  const std::vector<MultiIndex>& chosen() const { return chosen_; }
  bool contains(MultiIndex a) const { return member_[a.mask()]; }
  // The complementary set, itself a valid partition.
  AdjointPartition complement() const;

private:
  Signature sig_;
  std::vector<MultiIndex> chosen_;
  std::vector<bool> member_;
};

struct StandardPartitions {
  AdjointPartition first;
  AdjointPartition last;
  std::optional<AdjointPartition> even;  // odd n only
};

StandardPartitions standard_partitions(const Signature& sig);
// I_Even as an adjoint set; throws std::invalid_argument for even n.
AdjointPartition even_partition(const Signature& sig);
// Uniformly random choice of one member per complementary pair.
AdjointPartition random_adjoint_partition(const Signature& sig, std::mt19937_64& rng);

struct CommutationCounts {
  int even_comm = 0;
  int odd_comm = 0;
  int even_anti = 0;
  int odd_anti = 0;

  friend bool operator==(const CommutationCounts&, const CommutationCounts&) = default;
};

// How many even/odd basis blades commute or anticommute with e^A.
CommutationCounts count_commutation(MultiIndex a, int n);

struct PartitionCounts {
  int adj_comm = 0;
  int adj_anti = 0;
  int rest_comm = 0;
  int rest_anti = 0;

  friend bool operator==(const PartitionCounts&, const PartitionCounts&) = default;
};

// Commuting/anticommuting blades of e^A split by membership in the partition.
PartitionCounts count_partition_commutation(MultiIndex a, const AdjointPartition& partition);

struct CommutationTable {
  int n = 0;
  std::vector<MultiIndex> order;
  std::vector<std::vector<int>> rows;
};

CommutationTable export_table(int n);

}  // namespace cliffavg
