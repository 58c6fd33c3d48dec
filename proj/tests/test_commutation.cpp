#include <doctest.h>

#include "cliffavg/commutation.hpp"
#include "oracle.hpp"
#include "reference_fixtures.hpp"

using namespace cliffavg;

namespace {

MultiIndex idx(std::initializer_list<int> list) {
  std::vector<int> v(list);
  return MultiIndex::from_indices(v);
}

fixtures::Rows rows_of(const SignMatrix& m) {
  fixtures::Rows out(m.entries.rows(), std::vector<int>(m.entries.cols()));
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) out[i][j] = m.entries(i, j);
  }
  return out;
}

}  // namespace

TEST_CASE("comm_sign examples") {
  CHECK(comm_sign(idx({1}), idx({2})) == -1);
  CHECK(comm_sign(idx({2}), idx({1, 3})) == 1);
  for (MultiIndex b : enumerate_indices(5)) CHECK(comm_sign(MultiIndex{}, b) == 1);
}

TEST_CASE("comm_sign is symmetric") {
  for (MultiIndex a : enumerate_indices(7)) {
    for (MultiIndex b : enumerate_indices(7)) REQUIRE(comm_sign(a, b) == comm_sign(b, a));
  }
}

TEST_CASE("comm_sign matches blade products for every signature, n <= 6") {
  for (const Signature& sig : oracle::signatures_up_to(6)) {
    for (MultiIndex a : enumerate_indices(sig)) {
      for (MultiIndex b : enumerate_indices(sig)) {
        const auto ab = oracle::multiply_lists(sig, oracle::to_list(a), oracle::to_list(b));
        const auto ba = oracle::multiply_lists(sig, oracle::to_list(b), oracle::to_list(a));
        REQUIRE(ab.second == ba.second);
        REQUIRE(comm_sign(a, b) * ba.first == ab.first);
      }
    }
  }
}

TEST_CASE("build_M reproduces the reference matrices") {
  CHECK(rows_of(build_M(1)) == fixtures::kM1);
  CHECK(rows_of(build_M(2)) == fixtures::kM2);
  CHECK(rows_of(build_M(3)) == fixtures::kTable3);
  CHECK(build_M(2).kind == SignMatrixKind::Full);
}

TEST_CASE("build_L") {
  CHECK(rows_of(build_L(1)) == fixtures::kL1);
  CHECK(rows_of(build_L(3)) == fixtures::kL3);
  CHECK(build_L(3).kind == SignMatrixKind::Reduced);
  CHECK(build_L(5).order.size() == 16);
  CHECK_THROWS_AS(build_L(2), std::invalid_argument);
  CHECK_THROWS_AS(build_L(4), std::invalid_argument);
}

TEST_CASE("sign matrices are symmetric with an all-plus first row") {
  for (int n = 1; n <= 7; ++n) {
    const SignMatrix m = build_M(n);
    REQUIRE(m.entries == m.entries.transpose());
    REQUIRE((m.entries.row(0).array() == 1).all());
    REQUIRE((m.entries.array().abs() == 1).all());
  }
}

TEST_CASE("M_n squared is 2^n I for even n") {
  for (int n : {2, 4, 6}) {
    const Eigen::MatrixXi m = build_M(n).entries;
    const Eigen::MatrixXi expected = Eigen::MatrixXi::Identity(m.rows(), m.cols()) * (1 << n);
    REQUIRE(m * m == expected);
  }
}

TEST_CASE("L_n squared is 2^{n-1} I for odd n") {
  for (int n : {1, 3, 5, 7}) {
    const Eigen::MatrixXi l = build_L(n).entries;
    const Eigen::MatrixXi expected = Eigen::MatrixXi::Identity(l.rows(), l.cols()) * (1 << (n - 1));
    REQUIRE(l * l == expected);
  }
}

TEST_CASE("M_n has equal rows for adjoint indices when n is odd") {
  for (int n : {1, 3, 5}) {
    const SignMatrix m = build_M(n);
    for (std::size_t i = 0; i < m.order.size(); ++i) {
      const MultiIndex adj = adjoint_index(m.order[i], n);
      const auto j = std::find(m.order.begin(), m.order.end(), adj) - m.order.begin();
      REQUIRE(m.entries.row(static_cast<Eigen::Index>(i)) == m.entries.row(j));
    }
  }
}

TEST_CASE("adjoint_index") {
  CHECK(adjoint_index(idx({1, 3}), 3) == idx({2}));
  CHECK(adjoint_index(MultiIndex{}, 2) == idx({1, 2}));
  CHECK(adjoint_index(idx({1, 2}), 4) == idx({3, 4}));
  for (MultiIndex a : enumerate_indices(6)) REQUIRE(adjoint_index(adjoint_index(a, 6), 6) == a);
}

TEST_CASE("standard partitions") {
  const StandardPartitions p2 = standard_partitions(Signature(2, 0));
  CHECK(p2.first.chosen() == std::vector<MultiIndex>{MultiIndex{}, idx({1})});
  CHECK(p2.last.chosen() == std::vector<MultiIndex>{idx({2}), idx({1, 2})});
  CHECK_FALSE(p2.even.has_value());

  const StandardPartitions p3 = standard_partitions(Signature(3, 0));
  CHECK(p3.first.chosen() == std::vector<MultiIndex>{MultiIndex{}, idx({1}), idx({2}), idx({3})});
  REQUIRE(p3.even.has_value());
  CHECK(p3.even->chosen() == std::vector<MultiIndex>{MultiIndex{}, idx({1, 2}), idx({1, 3}), idx({2, 3})});

  CHECK_THROWS_AS(even_partition(Signature(2, 2)), std::invalid_argument);

  // For odd n, I_First is exactly the indices of length <= (n-1)/2.
  for (int n : {1, 3, 5, 7}) {
    for (MultiIndex a : first_indices(n)) REQUIRE(a.size() <= (n - 1) / 2);
  }
  // Valid for every n.
  for (int n = 1; n <= 9; ++n) CHECK_NOTHROW(standard_partitions(Signature(n, 0)));
}

TEST_CASE("adjoint partitions are validated eagerly") {
  const Signature sig(2, 0);
  CHECK_THROWS_AS(AdjointPartition(sig, {MultiIndex{}, idx({1, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(AdjointPartition(sig, {MultiIndex{}}), std::invalid_argument);
  CHECK_THROWS_AS(AdjointPartition(sig, {MultiIndex{}, MultiIndex{}}), std::invalid_argument);
  CHECK_THROWS_AS(AdjointPartition(sig, {MultiIndex{}, idx({3})}), std::invalid_argument);
  CHECK_NOTHROW(AdjointPartition(sig, {idx({1, 2}), idx({2})}));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const AdjointPartition p = random_adjoint_partition(Signature(4, 1), rng);
    REQUIRE(p.chosen().size() == 16);
    for (MultiIndex a : enumerate_indices(5)) REQUIRE(p.contains(a) != p.contains(adjoint_index(a, 5)));
  }
}

TEST_CASE("count_commutation examples") {
  CHECK(count_commutation(idx({1}), 3) == CommutationCounts{2, 2, 2, 2});
  CHECK(count_commutation(idx({1, 2}), 2) == CommutationCounts{2, 0, 0, 2});
  CHECK(count_commutation(idx({1, 2, 3}), 3) == CommutationCounts{4, 4, 0, 0});
  CHECK(count_commutation(MultiIndex{}, 4) == CommutationCounts{8, 8, 0, 0});
}

TEST_CASE("commutation counts, exhaustive for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    const int q = 1 << (n - 2);
    const int h = 1 << (n - 1);
    for (MultiIndex a : enumerate_indices(n)) {
      const CommutationCounts c = count_commutation(a, n);
      if (a.empty()) {
        REQUIRE(c == CommutationCounts{h, h, 0, 0});
      } else if (a == MultiIndex::full(n)) {
        REQUIRE(c == (n % 2 == 0 ? CommutationCounts{h, 0, 0, h} : CommutationCounts{h, h, 0, 0}));
      } else {
        REQUIRE(c == CommutationCounts{q, q, q, q});
      }
    }
  }
}

TEST_CASE("per-partition counts on random adjoint sets") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 8; ++n) {
    const Signature sig(n, 0);
    const int q = 1 << (n - 2);
    for (int t = 0; t < 5; ++t) {
      const AdjointPartition p = random_adjoint_partition(sig, rng);
      for (MultiIndex a : enumerate_indices(n)) {
        const bool covered = n % 2 == 0 ? (a.is_even() && !a.empty()) : (!a.empty() && a != MultiIndex::full(n));
        if (!covered) continue;
        REQUIRE(count_partition_commutation(a, p) == PartitionCounts{q, q, q, q});
      }
    }
  }
}

TEST_CASE("export_table reproduces the reference tables") {
  CHECK(export_table(1).rows == fixtures::kTable1);
  CHECK(export_table(2).rows == fixtures::kTable2);
  CHECK(export_table(3).rows == fixtures::kTable3);
  CHECK(export_table(3).order == enumerate_indices(3));
}
