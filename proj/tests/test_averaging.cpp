#include <doctest.h>

#include "cliffavg/averaging.hpp"
#include "cliffavg/textio.hpp"
#include "oracle.hpp"

using namespace cliffavg;

namespace {

Multivector mv(const Signature& sig, const char* text) { return parse_multivector(sig, text); }

MultiIndex idx(std::initializer_list<int> list) {
  std::vector<int> v(list);
  return MultiIndex::from_indices(v);
}

// (1/2^n) sum_A e_A U e^A through full oracle products.
Multivector brute_reynolds(const Multivector& u) {
  Multivector sum(u.sig());
  for (std::uint32_t m = 0; m < u.size(); ++m) sum += oracle::conj(u, MultiIndex(m));
  return sum / Rational(static_cast<long>(u.size()));
}

}  // namespace

TEST_CASE("average_subset examples") {
  const Signature sig(2, 0);
  CHECK(average_subset(mv(sig, "e + e1 + e12"), IndexSubset::all(sig)) == mv(sig, "1"));
  CHECK(average_subset(mv(sig, "e2"), IndexSubset(sig, {idx({1})})) == mv(sig, "-e2"));
  std::mt19937_64 rng(21);
  for (const Signature& s : oracle::signatures_up_to(4)) {
    const Multivector u = oracle::random_multivector(s, rng);
    REQUIRE(average_subset(u, IndexSubset(s, {MultiIndex{}})) == u);
  }
}

TEST_CASE("index subsets") {
  const Signature sig(3, 0);
  CHECK_THROWS_AS(IndexSubset(sig, {}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSubset(sig, {idx({4})}), std::invalid_argument);
  CHECK(IndexSubset(sig, {idx({1}), idx({1}), MultiIndex{}}).size() == 2);
  CHECK(IndexSubset::even(sig).size() == 4);
  CHECK(IndexSubset::odd(sig).size() == 4);
  CHECK(IndexSubset::of_grade(sig, 2).size() == 3);
  CHECK(IndexSubset::of_quaternion_type(Signature(5, 0), 1).size() == 5 + 1);
  CHECK_THROWS_AS(IndexSubset::of_grade(sig, 4), std::invalid_argument);
  CHECK_THROWS_AS(IndexSubset::of_quaternion_type(sig, 4), std::invalid_argument);
}

TEST_CASE("reynolds_vee examples") {
  CHECK(reynolds_vee(mv(Signature(2, 0), "3 + e1 - e12")) == mv(Signature(2, 0), "3"));
  CHECK(reynolds_vee(mv(Signature(3, 0), "2 + e12 + 5e123")) == mv(Signature(3, 0), "2 + 5e123"));
  CHECK(reynolds_vee(Multivector(Signature(1, 2))).is_zero());
}

TEST_CASE("reynolds_vee equals the brute-force conjugation sum") {
  std::mt19937_64 rng(22);
  for (const Signature& sig : oracle::signatures_up_to(4)) {
    for (int t = 0; t < 5; ++t) {
      const Multivector u = oracle::random_multivector(sig, rng);
      REQUIRE(reynolds_vee(u) == brute_reynolds(u));
      REQUIRE(average_subset(u, IndexSubset::all(sig)) == reynolds_vee(u));
    }
  }
}

TEST_CASE("F is idempotent, linear and lands in the center") {
  std::mt19937_64 rng(23);
  for (const Signature& sig : oracle::signatures_up_to(5)) {
    const Multivector u = oracle::random_multivector(sig, rng);
    const Multivector v = oracle::random_multivector(sig, rng);
    const Rational c = oracle::random_rational(rng);
    const Multivector f = average_subset(u, IndexSubset::all(sig));
    REQUIRE(average_subset(f, IndexSubset::all(sig)) == f);
    REQUIRE(reynolds_vee(u * c + v) == reynolds_vee(u) * c + reynolds_vee(v));
    for (int a = 1; a <= sig.dim(); ++a) {
      const Multivector ea = Multivector::blade(sig, MultiIndex(std::uint32_t{1} << (a - 1)));
      REQUIRE(f * ea == ea * f);
    }
  }
}

TEST_CASE("center_project examples") {
  CHECK(center_project(mv(Signature(2, 0), "e + e12")) == mv(Signature(2, 0), "e"));
  CHECK(center_project(mv(Signature(3, 0), "e + e123")) == mv(Signature(3, 0), "e + e123"));
  CHECK(center_project(mv(Signature(2, 1), "e1")).is_zero());
  CHECK(center_project(mv(Signature(1, 0), "e1")) == mv(Signature(1, 0), "e1"));
}

TEST_CASE("average_adjoint examples") {
  const Signature s2(2, 0);
  const StandardPartitions p2 = standard_partitions(s2);
  CHECK(average_adjoint(mv(s2, "e + e2"), p2.first) == mv(s2, "e"));
  const Signature s3(3, 0);
  CHECK(average_adjoint(mv(s3, "e12"), even_partition(s3)).is_zero());
  for (const Signature& sig : oracle::signatures_up_to(4)) {
    REQUIRE(average_adjoint(Multivector::scalar(sig, 1), standard_partitions(sig).first) ==
            Multivector::scalar(sig, 1));
  }
}

TEST_CASE("F_Adj equals F for odd n") {
  std::mt19937_64 rng(24);
  for (const Signature& sig : oracle::signatures_up_to(5)) {
    if (sig.dim() % 2 == 0) continue;
    const StandardPartitions p = standard_partitions(sig);
    for (int t = 0; t < 3; ++t) {
      const Multivector u = oracle::random_multivector(sig, rng);
      const Multivector f = reynolds_vee(u);
      REQUIRE(average_adjoint(u, p.first) == f);
      REQUIRE(average_adjoint(u, p.last) == f);
      REQUIRE(average_adjoint(u, *p.even) == f);
      REQUIRE(average_adjoint(u, random_adjoint_partition(sig, rng)) == f);
    }
  }
}

TEST_CASE("for even n, F_Adj equals F only on the even part") {
  // Adjoint pairs give opposite conjugations of odd elements when n is even:
  // they cancel in F but not in F_Adj.
  const Signature s2(2, 0);
  const AdjointPartition first = standard_partitions(s2).first;
  CHECK(average_adjoint(mv(s2, "e1"), first) == mv(s2, "e1"));
  CHECK(reynolds_vee(mv(s2, "e1")).is_zero());

  std::mt19937_64 rng(27);
  for (const Signature& sig : oracle::signatures_up_to(6)) {
    if (sig.dim() % 2 == 1) continue;
    const StandardPartitions p = standard_partitions(sig);
    for (int t = 0; t < 3; ++t) {
      const auto [even, odd] = even_odd_split(oracle::random_multivector(sig, rng));
      const AdjointPartition random_set = random_adjoint_partition(sig, rng);
      for (const AdjointPartition* set : {&p.first, &p.last, &random_set}) {
        REQUIRE(average_adjoint(even, *set) == reynolds_vee(even));
        // On odd elements the pair terms are negatives of each other.
        Multivector other(sig);
        const AdjointPartition rest = set->complement();
        for (MultiIndex a : rest.chosen()) other += blade_conjugate(odd, a);
        REQUIRE(average_adjoint(odd, *set) * Rational(static_cast<long>(sig.size() / 2)) == -other);
      }
    }
  }
}

TEST_CASE("reynolds_group") {
  const Signature sig(2, 0);
  CHECK(reynolds_group(mv(sig, "e + e1"), MonomialGroup::vee(sig)) == mv(sig, "e"));
  const MonomialGroup trivial(sig, {SignedBlade{1, MultiIndex{}}});
  const MonomialGroup pm(sig, {SignedBlade{1, MultiIndex{}}, SignedBlade{-1, MultiIndex{}}});
  std::mt19937_64 rng(25);
  const Multivector u = oracle::random_multivector(sig, rng);
  CHECK(reynolds_group(u, trivial) == u);
  CHECK(reynolds_group(u, pm) == u);
  for (const Signature& s : oracle::signatures_up_to(4)) {
    const Multivector w = oracle::random_multivector(s, rng);
    REQUIRE(reynolds_group(w, MonomialGroup::vee(s)) == reynolds_vee(w));
  }
  CHECK(MonomialGroup::vee(Signature(1, 2)).size() == 16);
}

TEST_CASE("monomial groups are validated") {
  const Signature sig(2, 0);
  CHECK_THROWS_AS(MonomialGroup(sig, {SignedBlade{1, idx({1})}}), std::invalid_argument);
  // {e, e^12} is not closed: (e^12)^2 = -e.
  CHECK_THROWS_AS(MonomialGroup(sig, {SignedBlade{1, MultiIndex{}}, SignedBlade{1, idx({1, 2})}}),
                  std::invalid_argument);
  CHECK_NOTHROW(MonomialGroup(sig, {SignedBlade{1, MultiIndex{}}, SignedBlade{1, idx({1})}}));
  CHECK_THROWS_AS(MonomialGroup(sig, {SignedBlade{1, MultiIndex{}}, SignedBlade{2, idx({1})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MonomialGroup(sig, {SignedBlade{1, MultiIndex{}}, SignedBlade{1, idx({3})}}),
                  std::invalid_argument);
}

TEST_CASE("contraction_F1 examples") {
  const Signature sig(2, 0);
  CHECK(contraction_F1(mv(sig, "e")) == mv(sig, "2"));
  CHECK(contraction_F1(mv(sig, "e12")) == mv(sig, "-2e12"));
  CHECK(contraction_F1(mv(sig, "e1")).is_zero());
}

TEST_CASE("contraction_F1 scales grade k by (-1)^k (n - 2k)") {
  std::mt19937_64 rng(26);
  for (const Signature& sig : oracle::signatures_up_to(6)) {
    const Multivector u = oracle::random_multivector(sig, rng);
    Multivector expected(sig);
    for (int k = 0; k <= sig.dim(); ++k) {
      expected += oracle::grade_part(u, k) * Rational((k % 2 ? -1 : 1) * (sig.dim() - 2 * k));
    }
    REQUIRE(contraction_F1(u) == expected);
  }
}

TEST_CASE("signature mismatch is rejected") {
  const Signature a(2, 0);
  const Signature b(1, 1);
  CHECK_THROWS_AS(average_subset(Multivector(a), IndexSubset::all(b)), std::invalid_argument);
  CHECK_THROWS_AS(average_adjoint(Multivector(a), standard_partitions(b).first), std::invalid_argument);
  CHECK_THROWS_AS(reynolds_group(Multivector(a), MonomialGroup::vee(b)), std::invalid_argument);
}
