#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cliffavg/commutation.hpp"
#include "cliffavg/multivector.hpp"

namespace cliffavg {

// Nonempty S subset of I, the index set of an averaging operator F_S.
class IndexSubset {
public:
  // Duplicates are merged. Throws std::invalid_argument on an empty set or an
  // index outside 1..n.
  IndexSubset(const Signature& sig, std::vector<MultiIndex> members) : sig_(sig), members_(std::move(members)) {
    for (MultiIndex a : members_) {
      if ((a.mask() & ~sig.full_mask()) != 0) throw std::invalid_argument("multi-index outside 1..n");
    }
    std::sort(members_.begin(), members_.end(), canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty()) throw std::invalid_argument("index subset must be nonempty");
  }

  static IndexSubset all(const Signature& sig) { return IndexSubset(sig, enumerate_indices(sig)); }
  static IndexSubset even(const Signature& sig) {
    return filtered(sig, [](MultiIndex a) { return a.is_even(); });
  }
  static IndexSubset odd(const Signature& sig) {
    return filtered(sig, [](MultiIndex a) { return !a.is_even(); });
  }
  // I_k: all multi-indices of length k.
  static IndexSubset of_grade(const Signature& sig, int k) {
    if (k < 0 || k > sig.dim()) throw std::invalid_argument("grade outside 0..n");
    return filtered(sig, [k](MultiIndex a) { return a.size() == k; });
  }
  // Lengths congruent to m modulo 4 (quaternion type m).
  static IndexSubset of_quaternion_type(const Signature& sig, int m) {
    if (m < 0 || m > 3) throw std::invalid_argument("quaternion type must be 0..3");
    return filtered(sig, [m](MultiIndex a) { return a.size() % 4 == m; });
  }

  const Signature& sig() const { return sig_; }
  const std::vector<MultiIndex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

private:
  template <typename Pred>
  static IndexSubset filtered(const Signature& sig, Pred pred) {
    std::vector<MultiIndex> out;
    for (MultiIndex a : enumerate_indices(sig)) {
      if (pred(a)) out.push_back(a);
    }
    return IndexSubset(sig, std::move(out));
  }

  Signature sig_;
  std::vector<MultiIndex> members_;
};

// Finite group of signed blades under Clifford multiplication.
class MonomialGroup {
public:
  // Validates identity, closure and inverses exhaustively; throws
  // std::invalid_argument when the set is not a group.
  MonomialGroup(const Signature& sig, std::vector<SignedBlade> elements) : sig_(sig) {
    std::set<std::pair<std::uint32_t, int>> seen;
    for (const SignedBlade& g : elements) {
      if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("blade sign must be +1 or -1");
      if ((g.index.mask() & ~sig.full_mask()) != 0) throw std::invalid_argument("multi-index outside 1..n");
      if (seen.insert({g.index.mask(), g.sign}).second) elements_.push_back(g);
    }
    auto has = [&](const SignedBlade& g) { return seen.count({g.index.mask(), g.sign}) != 0; };
    if (!has(SignedBlade{1, MultiIndex{}})) throw std::invalid_argument("group must contain the identity");
    for (const SignedBlade& g : elements_) {
      const SignedBlade inv = inverse(g);
      if (!has(inv)) throw std::invalid_argument("set is not closed under inversion");
      for (const SignedBlade& h : elements_) {
        if (!has(multiply(g, h))) throw std::invalid_argument("set is not closed under multiplication");
      }
    }
  }

  // Salingaros' vee group {+-e^A : A in I}.
  static MonomialGroup vee(const Signature& sig) {
    std::vector<SignedBlade> elements;
    for (MultiIndex a : enumerate_indices(sig)) {
      elements.push_back({1, a});
      elements.push_back({-1, a});
    }
    return MonomialGroup(sig, std::move(elements));
  }

  const Signature& sig() const { return sig_; }
  const std::vector<SignedBlade>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  SignedBlade multiply(const SignedBlade& g, const SignedBlade& h) const {
    const SignedBlade b = blade_product(sig_, g.index, h.index);
    return {b.sign * g.sign * h.sign, b.index};
  }
  SignedBlade inverse(const SignedBlade& g) const {
    const SignedBlade b = blade_inverse(sig_, g.index);
    return {b.sign * g.sign, b.index};
  }

private:
  Signature sig_;
  std::vector<SignedBlade> elements_;
};

// F_S(U) = (1/|S|) sum_{A in S} e_A U e^A, summed term by term.
template <typename Scalar>
BasicMultivector<Scalar> average_subset(const BasicMultivector<Scalar>& u, const IndexSubset& s) {
  if (!(u.sig() == s.sig())) throw std::invalid_argument("multivector and subset belong to different signatures");
  BasicMultivector<Scalar> sum(u.sig());
  for (MultiIndex a : s.members()) sum += blade_conjugate(u, a);
  return sum / Scalar(static_cast<long>(s.size()));
}

// Projection onto the center: pi_0 for even n, pi_0 + pi_n for odd n.
template <typename Scalar>
BasicMultivector<Scalar> center_project(const BasicMultivector<Scalar>& u) {
  BasicMultivector<Scalar> out(u.sig());
  out.set(MultiIndex{}, u.coeff(MultiIndex{}));
  if (u.dim() % 2 == 1) {
    const MultiIndex top = MultiIndex::full(u.dim());
    out.set(top, u.coeff(top));
  }
  return out;
}

// Reynolds operator of the vee group, F(U) = (1/2^n) sum_A e_A U e^A. It
// coincides with the center projection, which is what gets evaluated here.
template <typename Scalar>
BasicMultivector<Scalar> reynolds_vee(const BasicMultivector<Scalar>& u) {
  return center_project(u);
}

// F_Adj(U) = (1/2^{n-1}) sum_{A in I_Adj} e_A U e^A.
template <typename Scalar>
BasicMultivector<Scalar> average_adjoint(const BasicMultivector<Scalar>& u, const AdjointPartition& p) {
  if (!(u.sig() == p.sig())) throw std::invalid_argument("multivector and partition belong to different signatures");
  BasicMultivector<Scalar> sum(u.sig());
  for (MultiIndex a : p.chosen()) sum += blade_conjugate(u, a);
  return sum / Scalar(static_cast<long>(p.chosen().size()));
}

// R_G(U) = (1/|G|) sum_{g in G} g^{-1} U g.
template <typename Scalar>
BasicMultivector<Scalar> reynolds_group(const BasicMultivector<Scalar>& u, const MonomialGroup& g) {
  if (!(u.sig() == g.sig())) throw std::invalid_argument("multivector and group belong to different signatures");
  BasicMultivector<Scalar> sum(u.sig());
  for (const SignedBlade& x : g.elements()) sum += left_multiply(g.inverse(x), right_multiply(u, x));
  return sum / Scalar(static_cast<long>(g.size()));
}

// F_1(U) = sum_{a=1..n} e_a U e^a, over generators only.
template <typename Scalar>
BasicMultivector<Scalar> contraction_F1(const BasicMultivector<Scalar>& u) {
  BasicMultivector<Scalar> sum(u.sig());
  for (int a = 1; a <= u.dim(); ++a) sum += blade_conjugate(u, MultiIndex(std::uint32_t{1} << (a - 1)));
  return sum;
}

}  // namespace cliffavg
