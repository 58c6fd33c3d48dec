#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace cliffavg {

// Metric signature of Cl(p,q): p generators square to +e, the remaining q to -e.
// Generator a (1-based) is stored at bit a-1 of every mask.
class Signature {
public:
  static constexpr int kDefaultMaxDim = 12;
  static constexpr int kHardMaxDim = 24;

  // Throws std::invalid_argument unless 1 <= p+q <= max_dim <= kHardMaxDim.
  Signature(int p, int q, int max_dim = kDefaultMaxDim);

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }
  // Number of basis blades, 2^n.
  std::size_t size() const { return std::size_t{1} << dim(); }
  std::uint32_t full_mask() const { return (std::uint32_t{1} << dim()) - 1; }
  // Bits of the generators squaring to -e.
  std::uint32_t negative_mask() const { return full_mask() & ~((std::uint32_t{1} << p_) - 1); }

  // eta^{aa} for 1 <= a <= n.
  int metric(int a) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

private:
  int p_;
  int q_;
};

// Ordered multi-index a_1 < ... < a_k stored as a bitmask.
class MultiIndex {
public:
  constexpr MultiIndex() = default;
  constexpr explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}

  // Builds from 1-based indices; throws std::invalid_argument on index < 1 or repeats.
  static MultiIndex from_indices(std::span<const int> indices);
  static constexpr MultiIndex empty_index() { return MultiIndex{}; }
  static constexpr MultiIndex full(int n) { return MultiIndex((std::uint32_t{1} << n) - 1); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int a) const { return (mask_ >> (a - 1)) & 1u; }
  constexpr bool is_even() const { return size() % 2 == 0; }

  // 1-based indices in increasing order.
  std::vector<int> indices() const;

  friend constexpr bool operator==(MultiIndex, MultiIndex) = default;
  // Raw mask order, for use as an associative key. Not the canonical order.
  friend constexpr auto operator<=>(MultiIndex a, MultiIndex b) { return a.mask_ <=> b.mask_; }

private:
  std::uint32_t mask_ = 0;
};

// Canonical order on I: shorter multi-indices first, equal lengths compared
// lexicographically on the increasing index lists.
constexpr bool canonical_less(MultiIndex a, MultiIndex b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint32_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  return (a.mask() & (diff & (~diff + 1))) != 0;
}

// All 2^n multi-indices in canonical order, from "-" up to 1...n.
std::vector<MultiIndex> enumerate_indices(int n);
std::vector<MultiIndex> enumerate_indices(const Signature& sig);

// A basis blade with a sign, e.g. -e^{12}.
struct SignedBlade {
  int sign = 1;
  MultiIndex index;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

// (-1)^t where t counts the transpositions needed to sort the concatenated
// index lists of A and B.
constexpr int reorder_sign(MultiIndex a, MultiIndex b) {
  std::uint32_t shifted = a.mask() >> 1;
  int swaps = 0;
  while (shifted != 0) {
    swaps += std::popcount(shifted & b.mask());
    shifted >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// e^A e^B = sign * e^{A xor B}.
inline SignedBlade blade_product(const Signature& sig, MultiIndex a, MultiIndex b) {
  int sign = reorder_sign(a, b);
  if (std::popcount(a.mask() & b.mask() & sig.negative_mask()) & 1) sign = -sign;
  return {sign, MultiIndex(a.mask() ^ b.mask())};
}

// e_A = (e^A)^{-1} = sign * e^A.
inline SignedBlade blade_inverse(const Signature& sig, MultiIndex a) {
  const int k = a.size();
  int sign = ((k * (k - 1) / 2) % 2) ? -1 : 1;
  if (std::popcount(a.mask() & sig.negative_mask()) & 1) sign = -sign;
  return {sign, a};
}

}  // namespace cliffavg
