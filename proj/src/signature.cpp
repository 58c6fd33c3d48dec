#include "cliffavg/signature.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cliffavg {

Signature::Signature(int p, int q, int max_dim) : p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be nonnegative");
  if (max_dim < 1 || max_dim > kHardMaxDim) {
    throw std::invalid_argument("dimension cap must lie in [1, " + std::to_string(kHardMaxDim) + "]");
  }
  if (p + q < 1) throw std::invalid_argument("signature must have n = p + q >= 1");
  if (p + q > max_dim) {
    throw std::invalid_argument("n = " + std::to_string(p + q) + " exceeds the dimension cap " +
                                std::to_string(max_dim));
  }
}

int Signature::metric(int a) const {
  if (a < 1 || a > dim()) throw std::out_of_range("generator index out of range");
  return a <= p_ ? 1 : -1;
}

MultiIndex MultiIndex::from_indices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  for (int a : indices) {
    if (a < 1 || a > Signature::kHardMaxDim) throw std::invalid_argument("index out of range");
    const std::uint32_t bit = std::uint32_t{1} << (a - 1);
    if (mask & bit) throw std::invalid_argument("repeated index " + std::to_string(a));
    mask |= bit;
  }
  return MultiIndex(mask);
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::vector<MultiIndex> enumerate_indices(int n) {
  if (n < 0 || n > Signature::kHardMaxDim) throw std::invalid_argument("dimension out of range");
  std::vector<MultiIndex> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<MultiIndex> enumerate_indices(const Signature& sig) { return enumerate_indices(sig.dim()); }

}  // namespace cliffavg
