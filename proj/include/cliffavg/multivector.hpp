#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cliffavg/rational.hpp"
#include "cliffavg/signature.hpp"

namespace cliffavg {

template <typename Scalar>
bool is_zero_scalar(const Scalar& x) {
  return x == Scalar(0);
}
inline bool is_zero_scalar(const Rational& x) { return x.is_zero(); }

// Element of Cl(p,q) stored densely: coefficient of e^A lives at position mask(A).
template <typename Scalar>
class BasicMultivector {
public:
  using scalar_type = Scalar;
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit BasicMultivector(const Signature& sig)
      : sig_(sig), coeffs_(Coefficients::Constant(static_cast<Eigen::Index>(sig.size()), Scalar(0))) {}

  BasicMultivector(const Signature& sig, Coefficients coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
    if (static_cast<std::size_t>(coeffs_.size()) != sig_.size()) {
      throw std::invalid_argument("coefficient vector must have length 2^n");
    }
  }

  static BasicMultivector zero(const Signature& sig) { return BasicMultivector(sig); }

  static BasicMultivector scalar(const Signature& sig, const Scalar& value) {
    return blade(sig, MultiIndex{}, value);
  }

  static BasicMultivector blade(const Signature& sig, MultiIndex index, const Scalar& value = Scalar(1)) {
    BasicMultivector out(sig);
    out.set(index, value);
    return out;
  }

  static BasicMultivector blade(const Signature& sig, const SignedBlade& b) {
    return blade(sig, b.index, Scalar(b.sign));
  }

  const Signature& sig() const { return sig_; }
  int dim() const { return sig_.dim(); }
  std::size_t size() const { return sig_.size(); }
  const Coefficients& coefficients() const { return coeffs_; }

  const Scalar& coeff(MultiIndex index) const { return coeffs_[checked(index)]; }
  const Scalar& operator[](MultiIndex index) const { return coeff(index); }

  void set(MultiIndex index, const Scalar& value) { coeffs_[checked(index)] = value; }
  void add(MultiIndex index, const Scalar& value) { coeffs_[checked(index)] += value; }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
      if (!is_zero_scalar(coeffs_[i])) return false;
    }
    return true;
  }

  // Multi-indices with a nonzero coefficient, in canonical order.
  std::vector<MultiIndex> support() const {
    std::vector<MultiIndex> out;
    for (MultiIndex a : enumerate_indices(dim())) {
      if (!is_zero_scalar(coeffs_[a.mask()])) out.push_back(a);
    }
    return out;
  }

  BasicMultivector& operator+=(const BasicMultivector& rhs) {
    require_same_signature(*this, rhs);
    coeffs_ += rhs.coeffs_;
    return *this;
  }
  BasicMultivector& operator-=(const BasicMultivector& rhs) {
    require_same_signature(*this, rhs);
    coeffs_ -= rhs.coeffs_;
    return *this;
  }
  BasicMultivector& operator*=(const Scalar& s) {
    coeffs_ *= s;
    return *this;
  }
  BasicMultivector& operator/=(const Scalar& s) {
    if (is_zero_scalar(s)) throw std::domain_error("division of a multivector by zero");
    coeffs_ /= s;
    return *this;
  }

  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator-(const BasicMultivector& a) {
    return BasicMultivector(a.sig_, Coefficients(-a.coeffs_));
  }
  friend BasicMultivector operator*(BasicMultivector a, const Scalar& s) { return a *= s; }
  friend BasicMultivector operator*(const Scalar& s, BasicMultivector a) { return a *= s; }
  friend BasicMultivector operator/(BasicMultivector a, const Scalar& s) { return a /= s; }
  friend BasicMultivector operator*(const BasicMultivector& a, const BasicMultivector& b) {
    return geometric_product(a, b);
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    return a.sig_ == b.sig_ && a.coeffs_.cwiseEqual(b.coeffs_).all();
  }

  friend void require_same_signature(const BasicMultivector& a, const BasicMultivector& b) {
    if (!(a.sig_ == b.sig_)) throw std::invalid_argument("multivectors belong to different signatures");
  }

private:
  Eigen::Index checked(MultiIndex index) const {
    if ((index.mask() & ~sig_.full_mask()) != 0) throw std::out_of_range("multi-index outside 1..n");
    return static_cast<Eigen::Index>(index.mask());
  }

  Signature sig_;
  Coefficients coeffs_;
};

using Multivector = BasicMultivector<Rational>;

// Bilinear extension of blade_product. Zero coefficients are skipped, so a
// product with a blade costs O(2^n).
template <typename Scalar>
BasicMultivector<Scalar> geometric_product(const BasicMultivector<Scalar>& u, const BasicMultivector<Scalar>& v) {
  require_same_signature(u, v);
  const Signature& sig = u.sig();
  const auto& uc = u.coefficients();
  const auto& vc = v.coefficients();
  const auto n = static_cast<std::uint32_t>(sig.size());

  std::vector<std::uint32_t> v_support;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (!is_zero_scalar(vc[j])) v_support.push_back(j);
  }

  typename BasicMultivector<Scalar>::Coefficients out =
      BasicMultivector<Scalar>::Coefficients::Constant(static_cast<Eigen::Index>(n), Scalar(0));
  for (std::uint32_t i = 0; i < n; ++i) {
    if (is_zero_scalar(uc[i])) continue;
    for (std::uint32_t j : v_support) {
      const SignedBlade b = blade_product(sig, MultiIndex(i), MultiIndex(j));
      Scalar term = uc[i] * vc[j];
      if (b.sign > 0) {
        out[b.index.mask()] += term;
      } else {
        out[b.index.mask()] -= term;
      }
    }
  }
  return BasicMultivector<Scalar>(sig, std::move(out));
}

// sign * e^A * U
template <typename Scalar>
BasicMultivector<Scalar> left_multiply(const SignedBlade& blade, const BasicMultivector<Scalar>& u) {
  const Signature& sig = u.sig();
  BasicMultivector<Scalar> out(sig);
  for (std::uint32_t i = 0; i < sig.size(); ++i) {
    const Scalar& c = u.coefficients()[i];
    if (is_zero_scalar(c)) continue;
    const SignedBlade b = blade_product(sig, blade.index, MultiIndex(i));
    out.set(b.index, (b.sign * blade.sign > 0) ? c : Scalar(-c));
  }
  return out;
}

// U * sign * e^A
template <typename Scalar>
BasicMultivector<Scalar> right_multiply(const BasicMultivector<Scalar>& u, const SignedBlade& blade) {
  const Signature& sig = u.sig();
  BasicMultivector<Scalar> out(sig);
  for (std::uint32_t i = 0; i < sig.size(); ++i) {
    const Scalar& c = u.coefficients()[i];
    if (is_zero_scalar(c)) continue;
    const SignedBlade b = blade_product(sig, MultiIndex(i), blade.index);
    out.set(b.index, (b.sign * blade.sign > 0) ? c : Scalar(-c));
  }
  return out;
}

// e_A U e^A computed by explicit blade multiplication.
template <typename Scalar>
BasicMultivector<Scalar> blade_conjugate(const BasicMultivector<Scalar>& u, MultiIndex a) {
  return left_multiply(blade_inverse(u.sig(), a), right_multiply(u, SignedBlade{1, a}));
}

template <typename Scalar>
BasicMultivector<Scalar> grade_project(const BasicMultivector<Scalar>& u, int k) {
  if (k < 0 || k > u.dim()) throw std::out_of_range("grade outside 0..n");
  BasicMultivector<Scalar> out(u.sig());
  for (std::uint32_t i = 0; i < u.size(); ++i) {
    if (std::popcount(i) == k) out.set(MultiIndex(i), u.coefficients()[i]);
  }
  return out;
}

template <typename Scalar>
std::pair<BasicMultivector<Scalar>, BasicMultivector<Scalar>> even_odd_split(const BasicMultivector<Scalar>& u) {
  BasicMultivector<Scalar> even(u.sig());
  BasicMultivector<Scalar> odd(u.sig());
  for (std::uint32_t i = 0; i < u.size(); ++i) {
    (std::popcount(i) % 2 == 0 ? even : odd).set(MultiIndex(i), u.coefficients()[i]);
  }
  return {std::move(even), std::move(odd)};
}

template <typename Scalar>
BasicMultivector<Scalar> reversion(const BasicMultivector<Scalar>& u) {
  BasicMultivector<Scalar> out(u.sig());
  for (std::uint32_t i = 0; i < u.size(); ++i) {
    const int k = std::popcount(i);
    const Scalar& c = u.coefficients()[i];
    out.set(MultiIndex(i), ((k * (k - 1) / 2) % 2) ? Scalar(-c) : c);
  }
  return out;
}

// Reversion followed by right multiplication with the pseudoscalar e^{1...n}.
template <typename Scalar>
BasicMultivector<Scalar> hodge_star(const BasicMultivector<Scalar>& u) {
  return right_multiply(reversion(u), SignedBlade{1, MultiIndex::full(u.dim())});
}

}  // namespace cliffavg
