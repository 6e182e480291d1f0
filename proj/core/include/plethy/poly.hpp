#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plethy/exact_arith.hpp"

namespace plethy {

struct GammaVar {
  static constexpr const char* symbol = "g";
};
struct QVar {
  static constexpr const char* symbol = "q";
};
struct AlphaVar {
  static constexpr const char* symbol = "a";
};

/// Dense univariate polynomial with integer coefficients.
///
/// The variable is a type tag so that Z[gamma] and Z[q] cannot be mixed.
/// Trailing zero coefficients are never stored; the zero polynomial has
/// degree kZeroDegree.
template <class Var>
class IntPoly {
 public:
  static constexpr int kZeroDegree = -1;

  IntPoly() = default;
  IntPoly(long c) {  // NOLINT: constants embed implicitly
    if (c != 0) coeffs_.push_back(c);
  }
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static IntPoly monomial(int degree, BigInt coeff = 1) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
  }
  static IntPoly variable() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }
  /// Index of the lowest nonzero coefficient; kZeroDegree for 0.
  int low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
    return kZeroDegree;
  }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPoly(std::move(c));
  }
  IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
  IntPoly operator-() const {
    IntPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  IntPoly operator*(const IntPoly& o) const {
    if (zero() || o.zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPoly(std::move(c));
  }
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  /// Multiplication by var^k, k >= 0.
  IntPoly shifted(int k) const {
    if (zero()) return {};
    std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(c));
  }

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  /// Horner evaluation at a point of any ring that embeds Z.
  template <class Ring>
  typename Ring::value_type evaluate(const Ring& ring, const typename Ring::value_type& x) const {
    typename Ring::value_type acc = ring.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + ring.from_bigint(coeffs_[i]);
    return acc;
  }

  std::string to_string() const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigInt& c = coeffs_[i];
      if (sgn(c) == 0) continue;
      BigInt mag = abs(c);
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      first = false;
      if (i == 0 || mag != 1) os << mag.get_str();
      if (i > 0) {
        if (mag != 1) os << "*";
        os << Var::symbol;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

template <class Var>
bool is_zero(const IntPoly<Var>& p) {
  return p.zero();
}

template <class Var>
std::string to_string(const IntPoly<Var>& p) {
  return p.to_string();
}

/// Ring policy for Z[var].
template <class Var>
struct PolyRing {
  using value_type = IntPoly<Var>;
  static constexpr bool is_field = false;
  static constexpr bool supports_lie = false;

  value_type zero() const { return {}; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_bigint(const BigInt& v) const { return value_type(std::vector<BigInt>{v}); }
  value_type generator() const { return value_type::variable(); }
  std::string name() const { return std::string("ZZ[") + Var::symbol + "]"; }
};

using GammaPoly = IntPoly<GammaVar>;
using QPoly = IntPoly<QVar>;
using GammaRing = PolyRing<GammaVar>;

}  // namespace plethy
