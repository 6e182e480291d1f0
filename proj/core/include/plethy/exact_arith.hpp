#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "plethy/error.hpp"

namespace plethy {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Exact binomial coefficient; zero when b > a.
BigInt binomial(long a, long b);

bool is_prime(std::uint32_t n);

/// Residue class modulo a small prime p < 2^16.
///
/// The modulus travels with the value so that mixing residues of different
/// primes is caught at run time.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const { return Fp(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const;

  bool operator==(const Fp& o) const { return value_ == o.value_ && modulus_ == o.modulus_; }

 private:
  void check(const Fp& o) const;

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 2;
};

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(const BigRational& v) { return sgn(v) == 0; }
inline bool is_zero(const Fp& v) { return v.value() == 0; }

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);
std::string to_string(const Fp& v);

// Ring policies. Generic code is written against these: it obtains constants
// through zero()/one()/from_int() and combines values with the usual operators.

struct IntegerRing {
  using value_type = BigInt;
  static constexpr bool is_field = false;
  static constexpr bool supports_lie = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_bigint(const BigInt& v) const { return v; }
  std::string name() const { return "ZZ"; }
};

struct RationalField {
  using value_type = BigRational;
  static constexpr bool is_field = true;
  static constexpr bool supports_lie = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_bigint(const BigInt& v) const { return BigRational(v); }
  value_type inverse(const value_type& v) const;
  std::string name() const { return "QQ"; }
};

class PrimeField {
 public:
  using value_type = Fp;
  static constexpr bool is_field = true;
  static constexpr bool supports_lie = false;
  static constexpr std::uint32_t kMaxPrime = 1u << 16;

  /// Throws InvalidArgument unless p is a prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  value_type zero() const { return Fp(0, p_); }
  value_type one() const { return Fp(1, p_); }
  value_type from_int(long v) const;
  value_type from_bigint(const BigInt& v) const;
  value_type inverse(const value_type& v) const;
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  std::uint32_t p_;
};

}  // namespace plethy
