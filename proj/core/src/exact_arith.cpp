#include "plethy/exact_arith.hpp"

namespace plethy {

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

void Fp::check(const Fp& o) const {
  if (modulus_ != o.modulus_)
    throw RingMismatch("GF(" + std::to_string(modulus_) + ") vs GF(" + std::to_string(o.modulus_) + ")");
}

Fp Fp::operator+(const Fp& o) const {
  check(o);
  std::uint32_t s = value_ + o.value_;
  return Fp(s >= modulus_ ? s - modulus_ : s, modulus_);
}

Fp Fp::operator-(const Fp& o) const {
  check(o);
  return Fp(value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_, modulus_);
}

Fp Fp::operator*(const Fp& o) const {
  check(o);
  return Fp(static_cast<std::uint32_t>((std::uint64_t{value_} * o.value_) % modulus_), modulus_);
}

Fp Fp::inverse() const {
  if (value_ == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(modulus_) + ")");
  // a^(p-2) = a^-1
  std::uint64_t result = 1, base = value_, e = modulus_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return Fp(static_cast<std::uint32_t>(result), modulus_);
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const BigRational& v) { return v.get_str(); }
std::string to_string(const Fp& v) { return std::to_string(v.value()); }

RationalField::value_type RationalField::inverse(const value_type& v) const {
  if (sgn(v) == 0) throw DivisionByZero("inverse of 0 in QQ");
  BigRational out = 1 / v;
  return out;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxPrime || !is_prime(p))
    throw InvalidArgument("prime field modulus must be a prime below 65536, got " + std::to_string(p));
}

PrimeField::value_type PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Fp(static_cast<std::uint32_t>(r), p_);
}

PrimeField::value_type PrimeField::from_bigint(const BigInt& v) const {
  BigInt r = v % p_;
  if (sgn(r) < 0) r += p_;
  return Fp(static_cast<std::uint32_t>(r.get_ui()), p_);
}

PrimeField::value_type PrimeField::inverse(const value_type& v) const {
  if (v.modulus() != p_) throw RingMismatch("element not in " + name());
  return v.inverse();
}

}  // namespace plethy
