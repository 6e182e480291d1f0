#pragma once

#include <string>
#include <variant>

#include "plethy/exact_arith.hpp"
#include "plethy/poly.hpp"

namespace plethy {

enum class RingKind { Integer, Rational, PrimeField, PolyGamma, PolyQ };

std::string ring_kind_name(RingKind kind);

/// A run-time tagged element of one of the supported coefficient rings.
///
/// The templated algorithms work directly on the payload types; Scalar is the
/// value type for code that only learns the ring at run time (the CLI, report
/// formatting). Every binary operation checks that both operands live in the
/// same ring, including the same prime for residues.
class Scalar {
 public:
  using Payload = std::variant<BigInt, BigRational, Fp, GammaPoly, QPoly>;

  static Scalar integer(BigInt v) { return Scalar(Payload(std::move(v))); }
  /// Stored in lowest terms with a positive denominator.
  static Scalar rational(BigRational v);
  static Scalar residue(long v, const PrimeField& field) { return Scalar(Payload(field.from_int(v))); }
  static Scalar gamma(GammaPoly v) { return Scalar(Payload(std::move(v))); }
  static Scalar q(QPoly v) { return Scalar(Payload(std::move(v))); }

  RingKind ring() const { return static_cast<RingKind>(value_.index()); }
  const Payload& payload() const { return value_; }
  bool is_zero() const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Exact division; only defined over QQ and GF(p).
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  explicit Scalar(Payload v) : value_(std::move(v)) {}

  Payload value_;
};

}  // namespace plethy
