#include "plethy/scalar.hpp"

namespace plethy {

std::string ring_kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::Integer: return "ZZ";
    case RingKind::Rational: return "QQ";
    case RingKind::PrimeField: return "GF(p)";
    case RingKind::PolyGamma: return "ZZ[g]";
    case RingKind::PolyQ: return "ZZ[q]";
  }
  return "?";
}

namespace {

void require_same_ring(const Scalar& a, const Scalar& b) {
  if (a.ring() != b.ring())
    throw RingMismatch(ring_kind_name(a.ring()) + " vs " + ring_kind_name(b.ring()));
  if (a.ring() == RingKind::PrimeField &&
      std::get<Fp>(a.payload()).modulus() != std::get<Fp>(b.payload()).modulus())
    throw RingMismatch("residues modulo different primes");
}

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  require_same_ring(a, b);
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.payload());
        T r = op(x, y);
        if constexpr (std::is_same_v<T, BigInt>) return Scalar::integer(std::move(r));
        else if constexpr (std::is_same_v<T, BigRational>) return Scalar::rational(std::move(r));
        else if constexpr (std::is_same_v<T, Fp>) return Scalar::residue(r.value(), PrimeField(r.modulus()));
        else if constexpr (std::is_same_v<T, GammaPoly>) return Scalar::gamma(std::move(r));
        else return Scalar::q(std::move(r));
      },
      a.payload());
}

}  // namespace

Scalar Scalar::rational(BigRational v) {
  v.canonicalize();
  return Scalar(Payload(std::move(v)));
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return plethy::is_zero(x); }, value_);
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return plethy::to_string(x); }, value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return std::decay_t<decltype(x)>(x + y); });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return std::decay_t<decltype(x)>(x - y); });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return std::decay_t<decltype(x)>(x * y); });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw DivisionByZero("division by zero in " + ring_kind_name(b.ring()));
  switch (a.ring()) {
    case RingKind::Rational: {
      BigRational q = std::get<BigRational>(a.payload()) / std::get<BigRational>(b.payload());
      return Scalar::rational(std::move(q));
    }
    case RingKind::PrimeField: {
      Fp q = std::get<Fp>(a.payload()) * std::get<Fp>(b.payload()).inverse();
      return Scalar::residue(q.value(), PrimeField(q.modulus()));
    }
    default:
      throw UnsupportedRing("exact division is not available in " + ring_kind_name(a.ring()));
  }
}

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        T r = -x;
        if constexpr (std::is_same_v<T, BigInt>) return Scalar::integer(std::move(r));
        else if constexpr (std::is_same_v<T, BigRational>) return Scalar::rational(std::move(r));
        else if constexpr (std::is_same_v<T, Fp>) return Scalar::residue(r.value(), PrimeField(r.modulus()));
        else if constexpr (std::is_same_v<T, GammaPoly>) return Scalar::gamma(std::move(r));
        else return Scalar::q(std::move(r));
      },
      value_);
}

}  // namespace plethy
