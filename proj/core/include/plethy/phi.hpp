#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "plethy/actions.hpp"
#include "plethy/combinatorics.hpp"
#include "plethy/delta.hpp"
#include "plethy/error.hpp"
#include "plethy/linalg.hpp"
#include "plethy/poly.hpp"
#include "plethy/space.hpp"
#include "plethy/sparse.hpp"

namespace plethy {

/// Sym^{N-1} E (x) Wedge^{N+1} Sym^{d+1} E; the basis vector labelled (s, k)
/// is X^{N-1-s} Y^s (x) F_wedge(k).
inline Space phi_domain_space(int N, int d) { return Space({Factor::sym(N - 1), Factor::wedge(N + 1, d + 1)}); }

/// A domain basis label (s, k).
struct DomainLabel {
  int s = 0;
  MultiIndex k;

  std::vector<int> flat() const;
  std::string to_string() const;
  friend bool operator==(const DomainLabel&, const DomainLabel&) = default;
};

DomainLabel domain_label(const Space& domain, std::size_t idx);

/// The domain label whose image is F_Delta(p) plus strictly larger terms:
/// s = alpha - 1 and k = (i_1, ..., i_alpha, j+1, i_{alpha+1}+1, ..., i_N+1).
DomainLabel triangular_witness(const SemistandardPair& p);

/// v_{(s,k)} = sum over i in B(k) of F(i, s + |k| - N - |i|), the image of (s, k).
template <class Ring>
ModuleElement<typename Ring::value_type> v_vector(const Ring& ring, int N, int d, int s, const MultiIndex& k) {
  using E = typename Ring::value_type;
  if (s < 0 || s > N - 1) throw InvalidArgument("v_vector: s must lie in {0..N-1}");
  if (static_cast<int>(k.size()) != N + 1 || k.cap() != d + 1 || !k.strictly_increasing())
    throw InvalidArgument("v_vector: k must be strictly increasing in I(d+1, N+1), got " + k.to_string());
  Space ambient = delta_ambient_space(N, d);
  const long w = s + k.sum() - N;
  std::vector<typename SparseVec<E>::Entry> entries;
  for (const MultiIndex& i : Box(k)) {
    long j = w - i.sum();
    if (j < 0 || j > d) throw ConsistencyError("box element " + i.to_string() + " gives j outside {0..d}");
    std::vector<int> label = i.entries();
    label.push_back(static_cast<int>(j));
    entries.emplace_back(*ambient.index_of(label), ring.one());
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return {ambient, SparseVec<E>(std::move(entries))};
}

/// Matrix of phi in canonical coordinates: columns v_{(s,k)} in domain order.
template <class Ring>
LinearMap<typename Ring::value_type> phi_canonical_matrix(const Ring& ring, int N, int d) {
  using E = typename Ring::value_type;
  Space domain = phi_domain_space(N, d);
  std::vector<SparseVec<E>> cols;
  cols.reserve(domain.dim());
  for (std::size_t idx = 0; idx < domain.dim(); ++idx) {
    DomainLabel lab = domain_label(domain, idx);
    cols.push_back(v_vector(ring, N, d, lab.s, lab.k).coeffs);
  }
  return LinearMap<E>(delta_ambient_space(N, d).dim(), std::move(cols));
}

/// phi together with its codomain and its matrix in F_Delta coordinates.
///
/// Construction is a certificate: it throws ConsistencyError if a column
/// leaves ker mu_N, if the dimensions differ, or if the triangular pairing of
/// domain and codomain labels is not a bijection.
template <class Ring>
class PhiContext {
 public:
  using E = typename Ring::value_type;

  PhiContext(Ring ring, int N, int d)
      : ring_(ring), N_(N), d_(d), domain_(phi_domain_space(N, d)), delta_(ring, N, d),
        canonical_(phi_canonical_matrix(ring, N, d)) {
    if (domain_.dim() != delta_.dim())
      throw ConsistencyError("domain dimension " + std::to_string(domain_.dim()) + " != codomain dimension " +
                             std::to_string(delta_.dim()));
    std::vector<SparseVec<E>> coords;
    coords.reserve(domain_.dim());
    for (std::size_t c = 0; c < domain_.dim(); ++c) {
      if (!delta_.mu().apply(canonical_.column(c)).empty())
        throw ConsistencyError("phi" + domain_label(domain_, c).to_string() + " is not in ker mu_N");
      coords.push_back(delta_.express(canonical_.column(c)));
    }
    delta_coords_ = LinearMap<E>(delta_.dim(), std::move(coords));

    std::vector<bool> used(domain_.dim(), false);
    for (const auto& p : delta_.pairs()) {
      std::size_t idx = *domain_.index_of(triangular_witness(p).flat());
      if (used[idx]) throw ConsistencyError("triangular pairing is not injective at " + p.to_string());
      used[idx] = true;
      column_order_.push_back(idx);
    }
    std::vector<SparseVec<E>> tri;
    tri.reserve(column_order_.size());
    for (std::size_t idx : column_order_) tri.push_back(delta_coords_.column(idx));
    triangular_ = LinearMap<E>(delta_.dim(), std::move(tri));
  }

  const Ring& ring() const { return ring_; }
  int N() const { return N_; }
  int d() const { return d_; }
  std::size_t dim() const { return domain_.dim(); }
  const Space& domain() const { return domain_; }
  const Space& ambient() const { return delta_.ambient(); }
  const DeltaSpace<Ring>& delta() const { return delta_; }
  /// Ambient rows, domain columns in canonical order.
  const LinearMap<E>& canonical() const { return canonical_; }
  /// F_Delta rows in pair order, domain columns in canonical order.
  const LinearMap<E>& delta_coords() const { return delta_coords_; }
  /// column_order()[m] is the domain index paired with the m-th semistandard pair.
  const std::vector<std::size_t>& column_order() const { return column_order_; }
  /// delta_coords() with columns permuted by column_order(); square.
  const LinearMap<E>& triangular() const { return triangular_; }

  bool is_lower_unitriangular() const {
    const E one = ring_.one();
    for (std::size_t m = 0; m < triangular_.cols(); ++m) {
      const auto& col = triangular_.column(m);
      if (col.empty() || col.entries().front().first != m || !(col.entries().front().second == one)) return false;
    }
    return true;
  }

 private:
  Ring ring_;
  int N_, d_;
  Space domain_;
  DeltaSpace<Ring> delta_;
  LinearMap<E> canonical_;
  LinearMap<E> delta_coords_;
  LinearMap<E> triangular_;
  std::vector<std::size_t> column_order_;
};

/// Inverse of a lower unitriangular matrix by forward substitution; valid over any ring.
template <class Ring>
LinearMap<typename Ring::value_type> invert_unitriangular(const Ring& ring, const LinearMap<typename Ring::value_type>& L) {
  using E = typename Ring::value_type;
  const std::size_t n = L.cols();
  std::vector<SparseVec<E>> cols;
  cols.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<E> x(n, ring.zero());
    x[m] = ring.one();
    for (std::size_t c = m; c < n; ++c) {
      if (is_zero(x[c])) continue;
      for (const auto& [r, v] : L.column(c))
        if (r > c) x[r] -= v * x[c];
    }
    std::vector<typename SparseVec<E>::Entry> entries;
    for (std::size_t r = m; r < n; ++r)
      if (!is_zero(x[r])) entries.emplace_back(r, std::move(x[r]));
    cols.emplace_back(std::move(entries));
  }
  return LinearMap<E>(n, std::move(cols));
}

/// phi^{-1} as a map from F_Delta coordinates (pair order) to the canonical
/// domain basis. Throws ConsistencyError unless the F_Delta matrix is lower unitriangular.
template <class Ring>
LinearMap<typename Ring::value_type> invert_phi(const PhiContext<Ring>& ctx) {
  using E = typename Ring::value_type;
  if (!ctx.is_lower_unitriangular()) throw ConsistencyError("phi in F_Delta coordinates is not lower unitriangular");
  LinearMap<E> inv = invert_unitriangular(ctx.ring(), ctx.triangular());
  std::vector<SparseVec<E>> cols;
  cols.reserve(inv.cols());
  for (const auto& col : inv.columns()) {
    std::vector<typename SparseVec<E>::Entry> entries;
    for (const auto& [m, v] : col) entries.emplace_back(ctx.column_order()[m], v);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    cols.emplace_back(std::move(entries));
  }
  return LinearMap<E>(ctx.dim(), std::move(cols));
}

/// Checks phi o phi^{-1} = id and phi^{-1} o phi = id in F_Delta coordinates.
template <class Ring>
bool inverse_round_trips(const PhiContext<Ring>& ctx, const LinearMap<typename Ring::value_type>& inv) {
  using E = typename Ring::value_type;
  const auto id = LinearMap<E>::identity(ctx.dim(), ctx.ring().one());
  return ctx.delta_coords().compose(inv) == id && inv.compose(ctx.delta_coords()) == id;
}

/// Result of one commutation check phi o A = B o phi.
struct EquivarianceReport {
  std::string route;
  bool passed = true;
  std::size_t columns_checked = 0;
  std::string counterexample;  // offending domain label, codomain label and value
};

/// Compares phi o A_domain with A_codomain o phi column by column.
template <class E>
EquivarianceReport check_commutes(std::string route, const Space& domain, const Space& ambient,
                                  const LinearMap<E>& phi, const LinearMap<E>& act_domain,
                                  const LinearMap<E>& act_codomain) {
  EquivarianceReport r;
  r.route = std::move(route);
  for (std::size_t c = 0; c < phi.cols(); ++c) {
    ++r.columns_checked;
    SparseVec<E> lhs = phi.apply(act_domain.column(c));
    SparseVec<E> rhs = act_codomain.apply(phi.column(c));
    if (lhs == rhs) continue;
    Accumulator<E> acc;
    acc.add(lhs);
    for (const auto& [idx, v] : rhs) acc.add(idx, E(-v));
    SparseVec<E> diff = acc.take();
    r.passed = false;
    r.counterexample = "column " + domain.label_string(c) + ", row " + ambient.label_string(diff.entries().front().first) +
                       ": commutator entry " + to_string(diff.entries().front().second);
    break;
  }
  return r;
}

/// phi o g - g o phi for a group element g, in canonical coordinates.
template <class Ring>
LinearMap<typename Ring::value_type> group_commutator(const Ring& ring, int N, int d,
                                                      const Mat2<typename Ring::value_type>& g) {
  const auto phi = phi_canonical_matrix(ring, N, d);
  const auto dom = group_action_matrix(ring, phi_domain_space(N, d), g);
  const auto cod = group_action_matrix(ring, delta_ambient_space(N, d), g);
  return phi.compose(dom) - cod.compose(phi);
}

/// phi commutes with e and f (characteristic zero only).
template <class Ring>
std::vector<EquivarianceReport> verify_lie_equivariance(const PhiContext<Ring>& ctx) {
  if constexpr (!Ring::supports_lie) {
    throw UnsupportedRing("Lie algebra equivariance needs QQ or ZZ, got " + ctx.ring().name());
  } else {
    std::vector<EquivarianceReport> out;
    for (auto [gen, name] : {std::pair{LieGenerator::E, "lie e"}, std::pair{LieGenerator::F, "lie f"}}) {
      out.push_back(check_commutes(name, ctx.domain(), ctx.ambient(), ctx.canonical(),
                                   lie_action_matrix(ctx.ring(), ctx.domain(), gen),
                                   lie_action_matrix(ctx.ring(), ctx.ambient(), gen)));
    }
    return out;
  }
}

/// Commutation with U_gamma and its transpose as identities in Z[gamma]. A pass
/// certifies SL_2(F)-equivariance over every field at this (N, d).
std::vector<EquivarianceReport> verify_group_equivariance_poly(int N, int d);

/// Commutation with U_gamma and U_gamma^T for every gamma in GF(p), plus
/// bijectivity of phi over GF(p).
std::vector<EquivarianceReport> verify_group_equivariance_fp(int N, int d, std::uint32_t p);

/// tau on the domain: X^{N-1-s}Y^s (x) F(k) -> X^s Y^{N-1-s} (x) F(e - k), e = (d+1, ..., d+1),
/// with the wedge label re-sorted (which introduces epsilon(N+1)).
template <class Ring>
LinearMap<typename Ring::value_type> tau_matrix(const Ring& ring, int N, int d) {
  using E = typename Ring::value_type;
  Space domain = phi_domain_space(N, d);
  std::vector<SparseVec<E>> cols;
  for (std::size_t idx = 0; idx < domain.dim(); ++idx) {
    DomainLabel lab = domain_label(domain, idx);
    std::vector<int> comp;
    for (int k : lab.k.entries()) comp.push_back(d + 1 - k);
    auto normal = wedge_normalize(comp, d + 1);
    std::vector<int> label{N - 1 - lab.s};
    label.insert(label.end(), normal->first.begin(), normal->first.end());
    cols.push_back(SparseVec<E>::unit(*domain.index_of(label), ring.from_int(normal->second)));
  }
  return LinearMap<E>(domain.dim(), std::move(cols));
}

/// tau' on Wedge^N Sym^d E (x) Sym^d E: F(j) (x) X^{d-l}Y^l -> F(dd - j) (x) X^l Y^{d-l}, dd = (d, ..., d).
template <class Ring>
LinearMap<typename Ring::value_type> tau_prime_matrix(const Ring& ring, int N, int d) {
  using E = typename Ring::value_type;
  Space ambient = delta_ambient_space(N, d);
  std::vector<SparseVec<E>> cols;
  for (std::size_t idx = 0; idx < ambient.dim(); ++idx) {
    std::vector<int> lab = ambient.label(idx);
    std::vector<int> comp;
    for (int a = 0; a < N; ++a) comp.push_back(d - lab[static_cast<std::size_t>(a)]);
    auto normal = wedge_normalize(comp, d);
    std::vector<int> label = normal->first;
    label.push_back(d - lab.back());
    cols.push_back(SparseVec<E>::unit(*ambient.index_of(label), ring.from_int(normal->second)));
  }
  return LinearMap<E>(ambient.dim(), std::move(cols));
}

struct DualityReport {
  bool tau_involution = false;
  bool tau_prime_involution = false;
  bool e_tau_eq_tau_f = false;        // on the domain
  bool tau_prime_e_eq_f_tau_prime = false;  // on the codomain
  int expected_sign = 0;              // epsilon(N) * epsilon(N+1)
  int observed_sign = 0;              // sign s with tau' phi = s phi tau, 0 if neither
  bool ok() const {
    return tau_involution && tau_prime_involution && e_tau_eq_tau_f && tau_prime_e_eq_f_tau_prime &&
           observed_sign == expected_sign;
  }
};

template <class Ring>
DualityReport verify_duality(const Ring& ring, int N, int d) {
  using E = typename Ring::value_type;
  DualityReport r;
  Space domain = phi_domain_space(N, d);
  Space ambient = delta_ambient_space(N, d);
  auto tau = tau_matrix(ring, N, d);
  auto taup = tau_prime_matrix(ring, N, d);
  auto phi = phi_canonical_matrix(ring, N, d);
  r.tau_involution = tau.compose(tau) == LinearMap<E>::identity(domain.dim(), ring.one());
  r.tau_prime_involution = taup.compose(taup) == LinearMap<E>::identity(ambient.dim(), ring.one());
  r.e_tau_eq_tau_f = lie_action_matrix(ring, domain, LieGenerator::E).compose(tau) ==
                     tau.compose(lie_action_matrix(ring, domain, LieGenerator::F));
  r.tau_prime_e_eq_f_tau_prime = taup.compose(lie_action_matrix(ring, ambient, LieGenerator::E)) ==
                                 lie_action_matrix(ring, ambient, LieGenerator::F).compose(taup);
  r.expected_sign = epsilon(N) * epsilon(N + 1);
  auto lhs = taup.compose(phi);
  auto rhs = phi.compose(tau);
  if (lhs.is_zero() && rhs.is_zero()) r.observed_sign = r.expected_sign;
  else if (lhs == rhs) r.observed_sign = 1;
  else if (lhs == rhs.scaled(ring.from_int(-1))) r.observed_sign = -1;
  return r;
}

/// The scalar matrix a*I on the domain and on det^N (x) codomain.
struct ScalarCheck {
  long domain_exponent = 0;       // read off the factors
  long codomain_exponent = 0;     // read off the factors, including det^N
  long formula_domain = 0;        // (N+1)d + 2N
  long formula_codomain = 0;      // (N+1)d + 2N, as (N+1)d plus 2N from det^N
  bool symbolic_action_ok = false;  // every basis vector scaled by a^exponent over Z[a]
  bool ok() const {
    return symbolic_action_ok && domain_exponent == codomain_exponent && domain_exponent == formula_domain &&
           codomain_exponent == formula_codomain;
  }
};

ScalarCheck verify_gl2_scalar(int N, int d);

}  // namespace plethy
