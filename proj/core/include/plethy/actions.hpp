#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "plethy/error.hpp"
#include "plethy/space.hpp"
#include "plethy/sparse.hpp"

namespace plethy {

/// A 2x2 matrix g = (a11 a12; a21 a22) acting on E = <X, Y> by
///   g.X = a11 X + a21 Y,   g.Y = a12 X + a22 Y,
/// so that the columns of g are the images of X and Y. With this convention
/// e = (0 1; 0 0) sends Y to X, matching e = X d/dY.
template <class E>
struct Mat2 {
  E a11, a12, a21, a22;

  Mat2 operator*(const Mat2& o) const {
    return {E(a11 * o.a11 + a12 * o.a21), E(a11 * o.a12 + a12 * o.a22), E(a21 * o.a11 + a22 * o.a21),
            E(a21 * o.a12 + a22 * o.a22)};
  }
  Mat2 transposed() const { return {a11, a21, a12, a22}; }
  E det() const { return E(a11 * a22 - a12 * a21); }
};

template <class Ring>
Mat2<typename Ring::value_type> identity_matrix(const Ring& ring) {
  return {ring.one(), ring.zero(), ring.zero(), ring.one()};
}

/// U_gamma = (1 gamma; 0 1).
template <class Ring>
Mat2<typename Ring::value_type> unipotent_upper(const Ring& ring, const typename Ring::value_type& gamma) {
  return {ring.one(), gamma, ring.zero(), ring.one()};
}

template <class Ring>
Mat2<typename Ring::value_type> scalar_matrix(const Ring& ring, const typename Ring::value_type& alpha) {
  return {alpha, ring.zero(), ring.zero(), alpha};
}

enum class LieGenerator { E, F };

namespace detail {

/// Columns of g acting on Sym^c E, indexed by the Y-exponent.
template <class Ring>
std::vector<std::vector<typename Ring::value_type>> sym_action_dense(const Ring& ring, int c,
                                                                     const Mat2<typename Ring::value_type>& g) {
  using E = typename Ring::value_type;
  std::vector<std::vector<E>> cols;
  for (int a = 0; a <= c; ++a) {
    // (g.X)^{c-a} (g.Y)^a as coefficients of X^{c-b} Y^b
    std::vector<E> poly{ring.one()};
    auto multiply = [&](const E& x_coeff, const E& y_coeff) {
      std::vector<E> next(poly.size() + 1, ring.zero());
      for (std::size_t b = 0; b < poly.size(); ++b) {
        if (is_zero(poly[b])) continue;
        next[b] += poly[b] * x_coeff;
        next[b + 1] += poly[b] * y_coeff;
      }
      poly = std::move(next);
    };
    for (int t = 0; t < c - a; ++t) multiply(g.a11, g.a21);
    for (int t = 0; t < a; ++t) multiply(g.a12, g.a22);
    cols.push_back(std::move(poly));
  }
  return cols;
}

/// Expands the product of R linear forms sum_b cols[k_t][b] x_b in the exterior
/// (alternating = true) or symmetric algebra on x_0..x_c.
template <class Ring>
SparseVec<typename Ring::value_type> multilinear_image(const Ring& ring, const Factor& factor,
                                                       const std::vector<std::vector<typename Ring::value_type>>& cols,
                                                       const std::vector<int>& label, bool alternating) {
  using E = typename Ring::value_type;
  std::map<std::vector<int>, E> terms{{{}, ring.one()}};
  for (int k : label) {
    std::map<std::vector<int>, E> next;
    const auto& col = cols[static_cast<std::size_t>(k)];
    for (const auto& [lab, coeff] : terms) {
      for (std::size_t b = 0; b < col.size(); ++b) {
        if (is_zero(col[b])) continue;
        int x = static_cast<int>(b);
        auto pos = std::lower_bound(lab.begin(), lab.end(), x);
        E value = coeff * col[b];
        if (alternating) {
          if (pos != lab.end() && *pos == x) continue;
          // appended at the end, then moved left past every larger factor
          if ((lab.end() - pos) % 2 != 0) value = -value;
        }
        std::vector<int> nl = lab;
        nl.insert(nl.begin() + (pos - lab.begin()), x);
        auto [it, inserted] = next.try_emplace(std::move(nl), value);
        if (!inserted) it->second += value;
      }
    }
    terms = std::move(next);
  }
  std::vector<typename SparseVec<E>::Entry> out;
  for (auto& [lab, coeff] : terms) {
    if (is_zero(coeff)) continue;
    out.emplace_back(*factor.index_of(lab), std::move(coeff));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return SparseVec<E>(std::move(out));
}

}  // namespace detail

/// Matrix of g on a single factor; column t is the image of basis vector t.
template <class Ring>
std::vector<SparseVec<typename Ring::value_type>> factor_group_action(const Ring& ring, const Factor& factor,
                                                                      const Mat2<typename Ring::value_type>& g) {
  using E = typename Ring::value_type;
  std::vector<SparseVec<E>> out;
  if (factor.kind() == FactorKind::Det) {
    E d = ring.one();
    E base = g.det();
    for (int t = 0; t < factor.rank(); ++t) d *= base;
    std::vector<typename SparseVec<E>::Entry> col;
    if (!is_zero(d)) col.emplace_back(0, d);
    out.emplace_back(std::move(col));
    return out;
  }
  if (factor.dim() == 1 && factor.label(0).empty()) {
    out.push_back(SparseVec<E>::unit(0, ring.one()));
    return out;
  }
  auto dense = detail::sym_action_dense(ring, factor.degree(), g);
  for (const auto& label : factor.basis()) {
    if (factor.kind() == FactorKind::Sym) {
      std::vector<typename SparseVec<E>::Entry> col;
      const auto& d = dense[static_cast<std::size_t>(label[0])];
      for (std::size_t b = 0; b < d.size(); ++b)
        if (!is_zero(d[b])) col.emplace_back(b, d[b]);
      out.emplace_back(std::move(col));
    } else {
      out.push_back(detail::multilinear_image(ring, factor, dense, label, factor.kind() == FactorKind::Wedge));
    }
  }
  return out;
}

/// Matrix of g on a tensor product: the Kronecker product of the factor matrices.
template <class Ring>
LinearMap<typename Ring::value_type> group_action_matrix(const Ring& ring, const Space& space,
                                                         const Mat2<typename Ring::value_type>& g) {
  using E = typename Ring::value_type;
  std::vector<std::vector<SparseVec<E>>> fm;
  for (const auto& f : space.factors()) fm.push_back(factor_group_action(ring, f, g));
  std::vector<SparseVec<E>> cols;
  cols.reserve(space.dim());
  for (std::size_t idx = 0; idx < space.dim(); ++idx) {
    auto fi = space.factor_indices(idx);
    std::vector<typename SparseVec<E>::Entry> terms{{0, ring.one()}};
    for (std::size_t f = 0; f < fm.size(); ++f) {
      std::vector<typename SparseVec<E>::Entry> next;
      for (const auto& [pos, c] : terms)
        for (const auto& [t, v] : fm[f][fi[f]]) next.emplace_back(pos + t * space.stride(f), E(c * v));
      terms = std::move(next);
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::erase_if(terms, [](const auto& t) { return is_zero(t.second); });
    cols.emplace_back(std::move(terms));
  }
  return LinearMap<E>(space.dim(), std::move(cols));
}

template <class Ring>
ModuleElement<typename Ring::value_type> act_group(const Ring& ring, const Mat2<typename Ring::value_type>& g,
                                                   const ModuleElement<typename Ring::value_type>& v) {
  return {v.space, group_action_matrix(ring, v.space, g).apply(v.coeffs)};
}

/// Lie algebra generator on one factor: e = X d/dY lowers the Y-degree,
/// f = Y d/dX raises it; extended to wedge and symmetric powers as derivations.
template <class Ring>
std::vector<SparseVec<typename Ring::value_type>> factor_lie_action(const Ring& ring, const Factor& factor,
                                                                    LieGenerator gen) {
  using E = typename Ring::value_type;
  std::vector<SparseVec<E>> out;
  const int c = factor.degree();
  for (const auto& label : factor.basis()) {
    Accumulator<E> acc;
    if (factor.kind() != FactorKind::Det) {
      for (std::size_t t = 0; t < label.size(); ++t) {
        int shift = gen == LieGenerator::E ? -1 : 1;
        long coeff = gen == LieGenerator::E ? label[t] : c - label[t];
        if (coeff == 0) continue;
        std::vector<int> moved = label;
        moved[t] += shift;
        if (factor.kind() == FactorKind::Wedge) {
          auto normal = wedge_normalize(moved, c);
          if (!normal) continue;
          acc.add(*factor.index_of(normal->first), ring.from_int(coeff * normal->second));
        } else {
          std::sort(moved.begin(), moved.end());
          acc.add(*factor.index_of(moved), ring.from_int(coeff));
        }
      }
    }
    out.push_back(acc.take());
  }
  return out;
}

/// Matrix of e or f on a tensor product via x(u (x) v) = (xu) (x) v + u (x) (xv).
/// Only defined in characteristic zero (QQ or ZZ).
template <class Ring>
LinearMap<typename Ring::value_type> lie_action_matrix(const Ring& ring, const Space& space, LieGenerator gen) {
  using E = typename Ring::value_type;
  if constexpr (!Ring::supports_lie) {
    throw UnsupportedRing("Lie algebra action requested over " + ring.name() +
                          "; use the group action in positive characteristic");
  } else {
    std::vector<std::vector<SparseVec<E>>> fm;
    for (const auto& f : space.factors()) fm.push_back(factor_lie_action(ring, f, gen));
    std::vector<SparseVec<E>> cols;
    cols.reserve(space.dim());
    for (std::size_t idx = 0; idx < space.dim(); ++idx) {
      auto fi = space.factor_indices(idx);
      Accumulator<E> acc;
      for (std::size_t f = 0; f < fm.size(); ++f) {
        std::size_t base = idx - fi[f] * space.stride(f);
        for (const auto& [t, v] : fm[f][fi[f]]) acc.add(base + t * space.stride(f), v);
      }
      cols.push_back(acc.take());
    }
    return LinearMap<E>(space.dim(), std::move(cols));
  }
}

template <class Ring>
ModuleElement<typename Ring::value_type> act_e(const Ring& ring, const ModuleElement<typename Ring::value_type>& v) {
  return {v.space, lie_action_matrix(ring, v.space, LieGenerator::E).apply(v.coeffs)};
}

template <class Ring>
ModuleElement<typename Ring::value_type> act_f(const Ring& ring, const ModuleElement<typename Ring::value_type>& v) {
  return {v.space, lie_action_matrix(ring, v.space, LieGenerator::F).apply(v.coeffs)};
}

}  // namespace plethy
