#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plethy/combinatorics.hpp"
#include "plethy/error.hpp"
#include "plethy/linalg.hpp"
#include "plethy/space.hpp"
#include "plethy/sparse.hpp"

namespace plethy {

/// Wedge^N Sym^d E (x) Sym^d E, whose basis vector with label (i, j) is F(i, j).
inline Space delta_ambient_space(int N, int d) { return Space({Factor::wedge(N, d), Factor::sym(d)}); }

/// Matrix of mu_N : Wedge^N V (x) V -> Wedge^{N+1} V, V = Sym^d E.
template <class Ring>
LinearMap<typename Ring::value_type> mu_matrix(const Ring& ring, int N, int d) {
  using E = typename Ring::value_type;
  Space ambient = delta_ambient_space(N, d);
  Factor target = Factor::wedge(N + 1, d);
  std::vector<SparseVec<E>> cols;
  cols.reserve(ambient.dim());
  for (std::size_t idx = 0; idx < ambient.dim(); ++idx) {
    auto normal = wedge_normalize(ambient.label(idx), d);
    if (!normal) {
      cols.emplace_back();
      continue;
    }
    cols.push_back(SparseVec<E>::unit(*target.index_of(normal->first), ring.from_int(normal->second)));
  }
  return LinearMap<E>(target.dim(), std::move(cols));
}

/// mu_N on an element of Wedge^N Sym^d E (x) Sym^d E.
template <class Ring>
ModuleElement<typename Ring::value_type> mu_N(const Ring& ring, int N, int d,
                                              const ModuleElement<typename Ring::value_type>& v) {
  if (!(v.space == delta_ambient_space(N, d))) throw InvalidArgument("mu_N applied to a vector of " + v.space.description());
  return {Space({Factor::wedge(N + 1, d)}), mu_matrix(ring, N, d).apply(v.coeffs)};
}

/// The canonical basis vector F(i, j) = F_wedge(i) (x) X^{d-j} Y^j.
template <class Ring>
ModuleElement<typename Ring::value_type> F_vec(const Ring& ring, const MultiIndex& i, int j) {
  const int d = i.cap();
  if (!i.strictly_increasing() || i.size() == 0) throw InvalidArgument("F(i,j) needs strictly increasing i");
  if (j < 0 || j > d) throw InvalidArgument("F(i,j) needs 0 <= j <= d");
  Space ambient = delta_ambient_space(static_cast<int>(i.size()), d);
  std::vector<int> label = i.entries();
  label.push_back(j);
  return {ambient, SparseVec<typename Ring::value_type>::unit(*ambient.index_of(label), ring.one())};
}

/// F_Delta(i, j): F(i, j), plus F of its neighbour when j is not already in i.
template <class Ring>
ModuleElement<typename Ring::value_type> F_delta_vec(const Ring& ring, const SemistandardPair& p) {
  auto v = F_vec(ring, p.i(), p.j());
  if (p.j_repeated()) return v;
  IndexPair nb = neighbour(p);
  auto w = F_vec(ring, nb.i, nb.j);
  Accumulator<typename Ring::value_type> acc;
  acc.add(v.coeffs);
  acc.add(w.coeffs);
  return {v.space, acc.take()};
}

/// Delta^{(2,1^{N-1})} Sym^d E realised as ker mu_N, with the F_Delta basis
/// indexed by semistandard pairs in pair_order.
template <class Ring>
class DeltaSpace {
 public:
  using E = typename Ring::value_type;

  DeltaSpace(Ring ring, int N, int d)
      : ring_(std::move(ring)), N_(N), d_(d), ambient_(delta_ambient_space(N, d)),
        pairs_(enumerate_semistandard_pairs(N, d)), mu_(mu_matrix(ring_, N, d)) {
    if (N < 1 || d < 0) throw InvalidArgument("DeltaSpace needs N >= 1, d >= 0");
    for (std::size_t t = 0; t < pairs_.size(); ++t) {
      pair_index_.emplace(ambient_index(pairs_[t].as_index_pair()), t);
      f_delta_.push_back(F_delta_vec(ring_, pairs_[t]).coeffs);
    }
    build_classes();
  }

  const Ring& ring() const { return ring_; }
  int N() const { return N_; }
  int d() const { return d_; }
  std::size_t dim() const { return pairs_.size(); }
  const Space& ambient() const { return ambient_; }
  const std::vector<SemistandardPair>& pairs() const { return pairs_; }
  const std::vector<SparseVec<E>>& f_delta() const { return f_delta_; }
  const LinearMap<E>& mu() const { return mu_; }

  std::size_t ambient_index(const IndexPair& p) const {
    std::vector<int> label = p.i.entries();
    label.push_back(p.j);
    auto idx = ambient_.index_of(label);
    if (!idx) throw InvalidArgument("no basis vector F" + p.to_string());
    return *idx;
  }

  /// Position of p in the pair order.
  std::size_t pair_index(const SemistandardPair& p) const { return pair_index_.at(ambient_index(p.as_index_pair())); }

  /// Coordinates of a kernel element in the F_Delta basis (indexed by pair
  /// position). Solved one content class at a time along its chain; throws
  /// NotInKernel if v is not in ker mu_N.
  SparseVec<E> express(const SparseVec<E>& v) const {
    std::map<std::size_t, std::map<std::size_t, E>> by_class;
    for (const auto& [idx, c] : v) by_class[class_of_[idx]].emplace(idx, c);
    std::vector<typename SparseVec<E>::Entry> out;
    bool residual = false;
    for (const auto& [cls, terms] : by_class) {
      const ContentClass& cc = classes_[cls];
      auto coeff = [&](std::size_t amb) {
        auto it = terms.find(amb);
        return it == terms.end() ? ring_.zero() : it->second;
      };
      if (cc.pair_positions.size() == 1 && cc.members.size() == 1) {
        out.emplace_back(cc.pair_positions[0], coeff(cc.members[0]));
        continue;
      }
      // F_Delta(p_m) = F(p_m) + F(p_{m+1}); members = p_1..p_N, terminal pair.
      E running = ring_.zero();
      for (std::size_t m = 0; m < cc.pair_positions.size(); ++m) {
        running = coeff(cc.members[m]) - running;
        if (!is_zero(running)) out.emplace_back(cc.pair_positions[m], running);
      }
      if (!(coeff(cc.members.back()) == running)) residual = true;
    }
    if (residual) return express_fallback(v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return SparseVec<E>(std::move(out));
  }

  /// sum_t coords_t F_Delta(p_t) in ambient coordinates.
  SparseVec<E> reconstruct(const SparseVec<E>& coords) const {
    Accumulator<E> acc;
    for (const auto& [t, c] : coords) acc.add_scaled(f_delta_.at(t), c);
    return acc.take();
  }

 private:
  struct ContentClass {
    std::vector<std::size_t> members;         // ambient indices, chain order then terminal pair
    std::vector<std::size_t> pair_positions;  // positions of the semistandard members
  };

  void build_classes() {
    class_of_.assign(ambient_.dim(), 0);
    std::map<Content, std::size_t> ids;
    for (std::size_t idx = 0; idx < ambient_.dim(); ++idx) {
      Content c = ambient_.label(idx);
      std::sort(c.begin(), c.end());
      auto [it, inserted] = ids.try_emplace(c, classes_.size());
      if (inserted) {
        ContentClass cc;
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
          cc.members.push_back(idx);  // the unique F of a repeated content is semistandard
        } else {
          auto ch = chain(c, d_);
          for (const auto& p : ch) cc.members.push_back(ambient_index(p.as_index_pair()));
          cc.members.push_back(ambient_index(neighbour(ch.back())));
        }
        for (std::size_t m : cc.members)
          if (auto pi = pair_index_.find(m); pi != pair_index_.end()) cc.pair_positions.push_back(pi->second);
        classes_.push_back(std::move(cc));
      }
      class_of_[idx] = it->second;
    }
  }

  SparseVec<E> express_fallback(const SparseVec<E>& v) const {
    if constexpr (Ring::is_field) {
      if (auto sol = solve_in_span(ring_, f_delta_, v)) return *sol;
    }
    throw NotInKernel("vector is not in the span of the F_Delta basis (not in ker mu_N)");
  }

  Ring ring_;
  int N_, d_;
  Space ambient_;
  std::vector<SemistandardPair> pairs_;
  LinearMap<E> mu_;
  std::vector<SparseVec<E>> f_delta_;
  std::map<std::size_t, std::size_t> pair_index_;  // ambient index -> pair position
  std::vector<std::size_t> class_of_;
  std::vector<ContentClass> classes_;
};

/// Outcome of checking that the F_Delta vectors form a basis of ker mu_N.
struct DeltaBasisCheck {
  std::size_t ambient_dim = 0;
  std::size_t mu_rank = 0;
  std::size_t kernel_dim = 0;  // ambient_dim - mu_rank
  std::size_t f_delta_count = 0;
  std::size_t f_delta_rank = 0;
  bool all_in_kernel = false;
  BigInt expected_dim;  // N * binomial(d+2, N+1)

  bool ok() const {
    return all_in_kernel && f_delta_rank == f_delta_count && f_delta_count == kernel_dim &&
           BigInt(static_cast<unsigned long>(kernel_dim)) == expected_dim;
  }
};

/// Independent verification over a field: kernel dimension by elimination,
/// F_Delta membership in the kernel and linear independence.
template <class Field>
DeltaBasisCheck check_delta_basis(const DeltaSpace<Field>& delta) {
  DeltaBasisCheck r;
  r.ambient_dim = delta.ambient().dim();
  r.mu_rank = rank(delta.ring(), delta.mu());
  r.kernel_dim = r.ambient_dim - r.mu_rank;
  r.f_delta_count = delta.dim();
  r.f_delta_rank = rank_of_vectors(delta.ring(), delta.f_delta());
  r.all_in_kernel = std::all_of(delta.f_delta().begin(), delta.f_delta().end(),
                                [&](const auto& v) { return delta.mu().apply(v).empty(); });
  r.expected_dim = count_ssyt_hook(delta.N(), delta.d());
  return r;
}

/// The F_Delta basis of ker mu_N over a field, verified to be a basis.
/// Throws ConsistencyError if any check fails.
template <class Field>
DeltaSpace<Field> delta_basis(const Field& field, int N, int d) {
  DeltaSpace<Field> delta(field, N, d);
  DeltaBasisCheck r = check_delta_basis(delta);
  if (!r.ok())
    throw ConsistencyError("F_Delta basis check failed at N=" + std::to_string(N) + ", d=" + std::to_string(d) +
                           ": kernel dim " + std::to_string(r.kernel_dim) + ", F_Delta rank " +
                           std::to_string(r.f_delta_rank) + " of " + std::to_string(r.f_delta_count));
  return delta;
}

}  // namespace plethy
