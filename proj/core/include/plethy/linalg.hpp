#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "plethy/error.hpp"
#include "plethy/sparse.hpp"

namespace plethy {

/// x + a*y on sorted sparse vectors.
template <class E>
SparseVec<E> axpy(const SparseVec<E>& x, const E& a, const SparseVec<E>& y) {
  std::vector<typename SparseVec<E>::Entry> out;
  out.reserve(x.size() + y.size());
  auto xi = x.begin(), yi = y.begin();
  while (xi != x.end() || yi != y.end()) {
    if (yi == y.end() || (xi != x.end() && xi->first < yi->first)) {
      out.push_back(*xi++);
    } else if (xi == x.end() || yi->first < xi->first) {
      E v = a * yi->second;
      if (!is_zero(v)) out.emplace_back(yi->first, std::move(v));
      ++yi;
    } else {
      E v = xi->second + a * yi->second;
      if (!is_zero(v)) out.emplace_back(xi->first, std::move(v));
      ++xi;
      ++yi;
    }
  }
  return SparseVec<E>(std::move(out));
}

/// Incremental Gaussian elimination over a field on sparse row vectors.
///
/// Stored rows are keyed by pivot column and have a leading 1 there. They are
/// in echelon form; make_reduced() clears each pivot column from the other rows.
template <class Field>
class RowEchelon {
 public:
  using E = typename Field::value_type;

  explicit RowEchelon(Field field) : field_(std::move(field)) {
    static_assert(Field::is_field, "elimination needs a field");
  }

  /// Adds a row; returns false if it was dependent on the rows already present.
  bool insert(SparseVec<E> row) {
    row = reduce_leading(std::move(row));
    if (row.empty()) return false;
    E inv = field_.inverse(row.entries().front().second);
    std::size_t col = row.entries().front().first;
    pivots_.emplace(col, axpy(SparseVec<E>{}, inv, row));
    reduced_ = false;
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }
  const std::map<std::size_t, SparseVec<E>>& pivots() const { return pivots_; }

  /// Eliminates every pivot column from v; the result is zero iff v is in the row span.
  SparseVec<E> reduce(SparseVec<E> v) const {
    std::size_t from = 0;
    while (true) {
      auto it = std::find_if(v.begin(), v.end(), [&](const auto& e) {
        return e.first >= from && pivots_.count(e.first) != 0;
      });
      if (it == v.end()) return v;
      std::size_t col = it->first;
      E a = -it->second;
      v = axpy(v, a, pivots_.at(col));
      from = col + 1;
    }
  }

  /// Brings the stored rows to reduced row echelon form.
  void make_reduced() {
    if (reduced_) return;
    for (auto p = pivots_.rbegin(); p != pivots_.rend(); ++p) {
      const std::size_t col = p->first;
      for (auto q = pivots_.begin(); q != pivots_.end() && q->first < col; ++q) {
        if (const E* v = q->second.find(col)) {
          E a = -*v;
          q->second = axpy(q->second, a, p->second);
        }
      }
    }
    reduced_ = true;
  }

 private:
  SparseVec<E> reduce_leading(SparseVec<E> row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.entries().front().first);
      if (it == pivots_.end()) break;
      E a = -row.entries().front().second;
      row = axpy(row, a, it->second);
    }
    return row;
  }

  Field field_;
  std::map<std::size_t, SparseVec<E>> pivots_;
  bool reduced_ = true;
};

/// Rank of a family of vectors over a field.
template <class Field>
std::size_t rank_of_vectors(const Field& field, const std::vector<SparseVec<typename Field::value_type>>& vectors) {
  RowEchelon<Field> ech(field);
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

/// Rank of a matrix over a field. Throws UnsupportedRing over ZZ or polynomial rings.
template <class Field>
std::size_t rank(const Field& field, const LinearMap<typename Field::value_type>& m) {
  if constexpr (!Field::is_field) {
    throw UnsupportedRing("rank requested over " + field.name() + ", which is not a field");
  } else {
    return rank_of_vectors(field, m.columns());
  }
}

/// Basis of the kernel of m over a field, one vector per free column of the
/// reduced row echelon form. Each returned vector is checked to map to zero.
template <class Field>
std::vector<SparseVec<typename Field::value_type>> kernel_basis(const Field& field,
                                                               const LinearMap<typename Field::value_type>& m) {
  using E = typename Field::value_type;
  if constexpr (!Field::is_field) {
    throw UnsupportedRing("kernel requested over " + field.name() + ", which is not a field");
  } else {
    RowEchelon<Field> ech(field);
    for (auto& row : m.row_vectors()) ech.insert(std::move(row));
    ech.make_reduced();
    std::vector<std::vector<typename SparseVec<E>::Entry>> kernel_entries(m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto& [col, row] : ech.pivots()) is_pivot[col] = true;
    for (const auto& [col, row] : ech.pivots())
      for (const auto& [f, v] : row)
        if (!is_pivot[f]) kernel_entries[f].emplace_back(col, E(-v));
    std::vector<SparseVec<E>> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
      if (is_pivot[f]) continue;
      auto entries = std::move(kernel_entries[f]);
      entries.emplace_back(f, field.one());
      std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseVec<E> v(std::move(entries));
      if (!m.apply(v).empty()) throw ConsistencyError("kernel vector does not map to zero");
      out.push_back(std::move(v));
    }
    return out;
  }
}

/// Coefficients c with sum_t c_t * vectors[t] = target, if a solution exists.
/// The vectors need not be independent; any solution is returned.
template <class Field>
std::optional<SparseVec<typename Field::value_type>> solve_in_span(
    const Field& field, const std::vector<SparseVec<typename Field::value_type>>& vectors,
    const SparseVec<typename Field::value_type>& target) {
  using E = typename Field::value_type;
  // Augment each vector with an identity tag placed after every coordinate so
  // that the combination is tracked by the elimination itself.
  std::size_t width = 0;
  for (const auto& v : vectors)
    if (!v.empty()) width = std::max(width, v.entries().back().first + 1);
  if (!target.empty()) width = std::max(width, target.entries().back().first + 1);
  RowEchelon<Field> ech(field);
  for (std::size_t t = 0; t < vectors.size(); ++t) {
    auto entries = vectors[t].entries();
    entries.emplace_back(width + t, field.one());
    ech.insert(SparseVec<E>(std::move(entries)));
  }
  SparseVec<E> rem = ech.reduce(target);
  std::vector<typename SparseVec<E>::Entry> coeffs;
  for (const auto& [idx, v] : rem) {
    if (idx < width) return std::nullopt;
    coeffs.emplace_back(idx - width, E(-v));
  }
  // rem = target - sum_t c_t (v_t + tag_t): the coordinate part vanished, the tag part is -c.
  SparseVec<E> sol(std::move(coeffs));
  Accumulator<E> check;
  for (const auto& [t, c] : sol) check.add_scaled(vectors[t], c);
  if (!(check.take() == target)) return std::nullopt;
  return sol;
}

}  // namespace plethy
