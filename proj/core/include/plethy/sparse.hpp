#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "plethy/error.hpp"
#include "plethy/exact_arith.hpp"
#include "plethy/poly.hpp"
#include "plethy/space.hpp"

namespace plethy {

/// Finitely supported coefficient vector; entries sorted by index, no stored zeros.
template <class E>
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, E>;

  SparseVec() = default;
  /// Entries must be sorted by index and nonzero.
  explicit SparseVec(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  static SparseVec unit(std::size_t idx, E one) { return SparseVec({{idx, std::move(one)}}); }

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const E* find(std::size_t idx) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    return it != entries_.end() && it->first == idx ? &it->second : nullptr;
  }

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Collects index/value contributions and produces a SparseVec.
template <class E>
class Accumulator {
 public:
  void add(std::size_t idx, const E& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = terms_.try_emplace(idx, v);
    if (!inserted) it->second += v;
  }
  void add_scaled(const SparseVec<E>& v, const E& scale) {
    for (const auto& [idx, c] : v) add(idx, E(c * scale));
  }
  void add(const SparseVec<E>& v) {
    for (const auto& [idx, c] : v) add(idx, c);
  }
  SparseVec<E> take() {
    std::vector<typename SparseVec<E>::Entry> out;
    out.reserve(terms_.size());
    for (auto& [idx, c] : terms_)
      if (!is_zero(c)) out.emplace_back(idx, std::move(c));
    terms_.clear();
    return SparseVec<E>(std::move(out));
  }

 private:
  std::map<std::size_t, E> terms_;
};

/// A vector of a Space in canonical coordinates.
template <class E>
struct ModuleElement {
  Space space;
  SparseVec<E> coeffs;
};

/// Sparse matrix stored by columns; column c is the image of domain basis vector c.
template <class E>
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::vector<SparseVec<E>> columns) : rows_(rows), columns_(std::move(columns)) {
    for (const auto& col : columns_)
      if (!col.empty() && col.entries().back().first >= rows_) throw InvalidArgument("matrix entry outside row range");
  }

  static LinearMap identity(std::size_t n, const E& one) {
    std::vector<SparseVec<E>> cols;
    cols.reserve(n);
    for (std::size_t c = 0; c < n; ++c) cols.push_back(SparseVec<E>::unit(c, one));
    return LinearMap(n, std::move(cols));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVec<E>& column(std::size_t c) const { return columns_[c]; }
  const std::vector<SparseVec<E>>& columns() const { return columns_; }

  const E* entry(std::size_t r, std::size_t c) const { return columns_[c].find(r); }

  SparseVec<E> apply(const SparseVec<E>& v) const {
    Accumulator<E> acc;
    for (const auto& [idx, c] : v) acc.add_scaled(columns_.at(idx), c);
    return acc.take();
  }

  /// this o rhs.
  LinearMap compose(const LinearMap& rhs) const {
    if (rhs.rows() != cols()) throw InvalidArgument("composition of incompatible maps");
    std::vector<SparseVec<E>> out;
    out.reserve(rhs.cols());
    for (const auto& col : rhs.columns_) out.push_back(apply(col));
    return LinearMap(rows_, std::move(out));
  }

  LinearMap operator-(const LinearMap& o) const {
    check_shape(o);
    std::vector<SparseVec<E>> out;
    out.reserve(cols());
    for (std::size_t c = 0; c < cols(); ++c) {
      Accumulator<E> acc;
      acc.add(columns_[c]);
      for (const auto& [idx, v] : o.columns_[c]) acc.add(idx, E(-v));
      out.push_back(acc.take());
    }
    return LinearMap(rows_, std::move(out));
  }

  LinearMap scaled(const E& s) const {
    std::vector<SparseVec<E>> out;
    out.reserve(cols());
    for (const auto& col : columns_) {
      Accumulator<E> acc;
      acc.add_scaled(col, s);
      out.push_back(acc.take());
    }
    return LinearMap(rows_, std::move(out));
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  /// Rows as sparse vectors over column indices.
  std::vector<SparseVec<E>> row_vectors() const {
    std::vector<std::vector<typename SparseVec<E>::Entry>> rows(rows_);
    for (std::size_t c = 0; c < columns_.size(); ++c)
      for (const auto& [r, v] : columns_[c]) rows[r].emplace_back(c, v);
    std::vector<SparseVec<E>> out;
    out.reserve(rows_);
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
  }

  LinearMap transpose() const { return LinearMap(cols(), row_vectors()); }

  /// Applies f entrywise (e.g. reduction mod p, evaluation of polynomials).
  template <class F>
  auto map_entries(F f) const {
    using T = std::decay_t<decltype(f(std::declval<const E&>()))>;
    std::vector<SparseVec<T>> out;
    out.reserve(cols());
    for (const auto& col : columns_) {
      std::vector<typename SparseVec<T>::Entry> entries;
      for (const auto& [r, v] : col) {
        T t = f(v);
        if (!plethy::is_zero(t)) entries.emplace_back(r, std::move(t));
      }
      out.emplace_back(std::move(entries));
    }
    return LinearMap<T>(rows_, std::move(out));
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  void check_shape(const LinearMap& o) const {
    if (o.rows_ != rows_ || o.cols() != cols()) throw InvalidArgument("matrices have different shapes");
  }

  std::size_t rows_ = 0;
  std::vector<SparseVec<E>> columns_;
};

}  // namespace plethy
