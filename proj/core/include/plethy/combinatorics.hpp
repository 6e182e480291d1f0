#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "plethy/exact_arith.hpp"

namespace plethy {

/// A tuple (i_1, ..., i_r) with 0 <= i_a <= cap, i.e. an element of I(cap, r).
/// Stored 0-based; the mathematical index a corresponds to operator[](a - 1).
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws InvalidArgument if an entry is outside {0, ..., cap}.
  MultiIndex(std::vector<int> entries, int cap);

  int cap() const { return cap_; }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t pos) const { return entries_[pos]; }
  const std::vector<int>& entries() const { return entries_; }
  long sum() const;
  bool strictly_increasing() const;
  bool weakly_increasing() const;
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<int> entries_;
  int cap_ = 0;
};

/// Sorted multiset {i_1, ..., i_N} u {j}.
using Content = std::vector<int>;

/// Any pair (i, j); the neighbour map can leave the semistandard set.
struct IndexPair {
  MultiIndex i;
  int j = 0;

  bool semistandard() const;
  std::string to_string() const;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// A pair (i, j) with i strictly increasing and i_1 <= j, i.e. a semistandard
/// tableau of shape (2, 1^{N-1}) with first column i and j to the right of i_1.
class SemistandardPair {
 public:
  /// Throws InvalidArgument unless (i, j) is semistandard with 0 <= j <= i.cap().
  SemistandardPair(MultiIndex i, int j);
  explicit SemistandardPair(const IndexPair& p) : SemistandardPair(p.i, p.j) {}

  const MultiIndex& i() const { return i_; }
  int j() const { return j_; }
  std::size_t length() const { return i_.size(); }
  int cap() const { return i_.cap(); }

  Content content() const;
  /// True when j already occurs in i, i.e. the pair is a fixed point of the neighbour map.
  bool j_repeated() const;
  /// Maximal a in {1, ..., N} with i_a <= j.
  int alpha() const;
  long y_degree() const { return i_.sum() + j_; }
  IndexPair as_index_pair() const { return {i_, j_}; }
  std::string to_string() const { return as_index_pair().to_string(); }

  friend bool operator==(const SemistandardPair&, const SemistandardPair&) = default;

 private:
  MultiIndex i_;
  int j_;
};

/// All strictly increasing elements of I(c, r) in lexicographic order.
std::vector<MultiIndex> enumerate_increasing(int c, int r);

/// All weakly increasing elements of I(c, r) in lexicographic order.
std::vector<MultiIndex> enumerate_weakly_increasing(int c, int r);

/// The neighbour map: swap j into the maximal position a with i_a <= j.
IndexPair neighbour(const SemistandardPair& p);

/// The N semistandard pairs with content the (N+1)-set `a` (entries <= d),
/// as iterated neighbours of ((a_1..a_N), a_{N+1}). Second components are
/// strictly decreasing. Throws InvalidArgument on repeated entries.
std::vector<SemistandardPair> chain(std::vector<int> a, int d);

/// The box [k_1,k_2) x [k_2,k_3) x ... x [k_N,k_{N+1}) for a strictly
/// increasing k in I(d+1, N+1). Iterates in odometer order, last coordinate
/// fastest; elements are multi-indices in I(d, N).
class Box {
 public:
  explicit Box(const MultiIndex& k);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = MultiIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const MultiIndex*;
    using reference = const MultiIndex&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

   private:
    friend class Box;
    iterator(const Box* box, bool done);
    const Box* box_ = nullptr;
    MultiIndex current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this, empty()); }
  iterator end() const { return iterator(this, true); }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

 private:
  std::vector<int> lo_, hi_;
  int cap_;
};

/// The total order on semistandard pairs: contents compared lexicographically,
/// ties broken by larger j first. Throws InvalidArgument on mismatched N or d.
std::strong_ordering pair_order(const SemistandardPair& p, const SemistandardPair& q);

inline bool pair_less(const SemistandardPair& p, const SemistandardPair& q) { return pair_order(p, q) < 0; }

/// Semistandard pairs for (N, d), sorted by pair_order.
std::vector<SemistandardPair> enumerate_semistandard_pairs(int N, int d);

/// N * binomial(d+2, N+1).
BigInt count_ssyt_hook(int N, int d);

/// Whether p lies in S_alpha: i_alpha <= j < i_{alpha+1} (or i_N <= j when alpha = N).
bool in_s_alpha(const SemistandardPair& p, int alpha);

/// (i, j) -> (i_1, ..., i_alpha, j+1, i_{alpha+1}+1, ..., i_N+1) in I(d+1, N+1).
MultiIndex s_alpha_bijection(const SemistandardPair& p, int alpha);

/// Inverse of s_alpha_bijection; k must be strictly increasing in I(d+1, N+1).
SemistandardPair s_alpha_inverse(const MultiIndex& k, int alpha);

}  // namespace plethy
