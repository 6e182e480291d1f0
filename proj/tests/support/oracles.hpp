#pragma once

// Brute-force reference implementations. None of these call into the library
// code they are used to check; they share only the scalar types.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "plethy/exact_arith.hpp"

namespace plethy::oracle {

/// Pascal's triangle.
inline BigInt binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  std::vector<BigInt> row{1};
  for (int n = 1; n <= a; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 1);
    for (int t = 1; t < n; ++t) next[t] = row[t - 1] + row[t];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

/// Calls f on every tuple in {0..c}^len, last coordinate fastest.
template <class F>
void for_each_tuple(int c, int len, F f) {
  std::vector<int> t(static_cast<std::size_t>(len), 0);
  if (c < 0 && len > 0) return;
  while (true) {
    f(t);
    int pos = len - 1;
    while (pos >= 0 && t[pos] == c) t[pos--] = 0;
    if (pos < 0) return;
    ++t[pos];
  }
}

inline bool strictly_increasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

/// (i, j) with i strictly increasing in {0..d}^N and i_1 <= j, by filtering all tuples.
inline std::vector<std::pair<std::vector<int>, int>> semistandard_pairs(int N, int d) {
  std::vector<std::pair<std::vector<int>, int>> out;
  for_each_tuple(d, N + 1, [&](const std::vector<int>& t) {
    std::vector<int> i(t.begin(), t.end() - 1);
    if (strictly_increasing(i) && i[0] <= t.back()) out.emplace_back(i, t.back());
  });
  return out;
}

/// Number of inversions of a sequence.
inline int inversions(const std::vector<int>& v) {
  int n = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) n += v[a] > v[b];
  return n;
}

/// Coefficients of sum over b-subsets of {0..a-1} of q^(sum - b(b-1)/2), by bitmask.
inline std::vector<long> subset_qbinom(int a, int b) {
  std::vector<long> out;
  if (b < 0 || b > a) return out;
  for (unsigned long mask = 0; mask < (1ul << a); ++mask) {
    if (__builtin_popcountl(mask) != b) continue;
    long s = 0;
    for (int t = 0; t < a; ++t)
      if (mask >> t & 1ul) s += t;
    auto deg = static_cast<std::size_t>(s - static_cast<long>(b) * (b - 1) / 2);
    if (out.size() <= deg) out.resize(deg + 1);
    ++out[deg];
  }
  return out;
}

/// Fillings of the hook (M, 1^{N-1}) with entries in {0..d}: the corner, the
/// rest of the first row, the rest of the first column. Weighted by entry sum.
inline std::vector<long> hook_tableaux(int M, int N, int d) {
  std::vector<long> out;
  for_each_tuple(d, M + N - 1, [&](const std::vector<int>& t) {
    // t[0] corner, t[1..M-1] row, t[M..] column
    for (int a = 1; a < M; ++a)
      if (t[a] < t[a - 1]) return;
    int prev = t[0];
    for (int a = M; a < M + N - 1; ++a) {
      if (t[a] <= prev) return;
      prev = t[a];
    }
    auto s = static_cast<std::size_t>(std::accumulate(t.begin(), t.end(), 0));
    if (out.size() <= s) out.resize(s + 1);
    ++out[s];
  });
  return out;
}

/// Dense matrix over a field given by its ring policy, rows of columns.
template <class E>
using Dense = std::vector<std::vector<E>>;

/// Rank by textbook row reduction on a dense copy.
template <class Field>
std::size_t dense_rank(const Field& field, Dense<typename Field::value_type> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    auto inv = field.inverse(m[rank][c]);
    for (auto& x : m[rank]) x = x * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || is_zero(m[r][c])) continue;
      auto f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

template <class Ring>
Dense<typename Ring::value_type> dense_product(const Ring& ring, const Dense<typename Ring::value_type>& a,
                                               const Dense<typename Ring::value_type>& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Dense<typename Ring::value_type> out(n, std::vector<typename Ring::value_type>(m, ring.zero()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t t = 0; t < k; ++t)
      if (!is_zero(a[r][t]))
        for (std::size_t c = 0; c < m; ++c) out[r][c] = out[r][c] + a[r][t] * b[t][c];
  return out;
}

/// Entry (b, a) is the coefficient of X^{c-b} Y^b in (g11 X + g21 Y)^{c-a} (g12 X + g22 Y)^a,
/// expanded by the binomial theorem on each power.
template <class Ring>
Dense<typename Ring::value_type> sym_matrix(const Ring& ring, int c, const typename Ring::value_type& g11,
                                            const typename Ring::value_type& g12, const typename Ring::value_type& g21,
                                            const typename Ring::value_type& g22) {
  using E = typename Ring::value_type;
  auto power = [&](E x, int n) {
    E r = ring.one();
    for (int t = 0; t < n; ++t) r = r * x;
    return r;
  };
  Dense<E> m(static_cast<std::size_t>(c) + 1, std::vector<E>(static_cast<std::size_t>(c) + 1, ring.zero()));
  for (int a = 0; a <= c; ++a)
    for (int u = 0; u <= c - a; ++u)      // Y's taken from the first power
      for (int w = 0; w <= a; ++w) {      // Y's taken from the second power
        E term = ring.from_bigint(binomial(c - a, u) * binomial(a, w));
        term = term * power(g11, c - a - u) * power(g21, u) * power(g12, a - w) * power(g22, w);
        m[static_cast<std::size_t>(u + w)][static_cast<std::size_t>(a)] =
            m[static_cast<std::size_t>(u + w)][static_cast<std::size_t>(a)] + term;
      }
  return m;
}

/// Determinant of the minor with the given rows and columns, by Leibniz expansion.
template <class Ring>
typename Ring::value_type minor_det(const Ring& ring, const Dense<typename Ring::value_type>& m,
                                    const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto total = ring.zero();
  do {
    auto term = ring.from_int(inversions(perm) % 2 == 0 ? 1 : -1);
    for (std::size_t t = 0; t < perm.size(); ++t) term = term * m[rows[t]][cols[perm[t]]];
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Columns of v_(s,k): the labels (i..., j) with coefficient 1, found by
/// filtering every strictly increasing i against the interval conditions.
inline std::map<std::vector<int>, long> phi_column(int N, int d, int s, const std::vector<int>& k) {
  std::map<std::vector<int>, long> out;
  const int ksum = std::accumulate(k.begin(), k.end(), 0);
  for_each_tuple(d, N, [&](const std::vector<int>& i) {
    if (!strictly_increasing(i)) return;
    for (int a = 0; a < N; ++a)
      if (i[a] < k[a] || i[a] >= k[a + 1]) return;
    int j = s + ksum - N - std::accumulate(i.begin(), i.end(), 0);
    std::vector<int> label = i;
    label.push_back(j);
    ++out[label];
  });
  return out;
}

/// Jordan type of a unipotent dense matrix over GF(p) from ranks of powers of (u - 1).
inline std::vector<std::size_t> jordan_parts(const PrimeField& f, Dense<Fp> u) {
  const std::size_t n = u.size();
  for (std::size_t r = 0; r < n; ++r) u[r][r] = u[r][r] - f.one();
  std::vector<std::size_t> ranks{n};
  Dense<Fp> power = u;
  while (ranks.back() > 0) {
    ranks.push_back(dense_rank(f, power));
    if (ranks.size() > n + 2) return {};  // not nilpotent
    power = dense_product(f, power, u);
  }
  std::vector<std::size_t> parts;
  for (std::size_t m = ranks.size() - 1; m >= 1; --m) {
    std::size_t at_least = ranks[m - 1] - ranks[m];
    std::size_t longer = m + 1 < ranks.size() ? ranks[m] - ranks[m + 1] : 0;
    parts.insert(parts.end(), at_least - longer, m);
  }
  return parts;
}

}  // namespace plethy::oracle
