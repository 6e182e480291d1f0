#include "plethy/characters.hpp"

#include <vector>

#include "plethy/combinatorics.hpp"

namespace plethy {

QPoly qchar(const Space& space) {
  std::vector<BigInt> coeffs;
  for (std::size_t idx = 0; idx < space.dim(); ++idx) {
    auto deg = static_cast<std::size_t>(space.y_degree(idx));
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    ++coeffs[deg];
  }
  return QPoly(std::move(coeffs));
}

QPoly q_integer(int n) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(std::max(n, 0)), BigInt(1));
  return QPoly(std::move(coeffs));
}

QPoly qbinom(int a, int b) {
  if (a < 0 || b < 0 || b > a) return {};
  // row[t] holds qbinom(n, t) for the current n
  std::vector<QPoly> row{QPoly(1)};
  for (int n = 1; n <= a; ++n) {
    std::vector<QPoly> next(static_cast<std::size_t>(n) + 1);
    next[0] = 1;
    next[static_cast<std::size_t>(n)] = 1;
    for (int t = 1; t < n; ++t)
      next[static_cast<std::size_t>(t)] =
          row[static_cast<std::size_t>(t) - 1] + row[static_cast<std::size_t>(t)].shifted(t);
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

QPoly schur_hook_principal(int M, int N, int d) {
  std::vector<BigInt> coeffs;
  auto bump = [&](long deg) {
    auto i = static_cast<std::size_t>(deg);
    if (coeffs.size() <= i) coeffs.resize(i + 1);
    ++coeffs[i];
  };
  if (M < 1 || N < 1 || d < 0) return {};
  for (const MultiIndex& column : enumerate_increasing(d, N)) {
    const int corner = column[0];
    const long col_sum = column.sum();
    for (const MultiIndex& row : enumerate_weakly_increasing(d - corner, M - 1))
      bump(col_sum + row.sum() + static_cast<long>(corner) * (M - 1));
  }
  return QPoly(std::move(coeffs));
}

bool is_palindromic(const QPoly& p) {
  if (p.zero()) return true;
  int lo = p.low_degree(), hi = p.degree();
  for (int t = 0; lo + t <= hi - t; ++t)
    if (p.coefficient(lo + t) != p.coefficient(hi - t)) return false;
  return true;
}

QIdentityReport verify_qchar_identity(int N, int d) {
  QIdentityReport r;
  r.N = N;
  r.d = d;
  const QPoly binom = qbinom(d + 2, N + 1);
  r.lhs = (q_integer(N) * binom).shifted(N * (N - 1) / 2);
  r.rhs = schur_hook_principal(2, N, d);
  r.equal = r.lhs == r.rhs;

  r.qbinomial_shift_equal = binom.shifted(N * (N + 1) / 2) == schur_hook_principal(1, N + 1, d + 1);

  const QPoly domain = qchar(Space({Factor::sym(N - 1), Factor::wedge(N + 1, d + 1)}));
  const QPoly kernel = qchar(Space({Factor::wedge(N, d), Factor::sym(d)})) - qchar(Space({Factor::wedge(N + 1, d)}));
  r.module_equal = domain == kernel.shifted(N);
  return r;
}

}  // namespace plethy
