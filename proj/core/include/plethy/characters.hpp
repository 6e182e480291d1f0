#pragma once

#include "plethy/poly.hpp"
#include "plethy/space.hpp"

namespace plethy {

/// Character at diag(1, q): each canonical basis vector of Y-degree a contributes q^a.
QPoly qchar(const Space& space);

/// [n]_q = 1 + q + ... + q^{n-1}.
QPoly q_integer(int n);

/// Gaussian binomial coefficient via the q-Pascal recurrence; 0 when b > a.
QPoly qbinom(int a, int b);

/// s_{(M,1^{N-1})}(1, q, ..., q^d) by enumerating semistandard tableaux of the
/// hook shape with entries in {0..d}, weighted by their entry sum.
QPoly schur_hook_principal(int M, int N, int d);

/// Coefficients read the same forwards and backwards between the lowest and
/// highest nonzero degree. The zero polynomial counts as palindromic.
bool is_palindromic(const QPoly& p);

struct QIdentityReport {
  int N = 0;
  int d = 0;
  QPoly lhs;  // q^{N(N-1)/2} [N]_q qbinom(d+2, N+1)
  QPoly rhs;  // s_{(2,1^{N-1})}(1, ..., q^d) from tableaux
  bool equal = false;
  // q^{N(N+1)/2} qbinom(d+2, N+1) against s_{(1^{N+1})}(1, ..., q^{d+1})
  bool qbinomial_shift_equal = false;
  // qchar(domain of phi) against q^N (qchar(Wedge^N V (x) V) - qchar(Wedge^{N+1} V)), V = Sym^d E
  bool module_equal = false;

  bool ok() const { return equal && qbinomial_shift_equal && module_equal; }
};

QIdentityReport verify_qchar_identity(int N, int d);

}  // namespace plethy
