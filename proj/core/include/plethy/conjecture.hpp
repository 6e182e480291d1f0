#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plethy/actions.hpp"
#include "plethy/characters.hpp"
#include "plethy/exact_arith.hpp"
#include "plethy/linalg.hpp"
#include "plethy/space.hpp"
#include "plethy/sparse.hpp"

namespace plethy {

/// Jordan block sizes of a unipotent operator, weakly decreasing.
struct JordanType {
  std::vector<std::size_t> parts;

  std::size_t dim() const;
  /// Repeated parts in exponent form, "[3,2^2,1]"; the empty type renders as "[]".
  std::string to_string() const;
  friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// Jordan type of u restricted to the u-stable subspace spanned by basis.
///
/// Reads block counts off the ranks r_m of (u - 1)^m applied to the subspace:
/// there are r_{m-1} - r_m blocks of size at least m. Throws ConsistencyError
/// if u - 1 is not nilpotent there.
JordanType jordan_type(const PrimeField& field, const LinearMap<Fp>& u, const std::vector<SparseVec<Fp>>& basis);
/// Jordan type of u on its whole space.
JordanType jordan_type(const PrimeField& field, const LinearMap<Fp>& u);

/// ⋀^N V (x) Sym^{M-1} V, V = Sym^d E; the source of the hook map.
Space hook_domain_space(int M, int N, int d);
/// ⋀^{N+1} V (x) Sym^{M-2} V.
Space hook_codomain_space(int M, int N, int d);

/// v_1∧...∧v_N (x) w_1...w_{M-1}  ->  sum_t v_1∧...∧v_N∧w_t (x) w_1...ŵ_t...w_{M-1}.
/// For M = 2 this is mu_N. Requires M >= 2.
template <class Ring>
LinearMap<typename Ring::value_type> hook_map(const Ring& ring, int M, int N, int d) {
  using E = typename Ring::value_type;
  if (M < 2) throw InvalidArgument("hook map needs M >= 2");
  const Space dom = hook_domain_space(M, N, d);
  const Space cod = hook_codomain_space(M, N, d);
  const Factor& wedge_out = cod.factors()[0];
  const Factor& sym_out = cod.factors()[1];
  std::vector<SparseVec<E>> cols;
  cols.reserve(dom.dim());
  for (std::size_t idx = 0; idx < dom.dim(); ++idx) {
    auto fi = dom.factor_indices(idx);
    const auto& i = dom.factors()[0].label(fi[0]);
    const auto& w = dom.factors()[1].label(fi[1]);
    Accumulator<E> acc;
    for (std::size_t t = 0; t < w.size(); ++t) {
      std::vector<int> v = i;
      v.push_back(w[t]);
      auto normal = wedge_normalize(std::move(v), d);
      if (!normal) continue;
      std::vector<int> rest = w;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
      const std::size_t target[] = {*wedge_out.index_of(normal->first), *sym_out.index_of(rest)};
      acc.add(cod.index_from_factors(target), ring.from_int(normal->second));
    }
    cols.push_back(acc.take());
  }
  return LinearMap<E>(cod.dim(), std::move(cols));
}

/// Concrete model of the hook Schur functor applied to Sym^d E: a subspace of
/// ambient given by a basis in canonical coordinates.
template <class Field>
struct HookSchurSpace {
  int M = 0;
  int N = 0;
  int d = 0;
  Space ambient;
  std::vector<SparseVec<typename Field::value_type>> basis;
};

/// The construction used for the hook Schur functor; recorded in every scan report.
extern const char* const kHookConvention;

/// M = 1 gives ⋀^N V itself; M >= 2 the kernel of hook_map.
template <class Field>
HookSchurSpace<Field> hook_schur_space(const Field& field, int M, int N, int d) {
  if (M < 1 || N < 1 || d < 0) throw InvalidArgument("hook Schur space needs M, N >= 1 and d >= 0");
  HookSchurSpace<Field> out{M, N, d, hook_domain_space(M, N, d), {}};
  if (M == 1) {
    for (std::size_t idx = 0; idx < out.ambient.dim(); ++idx)
      out.basis.push_back(SparseVec<typename Field::value_type>::unit(idx, field.one()));
  } else {
    out.basis = kernel_basis(field, hook_map(field, M, N, d));
  }
  return out;
}

/// ⋀^{M-1} Sym^{M+N-3} E (x) ⋀^{M+N-1} Sym^{M+d-1} E.
Space conjecture_lhs_space(int M, int N, int d);

struct QCharComparison {
  QPoly lhs;      // qchar of conjecture_lhs_space
  QPoly rhs;      // q^shift * s_{(M,1^{N-1})}(1, ..., q^d)
  int shift = 0;  // aligns the lowest degrees; may be negative, then lhs was shifted instead
  bool equal = false;
};

QCharComparison conjecture_qchar(int M, int N, int d);

struct PrimeFingerprint {
  std::uint32_t p = 0;
  std::size_t dim_lhs = 0;
  std::size_t dim_rhs = 0;
  JordanType jordan_lhs;
  JordanType jordan_rhs;
  bool jordan_equal = false;
};

struct ConjectureReport {
  int M = 0;
  int N = 0;
  int d = 0;
  bool skipped = false;
  std::string notice;  // why a tuple was skipped
  QCharComparison qchar;
  bool qchar_equal = false;
  std::size_t expected_dim = 0;  // s_{(M,1^{N-1})} at q = 1
  std::size_t rational_dim = 0;  // dimension of hook_schur_space over QQ
  bool convention_valid = false;
  std::vector<PrimeFingerprint> fingerprints;
  std::string convention;

  /// No skip, equal characters, and equal Jordan types at every prime.
  bool all_equal() const;
};

/// Largest space dimension a scan will build: PLETHY_DIM_CAP if set, else 5000.
std::size_t default_dim_cap();

struct ScanConfig {
  int M_lo = 1, M_hi = 2;
  int N_lo = 1, N_hi = 3;
  int d_lo = 0, d_hi = 5;
  std::vector<std::uint32_t> primes{2, 3};
  unsigned workers = 1;
  std::size_t dim_cap = 5000;
};

/// Report for one tuple. Dimensions above dim_cap give a skipped report.
ConjectureReport scan_tuple(int M, int N, int d, const std::vector<std::uint32_t>& primes, std::size_t dim_cap);

/// One report per (M, N, d) in lexicographic order, computed on a pool of
/// config.workers threads.
std::vector<ConjectureReport> scan(const ScanConfig& config);

/// Flat table, one row per (tuple, prime); skipped tuples get one row with an empty p.
std::string scan_to_csv(const std::vector<ConjectureReport>& reports);
std::string scan_to_json(const std::vector<ConjectureReport>& reports);

}  // namespace plethy
