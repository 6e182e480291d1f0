#include "plethy/phi.hpp"

#include <sstream>

namespace plethy {

std::vector<int> DomainLabel::flat() const {
  std::vector<int> out{s};
  out.insert(out.end(), k.entries().begin(), k.entries().end());
  return out;
}

std::string DomainLabel::to_string() const { return "(" + std::to_string(s) + "," + k.to_string() + ")"; }

DomainLabel domain_label(const Space& domain, std::size_t idx) {
  std::vector<int> lab = domain.label(idx);
  const int cap = domain.factors().at(1).degree();
  return {lab[0], MultiIndex(std::vector<int>(lab.begin() + 1, lab.end()), cap)};
}

DomainLabel triangular_witness(const SemistandardPair& p) {
  const int alpha = p.alpha();
  return {alpha - 1, s_alpha_bijection(p, alpha)};
}

std::vector<EquivarianceReport> verify_group_equivariance_poly(int N, int d) {
  GammaRing ring;
  const Space domain = phi_domain_space(N, d);
  const Space ambient = delta_ambient_space(N, d);
  const auto phi = phi_canonical_matrix(ring, N, d);
  const auto u = unipotent_upper(ring, ring.generator());
  std::vector<EquivarianceReport> out;
  for (auto [g, name] : {std::pair{u, "ZZ[g] U_g"}, std::pair{u.transposed(), "ZZ[g] U_g^T"}}) {
    out.push_back(check_commutes(name, domain, ambient, phi, group_action_matrix(ring, domain, g),
                                 group_action_matrix(ring, ambient, g)));
  }
  return out;
}

std::vector<EquivarianceReport> verify_group_equivariance_fp(int N, int d, std::uint32_t p) {
  PrimeField field(p);
  const Space domain = phi_domain_space(N, d);
  const Space ambient = delta_ambient_space(N, d);
  const auto phi = phi_canonical_matrix(field, N, d);
  const std::string tag = field.name();
  EquivarianceReport upper{tag + " U_g, all g", true, 0, {}};
  EquivarianceReport lower{tag + " U_g^T, all g", true, 0, {}};
  for (std::uint32_t gamma = 0; gamma < p; ++gamma) {
    const auto u = unipotent_upper(field, field.from_int(gamma));
    for (auto* rep : {&upper, &lower}) {
      if (!rep->passed) continue;
      const auto g = rep == &upper ? u : u.transposed();
      auto r = check_commutes(rep->route, domain, ambient, phi, group_action_matrix(field, domain, g),
                              group_action_matrix(field, ambient, g));
      rep->columns_checked += r.columns_checked;
      if (!r.passed) {
        rep->passed = false;
        rep->counterexample = "g=" + std::to_string(gamma) + ": " + r.counterexample;
      }
    }
  }
  EquivarianceReport bij{tag + " bijective", true, phi.cols(), {}};
  const std::size_t delta_dim = static_cast<std::size_t>(count_ssyt_hook(N, d).get_ui());
  const std::size_t r = rank(field, phi);
  if (r != domain.dim() || domain.dim() != delta_dim) {
    bij.passed = false;
    bij.counterexample = "rank " + std::to_string(r) + ", domain dim " + std::to_string(domain.dim()) +
                         ", codomain dim " + std::to_string(delta_dim);
  }
  return {upper, lower, bij};
}

ScalarCheck verify_gl2_scalar(int N, int d) {
  PolyRing<AlphaVar> ring;
  const auto g = scalar_matrix(ring, ring.generator());
  const Space domain = phi_domain_space(N, d);
  const Space codomain({Factor::det(N), Factor::wedge(N, d), Factor::sym(d)});
  ScalarCheck r;
  r.domain_exponent = domain.scalar_degree();
  r.codomain_exponent = codomain.scalar_degree();
  r.formula_domain = static_cast<long>(N + 1) * d + 2L * N;
  r.formula_codomain = static_cast<long>(N + 1) * d + 2L * N;
  auto scaled_identity = [&](const Space& space, long exponent) {
    const auto m = group_action_matrix(ring, space, g);
    const auto expected = IntPoly<AlphaVar>::monomial(static_cast<int>(exponent));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& col = m.column(c);
      if (col.size() != 1 || col.entries()[0].first != c || !(col.entries()[0].second == expected)) return false;
    }
    return true;
  };
  r.symbolic_action_ok = scaled_identity(domain, r.domain_exponent) && scaled_identity(codomain, r.codomain_exponent);
  return r;
}

}  // namespace plethy
