// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: plethy_acceptance [criterion...]   (default: all of 1..7)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "plethy/plethy.hpp"
#include "support/oracles.hpp"

using namespace plethy;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string nd(int N, int d) { return "N=" + std::to_string(N) + " d=" + std::to_string(d); }

Outcome isomorphism_certificate() {
  Outcome out;
  int cases = 0;
  for (int N = 1; N <= 4; ++N)
    for (int d = 0; d <= 8; ++d) {
      if (N > d + 2) continue;
      ++cases;
      try {
        PhiContext<RationalField> ctx(RationalField{}, N, d);
        const BigInt expected = BigInt(N) * oracle::binomial(d + 2, N + 1);
        if (BigInt(ctx.dim()) != expected || BigInt(ctx.delta().dim()) != expected)
          out.fail(nd(N, d) + ": dimension differs from N*C(d+2,N+1)");
        for (std::size_t c = 0; c < ctx.dim(); ++c)
          if (!ctx.delta().mu().apply(ctx.canonical().column(c)).empty()) out.fail(nd(N, d) + ": column outside ker mu_N");
        if (!ctx.is_lower_unitriangular()) out.fail(nd(N, d) + ": not lower unitriangular");
        if (!inverse_round_trips(ctx, invert_phi(ctx))) out.fail(nd(N, d) + ": inverse does not round-trip");
      } catch (const Error& e) {
        out.fail(nd(N, d) + ": " + e.what());
      }
    }
  if (out.pass) out.detail = std::to_string(cases) + " (N,d) certified";
  return out;
}

Outcome equivariance() {
  Outcome out;
  std::size_t checks = 0;
  auto record = [&](const std::vector<EquivarianceReport>& reps, const std::string& where) {
    for (const auto& r : reps) {
      ++checks;
      if (!r.passed) out.fail(where + " " + r.route + ": " + r.counterexample);
    }
  };
  for (int N = 1; N <= 4; ++N)
    for (int d = 0; d <= 8; ++d) {
      if (N > d + 2) continue;
      PhiContext<RationalField> ctx(RationalField{}, N, d);
      record(verify_lie_equivariance(ctx), nd(N, d));
    }
  for (int N = 1; N <= 3; ++N)
    for (int d = 0; d <= 6; ++d) record(verify_group_equivariance_poly(N, d), nd(N, d));
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (int N = 1; N <= 3; ++N)
      for (int d = 0; d <= 5; ++d) record(verify_group_equivariance_fp(N, d, p), nd(N, d) + " p=" + std::to_string(p));
  if (out.pass) out.detail = std::to_string(checks) + " commutation checks over QQ, ZZ[g], GF(p)";
  return out;
}

Outcome golden_values() {
  Outcome out;
  RationalField qq;

  // six-term expansion of v_(1,(0,2,3,6)) at N=3, d=5
  auto v = v_vector(qq, 3, 5, 1, MultiIndex({0, 2, 3, 6}, 6));
  std::map<std::vector<int>, long> got, want{{{0, 2, 3, 4}, 1}, {{0, 2, 4, 3}, 1}, {{0, 2, 5, 2}, 1},
                                              {{1, 2, 3, 3}, 1}, {{1, 2, 4, 2}, 1}, {{1, 2, 5, 1}, 1}};
  for (const auto& [idx, c] : v.coeffs) got[v.space.label(idx)] = c.get_num().get_si();
  if (got != want) out.fail("v_(1,(0,2,3,6)) expansion differs");

  // weight-9 block at N=2, d=4
  PhiContext<RationalField> ctx(qq, 2, 4);
  const std::vector<std::string> rows{"((0,3),4)", "((0,4),3)", "((1,2),4)", "((1,4),2)", "((1,3),3)", "((2,3),2)"};
  const std::vector<std::string> cols{"(1,(0,3,5))", "(0,(0,4,5))", "(1,(1,2,5))",
                                      "(0,(1,3,5))", "(1,(1,3,4))", "(0,(2,3,4))"};
  const int expected[6][6]{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                           {1, 1, 0, 1, 0, 0}, {1, 0, 1, 1, 1, 0}, {1, 0, 0, 1, 1, 1}};
  std::vector<std::size_t> row_pos, col_idx;
  for (const auto& r : rows)
    for (std::size_t t = 0; t < ctx.delta().dim(); ++t)
      if (ctx.delta().pairs()[t].to_string() == r) row_pos.push_back(t);
  for (const auto& c : cols)
    for (std::size_t t = 0; t < ctx.dim(); ++t)
      if (domain_label(ctx.domain(), t).to_string() == c) col_idx.push_back(t);
  if (row_pos.size() != 6 || col_idx.size() != 6) {
    out.fail("weight-9 block labels not found");
  } else {
    for (std::size_t a = 0; a < 6; ++a) {
      const auto& col = ctx.delta_coords().column(col_idx[a]);
      std::size_t nonzero = 0;
      for (std::size_t r = 0; r < 6; ++r) {
        const BigRational* e = col.find(row_pos[r]);
        if ((e ? *e : BigRational(0)) != expected[r][a]) out.fail("weight-9 block entry differs at column " + cols[a]);
        nonzero += static_cast<std::size_t>(expected[r][a]);
      }
      if (col.size() != nonzero) out.fail("weight-9 column " + cols[a] + " has terms outside the block");
    }
  }

  // neighbour chain of content {0,2,3,5}
  auto c = chain({0, 2, 3, 5}, 5);
  std::vector<std::string> seen;
  for (const auto& p : c) seen.push_back(p.to_string());
  if (!c.empty()) seen.push_back(neighbour(c.back()).to_string());
  const std::vector<std::string> chain_want{"((0,2,3),5)", "((0,2,5),3)", "((0,3,5),2)", "((2,3,5),0)"};
  if (seen != chain_want) out.fail("neighbour chain differs");
  if (!c.empty() && neighbour(c.back()).semistandard()) out.fail("chain end should not be semistandard");

  if (out.pass) out.detail = "six-term expansion, 6x6 block, neighbour chain";
  return out;
}

Outcome duality() {
  Outcome out;
  for (int R = 0; R <= 12; ++R) {
    int want = (R % 4 == 2 || R % 4 == 3) ? -1 : 1;
    if (epsilon(R) != want) out.fail("epsilon(" + std::to_string(R) + ") differs");
  }
  int cases = 0;
  for (int N = 1; N <= 3; ++N)
    for (int d = 0; d <= 5; ++d) {
      ++cases;
      auto r = verify_duality(RationalField{}, N, d);
      if (!r.ok()) {
        std::ostringstream why;
        why << nd(N, d) << ": tau^2 " << r.tau_involution << " tau'^2 " << r.tau_prime_involution << " e tau "
            << r.e_tau_eq_tau_f << " tau' e " << r.tau_prime_e_eq_f_tau_prime << " sign " << r.observed_sign
            << " want " << r.expected_sign;
        out.fail(why.str());
      }
    }
  if (out.pass) out.detail = std::to_string(cases) + " (N,d), epsilon table R<=12";
  return out;
}

Outcome q_identities() {
  Outcome out;
  for (int N = 1; N <= 6; ++N)
    for (int d = 0; d <= 12; ++d) {
      auto r = verify_qchar_identity(N, d);
      if (!r.equal) out.fail(nd(N, d) + ": character identity fails");
      if (!r.qbinomial_shift_equal) out.fail(nd(N, d) + ": q-binomial identity fails");
      if (!r.module_equal) out.fail(nd(N, d) + ": module characters differ");
    }
  for (int N = 1; N <= 4; ++N)
    for (int d = 0; d <= 6; ++d)
      if (!verify_gl2_scalar(N, d).ok()) out.fail(nd(N, d) + ": GL2 scalar exponent differs");
  if (out.pass) out.detail = "N<=6 d<=12 identities, GL2 scalar N<=4 d<=6";
  return out;
}

Outcome combinatorial_oracle() {
  Outcome out;
  RationalField qq;
  for (int N = 1; N <= 4; ++N)
    for (int d = 0; d <= 8; ++d) {
      const BigInt formula = BigInt(N) * oracle::binomial(d + 2, N + 1);
      const BigInt brute(oracle::semistandard_pairs(N, d).size());
      auto mu = mu_matrix(qq, N, d);
      const BigInt kernel(mu.cols() - rank(qq, mu));
      if (brute != formula || kernel != formula)
        out.fail(nd(N, d) + ": brute " + brute.get_str() + " kernel " + kernel.get_str() + " formula " +
                 formula.get_str());
    }
  if (out.pass) out.detail = "36 (N,d) agree";
  return out;
}

Outcome conjecture_regression() {
  Outcome out;
  ScanConfig cfg;
  cfg.M_lo = 1;
  cfg.M_hi = 2;
  cfg.N_lo = 1;
  cfg.N_hi = 3;
  cfg.d_lo = 0;
  cfg.d_hi = 5;
  cfg.primes = {2, 3};
  for (const auto& r : scan(cfg)) {
    std::string where = "M=" + std::to_string(r.M) + " " + nd(r.N, r.d);
    if (r.skipped) out.fail(where + " skipped: " + r.notice);
    if (!r.qchar_equal) out.fail(where + ": q-characters differ");
    for (const auto& f : r.fingerprints)
      if (!f.jordan_equal)
        out.fail(where + " p=" + std::to_string(f.p) + ": " + f.jordan_lhs.to_string() + " vs " +
                 f.jordan_rhs.to_string());
  }
  cfg.M_lo = cfg.M_hi = 3;
  cfg.d_hi = 4;
  auto findings = scan(cfg);
  std::size_t differing = 0;
  for (const auto& r : findings)
    if (!r.all_equal()) ++differing;
  if (findings.size() != 15) out.fail("M=3 scan did not report every tuple");
  if (out.pass)
    out.detail = "M<=2 all equal; M=3 reported " + std::to_string(findings.size()) + " tuples, " +
                 std::to_string(differing) + " with differences";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"isomorphism certificate", isomorphism_certificate},
      {"equivariance, three routes", equivariance},
      {"golden values", golden_values},
      {"duality", duality},
      {"q-identities", q_identities},
      {"combinatorial oracle", combinatorial_oracle},
      {"conjecture regression", conjecture_regression},
  };
  std::vector<int> chosen;
  for (int a = 1; a < argc; ++a) {
    int c = std::atoi(argv[a]);
    if (c < 1 || c > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[a]);
      return 2;
    }
    chosen.push_back(c);
  }
  if (chosen.empty())
    for (int c = 1; c <= static_cast<int>(criteria.size()); ++c) chosen.push_back(c);

  bool all = true;
  for (int c : chosen) {
    const auto& [name, run] = criteria[static_cast<std::size_t>(c - 1)];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c, name.c_str(), o.detail.c_str(), secs);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
