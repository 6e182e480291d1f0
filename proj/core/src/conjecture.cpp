#include "plethy/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace plethy {

const char* const kHookConvention =
    "ker(Wedge^N V (x) Sym^(M-1) V -> Wedge^(N+1) V (x) Sym^(M-2) V), V = Sym^d E; "
    "Wedge^N V for M = 1; Jordan type of U_1 only (necessary-condition check)";

std::size_t JordanType::dim() const {
  std::size_t n = 0;
  for (auto p : parts) n += p;
  return n;
}

std::string JordanType::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t t = 0; t < parts.size();) {
    std::size_t run = 1;
    while (t + run < parts.size() && parts[t + run] == parts[t]) ++run;
    os << (t ? "," : "") << parts[t];
    if (run > 1) os << '^' << run;
    t += run;
  }
  os << ']';
  return os.str();
}

namespace {

std::vector<SparseVec<Fp>> echelon_rows(const PrimeField& field, const std::vector<SparseVec<Fp>>& vectors) {
  RowEchelon<PrimeField> ech(field);
  for (const auto& v : vectors) ech.insert(v);
  std::vector<SparseVec<Fp>> out;
  out.reserve(ech.rank());
  for (const auto& [col, row] : ech.pivots()) out.push_back(row);
  return out;
}

}  // namespace

JordanType jordan_type(const PrimeField& field, const LinearMap<Fp>& u, const std::vector<SparseVec<Fp>>& basis) {
  const LinearMap<Fp> nil = u - LinearMap<Fp>::identity(u.rows(), field.one());
  std::vector<std::size_t> ranks;
  std::vector<SparseVec<Fp>> current = echelon_rows(field, basis);
  ranks.push_back(current.size());
  while (ranks.back() > 0) {
    std::vector<SparseVec<Fp>> images;
    images.reserve(current.size());
    for (const auto& v : current) images.push_back(nil.apply(v));
    current = echelon_rows(field, images);
    if (current.size() == ranks.back()) throw ConsistencyError("operator is not unipotent on the subspace");
    ranks.push_back(current.size());
  }
  // ranks[m] = rank of (u-1)^m; blocks of size exactly m = (r_{m-1} - r_m) - (r_m - r_{m+1})
  JordanType out;
  for (std::size_t m = ranks.size() - 1; m >= 1; --m) {
    std::size_t at_least = ranks[m - 1] - ranks[m];
    std::size_t longer = m + 1 < ranks.size() ? ranks[m] - ranks[m + 1] : 0;
    out.parts.insert(out.parts.end(), at_least - longer, m);
  }
  return out;
}

JordanType jordan_type(const PrimeField& field, const LinearMap<Fp>& u) {
  std::vector<SparseVec<Fp>> basis;
  basis.reserve(u.cols());
  for (std::size_t c = 0; c < u.cols(); ++c) basis.push_back(SparseVec<Fp>::unit(c, field.one()));
  return jordan_type(field, u, basis);
}

Space hook_domain_space(int M, int N, int d) {
  if (M < 1 || N < 1 || d < 0) throw InvalidArgument("hook spaces need M, N >= 1 and d >= 0");
  if (M == 1) return Space({Factor::wedge(N, d)});
  return Space({Factor::wedge(N, d), Factor::sym_power(M - 1, d)});
}

Space hook_codomain_space(int M, int N, int d) {
  if (M < 2 || N < 1 || d < 0) throw InvalidArgument("hook map needs M >= 2, N >= 1 and d >= 0");
  return Space({Factor::wedge(N + 1, d), Factor::sym_power(M - 2, d)});
}

Space conjecture_lhs_space(int M, int N, int d) {
  if (M < 1 || N < 1 || d < 0) throw InvalidArgument("conjecture spaces need M, N >= 1 and d >= 0");
  return Space({Factor::wedge(M - 1, M + N - 3), Factor::wedge(M + N - 1, M + d - 1)});
}

QCharComparison conjecture_qchar(int M, int N, int d) {
  QCharComparison out;
  out.lhs = qchar(conjecture_lhs_space(M, N, d));
  out.rhs = schur_hook_principal(M, N, d);
  if (out.lhs.zero() || out.rhs.zero()) {
    out.equal = out.lhs.zero() && out.rhs.zero();
    return out;
  }
  out.shift = out.lhs.low_degree() - out.rhs.low_degree();
  if (out.shift >= 0) {
    out.rhs = out.rhs.shifted(out.shift);
  } else {
    out.lhs = out.lhs.shifted(-out.shift);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

bool ConjectureReport::all_equal() const {
  if (skipped || !qchar_equal) return false;
  return std::all_of(fingerprints.begin(), fingerprints.end(), [](const auto& f) { return f.jordan_equal; });
}

std::size_t default_dim_cap() {
  if (const char* env = std::getenv("PLETHY_DIM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5000;
}

namespace {

std::size_t poly_value_at_one(const QPoly& p) {
  BigInt total = 0;
  for (const auto& c : p.coefficients()) total += c;
  return total.get_ui();
}

}  // namespace

ConjectureReport scan_tuple(int M, int N, int d, const std::vector<std::uint32_t>& primes, std::size_t dim_cap) {
  ConjectureReport r;
  r.M = M;
  r.N = N;
  r.d = d;
  r.convention = kHookConvention;

  const Space lhs = conjecture_lhs_space(M, N, d);
  const Space dom = hook_domain_space(M, N, d);
  std::size_t largest = std::max(lhs.dim(), dom.dim());
  if (M >= 2) largest = std::max(largest, hook_codomain_space(M, N, d).dim());
  if (largest > dim_cap) {
    r.skipped = true;
    r.notice = "dimension " + std::to_string(largest) + " exceeds cap " + std::to_string(dim_cap);
    return r;
  }

  r.qchar = conjecture_qchar(M, N, d);
  r.qchar_equal = r.qchar.equal;
  r.expected_dim = poly_value_at_one(schur_hook_principal(M, N, d));
  if (r.qchar_equal && lhs.dim() != r.expected_dim)
    throw ConsistencyError("equal characters but different dimensions");

  r.rational_dim = hook_schur_space(RationalField{}, M, N, d).basis.size();
  r.convention_valid = r.rational_dim == r.expected_dim;

  for (std::uint32_t p : primes) {
    PrimeField field(p);
    const auto u = unipotent_upper(field, field.one());
    PrimeFingerprint fp;
    fp.p = p;
    fp.dim_lhs = lhs.dim();
    fp.jordan_lhs = jordan_type(field, group_action_matrix(field, lhs, u));
    auto hook = hook_schur_space(field, M, N, d);
    fp.dim_rhs = hook.basis.size();
    fp.jordan_rhs = jordan_type(field, group_action_matrix(field, hook.ambient, u), hook.basis);
    fp.jordan_equal = fp.jordan_lhs == fp.jordan_rhs;
    r.fingerprints.push_back(std::move(fp));
  }
  return r;
}

std::vector<ConjectureReport> scan(const ScanConfig& config) {
  if (config.M_lo > config.M_hi || config.N_lo > config.N_hi || config.d_lo > config.d_hi)
    throw InvalidArgument("empty scan range");
  for (auto p : config.primes) PrimeField{p};

  struct Job {
    int M, N, d;
  };
  std::vector<Job> jobs;
  for (int M = config.M_lo; M <= config.M_hi; ++M)
    for (int N = config.N_lo; N <= config.N_hi; ++N)
      for (int d = config.d_lo; d <= config.d_hi; ++d) jobs.push_back({M, N, d});

  std::vector<ConjectureReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      try {
        out[k] = scan_tuple(jobs[k].M, jobs[k].N, jobs[k].d, config.primes, config.dim_cap);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(config.workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string scan_to_csv(const std::vector<ConjectureReport>& reports) {
  std::ostringstream os;
  os << "M,N,d,p,dim_lhs,dim_rhs,qchar_equal,jordan_lhs,jordan_rhs,jordan_equal,convention\n";
  for (const auto& r : reports) {
    if (r.skipped) {
      os << r.M << ',' << r.N << ',' << r.d << ",,,,,,,," << csv_quote("skipped: " + r.notice) << '\n';
      continue;
    }
    for (const auto& f : r.fingerprints) {
      os << r.M << ',' << r.N << ',' << r.d << ',' << f.p << ',' << f.dim_lhs << ',' << f.dim_rhs << ','
         << flag(r.qchar_equal) << ',' << csv_quote(f.jordan_lhs.to_string()) << ','
         << csv_quote(f.jordan_rhs.to_string()) << ',' << flag(f.jordan_equal) << ',' << csv_quote(r.convention)
         << '\n';
    }
  }
  return os.str();
}

std::string scan_to_json(const std::vector<ConjectureReport>& reports) {
  using nlohmann::json;
  json rows = json::array();
  json tuples = json::array();
  std::size_t unequal = 0;
  for (const auto& r : reports) {
    json t{{"M", r.M}, {"N", r.N}, {"d", r.d}, {"skipped", r.skipped}};
    if (r.skipped) {
      t["notice"] = r.notice;
      tuples.push_back(std::move(t));
      continue;
    }
    if (!r.all_equal()) ++unequal;
    t["qchar_equal"] = r.qchar_equal;
    t["qchar_lhs"] = r.qchar.lhs.to_string();
    t["qchar_rhs"] = r.qchar.rhs.to_string();
    t["qchar_shift"] = r.qchar.shift;
    t["expected_dim"] = r.expected_dim;
    t["rational_dim"] = r.rational_dim;
    t["convention_valid"] = r.convention_valid;
    t["all_equal"] = r.all_equal();
    tuples.push_back(std::move(t));
    for (const auto& f : r.fingerprints) {
      rows.push_back(json{{"M", r.M},
                          {"N", r.N},
                          {"d", r.d},
                          {"p", f.p},
                          {"dim_lhs", f.dim_lhs},
                          {"dim_rhs", f.dim_rhs},
                          {"qchar_equal", r.qchar_equal},
                          {"jordan_lhs", f.jordan_lhs.parts},
                          {"jordan_rhs", f.jordan_rhs.parts},
                          {"jordan_equal", f.jordan_equal},
                          {"convention", r.convention}});
    }
  }
  json doc{{"check", "necessary-condition check"},
           {"convention", kHookConvention},
           {"tuples_with_differences", unequal},
           {"tuples", std::move(tuples)},
           {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

}  // namespace plethy
