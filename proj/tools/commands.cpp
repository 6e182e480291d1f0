#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "plethy/plethy.hpp"

namespace plethy::cli {

namespace {

using Json = nlohmann::ordered_json;

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string nd(int N, int d) { return "N=" + std::to_string(N) + " d=" + std::to_string(d); }

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct CaseResult {
  int N = 0;
  int d = 0;
  std::size_t dim_domain = 0;
  std::size_t dim_codomain = 0;
  std::vector<CheckResult> checks;
};

/// Runs f and records its outcome; Error exceptions become failures.
template <class F>
void run_check(std::vector<CheckResult>& checks, std::string name, F f) {
  CheckResult r;
  r.name = std::move(name);
  Stopwatch sw;
  try {
    r.detail = f(r.passed);
  } catch (const Error& e) {
    r.passed = false;
    r.detail = e.what();
  }
  r.seconds = sw.seconds();
  checks.push_back(std::move(r));
}

void add_equivariance(std::vector<CheckResult>& checks, const std::string& prefix, std::vector<EquivarianceReport> reps,
                      double seconds) {
  for (auto& rep : reps) {
    CheckResult r;
    r.name = prefix + rep.route;
    r.passed = rep.passed;
    r.detail = rep.passed ? std::to_string(rep.columns_checked) + " columns" : rep.counterexample;
    r.seconds = seconds / static_cast<double>(reps.size());
    checks.push_back(std::move(r));
  }
}

template <class Ring>
void certify(const Ring& ring, const std::string& ring_name, int N, int d, CaseResult& cr) {
  std::optional<PhiContext<Ring>> ctx;
  run_check(cr.checks, ring_name + " kernel, dimensions, pairing", [&](bool& ok) {
    ctx.emplace(ring, N, d);
    cr.dim_domain = ctx->dim();
    cr.dim_codomain = ctx->delta().dim();
    ok = BigInt(ctx->dim()) == count_ssyt_hook(N, d);
    return "dims " + std::to_string(cr.dim_domain) + "/" + std::to_string(cr.dim_codomain);
  });
  if (!ctx) return;
  run_check(cr.checks, ring_name + " lower unitriangular", [&](bool& ok) {
    ok = ctx->is_lower_unitriangular();
    return std::string(ok ? "unit diagonal" : "diagonal entry is not 1");
  });
  run_check(cr.checks, ring_name + " inverse round-trip", [&](bool& ok) {
    ok = inverse_round_trips(*ctx, invert_phi(*ctx));
    return std::string(ok ? "exact" : "inverse does not round-trip");
  });
  if constexpr (std::is_same_v<Ring, RationalField>) {
    Stopwatch sw;
    auto reps = verify_lie_equivariance(*ctx);
    add_equivariance(cr.checks, "QQ ", std::move(reps), sw.seconds());
  }
}

CaseResult verify_case(const RunConfig& cfg, int N, int d) {
  CaseResult cr{N, d, 0, 0, {}};
  const bool all = !cfg.ring.has_value();
  if (all || cfg.ring == RingChoice::Rational) certify(RationalField{}, "QQ", N, d, cr);
  if (cfg.ring == RingChoice::PolyGamma) certify(IntegerRing{}, "ZZ", N, d, cr);
  if (cfg.ring == RingChoice::PrimeField)
    for (auto p : cfg.primes) certify(PrimeField(p), "GF(" + std::to_string(p) + ")", N, d, cr);

  if (all || cfg.ring == RingChoice::PolyGamma) {
    Stopwatch sw;
    auto reps = verify_group_equivariance_poly(N, d);
    add_equivariance(cr.checks, "", std::move(reps), sw.seconds());
  }
  if (all || cfg.ring == RingChoice::PrimeField)
    for (auto p : cfg.primes) {
      Stopwatch sw;
      auto reps = verify_group_equivariance_fp(N, d, p);
      add_equivariance(cr.checks, "", std::move(reps), sw.seconds());
    }
  if (all) {
    run_check(cr.checks, "duality", [&](bool& ok) {
      auto r = verify_duality(RationalField{}, N, d);
      ok = r.ok();
      return "sign " + std::to_string(r.observed_sign) + ", expected " + std::to_string(r.expected_sign);
    });
    run_check(cr.checks, "GL2 scalar", [&](bool& ok) {
      auto r = verify_gl2_scalar(N, d);
      ok = r.ok();
      return "exponent " + std::to_string(r.domain_exponent) + "/" + std::to_string(r.codomain_exponent);
    });
  }
  return cr;
}

/// Writes text to cfg.out if set, else to out.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + cfg.out + " for writing");
  f << text;
}

Json block_json(const BlockDigest& b) {
  return Json{{"rows", b.rows}, {"cols", b.cols}, {"entries", b.entries}, {"sha256", b.sha256}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
}

template <class Ring>
std::vector<std::pair<std::string, LabelledMatrix>> dump_matrices(const Ring& ring, const std::string& ring_name, int N,
                                                                  int d) {
  PhiContext<Ring> ctx(ring, N, d);
  std::vector<std::string> pairs;
  for (const auto& p : ctx.delta().pairs()) pairs.push_back(p.to_string());
  std::vector<std::string> witnesses;
  for (auto idx : ctx.column_order()) witnesses.push_back(domain_label(ctx.domain(), idx).to_string());
  const auto ambient = pair_labels(ctx.ambient());
  LinearMap<typename Ring::value_type> basis(ctx.ambient().dim(), ctx.delta().f_delta());
  return {
      {"phi", labelled("phi", ring_name, ctx.canonical(), ambient, domain_labels(ctx.domain()))},
      {"phi_delta", labelled("phi_delta", ring_name, ctx.triangular(), pairs, witnesses)},
      {"delta_basis", labelled("delta_basis", ring_name, basis, ambient, pairs)},
  };
}

}  // namespace

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots));
    r.hi = parse_int(std::string_view(text).substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int t = 0; t < len; ++t) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[t]);
  return os.str();
}

BlockDigest weight_block(int N, int d, int w) {
  PhiContext<RationalField> ctx(RationalField{}, N, d);
  BlockDigest b;
  std::vector<std::size_t> rows, cols;
  for (std::size_t m = 0; m < ctx.delta().dim(); ++m) {
    const auto& p = ctx.delta().pairs()[m];
    if (p.i().sum() + p.j() != w - N) continue;
    rows.push_back(m);
    b.rows.push_back(p.to_string());
  }
  // column m of the triangular matrix is paired with row m, so its weight matches that row's
  for (std::size_t m : rows) {
    cols.push_back(m);
    b.cols.push_back(domain_label(ctx.domain(), ctx.column_order()[m]).to_string());
  }
  std::ostringstream text;
  text << "rows=";
  for (std::size_t t = 0; t < b.rows.size(); ++t) text << (t ? ";" : "") << b.rows[t];
  text << "\ncols=";
  for (std::size_t t = 0; t < b.cols.size(); ++t) text << (t ? ";" : "") << b.cols[t];
  text << "\n";
  for (std::size_t r : rows) {
    std::vector<std::string> line;
    for (std::size_t c : cols) {
      const BigRational* e = ctx.triangular().column(c).find(r);
      line.push_back(e ? to_string(*e) : "0");
    }
    for (std::size_t t = 0; t < line.size(); ++t) text << (t ? " " : "") << line[t];
    text << "\n";
    b.entries.push_back(std::move(line));
  }
  b.text = text.str();
  b.sha256 = sha256_hex(b.text);
  return b;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Stopwatch total;
  std::vector<CaseResult> cases;
  std::optional<BlockDigest> block;
  for (int N = cfg.N.lo; N <= cfg.N.hi; ++N)
    for (int d = cfg.d.lo; d <= cfg.d.hi; ++d) {
      cases.push_back(verify_case(cfg, N, d));
      if (N == 2 && d == 4) block = weight_block(2, 4, 9);
    }

  const CheckResult* first_failure = nullptr;
  const CaseResult* failing_case = nullptr;
  std::size_t n_checks = 0;
  for (const auto& c : cases)
    for (const auto& ch : c.checks) {
      ++n_checks;
      if (!ch.passed && !first_failure) {
        first_failure = &ch;
        failing_case = &c;
      }
    }

  std::string text;
  if (cfg.format == "csv") {
    text = "N,d,check,passed,detail" + std::string(cfg.timings ? ",seconds" : "") + "\n";
    for (const auto& c : cases)
      for (const auto& ch : c.checks) {
        text += std::to_string(c.N) + "," + std::to_string(c.d) + "," + csv_field(ch.name) + "," +
                (ch.passed ? "true" : "false") + "," + csv_field(ch.detail);
        if (cfg.timings) text += "," + std::to_string(ch.seconds);
        text += "\n";
      }
  } else {
    Json report{{"command", "verify"}, {"passed", first_failure == nullptr}, {"cases", Json::array()}};
    for (const auto& c : cases) {
      Json jc{{"N", c.N}, {"d", c.d}, {"dim_domain", c.dim_domain}, {"dim_codomain", c.dim_codomain},
              {"checks", Json::array()}};
      for (const auto& ch : c.checks) {
        Json j{{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}};
        if (cfg.timings) j["seconds"] = ch.seconds;
        jc["checks"].push_back(std::move(j));
      }
      report["cases"].push_back(std::move(jc));
    }
    if (block) report["weight9_block_N2_d4"] = block_json(*block);
    text = report.dump(1) + "\n";
  }
  emit(cfg, text, out);

  err << "verify: " << cases.size() << " cases, " << n_checks << " checks, " << std::fixed << std::setprecision(2)
      << total.seconds() << "s\n";
  if (first_failure) {
    err << "FAIL " << nd(failing_case->N, failing_case->d) << ": " << first_failure->name << ": "
        << first_failure->detail << "\n";
    return kMathFailure;
  }
  return kPass;
}

int cmd_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.N.lo != cfg.N.hi || cfg.d.lo != cfg.d.hi) {
    err << "dump: --N and --d must be single values\n";
    return kUsageError;
  }
  const int N = cfg.N.lo, d = cfg.d.lo;
  std::vector<std::pair<std::string, LabelledMatrix>> mats;
  const RingChoice ring = cfg.ring.value_or(RingChoice::Rational);
  if (ring == RingChoice::Rational) mats = dump_matrices(RationalField{}, "QQ", N, d);
  else if (ring == RingChoice::PolyGamma) mats = dump_matrices(IntegerRing{}, "ZZ", N, d);
  else mats = dump_matrices(PrimeField(cfg.primes.front()), "GF(" + std::to_string(cfg.primes.front()) + ")", N, d);

  const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::filesystem::create_directories(dir);
  const std::string suffix = "_N" + std::to_string(N) + "_d" + std::to_string(d) + "." + cfg.format;
  for (const auto& [stem, m] : mats) {
    auto path = dir / (stem + suffix);
    write_file(path, cfg.format == "csv" ? to_csv(m) : to_json(m) + "\n");
    out << path.string() << "\n";
  }
  return kPass;
}

int cmd_qchar(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<QIdentityReport> reports;
  bool all = true;
  for (int N = cfg.N.lo; N <= cfg.N.hi; ++N)
    for (int d = cfg.d.lo; d <= cfg.d.hi; ++d) {
      reports.push_back(verify_qchar_identity(N, d));
      if (!reports.back().ok()) {
        if (all) err << "FAIL " << nd(N, d) << ": q-character identity\n";
        all = false;
      }
    }
  std::string text;
  if (cfg.format == "csv") {
    text = "N,d,equal,qbinomial_shift_equal,module_equal,lhs,rhs\n";
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    for (const auto& r : reports)
      text += std::to_string(r.N) + "," + std::to_string(r.d) + "," + b(r.equal) + "," + b(r.qbinomial_shift_equal) +
              "," + b(r.module_equal) + "," + csv_field(to_string(r.lhs)) + "," + csv_field(to_string(r.rhs)) + "\n";
  } else {
    Json report{{"command", "qchar"}, {"passed", all}, {"cases", Json::array()}};
    for (const auto& r : reports)
      report["cases"].push_back(Json{{"N", r.N},
                                     {"d", r.d},
                                     {"equal", r.equal},
                                     {"qbinomial_shift_equal", r.qbinomial_shift_equal},
                                     {"module_equal", r.module_equal},
                                     {"lhs", to_string(r.lhs)},
                                     {"rhs", to_string(r.rhs)}});
    text = report.dump(1) + "\n";
  }
  emit(cfg, text, out);
  return all ? kPass : kMathFailure;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ScanConfig sc;
  sc.M_lo = cfg.M.lo;
  sc.M_hi = cfg.M.hi;
  sc.N_lo = cfg.N.lo;
  sc.N_hi = cfg.N.hi;
  sc.d_lo = cfg.d.lo;
  sc.d_hi = cfg.d.hi;
  sc.primes = cfg.primes;
  sc.workers = cfg.workers;
  sc.dim_cap = cfg.dim_cap ? cfg.dim_cap : default_dim_cap();
  Stopwatch sw;
  auto reports = scan(sc);
  emit(cfg, cfg.format == "csv" ? scan_to_csv(reports) : scan_to_json(reports), out);
  std::size_t differing = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.skipped) ++skipped;
    else if (!r.all_equal()) ++differing;
  }
  err << "scan: " << reports.size() << " tuples, " << differing << " with differences, " << skipped << " skipped, "
      << std::fixed << std::setprecision(2) << sw.seconds() << "s\n";
  return kPass;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of the SL2 map phi: Sym^{N-1}E (x) Wedge^{N+1}Sym^{d+1}E -> Delta^{(2,1^{N-1})}Sym^d E", "plethy"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string N_text, d_text, M_text, ring_text;
  std::vector<std::uint32_t> primes;
  auto add_common = [&](CLI::App* sub, bool ranges) {
    sub->add_option("--N", N_text, ranges ? "N or N1..N2" : "N");
    sub->add_option("--d", d_text, ranges ? "d or d1..d2" : "d");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "Output path");
  };
  auto* verify = app.add_subcommand("verify", "Certify phi: kernel, dimensions, unitriangularity, equivariance");
  add_common(verify, true);
  verify->add_option("--ring", ring_text, "Restrict to one coefficient ring")->check(CLI::IsMember({"rat", "fp", "polygamma"}));
  verify->add_option("--p", primes, "Primes for GF(p) checks")->delimiter(',');
  verify->add_flag("--timings", cfg.timings, "Include per-check timings in the report");

  auto* dump = app.add_subcommand("dump", "Write phi, its F_Delta form and the F_Delta basis");
  add_common(dump, false);
  dump->add_option("--ring", ring_text, "Coefficient ring")->check(CLI::IsMember({"rat", "fp", "polygamma"}));
  dump->add_option("--p", primes, "Prime for --ring fp")->delimiter(',');

  auto* qchar = app.add_subcommand("qchar", "Check the q-character identities");
  add_common(qchar, true);

  auto* scan_cmd = app.add_subcommand("scan", "Compare both sides of the hook generalisation");
  add_common(scan_cmd, true);
  scan_cmd->add_option("--M", M_text, "M or M1..M2");
  scan_cmd->add_option("--p", primes, "Primes")->delimiter(',');
  scan_cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  scan_cmd->add_option("--dim-cap", cfg.dim_cap, "Largest space dimension to build")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "qchar") {
      cfg.N = {1, 6};
      cfg.d = {0, 12};
    } else if (cfg.command == "scan") {
      cfg.N = {1, 3};
      cfg.d = {0, 5};
    } else if (cfg.command == "dump") {
      cfg.N = {2, 2};
      cfg.d = {4, 4};
    }
    if (!N_text.empty()) cfg.N = parse_range(N_text);
    if (!d_text.empty()) cfg.d = parse_range(d_text);
    if (!M_text.empty()) cfg.M = parse_range(M_text);
    if (cfg.N.lo < 1) throw std::invalid_argument("N must be at least 1");
    if (cfg.d.lo < 0) throw std::invalid_argument("d must be at least 0");
    if (cfg.M.lo < 1) throw std::invalid_argument("M must be at least 1");
    if (ring_text == "rat") cfg.ring = RingChoice::Rational;
    else if (ring_text == "fp") cfg.ring = RingChoice::PrimeField;
    else if (ring_text == "polygamma") cfg.ring = RingChoice::PolyGamma;
    if (primes.empty()) {
      if (cfg.command == "verify") primes = {2, 3, 5, 7};
      else primes = {2, 3};
    }
    for (auto p : primes)
      if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    cfg.primes = primes;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "dump") return cmd_dump(cfg, out, err);
    if (cfg.command == "qchar") return cmd_qchar(cfg, out, err);
    return cmd_scan(cfg, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UnsupportedRing& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConsistencyError& e) {
    err << "FAIL: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace plethy::cli
