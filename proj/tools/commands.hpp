#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace plethy::cli {

enum ExitCode : int { kPass = 0, kMathFailure = 1, kUsageError = 2 };

/// Inclusive integer range, written "a" or "a..b" on the command line.
struct Range {
  int lo = 0;
  int hi = 0;
};

/// Throws std::invalid_argument on malformed or empty ranges.
Range parse_range(const std::string& text);

enum class RingChoice { Rational, PrimeField, PolyGamma };

struct RunConfig {
  std::string command;
  Range N{1, 4};
  Range d{0, 8};
  Range M{1, 2};
  std::vector<std::uint32_t> primes;
  std::optional<RingChoice> ring;
  std::string format = "json";
  std::string out;
  unsigned workers = 1;
  std::size_t dim_cap = 0;
  bool timings = false;
};

/// Plain-text rendering of a weight block of phi in F_Delta coordinates, and its SHA-256.
struct BlockDigest {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> entries;
  std::string text;
  std::string sha256;
};

/// Rows are the F_Delta pairs of content sum w - N, columns the domain labels with s + |k| = w,
/// both in triangular order.
BlockDigest weight_block(int N, int d, int w);

std::string sha256_hex(const std::string& bytes);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_qchar(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses args (without the program name) and dispatches; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plethy::cli
