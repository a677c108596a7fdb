#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nzalex/nzalex.hpp"

namespace nzalex::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kInputError = 2, kStructural = 3 };

int exit_code_for(ErrorKind kind);

// Runs `nz-alex <args...>` in process. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CommonOptions {
  std::string file;
  bool json = false;
  bool order = false;
  std::optional<std::string> meridian;
  std::optional<std::string> alpha;
};

// "g4" or "4" -> 3
int parse_generator(std::string_view text);
// "g2=0,g3=-1,g4=1"
std::map<int, std::int64_t> parse_alpha(std::string_view text);
std::vector<double> parse_doubles(std::string_view text);
std::vector<int> parse_ints(std::string_view text);

std::string fnv1a_hex(std::string_view bytes);
std::string read_file(const std::string& path);

struct Loaded {
  std::string digest;
  Context ctx;
  std::vector<std::string> warnings;
};

// Parses, optionally orders, and builds the shared context. Throws Error.
Loaded load(const CommonOptions& opts);
AlphaMap resolve_alpha(const Loaded& in, const CommonOptions& opts);

int cmd_info(const CommonOptions& opts, std::ostream& out);
int cmd_order(const CommonOptions& opts, std::ostream& out);
int cmd_curves(const CommonOptions& opts, ShapeKind kind, std::ostream& out);
int cmd_nz(const CommonOptions& opts, const std::string& spec, std::ostream& out);
int cmd_alexander(const CommonOptions& opts, bool check_unit, std::ostream& out);

struct TwistedOptions {
  std::optional<std::string> rep_file;
  std::optional<std::string> builtin;
  int trivial_dim = 0;
};
int cmd_twisted(const CommonOptions& opts, const TwistedOptions& topts, std::ostream& out);

struct L2Options {
  std::vector<double> t_grid{0.5, 1.0, 2.0};
  std::vector<int> cyclic{64, 256, 1024};
  std::vector<std::string> quotient_files;
};
int cmd_l2(const CommonOptions& opts, const L2Options& lopts, std::ostream& out);

struct SelftestOptions {
  std::string fixtures;
  bool json = false;
  bool quick = false;  // skips the large-degree estimator checks
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

std::vector<CriterionResult> run_selftest(const SelftestOptions& opts);
int cmd_selftest(const SelftestOptions& opts, std::ostream& out);

}  // namespace nzalex::cli
