#include "nzalex_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nzalex::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotTorusBoundary:
    case ErrorKind::NotOrientable:
    case ErrorKind::NotOrdered:
    case ErrorKind::NotOrderable:
    case ErrorKind::RankDeficient:
    case ErrorKind::NoKernel:
      return kStructural;
    case ErrorKind::InternalDivisionFailure:
    case ErrorKind::InvariantViolation:
      return kCheckFailure;
    default:
      return kInputError;
  }
}

int parse_generator(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == 'g' || digits.front() == 'G')) digits.remove_prefix(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  int value = 0;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::InvalidAlpha, "cannot parse generator '" + std::string(text) + "'");
  for (char c : digits) value = value * 10 + (c - '0');
  if (value < 1) throw Error(ErrorKind::InvalidAlpha, "generators are numbered from 1");
  return value - 1;
}

namespace {
std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}
}  // namespace

std::map<int, std::int64_t> parse_alpha(std::string_view text) {
  std::map<int, std::int64_t> out;
  for (const std::string& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidAlpha, "alpha entries look like g3=-1");
    try {
      out[parse_generator(item.substr(0, eq))] = std::stoll(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidAlpha, "bad alpha value in '" + item + "'");
    }
  }
  return out;
}

std::vector<double> parse_doubles(std::string_view text) {
  std::vector<double> out;
  for (const std::string& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::MalformedInput, "cannot parse number '" + item + "'");
    }
  }
  return out;
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  for (const std::string& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::MalformedInput, "cannot parse integer '" + item + "'");
    }
  }
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load(const CommonOptions& opts) {
  const std::string text = read_file(opts.file);
  Triangulation tri = parse_triangulation(text);
  std::vector<std::string> warnings;
  if (!is_ordered(tri)) {
    if (!opts.order)
      throw Error(ErrorKind::NotOrdered, "input is not ordered; rerun with --order to search for an ordering");
    tri = find_ordering(tri);
    warnings.push_back("input was relabeled to an ordered triangulation");
  }
  return Loaded{fnv1a_hex(text), Context::build(tri), std::move(warnings)};
}

AlphaMap resolve_alpha(const Loaded& in, const CommonOptions& opts) {
  if (opts.alpha) {
    if (opts.meridian) throw Error(ErrorKind::InvalidAlpha, "--alpha and --meridian are exclusive");
    return checked_alpha(in.ctx, parse_alpha(*opts.alpha));
  }
  std::optional<int> meridian;
  if (opts.meridian) meridian = parse_generator(*opts.meridian);
  return compute_alpha(in.ctx, meridian);
}

namespace {

void add_file(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("file", opts.file, "Triangulation file (plain text or JSON)")->required();
  sub->add_flag("--order", opts.order, "Search for an ordering when the input is not ordered");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neumann-Zagier matrices, Alexander polynomials and torsion estimates of ordered triangulations",
               "nz-alex"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions opts;
  app.add_flag("--json", opts.json, "Emit a JSON report");
  auto* meridian_opt = app.add_option("--meridian", opts.meridian, "Generator with alpha = +1, e.g. g2");
  app.add_option("--alpha", opts.alpha, "Explicit homomorphism, e.g. g2=0,g3=-1,g4=1")->excludes(meridian_opt);

  auto* info = app.add_subcommand("info", "Tetrahedra, edge classes and orderedness");
  add_file(info, opts);

  auto* order = app.add_subcommand("order", "Find an ordering and print the relabeled triangulation");
  add_file(order, opts);

  std::string kind_text = "Z";
  auto* curves = app.add_subcommand("curves", "Smoothing curves with their alpha values");
  add_file(curves, opts);
  curves->add_option("--kind", kind_text, "Z, Zp or Zpp")->check(CLI::IsMember({"Z", "Zp", "Zpp"}));

  std::string spec = "alpha";
  auto* nz = app.add_subcommand("nz", "Twisted or alpha-specialized Neumann-Zagier matrices");
  add_file(nz, opts);
  nz->add_option("--spec", spec, "raw or alpha")->check(CLI::IsMember({"raw", "alpha"}));

  bool check_unit = false;
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial from det B");
  add_file(alex, opts);
  alex->add_flag("--check-unit", check_unit, "Also require Delta(1) = +-1");

  TwistedOptions topts;
  auto* tw = app.add_subcommand("twisted", "Twisted Alexander polynomial for a representation");
  add_file(tw, opts);
  auto* rep_opt = tw->add_option("--rep", topts.rep_file, "Representation JSON file");
  auto* builtin_opt = tw->add_option("--builtin", topts.builtin, "Built-in representation")
                          ->check(CLI::IsMember({"fig8-geometric"}));
  auto* trivial_opt = tw->add_option("--trivial", topts.trivial_dim, "Trivial representation of this dimension");
  rep_opt->excludes(builtin_opt)->excludes(trivial_opt);
  builtin_opt->excludes(trivial_opt);

  L2Options lopts;
  std::string t_text = "0.5,1,2";
  std::string cyclic_text = "64,256,1024";
  auto* l2 = app.add_subcommand("l2", "Finite-quotient estimates of the torsion function");
  add_file(l2, opts);
  l2->add_option("--t", t_text, "Comma-separated positive t values");
  l2->add_option("--cyclic", cyclic_text, "Comma-separated cyclic quotient orders");
  l2->add_option("--quotient", lopts.quotient_files, "Permutation quotient JSON file (repeatable)");

  SelftestOptions sopts;
  sopts.fixtures = NZALEX_DEFAULT_FIXTURES;
  auto* self = app.add_subcommand("selftest", "Run the built-in golden checks");
  self->add_option("--fixtures", sopts.fixtures, "Directory holding fig8.tri and k8_2.tri");
  self->add_flag("--quick", sopts.quick, "Skip the large-degree estimator checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*info) return cmd_info(opts, out);
    if (*order) return cmd_order(opts, out);
    if (*curves) return cmd_curves(opts, *parse_shape_kind(kind_text), out);
    if (*nz) return cmd_nz(opts, spec, out);
    if (*alex) return cmd_alexander(opts, check_unit, out);
    if (*tw) {
      if (!topts.rep_file && !topts.builtin && topts.trivial_dim <= 0) topts.trivial_dim = 1;
      return cmd_twisted(opts, topts, out);
    }
    if (*l2) {
      lopts.t_grid = parse_doubles(t_text);
      lopts.cyclic = cyclic_text.empty() ? std::vector<int>{} : parse_ints(cyclic_text);
      return cmd_l2(opts, lopts, out);
    }
    if (*self) {
      sopts.json = opts.json;
      return cmd_selftest(sopts, out);
    }
  } catch (const Error& e) {
    err << "nz-alex: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kInputError;
}

}  // namespace nzalex::cli
