// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Talks to the library only through the C API.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sigmahg/sigmahg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitInvalid = 3;

constexpr const char* kBudgetEnv = "SIGMAHG_BUDGET";

// Thrown for anything the user got wrong; reported with exit status 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a library call fails; carries the call's status.
struct ApiError : std::runtime_error {
  ApiError(sh_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  sh_status status;
};

void ok(sh_status s, const char* what) {
  if (s != SH_OK) {
    throw ApiError(s, std::string(what) + " failed (" + sh_status_name(s) + "): " + sh_last_error());
  }
}

struct Text {
  char* p = nullptr;
  ~Text() { sh_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct InstanceDeleter {
  void operator()(sh_instance* p) const { sh_instance_destroy(p); }
};
struct ColouringDeleter {
  void operator()(sh_colouring* p) const { sh_colouring_destroy(p); }
};
using InstancePtr = std::unique_ptr<sh_instance, InstanceDeleter>;
using ColouringPtr = std::unique_ptr<sh_colouring, ColouringDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::optional<int> n, r, q;
  std::vector<int> sigma;
  std::string file;
  std::string colouring;
  std::string bounds;
  std::optional<int> alpha, beta;
  int k_max = 0;
  std::optional<std::int64_t> budget;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string scheme;
  int k = 0;
  int t = 0;
  bool list = false;
  bool cross_check = false;
  int random = 0;
  int colours = 4;
  std::string direction = "down";
  std::optional<int> target;
  int steps = 1000;
};

void add_instance_flags(CLI::App* cmd, Options& o, bool with_sigma = true) {
  cmd->add_option("--n", o.n, "number of classes");
  cmd->add_option("--r", o.r, "edge size (defaults to the sum of sigma)");
  cmd->add_option("--q", o.q, "class size");
  if (with_sigma) {
    cmd->add_option("--sigma", o.sigma, "partition of r, comma separated")->delimiter(',');
    cmd->add_option("--file", o.file, "instance JSON file");
  }
}

void add_bounds_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--bounds", o.bounds, "nmnr (default) or classical")
      ->check(CLI::IsMember({"nmnr", "classical"}));
  cmd->add_option("--alpha", o.alpha, "least number of colours per edge");
  cmd->add_option("--beta", o.beta, "greatest number of colours per edge");
}

void add_format_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json (default) or text")
      ->check(CLI::IsMember({"json", "text"}));
}

void add_budget_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget,
                  std::string("search nodes per k (default from ") + kBudgetEnv + " or 1e8)");
}

sh_format format_of(const Options& o) { return o.format == "text" ? SH_FORMAT_TEXT : SH_FORMAT_JSON; }

InstancePtr load_instance(const Options& o) {
  const bool from_flags = o.n || o.q || !o.sigma.empty();
  if (from_flags == !o.file.empty()) {
    throw UsageError("give the instance either with --n/--q/--sigma or with --file, not both");
  }
  sh_instance* raw = nullptr;
  if (!o.file.empty()) {
    if (o.r) throw UsageError("--r cannot be combined with --file");
    ok(sh_instance_from_json(read_file(o.file).c_str(), &raw), "reading instance");
  } else {
    if (!o.n || !o.q || o.sigma.empty()) throw UsageError("--n, --q and --sigma are all required");
    int sum = 0;
    for (int p : o.sigma) sum += p;
    const int r = o.r.value_or(sum);
    ok(sh_instance_create(*o.n, r, *o.q, o.sigma.data(), o.sigma.size(), &raw), "creating instance");
  }
  return InstancePtr(raw);
}

ColouringPtr load_colouring(const std::string& path) {
  if (path.empty()) throw UsageError("--colouring is required");
  sh_colouring* raw = nullptr;
  ok(sh_colouring_from_json(read_file(path).c_str(), &raw), "reading colouring");
  return ColouringPtr(raw);
}

std::pair<int, int> resolve_bounds(const Options& o, int r) {
  if (o.alpha || o.beta) {
    if (!o.bounds.empty()) throw UsageError("--bounds cannot be combined with --alpha/--beta");
    if (!o.alpha || !o.beta) throw UsageError("--alpha and --beta must be given together");
    if (*o.alpha < 2) throw UsageError("--alpha must be at least 2");
    if (*o.beta > r) throw UsageError("--beta must not exceed r = " + std::to_string(r));
    if (*o.alpha > *o.beta) throw UsageError("--alpha must not exceed --beta");
    return {*o.alpha, *o.beta};
  }
  if (o.bounds == "classical") return {2, r};
  return {2, r - 1};
}

std::uint64_t resolve_budget(const Options& o) {
  if (o.budget) {
    if (*o.budget <= 0) throw UsageError("--budget must be a positive node count");
    return static_cast<std::uint64_t>(*o.budget);
  }
  if (const char* env = std::getenv(kBudgetEnv)) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
      throw UsageError(std::string(kBudgetEnv) + " must be a positive node count, got '" + env + "'");
    }
    return static_cast<std::uint64_t>(v);
  }
  return 0;  // library default
}

void print(const Text& t) {
  std::string s = t.str();
  std::cout << s;
  if (!s.empty() && s.back() != '\n') std::cout << '\n';
}

int run_spectrum(const Options& o) {
  auto inst = load_instance(o);
  const auto [alpha, beta] = resolve_bounds(o, sh_instance_r(inst.get()));
  const auto budget = resolve_budget(o);
  Text out;
  ok(sh_spectrum(inst.get(), alpha, beta, o.k_max, budget, format_of(o), &out.p), "spectrum");
  print(out);
  return kExitOk;
}

int run_check(const Options& o) {
  auto inst = load_instance(o);
  const auto [alpha, beta] = resolve_bounds(o, sh_instance_r(inst.get()));
  Text out;
  if (o.random > 0) {
    if (!o.colouring.empty()) throw UsageError("--random cannot be combined with --colouring");
    int mismatches = 0;
    ok(sh_random_check(inst.get(), alpha, beta, o.random, o.seed, o.colours, &out.p, &mismatches),
       "random check");
    print(out);
    return mismatches == 0 ? kExitOk : kExitFailure;
  }
  auto col = load_colouring(o.colouring);
  ok(sh_check(inst.get(), col.get(), alpha, beta, o.cross_check ? 1 : 0, format_of(o), &out.p,
              nullptr),
     "check");
  print(out);
  return kExitOk;
}

int run_construct(const Options& o) {
  auto inst = load_instance(o);
  Text out;
  if (o.list) {
    ok(sh_list_constructions(inst.get(), &out.p), "listing constructions");
    print(out);
    return kExitOk;
  }
  if (o.scheme.empty()) throw UsageError("--scheme is required (or --list)");
  ok(sh_construct(inst.get(), o.scheme.c_str(), o.t != 0 ? o.t : o.k, format_of(o), &out.p),
     "construct");
  print(out);
  return kExitOk;
}

int run_walk(const Options& o) {
  auto inst = load_instance(o);
  auto col = load_colouring(o.colouring);
  if (!o.target) throw UsageError("--target is required");
  const auto dir = o.direction == "up" ? SH_WALK_UP : SH_WALK_DOWN;
  Text out;
  ok(sh_walk(inst.get(), col.get(), dir, *o.target, o.steps, &out.p), "walk");
  print(out);
  return kExitOk;
}

int run_verify(const Options& o) {
  auto inst = load_instance(o);
  const auto [alpha, beta] = resolve_bounds(o, sh_instance_r(inst.get()));
  const auto budget = resolve_budget(o);
  Text out;
  int refuted = 0;
  ok(sh_verify(inst.get(), alpha, beta, budget, o.k_max, format_of(o), &out.p, &refuted), "verify");
  print(out);
  return refuted > 0 ? kExitRefuted : kExitOk;
}

int run_sweep(const Options& o) {
  if (!o.n || !o.r || !o.q) throw UsageError("sweep needs --n, --r and --q");
  int alpha = 0;
  int beta = 0;
  if (o.alpha || o.beta || !o.bounds.empty()) std::tie(alpha, beta) = resolve_bounds(o, *o.r);
  const auto budget = resolve_budget(o);
  Text out;
  int refuted = 0;
  ok(sh_sweep(*o.n, *o.r, *o.q, alpha, beta, budget, format_of(o), &out.p, &refuted), "sweep");
  print(out);
  return refuted > 0 ? kExitRefuted : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colourings and chromatic spectra of sigma-hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sh_version()));
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "compute the colour spectrum");
  add_instance_flags(spectrum, o);
  add_bounds_flags(spectrum, o);
  spectrum->add_option("--k-max", o.k_max, "largest k to decide (default nq)");
  add_budget_flag(spectrum, o);
  add_format_flag(spectrum, o);

  auto* check = app.add_subcommand("check", "check a colouring");
  add_instance_flags(check, o);
  add_bounds_flags(check, o);
  check->add_option("--colouring", o.colouring, "colouring JSON file");
  check->add_flag("--explicit", o.cross_check, "also scan every edge and compare");
  check->add_option("--random", o.random, "cross-check this many random colourings instead");
  check->add_option("--colours", o.colours, "palette size for --random");
  check->add_option("--seed", o.seed, "seed for --random");
  add_format_flag(check, o);

  auto* construct = app.add_subcommand("construct", "build a scheme colouring");
  add_instance_flags(construct, o);
  construct->add_option("--scheme", o.scheme,
                        "zone, block, two_zone, small_r4_k3, small_r5_k3, small_r5_k4, "
                        "two_two_low, two_two_high");
  construct->add_option("--k", o.k, "colour count for zone");
  construct->add_option("--t", o.t, "fresh-pair count for two_zone");
  construct->add_flag("--list", o.list, "list applicable schemes");
  add_format_flag(construct, o);

  auto* walk = app.add_subcommand("walk", "re-colouring walk towards a target k");
  add_instance_flags(walk, o);
  walk->add_option("--colouring", o.colouring, "start colouring JSON file");
  walk->add_option("--direction", o.direction, "down or up")->check(CLI::IsMember({"down", "up"}));
  walk->add_option("--target", o.target, "target colour count");
  walk->add_option("--steps", o.steps, "step limit");

  auto* verify = app.add_subcommand("verify", "check theorem claims against computation");
  add_instance_flags(verify, o);
  add_bounds_flags(verify, o);
  verify->add_option("--k-max", o.k_max, "largest k to compute (default: as claims need)");
  add_budget_flag(verify, o);
  add_format_flag(verify, o);

  auto* sweep = app.add_subcommand("sweep", "verify every sigma of r at fixed n, q");
  add_instance_flags(sweep, o, false);
  add_bounds_flags(sweep, o);
  add_budget_flag(sweep, o);
  add_format_flag(sweep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: invalid arguments: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(o);
    if (check->parsed()) return run_check(o);
    if (construct->parsed()) return run_construct(o);
    if (walk->parsed()) return run_walk(o);
    if (verify->parsed()) return run_verify(o);
    if (sweep->parsed()) return run_sweep(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.status == SH_ERR_INTERNAL ? kExitFailure : kExitInvalid;
  }
  return kExitFailure;
}
