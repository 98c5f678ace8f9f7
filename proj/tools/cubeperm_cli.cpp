// cubeperm command-line front end. Talks to the library only through the C
// interface in cubeperm/cubeperm.h.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "cubeperm/cubeperm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailure = 2;

int fail(cp_status st) {
  std::cerr << "error: " << cp_status_string(st) << ": " << cp_last_error() << '\n';
  return kExitUsage;
}

template <typename Handle, typename RenderFn>
std::optional<std::string> render(const Handle* h, cp_format format, RenderFn fn, cp_status& st) {
  size_t needed = 0;
  st = fn(h, format, nullptr, 0, &needed);
  if (st != CP_OK) return std::nullopt;
  std::string out(needed + 1, '\0');
  st = fn(h, format, out.data(), out.size(), &needed);
  if (st != CP_OK) return std::nullopt;
  out.resize(needed);
  return out;
}

const std::map<std::string, cp_format> kFormats{
    {"text", CP_FORMAT_TEXT}, {"csv", CP_FORMAT_CSV}, {"json", CP_FORMAT_JSON}};
const std::map<std::string, cp_scope> kScopes{
    {"lemmas", CP_SCOPE_LEMMAS}, {"theorem", CP_SCOPE_THEOREM}, {"all", CP_SCOPE_ALL}};

int run_report(int64_t p, int64_t g, cp_format format) {
  cp_report* report = nullptr;
  cp_status st = cp_report_create(p, g, &report);
  if (st != CP_OK) return fail(st);
  const auto text = render(report, format, cp_report_render, st);
  cp_report_destroy(report);
  if (!text) return fail(st);
  std::cout << *text;
  return kExitOk;
}

int run_verify(cp_scope scope, int64_t max_p, cp_format format, unsigned jobs, bool uncapped,
               const std::string& out_path) {
  // The smallest prime = 1 (mod 3) is 7; below that the summary is empty.
  const int64_t p_max = max_p < 7 ? 4 : max_p;
  const cp_verify_options opts{scope, 5, p_max, jobs, uncapped ? 1 : 0};
  cp_summary* summary = nullptr;
  cp_status st = cp_verify_run(&opts, &summary);
  if (st != CP_OK) return fail(st);
  const auto text = render(summary, format, cp_summary_render, st);
  int64_t failures = 0;
  cp_summary_check_failures(summary, &failures);
  cp_summary_destroy(summary);
  if (!text) return fail(st);
  if (out_path.empty()) {
    std::cout << *text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
    out << *text;
  }
  if (failures != 0) {
    std::cerr << failures << " check failure(s)\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

int run_sign(int64_t p, int64_t g) {
  int sign = 0;
  const cp_status st = cp_cube_permutation_sign(p, g, &sign);
  if (st != CP_OK) return fail(st);
  std::cout << (sign > 0 ? "+1" : "-1") << '\n';
  return kExitOk;
}

int run_classnum(int64_t p) {
  int64_t h = 0, oracle = 0;
  const cp_status st = cp_class_number(p, &h, &oracle);
  if (st != CP_OK) return fail(st);
  if (h != oracle) {
    std::cerr << "error: counting formula gives " << h << " but reduced forms give " << oracle << '\n';
    return kExitCheckFailure;
  }
  std::cout << h << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic residues, the cube permutation s_p(g) and its sign"};
  app.require_subcommand(1);

  int64_t p = 0, g = 0;
  std::string format_name = "text";

  auto* report = app.add_subcommand("report", "context and sign audit for one prime p = 1 (mod 3)");
  report->add_option("p", p, "prime")->required();
  report->add_option("--g", g, "primitive root (default: smallest)");
  report->add_option("--format", format_name, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));

  std::string scope_name = "all";
  int64_t max_p = 1000;
  unsigned jobs = 1;
  bool uncapped = false;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "audit identities and the sign theorem over a range of primes");
  verify->add_option("--scope", scope_name, "lemmas | theorem | all")
      ->check(CLI::IsMember({"lemmas", "theorem", "all"}));
  verify->add_option("--max-p", max_p, "largest prime to audit");
  verify->add_option("--format", format_name, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "write the report to FILE instead of stdout");
  verify->add_flag("--uncapped", uncapped, "run every suite up to --max-p, ignoring per-suite default bounds");

  auto* sign = app.add_subcommand("sign", "print the sign of s_p(g)");
  sign->add_option("p", p, "prime")->required();
  sign->add_option("g", g, "primitive root")->required();

  auto* classnum = app.add_subcommand("classnum", "class number h(-p) for p = 3 (mod 4)");
  classnum->add_option("p", p, "prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const cp_format format = kFormats.at(format_name);
  if (*report) {
    if (report->count("--g") > 0 && g <= 0) {
      std::cerr << "error: --g must be positive\n";
      return kExitUsage;
    }
    return run_report(p, g, format);
  }
  if (*verify) return run_verify(kScopes.at(scope_name), max_p, format, jobs, uncapped, out_path);
  if (*sign) {
    if (g <= 0) {
      std::cerr << "error: g must be positive\n";
      return kExitUsage;
    }
    return run_sign(p, g);
  }
  return run_classnum(p);
}
