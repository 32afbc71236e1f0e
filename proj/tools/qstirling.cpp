// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "qstirling/qstirling.h"

namespace {

constexpr int kUsageError = 2;

// Invalid requests (bad n/k, unknown names, enumeration past its bound) are
// usage errors; anything else that goes wrong is a plain failure.
int report_error(qs_status status) {
  std::cerr << "qstirling: " << qs_status_message(status);
  const std::string detail = qs_last_error();
  if (!detail.empty()) std::cerr << ": " << detail;
  std::cerr << '\n';
  return status == QS_INVALID_ARGUMENT || status == QS_BOUND_EXCEEDED ? kUsageError : 1;
}

// Prints a library string to stdout and releases it.
void emit(char* text) {
  std::fputs(text, stdout);
  qs_string_free(text);
}

int run_table(int kind, int nmax, const std::string& format, const std::string& method) {
  char* out = nullptr;
  const qs_status s = qs_table(kind, nmax, method.c_str(), format.c_str(), &out);
  if (s != QS_OK) return report_error(s);
  emit(out);
  return 0;
}

int run_eval(int kind, int n, int k, const std::string& method, const std::optional<long>& at_q) {
  qs_poly* p = nullptr;
  qs_status s = qs_stirling(kind, n, k, method.c_str(), &p);
  if (s != QS_OK) return report_error(s);
  char* out = nullptr;
  s = at_q ? qs_poly_eval(p, *at_q, &out) : qs_poly_to_string(p, &out);
  qs_poly_free(p);
  if (s != QS_OK) return report_error(s);
  emit(out);
  std::fputc('\n', stdout);
  return 0;
}

int run_verify(const std::string& suite, int nmax, bool json) {
  qs_report* r = nullptr;
  qs_status s = qs_verify(suite.c_str(), nmax, &r);
  if (s != QS_OK) return report_error(s);
  char* out = nullptr;
  s = json ? qs_report_to_json(r, &out) : qs_report_to_text(r, &out);
  if (s != QS_OK) {
    qs_report_free(r);
    return report_error(s);
  }
  emit(out);
  // stdout stays byte-identical across runs; timing goes to stderr
  std::fprintf(stderr, "wall time: %.3f s\n", qs_report_wall_seconds(r));
  const bool ok = qs_report_failed(r) == 0;
  qs_report_free(r);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-analogs of the Stirling numbers: tables, single values, verification suites"};
  app.require_subcommand(1);

  int kind = 1;
  int nmax = 0;
  int n = 0;
  int k = 0;
  std::string format = "csv";
  std::string method = "closed";
  std::string suite;
  std::optional<long> at_q;
  bool json = false;

  auto* table = app.add_subcommand("table", "print a triangle of q-Stirling numbers");
  table->add_option("--kind", kind, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  table->add_option("--nmax", nmax, "last row")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "csv, json or latex")->check(CLI::IsMember({"csv", "json", "latex"}));
  table->add_option("--method", method, "enum, closed, closed-alt, path or identity")
      ->check(CLI::IsMember({"enum", "closed", "closed-alt", "path", "identity"}));

  auto* eval = app.add_subcommand("eval", "print one q-Stirling number");
  eval->add_option("--kind", kind, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  eval->add_option("-n", n, "n")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("-k", k, "k")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--method", method, "enum, closed, closed-alt, path or identity")
      ->check(CLI::IsMember({"enum", "closed", "closed-alt", "path", "identity"}));
  eval->add_option("--at-q", at_q, "evaluate at this integer q");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "identities, formulas, paths, bijections, hypergeometric, proof-steps or all")
      ->required()
      ->check(CLI::IsMember({"identities", "formulas", "paths", "bijections", "hypergeometric", "proof-steps", "all"}));
  verify->add_option("--nmax", nmax, "largest n")->required()->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (table->parsed()) return run_table(kind, nmax, format, method);
  if (eval->parsed()) return run_eval(kind, n, k, method, at_q);
  return run_verify(suite, nmax, json);
}
