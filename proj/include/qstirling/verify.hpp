#pragma once

// Verification suites: every identity and cross-method agreement the
// library relies on, run over explicit parameter ranges and collected into
// a report instead of thrown.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qstirling {

struct CheckResult {
  std::string id;
  std::string params;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  int nmax = 0;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

enum class Suite { Identities, Formulas, Paths, Bijections, Hypergeometric, ProofSteps, All };

Suite parse_suite(std::string_view name);
const char* to_string(Suite s) noexcept;

/// Runs a named suite up to nmax. Enumeration-backed checks are capped
/// (permutations at 8, set partitions at 10, inverse bijection at 6) so that
/// large nmax stays fast. Throws InvalidArgument for nmax < 0.
VerifyReport run_suite(Suite suite, int nmax);

/// JSON document for the report. Wall time is left out so that the output
/// of identical runs is byte-identical.
std::string report_to_json(const VerifyReport& report);
/// One summary line, followed by one line per failed check.
std::string report_to_text(const VerifyReport& report);

// The check families below append to a report; each range bound is
// inclusive. run_suite and the acceptance tests are built from them.

/// Both cross-kind identities against closed forms and with path-sourced
/// inner values (n <= closed_n), and with enumeration on both sides
/// (n <= enum_n). The identities read rows up to 2(n-k) of the other kind;
/// enumeration covers the cells whose rows stay within s1_rows for the first
/// kind and s2_rows for the second.
void check_identity_theorems(VerifyReport& r, int closed_n, int enum_n, int s1_rows, int s2_rows);
/// The Narayana shadow of the identities.
void check_narayana_identity(VerifyReport& r, int n);
/// Closed, alternative closed, and path coefficients against each other up
/// to closed_n, enumeration up to enum_s1_n / enum_s2_n, and the Schroeder
/// model for the scaled first kind up to schroder_n.
void check_method_agreement(VerifyReport& r, int closed_n, int enum_s1_n, int enum_s2_n, int schroder_n);
/// q = 1 gives the classical triangles, q = 0 the Narayana numbers.
void check_specializations(VerifyReport& r, int n);
/// Set partitions and rook placements (n <= partitions_n), weight
/// preservation of phi (n <= phi_n), and both round trips (n <= roundtrip_n).
void check_bijections(VerifyReport& r, int partitions_n, int phi_n, int roundtrip_n);
/// Difference form against factored form (n <= diff_n); shift identities and
/// four-term relations (n <= rel_n); small auxiliary facts.
void check_coefficient_families(VerifyReport& r, int diff_n, int rel_n);
/// The coefficient sums D, C, Cbar and E and their recurrences, n <= n.
void check_proof_steps(VerifyReport& r, int n);
/// Saalschutz, Gauss and contiguity on fixed parameter grids.
void check_hypergeometric(VerifyReport& r);
/// mu by paths against its closed form (n <= mu_n), the expansion of the
/// scaled first kind over mu (n <= qstsum_n), continued-fraction truncations
/// against the path sums (to fraction_order), and the image of phi
/// against the path sum (n <= phi_image_n).
void check_mu_and_fractions(VerifyReport& r, int mu_n, int qstsum_n, int fraction_order, int phi_image_n);

}  // namespace qstirling
