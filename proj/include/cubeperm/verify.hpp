#pragma once

// Per-prime context assembly, the closed-form sign of the cube permutation,
// and audits over single primes and ranges.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeperm/binform.hpp"
#include "cubeperm/counts.hpp"
#include "cubeperm/eisenstein.hpp"

namespace cubeperm {

/// Everything attached to one prime p = 1 (mod 3) and one primitive root g.
/// All fields except g depend only on g^n, i.e. on the w-class of g.
struct PrimeContext {
  i64 p = 0;
  i64 n = 0;
  i64 g = 0;
  EisensteinInt pi;  // primary, (g / pi)_3 = w
  i64 w = 0;         // omega_image(pi)
  FormRepresentation rep;
  CountsRecord counts;
  std::optional<i64> h;  // h(-p), only for p = 3 (mod 4)

  /// Same context up to the choice of g.
  bool same_class_data(const PrimeContext& other) const;
};

/// Throws NotPrime, WrongResidueClass, NotPrimitiveRoot. g defaults to the
/// smallest primitive root. Asserts (g/pi)_3 = w, (r, s) = (2a - b, b) and
/// the difference-count identity at k = g.
PrimeContext build_context(i64 p, std::optional<i64> g = std::nullopt);

/// Exact rational num / den with den > 0, kept in lowest terms.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  static Rational of(i64 num, i64 den);
  bool is_integer() const noexcept { return den == 1; }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct FormulaValue {
  Rational exponent;
  std::optional<int> sign;  // empty when the exponent is not an integer
};

/// delta + (1+alpha)(1+r) + (h+1-2alpha)(2-r+3s)/4 + s(1+gamma) + (n-2)/4,
/// summed exactly. Requires p = 7 (mod 12).
FormulaValue theorem_formula_sign(const PrimeContext& ctx);

/// prod_{i<j}(a_j - a_i) against (-1)^delta times the half-range class
/// products raised to (p+r-8)/9, (2p-r+3s-4)/18, (2p-r-3s-4)/18, all mod p
/// with w as the image of the cube root of unity. Requires p = 7 (mod 12).
CheckResult denominator_identity_check(const PrimeContext& ctx);

/// One w-class of primitive roots: those sharing the value g^n mod p.
struct ClassRow {
  i64 class_rep = 0;     // smallest primitive root in the class
  i64 class_size = 0;
  PrimeContext context;  // built at class_rep
  FormulaValue formula;
  bool agrees = false;
};

struct Balance {
  i64 plus = 0;
  i64 minus = 0;
};

enum class CubeCase { ThreeNotCube, ThreeIsCube };  // "I" / "II"

const char* to_string(CubeCase c) noexcept;

struct TheoremReport {
  i64 p = 0;
  i64 mod12 = 0;  // 1 or 7
  CubeCase cube_case = CubeCase::ThreeNotCube;
  PrimeContext context;  // for the requested (or smallest) g
  int actual_sign = 0;   // brute-force sign for context.g

  // p = 7 (mod 12)
  bool sign_independent = true;
  std::vector<ClassRow> classes;

  // p = 1 (mod 12)
  std::optional<Balance> balance;
  bool inverse_pairing = true;  // sign(g) sign(g^-1) = -1 for every g
};

/// Brute-force signs for every primitive root, balance or independence, and
/// the closed form evaluated once per w-class. Formula disagreement is
/// recorded, never thrown.
TheoremReport audit_prime(i64 p, std::optional<i64> g = std::nullopt);

enum class Scope { Lemmas, Theorem, All };

struct AuditOptions {
  Scope scope = Scope::All;
  unsigned jobs = 1;
  /// When false each suite stops at its own default bound (see kSuites).
  bool uncapped = false;
};

/// Tally for one named check over the primes it applies to.
struct SuiteTally {
  std::string name;
  i64 bound = 0;  // effective upper bound on p
  i64 checked = 0;
  i64 passed = 0;
  std::optional<i64> first_failure_p;
  std::string first_failure_detail;
  /// Findings report mathematical disagreement and never fail the run.
  bool finding = false;

  i64 failed() const noexcept { return checked - passed; }
};

struct FormulaAgreement {
  i64 primes = 0;
  i64 rows = 0;
  i64 rows_agree = 0;
  i64 anomalies = 0;  // non-integral exponents
  // Split by whether the class contains the smallest primitive root.
  i64 smallest_class_agree = 0;
  i64 other_class_agree = 0;
  i64 primes_both_agree = 0;
  i64 primes_one_agrees = 0;
  i64 primes_none_agree = 0;
  // Split by whether 3 is a cube mod p.
  i64 case_i_rows = 0;
  i64 case_i_agree = 0;
  i64 case_ii_rows = 0;
  i64 case_ii_agree = 0;
};

struct RangeSummary {
  i64 p_min = 0;
  i64 p_max = 0;
  Scope scope = Scope::All;
  std::vector<TheoremReport> rows;  // theorem audits, ascending p
  std::vector<SuiteTally> suites;
  FormulaAgreement agreement;

  /// Failures across non-finding suites.
  i64 check_failures() const noexcept;
};

struct SuiteSpec {
  const char* name;
  i64 default_bound;
  bool theorem;  // belongs to the theorem scope rather than lemmas
  bool finding;
};

/// Every suite audit_range knows about, in reporting order.
const std::vector<SuiteSpec>& suite_specs();

RangeSummary audit_range(i64 p_min, i64 p_max, const AuditOptions& options = {});

}  // namespace cubeperm
