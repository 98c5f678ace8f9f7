#pragma once

// Counting quantities attached to a prime p = 1 (mod 3) and a primary prime
// pi above it, together with the checks that tie them to the closed forms.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeperm/binform.hpp"
#include "cubeperm/eisenstein.hpp"

namespace cubeperm {

/// delta: cubic residues in (0, p/4).
/// alpha, beta, gamma: quadratic residues in (0, p/2) whose cubic symbol is
/// 1, w, w^2 respectively (alpha therefore counts sixth-power residues).
struct CountsRecord {
  i64 delta = 0;
  i64 alpha = 0;
  i64 beta = 0;
  i64 gamma = 0;

  friend bool operator==(const CountsRecord&, const CountsRecord&) = default;
};

/// Outcome of an identity check. `first_k` names the first offending index
/// when the check is indexed.
struct CheckResult {
  bool ok = true;
  std::string detail;
  std::optional<i64> first_k;

  explicit operator bool() const noexcept { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string detail, std::optional<i64> k = std::nullopt) {
    return {false, std::move(detail), k};
  }
};

CountsRecord residue_counts(i64 p, EisensteinInt pi);

struct DifferenceCount {
  i64 brute = 0;
  i64 formula = 0;
};

/// Closed-form N(k) from the symbol class of k: p + r - 8, (2p - r + 3s - 4)/2
/// or (2p - r - 3s - 4)/2.
i64 difference_count_formula(i64 p, FormRepresentation rs, CubicSymbol symbol_of_k);

/// N(k) = #{(x, y) : 0 < x, y < p, y^3 - x^3 = k}, brute-forced as nine times
/// the number of cubic-residue pairs at difference k, alongside the formula.
DifferenceCount difference_counts(i64 p, EisensteinInt pi, FormRepresentation rs, i64 k);

/// Fully brute-forced N(k) for every k in 1..p-1 over all pairs (x, y).
/// O(p^2); used as the reference for difference_counts.
std::vector<i64> difference_counts_exhaustive(i64 p);

/// r[k] for k = 1..p-1 (index 0 unused): pairs 0 < x < y < p of cubic
/// residues with y - x = k.
std::vector<i64> r_table(i64 p);

/// Brute N(k) equals the closed form for every 0 < k < p.
CheckResult check_difference_formula(i64 p, EisensteinInt pi, FormRepresentation rs);

/// r_k + r_{p-k} = N(k) / 9 for every k, plus the divisibilities
/// 9 | p + r - 8 and 18 | 2p - r +- 3s - 4.
CheckResult check_pair_sum_identity(i64 p, EisensteinInt pi, FormRepresentation rs);

/// sum_{0<k<p/2} r_{p-k} = #{0 < x < p/4 : (x/pi)_3 = 1} (mod 2).
CheckResult check_far_pair_parity(i64 p, EisensteinInt pi);

/// Products over the half-range symbol classes, for p = 7 (mod 12):
///   prod A_1 = (-1)^{1+alpha}, prod A_w = (-1)^{1+beta} w^2,
///   prod A_{w^2} = (-1)^{1+gamma} w   (in F_p with w its omega image).
/// Throws WrongResidueClass for other p.
CheckResult check_half_range_products(i64 p, EisensteinInt pi, const CountsRecord& counts);

/// Products of x over 0 < x < p/2 split by cubic symbol: [A_1, A_w, A_{w^2}].
std::array<i64, 3> half_range_class_products(i64 p, i64 w);

}  // namespace cubeperm
