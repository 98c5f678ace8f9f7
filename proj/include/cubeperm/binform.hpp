#pragma once

// The representation 4p = r^2 + 3s^2 (r = 1, s = 0 mod 3) and the class
// number h(-p) for primes p = 3 (mod 4).

#include <cstdint>

#include "cubeperm/modular.hpp"

namespace cubeperm {

struct FormRepresentation {
  i64 r = 0;
  i64 s = 0;

  friend bool operator==(const FormRepresentation&, const FormRepresentation&) = default;
};

/// (r, |s|) with 4p = r^2 + 3s^2, r = 1 (mod 3), s = 0 (mod 3), s >= 0.
/// Found by scanning s over multiples of 3; the scan asserts uniqueness.
FormRepresentation represent_4p(i64 p);

/// Fixes the sign of s so that 3s = (2 g^n + 1) r (mod p).
FormRepresentation normalize_rs(i64 p, i64 g);

/// h(-p) = (R - N) / (2 - (2/p)), with R and N the quadratic residues and
/// non-residues in (0, p/2). Requires p = 3 (mod 4), p > 3.
i64 class_number(i64 p);

/// h(-p) by counting reduced forms (A, B, C) of discriminant -p. Independent
/// of class_number; the two must agree.
i64 class_number_forms_oracle(i64 p);

/// Number of quadratic residues in (0, p/2).
i64 half_range_residue_count(i64 p);

/// 3 is a cube mod p, read off the normalized form: s = 0 (mod 9).
bool three_is_cube(i64 p, i64 g);

/// Direct search for 4p = X^2 + 243 Y^2.
bool represents_x2_243y2(i64 p);

}  // namespace cubeperm
