#include "cubeperm/binform.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "cubeperm/error.hpp"

namespace cubeperm {

namespace {

std::optional<i64> exact_sqrt(i64 v) {
  if (v < 0) return std::nullopt;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

void require_class(i64 p, i64 mod, i64 rem, const char* label) {
  PrimeModulus checked(p);
  if (p % mod != rem || p <= 3)
    raise(ErrorCode::WrongResidueClass, std::to_string(p) + " is not " + label);
}

}  // namespace

FormRepresentation represent_4p(i64 p) {
  require_class(p, 3, 1, "1 mod 3");
  const i64 four_p = 4 * p;
  std::optional<FormRepresentation> found;
  for (i64 s = 0; 3 * s * s <= four_p; s += 3) {
    const auto root = exact_sqrt(four_p - 3 * s * s);
    if (!root) continue;
    for (i64 r : {*root, -*root}) {
      if (reduce(r, 3) != 1) continue;
      if (found && !(found->r == r && found->s == s))
        raise(ErrorCode::InternalInconsistency,
              "4p = r^2 + 3s^2 has two admissible solutions for p=" + std::to_string(p));
      found = FormRepresentation{r, s};
    }
  }
  if (!found)
    raise(ErrorCode::NoRepresentation, "no admissible 4p = r^2 + 3s^2 for p=" + std::to_string(p));
  return *found;
}

FormRepresentation normalize_rs(i64 p, i64 g) {
  const FormRepresentation base = represent_4p(p);
  if (!is_primitive_root(g, p))
    raise(ErrorCode::NotPrimitiveRoot,
          std::to_string(g) + " is not a primitive root modulo " + std::to_string(p));
  const i64 gn = pow_mod(g, static_cast<u64>((p - 1) / 3), p);
  const i64 target = mul_mod(2 * gn + 1, base.r, p);
  std::optional<FormRepresentation> out;
  for (i64 s : {base.s, -base.s}) {
    if (reduce(3 * s, p) != target) continue;
    if (out) raise(ErrorCode::NormalizationFailure, "both signs of s satisfy the congruence");
    out = FormRepresentation{base.r, s};
  }
  if (!out)
    raise(ErrorCode::NormalizationFailure,
          "no sign of s satisfies 3s = (2g^n + 1) r for p=" + std::to_string(p));
  return *out;
}

i64 half_range_residue_count(i64 p) {
  PrimeModulus checked(p);
  i64 count = 0;
  for (i64 x = 1; 2 * x < p; ++x) count += legendre_symbol(x, p) == 1;
  return count;
}

i64 class_number(i64 p) {
  require_class(p, 4, 3, "3 mod 4");
  const i64 half = (p - 1) / 2;
  const i64 residues = half_range_residue_count(p);
  const i64 non_residues = half - residues;
  const i64 den = 2 - legendre_symbol(2, p);
  const i64 num = residues - non_residues;
  ensure(num % den == 0 && num > 0, "class number formula is not a positive integer");
  return num / den;
}

i64 class_number_forms_oracle(i64 p) {
  require_class(p, 4, 3, "3 mod 4");
  // B^2 - 4AC = -p with |B| <= A <= C; B > 0 when |B| = A or A = C.
  i64 count = 0;
  for (i64 a = 1; 3 * a * a <= p; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      const i64 disc = b * b + p;
      if (disc % (4 * a) != 0) continue;
      const i64 c = disc / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

bool three_is_cube(i64 p, i64 g) { return normalize_rs(p, g).s % 9 == 0; }

bool represents_x2_243y2(i64 p) {
  PrimeModulus checked(p);
  const i64 four_p = 4 * p;
  for (i64 y = 0; 243 * y * y <= four_p; ++y) {
    if (exact_sqrt(four_p - 243 * y * y)) return true;
  }
  return false;
}

}  // namespace cubeperm
