#include "cubeperm/counts.hpp"

#include <string>

#include "cubeperm/error.hpp"

namespace cubeperm {

namespace {

i64 require_split_prime(i64 p, EisensteinInt pi) {
  const i64 n = PrimeModulus(p).require_n();
  if (norm(pi) != p || !is_primary(pi))
    raise(ErrorCode::InvalidArgument,
          to_string(pi) + " is not a primary prime of norm " + std::to_string(p));
  return n;
}

// is_cube[x] for 0 <= x < p.
std::vector<char> cube_table(i64 p) {
  std::vector<char> table(static_cast<std::size_t>(p), 0);
  for (i64 x : cubic_residues_sorted(p)) table[static_cast<std::size_t>(x)] = 1;
  return table;
}

i64 cube_pairs_at_difference(i64 p, const std::vector<i64>& cubes,
                             const std::vector<char>& is_cube, i64 k) {
  i64 count = 0;
  for (i64 x : cubes) count += is_cube[static_cast<std::size_t>((x + k) % p)];
  return count;
}

}  // namespace

CountsRecord residue_counts(i64 p, EisensteinInt pi) {
  require_split_prime(p, pi);
  const i64 w = omega_image(pi, p);
  CountsRecord out;
  for (i64 x = 1; 2 * x < p; ++x) {
    const int e = cubic_symbol_with_image(x, w, p).exponent();
    if (e == 0 && 4 * x < p) ++out.delta;
    if (legendre_symbol(x, p) != 1) continue;
    if (e == 0) ++out.alpha;
    if (e == 1) ++out.beta;
    if (e == 2) ++out.gamma;
  }
  return out;
}

i64 difference_count_formula(i64 p, FormRepresentation rs, CubicSymbol symbol_of_k) {
  switch (symbol_of_k.exponent()) {
    case 0: return p + rs.r - 8;
    case 1: return (2 * p - rs.r + 3 * rs.s - 4) / 2;
    default: return (2 * p - rs.r - 3 * rs.s - 4) / 2;
  }
}

DifferenceCount difference_counts(i64 p, EisensteinInt pi, FormRepresentation rs, i64 k) {
  require_split_prime(p, pi);
  if (reduce(k, p) == 0) raise(ErrorCode::ZeroK, "k must be nonzero modulo p");
  const auto cubes = cubic_residues_sorted(p);
  const auto is_cube = cube_table(p);
  DifferenceCount out;
  // Each cube class has exactly three cube roots, so every residue pair
  // accounts for 3 * 3 pairs (x, y).
  out.brute = 9 * cube_pairs_at_difference(p, cubes, is_cube, reduce(k, p));
  out.formula = difference_count_formula(p, rs, cubic_symbol(k, pi, p));
  return out;
}

std::vector<i64> difference_counts_exhaustive(i64 p) {
  PrimeModulus checked(p);
  std::vector<i64> cube(static_cast<std::size_t>(p));
  for (i64 x = 0; x < p; ++x) cube[static_cast<std::size_t>(x)] = pow_mod(x, 3, p);
  std::vector<i64> out(static_cast<std::size_t>(p), 0);
  for (i64 x = 1; x < p; ++x) {
    for (i64 y = 1; y < p; ++y) {
      ++out[static_cast<std::size_t>(reduce(cube[y] - cube[x], p))];
    }
  }
  out[0] = 0;
  return out;
}

std::vector<i64> r_table(i64 p) {
  const auto cubes = cubic_residues_sorted(p);
  std::vector<i64> r(static_cast<std::size_t>(p), 0);
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    for (std::size_t j = i + 1; j < cubes.size(); ++j) {
      ++r[static_cast<std::size_t>(cubes[j] - cubes[i])];
    }
  }
  return r;
}

CheckResult check_difference_formula(i64 p, EisensteinInt pi, FormRepresentation rs) {
  require_split_prime(p, pi);
  const i64 w = omega_image(pi, p);
  const auto cubes = cubic_residues_sorted(p);
  const auto is_cube = cube_table(p);
  for (i64 k = 1; k < p; ++k) {
    const i64 brute = 9 * cube_pairs_at_difference(p, cubes, is_cube, k);
    const i64 formula = difference_count_formula(p, rs, cubic_symbol_with_image(k, w, p));
    if (brute != formula)
      return CheckResult::fail("N(" + std::to_string(k) + "): brute " + std::to_string(brute) +
                                   " vs formula " + std::to_string(formula),
                               k);
  }
  return CheckResult::pass();
}

CheckResult check_pair_sum_identity(i64 p, EisensteinInt pi, FormRepresentation rs) {
  require_split_prime(p, pi);
  if ((p + rs.r - 8) % 9 != 0) return CheckResult::fail("9 does not divide p + r - 8");
  if ((2 * p - rs.r + 3 * rs.s - 4) % 18 != 0) return CheckResult::fail("18 does not divide 2p - r + 3s - 4");
  if ((2 * p - rs.r - 3 * rs.s - 4) % 18 != 0) return CheckResult::fail("18 does not divide 2p - r - 3s - 4");
  const i64 w = omega_image(pi, p);
  const auto r = r_table(p);
  for (i64 k = 1; k < p; ++k) {
    const i64 lhs = r[static_cast<std::size_t>(k)] + r[static_cast<std::size_t>(p - k)];
    const i64 nk = difference_count_formula(p, rs, cubic_symbol_with_image(k, w, p));
    if (9 * lhs != nk)
      return CheckResult::fail("r_k + r_{p-k} = " + std::to_string(lhs) + " but N(k)/9 = " +
                                   std::to_string(nk) + "/9 at k=" + std::to_string(k),
                               k);
  }
  return CheckResult::pass();
}

CheckResult check_far_pair_parity(i64 p, EisensteinInt pi) {
  require_split_prime(p, pi);
  const i64 w = omega_image(pi, p);
  const auto r = r_table(p);
  i64 lhs = 0;
  for (i64 k = 1; 2 * k < p; ++k) lhs += r[static_cast<std::size_t>(p - k)];
  i64 rhs = 0;
  for (i64 x = 1; 4 * x < p; ++x) rhs += cubic_symbol_with_image(x, w, p).exponent() == 0;
  if ((lhs - rhs) % 2 != 0)
    return CheckResult::fail("sum r_{p-k} = " + std::to_string(lhs) + " and quarter-range count " +
                             std::to_string(rhs) + " differ in parity");
  return CheckResult::pass();
}

std::array<i64, 3> half_range_class_products(i64 p, i64 w) {
  std::array<i64, 3> prod{1, 1, 1};
  for (i64 x = 1; 2 * x < p; ++x) {
    auto& slot = prod[static_cast<std::size_t>(cubic_symbol_with_image(x, w, p).exponent())];
    slot = mul_mod(slot, x, p);
  }
  return prod;
}

CheckResult check_half_range_products(i64 p, EisensteinInt pi, const CountsRecord& counts) {
  require_split_prime(p, pi);
  if (p % 12 != 7) raise(ErrorCode::WrongResidueClass, std::to_string(p) + " is not 7 mod 12");
  const i64 w = omega_image(pi, p);
  const auto prod = half_range_class_products(p, w);
  const auto signed_unit = [p](i64 count, i64 value) {
    return (1 + count) % 2 == 0 ? reduce(value, p) : reduce(-value, p);
  };
  const std::array<i64, 3> expected{signed_unit(counts.alpha, 1),
                                    signed_unit(counts.beta, mul_mod(w, w, p)),
                                    signed_unit(counts.gamma, w)};
  static const char* names[] = {"A_1", "A_w", "A_w^2"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (prod[i] != expected[i])
      return CheckResult::fail(std::string("product over ") + names[i] + " is " +
                               std::to_string(prod[i]) + ", expected " + std::to_string(expected[i]));
  }
  return CheckResult::pass();
}

}  // namespace cubeperm
