#pragma once

// Exact arithmetic over Z/pZ for p < 2^31: modular powers, Legendre symbols,
// primitive roots and the subgroup of cubic residues.

#include <cstdint>
#include <optional>
#include <vector>

namespace cubeperm {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Largest modulus accepted anywhere in the library (exclusive).
inline constexpr i64 kMaxModulus = i64{1} << 31;

/// A validated odd prime below 2^31. `n()` is (p-1)/3 when p = 1 (mod 3).
class PrimeModulus {
 public:
  /// Throws NotPrime / InvalidArgument.
  explicit PrimeModulus(i64 p);

  i64 p() const noexcept { return p_; }
  std::optional<i64> n() const noexcept { return n_; }
  bool splits() const noexcept { return n_.has_value(); }

  /// Throws WrongResidueClass unless p = 1 (mod 3).
  i64 require_n() const;

 private:
  i64 p_;
  std::optional<i64> n_;
};

/// Canonical representative of a in [0, m).
i64 reduce(i64 a, i64 m) noexcept;

i64 mul_mod(i64 a, i64 b, i64 m) noexcept;

i64 pow_mod(i64 base, u64 exp, i64 m) noexcept;

/// Inverse of a mod m; throws ZeroDivisor when gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);

/// Deterministic Miller-Rabin (bases valid for all 64-bit inputs).
bool is_prime(u64 n) noexcept;

/// Distinct prime factors by trial division, ascending.
std::vector<i64> distinct_prime_factors(i64 m);

i64 euler_phi(i64 m);

int legendre_symbol(i64 a, i64 p) noexcept;

bool is_primitive_root(i64 g, i64 p);

std::vector<i64> primitive_roots(i64 p);

/// Smallest primitive root in (0, p).
i64 smallest_primitive_root(i64 p);

/// a_1 < ... < a_n, the cubic residues in (0, p). Requires p = 1 (mod 3).
std::vector<i64> cubic_residues_sorted(i64 p);

/// Minimal t in (0, p) with t^2 = -3 (mod p). Requires p = 1 (mod 3), p > 3.
/// Dispatches to a linear scan below kSqrtScanLimit and Tonelli-Shanks above.
i64 sqrt_minus3(i64 p);

inline constexpr i64 kSqrtScanLimit = 1'000'000;

/// Both square-root routes, exposed so they can be compared directly.
i64 sqrt_minus3_scan(i64 p);
i64 sqrt_minus3_tonelli(i64 p);

/// Tonelli-Shanks square root of a quadratic residue a mod odd prime p.
/// Returns one of the two roots; throws InvalidArgument for non-residues.
i64 tonelli_shanks(i64 a, i64 p);

}  // namespace cubeperm
