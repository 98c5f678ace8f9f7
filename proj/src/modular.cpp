#include "cubeperm/modular.hpp"

#include <algorithm>
#include <string>

#include "cubeperm/error.hpp"

namespace cubeperm {

namespace {

__extension__ typedef unsigned __int128 u128;

u64 mul_mod_u64(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod_u64(u64 base, u64 exp, u64 m) noexcept {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod_u64(result, base, m);
    base = mul_mod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

void require_odd_prime(i64 p) {
  if (p < 3 || p >= kMaxModulus || !is_prime(static_cast<u64>(p)))
    raise(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime below 2^31");
}

void require_one_mod_three(i64 p) {
  require_odd_prime(p);
  if (p % 3 != 1)
    raise(ErrorCode::WrongResidueClass, std::to_string(p) + " is not 1 mod 3");
}

}  // namespace

PrimeModulus::PrimeModulus(i64 p) : p_(p) {
  require_odd_prime(p);
  if (p % 3 == 1) n_ = (p - 1) / 3;
}

i64 PrimeModulus::require_n() const {
  if (!n_) raise(ErrorCode::WrongResidueClass, std::to_string(p_) + " is not 1 mod 3");
  return *n_;
}

i64 reduce(i64 a, i64 m) noexcept {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mul_mod(i64 a, i64 b, i64 m) noexcept {
  return static_cast<i64>(mul_mod_u64(static_cast<u64>(reduce(a, m)),
                                      static_cast<u64>(reduce(b, m)),
                                      static_cast<u64>(m)));
}

i64 pow_mod(i64 base, u64 exp, i64 m) noexcept {
  return static_cast<i64>(
      pow_mod_u64(static_cast<u64>(reduce(base, m)), exp, static_cast<u64>(m)));
}

i64 inv_mod(i64 a, i64 m) {
  i64 old_r = reduce(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1)
    raise(ErrorCode::ZeroDivisor,
          std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  return reduce(old_s, m);
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for n < 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<i64> distinct_prime_factors(i64 m) {
  if (m < 1) raise(ErrorCode::InvalidArgument, "cannot factor " + std::to_string(m));
  std::vector<i64> out;
  for (i64 q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    out.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) out.push_back(m);
  return out;
}

i64 euler_phi(i64 m) {
  i64 phi = m;
  for (i64 q : distinct_prime_factors(m)) phi = phi / q * (q - 1);
  return phi;
}

int legendre_symbol(i64 a, i64 p) noexcept {
  i64 r = reduce(a, p);
  if (r == 0) return 0;
  return pow_mod(r, static_cast<u64>((p - 1) / 2), p) == 1 ? 1 : -1;
}

namespace {

bool is_generator(i64 g, i64 p, const std::vector<i64>& factors) {
  if (reduce(g, p) == 0) return false;
  return std::none_of(factors.begin(), factors.end(), [&](i64 q) {
    return pow_mod(g, static_cast<u64>((p - 1) / q), p) == 1;
  });
}

}  // namespace

bool is_primitive_root(i64 g, i64 p) {
  require_odd_prime(p);
  return is_generator(g, p, distinct_prime_factors(p - 1));
}

std::vector<i64> primitive_roots(i64 p) {
  require_odd_prime(p);
  const auto factors = distinct_prime_factors(p - 1);
  std::vector<i64> roots;
  for (i64 g = 1; g < p; ++g) {
    if (is_generator(g, p, factors)) roots.push_back(g);
  }
  return roots;
}

i64 smallest_primitive_root(i64 p) {
  require_odd_prime(p);
  const auto factors = distinct_prime_factors(p - 1);
  for (i64 g = 1; g < p; ++g) {
    if (is_generator(g, p, factors)) return g;
  }
  raise(ErrorCode::InternalInconsistency, "no primitive root modulo " + std::to_string(p));
}

std::vector<i64> cubic_residues_sorted(i64 p) {
  require_one_mod_three(p);
  const auto n = static_cast<u64>((p - 1) / 3);
  std::vector<i64> out;
  out.reserve(n);
  for (i64 x = 1; x < p; ++x) {
    if (pow_mod(x, n, p) == 1) out.push_back(x);
  }
  ensure(out.size() == n, "cubic residue count differs from (p-1)/3");
  return out;
}

i64 sqrt_minus3_scan(i64 p) {
  require_one_mod_three(p);
  const i64 target = p - 3;
  for (i64 t = 1; t < p; ++t) {
    if (mul_mod(t, t, p) == target) return t;
  }
  raise(ErrorCode::InternalInconsistency, "-3 has no square root modulo " + std::to_string(p));
}

i64 tonelli_shanks(i64 a, i64 p) {
  a = reduce(a, p);
  if (a == 0) return 0;
  if (legendre_symbol(a, p) != 1)
    raise(ErrorCode::InvalidArgument, std::to_string(a) + " is not a square modulo " + std::to_string(p));
  i64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  i64 z = 2;
  while (legendre_symbol(z, p) != -1) ++z;
  i64 m = s;
  i64 c = pow_mod(z, static_cast<u64>(q), p);
  i64 t = pow_mod(a, static_cast<u64>(q), p);
  i64 r = pow_mod(a, static_cast<u64>((q + 1) / 2), p);
  while (t != 1) {
    i64 i = 0;
    for (i64 t2 = t; t2 != 1; t2 = mul_mod(t2, t2, p)) ++i;
    i64 b = c;
    for (i64 j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

i64 sqrt_minus3_tonelli(i64 p) {
  require_one_mod_three(p);
  const i64 t = tonelli_shanks(p - 3, p);
  return std::min(t, p - t);
}

i64 sqrt_minus3(i64 p) {
  return p < kSqrtScanLimit ? sqrt_minus3_scan(p) : sqrt_minus3_tonelli(p);
}

}  // namespace cubeperm
