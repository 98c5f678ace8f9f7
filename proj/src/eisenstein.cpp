#include "cubeperm/eisenstein.hpp"

#include <limits>

#include "cubeperm/error.hpp"

namespace cubeperm {

namespace {

__extension__ typedef __int128 i128;

i64 narrow(i128 v, const char* op) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    raise(ErrorCode::Overflow, std::string("Eisenstein ") + op + " overflows 64 bits");
  return static_cast<i64>(v);
}

i64 floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return narrow(q, "division");
}

// Nearest integer to num / den (den > 0), ties to even.
i64 round_half_even(i128 num, i128 den) {
  i128 q = floor_div(num, den);
  i128 twice_rem = 2 * (num - q * den);
  if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) ++q;
  return narrow(q, "division");
}

}  // namespace

EisensteinInt operator+(EisensteinInt u, EisensteinInt v) {
  return {narrow(i128{u.a} + v.a, "addition"), narrow(i128{u.b} + v.b, "addition")};
}

EisensteinInt operator-(EisensteinInt u, EisensteinInt v) {
  return {narrow(i128{u.a} - v.a, "subtraction"), narrow(i128{u.b} - v.b, "subtraction")};
}

EisensteinInt operator-(EisensteinInt u) { return EisensteinInt{} - u; }

EisensteinInt operator*(EisensteinInt u, EisensteinInt v) {
  // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -1 - w
  const i128 ac = i128{u.a} * v.a;
  const i128 bd = i128{u.b} * v.b;
  const i128 cross = i128{u.a} * v.b + i128{u.b} * v.a;
  return {narrow(ac - bd, "multiplication"), narrow(cross - bd, "multiplication")};
}

EisensteinInt conj(EisensteinInt z) {
  return {narrow(i128{z.a} - z.b, "conjugation"), narrow(-i128{z.b}, "conjugation")};
}

i64 norm(EisensteinInt z) {
  const i128 a = z.a, b = z.b;
  return narrow(a * a - a * b + b * b, "norm");
}

DivRem divrem(EisensteinInt u, EisensteinInt v) {
  if (v.is_zero()) raise(ErrorCode::ZeroDivisor, "division by zero in Z[w]");
  const i64 nv = norm(v);
  const EisensteinInt vc = conj(v);
  // u * conj(v) computed in 128 bits; coordinates can exceed 64 bits transiently.
  const i128 ac = i128{u.a} * vc.a;
  const i128 bd = i128{u.b} * vc.b;
  const i128 x = ac - bd;
  const i128 y = i128{u.a} * vc.b + i128{u.b} * vc.a - bd;
  const EisensteinInt q{round_half_even(x, nv), round_half_even(y, nv)};
  const EisensteinInt rem = u - q * v;
  ensure(norm(rem) < nv, "divrem remainder is not norm-decreasing");
  return {q, rem};
}

EisensteinInt gcd(EisensteinInt u, EisensteinInt v) {
  while (!v.is_zero()) {
    EisensteinInt r = divrem(u, v).remainder;
    u = v;
    v = r;
  }
  return u;
}

EisensteinInt unit(int k) {
  EisensteinInt u{1, 0};
  const EisensteinInt step{1, 1};  // 1 + w = -w^2, a primitive sixth root of unity
  for (int i = 0; i < ((k % 6) + 6) % 6; ++i) u = u * step;
  return u;
}

bool is_primary(EisensteinInt z) noexcept {
  return reduce(z.a, 3) == 2 && reduce(z.b, 3) == 0;
}

EisensteinInt primary_associate(EisensteinInt z) {
  if (z.is_zero() || norm(z) % 3 == 0)
    raise(ErrorCode::NotCoprimeToThree, to_string(z) + " has norm divisible by 3");
  for (int k = 0; k < 6; ++k) {
    const EisensteinInt candidate = unit(k) * z;
    if (is_primary(candidate)) return candidate;
  }
  raise(ErrorCode::InternalInconsistency, "no primary associate of " + to_string(z));
}

i64 omega_image(EisensteinInt pi, i64 p) {
  if (reduce(pi.b, p) == 0)
    raise(ErrorCode::ZeroDivisor, to_string(pi) + " has b divisible by " + std::to_string(p));
  const i64 w = mul_mod(reduce(-pi.a, p), inv_mod(pi.b, p), p);
  ensure((mul_mod(w, w, p) + w + 1) % p == 0, "omega image is not a cube root of unity");
  return w;
}

EisensteinInt prime_above(i64 p) {
  const i64 t = sqrt_minus3(p);
  const i64 w0 = mul_mod(t - 1, inv_mod(2, p), p);
  const EisensteinInt pi = primary_associate(gcd(EisensteinInt{p}, EisensteinInt{w0, -1}));
  ensure(norm(pi) == p, "prime above p does not have norm p");
  ensure(omega_image(pi, p) == w0, "prime above p has the wrong omega image");
  return pi;
}

int CubicSymbol::exponent() const {
  if (exp_ < 0) raise(ErrorCode::InvalidArgument, "zero cubic symbol has no exponent");
  return exp_;
}

CubicSymbol CubicSymbol::operator*(CubicSymbol other) const noexcept {
  if (is_zero() || other.is_zero()) return zero();
  return power(exp_ + other.exp_);
}

std::string to_string(CubicSymbol s) {
  if (s.is_zero()) return "0";
  static const char* names[] = {"1", "w", "w^2"};
  return names[s.exponent()];
}

CubicSymbol cubic_symbol_with_image(i64 k, i64 w, i64 p) {
  const i64 kr = reduce(k, p);
  if (kr == 0) return CubicSymbol::zero();
  const i64 v = pow_mod(kr, static_cast<u64>((p - 1) / 3), p);
  if (v == 1) return CubicSymbol::power(0);
  if (v == w) return CubicSymbol::power(1);
  if (v == mul_mod(w, w, p)) return CubicSymbol::power(2);
  raise(ErrorCode::InternalInconsistency,
        "k^((p-1)/3) is not a cube root of unity for k=" + std::to_string(k));
}

CubicSymbol cubic_symbol(i64 k, EisensteinInt pi, i64 p) {
  if (p % 3 != 1 || norm(pi) != p)
    raise(ErrorCode::InvalidArgument, to_string(pi) + " is not a prime of norm " + std::to_string(p));
  return cubic_symbol_with_image(k, omega_image(pi, p), p);
}

EisensteinInt choose_pi(i64 p, i64 g) {
  const EisensteinInt base = prime_above(p);
  const CubicSymbol s = cubic_symbol(g, base, p);
  if (s.is_zero() || s.exponent() == 0)
    raise(ErrorCode::NotPrimitiveRoot,
          std::to_string(g) + " is not a primitive root modulo " + std::to_string(p));
  // (g / conj pi)_3 = (g / pi)_3^2, so the conjugate turns w^2 into w.
  const EisensteinInt pi = s.exponent() == 1 ? base : conj(base);
  ensure(is_primary(pi), "conjugate of a primary element is not primary");
  ensure(cubic_symbol(g, pi, p) == CubicSymbol::power(1), "chosen pi does not send g to w");
  return pi;
}

std::string to_string(EisensteinInt z) {
  std::string out = std::to_string(z.a);
  out += z.b < 0 ? "-" : "+";
  // b = INT64_MIN cannot be negated; print its digits directly.
  std::string digits = std::to_string(z.b);
  if (z.b < 0) digits.erase(0, 1);
  return out + digits + "w";
}

}  // namespace cubeperm
