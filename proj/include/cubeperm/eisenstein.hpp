#pragma once

// Exact arithmetic in Z[w], w = e^{2 pi i / 3}, with w^2 = -1 - w.
//
// Primary convention: an element a + bw is primary when a = 2 (mod 3) and
// b = 0 (mod 3), i.e. it is congruent to 2 modulo 3. Some texts normalize to
// -1 instead; every symbol value in this library assumes "2 mod 3".

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "cubeperm/modular.hpp"

namespace cubeperm {

/// a + b*w with 64-bit coordinates. All arithmetic is overflow-checked and
/// raises ErrorCode::Overflow instead of wrapping.
struct EisensteinInt {
  i64 a = 0;
  i64 b = 0;

  constexpr EisensteinInt() = default;
  constexpr EisensteinInt(i64 a_, i64 b_ = 0) : a(a_), b(b_) {}

  bool is_zero() const noexcept { return a == 0 && b == 0; }

  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
  friend auto operator<=>(const EisensteinInt&, const EisensteinInt&) = default;
};

EisensteinInt operator+(EisensteinInt u, EisensteinInt v);
EisensteinInt operator-(EisensteinInt u, EisensteinInt v);
EisensteinInt operator-(EisensteinInt u);
EisensteinInt operator*(EisensteinInt u, EisensteinInt v);

/// (a - b) - bw, using conj(w) = w^2 = -1 - w.
EisensteinInt conj(EisensteinInt z);

/// a^2 - ab + b^2.
i64 norm(EisensteinInt z);

struct DivRem {
  EisensteinInt quotient;
  EisensteinInt remainder;
};

/// u = q v + rem with norm(rem) < norm(v). q rounds both coordinates of
/// u conj(v) / norm(v) to the nearest integer, ties to even.
DivRem divrem(EisensteinInt u, EisensteinInt v);

EisensteinInt gcd(EisensteinInt u, EisensteinInt v);

/// The six units 1, -w^2 (= 1 + w), w, -1, w^2, -w, in that order of
/// successive multiplication by 1 + w.
EisensteinInt unit(int k);

/// The unique associate congruent to 2 mod 3. Throws NotCoprimeToThree.
EisensteinInt primary_associate(EisensteinInt z);

bool is_primary(EisensteinInt z) noexcept;

/// Residue w in F_p with w = w (mod pi): (-a) b^{-1} mod p.
i64 omega_image(EisensteinInt pi, i64 p);

/// Deterministic primary prime of norm p: built from the minimal square root
/// of -3 so that omega_image(result, p) = (t - 1) / 2 mod p.
EisensteinInt prime_above(i64 p);

/// Value of the cubic residue symbol (k / pi)_3 stored as an exponent of w.
class CubicSymbol {
 public:
  static constexpr CubicSymbol zero() { return CubicSymbol(-1); }
  static constexpr CubicSymbol power(int e) { return CubicSymbol(((e % 3) + 3) % 3); }

  bool is_zero() const noexcept { return exp_ < 0; }
  /// 0, 1 or 2 for 1, w, w^2. Throws on the zero symbol.
  int exponent() const;

  CubicSymbol operator*(CubicSymbol other) const noexcept;

  friend bool operator==(CubicSymbol, CubicSymbol) = default;

 private:
  constexpr explicit CubicSymbol(int e) : exp_(e) {}
  int exp_;
};

std::string to_string(CubicSymbol s);

/// Euler criterion in F_p through the image of w. `pi` must be a primary
/// prime of norm p with p = 1 (mod 3).
CubicSymbol cubic_symbol(i64 k, EisensteinInt pi, i64 p);

/// Same symbol, with the image of w supplied; used in tight loops.
CubicSymbol cubic_symbol_with_image(i64 k, i64 w, i64 p);

/// The primary prime above p (prime_above or its conjugate) for which
/// (g / pi)_3 = w. Throws NotPrimitiveRoot when g is a cube.
EisensteinInt choose_pi(i64 p, i64 g);

/// "a+bw" / "a-bw", no spaces.
std::string to_string(EisensteinInt z);

}  // namespace cubeperm
