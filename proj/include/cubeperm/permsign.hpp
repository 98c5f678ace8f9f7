#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cubeperm/modular.hpp"

namespace cubeperm {

/// Sign of a permutation of 1..n given in one-line notation, by cycle
/// decomposition: (-1)^(n - #cycles). Throws NotABijection.
int permutation_sign(std::span<const i64> one_line);

/// Same sign via merge-sort inversion counting. Kept as an independent route.
int permutation_sign_by_inversions(std::span<const i64> one_line);

/// The permutation relating the sorted cubic residues to g^3, g^6, ..., g^{3n}.
/// one_line[i] is the 1-based rank of sequence[i] within sorted. The sign is
/// the same for this map and its inverse.
struct PermutationRecord {
  i64 p = 0;
  i64 g = 0;
  std::vector<i64> sorted;
  std::vector<i64> sequence;
  std::vector<i64> one_line;
  int sign = 1;
};

/// Throws WrongResidueClass / NotPrimitiveRoot.
PermutationRecord build_cube_permutation(i64 p, i64 g);

/// Sign only, reusing a precomputed sorted residue list. Used for sweeps
/// over every primitive root of p.
int cube_permutation_sign(i64 p, i64 g, std::span<const i64> sorted);

struct SignPair {
  int brute = 0;
  int formula = 0;
};

/// x -> x^3 on 1..p-1 for p = 2 (mod 3): enumerated sign and (-1)^((p+1)/2).
SignPair cubing_permutation_sign(i64 p);

struct NumeratorValues {
  i64 product = 0;  // prod_{i<j} (g^{3j} - g^{3i}) mod p, directly
  i64 closed_form = 0;
};

/// The direct O(n^2) product against
///   (-1)^((n-2)/4) n^(n/2)                 for p = 3 (mod 4),
///   (-1)^((n-4)/4) n^(n/2) g^((p-1)/4)     for p = 1 (mod 4).
NumeratorValues numerator_eval(i64 p, i64 g);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term
/// first. Throws Overflow if an intermediate coefficient leaves 64 bits.
std::vector<i64> cyclotomic_polynomial(i64 m);

/// prod_{x primitive root}(T - x) over F_p, constant term first.
std::vector<i64> primitive_root_polynomial(i64 p);

/// Phi_{p-1}(T) = prod_{x primitive root}(T - x) coefficient-wise mod p.
bool phi_split_check(i64 p);

}  // namespace cubeperm
