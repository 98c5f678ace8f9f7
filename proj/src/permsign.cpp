#include "cubeperm/permsign.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cubeperm/error.hpp"

namespace cubeperm {

namespace {

void validate_bijection(std::span<const i64> one_line) {
  const auto n = static_cast<i64>(one_line.size());
  std::vector<char> seen(one_line.size(), 0);
  for (i64 v : one_line) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      raise(ErrorCode::NotABijection, "one-line notation is not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

u64 count_inversions(std::vector<i64>& v, std::vector<i64>& scratch, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  u64 inv = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[i] <= v[j]) {
      scratch[k++] = v[i++];
    } else {
      inv += mid - i;
      scratch[k++] = v[j++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  for (std::size_t t = lo; t < hi; ++t) v[t] = scratch[t];
  return inv;
}

void require_split(i64 p) { PrimeModulus(p).require_n(); }

void require_generator(i64 p, i64 g) {
  if (!is_primitive_root(g, p))
    raise(ErrorCode::NotPrimitiveRoot,
          std::to_string(g) + " is not a primitive root modulo " + std::to_string(p));
}

// rank[x] = 1-based position of x in sorted, 0 when absent.
std::vector<i64> rank_table(i64 p, std::span<const i64> sorted) {
  std::vector<i64> rank(static_cast<std::size_t>(p), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) rank[static_cast<std::size_t>(sorted[i])] = static_cast<i64>(i + 1);
  return rank;
}

std::vector<i64> cube_power_sequence(i64 p, i64 g) {
  const i64 n = (p - 1) / 3;
  const i64 step = pow_mod(g, 3, p);
  std::vector<i64> seq;
  seq.reserve(static_cast<std::size_t>(n));
  i64 cur = 1;
  for (i64 i = 0; i < n; ++i) {
    cur = mul_mod(cur, step, p);
    seq.push_back(cur);
  }
  return seq;
}

}  // namespace

int permutation_sign(std::span<const i64> one_line) {
  validate_bijection(one_line);
  const std::size_t n = one_line.size();
  std::vector<char> visited(n, 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    ++cycles;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(one_line[j] - 1)) visited[j] = 1;
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

int permutation_sign_by_inversions(std::span<const i64> one_line) {
  validate_bijection(one_line);
  std::vector<i64> work(one_line.begin(), one_line.end());
  std::vector<i64> scratch(work.size());
  return count_inversions(work, scratch, 0, work.size()) % 2 == 0 ? 1 : -1;
}

PermutationRecord build_cube_permutation(i64 p, i64 g) {
  require_split(p);
  require_generator(p, g);
  PermutationRecord rec;
  rec.p = p;
  rec.g = g;
  rec.sorted = cubic_residues_sorted(p);
  rec.sequence = cube_power_sequence(p, g);
  const auto rank = rank_table(p, rec.sorted);
  rec.one_line.reserve(rec.sequence.size());
  for (i64 v : rec.sequence) {
    const i64 pos = rank[static_cast<std::size_t>(v)];
    ensure(pos != 0, "g^{3i} is not a cubic residue");
    rec.one_line.push_back(pos);
  }
  rec.sign = permutation_sign(rec.one_line);
  return rec;
}

int cube_permutation_sign(i64 p, i64 g, std::span<const i64> sorted) {
  const auto rank = rank_table(p, sorted);
  std::vector<i64> one_line;
  for (i64 v : cube_power_sequence(p, g)) one_line.push_back(rank[static_cast<std::size_t>(v)]);
  return permutation_sign(one_line);
}

SignPair cubing_permutation_sign(i64 p) {
  PrimeModulus checked(p);
  if (p % 3 != 2) raise(ErrorCode::WrongResidueClass, std::to_string(p) + " is not 2 mod 3");
  std::vector<i64> one_line;
  one_line.reserve(static_cast<std::size_t>(p - 1));
  for (i64 x = 1; x < p; ++x) one_line.push_back(pow_mod(x, 3, p));
  SignPair out;
  out.brute = permutation_sign(one_line);
  out.formula = ((p + 1) / 2) % 2 == 0 ? 1 : -1;
  return out;
}

NumeratorValues numerator_eval(i64 p, i64 g) {
  require_split(p);
  require_generator(p, g);
  const i64 n = (p - 1) / 3;
  const auto seq = cube_power_sequence(p, g);
  NumeratorValues out;
  out.product = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      out.product = mul_mod(out.product, seq[j] - seq[i], p);
    }
  }
  // n is even for every p = 1 (mod 3), p odd.
  const i64 base = pow_mod(n, static_cast<u64>(n / 2), p);
  if (p % 4 == 3) {
    out.closed_form = ((n - 2) / 4) % 2 == 0 ? base : reduce(-base, p);
  } else {
    const i64 v = mul_mod(base, pow_mod(g, static_cast<u64>((p - 1) / 4), p), p);
    out.closed_form = ((n - 4) / 4) % 2 == 0 ? v : reduce(-v, p);
  }
  return out;
}

std::vector<i64> cyclotomic_polynomial(i64 m) {
  if (m < 1) raise(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  if (m == 1) return {-1, 1};
  const auto primes = distinct_prime_factors(m);
  const i64 degree = euler_phi(m);
  // Phi_m = prod_{d | squarefree part} (1 - T^{m/d})^{mu(d)} for m > 1,
  // expanded as a power series truncated at the degree.
  std::vector<i64> coef(static_cast<std::size_t>(degree + 1), 0);
  coef[0] = 1;
  const auto checked_add = [](i64 a, i64 b) {
    i64 out;
    if (__builtin_add_overflow(a, b, &out)) raise(ErrorCode::Overflow, "cyclotomic coefficient overflow");
    return out;
  };
  const std::size_t subsets = std::size_t{1} << primes.size();
  // Multiply by numerators (mu = +1) and divide by denominators (mu = -1)
  // in order of increasing exponent to keep intermediates small.
  std::vector<std::pair<i64, int>> factors;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    i64 d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= primes[i];
        ++bits;
      }
    }
    factors.emplace_back(m / d, bits % 2 == 0 ? 1 : -1);
  }
  std::sort(factors.begin(), factors.end());
  for (const auto& [e, mu] : factors) {
    if (e > degree) {
      continue;  // (1 - T^e) is 1 modulo T^{degree+1}
    }
    const auto step = static_cast<std::size_t>(e);
    if (mu == 1) {
      for (std::size_t i = coef.size(); i-- > step;) coef[i] = checked_add(coef[i], -coef[i - step]);
    } else {
      for (std::size_t i = step; i < coef.size(); ++i) coef[i] = checked_add(coef[i], coef[i - step]);
    }
  }
  ensure(coef.back() == 1, "cyclotomic polynomial is not monic");
  return coef;
}

std::vector<i64> primitive_root_polynomial(i64 p) {
  std::vector<i64> poly{1};
  for (i64 x : primitive_roots(p)) {
    std::vector<i64> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = reduce(next[i + 1] + poly[i], p);
      next[i] = reduce(next[i] - mul_mod(poly[i], x, p), p);
    }
    poly = std::move(next);
  }
  return poly;
}

bool phi_split_check(i64 p) {
  const auto phi = cyclotomic_polynomial(p - 1);
  const auto split = primitive_root_polynomial(p);
  if (phi.size() != split.size()) return false;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (reduce(phi[i], p) != split[i]) return false;
  }
  return true;
}

}  // namespace cubeperm
