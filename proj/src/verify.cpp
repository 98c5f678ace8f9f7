#include "cubeperm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <thread>

#include "cubeperm/error.hpp"
#include "cubeperm/permsign.hpp"

namespace cubeperm {

bool PrimeContext::same_class_data(const PrimeContext& o) const {
  return p == o.p && n == o.n && pi == o.pi && w == o.w && rep == o.rep && counts == o.counts && h == o.h;
}

PrimeContext build_context(i64 p, std::optional<i64> g) {
  PrimeContext ctx;
  ctx.p = p;
  ctx.n = PrimeModulus(p).require_n();
  ctx.g = g ? *g : smallest_primitive_root(p);
  if (!is_primitive_root(ctx.g, p))
    raise(ErrorCode::NotPrimitiveRoot,
          std::to_string(ctx.g) + " is not a primitive root modulo " + std::to_string(p));
  ctx.pi = choose_pi(p, ctx.g);
  ctx.w = omega_image(ctx.pi, p);
  ctx.rep = normalize_rs(p, ctx.g);
  ctx.counts = residue_counts(p, ctx.pi);
  if (p % 4 == 3) ctx.h = class_number(p);

  ensure(cubic_symbol_with_image(ctx.g, ctx.w, p) == CubicSymbol::power(1), "(g/pi)_3 != w");
  ensure(ctx.rep == FormRepresentation{2 * ctx.pi.a - ctx.pi.b, ctx.pi.b},
         "normalized (r, s) differs from (2a - b, b) for pi = " + to_string(ctx.pi));
  const auto spot = difference_counts(p, ctx.pi, ctx.rep, ctx.g);
  ensure(spot.brute == spot.formula, "difference count at k = g disagrees with the closed form");
  return ctx;
}

Rational Rational::of(i64 num, i64 den) {
  if (den == 0) raise(ErrorCode::ZeroDivisor, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 d = std::gcd(num, den);
  return {num / d, den / d};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

FormulaValue theorem_formula_sign(const PrimeContext& ctx) {
  if (ctx.p % 12 != 7 || !ctx.h)
    raise(ErrorCode::WrongResidueClass, std::to_string(ctx.p) + " is not 7 mod 12");
  const i64 r = ctx.rep.r, s = ctx.rep.s, h = *ctx.h;
  const auto& c = ctx.counts;
  // Every term scaled by 4; only the total has to be divisible by 4.
  const i64 scaled = 4 * c.delta + 4 * (1 + c.alpha) * (1 + r) + (h + 1 - 2 * c.alpha) * (2 - r + 3 * s) +
                     4 * s * (1 + c.gamma) + (ctx.n - 2);
  FormulaValue out;
  out.exponent = Rational::of(scaled, 4);
  if (out.exponent.is_integer()) out.sign = out.exponent.num % 2 == 0 ? 1 : -1;
  return out;
}

CheckResult denominator_identity_check(const PrimeContext& ctx) {
  const i64 p = ctx.p, r = ctx.rep.r, s = ctx.rep.s;
  if (p % 12 != 7) raise(ErrorCode::WrongResidueClass, std::to_string(p) + " is not 7 mod 12");
  const i64 e_num[3] = {p + r - 8, 2 * p - r + 3 * s - 4, 2 * p - r - 3 * s - 4};
  const i64 e_den[3] = {9, 18, 18};
  i64 e[3];
  for (int i = 0; i < 3; ++i) {
    if (e_num[i] < 0 || e_num[i] % e_den[i] != 0)
      return CheckResult::fail("exponent " + std::to_string(e_num[i]) + "/" + std::to_string(e_den[i]) +
                               " is not a nonnegative integer");
    e[i] = e_num[i] / e_den[i];
  }

  const auto sorted = cubic_residues_sorted(p);
  i64 lhs = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) lhs = mul_mod(lhs, sorted[j] - sorted[i], p);
  }

  const auto prod = half_range_class_products(p, ctx.w);
  i64 rhs = ctx.counts.delta % 2 == 0 ? 1 : p - 1;
  for (std::size_t i = 0; i < 3; ++i) rhs = mul_mod(rhs, pow_mod(prod[i], static_cast<u64>(e[i]), p), p);
  if (lhs != rhs)
    return CheckResult::fail("prod (a_j - a_i) = " + std::to_string(lhs) + " but assembled value is " +
                             std::to_string(rhs));
  return CheckResult::pass();
}

const char* to_string(CubeCase c) noexcept { return c == CubeCase::ThreeIsCube ? "II" : "I"; }

TheoremReport audit_prime(i64 p, std::optional<i64> g) {
  TheoremReport rep;
  rep.p = p;
  rep.context = build_context(p, g);
  rep.mod12 = p % 12;
  rep.cube_case = rep.context.rep.s % 9 == 0 ? CubeCase::ThreeIsCube : CubeCase::ThreeNotCube;

  const auto roots = primitive_roots(p);
  const auto sorted = cubic_residues_sorted(p);
  std::vector<int> sign_of(static_cast<std::size_t>(p), 0);
  for (i64 x : roots) sign_of[static_cast<std::size_t>(x)] = cube_permutation_sign(p, x, sorted);
  rep.actual_sign = sign_of[static_cast<std::size_t>(rep.context.g)];

  if (rep.mod12 == 1) {
    Balance b;
    for (i64 x : roots) {
      (sign_of[static_cast<std::size_t>(x)] == 1 ? b.plus : b.minus) += 1;
      const i64 inv = inv_mod(x, p);
      if (sign_of[static_cast<std::size_t>(x)] * sign_of[static_cast<std::size_t>(inv)] != -1)
        rep.inverse_pairing = false;
    }
    rep.balance = b;
    return rep;
  }

  // p = 7 (mod 12): group the roots by g^n and evaluate the formula per class.
  for (i64 x : roots) {
    if (sign_of[static_cast<std::size_t>(x)] != rep.actual_sign) rep.sign_independent = false;
  }
  std::map<i64, std::vector<i64>> by_class;
  for (i64 x : roots) by_class[pow_mod(x, static_cast<u64>(rep.context.n), p)].push_back(x);
  for (const auto& [key, members] : by_class) {
    ClassRow row;
    row.class_rep = members.front();
    row.class_size = static_cast<i64>(members.size());
    row.context = row.class_rep == rep.context.g ? rep.context : build_context(p, row.class_rep);
    for (i64 x : members) {
      ensure(cubic_symbol_with_image(x, row.context.w, p) == CubicSymbol::power(1),
             "primitive roots in one w-class select different primes above p");
    }
    row.formula = theorem_formula_sign(row.context);
    row.agrees = row.formula.sign && *row.formula.sign == rep.actual_sign;
    rep.classes.push_back(std::move(row));
  }
  std::sort(rep.classes.begin(), rep.classes.end(),
            [](const ClassRow& a, const ClassRow& b) { return a.class_rep < b.class_rep; });
  return rep;
}

// ---------------------------------------------------------------------------
// Range audits

namespace {

enum SuiteId : std::size_t {
  kDifferenceCount,
  kPairSumIdentity,
  kFarPairParity,
  kHalfRangeProducts,
  kNumeratorIdentity,
  kCyclotomicSplit,
  kClassNumber,
  kFormLink,
  kThreeIsCube,
  kCubingPermutation,
  kContextInvariants,
  kDenominatorIdentity,
  kParityStep,
  kBalance,
  kInversePairing,
  kSignIndependence,
  kClosedFormSign,
  kSuiteCount,
};

struct Verdict {
  std::size_t suite;
  i64 checked;
  i64 passed;
  std::string detail;
};

struct PrimeOutcome {
  std::vector<Verdict> verdicts;
  std::optional<TheoremReport> report;
};

bool applies(std::size_t suite, i64 p) {
  switch (suite) {
    case kCyclotomicSplit: return true;
    case kClassNumber:
    case kParityStep: return p % 4 == 3 && p > 3;
    case kCubingPermutation: return p % 3 == 2 && p >= 5;
    case kHalfRangeProducts:
    case kDenominatorIdentity:
    case kSignIndependence:
    case kClosedFormSign: return p % 12 == 7;
    case kBalance:
    case kInversePairing: return p % 12 == 1;
    default: return p % 3 == 1;
  }
}

CheckResult from_bool(bool ok, const std::string& detail) {
  return ok ? CheckResult::pass() : CheckResult::fail(detail);
}

CheckResult check_numerator(i64 p) {
  const auto roots = primitive_roots(p);
  std::vector<i64> product(static_cast<std::size_t>(p), 0);
  for (i64 g : roots) {
    const auto v = numerator_eval(p, g);
    if (v.product != v.closed_form)
      return CheckResult::fail("g=" + std::to_string(g) + ": product " + std::to_string(v.product) +
                               " vs closed form " + std::to_string(v.closed_form));
    product[static_cast<std::size_t>(g)] = v.product;
  }
  if (p % 4 == 1) {
    const i64 g0 = roots.front();
    const i64 p0 = product[static_cast<std::size_t>(g0)];
    for (i64 g : roots) {
      const i64 ratio = mul_mod(product[static_cast<std::size_t>(g)], inv_mod(p0, p), p);
      const i64 expect = pow_mod(mul_mod(g, inv_mod(g0, p), p), static_cast<u64>((p - 1) / 4), p);
      if (ratio != expect) return CheckResult::fail("ratio property fails at g=" + std::to_string(g));
    }
  }
  return CheckResult::pass();
}

CheckResult check_form_link(i64 p) {
  const auto roots = primitive_roots(p);
  const i64 g = roots.front();
  const auto base = represent_4p(p);
  const auto ctx_pi = choose_pi(p, g);
  const auto rs = normalize_rs(p, g);
  if (!(rs == FormRepresentation{2 * ctx_pi.a - ctx_pi.b, ctx_pi.b}))
    return CheckResult::fail("normalize_rs differs from (2a - b, b) for pi = " + to_string(ctx_pi));
  // A root from the other cube class flips s and keeps r.
  const i64 n = (p - 1) / 3;
  const i64 gn = pow_mod(g, static_cast<u64>(n), p);
  for (i64 x : roots) {
    if (pow_mod(x, static_cast<u64>(n), p) == gn) continue;
    const auto other = normalize_rs(p, x);
    if (!(other.r == rs.r && other.s == -rs.s))
      return CheckResult::fail("other cube class does not flip s (g=" + std::to_string(x) + ")");
    break;
  }
  if (base.r != rs.r || base.s != (rs.s < 0 ? -rs.s : rs.s))
    return CheckResult::fail("represent_4p and normalize_rs disagree");
  return CheckResult::pass();
}

CheckResult check_context_invariants(i64 p) {
  const auto roots = primitive_roots(p);
  std::map<i64, PrimeContext> by_class;
  for (i64 g : roots) {
    const PrimeContext ctx = build_context(p, g);
    const i64 key = pow_mod(g, static_cast<u64>(ctx.n), p);
    auto [it, inserted] = by_class.emplace(key, ctx);
    if (!inserted && !it->second.same_class_data(ctx))
      return CheckResult::fail("context differs within a w-class at g=" + std::to_string(g));
  }
  if (by_class.size() != 2) return CheckResult::fail("expected two w-classes of primitive roots");
  const auto& a = by_class.begin()->second;
  const auto& b = std::next(by_class.begin())->second;
  if (!(a.pi == conj(b.pi)) || a.counts.delta != b.counts.delta || a.counts.alpha != b.counts.alpha ||
      a.counts.beta != b.counts.gamma || a.counts.gamma != b.counts.beta)
    return CheckResult::fail("the two w-classes are not related by conjugation");
  return CheckResult::pass();
}

void record(PrimeOutcome& out, std::size_t suite, const CheckResult& res) {
  out.verdicts.push_back({suite, 1, res.ok ? 1 : 0, res.detail});
}

PrimeOutcome run_prime(i64 p, const std::vector<i64>& bounds) {
  PrimeOutcome out;
  const auto active = [&](std::size_t suite) { return p <= bounds[suite] && applies(suite, p); };
  const auto guarded = [&](std::size_t suite, const std::function<CheckResult()>& body) {
    if (!active(suite)) return;
    try {
      record(out, suite, body());
    } catch (const std::exception& e) {
      record(out, suite, CheckResult::fail(std::string("exception: ") + e.what()));
    }
  };

  std::optional<PrimeContext> ctx;
  const auto context = [&]() -> const PrimeContext& {
    if (!ctx) ctx = build_context(p);
    return *ctx;
  };

  guarded(kDifferenceCount, [&] { return check_difference_formula(p, context().pi, context().rep); });
  guarded(kPairSumIdentity, [&] { return check_pair_sum_identity(p, context().pi, context().rep); });
  guarded(kFarPairParity, [&] { return check_far_pair_parity(p, context().pi); });
  guarded(kHalfRangeProducts,
          [&] { return check_half_range_products(p, context().pi, context().counts); });
  guarded(kNumeratorIdentity, [&] { return check_numerator(p); });
  guarded(kCyclotomicSplit, [&] { return from_bool(phi_split_check(p), "Phi_{p-1} does not split"); });
  guarded(kClassNumber, [&] {
    const i64 h = class_number(p), oracle = class_number_forms_oracle(p);
    if (h != oracle)
      return CheckResult::fail("counting formula " + std::to_string(h) + " vs reduced forms " +
                               std::to_string(oracle));
    return from_bool(h % 2 == 1, "class number is even");
  });
  guarded(kFormLink, [&] { return check_form_link(p); });
  guarded(kThreeIsCube, [&] {
    const bool by_s = three_is_cube(p, context().g);
    const bool by_symbol = cubic_symbol_with_image(3, context().w, p) == CubicSymbol::power(0);
    const bool by_form = represents_x2_243y2(p);
    return from_bool(by_s == by_symbol && by_s == by_form, "s mod 9, (3/pi)_3 and 4p = X^2 + 243Y^2 disagree");
  });
  guarded(kCubingPermutation, [&] {
    const auto v = cubing_permutation_sign(p);
    return from_bool(v.brute == v.formula, "enumerated sign " + std::to_string(v.brute) + " vs formula " +
                                               std::to_string(v.formula));
  });
  guarded(kContextInvariants, [&] { return check_context_invariants(p); });
  guarded(kDenominatorIdentity, [&] { return denominator_identity_check(context()); });
  guarded(kParityStep, [&] {
    const i64 half_qr = half_range_residue_count(p);
    const i64 h = class_number(p);
    return from_bool((half_qr - (h + 1) / 2) % 2 == 0,
                     "half-range residue count " + std::to_string(half_qr) + " vs (h+1)/2 = " +
                         std::to_string((h + 1) / 2) + " (mod 2)");
  });

  const bool theorem = (active(kBalance) || active(kSignIndependence));
  if (!theorem) return out;
  try {
    TheoremReport rep = audit_prime(p);
    if (rep.balance) {
      guarded(kBalance, [&] {
        return from_bool(rep.balance->plus == rep.balance->minus,
                         "signs +1/-1 counted " + std::to_string(rep.balance->plus) + "/" +
                             std::to_string(rep.balance->minus));
      });
      guarded(kInversePairing, [&] { return from_bool(rep.inverse_pairing, "sign(g) sign(g^-1) != -1"); });
    } else {
      guarded(kSignIndependence, [&] { return from_bool(rep.sign_independent, "sign depends on g"); });
      if (active(kClosedFormSign)) {
        Verdict v{kClosedFormSign, 0, 0, {}};
        for (const auto& row : rep.classes) {
          ++v.checked;
          if (row.agrees) {
            ++v.passed;
          } else if (v.detail.empty()) {
            v.detail = "class of g=" + std::to_string(row.class_rep) + ": formula " +
                       (row.formula.sign ? std::to_string(*row.formula.sign) : row.formula.exponent.str()) +
                       " vs actual " + std::to_string(rep.actual_sign);
          }
        }
        out.verdicts.push_back(std::move(v));
      }
    }
    out.report = std::move(rep);
  } catch (const std::exception& e) {
    const std::size_t suite = p % 12 == 1 ? kBalance : kSignIndependence;
    record(out, suite, CheckResult::fail(std::string("exception: ") + e.what()));
  }
  return out;
}

void tally_agreement(FormulaAgreement& agg, const TheoremReport& rep) {
  if (rep.classes.empty()) return;
  ++agg.primes;
  i64 agree = 0;
  const bool case_ii = rep.cube_case == CubeCase::ThreeIsCube;
  for (std::size_t i = 0; i < rep.classes.size(); ++i) {
    const auto& row = rep.classes[i];
    ++agg.rows;
    if (!row.formula.sign) ++agg.anomalies;
    (case_ii ? agg.case_ii_rows : agg.case_i_rows) += 1;
    if (!row.agrees) continue;
    ++agree;
    ++agg.rows_agree;
    (case_ii ? agg.case_ii_agree : agg.case_i_agree) += 1;
    (i == 0 ? agg.smallest_class_agree : agg.other_class_agree) += 1;
  }
  if (agree == static_cast<i64>(rep.classes.size())) {
    ++agg.primes_both_agree;
  } else if (agree == 0) {
    ++agg.primes_none_agree;
  } else {
    ++agg.primes_one_agrees;
  }
}

}  // namespace

const std::vector<SuiteSpec>& suite_specs() {
  static const std::vector<SuiteSpec> specs = {
      {"difference_count", 500, false, false},
      {"pair_sum_identity", 300, false, false},
      {"far_pair_parity", 1000, false, false},
      {"half_range_products", 1000, false, false},
      {"numerator_identity", 500, false, false},
      {"cyclotomic_split", 100, false, false},
      {"class_number", 2000, false, false},
      {"form_link", 2000, false, false},
      {"three_is_cube", 2000, false, false},
      {"cubing_permutation", 1000, false, false},
      {"context_invariants", 500, false, false},
      {"denominator_identity", 1000, false, false},
      {"class_number_parity_step", 2000, false, true},
      {"sign_balance", 2000, true, false},
      {"inverse_pairing", 2000, true, false},
      {"sign_independence", 2000, true, false},
      {"closed_form_sign", 2000, true, true},
  };
  return specs;
}

i64 RangeSummary::check_failures() const noexcept {
  i64 total = 0;
  for (const auto& s : suites) {
    if (!s.finding) total += s.failed();
  }
  return total;
}

RangeSummary audit_range(i64 p_min, i64 p_max, const AuditOptions& options) {
  if (p_min < 3 || p_max >= kMaxModulus)
    raise(ErrorCode::InvalidArgument, "range must satisfy 3 <= p_min and p_max < 2^31");
  const auto& specs = suite_specs();
  ensure(specs.size() == kSuiteCount, "suite table out of sync");

  RangeSummary summary;
  summary.p_min = p_min;
  summary.p_max = p_max;
  summary.scope = options.scope;

  std::vector<i64> bounds(kSuiteCount, 0);
  i64 upper = 0;
  for (std::size_t i = 0; i < kSuiteCount; ++i) {
    const bool in_scope = options.scope == Scope::All || (options.scope == Scope::Theorem) == specs[i].theorem;
    if (in_scope) bounds[i] = options.uncapped ? p_max : std::min(p_max, specs[i].default_bound);
    if (in_scope) {
      SuiteTally t;
      t.name = specs[i].name;
      t.bound = bounds[i];
      t.finding = specs[i].finding;
      summary.suites.push_back(std::move(t));
    }
    upper = std::max(upper, bounds[i]);
  }

  std::vector<i64> primes;
  for (i64 p = std::max<i64>(p_min, 3); p <= upper; ++p) {
    if (is_prime(static_cast<u64>(p))) primes.push_back(p);
  }

  std::vector<PrimeOutcome> outcomes(primes.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) outcomes[i] = run_prime(primes[i], bounds);
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  // Aggregate in ascending p; execution order never leaks into the result.
  std::map<std::string, SuiteTally*> by_name;
  for (auto& t : summary.suites) by_name[t.name] = &t;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (const auto& v : outcomes[i].verdicts) {
      SuiteTally& t = *by_name.at(specs[v.suite].name);
      t.checked += v.checked;
      t.passed += v.passed;
      if (v.passed < v.checked && !t.first_failure_p) {
        t.first_failure_p = primes[i];
        t.first_failure_detail = v.detail;
      }
    }
    if (outcomes[i].report) {
      tally_agreement(summary.agreement, *outcomes[i].report);
      summary.rows.push_back(std::move(*outcomes[i].report));
    }
  }
  return summary;
}

}  // namespace cubeperm
