#include <gtest/gtest.h>

#include <algorithm>

#include "cubeperm/error.hpp"
#include "cubeperm/permsign.hpp"
#include "cubeperm/verify.hpp"

using namespace cubeperm;

namespace {

const ClassRow& class_containing(const TheoremReport& rep, i64 g) {
  const i64 n = rep.context.n;
  const i64 key = pow_mod(g, static_cast<u64>(n), rep.p);
  for (const auto& row : rep.classes) {
    if (pow_mod(row.class_rep, static_cast<u64>(n), rep.p) == key) return row;
  }
  throw std::runtime_error("no class");
}

const SuiteTally& suite(const RangeSummary& s, const std::string& name) {
  for (const auto& t : s.suites) {
    if (t.name == name) return t;
  }
  throw std::runtime_error("no suite " + name);
}

}  // namespace

TEST(BuildContext, Examples) {
  const auto c7 = build_context(7, 3);
  EXPECT_EQ(c7.n, 2);
  EXPECT_EQ(c7.pi, (EisensteinInt{-1, -3}));
  EXPECT_EQ(c7.w, 2);
  EXPECT_EQ(c7.rep, (FormRepresentation{1, -3}));
  EXPECT_EQ(c7.counts, (CountsRecord{1, 1, 0, 1}));
  EXPECT_EQ(c7.h, 1);

  const auto c19 = build_context(19, 2);
  EXPECT_EQ(c19.pi, (EisensteinInt{2, -3}));
  EXPECT_EQ(c19.w, 7);
  EXPECT_EQ(c19.rep, (FormRepresentation{7, -3}));
  EXPECT_EQ(c19.counts, (CountsRecord{1, 2, 1, 3}));
  EXPECT_EQ(c19.h, 1);

  const auto c13 = build_context(13, 2);
  EXPECT_EQ(c13.pi, (EisensteinInt{-4, -3}));
  EXPECT_EQ(c13.w, 3);
  EXPECT_EQ(c13.rep, (FormRepresentation{-5, -3}));
  EXPECT_EQ(c13.counts.delta, 1);
  EXPECT_FALSE(c13.h.has_value());

  EXPECT_EQ(build_context(19).g, 2);
}

TEST(BuildContext, Errors) {
  const auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInconsistency;
  };
  EXPECT_EQ(code([] { build_context(8); }), ErrorCode::NotPrime);
  EXPECT_EQ(code([] { build_context(11); }), ErrorCode::WrongResidueClass);
  EXPECT_EQ(code([] { build_context(13, 5); }), ErrorCode::NotPrimitiveRoot);
}

TEST(BuildContext, ConstantOnOmegaClasses) {
  for (i64 p : {7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97}) {
    const auto roots = primitive_roots(p);
    const auto first = build_context(p, roots.front());
    for (i64 g : roots) {
      const auto ctx = build_context(p, g);
      const bool same = pow_mod(g, static_cast<u64>(ctx.n), p) == pow_mod(roots.front(), static_cast<u64>(ctx.n), p);
      EXPECT_EQ(ctx.same_class_data(first), same) << p << " g=" << g;
    }
  }
}

TEST(Rational, Normalizes) {
  EXPECT_EQ(Rational::of(6, -4), (Rational{-3, 2}));
  EXPECT_EQ(Rational::of(8, 4).str(), "2");
  EXPECT_EQ(Rational::of(-2, 4).str(), "-1/2");
  EXPECT_THROW(Rational::of(1, 0), Error);
}

TEST(TheoremFormula, Examples) {
  auto f = theorem_formula_sign(build_context(7, 3));
  EXPECT_EQ(f.exponent, Rational::of(-1, 1));
  EXPECT_EQ(f.sign, -1);
  f = theorem_formula_sign(build_context(19, 2));
  EXPECT_EQ(f.exponent, Rational::of(21, 1));
  EXPECT_EQ(f.sign, -1);
  f = theorem_formula_sign(build_context(19, 13));
  EXPECT_EQ(f.exponent, Rational::of(30, 1));
  EXPECT_EQ(f.sign, 1);
  EXPECT_THROW(theorem_formula_sign(build_context(13, 2)), Error);
}

TEST(TheoremFormula, NonIntegralExponentIsReportedNotThrown) {
  auto ctx = build_context(19, 2);
  ctx.counts.delta = 0;
  ctx.n = 7;  // (n - 2)/4 becomes 5/4
  const auto f = theorem_formula_sign(ctx);
  EXPECT_FALSE(f.exponent.is_integer());
  EXPECT_FALSE(f.sign.has_value());
}

TEST(DenominatorIdentity, Examples) {
  EXPECT_TRUE(denominator_identity_check(build_context(7, 3)));
  EXPECT_TRUE(denominator_identity_check(build_context(19, 2)));
  EXPECT_TRUE(denominator_identity_check(build_context(31)));
  EXPECT_TRUE(denominator_identity_check(build_context(19, 13)));
  auto ctx = build_context(19, 2);
  ctx.counts.delta += 1;
  EXPECT_FALSE(denominator_identity_check(ctx));
}

TEST(AuditPrime, OneModTwelveBalances) {
  const auto rep = audit_prime(13);
  ASSERT_TRUE(rep.balance.has_value());
  EXPECT_EQ(rep.balance->plus, 2);
  EXPECT_EQ(rep.balance->minus, 2);
  EXPECT_TRUE(rep.inverse_pairing);
  EXPECT_TRUE(rep.classes.empty());
  EXPECT_EQ(rep.actual_sign, -1);  // g = 2
  EXPECT_EQ(audit_prime(13, 7).actual_sign, 1);
  EXPECT_EQ(rep.mod12, 1);
}

TEST(AuditPrime, SevenModTwelveRows) {
  const auto r7 = audit_prime(7);
  EXPECT_EQ(r7.actual_sign, -1);
  EXPECT_TRUE(r7.sign_independent);
  ASSERT_EQ(r7.classes.size(), 2u);
  EXPECT_EQ(class_containing(r7, 3).formula.sign, -1);
  EXPECT_TRUE(class_containing(r7, 3).agrees);
  EXPECT_EQ(class_containing(r7, 5).formula.sign, 1);
  EXPECT_FALSE(class_containing(r7, 5).agrees);

  const auto r19 = audit_prime(19);
  EXPECT_EQ(r19.actual_sign, 1);
  EXPECT_TRUE(r19.sign_independent);
  EXPECT_EQ(class_containing(r19, 2).formula.sign, -1);
  EXPECT_FALSE(class_containing(r19, 2).agrees);
  EXPECT_EQ(class_containing(r19, 13).formula.sign, 1);
  EXPECT_TRUE(class_containing(r19, 13).agrees);
  EXPECT_EQ(class_containing(r19, 13).class_rep, 10);
  i64 total = 0;
  for (const auto& row : r19.classes) total += row.class_size;
  EXPECT_EQ(total, 6);
  EXPECT_EQ(r19.cube_case, CubeCase::ThreeNotCube);
}

TEST(AuditRange, SmallRange) {
  const auto s = audit_range(5, 20);
  ASSERT_EQ(s.rows.size(), 3u);
  EXPECT_EQ(s.rows[0].p, 7);
  EXPECT_EQ(s.rows[1].p, 13);
  EXPECT_EQ(s.rows[2].p, 19);
  EXPECT_EQ(s.check_failures(), 0);
  EXPECT_EQ(suite(s, "difference_count").checked, 3);
  EXPECT_EQ(suite(s, "half_range_products").checked, 2);
  EXPECT_EQ(suite(s, "closed_form_sign").checked, 4);
  EXPECT_EQ(suite(s, "closed_form_sign").passed, 2);
  EXPECT_EQ(s.agreement.primes_one_agrees, 2);
}

TEST(AuditRange, EmptyRange) {
  const auto s = audit_range(5, 4);
  EXPECT_TRUE(s.rows.empty());
  for (const auto& t : s.suites) EXPECT_EQ(t.checked, 0);
  EXPECT_EQ(s.check_failures(), 0);
}

TEST(AuditRange, LemmaSuitesPassOnEveryQualifyingPrime) {
  const auto s = audit_range(5, 100, {Scope::Lemmas, 1, false});
  EXPECT_TRUE(s.rows.empty());
  i64 split = 0;
  for (i64 p = 7; p <= 100; p += 6) split += is_prime(static_cast<u64>(p));
  for (const char* name : {"difference_count", "pair_sum_identity", "far_pair_parity", "numerator_identity",
                           "form_link", "three_is_cube", "context_invariants"}) {
    EXPECT_EQ(suite(s, name).checked, split) << name;
    EXPECT_EQ(suite(s, name).passed, split) << name;
  }
  EXPECT_EQ(s.check_failures(), 0);
}

TEST(AuditRange, ScopesSelectSuites) {
  const auto theorem = audit_range(5, 50, {Scope::Theorem, 1, false});
  for (const auto& t : theorem.suites) {
    EXPECT_TRUE(t.name == "sign_balance" || t.name == "inverse_pairing" || t.name == "sign_independence" ||
                t.name == "closed_form_sign")
        << t.name;
  }
  EXPECT_FALSE(theorem.rows.empty());
}

TEST(AuditRange, CapsAndUncapped) {
  const auto capped = audit_range(5, 400, {Scope::Lemmas, 1, false});
  EXPECT_EQ(suite(capped, "pair_sum_identity").bound, 300);
  EXPECT_EQ(suite(capped, "cyclotomic_split").bound, 100);
  const auto full = audit_range(5, 150, {Scope::Lemmas, 1, true});
  EXPECT_EQ(suite(full, "cyclotomic_split").bound, 150);
}

TEST(AuditRange, ParallelMatchesSerial) {
  const auto a = audit_range(5, 300, {Scope::All, 1, false});
  const auto b = audit_range(5, 300, {Scope::All, 4, false});
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].p, b.rows[i].p);
    EXPECT_EQ(a.rows[i].actual_sign, b.rows[i].actual_sign);
  }
  ASSERT_EQ(a.suites.size(), b.suites.size());
  for (std::size_t i = 0; i < a.suites.size(); ++i) {
    EXPECT_EQ(a.suites[i].checked, b.suites[i].checked);
    EXPECT_EQ(a.suites[i].passed, b.suites[i].passed);
    EXPECT_EQ(a.suites[i].first_failure_p, b.suites[i].first_failure_p);
  }
}
