// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cubeperm/binform.hpp"
#include "cubeperm/counts.hpp"
#include "cubeperm/eisenstein.hpp"
#include "cubeperm/modular.hpp"
#include "cubeperm/permsign.hpp"
#include "cubeperm/render.hpp"
#include "cubeperm/verify.hpp"
#include "oracles.hpp"

#ifndef CUBEPERM_CLI_PATH
#error "CUBEPERM_CLI_PATH must name the command-line binary"
#endif

using namespace cubeperm;

namespace {

/// Collects mismatches for one criterion; only the first is kept.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed, first: " << first_;
    if (!notes_.empty()) out << "; " << notes_;
    return out.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
  std::string notes_;
};

std::string at(i64 p, i64 x = -1) {
  return x < 0 ? "p=" + std::to_string(p) : "p=" + std::to_string(p) + " k=" + std::to_string(x);
}

std::vector<i64> primes_where(i64 lo, i64 hi, const std::function<bool(i64)>& keep) {
  std::vector<i64> out;
  for (i64 p = lo; p <= hi; ++p) {
    if (oracle::is_prime(p) && keep(p)) out.push_back(p);
  }
  return out;
}

bool one_mod_3(i64 p) { return p % 3 == 1; }

/// Smallest primitive root of the w-class containing g.
i64 class_rep_of(i64 p, i64 g) {
  const i64 n = (p - 1) / 3;
  for (i64 h : oracle::primitive_roots(p)) {
    if (pow_mod(h, n, p) == pow_mod(g, n, p)) return h;
  }
  return -1;
}

const ClassRow* class_row(const TheoremReport& rep, i64 g) {
  const i64 want = class_rep_of(rep.p, g);
  for (const auto& row : rep.classes) {
    if (row.class_rep == want) return &row;
  }
  return nullptr;
}

struct Run {
  int exit_code = -1;
  std::string out;
  double seconds = 0;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string("\"") + CUBEPERM_CLI_PATH + "\" " + args;
  const auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// 1. N(k) closed form against brute counts for every k.
Tally difference_count_formula() {
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  for (i64 p : primes_where(7, 500, one_mod_3)) {
    const auto ctx = build_context(p);
    const auto all_pairs = oracle::difference_counts(p);
    for (i64 k = 1; k < p; ++k) {
      const auto dc = difference_counts(p, ctx.pi, ctx.rep, k);
      t.expect(dc.brute == dc.formula && dc.brute == all_pairs[static_cast<std::size_t>(k)], at(p, k));
    }
  }
  const auto pi7 = build_context(7).pi;
  std::array<i64, 3> by_class{-1, -1, -1};
  for (i64 k = 1; k < 7; ++k) {
    by_class[static_cast<std::size_t>(cubic_symbol(k, pi7, 7).exponent())] =
        difference_counts(7, pi7, build_context(7).rep, k).brute;
  }
  t.expect(by_class == std::array<i64, 3>{0, 0, 9}, "p=7 anchor (0,0,9)");
  const auto c19 = build_context(19);
  t.expect(difference_counts(19, c19.pi, c19.rep, 1).brute == 18, "p=19 N(1)");
  t.expect(difference_counts(19, c19.pi, c19.rep, 2).brute == 9, "p=19 N(2)");
  t.expect(difference_counts(19, c19.pi, c19.rep, 4).brute == 18, "p=19 N(4)");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.expect(secs < 10.0, "runtime under 10 s");
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << secs << " s";
  t.note(note.str());
  return t;
}

// 2. r_k + r_{p-k} = N(k) / 9.
Tally pair_sum_identity() {
  Tally t;
  for (i64 p : primes_where(7, 300, one_mod_3)) {
    const auto ctx = build_context(p);
    t.expect(static_cast<bool>(check_pair_sum_identity(p, ctx.pi, ctx.rep)), at(p));
    const auto r = r_table(p);
    const auto n = oracle::difference_counts(p);
    for (i64 k = 1; k < p; ++k) {
      const auto rk = r[static_cast<std::size_t>(k)];
      const auto rpk = r[static_cast<std::size_t>(p - k)];
      t.expect(9 * (rk + rpk) == n[static_cast<std::size_t>(k)], at(p, k));
    }
  }
  return t;
}

// 3. Parity of the count of residue pairs more than p/2 apart.
Tally far_pair_parity() {
  Tally t;
  for (i64 p : primes_where(7, 1000, one_mod_3)) {
    t.expect(static_cast<bool>(check_far_pair_parity(p, build_context(p).pi)), at(p));
  }
  const auto far_pairs = [](i64 p) {
    const auto c = oracle::cubes(p);
    i64 count = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) count += 2 * (c[j] - c[i]) > p;
    }
    return count;
  };
  t.expect(far_pairs(7) == 1, "p=7 anchor 1");
  t.expect(far_pairs(13) == 3, "p=13 anchor 3");
  t.expect(far_pairs(19) == 5, "p=19 anchor 5");
  return t;
}

// 4. Half-range products per cubic class.
Tally half_range_products() {
  Tally t;
  for (i64 p : primes_where(7, 1000, [](i64 p) { return p % 12 == 7; })) {
    const auto ctx = build_context(p);
    t.expect(static_cast<bool>(check_half_range_products(p, ctx.pi, ctx.counts)), at(p));
  }
  const EisensteinInt pi7{-1, -3};
  const auto w7 = omega_image(pi7, 7);
  t.expect(half_range_class_products(7, w7) == std::array<i64, 3>{1, 3, 2}, "p=7 anchor products (1,3,2)");
  const EisensteinInt pi19{2, -3};
  const auto w19 = omega_image(pi19, 19);
  t.expect(w19 == 7, "p=19 w of 2-3w");
  t.expect(half_range_class_products(19, w19) == std::array<i64, 3>{18, 11, 7}, "p=19 anchor products (18,11,7)");
  t.expect(static_cast<bool>(check_half_range_products(19, pi19, residue_counts(19, pi19))), "p=19 pi=2-3w");
  return t;
}

// 5. Direct numerator product against the closed form, every primitive root.
Tally numerator_identity() {
  Tally t;
  i64 one_mod_4 = 0, three_mod_4 = 0;
  for (i64 p : primes_where(7, 500, one_mod_3)) {
    (p % 4 == 1 ? one_mod_4 : three_mod_4)++;
    for (i64 g : oracle::primitive_roots(p)) {
      const auto v = numerator_eval(p, g);
      t.expect(v.product == v.closed_form, at(p) + " g=" + std::to_string(g));
    }
  }
  t.expect(one_mod_4 > 0 && three_mod_4 > 0, "both classes mod 4 exercised");
  const auto anchor = [&](i64 p, i64 g, i64 value) {
    const auto v = numerator_eval(p, g);
    t.expect(v.product == value && v.closed_form == value, "anchor " + at(p) + " g=" + std::to_string(g));
  };
  anchor(7, 3, 2);
  anchor(13, 2, 11);
  anchor(19, 2, 12);
  t.note(std::to_string(one_mod_4) + " primes 1 mod 4, " + std::to_string(three_mod_4) + " primes 3 mod 4");
  return t;
}

// 6. Phi_{p-1} splits over the primitive roots mod p.
Tally cyclotomic_split() {
  Tally t;
  std::map<i64, std::vector<i64>> memo;
  for (i64 p : primes_where(3, 100, [](i64) { return true; })) {
    t.expect(phi_split_check(p), at(p));
    t.expect(cyclotomic_polynomial(p - 1) == oracle::cyclotomic(p - 1, memo), at(p) + " coefficients");
  }
  return t;
}

// 7. p = 1 (mod 12): half of the roots give +1, and g, g^-1 have opposite signs.
Tally sign_balance() {
  Tally t;
  for (i64 p : primes_where(13, 2000, [](i64 p) { return p % 12 == 1; })) {
    const auto rep = audit_prime(p);
    const i64 half = oracle::totient(p - 1) / 2;
    t.expect(rep.balance && rep.balance->plus == half && rep.balance->minus == half, at(p) + " balance");
    t.expect(rep.inverse_pairing, at(p) + " inverse pairing");
    if (p <= 400) {
      for (i64 g : oracle::primitive_roots(p)) {
        const auto a = build_cube_permutation(p, g);
        const auto b = build_cube_permutation(p, inv_mod(g, p));
        t.expect(oracle::sign_by_pairs(a.one_line) * oracle::sign_by_pairs(b.one_line) == -1,
                 at(p) + " g=" + std::to_string(g) + " pairing by inversions");
      }
    }
  }
  const auto r13 = audit_prime(13);
  t.expect(r13.balance && r13.balance->plus == 2 && r13.balance->minus == 2, "p=13 anchor (2,2)");
  return t;
}

// 8. p = 7 (mod 12): the sign does not depend on the primitive root.
Tally sign_independence() {
  Tally t;
  for (i64 p : primes_where(7, 2000, [](i64 p) { return p % 12 == 7; })) {
    const auto rep = audit_prime(p);
    t.expect(rep.sign_independent, at(p));
    if (p <= 400) {
      for (i64 g : oracle::primitive_roots(p)) {
        t.expect(oracle::sign_by_pairs(build_cube_permutation(p, g).one_line) == rep.actual_sign,
                 at(p) + " g=" + std::to_string(g) + " by inversions");
      }
    }
  }
  t.expect(audit_prime(7).actual_sign == -1, "p=7 anchor -1");
  t.expect(audit_prime(19).actual_sign == 1, "p=19 anchor +1");
  return t;
}

// 9. Closed-form sign per w-class: four fixed rows, agreement rates reported.
Tally closed_form_rows() {
  Tally t;
  const auto row_is = [&](i64 p, i64 g, int sign, bool agrees) {
    const auto rep = audit_prime(p);
    const ClassRow* row = class_row(rep, g);
    const std::string where = at(p) + " class of g=" + std::to_string(g);
    t.expect(row != nullptr, where + " present");
    if (!row) return;
    t.expect(row->formula.sign == sign, where + " formula sign");
    t.expect(row->agrees == agrees, where + " agreement");
    t.expect((rep.actual_sign == sign) == agrees, where + " actual sign");
  };
  row_is(7, 3, -1, true);
  row_is(7, 5, 1, false);
  row_is(19, 2, -1, false);
  row_is(19, 13, 1, true);

  const auto summary = audit_range(5, 2000, {Scope::Theorem, 0, false});
  const auto& a = summary.agreement;
  t.expect(a.rows > 0, "rows audited");
  t.expect(summary.check_failures() == 0, "no hard check failures up to 2000");
  const auto cli = run_cli("verify --scope theorem --max-p 2000 --format csv");
  t.expect(cli.exit_code == 0, "verify exit code 0 despite disagreements");
  std::ostringstream note;
  note << "agree " << a.rows_agree << "/" << a.rows << " class rows over " << a.primes << " primes"
       << " (smallest-root class " << a.smallest_class_agree << "/" << a.primes << ", other class "
       << a.other_class_agree << "/" << a.primes << "; case I " << a.case_i_agree << "/" << a.case_i_rows
       << ", case II " << a.case_ii_agree << "/" << a.case_ii_rows << "; both " << a.primes_both_agree
       << ", one " << a.primes_one_agrees << ", none " << a.primes_none_agree << ", non-integral "
       << a.anomalies << ")";
  t.note(note.str());
  return t;
}

// 10. Counting class number against reduced forms; all odd.
Tally class_numbers() {
  Tally t;
  for (i64 p : primes_where(7, 2000, [](i64 p) { return p % 4 == 3; })) {
    const i64 h = class_number(p);
    t.expect(h == class_number_forms_oracle(p), at(p) + " library oracle");
    t.expect(h == static_cast<i64>(oracle::reduced_forms(p).size()), at(p) + " explicit forms");
    t.expect(h % 2 == 1, at(p) + " odd");
  }
  t.expect(class_number(7) == 1, "h(-7)=1");
  t.expect(class_number(19) == 1, "h(-19)=1");
  t.expect(class_number(23) == 3, "h(-23)=3");
  return t;
}

// 11. (r, s) from the form scan equals (2a - b, b) for pi = a + b w.
Tally form_link() {
  Tally t;
  for (i64 p : primes_where(7, 2000, one_mod_3)) {
    const i64 g = oracle::primitive_roots(p).front();
    const auto pi = choose_pi(p, g);
    const auto rs = normalize_rs(p, g);
    t.expect(rs == FormRepresentation{2 * pi.a - pi.b, pi.b}, at(p));
    t.expect(4 * p == rs.r * rs.r + 3 * rs.s * rs.s, at(p) + " 4p = r^2 + 3s^2");
  }
  t.expect(normalize_rs(7, 3) == FormRepresentation{1, -3}, "p=7 anchor (1,-3)");
  t.expect(normalize_rs(13, 2) == FormRepresentation{-5, -3}, "p=13 anchor (-5,-3)");
  t.expect(normalize_rs(19, 2) == FormRepresentation{7, -3}, "p=19 anchor (7,-3)");
  return t;
}

// 12. Sign of x -> x^3 for p = 2 (mod 3).
Tally cubing_permutation() {
  Tally t;
  for (i64 p : primes_where(5, 1000, [](i64 p) { return p % 3 == 2; })) {
    const auto s = cubing_permutation_sign(p);
    std::vector<i64> image;
    for (i64 x = 1; x < p; ++x) image.push_back(x * x % p * x % p);
    t.expect(s.brute == s.formula && s.brute == oracle::sign_by_pairs(image), at(p));
  }
  t.expect(cubing_permutation_sign(5).brute == -1, "p=5 anchor -1");
  t.expect(cubing_permutation_sign(11).brute == 1, "p=11 anchor +1");
  t.expect(cubing_permutation_sign(17).brute == -1, "p=17 anchor -1");
  return t;
}

// 13. s = 0 (mod 9) exactly when 3 is a cube.
Tally three_is_cube_criterion() {
  Tally t;
  i64 cubes = 0;
  for (i64 p : primes_where(7, 2000, one_mod_3)) {
    const i64 g = oracle::primitive_roots(p).front();
    const auto pi = choose_pi(p, g);
    const bool by_form = three_is_cube(p, g);
    const bool by_residue = pow_mod(3, (p - 1) / 3, p) == 1;
    t.expect(by_form == (cubic_symbol(3, pi, p).exponent() == 0), at(p) + " symbol");
    t.expect(by_form == (oracle::cubic_symbol_in_ring(3, pi, p) == 0), at(p) + " ring symbol");
    t.expect(by_form == by_residue, at(p) + " Euler criterion");
    cubes += by_form;
  }
  t.expect(three_is_cube(61, smallest_primitive_root(61)), "p=61 anchor true");
  t.expect(!three_is_cube(7, 3), "p=7 anchor false");
  t.expect(!three_is_cube(19, 2), "p=19 anchor false");
  t.note(std::to_string(cubes) + " primes with 3 a cube");
  return t;
}

// 14. Full verify run time and byte-identical output across worker counts.
Tally performance() {
  Tally t;
  const auto serial = run_cli("verify --scope all --max-p 1000 --format json --jobs 1");
  t.expect(serial.exit_code == 0, "exit code 0");
  t.expect(serial.seconds < 60.0, "single-threaded under 60 s");
  for (const char* fmt : {"text", "csv", "json"}) {
    const std::string base = std::string("verify --scope all --max-p 1000 --format ") + fmt;
    const auto a = run_cli(base + " --jobs 1");
    const auto b = run_cli(base + " --jobs 4");
    t.expect(!a.out.empty() && a.out == b.out, std::string(fmt) + " identical for --jobs 1 and 4");
  }
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << serial.seconds << " s single-threaded";
  t.note(note.str());
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Tally (*)()>> criteria = {
      {"difference count formula, p = 1 mod 3, 7..500", difference_count_formula},
      {"pair-sum identity r_k + r_(p-k) = N(k)/9, p <= 300", pair_sum_identity},
      {"far-pair parity congruence, p = 1 mod 3 <= 1000", far_pair_parity},
      {"half-range class products, p = 7 mod 12 <= 1000", half_range_products},
      {"numerator identity over all primitive roots, p <= 500", numerator_identity},
      {"cyclotomic split over primitive roots, p <= 100", cyclotomic_split},
      {"sign balance and inverse pairing, p = 1 mod 12 <= 2000", sign_balance},
      {"sign independence, p = 7 mod 12 <= 2000", sign_independence},
      {"closed-form sign rows and agreement rates", closed_form_rows},
      {"class numbers against reduced forms, p = 3 mod 4 <= 2000", class_numbers},
      {"(r, s) = (2a - b, b) link, p = 1 mod 3 <= 2000", form_link},
      {"cubing permutation sign, p = 2 mod 3, 5..1000", cubing_permutation},
      {"3 is a cube iff s = 0 mod 9, p <= 2000", three_is_cube_criterion},
      {"verify --scope all --max-p 1000 time and determinism", performance},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Tally t;
    try {
      t = fn();
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    failed += !t.ok();
    std::cout << (t.ok() ? "PASS" : "FAIL") << " [" << (index < 10 ? "0" : "") << index << "] " << name << ": "
              << t.summary() << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
