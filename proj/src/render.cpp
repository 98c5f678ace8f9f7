#include "cubeperm/render.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "cubeperm/error.hpp"

namespace cubeperm {

namespace {

using json = nlohmann::ordered_json;

std::string signed_str(int s) { return s > 0 ? "+1" : "-1"; }

json exponent_json(const Rational& e) {
  if (e.is_integer()) return e.num;
  return e.str();
}

json context_fields(const PrimeContext& c) {
  json j;
  j["g"] = c.g;
  j["pi"] = {{"a", c.pi.a}, {"b", c.pi.b}};
  j["w"] = c.w;
  j["r"] = c.rep.r;
  j["s"] = c.rep.s;
  return j;
}

json report_json(const TheoremReport& rep) {
  const auto& c = rep.context;
  json j;
  j["p"] = rep.p;
  j["g"] = c.g;
  j["n"] = c.n;
  j["case"] = to_string(rep.cube_case);
  j["mod12"] = rep.mod12;
  j["pi"] = {{"a", c.pi.a}, {"b", c.pi.b}};
  j["w"] = c.w;
  j["r"] = c.rep.r;
  j["s"] = c.rep.s;
  j["delta"] = c.counts.delta;
  j["alpha"] = c.counts.alpha;
  j["beta"] = c.counts.beta;
  j["gamma"] = c.counts.gamma;
  j["h"] = c.h ? json(*c.h) : json(nullptr);
  j["actual_sign"] = rep.actual_sign;
  json rows = json::array();
  for (const auto& row : rep.classes) {
    json r = context_fields(row.context);
    json out;
    out["class_rep"] = row.class_rep;
    out["class_size"] = row.class_size;
    out["pi"] = r["pi"];
    out["w"] = r["w"];
    out["r"] = r["r"];
    out["s"] = r["s"];
    out["beta"] = row.context.counts.beta;
    out["gamma"] = row.context.counts.gamma;
    out["exponent"] = exponent_json(row.formula.exponent);
    out["sign"] = row.formula.sign ? json(*row.formula.sign) : json(nullptr);
    out["agrees"] = row.agrees;
    rows.push_back(std::move(out));
  }
  j["formula"] = std::move(rows);
  if (rep.balance) {
    j["balance"] = {{"plus", rep.balance->plus}, {"minus", rep.balance->minus}};
    j["inverse_pairing"] = rep.inverse_pairing;
    j["sign_independent"] = nullptr;
  } else {
    j["balance"] = nullptr;
    j["inverse_pairing"] = nullptr;
    j["sign_independent"] = rep.sign_independent;
  }
  return j;
}

std::string opt(const std::optional<i64>& v) { return v ? std::to_string(*v) : std::string(); }

void csv_context(std::ostringstream& os, const TheoremReport& rep, const PrimeContext& c) {
  os << rep.p << ',' << c.g << ',' << c.n << ',' << to_string(rep.cube_case) << ',' << rep.mod12 << ','
     << c.pi.a << ',' << c.pi.b << ',' << c.w << ',' << c.rep.r << ',' << c.rep.s << ',' << c.counts.delta
     << ',' << c.counts.alpha << ',' << c.counts.beta << ',' << c.counts.gamma << ',' << opt(c.h) << ','
     << signed_str(rep.actual_sign) << ',';
}

void csv_rows(std::ostringstream& os, const TheoremReport& rep) {
  if (rep.balance) {
    csv_context(os, rep, rep.context);
    os << ",,,," << rep.balance->plus << ',' << rep.balance->minus << '\n';
    return;
  }
  for (const auto& row : rep.classes) {
    csv_context(os, rep, row.context);
    os << row.class_size << ',' << row.formula.exponent.str() << ','
       << (row.formula.sign ? signed_str(*row.formula.sign) : std::string()) << ','
       << (row.agrees ? "true" : "false") << ",,\n";
  }
}

void text_report(std::ostringstream& os, const TheoremReport& rep) {
  const auto& c = rep.context;
  os << "p = " << rep.p << "  (n = " << c.n << ", p = " << rep.mod12 << " mod 12, case "
     << to_string(rep.cube_case) << ")\n";
  os << "  g = " << c.g << "  pi = " << to_string(c.pi) << "  w = " << c.w << "  r = " << c.rep.r
     << "  s = " << c.rep.s << "\n";
  os << "  delta = " << c.counts.delta << "  alpha = " << c.counts.alpha << "  beta = " << c.counts.beta
     << "  gamma = " << c.counts.gamma << "  h(-p) = " << (c.h ? std::to_string(*c.h) : "-") << "\n";
  os << "  sign(s_p(g)) = " << signed_str(rep.actual_sign) << "\n";
  if (rep.balance) {
    os << "  signs over all primitive roots: +1 x " << rep.balance->plus << ", -1 x " << rep.balance->minus
       << "; inverse pairing " << (rep.inverse_pairing ? "holds" : "FAILS") << "\n";
    return;
  }
  os << "  sign independent of g: " << (rep.sign_independent ? "yes" : "NO") << "\n";
  for (const auto& row : rep.classes) {
    os << "  class of g = " << row.class_rep << " (" << row.class_size << " roots): pi = "
       << to_string(row.context.pi) << ", s = " << row.context.rep.s << ", gamma = "
       << row.context.counts.gamma << ", exponent = " << row.formula.exponent.str() << ", formula "
       << (row.formula.sign ? signed_str(*row.formula.sign) : "non-integral") << " -> "
       << (row.agrees ? "agrees" : "disagrees") << "\n";
  }
}

const char* scope_name(Scope s) {
  switch (s) {
    case Scope::Lemmas: return "lemmas";
    case Scope::Theorem: return "theorem";
    case Scope::All: return "all";
  }
  return "all";
}

bool has_theorem(Scope s) { return s != Scope::Lemmas; }

json agreement_json(const FormulaAgreement& a) {
  return {{"primes", a.primes},
          {"rows", a.rows},
          {"rows_agree", a.rows_agree},
          {"anomalies", a.anomalies},
          {"smallest_class_agree", a.smallest_class_agree},
          {"other_class_agree", a.other_class_agree},
          {"primes_both_agree", a.primes_both_agree},
          {"primes_one_agrees", a.primes_one_agrees},
          {"primes_none_agree", a.primes_none_agree},
          {"case_i_rows", a.case_i_rows},
          {"case_i_agree", a.case_i_agree},
          {"case_ii_rows", a.case_ii_rows},
          {"case_ii_agree", a.case_ii_agree}};
}

std::string rate(i64 num, i64 den) {
  if (den == 0) return "n/a";
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << static_cast<double>(num) / static_cast<double>(den);
  return os.str();
}

}  // namespace

const char* const kTheoremCsvHeader =
    "p,g,n,case,mod12,pi_a,pi_b,w,r,s,delta,alpha,beta,gamma,h,actual_sign,class_size,exponent,"
    "formula_sign,agrees,plus,minus";

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  raise(ErrorCode::InvalidArgument, "unknown format '" + name + "' (expected text, csv or json)");
}

std::string render_report(const TheoremReport& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      i64 agree = 0;
      for (const auto& row : report.classes) agree += row.agrees;
      json j;
      j["rows"] = json::array({report_json(report)});
      j["summary"] = {{"primes", 1},
                      {"formula_rows", static_cast<i64>(report.classes.size())},
                      {"formula_agree", agree}};
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << kTheoremCsvHeader << '\n';
      csv_rows(os, report);
      break;
    case Format::Text:
      text_report(os, report);
      break;
  }
  return os.str();
}

std::string render_summary(const RangeSummary& summary, Format format) {
  std::ostringstream os;
  const auto& a = summary.agreement;
  switch (format) {
    case Format::Json: {
      json j;
      j["rows"] = json::array();
      for (const auto& rep : summary.rows) j["rows"].push_back(report_json(rep));
      json suites = json::array();
      for (const auto& t : summary.suites) {
        json first = nullptr;
        if (t.first_failure_p) first = {{"p", *t.first_failure_p}, {"detail", t.first_failure_detail}};
        suites.push_back({{"name", t.name},
                          {"bound", t.bound},
                          {"checked", t.checked},
                          {"passed", t.passed},
                          {"failed", t.failed()},
                          {"finding", t.finding},
                          {"first_failure", first}});
      }
      j["summary"] = {{"p_min", summary.p_min},
                      {"p_max", summary.p_max},
                      {"scope", scope_name(summary.scope)},
                      {"primes_audited", static_cast<i64>(summary.rows.size())},
                      {"check_failures", summary.check_failures()},
                      {"suites", std::move(suites)},
                      {"closed_form_agreement", agreement_json(a)}};
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      if (has_theorem(summary.scope)) {
        os << kTheoremCsvHeader << '\n';
        for (const auto& rep : summary.rows) csv_rows(os, rep);
        os << '\n';
      }
      os << "suite,bound,checked,passed,failed,finding,first_failure_p\n";
      for (const auto& t : summary.suites) {
        os << t.name << ',' << t.bound << ',' << t.checked << ',' << t.passed << ',' << t.failed() << ','
           << (t.finding ? "true" : "false") << ',' << opt(t.first_failure_p) << '\n';
      }
      if (has_theorem(summary.scope)) {
        os << "\nmetric,value\n";
        const json metrics = agreement_json(a);
        for (const auto& [key, value] : metrics.items()) os << key << ',' << value.get<i64>() << '\n';
      }
      break;
    }
    case Format::Text: {
      os << "audit of primes in [" << summary.p_min << ", " << summary.p_max << "], scope "
         << scope_name(summary.scope) << "\n\n";
      if (has_theorem(summary.scope)) {
        for (const auto& rep : summary.rows) text_report(os, rep);
        os << '\n';
      }
      os << std::left << std::setw(36) << "suite" << std::right << std::setw(7) << "bound" << std::setw(9)
         << "checked" << std::setw(8) << "passed" << std::setw(8) << "failed" << '\n';
      for (const auto& t : summary.suites) {
        os << std::left << std::setw(36) << t.name + (t.finding ? " (finding)" : "") << std::right
           << std::setw(7) << t.bound << std::setw(9) << t.checked << std::setw(8) << t.passed << std::setw(8)
           << t.failed() << '\n';
        if (t.first_failure_p)
          os << "    first failure at p = " << *t.first_failure_p << ": " << t.first_failure_detail << '\n';
      }
      if (has_theorem(summary.scope)) {
        os << "\nclosed-form sign agreement: " << a.rows_agree << " / " << a.rows << " class rows ("
           << rate(a.rows_agree, a.rows) << ")\n";
        os << "  class of smallest root: " << a.smallest_class_agree << " / " << a.primes << " ("
           << rate(a.smallest_class_agree, a.primes) << ")\n";
        os << "  other class:            " << a.other_class_agree << " / " << a.primes << " ("
           << rate(a.other_class_agree, a.primes) << ")\n";
        os << "  primes with both / one / no class agreeing: " << a.primes_both_agree << " / "
           << a.primes_one_agrees << " / " << a.primes_none_agree << "\n";
        os << "  case I rows: " << a.case_i_agree << " / " << a.case_i_rows << ", case II rows: "
           << a.case_ii_agree << " / " << a.case_ii_rows << ", non-integral exponents: " << a.anomalies
           << "\n";
      }
      os << "\ncheck failures: " << summary.check_failures() << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace cubeperm
