#include "cubeperm/cubeperm.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "cubeperm/binform.hpp"
#include "cubeperm/error.hpp"
#include "cubeperm/permsign.hpp"
#include "cubeperm/render.hpp"
#include "cubeperm/verify.hpp"

struct cp_context {
  cubeperm::PrimeContext value;
};

struct cp_report {
  cubeperm::TheoremReport value;
};

struct cp_summary {
  cubeperm::RangeSummary value;
};

namespace {

thread_local std::string last_error;

cp_status status_of(cubeperm::ErrorCode code) {
  using cubeperm::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return CP_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotPrime: return CP_ERR_NOT_PRIME;
    case ErrorCode::WrongResidueClass: return CP_ERR_WRONG_RESIDUE_CLASS;
    case ErrorCode::NotPrimitiveRoot: return CP_ERR_NOT_PRIMITIVE_ROOT;
    case ErrorCode::Overflow: return CP_ERR_OVERFLOW;
    case ErrorCode::ZeroDivisor: return CP_ERR_ZERO_DIVISOR;
    case ErrorCode::NotCoprimeToThree: return CP_ERR_NOT_COPRIME_TO_THREE;
    case ErrorCode::NotABijection: return CP_ERR_NOT_A_BIJECTION;
    case ErrorCode::ZeroK: return CP_ERR_ZERO_K;
    case ErrorCode::NoRepresentation: return CP_ERR_NO_REPRESENTATION;
    case ErrorCode::NormalizationFailure: return CP_ERR_NORMALIZATION;
    case ErrorCode::InternalInconsistency: return CP_ERR_INTERNAL;
  }
  return CP_ERR_INTERNAL;
}

template <typename F>
cp_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return CP_OK;
  } catch (const cubeperm::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CP_ERR_INTERNAL;
  }
}

cp_status null_argument(const char* name) {
  last_error = std::string(name) + " must not be NULL";
  return CP_ERR_INVALID_ARGUMENT;
}

cubeperm::Format to_format(cp_format f) {
  switch (f) {
    case CP_FORMAT_TEXT: return cubeperm::Format::Text;
    case CP_FORMAT_CSV: return cubeperm::Format::Csv;
    case CP_FORMAT_JSON: return cubeperm::Format::Json;
  }
  cubeperm::raise(cubeperm::ErrorCode::InvalidArgument, "unknown output format");
}

cp_status copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = text.size();
  if (!buf) return CP_OK;
  if (cap < text.size() + 1) {
    last_error = "buffer too small: need " + std::to_string(text.size() + 1) + " bytes";
    return CP_ERR_BUFFER_TOO_SMALL;
  }
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  return CP_OK;
}

std::optional<int64_t> optional_g(int64_t g) {
  if (g == 0) return std::nullopt;
  return g;
}

}  // namespace

extern "C" {

const char* cp_status_string(cp_status status) {
  switch (status) {
    case CP_OK: return "ok";
    case CP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CP_ERR_NOT_PRIME: return "not prime";
    case CP_ERR_WRONG_RESIDUE_CLASS: return "wrong residue class";
    case CP_ERR_NOT_PRIMITIVE_ROOT: return "not a primitive root";
    case CP_ERR_OVERFLOW: return "overflow";
    case CP_ERR_ZERO_DIVISOR: return "zero divisor";
    case CP_ERR_NOT_COPRIME_TO_THREE: return "not coprime to three";
    case CP_ERR_NOT_A_BIJECTION: return "not a bijection";
    case CP_ERR_ZERO_K: return "zero k";
    case CP_ERR_NO_REPRESENTATION: return "no representation";
    case CP_ERR_NORMALIZATION: return "normalization failure";
    case CP_ERR_INTERNAL: return "internal error";
    case CP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
  }
  return "unknown status";
}

const char* cp_last_error(void) { return last_error.c_str(); }

cp_status cp_is_primitive_root(int64_t p, int64_t g, int* out) {
  if (!out) return null_argument("out");
  return guard([&] { *out = cubeperm::is_primitive_root(g, p) ? 1 : 0; });
}

cp_status cp_smallest_primitive_root(int64_t p, int64_t* out) {
  if (!out) return null_argument("out");
  return guard([&] { *out = cubeperm::smallest_primitive_root(p); });
}

cp_status cp_cube_permutation_sign(int64_t p, int64_t g, int* out_sign) {
  if (!out_sign) return null_argument("out_sign");
  return guard([&] { *out_sign = cubeperm::build_cube_permutation(p, g).sign; });
}

cp_status cp_cubic_symbol(int64_t k, int64_t pi_a, int64_t pi_b, int64_t p, int* out_exponent) {
  if (!out_exponent) return null_argument("out_exponent");
  return guard([&] {
    const auto s = cubeperm::cubic_symbol(k, cubeperm::EisensteinInt{pi_a, pi_b}, p);
    *out_exponent = s.is_zero() ? -1 : s.exponent();
  });
}

cp_status cp_class_number(int64_t p, int64_t* out_h, int64_t* out_oracle) {
  if (!out_h) return null_argument("out_h");
  return guard([&] {
    *out_h = cubeperm::class_number(p);
    if (out_oracle) *out_oracle = cubeperm::class_number_forms_oracle(p);
  });
}

cp_status cp_context_create(int64_t p, int64_t g, cp_context** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] { *out = new cp_context{cubeperm::build_context(p, optional_g(g))}; });
}

cp_status cp_context_get(const cp_context* ctx, cp_context_fields* out) {
  if (!ctx) return null_argument("ctx");
  if (!out) return null_argument("out");
  const auto& c = ctx->value;
  *out = cp_context_fields{c.p,       c.n,          c.g,          c.pi.a,       c.pi.b,
                           c.w,       c.rep.r,      c.rep.s,      c.counts.delta, c.counts.alpha,
                           c.counts.beta, c.counts.gamma, c.h.value_or(0), c.h ? 1 : 0};
  return CP_OK;
}

void cp_context_destroy(cp_context* ctx) { delete ctx; }

cp_status cp_report_create(int64_t p, int64_t g, cp_report** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] { *out = new cp_report{cubeperm::audit_prime(p, optional_g(g))}; });
}

cp_status cp_report_actual_sign(const cp_report* report, int* out_sign) {
  if (!report) return null_argument("report");
  if (!out_sign) return null_argument("out_sign");
  *out_sign = report->value.actual_sign;
  return CP_OK;
}

cp_status cp_report_render(const cp_report* report, cp_format format, char* buf, size_t cap, size_t* needed) {
  if (!report) return null_argument("report");
  std::string text;
  const cp_status st = guard([&] { text = cubeperm::render_report(report->value, to_format(format)); });
  return st == CP_OK ? copy_out(text, buf, cap, needed) : st;
}

void cp_report_destroy(cp_report* report) { delete report; }

cp_status cp_verify_run(const cp_verify_options* options, cp_summary** out) {
  if (!options) return null_argument("options");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    cubeperm::AuditOptions opts;
    switch (options->scope) {
      case CP_SCOPE_LEMMAS: opts.scope = cubeperm::Scope::Lemmas; break;
      case CP_SCOPE_THEOREM: opts.scope = cubeperm::Scope::Theorem; break;
      case CP_SCOPE_ALL: opts.scope = cubeperm::Scope::All; break;
      default: cubeperm::raise(cubeperm::ErrorCode::InvalidArgument, "unknown scope");
    }
    opts.jobs = options->jobs;
    opts.uncapped = options->uncapped != 0;
    *out = new cp_summary{cubeperm::audit_range(options->p_min, options->p_max, opts)};
  });
}

cp_status cp_summary_check_failures(const cp_summary* summary, int64_t* out) {
  if (!summary) return null_argument("summary");
  if (!out) return null_argument("out");
  *out = summary->value.check_failures();
  return CP_OK;
}

cp_status cp_summary_render(const cp_summary* summary, cp_format format, char* buf, size_t cap,
                            size_t* needed) {
  if (!summary) return null_argument("summary");
  std::string text;
  const cp_status st = guard([&] { text = cubeperm::render_summary(summary->value, to_format(format)); });
  return st == CP_OK ? copy_out(text, buf, cap, needed) : st;
}

void cp_summary_destroy(cp_summary* summary) { delete summary; }

}  // extern "C"
