#pragma once

// Text / CSV / JSON renderings of audit results. Output is a pure function of
// the report, so identical inputs give byte-identical text.
//
// CSV theorem table columns, in order:
//   p,g,n,case,mod12,pi_a,pi_b,w,r,s,delta,alpha,beta,gamma,h,actual_sign,
//   class_size,exponent,formula_sign,agrees,plus,minus
// One row per w-class for p = 7 (mod 12) (context columns describe the class
// representative), one row per prime for p = 1 (mod 12). Empty cells mark
// fields that do not apply.

#include <string>

#include "cubeperm/verify.hpp"

namespace cubeperm {

enum class Format { Text, Csv, Json };

/// Throws InvalidArgument for anything other than text, csv, json.
Format parse_format(const std::string& name);

extern const char* const kTheoremCsvHeader;

std::string render_report(const TheoremReport& report, Format format);

std::string render_summary(const RangeSummary& summary, Format format);

}  // namespace cubeperm
