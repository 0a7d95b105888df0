#pragma once

#include <vector>

namespace oscint::paper {

/// Published table rows, transcribed verbatim; the acceptance suite and the
/// --compare flag measure digit agreement against these strings.

struct LabeledValue {
  long label;
  const char* value;
};

struct MiRow {
  int n;
  long s;
  const char* re;
  const char* im;
};

struct LongmanRow {
  long points;
  int l;
  const char* re;
  const char* im;
};

struct ContourRow {
  long s;
  int big_n;
  const char* tau;
  const char* re;
  const char* im;
};

struct Tab8Row {
  int n;
  const char* re;
  const char* im;
};

struct VksRow {
  int k;
  int s;
  const char* re;
  const char* im;
};

struct V1sRow {
  int s;
  const char* re;
  const char* im;
};

const std::vector<LabeledValue>& tab1();  // direct partial sums
const std::vector<LabeledValue>& tab2();  // Euler resummation
const std::vector<LabeledValue>& tab3();  // CVZ acceleration
const std::vector<MiRow>& tab4();         // partial integration + y-map
const std::vector<MiRow>& tab5();         // exponential scaling
const std::vector<LongmanRow>& tab6();    // Longman splitting
const std::vector<Tab8Row>& tab8();       // logarithmic expansion
const std::vector<VksRow>& tab_vks();     // V(pi,k,s), k >= 2
const std::vector<V1sRow>& tab_v1s();     // V(pi,1,s), s = 1..6
const std::vector<ContourRow>& tab_contour();

/// Summary value of M_I and related constants.
const char* mi_summary_re();
const char* mi_summary_im();
const char* mi_abs_10();
const char* im_v22_30();
const char* sin_log_0inf_25();  // -(pi/2)(gamma + log pi)
const char* sin_log_01_13();    // int_0^1 sin(pi x) log x / x dx

}  // namespace oscint::paper
