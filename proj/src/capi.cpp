#include "efountain.h"

#include <cstring>
#include <string>

#include "efountain/analysis.hpp"
#include "efountain/catalan.hpp"
#include "efountain/category.hpp"
#include "efountain/corpus.hpp"
#include "efountain/fountain.hpp"
#include "efountain/io.hpp"
#include "efountain/orders.hpp"

using namespace efountain;

struct ef_semigroup {
  FiniteSemigroup impl;
};

struct ef_report {
  Report impl;
  std::vector<std::string> rendered;
};

namespace {

thread_local std::string g_last_error;

ef_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return EF_ERR_ARGUMENT;
    case ErrorCode::index_out_of_range: return EF_ERR_INDEX_RANGE;
    case ErrorCode::non_associative: return EF_ERR_NOT_ASSOCIATIVE;
    case ErrorCode::mixed_degrees: return EF_ERR_MIXED_DEGREES;
    case ErrorCode::not_idempotent: return EF_ERR_NOT_IDEMPOTENT;
    case ErrorCode::not_e_fountain: return EF_ERR_NOT_E_FOUNTAIN;
    case ErrorCode::not_reduced: return EF_ERR_NOT_REDUCED;
    case ErrorCode::congruence_required: return EF_ERR_CONGRUENCE_REQUIRED;
    case ErrorCode::not_ehresmann: return EF_ERR_NOT_EHRESMANN;
    case ErrorCode::basis_mismatch: return EF_ERR_BASIS_MISMATCH;
    case ErrorCode::not_contained: return EF_ERR_NOT_CONTAINED;
    case ErrorCode::non_invertible_diagonal: return EF_ERR_NONINVERTIBLE_DIAGONAL;
    case ErrorCode::not_comparable: return EF_ERR_NOT_COMPARABLE;
    case ErrorCode::degree_too_large: return EF_ERR_DEGREE_TOO_LARGE;
    case ErrorCode::parse_error: return EF_ERR_PARSE;
    case ErrorCode::io_error: return EF_ERR_IO;
    case ErrorCode::internal_mismatch:
    case ErrorCode::axiom_failure:
    case ErrorCode::theorem_violation: return EF_ERR_INTERNAL;
  }
  return EF_ERR_INTERNAL;
}

template <typename Fn>
ef_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return EF_OK;
  } catch (const Error& err) {
    g_last_error = err.what();
    return status_of(err.code());
  } catch (const std::exception& ex) {
    g_last_error = ex.what();
    return EF_ERR_INTERNAL;
  }
}

IndexSet resolve_e_set(const FiniteSemigroup& s, const int* e_set, int e_set_len) {
  if (e_set == nullptr || e_set_len < 0) return idempotents(s);
  return IndexSet(e_set, e_set + e_set_len);
}

ef_report* wrap_report(Report&& report) {
  auto* out = new ef_report{std::move(report), {}};
  out->rendered.reserve(out->impl.lines.size());
  for (const auto& line : out->impl.lines) {
    std::string text = line.name + ": " + check_status_name(line.status);
    if (!line.witness.empty()) text += " [" + line.witness + "]";
    out->rendered.push_back(std::move(text));
  }
  return out;
}

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ef_status_name(ef_status status) {
  switch (status) {
    case EF_OK: return "EF_OK";
    case EF_ERR_ARGUMENT: return "EF_ERR_ARGUMENT";
    case EF_ERR_INDEX_RANGE: return "EF_ERR_INDEX_RANGE";
    case EF_ERR_NOT_ASSOCIATIVE: return "EF_ERR_NOT_ASSOCIATIVE";
    case EF_ERR_MIXED_DEGREES: return "EF_ERR_MIXED_DEGREES";
    case EF_ERR_NOT_IDEMPOTENT: return "EF_ERR_NOT_IDEMPOTENT";
    case EF_ERR_NOT_E_FOUNTAIN: return "EF_ERR_NOT_E_FOUNTAIN";
    case EF_ERR_NOT_REDUCED: return "EF_ERR_NOT_REDUCED";
    case EF_ERR_CONGRUENCE_REQUIRED: return "EF_ERR_CONGRUENCE_REQUIRED";
    case EF_ERR_NOT_EHRESMANN: return "EF_ERR_NOT_EHRESMANN";
    case EF_ERR_BASIS_MISMATCH: return "EF_ERR_BASIS_MISMATCH";
    case EF_ERR_NOT_CONTAINED: return "EF_ERR_NOT_CONTAINED";
    case EF_ERR_NONINVERTIBLE_DIAGONAL: return "EF_ERR_NONINVERTIBLE_DIAGONAL";
    case EF_ERR_NOT_COMPARABLE: return "EF_ERR_NOT_COMPARABLE";
    case EF_ERR_DEGREE_TOO_LARGE: return "EF_ERR_DEGREE_TOO_LARGE";
    case EF_ERR_PARSE: return "EF_ERR_PARSE";
    case EF_ERR_IO: return "EF_ERR_IO";
    case EF_ERR_INTERNAL: return "EF_ERR_INTERNAL";
  }
  return "EF_ERR_UNKNOWN";
}

const char* ef_last_error(void) { return g_last_error.c_str(); }

ef_status ef_semigroup_from_table(int size, const int* table, ef_semigroup** out) {
  return guarded([&] {
    if (size < 1 || table == nullptr || out == nullptr)
      fail(ErrorCode::invalid_argument, "bad table arguments");
    std::vector<std::vector<Index>> rows(size, std::vector<Index>(size));
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) rows[a][b] = table[a * size + b];
    *out = new ef_semigroup{from_cayley_table(rows)};
  });
}

ef_status ef_semigroup_from_table_file(const char* path, ef_semigroup** out) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) fail(ErrorCode::invalid_argument, "null argument");
    *out = new ef_semigroup{read_cayley_table_file(path)};
  });
}

ef_status ef_semigroup_from_generators_file(const char* path, ef_semigroup** out) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) fail(ErrorCode::invalid_argument, "null argument");
    *out = new ef_semigroup{read_transformations_file(path)};
  });
}

ef_status ef_semigroup_catalan(int degree, ef_semigroup** out) {
  return guarded([&] {
    if (out == nullptr) fail(ErrorCode::invalid_argument, "null out");
    *out = new ef_semigroup{generate_catalan(degree).semigroup};
  });
}

ef_status ef_semigroup_rectangular_band(int n, ef_semigroup** out) {
  return guarded([&] {
    if (out == nullptr) fail(ErrorCode::invalid_argument, "null out");
    *out = new ef_semigroup{rectangular_band(n).semigroup};
  });
}

ef_status ef_semigroup_symmetric_inverse(int n, ef_semigroup** out) {
  return guarded([&] {
    if (out == nullptr) fail(ErrorCode::invalid_argument, "null out");
    *out = new ef_semigroup{symmetric_inverse_monoid(n).semigroup};
  });
}

void ef_semigroup_free(ef_semigroup* s) { delete s; }

int ef_semigroup_size(const ef_semigroup* s) { return s == nullptr ? 0 : s->impl.size(); }

int ef_semigroup_product(const ef_semigroup* s, int a, int b) {
  if (s == nullptr || a < 0 || b < 0 || a >= s->impl.size() || b >= s->impl.size()) return -1;
  return s->impl.product(a, b);
}

const char* ef_semigroup_label(const ef_semigroup* s, int a) {
  if (s == nullptr || a < 0 || a >= s->impl.size() || !s->impl.has_labels()) return "";
  return s->impl.label(a).c_str();
}

int ef_semigroup_idempotents(const ef_semigroup* s, int* out, int capacity) {
  if (s == nullptr) return 0;
  const IndexSet idem = idempotents(s->impl);
  if (out != nullptr)
    for (int i = 0; i < capacity && i < static_cast<int>(idem.size()); ++i) out[i] = idem[i];
  return static_cast<int>(idem.size());
}

ef_status ef_analyze(const ef_semigroup* s, const int* e_set, int e_set_len, const char* ring,
                     const char* name, ef_report** out) {
  return guarded([&] {
    if (s == nullptr || out == nullptr) fail(ErrorCode::invalid_argument, "null argument");
    const RingSpec spec = RingSpec::parse(ring == nullptr ? "int" : ring);
    const IndexSet e = resolve_e_set(s->impl, e_set, e_set_len);
    *out = wrap_report(
        analyze_structure(s->impl, e, spec, name == nullptr ? "semigroup" : name));
  });
}

ef_status ef_catalan_report(int degree, const char* ring, ef_report** out) {
  return guarded([&] {
    if (out == nullptr) fail(ErrorCode::invalid_argument, "null out");
    const RingSpec spec = RingSpec::parse(ring == nullptr ? "int" : ring);
    *out = wrap_report(catalan_report(degree, spec));
  });
}

ef_status ef_search_report(int max_order, ef_report** out) {
  return guarded([&] {
    if (out == nullptr) fail(ErrorCode::invalid_argument, "null out");
    *out = wrap_report(search_report(max_order));
  });
}

ef_status ef_search_stream(int max_order, void (*line_cb)(const char* line, void* user),
                           void* user) {
  return guarded([&] {
    if (line_cb == nullptr) fail(ErrorCode::invalid_argument, "null callback");
    search_report(max_order, [&](const std::string& line) { line_cb(line.c_str(), user); });
  });
}

const char* ef_report_structure(const ef_report* report) {
  return report == nullptr ? "" : report->impl.structure_name.c_str();
}

int ef_report_line_count(const ef_report* report) {
  return report == nullptr ? 0 : static_cast<int>(report->rendered.size());
}

const char* ef_report_line(const ef_report* report, int i) {
  if (report == nullptr || i < 0 || i >= static_cast<int>(report->rendered.size())) return "";
  return report->rendered[i].c_str();
}

int ef_report_fail_count(const ef_report* report) {
  return report == nullptr ? 0 : report->impl.fail_count();
}

void ef_report_free(ef_report* report) { delete report; }

ef_status ef_dump_category(const ef_semigroup* s, const int* e_set, int e_set_len, char** out) {
  return guarded([&] {
    if (s == nullptr || out == nullptr) fail(ErrorCode::invalid_argument, "null argument");
    const EFountainStructure f =
        require_reduced_e_fountain(s->impl, resolve_e_set(s->impl, e_set, e_set_len));
    *out = dup_string(dump_category(build_category(f)));
  });
}

ef_status ef_dump_tri_left(const ef_semigroup* s, const int* e_set, int e_set_len, char** out) {
  return guarded([&] {
    if (s == nullptr || out == nullptr) fail(ErrorCode::invalid_argument, "null argument");
    const EFountainStructure f =
        require_reduced_e_fountain(s->impl, resolve_e_set(s->impl, e_set, e_set_len));
    *out = dup_string(dump_relation(tri_left(f)));
  });
}

void ef_string_free(char* text) { delete[] text; }

}  // extern "C"
