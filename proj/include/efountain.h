/* C API of the efountain library: reduced E-Fountain analysis of finite
 * semigroups behind opaque handles and error codes. All functions returning
 * ef_status leave their out-parameters untouched on failure; a detailed
 * message for the most recent failure on the calling thread is available
 * from ef_last_error(). */

#ifndef EFOUNTAIN_H
#define EFOUNTAIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ef_semigroup ef_semigroup;
typedef struct ef_report ef_report;

typedef enum ef_status {
  EF_OK = 0,
  EF_ERR_ARGUMENT,
  EF_ERR_INDEX_RANGE,
  EF_ERR_NOT_ASSOCIATIVE,
  EF_ERR_MIXED_DEGREES,
  EF_ERR_NOT_IDEMPOTENT,
  EF_ERR_NOT_E_FOUNTAIN,
  EF_ERR_NOT_REDUCED,
  EF_ERR_CONGRUENCE_REQUIRED,
  EF_ERR_NOT_EHRESMANN,
  EF_ERR_BASIS_MISMATCH,
  EF_ERR_NOT_CONTAINED,
  EF_ERR_NONINVERTIBLE_DIAGONAL,
  EF_ERR_NOT_COMPARABLE,
  EF_ERR_DEGREE_TOO_LARGE,
  EF_ERR_PARSE,
  EF_ERR_IO,
  EF_ERR_INTERNAL
} ef_status;

const char* ef_status_name(ef_status status);

/* Message for the most recent failure on this thread ("" if none). */
const char* ef_last_error(void);

/* --- construction ------------------------------------------------------ */

/* table is size*size row-major with 0-based entries. */
ef_status ef_semigroup_from_table(int size, const int* table, ef_semigroup** out);

/* Cayley table file format: first line m, then m rows of m indices,
 * optionally a "labels:" block. */
ef_status ef_semigroup_from_table_file(const char* path, ef_semigroup** out);

/* Transformation generator file: first line the degree, then one generator
 * (1-based images) per line; the closure under composition is built. */
ef_status ef_semigroup_from_generators_file(const char* path, ef_semigroup** out);

ef_status ef_semigroup_catalan(int degree, ef_semigroup** out);
ef_status ef_semigroup_rectangular_band(int n, ef_semigroup** out);
ef_status ef_semigroup_symmetric_inverse(int n, ef_semigroup** out);

void ef_semigroup_free(ef_semigroup* s);

int ef_semigroup_size(const ef_semigroup* s);
int ef_semigroup_product(const ef_semigroup* s, int a, int b);

/* Label of an element, or "" when the semigroup carries no labels. */
const char* ef_semigroup_label(const ef_semigroup* s, int a);

/* Writes the idempotent indices into out (if non-null, up to capacity) and
 * returns their total count. */
int ef_semigroup_idempotents(const ef_semigroup* s, int* out, int capacity);

/* --- analysis ---------------------------------------------------------- */

/* Runs the full analysis pipeline. e_set may be NULL with e_set_len < 0 to
 * select all idempotents. ring is "int", "rational" or "modN". */
ef_status ef_analyze(const ef_semigroup* s, const int* e_set, int e_set_len, const char* ring,
                     const char* name, ef_report** out);

/* Theorem-by-theorem verification of the Catalan monoid of this degree. */
ef_status ef_catalan_report(int degree, const char* ring, ef_report** out);

/* Sweep over all reduced E-Fountain structures of order <= max_order
 * satisfying the congruence condition. */
ef_status ef_search_report(int max_order, ef_report** out);

/* Streaming variant: line_cb is invoked once per produced report line. */
ef_status ef_search_stream(int max_order, void (*line_cb)(const char* line, void* user),
                           void* user);

/* --- reports ----------------------------------------------------------- */

const char* ef_report_structure(const ef_report* report);
int ef_report_line_count(const ef_report* report);
/* Full line text, "checkName: STATUS [witness]". */
const char* ef_report_line(const ef_report* report, int i);
int ef_report_fail_count(const ef_report* report);
void ef_report_free(ef_report* report);

/* --- dumps ------------------------------------------------------------- */

/* Category dump ("objects:" line, then "m: dom -> cod" per morphism) of the
 * category associated with (s, E). Free the string with ef_string_free. */
ef_status ef_dump_category(const ef_semigroup* s, const int* e_set, int e_set_len, char** out);

/* tri_l relation dump, one "a b" pair per line. */
ef_status ef_dump_tri_left(const ef_semigroup* s, const int* e_set, int e_set_len, char** out);

void ef_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EFOUNTAIN_H */
