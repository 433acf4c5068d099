#ifndef SCL_SCL_H
#define SCL_SCL_H

/* C interface to libscl. Every fallible call returns an scl_status; on
 * failure the thread's last error message is set and outputs are untouched.
 * Strings handed out by the library are freed with scl_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(SCL_BUILDING_LIBRARY)
#define SCL_API __attribute__((visibility("default")))
#else
#define SCL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct scl_term scl_term;
typedef struct scl_form scl_form;
typedef struct scl_report scl_report;

typedef enum scl_status {
    SCL_OK = 0,
    SCL_ERR_PARSE,
    SCL_ERR_ATOM_CASE,
    SCL_ERR_UNSUPPORTED,
    SCL_ERR_OPEN_TERM,
    SCL_ERR_DEPTH,
    SCL_ERR_UNBOUND_ATOM,
    SCL_ERR_MISSING_BINDING,
    SCL_ERR_SIGNATURE,
    SCL_ERR_INVARIANT,
    SCL_ERR_USAGE,
    SCL_ERR_NOT_FOUND,
    SCL_ERR_INTERNAL
} scl_status;

typedef enum scl_congruence { SCL_FREE = 0, SCL_MEM = 1 } scl_congruence;

typedef struct scl_mode {
    scl_congruence congruence;
    int three_valued;
} scl_mode;

typedef enum scl_style {
    SCL_STYLE_ASCII = 0,
    SCL_STYLE_UNICODE,
    SCL_STYLE_JSON,
    SCL_STYLE_DOT /* forms only */
} scl_style;

typedef enum scl_truth { SCL_TRUE = 0, SCL_FALSE, SCL_UNDEF } scl_truth;

typedef enum scl_verdict {
    SCL_PASSED_FRESH_ATOMS = 0,
    SCL_PASSED_EXHAUSTIVE,
    SCL_REFUTED_FRESH_ATOMS,
    SCL_REFUTED_EXHAUSTIVE
} scl_verdict;

SCL_API const char* scl_version(void);
SCL_API const char* scl_status_name(scl_status s);
/* Message of the last failed call on this thread; "" if none. */
SCL_API const char* scl_last_error(void);
/* Line and column of the last parse or atom-case error; 0 otherwise. */
SCL_API void scl_last_error_position(size_t* line, size_t* column);
SCL_API void scl_string_free(char* s);

/* Terms */
SCL_API scl_status scl_parse(const char* text, scl_term** out);
SCL_API void scl_term_free(scl_term* t);
SCL_API scl_status scl_term_print(const scl_term* t, scl_style style, int primes, char** out);
SCL_API int scl_term_is_closed(const scl_term* t);
SCL_API scl_status scl_dual(const scl_term* t, scl_term** out);
SCL_API scl_status scl_to_core(const scl_term* t, scl_term** out);
SCL_API scl_status scl_encode_nand(const scl_term* t, scl_term** out);
SCL_API scl_status scl_decode_nand(const scl_term* t, scl_term** out);

/* Normal forms: a basic form (free), a mem-basic form (mem) or an mUNBF. */
SCL_API scl_status scl_normalize(const scl_term* t, scl_mode mode, scl_form** out);
/* NAND-signature terms go through the direct normalizer, which is checked
 * against the mem-basic route; other terms take the mem-basic route. */
SCL_API scl_status scl_munbf(const scl_term* t, scl_form** out);
SCL_API void scl_form_free(scl_form* f);
SCL_API scl_status scl_form_print(const scl_form* f, scl_style style, int primes, char** out);
SCL_API int scl_form_equal(const scl_form* a, const scl_form* b);

SCL_API scl_status scl_equiv(const scl_term* p, const scl_term* q, scl_mode mode, int* out);
/* valuation: "a=1,b=0" */
SCL_API scl_status scl_eval(const scl_term* t, const char* valuation, scl_truth* out);

/* Axiom tables */
SCL_API size_t scl_table_count(void);
/* NULL when i is out of range. */
SCL_API const char* scl_table_name(size_t i);
SCL_API scl_status scl_table_info(const char* name, const char** description, size_t* schemas, scl_mode* mode,
                                  int* expect_refuted);

typedef struct scl_check_options {
    int exhaustive; /* 0: fresh atoms only */
    int k;          /* atoms for the exhaustive sweep, 1..3 */
    uint64_t budget;
    int override_mode; /* use `mode` instead of each schema's intended mode */
    scl_mode mode;
    int three_valued; /* admit U even where the table does not ask for it */
} scl_check_options;

SCL_API scl_check_options scl_check_defaults(void);
SCL_API scl_status scl_check_table(const char* name, const scl_check_options* options, scl_report** out);
SCL_API void scl_report_free(scl_report* r);
SCL_API size_t scl_report_size(const scl_report* r);
SCL_API int scl_report_expect_refuted(const scl_report* r);

typedef struct scl_report_entry {
    const char* name;
    const char* lhs; /* schema sides, ascii */
    const char* rhs;
    scl_verdict verdict;
    scl_mode mode;
    int k;
    uint64_t count;
    const char* note;    /* "" if none */
    const char* witness; /* "X = a, Y = b"; NULL unless refuted */
    const char* witness_lhs_form;
    const char* witness_rhs_form;
} scl_report_entry;

/* Pointers stay valid until the report is freed. */
SCL_API scl_status scl_report_entry_at(const scl_report* r, size_t i, scl_report_entry* out);

#ifdef __cplusplus
}
#endif

#endif
