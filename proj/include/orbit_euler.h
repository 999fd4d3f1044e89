#ifndef ORBIT_EULER_H
#define ORBIT_EULER_H

#include <stddef.h>
#include <stdint.h>

#if defined(ORBIT_EULER_BUILDING)
#define OE_API __attribute__((visibility("default")))
#else
#define OE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct oe_group oe_group;

typedef enum oe_status {
  OE_OK = 0,
  OE_PARSE_ERROR = 1,
  OE_CAP_EXCEEDED = 2,
  OE_NOT_INVERTIBLE = 3,
  OE_NOT_NORMAL = 4,
  OE_NOT_P_SUBGROUP = 5,
  OE_NOT_CLOSED = 6,
  OE_NO_WEIGHTING = 7,
  OE_NO_EULER_CHARACTERISTIC = 8,
  OE_NON_INTEGRAL = 9,
  OE_NON_EXACT_DIVISION = 10,
  OE_NOT_LIE_CATALOG = 11,
  OE_NOT_A_DIVISOR = 12,
  OE_P_DIVIDES_Q = 13,
  OE_INVALID_ARGUMENT = 14,
  OE_INCONSISTENT = 15,
  OE_NULL_ARGUMENT = 90,
  OE_OUT_OF_MEMORY = 91,
  OE_INTERNAL = 99
} oe_status;

typedef enum oe_format { OE_FORMAT_TEXT = 0, OE_FORMAT_JSON = 1, OE_FORMAT_CSV = 2 } oe_format;

typedef enum oe_count_method {
  OE_COUNT_BRUTE = 0,   /* g^{|G|_p} = e, element by element */
  OE_COUNT_CYCLIC = 1,  /* sum over cyclic p-subgroups */
  OE_COUNT_EULER = 2    /* sum over p-radical classes */
} oe_count_method;

/* Selection bits for oe_verify_group. */
#define OE_CHECK_COUNTS 0x01u
#define OE_CHECK_FROBENIUS 0x02u
#define OE_CHECK_BROWN 0x04u
#define OE_CHECK_RADICAL 0x08u
#define OE_CHECK_CHIOG 0x10u
#define OE_CHECK_STEINBERG 0x20u
#define OE_CHECK_DEFAULT 0x1Fu

typedef enum oe_qid_family {
  OE_QID_A = 0,
  OE_QID_B = 1,
  OE_QID_2A_EVEN = 2,
  OE_QID_2A_ODD = 3
} oe_qid_family;

OE_API const char* oe_version(void);
OE_API const char* oe_status_name(oe_status s);
/* Message for the most recent failure on this thread; "" if none. */
OE_API const char* oe_last_error(void);
/* Order cap from ORBIT_EULER_CAP, or 4096. */
OE_API size_t oe_default_cap(void);

/* Strings returned through char** are owned by the caller. */
OE_API void oe_string_free(char* s);

/* cap 0 means oe_default_cap(). */
OE_API oe_status oe_group_create(const char* spec, size_t cap, oe_group** out);
OE_API void oe_group_destroy(oe_group* g);
OE_API size_t oe_group_order(const oe_group* g);
OE_API const char* oe_group_spec(const oe_group* g);
OE_API oe_status oe_group_multiply(const oe_group* g, uint32_t a, uint32_t b, uint32_t* out);
OE_API oe_status oe_group_element_order(const oe_group* g, uint32_t a, uint32_t* out);

OE_API oe_status oe_count_p_singular(const oe_group* g, uint32_t p, oe_count_method method,
                                     uint64_t* out);
/* Conjugacy classes of elements of p-power order. */
OE_API oe_status oe_count_p_singular_classes(const oe_group* g, uint32_t p, uint64_t* out);

/* Full p-local report. all_passed may be NULL. */
OE_API oe_status oe_report(const oe_group* g, uint32_t p, oe_format format, char** out,
                           int* all_passed);

/* Runs the selected checks; detail_json (may be NULL) receives
   {"group", "prime", "checks": {name: {"passed", "witnesses"}}}. */
OE_API oe_status oe_verify_group(const oe_group* g, uint32_t p, unsigned checks, int* passed,
                                 char** detail_json);

/* Parabolic verification for GL/SL catalog groups in defining characteristic. */
OE_API oe_status oe_verify_lie(const oe_group* g, uint32_t p, oe_format format, char** out,
                               int* passed);

/* literal != 0 selects the as-displayed reading for the twisted families. */
OE_API oe_status oe_qidentity(oe_qid_family family, uint32_t m, int literal, oe_format format,
                              char** out, int* passed);

/* Decimal strings. */
OE_API oe_status oe_egf_p_singular(uint32_t n, uint32_t p, char** out);
OE_API oe_status oe_cross_char_class_count(uint32_t n, uint64_t q, uint32_t p, char** out);
/* By walking all n! permutations; no Cayley table. */
OE_API oe_status oe_count_p_singular_symmetric(uint32_t n, uint32_t p, uint64_t* out);

OE_API size_t oe_catalog_size(void);
OE_API const char* oe_catalog_entry(size_t i);
OE_API oe_status oe_catalog_order(const char* spec, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif
