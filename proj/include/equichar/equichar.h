/* C interface to the equichar library. All handles are opaque; every
 * function reports failure through an eqc_status and leaves a message
 * retrievable with eqc_last_error() on the calling thread. */
#ifndef EQUICHAR_H
#define EQUICHAR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EQC_API __declspec(dllexport)
#else
#define EQC_API __attribute__((visibility("default")))
#endif

typedef enum eqc_status {
    EQC_OK = 0,                 /* computed, or verified true */
    EQC_NEGATIVE = 1,           /* a verification returned false; the report is still produced */
    EQC_INPUT_ERROR = 2,        /* unreadable or malformed input, bad arguments */
    EQC_PRECONDITION_ERROR = 3, /* e.g. non-admissible action, K not a p-group */
    EQC_INTERNAL_ERROR = 4      /* resource limits, overflow, bugs */
} eqc_status;

typedef struct eqc_complex eqc_complex;
typedef struct eqc_group eqc_group;
typedef struct eqc_report eqc_report;

/* Arguments for eqc_run. Zero or NULL means "not given". */
typedef struct eqc_args {
    const eqc_complex* complex;
    const eqc_group* group;
    const eqc_complex* pattern;
    int64_t p, q, m, n;
    int force;
} eqc_args;

EQC_API const char* eqc_version(void);
EQC_API const char* eqc_last_error(void);
EQC_API void eqc_args_init(eqc_args* args);

EQC_API eqc_status eqc_complex_load(const char* path, eqc_complex** out);
EQC_API eqc_status eqc_complex_parse(const char* json, eqc_complex** out);
EQC_API void eqc_complex_free(eqc_complex* c);
EQC_API size_t eqc_complex_vertex_count(const eqc_complex* c);
EQC_API int eqc_complex_dimension(const eqc_complex* c);
EQC_API int64_t eqc_complex_euler_characteristic(const eqc_complex* c);

EQC_API eqc_status eqc_group_load(const char* path, eqc_group** out);
EQC_API eqc_status eqc_group_parse(const char* json, eqc_group** out);
EQC_API void eqc_group_free(eqc_group* g);
/* Order of the group on its own points; fails for groups beyond the order bound. */
EQC_API eqc_status eqc_group_order(const eqc_group* g, size_t* order);

EQC_API size_t eqc_command_count(void);
EQC_API const char* eqc_command_name(size_t i);

/* Runs a subcommand such as "euler-class". On EQC_OK and EQC_NEGATIVE,
 * *out receives a report the caller frees; otherwise *out is NULL. */
EQC_API eqc_status eqc_run(const char* command, const eqc_args* args, eqc_report** out);

EQC_API eqc_status eqc_report_verdict(const eqc_report* r);
EQC_API const char* eqc_report_text(const eqc_report* r);
EQC_API const char* eqc_report_json(const eqc_report* r);
EQC_API void eqc_report_free(eqc_report* r);

#ifdef __cplusplus
}
#endif

#endif
