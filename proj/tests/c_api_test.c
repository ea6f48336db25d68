/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <string.h>

#include "equichar/equichar.h"

static int failures = 0;

#define EXPECT(cond)                                                      \
    do {                                                                  \
        if (!(cond)) {                                                    \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                   \
        }                                                                 \
    } while (0)

static const char* path(char* buf, size_t n, const char* rel) {
    snprintf(buf, n, "%s/%s", EQUICHAR_CORPUS_DIR, rel);
    return buf;
}

int main(void) {
    char buf[1024];
    eqc_complex* x = NULL;
    eqc_group* g = NULL;
    eqc_report* r = NULL;
    eqc_args args;

    EXPECT(strlen(eqc_version()) > 0);
    EXPECT(eqc_command_count() == 11);
    EXPECT(eqc_command_name(eqc_command_count()) == NULL);

    EXPECT(eqc_complex_load(path(buf, sizeof buf, "complexes/two_edges.json"), &x) == EQC_OK);
    EXPECT(eqc_complex_vertex_count(x) == 4);
    EXPECT(eqc_complex_dimension(x) == 1);
    EXPECT(eqc_complex_euler_characteristic(x) == 2);
    EXPECT(eqc_group_load(path(buf, sizeof buf, "groups/c2swap.json"), &g) == EQC_OK);
    {
        size_t order = 0;
        EXPECT(eqc_group_order(g, &order) == EQC_OK);
        EXPECT(order == 2);
    }

    eqc_args_init(&args);
    args.complex = x;
    args.group = g;
    EXPECT(eqc_run("euler-class", &args, &r) == EQC_OK);
    EXPECT(r != NULL);
    EXPECT(eqc_report_verdict(r) == EQC_OK);
    EXPECT(strncmp(eqc_report_text(r), "-1\xc2\xb7[\xce\x93/1]", 9) == 0);
    EXPECT(strstr(eqc_report_json(r), "\"schema\": \"equichar/1\"") != NULL);
    eqc_report_free(r);
    r = NULL;

    /* negative verdicts still produce a report */
    eqc_complex_free(x);
    x = NULL;
    EXPECT(eqc_complex_parse("{\"name\":\"T\",\"vertices\":[\"u\",\"a\",\"b\",\"c\",\"d\"],"
                             "\"maximal_simplices\":[[\"u\",\"a\",\"b\"],[\"u\",\"c\",\"d\"]]}",
                             &x) == EQC_OK);
    eqc_args_init(&args);
    args.complex = x;
    EXPECT(eqc_run("cm-check", &args, &r) == EQC_NEGATIVE);
    EXPECT(r != NULL && strstr(eqc_report_text(r), "{u}") != NULL);
    eqc_report_free(r);
    r = NULL;

    /* errors */
    eqc_complex_free(x);
    eqc_args_init(&args);
    EXPECT(eqc_complex_parse("{", &x) == EQC_INPUT_ERROR);
    EXPECT(x == NULL);
    EXPECT(strlen(eqc_last_error()) > 0);
    EXPECT(eqc_run("no-such-command", &args, &r) == EQC_INPUT_ERROR);
    EXPECT(r == NULL);
    EXPECT(eqc_run(NULL, &args, &r) == EQC_INPUT_ERROR);
    eqc_group_free(g);
    g = NULL;
    EXPECT(eqc_group_parse("{\"name\":\"s3\",\"generators\":[\"(1 2 3)\",\"(1 2)\"]}", &g) == EQC_OK);
    eqc_args_init(&args);
    args.group = g;
    EXPECT(eqc_run("weyl-check", &args, &r) == EQC_PRECONDITION_ERROR);
    EXPECT(r == NULL);

    eqc_args_init(&args);
    args.m = 1;
    args.q = 2;
    args.p = 4;
    EXPECT(eqc_run("jones-verify", &args, &r) == EQC_PRECONDITION_ERROR);
    args.p = 3;
    EXPECT(eqc_run("jones-verify", &args, &r) == EQC_OK);
    eqc_report_free(r);

    eqc_group_free(g);
    eqc_complex_free(x);
    eqc_complex_free(NULL);
    eqc_report_free(NULL);

    if (failures) fprintf(stderr, "%d C API check(s) failed\n", failures);
    else printf("C API checks passed\n");
    return failures ? 1 : 0;
}
