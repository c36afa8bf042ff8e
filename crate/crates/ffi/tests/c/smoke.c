#include <stdio.h>
#include <string.h>

#include "zeckstep.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    ZeckTable *t = zeck_table_new();
    CHECK(t != NULL);

    uint32_t idx[48];
    size_t len = 0;
    CHECK(zeck_decompose(t, 100, idx, 48, &len) == ZECK_STATUS_OK);
    CHECK(len == 3 && idx[0] == 4 && idx[1] == 6 && idx[2] == 11);
    CHECK(zeck_decompose(t, 100, idx, 1, &len) == ZECK_STATUS_BUFFER_TOO_SMALL);
    CHECK(len == 3);

    uint64_t v = 0;
    CHECK(zeck_recompose(t, idx, 0, &v) == ZECK_STATUS_OK && v == 0);
    uint32_t bad[2] = {5, 6};
    CHECK(zeck_recompose(t, bad, 2, &v) == ZECK_STATUS_INVALID_REP);

    int32_t f = 0;
    CHECK(zeck_step(0, &f) == ZECK_STATUS_DOMAIN);
    CHECK(zeck_step(12, &f) == ZECK_STATUS_OK && f == -2);

    enum ZeckExtremum e;
    CHECK(zeck_classify_extremum(4, &e) == ZECK_STATUS_OK && e == ZECK_EXTREMUM_PEAK);

    ZeckReport *r = NULL;
    CHECK(zeck_verify(ZECK_CHECK_TABLE1, 1000000, &r) == ZECK_STATUS_OK);
    ZeckCounts c;
    CHECK(zeck_report_counts(r, &c) == ZECK_STATUS_OK);
    CHECK(c.up == 381966 && c.down == 236068 && c.flat == 381966);
    uint64_t total = 1;
    CHECK(zeck_report_mismatch_total(r, &total) == ZECK_STATUS_OK && total == 0);
    zeck_report_free(r);

    CHECK(strcmp(zeck_status_message(ZECK_STATUS_OK), "ok") == 0);
    zeck_table_free(t);
    zeck_table_free(NULL);
    puts("c smoke ok");
    return 0;
}
