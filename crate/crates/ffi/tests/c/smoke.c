#include <stdio.h>
#include <string.h>
#include "enumgeo.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    EgSeries *eta = NULL;
    CHECK(eg_series_eta_quotient(-12, 5, &eta) == EG_STATUS_OK);
    const char *expected[] = {"1", "12", "90", "520", "2535", "10908"};
    for (int k = 0; k <= 5; k++) {
        char *c = NULL;
        CHECK(eg_series_coefficient(eta, k, &c) == EG_STATUS_OK);
        CHECK(strcmp(c, expected[k]) == 0);
        eg_string_free(c);
    }
    char *shift = NULL;
    CHECK(eg_series_shift(eta, &shift) == EG_STATUS_OK);
    CHECK(strcmp(shift, "-1/2") == 0);
    eg_string_free(shift);

    char *c = NULL;
    CHECK(eg_series_coefficient(eta, 6, &c) == EG_STATUS_SERIES_ERROR);
    char *msg = eg_last_error_message();
    CHECK(msg != NULL && strlen(msg) > 0);
    eg_string_free(msg);
    eg_series_free(eta);

    EgLattice *g = NULL;
    CHECK(eg_lattice_gamma19(&g) == EG_STATUS_OK);
    int64_t fb = 0;
    CHECK(eg_lattice_pair_str(g, "F", "B", &fb) == EG_STATUS_OK && fb == 1);
    size_t p = 0, q = 0;
    CHECK(eg_lattice_signature(g, &p, &q) == EG_STATUS_OK && p == 1 && q == 9);
    eg_lattice_free(g);

    size_t lines = 0;
    CHECK(eg_exceptional_count(6, 3, &lines) == EG_STATUS_OK && lines == 27);
    int64_t sw = 0;
    CHECK(eg_sw_p2(-3, -1, &sw) == EG_STATUS_OK && sw == -1);
    CHECK(eg_sw_p2(4, 1, &sw) == EG_STATUS_INVARIANT_ERROR);
    puts("ok");
    return 0;
}
