#include <stdio.h>
#include <string.h>
#include "strongcover.h"

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "failed: %s (%s)\n", #cond, sc_last_error()); \
            return 1;                                                \
        }                                                            \
    } while (0)

int main(void) {
    ScColoring *k5 = NULL;
    CHECK(sc_construct_k5star(&k5) == SC_STATUS_OK);
    CHECK(sc_coloring_n(k5) == 5 && sc_coloring_t(k5) == 2);

    ScCover *cov = NULL;
    CHECK(sc_exact_max_cover(k5, 40, &cov) == SC_STATUS_OK);
    CHECK(sc_cover_covered(cov) == 4);
    sc_cover_free(cov);

    size_t order[2] = {1, 2};
    CHECK(sc_greedy_cover(k5, order, 2, &cov) == SC_STATUS_NOT_CHORDAL);
    CHECK(strstr(sc_last_error(), "not chordal") != NULL);

    size_t sizes[5] = {2, 2, 2, 2, 2};
    ScColoring *blown = NULL;
    CHECK(sc_blow_up(k5, sizes, 5, &blown) == SC_STATUS_OK);
    CHECK(sc_strong_cover_c4free22(blown, &cov) == SC_STATUS_OK);
    CHECK(sc_cover_covered(cov) == 8);
    char *json = NULL;
    CHECK(sc_cover_to_json(cov, &json) == SC_STATUS_OK);
    CHECK(strstr(json, "assignments") != NULL);
    sc_string_free(json);
    sc_cover_free(cov);
    sc_coloring_free(blown);
    sc_coloring_free(k5);

    ScColoring *parsed = NULL;
    CHECK(sc_coloring_from_json("{\"n\":3,\"t\":1,\"edges\":[[0,1,[1]]]}", &parsed) == SC_STATUS_OK);
    bool tk = true;
    CHECK(sc_is_tk(parsed, 2, &tk) == SC_STATUS_OK && !tk);
    sc_coloring_free(parsed);
    CHECK(sc_coloring_from_json("{", &parsed) == SC_STATUS_PARSE);

    printf("ok %s\n", sc_version());
    return 0;
}
