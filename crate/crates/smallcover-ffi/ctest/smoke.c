/* Exercises the C ABI end to end: constructors, JSON round trip, the
 * classification report, homology, existence, and the word engine. */
#include <assert.h>
#include <stdio.h>
#include <string.h>

#include "smallcover.h"

static void check(int32_t status, const char *what) {
    if (status != SC_OK) {
        char *msg = sc_last_error_message();
        fprintf(stderr, "%s failed (%d): %s\n", what, status, msg);
        sc_string_free(msg);
        assert(0);
    }
}

int main(void) {
    ScPolytope *cube = NULL;
    check(sc_polytope_cube(3, &cube), "cube(3)");
    assert(sc_polytope_dim(cube) == 3);
    assert(sc_polytope_num_facets(cube) == 6);
    assert(sc_polytope_num_vertices(cube) == 8);

    char *json = NULL;
    check(sc_polytope_to_json(cube, &json), "to_json");
    ScPolytope *again = NULL;
    check(sc_polytope_from_json(json, &again), "from_json");
    assert(sc_polytope_num_facets(again) == 6);
    sc_string_free(json);

    /* the torus report: flag, cube, real Bott */
    char *report = NULL;
    check(sc_classify_json(cube, NULL, true, 0, &report), "classify");
    assert(strstr(report, "\"is_cube\": true"));
    assert(strstr(report, "\"is_torus\": true"));
    assert(strstr(report, "\"aspherical\": true"));
    sc_string_free(report);

    /* moment-angle homology of the square: the 2-torus */
    ScPolytope *square = NULL;
    check(sc_polytope_polygon(4, &square), "polygon(4)");
    char *betti = NULL;
    check(sc_betti_json(square, NULL, 0, &betti), "betti");
    assert(strcmp(betti, "{\"b\":[1,2,1],\"euler\":0}") == 0);
    sc_string_free(betti);

    /* no small cover over the dual of the cyclic polytope on 16 points */
    ScPolytope *dual = NULL;
    check(sc_polytope_dual_cyclic(16, 4, &dual), "dual_cyclic(16,4)");
    char *exists = NULL;
    check(sc_exists_small_cover_json(dual, &exists), "exists");
    assert(strstr(exists, "\"exists\":false"));
    assert(strstr(exists, "pigeonhole"));
    sc_string_free(exists);

    /* involution squares cancel */
    char *reduced = NULL;
    check(sc_word_reduce_json(cube, "[0,0,1,1]", &reduced), "reduce");
    assert(strcmp(reduced, "[]") == 0);
    sc_string_free(reduced);

    bool member = false;
    check(sc_word_member(cube, "[0,1,0,1]", NULL, &member), "member");
    assert(member);

    bool consistent = false;
    check(sc_real_bott_audit(cube, 0, &consistent), "audit");
    assert(consistent);

    /* error path: malformed JSON reports bad input, not success */
    ScPolytope *broken = NULL;
    assert(sc_polytope_from_json("not json", &broken) == SC_ERR_BAD_INPUT);
    char *msg = sc_last_error_message();
    assert(strlen(msg) > 0);
    sc_string_free(msg);

    sc_polytope_free(cube);
    sc_polytope_free(again);
    sc_polytope_free(square);
    sc_polytope_free(dual);
    sc_polytope_free(NULL);

    printf("ffi smoke test ok\n");
    return 0;
}
