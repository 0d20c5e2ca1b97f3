/* Exercises the C ABI end to end: constructions, sg6 round trip, spectra,
 * forbidden-substructure counts, and the r(t) correspondence. */
#include "sgx.h"
#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                         \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            failures++;                                                     \
        }                                                                   \
    } while (0)

int main(void) {
    SgxGraph *gamma = NULL;
    CHECK(sgx_gamma(2, 5, &gamma) == SGX_STATUS_OK);
    CHECK(sgx_graph_order(gamma) == 5);
    CHECK(sgx_graph_size(gamma) == 9);
    CHECK(sgx_graph_negative_edges(gamma) == 1);

    char *line = sgx_graph_to_sg6(gamma);
    CHECK(line != NULL);
    SgxGraph *back = NULL;
    CHECK(sgx_graph_from_sg6(line, &back) == SGX_STATUS_OK);
    bool flag = false;
    CHECK(sgx_switching_equivalent(gamma, back, &flag) == SGX_STATUS_OK && flag);
    sgx_string_free(line);

    SgxGraph *k4neg = NULL;
    CHECK(sgx_complete_one_negative(4, &k4neg) == SGX_STATUS_OK);
    double index = 0.0;
    CHECK(sgx_graph_index(k4neg, &index) == SGX_STATUS_OK);
    CHECK(fabs(index - sqrt(5.0)) < 1e-9);
    double eigs[4];
    CHECK(sgx_graph_eigenvalues(k4neg, eigs, 4) == SGX_STATUS_OK);
    CHECK(fabs(eigs[3] + sqrt(5.0)) < 1e-9);
    CHECK(sgx_graph_eigenvalues(k4neg, eigs, 2) == SGX_STATUS_BUFFER_TOO_SMALL);

    uint64_t count = 0;
    CHECK(sgx_count_unbalanced_k4(k4neg, &count) == SGX_STATUS_OK && count == 1);
    CHECK(sgx_is_tk4_free(k4neg, 2, &flag) == SGX_STATUS_OK && flag);
    CHECK(sgx_is_tk4_free(k4neg, 1, &flag) == SGX_STATUS_OK && !flag);

    uint64_t r = 0;
    CHECK(sgx_r_of_t(7, &r) == SGX_STATUS_OK && r == 4);
    CHECK(sgx_r_of_t(3, &r) == SGX_STATUS_DOMAIN_ERROR);
    CHECK(sgx_t_of_r(4) == 7);

    double lam = 0.0;
    CHECK(sgx_lambda1_gamma(1, 9, &lam) == SGX_STATUS_OK && fabs(lam - 7.0) < 1e-12);

    CHECK(sgx_gamma(9, 5, &gamma) == SGX_STATUS_DOMAIN_ERROR);

    sgx_graph_free(gamma);
    sgx_graph_free(back);
    sgx_graph_free(k4neg);

    if (failures == 0) {
        puts("c smoke test ok");
        return 0;
    }
    return 1;
}
