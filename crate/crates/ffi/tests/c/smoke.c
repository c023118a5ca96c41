#include <stdio.h>
#include "zfw.h"

int main(void) {
    ZfwGraph *g = NULL;
    if (zfw_graph_from_graph6("IheA@GUAo", &g) != ZFW_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", zfw_last_error_message());
        return 1;
    }
    size_t z = 0, alpha = 0;
    uint64_t zw = 0, aw = 0;
    if (zfw_zero_forcing_number(g, 0.0, &z, &zw) != ZFW_STATUS_OK) return 1;
    if (zfw_independence_number(g, 0.0, &alpha, &aw) != ZFW_STATUS_OK) return 1;
    bool forces = false;
    if (zfw_is_zero_forcing_set(g, zw, &forces) != ZFW_STATUS_OK || !forces) return 1;
    char *text = NULL;
    if (zfw_graph_to_graph6(g, &text) != ZFW_STATUS_OK) return 1;
    printf("%s z=%zu alpha=%zu\n", text, z, alpha);
    zfw_string_free(text);
    zfw_graph_free(g);
    ZfwStatus bad = zfw_graph_from_graph6("", &g);
    printf("empty=%d\n", (int)bad);
    return 0;
}
