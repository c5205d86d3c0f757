#include <stdio.h>
#include "trispec.h"

int main(void) {
    TsSpectrum *s = NULL;
    if (ts_catalog_spectrum("PR4(h=0,m=3)", &s) != TS_STATUS_OK) {
        char *msg = ts_last_error_message();
        fprintf(stderr, "%s\n", msg ? msg : "unknown error");
        ts_string_free(msg);
        return 1;
    }
    char *text = ts_spectrum_to_string(s);
    printf("%llu vertices: %s\n", (unsigned long long)ts_spectrum_size(s), text);
    for (size_t i = 0; i < ts_spectrum_entry_count(s); i++) {
        int64_t num, den;
        uint64_t mult;
        ts_spectrum_entry(s, i, &num, &den, &mult);
    }
    ts_string_free(text);

    TsGraph *g = NULL;
    bool ok = false;
    if (ts_graph_construct("PR4(h=0,m=3)", 2500, &g) == TS_STATUS_OK) {
        TsSpectrum *t = NULL;
        ts_graph_spectrum(g, 2500, &t);
        ok = ts_spectrum_equal(s, t);
        ts_spectrum_free(t);
        ts_graph_free(g);
    }
    ts_spectrum_free(s);
    return ok ? 0 : 1;
}
