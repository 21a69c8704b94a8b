/* Prints the weighing count and first move for a number of coins. */
#include <stdio.h>
#include <stdlib.h>

#include "riddle_forge.h"

int main(int argc, char **argv) {
    uint64_t n = argc > 1 ? strtoull(argv[1], NULL, 10) : 13;
    uint32_t weighings = 0;
    RfStrategy *tree = NULL;
    char *text = NULL;

    if (rf_weighing_formula(n, &weighings) != RF_STATUS_OK) {
        char *msg = rf_last_error_message();
        fprintf(stderr, "error: %s\n", msg);
        rf_string_free(msg);
        return 1;
    }
    printf("%llu objects: %u weighings\n", (unsigned long long)n, weighings);

    if (rf_strategy_new(n, &tree) == RF_STATUS_OK && rf_strategy_to_text(tree, &text) == RF_STATUS_OK) {
        fputs(text, stdout);
        rf_string_free(text);
    }
    rf_strategy_free(tree);
    return 0;
}
