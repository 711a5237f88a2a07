/* Compiled as C to keep the public header C-clean. */
#include <ramseylab/ramseylab.h>

#include <stdio.h>

int main(void)
{
    rl_hypergraph * h = NULL;
    size_t edges;
    int found = 0;
    char * witness = NULL;

    if (rl_hypergraph_complete(7, 3, &h) != RL_OK)
        return 1;
    edges = rl_hypergraph_edge_count(h);
    if (rl_find_loose_path(h, 3, &found, &witness) != RL_OK || ! found)
        return 2;
    rl_string_free(witness);
    rl_hypergraph_free(h);
    if (rl_hypergraph_complete(2, 3, &h) != RL_ERR_INVALID_PARAMETERS)
        return 3;
    printf("ramseylab %s: %zu edges\n", rl_version(), edges);
    return edges == 35 ? 0 : 4;
}
