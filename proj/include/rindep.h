/* C interface to the rindep solver library.
 *
 * All functions returning int yield an RINDEP_* status code; on failure the
 * thread-local message from rindep_error_message() explains what went wrong.
 * Objects created through this interface are released with the matching
 * *_free function. Strings returned as char* are owned by the caller and
 * released with rindep_string_free.
 */
#ifndef RINDEP_H
#define RINDEP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RINDEP_OK 0
#define RINDEP_ERR_ARGUMENT 1 /* invalid parameters or ids */
#define RINDEP_ERR_PARSE 2    /* malformed textual input */
#define RINDEP_ERR_INTERNAL 3 /* invariant or promise violation: a bug */
#define RINDEP_ERR_BUDGET 4   /* exhaustive oracle budget exceeded */

typedef struct rindep_graph_s rindep_graph;
typedef struct rindep_result_s rindep_result;

/* Result kinds, returned by rindep_result_kind. */
#define RINDEP_RESULT_NO_SOLUTION 0
#define RINDEP_RESULT_INDEPENDENT 1
#define RINDEP_RESULT_IS_WITNESS 2
#define RINDEP_RESULT_UNCAPTURED 3
#define RINDEP_RESULT_COWITNESS 4

const char* rindep_error_message(void);

/* --- graphs ------------------------------------------------------------ */

/* Edge-list text: "u v" per line, '#' comments, arbitrary labels. */
int rindep_graph_parse(const char* text, rindep_graph** out);

/* Family spec, e.g. "cycle:6", "rbd:n=30,d=3,seed=7", "subdiv:clique:5:r=1".
 * Families with an optional seed fall back to default_seed. */
int rindep_graph_generate(const char* spec, uint64_t default_seed, rindep_graph** out);

void rindep_graph_free(rindep_graph* g);

int rindep_graph_order(const rindep_graph* g); /* vertex count */
int rindep_graph_size(const rindep_graph* g);  /* edge count */

/* Warnings accumulated while parsing (0 for generated graphs). */
int rindep_graph_duplicate_warnings(const rindep_graph* g);
int rindep_graph_loop_warnings(const rindep_graph* g);

/* Input label of a vertex; NULL when v is out of range. The pointer stays
 * valid for the lifetime of the graph. */
const char* rindep_graph_label(const rindep_graph* g, int v);

/* Dense id for an input label; -1 when absent. */
int rindep_graph_vertex_by_label(const rindep_graph* g, const char* label);

/* Edge-list serialization using the graph's labels. */
char* rindep_graph_edge_list(const rindep_graph* g);

/* --- solving ------------------------------------------------------------ */

/* algorithm: "ladder" | "direct" | "brute"
 * strategy:  "bfs-center" | "max-degree" | "connector-echo"
 * verify:    "none" | "fast" | "oracle"
 * input_name is echoed into the result record. */
int rindep_solve(const rindep_graph* g, int r, int k, const char* algorithm,
                 const char* strategy, uint64_t seed, const char* verify,
                 const char* input_name, rindep_result** out);

/* Checks whether the given vertex set is a witness for (r, k). */
int rindep_witness_check(const rindep_graph* g, const int* q, int q_len, int r, int k,
                         const char* input_name, rindep_result** out);

/* Builds a cowitness certificate for the whole vertex set. */
int rindep_cowitness(const rindep_graph* g, int r, int k, const char* strategy,
                     const char* input_name, rindep_result** out);

/* --- results ------------------------------------------------------------ */

int rindep_result_kind(const rindep_result* res);
int rindep_result_set_len(const rindep_result* res);
int rindep_result_set_get(const rindep_result* res, int index); /* -1 if oob */
double rindep_result_wall_ms(const rindep_result* res);

/* format: "json" | "plain". */
char* rindep_result_render(const rindep_result* res, const char* format);

void rindep_result_free(rindep_result* res);
void rindep_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RINDEP_H */
