/* C interface to the fmca library: freezing majority cellular automata on
 * the n x n torus, fast prediction for Toom-like rules and a monotone
 * circuit compiler.
 *
 * Every function returns an fmca_status. On failure the message is kept in
 * thread-local storage and returned by fmca_last_error(). Objects handed out
 * through an out-pointer are owned by the caller and released with the
 * matching *_free; strings with fmca_string_free.
 *
 * Coordinates: cell (i, j), i grows east, j grows north, both 0-based.
 */
#ifndef FMCA_FMCA_H_
#define FMCA_FMCA_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FMCA_BUILDING_LIBRARY)
#define FMCA_API __attribute__((visibility("default")))
#else
#define FMCA_API
#endif

typedef enum fmca_status {
  FMCA_OK = 0,
  FMCA_E_INVALID_ARGUMENT = 1,
  FMCA_E_PARSE = 2,
  FMCA_E_OFFSET_COLLISION = 3,
  FMCA_E_CELL_OUT_OF_RANGE = 4,
  FMCA_E_WRONG_NEIGHBORHOOD_ARITY = 5,
  FMCA_E_INSTANCE_TOO_LARGE = 6,
  FMCA_E_FAMILY_OUT_OF_RANGE = 7,
  FMCA_E_GADGET_CONSTRUCTION_FAILED = 8,
  FMCA_E_LAYOUT_OVERFLOW = 9,
  FMCA_E_IO = 10,
  FMCA_E_INTERNAL = 11
} fmca_status;

typedef enum fmca_method {
  FMCA_METHOD_AUTO = 0, /* graph when |S_N| = |S_E| = 1, else simulation */
  FMCA_METHOD_SIM = 1,
  FMCA_METHOD_GRAPH = 2,
  FMCA_METHOD_MATRIX = 3 /* small n only */
} fmca_method;

typedef struct fmca_grid fmca_grid;
typedef struct fmca_neighborhood fmca_neighborhood;
typedef struct fmca_circuit fmca_circuit;
typedef struct fmca_gadget_set fmca_gadget_set;
typedef struct fmca_instance fmca_instance;

FMCA_API const char* fmca_last_error(void);
FMCA_API const char* fmca_status_name(fmca_status status);
FMCA_API void fmca_string_free(char* s);

/* Grids. States are -1 and +1. */
FMCA_API fmca_status fmca_grid_new(int n, int fill, fmca_grid** out);
FMCA_API fmca_status fmca_grid_random(int n, uint64_t seed, double plus_density, fmca_grid** out);
/* Toom-oriented grid with long -1 chains, for benchmarks. */
FMCA_API fmca_status fmca_grid_long_chain(int n, uint64_t seed, fmca_grid** out);
FMCA_API fmca_status fmca_grid_parse(const char* text, fmca_grid** out);
FMCA_API fmca_status fmca_grid_read(const char* path, fmca_grid** out);
FMCA_API fmca_status fmca_grid_write(const fmca_grid* g, const char* path);
FMCA_API fmca_status fmca_grid_format(const fmca_grid* g, char** out_text);
FMCA_API fmca_status fmca_grid_copy(const fmca_grid* g, fmca_grid** out);
FMCA_API fmca_status fmca_grid_size(const fmca_grid* g, int* n);
FMCA_API fmca_status fmca_grid_get(const fmca_grid* g, int i, int j, int* state);
FMCA_API fmca_status fmca_grid_set(fmca_grid* g, int i, int j, int state);
FMCA_API fmca_status fmca_grid_count_plus(const fmca_grid* g, uint64_t* count);
FMCA_API fmca_status fmca_grid_equal(const fmca_grid* a, const fmca_grid* b, int* equal);
FMCA_API fmca_status fmca_grid_hash(const fmca_grid* g, uint64_t* hash);
FMCA_API void fmca_grid_free(fmca_grid* g);

/* L-neighborhood with north offsets S_N and east offsets S_E, all >= 1. */
FMCA_API fmca_status fmca_neighborhood_new(const int* north, size_t north_count, const int* east,
                                           size_t east_count, fmca_neighborhood** out);
/* Comma separated lists, e.g. "1,3" and "2". */
FMCA_API fmca_status fmca_neighborhood_parse(const char* north, const char* east,
                                             fmca_neighborhood** out);
FMCA_API fmca_status fmca_neighborhood_format(const fmca_neighborhood* nb, char** out_text);
FMCA_API void fmca_neighborhood_free(fmca_neighborhood* nb);

/* Dynamics. threads <= 0 means 1. */
FMCA_API fmca_status fmca_step(const fmca_grid* g, const fmca_neighborhood* nb, int threads,
                               fmca_grid** out);
FMCA_API fmca_status fmca_simulate(const fmca_grid* g, const fmca_neighborhood* nb, uint64_t steps,
                                   int threads, fmca_grid** out);
FMCA_API fmca_status fmca_run_to_fixed_point(const fmca_grid* g, const fmca_neighborhood* nb,
                                             int threads, fmca_grid** out, uint64_t* steps);

/* changed = 1 iff cell (i, j) is +1 at time t but -1 at time 0. */
FMCA_API fmca_status fmca_predict(const fmca_grid* g, const fmca_neighborhood* nb, int i, int j,
                                  uint64_t t, fmca_method method, int* changed);
/* times[j*n + i]: 0 if initially +1, -1 if never +1, else the flip step.
 * method is SIM or GRAPH (AUTO picks as in fmca_predict). */
FMCA_API fmca_status fmca_flip_schedule(const fmca_grid* g, const fmca_neighborhood* nb,
                                        fmca_method method, int threads, int64_t* times,
                                        size_t times_len);

/* Monotone circuits. */
FMCA_API fmca_status fmca_circuit_parse(const char* text, fmca_circuit** out);
FMCA_API fmca_status fmca_circuit_read(const char* path, fmca_circuit** out);
FMCA_API fmca_status fmca_circuit_random(int inputs, int gates, uint64_t seed, fmca_circuit** out);
FMCA_API fmca_status fmca_circuit_format(const fmca_circuit* c, char** out_text);
FMCA_API fmca_status fmca_circuit_evaluate(const fmca_circuit* c, int* value);
FMCA_API fmca_status fmca_circuit_size(const fmca_circuit* c, int* inputs, int* gates);
FMCA_API void fmca_circuit_free(fmca_circuit* c);

/* Gadget sets. family is "contiguous:k,k'", "periodic:p,p',s,s'" or
 * "sparse2:i,j,i',j'" (spaces also work as separators). */
/* Loads the tiles without running verification. */
FMCA_API fmca_status fmca_gadget_set_load(const char* family, fmca_gadget_set** out);
/* Loads and verifies; fails with FMCA_E_GADGET_CONSTRUCTION_FAILED if any
 * contract is violated. */
FMCA_API fmca_status fmca_gadget_set_build(const char* family, fmca_gadget_set** out);
FMCA_API fmca_status fmca_gadget_set_read(const char* path, fmca_gadget_set** out);
FMCA_API fmca_status fmca_gadget_set_format(const fmca_gadget_set* gs, char** out_text);
FMCA_API fmca_status fmca_gadget_set_verify(const fmca_gadget_set* gs, int* passed,
                                            char** report);
FMCA_API void fmca_gadget_set_free(fmca_gadget_set* gs);

/* Compilation. max_side <= 0 uses the default limit. */
FMCA_API fmca_status fmca_compile(const fmca_circuit* c, const char* family, int max_side,
                                  fmca_instance** out);
FMCA_API fmca_status fmca_instance_parse(const char* text, fmca_instance** out);
FMCA_API fmca_status fmca_instance_read(const char* path, fmca_instance** out);
FMCA_API fmca_status fmca_instance_write(const fmca_instance* inst, const char* path);
FMCA_API fmca_status fmca_instance_format(const fmca_instance* inst, char** out_text);
FMCA_API fmca_status fmca_instance_grid(const fmca_instance* inst, fmca_grid** out);
FMCA_API fmca_status fmca_instance_neighborhood(const fmca_instance* inst, fmca_neighborhood** out);
FMCA_API fmca_status fmca_instance_output_cell(const fmca_instance* inst, int* i, int* j);
FMCA_API fmca_status fmca_instance_time_bound(const fmca_instance* inst, uint64_t* t);
/* Runs to the fixed point; output is the final state of the output cell
 * (1 for +1, 0 for -1). */
FMCA_API fmca_status fmca_instance_run(const fmca_instance* inst, int threads, int* output);
FMCA_API void fmca_instance_free(fmca_instance* inst);

#ifdef __cplusplus
}
#endif

#endif /* FMCA_FMCA_H_ */
