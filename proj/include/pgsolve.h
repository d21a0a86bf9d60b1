#ifndef PGSOLVE_H
#define PGSOLVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PGS_API __declspec(dllexport)
#else
#define PGS_API __attribute__((visibility("default")))
#endif

typedef struct pgs_game pgs_game;
typedef struct pgs_result pgs_result;

typedef enum {
    PGS_OK = 0,
    PGS_ERR_PARSE = 1,
    PGS_ERR_IO = 2,
    PGS_ERR_ARGUMENT = 3,
    PGS_ERR_INVARIANT = 4,
    PGS_ERR_GUARD = 5,
    PGS_ERR_INTERNAL = 6
} pgs_status;

typedef enum { PGS_ALGO_BLACKBOX = 0, PGS_ALGO_COMPACT, PGS_ALGO_ZIELONKA, PGS_ALGO_NAIVE } pgs_algo;
typedef enum { PGS_DOMAIN_SPM = 0, PGS_DOMAIN_OPM } pgs_domain;
typedef enum { PGS_BACKEND_BITSET = 0, PGS_BACKEND_BDD } pgs_backend;

typedef enum { PGS_UNION = 0, PGS_INTERSECT, PGS_DIFFERENCE, PGS_SUBSETEQ, PGS_EQUALS } pgs_basic_op;

typedef struct {
    uint64_t pre_ops;
    uint64_t basic_ops;
    uint64_t basic[5];
    int64_t live_sets_now;
    int64_t live_sets_max;
} pgs_counters;

/* receives one JSON object per outer iteration, without trailing newline */
typedef void (*pgs_trace_fn)(const char *json_line, void *ctx);

typedef struct {
    pgs_algo algo;
    pgs_domain domain;
    pgs_backend backend;
    int assert_invariants;
    pgs_trace_fn trace;
    void *trace_ctx;
} pgs_solve_options;

/* message for the last failing call on this thread */
PGS_API const char *pgs_last_error(void);
PGS_API const char *pgs_version(void);

PGS_API pgs_status pgs_game_parse(const char *text, size_t len, pgs_game **out);
PGS_API pgs_status pgs_game_load(const char *path, pgs_game **out);
PGS_API pgs_status pgs_game_random(uint32_t n, uint32_t d, double edge_prob, uint64_t seed, pgs_game **out);
PGS_API void pgs_game_free(pgs_game *g);

PGS_API pgs_status pgs_game_write(const pgs_game *g, char **out_text);
PGS_API pgs_status pgs_game_save(const pgs_game *g, const char *path);
PGS_API void pgs_string_free(char *s);

PGS_API size_t pgs_game_vertices(const pgs_game *g);
PGS_API size_t pgs_game_edges(const pgs_game *g);
PGS_API uint32_t pgs_game_priorities(const pgs_game *g);
/* parse error position of the last PGS_ERR_PARSE, 0 when unknown */
PGS_API int pgs_last_error_line(void);
PGS_API int pgs_last_error_column(void);

PGS_API void pgs_solve_options_init(pgs_solve_options *opt);
PGS_API pgs_status pgs_solve(const pgs_game *g, const pgs_solve_options *opt, pgs_result **out);
PGS_API void pgs_result_free(pgs_result *r);

/* 0 = Even, 1 = Odd */
PGS_API int pgs_result_winner(const pgs_result *r, size_t v);
PGS_API size_t pgs_result_region_size(const pgs_result *r, int player);
PGS_API void pgs_result_counters(const pgs_result *r, pgs_counters *out);
PGS_API double pgs_result_w_size_estimate(const pgs_result *r);
PGS_API uint64_t pgs_result_iterations(const pgs_result *r);
/* whether the algorithm touched symbolic sets; oracle results carry zero counters */
PGS_API int pgs_result_has_counters(const pgs_result *r);

#ifdef __cplusplus
}
#endif

#endif
