/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface of libslink.
 *
 * Every object is an opaque handle created by a *_create / *_read / solver
 * call and released with the matching *_destroy. Functions that can fail
 * return an slink_status; on failure the message is available from
 * slink_context_last_error() until the next call on the same context.
 * Array accessors return pointers owned by the handle, valid until it is
 * destroyed.
 */

#ifndef SLINK_SLINK_H
#define SLINK_SLINK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SLINK_BUILDING_LIBRARY)
#    define SLINK_API __declspec(dllexport)
#  else
#    define SLINK_API __declspec(dllimport)
#  endif
#else
#  define SLINK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slink_status {
  SLINK_OK                    = 0,
  SLINK_ERR_INVALID_ARGUMENT  = 1, /* parameter out of range, precondition violated */
  SLINK_ERR_PARSE             = 2, /* malformed input data */
  SLINK_ERR_IO                = 3, /* file could not be read or written */
  SLINK_ERR_NOT_CONVERGED     = 4, /* reconnection loop exceeded its cap */
  SLINK_ERR_INTERNAL          = 5  /* invariant failure or allocation failure */
} slink_status;

typedef enum slink_metric {
  SLINK_METRIC_SQEUCLIDEAN = 0,
  SLINK_METRIC_EUCLIDEAN   = 1
} slink_metric;

typedef enum slink_stage {
  SLINK_STAGE_KNN        = 0,
  SLINK_STAGE_MST        = 1,
  SLINK_STAGE_CONNECT    = 2,
  SLINK_STAGE_DENDROGRAM = 3,
  SLINK_STAGE_EXTRACT    = 4
} slink_stage;

typedef struct slink_context slink_context;
typedef struct slink_matrix slink_matrix;
typedef struct slink_graph slink_graph;
typedef struct slink_knn_result slink_knn_result;
typedef struct slink_mst_result slink_mst_result;
typedef struct slink_linkage_result slink_linkage_result;

typedef struct slink_linkage_params {
  int32_t n_clusters;
  int32_t k;                 /* connectivity neighbors, default 15 */
  slink_metric metric;       /* default SLINK_METRIC_SQEUCLIDEAN */
  uint64_t seed;             /* weight alteration seed */
  int32_t max_connect_iters; /* 0: ceil(log2 N) + 8 */
  int32_t allow_large_k;     /* nonzero permits k > 64 */
} slink_linkage_params;

SLINK_API const char* slink_version(void);
SLINK_API const char* slink_status_string(slink_status status);

/* ---- context ---------------------------------------------------------- */

SLINK_API slink_status slink_context_create(slink_context** out);
SLINK_API void slink_context_destroy(slink_context* ctx);
/* Worker-count ceiling for parallel stages; 0 restores the runtime default. */
SLINK_API slink_status slink_context_set_threads(slink_context* ctx, int32_t n_threads);
SLINK_API int32_t slink_context_threads(const slink_context* ctx);
/* Query/index tile rows used by the neighbor kernels. */
SLINK_API slink_status slink_context_set_tile(slink_context* ctx, int32_t batch_m, int32_t batch_n);
SLINK_API const char* slink_context_last_error(const slink_context* ctx);

/* ---- point matrices --------------------------------------------------- */

SLINK_API slink_status slink_matrix_create(slink_context* ctx, uint32_t rows, uint32_t cols,
                                           const float* data, slink_matrix** out);
/* Header-free numeric CSV. */
SLINK_API slink_status slink_matrix_read_csv(slink_context* ctx, const char* path, slink_matrix** out);
/* "SLNK", u32 version (1), u32 rows, u32 cols, little-endian f32 row-major payload. */
SLINK_API slink_status slink_matrix_read_binary(slink_context* ctx, const char* path, slink_matrix** out);
/* Binary if the file starts with the SLNK magic, CSV otherwise. */
SLINK_API slink_status slink_matrix_read(slink_context* ctx, const char* path, slink_matrix** out);
SLINK_API slink_status slink_matrix_write_csv(slink_context* ctx, const slink_matrix* m, const char* path);
SLINK_API slink_status slink_matrix_write_binary(slink_context* ctx, const slink_matrix* m, const char* path);
SLINK_API uint32_t slink_matrix_rows(const slink_matrix* m);
SLINK_API uint32_t slink_matrix_cols(const slink_matrix* m);
SLINK_API const float* slink_matrix_data(const slink_matrix* m);
SLINK_API void slink_matrix_destroy(slink_matrix* m);

/* ---- weighted graphs (edge lists) -------------------------------------- */

SLINK_API slink_status slink_graph_create(slink_context* ctx, int32_t n_vertices, size_t n_edges,
                                          const int32_t* src, const int32_t* dst, const double* weights,
                                          slink_graph** out);
/* Matrix Market coordinate file; general inputs are symmetrized by the min-weight rule at solve time. */
SLINK_API slink_status slink_graph_read_mtx(slink_context* ctx, const char* path, slink_graph** out);
SLINK_API int32_t slink_graph_vertices(const slink_graph* g);
SLINK_API size_t slink_graph_edges(const slink_graph* g);
SLINK_API const int32_t* slink_graph_src(const slink_graph* g);
SLINK_API const int32_t* slink_graph_dst(const slink_graph* g);
SLINK_API const double* slink_graph_weights(const slink_graph* g);
SLINK_API slink_status slink_graph_write_csv(slink_context* ctx, const slink_graph* g, const char* path);
SLINK_API void slink_graph_destroy(slink_graph* g);

/* ---- nearest neighbors ------------------------------------------------ */

SLINK_API slink_status slink_knn(slink_context* ctx, const slink_matrix* x, int32_t k, slink_metric metric,
                                 slink_knn_result** out);
SLINK_API uint32_t slink_knn_rows(const slink_knn_result* r);
SLINK_API int32_t slink_knn_k(const slink_knn_result* r);
SLINK_API const int32_t* slink_knn_indices(const slink_knn_result* r);  /* rows x k */
SLINK_API const double* slink_knn_distances(const slink_knn_result* r); /* rows x k, ascending */
SLINK_API slink_status slink_knn_write_csv(slink_context* ctx, const slink_knn_result* r,
                                           const char* indices_path, const char* distances_path);
SLINK_API void slink_knn_destroy(slink_knn_result* r);

/* For each point, an edge to its nearest point of a different color. */
SLINK_API slink_status slink_cross_color_1nn(slink_context* ctx, const slink_matrix* x, const int32_t* colors,
                                             slink_metric metric, slink_graph** out);

/* ---- spanning trees --------------------------------------------------- */

SLINK_API slink_status slink_mst(slink_context* ctx, const slink_graph* g, int32_t maximize, uint64_t seed,
                                 slink_mst_result** out);
SLINK_API size_t slink_mst_edges(const slink_mst_result* r);
SLINK_API const int32_t* slink_mst_src(const slink_mst_result* r);
SLINK_API const int32_t* slink_mst_dst(const slink_mst_result* r);
SLINK_API const double* slink_mst_weights(const slink_mst_result* r); /* original weights */
SLINK_API const int32_t* slink_mst_colors(const slink_mst_result* r);
SLINK_API int32_t slink_mst_vertices(const slink_mst_result* r);
SLINK_API int32_t slink_mst_components(const slink_mst_result* r);
SLINK_API int32_t slink_mst_iterations(const slink_mst_result* r);
SLINK_API double slink_mst_total_weight(const slink_mst_result* r);
/* src,dst,weight per line. */
SLINK_API slink_status slink_mst_write_csv(slink_context* ctx, const slink_mst_result* r, const char* path);
SLINK_API void slink_mst_destroy(slink_mst_result* r);

/* ---- single-linkage clustering ---------------------------------------- */

SLINK_API void slink_linkage_params_init(slink_linkage_params* p);
SLINK_API slink_status slink_single_linkage(slink_context* ctx, const slink_matrix* x,
                                            const slink_linkage_params* params, slink_linkage_result** out);
SLINK_API uint32_t slink_linkage_points(const slink_linkage_result* r);
/* (N-1) x 2 child ids; merge i creates node i + N. */
SLINK_API const int32_t* slink_linkage_children(const slink_linkage_result* r);
SLINK_API const double* slink_linkage_distances(const slink_linkage_result* r);
SLINK_API const int32_t* slink_linkage_sizes(const slink_linkage_result* r);
SLINK_API const int32_t* slink_linkage_labels(const slink_linkage_result* r);
SLINK_API double slink_linkage_stage_ms(const slink_linkage_result* r, slink_stage stage);
SLINK_API int32_t slink_linkage_initial_components(const slink_linkage_result* r);
SLINK_API int32_t slink_linkage_connect_iterations(const slink_linkage_result* r);
/* One label per line. */
SLINK_API slink_status slink_linkage_write_labels(slink_context* ctx, const slink_linkage_result* r, const char* path);
/* child_a,child_b,distance,size per line. */
SLINK_API slink_status slink_linkage_write_dendrogram(slink_context* ctx, const slink_linkage_result* r,
                                                     const char* path);
SLINK_API void slink_linkage_destroy(slink_linkage_result* r);

#ifdef __cplusplus
}
#endif

#endif /* SLINK_SLINK_H */
