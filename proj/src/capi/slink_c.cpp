/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/slink.h>

#include <slink/error.hpp>
#include <slink/io.hpp>
#include <slink/linkage.hpp>
#include <slink/mst.hpp>
#include <slink/neighbors.hpp>

#include <memory>
#include <new>
#include <string>

struct slink_context {
  slink::resources res;
  slink::tile_spec tile;
  std::string last_error;
};

struct slink_matrix {
  slink::point_matrix m;
};

struct slink_graph {
  slink::edge_list g;
  std::vector<int32_t> src, dst;
  std::vector<double> weights;

  explicit slink_graph(slink::edge_list list) : g(std::move(list))
  {
    for (const auto& e : g.edges) {
      src.push_back(e.src);
      dst.push_back(e.dst);
      weights.push_back(e.weight);
    }
  }
};

struct slink_knn_result {
  slink::knn_graph g;
};

struct slink_mst_result {
  slink::mst_result r;
  std::vector<int32_t> src, dst;
  std::vector<double> weights;
};

struct slink_linkage_result {
  slink::linkage_result r;
  std::vector<int32_t> children, sizes;
  std::vector<double> distances;
};

namespace {

slink::distance_metric to_metric(slink_metric m)
{
  switch (m) {
    case SLINK_METRIC_SQEUCLIDEAN: return slink::distance_metric::sqeuclidean;
    case SLINK_METRIC_EUCLIDEAN: return slink::distance_metric::euclidean;
  }
  throw slink::invalid_argument("unknown metric " + std::to_string(static_cast<int>(m)));
}

slink_status fail(slink_context* ctx, slink_status status, const char* what)
{
  ctx->last_error = what;
  return status;
}

/** Run f, translating exceptions to status codes and recording the message on ctx. */
template <typename F>
slink_status guarded(slink_context* ctx, F&& f)
{
  if (ctx == nullptr) return SLINK_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    f();
    return SLINK_OK;
  } catch (const slink::invalid_argument& e) {
    return fail(ctx, SLINK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const slink::ingestion_error& e) {
    return fail(ctx, SLINK_ERR_PARSE, e.what());
  } catch (const slink::io_error& e) {
    return fail(ctx, SLINK_ERR_IO, e.what());
  } catch (const slink::not_converged& e) {
    return fail(ctx, SLINK_ERR_NOT_CONVERGED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, SLINK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, SLINK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ctx, SLINK_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name)
{
  if (p == nullptr) throw slink::invalid_argument(std::string(name) + " must not be null");
}

}  // namespace

extern "C" {

const char* slink_version(void) { return "1.0.0"; }

const char* slink_status_string(slink_status status)
{
  switch (status) {
    case SLINK_OK: return "ok";
    case SLINK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SLINK_ERR_PARSE: return "parse error";
    case SLINK_ERR_IO: return "i/o error";
    case SLINK_ERR_NOT_CONVERGED: return "not converged";
    case SLINK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

slink_status slink_context_create(slink_context** out)
{
  if (out == nullptr) return SLINK_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) slink_context{};
  return *out ? SLINK_OK : SLINK_ERR_INTERNAL;
}

void slink_context_destroy(slink_context* ctx) { delete ctx; }

slink_status slink_context_set_threads(slink_context* ctx, int32_t n_threads)
{
  return guarded(ctx, [&] {
    if (n_threads < 0) throw slink::invalid_argument("thread count must be >= 0");
    ctx->res.n_threads = n_threads;
  });
}

int32_t slink_context_threads(const slink_context* ctx) { return ctx ? ctx->res.threads() : 0; }

slink_status slink_context_set_tile(slink_context* ctx, int32_t batch_m, int32_t batch_n)
{
  return guarded(ctx, [&] {
    if (batch_m < 1 || batch_n < 1) throw slink::invalid_argument("tile sizes must be >= 1");
    ctx->tile = {static_cast<std::size_t>(batch_m), static_cast<std::size_t>(batch_n)};
  });
}

const char* slink_context_last_error(const slink_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

/* ---- matrices ---- */

slink_status slink_matrix_create(slink_context* ctx, uint32_t rows, uint32_t cols, const float* data, slink_matrix** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    require(data, "data");
    std::vector<float> copy(data, data + static_cast<std::size_t>(rows) * cols);
    *out = new slink_matrix{slink::point_matrix(rows, cols, std::move(copy))};
  });
}

slink_status slink_matrix_read_csv(slink_context* ctx, const char* path, slink_matrix** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    require(path, "path");
    *out = new slink_matrix{slink::io::read_matrix_csv(path)};
  });
}

slink_status slink_matrix_read_binary(slink_context* ctx, const char* path, slink_matrix** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    require(path, "path");
    *out = new slink_matrix{slink::io::read_matrix_binary(path)};
  });
}

slink_status slink_matrix_read(slink_context* ctx, const char* path, slink_matrix** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    require(path, "path");
    *out = new slink_matrix{slink::io::read_matrix(path)};
  });
}

slink_status slink_matrix_write_csv(slink_context* ctx, const slink_matrix* m, const char* path)
{
  return guarded(ctx, [&] {
    require(m, "matrix");
    require(path, "path");
    slink::io::write_matrix_csv(path, m->m);
  });
}

slink_status slink_matrix_write_binary(slink_context* ctx, const slink_matrix* m, const char* path)
{
  return guarded(ctx, [&] {
    require(m, "matrix");
    require(path, "path");
    slink::io::write_matrix_binary(path, m->m);
  });
}

uint32_t slink_matrix_rows(const slink_matrix* m) { return m ? static_cast<uint32_t>(m->m.rows()) : 0; }
uint32_t slink_matrix_cols(const slink_matrix* m) { return m ? static_cast<uint32_t>(m->m.cols()) : 0; }
const float* slink_matrix_data(const slink_matrix* m) { return m ? m->m.data().data() : nullptr; }
void slink_matrix_destroy(slink_matrix* m) { delete m; }

/* ---- graphs ---- */

slink_status slink_graph_create(slink_context* ctx,
                                int32_t n_vertices,
                                size_t n_edges,
                                const int32_t* src,
                                const int32_t* dst,
                                const double* weights,
                                slink_graph** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    if (n_edges > 0) {
      require(src, "src");
      require(dst, "dst");
      require(weights, "weights");
    }
    slink::edge_list g;
    g.n_vertices = n_vertices;
    g.edges.reserve(n_edges);
    for (size_t i = 0; i < n_edges; ++i) g.edges.push_back({src[i], dst[i], weights[i]});
    g.validate();
    *out = new slink_graph(std::move(g));
  });
}

slink_status slink_graph_read_mtx(slink_context* ctx, const char* path, slink_graph** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    require(path, "path");
    *out = new slink_graph(slink::io::read_matrix_market(path));
  });
}

int32_t slink_graph_vertices(const slink_graph* g) { return g ? g->g.n_vertices : 0; }
size_t slink_graph_edges(const slink_graph* g) { return g ? g->g.edges.size() : 0; }
const int32_t* slink_graph_src(const slink_graph* g) { return g ? g->src.data() : nullptr; }
const int32_t* slink_graph_dst(const slink_graph* g) { return g ? g->dst.data() : nullptr; }
const double* slink_graph_weights(const slink_graph* g) { return g ? g->weights.data() : nullptr; }

slink_status slink_graph_write_csv(slink_context* ctx, const slink_graph* g, const char* path)
{
  return guarded(ctx, [&] {
    require(g, "graph");
    require(path, "path");
    slink::io::write_edges_csv(path, g->g);
  });
}

void slink_graph_destroy(slink_graph* g) { delete g; }

/* ---- neighbors ---- */

slink_status slink_knn(slink_context* ctx, const slink_matrix* x, int32_t k, slink_metric metric, slink_knn_result** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    require(x, "matrix");
    if (k < 1) throw slink::invalid_argument("k must be >= 1");
    auto g = slink::fused_knn(ctx->res, x->m, static_cast<std::size_t>(k), ctx->tile, to_metric(metric));
    *out = new slink_knn_result{std::move(g)};
  });
}

uint32_t slink_knn_rows(const slink_knn_result* r) { return r ? static_cast<uint32_t>(r->g.n_rows) : 0; }
int32_t slink_knn_k(const slink_knn_result* r) { return r ? static_cast<int32_t>(r->g.k) : 0; }
const int32_t* slink_knn_indices(const slink_knn_result* r) { return r ? r->g.indices.data() : nullptr; }
const double* slink_knn_distances(const slink_knn_result* r) { return r ? r->g.distances.data() : nullptr; }

slink_status slink_knn_write_csv(slink_context* ctx,
                                 const slink_knn_result* r,
                                 const char* indices_path,
                                 const char* distances_path)
{
  return guarded(ctx, [&] {
    require(r, "result");
    require(indices_path, "indices_path");
    require(distances_path, "distances_path");
    slink::io::write_knn_csv(indices_path, distances_path, r->g);
  });
}

void slink_knn_destroy(slink_knn_result* r) { delete r; }

slink_status slink_cross_color_1nn(slink_context* ctx,
                                   const slink_matrix* x,
                                   const int32_t* colors,
                                   slink_metric metric,
                                   slink_graph** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    require(x, "matrix");
    require(colors, "colors");
    slink::color_array c(colors, colors + x->m.rows());
    *out = new slink_graph(slink::cross_color_1nn(ctx->res, x->m, c, ctx->tile, to_metric(metric)));
  });
}

/* ---- spanning trees ---- */

slink_status slink_mst(slink_context* ctx, const slink_graph* g, int32_t maximize, uint64_t seed, slink_mst_result** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    require(g, "graph");
    slink::mst_options opts;
    opts.maximize = maximize != 0;
    opts.seed     = seed;
    auto result   = std::make_unique<slink_mst_result>();
    result->r     = slink::solve_mst(ctx->res, slink::edge_list_to_csr(g->g), opts);
    for (const auto& e : result->r.edges.edges) {
      result->src.push_back(e.src);
      result->dst.push_back(e.dst);
      result->weights.push_back(e.weight);
    }
    *out = result.release();
  });
}

size_t slink_mst_edges(const slink_mst_result* r) { return r ? r->src.size() : 0; }
const int32_t* slink_mst_src(const slink_mst_result* r) { return r ? r->src.data() : nullptr; }
const int32_t* slink_mst_dst(const slink_mst_result* r) { return r ? r->dst.data() : nullptr; }
const double* slink_mst_weights(const slink_mst_result* r) { return r ? r->weights.data() : nullptr; }
const int32_t* slink_mst_colors(const slink_mst_result* r) { return r ? r->r.colors.data() : nullptr; }
int32_t slink_mst_vertices(const slink_mst_result* r) { return r ? r->r.edges.n_vertices : 0; }
int32_t slink_mst_components(const slink_mst_result* r) { return r ? r->r.n_components : 0; }
int32_t slink_mst_iterations(const slink_mst_result* r) { return r ? r->r.iterations : 0; }
double slink_mst_total_weight(const slink_mst_result* r) { return r ? r->r.total_weight() : 0.0; }

slink_status slink_mst_write_csv(slink_context* ctx, const slink_mst_result* r, const char* path)
{
  return guarded(ctx, [&] {
    require(r, "result");
    require(path, "path");
    slink::io::write_edges_csv(path, r->r.edges);
  });
}

void slink_mst_destroy(slink_mst_result* r) { delete r; }

/* ---- single linkage ---- */

void slink_linkage_params_init(slink_linkage_params* p)
{
  if (p == nullptr) return;
  const slink::linkage_config defaults;
  p->n_clusters        = defaults.n_clusters;
  p->k                 = static_cast<int32_t>(defaults.k);
  p->metric            = SLINK_METRIC_SQEUCLIDEAN;
  p->seed              = defaults.seed;
  p->max_connect_iters = defaults.max_connect_iters;
  p->allow_large_k     = 0;
}

slink_status slink_single_linkage(slink_context* ctx,
                                  const slink_matrix* x,
                                  const slink_linkage_params* params,
                                  slink_linkage_result** out)
{
  return guarded(ctx, [&] {
    require(out, "out");
    require(x, "matrix");
    require(params, "params");
    if (params->k < 1) throw slink::invalid_argument("k must be >= 1");
    slink::linkage_config cfg;
    cfg.n_clusters        = params->n_clusters;
    cfg.k                 = static_cast<std::size_t>(params->k);
    cfg.metric            = to_metric(params->metric);
    cfg.seed              = params->seed;
    cfg.max_connect_iters = params->max_connect_iters;
    cfg.allow_large_k     = params->allow_large_k != 0;
    cfg.tile              = ctx->tile;

    auto result = std::make_unique<slink_linkage_result>();
    result->r   = slink::single_linkage(ctx->res, x->m, cfg);
    for (const auto& m : result->r.tree.merges) {
      result->children.push_back(m.child_a);
      result->children.push_back(m.child_b);
      result->distances.push_back(m.distance);
      result->sizes.push_back(m.size);
    }
    *out = result.release();
  });
}

uint32_t slink_linkage_points(const slink_linkage_result* r) { return r ? static_cast<uint32_t>(r->r.tree.n_points) : 0; }
const int32_t* slink_linkage_children(const slink_linkage_result* r) { return r ? r->children.data() : nullptr; }
const double* slink_linkage_distances(const slink_linkage_result* r) { return r ? r->distances.data() : nullptr; }
const int32_t* slink_linkage_sizes(const slink_linkage_result* r) { return r ? r->sizes.data() : nullptr; }
const int32_t* slink_linkage_labels(const slink_linkage_result* r) { return r ? r->r.labels.data() : nullptr; }

double slink_linkage_stage_ms(const slink_linkage_result* r, slink_stage stage)
{
  if (r == nullptr) return 0.0;
  const auto& t = r->r.timings;
  switch (stage) {
    case SLINK_STAGE_KNN: return t.knn_ms;
    case SLINK_STAGE_MST: return t.mst_ms;
    case SLINK_STAGE_CONNECT: return t.connect_ms;
    case SLINK_STAGE_DENDROGRAM: return t.dendrogram_ms;
    case SLINK_STAGE_EXTRACT: return t.extract_ms;
  }
  return 0.0;
}

int32_t slink_linkage_initial_components(const slink_linkage_result* r) { return r ? r->r.initial_components : 0; }
int32_t slink_linkage_connect_iterations(const slink_linkage_result* r) { return r ? r->r.connect_iterations : 0; }

slink_status slink_linkage_write_labels(slink_context* ctx, const slink_linkage_result* r, const char* path)
{
  return guarded(ctx, [&] {
    require(r, "result");
    require(path, "path");
    slink::io::write_labels_csv(path, r->r.labels);
  });
}

slink_status slink_linkage_write_dendrogram(slink_context* ctx, const slink_linkage_result* r, const char* path)
{
  return guarded(ctx, [&] {
    require(r, "result");
    require(path, "path");
    slink::io::write_dendrogram_csv(path, r->r.tree);
  });
}

void slink_linkage_destroy(slink_linkage_result* r) { delete r; }

}  // extern "C"
